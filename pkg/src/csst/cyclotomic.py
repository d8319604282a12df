"""Exact arithmetic in Z[zeta_{2^L}] with dyadic denominators.

A value is (sum_i coeffs[i] * zeta^i) / 2^shift with zeta = exp(2*pi*i/2^L)
and 0 <= i < 2^(L-1), using zeta^(2^(L-1)) = -1.  Everything the
trigonometric gate coefficients need — powers of 2, (1 +/- i), 2*cos at
power-of-two roots of unity — has a 2-power field norm, so inverses stay
inside this ring and equality is exact integer comparison.

Values at different levels compare equal when they embed to the same
element (zeta_{2^L} = zeta_{2^{L'}}^{2^{L'-L}}).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence


class DegenerateLevel(Exception):
    """sec/tan constants do not exist at this rotation level."""


class CycScalar:
    __slots__ = ("level", "coeffs", "shift")

    def __init__(self, level: int, coeffs: Sequence[int], shift: int = 0):
        if level < 2:
            raise ValueError("level must be >= 2")
        m = 1 << (level - 1)
        if len(coeffs) != m:
            raise ValueError(f"need {m} coefficients at level {level}")
        coeffs = list(coeffs)
        # canonical dyadic form: shift >= 0 and, unless zero, some odd coeff
        while shift < 0:
            coeffs = [c * 2 for c in coeffs]
            shift += 1
        if any(coeffs):
            while shift > 0 and all(c % 2 == 0 for c in coeffs):
                coeffs = [c // 2 for c in coeffs]
                shift -= 1
        else:
            shift = 0
        self.level = level
        self.coeffs = tuple(coeffs)
        self.shift = shift

    # --- constructors ---

    @classmethod
    def zero(cls, level: int = 2) -> "CycScalar":
        return cls(level, [0] * (1 << (level - 1)))

    @classmethod
    def from_int(cls, v: int, level: int = 2) -> "CycScalar":
        c = [0] * (1 << (level - 1))
        c[0] = v
        return cls(level, c)

    @classmethod
    def one(cls, level: int = 2) -> "CycScalar":
        return cls.from_int(1, level)

    @classmethod
    def zeta_pow(cls, level: int, e: int) -> "CycScalar":
        """zeta_{2^level}^e."""
        m = 1 << (level - 1)
        e %= 2 * m
        c = [0] * m
        if e < m:
            c[e] = 1
        else:
            c[e - m] = -1
        return cls(level, c)

    @classmethod
    def i_unit(cls, level: int = 2) -> "CycScalar":
        return cls.zeta_pow(level, 1 << (level - 2))

    @classmethod
    def sqrt2(cls, level: int = 3) -> "CycScalar":
        if level < 3:
            raise ValueError("sqrt(2) needs level >= 3")
        e = 1 << (level - 3)
        return cls.zeta_pow(level, e) + cls.zeta_pow(level, -e)

    # --- level handling ---

    def embed(self, level: int) -> "CycScalar":
        if level < self.level:
            raise ValueError("cannot embed into a smaller field")
        if level == self.level:
            return self
        f = 1 << (level - self.level)
        c = [0] * (1 << (level - 1))
        for i, v in enumerate(self.coeffs):
            c[i * f] = v
        return CycScalar(level, c, self.shift)

    def _key(self) -> tuple:
        """Canonical (minimal-level) identity used by eq/hash."""
        lv, coeffs = self.level, self.coeffs
        while lv > 2 and all(v == 0 for i, v in enumerate(coeffs) if i % 2):
            coeffs = coeffs[::2]
            lv -= 1
        return (lv, coeffs, self.shift)

    # --- ring operations ---

    def _pair(self, other: "CycScalar") -> tuple["CycScalar", "CycScalar"]:
        lv = max(self.level, other.level)
        return self.embed(lv), other.embed(lv)

    def __add__(self, other: "CycScalar") -> "CycScalar":
        a, b = self._pair(other)
        s = max(a.shift, b.shift)
        fa, fb = 1 << (s - a.shift), 1 << (s - b.shift)
        return CycScalar(
            a.level, [x * fa + y * fb for x, y in zip(a.coeffs, b.coeffs)], s
        )

    def __neg__(self) -> "CycScalar":
        return CycScalar(self.level, [-v for v in self.coeffs], self.shift)

    def __sub__(self, other: "CycScalar") -> "CycScalar":
        return self + (-other)

    def __mul__(self, other: "CycScalar") -> "CycScalar":
        a, b = self._pair(other)
        m = 1 << (a.level - 1)
        out = [0] * m
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y == 0:
                    continue
                k = i + j
                if k < m:
                    out[k] += x * y
                else:
                    out[k - m] -= x * y
        return CycScalar(a.level, out, a.shift + b.shift)

    def times_2exp(self, k: int) -> "CycScalar":
        """Multiply by 2^k (k of either sign)."""
        return CycScalar(self.level, self.coeffs, self.shift - k)

    def __pow__(self, p: int) -> "CycScalar":
        if p < 0:
            return self.inverse() ** (-p)
        out = CycScalar.one(self.level)
        base = self
        while p:
            if p & 1:
                out = out * base
            base = base * base
            p >>= 1
        return out

    def conjugate(self) -> "CycScalar":
        return self.galois(-1)

    def galois(self, t: int) -> "CycScalar":
        """Apply zeta -> zeta^t for odd t."""
        m = 1 << (self.level - 1)
        if t % 2 == 0:
            raise ValueError("Galois exponent must be odd")
        t %= 2 * m
        out = [0] * m
        for i, v in enumerate(self.coeffs):
            if v == 0:
                continue
            e = (i * t) % (2 * m)
            if e < m:
                out[e] += v
            else:
                out[e - m] -= v
        return CycScalar(self.level, out, self.shift)

    def inverse(self) -> "CycScalar":
        """Exact inverse; exists iff the field norm is +/- a power of two."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        m = 1 << (self.level - 1)
        prod = CycScalar.one(self.level)
        for t in range(3, 2 * m, 2):
            prod = prod * self.galois(t)
        norm = self * prod
        r = norm.rational()
        if r is None:
            raise ArithmeticError("field norm is not rational (internal error)")
        num, sh = r
        mag = abs(num)
        if mag & (mag - 1):
            raise ArithmeticError("norm is not a power of two; not invertible here")
        inv = prod.times_2exp(sh - mag.bit_length() + 1)
        return -inv if num < 0 else inv

    # --- predicates / views ---

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def rational(self) -> Optional[tuple[int, int]]:
        """(numerator, dyadic exponent) if the value is rational, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0], self.shift

    def abs_squared(self) -> "CycScalar":
        return self * self.conjugate()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycScalar.from_int(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"CycScalar(level={self.level}, coeffs={self.coeffs}, /2^{self.shift})"

    def complex_value(self) -> complex:
        """Float approximation, for diagnostics only."""
        import cmath

        m = 1 << (self.level - 1)
        z = sum(
            v * cmath.exp(2j * cmath.pi * i / (2 * m))
            for i, v in enumerate(self.coeffs)
        )
        return z / (1 << self.shift)


@lru_cache(maxsize=None)
def cos_const(level: int) -> CycScalar:
    """cos(2*pi / 2^level) for level >= 3."""
    if level < 3:
        raise DegenerateLevel("cos(pi/2) = 0 has no inverse; use the Clifford path")
    xi = CycScalar.zeta_pow(level, 1)
    return (xi + xi.conjugate()).times_2exp(-1)


@lru_cache(maxsize=None)
def sec_const(level: int) -> CycScalar:
    """sec(2*pi / 2^level) for level >= 3."""
    return cos_const(level).inverse()


@lru_cache(maxsize=None)
def tan_const(level: int) -> CycScalar:
    """tan(2*pi / 2^level) for level >= 3."""
    if level < 3:
        raise DegenerateLevel("tan(pi/2) diverges; use the Clifford path")
    xi = CycScalar.zeta_pow(level, 1)
    num = xi - xi.conjugate()
    den = CycScalar.i_unit(level) * (xi + xi.conjugate())
    return num * den.inverse()


@lru_cache(maxsize=None)
def inv_sqrt2_pow(p: int, level: int = 3) -> CycScalar:
    """(1/sqrt(2))^p, exact at the given level (>= 3)."""
    return (CycScalar.sqrt2(level) ** p).times_2exp(-p)
