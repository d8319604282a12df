"""Symbolic conjugation of Paulis and code projectors by diagonal gates.

Conjugating a Hermitian Pauli by a transversal diagonal gate produces a
finite sum of Paulis that all share the X-part of the input; the exact
coefficients live in the dyadic cyclotomic ring.  Three closed forms are
implemented (transversal T, mixed T/T-dagger patterns and their Z_8
generalization, pi/2^l Z-rotations), plus the quadratic-form route for a
general symmetric matrix R over Z_{2^l}, and a dense Walsh-trace oracle
that derives the same expansion straight from the gate's diagonal —
independent of any of the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional, Union

import numpy as np

from .cyclotomic import CycScalar, cos_const, inv_sqrt2_pow, tan_const
from .gf2 import EnumerationCapExceeded, DEFAULT_MAX_ENUM, parity
from .pauli import PauliOp

if TYPE_CHECKING:  # pragma: no cover
    from .codes import StabilizerCode


# --- gate specifications ---


@dataclass(frozen=True)
class TPattern:
    """T^t_i on qubit i, exponents t_i in Z_8 (1 = T, 7 = T-dagger, 2 = S...)."""

    t: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(not 0 <= v <= 7 for v in self.t):
            raise ValueError("pattern entries must lie in 0..7")

    @classmethod
    def transversal_t(cls, n: int) -> "TPattern":
        return cls((1,) * n)

    @classmethod
    def from_t1_t7(cls, t1: int, t7: int, n: int) -> "TPattern":
        if t1 & t7:
            raise ValueError("T and T-dagger supports overlap")
        return cls(tuple(
            1 if (t1 >> i) & 1 else 7 if (t7 >> i) & 1 else 0 for i in range(n)
        ))


@dataclass(frozen=True)
class ZRotation:
    """Transversal diag(1, exp(2*pi*i/2^level)) on every qubit."""

    level: int

    def __post_init__(self) -> None:
        if self.level < 2:
            raise ValueError("rotation level must be >= 2")


@dataclass(frozen=True)
class QfdGate:
    """Diagonal gate with phase function v R v^T at level l, R symmetric."""

    r: tuple[tuple[int, ...], ...]
    level: int

    def __post_init__(self) -> None:
        n = len(self.r)
        mod = 1 << self.level
        for i in range(n):
            if len(self.r[i]) != n:
                raise ValueError("R must be square")
            for j in range(n):
                if self.r[i][j] % mod != self.r[j][i] % mod:
                    raise ValueError("R must be symmetric")

    @property
    def n(self) -> int:
        return len(self.r)


GateSpec = Union[TPattern, ZRotation, QfdGate]


# --- diagonal Pauli sums ---


class DiagonalPauliSum:
    """Finite sum  sum_{(a,b)} c_{a,b} E(a,b)  with exact coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[dict[tuple[int, int], CycScalar]] = None):
        self.n = n
        self.terms: dict[tuple[int, int], CycScalar] = {}
        if terms:
            for k, c in terms.items():
                self.add(k, c)

    def add(self, key: tuple[int, int], coeff: CycScalar) -> None:
        cur = self.terms.get(key)
        new = coeff if cur is None else cur + coeff
        if new.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    def coeff(self, a: int, b: int) -> CycScalar:
        return self.terms.get((a, b), CycScalar.zero())

    def x_parts(self) -> set[int]:
        return {a for a, _ in self.terms}

    def norm_squared(self) -> CycScalar:
        total = CycScalar.zero()
        for c in self.terms.values():
            total = total + c.abs_squared()
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiagonalPauliSum):
            return NotImplemented
        if self.n != other.n or set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"DiagonalPauliSum(n={self.n}, terms={len(self.terms)})"


def _submasks(s: int) -> Iterable[int]:
    """All y with y & ~s == 0, including 0 and s."""
    y = s
    while True:
        yield y
        if y == 0:
            return
        y = (y - 1) & s


def _digit_masks(t: tuple[int, ...]) -> list[int]:
    """masks[j] = qubits where the pattern exponent equals j, j = 0..7."""
    masks = [0] * 8
    for i, v in enumerate(t):
        masks[v] |= 1 << i
    return masks


# --- closed-form conjugation ---


def conj_t_powers(p: PauliOp, t: tuple[int, ...]) -> DiagonalPauliSum:
    """Conjugate by the pattern gate T^{t_1} x ... x T^{t_n}, t_i in Z_8.

    The result is a sum over a coset: z ranges over (a*t2~) xor y with
    y inside the support of a*(t1~ + t3~), where t1~ = t1+t5, t2~ = t2+t6,
    t3~ = t3+t7 collect the pattern digits with equal action on E(a,b).
    """
    if not p.is_hermitian():
        raise ValueError("input must be Hermitian")
    if len(t) != p.n:
        raise ValueError("pattern length mismatch")
    d = _digit_masks(t)
    t1m, t2m, t3m = d[1] | d[5], d[2] | d[6], d[3] | d[7]
    a, b = p.x, p.z
    s = a & (t1m | t3m)
    beta = a & t2m
    w = s.bit_count()
    pref = p.sign * (-1) ** parity(a & (d[3] | d[4] | d[5] | d[6]))
    scale = inv_sqrt2_pow(w)
    out = DiagonalPauliSum(p.n)
    for y in _submasks(s):
        z = beta ^ y
        sgn = pref * (-1) ** parity((b ^ t3m) & z)
        c = scale if sgn == 1 else -scale
        out.add((a, b ^ z), c)
    return out


def conj_t_pattern(p: PauliOp, t1: int, t7: int) -> DiagonalPauliSum:
    """Conjugate by T on supp(t1) and T-dagger on supp(t7) (disjoint)."""
    if t1 & t7:
        raise ValueError("T and T-dagger supports overlap")
    pat = TPattern.from_t1_t7(t1, t7, p.n)
    return conj_t_powers(p, pat.t)


def conj_transversal_t(p: PauliOp) -> DiagonalPauliSum:
    """Conjugate by T on every qubit."""
    return conj_t_pattern(p, (1 << p.n) - 1, 0)


def conj_z_rotation(p: PauliOp, level: int) -> DiagonalPauliSum:
    """Conjugate by the transversal pi/2^level Z-rotation, level >= 2.

    level 2 is the Clifford phase gate and is handled by the exact
    pattern action; level >= 3 uses the sec/tan expansion with exact
    cyclotomic coefficients.
    """
    if level < 2:
        raise ValueError("rotation level must be >= 2")
    if level == 2:
        return conj_t_powers(p, (2,) * p.n)
    if not p.is_hermitian():
        raise ValueError("input must be Hermitian")
    a, b = p.x, p.z
    w = a.bit_count()
    cosw = cos_const(level) ** w
    if p.sign < 0:
        cosw = -cosw
    tans = [CycScalar.one(level)]
    for _ in range(w):
        tans.append(tans[-1] * tan_const(level))
    out = DiagonalPauliSum(p.n)
    for y in _submasks(a):
        c = cosw * tans[y.bit_count()]
        if parity(b & y):
            c = -c
        out.add((a, b ^ y), c)
    return out


def _fwht(values: list[CycScalar]) -> list[CycScalar]:
    """In-place Walsh-Hadamard transform: out[x] = sum_v (-1)^(v.x) in[v]."""
    vals = list(values)
    h = 1
    n = len(vals)
    while h < n:
        for start in range(0, n, h * 2):
            for i in range(start, start + h):
                u, v = vals[i], vals[i + h]
                vals[i], vals[i + h] = u + v, u - v
        h *= 2
    return vals


def qfd_conjugate(
    p: PauliOp,
    r: tuple[tuple[int, ...], ...],
    level: int,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> DiagonalPauliSum:
    """Conjugate by the level-l quadratic-form gate of symmetric matrix R.

    Works for any symmetric R over Z_{2^l}; coefficients of the one-level-
    down residual gate are obtained by a Walsh transform over 2^n points,
    so the work is O(n 2^n) ring operations.
    """
    gate = QfdGate(r, level)
    n = p.n
    if gate.n != n:
        raise ValueError("matrix size mismatch")
    if not p.is_hermitian():
        raise ValueError("input must be Hermitian")
    if (n + 1) << n > max_enum:
        raise EnumerationCapExceeded((n + 1) << n, max_enum, "qfd_conjugate")
    ring = max(level, 3)
    mod = 1 << level
    a, b = p.x, p.z
    abits = [(a >> i) & 1 for i in range(n)]
    ar = [sum(r[i][j] for i in range(n) if abits[i]) % mod for j in range(n)]
    ara = sum(ar[j] for j in range(n) if abits[j]) % mod
    phi = ((1 - (1 << (level - 2))) * ara) % mod

    # residual symmetric matrix at level l-1
    mod1 = 1 << (level - 1)
    rt = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = 0
            if i == j:
                v += (1 + (1 << (level - 2))) * ar[i]
                if abits[i]:
                    v -= 2 * ar[i]
            if (not abits[i]) and abits[j]:
                v -= r[i][j]
            if abits[i] and not abits[j]:
                v -= r[i][j]
            rt[i][j] = v % mod1

    scale = 1 << (ring - (level - 1))
    g = []
    for v in range(1 << n):
        vb = [(v >> i) & 1 for i in range(n)]
        q = sum(rt[i][j] for i in range(n) if vb[i] for j in range(n) if vb[j])
        g.append(CycScalar.zeta_pow(ring, (q % mod1) * scale))
    walsh = _fwht(g)

    xi_phi = CycScalar.zeta_pow(ring, phi * (1 << (ring - level)))
    out = DiagonalPauliSum(n)
    for x in range(1 << n):
        wx = walsh[x]
        if wx.is_zero():
            continue
        wvec = [((b >> j) & 1) + ar[j] + ((x >> j) & 1) for j in range(n)]
        b0 = 0
        for j in range(n):
            if wvec[j] & 1:
                b0 |= 1 << j
        iexp = sum(wvec[j] for j in range(n) if abits[j]) - (a & b0).bit_count()
        iexp -= (a & x).bit_count()  # the i^{-a x^T} factor
        c = xi_phi * CycScalar.zeta_pow(ring, 2 * (iexp % 4) * (1 << (ring - 3)))
        c = c * wx.times_2exp(-n)
        if p.sign < 0:
            c = -c
        out.add((a, b0), c)
    return out


def conjugate(p: PauliOp, gate: GateSpec, max_enum: int = DEFAULT_MAX_ENUM) -> DiagonalPauliSum:
    """Dispatch a gate specification to the matching closed form."""
    if isinstance(gate, TPattern):
        return conj_t_powers(p, gate.t)
    if isinstance(gate, ZRotation):
        return conj_z_rotation(p, gate.level)
    if isinstance(gate, QfdGate):
        return qfd_conjugate(p, gate.r, gate.level, max_enum)
    raise TypeError(f"unknown gate spec {gate!r}")


# --- dense Walsh-trace oracle ---


def _diag_exponents(gate: GateSpec, n: int, ring: int) -> tuple[list[int], int]:
    """Diagonal phases of the gate as zeta_{2^ring} exponents."""
    if isinstance(gate, TPattern):
        if len(gate.t) != n:
            raise ValueError("pattern length mismatch")
        scale = 1 << (ring - 3)
        return (
            [sum(gate.t[i] for i in range(n) if (v >> i) & 1) % 8 * scale
             for v in range(1 << n)],
            ring,
        )
    if isinstance(gate, ZRotation):
        scale = 1 << (ring - gate.level)
        return (
            [(v.bit_count() % (1 << gate.level)) * scale for v in range(1 << n)],
            ring,
        )
    if isinstance(gate, QfdGate):
        if gate.n != n:
            raise ValueError("matrix size mismatch")
        mod = 1 << gate.level
        scale = 1 << (ring - gate.level)
        es = []
        for v in range(1 << n):
            vb = [(v >> i) & 1 for i in range(n)]
            q = sum(gate.r[i][j] for i in range(n) if vb[i]
                    for j in range(n) if vb[j])
            es.append((q % mod) * scale)
        return es, ring
    raise TypeError(f"unknown gate spec {gate!r}")


def _gate_ring(gate: GateSpec) -> int:
    lv = gate.level if isinstance(gate, (ZRotation, QfdGate)) else 3
    return max(lv, 3)


def dense_oracle(p: PauliOp, gate: GateSpec, n_max: int = 5) -> DiagonalPauliSum:
    """Expand U E(a,b) U^dagger straight from the gate's diagonal action.

    Builds the 2^n diagonal phases, forms the ratio function on the a-fiber
    and reads the coefficients off with a Walsh transform — no closed-form
    conjugation identity is involved, so this serves as the independent
    oracle for all of them.
    """
    n = p.n
    if n > n_max:
        raise ValueError(f"dense oracle limited to n <= {n_max}")
    if not p.is_hermitian():
        raise ValueError("input must be Hermitian")
    ring = _gate_ring(gate)
    exps, ring = _diag_exponents(gate, n, ring)
    period = 1 << ring
    a, b = p.x, p.z
    g = [
        CycScalar.zeta_pow(ring, (exps[v ^ a] - exps[v]) % period)
        for v in range(1 << n)
    ]
    walsh = _fwht(g)
    out = DiagonalPauliSum(n)
    ab = (a & b).bit_count()
    for y in range(1 << n):
        wy = walsh[y]
        if wy.is_zero():
            continue
        iexp = (ab - (a & (b ^ y)).bit_count()) % 4
        c = wy.times_2exp(-n) * CycScalar.zeta_pow(ring, 2 * iexp * (1 << (ring - 3)))
        if p.sign < 0:
            c = -c
        out.add((a, b ^ y), c)
    return out


# --- projector preservation ---


@dataclass
class ProjectorResult:
    """Outcome of checking U Pi U^dagger = Pi by exact term collection."""

    passed: bool
    offender: Optional[PauliOp] = None
    residual: Optional[CycScalar] = None
    work: int = 0

    def __bool__(self) -> bool:
        return self.passed


def _pattern_fiber_check(
    n: int,
    fiber: list[tuple[int, int]],  # (b mask, sign +-1), shared X-part a
    a: int,
    t: tuple[int, ...],
) -> tuple[bool, Optional[tuple[int, int]], Optional[CycScalar]]:
    """Exact check that the pattern gate maps this a-fiber sum to itself.

    Uses the coset structure of the conjugation formula: one signed
    integer Walsh-type butterfly per fiber class, so the whole check is
    integer arithmetic.
    """
    d = _digit_masks(t)
    t1m, t2m, t3m = d[1] | d[5], d[2] | d[6], d[3] | d[7]
    s = a & (t1m | t3m)
    beta = a & t2m
    w = s.bit_count()
    pref = (-1) ** parity(a & (d[3] | d[4] | d[5] | d[6]))
    s_bits = [i for i in range(n) if (s >> i) & 1]

    def compress(mask: int) -> int:
        out = 0
        for j, bit in enumerate(s_bits):
            if (mask >> bit) & 1:
                out |= 1 << j
        return out

    def expand(idx: int) -> int:
        out = 0
        for j, bit in enumerate(s_bits):
            if (idx >> j) & 1:
                out |= 1 << bit
        return out

    expected: dict[int, np.ndarray] = {}
    for b, sgn in fiber:
        key = b & ~s
        arr = expected.get(key)
        if arr is None:
            arr = np.zeros(1 << w, dtype=np.int64)
            expected[key] = arr
        arr[compress(b)] += sgn

    tau = t3m & s
    produced: dict[int, np.ndarray] = {}
    for key, arr in expected.items():
        out = arr.copy()
        for j, bit in enumerate(s_bits):
            shaped = out.reshape(-1, 2, 1 << j)
            g0 = shaped[:, 0, :].copy()
            g1 = shaped[:, 1, :].copy()
            if (tau >> bit) & 1:
                shaped[:, 0, :] = g0 + g1
                shaped[:, 1, :] = g1 - g0
            else:
                shaped[:, 0, :] = g0 - g1
                shaped[:, 1, :] = g0 + g1
        sign_beta = pref * (-1) ** parity((key ^ t3m) & beta)
        produced[key ^ beta] = out * sign_beta

    if w % 2:
        # the conjugated fiber carries an overall 1/sqrt(2) that no +-1
        # projector coefficient can match; witness the fiber base element
        b0, sgn0 = fiber[0]
        got = produced.get(b0 & ~s)
        got_int = int(got[compress(b0)]) if got is not None else 0
        residual = (CycScalar.from_int(got_int) * inv_sqrt2_pow(w)
                    - CycScalar.from_int(sgn0))
        return False, (a, b0), residual

    half = 1 << (w // 2)
    for key in sorted(set(expected) | set(produced)):
        got = produced.get(key)
        want = expected.get(key)
        if got is None:
            got = np.zeros(1 << w, dtype=np.int64)
        target = want * half if want is not None else np.zeros(1 << w, dtype=np.int64)
        diff = got - target
        bad = np.nonzero(diff)[0]
        if bad.size:
            idx = int(bad[0])
            b_off = key | expand(idx)
            residual = CycScalar.from_int(int(diff[idx])).times_2exp(-(w // 2))
            return False, (a, b_off), residual
    return True, None, None


def projector_check(
    code: "StabilizerCode",
    gate: GateSpec,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> ProjectorResult:
    """Decide U Pi_S U^dagger = Pi_S by expanding the full stabilizer group.

    Elements are grouped by X-part; every fiber must reproduce itself
    term-by-term.  Z_8 patterns (including transversal T/S/Z and level-2/3
    rotations) run on an exact integer fast path; other gates accumulate
    cyclotomic coefficients directly.
    """
    n = code.n
    pattern = None
    if isinstance(gate, TPattern):
        pattern = gate.t
    elif isinstance(gate, ZRotation) and gate.level <= 3:
        pattern = ((2 if gate.level == 2 else 1),) * n

    z_elems = code.z_elements(max_enum)
    reps = code.x_fiber_reps(max_enum)

    work = 0
    for rep in reps:
        if rep.x == 0:
            continue
        if pattern is not None:
            d = _digit_masks(pattern)
            s = rep.x & ((d[1] | d[5]) | (d[3] | d[7]))
        else:
            s = rep.x
        work += len(z_elems) << s.bit_count()
        if work > max_enum:
            raise EnumerationCapExceeded(work, max_enum, "projector_check")

    for rep in reps:
        if rep.x == 0:
            continue  # diagonal gates fix pure-Z fibers termwise
        fiber: list[tuple[int, int]] = []
        for zmask, zsign in z_elems:
            el = rep.multiply(PauliOp(n, 0, zmask, 0 if zsign == 1 else 4))
            fiber.append((el.z, el.sign))
        if pattern is not None:
            ok, off, res = _pattern_fiber_check(n, fiber, rep.x, pattern)
            if not ok:
                return ProjectorResult(False, PauliOp(n, off[0], off[1]), res, work)
        else:
            total = DiagonalPauliSum(n)
            for bmask, sgn in fiber:
                part = conjugate(PauliOp(n, rep.x, bmask, 0 if sgn == 1 else 4),
                                 gate, max_enum)
                for k, c in part.terms.items():
                    total.add(k, c)
            target = {(rep.x, bmask): sgn for bmask, sgn in fiber}
            for key in sorted(set(total.terms) | set(target)):
                got = total.terms.get(key, CycScalar.zero())
                want = CycScalar.from_int(target.get(key, 0))
                if got != want:
                    return ProjectorResult(
                        False, PauliOp(n, key[0], key[1]), got - want, work
                    )
    return ProjectorResult(True, None, None, work)
