"""Bit-packed linear algebra over GF(2).

Vectors are stored as Python integers used as bitmasks: coordinate i
(1-based, leftmost in the text format) is bit i-1, so coordinate 1 is the
least significant bit.  Subspaces keep a canonical reduced-row-echelon
basis, which makes subspace equality a tuple comparison and lets spans be
hashed and deduplicated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_MAX_ENUM = 1 << 22


class EnumerationCapExceeded(Exception):
    """An exhaustive loop would exceed the configured work cap."""

    def __init__(self, needed: int, cap: int, what: str = "enumeration"):
        super().__init__(f"{what} needs {needed} work units, cap is {cap}")
        self.needed = needed
        self.cap = cap


def mask_from_string(s: str) -> int:
    """Parse a left-to-right 0/1 string (coordinate 1 first) into a mask."""
    if not all(c in "01" for c in s):
        raise ValueError(f"not a 0/1 string: {s!r}")
    return int(s[::-1], 2) if s else 0


def mask_to_string(mask: int, n: int) -> str:
    return format(mask, f"0{n}b")[::-1] if n else ""


def parity(mask: int) -> int:
    return mask.bit_count() & 1


@dataclass(frozen=True)
class BitVector:
    """A fixed-length vector over GF(2)."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask does not fit in {self.n} coordinates")

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        return cls(len(s), mask_from_string(s))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "BitVector":
        mask = 0
        for i in support:
            if not 1 <= i <= n:
                raise ValueError(f"coordinate {i} outside 1..{n}")
            mask |= 1 << (i - 1)
        return cls(n, mask)

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if (self.mask >> i) & 1)

    def star(self, other: "BitVector") -> "BitVector":
        """Coordinatewise product."""
        self._check(other)
        return BitVector(self.n, self.mask & other.mask)

    def dot(self, other: "BitVector") -> int:
        self._check(other)
        return parity(self.mask & other.mask)

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.n, self.mask ^ other.mask)

    def contained_in(self, other: "BitVector") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def _check(self, other: "BitVector") -> None:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")

    def __str__(self) -> str:
        return mask_to_string(self.mask, self.n)


@dataclass(frozen=True)
class BitMatrix:
    """A list of equal-length rows over GF(2)."""

    n: int
    rows: tuple[BitVector, ...]

    def __post_init__(self) -> None:
        for r in self.rows:
            if r.n != self.n:
                raise ValueError("rows of differing length")

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "BitMatrix":
        vecs = tuple(BitVector.from_string(r) for r in rows)
        if not vecs:
            raise ValueError("empty matrix needs explicit n")
        return cls(vecs[0].n, vecs)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "BitMatrix":
        return cls(n, tuple(BitVector(n, m) for m in masks))

    @property
    def masks(self) -> list[int]:
        return [r.mask for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


def _rref_masks(masks: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form on masks.

    Pivot of a row is its lowest set bit (coordinate order 1..n); returns
    (rows sorted by pivot, pivot bit positions).
    """
    rows: list[int] = []  # kept reduced, sorted by pivot
    pivots: list[int] = []
    for m in masks:
        for r, p in zip(rows, pivots):
            if (m >> p) & 1:
                m ^= r
        if m == 0:
            continue
        p = (m & -m).bit_length() - 1
        # insert and eliminate from existing rows
        idx = 0
        while idx < len(pivots) and pivots[idx] < p:
            idx += 1
        rows.insert(idx, m)
        pivots.insert(idx, p)
        for j in range(len(rows)):
            if j != idx and (rows[j] >> p) & 1:
                rows[j] ^= m
    return rows, pivots


def rref(M: BitMatrix) -> tuple[BitMatrix, int, list[int]]:
    """Reduced row echelon form; returns (matrix, rank, 1-based pivot list).

    Zero rows are dropped; the row space is preserved and the output is
    the canonical basis of it.
    """
    rows, pivots = _rref_masks(M.masks)
    return BitMatrix.from_masks(M.n, rows), len(rows), [p + 1 for p in pivots]


class Subspace:
    """A subspace of GF(2)^n held as a canonical RREF basis."""

    __slots__ = ("n", "basis", "pivots")

    def __init__(self, n: int, vectors: Iterable[int] = ()):
        rows, pivots = _rref_masks(vectors)
        self.n = n
        self.basis = tuple(rows)
        self.pivots = tuple(pivots)
        for m in rows:
            if m >> n:
                raise ValueError(f"vector does not fit in ambient dimension {n}")

    @classmethod
    def from_bitvectors(cls, vectors: Iterable[BitVector]) -> "Subspace":
        vecs = list(vectors)
        if not vecs:
            raise ValueError("ambient dimension unknown; use Subspace(n, ...)")
        return cls(vecs[0].n, [v.mask for v in vecs])

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [1 << i for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[BitVector]:
        return [BitVector(self.n, m) for m in self.basis]

    def reduce(self, mask: int) -> int:
        """Residual of mask after elimination against the basis."""
        for r, p in zip(self.basis, self.pivots):
            if (mask >> p) & 1:
                mask ^= r
        return mask

    def contains(self, mask: int) -> bool:
        return self.reduce(mask) == 0

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(m) for m in other.basis)

    def coefficients(self, mask: int) -> Optional[int]:
        """Basis-combination bits producing mask, or None if not in the span."""
        coeff = 0
        for i, (r, p) in enumerate(zip(self.basis, self.pivots)):
            if (mask >> p) & 1:
                mask ^= r
                coeff |= 1 << i
        return coeff if mask == 0 else None

    def enumerate_masks(self, cap: Optional[int] = None) -> Iterator[int]:
        """Yield every element of the span in Gray-code order (0 first)."""
        if cap is not None and (1 << self.dim) > cap:
            raise EnumerationCapExceeded(1 << self.dim, cap, "subspace span")
        cur = 0
        yield cur
        for i in range(1, 1 << self.dim):
            cur ^= self.basis[(i & -i).bit_length() - 1]
            yield cur

    def dual(self) -> "Subspace":
        """All vectors orthogonal (standard inner product) to this space."""
        piv = set(self.pivots)
        free = [c for c in range(self.n) if c not in piv]
        gens = []
        for f in free:
            v = 1 << f
            for r, p in zip(self.basis, self.pivots):
                if (r >> f) & 1:
                    v |= 1 << p
            gens.append(v)
        return Subspace(self.n, gens)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.n != other.n:
            raise ValueError("ambient mismatch")
        joined = list(self.dual().basis) + list(other.dual().basis)
        return Subspace(self.n, joined).dual()

    def sum(self, other: "Subspace") -> "Subspace":
        if self.n != other.n:
            raise ValueError("ambient mismatch")
        return Subspace(self.n, list(self.basis) + list(other.basis))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.n, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(n={self.n}, dim={self.dim})"


def star(u: BitVector, v: BitVector) -> BitVector:
    """Coordinatewise product of two vectors."""
    return u.star(v)


def _compress(mask: int, support_bits: list[int]) -> int:
    out = 0
    for j, b in enumerate(support_bits):
        if (mask >> b) & 1:
            out |= 1 << j
    return out


def _expand(mask: int, support_bits: list[int]) -> int:
    out = 0
    for j, b in enumerate(support_bits):
        if (mask >> j) & 1:
            out |= 1 << b
    return out


def puncture(S: Subspace, a: BitVector) -> Subspace:
    """Restrict S to the support of a, dropping all other coordinates.

    Every basis vector must be contained in the support of a.
    """
    if S.n != a.n:
        raise ValueError("ambient mismatch")
    for m in S.basis:
        if m & ~a.mask:
            raise ValueError(
                f"basis vector {mask_to_string(m, S.n)} not supported on {a}"
            )
    bits = [i for i in range(a.n) if (a.mask >> i) & 1]
    return Subspace(len(bits), [_compress(m, bits) for m in S.basis])


def unpuncture(S: Subspace, a: BitVector) -> Subspace:
    """Inverse of puncture: re-embed a subspace onto the support of a."""
    bits = [i for i in range(a.n) if (a.mask >> i) & 1]
    if S.n != len(bits):
        raise ValueError("ambient mismatch with support size")
    return Subspace(a.n, [_expand(m, bits) for m in S.basis])


def even_weight_subspace(n: int) -> Subspace:
    return Subspace(n, [0b11 << i for i in range(n - 1)]) if n >= 2 else Subspace(n)


def self_dual_certificate(Z: Subspace, a: BitVector) -> Optional[Subspace]:
    """Find a self-dual code A of dimension weight(a)/2 inside Z, supported on a.

    Z must consist of vectors supported on a, with weight(a) even.  The
    construction starts from the dual of the punctured space and enlarges
    it one even-weight vector at a time; it succeeds exactly when the
    punctured Z contains its own dual.  Returns the certificate embedded
    in the ambient space, or None.
    """
    w = a.weight
    if w % 2:
        raise ValueError("support weight must be even")
    zt = puncture(Z, a)  # validates support containment
    if w == 0:
        return Subspace(a.n)
    target = w // 2
    d = zt.dual()
    if not zt.contains_space(d):
        return None
    even = even_weight_subspace(w)
    while d.dim < target:
        # any even-weight vector of dual(d) outside d keeps d self-orthogonal,
        # stays inside the original space, and strictly enlarges d
        candidates = d.dual().intersect(even)
        grew = False
        for m in candidates.basis:
            if not d.contains(m):
                d = Subspace(w, list(d.basis) + [m])
                grew = True
                break
        if not grew:
            return None
    return unpuncture(d, a)


def solve_linear_system(
    rows: Sequence[int], rhs: Sequence[int], n: int
) -> Optional[int]:
    """Solve x . rows[i]^T = rhs[i] over GF(2); returns one solution mask or None.

    Free variables are set to zero, so the solution is deterministic.
    In RREF every non-pivot variable bit of a row is free, so reading the
    augmented bit off each pivot row is a full solution.
    """
    aug = []
    for r, b in zip(rows, rhs):
        aug.append(r | ((b & 1) << n))
    reduced, pivots = _rref_masks(aug)
    x = 0
    for r, p in zip(reduced, pivots):
        if p == n:
            return None  # reduced row says 0 = 1
        if (r >> n) & 1:
            x |= 1 << p
    return x


def invert_matrix(masks: Sequence[int], k: int) -> list[int]:
    """Invert a k x k GF(2) matrix given as row masks; raises if singular."""
    aug = [m | (1 << (k + i)) for i, m in enumerate(masks)]
    rows, pivots = _rref_masks(aug)
    low = [0] * k
    for r, p in zip(rows, pivots):
        if p >= k:
            raise ValueError("matrix is singular")
        low[p] = r >> k
    if len(rows) != k:
        raise ValueError("matrix is singular")
    return low


def min_weight(
    S: Subspace,
    exclude: Optional[Subspace] = None,
    cap: int = DEFAULT_MAX_ENUM,
) -> int:
    """Minimum Hamming weight over S minus exclude, by exhaustive enumeration."""
    if (1 << S.dim) > cap:
        raise EnumerationCapExceeded(1 << S.dim, cap, "min_weight")
    best = S.n + 1
    for m in S.enumerate_masks():
        if m == 0:
            continue
        if exclude is not None and exclude.contains(m):
            continue
        w = m.bit_count()
        if w < best:
            best = w
    if best > S.n:
        raise ValueError("no element outside the excluded space")
    return best
