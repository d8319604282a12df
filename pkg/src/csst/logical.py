"""What logical operator a transversal diagonal gate induces.

Covers triorthogonality, the logical-identity and logical-transversal-T
criteria, the Bravyi-Haah quadratic form, coset weight-residue profiles of
CSS basis states, ANF extraction of +-1 diagonals, the partition
polynomial describing the quantum Reed-Muller logical action, and the
exact trigonometric sums for general Z-rotation levels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .codes import (
    CodeLike,
    CssCode,
    StabilizerCode,
    Verdict,
    Witness,
    as_stabilizer,
    _z_subcode_on,
)
from .conjugation import TPattern, projector_check
from .cyclotomic import CycScalar, sec_const, tan_const
from .gf2 import (
    DEFAULT_MAX_ENUM,
    BitMatrix,
    BitVector,
    EnumerationCapExceeded,
    Subspace,
    parity,
)
from .rm import ev, monomials_of_degree, qrm_term_count

NOT_IN_STABILIZER = "NOT_IN_STABILIZER"
WRONG_SIGN = "WRONG_SIGN"
ODD_TRIPLE = "ODD_TRIPLE"
NOT_TRIORTHOGONAL = "NOT_TRIORTHOGONAL"
WEIGHT_RESIDUE = "WEIGHT_RESIDUE"
SEC_SUM = "SEC_SUM"
W_CANCELLATION = "W_CANCELLATION"


class NonConstantCoset(Exception):
    """A CSS basis-state coset has two members with different weight residues,
    so the gate does not induce a diagonal logical operator."""

    def __init__(self, v: int, residues: tuple[int, int], witnesses: tuple[int, int]):
        super().__init__(
            f"coset {v} has residues {residues[0]} and {residues[1]}"
        )
        self.v = v
        self.residues = residues
        self.witnesses = witnesses


@dataclass(frozen=True)
class PhasePolynomial:
    """ANF over F2 on k logical variables; each term is a set of indices."""

    k: int
    terms: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        for t in self.terms:
            if not t or min(t) < 1 or max(t) > self.k:
                raise ValueError("term variables must lie in 1..k")

    @property
    def degree(self) -> int:
        return max((len(t) for t in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(t)) for t in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join("*".join(f"v{i}" for i in t) for t in self.sorted_terms())


@dataclass
class PhaseProfile:
    """Weight residues mod 2^level of the CSS basis-state cosets."""

    level: int
    residues: np.ndarray  # shape (2^k,), residues[v] for logical label v

    @property
    def k(self) -> int:
        return int(self.residues.size).bit_length() - 1

    def histogram(self) -> dict[int, int]:
        vals, counts = np.unique(self.residues, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def count(self, residue: int) -> int:
        return int(np.count_nonzero(self.residues == residue))


def _rows_of(G: Union[BitMatrix, Sequence[int]]) -> list[int]:
    if isinstance(G, BitMatrix):
        return G.masks
    return [int(m) for m in G]


def check_triorthogonal(G: Union[BitMatrix, Sequence[int]]) -> bool:
    """Even pairwise and triple-wise row overlaps."""
    rows = _rows_of(G)
    for a, b in itertools.combinations(rows, 2):
        if (a & b).bit_count() % 2:
            return False
    for a, b, c in itertools.combinations(rows, 3):
        if (a & b & c).bit_count() % 2:
            return False
    return True


def _g1_rows(code: CssCode) -> list[int]:
    """Rows of G1: coset (logical X) generators first, then C2 generators."""
    return list(code.logical_x) + list(code.x_gens)


def _signed_z_membership(code: CssCode, v: int) -> Optional[str]:
    """Check i^w(v) E(0,v) is a stabilizer; returns a violation tag or None."""
    if v.bit_count() % 2:
        return WRONG_SIGN  # i^w not a sign, cannot be a Hermitian stabilizer
    if not code.cz_space.contains(v):
        return NOT_IN_STABILIZER
    stab = code.stabilizer
    target = (-1) ** ((v.bit_count() // 2) % 2)
    if stab.z_sign(v) != target:
        return WRONG_SIGN
    return None


def check_logical_identity(
    code: CssCode, max_enum: int = DEFAULT_MAX_ENUM, full: bool = False
) -> Verdict:
    """Does transversal T act as the logical identity on this CSS-T code?

    Checks membership-with-sign of i^w(v) E(0,v) for v ranging over the
    rows of G1 and their pairwise star products, plus even triple overlaps;
    closure under xor and star makes these generator checks equivalent to
    the element-wise conditions.  ``full`` re-verifies by enumeration.
    """
    rows = _g1_rows(code)
    verdict = Verdict(passed=True)
    n = code.n
    for i, j in itertools.combinations_with_replacement(range(len(rows)), 2):
        v = rows[i] & rows[j]
        tag = _signed_z_membership(code, v)
        if tag is not None:
            verdict.passed = False
            verdict.witnesses.append(
                Witness(a=BitVector(n, v), violation=tag, offending=BitVector(n, v))
            )
            return verdict
    for a, b, c in itertools.combinations(rows, 3):
        if (a & b & c).bit_count() % 2:
            verdict.passed = False
            verdict.witnesses.append(
                Witness(
                    a=BitVector(n, a & b & c),
                    violation=ODD_TRIPLE,
                    offending=BitVector(n, a & b & c),
                )
            )
            return verdict
    if full:
        k = len(code.logical_x)
        k2 = len(code.x_gens)
        work = (1 << (2 * k)) + (1 << (k + k2)) + (1 << (2 * k2))
        if work > max_enum:
            raise EnumerationCapExceeded(work, max_enum, "logical identity")
        lx = Subspace(n, code.logical_x)
        c2 = code.c2_space
        for x in lx.enumerate_masks():
            for y in lx.enumerate_masks():
                assert _signed_z_membership(code, x & y) is None
            for a in c2.enumerate_masks():
                assert _signed_z_membership(code, x & a) is None
        for a in c2.enumerate_masks():
            for b in c2.enumerate_masks():
                assert _signed_z_membership(code, a & b) is None
    return verdict


def check_logical_transversal_t(
    code: CssCode, max_enum: int = DEFAULT_MAX_ENUM, full: bool = False
) -> Verdict:
    """Does transversal T realize logical transversal T (no Clifford fixup)?

    Requires G1 triorthogonal plus the weight congruence
    w(x xor a) = w(c) (mod 8), which over a triorthogonal G1 reduces to
    w(x_i) = 1, w(a_j) = 0 (mod 8) and all pairwise overlaps = 0 (mod 4).
    """
    rows = _g1_rows(code)
    n = code.n
    verdict = Verdict(passed=True)

    def fail(tag: str, v: int) -> Verdict:
        verdict.passed = False
        verdict.witnesses.append(
            Witness(a=BitVector(n, v), violation=tag, offending=BitVector(n, v))
        )
        return verdict

    if not check_triorthogonal(rows):
        return fail(NOT_TRIORTHOGONAL, 0)
    for x in code.logical_x:
        if x.bit_count() % 8 != 1:
            return fail(WEIGHT_RESIDUE, x)
    for a in code.x_gens:
        if a.bit_count() % 8:
            return fail(WEIGHT_RESIDUE, a)
    for u, v in itertools.combinations(rows, 2):
        if (u & v).bit_count() % 4:
            return fail(WEIGHT_RESIDUE, u & v)
    if full:
        k = len(code.logical_x)
        k2 = len(code.x_gens)
        if 1 << (k + k2) > max_enum:
            raise EnumerationCapExceeded(1 << (k + k2), max_enum, "logical T")
        for c in range(1 << k):
            x = 0
            for i in range(k):
                if (c >> i) & 1:
                    x ^= code.logical_x[i]
            wc = c.bit_count()
            for a in code.c2_space.enumerate_masks():
                assert (x ^ a).bit_count() % 8 == wc % 8
    return verdict


def bravyi_haah_q(code: CssCode, d: Union[int, Sequence[int]]) -> int:
    """The Clifford-correction form Q(d) mod 4 for a G1 row selection d.

    Row weights must satisfy the convention w(x_i) = 2*Gamma_i + 1 on
    logical rows and w(a_j) = 2*Gamma_j on C2 rows.
    """
    rows = _g1_rows(code)
    k = len(code.logical_x)
    if not isinstance(d, int):
        bits = list(d)
        if len(bits) != len(rows):
            raise ValueError(f"need {len(rows)} selection bits")
        d = sum((b & 1) << i for i, b in enumerate(bits))
    if d >> len(rows):
        raise ValueError("selection out of range")
    gammas = []
    for i, row in enumerate(rows):
        w = row.bit_count()
        if i < k:
            if w % 2 == 0:
                raise ValueError(f"logical row {i + 1} has even weight {w}")
            gammas.append((w - 1) // 2)
        else:
            if w % 2:
                raise ValueError(f"C2 row {i - k + 1} has odd weight {w}")
            gammas.append(w // 2)
    q = 0
    for i in range(len(rows)):
        if (d >> i) & 1:
            q += gammas[i]
    for i, j in itertools.combinations(range(len(rows)), 2):
        if (d >> i) & 1 and (d >> j) & 1:
            q -= (rows[i] & rows[j]).bit_count()
    return q % 4


def weight_congruence_holds(code: CssCode, d: Union[int, Sequence[int]]) -> bool:
    """Direct check of w(x xor a) = w(c) (mod 8) for one row selection."""
    rows = _g1_rows(code)
    k = len(code.logical_x)
    if not isinstance(d, int):
        d = sum((b & 1) << i for i, b in enumerate(d))
    acc = 0
    wc = 0
    for i, row in enumerate(rows):
        if (d >> i) & 1:
            acc ^= row
            if i < k:
                wc += 1
    return acc.bit_count() % 8 == wc % 8


def coset_phase_profile(
    code: CssCode, level: int, max_enum: int = DEFAULT_MAX_ENUM
) -> PhaseProfile:
    """Weight residue mod 2^level of every CSS basis-state coset.

    Raises NonConstantCoset when some coset mixes residues (the transversal
    rotation then does not induce a diagonal logical operator).
    """
    k = len(code.logical_x)
    k2 = code.c2_space.dim
    if (1 << (k + k2)) > max_enum:
        raise EnumerationCapExceeded(1 << (k + k2), max_enum, "coset profile")
    mod = 1 << level
    if code.n <= 64:
        bases = np.zeros(1 << k, dtype=np.uint64)
        for i, row in enumerate(code.logical_x):
            bases[1 << i : 2 << i] = bases[: 1 << i] ^ np.uint64(row)
        words = np.zeros(1 << k2, dtype=np.uint64)
        for i, row in enumerate(code.c2_space.basis):
            words[1 << i : 2 << i] = words[: 1 << i] ^ np.uint64(row)
        # residues of every coset member, cosets along axis 0
        table = np.bitwise_count(bases[:, None] ^ words[None, :]).astype(np.int64)
        table %= mod
        first = table[:, 0]
        bad = np.nonzero((table != first[:, None]).any(axis=1))[0]
        if bad.size:
            v = int(bad[0])
            j = int(np.nonzero(table[v] != first[v])[0][0])
            raise NonConstantCoset(
                v,
                (int(first[v]), int(table[v][j])),
                (int(bases[v] ^ words[0]), int(bases[v] ^ words[j])),
            )
        return PhaseProfile(level, first)

    residues = np.zeros(1 << k, dtype=np.int64)
    c2_masks = list(code.c2_space.enumerate_masks())
    base = 0
    for v in range(1 << k):
        if v:
            base ^= code.logical_x[((v ^ (v - 1)) + 1).bit_length() - 2]
        # Gray order: flip the lowest changed logical row
        r0 = None
        for c in c2_masks:
            r = (base ^ c).bit_count() % mod
            if r0 is None:
                r0 = r
            elif r != r0:
                raise NonConstantCoset(v, (r0, r), (base ^ c2_masks[0], base ^ c))
        residues[_gray_to_index(v)] = r0
    return PhaseProfile(level, residues)


def _gray_to_index(i: int) -> int:
    """Index visited at Gray step i (i.e. i ^ (i >> 1))."""
    return i ^ (i >> 1)


def diag_to_anf(profile: PhaseProfile) -> PhasePolynomial:
    """Moebius transform of a +-1 diagonal profile into its ANF."""
    half = 1 << (profile.level - 1)
    res = profile.residues
    bad = np.nonzero((res != 0) & (res != half))[0]
    if bad.size:
        raise ValueError(
            f"residue {int(res[int(bad[0])])} at {int(bad[0])} is not in {{0, {half}}}"
        )
    f = (res // half).astype(np.uint8)
    k = profile.k
    for j in range(k):
        f = f.reshape(-1, 2, 1 << j)
        f[:, 1, :] ^= f[:, 0, :]
        f = f.reshape(-1)
    terms = [
        frozenset(i + 1 for i in range(k) if (v >> i) & 1)
        for v in np.nonzero(f)[0]
    ]
    if any(not t for t in terms):
        raise ValueError("profile has a constant -1 part (global phase)")
    return PhasePolynomial(k, frozenset(terms))


def qrm_logical_polynomial(m: int, r: int) -> PhasePolynomial:
    """Partition polynomial of the QRM(r,m) logical action.

    One term per unordered partition of the m variables into m/r blocks of
    size r; the blocks name logical qubits through the lexicographic order
    of degree-r monomials.
    """
    if r < 1 or m % r:
        raise ValueError("need r >= 1 dividing m")
    if 2 * r > m:
        raise ValueError("need r <= m/2")
    index = {mono: i + 1 for i, mono in enumerate(monomials_of_degree(r, m))}
    terms: list[frozenset[int]] = []

    def descend(remaining: frozenset[int], blocks: list[frozenset[int]]) -> None:
        if not remaining:
            terms.append(frozenset(index[b] for b in blocks))
            return
        anchor = min(remaining)
        rest = sorted(remaining - {anchor})
        for combo in itertools.combinations(rest, r - 1):
            block = frozenset((anchor,) + combo)
            descend(remaining - block, blocks + [block])

    descend(frozenset(range(1, m + 1)), [])
    assert len(terms) == qrm_term_count(m, r)
    return PhasePolynomial(len(index), frozenset(terms))


def ax_weight_residue(f: Iterable[Iterable[int]], m: int, r: int) -> int:
    """w(ev(f)) mod 2^(m/r), computed two ways and cross-checked.

    Directly by evaluation, and as 2^(m/r - 1) times the number (mod 2) of
    variable partitions whose blocks all appear as degree-r terms of f.
    """
    if r < 2 or m % r:
        raise ValueError("need r >= 2 dividing m")
    monos = {frozenset(mo) for mo in f}
    if any(len(mo) > r for mo in monos):
        raise ValueError(f"polynomial degree exceeds {r}")
    mod = 1 << (m // r)
    direct = ev(monos, m).bit_count() % mod

    blocks = {mo for mo in monos if len(mo) == r}
    count = 0

    def descend(remaining: frozenset[int]) -> None:
        nonlocal count
        if not remaining:
            count += 1
            return
        anchor = min(remaining)
        rest = sorted(remaining - {anchor})
        for combo in itertools.combinations(rest, r - 1):
            block = frozenset((anchor,) + combo)
            if block in blocks:
                descend(remaining - block)

    descend(frozenset(range(1, m + 1)))
    via_partitions = ((count % 2) << (m // r - 1)) % mod
    if direct != via_partitions:
        raise AssertionError(
            f"weight residue mismatch: direct {direct}, partitions {via_partitions}"
        )
    return direct


def check_selfdual_divisibility(
    C: Subspace, level: int, cap: int = DEFAULT_MAX_ENUM
) -> bool:
    """For self-dual C: is (m - 2 w(v)) divisible by 2^level for all v?"""
    if C.dual() != C:
        raise ValueError("code is not self-dual")
    if 1 << C.dim > cap:
        raise EnumerationCapExceeded(1 << C.dim, cap, "self-dual divisibility")
    mod = 1 << level
    return all((C.n - 2 * m.bit_count()) % mod == 0 for m in C.enumerate_masks())


def check_z_rotation_conditions(
    code: CodeLike, level: int, max_enum: int = DEFAULT_MAX_ENUM
) -> Verdict:
    """Exact trigonometric-sum conditions for a transversal pi/2^level
    Z-rotation to preserve the code space.

    For every X-component a: the signed sum of (i tan)^w(v) over the
    Z-stabilizers inside supp(a) must equal sec^w(a), and the shifted sums
    over every y inside supp(a) outside that subcode must vanish.  Level 2
    is Clifford and is decided by exact projector expansion instead.
    """
    stab = as_stabilizer(code)
    n = stab.n
    if level < 2:
        raise ValueError("rotation level must be >= 2")
    if level == 2:
        res = projector_check(stab, TPattern((2,) * n), max_enum)
        verdict = Verdict(passed=res.passed)
        if not res.passed:
            verdict.witnesses.append(
                Witness(
                    a=BitVector(n, res.offender.x),
                    violation=W_CANCELLATION,
                    offending=BitVector(n, res.offender.z),
                )
            )
        return verdict

    itan = CycScalar.i_unit(level) * tan_const(level)
    sec = sec_const(level)
    powers = [CycScalar.one(level)]
    for _ in range(n):
        powers.append(powers[-1] * itan)

    verdict = Verdict(passed=True)
    work = 0
    for a in _nonzero_x_components(stab):
        w = a.bit_count()
        zj = _z_subcode_on(stab.z_space, a, n)
        elems = [(m, stab.z_sign(m)) for m in zj.enumerate_masks(max_enum)]
        work += (1 << w) * max(1, len(elems))
        if work > max_enum:
            raise EnumerationCapExceeded(work, max_enum, "Z-rotation conditions")
        total = CycScalar.zero(level)
        for m, sgn in elems:
            term = powers[m.bit_count()]
            total = total + (term if sgn == 1 else -term)
        wit = Witness(a=BitVector(n, a))
        if total != sec ** w:
            wit.violation = SEC_SUM
            wit.offending = BitVector(n, a)
            verdict.witnesses.append(wit)
            verdict.passed = False
            return verdict
        # cancellation over every y inside supp(a) not in the subcode
        sub = a
        y = a
        while True:
            if y and not zj.contains(y):
                total = CycScalar.zero(level)
                for m, sgn in elems:
                    term = powers[(m ^ y).bit_count()]
                    total = total + (term if sgn == 1 else -term)
                if not total.is_zero():
                    wit.violation = W_CANCELLATION
                    wit.offending = BitVector(n, y)
                    verdict.witnesses.append(wit)
                    verdict.passed = False
                    return verdict
            if y == 0:
                break
            y = (y - 1) & sub
        verdict.witnesses.append(wit)
        verdict.checked += 1
    return verdict


def _nonzero_x_components(stab: StabilizerCode):
    space = stab.x_space
    seen = set(space.basis)
    for m in space.basis:
        yield m
    cur = 0
    for i in range(1, 1 << space.dim):
        cur ^= space.basis[(i & -i).bit_length() - 1]
        if cur and cur not in seen:
            yield cur
