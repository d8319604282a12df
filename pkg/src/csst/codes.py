"""Stabilizer and CSS code model plus the finite-geometry gate checkers.

The transversal-pattern checker works per X-component a of the stabilizer
group: the support a*t' must have even weight, the pure-Z stabilizers
inside it must contain their punctured dual, and the sign character
chi(z) = eps_z * (-1)^(w(z)/2 + t7.z) must vanish (i.e. equal +1) on a
self-dual certificate.  Given the first three facts, chi is a quadratic
refinement of the overlap form on the quotient by the punctured dual and
a sign-valid certificate exists exactly when its Arf invariant is 0, so
the checker is decision-equivalent to expanding the projector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence, Union

from .gf2 import (
    DEFAULT_MAX_ENUM,
    BitVector,
    EnumerationCapExceeded,
    Subspace,
    invert_matrix,
    mask_to_string,
    min_weight,
    parity,
    puncture,
    self_dual_certificate,
    solve_linear_system,
    unpuncture,
)
from .pauli import PauliOp

ODD_WEIGHT = "ODD_WEIGHT"
NO_SELF_DUAL = "NO_SELF_DUAL"
WRONG_SIGN = "WRONG_SIGN"


class CodeConstructionError(Exception):
    """A code builder's conditions failed; carries the offending vector."""

    def __init__(self, message: str, witness: Optional[BitVector] = None):
        super().__init__(message)
        self.witness = witness


@dataclass
class Witness:
    """Per-X-component outcome: a certificate on pass, a tag on violation."""

    a: BitVector
    certificate: Optional[Subspace] = None
    violation: Optional[str] = None
    offending: Optional[BitVector] = None

    @property
    def ok(self) -> bool:
        return self.violation is None


@dataclass
class Verdict:
    passed: bool
    witnesses: list[Witness] = field(default_factory=list)
    capped: bool = False
    checked: int = 0
    total: int = 0

    def __bool__(self) -> bool:
        return self.passed

    def first_violation(self) -> Optional[Witness]:
        for w in self.witnesses:
            if not w.ok:
                return w
        return None


class StabilizerCode:
    """A stabilizer group given by r independent signed Hermitian Paulis."""

    def __init__(self, generators: Sequence[PauliOp], name: str = ""):
        gens = list(generators)
        if not gens:
            raise ValueError("need at least one generator")
        n = gens[0].n
        for g in gens:
            if g.n != n:
                raise ValueError("generators on differing qubit counts")
            if not g.is_hermitian():
                raise ValueError(f"generator {g} is not Hermitian")
        for g, h in itertools.combinations(gens, 2):
            if g.symplectic_inner(h):
                raise ValueError(f"generators {g} and {h} anticommute")
        joint = Subspace(2 * n, [g.x | (g.z << n) for g in gens])
        if joint.dim != len(gens):
            raise ValueError("generators are not independent")
        self.n = n
        self.generators = tuple(gens)
        self.name = name

    @property
    def r(self) -> int:
        return len(self.generators)

    @property
    def k(self) -> int:
        return self.n - self.r

    @cached_property
    def _reduced(self) -> tuple[list[PauliOp], list[PauliOp]]:
        """(rows with independent X-parts in RREF, pure-Z rows in Z-RREF).

        Row operations are group multiplications, so signs stay exact.
        """
        mixed: list[PauliOp] = []
        pivots: list[int] = []
        pure_z: list[PauliOp] = []
        for g in self.generators:
            for row, p in zip(list(mixed), list(pivots)):
                if (g.x >> p) & 1:
                    g = g.multiply(row)
            if g.x == 0:
                pure_z.append(g)
                continue
            p = (g.x & -g.x).bit_length() - 1
            idx = 0
            while idx < len(pivots) and pivots[idx] < p:
                idx += 1
            mixed.insert(idx, g)
            pivots.insert(idx, p)
            for j in range(len(mixed)):
                if j != idx and (mixed[j].x >> p) & 1:
                    mixed[j] = mixed[j].multiply(g)

        zrows: list[PauliOp] = []
        zpiv: list[int] = []
        for g in pure_z:
            for row, p in zip(list(zrows), list(zpiv)):
                if (g.z >> p) & 1:
                    g = g.multiply(row)
            if g.z == 0:
                continue  # dependent; cannot happen for independent gens
            p = (g.z & -g.z).bit_length() - 1
            idx = 0
            while idx < len(zpiv) and zpiv[idx] < p:
                idx += 1
            zrows.insert(idx, g)
            zpiv.insert(idx, p)
            for j in range(len(zrows)):
                if j != idx and (zrows[j].z >> p) & 1:
                    zrows[j] = zrows[j].multiply(g)
        return mixed, zrows

    @cached_property
    def x_space(self) -> Subspace:
        """X-components of all stabilizer elements."""
        mixed, _ = self._reduced
        return Subspace(self.n, [g.x for g in mixed])

    @cached_property
    def z_space(self) -> Subspace:
        """Vectors z with +-E(0,z) in the group."""
        _, zrows = self._reduced
        return Subspace(self.n, [g.z for g in zrows])

    def z_sign(self, mask: int) -> int:
        """Sign of E(0, mask) in the group; mask must lie in z_space."""
        _, zrows = self._reduced
        sign = 1
        for row in zrows:
            p = (row.z & -row.z).bit_length() - 1
            if (mask >> p) & 1:
                mask ^= row.z
                sign *= row.sign
        if mask:
            raise ValueError("vector is not a Z-stabilizer")
        return sign

    def z_elements(self, cap: int = DEFAULT_MAX_ENUM) -> list[tuple[int, int]]:
        """All (mask, sign) of the pure-Z subgroup, Gray order."""
        _, zrows = self._reduced
        if 1 << len(zrows) > cap:
            raise EnumerationCapExceeded(1 << len(zrows), cap, "Z subgroup")
        out = [(0, 1)]
        mask, sign = 0, 1
        for i in range(1, 1 << len(zrows)):
            row = zrows[(i & -i).bit_length() - 1]
            mask ^= row.z
            sign *= row.sign
            out.append((mask, sign))
        return out

    def x_fiber_reps(self, cap: int = DEFAULT_MAX_ENUM) -> list[PauliOp]:
        """One group element per X-component (Gray order, identity first)."""
        mixed, _ = self._reduced
        if 1 << len(mixed) > cap:
            raise EnumerationCapExceeded(1 << len(mixed), cap, "X fibers")
        reps = [PauliOp.identity(self.n)]
        cur = reps[0]
        for i in range(1, 1 << len(mixed)):
            cur = cur.multiply(mixed[(i & -i).bit_length() - 1])
            reps.append(cur)
        return reps

    def elements(self, cap: int = DEFAULT_MAX_ENUM) -> Iterator[PauliOp]:
        """All 2^r elements of the group."""
        if 1 << self.r > cap:
            raise EnumerationCapExceeded(1 << self.r, cap, "stabilizer group")
        z_elems = self.z_elements(cap)
        for rep in self.x_fiber_reps(cap):
            for zmask, zsign in z_elems:
                yield rep.multiply(PauliOp(self.n, 0, zmask, 0 if zsign == 1 else 4))

    def group_contains(self, op: PauliOp) -> bool:
        """Exact membership with sign."""
        if op.n != self.n or not op.is_hermitian():
            return False
        mixed, zrows = self._reduced
        for row in mixed:
            p = (row.x & -row.x).bit_length() - 1
            if (op.x >> p) & 1:
                op = op.multiply(row)
        if op.x:
            return False
        for row in zrows:
            p = (row.z & -row.z).bit_length() - 1
            if (op.z >> p) & 1:
                op = op.multiply(row)
        return op.z == 0 and op.phase == 0

    def same_group(self, other: "StabilizerCode") -> bool:
        return (
            self.n == other.n
            and self.r == other.r
            and all(self.group_contains(g) for g in other.generators)
        )

    def conjugate_by_x(self, xmask: int) -> "StabilizerCode":
        """Conjugate the whole group by E(x, 0); only signs can change."""
        gens = [
            PauliOp(self.n, g.x, g.z, g.phase + 4 * parity(xmask & g.z))
            for g in self.generators
        ]
        return StabilizerCode(gens, name=self.name)

    def __repr__(self) -> str:
        return f"StabilizerCode(n={self.n}, k={self.k}{', ' + self.name if self.name else ''})"


class CssCode:
    """CSS code: X-type generators from C2, Z-type from C_Z, plus logicals."""

    def __init__(
        self,
        n: int,
        x_gens: Sequence[int],
        z_gens: Sequence[int],
        x_signs: Optional[Sequence[int]] = None,
        z_signs: Optional[Sequence[int]] = None,
        logical_x: Optional[Sequence[int]] = None,
        logical_z: Optional[Sequence[int]] = None,
        name: str = "",
    ):
        self.n = n
        self.x_gens = tuple(int(m) for m in x_gens)
        self.z_gens = tuple(int(m) for m in z_gens)
        self.x_signs = tuple(x_signs) if x_signs else (1,) * len(self.x_gens)
        self.z_signs = tuple(z_signs) if z_signs else (1,) * len(self.z_gens)
        if len(self.x_signs) != len(self.x_gens) or len(self.z_signs) != len(self.z_gens):
            raise ValueError("sign count mismatch")
        self.name = name
        for x in self.x_gens:
            for z in self.z_gens:
                if parity(x & z):
                    raise ValueError(
                        f"X generator {mask_to_string(x, n)} anticommutes with "
                        f"Z generator {mask_to_string(z, n)}"
                    )
        if self.c2_space.dim != len(self.x_gens) or self.cz_space.dim != len(self.z_gens):
            raise ValueError("generators are not independent")
        if not self.c1_space.contains_space(self.c2_space):
            raise ValueError("C2 not contained in C1")  # same as commutation
        lx = None if logical_x is None else [int(m) for m in logical_x]
        lz = None if logical_z is None else [int(m) for m in logical_z]
        if lx is None or lz is None:
            lx, lz = self._derive_logicals(lx, lz)
        self.logical_x = tuple(lx)
        self.logical_z = tuple(lz)
        self._validate_logicals()

    # --- derived spaces ---

    @cached_property
    def c2_space(self) -> Subspace:
        return Subspace(self.n, self.x_gens)

    @cached_property
    def cz_space(self) -> Subspace:
        return Subspace(self.n, self.z_gens)

    @cached_property
    def c1_space(self) -> Subspace:
        return self.cz_space.dual()

    @cached_property
    def c2_perp_space(self) -> Subspace:
        return self.c2_space.dual()

    @property
    def k(self) -> int:
        return self.c1_space.dim - self.c2_space.dim

    @property
    def r(self) -> int:
        return len(self.x_gens) + len(self.z_gens)

    def _derive_logicals(
        self, lx: Optional[list[int]] = None, lz: Optional[list[int]] = None
    ) -> tuple[list[int], list[int]]:
        """Complete coset bases for C1/C2 and C2-perp/C1-perp, paired so
        that x_i . z_j = delta_ij.  Either side may be prescribed."""

        def complete(preset, full: Subspace, mod_gens) -> list[int]:
            out = list(preset or [])
            span = Subspace(self.n, list(mod_gens) + out)
            for m in full.basis:
                if not span.contains(m):
                    out.append(m)
                    span = Subspace(self.n, list(span.basis) + [m])
            return out

        lx = complete(lx, self.c1_space, self.x_gens)
        lz_raw = complete(lz, self.c2_perp_space, self.z_gens)
        k = len(lx)
        if len(lz_raw) != k:
            raise ValueError("logical X/Z dimension mismatch")
        if k == 0:
            return [], []
        # transform the Z side so that x_i . z_j = delta_ij
        pairing = [
            sum(parity(lx[i] & lz_raw[j]) << j for j in range(k)) for i in range(k)
        ]
        inv = invert_matrix(pairing, k)
        new_lz = []
        for i in range(k):
            acc = 0
            for j in range(k):
                if (inv[j] >> i) & 1:
                    acc ^= lz_raw[j]
            new_lz.append(acc)
        return lx, new_lz

    def _validate_logicals(self) -> None:
        if len(self.logical_x) != self.k or len(self.logical_z) != self.k:
            raise ValueError(f"expected {self.k} logical pairs")
        for i, x in enumerate(self.logical_x):
            if not self.c1_space.contains(x) or self.c2_space.contains(x):
                raise ValueError(f"logical X {i + 1} invalid")
        for i, z in enumerate(self.logical_z):
            if not self.c2_perp_space.contains(z) or self.cz_space.contains(z):
                raise ValueError(f"logical Z {i + 1} invalid")
        for i, x in enumerate(self.logical_x):
            for j, z in enumerate(self.logical_z):
                if parity(x & z) != (1 if i == j else 0):
                    raise ValueError(f"logical pairing broken at ({i + 1},{j + 1})")

    @cached_property
    def stabilizer(self) -> StabilizerCode:
        gens = [
            PauliOp(self.n, x, 0, 0 if s == 1 else 4)
            for x, s in zip(self.x_gens, self.x_signs)
        ] + [
            PauliOp(self.n, 0, z, 0 if s == 1 else 4)
            for z, s in zip(self.z_gens, self.z_signs)
        ]
        return StabilizerCode(gens, name=self.name)

    def conjugate_by_x(self, xmask: int) -> "CssCode":
        z_signs = [
            s * (-1) ** parity(xmask & z) for z, s in zip(self.z_gens, self.z_signs)
        ]
        return CssCode(
            self.n, self.x_gens, self.z_gens, self.x_signs, z_signs,
            self.logical_x, self.logical_z, name=self.name,
        )

    def __repr__(self) -> str:
        return f"CssCode(n={self.n}, k={self.k}{', ' + self.name if self.name else ''})"


CodeLike = Union[StabilizerCode, CssCode]


def as_stabilizer(code: CodeLike) -> StabilizerCode:
    return code.stabilizer if isinstance(code, CssCode) else code


# --- support-restricted Z stabilizers and the sign character ---


def _z_subcode_on(space: Subspace, support: int, n: int) -> Subspace:
    """Subcode {z in space : z contained in support}."""
    outside = [m & ~support for m in space.basis]
    k = len(outside)
    if k == 0:
        return Subspace(n)
    # kernel of the coefficient map onto the outside coordinates
    rows = []
    for bit in range(n):
        if (support >> bit) & 1:
            continue
        rows.append(sum(((m >> bit) & 1) << i for i, m in enumerate(outside)))
    kernel = Subspace(k, rows).dual()
    gens = []
    for combo in kernel.basis:
        acc = 0
        for i in range(k):
            if (combo >> i) & 1:
                acc ^= space.basis[i]
        gens.append(acc)
    return Subspace(n, gens)


def _chi(code: StabilizerCode, z: int, t7: int) -> int:
    """+1 iff E(0,z) carries the sign i^(w(z) + 2 t7.z) required by the gate."""
    w = z.bit_count()
    if w % 2:
        raise ValueError("sign character needs even weight")
    target = (-1) ** (((w // 2) + parity(t7 & z)) % 2)
    return code.z_sign(z) * target


def _x_component_order(space: Subspace) -> Iterator[int]:
    """Nonzero X-components: basis vectors first, then the rest of the span."""
    basis = set(space.basis)
    for m in space.basis:
        yield m
    cur = 0
    for i in range(1, 1 << space.dim):
        cur ^= space.basis[(i & -i).bit_length() - 1]
        if cur and cur not in basis:
            yield cur


def _check_one_support(
    code: StabilizerCode, a: int, t1: int, t7: int, strict_signs: bool
) -> Witness:
    n = code.n
    wit = Witness(a=BitVector(n, a))
    s = a & (t1 | t7)
    w = s.bit_count()
    if w % 2:
        wit.violation = ODD_WEIGHT
        wit.offending = BitVector(n, a)
        return wit
    support = BitVector(n, s)
    zj = _z_subcode_on(code.z_space, s, n)
    if w == 0:
        wit.certificate = Subspace(n)
        return wit

    zt = puncture(zj, support)
    dual = zt.dual()
    if not zt.contains_space(dual):
        bad = next(m for m in dual.basis if not zt.contains(m))
        wit.violation = NO_SELF_DUAL
        wit.offending = unpuncture(Subspace(w, [bad]), support).vectors()[0]
        return wit

    s_bits = [i for i in range(n) if (s >> i) & 1]

    def embed(mask: int) -> int:
        out = 0
        for j, bit in enumerate(s_bits):
            if (mask >> j) & 1:
                out |= 1 << bit
        return out

    # necessary sign condition: chi trivial on the punctured dual
    for m in dual.basis:
        if _chi(code, embed(m), t7) != 1:
            wit.violation = WRONG_SIGN
            wit.offending = BitVector(n, embed(m))
            return wit

    if strict_signs:
        wit.certificate = self_dual_certificate(zj, support)
        return wit

    # quotient Z~/dual carries a nondegenerate overlap form; chi induces a
    # quadratic refinement q, and a sign-valid self-dual certificate exists
    # iff Arf(q) = 0
    comp: list[int] = []
    span = dual
    for m in zt.basis:
        if not span.contains(m):
            comp.append(m)
            span = Subspace(w, list(span.basis) + [m])

    def q(mask: int) -> int:
        return 0 if _chi(code, embed(mask), t7) == 1 else 1

    blocks: list[tuple[int, int]] = []
    rest = comp
    while rest:
        u = rest[0]
        partner = None
        for idx in range(1, len(rest)):
            if parity(u & rest[idx]):
                partner = idx
                break
        if partner is None:
            raise AssertionError("overlap form degenerate on the quotient")
        v = rest[partner]
        new_rest = []
        for idx in range(1, len(rest)):
            if idx == partner:
                continue
            m = rest[idx]
            if parity(m & v):
                m ^= u
            if parity(m & u):
                m ^= v
            new_rest.append(m)
        blocks.append((u, v))
        rest = new_rest

    arf = sum(q(u) & q(v) for u, v in blocks) % 2
    if arf:
        u, v = next(b for b in blocks if q(b[0]) and q(b[1]))
        wit.violation = WRONG_SIGN
        wit.offending = BitVector(n, embed(u))
        return wit

    picks: list[int] = []
    bad_blocks = [b for b in blocks if q(b[0]) and q(b[1])]
    good_blocks = [b for b in blocks if not (q(b[0]) and q(b[1]))]
    for u, v in good_blocks:
        for candidate in (u, v, u ^ v):
            if q(candidate) == 0:
                picks.append(candidate)
                break
    for (u1, v1), (u2, v2) in zip(bad_blocks[0::2], bad_blocks[1::2]):
        picks.append(u1 ^ u2)
        picks.append(v1 ^ v2)

    cert = Subspace(w, list(dual.basis) + picks)
    assert cert.dim == w // 2, "certificate dimension off"
    assert all(q(m) == 0 for m in cert.basis), "certificate sign check failed"
    wit.certificate = unpuncture(cert, support)
    return wit


def check_transversal_pattern(
    code: CodeLike,
    t1: BitVector | int,
    t7: BitVector | int,
    strict_signs: bool = False,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> Verdict:
    """Decide whether the T/T-dagger pattern preserves the code space.

    Stops at the first violating X-component; on success every witness
    carries a sign-valid self-dual certificate.  If the X-component space
    is too large the enumeration is truncated (generators first) and the
    verdict is flagged `capped`.
    """
    stab = as_stabilizer(code)
    t1m = t1.mask if isinstance(t1, BitVector) else int(t1)
    t7m = t7.mask if isinstance(t7, BitVector) else int(t7)
    if t1m & t7m:
        raise ValueError("T and T-dagger supports overlap")
    total = (1 << stab.x_space.dim) - 1
    budget = max(stab.x_space.dim, max_enum // max(1, stab.z_space.dim))
    verdict = Verdict(passed=True, total=total)
    for a in _x_component_order(stab.x_space):
        if verdict.checked >= budget:
            verdict.capped = True
            break
        wit = _check_one_support(stab, a, t1m, t7m, strict_signs)
        verdict.checked += 1
        verdict.witnesses.append(wit)
        if not wit.ok:
            verdict.passed = False
            break
    return verdict


def check_transversal_t(
    code: CodeLike, strict_signs: bool = False, max_enum: int = DEFAULT_MAX_ENUM
) -> Verdict:
    """Specialize the pattern checker to T on every qubit."""
    n = as_stabilizer(code).n
    return check_transversal_pattern(
        code, (1 << n) - 1, 0, strict_signs=strict_signs, max_enum=max_enum
    )


def pauli_sign_correction(
    code: CodeLike,
    t1: BitVector | int,
    t7: BitVector | int,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> Optional[BitVector]:
    """Find x so that conjugating by E(x,0) gives every required Z-stabilizer
    the sign the pattern gate needs; None if no single Pauli frame works.

    The support and self-dual-code conditions must already hold; only the
    sign condition may be violated.
    """
    stab = as_stabilizer(code)
    n = stab.n
    t1m = t1.mask if isinstance(t1, BitVector) else int(t1)
    t7m = t7.mask if isinstance(t7, BitVector) else int(t7)
    tprime = t1m | t7m
    rows: list[int] = []
    rhs: list[int] = []
    seen: set[int] = set()
    count = 0
    for a in _x_component_order(stab.x_space):
        count += 1
        if count > max_enum:
            raise EnumerationCapExceeded(count, max_enum, "sign correction")
        s = a & tprime
        if s.bit_count() % 2:
            raise ValueError("even-support condition fails; signs cannot fix it")
        zj = _z_subcode_on(stab.z_space, s, n)
        cert = self_dual_certificate(zj, BitVector(n, s))
        if cert is None:
            raise ValueError("self-dual condition fails; signs cannot fix it")
        for m in cert.basis:
            if m in seen:
                continue
            seen.add(m)
            rows.append(m)
            rhs.append(0 if _chi(stab, m, t7m) == 1 else 1)
    x = solve_linear_system(rows, rhs, n)
    return BitVector(n, x) if x is not None else None


def build_csst(
    c1: Subspace,
    c2: Subspace,
    t1: BitVector | int = -1,
    t7: BitVector | int = 0,
    max_enum: int = DEFAULT_MAX_ENUM,
    name: str = "",
) -> CssCode:
    """Construct CSS(X, C2; Z, C1-perp) with Z signs chosen so the given
    T/T-dagger pattern is a logical operator; raises with a witness when
    the support or self-dual conditions fail.
    """
    n = c1.n
    if c2.n != n:
        raise ValueError("ambient mismatch")
    if not c1.contains_space(c2):
        raise CodeConstructionError("C2 is not contained in C1")
    t1m = t1.mask if isinstance(t1, BitVector) else int(t1)
    if t1m < 0:
        t1m = (1 << n) - 1
    t7m = t7.mask if isinstance(t7, BitVector) else int(t7)
    tprime = t1m | t7m
    cz = c1.dual()

    rows: list[int] = []
    rhs: list[int] = []
    if (1 << c2.dim) > max_enum:
        raise EnumerationCapExceeded(1 << c2.dim, max_enum, "build_csst")
    for x in c2.enumerate_masks():
        if x == 0:
            continue
        s = x & tprime
        if s.bit_count() % 2:
            raise CodeConstructionError(
                "odd pattern support in C2", BitVector(n, x)
            )
        zj = _z_subcode_on(cz, s, n)
        cert = self_dual_certificate(zj, BitVector(n, s))
        if cert is None:
            raise CodeConstructionError(
                "no self-dual code on a C2 support", BitVector(n, x)
            )
        for m in cert.basis:
            rows.append(m)
            rhs.append(((m.bit_count() // 2) + parity(t7m & m)) % 2)
    lam = solve_linear_system(rows, rhs, n)
    if lam is None:
        raise CodeConstructionError("no consistent Z-sign assignment exists")

    # star-product consequence of the self-dual conditions
    for u in c1.basis:
        for v in c2.basis:
            if not cz.contains(u & v):
                raise CodeConstructionError(
                    "C1 * C2 not inside C1-perp", BitVector(n, u & v)
                )

    z_signs = [(-1) ** parity(lam & z) for z in cz.basis]
    code = CssCode(n, list(c2.basis), list(cz.basis), None, z_signs, name=name)
    verdict = check_transversal_pattern(code, t1m, t7m, max_enum=max_enum)
    if not verdict.passed:
        raise CodeConstructionError("constructed code fails its own checker")
    return code


def cssify(code: CodeLike, name: str = "") -> CssCode:
    """Replace a stabilizer code by a CSS code with the same X components
    and the same pure-Z stabilizers (mixed generators lose their Z part).

    Preserves any transversal T/T-dagger pattern verdict; for
    non-degenerate inputs the parameters satisfy [[n, >=k, >=d]].
    """
    stab = as_stabilizer(code)
    mixed, zrows = stab._reduced
    x_gens = [g.x for g in mixed]
    x_signs = [g.sign if g.z == 0 else 1 for g in mixed]
    z_gens = [g.z for g in zrows]
    z_signs = [g.sign for g in zrows]
    return CssCode(
        stab.n, x_gens, z_gens, x_signs, z_signs,
        name=name or (stab.name + "-css" if stab.name else ""),
    )


def code_distance(code: CodeLike, cap: int = DEFAULT_MAX_ENUM) -> int:
    """Exact minimum distance by brute force over the normalizer mod group."""
    if isinstance(code, CssCode):
        if code.k == 0:
            raise ValueError("distance undefined for k = 0")
        dx = min_weight(code.c1_space, code.c2_space, cap)
        dz = min_weight(code.c2_perp_space, code.cz_space, cap)
        return min(dx, dz)
    stab = code
    if stab.k == 0:
        raise ValueError("distance undefined for k = 0")
    n = stab.n
    constraints = [g.z | (g.x << n) for g in stab.generators]
    normalizer = Subspace(2 * n, constraints).dual()
    group = Subspace(2 * n, [g.x | (g.z << n) for g in stab.generators])
    if 1 << normalizer.dim > cap:
        raise EnumerationCapExceeded(1 << normalizer.dim, cap, "normalizer")
    low = (1 << n) - 1
    best = n + 1
    for m in normalizer.enumerate_masks():
        if m == 0 or group.contains(m):
            continue
        w = ((m & low) | (m >> n)).bit_count()
        if w < best:
            best = w
    return best


def is_nondegenerate(code: CodeLike, d: int, cap: int = DEFAULT_MAX_ENUM) -> bool:
    """True iff every non-identity stabilizer element has weight >= d."""
    stab = as_stabilizer(code)
    for el in stab.elements(cap):
        if (el.x | el.z) and el.weight() < d:
            return False
    return True
