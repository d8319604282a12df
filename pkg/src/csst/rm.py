"""Monomial evaluation codes: Reed-Muller generators, quantum RM codes,
decreasing monomial codes, and the catalog of built-in example codes.

Evaluation convention: with m binary variables, x_1 is the least
significant bit, so coordinate p+1 of ev(f) (p = 0..2^m-1) is f evaluated
at the point whose bit i-1 of p is x_i.
"""

from __future__ import annotations

import itertools
from math import comb, factorial
from typing import FrozenSet, Iterable, Union

from .codes import CssCode, StabilizerCode
from .gf2 import BitMatrix, BitVector, Subspace

Monomial = FrozenSet[int]


def ev_monomial(variables: Iterable[int], m: int) -> int:
    """Evaluation mask of a monomial over all 2^m points."""
    vs = frozenset(variables)
    for v in vs:
        if not 1 <= v <= m:
            raise ValueError(f"variable x_{v} outside x_1..x_{m}")
    mask = 0
    for p in range(1 << m):
        if all((p >> (v - 1)) & 1 for v in vs):
            mask |= 1 << p
    return mask


def ev(f: Iterable[Iterable[int]], m: int) -> int:
    """Evaluation mask of a polynomial given as a collection of monomials."""
    mask = 0
    for mono in f:
        mask ^= ev_monomial(mono, m)
    return mask


def monomials_of_degree(t: int, m: int) -> list[Monomial]:
    """Degree-t monomials in lexicographic order."""
    return [frozenset(c) for c in itertools.combinations(range(1, m + 1), t)]


def monomials_up_to(r: int, m: int) -> list[Monomial]:
    out: list[Monomial] = []
    for t in range(r + 1):
        out.extend(monomials_of_degree(t, m))
    return out


def rm_generator(r: int, m: int) -> BitMatrix:
    """Generator matrix of RM(r, m): one row per monomial of degree <= r."""
    if not 0 <= r <= m:
        raise ValueError("need 0 <= r <= m")
    n = 1 << m
    return BitMatrix.from_masks(n, [ev_monomial(mono, m) for mono in monomials_up_to(r, m)])


def rm_subspace(r: int, m: int) -> Subspace:
    if r < 0:
        return Subspace(1 << m)
    return Subspace(1 << m, rm_generator(r, m).masks)


def qrm_code(r: int, m: int) -> CssCode:
    """Quantum Reed-Muller code with X side RM(r-1,m), Z side RM(m-r-1,m).

    Logical X operators are the degree-r monomials in lexicographic order;
    each pairs with its complementary monomial on the Z side.
    """
    if not 1 <= r <= m:
        raise ValueError("need 1 <= r <= m")
    n = 1 << m
    x_gens = [ev_monomial(mono, m) for mono in monomials_up_to(r - 1, m)]
    z_gens = [ev_monomial(mono, m) for mono in monomials_up_to(m - r - 1, m)]
    all_vars = frozenset(range(1, m + 1))
    logical_x = [ev_monomial(mono, m) for mono in monomials_of_degree(r, m)]
    logical_z = [
        ev_monomial(all_vars - mono, m) for mono in monomials_of_degree(r, m)
    ]
    return CssCode(
        n, x_gens, z_gens, logical_x=logical_x, logical_z=logical_z,
        name=f"qrm({r},{m})",
    )


def _decreasing_predecessors(mono: Monomial) -> Iterable[Monomial]:
    for v in mono:
        yield mono - {v}
        if v > 1 and (v - 1) not in mono:
            yield (mono - {v}) | {v - 1}


def validate_decreasing(monomials: Iterable[Iterable[int]]) -> list[Monomial]:
    """Check closure under the decreasing partial order (divisibility plus
    lowering a variable index at equal degree); returns the normalized set."""
    monos = {frozenset(mo) for mo in monomials}
    for mono in monos:
        for pred in _decreasing_predecessors(mono):
            if pred not in monos:
                missing = "".join(f"x{v}" for v in sorted(pred)) or "1"
                raise ValueError(f"set is not decreasing: missing {missing}")
    return sorted(monos, key=lambda s: (len(s), sorted(s)))


def decreasing_monomial_code(monomials: Iterable[Iterable[int]], m: int) -> Subspace:
    """Span of the evaluations of a decreasing monomial set."""
    monos = validate_decreasing(monomials)
    return Subspace(1 << m, [ev_monomial(mono, m) for mono in monos])


# --- catalog ---


def _shorten(mask: int) -> int:
    """Drop the first coordinate (the all-zero evaluation point)."""
    return mask >> 1


def _code_622() -> CssCode:
    z = [0b000011, 0b001100, 0b110000]
    return CssCode(
        6,
        x_gens=[0b111111],
        z_gens=z,
        z_signs=[-1, -1, -1],
        logical_x=[0b000011, 0b001100],
        name="622",
    )


def _code_1513() -> CssCode:
    m = 4
    x_gens = [_shorten(ev_monomial({i}, m)) for i in range(1, 5)]
    z_gens = x_gens + [
        _shorten(ev_monomial({i, j}, m))
        for i, j in itertools.combinations(range(1, 5), 2)
    ]
    ones = (1 << 15) - 1
    return CssCode(
        15, x_gens, z_gens, logical_x=[ones], logical_z=[ones], name="1513"
    )


def _grid_mask(qubits: Iterable[int]) -> int:
    mask = 0
    for q in qubits:
        mask |= 1 << (q - 1)
    return mask


def _code_1632_bacon_shor() -> CssCode:
    # 4x4 grid, qubits numbered row-major 1..16
    rows12 = _grid_mask(range(1, 9))
    rows23 = _grid_mask(range(5, 13))
    rows34 = _grid_mask(range(9, 17))
    plaquettes = [
        _grid_mask((i, i + 1, i + 4, i + 5)) for i in (1, 2, 3, 5, 6, 7, 9, 10, 11)
    ]
    row2 = _grid_mask((5, 6, 7, 8))
    logical_x = [
        _grid_mask((1, 2, 3, 4)),
        _grid_mask((1, 2, 5, 6, 9, 10, 13, 14)),
        _grid_mask((2, 3, 6, 7, 10, 11, 14, 15)),
    ]
    logical_z = [
        _grid_mask((1, 5, 9, 13)),
        _grid_mask((2, 3)),
        _grid_mask((1, 2)),
    ]
    return CssCode(
        16,
        x_gens=[rows12, rows23, rows34],
        z_gens=plaquettes + [row2],
        logical_x=logical_x,
        logical_z=logical_z,
        name="1632_bacon_shor",
    )


def _code_1632_monomial() -> CssCode:
    m = 4
    g2 = [(), (1,), (2,)]
    g1_perp = [(), (1,), (2,), (3,), (4,), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
    gx = [(3,), (4,), (1, 2)]
    gz = [(1, 2, 4), (1, 2, 3), (3, 4)]
    return CssCode(
        16,
        x_gens=[ev_monomial(mo, m) for mo in g2],
        z_gens=[ev_monomial(mo, m) for mo in g1_perp],
        logical_x=[ev_monomial(mo, m) for mo in gx],
        logical_z=[ev_monomial(mo, m) for mo in gz],
        name="1632_monomial",
    )


_CATALOG = {
    "622": _code_622,
    "832": lambda: qrm_code(1, 3),
    "1513": _code_1513,
    "1632_bacon_shor": _code_1632_bacon_shor,
    "1632_monomial": _code_1632_monomial,
    "64154": lambda: qrm_code(2, 6),
    "128214": lambda: qrm_code(2, 7),
    "512848": lambda: qrm_code(3, 9),
}


def catalog_names() -> list[str]:
    return sorted(_CATALOG)


def catalog(name: str) -> Union[StabilizerCode, CssCode]:
    """Construct a built-in example code by name."""
    try:
        builder = _CATALOG[name]
    except KeyError:
        raise KeyError(
            f"unknown catalog code {name!r}; available: {', '.join(catalog_names())}"
        ) from None
    code = builder()
    if isinstance(code, CssCode) and not code.name:
        code.name = name
    return code


def rm_selfdual_half_degree(m: int) -> Subspace:
    """The self-dual code generated by all monomials of degree < m/2 plus the
    first half of the degree-m/2 monomials in lexicographic order (m even)."""
    if m % 2:
        raise ValueError("m must be even")
    half = monomials_of_degree(m // 2, m)
    take = half[: len(half) // 2]
    gens = [ev_monomial(mo, m) for mo in monomials_up_to(m // 2 - 1, m)]
    gens += [ev_monomial(mo, m) for mo in take]
    return Subspace(1 << m, gens)


def qrm_term_count(m: int, r: int) -> int:
    """Closed-form number of blocks-of-size-r partitions of m variables."""
    if m % r:
        raise ValueError("r must divide m")
    return factorial(m) // (factorial(r) ** (m // r) * factorial(m // r))


def rm_dimension(r: int, m: int) -> int:
    return sum(comb(m, t) for t in range(r + 1))
