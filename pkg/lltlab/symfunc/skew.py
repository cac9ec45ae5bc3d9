"""
lltlab - Skewing and Functionals
================================
Schur straightening, e/h skewing operators, omega, the Hall scalar
product and the p_1 derivative.
"""

from __future__ import annotations
from collections import defaultdict
from itertools import combinations, product
from typing import Dict, Iterator, Optional, Tuple

from ..models import Basis, Partition, InputError
from ..ring import K
from .basis import SymF, convert_basis
from .partitions import horizontal_strips, vertical_strips, sign_of_cycle_type


def straighten_schur(alpha) -> Optional[Tuple[int, Partition]]:
    """Straighten a composition-indexed Schur function.

    Returns ``(sign, partition)`` or None when s_alpha vanishes.
    """
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise InputError(f"straightening needs nonnegative entries: {list(alpha)}")
    ell = len(alpha)
    shifted = [a + ell - 1 - i for i, a in enumerate(alpha)]
    if len(set(shifted)) != ell:
        return None
    # sign of the sorting permutation = parity of inversions
    inversions = sum(1 for i in range(ell) for j in range(i + 1, ell) if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    parts = [b - (ell - 1 - i) for i, b in enumerate(ordered)]
    return (-1) ** inversions, Partition(x for x in parts if x > 0)


# =============================================================================
# SKEWING
# =============================================================================

def perp_skew(kind: str, r: int, F: SymF) -> SymF:
    """e_r^perp or h_r^perp, computed on the Schur basis"""
    if r < 0:
        raise InputError(f"skewing degree must be nonnegative, got {r}")
    if kind not in ("e", "h"):
        raise InputError(f"skewing operator must be e or h, got {kind!r}")
    strips = vertical_strips if kind == "e" else horizontal_strips
    schur = convert_basis(F, Basis.S)
    result: Dict[Partition, object] = defaultdict(lambda: K.zero)
    for la, coeff in schur.terms.items():
        if la.size < r:
            continue
        for nu in strips(la, r):
            result[nu] += coeff
    return convert_basis(SymF(Basis.S, result), F.basis)


def e_perp_on_e(r: int, mu: Tuple[int, ...]) -> Iterator[Partition]:
    """e_r^perp e_mu as a multiset of e-indices: remove r cells across the factors"""
    for cut in product(*(range(part + 1) for part in mu)):
        if sum(cut) == r:
            yield Partition.from_parts(part - a for part, a in zip(mu, cut))


def h_perp_on_e(s: int, mu: Tuple[int, ...]) -> Iterator[Partition]:
    """h_s^perp e_mu: lower s distinct factors by one"""
    for chosen in combinations(range(len(mu)), s):
        yield Partition.from_parts(part - (i in chosen) for i, part in enumerate(mu))


# =============================================================================
# FUNCTIONALS
# =============================================================================

def omega(F: SymF) -> SymF:
    """The involution e <-> h, s_la <-> s_la'"""
    if F.basis in (Basis.E, Basis.H):
        swapped = Basis.H if F.basis == Basis.E else Basis.E
        return convert_basis(SymF._trusted(swapped, dict(F.terms)), F.basis)
    if F.basis in (Basis.M, Basis.F):
        swapped = Basis.F if F.basis == Basis.M else Basis.M
        return convert_basis(SymF._trusted(swapped, dict(F.terms)), F.basis)
    if F.basis == Basis.P:
        return SymF(Basis.P, {mu: c * sign_of_cycle_type(mu) for mu, c in F.terms.items()})
    return SymF(Basis.S, {la.conjugate(): c for la, c in F.terms.items()})


def hall_scalar(F: SymF, G: SymF):
    """<F, G> with <h_la, m_mu> = delta"""
    left = convert_basis(F, Basis.H)
    right = convert_basis(G, Basis.M)
    total = K.zero
    for index, coeff in left.terms.items():
        other = right.terms.get(index)
        if other is not None:
            total += coeff * other
    return total


def p1_derivative(F: SymF, times: int = 1) -> SymF:
    """d/dp_1 applied ``times`` times"""
    current = convert_basis(F, Basis.P)
    for _ in range(times):
        terms: Dict[Partition, object] = defaultdict(lambda: K.zero)
        for mu, coeff in current.terms.items():
            ones = mu.count(1)
            if ones:
                terms[Partition(mu[:-1])] += coeff * ones
        current = SymF(Basis.P, terms)
    return convert_basis(current, F.basis)


def functionals(which: str, *args):
    table = {"omega": omega, "hall_scalar": hall_scalar, "p1_derivative": p1_derivative}
    if which not in table:
        raise InputError(f"unknown functional: {which!r}")
    return table[which](*args)
