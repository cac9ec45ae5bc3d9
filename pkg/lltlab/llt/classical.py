"""
lltlab - LLT Polynomials by Enumeration
=======================================
Parking-function sums over a Dyck path, column parking function sums,
permutation sums over a marked path, and the full shuffle sum giving
nabla e_n.
"""

from __future__ import annotations
import logging
from collections import Counter, defaultdict
from itertools import accumulate, permutations
from typing import Dict, FrozenSet, List, Tuple

from ..dyck import (
    iter_statistics, iter_cpf_statistics, descent_composition, path_dinvset, corners,
    enum_dyck, forced_pairs,
)
from ..models import Basis, Composition, DyckPath, MarkedPath, Partition, InputError
from ..ring import R, q
from ..symfunc import SymF, partitions_of, straighten_schur, assert_polynomial_e_expansion

logger = logging.getLogger(__name__)

MAX_ENUM_SIZE = 8
MAX_NABLA_SIZE = 7


def _check_bound(n: int, bound: int, what: str):
    if n > bound:
        raise InputError(f"{what} enumerates too much at n={n} (limit {bound})")


def _schur_from_counts(counts: Dict[Partition, Counter], context: str) -> SymF:
    """Counts keyed by (q-degree, t-degree) -> SymF in the Schur basis"""
    terms = {}
    for la, by_degree in counts.items():
        poly = R.from_dict({deg: c for deg, c in by_degree.items() if c})
        if poly:
            terms[la] = poly
    F = SymF(Basis.S, terms)
    assert_polynomial_e_expansion(F, context)
    return F


def _accumulate(counts: Dict[Partition, Counter], pides, degree: Tuple[int, int]):
    straight = straighten_schur(pides)
    if straight is None:
        return
    sign, la = straight
    counts[la][degree] += sign


def llt_classical(D: DyckPath) -> SymF:
    """Sum of q^dinv s_pides over the parking functions supported by D"""
    _check_bound(D.n, MAX_ENUM_SIZE, "llt_classical")
    counts: Dict[Partition, Counter] = defaultdict(Counter)
    for dinv, pides in iter_statistics(D):
        _accumulate(counts, pides, (dinv, 0))
    return _schur_from_counts(counts, f"llt_classical({D})")


def llt_marked(M: MarkedPath) -> SymF:
    """Sum over Z,T-compatible permutations of q^dinv s_pides.

    sigma is compatible when sigma_{n+1-r} < sigma_{n+1-s} for every mark
    (r, s); a pair (i, j) of the path dinvset counts when
    sigma_{n+1-j} > sigma_{n+1-i}.
    """
    Z, marks = M.path, M.marks
    n = Z.n
    _check_bound(n, MAX_ENUM_SIZE, "llt_marked")
    if not marks <= corners(Z):
        extra = sorted(marks - corners(Z))
        raise InputError(f"marks {extra} are not corners of {Z}")
    pairs = [(n - i, n - j) for i, j in sorted(path_dinvset(Z))]
    constraints = [(n - r, n - s) for r, s in sorted(marks)]
    counts: Dict[Partition, Counter] = defaultdict(Counter)
    for sigma in permutations(range(1, n + 1)):
        if any(sigma[r] >= sigma[s] for r, s in constraints):
            continue
        dinv = sum(1 for i, j in pairs if sigma[j] > sigma[i])
        _accumulate(counts, descent_composition(sigma), (dinv, 0))
    return _schur_from_counts(counts, f"llt_marked({M.key()})")


def _cuts(parts) -> FrozenSet[int]:
    return frozenset(accumulate(parts[:-1]))


def _from_fundamentals(counts: Dict[Composition, Counter], n: int, context: str) -> SymF:
    """sum_alpha c_alpha F_alpha, read off on the monomials m_la; the sum must be symmetric"""
    terms = {}
    for la in partitions_of(n):
        refined = _cuts(la)
        total: Counter = Counter()
        for alpha, by_degree in counts.items():
            if _cuts(alpha) <= refined:
                total.update(by_degree)
        poly = R.from_dict({deg: c for deg, c in total.items() if c})
        if poly:
            terms[la] = poly
    F = SymF(Basis.M, terms).to(Basis.S)
    assert_polynomial_e_expansion(F, context)
    return F


def llt_column(D: DyckPath, T=None) -> SymF:
    """Sum of q^dinv F_pides over the column parking functions on D increasing across T"""
    _check_bound(D.n, MAX_ENUM_SIZE, "llt_column")
    T = forced_pairs(D) if T is None else frozenset(T)
    counts: Dict[Composition, Counter] = defaultdict(Counter)
    for dinv, pides in iter_cpf_statistics(D, T):
        counts[pides][(dinv, 0)] += 1
    return _from_fundamentals(counts, D.n, f"llt_column({D}, {sorted(T)})")


def nabla_en(n: int) -> SymF:
    """nabla e_n via the shuffle sum of q^dinv t^area s_pides"""
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    _check_bound(n, MAX_NABLA_SIZE, "nabla_en")
    counts: Dict[Partition, Counter] = defaultdict(Counter)
    for D in enum_dyck(n):
        area = D.area
        for dinv, pides in iter_statistics(D):
            _accumulate(counts, pides, (dinv, area))
    logger.info("nabla e_%d summed over %d Dyck paths", n, len(enum_dyck(n)))
    return _schur_from_counts(counts, f"nabla_en({n})")


def unicellular_search(target: SymF, n: int) -> List[Tuple[DyckPath, int]]:
    """Paths Z of size n whose unmarked LLT equals q^c * target, with c"""
    hits: List[Tuple[DyckPath, int]] = []
    target_e = target.to(Basis.E)
    for Z in enum_dyck(n):
        value = llt_marked(MarkedPath(Z, frozenset())).to(Basis.E)
        for c in range(n * (n - 1) // 2 + 1):
            if value == target_e.scale(q**c):
                hits.append((Z, c))
                break
    return hits
