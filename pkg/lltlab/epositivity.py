"""
lltlab - e-Positivity
=====================
The q -> 1+q substitution with e-expansion, the poset expansion of marked
path LLTs, the possible-downset recursion, the no-area staircase
recursion, Kreweras polynomials and the shuffle sum checks.
"""

from __future__ import annotations
import logging
from collections import Counter, defaultdict
from functools import lru_cache
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple, Union

from .dyck import (
    dinvset, forced_pairs, path_dinvset, corners, delete_cells, relabel_pairs, subsets,
)
from .llt import llt_classical, nabla_en
from .models import (
    Basis, DyckPath, MarkedPath, Partition, DownsetReport, ResidualMarks, InputError,
)
from .ring import (
    R, q, t, to_poly, shift_q, is_npoly, q_int, q_pochhammer, q_binomial,
    specialize, evaluate, render_poly,
)
from .symfunc import SymF, plethysm_eval, p1_derivative, h as h_basis, e as e_basis

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
EMPTY = Partition(())

MAX_KREWERAS = 12


# =============================================================================
# E-EXPANSIONS
# =============================================================================

class EExpansion:
    """sum_la a_la(q, t) e_la with polynomial coefficients"""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping = None):
        clean: Dict[Partition, object] = {}
        for index, coeff in (terms or {}).items():
            coeff = to_poly(coeff)
            if coeff:
                index = index if isinstance(index, Partition) else Partition.from_parts(index)
                total = clean[index] + coeff if index in clean else coeff
                if total:
                    clean[index] = total
                else:
                    clean.pop(index, None)
        self.terms = clean

    @property
    def is_positive(self) -> bool:
        return all(is_npoly(c) for c in self.terms.values())

    def total_mass(self):
        """Sum of all coefficients"""
        return sum(self.terms.values(), R.zero)

    def coefficient(self, index: Iterable[int]):
        return self.terms.get(Partition.from_parts(index), R.zero)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def to_symf(self) -> SymF:
        return SymF(Basis.E, self.terms)

    def __add__(self, other: "EExpansion") -> "EExpansion":
        merged = dict(self.terms)
        for index, coeff in other.terms.items():
            merged[index] = merged[index] + coeff if index in merged else coeff
        return EExpansion(merged)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EExpansion):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"EExpansion({self})"

    def __str__(self):
        from .render import render_eexpansion
        return render_eexpansion(self)


def shift_and_e_expand(F: SymF) -> EExpansion:
    """e-expansion of F[X; 1+q]; coefficients must be polynomial"""
    expansion = F.to(Basis.E)
    return EExpansion({la: shift_q(to_poly(c)) for la, c in expansion.terms.items()})


# =============================================================================
# POSET EXPANSION
# =============================================================================

def poset_partition(n: int, relations: Iterable[Pair]) -> Partition:
    """Peel off the downset of the largest remaining label until nothing is left"""
    below: Dict[int, List[int]] = defaultdict(list)
    for a, b in relations:
        below[b].append(a)
    remaining = set(range(1, n + 1))
    parts = []
    while remaining:
        top = max(remaining)
        down = {top}
        stack = [top]
        while stack:
            x = stack.pop()
            for y in below[x]:
                if y in remaining and y not in down:
                    down.add(y)
                    stack.append(y)
        parts.append(len(down))
        remaining -= down
    return Partition.from_parts(parts)


def _resolve_target(target: Union[DyckPath, MarkedPath], marks) -> Tuple[int, FrozenSet[Pair], FrozenSet[Pair]]:
    if isinstance(target, MarkedPath):
        Z = target.path
        T = target.marks if marks is None else frozenset(marks)
        if not T <= corners(Z):
            raise InputError(f"marks {sorted(T - corners(Z))} are not corners of {Z}")
        return Z.n, path_dinvset(Z), T
    forced = forced_pairs(target)
    T = forced if marks is None else frozenset(marks)
    if not T <= forced:
        raise InputError(f"marks {sorted(T - forced)} are not forced pairs of {target}")
    return target.n, dinvset(target), T


def conjecture_expansion(target: Union[DyckPath, MarkedPath], marks=None) -> EExpansion:
    """sum over S in dinvset of q^|S| e_mu(S, T).

    A DyckPath is read classically (dinvset and forced pairs of D); a
    MarkedPath is read as (Z, T) with the path dinvset of Z.
    """
    n, pairs, T = _resolve_target(target, marks)
    counts: Dict[Partition, Counter] = defaultdict(Counter)
    for S in subsets(pairs):
        counts[poset_partition(n, set(S) | T)][len(S)] += 1
    return EExpansion({
        mu: R.from_dict({(size, 0): c for size, c in by_size.items()})
        for mu, by_size in counts.items()
    })


def conjecture_term(target: Union[DyckPath, MarkedPath], S: Iterable[Pair], marks=None) -> Tuple[int, Partition]:
    """The single term (|S|, mu) contributed by one subset S"""
    n, pairs, T = _resolve_target(target, marks)
    S = frozenset(S)
    if not S <= pairs:
        raise InputError(f"{sorted(S - pairs)} are not in the dinvset")
    return len(S), poset_partition(n, S | T)


# =============================================================================
# DOWNSET RECURSION
# =============================================================================

def possible_downsets(Z: DyckPath, T: Iterable[Pair]) -> List[FrozenSet[int]]:
    """Label sets {i_1 < ... < i_k = n} chained by T or dinvset edges and closed under T"""
    T = frozenset(T)
    n = Z.n
    if n == 0:
        return []
    edges = path_dinvset(Z) | T
    below: Dict[int, List[int]] = defaultdict(list)
    for i, j in edges:
        below[j].append(i)
    found: List[FrozenSet[int]] = []

    def extend(chain: Tuple[int, ...]):
        S = frozenset(chain)
        if all(i in S for i, j in T if j in S):
            found.append(S)
        for i in below[chain[-1]]:
            extend(chain + (i,))

    extend((n,))
    return sorted(found, key=lambda S: (len(S), sorted(S)))


def _downset_weight(dots: FrozenSet[Pair], T: FrozenSet[Pair], S: FrozenSet[int]):
    top = max(S)
    free = sum(1 for i, j in dots if i in S and j not in S)
    weight = q**free
    for label in S:
        if label == top:
            continue
        up = sum(1 for s in S if s > label and (label, s) in dots)
        crossed = any((label, s) in T for s in S if s > label)
        weight *= q**up if crossed else q**up - 1
    return weight


def downset_weight(Z: DyckPath, T: Iterable[Pair], S: Iterable[int]):
    """q^free times the product of per-label factors over S minus its top"""
    T, S = frozenset(T), frozenset(S)
    if S not in possible_downsets(Z, T):
        raise InputError(f"{sorted(S)} is not a possible downset of {Z} with marks {sorted(T)}")
    return _downset_weight(path_dinvset(Z), T, S)


def residual_marks(residual: DyckPath, T: FrozenSet[Pair], S: FrozenSet[int], policy: ResidualMarks) -> FrozenSet[Pair]:
    available = corners(residual)
    if policy == ResidualMarks.ALL_CORNERS:
        return available
    inherited = relabel_pairs(T, S)
    if not inherited <= available:
        logger.debug("dropping inherited marks %s that are not corners of %s", sorted(inherited - available), residual)
    return inherited & available


def downset_reports(Z: DyckPath, T: Iterable[Pair], policy: ResidualMarks = ResidualMarks.INHERITED) -> List[DownsetReport]:
    T = frozenset(T)
    dots = path_dinvset(Z)
    reports = []
    for S in possible_downsets(Z, T):
        residual = delete_cells(Z, S)
        reports.append(DownsetReport(
            S=S,
            weight=_downset_weight(dots, T, S),
            residual_path=residual,
            residual_marks=residual_marks(residual, T, S, policy),
        ))
    return reports


@lru_cache(maxsize=None)
def _recursion(word: Tuple[int, ...], marks: Tuple[Pair, ...], policy: ResidualMarks) -> Tuple[Tuple[Partition, object], ...]:
    if not word:
        return ((EMPTY, R.one),)
    acc: Dict[Partition, object] = defaultdict(lambda: R.zero)
    for report in downset_reports(DyckPath(word), frozenset(marks), policy):
        inner = _recursion(report.residual_path.area_word, tuple(sorted(report.residual_marks)), policy)
        size = len(report.S)
        for la, c in inner:
            acc[la.union((size,))] += report.weight * c
    return tuple((la, c) for la, c in acc.items() if c)


def _check_marks(Z: DyckPath, T) -> FrozenSet[Pair]:
    T = corners(Z) if T is None else frozenset(T)
    if not T <= corners(Z):
        raise InputError(f"marks {sorted(T - corners(Z))} are not corners of {Z}")
    return T


def areaprime_recursion(Z: DyckPath, T=None, policy: ResidualMarks = ResidualMarks.INHERITED) -> SymF:
    """sum over possible S of e_|S| weight_S LLT(Z(S), T(S)); T defaults to all corners"""
    T = _check_marks(Z, T)
    return SymF(Basis.E, dict(_recursion(Z.area_word, tuple(sorted(T)), policy)))


def recursion_terms(Z: DyckPath, T=None, policy: ResidualMarks = ResidualMarks.INHERITED) -> Dict[int, SymF]:
    """The recursion split by |S|"""
    T = _check_marks(Z, T)
    terms: Dict[int, SymF] = {}
    for report in downset_reports(Z, T, policy):
        inner = SymF(Basis.E, dict(_recursion(
            report.residual_path.area_word, tuple(sorted(report.residual_marks)), policy)))
        piece = (inner * e_basis(len(report.S))).scale(report.weight)
        size = len(report.S)
        terms[size] = terms[size] + piece if size in terms else piece
    return terms


# =============================================================================
# NO-AREA STAIRCASE
# =============================================================================

@lru_cache(maxsize=None)
def _staircase_llt(m: int) -> SymF:
    pleth = plethysm_eval(h_basis(m), "X/(1-q)").to_symf(Basis.E)
    return pleth.scale(q_pochhammer(m))


def staircase_llt(m: int) -> SymF:
    """(q;q)_m h_m[X/(1-q)], the LLT of the zero-area path of size m"""
    if m < 0:
        raise InputError(f"size must be nonnegative, got {m}")
    return _staircase_llt(m)


def staircase_terms(n: int) -> Dict[int, SymF]:
    """k -> e_k (-1)^(k-1) (q;q)_(k-1) [n-1 choose k-1]_q LLT_(n-k)"""
    terms = {}
    for k in range(1, n + 1):
        scalar = (-1) ** (k - 1) * q_pochhammer(k - 1) * q_binomial(n - 1, k - 1)
        terms[k] = (e_basis(k) * staircase_llt(n - k)).scale(scalar)
    return terms


def staircase_recursion_check(n: int) -> bool:
    if n < 1:
        raise InputError(f"staircase recursion starts at n = 1, got {n}")
    total = SymF.zero(Basis.E)
    for term in staircase_terms(n).values():
        total = total + term
    return total == staircase_llt(n)


# =============================================================================
# COUNTING CHECKS
# =============================================================================

def prop31_check(D: DyckPath) -> bool:
    """Coefficient mass of the shifted e-expansion is (1+q)^dinv(D)"""
    mass = shift_and_e_expand(llt_classical(D)).total_mass()
    return mass == (1 + q) ** len(dinvset(D))


@lru_cache(maxsize=None)
def kreweras_poly(n: int):
    """P_0 = 1, P_(m+1) = sum_i C(m, i) [i+1]_q P_i P_(m-i)"""
    if n < 0 or n > MAX_KREWERAS:
        raise InputError(f"Kreweras index must be between 0 and {MAX_KREWERAS}, got {n}")
    if n == 0:
        return R.one
    m = n - 1
    return sum(
        (comb(m, i) * q_int(i + 1) * kreweras_poly(i) * kreweras_poly(m - i) for i in range(m + 1)),
        R.zero,
    )


def hilbert_series(n: int):
    """d^n/dp_1^n of nabla e_n: the q,t-count of parking functions"""
    derived = p1_derivative(nabla_en(n), n)
    return to_poly(derived.coefficient(()))


def kreweras_relation_check(n: int) -> bool:
    """P_n(1+q) equals the Hilbert series at q = 1, t = 1+q"""
    hilbert = hilbert_series(n)
    collapsed = specialize(hilbert, q_value=1).compose(t, 1 + q) if hilbert else hilbert
    return collapsed == shift_q(kreweras_poly(n))


def connected_graphs_sequence(n: int) -> List[int]:
    """The Hilbert series at q=2, t=1 for sizes 1..n"""
    return [int(evaluate(hilbert_series(k), 2, 1)) for k in range(1, n + 1)]


def mass_report(expansion: EExpansion, exponent: int) -> str:
    return f"mass {render_poly(expansion.total_mass())} vs (1+q)^{exponent}"
