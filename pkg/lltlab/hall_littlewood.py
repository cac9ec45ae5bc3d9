"""
lltlab - Hall-Littlewood Operators
==================================
The vertex operators B_a, B~_a = omega B_a omega and C_a, their
compositional products, the E_{n,k} functions by three routes, the
bivariate DH sum, balanced-path identities and the signed tableau model
for B_a e_mu at q -> 1+q.

B_a acts on the e-basis by

    B_a = sum_{r,s} (-1)^s q^r e_{a+r+s} e_r^perp h_s^perp

where h_s^perp lowers s distinct factors of e_mu by one and e_r^perp
removes r cells spread over the factors in every possible way.
"""

from __future__ import annotations
import logging
from collections import defaultdict
from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Tuple

from .dyck import enum_dyck, hits
from .epositivity import EExpansion, shift_and_e_expand
from .llt import llt_classical
from .models import (
    Basis, Composition, DyckPath, HLKind, Partition, ConventionError, InputError,
)
from .ring import K, R, q, qf, tf, invert_q, is_polynomial, render_rat, q_pochhammer
from .symfunc import (
    SymF, compositions_of, omega, plethysm_eval, e as e_basis,
)

logger = logging.getLogger(__name__)

EMPTY = Partition(())

MAX_WORD_SIZE = 8


# =============================================================================
# VERTEX OPERATORS
# =============================================================================

@lru_cache(maxsize=None)
def _vertex_terms(a: int, mu: Partition) -> Tuple[Tuple[int, int, Partition], ...]:
    """(r, s, index) for every term of e_{a+r+s} e_r^perp h_s^perp e_mu"""
    terms = []
    for s in range(len(mu) + 1):
        for chosen in combinations(range(len(mu)), s):
            lowered = [part - (i in chosen) for i, part in enumerate(mu)]
            for cut in product(*(range(part + 1) for part in lowered)):
                r = sum(cut)
                rest = [part - c for part, c in zip(lowered, cut)]
                terms.append((r, s, Partition.from_parts(rest + [a + r + s])))
    return tuple(terms)


@lru_cache(maxsize=None)
def _b_on_e(a: int, mu: Partition) -> Tuple[Tuple[Partition, object], ...]:
    acc: Dict[Partition, object] = defaultdict(lambda: R.zero)
    for r, s, index in _vertex_terms(a, mu):
        acc[index] += (-1) ** s * q**r
    return tuple((index, c) for index, c in acc.items() if c)


def _check_degree(a: int):
    if a < 1:
        raise InputError(f"vertex operators need a >= 1, got {a}")


def apply_b(a: int, F: SymF) -> SymF:
    _check_degree(a)
    source = F.to(Basis.E)
    acc: Dict[Partition, object] = defaultdict(lambda: K.zero)
    for mu, coeff in source.terms.items():
        for index, c in _b_on_e(a, mu):
            acc[index] += coeff * c
    return SymF(Basis.E, acc).to(F.basis)


def apply_btilde(a: int, F: SymF) -> SymF:
    return omega(apply_b(a, omega(F)))


def apply_c(a: int, F: SymF) -> SymF:
    """C_a F: (-q)^(a-1) B~_a with q -> 1/q throughout"""
    _check_degree(a)
    inverted = F.map_coefficients(invert_q)
    image = apply_btilde(a, inverted).scale((-qf) ** (a - 1))
    return image.map_coefficients(invert_q)


def c_operator_direct(a: int, F: SymF) -> SymF:
    """(-1/q)^(a-1) sum (-1)^s q^-r h_{a+r+s} h_r^perp e_s^perp, on the h-basis"""
    _check_degree(a)
    source = F.to(Basis.H)
    acc: Dict[Partition, object] = defaultdict(lambda: K.zero)
    for mu, coeff in source.terms.items():
        for r, s, index in _vertex_terms(a, mu):
            acc[index] += coeff * (-1) ** s / qf**r
    return SymF(Basis.H, acc).scale((-K.one / qf) ** (a - 1)).to(F.basis)


def apply_hl(kind: HLKind, a: int, F: SymF) -> SymF:
    if isinstance(kind, str):
        kind = HLKind.from_string(kind)
    if kind == HLKind.B:
        return apply_b(a, F)
    if kind == HLKind.BTILDE:
        return apply_btilde(a, F)
    return apply_c(a, F)


def hl_word(kind: HLKind, word) -> SymF:
    """op_{p_1} ... op_{p_k} 1, rightmost operator first"""
    word = Composition(word)
    if word.size > MAX_WORD_SIZE:
        raise InputError(f"operator words are limited to total size {MAX_WORD_SIZE}")
    F = SymF.one(Basis.E)
    for part in reversed(word):
        F = apply_hl(kind, part, F)
    return F


def b_word(p) -> SymF:
    """B_{p_1} ... B_{p_k} 1"""
    return hl_word(HLKind.B, p)


# =============================================================================
# E_{n,k}
# =============================================================================

def _z_pochhammer(k: int) -> List[object]:
    """Coefficients in z of (z;q)_k = prod_{i<k} (1 - z q^i)"""
    coeffs = [K.one]
    for i in range(k):
        shifted = [K.zero] + [-c * qf**i for c in coeffs]
        coeffs = [a + b for a, b in zip(coeffs + [K.zero], shifted)]
    return coeffs


@lru_cache(maxsize=None)
def _pochhammer_route(n: int) -> Tuple[SymF, ...]:
    """E_{n,0..n} by peeling e_n[X(1-z)/(1-q)] in the basis (z;q)_k/(q;q)_k"""
    base = plethysm_eval(e_basis(n), "X/(1-q)").to_symf(Basis.E)
    series = plethysm_eval(base, "X(1-z)")
    remaining = {exp[0]: value for exp, value in series.terms.items()}
    found: List[SymF] = [SymF.zero(Basis.E)] * (n + 1)
    for k in range(n, -1, -1):
        top = remaining.get(k, SymF.zero(Basis.E))
        poch = _z_pochhammer(k)
        norm = K(q_pochhammer(k)) / poch[k]
        E_k = top.scale(norm)
        found[k] = E_k
        for j, c in enumerate(poch):
            piece = E_k.scale(c / K(q_pochhammer(k)))
            remaining[j] = remaining.get(j, SymF.zero(Basis.E)) - piece
    leftover = [j for j, value in remaining.items() if value]
    if leftover:
        raise ConventionError(f"Pochhammer expansion of e_{n} left z-degrees {leftover}")
    if n > 0 and found[0]:
        raise ConventionError(f"E_({n},0) is nonzero")
    return tuple(found)


def twist(F: SymF, n: int, k: int) -> SymF:
    """(-1/q)^(n-k) omega F[X; 1/q]"""
    image = omega(F.map_coefficients(invert_q)).scale((-K.one / qf) ** (n - k))
    for index, coeff in image.terms.items():
        if not is_polynomial(coeff):
            raise ConventionError(f"twist of E_({n},{k}) has coefficient {render_rat(coeff)} at {list(index)}")
    return image


def e_nk(n: int, k: int, method: str = "poch") -> SymF:
    """E_{n,k} by 'poch' or 'comp'; 'bword' gives the twisted E~_{n,k}"""
    if not 1 <= k <= n:
        raise InputError(f"E_(n,k) needs 1 <= k <= n, got n={n}, k={k}")
    if method == "poch":
        return _pochhammer_route(n)[k]
    if method in ("comp", "bword"):
        kind = HLKind.C if method == "comp" else HLKind.B
        total = SymF.zero(Basis.E)
        for alpha in compositions_of(n, k):
            total = total + hl_word(kind, alpha)
        return total.to(Basis.E)
    raise InputError(f"unknown E_(n,k) route: {method!r}")


def dh_poly(n: int) -> SymF:
    """sum_k t^(n-k) sum over compositions of n with k parts of B_alpha 1"""
    total = SymF.zero(Basis.E)
    for k in range(1, n + 1):
        total = total + e_nk(n, k, "bword").scale(tf ** (n - k))
    return total


# =============================================================================
# BALANCED PATHS
# =============================================================================

def is_balanced(D: DyckPath) -> bool:
    """Every North run is followed immediately by an East run of the same length"""
    steps = D.step_word()
    runs: List[Tuple[int, int]] = []
    for step in steps:
        if runs and runs[-1][0] == step:
            runs[-1] = (step, runs[-1][1] + 1)
        else:
            runs.append((step, 1))
    if len(runs) % 2:
        return False
    for (north, up), (east, across) in zip(runs[::2], runs[1::2]):
        if north != 0 or east != 1 or up != across:
            return False
    return True


def balanced_path(beta) -> DyckPath:
    """Concatenated staircase blocks, one per part"""
    word: List[int] = []
    for part in Composition(beta):
        word.extend(range(part))
    return DyckPath(tuple(word))


def monomial_factor(F: SymF, G: SymF, span: int) -> Optional[int]:
    """c with F = q^c G, |c| <= span, if one exists"""
    for c in sorted(range(-span, span + 1), key=abs):
        if F == G.scale(qf**c):
            return c
    return None


@dataclass
class BalancedReport:
    n: int
    k: int
    lhs: SymF
    rhs: SymF
    equal: bool
    # largest |c| tried when matching B_alpha 1 against q^c LLT(path)
    factor_span: int = 0
    # (alpha, balanced path of reversed alpha, q-power factor or None)
    matches: List[Tuple[Composition, DyckPath, Optional[int]]] = dataclass_field(default_factory=list)


def balanced_identity(n: int, k: int) -> BalancedReport:
    lhs = SymF.zero(Basis.E)
    span = n * n
    matches = []
    for alpha in compositions_of(n, k):
        value = b_word(alpha)
        lhs = lhs + value
        path = balanced_path(tuple(reversed(alpha)))
        matches.append((alpha, path, monomial_factor(value, llt_classical(path), span)))
    rhs = SymF.zero(Basis.E)
    for D in enum_dyck(n):
        if is_balanced(D) and hits(D) == k:
            rhs = rhs + llt_classical(D)
    equal = lhs == rhs
    logger.info("balanced identity n=%d k=%d: %s", n, k, "equal" if equal else "differs")
    return BalancedReport(
        n=n, k=k, lhs=lhs, rhs=rhs.to(Basis.E), equal=equal, factor_span=span, matches=matches,
    )


# =============================================================================
# SIGNED TABLEAUX
# =============================================================================

@dataclass(frozen=True)
class LabelledFilling:
    """Per column: is the top cell a -1, and the 1/q labels of the strip below it"""
    minus: Tuple[bool, ...]
    labels: Tuple[Tuple[str, ...], ...]

    @property
    def s(self) -> int:
        return sum(self.minus)

    @property
    def r(self) -> int:
        return sum(len(column) for column in self.labels)

    def weight(self, a: int, mu: Partition) -> Tuple[object, Partition]:
        sign = -1 if self.s % 2 else 1
        q_count = sum(column.count("q") for column in self.labels)
        rest = [part - int(minus) - len(column) for part, minus, column in zip(mu, self.minus, self.labels)]
        return sign * q**q_count, Partition.from_parts(rest + [a + self.r + self.s])


def signed_fillings(mu: Partition) -> Iterator[LabelledFilling]:
    per_column = []
    for part in mu:
        options = []
        for minus in (False, True):
            if minus and part == 0:
                continue
            for length in range(part - int(minus) + 1):
                for labels in product("1q", repeat=length):
                    options.append((minus, labels))
        per_column.append(options)
    for choice in product(*per_column):
        yield LabelledFilling(
            minus=tuple(minus for minus, _ in choice),
            labels=tuple(labels for _, labels in choice),
        )


def toggle(filling: LabelledFilling) -> LabelledFilling:
    """Sign-reversing involution: flip the first top cell that is -1 or labelled 1"""
    for i, (minus, labels) in enumerate(zip(filling.minus, filling.labels)):
        if minus:
            new_minus, new_labels = False, ("1",) + labels
        elif labels and labels[0] == "1":
            new_minus, new_labels = True, labels[1:]
        else:
            continue
        return LabelledFilling(
            minus=filling.minus[:i] + (new_minus,) + filling.minus[i + 1:],
            labels=filling.labels[:i] + (new_labels,) + filling.labels[i + 1:],
        )
    return filling


def is_fixed(filling: LabelledFilling) -> bool:
    return toggle(filling) == filling


def signed_tableau_sum(a: int, mu, fixed_only: bool = False) -> EExpansion:
    mu = Partition(mu)
    acc: Dict[Partition, object] = defaultdict(lambda: R.zero)
    for filling in signed_fillings(mu):
        if fixed_only and not is_fixed(filling):
            continue
        coeff, index = filling.weight(a, mu)
        acc[index] += coeff
    return EExpansion(acc)


def b_positive_tableaux(a: int, mu) -> EExpansion:
    """Sum over the fixed points of the involution: every strip topped by a q"""
    _check_degree(a)
    return signed_tableau_sum(a, mu, fixed_only=True)


def b_positive_reference(a: int, mu) -> EExpansion:
    return shift_and_e_expand(apply_b(a, SymF.monomial(Basis.E, mu)))
