"""
lltlab - Verification Suites
============================
Exhaustive and sampled checks of the e-positivity statements, the route
equivalences and the counting identities.

A suite is a name, an instance builder and a check function. Builders return
(label, payload) pairs with plain tuples as payloads, and checks are module
level functions, so instances can be shipped to worker processes. Every
suite is deterministic given its bound and options.
"""

from __future__ import annotations
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from .cache import ResultCache
from .dyck import (
    enum_dyck, enum_marked, zeta_and_corners, forced_pairs, corners, dinvset, path_dinvset, subsets,
)
from .epositivity import (
    conjecture_expansion, shift_and_e_expand, areaprime_recursion, possible_downsets,
    staircase_recursion_check, prop31_check, kreweras_relation_check, hilbert_series,
    mass_report, staircase_llt,
)
from .hall_littlewood import (
    b_word, b_positive_tableaux, b_positive_reference, e_nk, twist, dh_poly,
    balanced_identity, monomial_factor,
)
from .llt import llt_classical, llt_column, llt_marked, cm_run, nabla_en
from .macdonald import (
    forgotten_identity, htilde_t1, certificate_positive, forgotten_coefficients_check,
)
from .models import (
    Basis, DyckPath, Failure, InputError, MarkedPath, Outcome, ResidualMarks,
)
from .ring import q, tf, evaluate
from .symfunc import SymF, compositions_of, partitions_of, e as e_basis

logger = logging.getLogger(__name__)

Instance = Tuple[str, tuple]

CONNECTED_GRAPHS = (1, 4, 38, 728, 26704)
WORKED_RECURSION_PATH = (0, 0, 1, 2, 2, 3, 0, 1)
WORKED_RECURSION_MARKS = ((2, 5), (6, 7))
WORKED_RECURSION_DOWNSETS = 12


@dataclass(frozen=True)
class SuiteOptions:
    residual_marks: ResidualMarks = ResidualMarks.INHERITED
    cache_dir: Optional[str] = None
    sample: int = 100
    seed: int = 0


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    build: Callable[[int, SuiteOptions], List[Instance]]
    check: Callable[[tuple, SuiteOptions], Outcome]
    max_bound: int
    min_bound: int = 1

    def check_bound(self, bound: int):
        if not self.min_bound <= bound <= self.max_bound:
            raise InputError(
                f"suite {self.name} runs for {self.min_bound} <= n <= {self.max_bound}, got {bound}"
            )

    def instances(self, bound: int, options: SuiteOptions) -> List[Instance]:
        self.check_bound(bound)
        return self.build(bound, options)


# =============================================================================
# HELPERS
# =============================================================================

@lru_cache(maxsize=None)
def _cache(cache_dir: Optional[str]) -> ResultCache:
    return ResultCache(cache_dir)


def _memo(options: SuiteOptions, key: str, compute, kind: str = "symf"):
    return _cache(options.cache_dir).memo(key, compute, kind)


def classical_reference(D: DyckPath, options: SuiteOptions) -> SymF:
    return _memo(options, f"llt:def:{D}", lambda: llt_classical(D))


def marked_reference(M: MarkedPath, options: SuiteOptions) -> SymF:
    return _memo(options, f"llt:perm:{M.key()}", lambda: llt_marked(M))


def _fail(label: str, expected, got, notes=()) -> Outcome:
    return Outcome(failure=Failure(instance=label, expected=str(expected), got=str(got)), notes=tuple(notes))


def _compare(label: str, expected, got) -> Outcome:
    return Outcome() if expected == got else _fail(label, expected, got)


def _pairs_text(pairs) -> str:
    return ",".join(f"{i}:{j}" for i, j in sorted(pairs))


def _marked_payload(M: MarkedPath) -> tuple:
    return (M.path.area_word, tuple(sorted(M.marks)))


def _marked_from_payload(payload) -> MarkedPath:
    word, marks = payload
    return MarkedPath(DyckPath(word), frozenset(marks))


def _paths_up_to(bound: int) -> List[Instance]:
    return [(f"D={D}", (D.area_word,)) for n in range(1, bound + 1) for D in enum_dyck(n)]


def _marked_up_to(bound: int) -> List[Instance]:
    return [(f"Z,T={M.key()}", _marked_payload(M)) for n in range(1, bound + 1) for M in enum_marked(n)]


# =============================================================================
# GEOMETRY AND COEFFICIENT MASS
# =============================================================================

def _check_geometry(payload, options) -> Outcome:
    D = DyckPath(payload[0])
    M = zeta_and_corners(D)
    if len(forced_pairs(D)) != D.n - sum(1 for _ in _column_tops(D)):
        return _fail(f"D={D}", "one forced pair per non-bottom North step", sorted(forced_pairs(D)))
    if corners(M.path) != forced_pairs(D):
        return _fail(f"D={D}", sorted(forced_pairs(D)), sorted(corners(M.path)))
    if path_dinvset(M.path) != dinvset(D):
        return _fail(f"D={D}", sorted(dinvset(D)), sorted(path_dinvset(M.path)))
    return Outcome()


def _column_tops(D: DyckPath):
    """Bottom rows of the vertical runs"""
    previous = None
    for row in range(1, D.n + 1):
        column = D.column(row)
        if column != previous:
            yield row
        previous = column


def _build_prop31(bound, options) -> List[Instance]:
    return [(f"D={D}", (D.area_word,)) for D in enum_dyck(bound)]


def _check_prop31(payload, options) -> Outcome:
    D = DyckPath(payload[0])
    if prop31_check(D):
        return Outcome()
    expansion = shift_and_e_expand(classical_reference(D, options))
    return _fail(f"D={D}", "mass (1+q)^dinv", mass_report(expansion, len(dinvset(D))))


# =============================================================================
# CONJECTURES AND RECURSION
# =============================================================================

def _check_conj31(payload, options) -> Outcome:
    D = DyckPath(payload[0])
    expected = shift_and_e_expand(classical_reference(D, options))
    return _compare(f"D={D}", expected, conjecture_expansion(D))


def _check_conj32(payload, options) -> Outcome:
    M = _marked_from_payload(payload)
    expected = shift_and_e_expand(marked_reference(M, options))
    return _compare(f"Z,T={M.key()}", expected, conjecture_expansion(M))


def _build_recursion(bound, options) -> List[Instance]:
    instances = [(f"Z,T={M.key()}", ("perm",) + _marked_payload(M)) for M in _marked_instances(bound)]
    if bound >= 5 and options.sample > 0:
        rng = random.Random(options.seed)
        sizes = (6, 7)
        per_size = options.sample // len(sizes)
        for n in sizes:
            population = list(enum_marked(n))
            for M in rng.sample(population, min(per_size, len(population))):
                instances.append((f"sample Z,T={M.key()}", ("cm",) + _marked_payload(M)))
    instances.append((
        f"downsets Z={','.join(map(str, WORKED_RECURSION_PATH))}",
        ("downsets", WORKED_RECURSION_PATH, WORKED_RECURSION_MARKS),
    ))
    return instances


def _marked_instances(bound: int) -> List[MarkedPath]:
    return [M for n in range(1, bound + 1) for M in enum_marked(n)]


def _check_recursion(payload, options) -> Outcome:
    route = payload[0]
    M = _marked_from_payload(payload[1:])
    if route == "downsets":
        count = len(possible_downsets(M.path, M.marks))
        return _compare(f"downsets Z={M.path}", WORKED_RECURSION_DOWNSETS, count)
    if route == "cm":
        expected = _memo(options, f"llt:cm:{M.key()}", lambda: cm_run(M))
        label = f"sample Z,T={M.key()}"
    else:
        expected = marked_reference(M, options)
        label = f"Z,T={M.key()}"
    got = areaprime_recursion(M.path, M.marks, options.residual_marks)
    return _compare(label, expected.to(Basis.E), got)


# =============================================================================
# ROUTES
# =============================================================================

def _build_routes(bound, options) -> List[Instance]:
    instances = [(f"cm Z,T={M.key()}", ("cm",) + _marked_payload(M)) for M in _marked_instances(bound)]
    instances += [(f"zeta D={D}", ("zeta", D.area_word)) for n in range(1, bound + 2) for D in enum_dyck(n)
                  if n <= 8]
    instances += [
        (f"cpf D,T={D}|{_pairs_text(T)}", ("cpf", D.area_word, T))
        for n in range(1, bound + 1) for D in enum_dyck(n)
        for T in subsets(forced_pairs(D)) if len(T) < len(forced_pairs(D))
    ]
    return instances


def _check_routes(payload, options) -> Outcome:
    if payload[0] == "zeta":
        D = DyckPath(payload[1])
        M = zeta_and_corners(D)
        return _compare(f"zeta D={D}", classical_reference(D, options), marked_reference(M, options))
    if payload[0] == "cpf":
        D, T = DyckPath(payload[1]), frozenset(payload[2])
        M = MarkedPath(zeta_and_corners(D).path, T)
        return _compare(f"cpf D,T={D}|{_pairs_text(T)}", marked_reference(M, options), llt_column(D, T))
    M = _marked_from_payload(payload[1:])
    label = f"cm Z,T={M.key()}"
    expected = marked_reference(M, options)
    got = cm_run(M)
    if expected == got:
        return Outcome()
    offset = monomial_factor(got, expected, M.n * M.n)
    notes = [f"{label}: differs by q^{offset}"] if offset is not None else []
    return _fail(label, expected.to(Basis.E), got.to(Basis.E), notes)


# =============================================================================
# STAIRCASE, KREWERAS, NABLA
# =============================================================================

def _build_thm31(bound, options) -> List[Instance]:
    return [(f"n={n}", (n,)) for n in range(2, bound + 1)]


def _check_thm31(payload, options) -> Outcome:
    n = payload[0]
    if staircase_recursion_check(n):
        return Outcome()
    return _fail(f"n={n}", staircase_llt(n), "recursion sum differs")


def _graphs_instances(bound: int) -> List[Instance]:
    return [(f"graphs n={n}", ("graphs", n)) for n in range(1, min(bound, len(CONNECTED_GRAPHS)) + 1)]


def _build_kreweras(bound, options) -> List[Instance]:
    return [(f"kreweras n={n}", ("kreweras", n)) for n in range(1, bound + 1)] + _graphs_instances(bound)


def _build_nabla(bound, options) -> List[Instance]:
    return [(f"nabla n={n}", ("positive", n)) for n in range(1, bound + 1)] + _graphs_instances(bound)


def _check_counting(payload, options) -> Outcome:
    kind, n = payload
    if kind == "kreweras":
        return Outcome() if kreweras_relation_check(n) else _fail(f"kreweras n={n}", "P_n(1+q)", hilbert_series(n))
    if kind == "graphs":
        got = int(evaluate(hilbert_series(n), 2, 1))
        return _compare(f"graphs n={n}", CONNECTED_GRAPHS[n - 1], got)
    expansion = shift_and_e_expand(nabla_en(n))
    return Outcome() if expansion.is_positive else _fail(f"nabla n={n}", "e-positive", expansion)


# =============================================================================
# HALL-LITTLEWOOD
# =============================================================================

def _build_bpos(bound, options) -> List[Instance]:
    instances = [
        (f"B{list(p)}", ("word", tuple(p)))
        for n in range(1, bound + 1) for p in compositions_of(n)
    ]
    for total in range(1, min(bound, 6) + 1):
        for a in range(1, total + 1):
            for mu in partitions_of(total - a) if total > a else [()]:
                instances.append((f"tableaux a={a} mu={list(mu)}", ("tableaux", a, tuple(mu))))
    return instances


def _check_bpos(payload, options) -> Outcome:
    if payload[0] == "word":
        p = payload[1]
        expansion = shift_and_e_expand(b_word(p))
        return Outcome() if expansion.is_positive else _fail(f"B{list(p)}", "e-positive", expansion)
    _, a, mu = payload
    return _compare(f"tableaux a={a} mu={list(mu)}", b_positive_reference(a, mu), b_positive_tableaux(a, mu))


def _build_by_size(bound, options) -> List[Instance]:
    return [(f"n={n}", (n,)) for n in range(1, bound + 1)]


def _check_enk(payload, options) -> Outcome:
    n = payload[0]
    total = SymF.zero(Basis.E)
    for k in range(1, n + 1):
        poch = e_nk(n, k, "poch")
        comp = e_nk(n, k, "comp")
        if poch != comp:
            return _fail(f"E({n},{k}) poch vs comp", poch, comp)
        twisted = twist(poch, n, k)
        bword = e_nk(n, k, "bword")
        if twisted != bword:
            return _fail(f"E({n},{k}) twist vs bword", twisted, bword)
        total = total + poch
    return _compare(f"n={n} sum", e_basis(n), total)


def _check_dh(payload, options) -> Outcome:
    n = payload[0]
    value = dh_poly(n)
    if n == 2:
        expected = e_basis(1, 1) + e_basis(2).scale(q + tf - 1)
        if value != expected:
            return _fail("n=2", expected, value)
    expansion = shift_and_e_expand(value)
    return Outcome() if expansion.is_positive else _fail(f"n={n}", "e-positive", expansion)


def _build_balanced(bound, options) -> List[Instance]:
    return [(f"n={n} k={k}", (n, k)) for n in range(1, bound + 1) for k in range(1, n + 1)]


def _factor_text(c, span: int) -> str:
    """Measurement for one composition; the suite itself checks only the summed identity"""
    if c == 0:
        return "B_alpha 1 = LLT(path)"
    if c is not None:
        return f"B_alpha 1 = q^{c} LLT(path)"
    return f"B_alpha 1 is not q^c LLT(path) for any |c| <= {span} (measured, not a failure)"


def _check_balanced(payload, options) -> Outcome:
    n, k = payload
    report = balanced_identity(n, k)
    notes = tuple(
        f"n={n} k={k} alpha={list(alpha)} path={path}: " + _factor_text(c, report.factor_span)
        for alpha, path, c in report.matches
    )
    if report.equal:
        return Outcome(notes=notes)
    return _fail(f"n={n} k={k}", report.rhs, report.lhs, notes)


# =============================================================================
# MACDONALD AT t = 1
# =============================================================================

def _build_macdonald(bound, options) -> List[Instance]:
    instances = [(f"mu={list(mu)}", ("mu", tuple(mu))) for m in range(1, bound + 1) for mu in partitions_of(m)]
    instances += [(f"coefficients m={m}", ("coefficients", m)) for m in range(1, min(bound, 7) + 1)]
    return instances


def _check_macdonald(payload, options) -> Outcome:
    if payload[0] == "coefficients":
        m = payload[1]
        return Outcome() if forgotten_coefficients_check(m) else _fail(f"coefficients m={m}", "f_mu[1/(1-q)]", "mismatch")
    mu = payload[1]
    label = f"mu={list(mu)}"
    if not forgotten_identity(mu):
        return _fail(label, "(q;q)_m f_mu[1/(1-q)] = Pi_mu (q-1)^(m-l)", "identity fails")
    if not certificate_positive(mu):
        return _fail(label, "positive certificate", "negative coefficient")
    expansion = shift_and_e_expand(htilde_t1(mu))
    return Outcome() if expansion.is_positive else _fail(label, "e-positive", expansion)


# =============================================================================
# REGISTRY
# =============================================================================

def _build_geometry(bound, options) -> List[Instance]:
    return _paths_up_to(bound)


def _build_conj32(bound, options) -> List[Instance]:
    return _marked_up_to(bound)


SUITES: Dict[str, Suite] = {suite.name: suite for suite in (
    Suite("geometry", "zeta images, forced pairs and corners", _build_geometry, _check_geometry, 10),
    Suite("prop31", "coefficient mass (1+q)^dinv of every path of size n", _build_prop31, _check_prop31, 8),
    Suite("conj31", "poset expansion of classical LLTs", _build_geometry, _check_conj31, 8),
    Suite("conj32", "poset expansion of marked path LLTs", _build_conj32, _check_conj32, 7),
    Suite("recursion", "possible-downset recursion against the permutation route", _build_recursion, _check_recursion, 7),
    Suite("routes", "Carlsson-Mellit and zeta route equivalence", _build_routes, _check_routes, 7),
    Suite("thm31", "no-area staircase recursion", _build_thm31, _check_thm31, 10, min_bound=2),
    Suite("kreweras", "Kreweras relation and the connected graph counts", _build_kreweras, _check_counting, 7),
    Suite("nabla", "nabla e_n at q -> 1+q and the connected graph counts", _build_nabla, _check_counting, 7),
    Suite("bpos", "B_p 1 at q -> 1+q and the signed tableau model", _build_bpos, _check_bpos, 8),
    Suite("enk", "E_{n,k} by three routes and their sum", _build_by_size, _check_enk, 7),
    Suite("dh", "the bivariate sum of B_alpha 1", _build_by_size, _check_dh, 6),
    Suite("balanced", "B_alpha sums against balanced path LLTs", _build_balanced, _check_balanced, 7),
    Suite("macdonald", "H~_mu[X; q, 1] and the forgotten identity", _build_macdonald, _check_macdonald, 9),
)}


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name.strip().lower()]
    except KeyError:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
