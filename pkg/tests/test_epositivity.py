import pytest

from lltlab.dyck import enum_dyck, dinvset
from lltlab.epositivity import (
    EExpansion, shift_and_e_expand, poset_partition, conjecture_expansion, conjecture_term,
    possible_downsets, downset_weight, downset_reports, areaprime_recursion, recursion_terms,
    staircase_llt, staircase_terms, staircase_recursion_check, prop31_check, kreweras_poly,
    kreweras_relation_check, connected_graphs_sequence, mass_report,
)
from lltlab.llt import llt_classical, llt_marked
from lltlab.models import DyckPath, InputError, MarkedPath, ResidualMarks
from lltlab.ring import R, q
from lltlab.symfunc import e

D_STAR_SHIFTED = EExpansion({
    (6,): q**5 + 4*q**4 + 5*q**3 + 2*q**2,
    (5, 1): q**4 + 4*q**3 + 4*q**2 + q,
    (4, 2): q**3 + 2*q**2 + q,
    (4, 1, 1): q**2 + q,
    (3, 3): q**2 + q,
    (3, 2, 1): 1 + q,
})


def test_eexpansion_drops_zero_terms():
    expansion = EExpansion({(2,): q - q, (1, 1): R.one})
    assert expansion.terms == {(1, 1): R.one}
    assert expansion.is_positive
    assert not EExpansion({(2,): q - 1}).is_positive


def test_poset_partition():
    assert poset_partition(3, []) == (1, 1, 1)
    assert poset_partition(3, [(1, 2), (2, 3)]) == (3,)
    assert poset_partition(4, [(1, 4), (2, 3)]) == (2, 2)


def test_worked_example_shifted_llt(d_star):
    assert shift_and_e_expand(llt_classical(d_star)) == D_STAR_SHIFTED


def test_worked_example_conjecture(d_star, z_star):
    assert conjecture_expansion(d_star) == D_STAR_SHIFTED
    marked = MarkedPath(z_star, frozenset({(1, 2), (2, 4), (3, 5)}))
    assert conjecture_expansion(marked) == D_STAR_SHIFTED


def test_worked_example_terms(d_star):
    assert conjecture_term(d_star, [(4, 6)]) == (1, (4, 2))
    assert conjecture_term(d_star, [(2, 3), (4, 5), (4, 6)]) == (3, (4, 2))
    assert conjecture_term(d_star, [(3, 4), (4, 6)]) == (2, (5, 1))
    assert conjecture_term(d_star, [(3, 4)]) == (1, (3, 2, 1))
    with pytest.raises(InputError):
        conjecture_term(d_star, [(1, 6)])


def test_marks_are_checked(d_star):
    with pytest.raises(InputError):
        conjecture_expansion(d_star, marks=[(1, 3)])


def test_empty_path_expansion():
    assert str(conjecture_expansion(MarkedPath(DyckPath(()), frozenset()))) == "1"


def test_coefficient_mass(d_star):
    assert D_STAR_SHIFTED.total_mass() == (1 + q) ** 5
    assert prop31_check(d_star)
    for n in range(1, 5):
        for D in enum_dyck(n):
            assert prop31_check(D), D
    assert mass_report(D_STAR_SHIFTED, len(dinvset(d_star))) == (
        "mass q^5+5*q^4+10*q^3+10*q^2+5*q+1 vs (1+q)^5"
    )


def test_conjecture_matches_shifted_llt():
    for n in range(1, 5):
        for D in enum_dyck(n):
            assert conjecture_expansion(D) == shift_and_e_expand(llt_classical(D)), D


def test_possible_downsets_of_worked_recursion():
    Z = DyckPath((0, 0, 1, 2, 2, 3, 0, 1))
    found = possible_downsets(Z, {(2, 5), (6, 7)})
    assert len(found) == 12
    assert all(max(S) == 8 for S in found)
    S = frozenset({2, 3, 5, 6, 7, 8})
    assert S in found
    assert downset_weight(Z, {(2, 5), (6, 7)}, S) == q**7 - 2*q**6 + 2*q**4 - q**3


def test_downsets_small():
    Z = DyckPath((0, 0, 1))
    assert possible_downsets(Z, set()) == [frozenset({3}), frozenset({2, 3})]
    assert downset_weight(Z, set(), {3}) == R.one
    assert downset_weight(Z, set(), {2, 3}) == q - 1
    with pytest.raises(InputError):
        downset_weight(Z, set(), {1, 3})


def test_residual_mark_policies():
    Z = DyckPath((0, 0, 1))
    assert areaprime_recursion(Z, set()) == llt_marked(MarkedPath(Z, frozenset()))
    inherited = areaprime_recursion(Z, set(), ResidualMarks.INHERITED)
    assert inherited == llt_marked(MarkedPath(Z, frozenset()))
    assert inherited == e(1, 1, 1) + e(2, 1).scale(q - 1)
    assert areaprime_recursion(Z, set(), ResidualMarks.ALL_CORNERS) == e(2, 1).scale(q)
    reports = downset_reports(Z, set(), ResidualMarks.ALL_CORNERS)
    assert [r.residual_marks for r in reports] == [frozenset({(1, 2)}), frozenset()]


def test_recursion_with_marks():
    Z = DyckPath((0, 0, 1))
    expected = e(2, 1) + e(3).scale(q - 1)
    for policy in ResidualMarks:
        assert areaprime_recursion(Z, {(1, 2)}, policy) == expected
    terms = recursion_terms(Z, set(), ResidualMarks.INHERITED)
    assert terms == {1: e(1, 1, 1), 2: e(2, 1).scale(q - 1)}


def test_recursion_rejects_non_corners():
    with pytest.raises(InputError):
        areaprime_recursion(DyckPath((0, 1)), {(1, 2)})


def test_staircase():
    assert staircase_llt(1) == e(1)
    assert staircase_llt(2) == e(1, 1) + e(2).scale(q - 1)
    assert staircase_llt(2) == llt_classical(DyckPath((0, 0)))
    terms = staircase_terms(2)
    assert terms == {1: e(1, 1), 2: e(2).scale(q - 1)}
    for n in range(1, 6):
        assert staircase_recursion_check(n)
    with pytest.raises(InputError):
        staircase_recursion_check(0)


def test_kreweras():
    assert kreweras_poly(0) == R.one
    assert kreweras_poly(2) == 2 + q
    assert kreweras_poly(3) == 6 + 6*q + 3*q**2 + q**3
    for n in range(1, 4):
        assert kreweras_relation_check(n)
    with pytest.raises(InputError):
        kreweras_poly(-1)


def test_connected_graphs():
    assert connected_graphs_sequence(3) == [1, 4, 38]
