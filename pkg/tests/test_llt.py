import pytest

from lltlab.dyck import enum_cpf, enum_dyck, enum_marked, forced_pairs, subsets, zeta_and_corners
from lltlab.llt import (
    llt_classical, llt_column, llt_marked, nabla_en, unicellular_search, encode_word, run_word, cm_run,
    cm_step, cm_ti,
)
from lltlab.models import ConventionError, DyckPath, InputError, LLTWord, MarkedPath
from lltlab.ring import q, t
from lltlab.symfunc import SymF, YSymF, e, s


def _marked(word, marks=()):
    return MarkedPath(DyckPath(word), frozenset(marks))


def test_empty_path():
    assert llt_classical(DyckPath(())) == SymF.one()


def test_classical_small():
    assert llt_classical(DyckPath((0,))) == e(1)
    assert llt_classical(DyckPath((0, 1))) == e(2)
    assert llt_classical(DyckPath((0, 1, 0))) == (e(2, 1).scale(q) + e(3).scale(q**2 - q))


def test_marked_table():
    assert llt_marked(_marked((0, 0))) == e(1, 1)
    assert llt_marked(_marked((0, 1))) == e(1, 1) + e(2).scale(q - 1)
    assert llt_marked(_marked((0, 0), [(1, 2)])) == e(2)
    assert llt_marked(_marked((0, 0, 1), [(1, 2)])) == e(2, 1) + e(3).scale(q - 1)
    assert llt_marked(_marked((0, 1, 1))) == (
        e(1, 1, 1) + e(2, 1).scale(2 * (q - 1)) + e(3).scale((q - 1) ** 2)
    )
    assert llt_marked(_marked((0, 0, 0))) == e(1, 1, 1)
    assert llt_marked(_marked((0, 0, 0), [(1, 2)])) == e(2, 1)
    assert llt_marked(_marked((0, 0, 0), [(1, 2), (2, 3)])) == e(3)
    assert llt_marked(_marked((0, 1, 0))) == e(1, 1, 1) + e(2, 1).scale(q - 1)


def test_marks_must_be_corners():
    with pytest.raises(InputError):
        llt_marked(_marked((0, 1), [(1, 2)]))
    with pytest.raises(InputError):
        cm_run(_marked((0, 1), [(1, 2)]))


def test_enumeration_bound():
    with pytest.raises(InputError):
        llt_classical(DyckPath((0,) * 9))


def test_zeta_preserves_llt():
    for n in range(1, 5):
        for D in enum_dyck(n):
            assert llt_classical(D) == llt_marked(zeta_and_corners(D)), D


def test_nabla():
    assert nabla_en(1) == s(1)
    assert nabla_en(2) == s(2) + s(1, 1).scale(q + t)


def test_unicellular_search():
    assert unicellular_search(e(1, 1), 2) == [(DyckPath((0, 0)), 0)]


def test_encode_word(z_star):
    M = MarkedPath(z_star, frozenset({(1, 2), (2, 4), (3, 5)}))
    assert encode_word(M).symbols == (0, 2, 0, 2, 2, 0, 1, 1, 1)
    assert encode_word(_marked((0, 1))).symbols == (0, 0, 1, 1)


def test_run_word():
    assert run_word(LLTWord((0, 2, 1))) == e(2)
    assert run_word(LLTWord((0, 1))) == e(1)
    assert cm_run(_marked((0, 0), [(1, 2)])) == e(2)
    with pytest.raises(ConventionError):
        run_word(LLTWord((1, 0)))


def test_word_validation():
    with pytest.raises(InputError):
        LLTWord((0, 3, 1))
    with pytest.raises(InputError):
        LLTWord((0, 0, 1))


def test_cm_steps():
    F = cm_step("plus", 0, YSymF.constant(SymF.one()))
    assert F == YSymF(1, {(0,): SymF.one()})
    assert cm_step("minus", 1, F).to_symf() == e(1)
    with pytest.raises(ConventionError):
        cm_step("minus", 2, F)
    with pytest.raises(InputError):
        cm_step("sideways", 1, F)


def test_cm_ti():
    y1 = YSymF(2, {(1, 0): SymF.one()})
    expected = YSymF(2, {(0, 1): SymF.one(), (1, 0): SymF.one().scale(1 - q)})
    assert cm_ti(1, y1) == expected
    assert cm_ti(0, y1) == y1
    with pytest.raises(InputError):
        cm_ti(2, y1)


def test_cm_matches_word_fillings_exhaustively():
    for n in range(1, 5):
        for M in enum_marked(n):
            assert cm_run(M) == llt_marked(M), M.key()


def test_column_parking_functions():
    D = DyckPath((0, 1))
    assert len(enum_cpf(D, set())) == 2
    assert len(enum_cpf(D, {(1, 2)})) == 1
    assert llt_column(D, set()) == e(1, 1)
    assert llt_column(D) == e(2)
    with pytest.raises(InputError):
        enum_cpf(D, {(1, 3)})


def test_column_sum_without_marks_is_classical():
    for n in range(1, 5):
        for D in enum_dyck(n):
            assert llt_column(D) == llt_classical(D), D


def test_column_sum_matches_marked_path():
    for n in range(1, 6):
        for D in enum_dyck(n):
            Z = zeta_and_corners(D).path
            for T in subsets(forced_pairs(D)):
                assert llt_column(D, T) == llt_marked(MarkedPath(Z, frozenset(T))), (D, sorted(T))
