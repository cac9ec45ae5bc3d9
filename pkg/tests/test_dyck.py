import pytest

from lltlab.dyck import (
    enum_dyck, enum_marked, enum_pf, hits, columns, pf_statistics, dinvset,
    forced_pairs, path_dinvset, corners, zeta_and_corners, delete_cells,
    relabel_pairs, subsets, maximal_pf_and_dinvset,
)
from lltlab.models import DyckPath, MarkedPath, ParkingFunction, InputError


def test_catalan_counts():
    assert [len(enum_dyck(n)) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_parking_function_count():
    assert sum(len(enum_pf(D)) for D in enum_dyck(3)) == 16


def test_marked_paths_of_size_two():
    marked = {(M.path.area_word, M.marks) for M in enum_marked(2)}
    assert marked == {
        ((0, 0), frozenset()),
        ((0, 0), frozenset({(1, 2)})),
        ((0, 1), frozenset()),
    }


def test_invalid_paths():
    with pytest.raises(InputError):
        DyckPath((1, 0))
    with pytest.raises(InputError):
        DyckPath((0, 2))
    with pytest.raises(InputError):
        MarkedPath(DyckPath((0, 0)), frozenset({(2, 3)}))


def test_coarea():
    D = DyckPath((0, 1, 2, 1, 2, 2))
    assert D.coarea() == (0, 0, 0, 2, 2, 3)
    assert DyckPath.from_coarea(D.coarea()) == D
    assert D.step_word() == (0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 1)


def test_hits_and_columns():
    assert hits(DyckPath((0, 1, 0))) == 2
    assert columns(DyckPath((0, 1, 2, 1, 2, 2))) == [[1, 2, 3], [4, 5], [6]]


def test_column_strict_cars():
    with pytest.raises(InputError):
        ParkingFunction(DyckPath((0, 1)), (2, 1))


def test_pf_statistics():
    stats = pf_statistics(ParkingFunction(DyckPath((0, 0)), (1, 2)))
    assert stats.dinv == 1
    assert stats.sigma == (2, 1)
    assert stats.pides == (1, 1)
    stats = pf_statistics(ParkingFunction(DyckPath((0, 0)), (2, 1)))
    assert stats.dinv == 0
    assert stats.pides == (2,)


def test_dinvset_and_forced_pairs(d_star):
    PF, pairs = maximal_pf_and_dinvset(d_star)
    assert PF.cars == (1, 2, 4, 3, 5, 6)
    assert pairs == {(2, 3), (3, 4), (4, 5), (4, 6), (5, 6)}
    assert dinvset(d_star) == pairs
    assert forced_pairs(d_star) == {(1, 2), (2, 4), (3, 5)}


def test_zeta(d_star, z_star):
    M = zeta_and_corners(d_star)
    assert M.path == z_star
    assert M.marks == forced_pairs(d_star)
    assert corners(z_star) == forced_pairs(d_star)
    assert path_dinvset(z_star) == dinvset(d_star)


def test_zeta_area_is_dinv():
    for n in range(1, 6):
        for D in enum_dyck(n):
            M = zeta_and_corners(D)
            assert M.path.area == len(dinvset(D))
            assert len(forced_pairs(D)) == n - len(columns(D))


def test_zeta_corners_and_dinv_pairs():
    for n in range(1, 8):
        for D in enum_dyck(n):
            Z = zeta_and_corners(D).path
            assert corners(Z) == forced_pairs(D), D
            assert path_dinvset(Z) == dinvset(D), D


def test_delete_cells():
    assert delete_cells(DyckPath((0, 0, 1)), {3}) == DyckPath((0, 0))
    assert delete_cells(DyckPath((0, 0, 1)), {2, 3}) == DyckPath((0,))
    with pytest.raises(InputError):
        delete_cells(DyckPath((0, 0)), {5})


def test_relabel_pairs():
    assert relabel_pairs({(1, 3), (2, 3)}, {2}) == {(1, 2)}
    assert relabel_pairs({(1, 2)}, set()) == {(1, 2)}


def test_subsets():
    assert list(subsets([2, 1])) == [(), (1,), (2,), (1, 2)]
