import pytest

from lltlab.models import (
    Basis, Composition, DyckPath, Failure, HLKind, InputError, MarkedPath, Partition,
    ResidualMarks, VerifyReport,
)


def test_partition():
    mu = Partition((3, 1))
    assert mu.size == 4
    assert mu.conjugate() == (2, 1, 1)
    assert mu.union((2,)) == (3, 2, 1)
    assert Partition.from_parts((1, 0, 3)) == (3, 1)
    assert {mu: 1}[(3, 1)] == 1
    with pytest.raises(InputError):
        Partition((1, 2))
    with pytest.raises(InputError):
        Composition((2, 0))


def test_enum_parsing():
    assert Basis.from_string(" Schur ") == Basis.S
    assert Basis.from_string("f") == Basis.F
    assert HLKind.from_string("btilde") == HLKind.BTILDE
    assert ResidualMarks.from_string("all-corners") == ResidualMarks.ALL_CORNERS
    assert ResidualMarks.from_string("inherited") == ResidualMarks.INHERITED
    for parse, text in ((Basis.from_string, "q"), (HLKind.from_string, "D"), (ResidualMarks.from_string, "some")):
        with pytest.raises(InputError):
            parse(text)


def test_marked_path_key():
    M = MarkedPath(DyckPath((0, 0, 1)), frozenset({(1, 2)}))
    assert M.key() == "0,0,1|1:2"
    assert MarkedPath(DyckPath((0, 0))).key() == "0,0|"


def test_report_dict():
    report = VerifyReport(suite="prop31", bound=3, instances=5)
    assert report.passed
    report.failures.append(Failure(instance="D=0,1", expected="a", got="b"))
    payload = report.to_dict()
    assert payload["passed"] is False
    assert payload["failures"] == [{"instance": "D=0,1", "expected": "a", "got": "b"}]
