import json

import pytest

from lltlab import __version__
from lltlab.cli import build_parser, dispatch

D_STAR = "0,1,2,1,2,2"
D_STAR_TEXT = (
    "(q^5+4*q^4+5*q^3+2*q^2)*e[6] + (q^4+4*q^3+4*q^2+q)*e[5,1] + (q^3+2*q^2+q)*e[4,2]"
    " + (q^2+q)*e[4,1,1] + (q^2+q)*e[3,3] + (q+1)*e[3,2,1]"
)


def _out(capsys):
    return capsys.readouterr().out.strip()


def test_llt_shifted_text(capsys):
    assert dispatch(["llt", "--path", D_STAR, "--shift"]) == 0
    assert _out(capsys) == D_STAR_TEXT


def test_eexpand_matches_llt(capsys):
    assert dispatch(["eexpand", "--path", D_STAR, "--classical"]) == 0
    assert _out(capsys) == D_STAR_TEXT
    assert dispatch(["eexpand", "--path", "0,0,1,1,1,2", "--marks", "1:2,2:4,3:5"]) == 0
    assert _out(capsys) == D_STAR_TEXT


def test_llt_json(capsys):
    assert dispatch(["llt", "--path", D_STAR, "--shift", "--json"]) == 0
    payload = json.loads(_out(capsys))
    assert payload["basis"] == "e"
    assert payload["terms"][0]["index"] == [3, 2, 1]
    assert payload["terms"][-1] == {"index": [6], "coeff": [[2, 2, 0], [5, 3, 0], [4, 4, 0], [1, 5, 0]]}


def test_marked_routes(capsys):
    assert dispatch(["llt", "--path", "0,0", "--method", "perm", "--marks", "1:2"]) == 0
    assert _out(capsys) == "e[2]"
    assert dispatch(["llt", "--path", "0,0", "--method", "cm", "--marks", "1:2"]) == 0
    assert _out(capsys) == "e[2]"
    assert dispatch(["llt", "--path", "0,1", "--method", "perm", "--marks", "none"]) == 0
    assert _out(capsys) == "(q-1)*e[2] + e[1,1]"
    assert dispatch(["llt", "--path", "0,1", "--marks", "none"]) == 0
    assert _out(capsys) == "e[1,1]"
    assert dispatch(["llt", "--path", "0,1", "--marks", "1:2"]) == 0
    assert _out(capsys) == "e[2]"


def test_empty_path(capsys):
    assert dispatch(["eexpand", "--path", ""]) == 0
    assert _out(capsys) == "1"


def test_hall_littlewood_word(capsys):
    assert dispatch(["hl", "--op", "B", "--word", "3,1,1", "--shift"]) == 0
    assert _out(capsys) == "(q^3+2*q^2)*e[5] + (q^2+2*q)*e[4,1] + q*e[3,2] + e[3,1,1]"


def test_nabla_schur(capsys):
    assert dispatch(["nabla", "--n", "2"]) == 0
    assert _out(capsys) == "s[2] + (q+t)*s[1,1]"
    assert dispatch(["nabla", "--n", "3", "--hilbert", "--q", "2", "--t", "1"]) == 0
    assert _out(capsys) == "38"


def test_tables(capsys):
    assert dispatch(["table", "--kind", "kreweras", "--n", "3"]) == 0
    assert _out(capsys).splitlines() == ["0: 1", "1: 1", "2: q+2", "3: q^3+3*q^2+6*q+6"]
    assert dispatch(["table", "--kind", "pi", "--n", "2", "--json"]) == 0
    rows = json.loads(_out(capsys))["rows"]
    assert rows == [{"index": "2", "coeff": [[1, 0, 0]]}, {"index": "1,1", "coeff": [[1, 0, 0]]}]


def test_verify(capsys):
    assert dispatch(["verify", "--suite", "prop31", "--n", "4", "--json"]) == 0
    report = json.loads(_out(capsys))
    assert report["passed"] is True
    assert report["instances"] == 14

    assert dispatch(["verify", "--suite", "thm31", "--n", "3"]) == 0
    assert "thm31: PASS over 2 instances" in _out(capsys)


def test_verify_failure_exit_code(capsys):
    argv = ["verify", "--suite", "recursion", "--n", "3", "--residual-marks", "all_corners", "--json"]
    assert dispatch(argv) == 1
    report = json.loads(_out(capsys))
    assert "Z,T=0,0,1|" in [failure["instance"] for failure in report["failures"]]


def test_input_errors(capsys):
    assert dispatch(["llt", "--path", "0,2"]) == 2
    assert "error:" in capsys.readouterr().err
    assert dispatch(["llt", "--path", "0,1", "--method", "perm", "--marks", "1:2"]) == 2
    assert dispatch(["verify", "--suite", "prop31", "--n", "20"]) == 2
    assert dispatch(["table", "--kind", "kreweras", "--n", "-1"]) == 2


def test_usage_errors(capsys):
    assert dispatch(["bogus"]) == 2
    assert dispatch(["llt", "--path", "0", "--frobnicate"]) == 2
    assert dispatch([]) == 2


def test_cache_dir_flag(tmp_path, capsys):
    store = tmp_path / "store"
    assert dispatch(["llt", "--path", "0,1", "--cache-dir", str(store)]) == 0
    first = _out(capsys)
    assert len(list(store.glob("*.json"))) == 1
    assert dispatch(["llt", "--path", "0,1", "--cache-dir", str(store)]) == 0
    assert _out(capsys) == first


def test_version(capsys):
    with pytest.raises(SystemExit):
        build_parser().parse_args(["--version"])
    assert __version__ in capsys.readouterr().out
