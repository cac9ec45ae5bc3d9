import json

import pytest

from lltlab.epositivity import EExpansion
from lltlab.models import InputError
from lltlab.render import (
    render_symf, render_eexpansion, symf_to_json, symf_from_json, eexpansion_to_json,
    eexpansion_from_json, dumps, parse_int_list, parse_marks, parse_partition,
)
from lltlab.ring import K, q, qf
from lltlab.symfunc import SymF, e, s


def test_text_form():
    assert render_symf(e(1, 1) + e(2).scale(q - 1)) == "(q-1)*e[2] + e[1,1]"
    assert render_symf(e(3).scale(-1) + e(2, 1).scale(q)) == "-e[3] + q*e[2,1]"
    assert render_symf(SymF.zero()) == "0"
    assert render_symf(SymF.one().scale(3)) == "3"
    text = render_symf(s(2).scale(K.one / (1 - qf)))
    assert text.startswith("((") and text.endswith("))*s[2]")


def test_text_form_of_expansions():
    expansion = EExpansion({(5,): q**3 + 2*q**2, (3, 1, 1): 1, (3, 2): q})
    assert render_eexpansion(expansion) == "(q^3+2*q^2)*e[5] + q*e[3,2] + e[3,1,1]"
    assert str(EExpansion({})) == "0"


def test_json_form():
    payload = symf_to_json(e(2).scale(q - 1) + e(1, 1))
    assert payload == {
        "basis": "e",
        "terms": [
            {"index": [1, 1], "coeff": [[1, 0, 0]]},
            {"index": [2], "coeff": [[-1, 0, 0], [1, 1, 0]]},
        ],
    }
    assert json.loads(dumps(payload)) == payload


def test_json_keeps_denominators():
    F = s(2).scale(K.one / (1 - qf)) + s(1, 1)
    payload = symf_to_json(F)
    assert any("den" in row for row in payload["terms"])
    assert symf_from_json(payload) == F


def test_expansion_json():
    expansion = EExpansion({(2,): q, (1, 1): 1})
    assert eexpansion_from_json(eexpansion_to_json(expansion)) == expansion
    with pytest.raises(InputError):
        eexpansion_from_json(symf_to_json(s(2)))


def test_malformed_payloads():
    with pytest.raises(InputError):
        symf_from_json({"terms": []})
    with pytest.raises(InputError):
        symf_from_json({"basis": "e", "terms": [{"index": [1, 2], "coeff": [[1, 0, 0]]}]})


def test_parse_int_list():
    assert parse_int_list("0,1,2") == (0, 1, 2)
    assert parse_int_list("[0, 1 2]") == (0, 1, 2)
    assert parse_int_list("") == ()
    with pytest.raises(InputError):
        parse_int_list("0,x")


def test_parse_marks():
    available = {(1, 2), (2, 4)}
    assert parse_marks("all", available) == frozenset(available)
    assert parse_marks("none", available) == frozenset()
    assert parse_marks("1:2, 3:5", available) == {(1, 2), (3, 5)}
    with pytest.raises(InputError):
        parse_marks("1-2", available)


def test_parse_partition():
    assert parse_partition("1,3,1") == (3, 1, 1)
    with pytest.raises(InputError):
        parse_partition("2,0")
