"""
lltlab - Rendering
==================
Text and JSON forms of symmetric functions and e-expansions, and parsing of
the path, mark and partition literals accepted on the command line.

Text form: terms by descending index, e.g. "(q^3+2*q^2)*e[5] + q*e[3,2]".
JSON form: {"basis": "e", "terms": [{"index": [4,2], "coeff": [[c, dq, dt]]}]}
with terms ascending by index; a "den" list appears only when a coefficient
is not a polynomial.
"""

from __future__ import annotations
import json
import re
from typing import FrozenSet, Iterable, List, Tuple

from .models import Basis, InputError, Partition
from .ring import (
    R, K, to_rat, is_polynomial, render_poly, render_rat, poly_triples, poly_from_triples,
)

Pair = Tuple[int, int]


# =============================================================================
# TEXT
# =============================================================================

def _label(basis: Basis, index: Partition) -> str:
    return f"{basis.value}[{','.join(str(part) for part in index)}]"


def _term(coeff, label: str) -> str:
    value = to_rat(coeff)
    if not label:
        return render_rat(value)
    if is_polynomial(value):
        text = render_poly(value.numer.set_ring(R))
        if text == "1":
            return label
        if text == "-1":
            return f"-{label}"
        if len(value.numer.terms()) == 1:
            return f"{text}*{label}"
        return f"({text})*{label}"
    return f"({render_rat(value)})*{label}"


def render_terms(basis: Basis, terms) -> str:
    pieces = [
        _term(coeff, _label(basis, index) if index else "")
        for index, coeff in sorted(terms.items(), key=lambda kv: kv[0], reverse=True)
    ]
    return " + ".join(pieces) if pieces else "0"


def render_symf(F) -> str:
    return render_terms(F.basis, F.terms)


def render_eexpansion(expansion) -> str:
    return render_terms(Basis.E, expansion.terms)


# =============================================================================
# JSON
# =============================================================================

def terms_to_json(basis: Basis, terms) -> dict:
    rows = []
    for index, coeff in sorted(terms.items(), key=lambda kv: kv[0]):
        value = to_rat(coeff)
        row = {"index": list(index), "coeff": poly_triples(value.numer.set_ring(R))}
        if not is_polynomial(value):
            row["den"] = poly_triples(value.denom.set_ring(R))
        rows.append(row)
    return {"basis": basis.value, "terms": rows}


def symf_to_json(F) -> dict:
    return terms_to_json(F.basis, F.terms)


def eexpansion_to_json(expansion) -> dict:
    return terms_to_json(Basis.E, expansion.terms)


def _terms_from_json(payload: dict):
    try:
        basis = Basis.from_string(payload["basis"])
        terms = {}
        for row in payload["terms"]:
            value = K.new(poly_from_triples(row["coeff"]), R.one)
            if "den" in row:
                value = value / K.new(poly_from_triples(row["den"]), R.one)
            terms[Partition(row["index"])] = value
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"malformed symmetric function payload: {e}") from e
    return basis, terms


def symf_from_json(payload: dict):
    from .symfunc import SymF
    basis, terms = _terms_from_json(payload)
    return SymF(basis, terms)


def eexpansion_from_json(payload: dict):
    from .epositivity import EExpansion
    basis, terms = _terms_from_json(payload)
    if basis != Basis.E:
        raise InputError(f"an e-expansion payload must use basis 'e', got {basis.value!r}")
    return EExpansion(terms)


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)


# =============================================================================
# PARSING
# =============================================================================

def parse_int_list(text: str, what: str = "list") -> Tuple[int, ...]:
    """'0,1,2' -> (0, 1, 2); blanks are ignored and '' is the empty list"""
    text = (text or "").strip().strip("[]()")
    if not text:
        return ()
    try:
        return tuple(int(piece) for piece in re.split(r"[,\s]+", text) if piece)
    except ValueError as e:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from e


_PAIR = re.compile(r"^\s*(\d+)\s*:\s*(\d+)\s*$")


def parse_marks(text: str, available: Iterable[Pair]) -> FrozenSet[Pair]:
    """'all' | 'none' | 'i:j,k:l'; 'all' resolves to the pairs in available"""
    keyword = (text or "none").strip().lower()
    if keyword == "all":
        return frozenset(available)
    if keyword in ("none", ""):
        return frozenset()
    pairs: List[Pair] = []
    for piece in keyword.split(","):
        match = _PAIR.match(piece)
        if not match:
            raise InputError(f"marks are 'all', 'none' or i:j pairs, got {piece!r}")
        pairs.append((int(match.group(1)), int(match.group(2))))
    return frozenset(pairs)


def parse_partition(text: str) -> Partition:
    parts = parse_int_list(text, "partition")
    if any(part <= 0 for part in parts):
        raise InputError(f"partition parts must be positive, got {list(parts)}")
    return Partition.from_parts(parts)
