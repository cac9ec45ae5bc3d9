"""
lltlab - Carlsson-Mellit Operators
==================================
LLT polynomials from the compressed 0/1/2 word of a marked path, using
the operators d+, d- and the Hecke generators T_i on Lambda[X; q, y].

Everything is kept in the e-basis. With E = (q-1)y,

    e_j[E]  = y^j (-1)^(j-1) (q-1)            (j >= 1)
    e_j[-E] = y^j (-1)^(j-1) q^(j-1) (1-q)    (j >= 1)

and e_la[X + E] expands factor by factor.
"""

from __future__ import annotations
import logging
from collections import defaultdict
from functools import lru_cache
from typing import Dict, List, Tuple

from ..dyck import corners
from ..models import Basis, LLTWord, MarkedPath, Partition, ConventionError, InputError
from ..ring import K, qf, to_poly, exact_divide, R, q
from ..symfunc import SymF, YSymF

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Flat = Dict[Tuple[Exponent, Partition], object]

EMPTY = Partition(())


# =============================================================================
# WORDS
# =============================================================================

def encode_word(M: MarkedPath) -> LLTWord:
    """Step word of Z (0 = North, 1 = East) with each marked East-North pair fused into 2"""
    Z = M.path
    symbols: List[int] = []
    x = 0
    for row in range(1, Z.n + 1):
        target = Z.column(row)
        symbols.extend([1] * (target - x))
        corner = (row - Z.area_word[row - 1] - 1, row)
        if corner in M.marks and symbols and symbols[-1] == 1:
            symbols[-1] = 2
        else:
            symbols.append(0)
        x = target
    symbols.extend([1] * (Z.n - x))
    return LLTWord(tuple(symbols))


# =============================================================================
# FLAT REPRESENTATION
# =============================================================================

def _flatten(F: YSymF) -> Flat:
    flat: Flat = {}
    for exp, value in F.terms.items():
        for la, c in value.to(Basis.E).terms.items():
            flat[(exp, la)] = c
    return flat


def _unflatten(k: int, flat: Flat) -> YSymF:
    grouped: Dict[Exponent, Dict[Partition, object]] = defaultdict(dict)
    for (exp, la), c in flat.items():
        if c:
            grouped[exp][la] = c
    return YSymF(k, {exp: SymF(Basis.E, terms) for exp, terms in grouped.items()})


def _prune(flat: Flat) -> Flat:
    return {key: c for key, c in flat.items() if c}


@lru_cache(maxsize=None)
def _alphabet_scalars(sign: int, top: int) -> Tuple[object, ...]:
    """e_j[sign*(q-1)y] / y^j for j = 0..top"""
    values = [K.one]
    for j in range(1, top + 1):
        if sign > 0:
            values.append((-1) ** (j - 1) * (qf - 1))
        else:
            values.append((-1) ** (j - 1) * qf ** (j - 1) * (1 - qf))
    return tuple(values)


@lru_cache(maxsize=None)
def _expand_shifted(la: Partition, sign: int) -> Tuple[Tuple[int, Partition, object], ...]:
    """e_la[X + sign*(q-1)y] as (y-degree, e-index, coefficient) triples"""
    scalars = _alphabet_scalars(sign, la[0] if la else 0)
    current: Dict[Tuple[int, Partition], object] = {(0, EMPTY): K.one}
    for part in la:
        step: Dict[Tuple[int, Partition], object] = defaultdict(lambda: K.zero)
        for (degree, nu), c in current.items():
            for j in range(part + 1):
                step[(degree + j, nu.union((part - j,)))] += c * scalars[j]
        current = step
    return tuple((degree, nu, c) for (degree, nu), c in current.items() if c)


# =============================================================================
# OPERATORS
# =============================================================================

def _divided_difference(a: int, b: int) -> List[Tuple[int, int, int]]:
    """(y_i^a y_{i+1}^b - y_i^b y_{i+1}^a) / (y_{i+1} - y_i) as (sign, exp_i, exp_{i+1})"""
    if a > b:
        d = a - b
        return [(-1, b + d - 1 - j, b + j) for j in range(d)]
    if a < b:
        d = b - a
        return [(1, a + j, a + d - 1 - j) for j in range(d)]
    return []


def _ti(flat: Flat, i: int) -> Flat:
    """T_i F = s_i F + (q-1) y_i (F - s_i F) / (y_{i+1} - y_i)"""
    if i == 0:
        return flat
    out: Flat = defaultdict(lambda: K.zero)
    step = qf - 1
    for (exp, la), c in flat.items():
        a, b = exp[i - 1], exp[i]
        swapped = exp[: i - 1] + (b, a) + exp[i + 1:]
        out[(swapped, la)] += c
        for sign, ea, eb in _divided_difference(a, b):
            key = (exp[: i - 1] + (ea + 1, eb) + exp[i + 1:], la)
            out[key] += c * step * sign
    return _prune(out)


def _plus(flat: Flat, k: int) -> Flat:
    """d+ : k variables in, k+1 out"""
    out: Flat = defaultdict(lambda: K.zero)
    for (exp, la), c in flat.items():
        if len(exp) != k:
            raise ConventionError(f"d+ at level {k} got a term over {len(exp)} variables")
        for degree, nu, w in _expand_shifted(la, 1):
            out[(exp + (degree,), nu)] += c * w
    result = _prune(out)
    for i in range(k, 0, -1):
        result = _ti(result, i)
    return result


def _minus(flat: Flat, k: int) -> Flat:
    """d- : k variables in, k-1 out"""
    if k < 1:
        raise ConventionError(f"d- needs at least one variable, got level {k}")
    out: Flat = defaultdict(lambda: K.zero)
    for (exp, la), c in flat.items():
        if len(exp) != k:
            raise ConventionError(f"d- at level {k} got a term over {len(exp)} variables")
        head, power = exp[:-1], exp[-1]
        for degree, nu, w in _expand_shifted(la, -1):
            total = power + degree
            out[(head, nu.union((total + 1,)))] += c * w * (-1) ** total
    return _prune(out)


def _bracket(flat: Flat, k: int) -> Flat:
    """(d-^{k+1} d+^k F - d+^{k-1} d-^k F) / (q - 1)"""
    if k < 1:
        raise ConventionError(f"bracket needs level >= 1, got {k}")
    first = _minus(_plus(flat, k), k + 1)
    second = _plus(_minus(flat, k), k - 1)
    out: Flat = dict(first)
    for key, c in second.items():
        out[key] = out[key] - c if key in out else -c
    divisor = q - 1
    result: Flat = {}
    for key, c in out.items():
        if not c:
            continue
        numerator = to_poly(c)
        result[key] = K.new(exact_divide(numerator, divisor), R.one)
    return result


# =============================================================================
# PUBLIC API
# =============================================================================

def cm_ti(i: int, F: YSymF) -> YSymF:
    if i != 0 and not 1 <= i < F.k:
        raise InputError(f"T_{i} needs 1 <= i < {F.k}")
    return _unflatten(F.k, _ti(_flatten(F), i))


def cm_step(mode: str, k: int, F: YSymF) -> YSymF:
    if F.k != k:
        raise ConventionError(f"{mode} at level {k} got a function of {F.k} variables")
    flat = _flatten(F)
    if mode == "plus":
        return _unflatten(k + 1, _plus(flat, k))
    if mode == "minus":
        return _unflatten(k - 1, _minus(flat, k))
    if mode == "bracket":
        return _unflatten(k, _bracket(flat, k))
    raise InputError(f"unknown step: {mode!r}")


def run_word(word: LLTWord) -> SymF:
    """Fold the operators over the word read right to left, starting from 1

    A 1 applies d+ and raises the level, a 0 applies d- and lowers it, a 2
    applies the bracket step. So (0, 1) is d- d+ 1 = e_1 and (1, 0) fails.
    """
    flat: Flat = {((), EMPTY): K.one}
    k = 0
    for symbol in reversed(word.symbols):
        if symbol == 1:
            flat = _plus(flat, k)
            k += 1
        elif symbol == 2:
            flat = _bracket(flat, k)
        else:
            if k == 0:
                raise ConventionError(f"word {list(word.symbols)} drives the level below zero")
            flat = _minus(flat, k)
            k -= 1
    if k != 0:
        raise ConventionError(f"word {list(word.symbols)} ends at level {k}")
    return _unflatten(0, flat).to_symf(Basis.E)


def cm_run(M: MarkedPath) -> SymF:
    if not M.marks <= corners(M.path):
        raise InputError(f"marks {sorted(M.marks - corners(M.path))} are not corners of {M.path}")
    return run_word(encode_word(M))
