"""
lltlab - Plethystic Evaluation
==============================
Plethysm over a closed grammar of alphabets, computed on power sums.

p_k maps to:

    X          p_k
    X/(1-q)    p_k / (1 - q^k)
    X*g        g(q^k, t^k) p_k
    X(1-z)     p_k (1 - z^k)
    X+g*y      p_k + g(q^k, t^k) y^k      (X-g*y likewise)
    1/(1-q)    1 / (1 - q^k)
    g          g(q^k, t^k)                 (a scalar alphabet)

Alphabets carrying z or y return a YSymF over one auxiliary variable.
"""

from __future__ import annotations
import re
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from sympy import Symbol, SympifyError, sympify
from sympy.polys.polyerrors import CoercionFailed

from ..models import Basis, Partition, InputError
from ..ring import K, qf, pleth_power, to_rat, render_rat
from .basis import SymF, convert_basis
from .ysym import YSymF


class AlphabetKind(Enum):
    X = "X"
    X_OVER_ONE_MINUS_Q = "X/(1-q)"
    X_TIMES = "X*g"
    X_ONE_MINUS_Z = "X(1-z)"
    X_PLUS_Y = "X+g*y"
    X_MINUS_Y = "X-g*y"
    ONE_OVER_ONE_MINUS_Q = "1/(1-q)"
    SCALAR = "g"

    @property
    def auxiliary(self) -> int:
        return 1 if self in (AlphabetKind.X_ONE_MINUS_Z, AlphabetKind.X_PLUS_Y, AlphabetKind.X_MINUS_Y) else 0


_SYMBOLS = {"q": Symbol("q"), "t": Symbol("t")}


def parse_scalar(text: str):
    """Parse a rational function of q and t, e.g. ``(q-1)`` or ``1/(1-q^2)``"""
    try:
        expr = sympify(text.replace("^", "**"), locals=_SYMBOLS)
        return K.from_expr(expr)
    except (SympifyError, ValueError, TypeError, CoercionFailed) as e:
        raise InputError(f"not a rational function of q and t: {text!r} ({e})")


@dataclass(frozen=True)
class Alphabet:
    kind: AlphabetKind
    gamma: Optional[object] = None

    @classmethod
    def parse(cls, text: str) -> "Alphabet":
        compact = re.sub(r"\s+", "", text)
        fixed = {
            "X": AlphabetKind.X,
            "X/(1-q)": AlphabetKind.X_OVER_ONE_MINUS_Q,
            "X(1-z)": AlphabetKind.X_ONE_MINUS_Z,
            "X*(1-z)": AlphabetKind.X_ONE_MINUS_Z,
            "1/(1-q)": AlphabetKind.ONE_OVER_ONE_MINUS_Q,
        }
        if compact in fixed:
            return cls(fixed[compact])
        match = re.fullmatch(r"X([+-])(?:(.+)\*)?y", compact)
        if match:
            gamma = parse_scalar(match.group(2)) if match.group(2) else K.one
            kind = AlphabetKind.X_PLUS_Y if match.group(1) == "+" else AlphabetKind.X_MINUS_Y
            return cls(kind, gamma)
        match = re.fullmatch(r"X\*(.+)", compact) or re.fullmatch(r"(.+)\*X", compact)
        if match:
            return cls(AlphabetKind.X_TIMES, parse_scalar(match.group(1)))
        if not re.search(r"[XYyz]", compact):
            return cls(AlphabetKind.SCALAR, parse_scalar(compact))
        raise InputError(f"alphabet outside the supported grammar: {text!r}")

    def __str__(self):
        if self.gamma is None:
            return self.kind.value
        return self.kind.value.replace("g", f"({render_rat(self.gamma)})")


Image = List[Tuple[Tuple[int, ...], Tuple[int, ...], object]]


def _power_sum_image(alphabet: Alphabet, k: int) -> Image:
    """Image of p_k as (aux exponent, p-index, coefficient) triples"""
    kind = alphabet.kind
    if kind == AlphabetKind.X:
        return [((), (k,), K.one)]
    if kind == AlphabetKind.X_OVER_ONE_MINUS_Q:
        return [((), (k,), K.one / (1 - qf**k))]
    if kind == AlphabetKind.X_TIMES:
        return [((), (k,), pleth_power(alphabet.gamma, k))]
    if kind == AlphabetKind.X_ONE_MINUS_Z:
        return [((0,), (k,), K.one), ((k,), (k,), -K.one)]
    if kind in (AlphabetKind.X_PLUS_Y, AlphabetKind.X_MINUS_Y):
        sign = 1 if kind == AlphabetKind.X_PLUS_Y else -1
        return [((0,), (k,), K.one), ((k,), (), pleth_power(alphabet.gamma, k) * sign)]
    if kind == AlphabetKind.ONE_OVER_ONE_MINUS_Q:
        return [((), (), K.one / (1 - qf**k))]
    return [((), (), pleth_power(alphabet.gamma, k))]


def plethysm_eval(F: SymF, alphabet) -> YSymF:
    """F[A] for an alphabet A of the grammar above"""
    if isinstance(alphabet, str):
        alphabet = Alphabet.parse(alphabet)
    aux = alphabet.kind.auxiliary
    if alphabet.kind == AlphabetKind.X:
        return YSymF.constant(F, aux)
    power = convert_basis(F, Basis.P)
    total: Dict[Tuple[Tuple[int, ...], Partition], object] = defaultdict(lambda: K.zero)
    start = ((0,) * aux, Partition(()))
    for mu, coeff in power.terms.items():
        current = {start: coeff}
        for part in mu:
            image = _power_sum_image(alphabet, part)
            step: Dict[Tuple[Tuple[int, ...], Partition], object] = defaultdict(lambda: K.zero)
            for (exp, nu), c in current.items():
                for image_exp, image_index, image_coeff in image:
                    key = (tuple(a + b for a, b in zip(exp, image_exp)), nu.union(image_index))
                    step[key] += c * image_coeff
            current = step
        for key, c in current.items():
            total[key] += c
    grouped: Dict[Tuple[int, ...], Dict[Partition, object]] = defaultdict(dict)
    for (exp, nu), c in total.items():
        if c:
            grouped[exp][nu] = c
    values = {}
    for exp, terms in grouped.items():
        values[exp] = convert_basis(SymF(Basis.P, terms), F.basis)
    return YSymF(aux, values)


def scalar_pleth(F: SymF, gamma):
    """F evaluated at a scalar alphabet, as a BivarRat"""
    result = plethysm_eval(F, Alphabet(AlphabetKind.SCALAR, to_rat(gamma))).to_symf()
    return result.coefficient(())
