"""
lltlab - Exact Ring
===================
Polynomials and reduced rational functions in q and t over the integers.

``R`` is the polynomial ring ZZ[q,t] and ``K`` its fraction field. Both come
from sympy's sparse polynomial module, so elements are canonical: equal
values always have equal representations and fractions are kept in lowest
terms with a positive leading denominator coefficient.
"""

from __future__ import annotations
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.fields import field, FracElement
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring, PolyElement

from .models import InputError, NonPolynomialError, ConventionError


R, q, t = ring("q,t", ZZ)
K, qf, tf = field("q,t", ZZ)

BivarPoly = PolyElement
BivarRat = FracElement


# =============================================================================
# CONVERSIONS
# =============================================================================

def to_rat(value: Union[int, PolyElement, FracElement]) -> FracElement:
    """Lift an int, BivarPoly or BivarRat into the fraction field"""
    if isinstance(value, FracElement):
        return value
    if isinstance(value, PolyElement):
        return K.new(value.set_ring(K.ring), K.ring.one)
    if isinstance(value, Fraction):
        return K(value.numerator) / value.denominator
    return K(int(value))


def is_polynomial(value: FracElement) -> bool:
    return value.denom == 1


def to_poly(value: Union[int, PolyElement, FracElement]) -> PolyElement:
    """Drop to BivarPoly, raising NonPolynomialError on a real denominator"""
    if isinstance(value, PolyElement):
        return value
    if isinstance(value, FracElement):
        if value.denom != 1:
            raise NonPolynomialError(f"not a polynomial: {render_rat(value)}")
        return value.numer.set_ring(R)
    return R(int(value))


# =============================================================================
# Q-ANALOGS
# =============================================================================

def _check_nonnegative(*args: int):
    for a in args:
        if int(a) < 0:
            raise InputError(f"q-analog arguments must be nonnegative, got {a}")


@lru_cache(maxsize=None)
def q_int(k: int) -> PolyElement:
    """[k]_q = 1 + q + ... + q^(k-1)"""
    _check_nonnegative(k)
    return R.from_dict({(i, 0): 1 for i in range(k)})


@lru_cache(maxsize=None)
def q_pochhammer(k: int) -> PolyElement:
    """(q;q)_k = (1-q)(1-q^2)...(1-q^k)"""
    _check_nonnegative(k)
    result = R.one
    for i in range(1, k + 1):
        result *= 1 - q**i
    return result


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> PolyElement:
    """Gaussian binomial [n choose k]_q"""
    _check_nonnegative(n, k)
    if k > n:
        raise InputError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return R.one
    return q_binomial(n - 1, k - 1) + q**k * q_binomial(n - 1, k)


def q_analog(kind: str, *args: int) -> PolyElement:
    kinds = {"int": q_int, "pochhammer": q_pochhammer, "binomial": q_binomial}
    if kind not in kinds:
        raise InputError(f"unknown q-analog: {kind!r}")
    return kinds[kind](*args)


# =============================================================================
# ARITHMETIC
# =============================================================================

def rat_arith(op: str, a, b=None) -> FracElement:
    a = to_rat(a)
    if op == "neg":
        return -a
    b = to_rat(b)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise InputError("division by zero")
        return a / b
    raise InputError(f"unknown operation: {op!r}")


def exact_divide(p: PolyElement, d: PolyElement) -> PolyElement:
    """p / d, which must be exact"""
    try:
        return p.exquo(d)
    except ExactQuotientFailed:
        raise ConventionError(f"{render_poly(p)} is not divisible by {render_poly(d)}")


def shift_q(p: PolyElement) -> PolyElement:
    """Substitute q -> 1 + q, leaving t alone"""
    if not p:
        return p
    return p.compose(q, q + 1)


def is_npoly(p: PolyElement) -> bool:
    """All coefficients nonnegative integers"""
    return all(c >= 0 for c in p.coeffs()) if p else True


def pleth_power(value: FracElement, k: int) -> FracElement:
    """value(q^k, t^k): the image of a scalar under p_k"""
    value = to_rat(value)
    if k == 1:
        return value
    subs = [(q, q**k), (t, t**k)]
    return K.new(value.numer.compose(subs), value.denom.compose(subs))


def _reverse_q(p: PolyElement, degree: int) -> PolyElement:
    return p.ring.from_dict({(degree - i, j): c for (i, j), c in p.terms()})


def invert_q(value: FracElement) -> FracElement:
    """Substitute q -> 1/q exactly"""
    value = to_rat(value)
    if not value:
        return value
    num, den = value.numer, value.denom
    dn = max(i for i, _ in num.monoms())
    dd = max(i for i, _ in den.monoms())
    return K.new(_reverse_q(num, dn) * q**dd, _reverse_q(den, dd) * q**dn)


def specialize(p: PolyElement, q_value=None, t_value=None) -> PolyElement:
    """Fix q and/or t to integers, keeping the result in R"""
    subs = []
    if q_value is not None:
        subs.append((q, int(q_value)))
    if t_value is not None:
        subs.append((t, int(t_value)))
    if not subs or not p:
        return p
    return p.compose(subs)


def specialize_rat(value: FracElement, q_value=None, t_value=None) -> FracElement:
    value = to_rat(value)
    num = specialize(value.numer.set_ring(R), q_value, t_value)
    den = specialize(value.denom.set_ring(R), q_value, t_value)
    if not den:
        raise InputError("specialization makes a denominator vanish")
    return to_rat(num) / to_rat(den)


def substitute_t(p: PolyElement, image: PolyElement) -> PolyElement:
    """Replace t by a polynomial in q and t"""
    if not p:
        return p
    return p.compose(t, image)


def evaluate(p: PolyElement, q_value, t_value=1):
    """Numeric value of a BivarPoly; ints stay ints, Fractions stay exact"""
    return sum(int(c) * q_value**i * t_value**j for (i, j), c in p.terms())


# =============================================================================
# RENDERING
# =============================================================================

def _power(name: str, exp: int) -> str:
    if exp == 0:
        return ""
    return name if exp == 1 else f"{name}^{exp}"


def render_poly(p: PolyElement) -> str:
    """Canonical text: descending q-degree, then descending t-degree"""
    if not p:
        return "0"
    pieces = []
    for (i, j), c in sorted(p.terms(), key=lambda term: (-term[0][0], -term[0][1])):
        mono = "*".join(part for part in (_power("q", i), _power("t", j)) if part)
        size = abs(int(c))
        if not mono:
            body = str(size)
        elif size == 1:
            body = mono
        else:
            body = f"{size}*{mono}"
        pieces.append(("-" if c < 0 else "+") + body)
    text = "".join(pieces)
    return text[1:] if text.startswith("+") else text


def render_rat(value: FracElement) -> str:
    value = to_rat(value)
    num = value.numer.set_ring(R)
    if value.denom == 1:
        return render_poly(num)
    return f"({render_poly(num)})/({render_poly(value.denom.set_ring(R))})"


def poly_triples(p: PolyElement) -> List[List[int]]:
    """[[coeff, deg_q, deg_t], ...] in ascending monomial order"""
    return [[int(c), i, j] for (i, j), c in sorted(p.terms())]


def poly_from_triples(triples) -> PolyElement:
    terms = {}
    for coeff, dq, dt in triples:
        if dq < 0 or dt < 0:
            raise InputError(f"negative exponent in coefficient triple {[coeff, dq, dt]}")
        terms[(int(dq), int(dt))] = terms.get((int(dq), int(dt)), 0) + int(coeff)
    return R.from_dict({m: c for m, c in terms.items() if c})


def degrees(p: PolyElement) -> Tuple[int, int]:
    if not p:
        return (0, 0)
    return (max(i for i, _ in p.monoms()), max(j for _, j in p.monoms()))
