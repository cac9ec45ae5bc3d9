import random

import pytest

from lltlab.models import ConventionError, InputError, NonPolynomialError
from lltlab.ring import (
    K, R, q, t, qf, to_rat, to_poly, q_int, q_pochhammer, q_binomial, q_analog, rat_arith,
    shift_q, is_npoly, invert_q, pleth_power, exact_divide, specialize,
    evaluate, render_poly, render_rat, poly_triples, poly_from_triples,
)


def test_q_integers():
    assert q_int(0) == R.zero
    assert q_int(3) == 1 + q + q**2
    assert q_pochhammer(0) == R.one
    assert q_pochhammer(2) == (1 - q) * (1 - q**2)


def test_q_binomial():
    assert q_binomial(5, 3) == 1 + q + 2*q**2 + 2*q**3 + 2*q**4 + q**5 + q**6
    assert q_binomial(4, 0) == R.one
    assert q_analog("binomial", 5, 3) == q_binomial(5, 3)


def test_negative_arguments_rejected():
    with pytest.raises(InputError):
        q_int(-1)
    with pytest.raises(InputError):
        q_binomial(2, 3)
    with pytest.raises(InputError):
        q_analog("nonsense", 2)


def test_shift_q():
    assert shift_q(q_pochhammer(2)) == q**3 + 2*q**2
    assert shift_q(t) == t
    assert is_npoly(shift_q(q_pochhammer(2)))
    assert not is_npoly(q_pochhammer(2))


def _random_poly(rng):
    return R.from_dict({
        (rng.randint(0, 4), rng.randint(0, 2)): rng.randint(-5, 5) for _ in range(rng.randint(1, 4))
    })


def test_shift_q_is_a_ring_homomorphism():
    rng = random.Random(0)
    assert shift_q(R.one) == R.one
    for _ in range(30):
        a, b, c = _random_poly(rng), _random_poly(rng), _random_poly(rng)
        assert shift_q(a * b) == shift_q(a) * shift_q(b)
        assert shift_q(a + b) == shift_q(a) + shift_q(b)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert to_rat(a) * to_rat(b) == to_rat(a * b)


def test_to_poly_refuses_denominators():
    assert to_poly(to_rat(q + 1)) == q + 1
    with pytest.raises(NonPolynomialError):
        to_poly(K.one / (1 - qf))


def test_rat_arith():
    assert rat_arith("div", q, 1 + q) == qf / (1 + qf)
    assert rat_arith("neg", q) == -qf
    with pytest.raises(InputError):
        rat_arith("div", q, 0)


def test_exact_divide():
    assert exact_divide(q**2 - 1, q - 1) == q + 1
    with pytest.raises(ConventionError):
        exact_divide(q**2 + 1, q - 1)


def test_invert_and_pleth_power():
    assert invert_q(to_rat(q**2 + q)) == (1 + qf) / qf**2
    assert pleth_power(to_rat(q + t), 2) == to_rat(q**2 + t**2)


def test_specialize_and_evaluate():
    p = 1 + q + t
    assert specialize(p, q_value=1) == 2 + t
    assert evaluate(p, 2, 1) == 4


def test_rendering():
    assert render_poly(R.zero) == "0"
    assert render_poly(q**2 - 2*q*t + 3) == "q^2-2*q*t+3"
    assert render_rat(qf / (1 + qf)) == "(q)/(q+1)"


def test_triples():
    p = 2*q**2 - q*t + 5
    assert poly_triples(p) == [[5, 0, 0], [-1, 1, 1], [2, 2, 0]]
    assert poly_from_triples(poly_triples(p)) == p
    with pytest.raises(InputError):
        poly_from_triples([[1, -1, 0]])
