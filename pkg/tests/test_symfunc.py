import random

import pytest

from lltlab.models import Basis, InputError
from lltlab.ring import K, qf, q
from lltlab.symfunc import (
    SymF, e, h, p, s, f, partitions_of, compositions_of, distinct_rearrangements,
    kostka, mn_character, straighten_schur, perp_skew, e_perp_on_e, h_perp_on_e,
    omega, hall_scalar, p1_derivative, functionals, Alphabet, AlphabetKind,
    plethysm_eval, scalar_pleth, specialize_symf, convert_basis,
)


def test_partitions_and_compositions():
    assert partitions_of(4)[0] == (4,)
    assert set(partitions_of(4)) == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
    assert len(compositions_of(4)) == 8
    assert sorted(compositions_of(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert sorted(distinct_rearrangements((2, 1, 1))) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]


def test_change_of_basis():
    assert h(2) == e(1, 1) - e(2)
    assert s(1, 1) == e(2)
    assert f(1, 1) == h(2)
    assert f(2) == -p(2)
    assert e(2).to(Basis.P) == SymF(Basis.P, {(1, 1): K.one / 2, (2,): -K.one / 2})
    assert convert_basis(s(2), Basis.H) == h(2)
    assert convert_basis(e(1), Basis.E) == e(1)


def _mixed(basis, n):
    return SymF(basis, {mu: i + 1 for i, mu in enumerate(partitions_of(n))})


@pytest.mark.parametrize("n", range(1, 8))
def test_change_of_basis_round_trips(n):
    for source in Basis:
        x = _mixed(source, n)
        for target in Basis:
            assert x.to(target).to(source).terms == x.terms, (source, target)


def test_products():
    assert e(1) * e(1) == e(1, 1)
    assert (s(1) * s(1)).to(Basis.S) == s(2) + s(1, 1)
    assert e(1) ** 0 == SymF.one()


def test_kostka_and_characters():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (2, 1)) == 1
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((2, 1), (1, 1, 1)) == 2


def test_straighten_schur():
    assert straighten_schur((0, 2)) == (-1, (1, 1))
    assert straighten_schur((1, 2)) is None
    assert straighten_schur((2, 1)) == (1, (2, 1))
    with pytest.raises(InputError):
        straighten_schur((-1, 2))


def test_skewing():
    assert perp_skew("e", 1, e(2)) == e(1)
    assert perp_skew("h", 1, h(2)) == h(1)
    assert perp_skew("e", 3, e(2)) == SymF.zero()
    assert sorted(e_perp_on_e(1, (2, 1))) == [(1, 1), (2,)]
    assert sorted(h_perp_on_e(2, (2, 1))) == [(1,)]
    with pytest.raises(InputError):
        perp_skew("p", 1, e(1))


def test_omega_and_scalar_product():
    assert omega(e(2, 1)) == h(2, 1)
    assert omega(s(2, 1)) == s(2, 1)
    assert omega(p(2)) == -p(2)
    assert hall_scalar(e(2), f(2)) == 1
    assert hall_scalar(s(2, 1), s(2, 1)) == 1
    assert hall_scalar(s(3), s(2, 1)) == 0


def test_p1_derivative():
    assert p1_derivative(e(1, 1)) == e(1).scale(2)
    assert p1_derivative(e(1, 1), 2) == SymF.one().scale(2)
    assert functionals("p1_derivative", e(2)) == e(1)
    with pytest.raises(InputError):
        functionals("trace", e(1))


def test_alphabet_grammar():
    assert Alphabet.parse("X/(1-q)").kind == AlphabetKind.X_OVER_ONE_MINUS_Q
    plus = Alphabet.parse("X + q*y")
    assert plus.kind == AlphabetKind.X_PLUS_Y
    assert plus.gamma == qf
    assert Alphabet.parse("1+q").kind == AlphabetKind.SCALAR
    with pytest.raises(InputError):
        Alphabet.parse("Y^2")


def test_plethysm():
    assert scalar_pleth(e(2), 1 + q) == qf
    assert scalar_pleth(h(2), 1 + q) == 1 + qf + qf**2
    shifted = plethysm_eval(e(1), "X/(1-q)").to_symf()
    assert shifted == e(1).scale(K.one / (1 - qf))
    split = plethysm_eval(e(1), "X+y")
    assert split.coefficient((0,)) == e(1)
    assert split.coefficient((1,)) == SymF.one()


def test_specialize_symf():
    F = e(2).scale(1 + q)
    assert specialize_symf(F, q_value=1) == e(2).scale(2)


@pytest.mark.parametrize("n", range(1, 6))
def test_omega_is_an_involution(n):
    for basis in Basis:
        x = _mixed(basis, n)
        assert omega(omega(x)) == x, basis


@pytest.mark.parametrize("n", range(1, 6))
def test_h_and_m_are_dual(n):
    for la in partitions_of(n):
        for mu in partitions_of(n):
            assert hall_scalar(h(*la), SymF.monomial(Basis.M, mu)) == (1 if la == mu else 0), (la, mu)


@pytest.mark.parametrize("n", range(1, 5))
def test_plethysm_by_scaled_alphabet(n):
    x = _mixed(Basis.S, n).scale(1 + q)
    assert plethysm_eval(x, "X").to_symf(Basis.S) == x
    assert plethysm_eval(x, "X*1").to_symf(Basis.S) == x
    assert plethysm_eval(x, "X*q").to_symf(Basis.S) == x.scale(qf**n)


def test_random_products_are_commutative_and_distribute():
    rng = random.Random(0)
    bases = list(Basis)

    def draw():
        n = rng.randint(1, 3)
        mu = rng.choice(list(partitions_of(n)))
        return SymF.monomial(rng.choice(bases), mu, rng.randint(-3, 3) + qf)

    for _ in range(20):
        a, b, c = draw(), draw(), draw()
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
