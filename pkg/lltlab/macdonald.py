"""
lltlab - Macdonald Polynomials at t = 1
=======================================
H~_mu[X; q, 1], forgotten functions at 1/(1-q) and the positive
certificate Pi_mu(q).
"""

from __future__ import annotations
import logging
from functools import lru_cache

from .epositivity import shift_and_e_expand, staircase_llt
from .models import Basis, Partition, RearrangementSet, ConventionError, InputError
from .ring import K, R, q, qf, q_int, q_pochhammer, shift_q, is_npoly, to_poly, to_rat, is_polynomial
from .symfunc import (
    SymF, distinct_rearrangements as rearrangements, partitions_of, plethysm_eval,
    scalar_pleth, f as f_basis, h as h_basis,
)

logger = logging.getLogger(__name__)

MAX_SIZE = 9


def _check_size(mu: Partition):
    if mu.size > MAX_SIZE:
        raise InputError(f"partitions are limited to size {MAX_SIZE}, got {list(mu)}")


def distinct_rearrangements(mu) -> RearrangementSet:
    mu = Partition(mu)
    return RearrangementSet(mu=mu, elements=tuple(rearrangements(mu)))


@lru_cache(maxsize=None)
def htilde_t1(mu) -> SymF:
    """prod_i (q;q)_{mu_i} h_{mu_i}[X/(1-q)]"""
    mu = Partition(mu)
    _check_size(mu)
    result = SymF.one(Basis.E)
    for part in mu:
        result = result * staircase_llt(part)
    for index, coeff in result.terms.items():
        if not is_polynomial(coeff):
            raise ConventionError(f"H~_{list(mu)}[X;q,1] kept a denominator at e{list(index)}")
    return result


@lru_cache(maxsize=None)
def forgotten_pleth(mu):
    """f_mu[1/(1-q)] by suffix sums over the distinct rearrangements"""
    mu = Partition(mu)
    _check_size(mu)
    total = K.zero
    for a in rearrangements(mu):
        term = K.one
        suffix = 0
        for part in reversed(a):
            suffix += part
            term = term / (1 - qf**suffix)
        total += term
    sign = -1 if (mu.size - mu.length) % 2 else 1
    return total * sign


def forgotten_pleth_direct(mu):
    """f_mu[1/(1-q)] through the power-sum plethysm"""
    return plethysm_eval(f_basis(*mu), "1/(1-q)").to_symf().coefficient(())


@lru_cache(maxsize=None)
def pi_mu(mu):
    """sum over rearrangements a of prod over S(a) of [i]_q, S(a) = {1..m} minus the prefix sums"""
    mu = Partition(mu)
    _check_size(mu)
    total = R.zero
    for a in rearrangements(mu):
        prefix, cuts = 0, set()
        for part in a:
            prefix += part
            cuts.add(prefix)
        term = R.one
        for i in range(1, mu.size + 1):
            if i not in cuts:
                term *= q_int(i)
        total += term
    return total


def forgotten_identity(mu) -> bool:
    """(q;q)_m f_mu[1/(1-q)] = Pi_mu(q) (q-1)^(m - l(mu))"""
    mu = Partition(mu)
    lhs = to_rat(q_pochhammer(mu.size)) * forgotten_pleth(mu)
    return lhs == to_rat(pi_mu(mu) * (q - 1) ** (mu.size - mu.length))


def prop11_verify(m: int) -> bool:
    """The forgotten identity and positivity of H~_mu[X; 1+q, 1] for every mu of m"""
    for mu in partitions_of(m):
        if not forgotten_identity(mu):
            logger.warning("forgotten identity fails at %s", list(mu))
            return False
        if not shift_and_e_expand(htilde_t1(mu)).is_positive:
            logger.warning("H~_%s at q -> 1+q is not e-positive", list(mu))
            return False
    return True


def certificate_positive(mu) -> bool:
    """shift_q((q;q)_m f_mu[1/(1-q)]) has nonnegative coefficients"""
    mu = Partition(mu)
    value = to_poly(to_rat(q_pochhammer(mu.size)) * forgotten_pleth(mu))
    return is_npoly(shift_q(value))


def forgotten_coefficients_check(m: int) -> bool:
    """e-coefficients of h_m[X/(1-q)] are the forgotten functions at 1/(1-q)"""
    expansion = plethysm_eval(h_basis(m), "X/(1-q)").to_symf(Basis.E)
    return all(expansion.coefficient(mu) == forgotten_pleth(mu) for mu in partitions_of(m))


def single_monomial_check(mu) -> bool:
    """f_mu[q] = (-1)^(m-l) |DR(mu)| q^m"""
    mu = Partition(mu)
    sign = -1 if (mu.size - mu.length) % 2 else 1
    expected = to_rat(sign * len(rearrangements(mu)) * q**mu.size)
    return scalar_pleth(f_basis(*mu), qf) == expected
