"""
lltlab - Symmetric Functions
============================
SymF values and exact change of basis.

Every basis is expanded through the Schur basis:

* h_mu = sum K_{la,mu} s_la
* e_mu = sum K_{la,mu} s_{la'}
* p_mu = sum chi^la(mu) s_la
* m_mu = sum (K^-1)_{mu,la} s_la
* f_mu = omega(m_mu) = sum (K^-1)_{mu,la} s_{la'}

The forgotten basis is the omega image of the monomial basis with no extra
sign, which is the convention making <e_la, f_mu> = delta.
"""

from __future__ import annotations
import logging
from collections import defaultdict
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from sympy import Matrix

from ..models import Basis, Partition, ConventionError
from ..ring import K, to_rat, to_poly, is_polynomial, render_rat, specialize_rat
from .partitions import partitions_of, kostka, mn_character

logger = logging.getLogger(__name__)

Scalar = Union[int, "PolyElement", "FracElement"]


# =============================================================================
# SYMF
# =============================================================================

class SymF:
    """A symmetric function: a basis tag plus a finite map Partition -> BivarRat"""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: Basis, terms: Mapping = None):
        self.basis = basis
        clean: Dict[Partition, object] = {}
        for index, coeff in (terms or {}).items():
            coeff = to_rat(coeff)
            if coeff:
                index = index if isinstance(index, Partition) else Partition(index)
                clean[index] = clean[index] + coeff if index in clean else coeff
                if not clean[index]:
                    del clean[index]
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, basis: Basis = Basis.E) -> "SymF":
        return cls(basis, {})

    @classmethod
    def one(cls, basis: Basis = Basis.E) -> "SymF":
        return cls(basis, {Partition(()): 1})

    @classmethod
    def monomial(cls, basis: Basis, index: Iterable[int], coeff: Scalar = 1) -> "SymF":
        return cls(basis, {Partition.from_parts(index): coeff})

    @classmethod
    def _trusted(cls, basis: Basis, terms: Dict[Partition, object]) -> "SymF":
        """Wrap an already clean dict (K coefficients, no zeros)"""
        obj = cls.__new__(cls)
        obj.basis = basis
        obj.terms = terms
        return obj

    # -- inspection ----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self.terms, reverse=True))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def coefficient(self, index: Iterable[int]):
        return self.terms.get(Partition.from_parts(index), K.zero)

    def degrees(self):
        return sorted({index.size for index in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def has_polynomial_coefficients(self) -> bool:
        return all(is_polynomial(c) for c in self.terms.values())

    def polynomial_terms(self) -> Dict[Partition, object]:
        """Coefficients as BivarPoly; raises NonPolynomialError otherwise"""
        return {index: to_poly(c) for index, c in self.terms.items()}

    def to(self, basis: Basis) -> "SymF":
        return convert_basis(self, basis)

    # -- arithmetic ----------------------------------------------------------

    def _aligned(self, other: "SymF") -> "SymF":
        return other if other.basis == self.basis else convert_basis(other, self.basis)

    def __add__(self, other: "SymF") -> "SymF":
        other = self._aligned(other)
        terms = dict(self.terms)
        for index, coeff in other.terms.items():
            total = terms[index] + coeff if index in terms else coeff
            if total:
                terms[index] = total
            else:
                terms.pop(index, None)
        return SymF._trusted(self.basis, terms)

    def __neg__(self) -> "SymF":
        return SymF._trusted(self.basis, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other: "SymF") -> "SymF":
        return self + (-other)

    def scale(self, scalar: Scalar) -> "SymF":
        scalar = to_rat(scalar)
        if not scalar:
            return SymF.zero(self.basis)
        return SymF._trusted(self.basis, {i: c * scalar for i, c in self.terms.items()})

    def map_coefficients(self, fn) -> "SymF":
        return SymF(self.basis, {i: fn(c) for i, c in self.terms.items()})

    def __mul__(self, other) -> "SymF":
        if not isinstance(other, SymF):
            return self.scale(other)
        if self.basis in MULTIPLICATIVE:
            left, right, basis = self, self._aligned(other), self.basis
        else:
            left, right, basis = convert_basis(self, Basis.E), convert_basis(other, Basis.E), Basis.E
        terms: Dict[Partition, object] = defaultdict(lambda: K.zero)
        for i, a in left.terms.items():
            for j, b in right.terms.items():
                terms[i.union(j)] += a * b
        product = SymF(basis, terms)
        return product if basis == self.basis else convert_basis(product, self.basis)

    __rmul__ = scale

    def __pow__(self, exponent: int) -> "SymF":
        result = SymF.one(self.basis)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymF):
            return NotImplemented
        return self.terms == self._aligned(other).terms

    __hash__ = None

    def __repr__(self):
        return f"SymF({self.basis.value}: {self})"

    def __str__(self):
        from ..render import render_symf
        return render_symf(self)


MULTIPLICATIVE = (Basis.E, Basis.H, Basis.P)


def e(*parts: int) -> SymF:
    return SymF.monomial(Basis.E, parts)


def h(*parts: int) -> SymF:
    return SymF.monomial(Basis.H, parts)


def p(*parts: int) -> SymF:
    return SymF.monomial(Basis.P, parts)


def s(*parts: int) -> SymF:
    return SymF.monomial(Basis.S, parts)


def m(*parts: int) -> SymF:
    return SymF.monomial(Basis.M, parts)


def f(*parts: int) -> SymF:
    return SymF.monomial(Basis.F, parts)


# =============================================================================
# TRANSITION MATRICES
# =============================================================================

def _rational_to_field(value):
    return K(int(value.p)) / int(value.q)


@lru_cache(maxsize=None)
def _kostka_inverse(n: int) -> Dict[Partition, Dict[Partition, object]]:
    parts = partitions_of(n)
    matrix = Matrix(len(parts), len(parts), lambda i, j: kostka(parts[i], parts[j]))
    inverse = matrix.inv()
    return {
        parts[i]: {parts[j]: _rational_to_field(inverse[i, j]) for j in range(len(parts)) if inverse[i, j] != 0}
        for i in range(len(parts))
    }


@lru_cache(maxsize=None)
def to_schur_table(basis: Basis, n: int) -> Dict[Partition, Dict[Partition, object]]:
    """row[mu][la] = coefficient of s_la in b_mu"""
    parts = partitions_of(n)
    table: Dict[Partition, Dict[Partition, object]] = {}
    if basis == Basis.S:
        return {mu: {mu: K.one} for mu in parts}
    if basis in (Basis.M, Basis.F):
        inverse = _kostka_inverse(n)
        for mu in parts:
            row = inverse[mu]
            if basis == Basis.F:
                row = {la.conjugate(): c for la, c in row.items()}
            table[mu] = row
        return table
    for mu in parts:
        row = {}
        for la in parts:
            if basis == Basis.H:
                value = kostka(la, mu)
            elif basis == Basis.E:
                value = kostka(la.conjugate(), mu)
            else:
                value = mn_character(la, mu)
            if value:
                row[la] = K(value)
        table[mu] = row
    return table


@lru_cache(maxsize=None)
def from_schur_table(basis: Basis, n: int) -> Dict[Partition, Dict[Partition, object]]:
    """row[la][mu] = coefficient of b_mu in s_la"""
    if basis == Basis.S:
        return to_schur_table(Basis.S, n)
    if basis == Basis.M:
        # s_la = sum_mu K_{la,mu} m_mu
        parts = partitions_of(n)
        return {la: {mu: K(kostka(la, mu)) for mu in parts if kostka(la, mu)} for la in parts}
    if basis == Basis.F:
        parts = partitions_of(n)
        return {
            la: {mu: K(kostka(la.conjugate(), mu)) for mu in parts if kostka(la.conjugate(), mu)}
            for la in parts
        }
    parts = partitions_of(n)
    forward = to_schur_table(basis, n)
    matrix = Matrix(len(parts), len(parts), lambda i, j: _field_to_rational(forward[parts[i]].get(parts[j])))
    inverse = matrix.inv()
    logger.debug("inverted %s-to-Schur table in degree %d", basis.value, n)
    return {
        parts[j]: {parts[i]: _rational_to_field(inverse[j, i]) for i in range(len(parts)) if inverse[j, i] != 0}
        for j in range(len(parts))
    }


def _field_to_rational(value):
    from sympy import Rational
    if value is None:
        return 0
    return Rational(int(value.numer.LC), int(value.denom.LC))


def convert_basis(F: SymF, target: Basis) -> SymF:
    """Re-express F in another basis, exactly"""
    if F.basis == target:
        return F
    schur: Dict[Partition, object] = defaultdict(lambda: K.zero)
    for mu, coeff in F.terms.items():
        for la, entry in to_schur_table(F.basis, mu.size)[mu].items():
            schur[la] += coeff * entry
    if target == Basis.S:
        return SymF(Basis.S, schur)
    result: Dict[Partition, object] = defaultdict(lambda: K.zero)
    for la, coeff in schur.items():
        if not coeff:
            continue
        for mu, entry in from_schur_table(target, la.size)[la].items():
            result[mu] += coeff * entry
    return SymF(target, result)


def assert_polynomial_e_expansion(F: SymF, context: str = "") -> SymF:
    """The e-expansion of F, which must have polynomial coefficients"""
    expansion = convert_basis(F, Basis.E)
    for index, coeff in expansion.terms.items():
        if not is_polynomial(coeff):
            raise ConventionError(
                f"{context or 'result'}: e-coefficient of {list(index)} is {render_rat(coeff)}"
            )
    return expansion


def from_polynomial_terms(basis: Basis, terms: Mapping[Tuple[int, ...], object]) -> SymF:
    return SymF(basis, {Partition.from_parts(index): to_rat(c) for index, c in terms.items()})


def specialize_symf(F: SymF, q_value=None, t_value=None) -> SymF:
    """Fix q and/or t to integers in every coefficient"""
    return F.map_coefficients(lambda c: specialize_rat(c, q_value, t_value))
