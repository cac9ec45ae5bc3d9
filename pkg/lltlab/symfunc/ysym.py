"""
lltlab - Symmetric Functions with Auxiliary Variables
=====================================================
Elements of Lambda[X; q, y_1..y_k], stored as a map from y-exponent
vectors to SymF.
"""

from __future__ import annotations
from typing import Dict, Iterable, Tuple

from ..models import Basis, ConventionError
from .basis import SymF

Exponent = Tuple[int, ...]


class YSymF:
    """Polynomial in y_1..y_k with SymF coefficients"""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Dict[Exponent, SymF] = None):
        self.k = k
        self.terms: Dict[Exponent, SymF] = {}
        for exp, value in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != k:
                raise ConventionError(f"exponent {exp} does not match {k} variables")
            if value:
                self.terms[exp] = self.terms[exp] + value if exp in self.terms else value
                if not self.terms[exp]:
                    del self.terms[exp]

    @classmethod
    def constant(cls, F: SymF, k: int = 0) -> "YSymF":
        return cls(k, {(0,) * k: F})

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def coefficient(self, exp: Iterable[int]) -> SymF:
        return self.terms.get(tuple(exp), SymF.zero(Basis.E))

    def y_degree(self, i: int) -> int:
        """Highest power of y_i (1-indexed)"""
        return max((exp[i - 1] for exp in self.terms), default=0)

    def __add__(self, other: "YSymF") -> "YSymF":
        if other.k != self.k:
            raise ConventionError(f"adding over {self.k} and {other.k} variables")
        terms = dict(self.terms)
        for exp, value in other.terms.items():
            total = terms[exp] + value if exp in terms else value
            if total:
                terms[exp] = total
            else:
                terms.pop(exp, None)
        result = YSymF(self.k)
        result.terms = terms
        return result

    def __neg__(self) -> "YSymF":
        result = YSymF(self.k)
        result.terms = {exp: -value for exp, value in self.terms.items()}
        return result

    def __sub__(self, other: "YSymF") -> "YSymF":
        return self + (-other)

    def scale(self, scalar) -> "YSymF":
        return YSymF(self.k, {exp: value.scale(scalar) for exp, value in self.terms.items()})

    def map_values(self, fn) -> "YSymF":
        return YSymF(self.k, {exp: fn(value) for exp, value in self.terms.items()})

    def to_symf(self, basis: Basis = None) -> SymF:
        """Collapse to a SymF; every term must be free of y"""
        total = None
        for exp, value in self.terms.items():
            if any(exp):
                raise ConventionError(f"term y^{exp} survives where a plain SymF is expected")
            total = value if total is None else total + value
        if total is None:
            return SymF.zero(basis or Basis.E)
        return total if basis is None else total.to(basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, YSymF):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"y^{list(exp)}*({value})" for exp, value in self.items()) or "0"
        return f"YSymF(k={self.k}: {body})"
