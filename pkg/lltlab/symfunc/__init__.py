"""
lltlab - Symmetric Function Core
================================
Bases, change of basis, skewing, plethysm and functionals.
"""

from .basis import (
    SymF, convert_basis, assert_polynomial_e_expansion, specialize_symf, e, h, p, s, m, f,
)
from .partitions import (
    partitions_of, compositions_of, distinct_rearrangements,
    kostka, mn_character, horizontal_strips, vertical_strips,
)
from .skew import (
    straighten_schur, perp_skew, e_perp_on_e, h_perp_on_e,
    omega, hall_scalar, p1_derivative, functionals,
)
from .plethysm import Alphabet, AlphabetKind, plethysm_eval, scalar_pleth, parse_scalar
from .ysym import YSymF

__all__ = [
    "SymF", "YSymF", "convert_basis", "assert_polynomial_e_expansion",
    "e", "h", "p", "s", "m", "f",
    "partitions_of", "compositions_of", "distinct_rearrangements",
    "kostka", "mn_character", "horizontal_strips", "vertical_strips",
    "straighten_schur", "perp_skew", "e_perp_on_e", "h_perp_on_e",
    "omega", "hall_scalar", "p1_derivative", "functionals",
    "Alphabet", "AlphabetKind", "plethysm_eval", "scalar_pleth", "parse_scalar",
    "specialize_symf",
]
