"""
lltlab - LLT Engine
===================
Three routes to LLT polynomials: parking functions on a Dyck path,
compatible permutations on a marked path, and Carlsson-Mellit operators.
"""

from .classical import (
    llt_classical, llt_column, llt_marked, nabla_en, unicellular_search,
    MAX_ENUM_SIZE, MAX_NABLA_SIZE,
)
from .carlsson_mellit import encode_word, cm_ti, cm_step, cm_run, run_word
from ..symfunc import YSymF

__all__ = [
    "llt_classical", "llt_column", "llt_marked", "nabla_en", "unicellular_search",
    "encode_word", "cm_ti", "cm_step", "cm_run", "run_word", "YSymF",
    "MAX_ENUM_SIZE", "MAX_NABLA_SIZE",
]
