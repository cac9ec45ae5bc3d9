"""
lltlab - LLT Polynomials and e-Positivity
=========================================
Exact symmetric-function arithmetic over Z[q, t], LLT polynomials of marked
Dyck paths, Hall-Littlewood operators and Macdonald polynomials at t = 1,
with brute-force verification suites for the q -> 1+q phenomenon.
"""

__version__ = "1.1.0"
