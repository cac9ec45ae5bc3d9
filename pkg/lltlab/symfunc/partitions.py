"""
lltlab - Partition Combinatorics
================================
Partitions, compositions, strips, Kostka numbers and characters.
"""

from __future__ import annotations
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import List, Tuple

from sympy.utilities.iterables import multiset_permutations

from ..models import Partition, Composition, InputError


def _partitions(n: int, max_part: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order, (n) first"""
    if n < 0:
        raise InputError(f"cannot partition a negative number: {n}")
    return tuple(Partition(p) for p in _partitions(n, n))


def compositions_of(n: int, parts: int = None) -> List[Composition]:
    """Compositions of n, optionally with a fixed number of parts"""
    if n == 0:
        return [Composition(())] if parts in (None, 0) else []
    result = []
    for cut_count in range(n):
        if parts is not None and cut_count != parts - 1:
            continue
        for cuts in combinations(range(1, n), cut_count):
            bounds = (0,) + cuts + (n,)
            result.append(Composition(b - a for a, b in zip(bounds, bounds[1:])))
    return result


def distinct_rearrangements(mu) -> List[Composition]:
    return [Composition(a) for a in multiset_permutations(sorted(mu, reverse=True))]


def z_lambda(mu: Partition) -> int:
    """Size of the centralizer of a permutation of cycle type mu"""
    z = 1
    for part, count in mu.multiplicities().items():
        z *= part**count * factorial(count)
    return z


def sign_of_cycle_type(mu: Partition) -> int:
    return -1 if (sum(mu) - len(mu)) % 2 else 1


# =============================================================================
# STRIPS
# =============================================================================

def horizontal_strips(shape, r: int) -> List[Partition]:
    """Inner shapes nu with shape/nu a horizontal strip of size r"""
    shape = tuple(shape)
    found: List[Partition] = []

    def walk(i: int, remaining: int, inner: Tuple[int, ...]):
        if i == len(shape):
            if remaining == 0:
                found.append(Partition(p for p in inner if p > 0))
            return
        lower = shape[i + 1] if i + 1 < len(shape) else 0
        for part in range(shape[i], lower - 1, -1):
            removed = shape[i] - part
            if removed > remaining:
                break
            walk(i + 1, remaining - removed, inner + (part,))

    walk(0, r, ())
    return found


def vertical_strips(shape, r: int) -> List[Partition]:
    """Inner shapes nu with shape/nu a vertical strip of size r"""
    return [nu.conjugate() for nu in horizontal_strips(Partition(shape).conjugate(), r)]


# =============================================================================
# KOSTKA NUMBERS AND CHARACTERS
# =============================================================================

@lru_cache(maxsize=None)
def kostka(shape: Tuple[int, ...], content: Tuple[int, ...]) -> int:
    """Number of semistandard tableaux of the given shape and content"""
    if not content:
        return 1 if not shape else 0
    if sum(shape) != sum(content):
        return 0
    rest = tuple(content[:-1])
    return sum(kostka(tuple(inner), rest) for inner in horizontal_strips(shape, content[-1]))


@lru_cache(maxsize=None)
def mn_character(shape: Tuple[int, ...], cycle_type: Tuple[int, ...]) -> int:
    """chi^shape at cycle type, by Murnaghan-Nakayama on beta-numbers"""
    if not cycle_type:
        return 1 if not shape else 0
    r, rest = cycle_type[0], tuple(cycle_type[1:])
    ell = len(shape)
    beta = [shape[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    total = 0
    for b in beta:
        moved = b - r
        if moved < 0 or moved in occupied:
            continue
        height = sum(1 for c in beta if moved < c < b)
        new_beta = sorted([c for c in beta if c != b] + [moved], reverse=True)
        inner = tuple(p for p in (new_beta[i] - (ell - 1 - i) for i in range(ell)) if p > 0)
        total += (-1) ** height * mn_character(inner, rest)
    return total
