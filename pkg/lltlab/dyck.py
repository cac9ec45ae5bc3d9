"""
lltlab - Dyck Path Geometry
===========================
Dyck paths, parking functions and their statistics, dinvsets, the zeta
image with its marked corners, and cell deletion.

Rows and labels are 1-indexed throughout. A pair (i, j) always has i < j.
"""

from __future__ import annotations
import logging
from functools import lru_cache
from itertools import chain, combinations, permutations
from typing import FrozenSet, Iterator, List, Set, Tuple

from .models import (
    DyckPath, MarkedPath, ParkingFunction, PFStatistics, Composition,
    InputError, ConventionError,
)

logger = logging.getLogger(__name__)

MAX_DYCK_SIZE = 12

Pair = Tuple[int, int]


# =============================================================================
# ENUMERATION
# =============================================================================

def _area_words(n: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return

    def extend(word: Tuple[int, ...]):
        if len(word) == n:
            yield word
            return
        for a in range(0, word[-1] + 2):
            yield from extend(word + (a,))

    yield from extend((0,))


def enum_dyck(n: int) -> List[DyckPath]:
    """All Catalan(n) Dyck paths, area words in lexicographic order"""
    if n < 0 or n > MAX_DYCK_SIZE:
        raise InputError(f"Dyck path size must be between 0 and {MAX_DYCK_SIZE}, got {n}")
    return [DyckPath(word) for word in _area_words(n)]


def enum_marked(n: int) -> Iterator[MarkedPath]:
    """Every (Z, T) of size n with T a subset of corners(Z)"""
    for Z in enum_dyck(n):
        available = sorted(corners(Z))
        for size in range(len(available) + 1):
            for marks in combinations(available, size):
                yield MarkedPath(Z, frozenset(marks))


def hits(D: DyckPath) -> int:
    """Number of rows starting on the main diagonal"""
    return sum(1 for a in D.area_word if a == 0)


def columns(D: DyckPath) -> List[List[int]]:
    """Rows grouped into maximal vertical runs, bottom to top"""
    runs: List[List[int]] = []
    word = D.area_word
    for row in range(1, D.n + 1):
        if row > 1 and word[row - 1] == word[row - 2] + 1:
            runs[-1].append(row)
        else:
            runs.append([row])
    return runs


# =============================================================================
# PARKING FUNCTIONS
# =============================================================================

def _labelings(D: DyckPath) -> Iterator[Tuple[int, ...]]:
    """Column-increasing car assignments, as car-by-row tuples"""
    runs = columns(D)
    cars = [0] * D.n

    def assign(index: int, remaining: Tuple[int, ...]):
        if index == len(runs):
            yield tuple(cars)
            return
        run = runs[index]
        for chosen in combinations(remaining, len(run)):
            for row, car in zip(run, chosen):
                cars[row - 1] = car
            rest = tuple(c for c in remaining if c not in chosen)
            yield from assign(index + 1, rest)

    yield from assign(0, tuple(range(1, D.n + 1)))


def enum_pf(D: DyckPath) -> List[ParkingFunction]:
    return [ParkingFunction(D, cars) for cars in _labelings(D)]


def dinv_pairs(word: Tuple[int, ...], cars: Tuple[int, ...]) -> Set[Pair]:
    """Primary and secondary dinv pairs, as car pairs (small, large)"""
    pairs: Set[Pair] = set()
    n = len(word)
    for i in range(n):
        for j in range(i + 1, n):
            if word[i] == word[j] and cars[i] < cars[j]:
                pairs.add((cars[i], cars[j]))
            elif word[i] == word[j] + 1 and cars[i] > cars[j]:
                pairs.add((cars[j], cars[i]))
    return pairs


def _dinv_count(word: Tuple[int, ...], cars: Tuple[int, ...]) -> int:
    n = len(word)
    count = 0
    for i in range(n):
        ai, ci = word[i], cars[i]
        for j in range(i + 1, n):
            aj = word[j]
            if (ai == aj and ci < cars[j]) or (ai == aj + 1 and ci > cars[j]):
                count += 1
    return count


@lru_cache(maxsize=None)
def reading_order(word: Tuple[int, ...]) -> Tuple[int, ...]:
    """Row indices (0-based) read by diagonals high to low, right to left"""
    return tuple(sorted(range(len(word)), key=lambda r: (-word[r], -r)))


def descent_composition(sigma: Tuple[int, ...]) -> Composition:
    """Composition of n whose breaks are the descents of sigma^-1"""
    n = len(sigma)
    if n == 0:
        return Composition(())
    position = [0] * (n + 2)
    for index, value in enumerate(sigma):
        position[value] = index
    parts = []
    run = 1
    for i in range(1, n):
        if position[i + 1] < position[i]:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return Composition(parts)


def pf_statistics(PF: ParkingFunction) -> PFStatistics:
    word = PF.path.area_word
    pairs = dinv_pairs(word, PF.cars)
    sigma = tuple(PF.cars[r] for r in reading_order(word))
    return PFStatistics(
        dinv=len(pairs),
        dinv_pairs=frozenset(pairs),
        area=PF.path.area,
        sigma=sigma,
        pides=descent_composition(sigma),
    )


def iter_statistics(D: DyckPath) -> Iterator[Tuple[int, Composition]]:
    """(dinv, pides) for every parking function on D"""
    word = D.area_word
    order = reading_order(word)
    for cars in _labelings(D):
        sigma = tuple(cars[r] for r in order)
        yield _dinv_count(word, cars), descent_composition(sigma)


# =============================================================================
# FORCED PAIRS, DINVSETS, ZETA
# =============================================================================

def maximal_pf_and_dinvset(D: DyckPath) -> Tuple[ParkingFunction, FrozenSet[Pair]]:
    """The parking function with reading word n...21 and its dinv pairs"""
    order = sorted(range(1, D.n + 1), key=lambda row: (D.area_word[row - 1], D.column(row)))
    cars = [0] * D.n
    for label, row in enumerate(order, start=1):
        cars[row - 1] = label
    PF = ParkingFunction(D, tuple(cars))
    return PF, frozenset(dinv_pairs(D.area_word, PF.cars))


def dinvset(D: DyckPath) -> FrozenSet[Pair]:
    return maximal_pf_and_dinvset(D)[1]


def forced_pairs(D: DyckPath) -> FrozenSet[Pair]:
    """Car pairs stacked directly on top of each other in the maximal labeling"""
    PF, _ = maximal_pf_and_dinvset(D)
    pairs = set()
    for run in columns(D):
        for lower, upper in zip(run, run[1:]):
            pairs.add((PF.cars[lower - 1], PF.cars[upper - 1]))
    return frozenset(pairs)


def path_dinvset(Z: DyckPath) -> FrozenSet[Pair]:
    """One pair per area cell: {(i, j) : j - b_j <= i < j}"""
    return frozenset(
        (i, j)
        for j, b in enumerate(Z.area_word, start=1)
        for i in range(j - b, j)
    )


def corners(Z: DyckPath) -> FrozenSet[Pair]:
    """Pairs (j - b_j - 1, j) where an East step is followed by the North step of row j"""
    b = Z.area_word
    return frozenset(
        (j - b[j - 1] - 1, j)
        for j in range(2, Z.n + 1)
        if b[j - 1] <= b[j - 2]
    )


def zeta_and_corners(D: DyckPath) -> MarkedPath:
    """The zeta image of D, with the forced pairs of D as its marks"""
    _, pairs = maximal_pf_and_dinvset(D)
    area = []
    for j in range(1, D.n + 1):
        below = sorted(i for i, k in pairs if k == j)
        if below != list(range(j - len(below), j)):
            raise ConventionError(f"dinvset of {D} is not an interval below label {j}: {below}")
        area.append(len(below))
    try:
        Z = DyckPath(tuple(area))
    except InputError as e:
        raise ConventionError(f"zeta image of {D} is not a Dyck path: {e}")
    forced = forced_pairs(D)
    if Z.area != len(pairs):
        raise ConventionError(f"area of zeta({D}) is {Z.area}, dinv is {len(pairs)}")
    if not forced <= corners(Z):
        raise ConventionError(f"forced pairs of {D} are not corners of {Z}")
    return MarkedPath(Z, forced)


def delete_cells(Z: DyckPath, S) -> DyckPath:
    """Remove the diagonal cells labelled by S and relabel the survivors"""
    S = frozenset(S)
    if not S <= frozenset(range(1, Z.n + 1)):
        raise InputError(f"labels {sorted(S)} are not all in 1..{Z.n}")
    word = []
    for j, b in enumerate(Z.area_word, start=1):
        if j in S:
            continue
        word.append(b - sum(1 for s in S if j - b <= s < j))
    try:
        return DyckPath(tuple(word))
    except InputError as e:
        raise ConventionError(f"deleting {sorted(S)} from {Z} broke the path: {e}")


def relabel_pairs(pairs, removed) -> FrozenSet[Pair]:
    """Pairs avoiding ``removed``, renumbered to the surviving labels"""
    removed = sorted(removed)

    def shift(label: int) -> int:
        return label - sum(1 for s in removed if s < label)

    removed_set = set(removed)
    return frozenset(
        (shift(i), shift(j)) for i, j in pairs if i not in removed_set and j not in removed_set
    )


def subsets(items) -> Iterator[Tuple]:
    items = sorted(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


# =============================================================================
# COLUMN PARKING FUNCTIONS
# =============================================================================

def _split_constraints(D: DyckPath, T) -> List[Tuple[int, int]]:
    """0-based (lower, upper) rows that must keep increasing: stacked rows whose forced pair is in T"""
    PF, _ = maximal_pf_and_dinvset(D)
    kept = []
    for run in columns(D):
        for lower, upper in zip(run, run[1:]):
            if (PF.cars[lower - 1], PF.cars[upper - 1]) in T:
                kept.append((lower - 1, upper - 1))
    return kept


def enum_cpf(D: DyckPath, T) -> List[Tuple[int, ...]]:
    """Car-by-row tuples of the column parking functions on D that increase across T.

    Stacked cars whose forced pair is left out of T may appear in either order.
    """
    T = frozenset(T)
    forced = forced_pairs(D)
    if not T <= forced:
        raise InputError(f"marks {sorted(T - forced)} are not forced pairs of {D}")
    kept = _split_constraints(D, T)
    return [
        cars for cars in permutations(range(1, D.n + 1))
        if all(cars[lower] < cars[upper] for lower, upper in kept)
    ]


def iter_cpf_statistics(D: DyckPath, T) -> Iterator[Tuple[int, Composition]]:
    """(dinv, pides) for every column parking function in enum_cpf(D, T)"""
    word = D.area_word
    order = reading_order(word)
    for cars in enum_cpf(D, T):
        sigma = tuple(cars[r] for r in order)
        yield _dinv_count(word, cars), descent_composition(sigma)
