"""
lltlab - Data Models
====================
Core data structures shared by the symmetric-function, Dyck-path and LLT modules.
"""

from __future__ import annotations
from dataclasses import dataclass, field as dataclass_field
from enum import Enum, auto
from typing import Tuple, FrozenSet, Iterable, List, Optional


# =============================================================================
# ERRORS
# =============================================================================

class LLTLabError(Exception):
    """Base class for every error raised by lltlab"""


class InputError(LLTLabError, ValueError):
    """Bad user input: malformed paths, marks outside corners, bounds exceeded"""


class NonPolynomialError(LLTLabError, ValueError):
    """A coefficient that has to be a polynomial still carries a denominator"""


class ConventionError(LLTLabError, AssertionError):
    """An internal consistency check failed; signals a bug, not bad input"""


class CacheError(LLTLabError):
    """Corrupt or mismatched cache entry"""


# =============================================================================
# ENUMS
# =============================================================================

class Basis(Enum):
    """Bases of the ring of symmetric functions"""
    E = "e"
    H = "h"
    P = "p"
    M = "m"
    S = "s"
    F = "f"  # forgotten: omega image of the monomial basis

    @classmethod
    def from_string(cls, s: str) -> "Basis":
        s = s.strip().lower()
        for b in cls:
            if b.value == s:
                return b
        aliases = {
            "elementary": cls.E, "homogeneous": cls.H, "power": cls.P,
            "monomial": cls.M, "schur": cls.S, "forgotten": cls.F,
        }
        if s in aliases:
            return aliases[s]
        raise InputError(f"unknown basis: {s!r}")


class HLKind(Enum):
    """Hall-Littlewood type vertex operators"""
    B = "B"
    BTILDE = "Bt"
    C = "C"

    @classmethod
    def from_string(cls, s: str) -> "HLKind":
        s = s.strip()
        for kind in cls:
            if kind.value.lower() == s.lower():
                return kind
        if s.lower() in ("btilde", "b~"):
            return cls.BTILDE
        raise InputError(f"unknown operator: {s!r}")


class ResidualMarks(Enum):
    """How the areaprime recursion marks the corners of a residual path"""
    ALL_CORNERS = auto()
    INHERITED = auto()

    @classmethod
    def from_string(cls, s: str) -> "ResidualMarks":
        key = s.strip().lower().replace("-", "_")
        if key in ("all_corners", "all", "corners"):
            return cls.ALL_CORNERS
        if key in ("inherited", "inherit"):
            return cls.INHERITED
        raise InputError(f"unknown residual mark policy: {s!r}")


# =============================================================================
# PARTITIONS AND COMPOSITIONS
# =============================================================================

class Partition(tuple):
    """Weakly decreasing tuple of positive parts.

    Compares and hashes like the underlying tuple, so ``Partition((2, 1))``
    and ``(2, 1)`` are interchangeable as dictionary keys.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise InputError(f"partition parts must be positive: {list(parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError(f"partition parts must be weakly decreasing: {list(parts)}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary nonnegative parts into a partition, dropping zeros"""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def multiplicities(self) -> dict:
        counts: dict = {}
        for p in self:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def union(self, other: Iterable[int]) -> "Partition":
        """Union of parts (the index of a product e_la * e_mu)"""
        return Partition.from_parts(tuple(self) + tuple(other))

    def __repr__(self):
        return f"Partition({list(self)})"


class Composition(tuple):
    """Tuple of positive parts, order significant"""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise InputError(f"composition parts must be positive: {list(parts)}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Composition({list(self)})"


# =============================================================================
# LATTICE PATHS
# =============================================================================

@dataclass(frozen=True)
class DyckPath:
    """Dyck path stored by its area word.

    ``area_word[i-1]`` is the diagonal of the cell adjacent to the i-th North
    step, counted bottom to top.
    """
    area_word: Tuple[int, ...] = ()

    def __post_init__(self):
        word = tuple(int(a) for a in self.area_word)
        object.__setattr__(self, "area_word", word)
        if word and word[0] != 0:
            raise InputError(f"area word must start with 0: {list(word)}")
        for prev, cur in zip(word, word[1:]):
            if cur < 0 or cur > prev + 1:
                raise InputError(f"invalid area word: {list(word)}")

    @classmethod
    def from_coarea(cls, coarea: Iterable[int]) -> "DyckPath":
        """Build from a coarea list Z[j] = (j-1) - a_j"""
        return cls(tuple(j - z for j, z in enumerate(coarea)))

    @property
    def n(self) -> int:
        return len(self.area_word)

    @property
    def area(self) -> int:
        return sum(self.area_word)

    def coarea(self) -> Tuple[int, ...]:
        return tuple(j - a for j, a in enumerate(self.area_word))

    def column(self, row: int) -> int:
        """x-coordinate of the North step of ``row`` (1-indexed)"""
        return (row - 1) - self.area_word[row - 1]

    def step_word(self) -> Tuple[int, ...]:
        """0 = North, 1 = East"""
        steps: List[int] = []
        x = 0
        for row in range(1, self.n + 1):
            target = self.column(row)
            steps.extend([1] * (target - x))
            steps.append(0)
            x = target
        steps.extend([1] * (self.n - x))
        return tuple(steps)

    def __str__(self):
        return ",".join(str(a) for a in self.area_word)


@dataclass(frozen=True)
class MarkedPath:
    """Area path Z together with a set T of marked corners (i, j), i < j"""
    path: DyckPath
    marks: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "marks", frozenset((int(i), int(j)) for i, j in self.marks))
        for i, j in self.marks:
            if not 1 <= i < j <= self.path.n:
                raise InputError(f"mark ({i},{j}) is not a pair of labels of the path")

    @property
    def n(self) -> int:
        return self.path.n

    def key(self) -> str:
        marks = ";".join(f"{i}:{j}" for i, j in sorted(self.marks))
        return f"{self.path}|{marks}"


@dataclass(frozen=True)
class ParkingFunction:
    """Dyck path with cars on its North steps, increasing up each column"""
    path: DyckPath
    cars: Tuple[int, ...]

    def __post_init__(self):
        cars = tuple(int(c) for c in self.cars)
        object.__setattr__(self, "cars", cars)
        if sorted(cars) != list(range(1, self.path.n + 1)):
            raise InputError(f"cars must be a permutation of 1..{self.path.n}: {list(cars)}")
        word = self.path.area_word
        for i in range(1, self.path.n):
            if word[i] == word[i - 1] + 1 and cars[i] < cars[i - 1]:
                raise InputError(f"cars must increase up each column: {list(cars)}")


@dataclass(frozen=True)
class PFStatistics:
    """Statistics of one parking function"""
    dinv: int
    dinv_pairs: FrozenSet[Tuple[int, int]]
    area: int
    sigma: Tuple[int, ...]
    pides: Composition


@dataclass(frozen=True)
class LLTWord:
    """Compressed step word: 0 = North, 1 = East, 2 = a marked East-North corner"""
    symbols: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if any(s not in (0, 1, 2) for s in self.symbols):
            raise InputError(f"word symbols must be 0, 1 or 2: {list(self.symbols)}")
        zeros = self.symbols.count(0)
        ones = self.symbols.count(1)
        if zeros != ones:
            raise InputError(f"unbalanced word: {list(self.symbols)}")

    @property
    def n(self) -> int:
        return self.symbols.count(0) + self.symbols.count(2)


# =============================================================================
# REPORTS
# =============================================================================

@dataclass(frozen=True)
class DownsetReport:
    """One possible downset S of the areaprime recursion"""
    S: FrozenSet[int]
    weight: object  # BivarPoly
    residual_path: DyckPath
    residual_marks: FrozenSet[Tuple[int, int]]


@dataclass(frozen=True)
class RearrangementSet:
    """Distinct rearrangements of the parts of a partition"""
    mu: Partition
    elements: Tuple[Composition, ...]


@dataclass(frozen=True)
class Failure:
    """A single counterexample found by a verification suite"""
    instance: str
    expected: str
    got: str


@dataclass(frozen=True)
class Outcome:
    """Result of checking one suite instance"""
    failure: Optional[Failure] = None
    notes: Tuple[str, ...] = ()


@dataclass
class VerifyReport:
    """Outcome of one verification suite run"""
    suite: str
    bound: int
    instances: int = 0
    failures: List[Failure] = dataclass_field(default_factory=list)
    notes: List[str] = dataclass_field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "bound": self.bound,
            "instances": self.instances,
            "passed": self.passed,
            "failures": [
                {"instance": f.instance, "expected": f.expected, "got": f.got}
                for f in self.failures
            ],
            "notes": list(self.notes),
            "elapsed": round(self.elapsed, 3),
        }
