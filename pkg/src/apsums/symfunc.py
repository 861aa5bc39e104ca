"""Symmetric functions over an arithmetic-progression alphabet.

The alphabet is a_j = a + j*d for j = 0..count-1.  Elementary symmetric
functions come from the coefficient expansion of prod (1 + a_j x),
complete homogeneous ones from the truncated expansion of
prod 1/(1 - a_j x).  A brute-force hyper-cuboid volume enumerator serves
as an independent oracle for both: it literally sums the volumes of all
boxes whose side lengths are drawn from the alphabet (distinct sides for
the elementary case, repetition allowed for the complete case).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .errors import DomainError
from .exact import Progression
from .fps import Fps
from .poly import Polynomial

__all__ = ["Alphabet", "elementary_sigma", "complete_h", "cuboid_volume_oracle"]

# The enumeration oracle is exponential; keep it at desk scale.
_ORACLE_MAX_COUNT = 8
_ORACLE_MAX_DEGREE = 8


@dataclass(frozen=True)
class Alphabet:
    """The first ``count`` members of an arithmetic progression."""

    prog: Progression
    count: int

    def __post_init__(self) -> None:
        if self.count < 0:
            raise DomainError(f"count must be non-negative, got {self.count}")

    @property
    def symbols(self) -> tuple[int, ...]:
        return tuple(self.prog.term(j) for j in range(self.count))


def elementary_sigma(alphabet: Alphabet, degree: int) -> Fraction:
    """Sum of all degree-sized distinct products; sigma_0 = 1."""
    if degree < 0 or degree > alphabet.count:
        raise DomainError(
            f"degree {degree} outside 0..{alphabet.count} for elementary symmetric function"
        )
    product = Polynomial.constant(1)
    for symbol in alphabet.symbols:
        product = product * Polynomial([1, symbol])
    return product[degree]


def complete_h(alphabet: Alphabet, degree: int) -> Fraction:
    """Sum of all degree-sized multiset products; h_0 = 1."""
    if degree < 0:
        raise DomainError(f"degree must be non-negative, got {degree}")
    product = Fps.one(degree)
    for symbol in alphabet.symbols:
        product = product * Fps([1, -symbol], order=degree).reciprocal()
    return product[degree]


def cuboid_volume_oracle(alphabet: Alphabet, dimension: int, distinct: bool = False) -> Fraction:
    """Total volume of all dimension-d boxes with sides from the alphabet.

    Explicit enumeration: subsets when ``distinct``, multisets otherwise.
    The number of boxes is checked against the closed count (binomial or
    multichoose) before the volumes are summed.
    """
    if dimension < 0:
        raise DomainError(f"dimension must be non-negative, got {dimension}")
    if alphabet.count > _ORACLE_MAX_COUNT or dimension > _ORACLE_MAX_DEGREE:
        raise DomainError(
            f"oracle capped at {_ORACLE_MAX_COUNT} symbols / degree {_ORACLE_MAX_DEGREE}"
        )
    if distinct:
        if dimension > alphabet.count:
            raise DomainError(
                f"no {dimension}-dimensional box with distinct sides from "
                f"{alphabet.count} symbols"
            )
        boxes = list(combinations(alphabet.symbols, dimension))
        expected = math.comb(alphabet.count, dimension)
    else:
        boxes = list(combinations_with_replacement(alphabet.symbols, dimension))
        expected = 1 if dimension == 0 else math.comb(alphabet.count + dimension - 1, dimension)
    if len(boxes) != expected:
        raise AssertionError("enumeration miscounted its boxes")  # pragma: no cover
    total = Fraction(0)
    for sides in boxes:
        total += math.prod(sides, start=Fraction(1))
    return total
