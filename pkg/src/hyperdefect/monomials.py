"""Graded monomial bases and their rank/unrank bijection.

Degree-e monomials in m variables are numbered 0 .. C(e+m-1, m-1)-1 by
descending first exponent, then recursively on the remaining variables,
so x^e comes first and the pure power of the last variable comes last.
The rank has a closed form as a sum of binomial offsets, which is what
matrix row/column addressing uses throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence


def dim_graded(m: int, e: int) -> int:
    """Number of degree-e monomials in m variables; 0 for negative e."""
    if m < 1:
        raise ValueError(f"variable count must be >= 1, got {m}")
    if e < 0:
        return 0
    return comb(e + m - 1, m - 1)


def monomial_index(exponents: Sequence[int]) -> int:
    """Rank of an exponent vector within the graded basis of its degree."""
    m = len(exponents)
    if m < 1:
        raise ValueError("empty exponent vector")
    remaining = 0
    for a in exponents:
        if a < 0:
            raise ValueError(f"negative exponent in {tuple(exponents)}")
        remaining += a
    index = 0
    for r in range(m - 1):
        remaining -= exponents[r]
        index += comb(remaining + m - 2 - r, m - 1 - r)
    return index


def index_monomial(m: int, e: int, i: int) -> tuple[int, ...]:
    """Exponent vector of rank i in the degree-e basis (inverse of monomial_index)."""
    size = dim_graded(m, e)
    if not 0 <= i < size:
        raise IndexError(f"monomial index {i} out of range [0, {size}) for m={m}, e={e}")
    exponents = []
    remaining_degree = e
    remaining_index = i
    for r in range(m - 1):
        tail = m - 1 - r
        # largest leading exponent whose block of successors fits below remaining_index
        a = remaining_degree
        while a > 0 and comb(remaining_degree - a + tail, tail) <= remaining_index:
            a -= 1
        remaining_index -= comb(remaining_degree - a + tail - 1, tail)
        exponents.append(a)
        remaining_degree -= a
    exponents.append(remaining_degree)
    return tuple(exponents)


def graded_monomials(m: int, e: int) -> Iterator[tuple[int, ...]]:
    """Yield all degree-e exponent vectors in rank order (empty for e < 0)."""
    if m < 1:
        raise ValueError(f"variable count must be >= 1, got {m}")
    if e < 0:
        return
    if m == 1:
        yield (e,)
        return
    for a in range(e, -1, -1):
        for rest in graded_monomials(m - 1, e - a):
            yield (a, *rest)


@dataclass(frozen=True)
class GradedBasis:
    """The degree-e monomial basis in m variables, with rank/unrank access."""

    m: int
    e: int

    @property
    def size(self) -> int:
        return dim_graded(self.m, self.e)

    def index(self, exponents: Sequence[int]) -> int:
        if len(exponents) != self.m:
            raise ValueError(f"expected {self.m} exponents, got {len(exponents)}")
        if sum(exponents) != self.e:
            raise ValueError(f"exponents {tuple(exponents)} have degree != {self.e}")
        return monomial_index(exponents)

    def unrank(self, i: int) -> tuple[int, ...]:
        return index_monomial(self.m, self.e, i)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return graded_monomials(self.m, self.e)

    def __len__(self) -> int:
        return self.size
