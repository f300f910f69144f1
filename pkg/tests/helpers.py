"""Shared test oracles, deliberately independent of the package engines."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

import numpy as np

from hyperdefect.koszul import SparseIntMatrix


def rational_rank(matrix) -> int:
    """Textbook Gauss-Jordan elimination over the rationals."""
    if isinstance(matrix, SparseIntMatrix):
        dense = matrix.to_dense().tolist()
    else:
        dense = np.asarray(matrix).tolist()
    rows = [[Fraction(v) for v in row] for row in dense]
    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(nrows):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def sparse_from_dense(array) -> SparseIntMatrix:
    arr = np.asarray(array)
    entries = sorted(
        (int(r), int(c), int(arr[r, c])) for r, c in zip(*np.nonzero(arr))
    )
    return SparseIntMatrix(int(arr.shape[0]), int(arr.shape[1]), tuple(entries))


def stars_and_bars(m: int, e: int):
    """Enumerate degree-e exponent vectors by bar placement (order-free oracle)."""
    for bars in combinations(range(e + m - 1), m - 1):
        previous = -1
        vector = []
        for b in bars:
            vector.append(b - previous - 1)
            previous = b
        vector.append(e + m - 2 - previous)
        yield tuple(vector)


def power_sum_expansion(nvars: int, exponent: int) -> dict[tuple[int, ...], int]:
    """(x_0 + ... + x_{nvars-1})^exponent by counting raw orderings."""
    counts: dict[tuple[int, ...], int] = {}
    for assignment in product(range(nvars), repeat=exponent):
        key = [0] * nvars
        for i in assignment:
            key[i] += 1
        counts[tuple(key)] = counts.get(tuple(key), 0) + 1
    return counts


def bounded_compositions_count(total: int, parts: int, lo: int, hi: int) -> int:
    """Number of ordered ways to write `total` as `parts` integers in [lo, hi]."""
    return sum(
        1 for c in product(range(lo, hi + 1), repeat=parts) if sum(c) == total
    )
