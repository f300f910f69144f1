"""Exact ranks of sparse integer matrices.

Three engines:

* `rank_mod_p` eliminates over a prime field.  The default path is a
  blocked dense Gaussian elimination whose inner products run in float64
  BLAS; every intermediate value is an integer below 2**53, so the result
  is exact and bit-deterministic.  Primes >= 2**20 fall back to an int64
  row-reduction, and `method="minpivot"` selects a division-free sweep
  that picks the smallest pivot by magnitude with a fewest-nonzeros tie
  break (the classic heuristic for keeping entries small).
* `rank_exact` is fraction-free (Bareiss) elimination over the integers:
  no rounding, no modular reduction, rank over the rationals.
* `rank_multimodular` runs several primes, reports the per-prime ranks
  with their consensus (the max, a guaranteed lower bound), and certifies
  against the exact engine when asked or when the matrix is small.

A "bad" prime can only lower a rank, never raise it, so disagreement
between primes is reported rather than fatal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .koszul import SparseIntMatrix

# 15-bit primes used as the default modular rank checks
PRIME_TABLE = (32633, 32647, 32653, 32687, 32693, 32707, 32713, 32717, 32719, 32749)
DEFAULT_PRIMES = PRIME_TABLE[:3]

EXACT_CELL_BUDGET = 1 << 20

_BLOCKED_PRIME_LIMIT = 1 << 20  # keeps panel dot products exact in float64
_MINPIVOT_PRIME_LIMIT = 1 << 30  # cross-multiplication must fit in int64
_PANEL = 128


class RankBudgetError(Exception):
    """Exact elimination refused: matrix exceeds the configured budget."""


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin; bases 2,3,5,7 cover all n < 3_215_031_751
    if n < 2:
        return False
    for small in (2, 3, 5, 7):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RankConfig:
    """Prime set and certification policy for rank computations."""

    primes: tuple[int, ...] = DEFAULT_PRIMES
    exact: bool = False
    dense_threshold: int = 100

    def __post_init__(self):
        primes = tuple(self.primes)
        object.__setattr__(self, "primes", primes)
        if not primes:
            raise ValueError("need at least one prime")
        if len(set(primes)) != len(primes):
            raise ValueError(f"primes must be distinct: {primes}")
        for p in primes:
            if not 2 <= p < 2**31:
                raise ValueError(f"prime {p} outside [2, 2**31)")
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
        if self.dense_threshold < 0:
            raise ValueError("dense_threshold must be >= 0")


@dataclass(frozen=True)
class RankReport:
    """Per-prime ranks, their consensus, and optional exact certification."""

    per_prime: tuple[tuple[int, int], ...]
    consensus: int
    agreed: bool
    exact_rank: int | None = None
    certified: bool = False

    @property
    def rank(self) -> int:
        """Best known rank: the exact one when available, else the consensus."""
        return self.consensus if self.exact_rank is None else self.exact_rank

    def as_dict(self) -> dict:
        return {
            "per_prime": [{"prime": p, "rank": r} for p, r in self.per_prime],
            "consensus": self.consensus,
            "agreed": self.agreed,
            "exact_rank": self.exact_rank,
            "certified": self.certified,
        }


def _as_dense(matrix: SparseIntMatrix | np.ndarray) -> np.ndarray:
    if isinstance(matrix, SparseIntMatrix):
        return matrix.to_dense()
    dense = np.asarray(matrix)
    if dense.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {dense.shape}")
    return dense.astype(np.int64)


def _rank_blocked_f64(reduced: np.ndarray, p: int) -> int:
    """Blocked right-looking elimination mod p, exact in float64.

    `reduced` holds int64 entries already in [0, p) with p < 2**20, so any
    dot product of panel length stays below 2**53 and BLAS sums it without
    rounding; np.mod on integral floats is exact.
    """
    a, b = reduced.shape
    A = reduced.astype(np.float64)
    rank = 0
    row = 0
    col = 0
    while row < a and col < b:
        hi = min(col + _PANEL, b)
        r0 = row
        pivot_cols: list[int] = []
        inverses: list[float] = []
        for c in range(col, hi):
            nonzero = np.nonzero(A[row:a, c])[0]
            if nonzero.size == 0:
                continue
            i = row + int(nonzero[0])
            if i != row:
                A[[row, i]] = A[[i, row]]
            inv = float(pow(int(A[row, c]), p - 2, p))
            A[row, c:hi] = np.mod(A[row, c:hi] * inv, p)
            multipliers = A[row + 1 : a, c].copy()
            if multipliers.size:
                A[row + 1 : a, c + 1 : hi] = np.mod(
                    A[row + 1 : a, c + 1 : hi] - np.outer(multipliers, A[row, c + 1 : hi]), p
                )
                A[row + 1 : a, c] = multipliers
            pivot_cols.append(c)
            inverses.append(inv)
            rank += 1
            row += 1
            if row == a:
                break
        if pivot_cols and hi < b and row < a:
            # propagate the panel onto the trailing columns
            trailing = A[r0:row, hi:b]
            trailing[0] = np.mod(trailing[0] * inverses[0], p)
            for t in range(1, len(pivot_cols)):
                left = A[r0 + t, pivot_cols[:t]]
                trailing[t] = np.mod(trailing[t] - left @ trailing[:t], p)
                trailing[t] = np.mod(trailing[t] * inverses[t], p)
            multipliers = A[row:a, pivot_cols]
            A[row:a, hi:b] = np.mod(A[row:a, hi:b] - multipliers @ trailing, p)
        col = hi
    return rank


def _rank_rowreduce_i64(reduced: np.ndarray, p: int) -> int:
    """Plain row reduction mod p in int64; valid for any p < 2**31."""
    A = reduced.copy()
    a, b = A.shape
    row = 0
    for c in range(b):
        nonzero = np.nonzero(A[row:a, c])[0]
        if nonzero.size == 0:
            continue
        i = row + int(nonzero[0])
        if i != row:
            A[[row, i]] = A[[i, row]]
        inv = pow(int(A[row, c]), p - 2, p)
        A[row, c:] = A[row, c:] * inv % p
        multipliers = A[row + 1 : a, c]
        if multipliers.size:
            A[row + 1 : a, c:] = (A[row + 1 : a, c:] - multipliers[:, None] * A[row, c:]) % p
        row += 1
        if row == a:
            break
    return row


def _rank_minpivot(signed: np.ndarray, p: int) -> int:
    """Right-to-left division-free sweep with the small-pivot heuristic.

    Pivot: smallest |value| in the current column, ties broken by fewest
    nonzeros in the remaining columns, then lowest row.  Rows update by
    cross-multiplication (new = old*pivot - colentry*pivotrow mod p), the
    pivot row is removed, and the column retired.
    """
    A = signed.copy()
    a, b = A.shape
    rank = 0
    while a > 0 and b > 0:
        column = A[:a, b - 1]
        nonzero = np.nonzero(column)[0]
        if nonzero.size == 0:
            b -= 1
            continue
        magnitudes = np.abs(column[nonzero])
        candidates = nonzero[magnitudes == magnitudes.min()]
        if candidates.size > 1:
            counts = np.count_nonzero(A[candidates, : b - 1], axis=1)
            i0 = int(candidates[np.argmin(counts)])
        else:
            i0 = int(candidates[0])
        pivot = int(A[i0, b - 1])
        pivot_row = A[i0, : b - 1].copy()
        A[:a, : b - 1] = np.fmod(
            A[:a, : b - 1] * pivot - np.outer(A[:a, b - 1], pivot_row), p
        )
        if i0 < a - 1:
            A[i0 : a - 1, : b - 1] = A[i0 + 1 : a, : b - 1]
        a -= 1
        b -= 1
        rank += 1
    return rank


def rank_mod_p(matrix: SparseIntMatrix | np.ndarray, p: int, method: str = "auto") -> int:
    """Rank of an integer matrix over the field with p elements.

    Deterministic for fixed (matrix, p, method).  `method` is one of
    "auto", "blocked", "rowreduce", "minpivot".
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    dense = _as_dense(matrix)
    if min(dense.shape) == 0:
        return 0
    if method == "auto":
        method = "blocked" if p < _BLOCKED_PRIME_LIMIT else "rowreduce"
    if method == "blocked":
        if p >= _BLOCKED_PRIME_LIMIT:
            raise ValueError(f"blocked elimination needs p < {_BLOCKED_PRIME_LIMIT}")
        return _rank_blocked_f64(np.mod(dense, p), p)
    if method == "rowreduce":
        return _rank_rowreduce_i64(np.mod(dense, p), p)
    if method == "minpivot":
        if p >= _MINPIVOT_PRIME_LIMIT:
            raise ValueError(f"minpivot elimination needs p < {_MINPIVOT_PRIME_LIMIT}")
        return _rank_minpivot(np.fmod(dense, p), p)
    raise ValueError(f"unknown method {method!r}")


def rank_exact(matrix: SparseIntMatrix | np.ndarray, max_cells: int = EXACT_CELL_BUDGET) -> int:
    """Rank over the rationals by fraction-free integer elimination.

    Bareiss updates (pivot*entry - colentry*pivotentry) // previous_pivot
    keep every intermediate value an exact integer minor; pivots are
    chosen of minimal magnitude to limit growth.  Raises RankBudgetError
    when rows*cols exceeds `max_cells` (fall back to the modular engine).
    """
    dense = _as_dense(matrix)
    rows, cols = dense.shape
    if rows * cols > max_cells:
        raise RankBudgetError(f"{rows}x{cols} exceeds exact budget of {max_cells} cells")
    if min(rows, cols) == 0:
        return 0
    A = [[int(v) for v in row] for row in dense]
    previous = 1
    r = 0
    for c in range(cols):
        best = -1
        best_mag = 0
        for i in range(r, rows):
            v = A[i][c]
            if v:
                mag = -v if v < 0 else v
                if best < 0 or mag < best_mag:
                    best, best_mag = i, mag
        if best < 0:
            continue
        if best != r:
            A[r], A[best] = A[best], A[r]
        pivot_row = A[r]
        pivot = pivot_row[c]
        for i in range(r + 1, rows):
            other = A[i]
            head = other[c]
            if head:
                other[c + 1 :] = [
                    (pivot * x - head * y) // previous
                    for x, y in zip(other[c + 1 :], pivot_row[c + 1 :])
                ]
            else:
                other[c + 1 :] = [pivot * x // previous for x in other[c + 1 :]]
        previous = pivot
        r += 1
        if r == rows:
            break
    return r


def rank_multimodular(
    matrix: SparseIntMatrix | np.ndarray, config: RankConfig | None = None
) -> RankReport:
    """Rank report over the configured primes, optionally certified exactly.

    The consensus is the maximum per-prime rank (each prime gives a lower
    bound on the true rank).  The exact engine runs when `config.exact`
    is set, or automatically when both dimensions are at most
    `config.dense_threshold`.
    """
    cfg = config or RankConfig()
    dense = _as_dense(matrix)
    per_prime = tuple((p, rank_mod_p(dense, p)) for p in cfg.primes)
    consensus = max(r for _, r in per_prime)
    agreed = len({r for _, r in per_prime}) == 1
    exact = None
    rows, cols = dense.shape
    small = max(rows, cols) <= cfg.dense_threshold and rows * cols <= EXACT_CELL_BUDGET
    if cfg.exact or small:
        exact = rank_exact(dense)
    return RankReport(
        per_prime=per_prime,
        consensus=consensus,
        agreed=agreed,
        exact_rank=exact,
        certified=exact is not None and exact == consensus,
    )
