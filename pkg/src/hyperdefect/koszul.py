"""Graded matrix blocks of the map (w, w') -> (df^w, dw + df^w').

Working in the contraction basis of (n+1)-forms on C^m, wedging with df
acts componentwise as multiplication by the partial derivatives of f, and
the exterior derivative sends a coefficient monomial to its formal
derivative, one block row per component.  The alternating signs of the
contraction basis are dropped throughout: they rescale rows and columns
by +-1 and cannot change any rank, which is the only quantity consumed
downstream.

Rows are indexed by (component j, source monomial), row = j * dim + rank
of the monomial; columns by target monomials in rank order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .monomials import dim_graded, graded_monomials, monomial_index
from .polynomials import HomogeneousForm

# to_dense targets int64; block entries are tiny but guard anyway
_DENSE_LIMIT = 2**62


@dataclass(frozen=True)
class SparseIntMatrix:
    """Immutable sparse integer matrix in sorted triplet form."""

    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"negative shape {self.rows}x{self.cols}")
        previous = None
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if v == 0:
                raise ValueError(f"stored zero at ({r}, {c})")
            if previous is not None and (r, c) <= previous:
                raise ValueError(f"entries not strictly sorted at ({r}, {c})")
            previous = (r, c)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def to_dense(self) -> np.ndarray:
        """Dense int64 array; raises if any entry would not fit."""
        dense = np.zeros((self.rows, self.cols), dtype=np.int64)
        if self.entries:
            r, c, v = zip(*self.entries)
            if max(abs(x) for x in v) >= _DENSE_LIMIT:
                raise OverflowError("entry too large for int64 densification")
            dense[np.asarray(r), np.asarray(c)] = np.asarray(v, dtype=np.int64)
        return dense

    def to_triplet_text(self) -> str:
        """Debug dump: 'rows cols nnz' header, then one 'row col value' per line."""
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        lines.extend(f"{r} {c} {v}" for r, c, v in self.entries)
        return "\n".join(lines) + "\n"


def _accumulate(rows: int, cols: int, items: Iterable[tuple[int, int, int]]) -> SparseIntMatrix:
    acc: dict[tuple[int, int], int] = {}
    for r, c, v in items:
        key = (r, c)
        new = acc.get(key, 0) + v
        if new:
            acc[key] = new
        elif key in acc:
            del acc[key]
    entries = tuple(sorted((r, c, v) for (r, c), v in acc.items()))
    return SparseIntMatrix(rows, cols, entries)


def build_wedge_block(form: HomogeneousForm, e: int) -> SparseIntMatrix:
    """Matrix of wedging with df on coefficient monomials of degree e.

    Row (j, a) is the coefficient vector of x^a * df/dx_j in the degree
    e+d-1 basis: each term c*x^t of f with t_j > 0 contributes t_j*c at
    column a + t - unit_j.  For e < 0 the block has no rows (columns are
    still sized by the target degree so adjacent blocks line up).
    """
    m = form.variable_count
    d = form.degree
    source = list(graded_monomials(m, e))
    cols = dim_graded(m, e + d - 1)
    items: list[tuple[int, int, int]] = []
    for j in range(m):
        base = j * len(source)
        for t, coefficient in form.poly.items():
            tj = t[j]
            if tj == 0:
                continue
            shift = t[:j] + (tj - 1,) + t[j + 1 :]
            for row, a in enumerate(source):
                target = tuple(x + y for x, y in zip(a, shift))
                items.append((base + row, monomial_index(target), tj * coefficient))
    return _accumulate(m * len(source), cols, items)


def build_derivative_block(m: int, e: int) -> SparseIntMatrix:
    """Matrix of the componentwise formal derivative on degree-e monomials.

    Component j sends x^a to a_j * x^(a - unit_j); independent of f.
    Empty for e <= 0 (no columns at e = 0, no rows below).
    """
    source = list(graded_monomials(m, e))
    cols = dim_graded(m, e - 1)
    items: list[tuple[int, int, int]] = []
    for j in range(m):
        base = j * len(source)
        for row, a in enumerate(source):
            aj = a[j]
            if aj == 0:
                continue
            target = a[:j] + (aj - 1,) + a[j + 1 :]
            items.append((base + row, monomial_index(target), aj))
    return _accumulate(m * len(source), cols, items)


@dataclass(frozen=True)
class PhiDegrees:
    """Degree bookkeeping for one assembled map."""

    m: int
    d: int
    multiplier: int
    source_low: int
    source_high: int
    target_low: int
    target_high: int


@dataclass(frozen=True)
class PhiBlocks:
    """The assembled block matrix [[A, 0], [D, B]] at grading multiplier*d.

    A (`wedge_low`) and B (`wedge_high`) are wedge blocks at the two source
    coefficient degrees, D (`derivative`) couples the upper source block
    into the lower target block, and `full` holds the block-triangular
    assembly whose rank enters the E2 dimension count.
    """

    wedge_low: SparseIntMatrix
    wedge_high: SparseIntMatrix
    derivative: SparseIntMatrix
    full: SparseIntMatrix
    degrees: PhiDegrees


def assemble_phi(form: HomogeneousForm, multiplier: int) -> PhiBlocks:
    """Build the graded map at target grading multiplier*d.

    Source coefficient degrees are (multiplier-2)*d - (m-1) and
    (multiplier-1)*d - (m-1); targets are one wedge degree above each.
    Empty blocks are allowed (small d or multiplier = 2).
    """
    if multiplier < 2:
        raise ValueError(f"multiplier must be >= 2, got {multiplier}")
    m = form.variable_count
    d = form.degree
    e_low = (multiplier - 2) * d - (m - 1)
    e_high = (multiplier - 1) * d - (m - 1)
    wedge_low = build_wedge_block(form, e_low)
    wedge_high = build_wedge_block(form, e_high)
    derivative = build_derivative_block(m, e_high)
    assert derivative.cols == wedge_low.cols
    assert derivative.rows == wedge_high.rows
    row_offset = wedge_low.rows
    col_offset = wedge_low.cols
    items = list(wedge_low.entries)
    items.extend((r + row_offset, c, v) for r, c, v in derivative.entries)
    items.extend((r + row_offset, c + col_offset, v) for r, c, v in wedge_high.entries)
    full = SparseIntMatrix(
        wedge_low.rows + wedge_high.rows,
        wedge_low.cols + wedge_high.cols,
        tuple(sorted(items)),
    )
    degrees = PhiDegrees(m, d, multiplier, e_low, e_high, e_low + d - 1, e_high + d - 1)
    return PhiBlocks(wedge_low, wedge_high, derivative, full, degrees)
