"""Exact Gaussian elimination over the rationals.

``linear_solve`` returns the full affine solution set of A x = b: one
particular solution plus a kernel basis, or a distinguished inconsistent
result (never an exception for unsolvable systems).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rational import ONE, ZERO, rat


@dataclass(frozen=True)
class LinearSolution:
    """Solution set {particular + span(kernel)} of a linear system, if any."""

    particular: tuple[Fraction, ...] | None
    kernel: tuple[tuple[Fraction, ...], ...]

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel)

    @property
    def unique(self) -> bool:
        return self.consistent and not self.kernel


def linear_solve(
    matrix: Sequence[Sequence], rhs: Sequence
) -> LinearSolution:
    """Solve A x = b exactly; A is m x n, b has length m."""
    rows = [[rat(v) for v in row] for row in matrix]
    b = [rat(v) for v in rhs]
    m = len(rows)
    if len(b) != m:
        raise ValueError(f"matrix has {m} rows but rhs has {len(b)} entries")
    n = len(rows[0]) if m else 0
    if any(len(row) != n for row in rows):
        raise ValueError("ragged coefficient matrix")

    aug = [rows[i] + [b[i]] for i in range(m)]
    pivot_cols: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][col]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * p for a, p in zip(aug[i], aug[r])]
        pivot_cols.append(col)
        r += 1
        if r == m:
            break

    for i in range(r, m):
        if aug[i][n] != 0:
            return LinearSolution(particular=None, kernel=())

    particular = [ZERO] * n
    for row_idx, col in enumerate(pivot_cols):
        particular[col] = aug[row_idx][n]

    free_cols = [c for c in range(n) if c not in pivot_cols]
    kernel = []
    for free in free_cols:
        vec = [ZERO] * n
        vec[free] = ONE
        for row_idx, col in enumerate(pivot_cols):
            vec[col] = -aug[row_idx][free]
        kernel.append(tuple(vec))

    return LinearSolution(particular=tuple(particular), kernel=tuple(kernel))
