"""Exact linear solving over Q(q) for small dense systems."""

from __future__ import annotations

from .qfield import RatFunc, ZERO


def solve_linear(rows: list[list[RatFunc]], rhs: list[RatFunc]) -> list[RatFunc] | None:
    """Solve A x = b by Gaussian elimination with rational-function pivots.

    Returns one solution with free variables set to zero, or None when the
    system is inconsistent.  The input is not modified.
    """
    m = len(rows)
    if m != len(rhs):
        raise ValueError("row/rhs length mismatch")
    n = len(rows[0]) if m else 0
    a = [list(r) + [v] for r, v in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((k for k in range(r, m) if a[k][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = a[r][col]
        a[r] = [v / inv for v in a[r]]
        for k in range(m):
            if k != r and a[k][col]:
                f = a[k][col]
                a[k] = [vk - f * vr for vk, vr in zip(a[k], a[r])]
        pivot_cols.append(col)
        r += 1
        if r == m:
            break
    for k in range(r, m):
        if a[k][n]:
            return None
    x = [ZERO] * n
    for row, col in enumerate(pivot_cols):
        x[col] = a[row][n]
    return x
