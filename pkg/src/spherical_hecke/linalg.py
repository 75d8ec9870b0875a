"""Fraction-free linear solving over Q(p)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coeffs import ONE, ZERO, RatFuncP, _gcd_q, _exact_div, _mul

__all__ = ["LinearSolveResult", "bareiss_solve"]


@dataclass
class LinearSolveResult:
    status: str  # "solved", "inconsistent" or "rank-deficient"
    solution: list | None = None
    rank: int = 0
    free_columns: list = field(default_factory=list)
    inconsistent_row: int | None = None


def _lcm(a, b):
    g = _gcd_q(a, b)
    return _mul(_exact_div(a, g), b)


def _clear_denominators(row):
    den = (1,)
    for c in row:
        if c.den != (1,):
            den = _lcm(den, c.den)
    if den == (1,):
        return list(row)
    scale = RatFuncP(den)
    return [c * scale for c in row]


def _degree(c: RatFuncP) -> int:
    return len(c.num) + len(c.den)


def bareiss_solve(matrix, rhs) -> LinearSolveResult:
    """Solve ``matrix @ x = rhs`` exactly.

    Rows are first scaled to polynomial entries, then reduced by Bareiss
    elimination (each update divided exactly by the previous pivot).  Pivots
    are the lowest-degree nonzero candidates in their column.  Inconsistent
    systems report the offending original row; rank-deficient systems report
    the free columns instead of picking a solution.
    """
    m = len(matrix)
    ncols = len(matrix[0]) if m else 0
    rows = [_clear_denominators([RatFuncP.coerce(c) for c in r] + [RatFuncP.coerce(b)])
            for r, b in zip(matrix, rhs)]
    origin = list(range(m))
    prev = ONE
    pivots = []
    r = 0
    for col in range(ncols):
        cand = [i for i in range(r, m) if rows[i][col].num]
        if not cand:
            continue
        best = min(cand, key=lambda i: _degree(rows[i][col]))
        rows[r], rows[best] = rows[best], rows[r]
        origin[r], origin[best] = origin[best], origin[r]
        piv = rows[r][col]
        for i in range(r + 1, m):
            lead = rows[i][col]
            if not lead.num:
                if prev.is_one():
                    rows[i] = [piv * rows[i][j] for j in range(ncols + 1)]
                else:
                    rows[i] = [(piv * rows[i][j]) / prev for j in range(ncols + 1)]
                continue
            rows[i] = [
                (piv * rows[i][j] - lead * rows[r][j]) / prev if j >= col else ZERO
                for j in range(ncols + 1)
            ]
        prev = piv
        pivots.append(col)
        r += 1
        if r == m:
            break
    rank = len(pivots)
    for i in range(rank, m):
        if rows[i][ncols].num:
            return LinearSolveResult("inconsistent", rank=rank, inconsistent_row=origin[i])
    free = [c for c in range(ncols) if c not in pivots]
    if free:
        return LinearSolveResult("rank-deficient", rank=rank, free_columns=free)
    x = [ZERO] * ncols
    for i in range(rank - 1, -1, -1):
        col = pivots[i]
        acc = rows[i][ncols]
        for j in range(col + 1, ncols):
            if rows[i][j].num and x[j].num:
                acc = acc - rows[i][j] * x[j]
        x[col] = acc / rows[i][col]
    return LinearSolveResult("solved", solution=x, rank=rank)
