"""Two-row label matrices and the labeling of theta(2^[s-1], 4).

Odd ``s`` uses a 2 x (s+1) matrix whose first s-1 columns all sum to 2s+3
and whose row sums differ by 2. Even ``s`` uses a 2 x s matrix with equal
row sums, the same column sums, and last column (2, 1).
Both are grown four columns at a time: shift the previous matrix by +4 and
attach a fixed 4-column block.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import SpecError
from ..graphs import build_theta
from ..labeling import EdgeLabeling
from .base import Labeled

PSI4 = ((1, 7, 6, 3), (8, 2, 4, 5))
PSI6 = ((1, 11, 9, 6, 8, 5), (12, 2, 4, 7, 10, 3))
LAMBDA4_HEAD = ((3, 7, 6), (8, 4, 5))
LAMBDA6_HEAD = ((12, 4, 5, 9, 7), (3, 11, 10, 6, 8))
LAST_COLUMN = (2, 1)


@dataclass(frozen=True)
class LabelMatrix:
    rows: tuple[tuple[int, ...], tuple[int, ...]]
    kind: str

    @property
    def width(self) -> int:
        return len(self.rows[0])

    def column_sums(self) -> list[int]:
        return [a + b for a, b in zip(*self.rows)]

    def row_sums(self) -> tuple[int, int]:
        return sum(self.rows[0]), sum(self.rows[1])

    def entry(self, i: int, j: int) -> int:
        """1-based access, matching the usual matrix notation."""
        return self.rows[i - 1][j - 1]


def _shift(rows, k):
    return tuple(tuple(x + k for x in row) for row in rows)


def _hcat(left, right):
    return tuple(a + b for a, b in zip(left, right))


def build_psi(s: int) -> LabelMatrix:
    """2 x (s+1) matrix with entries [1, 2s+2] for odd s >= 3."""
    if s < 3 or s % 2 == 0:
        raise SpecError(f"psi matrices need odd s >= 3, got {s}")
    if (s + 1) % 4 == 0:
        rows, kind = PSI4, "psi-4r"
        for r in range(1, (s + 1) // 4):
            block = ((1, 8 * r + 7, 8 * r + 6, 4), (8 * r + 8, 2, 3, 8 * r + 5))
            rows = _hcat(block, _shift(rows, 4))
    else:
        rows, kind = PSI6, "psi-4r+2"
        for r in range(1, (s - 1) // 4):
            block = ((1, 8 * r + 11, 8 * r + 10, 4), (8 * r + 12, 2, 3, 8 * r + 9))
            rows = _hcat(block, _shift(rows, 4))
    return LabelMatrix(rows, kind)


def build_lambda(s: int) -> LabelMatrix:
    """2 x s matrix with entries [1, 2s] for even s >= 4."""
    if s < 4 or s % 2:
        raise SpecError(f"lambda matrices need even s >= 4, got {s}")
    if s % 4 == 0:
        head, kind = LAMBDA4_HEAD, "lambda-4r"
        for r in range(1, s // 4):
            block = ((3, 8 * r + 7, 8 * r + 6, 6), (8 * r + 8, 4, 5, 8 * r + 5))
            head = _hcat(_shift(head, 4), block)
    else:
        head, kind = LAMBDA6_HEAD, "lambda-4r+2"
        for r in range(1, (s - 2) // 4):
            block = ((3, 8 * r + 11, 8 * r + 10, 6), (8 * r + 12, 4, 5, 8 * r + 9))
            head = _hcat(_shift(head, 4), block)
    rows = _hcat(head, ((LAST_COLUMN[0],), (LAST_COLUMN[1],)))
    return LabelMatrix(rows, kind)


def theta_2s4_colors(s: int) -> frozenset[int]:
    """Color set the matrix labeling of theta(2^[s-1], 4) induces."""
    if s % 2 == 0:
        return frozenset({2 * s + 3, 4 * s + 3, s * (2 * s + 1) // 2})
    if s % 4 == 3:
        return frozenset({2 * s + 2, 2 * s + 3, (s + 1) * (2 * s + 3) // 2 - (s + 1)})
    return frozenset({2 * s - 2, 2 * s + 3, (2 * s * s + 3 * s + 5) // 2})


def label_theta_2s4(s: int) -> Labeled:
    """Local antimagic 3-coloring of theta(2^[s-1], 4).

    The first s-1 paths take matrix columns 1..s-1. The length-4 path takes
    the rest of the matrix (odd s) or 2, 2s+1, 2s+2, 1 (even s). For s = 2
    the graph is the 6-cycle, which no matrix covers; an exact search
    supplies the labeling instead.
    """
    if s < 2:
        raise SpecError(f"s must be at least 2, got {s}")
    g = build_theta((2,) * (s - 1) + (4,))
    if s == 2:
        from ..solver import exact_chi_la

        result = exact_chi_la(g)
        return Labeled(g, result.witness, None)
    if s % 2:
        m = build_psi(s)
        (top, bottom) = m.rows
        rows = [(top[j], bottom[j]) for j in range(s - 1)]
        rows.append((top[s - 1], top[s], bottom[s], bottom[s - 1]))
    else:
        m = build_lambda(s)
        (top, bottom) = m.rows
        rows = [(top[j], bottom[j]) for j in range(s - 1)]
        rows.append((top[s - 1], 2 * s + 1, 2 * s + 2, bottom[s - 1]))
    return Labeled(g, EdgeLabeling.from_rows(g, rows), theta_2s4_colors(s))


# A second labeling of theta(2^[4], 4) in which u and v get different colors.
ALT_THETA_2S4_S5_ROWS = ((1, 12), (2, 11), (3, 10), (4, 9), (5, 8, 7, 6))


def label_theta_2s4_alternate() -> Labeled:
    g = build_theta((2, 2, 2, 2, 4))
    return Labeled(g, EdgeLabeling.from_rows(g, ALT_THETA_2S4_S5_ROWS), frozenset({13, 15, 48}))
