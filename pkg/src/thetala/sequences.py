"""Arithmetic progressions, interleaving, and the I/D sequence families.

Sequences are plain tuples of ints. Terms may fall outside ``[1, q]`` while
a construction is being assembled; only the verifier judges the final
labeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LengthMismatch, SpecError

IntSeq = tuple[int, ...]


@dataclass(frozen=True)
class ArithSeq:
    first: int
    diff: int
    len: int

    def __post_init__(self):
        if self.len < 0:
            raise SpecError("progression length must be non-negative")

    def term(self, t: int) -> int:
        """1-based term."""
        if not 1 <= t <= self.len:
            raise IndexError(t)
        return self.first + (t - 1) * self.diff

    def terms(self) -> IntSeq:
        return tuple(self.first + i * self.diff for i in range(self.len))


def arith(length: int, first: int, diff: int) -> IntSeq:
    """Progression of ``length`` terms starting at ``first``."""
    return ArithSeq(first, diff, length).terms()


def diamond(a1: Sequence[int], a2: Sequence[int]) -> IntSeq:
    """Interleave: a1[0], a2[0], a1[1], a2[1], ...

    ``a1`` may be one term longer than ``a2``.
    """
    if len(a1) - len(a2) not in (0, 1):
        raise LengthMismatch(f"cannot interleave lengths {len(a1)} and {len(a2)}")
    out: list[int] = []
    for x, y in zip(a1, a2):
        out += (x, y)
    if len(a1) > len(a2):
        out.append(a1[-1])
    return tuple(out)


def _check_m(m: int) -> None:
    if m < 1:
        raise SpecError(f"m must be a positive integer, got {m}")


def make_I(m: int, q: int, a: int) -> IntSeq:
    """Length 2m; pair sums alternate q, q+2."""
    _check_m(m)
    return diamond(arith(m, a, 2), arith(m, q - a, -2))


def make_D(m: int, q: int, b: int) -> IntSeq:
    """Length 2m; pair sums alternate q+2, q."""
    _check_m(m)
    return diamond(arith(m, b, -2), arith(m, q - b + 2, 2))


def make_I_star(m: int, q: int, a: int) -> IntSeq:
    """Length 2m+1; runs from a to a+2m."""
    _check_m(m)
    return diamond(arith(m + 1, a, 2), arith(m, q - a, -2))


def make_D_star(m: int, q: int, b: int) -> IntSeq:
    """Length 2m+1; runs from b to b-2m."""
    _check_m(m)
    return diamond(arith(m + 1, b, -2), arith(m, q - b + 2, 2))


def split(seq: Sequence[int], piece_lengths: Sequence[int]) -> list[IntSeq]:
    """Cut ``seq`` into consecutive pieces of the given lengths."""
    if any(k < 0 for k in piece_lengths) or sum(piece_lengths) != len(seq):
        raise LengthMismatch(f"pieces {list(piece_lengths)} do not cover {len(seq)} terms")
    out = []
    start = 0
    for k in piece_lengths:
        out.append(tuple(seq[start:start + k]))
        start += k
    return out


def reverse(seq: Sequence[int]) -> IntSeq:
    return tuple(reversed(seq))


def pair_sums(seq: Sequence[int]) -> IntSeq:
    """Sums of consecutive terms; these are the interior vertex colors of a path."""
    return tuple(x + y for x, y in zip(seq, seq[1:]))
