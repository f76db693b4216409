"""Theta labelings assembled from interleaved progressions.

* :func:`label_paired_paths` labels theta(m1^[2], ..., ml^[2]) with
  I/D rows (even lengths) and I*/D* rows (odd lengths).
* :func:`label_theta_4m3` and :func:`label_theta_4m3_five` cover size 4m+3.
* :func:`label_theta_4m` covers size 4m via split-and-reverse of two rows.

In every case the interior vertices alternate between two colors and the
endpoints u, v share a third one.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import SpecError
from ..graphs import build_degenerate_theta, build_theta
from ..labeling import EdgeLabeling
from ..sequences import (
    arith, diamond, make_D, make_D_star, make_I, make_I_star, reverse, split,
)
from .base import Labeled


def _theta_or_degenerate(lengths):
    if list(lengths).count(1) > 1:
        return build_degenerate_theta(lengths)
    return build_theta(lengths)


def paired_rows(ms: Sequence[int]) -> tuple[list[int], list[tuple[int, ...]], int]:
    """Path lengths, label rows and size for theta(m1^[2], ..., ml^[2]).

    Even lengths come first, then odd ones, each in non-decreasing order.
    A length of 1 produces the degenerate two-parallel-edge rows.
    """
    evens = sorted(m for m in ms if m % 2 == 0)
    odds = sorted(m for m in ms if m % 2 == 1)
    q = 2 * sum(ms)
    lengths: list[int] = []
    rows: list[tuple[int, ...]] = []
    used = 0
    for m in evens:
        r = m // 2
        a = 1 + used
        rows += [make_I(r, q, a), make_D(r, q, q - a + 1)]
        lengths += [m, m]
        used += 2 * r
    for j, m in enumerate(odds):
        r = (m - 1) // 2
        b = j + 1 + used
        if r == 0:
            rows += [(b,), (q - b + 1,)]
        else:
            rows += [make_I_star(r, q, b), make_D_star(r, q, q - b + 1)]
        lengths += [m, m]
        used += 2 * r
    return lengths, rows, q


def label_paired_paths(ms: Sequence[int], allow_degenerate: bool = False) -> Labeled:
    """Labeling of theta(m1^[2], ..., ml^[2]) with colors q, q+2 and l(q+1).

    Lengths of 1 make u and v adjacent through parallel edges of equal
    endpoint color; they are rejected unless ``allow_degenerate`` is set, in
    which case the multigraph is returned for the verifier to reject.
    """
    ms = [int(m) for m in ms]
    if not ms:
        raise SpecError("need at least one length")
    if any(m < 1 for m in ms):
        raise SpecError(f"lengths must be positive: {ms}")
    if any(m == 1 for m in ms) and not allow_degenerate:
        raise SpecError("lengths of 1 give parallel u-v edges; every length must be at least 2")
    lengths, rows, q = paired_rows(ms)
    g = _theta_or_degenerate(lengths)
    l = len(ms)
    return Labeled(g, EdgeLabeling.from_rows(g, rows), frozenset({q, q + 2, l * (q + 1)}))


def size_4m3_rows(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    """The three rows S1, S2, S3 (S3 already reversed)."""
    s1 = diamond(arith(m + 1, 4 * m + 3, -1), arith(m, 1, 1))
    s2 = diamond(arith(k, m + 1, 1), arith(k - 1, 3 * m + 2, -1))
    s3_star = diamond(arith(m - k + 2, 3 * m - k + 3, -1), arith(m - k + 1, m + k + 1, 1))
    return s1, s2, reverse(s3_star)


def _check_mk(m: int, k: int) -> None:
    if m < 1 or not 1 <= k <= m:
        raise SpecError(f"need 1 <= k <= m, got m={m}, k={k}")


def label_theta_4m3(m: int, k: int) -> Labeled:
    """theta(2m+1, 2k-1, 2m-2k+3) with colors 4m+3, 4m+4, 7m+6.

    For k = 1 the middle path is a single u-v edge and both ends get 7m+6,
    so the result is not local antimagic; it is still returned as is.
    """
    _check_mk(m, k)
    rows = size_4m3_rows(m, k)
    g = build_theta([len(r) for r in rows])
    return Labeled(g, EdgeLabeling.from_rows(g, rows), frozenset({4 * m + 3, 4 * m + 4, 7 * m + 6}))


def size_4m3_five_rows(m: int, k: int, l: int) -> tuple[tuple[int, ...], ...]:
    """Rows T1, T2, T3, S2, S3; T1 + reverse(T2) + T3 is S1."""
    t1 = diamond(arith(l, 4 * m + 3, -1), arith(l, 1, 1))
    t2 = (l + 1, 4 * m - l + 3)
    t3 = diamond(arith(m - l, 4 * m - l + 2, -1), arith(m - l - 1, l + 2, 1))
    _, s2, s3 = size_4m3_rows(m, k)
    return t1, t2, t3, s2, s3


def label_theta_4m3_five(m: int, k: int, l: int) -> Labeled:
    """theta(2l, 2, 2m-2l-1, 2k-1, 2m-2k+3) with colors 4m+3, 4m+4, 11m+9.

    k = 1 or l = m-1 leaves a length-1 path between u and v, which carry the
    same color; those boundary cases come back unverified.
    """
    _check_mk(m, k)
    if not 1 <= l <= m - 1:
        raise SpecError(f"need 1 <= l <= m-1, got m={m}, l={l}")
    rows = size_4m3_five_rows(m, k, l)
    g = _theta_or_degenerate([len(r) for r in rows])
    return Labeled(g, EdgeLabeling.from_rows(g, rows),
                   frozenset({4 * m + 3, 4 * m + 4, 11 * m + 9}))


def _check_breaks(m: int, xbreaks: Sequence[int], ybreaks: Sequence[int]) -> None:
    if m < 1:
        raise SpecError(f"m must be positive, got {m}")
    xs = [0, *xbreaks]
    ys = [2 * m, *ybreaks]
    if len(xbreaks) < 2 or len(xbreaks) % 2:
        raise SpecError("the first row must be cut into an even number (>= 2) of pieces")
    if len(ybreaks) % 2 == 0:
        raise SpecError("the second row must be cut into an odd number of pieces")
    if any(b <= a for a, b in zip(xs, xs[1:])) or xs[-1] != m:
        raise SpecError(f"x breaks must increase strictly from above 0 to {m}: {list(xbreaks)}")
    if any(b <= a for a, b in zip(ys, ys[1:])) or ys[-1] != 3 * m:
        raise SpecError(f"y breaks must increase strictly from above {2 * m} to {3 * m}: {list(ybreaks)}")


def size_4m_rows(m: int, xbreaks: Sequence[int], ybreaks: Sequence[int]) -> list[tuple[int, ...]]:
    """Pieces of both rows, with every second piece of each row reversed."""
    _check_breaks(m, xbreaks, ybreaks)
    s1 = diamond(arith(m, 4 * m, -1), arith(m, 1, 1))
    s2 = diamond(arith(m, 2 * m, -1), arith(m, 2 * m + 1, 1))
    xs = [0, *xbreaks]
    ys = [2 * m, *ybreaks]
    p1 = split(s1, [2 * (b - a) for a, b in zip(xs, xs[1:])])
    p2 = split(s2, [2 * (b - a) for a, b in zip(ys, ys[1:])])
    out = []
    for pieces in (p1, p2):
        out += [reverse(p) if i % 2 else p for i, p in enumerate(pieces)]
    return out


def label_theta_4m(m: int, xbreaks: Sequence[int], ybreaks: Sequence[int]) -> Labeled:
    """Theta graph of size 4m with colors 4m, 4m+1 and 4m(h+k)+3m.

    ``xbreaks`` (2h values, ending at m) cut the first row and ``ybreaks``
    (2k+1 values, ending at 3m) cut the second.
    """
    rows = size_4m_rows(m, xbreaks, ybreaks)
    h = len(xbreaks) // 2
    k = (len(ybreaks) - 1) // 2
    g = build_theta([len(r) for r in rows])
    return Labeled(g, EdgeLabeling.from_rows(g, rows),
                   frozenset({4 * m, 4 * m + 1, 4 * m * (h + k) + 3 * m}))
