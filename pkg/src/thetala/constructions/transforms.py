"""Labelings obtained by transforming other labeled graphs.

* lifting a 2-coloring of theta(4l^[3l+2], (4l+2)^[l]) to a 3-coloring of
  theta(4l^[3l+2], (4l+1)^[l]) by deleting one edge per long path and
  re-joining the loose ends;
* merging the pendant vertices of a labeled spider into one vertex;
* 2-colorings of two one-point unions of cycles, and merging one vertex of
  every cycle into a new endpoint.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from ..errors import InvalidBase, PatternViolation, SpecError, StructureViolation
from ..graphs import (
    Graph, build_cycle_union, build_theta, cycle_vertex, theta_of_merged_cycles,
)
from ..labeling import EdgeLabeling, induced_colors, verify
from .base import Labeled


def lift_base_lengths(l: int) -> list[int]:
    return [4 * l] * (3 * l + 2) + [4 * l + 2] * l


def lift_two_coloring(l: int, g: Graph, f: EdgeLabeling) -> Labeled:
    """3-coloring of theta(4l^[3l+2], (4l+1)^[l]) from a 2-coloring of the (4l+2) version.

    Each long path must start (from u) with labels i, x-i, y-x+i for a
    distinct i in [1, l], where x = q+1 < y are the two colors. The edge
    x-i is deleted; since x-i = q+1-i the surviving labels are exactly
    [1, q-l]. The loose end after label i is glued onto the path that
    continues with y-x+l+1-i, so the new path in that slot reads
    l+1-i, y-x+i, ... and every glued vertex gets color y-x+l+1.
    """
    if l < 1:
        raise SpecError(f"l must be positive, got {l}")
    if g.family != "theta" or sorted(g.params) != sorted(lift_base_lengths(l)):
        raise PatternViolation(f"base must be theta(4l^[3l+2], (4l+2)^[l]) with l={l}")
    report = verify(g, f)
    if not report.is_local_antimagic or report.color_count != 2:
        raise InvalidBase("base labeling is not a local antimagic 2-coloring")
    x, y = report.sorted_colors()
    if x != g.q + 1:
        raise PatternViolation(f"smaller color {x} is not q+1 = {g.q + 1}")

    rows = f.rows(g)
    seen: set[int] = set()
    new_rows: list[list[int]] = []
    for length, row in zip(g.params, rows):
        if length != 4 * l + 2:
            new_rows.append(row)
            continue
        i = row[0]
        if not 1 <= i <= l or i in seen or row[1] != x - i or row[2] != y - x + i:
            raise PatternViolation(f"long path {row[:3]}... does not start i, x-i, y-x+i")
        seen.add(i)
        new_rows.append([l + 1 - i] + row[2:])
    lifted = build_theta([len(r) for r in new_rows])
    return Labeled(lifted, EdgeLabeling.from_rows(lifted, new_rows),
                   frozenset({y - x + l + 1, x, y}))


def spider_condition(legs: Sequence[int]) -> bool:
    """Whether the longest leg equals sum_{j=1}^{s-2} (s-1-j) * a_j (legs sorted)."""
    legs = sorted(int(a) for a in legs)
    s = len(legs)
    if s < 3:
        raise SpecError("the leg condition needs at least three legs")
    if any(a < 1 or a % 2 for a in legs):
        raise SpecError(f"legs must be positive even numbers: {legs}")
    return legs[-1] == sum((s - 1 - j) * legs[j - 1] for j in range(1, s - 1))


def check_spider_structure(g: Graph, f: EdgeLabeling) -> list[str]:
    """Reasons ``f`` cannot be merged; empty when the merge applies."""
    if g.family != "spider":
        return ["graph is not a spider"]
    report = verify(g, f)
    if not report.is_local_antimagic:
        return ["labeling is not local antimagic"]
    q = g.q
    problems = []
    if report.colors[0] != q:
        problems.append(f"core color {report.colors[0]} is not q = {q}")
    bad = [x for x in range(g.n) if g.degrees[x] == 2 and report.colors[x] not in (q, q + 1)]
    if bad:
        problems.append(f"degree-2 vertices {bad} are not colored q or q+1")
    return problems


def merge_spider_pendants(g: Graph, f: EdgeLabeling) -> Labeled:
    """Identify all pendant vertices of a labeled spider into a new endpoint v."""
    problems = check_spider_structure(g, f)
    if problems:
        raise StructureViolation("; ".join(problems))
    rows = f.rows(g)
    theta = build_theta(g.params)
    merged = sum(row[-1] for row in rows)
    return Labeled(theta, EdgeLabeling.from_rows(theta, rows),
                   frozenset({g.q, g.q + 1, merged}))


def cycle_union_A_spec(r: int) -> list[int]:
    return [4 * r - 2] * (r - 1) + [2 * r - 2]


def cycle_union_B_spec(r: int) -> list[int]:
    return [2 * r] * ((r - 1) // 2) + [2 * r - 2] * ((r + 1) // 2)


def label_cycle_union_A(r: int) -> Labeled:
    """2-coloring of C((4r-2)^[r-1], 2r-2) with colors 4r^2-4r+1 and 4r^2-2r."""
    if r < 3:
        raise SpecError(f"r must be at least 3, got {r}")
    rows = []
    for i in range(1, r):
        row = []
        for j in range(1, 2 * r):
            row += [i + (2 * r - 1) * (j - 1), 4 * r * r - 2 * r - i - (2 * r - 1) * j]
        rows.append(row)
    last = []
    for j in range(1, r):
        last += [(2 * r - 1) * j, 4 * r * r - 4 * r + 1 - (2 * r - 1) * j]
    rows.append(last)
    g = build_cycle_union(cycle_union_A_spec(r))
    return Labeled(g, EdgeLabeling.from_rows(g, rows),
                   frozenset({4 * r * r - 4 * r + 1, 4 * r * r - 2 * r}))


def label_cycle_union_B(r: int) -> Labeled:
    """2-coloring of C((2r)^[(r-1)/2], (2r-2)^[(r+1)/2]) with colors 2r^2-r and 2r^2+r."""
    if r < 3 or r % 2 == 0:
        raise SpecError(f"r must be odd and at least 3, got {r}")
    rows = []
    for i in range(1, (r - 1) // 2 + 1):
        row = []
        for j in range(1, r + 1):
            row += [i + 2 * r * (j - 1), 2 * r * r - r - i - 2 * r * (j - 1)]
        rows.append(row)
    for k in range(1, (r + 1) // 2 + 1):
        row = []
        for j in range(1, r):
            row += [-r + k - 1 + 2 * r * j, 2 * r * r - k + 1 - 2 * r * j]
        rows.append(row)
    g = build_cycle_union(cycle_union_B_spec(r))
    return Labeled(g, EdgeLabeling.from_rows(g, rows),
                   frozenset({2 * r * r - r, 2 * r * r + r}))


def merge_cycle_union(labeled: Labeled | tuple[Graph, EdgeLabeling], distances: Sequence[int]) -> Labeled:
    """Merge the vertex at ``distances[i]`` of each cycle into one endpoint v.

    Distances are counted from the core along the first central edge. Cycle
    i becomes two u-v paths: its first d_i edges, and the remaining edges
    walked backwards from the core. Labels travel with their edges.
    """
    g, f = labeled[0], labeled[1]
    if g.family != "cycles":
        raise SpecError("merge_cycle_union needs a labeled one-point union of cycles")
    spec = theta_of_merged_cycles(g.params, distances)
    colors = induced_colors(g, f)
    rows = []
    for row, d in zip(f.rows(g), distances):
        rows += [row[:d], row[d:][::-1]]
    theta = build_theta(spec)
    merged = sum(colors[cycle_vertex(g, i, d)] for i, d in enumerate(distances))
    base = set(colors)
    return Labeled(theta, EdgeLabeling.from_rows(theta, rows), frozenset(base | {merged}))


def chosen_black_count(distances: Sequence[int]) -> int:
    """Chosen vertices at even distance from the core."""
    return Counter(d % 2 for d in distances)[0]
