"""Theta (bridge) graphs, spiders and one-point unions of cycles.

Every builder returns an immutable :class:`Graph` whose edges are listed
path by path (or leg by leg, cycle by cycle) in traversal order, so that a
labeling can be written down as one row of integers per structural path.

Vertex ids are dense integers:

* theta graphs: ``u = 0``, ``v = 1``, then internal vertices path-major;
* spiders and cycle unions: core ``0``, then the remaining vertices
  leg-major (cycle-major).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import SimplicityViolation, SpecError

U, V, CORE = 0, 1, 0


def _as_lengths(values: Iterable[int]) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in values)
    except (TypeError, ValueError) as exc:
        raise SpecError(f"lengths must be integers: {values!r}") from exc
    return out


@dataclass(frozen=True)
class ThetaSpec:
    """Ordered path lengths of a theta graph.

    The order matters: constructions hand specific label rows to specific
    paths. Use :meth:`sorted` for the canonical non-decreasing form.
    """

    lengths: tuple[int, ...]

    def __post_init__(self):
        lengths = _as_lengths(self.lengths)
        object.__setattr__(self, "lengths", lengths)
        if len(lengths) < 2:
            raise SpecError("a theta graph needs at least two paths")
        if any(a < 1 for a in lengths):
            raise SpecError(f"path lengths must be positive: {lengths}")
        if lengths.count(1) > 1:
            raise SimplicityViolation("two paths of length 1 form a parallel edge")

    @classmethod
    def of(cls, *lengths: int) -> ThetaSpec:
        return cls(tuple(lengths))

    @property
    def s(self) -> int:
        return len(self.lengths)

    @property
    def q(self) -> int:
        return sum(self.lengths)

    def sorted(self) -> ThetaSpec:
        return ThetaSpec(tuple(sorted(self.lengths)))

    def __str__(self) -> str:
        return "theta(" + ",".join(map(str, self.lengths)) + ")"


@dataclass(frozen=True)
class SpiderSpec:
    legs: tuple[int, ...]

    def __post_init__(self):
        legs = _as_lengths(self.legs)
        object.__setattr__(self, "legs", legs)
        if len(legs) < 2:
            raise SpecError("a spider needs at least two legs")
        if any(a < 1 for a in legs):
            raise SpecError(f"leg lengths must be positive: {legs}")

    @property
    def s(self) -> int:
        return len(self.legs)

    @property
    def q(self) -> int:
        return sum(self.legs)

    def __str__(self) -> str:
        return "Sp(" + ",".join(map(str, self.legs)) + ")"


@dataclass(frozen=True)
class CycleUnionSpec:
    cycles: tuple[int, ...]

    def __post_init__(self):
        cycles = _as_lengths(self.cycles)
        object.__setattr__(self, "cycles", cycles)
        if len(cycles) < 2:
            raise SpecError("a one-point union needs at least two cycles")
        if any(n < 3 for n in cycles):
            raise SpecError(f"cycle orders must be at least 3: {cycles}")

    @property
    def r(self) -> int:
        return len(self.cycles)

    @property
    def q(self) -> int:
        return sum(self.cycles)

    def __str__(self) -> str:
        return "C(" + ",".join(map(str, self.cycles)) + ")"


@dataclass(frozen=True)
class Graph:
    """Undirected graph with structural metadata.

    ``structure[e] = (group, position)`` places edge ``e`` at a 0-based
    position along a structural path, leg or cycle. Generic graphs use a
    single group holding every edge.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    roles: tuple[str, ...]
    family: str = "graph"
    params: tuple[int, ...] = ()
    structure: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        if not self.structure:
            object.__setattr__(self, "structure", tuple((0, i) for i in range(len(self.edges))))
        if len(self.roles) != self.n:
            raise SpecError("one role per vertex is required")
        if len(self.structure) != len(self.edges) or len(set(self.structure)) != len(self.edges):
            raise SpecError("structure metadata must cover every edge exactly once")
        for a, b in self.edges:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise SpecError(f"edge ({a}, {b}) has an endpoint outside [0, {self.n})")

    @property
    def q(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (a, b) in enumerate(self.edges):
            inc[a].append(e)
            if b != a:
                inc[b].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return tuple(frozenset(x) for x in nb)

    @cached_property
    def groups(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids of each structural group, ordered by position."""
        by_group: dict[int, list[tuple[int, int]]] = {}
        for e, (g, pos) in enumerate(self.structure):
            by_group.setdefault(g, []).append((pos, e))
        return tuple(tuple(e for _, e in sorted(by_group[g])) for g in sorted(by_group))

    @property
    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.edges:
            key = (min(a, b), max(a, b))
            if a == b or key in seen:
                return False
            seen.add(key)
        return True

    @property
    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        todo = deque([0])
        while todo:
            x = todo.popleft()
            for y in self.neighbors[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == self.n

    def degree_sequence(self) -> list[int]:
        return sorted(self.degrees, reverse=True)

    def vertices_with_role(self, role: str) -> list[int]:
        return [x for x, r in enumerate(self.roles) if r == role]


def _theta_graph(lengths: Sequence[int]) -> Graph:
    """Theta graph on the given lengths without the simplicity check."""
    roles = ["endpoint-u", "endpoint-v"]
    edges: list[tuple[int, int]] = []
    structure: list[tuple[int, int]] = []
    for j, a in enumerate(lengths):
        prev = U
        for pos in range(a):
            if pos == a - 1:
                nxt = V
            else:
                nxt = len(roles)
                roles.append("internal")
            edges.append((prev, nxt))
            structure.append((j, pos))
            prev = nxt
    return Graph(len(roles), tuple(edges), tuple(roles), "theta", tuple(lengths), tuple(structure))


def build_theta(spec: ThetaSpec | Sequence[int]) -> Graph:
    """Theta graph whose j-th path has ``lengths[j]`` edges listed from u to v."""
    if not isinstance(spec, ThetaSpec):
        spec = ThetaSpec(tuple(spec))
    return _theta_graph(spec.lengths)


def build_degenerate_theta(lengths: Sequence[int]) -> Graph:
    """Theta "graph" that may contain parallel u-v edges.

    Only used to reproduce construction boundary cases; the result is a
    multigraph and is reported as such by the verifier.
    """
    lengths = _as_lengths(lengths)
    if len(lengths) < 2 or any(a < 1 for a in lengths):
        raise SpecError(f"invalid path lengths: {lengths}")
    return _theta_graph(lengths)


def build_spider(spec: SpiderSpec | Sequence[int]) -> Graph:
    if not isinstance(spec, SpiderSpec):
        spec = SpiderSpec(tuple(spec))
    roles = ["core"]
    edges: list[tuple[int, int]] = []
    structure: list[tuple[int, int]] = []
    for j, a in enumerate(spec.legs):
        prev = CORE
        for pos in range(a):
            nxt = len(roles)
            roles.append("pendant" if pos == a - 1 else "internal")
            edges.append((prev, nxt))
            structure.append((j, pos))
            prev = nxt
    return Graph(len(roles), tuple(edges), tuple(roles), "spider", spec.legs, tuple(structure))


def build_cycle_union(spec: CycleUnionSpec | Sequence[int]) -> Graph:
    """One-point union of cycles; cycle i runs core -> ... -> core."""
    if not isinstance(spec, CycleUnionSpec):
        spec = CycleUnionSpec(tuple(spec))
    roles = ["core"]
    edges: list[tuple[int, int]] = []
    structure: list[tuple[int, int]] = []
    for j, n in enumerate(spec.cycles):
        prev = CORE
        for pos in range(n):
            if pos == n - 1:
                nxt = CORE
            else:
                nxt = len(roles)
                roles.append("internal")
            edges.append((prev, nxt))
            structure.append((j, pos))
            prev = nxt
    return Graph(len(roles), tuple(edges), tuple(roles), "cycles", spec.cycles, tuple(structure))


def cycle_vertex(g: Graph, cycle: int, distance: int) -> int:
    """Vertex reached from the core after ``distance`` edges of ``cycle``.

    Cycles are walked starting with their first central edge.
    """
    if g.family != "cycles":
        raise SpecError("cycle_vertex needs a one-point union of cycles")
    path = g.groups[cycle]
    if not 1 <= distance <= len(path) - 1:
        raise SpecError(f"distance {distance} outside [1, {len(path) - 1}]")
    return g.edges[path[distance - 1]][1]


def merge_vertices(g: Graph, groups: Iterable[Iterable[int]]) -> tuple[Graph, tuple[int, ...]]:
    """Identify each group of vertices into one vertex.

    Edge ids and their order are preserved, so any labeling of ``g`` is a
    labeling of the result. Returns the quotient and the old->new vertex map.
    """
    rep = list(range(g.n))
    claimed: set[int] = set()
    for grp in groups:
        members = sorted(set(int(x) for x in grp))
        if not members:
            continue
        for x in members:
            if not 0 <= x < g.n:
                raise SpecError(f"vertex {x} not in graph")
            if x in claimed:
                raise SpecError(f"vertex {x} appears in two merge groups")
            claimed.add(x)
        for x in members:
            rep[x] = members[0]

    new_id: dict[int, int] = {}
    for x in range(g.n):
        if rep[x] not in new_id:
            new_id[rep[x]] = len(new_id)
    mapping = tuple(new_id[rep[x]] for x in range(g.n))

    seen: set[tuple[int, int]] = set()
    edges = []
    for a, b in g.edges:
        na, nb = mapping[a], mapping[b]
        if na == nb:
            raise SimplicityViolation(f"edge ({a}, {b}) would become a loop")
        key = (min(na, nb), max(na, nb))
        if key in seen:
            raise SimplicityViolation(f"edge ({a}, {b}) would become a parallel edge")
        seen.add(key)
        edges.append((na, nb))

    roles: list[set[str]] = [set() for _ in new_id]
    for x in range(g.n):
        roles[mapping[x]].add(g.roles[x])
    merged_roles = tuple(next(iter(r)) if len(r) == 1 else "merged" for r in roles)
    return Graph(len(new_id), tuple(edges), merged_roles), mapping


def theta_of_merged_cycles(spec: CycleUnionSpec | Sequence[int], distances: Sequence[int]) -> ThetaSpec:
    """Theta spec obtained by merging the vertex at ``distances[i]`` of each cycle.

    The result lists ``d_i, n_i - d_i`` for every cycle in order.
    """
    if not isinstance(spec, CycleUnionSpec):
        spec = CycleUnionSpec(tuple(spec))
    distances = _as_lengths(distances)
    if len(distances) != spec.r:
        raise SpecError(f"need {spec.r} distances, got {len(distances)}")
    lengths: list[int] = []
    for n, d in zip(spec.cycles, distances):
        if not 1 <= d <= n - 1:
            raise SpecError(f"distance {d} outside [1, {n - 1}]")
        lengths += [d, n - d]
    if lengths.count(1) > 1:
        raise SimplicityViolation("more than one chosen vertex is adjacent to the core")
    return ThetaSpec(tuple(lengths))
