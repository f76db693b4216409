"""Exact local antimagic search for small graphs.

Two engines:

* :func:`exists_k_coloring` / :func:`exact_chi_la`: depth-first assignment
  of labels to edges in a fixed order with pruning;
* :func:`brute_force_chi_la`: unpruned enumeration of all q! bijections,
  vectorized with numpy, used as an independent cross-check.

Every labeling returned by the pruned engine is re-checked with
:func:`thetala.labeling.verify` before it leaves this module.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .errors import BudgetExceeded, NotFound
from .graphs import Graph, SpiderSpec, build_spider
from .labeling import EdgeLabeling, verify

ENV_MAX_EDGES = "THETALA_MAX_EDGES"
DEFAULT_MAX_EDGES = 12


def default_max_edges() -> int:
    raw = os.environ.get(ENV_MAX_EDGES)
    return int(raw) if raw else DEFAULT_MAX_EDGES


@dataclass(frozen=True)
class SearchBudget:
    max_edges: int = field(default_factory=default_max_edges)
    max_nodes: Optional[int] = None
    time_cap: Optional[float] = None


@dataclass
class SolveResult:
    """``chi_la`` is ``None`` when the graph has no local antimagic labeling."""

    chi_la: Optional[int]
    witness: Optional[EdgeLabeling]
    nodes_explored: int


def edge_order(g: Graph) -> list[int]:
    """High-degree endpoints first, then by position along the structure."""
    deg = g.degrees

    def key(e):
        a, b = g.edges[e]
        group, pos = g.structure[e]
        return (-max(deg[a], deg[b]), pos, group, e)

    return sorted(range(g.q), key=key)


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) == 1


def _swap_constraints(g: Graph, order: list[int]) -> dict[int, int]:
    """Step -> earlier step whose label it must exceed.

    In theta graphs, spiders and cycle unions, two structural groups of the
    same length can be swapped by an automorphism fixing vertex 0. Requiring
    increasing first-edge labels along each class keeps one labeling per
    orbit.
    """
    if g.family not in ("theta", "spider", "cycles"):
        return {}
    step = {e: t for t, e in enumerate(order)}
    firsts: dict[int, list[int]] = {}
    for grp, length in zip(g.groups, g.params):
        firsts.setdefault(length, []).append(step[grp[0]])
    after = {}
    for steps in firsts.values():
        for prev, cur in zip(steps, steps[1:]):
            if prev < cur:
                after[cur] = prev
    return after


class _Search:
    """One depth-first search; state is mutated in place and undone on return."""

    def __init__(self, g: Graph, k: int, budget: SearchBudget, symmetry: bool,
                 allowed: Optional[dict[int, frozenset[int]]] = None,
                 first_labels: Optional[Iterable[int]] = None):
        self.g = g
        self.q = g.q
        self.k = k
        self.budget = budget
        self.allowed = allowed or {}
        self.order = edge_order(g)
        self.ends = [g.edges[e] for e in self.order]
        last = {}
        for t, (a, b) in enumerate(self.ends):
            last[a] = t
            last[b] = t
        self.completes = [(last[a] == t, last[b] == t) for t, (a, b) in enumerate(self.ends)]
        self.nbrs = [tuple(x) for x in g.neighbors]
        self.partial = [0] * g.n
        self.color: list[Optional[int]] = [None] * g.n
        self.counts: dict[int, int] = {}
        self.used = [False] * (self.q + 2)
        self.labels = [0] * g.q
        self.after = _swap_constraints(g, self.order) if symmetry else {}
        # complementing every label maps colors c -> deg*(q+1) - c, which is
        # only a bijection on colorings when all degrees agree; it is not
        # combined with the path-swap constraints
        use_complement = symmetry and not self.after and is_regular(g)
        self.half = math.ceil(self.q / 2) if use_complement else None
        self.first_labels = None if first_labels is None else sorted(set(first_labels))
        self.nodes = 0
        self.start = time.monotonic()

    def _tick(self):
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExceeded(f"node budget {b.max_nodes} exhausted")
        if b.time_cap is not None and self.nodes % 4096 == 0:
            if time.monotonic() - self.start > b.time_cap:
                raise BudgetExceeded(f"time budget {b.time_cap}s exhausted")

    def _ok(self, x: int, c: int, other: Optional[int] = None, c_other: Optional[int] = None) -> bool:
        """Whether vertex x may be completed with color c."""
        allow = self.allowed.get(x)
        if allow is not None and c not in allow:
            return False
        color = self.color
        for y in self.nbrs[x]:
            if color[y] == c:
                return False
        if other is not None and c == c_other and other in self.nbrs[x]:
            return False
        return True

    def _candidates(self, t: int):
        q = self.q
        if t == 0:
            if self.first_labels is not None:
                labels = self.first_labels
            else:
                labels = range(1, q + 1)
            if self.half is not None:
                labels = [x for x in labels if x <= self.half]
            return labels
        a, b = self.ends[t]
        ca, cb = self.completes[t]
        targets = None
        for v, done in ((a, ca), (b, cb)):
            if not done:
                continue
            if len(self.counts) >= self.k:
                pool = set(self.counts)
            else:
                pool = None
            allow = self.allowed.get(v)
            if allow is not None:
                pool = set(allow) if pool is None else pool & allow
            if pool is not None:
                need = {c - self.partial[v] for c in pool}
                targets = need if targets is None else targets & need
        low = 1
        if t in self.after:
            low = self.labels[self.order[self.after[t]]] + 1
        if targets is None:
            return range(low, q + 1)
        return sorted(x for x in targets if low <= x <= q)

    def run(self) -> bool:
        return self._dfs(0)

    def _dfs(self, t: int) -> bool:
        self._tick()
        if t == self.q:
            return True
        a, b = self.ends[t]
        ca, cb = self.completes[t]
        partial, used, counts = self.partial, self.used, self.counts
        for x in self._candidates(t):
            if used[x]:
                continue
            pa = partial[a] + x
            pb = partial[b] + x
            new = []
            if ca:
                if not self._ok(a, pa, b if cb else None, pb):
                    continue
                new.append((a, pa))
            if cb:
                if not self._ok(b, pb, a if ca else None, pa):
                    continue
                new.append((b, pb))
            fresh = {c for _, c in new if c not in counts}
            if len(counts) + len(fresh) > self.k:
                continue
            used[x] = True
            partial[a] = pa
            partial[b] = pb
            self.labels[self.order[t]] = x
            for v, c in new:
                self.color[v] = c
                counts[c] = counts.get(c, 0) + 1
            if self._dfs(t + 1):
                return True
            for v, c in new:
                self.color[v] = None
                counts[c] -= 1
                if not counts[c]:
                    del counts[c]
            partial[a] -= x
            partial[b] -= x
            used[x] = False
        return False


def _check_size(g: Graph, budget: SearchBudget) -> None:
    if g.q > budget.max_edges:
        raise BudgetExceeded(f"graph has {g.q} edges, budget allows {budget.max_edges}")


def _run_subtree(args):
    g, k, budget, symmetry, allowed, first = args
    search = _Search(g, k, budget, symmetry, allowed, first_labels=[first])
    found = search.run()
    return found, tuple(search.labels) if found else None, search.nodes


def _search(g: Graph, k: int, budget: SearchBudget, symmetry: bool,
            allowed: Optional[dict[int, frozenset[int]]], jobs: int) -> tuple[Optional[EdgeLabeling], int]:
    if g.q == 0:
        return None, 0
    if jobs <= 1:
        search = _Search(g, k, budget, symmetry, allowed)
        found = search.run()
        return (EdgeLabeling(tuple(search.labels)) if found else None), search.nodes
    probe = _Search(g, k, budget, symmetry, allowed)
    firsts = list(probe._candidates(0))
    tasks = [(g, k, budget, symmetry, allowed, x) for x in firsts]
    nodes = 0
    witness = None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # results come back in first-label order, so the witness does not
        # depend on the number of workers
        for found, labels, n in pool.map(_run_subtree, tasks):
            nodes += n
            if found and witness is None:
                witness = EdgeLabeling(labels)
    return witness, nodes


def exists_k_coloring(g: Graph, k: int, budget: Optional[SearchBudget] = None,
                      symmetry: bool = True, jobs: int = 1) -> Optional[EdgeLabeling]:
    """A local antimagic labeling with at most ``k`` colors, or ``None``."""
    return _exists(g, k, budget or SearchBudget(), symmetry, jobs)[0]


def _exists(g, k, budget, symmetry, jobs):
    _check_size(g, budget)
    witness, nodes = _search(g, k, budget, symmetry, None, jobs)
    if witness is not None:
        report = verify(g, witness)
        assert report.is_local_antimagic and report.color_count <= k, "search returned a bad witness"
    return witness, nodes


def exact_chi_la(g: Graph, budget: Optional[SearchBudget] = None,
                 symmetry: bool = True, jobs: int = 1) -> SolveResult:
    """Smallest color count over all local antimagic labelings of ``g``."""
    budget = budget or SearchBudget()
    _check_size(g, budget)
    total = 0
    for k in range(2, max(g.n, 2) + 1):
        witness, nodes = _exists(g, k, budget, symmetry, jobs)
        total += nodes
        if witness is not None:
            chi = verify(g, witness).color_count
            return SolveResult(chi, witness, total)
    return SolveResult(None, None, total)


def find_spider_labeling(spec: SpiderSpec, budget: Optional[SearchBudget] = None) -> EdgeLabeling:
    """Spider labeling whose core has color q and degree-2 vertices q or q+1."""
    budget = budget or SearchBudget()
    g = build_spider(spec)
    _check_size(g, budget)
    q = g.q
    allowed = {0: frozenset({q})}
    for x in range(1, g.n):
        if g.degrees[x] == 2:
            allowed[x] = frozenset({q, q + 1})
    witness, _ = _search(g, g.n, budget, False, allowed, 1)
    if witness is None:
        raise NotFound(f"no labeling of {spec} has the required color structure")
    from .constructions.transforms import check_spider_structure

    assert not check_spider_structure(g, witness)
    return witness


def _all_colorings(g: Graph, chunk: int = 200_000):
    """Yield (labels, colors) arrays for every bijection onto [1, q], chunk by chunk."""
    q = g.q
    inc = np.zeros((q, g.n), dtype=np.int64)
    for e, (a, b) in enumerate(g.edges):
        inc[e, a] += 1
        inc[e, b] += 1
    perms = itertools.permutations(range(1, q + 1))
    while True:
        block = list(itertools.islice(perms, chunk))
        if not block:
            return
        labels = np.array(block, dtype=np.int64)
        yield labels, labels @ inc


def brute_force_colorings(g: Graph):
    """Yield (labels, color_count) for every local antimagic bijection."""
    pairs = np.array([e for e in g.edges if e[0] != e[1]], dtype=np.int64).reshape(-1, 2)
    for labels, colors in _all_colorings(g):
        ok = np.all(colors[:, pairs[:, 0]] != colors[:, pairs[:, 1]], axis=1)
        if not ok.any():
            continue
        good = np.sort(colors[ok], axis=1)
        counts = 1 + np.count_nonzero(np.diff(good, axis=1), axis=1)
        for row, c in zip(labels[ok], counts):
            yield tuple(int(x) for x in row), int(c)


def brute_force_chi_la(g: Graph) -> Optional[int]:
    """Minimum color count over all q! bijections, with no pruning at all."""
    best = None
    pairs = np.array([e for e in g.edges if e[0] != e[1]], dtype=np.int64).reshape(-1, 2)
    for _, colors in _all_colorings(g):
        ok = np.all(colors[:, pairs[:, 0]] != colors[:, pairs[:, 1]], axis=1)
        if not ok.any():
            continue
        good = np.sort(colors[ok], axis=1)
        counts = 1 + np.count_nonzero(np.diff(good, axis=1), axis=1)
        m = int(counts.min())
        best = m if best is None else min(best, m)
    return best
