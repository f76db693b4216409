"""Classification of theta graphs by local antimagic chromatic number.

* :func:`match_chi2_family` decides membership in the complete list of
  theta graphs (s >= 3) with chi_la = 2.
* :func:`lower_bound` applies the bipartite counting argument: in a
  2-coloring with colors x < y every edge joins the two color classes, so
  ``x |X| = y |Y| = q (q + 1) / 2``.
* :func:`chi_la_theta` combines the classifier, the explicit constructions
  and (for small graphs) the exact solver.
* :func:`conjecture_sweep` tests chi_la = 3 on every bipartite theta graph
  with equal parts up to a given size.
"""

from __future__ import annotations

from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence

from .constructions import (
    Labeled, label_cycle_union_A, label_cycle_union_B, label_paired_paths, label_theta_2s4,
    label_theta_4m, label_theta_4m3, label_theta_4m3_five, lift_two_coloring, merge_cycle_union,
    merge_spider_pendants, spider_condition,
)
from .constructions.transforms import cycle_union_A_spec, cycle_union_B_spec, lift_base_lengths
from .data import LIFT_BASE_L2_LENGTHS, LIFT_BASE_L2_ROWS
from .errors import BudgetExceeded, NotFound, SpecError
from .graphs import Graph, SpiderSpec, ThetaSpec, build_spider, build_theta
from .labeling import EdgeLabeling
from .solver import SearchBudget, exact_chi_la, find_spider_labeling

ITEMS = ("K2s", "1", "2a", "2b", "3a", "3b", "4")

_ITEM_2B = {
    1: (2,) + (4,) * 3 + (6,),
    2: (4,) + (8,) * 5 + (10,) * 2,
    3: (6,) + (12,) * 7 + (14,) * 3,
}


def expand_family(item: str, **params: int) -> tuple[int, ...]:
    """Sorted path lengths of a member of the chi_la = 2 list.

    Parameter names per item: K2s(s), 1(l), 2a(l), 2b(j) for the j-th of the
    three sporadic graphs, 3a(l, t), 3b(l, t), 4(s, t). Ranges are not
    checked here; :func:`family_parameters` enumerates the valid ones.
    """
    p = params
    if item == "K2s":
        lengths = [2] * p["s"]
    elif item == "1":
        l = p["l"]
        lengths = [4 * l] * (3 * l + 2) + [4 * l + 2] * l
    elif item == "2a":
        l = p["l"]
        lengths = [2 * l - 2] + [4 * l - 2] * (3 * l - 1)
    elif item == "2b":
        lengths = list(_ITEM_2B[p["j"]])
    elif item == "3a":
        l, t = p["l"], p["t"]
        lengths = [4 * l - 2 - 2 * t, 2 * t] + [4 * l - 4] * l + [4 * l - 2] * (l - 2)
    elif item == "3b":
        l, t = p["l"], p["t"]
        lengths = [4 * l - 2 - 2 * t, 2 * t - 2] + [4 * l - 4] * (l - 1) + [4 * l - 2] * (l - 1)
    elif item == "4":
        s, t = p["s"], p["t"]
        lengths = [2 * t, 4 * s - 6 - 2 * t, 2 * s - 4] + [4 * s - 6] * (s - 3)
    else:
        raise SpecError(f"unknown family item {item!r}")
    return tuple(sorted(lengths))


def family_parameters(item: str, s: int) -> Iterator[dict[str, int]]:
    """Every valid parameter choice of ``item`` giving exactly ``s`` paths."""
    if item == "K2s":
        if s >= 4 and s % 2 == 0:
            yield {"s": s}
    elif item == "1":
        if s >= 6 and (s - 2) % 4 == 0:
            yield {"l": (s - 2) // 4}
    elif item == "2a":
        if s >= 6 and s % 3 == 0:
            yield {"l": s // 3}
    elif item == "2b":
        for j, lengths in _ITEM_2B.items():
            if len(lengths) == s:
                yield {"j": j}
    elif item in ("3a", "3b"):
        if s >= 4 and s % 2 == 0:
            l = s // 2
            top = Fraction(5 * l - 2, 4) if item == "3a" else Fraction(5 * l, 4)
            t = l
            while t <= top:
                yield {"l": l, "t": t}
                t += 1
    elif item == "4":
        if s >= 4:
            t = 1
            while t <= Fraction(6 * s - 5, 8):
                if t >= Fraction(2 * s - 3, 8):
                    yield {"s": s, "t": t}
                t += 1
    else:
        raise SpecError(f"unknown family item {item!r}")


@dataclass(frozen=True)
class FamilyMatch:
    item: str
    parameters: tuple[tuple[str, int], ...]

    def params(self) -> dict[str, int]:
        return dict(self.parameters)

    def expand(self) -> tuple[int, ...]:
        return expand_family(self.item, **self.params())

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.parameters)
        return f"family {self.item} ({args})"


def _lengths_of(spec) -> tuple[int, ...]:
    if isinstance(spec, ThetaSpec):
        return spec.lengths
    return ThetaSpec(tuple(spec)).lengths


def match_chi2_family(spec: ThetaSpec | Sequence[int]) -> Optional[FamilyMatch]:
    """First item of the chi_la = 2 list equal to ``spec`` as a multiset.

    Items are scanned in the order of :data:`ITEMS`. Only s >= 3 is
    covered; two-path specs (cycles) never match.
    """
    lengths = tuple(sorted(_lengths_of(spec)))
    s = len(lengths)
    if s < 3:
        return None
    for item in ITEMS:
        for params in family_parameters(item, s):
            if expand_family(item, **params) == lengths:
                return FamilyMatch(item, tuple(params.items()))
    return None


@dataclass(frozen=True)
class BoundCertificate:
    """``lower`` is 3 when a 2-coloring is impossible, otherwise 2.

    ``details`` holds the arithmetic behind the reason: ``q``, the part
    sizes (larger first), ``half_sum = q(q+1)/2`` and, when they exist,
    the candidate colors ``x < y``.
    """

    lower: int
    reason: str
    details: dict = field(default_factory=dict)

    def __str__(self) -> str:
        d = self.details
        if self.reason == "non-bipartite":
            return f"chi_la >= 3: odd cycle of length {d['odd_cycle']}"
        if self.reason == "equal-parts":
            return f"chi_la >= 3: parts have equal size {d['parts'][0]}"
        big, small = d["parts"]
        if self.reason == "no-divisor-pair":
            return (f"chi_la >= 3: q(q+1)/2 = {d['half_sum']} is not divisible by both "
                    f"part sizes {big} and {small}")
        return (f"chi_la >= 2 ({self.reason}): x={d['x']} * {big} = y={d['y']} * {small} "
                f"= {d['half_sum']}")


def bipartition(g: Graph) -> tuple[Optional[list[int]], Optional[int]]:
    """(side per vertex, None) for a bipartite graph, else (None, odd cycle length)."""
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(g.neighbors[x]):
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    queue.append(y)
                elif side[y] == side[x]:
                    # x and y sit on the same BFS layer; their tree paths
                    # meet at a common ancestor and close an odd cycle
                    a, b, length = x, y, 1
                    while a != b:
                        a, b = parent[a], parent[b]
                        length += 2
                    return None, length
    return side, None


def lower_bound(g: Graph) -> BoundCertificate:
    """Lower bound on chi_la from the bipartite counting argument."""
    if g.n < 3 or not g.is_connected:
        raise SpecError("lower_bound needs a connected graph on at least 3 vertices")
    q = g.q
    half_sum = q * (q + 1) // 2
    side, odd = bipartition(g)
    if side is None:
        return BoundCertificate(3, "non-bipartite", {"q": q, "odd_cycle": odd})
    n0 = side.count(0)
    big, small = max(n0, g.n - n0), min(n0, g.n - n0)
    details = {"q": q, "parts": (big, small), "half_sum": half_sum}
    if big == small:
        return BoundCertificate(3, "equal-parts", details)
    if half_sum % big or half_sum % small:
        return BoundCertificate(3, "no-divisor-pair", details)
    details.update(x=half_sum // big, y=half_sum // small)
    reason = "divisor-pair"
    if g.family == "theta" and len(g.params) >= 3 and match_chi2_family(g.params):
        reason = "in-chi2-family"
    return BoundCertificate(2, reason, details)


# ---------------------------------------------------------------------------
# recognizers: multiset of lengths -> labeled theta graph, or None


def _try_theta_2s4(ls, budget):
    s = len(ls)
    if ls == (2,) * (s - 1) + (4,):
        yield "theta-2s4", lambda: label_theta_2s4(s)


def _try_paired(ls, budget):
    counts = Counter(ls)
    if min(ls) >= 2 and all(c % 2 == 0 for c in counts.values()):
        ms = sorted(m for m, c in counts.items() for _ in range(c // 2))
        yield "paired", lambda: label_paired_paths(ms)


def _try_4m3(ls, budget):
    q = sum(ls)
    if q % 4 != 3:
        return
    m = (q - 3) // 4
    if len(ls) == 3:
        for k in range(2, m + 1):
            if tuple(sorted((2 * m + 1, 2 * k - 1, 2 * m - 2 * k + 3))) == ls:
                yield "size-4m3", lambda k=k: label_theta_4m3(m, k)
                return
    if len(ls) == 5:
        for k in range(2, m + 1):
            for l in range(1, m - 1):
                shape = (2 * l, 2, 2 * m - 2 * l - 1, 2 * k - 1, 2 * m - 2 * k + 3)
                if tuple(sorted(shape)) == ls:
                    yield "size-4m3", lambda k=k, l=l: label_theta_4m3_five(m, k, l)
                    return


def _even_subset(values: tuple[int, ...], target: int) -> Optional[list[int]]:
    """Sub-multiset with an even number (>= 2) of elements summing to ``target``."""
    items = sorted(Counter(values).items())

    @lru_cache(maxsize=None)
    def go(i: int, rest: int, odd: bool, empty: bool) -> Optional[tuple[int, ...]]:
        if rest == 0:
            return () if not odd and not empty else None
        if i == len(items) or rest < 0:
            return None
        value, mult = items[i]
        for c in range(min(mult, rest // value), -1, -1):
            sub = go(i + 1, rest - c * value, odd ^ (c % 2 == 1), empty and c == 0)
            if sub is not None:
                return (value,) * c + sub
        return None

    out = go(0, target, False, True)
    return None if out is None else list(out)


def _try_4m(ls, budget):
    q = sum(ls)
    s = len(ls)
    if s < 3 or s % 2 == 0 or q % 4 or any(a % 2 for a in ls):
        return
    m = q // 4
    first = _even_subset(ls, 2 * m)
    if first is None:
        return
    second = list((Counter(ls) - Counter(first)).elements())
    xbreaks, acc = [], 0
    for a in first:
        acc += a // 2
        xbreaks.append(acc)
    ybreaks, acc = [], 2 * m
    for a in second:
        acc += a // 2
        ybreaks.append(acc)
    yield "size-4m", lambda: label_theta_4m(m, xbreaks, ybreaks)


def _lift_l2() -> Labeled:
    base = build_theta(LIFT_BASE_L2_LENGTHS)
    return lift_two_coloring(2, base, EdgeLabeling.from_rows(base, LIFT_BASE_L2_ROWS))


def _try_lift(ls, budget):
    lifted = sorted(lift_base_lengths(2)[:8] + [9, 9])
    if list(ls) == lifted:
        yield "lift", _lift_l2


def _pairings(ls: tuple[int, ...], cycles: list[int]) -> Iterator[list[tuple[int, int]]]:
    """Ways to split ``ls`` into pairs whose sums are ``cycles`` (in order)."""
    pool = Counter(ls)

    def go(i):
        if i == len(cycles):
            yield []
            return
        n = cycles[i]
        for a in sorted(pool):
            b = n - a
            if a > b or pool[a] == 0 or pool[b] == 0 or (a == b and pool[a] < 2):
                continue
            pool[a] -= 1
            pool[b] -= 1
            for rest in go(i + 1):
                yield [(a, b)] + rest
            pool[a] += 1
            pool[b] += 1

    yield from go(0)


def _try_merged_cycles(ls, budget, limit: int = 50):
    s = len(ls)
    if s < 6 or s % 2:
        return
    r = s // 2
    kinds: list[tuple[str, list[int], Callable[[int], Labeled]]] = [("A", cycle_union_A_spec(r), label_cycle_union_A)]
    if r % 2:
        kinds.append(("B", cycle_union_B_spec(r), label_cycle_union_B))
    for kind, cycles, build in kinds:
        if sum(cycles) != sum(ls):
            continue
        for tried, pairs in enumerate(_pairings(ls, cycles)):
            if tried >= limit:
                break
            distances = [a for a, _ in pairs]
            yield f"merge-cycles-{kind}", lambda d=distances, b=build: merge_cycle_union(b(r), d)


def _try_spider(ls, budget):
    if len(ls) < 3 or any(a % 2 for a in ls) or sum(ls) > budget.max_edges:
        return
    if not spider_condition(ls):
        return

    def run():
        g = build_spider(SpiderSpec(ls))
        return merge_spider_pendants(g, find_spider_labeling(SpiderSpec(ls), budget))

    yield "spider-merge", run


RECOGNIZERS = (_try_theta_2s4, _try_paired, _try_4m3, _try_4m, _try_lift,
               _try_merged_cycles, _try_spider)


def find_construction(spec: ThetaSpec | Sequence[int],
                      budget: Optional[SearchBudget] = None) -> Optional[tuple[str, Labeled]]:
    """An explicit verified 3-coloring of ``spec`` from the constructions, if any applies."""
    ls = tuple(sorted(_lengths_of(spec)))
    budget = budget or SearchBudget()
    for recognize in RECOGNIZERS:
        for name, make in recognize(ls, budget):
            try:
                labeled = make()
            except (SpecError, NotFound, BudgetExceeded):
                continue
            report = labeled.verify()
            if (report.is_local_antimagic and report.color_count == 3
                    and tuple(sorted(labeled.graph.params)) == ls):
                return name, labeled
    return None


@dataclass
class ThetaResult:
    """Bounds on chi_la of one theta graph; ``upper`` is None when unknown."""

    spec: ThetaSpec
    lower: int
    upper: Optional[int]
    method: str
    certificate: BoundCertificate
    family: Optional[FamilyMatch] = None
    witness: Optional[Labeled] = None

    @property
    def exact(self) -> Optional[int]:
        return self.lower if self.upper == self.lower else None

    def describe(self) -> str:
        if self.family is not None:
            return f"chi_la = 2, family {self.family.item}"
        if self.exact is not None:
            return f"chi_la = {self.exact}, by {self.method}"
        return f"chi_la >= {self.lower} ({self.method}), upper bound unknown"


def chi_la_theta(spec: ThetaSpec | Sequence[int], budget: Optional[SearchBudget] = None,
                 use_solver: bool = True, jobs: int = 1) -> ThetaResult:
    """chi_la of a theta graph, exact where a certificate is available."""
    if not isinstance(spec, ThetaSpec):
        spec = ThetaSpec(tuple(spec))
    budget = budget or SearchBudget()
    g = build_theta(spec)
    cert = lower_bound(g)
    family = match_chi2_family(spec)
    if family is not None:
        witness = None
        if use_solver and g.q <= budget.max_edges:
            found = exact_chi_la(g, budget, jobs=jobs)
            witness = Labeled(g, found.witness, None)
        return ThetaResult(spec, 2, 2, "chi2-family", cert, family, witness)

    lower, why = cert.lower, cert.reason
    if spec.s >= 3 and lower < 3:
        lower, why = 3, "not-in-chi2-family"
    found = find_construction(spec, budget)
    if found is not None and lower >= 3:
        name, labeled = found
        return ThetaResult(spec, 3, 3, name, cert, None, labeled)
    if use_solver and g.q <= budget.max_edges:
        res = exact_chi_la(g, budget, jobs=jobs)
        if res.chi_la is not None:
            return ThetaResult(spec, res.chi_la, res.chi_la, "solver", cert, None,
                               Labeled(g, res.witness, None))
    return ThetaResult(spec, lower, None, why, cert)


def enumerate_theta_specs(max_q: int, min_s: int = 2) -> Iterator[ThetaSpec]:
    """Every theta graph with at most ``max_q`` edges, once up to path order."""

    def parts(remaining, smallest, out):
        if len(out) >= min_s:
            yield tuple(out)
        for a in range(smallest, remaining + 1):
            if a == 1 and out and out[-1] == 1:
                continue
            yield from parts(remaining - a, a, out + [a])

    specs = [p for p in parts(max_q, 1, []) if len(p) >= max(min_s, 2)]
    for lengths in sorted(specs, key=lambda p: (sum(p), len(p), p)):
        yield ThetaSpec(lengths)


@dataclass(frozen=True)
class SweepRow:
    spec: ThetaSpec
    parts: tuple[int, int]
    chi_la: Optional[int]


@dataclass
class SweepReport:
    max_q: int
    rows: list[SweepRow]

    @property
    def counterexamples(self) -> list[SweepRow]:
        return [row for row in self.rows if row.chi_la != 3]

    def render(self) -> str:
        lines = [f"{'spec':<24} {'parts':<8} chi_la"]
        for row in self.rows:
            parts = f"{row.parts[0]},{row.parts[1]}"
            mark = "" if row.chi_la == 3 else "  <- counterexample"
            lines.append(f"{str(row.spec):<24} {parts:<8} {row.chi_la}{mark}")
        bad = self.counterexamples
        if bad:
            lines.append(f"{len(bad)} counterexample(s) to chi_la = 3 with q <= {self.max_q}")
        else:
            lines.append(f"chi_la = 3 confirmed for all {len(self.rows)} graphs with q <= {self.max_q}")
        return "\n".join(lines)


def equal_parts_specs(max_q: int) -> list[tuple[ThetaSpec, tuple[int, int]]]:
    """Bipartite theta graphs with equal parts and at most ``max_q`` edges."""
    out = []
    for spec in enumerate_theta_specs(max_q):
        cert = lower_bound(build_theta(spec))
        if cert.reason == "equal-parts":
            out.append((spec, cert.details["parts"]))
    return out


def _solve_one(args) -> Optional[int]:
    spec, budget = args
    return exact_chi_la(build_theta(spec), budget).chi_la


def conjecture_sweep(max_q: int, budget: Optional[SearchBudget] = None, jobs: int = 1) -> SweepReport:
    """Exact chi_la of every equal-parts bipartite theta graph with q <= max_q."""
    budget = budget or SearchBudget()
    if max_q > budget.max_edges:
        raise BudgetExceeded(f"max_q = {max_q} exceeds the solver budget of {budget.max_edges} edges")
    cases = equal_parts_specs(max_q)
    tasks = [(spec, budget) for spec, _ in cases]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_solve_one, tasks))
    else:
        values = [_solve_one(t) for t in tasks]
    rows = [SweepRow(spec, parts, chi) for (spec, parts), chi in zip(cases, values)]
    return SweepReport(max_q, rows)
