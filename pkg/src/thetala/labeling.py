"""Edge labelings, induced vertex colors and the ground-truth verifier.

:func:`verify` is the single place where local antimagic validity is
decided. Everything else (constructions, solver witnesses, the CLI) routes
through it.

Text format, one graph per file::

    theta 2 2 2 2 4
    path 1: 1 12
    ...
    path 5: 5 8 7 6

Spiders use ``spider`` / ``leg i:`` and cycle unions ``cycles`` /
``cycle i:``. Any other graph is written as ``graph <n> <m>`` followed by
``m`` lines ``edge <x> <y>`` or ``edge <x> <y>: <label>``. Lines starting
with ``#`` are comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import MissingLabel, ParseError, SpecError
from .graphs import Graph, build_cycle_union, build_spider, build_theta

ROW_KEYWORD = {"theta": "path", "spider": "leg", "cycles": "cycle"}
HEADER = {"theta": "theta", "spider": "spider", "cycles": "cycles"}


@dataclass(frozen=True)
class EdgeLabeling:
    """``labels[e]`` is the label of edge id ``e``."""

    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))

    @classmethod
    def from_rows(cls, g: Graph, rows: Sequence[Sequence[int]]) -> EdgeLabeling:
        """Labeling given one row per structural group, in edge order."""
        groups = g.groups
        if len(rows) != len(groups):
            raise SpecError(f"expected {len(groups)} label rows, got {len(rows)}")
        labels = [0] * g.q
        for grp, row in zip(groups, rows):
            if len(grp) != len(row):
                raise SpecError(f"row {list(row)} does not fit a group of {len(grp)} edges")
            for e, x in zip(grp, row):
                labels[e] = x
        return cls(tuple(labels))

    def rows(self, g: Graph) -> list[list[int]]:
        return [[self.labels[e] for e in grp] for grp in g.groups]

    def complement(self) -> EdgeLabeling:
        q = len(self.labels)
        return EdgeLabeling(tuple(q + 1 - x for x in self.labels))

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class VerificationReport:
    is_bijection: bool
    violations: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]
    color_set: frozenset[int]
    color_count: int
    is_local_antimagic: bool
    problems: tuple[str, ...] = ()

    def sorted_colors(self) -> list[int]:
        return sorted(self.color_set)

    def summary(self) -> str:
        status = "valid" if self.is_local_antimagic else "INVALID"
        lines = [
            f"local antimagic: {status}",
            "colors: " + " ".join(map(str, self.sorted_colors())),
            f"c(f) = {self.color_count}",
        ]
        for x, y in self.violations:
            lines.append(f"violation: vertices {x} and {y} share color {self.colors[x]}")
        lines += [f"problem: {p}" for p in self.problems]
        return "\n".join(lines)


def induced_colors(g: Graph, f: EdgeLabeling) -> list[int]:
    """Sum of incident edge labels at every vertex."""
    if len(f.labels) != g.q:
        raise MissingLabel(f"graph has {g.q} edges but {len(f.labels)} labels were given")
    colors = [0] * g.n
    for (a, b), x in zip(g.edges, f.labels):
        colors[a] += x
        colors[b] += x
    return colors


def verify(g: Graph, f: EdgeLabeling) -> VerificationReport:
    """Full local antimagic check; problems are reported, never raised."""
    problems: list[str] = []
    try:
        colors = induced_colors(g, f)
    except MissingLabel as exc:
        return VerificationReport(False, (), (), frozenset(), 0, False, (str(exc),))

    q = g.q
    is_bijection = sorted(f.labels) == list(range(1, q + 1))
    if not is_bijection:
        bad = sorted(set(x for x in f.labels if not 1 <= x <= q))
        dup = sorted(x for x in set(f.labels) if f.labels.count(x) > 1)
        if bad:
            problems.append(f"labels outside [1, {q}]: {bad}")
        if dup:
            problems.append(f"repeated labels: {dup}")
    if not g.is_simple:
        problems.append("graph is not simple")

    violations = []
    seen = set()
    for a, b in g.edges:
        key = (min(a, b), max(a, b))
        if key in seen:
            continue
        seen.add(key)
        if colors[a] == colors[b]:
            violations.append(key)
    color_set = frozenset(colors)
    return VerificationReport(
        is_bijection=is_bijection,
        violations=tuple(violations),
        colors=tuple(colors),
        color_set=color_set,
        color_count=len(color_set),
        is_local_antimagic=is_bijection and not violations,
        problems=tuple(problems),
    )


def serialize_labeling(g: Graph, f: EdgeLabeling | None = None) -> str:
    lines = []
    if g.family in HEADER:
        lines.append(HEADER[g.family] + " " + " ".join(map(str, g.params)))
        if f is not None:
            kw = ROW_KEYWORD[g.family]
            for i, row in enumerate(f.rows(g), 1):
                lines.append(f"{kw} {i}: " + " ".join(map(str, row)))
    else:
        lines.append(f"graph {g.n} {g.q}")
        for e, (a, b) in enumerate(g.edges):
            lines.append(f"edge {a} {b}" + (f": {f.labels[e]}" if f is not None else ""))
    return "\n".join(lines) + "\n"


def _ints(tokens: list[tuple[str, int]], lineno: int) -> list[int]:
    out = []
    for tok, col in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", lineno, col) from None
    return out


def _tokenize(line: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with 1-based columns; ':' is its own token."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r":|[^\s:]+", line)]


def parse(text: str) -> tuple[Graph, EdgeLabeling | None]:
    """Parse a graph file; the labeling is ``None`` when no label lines exist."""
    lines = [
        (n, raw) for n, raw in enumerate(text.splitlines(), 1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty input", 1)
    lineno, raw = lines[0]
    head = _tokenize(raw)
    kind = head[0][0]
    if kind == "graph":
        return _parse_generic(head, lineno, lines[1:])
    builders = {"theta": build_theta, "spider": build_spider, "cycles": build_cycle_union}
    if kind not in builders:
        raise ParseError(f"unknown graph kind {kind!r}", lineno, head[0][1])
    params = _ints(head[1:], lineno)
    try:
        g = builders[kind](params)
    except SpecError as exc:
        raise ParseError(str(exc), lineno, head[0][1]) from None

    kw = ROW_KEYWORD[g.family]
    rows: dict[int, list[int]] = {}
    where: dict[int, list[tuple[int, int]]] = {}
    for lineno, raw in lines[1:]:
        tokens = _tokenize(raw)
        if len(tokens) < 3 or tokens[0][0] != kw or tokens[2][0] != ":":
            raise ParseError(f"expected '{kw} <i>: labels...'", lineno, tokens[0][1])
        idx = _ints([tokens[1]], lineno)[0]
        if not 1 <= idx <= len(g.groups):
            raise ParseError(f"{kw} index {idx} out of range", lineno, tokens[1][1])
        if idx in rows:
            raise ParseError(f"{kw} {idx} given twice", lineno, tokens[1][1])
        values = _ints(tokens[3:], lineno)
        if len(values) != len(g.groups[idx - 1]):
            raise ParseError(
                f"{kw} {idx} needs {len(g.groups[idx - 1])} labels, got {len(values)}",
                lineno, tokens[0][1])
        rows[idx] = values
        where[idx] = [(lineno, col) for _, col in tokens[3:]]
    if not rows:
        return g, None
    missing = [i for i in range(1, len(g.groups) + 1) if i not in rows]
    if missing:
        raise ParseError(f"missing label line for {kw} {missing[0]}", lines[-1][0])
    ordered = [rows[i] for i in range(1, len(g.groups) + 1)]
    positions = [p for i in range(1, len(g.groups) + 1) for p in where[i]]
    _check_bijection([x for row in ordered for x in row], positions, g.q)
    return g, EdgeLabeling.from_rows(g, ordered)


def _parse_generic(head, lineno, rest) -> tuple[Graph, EdgeLabeling | None]:
    if len(head) != 3:
        raise ParseError("expected 'graph <n> <m>'", lineno, head[0][1])
    n, m = _ints(head[1:], lineno)
    if len(rest) != m:
        raise ParseError(f"expected {m} edge lines, got {len(rest)}", lineno)
    edges = []
    labels = []
    positions = []
    for ln, raw in rest:
        tokens = _tokenize(raw)
        if tokens[0][0] != "edge" or len(tokens) not in (3, 5):
            raise ParseError("expected 'edge <x> <y>' or 'edge <x> <y>: <label>'", ln, tokens[0][1])
        a, b = _ints(tokens[1:3], ln)
        edges.append((a, b))
        if len(tokens) == 5:
            if tokens[3][0] != ":":
                raise ParseError("expected ':' before the label", ln, tokens[3][1])
            labels.append(_ints([tokens[4]], ln)[0])
            positions.append((ln, tokens[4][1]))
    try:
        g = Graph(n, tuple(edges), ("vertex",) * n)
    except SpecError as exc:
        raise ParseError(str(exc), lineno) from None
    if not labels:
        return g, None
    if len(labels) != m:
        raise ParseError("either every edge or no edge carries a label", rest[-1][0])
    _check_bijection(labels, positions, m)
    return g, EdgeLabeling(tuple(labels))


def _check_bijection(values, positions, q) -> None:
    seen: set[int] = set()
    for x, (ln, col) in zip(values, positions):
        if not 1 <= x <= q:
            raise ParseError(f"label {x} outside [1, {q}]", ln, col)
        if x in seen:
            raise ParseError(f"label {x} used twice", ln, col)
        seen.add(x)


def parse_labeling(text: str) -> tuple[Graph, EdgeLabeling]:
    g, f = parse(text)
    if f is None:
        raise ParseError("no label lines found", 1)
    return g, f


def parse_graph(text: str) -> Graph:
    return parse(text)[0]


# fill colors for the DOT export, cycled when there are more color classes
PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
)


def to_dot(g: Graph, f: EdgeLabeling, name: str = "G") -> str:
    """DOT text; vertices show induced colors, same color gives same fill."""
    report = verify(g, f)
    fill = {c: PALETTE[i % len(PALETTE)] for i, c in enumerate(report.sorted_colors())}
    bad = {x for pair in report.violations for x in pair}
    out = [f"graph {name} {{", "  node [style=filled, shape=circle];"]
    for x in range(g.n):
        extra = ", penwidth=3, color=red" if x in bad else ""
        c = report.colors[x] if report.colors else "?"
        out.append(f'  {x} [label="{c}", fillcolor="{fill.get(c, "white")}", '
                   f'tooltip="{g.roles[x]}"{extra}];')
    for (a, b), x in zip(g.edges, f.labels):
        out.append(f'  {a} -- {b} [label="{x}"];')
    out.append("}")
    return "\n".join(out) + "\n"
