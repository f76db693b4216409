"""Published fixtures re-derived from scratch, as a pass/fail table.

Used by ``thetala selftest``. Each check is a zero-argument function that
returns ``True`` on success; an exception counts as a failure and its
message is shown in the table.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import data
from .analysis import chi_la_theta, lower_bound, match_chi2_family
from .constructions import (
    build_lambda, build_psi, label_cycle_union_A, label_cycle_union_B, label_paired_paths,
    label_theta_2s4, label_theta_4m, label_theta_4m3, label_theta_4m3_five, lift_two_coloring,
    merge_cycle_union, theta_2s4_colors,
)
from .graphs import SpiderSpec, build_spider, build_theta
from .labeling import EdgeLabeling, verify
from .solver import exact_chi_la, find_spider_labeling


def _exact(labeled, colors, rows=None) -> bool:
    report = labeled.verify()
    ok = report.is_local_antimagic and report.color_set == frozenset(colors)
    if rows is not None:
        ok = ok and [tuple(r) for r in labeled.rows()] == [tuple(r) for r in rows]
    return ok


def check_theta_2s4() -> bool:
    for s in range(3, 52):
        lab = label_theta_2s4(s)
        report = lab.verify()
        if not report.is_local_antimagic or report.color_set != theta_2s4_colors(s):
            return False
    return _exact(label_theta_2s4(4), {11, 18, 19})


def check_matrices() -> bool:
    psi = build_psi(7)
    lam = build_lambda(8)
    return (psi.rows == ((1, 15, 14, 4, 5, 11, 10, 7), (16, 2, 3, 13, 12, 6, 8, 9))
            and lam.row_sums() == (68, 68))


def check_paired_even() -> bool:
    return _exact(label_paired_paths(data.PAIRED_ALL_EVEN), {56, 58, 285}, data.PAIRED_ALL_EVEN_ROWS)


def check_paired_mixed() -> bool:
    return _exact(label_paired_paths(data.PAIRED_MIXED), {50, 52, 255}, data.PAIRED_MIXED_ROWS)


def check_lift() -> bool:
    base = build_theta(data.LIFT_BASE_L2_LENGTHS)
    f = EdgeLabeling.from_rows(base, data.LIFT_BASE_L2_ROWS)
    if sorted(verify(base, f).color_set) != [85, 105]:
        return False
    lifted = lift_two_coloring(2, base, f)
    long_rows = [tuple(r) for r in lifted.rows() if len(r) == 9]
    return _exact(lifted, {23, 85, 105}) and long_rows == list(data.LIFTED_L2_LONG_ROWS)


def check_4m3() -> bool:
    return _exact(label_theta_4m3(3, 2), {15, 16, 27}, data.SIZE_4M3_ROWS)


def check_4m3_five() -> bool:
    return _exact(label_theta_4m3_five(3, 2, 1), {15, 16, 42}, data.SIZE_4M3_FIVE_ROWS)


def check_4m_first() -> bool:
    return _exact(label_theta_4m(**data.SIZE_4M_FIRST), {24, 25, 66}, data.SIZE_4M_FIRST_ROWS)


def check_4m_second() -> bool:
    return _exact(label_theta_4m(**data.SIZE_4M_SECOND), {24, 25, 90}, data.SIZE_4M_SECOND_ROWS)


def check_cycle_A() -> bool:
    return _exact(label_cycle_union_A(3), {25, 30}, data.CYCLE_A_R3_ROWS)


def check_cycle_B() -> bool:
    return _exact(label_cycle_union_B(5), {45, 55}, data.CYCLE_B_R5_ROWS)


def check_merge_white() -> bool:
    lab = merge_cycle_union(label_cycle_union_A(3), (3, 5, 1))
    return sorted(lab.graph.params) == [1, 3, 3, 5, 5, 7] and _exact(lab, {25, 30, 75})


def check_merge_mixed() -> bool:
    lab = merge_cycle_union(label_cycle_union_A(3), (5, 5, 2))
    return sorted(lab.graph.params) == [2, 2, 5, 5, 5, 5] and _exact(lab, {25, 30, 80})


def check_classifier() -> bool:
    one = match_chi2_family((4, 4, 4, 4, 4, 6))
    two_b = match_chi2_family((2, 4, 4, 4, 6))
    return (one is not None and one.item == "1" and one.params() == {"l": 1}
            and two_b is not None and two_b.item == "2b"
            and match_chi2_family((2, 2, 2)) is None)


def check_lower_bound() -> bool:
    a = lower_bound(build_theta((1, 2, 2)))
    b = lower_bound(build_theta((2, 2, 2)))
    c = lower_bound(build_theta((2, 2, 2, 2)))
    return ((a.lower, a.reason) == (3, "non-bipartite")
            and (b.lower, b.reason) == (3, "no-divisor-pair")
            and c.lower == 2 and (c.details["x"], c.details["y"]) == (9, 18))


def check_solver() -> bool:
    return (exact_chi_la(build_theta((2, 2, 2, 2))).chi_la == 2
            and exact_chi_la(build_theta((2, 2, 2))).chi_la == 3
            and exact_chi_la(build_theta((1, 2))).chi_la == 3)


def check_spider() -> bool:
    g = build_spider((2, 2, 2))
    f = find_spider_labeling(SpiderSpec((2, 2, 2)))
    report = verify(g, f)
    return report.colors[0] == 6 and report.is_local_antimagic


def check_chi_la_theta() -> bool:
    return (chi_la_theta((2, 2, 2, 2, 4)).exact == 3
            and chi_la_theta((2, 2, 4, 4)).exact == 3
            and chi_la_theta((4, 4, 4, 4, 4, 6)).exact == 2)


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("theta(2^[s-1],4) color sets, s = 3..51", check_theta_2s4),
    ("Psi_16 / Lambda_8 matrices", check_matrices),
    ("paired paths, all even lengths", check_paired_even),
    ("paired paths, one odd length", check_paired_mixed),
    ("lift of theta(10^[2],8^[8]) to theta(9^[2],8^[8])", check_lift),
    ("size 4m+3, m=3 k=2", check_4m3),
    ("size 4m+3 five paths, m=3 k=2 l=1", check_4m3_five),
    ("size 4m, m=6 first split", check_4m_first),
    ("size 4m, m=6 second split", check_4m_second),
    ("cycle union A, r=3", check_cycle_A),
    ("cycle union B, r=5", check_cycle_B),
    ("merge C(10,10,4) at distances 3,5,1", check_merge_white),
    ("merge C(10,10,4) at distances 5,5,2", check_merge_mixed),
    ("chi_la = 2 classifier examples", check_classifier),
    ("lower bound examples", check_lower_bound),
    ("solver on K_{2,4}, theta(2,2,2), C_3", check_solver),
    ("spider Sp(2,2,2) merge-ready labeling", check_spider),
    ("chi_la_theta examples", check_chi_la_theta),
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    error: str = ""


def run_all() -> list[CheckResult]:
    out = []
    for name, check in CHECKS:
        start = time.perf_counter()
        try:
            passed, error = bool(check()), ""
        except Exception as exc:  # a crash is a failed fixture, not a crashed table
            passed, error = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, passed, time.perf_counter() - start, error))
    return out


def render(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        extra = f"  {r.error}" if r.error else ""
        lines.append(f"{status}  {r.name:<{width}}{extra}".rstrip())
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} fixtures passed")
    return "\n".join(lines)
