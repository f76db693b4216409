from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from thetala.analysis import (
    ITEMS, chi_la_theta, conjecture_sweep, enumerate_theta_specs, equal_parts_specs, expand_family,
    family_parameters, find_construction, lower_bound, match_chi2_family,
)
from thetala.errors import BudgetExceeded, SpecError
from thetala.graphs import Graph, build_cycle_union, build_theta
from thetala.solver import SearchBudget


def test_classifier_examples():
    m = match_chi2_family((4, 4, 4, 4, 4, 6))
    assert m.item == "1" and m.params() == {"l": 1}
    assert match_chi2_family((2, 4, 4, 4, 6)).item == "2b"
    assert match_chi2_family((2, 2, 2)) is None
    assert match_chi2_family((2, 2, 2, 2)).item == "K2s"
    assert match_chi2_family((3, 5)) is None


def test_item_instances():
    assert match_chi2_family((2,) + (6,) * 5).item == "2a"
    assert match_chi2_family((2, 4, 4, 4)).params() == {"l": 2, "t": 2}
    assert match_chi2_family((2, 2, 4, 6)).item == "3b"
    assert match_chi2_family((2, 4, 8, 10)).item == "4"
    assert match_chi2_family((4, 4, 6, 10)).item == "4"
    assert match_chi2_family((6,) + (12,) * 7 + (14,) * 3).params() == {"j": 3}


def test_fraction_bounds_are_exact():
    # t <= (5l - 2) / 4 at l = 6 is t <= 7; t = 8 would need the rounded-up bound
    ts = [p["t"] for p in family_parameters("3a", 12)]
    assert ts == [6, 7]
    ts = [p["t"] for p in family_parameters("4", 4)]
    assert ts == [1, 2]


def every_member(max_s=40):
    for item in ITEMS:
        for s in range(3, max_s + 1):
            for params in family_parameters(item, s):
                yield item, params


def test_round_trip_and_first_match():
    for item, params in every_member():
        lengths = expand_family(item, **params)
        assert len(lengths) == (params.get("s") or len(lengths))
        m = match_chi2_family(lengths)
        assert m is not None and m.expand() == lengths
        assert ITEMS.index(m.item) <= ITEMS.index(item)


def test_members_are_large():
    # every listed graph other than K_{2,s} has size greater than 2s + 2
    for item, params in every_member():
        lengths = expand_family(item, **params)
        if item != "K2s":
            assert sum(lengths) > 2 * len(lengths) + 2, (item, params)


@given(st.sampled_from(list(every_member(20))), st.randoms())
def test_multiset_invariance(member, rnd):
    lengths = list(expand_family(member[0], **member[1]))
    rnd.shuffle(lengths)
    assert match_chi2_family(lengths) == match_chi2_family(sorted(lengths))


def test_unknown_item():
    with pytest.raises(SpecError):
        expand_family("9", l=1)


def test_lower_bound_examples():
    a = lower_bound(build_theta((1, 2, 2)))
    assert (a.lower, a.reason, a.details["odd_cycle"]) == (3, "non-bipartite", 3)
    b = lower_bound(build_theta((2, 2, 2)))
    assert (b.lower, b.reason, b.details["parts"], b.details["half_sum"]) == (3, "no-divisor-pair", (3, 2), 21)
    c = lower_bound(build_theta((2, 2, 2, 2)))
    assert (c.lower, c.reason) == (2, "in-chi2-family")
    assert (c.details["x"], c.details["y"], c.details["parts"]) == (9, 18, (4, 2))
    d = lower_bound(build_theta((1, 3)))
    assert (d.lower, d.reason) == (3, "equal-parts")
    assert "equal size 2" in str(d)


def test_lower_bound_inconclusive_outside_family():
    # theta(2,2,2,2,2,2): q = 12, parts 6 and 2, 78 = 13 * 6 = 39 * 2 but s = 6 is K_{2,6}
    c = lower_bound(build_theta((2,) * 6))
    assert c.lower == 2 and c.reason == "in-chi2-family"
    g = Graph(4, ((0, 1), (1, 2), (2, 3)), ("vertex",) * 4)
    assert lower_bound(g).reason == "equal-parts"
    star = Graph(4, ((0, 1), (0, 2), (0, 3)), ("vertex",) * 4)
    cert = lower_bound(star)
    assert (cert.lower, cert.reason) == (2, "divisor-pair")


def test_lower_bound_precondition():
    with pytest.raises(SpecError):
        lower_bound(Graph(2, ((0, 1),), ("vertex",) * 2))
    with pytest.raises(SpecError):
        lower_bound(Graph(4, ((0, 1), (2, 3)), ("vertex",) * 4))


def test_odd_cycle_length():
    assert lower_bound(build_cycle_union((3, 4))).details["odd_cycle"] == 3
    assert lower_bound(build_theta((2, 3))).details["odd_cycle"] == 5


def test_chi_la_theta_examples():
    r = chi_la_theta((2, 2, 2, 2, 4))
    assert r.exact == 3 and r.method == "theta-2s4" and r.witness.verify().is_local_antimagic
    r = chi_la_theta((2, 2, 4, 4))
    assert r.exact == 3 and r.method == "paired"
    r = chi_la_theta((4, 4, 4, 4, 4, 6))
    assert r.exact == 2 and r.family.item == "1" and r.describe() == "chi_la = 2, family 1"


@pytest.mark.parametrize("lengths, method", [
    ((3, 3, 5), "size-4m3"),
    ((2, 2, 3, 3, 5), "size-4m3"),
    ((2, 10, 2, 2, 8), "size-4m"),
    ((8,) * 8 + (9, 9), "paired"),
    ((1, 3, 3, 5, 5, 7), "merge-cycles-A"),
    ((2, 2, 2), "spider-merge"),
])
def test_find_construction(lengths, method):
    name, lab = find_construction(lengths)
    assert name == method
    assert sorted(lab.graph.params) == sorted(lengths)
    assert lab.verify().color_count == 3


def test_find_construction_4m_partition():
    # all lengths even, q = 4m, s odd: split 2+4 | 4+2+4
    name, lab = find_construction((2, 2, 4, 4, 4))
    assert name == "size-4m"


def test_chi_la_theta_bounds_only():
    r = chi_la_theta((2, 2, 4, 6, 8), use_solver=False)
    assert r.exact is None and r.lower == 3 and r.upper is None
    assert "upper bound unknown" in r.describe()


def test_chi_la_theta_solver_refines():
    r = chi_la_theta((3, 3, 3))
    assert r.exact == 4 and r.method == "solver"
    r = chi_la_theta((1, 3))
    assert r.exact == 3


def test_enumeration():
    specs = list(enumerate_theta_specs(6))
    assert all(spec.q <= 6 and spec.s >= 2 for spec in specs)
    assert len({spec.lengths for spec in specs}) == len(specs)
    assert (1, 1, 2) not in [s.lengths for s in specs]
    brute = set()
    for q in range(2, 7):
        for s in range(2, q + 1):
            for combo in itertools.combinations_with_replacement(range(1, q + 1), s):
                if sum(combo) == q and combo.count(1) <= 1:
                    brute.add(combo)
    assert brute == {s.lengths for s in specs}


def test_equal_parts_specs():
    specs = dict((s.lengths, parts) for s, parts in equal_parts_specs(8))
    assert specs[(1, 3)] == (2, 2)
    assert (1, 2, 3) not in specs


def test_conjecture_sweep_small():
    report = conjecture_sweep(6)
    rows = {row.spec.lengths: row for row in report.rows}
    assert rows[(1, 3)].chi_la == 3 and rows[(1, 3)].parts == (2, 2)
    assert report.counterexamples == [] or all(r.chi_la != 3 for r in report.counterexamples)
    assert "spec" in report.render().splitlines()[0]


def test_conjecture_counterexamples_at_q7():
    report = conjecture_sweep(7)
    bad = [row.spec.lengths for row in report.counterexamples]
    assert bad == [(1, 3, 3)]
    assert report.rows[[r.spec.lengths for r in report.rows].index((1, 3, 3))].chi_la == 4


def test_conjecture_sweep_budget():
    with pytest.raises(BudgetExceeded):
        conjecture_sweep(13)
    with pytest.raises(BudgetExceeded):
        conjecture_sweep(8, SearchBudget(max_edges=6))


def test_conjecture_sweep_parallel_matches():
    assert conjecture_sweep(8, jobs=2).rows == conjecture_sweep(8).rows
