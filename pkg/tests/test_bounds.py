from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from necgraph.bounds import (
    BoundEntry,
    admissible_params,
    basic_nec_cap,
    dual_design_3ec_polynomial,
    dual_design_polynomial,
    geometric_3ec_test,
    net_3ec_polynomial,
    net_polynomial,
    screen,
    srg_3ec_test,
    sts_admissible,
    sweep,
    two_ec_condition,
)
from necgraph.constructions import FieldSpec, GroupSpec, bose_sts, cayley_table, paley_graph
from necgraph.ec import is_n_ec
from necgraph.geometry import (
    IncidenceStructure,
    PgParams,
    latin_square_to_net,
    point_graph,
    star_geometry,
    sts_to_dual_geometry,
    verify_partial_geometry,
)
from necgraph.srg import SrgParams, srg_params


def scaled_geometric_slack(s, t, a):
    """``alpha * (LHS - RHS)`` of the counting condition, with no division."""
    width = s - 2 * a + 2 if s >= 2 * a - 1 else s - a + 1
    lhs = a * a * (t * t - 1) * width
    rhs = (s + 1) * (s * t + a) + a * ((a - 2 * s) * (t + 1) - 2)
    return lhs - rhs


def test_basic_cap_examples():
    assert basic_nec_cap(PgParams(7, 2, 2)) == 3
    assert basic_nec_cap(PgParams(8, 2, 2)) == 3
    for s in range(2, 10):
        for t in range(1, 10):
            assert basic_nec_cap(PgParams(s, t, 1)) == 2


def test_srg_3ec_examples():
    shrikhande = srg_3ec_test(SrgParams(16, 6, 2, 2))
    assert not shrikhande.satisfied and shrikhande.slack == 2 - 4
    net = srg_3ec_test(SrgParams(64, 21, 8, 6))
    assert net.satisfied and net.slack == 60 - 26
    pet = srg_3ec_test(SrgParams(10, 3, 0, 1))
    assert not pet.satisfied and pet.slack == -3


def test_geometric_examples():
    e = geometric_3ec_test(PgParams(7, 2, 2))
    assert e.name == "geometric-3ec" and e.satisfied and e.slack == 30 - 26
    e = geometric_3ec_test(PgParams(8, 2, 2))
    assert not e.satisfied and e.slack == -1
    # (16,2,3) has a non-integral vertex count; the polynomial rules it out.
    with pytest.raises(ValueError):
        geometric_3ec_test(PgParams(16, 2, 3))
    assert dual_design_polynomial(16, 2) == 2
    assert 16 not in dual_design_3ec_polynomial(2)


def test_geometric_weak_form_and_t1():
    e = geometric_3ec_test(PgParams(4, 3, 3))
    assert e.name == "geometric-3ec-weak"
    assert not geometric_3ec_test(PgParams(3, 1, 2)).applicable


def test_geometric_matches_scaled_oracle():
    for s in range(2, 40):
        for t in range(2, 12):
            for a in range(1, min(s, t) + 2):
                p = admissible_params(s, t, a)
                if p is None:
                    continue
                e = geometric_3ec_test(p)
                assert a * e.slack == scaled_geometric_slack(s, t, a)


def test_net_polynomial_intervals():
    assert net_3ec_polynomial(2) == range(3, 8)
    assert net_polynomial(8, 2) == 1
    with pytest.raises(ValueError):
        net_3ec_polynomial(1)


def test_dual_design_intervals():
    assert max(dual_design_3ec_polynomial(2)) == 15
    assert max(dual_design_3ec_polynomial(3)) == 44
    with pytest.raises(ValueError):
        dual_design_3ec_polynomial(1)


@pytest.mark.parametrize("t", range(2, 9))
def test_intervals_match_polynomial_scan(t):
    for s in range(0, 2 * t**3 + 20):
        assert (s in net_3ec_polynomial(t)) == (net_polynomial(s, t) <= 0)
        assert (s in dual_design_3ec_polynomial(t)) == (dual_design_polynomial(s, t) <= 0)


def test_net_polynomial_is_geometric_specialization():
    for t in range(2, 8):
        for s in range(max(4, 2 * t - 1), 60):
            assert (net_polynomial(s, t) <= 0) == (scaled_geometric_slack(s, t, t) >= 0)
    for s in range(4, 21):
        assert (s in net_3ec_polynomial(2)) == geometric_3ec_test(PgParams(s, 2, 2)).satisfied


def test_dual_design_polynomial_is_geometric_specialization():
    for t in range(2, 8):
        for s in range(2 * t + 1, 80):
            assert (dual_design_polynomial(s, t) <= 0) == (scaled_geometric_slack(s, t, t + 1) >= 0)


@given(st.integers(2, 200), st.integers(2, 30))
def test_polynomials_are_scaled_slack(s, t):
    # alpha * (LHS - RHS) = -t * P(s, t) at alpha = t and at alpha = t + 1.
    assert scaled_geometric_slack(s, t, t) == -t * net_polynomial(s, t) or s < 2 * t - 1
    assert scaled_geometric_slack(s, t, t + 1) == -t * dual_design_polynomial(s, t) or s < 2 * t + 1


def test_sts_admissible():
    assert sts_admissible(33) and not sts_admissible(35)
    assert sts_admissible(13) and not sts_admissible(11)
    with pytest.raises(ValueError):
        sts_admissible(5)


def test_two_ec_condition():
    assert two_ec_condition(PgParams(7, 2, 2))
    assert not two_ec_condition(PgParams(3, 1, 2))
    assert not two_ec_condition(PgParams(2, 2, 2))


def test_screen_examples():
    r = screen(PgParams(7, 2, 2))
    assert r.n_max_possible == 3 and r.feasible_3ec
    assert all(e.satisfied for e in r.entries if e.applicable)
    assert screen(PgParams(3, 1, 2)).n_max_possible == 1
    assert screen(PgParams(5, 1, 1)).n_max_possible == 2
    r = screen(PgParams(8, 2, 2))
    assert r.n_max_possible == 2
    assert r.entry("net-polynomial").slack == -1


def test_screen_verdict_is_min_cap():
    for r in sweep(range(2, 20), range(1, 6), range(1, 7)):
        caps = [e.cap for e in r.entries if e.applicable and e.cap is not None]
        assert r.n_max_possible == min(caps) <= basic_nec_cap(r.params)
        if any(e.applicable and not e.satisfied and e.name != "sts-admissible" for e in r.entries):
            assert r.n_max_possible <= 2


def test_sweep_feasible_sets():
    nets = [r.params.s for r in sweep(range(2, 30), [2], [2]) if r.feasible_3ec]
    assert max(nets) == 7
    dual2 = [r.params.s for r in sweep(range(2, 40), [2], [3]) if r.feasible_3ec]
    assert max(dual2) == 15
    dual3 = [r.params.s for r in sweep(range(2, 60), [3], [4]) if r.feasible_3ec]
    assert max(dual3) == 44


def test_sts_entry_in_screen():
    r = screen(PgParams(15, 2, 3))
    assert r.entry("sts-admissible").satisfied
    # v = 2s + 3 = 5 mod 6 forces a non-integral vertex count, so every
    # screened dual design with t = 2 has an admissible STS order.
    reports = sweep(range(5, 60), [2], [3])
    assert len(reports) > 30
    assert all(r.entry("sts-admissible").satisfied for r in reports)
    assert admissible_params(16, 2, 3) is None and not sts_admissible(35)


def test_entry_consistency_check():
    with pytest.raises(ValueError):
        BoundEntry("x", True, True, -1)
    with pytest.raises(KeyError):
        screen(PgParams(3, 1, 2)).entry("net-polynomial")


def test_report_formats():
    r = screen(PgParams(7, 2, 2))
    kv = r.to_kv()
    assert kv.startswith("params=7,2,2\n")
    assert "bound=geometric-3ec applicable=true satisfied=true slack=4" in kv
    assert kv.endswith("n_max_possible=3\n")
    assert "n_max_possible=3" in r.to_text()


def constructed_geometries():
    edges = list(combinations(range(4), 2))
    yield IncidenceStructure(6, [[i for i, e in enumerate(edges) if v in e] for v in range(4)])
    yield star_geometry()
    for name in ("z3", "z4", "z5", "z2^2", "z8", "z2^3", "z4xz2", "d4", "q8"):
        yield latin_square_to_net(cayley_table(GroupSpec.parse(name)))
    for v in (9, 15):
        yield sts_to_dual_geometry(bose_sts(v))


def test_soundness_on_constructed_graphs():
    for geo in constructed_geometries():
        p = verify_partial_geometry(geo)
        g = point_graph(geo)
        report = screen(p)
        if not report.feasible_3ec:
            assert not is_n_ec(g, 3).holds
        for n in range(report.n_max_possible + 1, 4):
            if n < g.order:
                assert not is_n_ec(g, n).holds


def test_srg_bound_soundness_on_paley():
    for p, k in ((5, 1), (13, 1), (3, 2), (17, 1), (5, 2)):
        g = paley_graph(FieldSpec(p, k))
        if not srg_3ec_test(srg_params(g)).satisfied:
            assert not is_n_ec(g, 3).holds
