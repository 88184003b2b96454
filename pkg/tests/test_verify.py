import json
import math
import random

import pytest

from eccspec import verify as V
from eccspec.cli import main
from eccspec.generators import (
    all_connected_graphs,
    complete,
    complete_bipartite,
    complete_multipartite,
    crown,
    cycle,
    path,
    star,
)
from eccspec.graph import Graph, parse_graph6, to_graph6


def test_star_invertibility_small_orders():
    r = V.check_star_invertibility(2, 8)
    assert r.passed, r.counterexamples
    assert r.details["per_n"]["4"] == {"trees": 2, "invertible": 2}
    assert r.details["per_n"]["6"] == {"trees": 6, "invertible": 1}


def test_star_determinant_formula():
    assert [V.star_determinant(n) for n in (2, 3, 4, 5)] == [-1, 4, -12, 32]


def test_star_invertibility_flags_a_bad_tree_universe():
    # P5 is not a star, det must be 0: the check must accept it
    r = V.check_star_invertibility(graphs=[path(5), star(5)])
    assert r.passed and r.graphs_tested == 2


def test_star_invertibility_range_guard():
    with pytest.raises(ValueError):
        V.check_star_invertibility(1, 5)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_diam2_max(n):
    r = V.check_diam2_max(n)
    assert r.passed, r.counterexamples
    assert r.details["max_rho"] == pytest.approx(V.star_radius(n), abs=1e-9)


def test_diam2_max_reports_missing_star():
    pool = [g for g in all_connected_graphs(5) if not (g.m == 4 and max(g.degrees()) == 4)]
    r = V.check_diam2_max(5, graphs=pool)
    assert not r.passed


def test_radius_lower_bound_examples():
    r = V.check_radius_lower_bound([cycle(6), crown(3), path(4), complete(4), star(5)])
    assert r.passed, r.counterexamples
    assert r.details["skipped_diam_below_2"] == 1
    assert r.details["diametrical"] == 2  # C6 and the crown on 6 vertices


def test_bipartite_min_order_6():
    r = V.check_bipartite_min(3)
    assert r.passed, r.counterexamples
    assert r.details["min_rho"] == pytest.approx(3.0)
    assert r.details["rho_complete_bipartite"] == pytest.approx(4.0)
    assert r.details["rho_star"] == pytest.approx(4 + math.sqrt(21))


def test_bipartite_min_guards():
    with pytest.raises(ValueError):
        V.check_bipartite_min(2)
    with pytest.raises(ValueError):
        V.check_bipartite_min(4)


def test_wiener_and_eq1_on_upto5(graphs_upto5):
    w = V.check_wiener_bound(graphs_upto5)
    e = V.check_eq1_bound(graphs_upto5)
    assert w.passed and e.passed
    assert w.graphs_tested == len(graphs_upto5)
    assert e.graphs_tested + e.details["skipped_diam_not_2"] == len(graphs_upto5)


def test_eq1_expression_star_and_complete_bipartite():
    # star K_{1,4}: m=4, k=1 ; W_eps = 16 -> 2W/n = 32/5
    assert V.eq1_expression(5, 4, 1) == pytest.approx(32 / 5)
    assert V.eq1_expression(6, 9, 0) == 4  # K_{3,3}: eps-regular with degree 4


def test_quotient_bound_tight_witnesses():
    r = V.check_quotient_bound([star(5), cycle(6), path(5)])
    assert r.passed
    codes = {w["graph6"] for w in r.witnesses}
    assert to_graph6(star(5)) in codes and to_graph6(cycle(6)) in codes


def test_domination_examples(graphs_upto5):
    assert V.check_domination(graphs_upto5).passed


def test_partite_energy_small():
    r = V.check_partite_energy(6, V.random_multipartite_specs(5, seed=1, max_n=20))
    assert r.passed, r.counterexamples
    assert r.graphs_tested == 15 + 5


def test_partite_energy_rejects_bad_parts():
    with pytest.raises(ValueError):
        V.check_partite_energy(3, [(1, 3)])


def test_random_multipartite_specs_respect_limits():
    for parts in V.random_multipartite_specs(200, seed=3, max_n=60):
        assert len(parts) >= 2 and min(parts) >= 2 and sum(parts) <= 60
    assert V.random_multipartite_specs(10, seed=9) == V.random_multipartite_specs(10, seed=9)


def test_spectrum_formulas():
    assert V.bipartite_spectrum(2, 3) == [4.0, 2.0, -2.0, -2.0, -2.0]
    assert V.multipartite_spectrum((2, 2, 2)) == [2.0, 2.0, 2.0, -2.0, -2.0, -2.0]


def test_multipartite_parts():
    assert V.multipartite_parts(complete_multipartite(2, 3, 2)) == (2, 2, 3)
    assert V.multipartite_parts(complete(4)) == (1, 1, 1, 1)
    assert V.multipartite_parts(path(4)) is None
    assert V.multipartite_parts(crown(3)) is None


@pytest.mark.parametrize("n", [3, 4])
def test_equienergetic_none_small(n):
    r = V.search_equienergetic(n)
    assert r.passed and r.details["pairs"] == []


def test_equienergetic_n5_and_n6():
    r5 = V.search_equienergetic(5)
    assert r5.passed and r5.details["displayed_pair_matches"] >= 1
    r6 = V.search_equienergetic(6)
    assert r6.passed
    fam = [p for p in r6.details["pairs"] if p["kind"] == "exact-family"]
    assert any(sorted(map(tuple, p["parts"])) == [(2, 4), (3, 3)] for p in fam)
    assert all(p["energy"] == pytest.approx(16.0) for p in fam)


def test_equienergetic_buckets_stable_under_relabeling():
    rng = random.Random(5)
    graphs = list(all_connected_graphs(5))
    shuffled = []
    for g in graphs:
        order = list(range(g.n))
        rng.shuffle(order)
        shuffled.append(g.relabel(order))
    rng.shuffle(shuffled)
    a = V.search_equienergetic(5, graphs=graphs)
    b = V.search_equienergetic(5, graphs=shuffled)
    assert a.details["buckets"] == b.details["buckets"]
    assert len(a.details["pairs"]) == len(b.details["pairs"])
    assert [p["energy"] for p in a.details["pairs"]] == [p["energy"] for p in b.details["pairs"]]


def test_report_json_deterministic(graphs_upto5):
    a = V.check_wiener_bound(graphs_upto5).to_json(scrub_time=True)
    b = V.check_wiener_bound(graphs_upto5).to_json(scrub_time=True)
    assert a == b
    assert json.loads(a)["wall_time"] is None


def test_report_summary_and_fail_records():
    r = V.CheckReport("demo", "nothing")
    assert r.passed and r.summary_line().startswith("PASS")
    r.fail(path(3), "x", "y")
    assert not r.passed and r.summary_line().startswith("FAIL")
    assert r.counterexamples[0]["graph6"] == to_graph6(path(3))


def test_counterexample_graph6_replays_through_cli(capsys):
    pool = [g for g in all_connected_graphs(5) if not (g.m == 4 and max(g.degrees()) == 4)]
    r = V.check_diam2_max(5, graphs=pool)
    cex = [c for c in r.counterexamples if c["expected"] == "maximiser is the star"]
    assert cex
    code = cex[0]["graph6"]
    assert main(["bounds", "--graph6", code, "--format", "json"]) == 0
    rec = json.loads(capsys.readouterr().out)[0]
    assert rec["graph6"] == code and rec["diameter"] == 2
    assert rec["rho_eps"] == pytest.approx(r.details["max_rho"], abs=1e-9)


def test_quotient_bound_tight_tolerance_knob():
    from eccspec.config import DEFAULTS

    saved = DEFAULTS.tight_tol
    try:
        DEFAULTS.tight_tol = 1e-12
        r = V.check_quotient_bound([star(5)])
        assert r.passed and r.details["tight"] == 1
    finally:
        DEFAULTS.tight_tol = saved


def test_graphdata_caches():
    d = V.GraphData(complete_bipartite(2, 3))
    assert d.spectrum is d.spectrum
    assert d.rho == pytest.approx(4.0)
    assert d.code == to_graph6(complete_bipartite(2, 3))
