import math
from fractions import Fraction

import numpy as np
import pytest

from girth.approx import (
    TheoremOneParams,
    TheoremTwoParams,
    algorithm_a,
    algorithm_a_det,
    corollary_counterexample,
    corollary_params,
    default_phase2_cap,
    default_x,
    det_set_size,
    hitting_roots,
    theorem_one,
    theorem_one_bound,
    theorem_one_phases,
    theorem_two,
    theorem_two_bound,
    theorem_two_schedule,
    verify_corollary_arithmetic,
)
from girth.cycles import exact_girth, itai_rodeh_additive, radius_table
from girth.generators import complete_graph, cycle_graph, gnp, named, path_graph, random_regular
from girth.graph import connected_and_cyclic, from_edges

from oracles import mixed_corpus, reference_phase_two, subdivide

CORPUS = mixed_corpus(80, 600, seed=11)
CONNECTED = [(lbl, g) for lbl, g in CORPUS if connected_and_cyclic(g)[0]]


class TestBounds:
    @pytest.mark.parametrize("g, k, expected", [
        (4, 2, 8), (5, 2, 12), (7, 3, 12), (5, 3, 10), (9, 4, 14),
    ])
    def test_theorem_one_bound(self, g, k, expected):
        assert theorem_one_bound(g, k) == expected

    @pytest.mark.parametrize("k", range(2, 12))
    def test_additive_two_regime(self, k):
        g = 2 * (k - 1)
        assert theorem_one_bound(g, k) == g + 2

    def test_k3_closed_form(self):
        # g = 4c - z returns 6c - z (even g) or 6c - z + 1 (odd g)
        for c in range(1, 30):
            for z in range(4):
                g = 4 * c - z
                if g < 3:
                    continue
                expected = 6 * c - z + (g % 2)
                assert theorem_one_bound(g, 3) == expected

    def test_theorem_two_bound(self):
        assert theorem_two_bound(3, 2) == 8
        assert theorem_two_bound(5, 2) == 12

    @pytest.mark.parametrize("l, k, ratio", [
        (1, 3, Fraction(2)), (2, 5, Fraction(8, 5)), (3, 7, Fraction(10, 7)),
    ])
    def test_corollary_params(self, l, k, ratio):
        assert corollary_params(l) == (k, ratio)

    def test_corollary_exponent(self):
        k, _ = corollary_params(2)
        assert 2 - Fraction(1, k) == Fraction(9, 5)

    def test_single_points(self):
        # l = 2, g = 4: bound 2*2 + 2*ceil(4/8) = 6 <= 32/5
        assert theorem_one_bound(4, 5) == 6 and 6 <= Fraction(8, 5) * 4
        # l = 1, g = 3, k = 3: 2*2 + 2*1 = 6 = 2*3
        assert theorem_one_bound(3, 3) == 6 == 2 * 3

    def test_arithmetic_exhaustive(self):
        assert verify_corollary_arithmetic(20, 2000)

    def test_arithmetic_detects_tight_ratio(self, monkeypatch):
        import girth.approx as ap
        real = ap.corollary_params
        monkeypatch.setattr(ap, "corollary_params",
                            lambda l: (real(l)[0], 1 + Fraction(2, 2 * l + 1)))
        assert corollary_counterexample(20, 500) == (1, 2)


class TestAlgorithmA:
    @pytest.mark.parametrize("label, g", CORPUS[:30], ids=[c[0] for c in CORPUS[:30]])
    def test_full_sample_is_every_root(self, label, g):
        r = algorithm_a(g, g.n, g.n, seed=5)
        ir = itai_rodeh_additive(g)
        assert r.witness == ir
        assert r.length <= exact_girth(g)[0] + 1

    def test_single_dequeue_finds_nothing(self):
        assert algorithm_a(cycle_graph(3), 3, 1, seed=0).witness is None
        assert algorithm_a(complete_graph(6), 6, 1, seed=0).witness is None

    def test_seeded(self):
        g = gnp(300, 0.02, 2)
        a = algorithm_a(g, 20, 50, seed=9)
        assert a == algorithm_a(g, 20, 50, seed=9)
        assert a.seed == 9

    def test_expected_sample_size(self):
        g = cycle_graph(1000)
        sizes = [algorithm_a(g, 40, 1, seed=s).visited_total for s in range(200)]
        assert abs(np.mean(sizes) - 40) < 3

    def test_parameters(self):
        with pytest.raises(ValueError):
            algorithm_a(cycle_graph(4), 0, 1, seed=0)


class TestAlgorithmADet:
    def test_small_x_gives_one_root(self):
        g = cycle_graph(12)
        assert det_set_size(12, 2.0) == 12
        roots, _ = hitting_roots(g, det_set_size(12, 2.0))
        assert roots.tolist() == [0]
        assert algorithm_a_det(g, 2.0, 12).length == 12

    def test_c8(self):
        g = cycle_graph(8)
        assert det_set_size(8, 6.0) == 3
        roots, _ = hitting_roots(g, 3)
        adj = g.adjacency
        near = set(roots.tolist()) | {v for r in roots.tolist() for v in adj[r]}
        assert near == set(range(8))
        r = algorithm_a_det(g, 6.0, 8)
        assert r.length == 8
        assert r.length <= 2 * 4 + 2 * (1 + 1)

    def test_deterministic(self):
        g = gnp(400, 0.01, 6)
        assert algorithm_a_det(g, 30, 400) == algorithm_a_det(g, 30, 400)

    def test_disconnected_pads_small_components(self):
        g = from_edges(9, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 3)])
        assert algorithm_a_det(g, 1.0, 9).length == 3


def test_phase_two_matches_explicit_subgraph():
    graphs = [named("petersen"), named("heawood"), named("q4"), cycle_graph(9),
              subdivide(named("k4"), 1), random_regular(30, 3, 4)]
    graphs += [g for _, g in CONNECTED[:10] if g.n <= 120]
    for g in graphs:
        for k in (2, 3):
            for x in (2, 3, 5, default_x(g.n, k)):
                ph = theorem_one_phases(g, TheoremOneParams(k=k, x=x))
                ref_len, ref_visited = reference_phase_two(g, x, ph.phase2_cap)
                table = radius_table(g, x)
                assert (ph.phase2.length or 0) == ref_len
                assert ph.phase2.visited_total - table.visited == ref_visited


@pytest.mark.parametrize("k", [2, 3, 4, 5])
@pytest.mark.parametrize("label, g", CORPUS, ids=[c[0] for c in CORPUS])
def test_theorem_one_guarantee(label, g, k):
    value, _ = exact_girth(g)
    r = theorem_one(g, TheoremOneParams(k=k))
    r.witness.check(g)
    assert value <= r.length <= theorem_one_bound(value, k)


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("x", [2, 3, 7, 10_000])
def test_theorem_one_guarantee_any_x(k, x):
    for g in [subdivide(random_regular(40, 3, s), t) for s in range(3) for t in (1, 2, 4)]:
        value, _ = exact_girth(g)
        r = theorem_one(g, TheoremOneParams(k=k, x=x))
        assert value <= r.length <= theorem_one_bound(value, k)


def test_theorem_one_phase_bounds_separately():
    """Each pass meets its own half of the argument on high-girth inputs."""
    for s in range(4):
        g = subdivide(random_regular(60, 3, s), 3)
        value, _ = exact_girth(g)
        for k in (2, 3, 4):
            ph = theorem_one_phases(g, TheoremOneParams(k=k))
            r = ph.radii
            best = min(ph.phase1.length or 10**9, ph.phase2.length or 10**9)
            assert best <= theorem_one_bound(value, k)
            assert np.all(r >= 0)


def test_theorem_one_degenerate_x():
    g = named("heawood")
    ph = theorem_one_phases(g, TheoremOneParams(k=2, x=g.n))
    assert ph.roots.shape[0] == 1
    assert ph.phase2_cap == g.n
    assert ph.phase1.length <= 7  # one unbounded search is within +1 of the girth
    assert ph.phase2.length <= theorem_one_bound(6, 2)


def test_theorem_one_acyclic_and_disconnected():
    assert theorem_one(path_graph(10)).witness is None
    g = from_edges(12, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                        (5, 6), (6, 7), (7, 5), (8, 9), (9, 10)])
    r = theorem_one(g, TheoremOneParams(k=3))
    assert sorted(r.witness.vertices) == [5, 6, 7]
    r.witness.check(g)


def test_theorem_one_deterministic():
    g = gnp(500, 0.008, 3)
    assert theorem_one(g, TheoremOneParams(k=3)) == theorem_one(g, TheoremOneParams(k=3))


def test_theorem_one_params():
    with pytest.raises(ValueError):
        TheoremOneParams(k=1)
    with pytest.raises(ValueError):
        TheoremOneParams(x=0)
    assert default_x(1000, 2) == round(math.sqrt(1000 * math.log(1000)))
    assert default_x(3, 5) == 2
    assert default_phase2_cap(1000, 83, 2) == max(math.ceil(1000 * math.log(1000) / 83), 83)


@pytest.mark.parametrize("label, g", CONNECTED[:25], ids=[c[0] for c in CONNECTED[:25]])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_theorem_one_work(label, g, k):
    n = g.n
    x = default_x(n, k)
    r = theorem_one(g, TheoremOneParams(k=k))
    assert r.visited_total <= 4 * (n * n * math.log(n) / x + n * x ** (k - 1))


class TestTheoremTwo:
    def test_schedule(self):
        sched = theorem_two_schedule(10_000, 2)
        assert sched[0] == (pytest.approx(10_000 * math.log(10_000)), 100)
        assert sched[1] == (pytest.approx(100 * math.log(10_000)), 10_000)

    def test_complete_graph(self):
        for k in (2, 3):
            r = theorem_two(complete_graph(30), TheoremTwoParams(k=k, seed=1))
            assert r.length == 3 <= theorem_two_bound(3, k)

    def test_petersen_rate(self, petersen):
        hits = sum(theorem_two(petersen, TheoremTwoParams(k=2, seed=s)).length <= 12
                   for s in range(100))
        assert hits >= 95

    def test_seeded(self):
        g = gnp(500, 0.01, 8)
        a = theorem_two(g, TheoremTwoParams(k=3, seed=42))
        assert a == theorem_two(g, TheoremTwoParams(k=3, seed=42))
        assert a.seed == 42

    def test_acyclic(self):
        assert theorem_two(path_graph(50), TheoremTwoParams(k=2, seed=0)).witness is None

    @pytest.mark.parametrize("k", [2, 3])
    def test_mean_work(self, k):
        for n in (300, 1000):
            g = gnp(n, 8 / n, 1)
            work = [theorem_two(g, TheoremTwoParams(k=k, seed=s)).visited_total for s in range(20)]
            assert np.mean(work) <= 2 * k * n ** (1 + 1 / k) * math.log(n)

    @pytest.mark.parametrize("label, g", CORPUS[:40], ids=[c[0] for c in CORPUS[:40]])
    def test_sound(self, label, g):
        value, _ = exact_girth(g)
        for s in range(3):
            r = theorem_two(g, TheoremTwoParams(k=2, seed=s))
            if r.witness is not None:
                r.witness.check(g)
                assert r.length >= value
