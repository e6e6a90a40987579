import json
from fractions import Fraction

import numpy as np
import pytest
import jsonschema

import kcds
from kcds.fw import RankVector
from kcds.extract import REPORT_SCHEMA, DensityReport
from kcds.sampler import SampleSet

from conftest import random_graph, graph_corpus


def test_rank_sort_examples():
    r = RankVector.zeros(3)
    r.r[:] = [5, 1, 3]
    assert list(kcds.rank_sort(r)) == [0, 2, 1]
    r.r[:] = [2, 2, 2]
    assert list(kcds.rank_sort(r)) == [0, 1, 2]


def test_rank_sort_tie_by_smallest_id():
    r = RankVector.zeros(5)
    r.r[:] = [1, 3, 3, 0, 3]
    assert list(kcds.rank_sort(r)) == [1, 2, 4, 0, 3]


def test_prefix_counts_match_recount():
    for g in graph_corpus(8, n_lo=6, n_hi=14, seed=41):
        for k in (3, 4):
            order = np.random.default_rng(1).permutation(g.n)
            added = kcds.prefix_clique_counts(g, order, k)
            cum = 0
            for i in range(g.n):
                cum += added[i]
                sub = [int(u) for u in order[: i + 1]]
                inset = set(sub)
                direct = sum(
                    1 for c in kcds.brute_cliques(g, k) if c <= inset
                )
                assert cum == direct, (g.n, k, i)


def test_triangle_prefix(triangle):
    r = kcds.kcl_run(kcds.filter_pairs(kcds.build_sct(triangle), 3),
                     3, 2, seed=0, k=3)
    rep = kcds.best_prefix_exact(triangle, kcds.rank_sort(r), 3)
    assert rep.density == Fraction(1, 3)
    assert sorted(rep.nodes) == [0, 1, 2]
    assert rep.clique_count == 1
    assert rep.density_mode == "exact"


def test_no_clique_flagged():
    g = kcds.from_edges([(0, 1), (1, 2), (2, 3)])
    rep = kcds.best_prefix_exact(g, np.arange(g.n), 3)
    assert rep.density == 0
    assert rep.nodes == []
    assert "no-k-clique" in rep.flags


def test_argmax_scaling_invariance():
    g = random_graph(13, 0.5, seed=51)
    f = kcds.filter_pairs(kcds.build_sct(g), 3)
    r = kcds.psctl_run(f, g.n, 8, seed=2)
    scaled = r.copy()
    scaled.r[:] = scaled.r * 5
    a = kcds.best_prefix_exact(g, kcds.rank_sort(r), 3)
    b = kcds.best_prefix_exact(g, kcds.rank_sort(scaled), 3)
    assert a.nodes == b.nodes
    assert a.density == b.density


def test_best_prefix_beats_every_prefix():
    g = random_graph(12, 0.6, seed=61)
    order = np.arange(g.n)
    rep = kcds.best_prefix_exact(g, order, 3)
    added = kcds.prefix_clique_counts(g, order, 3)
    cum = 0
    for i in range(g.n):
        cum += int(added[i])
        assert rep.density >= Fraction(cum, i + 1)


def test_exact_tie_takes_largest_prefix():
    # two disjoint triangles in one order: density ties at 1/3 for sizes
    # 3 and 6; the larger prefix wins
    g = kcds.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    rep = kcds.best_prefix_exact(g, np.arange(6), 3)
    assert rep.density == Fraction(1, 3)
    assert len(rep.nodes) == 6


def test_plateau_only_restricts_candidates():
    g = random_graph(14, 0.5, seed=71)
    f = kcds.filter_pairs(kcds.build_sct(g), 3)
    r = kcds.psctl_run(f, g.n, 10, seed=0)
    order = kcds.rank_sort(r)
    full = kcds.best_prefix_exact(g, order, 3)
    plat = kcds.best_prefix_exact(g, order, 3, plateau_only_ranks=r.r)
    # the restricted argmax cannot beat the full sweep
    assert plat.density <= full.density
    # and its chosen prefix must end at a rank boundary
    if plat.nodes:
        dense = {int(np.where(g.id_map == x)[0][0]) for x in plat.nodes}
        i = len(dense) - 1
        assert i == g.n - 1 or r.r[order[i]] != r.r[order[i + 1]]


def _sample_set(cliques, k, t=10, hits=None, W=10):
    arr = np.array(sorted(tuple(sorted(c)) for c in cliques), dtype=np.int32)
    if arr.size == 0:
        arr = arr.reshape(0, k)
    mult = np.ones(len(arr), dtype=np.int64)
    return SampleSet(k=k, cliques=arr, multiplicity=mult,
                     t=t, hits=hits if hits is not None else len(arr),
                     path_total=W)


def test_sampled_sweep_constructed_case():
    # 7 distinct sampled cliques all inside the first 10 order positions
    cl = [(0, 1, 2), (0, 1, 3), (2, 3, 4), (4, 5, 6), (5, 6, 7),
          (6, 7, 8), (7, 8, 9)]
    s = _sample_set(cl, 3, t=10, W=10)
    order = np.arange(20)
    rep = kcds.best_prefix_sampled(order, s)
    assert rep.density == Fraction(7, 10)
    assert len(rep.nodes) == 10
    assert rep.density_mode == "sampled"


def test_sampled_tie_takes_smallest_prefix():
    # one clique in the first 3 nodes, another finishing at node 5:
    # both prefixes have density 1/3; smallest wins for the sampled sweep
    s = _sample_set([(0, 1, 2), (3, 4, 5)], 3, t=6, W=6)
    rep = kcds.best_prefix_sampled(np.arange(6), s)
    assert rep.density == Fraction(1, 3)
    assert len(rep.nodes) == 3


def test_sampled_empty_flagged():
    s = _sample_set([], 3, t=0, hits=0, W=0)
    rep = kcds.best_prefix_sampled(np.arange(4), s)
    assert rep.nodes == []
    assert "insufficient-samples" in rep.flags


def test_report_json_schema():
    g = random_graph(12, 0.5, seed=81)
    f = kcds.filter_pairs(kcds.build_sct(g), 3)
    r = kcds.psctl_run(f, g.n, 5, seed=0)
    rep = kcds.best_prefix_exact(g, kcds.rank_sort(r), 3)
    rep.solver = "psctl"
    rep.T = 5
    rep.seed = 0
    rep.eta = f.eta
    rep.delta = kcds.degeneracy_order(g).delta
    doc = json.loads(rep.to_json())
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["density_mode"] == "exact"
    assert doc["size"] == len(doc["nodes"])


def test_report_density_mode_consistency():
    rep = DensityReport(nodes=[1, 2], k=3, density=Fraction(1, 2),
                        density_mode="exact", clique_count=1)
    d = rep.to_dict()
    assert d["density"] == 0.5
    assert d["clique_count"] == 1
