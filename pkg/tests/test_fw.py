import numpy as np
import pytest

import kcds
from kcds.fw import RankVector, ibatch, plateau_partition, pair_upper_bounds
from kcds.sct import SctPair

from conftest import random_graph, graph_corpus


def _forest(g, k):
    return kcds.filter_pairs(kcds.build_sct(g), k)


def test_kcl_triangle_conservation(triangle):
    f = _forest(triangle, 3)
    r = kcds.kcl_run(f, triangle.n, 3, seed=0, k=3)
    assert r.total() == 3
    assert sorted(r.r) == [1, 1, 1]


def test_kcl_accepts_clique_array(triangle):
    cl = np.array([[0, 1, 2]], dtype=np.int64)
    r = kcds.kcl_run(cl, 3, 5, seed=1)
    assert r.total() == 5


def test_kcl_smallest_id_tie_is_deterministic(worked_example):
    f = _forest(worked_example, 3)
    runs = [
        kcds.kcl_run(f, worked_example.n, 7, seed=s, k=3, tie="smallest-id").r
        for s in (1, 2, 3)
    ]
    assert all((runs[0] == rr).all() for rr in runs[1:])


def test_kcl_random_tie_conserves_mass(worked_example):
    f = _forest(worked_example, 3)
    want = 7 * f.clique_count()
    for s in range(4):
        r = kcds.kcl_run(f, worked_example.n, 7, seed=s, k=3)
        assert r.total() == want


def test_ibatch_worked_trace():
    # single 3-clique pair on all-zero ranks: floor(1/3)=0 so one random
    # member gets the unit
    r0 = RankVector.zeros(7)
    p1 = SctPair(hold=(4,), pivots=(5, 6))
    r1 = ibatch(r0, p1, 3, rng=0)
    assert r1.total() == 1
    assert set(np.nonzero(r1.r)[0]) <= {4, 5, 6}

    # with r(u4)=1, the pair ({u3},{u4,u5,u6}) splits its 3 cliques evenly
    # over the zero plateau {u3,u5,u6}
    r = RankVector.zeros(7)
    r.r[4] = 1
    r2 = ibatch(r, SctPair(hold=(3,), pivots=(4, 5, 6)), 3, rng=0)
    assert list(r2.r[[3, 4, 5, 6]]) == [1, 1, 1, 1]


def test_ibatch_single_clique_pair_behaves_like_kcl_step():
    r = RankVector.zeros(5)
    r.r[:] = [3, 0, 2, 0, 9]
    p = SctPair(hold=(), pivots=(0, 1, 2))
    out = ibatch(r, p, 3, rng=12)
    delta = out.r - r.r
    assert delta.sum() == 1
    # the unit lands on a minimum-rank member of the pair
    (who,) = np.nonzero(delta)[0]
    assert who == 1  # unique minimum among members 0,1,2


def test_ibatch_does_not_mutate_input():
    r = RankVector.zeros(4)
    p = SctPair(hold=(0,), pivots=(1, 2))
    out = ibatch(r, p, 3, rng=5)
    assert r.total() == 0
    assert out.total() == 1


def _random_pair_instance(rng, n=12, k=4):
    while True:
        h = int(rng.integers(0, k + 1))
        p = int(rng.integers(max(1, k - h), min(n - h, 8) + 1))
        if k - h < 0 or k - h > p or (h == 0 and k > p):
            continue
        members = rng.permutation(n)[: h + p]
        pair = SctPair(hold=tuple(sorted(int(x) for x in members[:h])),
                       pivots=tuple(sorted(int(x) for x in members[h:])))
        r = RankVector.zeros(n)
        r.r[:] = rng.integers(0, 9, size=n)
        return r, pair


@pytest.mark.parametrize("seed", [0, 1])
def test_ibatch_randomized_properties(seed):
    rng = np.random.default_rng(seed)
    for _ in range(300):
        r, pair = _random_pair_instance(rng)
        k = 4
        ups = pair_upper_bounds(pair, k)
        n_C = sum(ups[u] for u in pair.hold) if pair.hold else 0
        out = ibatch(r, pair, k, rng=int(rng.integers(2**31)))
        delta = out.r - r.r
        from math import comb
        expect = comb(len(pair.pivots), k - len(pair.hold))
        assert delta.sum() == expect
        for u, cap in ups.items():
            assert 0 <= delta[u] <= cap
        assert (delta >= 0).all()
        # evenness: a positive receiver ends at most 1 above any member
        # that still has residual capacity
        members = list(pair.hold) + list(pair.pivots)
        for u in members:
            if delta[u] == 0:
                continue
            for v in members:
                if out.r[v] < out.r[u] - 1:
                    assert delta[v] == ups[v], (u, v)


def test_plateau_partition_structure():
    r = RankVector.zeros(6)
    r.r[:] = [5, 2, 2, 7, 2, 5]
    p = SctPair(hold=(0,), pivots=(1, 2, 3, 4, 5))
    part = plateau_partition(r, p)
    assert list(part.ranks) == [2, 5, 7]
    seen = set()
    for grp_rank, nodes in zip(part.ranks, part.groups):
        for u in nodes:
            assert r.r[u] == grp_rank
            seen.add(u)
    assert seen == {0, 1, 2, 3, 4, 5}


def test_pair_upper_bounds_lemma_values():
    p = SctPair(hold=(0, 1), pivots=(2, 3, 4))
    ups = pair_upper_bounds(p, 4)
    from math import comb
    assert ups[0] == ups[1] == comb(3, 2)
    assert ups[2] == ups[3] == ups[4] == comb(2, 1)


def test_mass_conservation_both_solvers():
    for g in graph_corpus(10, n_lo=6, n_hi=16, seed=23):
        for k in (3, 4):
            f = _forest(g, k)
            cnt = f.clique_count()
            if cnt == 0:
                continue
            T = 4
            r1 = kcds.kcl_run(f, g.n, T, seed=1, k=k)
            r2 = kcds.psctl_run(f, g.n, T, seed=1)
            assert r1.total() == T * cnt
            assert r2.total() == T * cnt


def test_psctl_monotone_and_deterministic():
    g = random_graph(14, 0.5, seed=4)
    f = _forest(g, 3)
    a = kcds.psctl_run(f, g.n, 6, seed=9)
    b = kcds.psctl_run(f, g.n, 6, seed=9)
    assert (a.r == b.r).all()
    c = kcds.psctl_run(f, g.n, 7, seed=9)
    assert (c.r >= a.r).all()


def test_psctl_shuffle_keeps_mass():
    g = random_graph(14, 0.5, seed=4)
    f = _forest(g, 3)
    cnt = f.clique_count()
    r = kcds.psctl_run(f, g.n, 5, seed=2, shuffle_pairs=True)
    assert r.total() == 5 * cnt


def test_converged_trivial_cases(triangle):
    r = RankVector.zeros(3)
    r.r[:] = [3, 2, 1]
    assert kcds.converged(r, r.copy(), triangle, 3)
    other = RankVector.zeros(3)
    other.r[:] = [1, 1, 1]
    # triangle: any rank vector extracts the whole triangle, so converged
    assert kcds.converged(r, other, triangle, 3)


def test_convergence_matches_oracle():
    hit = 0
    total = 0
    for g in graph_corpus(12, n_lo=6, n_hi=12, seed=31):
        for k in (3, 4):
            if not kcds.brute_cliques(g, k):
                continue
            f = _forest(g, k)
            _, opt = kcds.brute_densest(g, k)
            rv, _ = kcds.psctl_until_converged(f, g, k, seed=1)
            rep = kcds.best_prefix_exact(g, kcds.rank_sort(rv), k)
            bound = (1 - 1 / (k * len(rep.nodes))) * float(opt) if rep.nodes else 0
            assert float(rep.density) >= bound - 1e-12
            total += 1
            hit += rep.density == opt
    assert hit == total  # exact equality observed on all small instances


def test_kcl_and_psctl_agree_with_oracle():
    g = random_graph(12, 0.5, seed=123)
    k = 4
    f = _forest(g, k)
    _, opt = kcds.brute_densest(g, k)
    r1 = kcds.kcl_run(f, g.n, 50, seed=0, k=k)
    rep1 = kcds.best_prefix_exact(g, kcds.rank_sort(r1), k)
    assert rep1.density == opt
    rv, _ = kcds.psctl_until_converged(f, g, k, seed=0)
    rep2 = kcds.best_prefix_exact(g, kcds.rank_sort(rv), k)
    assert rep2.density == opt
