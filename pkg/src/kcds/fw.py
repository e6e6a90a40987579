"""Frank-Wolfe solvers: per-clique scanning (kCL) and per-pair batch
updates (PSCTL with IBatch).

Both only ever add integer units of weight, so ranks are exact int64
throughout; overflow is guarded up front from the exact clique count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .graph import Graph
from .sct import SctForest, SctPair
from ._kernels import (
    kcl_pass_cliques,
    kcl_pass_forest,
    ibatch_core,
    psctl_kernel,
)

_INT64_SAFE = (1 << 62)

TIE_RANDOM = 0
TIE_SMALLEST_ID = 1

_TIE_MODES = {"random": TIE_RANDOM, "smallest-id": TIE_SMALLEST_ID}


def _tie_code(tie: str | int) -> int:
    if isinstance(tie, int):
        return tie
    try:
        return _TIE_MODES[tie]
    except KeyError:
        raise ValueError(f"unknown tie mode {tie!r}; use 'random' or 'smallest-id'") from None


@dataclass
class RankVector:
    r: np.ndarray            # int64 per-node accumulated weight
    iterations_done: int = 0

    @classmethod
    def zeros(cls, n: int) -> "RankVector":
        return cls(r=np.zeros(n, dtype=np.int64), iterations_done=0)

    def copy(self) -> "RankVector":
        return RankVector(r=self.r.copy(), iterations_done=self.iterations_done)

    def total(self) -> int:
        return int(self.r.sum(dtype=object))


@dataclass(frozen=True)
class PlateauPartition:
    """Groups of V(P) sharing a rank, ordered by strictly increasing rank."""

    groups: tuple[tuple[int, ...], ...]
    ranks: tuple[int, ...]


def plateau_partition(r: RankVector, p: SctPair) -> PlateauPartition:
    members = sorted(set(p.hold) | set(p.pivots), key=lambda u: (int(r.r[u]), u))
    groups: list[tuple[int, ...]] = []
    ranks: list[int] = []
    for u in members:
        ru = int(r.r[u])
        if ranks and ranks[-1] == ru:
            groups[-1] = groups[-1] + (u,)
        else:
            groups.append((u,))
            ranks.append(ru)
    return PlateauPartition(groups=tuple(groups), ranks=tuple(ranks))


def pair_upper_bounds(p: SctPair, k: int) -> dict[int, int]:
    """Per-node weight cap for one IBatch call on this pair."""
    h = len(p.hold)
    pv = len(p.pivots)
    up_h = comb(pv, k - h)
    sel = k - h
    up_p = comb(pv - 1, sel - 1) if sel >= 1 else 0
    out = {u: up_h for u in p.hold}
    out.update({u: up_p for u in p.pivots})
    return out


def _materialize_cliques(cliques, k: int) -> np.ndarray:
    if isinstance(cliques, np.ndarray):
        arr = np.ascontiguousarray(cliques, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != k:
            raise ValueError(f"clique array must have shape (num, {k})")
        return arr
    rows = [tuple(c) for c in cliques]
    if not rows:
        return np.empty((0, k), dtype=np.int64)
    arr = np.array(rows, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != k:
        raise ValueError(f"cliques must each have {k} members")
    return arr


def _check_rank_overflow(total_per_pass: int, T: int) -> None:
    if total_per_pass * T >= _INT64_SAFE:
        raise OverflowError(
            f"{T} passes over {total_per_pass} cliques would exceed the exact "
            "integer range of the rank vector"
        )


def kcl_run(cliques, n: int, T: int, seed: int = 0, k: int | None = None,
            tie: str | int = "random") -> RankVector:
    """T passes of the per-clique update: each clique grants one unit to its
    minimum-rank member (ties by seeded uniform choice, or smallest id).

    ``cliques`` is either an (num, k) array/iterable of k-cliques, or a
    k-filtered SctForest (cliques are then enumerated from the pairs each
    pass without materializing them).
    """
    if T < 1:
        raise ValueError("T must be >= 1")
    rv = RankVector.zeros(n)
    state = np.array([seed & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)
    tie_mode = _tie_code(tie)
    if isinstance(cliques, SctForest):
        f = cliques
        if f.k is None:
            if k is None:
                raise ValueError("unfiltered forest; pass k")
            from .sct import filter_pairs
            f = filter_pairs(f, k)
        kk = f.k
        _check_rank_overflow(f.clique_count(), T)
        for _ in range(T):
            kcl_pass_forest(f.h_len, f.p_len, f.off, f.members, kk, rv.r, state, tie_mode)
            rv.iterations_done += 1
        return rv
    if k is None:
        try:
            k = int(np.asarray(cliques).shape[1])
        except Exception:
            raise ValueError("pass k when cliques is a plain iterable") from None
    arr = _materialize_cliques(cliques, k)
    _check_rank_overflow(len(arr), T)
    for _ in range(T):
        kcl_pass_cliques(arr, rv.r, state, tie_mode)
        rv.iterations_done += 1
    return rv


def ibatch(r: RankVector, p: SctPair, k: int, rng) -> RankVector:
    """One batch allocation of the pair's clique total onto its nodes.

    Returns a new RankVector; exactly C(|pivots|, k-|hold|) units are added
    across V(P), each node capped by its upper bound. ``rng`` is either an
    integer seed or a uint64[1] state array (mutated in place, so a sequence
    of calls continues one stream).
    """
    ups_map = pair_upper_bounds(p, k)
    n_C = comb(len(p.pivots), k - len(p.hold))
    out = r.copy()
    if isinstance(rng, np.ndarray):
        state = rng
    else:
        state = np.array([int(rng) & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)
    members = list(p.hold) + list(p.pivots)
    mc = len(members)
    ids = np.array(members, dtype=np.int64)
    ups = np.array([ups_map[u] for u in members], dtype=np.int64)
    scratch = [np.empty(mc, dtype=np.int64) for _ in range(4)]
    ibatch_core(ids, ups, mc, n_C, out.r, state, *scratch)
    return out


def psctl_run(f: SctForest, n: int, T: int, seed: int = 0,
              shuffle_pairs: bool = False) -> RankVector:
    """T full passes of IBatch over the pairs in stored order.

    With ``shuffle_pairs`` the pair order is reshuffled each pass from the
    seeded stream. Deterministic given (forest, T, seed, shuffle_pairs).
    """
    if T < 1:
        raise ValueError("T must be >= 1")
    if f.k is None:
        raise ValueError("forest must be k-filtered")
    rv = RankVector.zeros(n)
    if f.eta == 0:
        rv.iterations_done = T
        return rv
    _check_rank_overflow(f.clique_count(), T)
    n_C = f.pair_counts_int64()
    k = f.k
    up_h = np.zeros(f.eta, dtype=np.int64)
    up_p = np.zeros(f.eta, dtype=np.int64)
    for i in range(f.eta):
        h = int(f.h_len[i])
        p = int(f.p_len[i])
        sel = k - h
        uh = comb(p, sel) if 0 <= sel <= p else 0
        upv = comb(p - 1, sel - 1) if 1 <= sel <= p else 0
        if uh > _INT64_SAFE or upv > _INT64_SAFE:
            raise OverflowError(f"pair {i} upper bounds exceed the exact integer range")
        up_h[i] = uh
        up_p[i] = upv
    state = np.array([seed & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)
    psctl_kernel(
        f.h_len, f.p_len, f.off, f.members, n_C, up_h, up_p,
        rv.r, T, state, shuffle_pairs, max(f.max_pair_size(), 1),
    )
    rv.iterations_done = T
    return rv


def converged(prev: RankVector, cur: RankVector, g: Graph, k: int) -> bool:
    """True iff both rank vectors extract the same prefix node set."""
    from .extract import rank_sort, best_prefix_exact

    rep_prev = best_prefix_exact(g, rank_sort(prev), k)
    rep_cur = best_prefix_exact(g, rank_sort(cur), k)
    return set(rep_prev.nodes) == set(rep_cur.nodes)


def psctl_until_converged(
    f: SctForest, g: Graph, k: int, seed: int = 0, cap: int = 1000,
    shuffle_pairs: bool = False, stable: int = 10,
) -> tuple[RankVector, int]:
    """Run PSCTL pass by pass until the extracted prefix stops changing.

    The prefix must survive ``stable`` consecutive passes unchanged before
    the run stops; two-pass agreement alone fires far too early on small
    graphs where the prefix can repeat by chance mid-transient. Returns
    (rank vector, passes run); stops at ``cap`` passes regardless. One
    continuous random stream is used, so pass t matches a straight
    psctl_run with T=t when shuffle is off.
    """
    if f.k != k:
        raise ValueError("forest filter does not match k")
    if stable < 1:
        raise ValueError("stable must be >= 1")
    from .extract import rank_sort, best_prefix_exact

    rv = RankVector.zeros(g.n)
    if f.eta == 0:
        return rv, 0
    _check_rank_overflow(f.clique_count(), cap)
    n_C = f.pair_counts_int64()
    up_h = np.zeros(f.eta, dtype=np.int64)
    up_p = np.zeros(f.eta, dtype=np.int64)
    for i in range(f.eta):
        h = int(f.h_len[i])
        p = int(f.p_len[i])
        sel = k - h
        up_h[i] = comb(p, sel) if 0 <= sel <= p else 0
        up_p[i] = comb(p - 1, sel - 1) if 1 <= sel <= p else 0
    state = np.array([seed & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)
    maxvp = max(f.max_pair_size(), 1)
    prev_nodes: set[int] | None = None
    streak = 0
    for t in range(1, cap + 1):
        psctl_kernel(f.h_len, f.p_len, f.off, f.members, n_C, up_h, up_p,
                     rv.r, 1, state, shuffle_pairs, maxvp)
        rv.iterations_done = t
        rep = best_prefix_exact(g, rank_sort(rv), k)
        nodes = set(rep.nodes)
        if prev_nodes is not None and nodes == prev_nodes:
            streak += 1
            if streak >= stable:
                return rv, t
        else:
            streak = 0
        prev_nodes = nodes
    return rv, cap
