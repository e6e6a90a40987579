"""k-clique sampling through k-color-paths.

Color the graph greedily along the reverse degeneracy order, orient every
edge from the higher color to the lower, and count the directed k-node
paths with one DP pass. Each k-clique shows up as exactly one such path
(its nodes have k distinct colors and the orientation is acyclic), so
uniform path draws give unbiased clique hits. The sampled clique set then
feeds the same rank-update machinery as the exact solvers.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph, Coloring, greedy_color
from ._kernels import path_dp_kernel, sample_paths_kernel
from .fw import RankVector, kcl_run


@dataclass(frozen=True)
class ColorDag:
    """Edges oriented from higher color endpoint to lower."""

    coloring: Coloring
    outptr: np.ndarray
    outadj: np.ndarray

    @property
    def num_colors(self) -> int:
        return self.coloring.num_colors


def build_color_dag(g: Graph, coloring: Coloring | None = None) -> ColorDag:
    if coloring is None:
        coloring = greedy_color(g)
    col = coloring.color
    n = g.n
    # Keep each undirected edge once, directed high color -> low color;
    # equal colors cannot happen across an edge by construction.
    deg = np.diff(g.indptr)
    src = np.repeat(np.arange(n, dtype=np.int64), deg)
    dst = g.adj.astype(np.int64)
    keep = col[src] > col[dst]
    src, dst = src[keep], dst[keep]
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    outptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(outptr, src + 1, 1)
    np.cumsum(outptr, out=outptr)
    return ColorDag(coloring, outptr, dst.astype(np.int32))


@dataclass(frozen=True)
class PathCounts:
    """Per-node counts of directed paths starting at that node."""

    k: int
    counts: object        # int64 ndarray (n, k+1) or list of python-int rows
    total: int
    mode: str             # "int64" | "big"


def count_color_paths(g: Graph, k: int, dag: ColorDag | None = None, mode: str = "int64") -> PathCounts:
    """DP over the color orientation: cnt[v][i] = paths of i nodes from v.

    ``mode="int64"`` runs the compiled kernel and raises on overflow;
    ``mode="big"`` recomputes in python integers without any range limit.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if dag is None:
        dag = build_color_dag(g)
    if mode == "int64":
        cnt, total, overflow = path_dp_kernel(dag.outptr, dag.outadj, g.n, k)
        if overflow:
            raise OverflowError(
                "path count exceeds the 64-bit budget; rerun with mode='big'"
            )
        return PathCounts(k, cnt, int(total), "int64")
    if mode != "big":
        raise ValueError(f"unknown mode {mode!r}")
    outptr, outadj = dag.outptr, dag.outadj
    cnt = [[0] * (k + 1) for _ in range(g.n)]
    for v in range(g.n):
        cnt[v][1] = 1
    for i in range(2, k + 1):
        for v in range(g.n):
            s = 0
            for j in range(outptr[v], outptr[v + 1]):
                s += cnt[outadj[j]][i - 1]
            cnt[v][i] = s
    total = sum(row[k] for row in cnt)
    return PathCounts(k, cnt, total, "big")


@dataclass
class SampleSet:
    """Outcome of a sampling round: the deduplicated cliques plus the
    bookkeeping needed to rescale sampled densities back to true ones."""

    k: int
    cliques: np.ndarray     # (num_unique, k) int32, dense node ids
    multiplicity: np.ndarray  # draws that produced each row (sums to hits)
    t: int                  # draws taken
    hits: int               # draws that were cliques (with repetition)
    path_total: int         # W, number of k-color-paths in the graph

    @property
    def hit_rate(self) -> Fraction:
        if self.t == 0:
            return Fraction(0)
        return Fraction(self.hits, self.t)


def sample_color_path(g: Graph, k: int, seed: int = 0, dag: ColorDag | None = None):
    """Draw one uniform k-color-path; returns (path tuple, is_clique)."""
    if dag is None:
        dag = build_color_dag(g)
    pc = count_color_paths(g, k, dag)
    if pc.total == 0:
        raise ValueError("graph has no k-color-path of this length")
    state = np.array([seed & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)
    cum = np.cumsum(pc.counts[:, k])
    paths, flags = sample_paths_kernel(
        dag.outptr, dag.outadj, pc.counts, cum, pc.total, 1, k, state,
        g.indptr, g.adj,
    )
    return tuple(int(x) for x in paths[0]), bool(flags[0])


def sample_k_cliques(g: Graph, k: int, t: int, seed: int = 0, dag: ColorDag | None = None) -> SampleSet:
    """t uniform path draws, keeping the distinct cliques among the hits."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if dag is None:
        dag = build_color_dag(g)
    pc = count_color_paths(g, k, dag)
    if pc.total == 0 or t == 0:
        if pc.total == 0:
            warnings.warn("no k-color-paths to sample; empty result", stacklevel=2)
        return SampleSet(k, np.empty((0, k), dtype=np.int32),
                         np.empty(0, dtype=np.int64), t, 0, pc.total)
    state = np.array([seed & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)
    cum = np.cumsum(pc.counts[:, k])
    paths, flags = sample_paths_kernel(
        dag.outptr, dag.outadj, pc.counts, cum, pc.total, t, k, state,
        g.indptr, g.adj,
    )
    hits = int(flags.sum())
    if hits == 0:
        return SampleSet(k, np.empty((0, k), dtype=np.int32),
                         np.empty(0, dtype=np.int64), t, 0, pc.total)
    found = np.sort(paths[flags], axis=1)
    uniq, mult = np.unique(found, axis=0, return_counts=True)
    return SampleSet(k, uniq, mult.astype(np.int64), t, hits, pc.total)


def spath_run(
    g: Graph, k: int, t: int, T: int, seed: int = 0, tie: str = "random"
) -> tuple[RankVector, SampleSet]:
    """Sampling solver: draw cliques once, then run the rank updates on
    the sampled set exactly as the full solver would on all cliques."""
    s = sample_k_cliques(g, k, t, seed=seed)
    if s.cliques.shape[0] == 0:
        return RankVector.zeros(g.n), s
    r = kcl_run(s.cliques, g.n, T, seed=seed + 1, tie=tie)
    return r, s


def estimate_true_density(s: SampleSet, nodes) -> Fraction:
    """Rescale a sampled clique count to a true-count estimate.

    hits/t estimates (cliques / paths), and the path total W is exact, so
    cliques-inside ≈ (contained draws) * W / t, counting repeat draws of
    the same clique. Density divides by |nodes| (dense ids).
    """
    if len(nodes) == 0:
        raise ValueError("empty node set has no density")
    if s.t == 0:
        raise ValueError("no draws to estimate from")
    idx = np.asarray(sorted(int(u) for u in nodes), dtype=np.int64)
    size = max(int(idx.max()) + 1,
               int(s.cliques.max()) + 1 if s.cliques.size else 1)
    member = np.zeros(size, dtype=bool)
    member[idx] = True
    if s.cliques.size:
        contained = member[s.cliques].all(axis=1)
        inside = int(s.multiplicity[contained].sum())
    else:
        inside = 0
    return Fraction(inside * s.path_total, s.t * len(nodes))


def plan_sample_size(n: int, p_prime: float, eps: float, theta: float) -> int:
    """Draw budget for an (eps, theta) guarantee at observed hit rate p'.

    t >= -3 n ln(eps/4) / (p' theta^2); p' can be seeded from a pilot run.
    """
    if not (0 < eps < 1):
        raise ValueError("eps must be in (0, 1)")
    if not (0 < theta):
        raise ValueError("theta must be positive")
    if not (0 < p_prime <= 1):
        raise ValueError("p_prime must be in (0, 1]")
    return math.ceil(-3.0 * n * math.log(eps / 4.0) / (p_prime * theta * theta))
