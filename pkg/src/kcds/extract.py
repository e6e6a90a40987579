"""Turn a rank vector into an answer: sort, sweep prefixes, report.

The exact sweep maintains prefix clique counts incrementally: adding node u
contributes the number of (k-1)-cliques inside N(u) ∩ prefix, counted by a
pivot recursion on that neighborhood. Densities are exact rationals and the
argmax comparison is done in exact integer arithmetic.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .graph import Graph
from .fw import RankVector
from ._kernels import sweep_added_counts

_INT64_MAX = (1 << 63) - 1

# Single-line JSON report contract. "flags" is the only optional key; it
# carries conditions like "no-k-clique" or "insufficient-samples".
REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "solver": {"type": "string"},
        "k": {"type": "integer", "minimum": 1},
        "T": {"type": ["integer", "null"], "minimum": 0},
        "t": {"type": ["integer", "null"], "minimum": 0},
        "seed": {"type": ["integer", "null"]},
        "density": {"type": "number"},
        "density_mode": {"enum": ["exact", "sampled", "estimated"]},
        "clique_count": {"type": ["integer", "null"]},
        "size": {"type": "integer", "minimum": 0},
        "nodes": {"type": "array", "items": {"type": "integer"}},
        "eta": {"type": ["integer", "null"]},
        "delta": {"type": ["integer", "null"]},
        "wall_ms": {"type": "number"},
        "flags": {"type": "array", "items": {"type": "string"}},
        "density_true_estimate": {"type": ["number", "null"]},
    },
    "required": [
        "solver", "k", "T", "t", "seed", "density", "density_mode",
        "clique_count", "size", "nodes", "eta", "delta", "wall_ms",
    ],
    "additionalProperties": False,
}


@dataclass
class DensityReport:
    nodes: list[int]
    k: int
    density: Fraction
    density_mode: str               # "exact" | "sampled" | "estimated"
    clique_count: int | None
    solver: str = ""
    T: int | None = None
    t: int | None = None
    seed: int | None = None
    eta: int | None = None
    delta: int | None = None
    wall_ms: float = 0.0
    flags: list[str] = field(default_factory=list)
    density_true_estimate: Fraction | None = None

    @property
    def size(self) -> int:
        return len(self.nodes)

    def to_dict(self) -> dict:
        d = {
            "solver": self.solver,
            "k": self.k,
            "T": self.T,
            "t": self.t,
            "seed": self.seed,
            "density": float(self.density),
            "density_mode": self.density_mode,
            "clique_count": self.clique_count,
            "size": self.size,
            "nodes": [int(x) for x in self.nodes],
            "eta": self.eta,
            "delta": self.delta,
            "wall_ms": round(self.wall_ms, 3),
        }
        if self.flags:
            d["flags"] = list(self.flags)
        if self.density_true_estimate is not None:
            d["density_true_estimate"] = float(self.density_true_estimate)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))


def rank_sort(r: RankVector) -> np.ndarray:
    """Node order by rank non-increasing, ties by smallest dense id."""
    n = len(r.r)
    return np.lexsort((np.arange(n), -r.r))


def _sweep_binom_table(max_rows: int, kk: int) -> np.ndarray:
    table = np.zeros((max_rows + 1, kk + 1), dtype=np.int64)
    for a in range(max_rows + 1):
        for b in range(min(a, kk) + 1):
            c = comb(a, b)
            if c > _INT64_MAX:
                raise OverflowError(
                    f"C({a},{b}) exceeds 64-bit range; clique counts too large for the sweep"
                )
            table[a, b] = c
    return table


def prefix_clique_counts(g: Graph, order: np.ndarray, k: int) -> np.ndarray:
    """added[i] = k-cliques completed when order[i] joins the prefix."""
    order = np.ascontiguousarray(order, dtype=np.int64)
    maxdeg = int(g.degrees().max()) if g.n else 0
    binom = _sweep_binom_table(maxdeg, max(k - 1, 0))
    return sweep_added_counts(g.indptr, g.adj, order, k, binom)


def _argmax_prefix(added: np.ndarray, candidates=None, prefer_larger: bool = True) -> tuple[int, int]:
    """Best prefix index by exact rational comparison.

    ``prefer_larger`` picks the largest prefix on exact density ties (the
    densest set of record is inclusion-maximal); the sampled sweep keeps
    the smallest instead. Returns (index of last node in the chosen
    prefix, its clique count); (-1, 0) when every prefix has count zero.
    """
    best_i = -1
    best_cnt = 0
    best_size = 1
    cum = 0
    cand = None if candidates is None else set(int(c) for c in candidates)
    for i, a in enumerate(added):
        cum += int(a)
        if cand is not None and i not in cand:
            continue
        size = i + 1
        lhs = cum * best_size
        rhs = best_cnt * size
        if lhs > rhs or (prefer_larger and lhs == rhs and best_cnt > 0 and size > best_size):
            best_i = i
            best_cnt = cum
            best_size = size
    return best_i, best_cnt


def best_prefix_exact(
    g: Graph, order: np.ndarray, k: int, plateau_only_ranks: np.ndarray | None = None
) -> DensityReport:
    """Sweep all prefixes of ``order`` and return the exact density argmax.

    Ties on equal density go to the largest prefix (the densest set of
    record is inclusion-maximal). With ``plateau_only_ranks`` (the rank
    vector the order came from) only prefixes ending at a rank boundary are
    evaluated; documented heuristic, the counts are still exact.
    """
    start = time.perf_counter()
    added = prefix_clique_counts(g, order, k)
    candidates = None
    if plateau_only_ranks is not None:
        rr = plateau_only_ranks
        candidates = [
            i for i in range(g.n)
            if i == g.n - 1 or rr[order[i]] != rr[order[i + 1]]
        ]
    best_i, best_cnt = _argmax_prefix(added, candidates)
    wall = (time.perf_counter() - start) * 1000.0
    if best_i < 0:
        return DensityReport(
            nodes=[], k=k, density=Fraction(0), density_mode="exact",
            clique_count=0, flags=["no-k-clique"], wall_ms=wall,
        )
    chosen = sorted(int(g.id_map[u]) for u in order[:best_i + 1])
    return DensityReport(
        nodes=chosen, k=k, density=Fraction(best_cnt, best_i + 1),
        density_mode="exact", clique_count=best_cnt, wall_ms=wall,
    )


def best_prefix_sampled(order: np.ndarray, s, g: Graph | None = None) -> DensityReport:
    """One sweep over the sampled clique set: a clique enters the prefix
    when its last member (by order position) joins.

    The reported density is the sampled density ρ'_k; when the sample set
    carries the path total W the rescaled true-density estimate is attached
    as ``density_true_estimate``. Node labels translate through ``g`` when
    given, else dense ids are reported.
    """
    from .sampler import SampleSet, estimate_true_density

    start = time.perf_counter()
    n = len(order)
    pos = np.empty(n, dtype=np.int64)
    pos[np.asarray(order)] = np.arange(n)
    flags: list[str] = []
    if s.cliques.shape[0] == 0:
        wall = (time.perf_counter() - start) * 1000.0
        return DensityReport(
            nodes=[], k=int(s.k), density=Fraction(0), density_mode="sampled",
            clique_count=0, flags=["insufficient-samples"], wall_ms=wall,
        )
    last_pos = pos[s.cliques].max(axis=1)
    added = np.bincount(last_pos, minlength=n).astype(np.int64)
    best_i, best_cnt = _argmax_prefix(added, prefer_larger=False)
    wall = (time.perf_counter() - start) * 1000.0
    if best_i < 0:
        return DensityReport(
            nodes=[], k=int(s.k), density=Fraction(0), density_mode="sampled",
            clique_count=0, flags=["insufficient-samples"], wall_ms=wall,
        )
    dense_nodes = [int(u) for u in order[:best_i + 1]]
    est = None
    if s.t > 0:
        est = estimate_true_density(s, dense_nodes)
    nodes = sorted(int(g.id_map[u]) for u in dense_nodes) if g is not None else sorted(dense_nodes)
    return DensityReport(
        nodes=nodes, k=int(s.k), density=Fraction(best_cnt, best_i + 1),
        density_mode="sampled", clique_count=None, wall_ms=wall,
        density_true_estimate=est, flags=flags,
    )
