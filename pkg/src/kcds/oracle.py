"""Brute-force oracles: exhaustive clique enumeration, exhaustive densest
subset search, exhaustive color-path enumeration.

No code is shared with the solver-side enumeration paths; correctness here
comes from checking everything. Caps guard the exponential loops and can be
raised through environment variables (KCDS_ORACLE_MAX_SUBSETS,
KCDS_ORACLE_MAX_CLIQUES).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .graph import Graph, Coloring


@dataclass
class OracleLimits:
    max_nodes_subsets: int = 16
    max_nodes_cliques: int = 30

    @classmethod
    def from_env(cls) -> "OracleLimits":
        return cls(
            max_nodes_subsets=int(os.environ.get("KCDS_ORACLE_MAX_SUBSETS", 16)),
            max_nodes_cliques=int(os.environ.get("KCDS_ORACLE_MAX_CLIQUES", 30)),
        )


_combo_cache: dict[tuple[int, int], np.ndarray] = {}


def _all_ksubsets(n: int, k: int) -> np.ndarray:
    """All k-subsets of range(n) as an array of shape (C(n,k), k), cached."""
    key = (n, k)
    if key not in _combo_cache:
        combos = np.array(list(combinations(range(n), k)), dtype=np.int64)
        _combo_cache[key] = combos.reshape(-1, k)
    return _combo_cache[key]


def brute_cliques(g: Graph, k: int, limits: OracleLimits | None = None) -> set[frozenset[int]]:
    """Every k-subset passing the pairwise adjacency check, as dense-id
    frozensets. No pruning."""
    limits = limits or OracleLimits.from_env()
    if g.n > limits.max_nodes_cliques:
        raise ValueError(f"n={g.n} exceeds oracle cap {limits.max_nodes_cliques}")
    if k < 1 or k > g.n:
        return set()
    A = np.zeros((g.n, g.n), dtype=bool)
    for u in range(g.n):
        A[u, g.neighbors(u)] = True
    combos = _all_ksubsets(g.n, k)
    ok = np.ones(len(combos), dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            ok &= A[combos[:, i], combos[:, j]]
    return {frozenset(map(int, row)) for row in combos[ok]}


def brute_densest(
    g: Graph, k: int, limits: OracleLimits | None = None
) -> tuple[frozenset[int], Fraction]:
    """Exhaustive maximum of |C_k(S)|/|S| over all non-empty subsets.

    Among maximizers returns the inclusion-maximal one, which is unique: the
    union of two maximizers is again a maximizer. Nodes are dense ids, like
    every in-memory result here; map through ``g.id_map`` to compare with
    report output, which speaks original labels.
    """
    limits = limits or OracleLimits.from_env()
    if g.n > limits.max_nodes_subsets:
        raise ValueError(f"n={g.n} exceeds oracle cap {limits.max_nodes_subsets}")
    cliques = brute_cliques(g, k, limits=OracleLimits(max_nodes_cliques=limits.max_nodes_subsets))
    masks = np.array(
        [sum(1 << u for u in c) for c in cliques] or [0], dtype=np.int64
    )
    have = bool(cliques)
    best_cnt = 0
    best_size = 1
    best_mask = 0
    best_pop = 0
    for mask in range(1, 1 << g.n):
        size = mask.bit_count()
        cnt = int(np.count_nonzero((masks & ~mask) == 0)) if have else 0
        # exact comparison: cnt/size vs best_cnt/best_size
        lhs = cnt * best_size
        rhs = best_cnt * size
        if lhs > rhs or (cnt > 0 and lhs == rhs and size > best_pop):
            best_cnt = cnt
            best_size = size
            best_mask = mask
            best_pop = size
    nodes = frozenset(u for u in range(g.n) if best_mask >> u & 1)
    return nodes, Fraction(best_cnt, best_size)


def brute_color_paths(
    g: Graph, c: Coloring, k: int, limits: OracleLimits | None = None
) -> set[tuple[int, ...]]:
    """All color-descending simple paths of k vertices, as node sequences."""
    limits = limits or OracleLimits.from_env()
    if g.n > limits.max_nodes_cliques:
        raise ValueError(f"n={g.n} exceeds oracle cap {limits.max_nodes_cliques}")
    col = c.color
    out: set[tuple[int, ...]] = set()

    def extend(path: list[int]) -> None:
        if len(path) == k:
            out.add(tuple(path))
            return
        u = path[-1]
        for v in g.neighbors(u):
            if col[v] < col[u]:
                path.append(int(v))
                extend(path)
                path.pop()

    if k == 1:
        return {(u,) for u in range(g.n)}
    for u in range(g.n):
        extend([u])
    return out
