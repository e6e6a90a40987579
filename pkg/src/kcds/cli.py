"""Command line front ends.

`dense` runs one solve end to end (load, order/color, build, solve,
extract) and emits the JSON report on stdout or to --out, with stage
timings on stderr. `oracle` exposes the brute-force reference
computations for scripting acceptance checks.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from .graph import load_edge_list, degeneracy_order, greedy_color, EdgeListParseError
from .sct import build_sct, filter_pairs
from .fw import kcl_run, psctl_run
from .extract import rank_sort, best_prefix_exact, best_prefix_sampled
from .sampler import spath_run
from .oracle import OracleLimits, brute_cliques, brute_densest, brute_color_paths


@dataclass
class RunConfig:
    input: str
    algo: str
    k: int
    T: int = 10
    t: int = 500_000
    seed: int = 0
    tie: str = "random"
    shuffle_pairs: bool = False
    plateau_only: bool = False
    estimate: bool = False
    out: str | None = None


class _Stage:
    """Context manager printing elapsed wall time to stderr."""

    def __init__(self, name: str):
        self.name = name

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        ms = (time.perf_counter() - self.start) * 1000.0
        print(f"[{self.name}] {ms:.1f} ms", file=sys.stderr)
        return False


def run(cfg: RunConfig):
    """Execute one configured solve and return the filled DensityReport."""
    total_start = time.perf_counter()
    with _Stage("load"):
        g = load_edge_list(cfg.input)
    with _Stage("order/color"):
        ordering = degeneracy_order(g)

    if cfg.algo in ("kcl", "psctl"):
        with _Stage("sct-build"):
            forest = build_sct(g, ordering)
            eta = forest.eta
            filtered = filter_pairs(forest, cfg.k)
        with _Stage("solve"):
            if cfg.algo == "kcl":
                r = kcl_run(filtered, g.n, cfg.T, seed=cfg.seed, k=cfg.k, tie=cfg.tie)
            else:
                r = psctl_run(filtered, g.n, cfg.T, seed=cfg.seed,
                              shuffle_pairs=cfg.shuffle_pairs)
        with _Stage("extract"):
            order = rank_sort(r)
            rep = best_prefix_exact(
                g, order, cfg.k,
                plateau_only_ranks=r.r if cfg.plateau_only else None,
            )
        rep.t = None
    elif cfg.algo == "spath":
        with _Stage("solve"):
            r, s = spath_run(g, cfg.k, cfg.t, cfg.T, seed=cfg.seed, tie=cfg.tie)
        with _Stage("extract"):
            order = rank_sort(r)
            rep = best_prefix_sampled(order, s, g)
            if cfg.estimate and rep.density_true_estimate is not None:
                rep.density = rep.density_true_estimate
                rep.density_mode = "estimated"
        rep.t = cfg.t
    else:
        raise ValueError(f"unknown algorithm {cfg.algo!r}")

    rep.solver = cfg.algo
    rep.k = cfg.k
    rep.T = cfg.T
    rep.seed = cfg.seed
    rep.delta = ordering.delta
    rep.eta = eta if cfg.algo in ("kcl", "psctl") else None
    rep.wall_ms = (time.perf_counter() - total_start) * 1000.0
    return rep


def _dense_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dense",
        description="k-clique densest subgraph search (Frank-Wolfe solvers)",
    )
    p.add_argument("input", help="edge list file (whitespace separated, # comments)")
    p.add_argument("--algo", required=True, choices=["kcl", "psctl", "spath"])
    p.add_argument("--k", type=int, required=True, help="clique size (>= 2)")
    p.add_argument("--iters", type=int, default=10, metavar="T",
                   help="rank-update passes (default 10)")
    p.add_argument("--samples", type=int, default=500_000, metavar="t",
                   help="path draws for spath (default 500000)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tie", choices=["random", "smallest-id"], default="random",
                   help="tie rule when several members share the minimum rank")
    p.add_argument("--shuffle-pairs", action="store_true",
                   help="psctl: visit pairs in a fresh random order each pass")
    p.add_argument("--plateau-only", action="store_true",
                   help="evaluate only prefixes ending at a rank change (heuristic)")
    p.add_argument("--estimate", action="store_true",
                   help="spath: report the rescaled true-density estimate")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    return p


def dense_main(argv=None) -> int:
    p = _dense_parser()
    args = p.parse_args(argv)
    if args.k < 2:
        p.error("--k must be >= 2")
    if args.iters < 1:
        p.error("--iters must be >= 1")
    if args.algo == "spath" and args.samples < 1:
        p.error("--samples must be >= 1 for spath")
    if args.shuffle_pairs and args.algo != "psctl":
        p.error("--shuffle-pairs only applies to psctl")
    if args.estimate and args.algo != "spath":
        p.error("--estimate only applies to spath")
    if args.plateau_only and args.algo == "spath":
        p.error("--plateau-only applies to the exact solvers")
    cfg = RunConfig(
        input=args.input, algo=args.algo, k=args.k, T=args.iters,
        t=args.samples, seed=args.seed, tie=args.tie,
        shuffle_pairs=args.shuffle_pairs, plateau_only=args.plateau_only,
        estimate=args.estimate, out=args.out,
    )
    try:
        rep = run(cfg)
    except (EdgeListParseError, OSError, ValueError, OverflowError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    line = rep.to_json()
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(line + "\n")
        print(f"density={float(rep.density)} size={rep.size} -> {cfg.out}")
    else:
        print(line)
    return 0


def _oracle_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="oracle",
        description="brute-force reference answers (desk scale only)",
    )
    sub = p.add_subparsers(dest="cmd", required=True)
    for name, desc in [
        ("cliques", "count k-cliques by exhaustive subset check"),
        ("densest", "exhaustive densest-subgraph search"),
        ("color-paths", "count color-descending k-node paths"),
    ]:
        sp = sub.add_parser(name, help=desc)
        sp.add_argument("input")
        sp.add_argument("--k", type=int, required=True)
    p_d = sub.choices["densest"]
    p_d.add_argument("--nodes", action="store_true",
                     help="also print the chosen node set (original labels)")
    return p


def oracle_main(argv=None) -> int:
    p = _oracle_parser()
    args = p.parse_args(argv)
    if args.k < 1:
        p.error("--k must be >= 1")
    limits = OracleLimits.from_env()
    try:
        g = load_edge_list(args.input)
        if args.cmd == "cliques":
            print(len(brute_cliques(g, args.k, limits)))
        elif args.cmd == "densest":
            nodes, dens = brute_densest(g, args.k, limits)
            print(float(dens))
            if args.nodes:
                labels = sorted(int(g.id_map[u]) for u in nodes)
                print(" ".join(map(str, labels)))
        else:
            coloring = greedy_color(g)
            print(len(brute_color_paths(g, coloring, args.k, limits)))
    except (EdgeListParseError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(dense_main())
