"""Graph ingestion, normalization, degeneracy ordering and greedy coloring.

The edge-list format accepted here is the plain SNAP/Konect style: one edge
per line as two whitespace-separated integer labels, lines starting with '#'
or '%' ignored. Input is normalized to a simple undirected graph with dense
node ids 0..n-1 assigned in first-appearance order over the kept (non-loop)
edges; the original labels are retained in ``id_map``.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._kernels import peel_kernel, color_kernel


class EdgeListParseError(ValueError):
    """Malformed edge-list input (message carries the offending line number)."""


class Graph:
    """Immutable simple undirected graph in CSR form.

    Attributes
    ----------
    n : number of nodes (dense ids 0..n-1)
    m : number of undirected edges
    indptr : int64 array of length n+1, CSR row pointers
    adj : int32 array of length 2m, sorted neighbor lists
    id_map : int64 array of length n, dense id -> original label
    """

    __slots__ = ("n", "m", "indptr", "adj", "id_map")

    def __init__(self, indptr: np.ndarray, adj: np.ndarray, id_map: np.ndarray):
        self.n = len(indptr) - 1
        self.m = len(adj) // 2
        self.indptr = indptr
        self.adj = adj
        self.id_map = id_map
        indptr.setflags(write=False)
        adj.setflags(write=False)
        id_map.setflags(write=False)

    def neighbors(self, u: int) -> np.ndarray:
        return self.adj[self.indptr[u]:self.indptr[u + 1]]

    def degree(self, u: int) -> int:
        return int(self.indptr[u + 1] - self.indptr[u])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return i < len(row) and row[i] == v

    def edges(self):
        """Yield each undirected edge once as (u, v) with u < v, in dense order."""
        for u in range(self.n):
            for v in self.neighbors(u):
                if u < v:
                    yield u, int(v)

    def adjacency_sets(self) -> list[set[int]]:
        return [set(map(int, self.neighbors(u))) for u in range(self.n)]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.adj, other.adj)
            and np.array_equal(self.id_map, other.id_map)
        )

    def __hash__(self):  # pragma: no cover - identity hashing only
        return id(self)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _from_normalized_edges(pairs: list[tuple[int, int]], id_map: list[int]) -> Graph:
    """Assemble a Graph from deduplicated dense edge pairs."""
    n = len(id_map)
    if n == 0:
        raise EdgeListParseError("no edges")
    e = np.array(pairs, dtype=np.int64).reshape(-1, 2)
    # both directions, sort rows then columns for CSR
    both = np.concatenate([e, e[:, ::-1]])
    order = np.lexsort((both[:, 1], both[:, 0]))
    both = both[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, both[:, 0] + 1, 1)
    np.cumsum(indptr, out=indptr)
    adj = both[:, 1].astype(np.int32)
    return Graph(indptr, adj, np.array(id_map, dtype=np.int64))


def from_edges(edges) -> Graph:
    """Build a Graph from an iterable of (u, v) label pairs.

    Applies the same normalization as :func:`load_edge_list`: self-loops are
    dropped, duplicates merged, labels remapped in first-appearance order.
    """
    dense: dict[int, int] = {}
    id_map: list[int] = []
    seen: set[tuple[int, int]] = set()
    pairs: list[tuple[int, int]] = []
    for a, b in edges:
        a, b = int(a), int(b)
        if a == b:
            continue
        for x in (a, b):
            if x not in dense:
                dense[x] = len(id_map)
                id_map.append(x)
        u, v = dense[a], dense[b]
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    if not pairs:
        raise EdgeListParseError("no edges")
    return _from_normalized_edges(pairs, id_map)


def load_edge_list(source) -> Graph:
    """Parse an edge list into a normalized Graph.

    ``source`` may be a filesystem path, a bytes/str blob, or a file-like
    object. Lines beginning with '#' or '%' and blank lines are skipped.
    Each remaining line must have at least two whitespace-separated integer
    tokens; only the first two are read (extra columns such as weights or
    timestamps are ignored). Self-loops are dropped, duplicate and
    reverse-duplicate edges merged, and labels remapped to dense ids in
    first-appearance order over the kept edges.
    """
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    elif isinstance(source, bytes):
        text = source.decode()
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        data = source.read()
        text = data.decode() if isinstance(data, bytes) else data
    else:
        raise TypeError(f"unsupported source type: {type(source)!r}")

    dense: dict[int, int] = {}
    id_map: list[int] = []
    raw_pairs: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s[0] in "#%":
            continue
        toks = s.split()
        if len(toks) < 2:
            raise EdgeListParseError(f"line {lineno}: expected at least 2 tokens, got {len(toks)}")
        try:
            a = int(toks[0])
            b = int(toks[1])
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: non-integer token in {s!r}") from None
        if a < 0 or b < 0:
            raise EdgeListParseError(f"line {lineno}: negative label in {s!r}")
        if a == b:
            continue  # self-loop
        for x in (a, b):
            if x not in dense:
                dense[x] = len(id_map)
                id_map.append(x)
        raw_pairs.append((dense[a], dense[b]))

    if not raw_pairs:
        raise EdgeListParseError("no edges")

    seen: set[tuple[int, int]] = set()
    pairs: list[tuple[int, int]] = []
    for u, v in raw_pairs:
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    return _from_normalized_edges(pairs, id_map)


def save_edge_list(g: Graph, sink) -> None:
    """Write ``g`` so that reloading reproduces the identical structure.

    Edges are emitted so original labels first appear in dense-id order,
    which makes ``load_edge_list(save_edge_list(g))`` the identity on
    (indptr, adj, id_map). Relies on a structural fact of normalized graphs:
    every node either has a neighbor with a smaller dense id, or is adjacent
    to the next id (both endpoints of the introducing edge were new).
    """
    introduced = np.zeros(g.n, dtype=bool)
    emitted: set[tuple[int, int]] = set()
    lines: list[str] = []

    def emit(u: int, v: int) -> None:
        key = (u, v) if u < v else (v, u)
        emitted.add(key)
        lines.append(f"{g.id_map[u]} {g.id_map[v]}")
        introduced[u] = True
        introduced[v] = True

    for x in range(g.n):
        if introduced[x]:
            continue
        nbrs = g.neighbors(x)
        smaller = nbrs[nbrs < x]
        if len(smaller):
            emit(int(smaller[0]), x)
        else:
            # first appearance was as a leading endpoint; partner got id x+1
            if x + 1 >= g.n or not g.has_edge(x, x + 1):
                raise ValueError(f"node {x} not introducible; graph was not built by normalization")
            emit(x, x + 1)

    for u, v in g.edges():
        if (u, v) not in emitted:
            lines.append(f"{g.id_map[u]} {g.id_map[v]}")
    payload = "\n".join(lines) + "\n"

    if isinstance(sink, (str, Path)):
        Path(sink).write_text(payload)
    elif hasattr(sink, "write"):
        out = payload.encode() if isinstance(sink, (io.RawIOBase, io.BufferedIOBase)) else payload
        try:
            sink.write(out)
        except TypeError:
            sink.write(payload.encode())
    else:
        raise TypeError(f"unsupported sink type: {type(sink)!r}")


@dataclass(frozen=True)
class DegeneracyOrder:
    """Min-degree peeling order with its inverse and the degeneracy value."""

    order: np.ndarray    # peel sequence, order[i] = i-th removed node
    position: np.ndarray # inverse permutation
    delta: int

    def later_neighbors(self, g: Graph, u: int) -> np.ndarray:
        nbrs = g.neighbors(u)
        return nbrs[self.position[nbrs] > self.position[u]]


def degeneracy_order(g: Graph) -> DegeneracyOrder:
    """Peel minimum-degree nodes (ties by smallest id) and record the order.

    delta is the maximum degree observed at removal time, which equals the
    graph degeneracy.
    """
    order, position, delta = peel_kernel(g.indptr, g.adj, g.n)
    order.setflags(write=False)
    position.setflags(write=False)
    return DegeneracyOrder(order=order, position=position, delta=int(delta))


@dataclass(frozen=True)
class Coloring:
    color: np.ndarray
    num_colors: int


def greedy_color(g: Graph, ord: DegeneracyOrder | None = None) -> Coloring:
    """Color nodes in reverse degeneracy order with the smallest free color.

    At most delta earlier-colored neighbors exist at each step, so the
    number of colors is bounded by delta + 1.
    """
    if ord is None:
        ord = degeneracy_order(g)
    color = color_kernel(g.indptr, g.adj, ord.order)
    color.setflags(write=False)
    return Coloring(color=color, num_colors=int(color.max()) + 1)


def induced_subgraph(g: Graph, nodes) -> Graph:
    """Induced subgraph on ``nodes``; new dense ids follow the given order.

    id_map translates back to the original labels of ``g``. Isolated members
    are dropped (the normalized representation has no isolated nodes).
    """
    keep = list(dict.fromkeys(int(x) for x in nodes))
    inset = np.zeros(g.n, dtype=bool)
    inset[keep] = True
    pairs = []
    for u in keep:
        for v in g.neighbors(u):
            if inset[v] and u < v:
                pairs.append((g.id_map[u], g.id_map[v]))
    return from_edges(pairs)
