"""Succinct clique tree: build, k-filter, per-pair counts, serialization.

A forest is a flat sequence of (hold, pivot) pairs. Each pair encodes the
clique family {hold ∪ C' | C' ⊆ pivots}; over all pairs these families
disjointly partition every clique of the graph. The build runs the pivot
recursion once per node in degeneracy order over that node's later
neighbors, which bounds every pair by the degeneracy + 1.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from math import comb
from pathlib import Path
from itertools import combinations

import numpy as np

from .graph import Graph, DegeneracyOrder, degeneracy_order
from ._kernels import sct_build_kernel

_MAGIC = b"SCTF"
_VERSION = 1
_INT64_MAX = (1 << 63) - 1


@dataclass(frozen=True)
class SctPair:
    hold: tuple[int, ...]
    pivots: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.hold) + len(self.pivots)


class SctForest:
    """Flat pair storage: per-pair hold/pivot lengths plus a member array.

    ``members`` holds each pair's hold nodes first, then its pivot nodes.
    ``k`` is None for an unfiltered forest and the filter value otherwise.
    """

    __slots__ = ("n", "k", "h_len", "p_len", "off", "members")

    def __init__(self, n, k, h_len, p_len, members):
        self.n = int(n)
        self.k = k
        self.h_len = h_len
        self.p_len = p_len
        off = np.zeros(len(h_len) + 1, dtype=np.int64)
        np.cumsum(h_len.astype(np.int64) + p_len.astype(np.int64), out=off[1:])
        self.off = off
        self.members = members

    @property
    def eta(self) -> int:
        return len(self.h_len)

    def pair(self, i: int) -> SctPair:
        o = self.off[i]
        h = int(self.h_len[i])
        p = int(self.p_len[i])
        return SctPair(
            hold=tuple(int(x) for x in self.members[o:o + h]),
            pivots=tuple(int(x) for x in self.members[o + h:o + h + p]),
        )

    def __iter__(self):
        return (self.pair(i) for i in range(self.eta))

    def __len__(self):
        return self.eta

    def max_pair_size(self) -> int:
        if self.eta == 0:
            return 0
        return int((self.h_len.astype(np.int64) + self.p_len).max())

    def clique_count(self, k: int | None = None):
        """Exact |C_k(V)| as a Python int (arbitrary precision)."""
        if k is None:
            k = self.k
        if k is None:
            raise ValueError("forest is unfiltered; pass k explicitly")
        total = 0
        for i in range(self.eta):
            h = int(self.h_len[i])
            p = int(self.p_len[i])
            sel = k - h
            if 0 <= sel <= p:
                total += comb(p, sel)
        return total

    def pair_counts_int64(self, k: int | None = None) -> np.ndarray:
        """Per-pair k-clique counts as int64; raises if any count overflows."""
        if k is None:
            k = self.k
        if k is None:
            raise ValueError("forest is unfiltered; pass k explicitly")
        out = np.zeros(self.eta, dtype=np.int64)
        for i in range(self.eta):
            h = int(self.h_len[i])
            p = int(self.p_len[i])
            sel = k - h
            c = comb(p, sel) if 0 <= sel <= p else 0
            if c > _INT64_MAX:
                raise OverflowError(
                    f"pair {i} encodes {c} {k}-cliques, beyond 64-bit range"
                )
            out[i] = c
        return out


def build_sct(g: Graph, ord: DegeneracyOrder | None = None) -> SctForest:
    """Build the unfiltered forest over all cliques of ``g``.

    Roots follow the degeneracy order; at each recursion state the pivot is
    the candidate with the most candidate neighbors (ties to the smallest
    dense id), which keeps eta reproducible.
    """
    if ord is None:
        ord = degeneracy_order(g)
    h_len, p_len, members, eta = sct_build_kernel(g.indptr, g.adj, ord.order, ord.position)
    return SctForest(g.n, None, h_len, p_len, members)


def filter_pairs(f: SctForest, k: int) -> SctForest:
    """Retain pairs with |hold| <= k and |hold|+|pivots| >= k.

    The surviving pairs' k-clique families disjointly partition C_k(V).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    sizes = f.h_len.astype(np.int64) + f.p_len
    keep = (f.h_len <= k) & (sizes >= k)
    idx = np.flatnonzero(keep)
    total = int((f.h_len[idx].astype(np.int64) + f.p_len[idx]).sum())
    members = np.empty(total, dtype=np.int32)
    pos = 0
    for i in idx:
        o = f.off[i]
        ln = int(f.h_len[i]) + int(f.p_len[i])
        members[pos:pos + ln] = f.members[o:o + ln]
        pos += ln
    return SctForest(f.n, k, f.h_len[idx].copy(), f.p_len[idx].copy(), members)


def _check_pair_k(p: SctPair, k: int) -> None:
    h = len(p.hold)
    if k < h or k > p.size:
        raise ValueError(f"k={k} outside [|hold|={h}, |pair|={p.size}]")


def pair_count(p: SctPair, k: int) -> int:
    """Number of k-cliques encoded by the pair: C(|pivots|, k - |hold|)."""
    _check_pair_k(p, k)
    return comb(len(p.pivots), k - len(p.hold))


def hold_coverage(p: SctPair, k: int) -> int:
    """k-cliques of the pair containing a given hold node (all of them)."""
    _check_pair_k(p, k)
    return comb(len(p.pivots), k - len(p.hold))


def pivot_coverage(p: SctPair, k: int) -> int:
    """k-cliques of the pair containing a given pivot node."""
    _check_pair_k(p, k)
    sel = k - len(p.hold)
    if sel == 0:
        return 0
    return comb(len(p.pivots) - 1, sel - 1)


def enumerate_pair_cliques(p: SctPair, k: int):
    """Yield each k-clique of the pair once, in lexicographic subset order."""
    _check_pair_k(p, k)
    sel = k - len(p.hold)
    piv = tuple(sorted(p.pivots))
    hold = tuple(p.hold)
    for combo in combinations(piv, sel):
        yield tuple(sorted(hold + combo))


def forest_cliques(f: SctForest, k: int | None = None):
    """Stream all k-cliques of the graph from a filtered forest."""
    if k is None:
        k = f.k
    if k is None:
        raise ValueError("forest is unfiltered; pass k explicitly")
    for p in f:
        sel = k - len(p.hold)
        if 0 <= sel <= len(p.pivots):
            yield from enumerate_pair_cliques(p, k)


# ---------------------------------------------------------------------------
# binary serialization
#
# layout (little-endian):
#   magic   4 bytes  b"SCTF"
#   version u8       1
#   flags   u8       bit0 set = unfiltered forest
#   k       varint   filter value (0 when unfiltered)
#   n       varint   node count of the source graph
#   eta     varint   pair count
#   pairs   eta records: varint |hold|, varint |pivots|, then each member
#           node id as a varint, holds first
#
# varints are unsigned LEB128. The writer is deterministic, so a round trip
# is bit-stable.


def _write_varint(buf: bytearray, x: int) -> None:
    if x < 0:
        raise ValueError("varint must be non-negative")
    while True:
        b = x & 0x7F
        x >>= 7
        if x:
            buf.append(b | 0x80)
        else:
            buf.append(b)
            return


def _read_varint(data: bytes, pos: int) -> tuple[int, int]:
    x = 0
    shift = 0
    while True:
        if pos >= len(data):
            raise ValueError("truncated varint")
        b = data[pos]
        pos += 1
        x |= (b & 0x7F) << shift
        if not b & 0x80:
            return x, pos
        shift += 7
        if shift > 70:
            raise ValueError("varint too long")


def save_forest(f: SctForest, sink) -> None:
    buf = bytearray()
    buf += _MAGIC
    buf.append(_VERSION)
    unfiltered = f.k is None
    buf.append(1 if unfiltered else 0)
    _write_varint(buf, 0 if unfiltered else f.k)
    _write_varint(buf, f.n)
    _write_varint(buf, f.eta)
    for i in range(f.eta):
        o = f.off[i]
        h = int(f.h_len[i])
        p = int(f.p_len[i])
        _write_varint(buf, h)
        _write_varint(buf, p)
        for x in f.members[o:o + h + p]:
            _write_varint(buf, int(x))
    payload = bytes(buf)
    if isinstance(sink, (str, Path)):
        Path(sink).write_bytes(payload)
    elif hasattr(sink, "write"):
        sink.write(payload)
    else:
        raise TypeError(f"unsupported sink type: {type(sink)!r}")


def load_forest(source) -> SctForest:
    if isinstance(source, (str, Path)):
        data = Path(source).read_bytes()
    elif isinstance(source, bytes):
        data = source
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        data = source.read()
    else:
        raise TypeError(f"unsupported source type: {type(source)!r}")
    if data[:4] != _MAGIC:
        raise ValueError("bad magic; not a forest file")
    if data[4] != _VERSION:
        raise ValueError(f"unsupported version {data[4]}")
    unfiltered = bool(data[5] & 1)
    pos = 6
    k, pos = _read_varint(data, pos)
    n, pos = _read_varint(data, pos)
    eta, pos = _read_varint(data, pos)
    h_len = np.empty(eta, dtype=np.int32)
    p_len = np.empty(eta, dtype=np.int32)
    members_list: list[int] = []
    for i in range(eta):
        h, pos = _read_varint(data, pos)
        p, pos = _read_varint(data, pos)
        h_len[i] = h
        p_len[i] = p
        for _ in range(h + p):
            x, pos = _read_varint(data, pos)
            members_list.append(x)
    if pos != len(data):
        raise ValueError("trailing bytes after forest payload")
    members = np.array(members_list, dtype=np.int32) if members_list else np.empty(0, np.int32)
    return SctForest(n, None if unfiltered else k, h_len, p_len, members)
