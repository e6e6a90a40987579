"""Numba kernels shared across the package.

Everything here operates on flat numpy arrays so it can be jit-compiled and
cached. Randomness uses an explicit splitmix64 state (uint64[1]) threaded
through the kernels, which keeps runs byte-reproducible across platforms.
Bitsets are arrays of uint64 words; all constants are wrapped in np.uint64
to avoid numba's int-literal promotion pitfalls.
"""

from __future__ import annotations

import numpy as np
from numba import njit

U0 = np.uint64(0)
U1 = np.uint64(1)
U6 = np.uint64(6)
U64ALL = np.uint64(0xFFFFFFFFFFFFFFFF)

_SM_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_SM_M1 = np.uint64(0xBF58476D1CE4E5B9)
_SM_M2 = np.uint64(0x94D049BB133111EB)

_C1 = np.uint64(0x5555555555555555)
_C2 = np.uint64(0x3333333333333333)
_C4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_CP = np.uint64(0x0101010101010101)


@njit(cache=True)
def next_u64(state):
    state[0] = state[0] + _SM_GAMMA
    z = state[0]
    z = (z ^ (z >> np.uint64(30))) * _SM_M1
    z = (z ^ (z >> np.uint64(27))) * _SM_M2
    return z ^ (z >> np.uint64(31))


@njit(cache=True)
def randbelow(state, bound):
    """Exact uniform integer in [0, bound) via rejection sampling."""
    b = np.uint64(bound)
    threshold = (U0 - b) % b
    x = next_u64(state)
    while x < threshold:
        x = next_u64(state)
    return np.int64(x % b)


@njit(cache=True)
def _popcnt(x):
    x = x - ((x >> U1) & _C1)
    x = (x & _C2) + ((x >> np.uint64(2)) & _C2)
    x = (x + (x >> np.uint64(4))) & _C4
    return np.int64((x * _CP) >> np.uint64(56))


@njit(cache=True)
def _ctz(x):
    # x must be nonzero; isolate lowest bit, popcount below it
    return _popcnt((x & (U0 - x)) - U1)


# ---------------------------------------------------------------------------
# degeneracy peel (min-degree, ties by smallest id) via an array heap with
# lazy deletion; behaviorally identical to a smallest-id bucket queue


@njit(cache=True)
def _heap_push(heap, size, key):
    i = size
    heap[i] = key
    while i > 0:
        p = (i - 1) // 2
        if heap[p] <= heap[i]:
            break
        heap[p], heap[i] = heap[i], heap[p]
        i = p
    return size + 1


@njit(cache=True)
def _heap_pop(heap, size):
    top = heap[0]
    size -= 1
    heap[0] = heap[size]
    i = 0
    while True:
        l = 2 * i + 1
        r = l + 1
        small = i
        if l < size and heap[l] < heap[small]:
            small = l
        if r < size and heap[r] < heap[small]:
            small = r
        if small == i:
            break
        heap[i], heap[small] = heap[small], heap[i]
        i = small
    return top, size


@njit(cache=True)
def peel_kernel(indptr, adj, n):
    deg = np.empty(n, np.int64)
    for u in range(n):
        deg[u] = indptr[u + 1] - indptr[u]
    removed = np.zeros(n, np.bool_)
    heap = np.empty(n + len(adj) + 1, np.int64)
    size = 0
    for u in range(n):
        size = _heap_push(heap, size, deg[u] * n + u)
    order = np.empty(n, np.int64)
    position = np.empty(n, np.int64)
    delta = np.int64(0)
    for i in range(n):
        while True:
            key, size = _heap_pop(heap, size)
            u = key % n
            d = key // n
            if not removed[u] and d == deg[u]:
                break
        removed[u] = True
        order[i] = u
        position[u] = i
        if deg[u] > delta:
            delta = deg[u]
        for j in range(indptr[u], indptr[u + 1]):
            v = adj[j]
            if not removed[v]:
                deg[v] -= 1
                size = _heap_push(heap, size, deg[v] * n + v)
    return order, position, delta


@njit(cache=True)
def color_kernel(indptr, adj, order):
    n = len(order)
    color = np.full(n, -1, np.int32)
    used = np.zeros(n + 1, np.bool_)
    for i in range(n - 1, -1, -1):
        u = order[i]
        for j in range(indptr[u], indptr[u + 1]):
            c = color[adj[j]]
            if c >= 0:
                used[c] = True
        c = 0
        while used[c]:
            c += 1
        color[u] = c
        for j in range(indptr[u], indptr[u + 1]):
            c2 = color[adj[j]]
            if c2 >= 0:
                used[c2] = False
    return color


# ---------------------------------------------------------------------------
# succinct clique tree construction (pivot recursion per degeneracy root)


@njit(cache=True)
def _full_mask(cw, d, W):
    for wi in range(W):
        bits = d - wi * 64
        if bits >= 64:
            cw[wi] = U64ALL
        elif bits > 0:
            cw[wi] = (U1 << np.uint64(bits)) - U1
        else:
            cw[wi] = U0


@njit(cache=True)
def sct_build_kernel(indptr, adj, order, position):
    n = len(order)

    out_h = np.empty(1024, np.int32)
    out_p = np.empty(1024, np.int32)
    out_cap = 1024
    eta = 0
    mem = np.empty(4096, np.int32)
    mem_cap = 4096
    mtop = 0

    # maximum later-neighborhood size determines bitset width
    dmax = 0
    for v in range(n):
        cnt = 0
        for j in range(indptr[v], indptr[v + 1]):
            if position[adj[j]] > position[v]:
                cnt += 1
        if cnt > dmax:
            dmax = cnt
    W = (dmax + 63) // 64
    if W == 0:
        W = 1

    S = np.empty(dmax + 1, np.int32)
    adjloc = np.empty((dmax + 1) * W, np.uint64)
    path_node = np.empty(dmax + 2, np.int32)
    path_flag = np.empty(dmax + 2, np.uint8)
    qtmp = np.empty(dmax + 1, np.int32)

    st_cap = 1024
    st_node = np.empty(st_cap, np.int32)
    st_flag = np.empty(st_cap, np.uint8)
    st_depth = np.empty(st_cap, np.int32)
    st_coff = np.empty(st_cap, np.int64)

    cb_cap = 4096
    cbuf = np.empty(cb_cap, np.uint64)

    tmp = np.empty(W, np.uint64)

    for oi in range(n):
        v = order[oi]
        d = 0
        for j in range(indptr[v], indptr[v + 1]):
            w = adj[j]
            if position[w] > position[v]:
                S[d] = w
                d += 1
        # local adjacency bitsets over S (S ascends in dense id)
        for i in range(d):
            base = i * W
            for wi in range(W):
                adjloc[base + wi] = U0
            a = indptr[S[i]]
            ae = indptr[S[i] + 1]
            b = 0
            while a < ae and b < d:
                x = adj[a]
                y = S[b]
                if x == y:
                    adjloc[base + b // 64] |= U1 << np.uint64(b % 64)
                    a += 1
                    b += 1
                elif x < y:
                    a += 1
                else:
                    b += 1

        sp = 0
        ctop = 0
        # root frame: no node, full candidate set
        st_node[0] = -1
        st_flag[0] = 0
        st_depth[0] = 0
        st_coff[0] = 0
        _full_mask(cbuf[0:W], d, W)
        ctop = W
        sp = 1

        while sp > 0:
            sp -= 1
            node = st_node[sp]
            flag = st_flag[sp]
            depth = st_depth[sp]
            coff = st_coff[sp]
            if node >= 0:
                path_node[depth - 1] = node
                path_flag[depth - 1] = flag

            empty = True
            for wi in range(W):
                if cbuf[coff + wi] != U0:
                    empty = False
                    break

            if empty:
                # emit pair: hold = v plus path holds, pivots = path pivots
                h_cnt = 1
                p_cnt = 0
                for t in range(depth):
                    if path_flag[t] == 0:
                        h_cnt += 1
                    else:
                        p_cnt += 1
                need = h_cnt + p_cnt
                if mtop + need > mem_cap:
                    newcap = mem_cap * 2
                    while newcap < mtop + need:
                        newcap *= 2
                    newmem = np.empty(newcap, np.int32)
                    newmem[:mtop] = mem[:mtop]
                    mem = newmem
                    mem_cap = newcap
                if eta + 1 > out_cap:
                    newcap = out_cap * 2
                    nh = np.empty(newcap, np.int32)
                    nh[:eta] = out_h[:eta]
                    out_h = nh
                    np_ = np.empty(newcap, np.int32)
                    np_[:eta] = out_p[:eta]
                    out_p = np_
                    out_cap = newcap
                mem[mtop] = v
                mtop += 1
                for t in range(depth):
                    if path_flag[t] == 0:
                        mem[mtop] = S[path_node[t]]
                        mtop += 1
                for t in range(depth):
                    if path_flag[t] == 1:
                        mem[mtop] = S[path_node[t]]
                        mtop += 1
                out_h[eta] = h_cnt
                out_p[eta] = p_cnt
                eta += 1
                continue

            # pivot p maximizing |N(p) & C|, ties by smallest local index
            best_i = -1
            best_c = np.int64(-1)
            for wi in range(W):
                word = cbuf[coff + wi]
                while word != U0:
                    low = word & (U0 - word)
                    li = wi * 64 + _ctz(word)
                    word ^= low
                    c = np.int64(0)
                    base = li * W
                    for w2 in range(W):
                        c += _popcnt(cbuf[coff + w2] & adjloc[base + w2])
                    if c > best_c:
                        best_c = c
                        best_i = li
            p = best_i

            # q nodes: C minus N(p) minus p, ascending
            nq = 0
            pbase = p * W
            for wi in range(W):
                word = cbuf[coff + wi] & ~adjloc[pbase + wi]
                if wi == p // 64:
                    word &= ~(U1 << np.uint64(p % 64))
                while word != U0:
                    low = word & (U0 - word)
                    qtmp[nq] = wi * 64 + _ctz(word)
                    nq += 1
                    word ^= low

            # make room: nq + 1 children, each W words + 1 frame
            need_frames = nq + 1
            if sp + need_frames > st_cap:
                newcap = st_cap * 2
                while newcap < sp + need_frames:
                    newcap *= 2
                a1 = np.empty(newcap, np.int32)
                a1[:sp] = st_node[:sp]
                st_node = a1
                a2 = np.empty(newcap, np.uint8)
                a2[:sp] = st_flag[:sp]
                st_flag = a2
                a3 = np.empty(newcap, np.int32)
                a3[:sp] = st_depth[:sp]
                st_depth = a3
                a4 = np.empty(newcap, np.int64)
                a4[:sp] = st_coff[:sp]
                st_coff = a4
                st_cap = newcap
            if ctop + need_frames * W > cb_cap:
                newcap = cb_cap * 2
                while newcap < ctop + need_frames * W:
                    newcap *= 2
                nc = np.empty(newcap, np.uint64)
                nc[:ctop] = cbuf[:ctop]
                cbuf = nc
                cb_cap = newcap

            # q children pushed first (reverse order), pivot child last so it
            # pops first; q child j excludes q_0..q_{j-1}
            for jj in range(nq - 1, -1, -1):
                q = qtmp[jj]
                qbase = q * W
                off = ctop + jj * W
                for wi in range(W):
                    tmp[wi] = cbuf[coff + wi] & adjloc[qbase + wi]
                for prev in range(jj):
                    qq = qtmp[prev]
                    tmp[qq // 64] &= ~(U1 << np.uint64(qq % 64))
                for wi in range(W):
                    cbuf[off + wi] = tmp[wi]
                st_node[sp] = q
                st_flag[sp] = 0
                st_depth[sp] = depth + 1
                st_coff[sp] = off
                sp += 1
            ctop += nq * W
            off = ctop
            for wi in range(W):
                cbuf[off + wi] = cbuf[coff + wi] & adjloc[pbase + wi]
            ctop += W
            st_node[sp] = p
            st_flag[sp] = 1
            st_depth[sp] = depth + 1
            st_coff[sp] = off
            sp += 1

    return out_h[:eta].copy(), out_p[:eta].copy(), mem[:mtop].copy(), eta


# ---------------------------------------------------------------------------
# clique counting inside an arbitrary node subset (single pivot recursion,
# counts only; used by the exact prefix sweep)


@njit(cache=True)
def count_cliques_subset(indptr, adj, S, d, kk, binom):
    """Number of kk-cliques in the subgraph induced by S[:d] (sorted ids)."""
    if kk == 0:
        return np.int64(1)
    if d < kk:
        return np.int64(0)
    W = (d + 63) // 64
    adjloc = np.empty(d * W, np.uint64)
    for i in range(d):
        base = i * W
        for wi in range(W):
            adjloc[base + wi] = U0
        a = indptr[S[i]]
        ae = indptr[S[i] + 1]
        b = 0
        while a < ae and b < d:
            x = adj[a]
            y = S[b]
            if x == y:
                adjloc[base + b // 64] |= U1 << np.uint64(b % 64)
                a += 1
                b += 1
            elif x < y:
                a += 1
            else:
                b += 1

    st_cap = 256
    st_h = np.empty(st_cap, np.int32)
    st_pv = np.empty(st_cap, np.int32)
    st_coff = np.empty(st_cap, np.int64)
    cb_cap = 256 * W
    cbuf = np.empty(cb_cap, np.uint64)
    tmp = np.empty(W, np.uint64)
    qtmp = np.empty(d, np.int32)

    _full_mask(cbuf[0:W], d, W)
    st_h[0] = 0
    st_pv[0] = 0
    st_coff[0] = 0
    sp = 1
    ctop = W
    total = np.int64(0)

    while sp > 0:
        sp -= 1
        h = st_h[sp]
        npv = st_pv[sp]
        coff = st_coff[sp]

        empty = True
        for wi in range(W):
            if cbuf[coff + wi] != U0:
                empty = False
                break
        if empty:
            sel = kk - h
            if 0 <= sel <= npv:
                total += binom[npv, sel]
            continue
        if h > kk:
            # cliques below this state are all larger than kk
            continue

        best_i = -1
        best_c = np.int64(-1)
        for wi in range(W):
            word = cbuf[coff + wi]
            while word != U0:
                low = word & (U0 - word)
                li = wi * 64 + _ctz(word)
                word ^= low
                c = np.int64(0)
                base = li * W
                for w2 in range(W):
                    c += _popcnt(cbuf[coff + w2] & adjloc[base + w2])
                if c > best_c:
                    best_c = c
                    best_i = li
        p = best_i
        pbase = p * W

        nq = 0
        for wi in range(W):
            word = cbuf[coff + wi] & ~adjloc[pbase + wi]
            if wi == p // 64:
                word &= ~(U1 << np.uint64(p % 64))
            while word != U0:
                low = word & (U0 - word)
                qtmp[nq] = wi * 64 + _ctz(word)
                nq += 1
                word ^= low

        need_frames = nq + 1
        if sp + need_frames > st_cap:
            newcap = st_cap * 2
            while newcap < sp + need_frames:
                newcap *= 2
            a1 = np.empty(newcap, np.int32)
            a1[:sp] = st_h[:sp]
            st_h = a1
            a2 = np.empty(newcap, np.int32)
            a2[:sp] = st_pv[:sp]
            st_pv = a2
            a3 = np.empty(newcap, np.int64)
            a3[:sp] = st_coff[:sp]
            st_coff = a3
            st_cap = newcap
        if ctop + need_frames * W > cb_cap:
            newcap = cb_cap * 2
            while newcap < ctop + need_frames * W:
                newcap *= 2
            nc = np.empty(newcap, np.uint64)
            nc[:ctop] = cbuf[:ctop]
            cbuf = nc
            cb_cap = newcap

        for jj in range(nq - 1, -1, -1):
            q = qtmp[jj]
            qbase = q * W
            off = ctop + jj * W
            for wi in range(W):
                tmp[wi] = cbuf[coff + wi] & adjloc[qbase + wi]
            for prev in range(jj):
                qq = qtmp[prev]
                tmp[qq // 64] &= ~(U1 << np.uint64(qq % 64))
            for wi in range(W):
                cbuf[off + wi] = tmp[wi]
            st_h[sp] = h + 1
            st_pv[sp] = npv
            st_coff[sp] = off
            sp += 1
        ctop += nq * W
        off = ctop
        for wi in range(W):
            cbuf[off + wi] = cbuf[coff + wi] & adjloc[pbase + wi]
        ctop += W
        st_h[sp] = h
        st_pv[sp] = npv + 1
        st_coff[sp] = off
        sp += 1

    return total


@njit(cache=True)
def sweep_added_counts(indptr, adj, order, k, binom):
    """added[i] = number of (k-1)-cliques in N(order[i]) within the prefix.

    Equivalently the number of k-cliques whose last member in `order` is
    order[i]; the running sum is the exact prefix clique count.
    """
    n = len(order)
    prefpos = np.empty(n, np.int64)
    for i in range(n):
        prefpos[order[i]] = i
    added = np.zeros(n, np.int64)
    S = np.empty(n, np.int64)
    for i in range(n):
        u = order[i]
        d = 0
        for j in range(indptr[u], indptr[u + 1]):
            v = adj[j]
            if prefpos[v] < i:
                S[d] = v
                d += 1
        # S follows adj order, already ascending in dense id
        added[i] = count_cliques_subset(indptr, adj, S, d, k - 1, binom)
    return added


# ---------------------------------------------------------------------------
# kCL passes


@njit(cache=True)
def _kcl_step(members, k, r, state, tie_mode):
    best = r[members[0]]
    for j in range(1, k):
        rv = r[members[j]]
        if rv < best:
            best = rv
    cnt = 0
    for j in range(k):
        if r[members[j]] == best:
            cnt += 1
    if cnt == 1 or tie_mode == 1:
        if tie_mode == 1:
            # smallest dense id among minima
            pick = np.int64(-1)
            for j in range(k):
                u = members[j]
                if r[u] == best and (pick < 0 or u < pick):
                    pick = u
            r[pick] += 1
        else:
            for j in range(k):
                if r[members[j]] == best:
                    r[members[j]] += 1
                    break
    else:
        z = randbelow(state, cnt)
        seen = 0
        for j in range(k):
            if r[members[j]] == best:
                if seen == z:
                    r[members[j]] += 1
                    break
                seen += 1


@njit(cache=True)
def kcl_pass_cliques(cliques, r, state, tie_mode):
    num = cliques.shape[0]
    k = cliques.shape[1]
    scratch = np.empty(k, np.int64)
    for i in range(num):
        for j in range(k):
            scratch[j] = cliques[i, j]
        _kcl_step(scratch, k, r, state, tie_mode)


@njit(cache=True)
def kcl_pass_forest(h_len, p_len, off, members, k, r, state, tie_mode):
    eta = len(h_len)
    scratch = np.empty(k, np.int64)
    idx = np.empty(k, np.int64)
    for pi in range(eta):
        h = h_len[pi]
        p = p_len[pi]
        need = k - h
        if need < 0 or need > p:
            continue
        base = off[pi]
        for j in range(h):
            scratch[j] = members[base + j]
        if need == 0:
            _kcl_step(scratch, k, r, state, tie_mode)
            continue
        pbase = base + h
        for j in range(need):
            idx[j] = j
        while True:
            for j in range(need):
                scratch[h + j] = members[pbase + idx[j]]
            _kcl_step(scratch, k, r, state, tie_mode)
            # next combination in lexicographic order
            j = need - 1
            while j >= 0 and idx[j] == p - need + j:
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for l in range(j + 1, need):
                idx[l] = idx[l - 1] + 1


# ---------------------------------------------------------------------------
# IBatch and PSCTL


@njit(cache=True)
def ibatch_core(ids, ups, mc, n_C, r, state, srt, rv, cur_id, cur_up):
    """Water-fill n_C units onto the mc nodes ids[:mc] with caps ups[:mc].

    Plateaus of the current rank are processed from the lowest; within a
    plateau every node rises together until a cap is hit, the next plateau's
    rank is reached, or fewer units than nodes remain (then n_C random
    distinct nodes get one unit each). Saturated nodes drop out; leftovers
    merge into the next plateau. Mutates r and state.
    """
    # sort member slots by (rank, id) ascending: insertion sort, mc <= delta+1
    for i in range(mc):
        srt[i] = i
    for i in range(1, mc):
        s = srt[i]
        key_r = r[ids[s]]
        key_u = ids[s]
        j = i - 1
        while j >= 0 and (r[ids[srt[j]]] > key_r or (r[ids[srt[j]]] == key_r and ids[srt[j]] > key_u)):
            srt[j + 1] = srt[j]
            j -= 1
        srt[j + 1] = s
    for i in range(mc):
        rv[i] = r[ids[srt[i]]]

    j = 0
    cur_len = 0
    cur_val = np.int64(0)
    while n_C > 0 and (j < mc or cur_len > 0):
        if cur_len == 0:
            cur_val = rv[j]
        # absorb the plateau at cur_val, skipping saturated nodes
        while j < mc and rv[j] == cur_val:
            slot = srt[j]
            if ups[slot] > 0:
                cur_id[cur_len] = ids[slot]
                cur_up[cur_len] = ups[slot]
                cur_len += 1
            j += 1
        if cur_len == 0:
            if j >= mc:
                break
            continue
        if j < mc:
            gap = rv[j] - cur_val
        else:
            gap = np.int64(1) << np.int64(62)

        while n_C > 0 and gap > 0 and cur_len > 0:
            minup = cur_up[0]
            for t in range(1, cur_len):
                if cur_up[t] < minup:
                    minup = cur_up[t]
            w = minup
            if gap < w:
                w = gap
            q = n_C // cur_len
            if q < w:
                w = q
            if w > 0:
                for t in range(cur_len):
                    r[cur_id[t]] += w
                    cur_up[t] -= w
                n_C -= w * cur_len
                gap -= w
                cur_val += w
                # drop saturated
                t = 0
                while t < cur_len:
                    if cur_up[t] == 0:
                        cur_len -= 1
                        cur_id[t] = cur_id[cur_len]
                        cur_up[t] = cur_up[cur_len]
                    else:
                        t += 1
            else:
                # n_C < cur_len: one unit each to n_C uniform distinct nodes
                for t in range(n_C):
                    z = t + randbelow(state, cur_len - t)
                    cur_id[t], cur_id[z] = cur_id[z], cur_id[t]
                    cur_up[t], cur_up[z] = cur_up[z], cur_up[t]
                    r[cur_id[t]] += 1
                    cur_up[t] -= 1
                n_C = 0
        # leftovers now sit at the next plateau's rank and merge into it
        # (handled by the absorb step: cur_val advances to rv[j])
    return


@njit(cache=True)
def psctl_kernel(h_len, p_len, off, members, n_C_arr, up_h, up_p, r, T, state, shuffle, maxvp):
    eta = len(h_len)
    ids = np.empty(maxvp, np.int64)
    ups = np.empty(maxvp, np.int64)
    srt = np.empty(maxvp, np.int64)
    rv = np.empty(maxvp, np.int64)
    cur_id = np.empty(maxvp, np.int64)
    cur_up = np.empty(maxvp, np.int64)
    pair_order = np.empty(eta, np.int64)
    for i in range(eta):
        pair_order[i] = i
    for _ in range(T):
        if shuffle:
            for i in range(eta - 1, 0, -1):
                z = randbelow(state, i + 1)
                pair_order[i], pair_order[z] = pair_order[z], pair_order[i]
        for pi0 in range(eta):
            pi = pair_order[pi0]
            h = h_len[pi]
            p = p_len[pi]
            base = off[pi]
            mc = h + p
            for t in range(h):
                ids[t] = members[base + t]
                ups[t] = up_h[pi]
            for t in range(p):
                ids[h + t] = members[base + h + t]
                ups[h + t] = up_p[pi]
            ibatch_core(ids, ups, mc, n_C_arr[pi], r, state, srt, rv, cur_id, cur_up)


# ---------------------------------------------------------------------------
# color-path DP and uniform path sampling


@njit(cache=True)
def path_dp_kernel(outptr, outadj, n, k):
    """cnt[v, i] = number of color-descending paths with i vertices from v.

    Returns (cnt, W, overflow). On overflow the partial table is invalid.
    """
    cnt = np.zeros((n, k + 1), np.int64)
    LIMIT = np.int64(1) << np.int64(62)
    overflow = False
    for v in range(n):
        cnt[v, 1] = 1
    for i in range(2, k + 1):
        for v in range(n):
            s = np.int64(0)
            for j in range(outptr[v], outptr[v + 1]):
                c = cnt[outadj[j], i - 1]
                s += c
                if s >= LIMIT:
                    overflow = True
                    s = 0
                    break
            cnt[v, i] = s
            if overflow:
                return cnt, np.int64(0), True
    W = np.int64(0)
    for v in range(n):
        W += cnt[v, k]
        if W >= LIMIT:
            return cnt, np.int64(0), True
    return cnt, W, False


@njit(cache=True)
def _csr_has_edge(indptr, adj, u, v):
    lo = indptr[u]
    hi = indptr[u + 1]
    while lo < hi:
        mid = (lo + hi) // 2
        x = adj[mid]
        if x == v:
            return True
        elif x < v:
            lo = mid + 1
        else:
            hi = mid
    return False


@njit(cache=True)
def sample_paths_kernel(outptr, outadj, cnt, cum, W, t, k, state, indptr, adj):
    """Draw t uniform k-color paths; flag those that are k-cliques."""
    n = len(outptr) - 1
    paths = np.empty((t, k), np.int32)
    is_clique = np.zeros(t, np.bool_)
    for s in range(t):
        X = randbelow(state, W)
        # start node: first v with cum[v] > X; node v owns [cum[v-1], cum[v])
        lo = 0
        hi = n
        while lo < hi:
            mid = (lo + hi) // 2
            if cum[mid] <= X:
                lo = mid + 1
            else:
                hi = mid
        v = lo
        rem = X - (cum[v - 1] if v > 0 else 0)
        paths[s, 0] = v
        cur = v
        for step in range(1, k):
            level = k - step  # next node starts a path of `level` vertices
            for j in range(outptr[cur], outptr[cur + 1]):
                u = outadj[j]
                c = cnt[u, level]
                if rem < c:
                    cur = u
                    break
                rem -= c
            paths[s, step] = cur
        ok = True
        for a in range(k):
            for b in range(a + 1, k):
                if not _csr_has_edge(indptr, adj, paths[s, a], paths[s, b]):
                    ok = False
                    break
            if not ok:
                break
        is_clique[s] = ok
    return paths, is_clique
