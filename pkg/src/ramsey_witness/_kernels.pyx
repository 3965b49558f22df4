# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels for graphs with at most 64 vertices.

Same functions and results as ``_kernels_py``; callers must route larger
graphs to the fallback.
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int popcount64 "__builtin_popcountll"(u64 x) nogil
    int ctz64 "__builtin_ctzll"(u64 x) nogil

cdef enum:
    MAXN = 64


cdef inline u64 bit(int v) nogil:
    return (<u64>1) << v


cdef int load(object seq, int n, u64* out) except -1:
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        out[i] = <u64>seq[i]
    return 0


def reach_mask(adj, int start, allowed):
    cdef u64 a[MAXN]
    cdef int n = len(adj)
    load(adj, n, a)
    cdef u64 allow = <u64>allowed
    cdef u64 seen = bit(start)
    cdef u64 frontier = seen
    cdef u64 nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= a[ctz64(f)]
            f &= f - 1
        nxt &= allow & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def articulation_mask(adj, int n, alive):
    cdef u64 a[MAXN]
    cdef int disc[MAXN]
    cdef int low[MAXN]
    cdef int st_v[MAXN]
    cdef int st_p[MAXN]
    cdef u64 st_rem[MAXN]
    load(adj, n, a)
    cdef u64 live = <u64>alive
    cdef u64 result = 0
    cdef u64 roots = live
    cdef int t = 0, top, root, v, p, w, children, i
    cdef u64 rem
    for i in range(n):
        disc[i] = -1
    while roots:
        root = ctz64(roots)
        roots &= roots - 1
        if disc[root] >= 0:
            continue
        disc[root] = t
        low[root] = t
        t += 1
        children = 0
        top = 0
        st_v[0] = root
        st_p[0] = -1
        st_rem[0] = a[root] & live
        while top >= 0:
            v = st_v[top]
            p = st_p[top]
            rem = st_rem[top]
            if rem:
                w = ctz64(rem)
                st_rem[top] = rem & (rem - 1)
                if disc[w] < 0:
                    disc[w] = t
                    low[w] = t
                    t += 1
                    top += 1
                    st_v[top] = w
                    st_p[top] = v
                    st_rem[top] = a[w] & live
                elif w != p and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                top -= 1
                if p < 0:
                    continue
                if low[v] < low[p]:
                    low[p] = low[v]
                if p == root:
                    children += 1
                elif low[v] >= disc[p]:
                    result |= bit(p)
        if children >= 2:
            result |= bit(root)
    return result


cdef int color_bound(u64* a, u64 cand) nogil:
    cdef int colors = 0
    cdef u64 q, b
    while cand:
        colors += 1
        q = cand
        while q:
            b = q & (~q + 1)
            q &= ~a[ctz64(q)] & ~b
            cand &= ~b
    return colors


cdef struct CliqueState:
    u64* a
    int k
    int cur[MAXN]
    int ncur
    int best[MAXN]
    int nbest
    int found


cdef void clique_expand(CliqueState* s, u64 p) nogil:
    cdef int v, i
    cdef u64 b
    if s.k:
        if s.ncur == s.k:
            for i in range(s.ncur):
                s.best[i] = s.cur[i]
            s.nbest = s.ncur
            s.found = 1
            return
        if s.ncur + color_bound(s.a, p) < s.k:
            return
    else:
        if not p:
            if s.ncur > s.nbest:
                for i in range(s.ncur):
                    s.best[i] = s.cur[i]
                s.nbest = s.ncur
            return
        if s.ncur + color_bound(s.a, p) <= s.nbest:
            return
    while p:
        v = ctz64(p)
        b = bit(v)
        s.cur[s.ncur] = v
        s.ncur += 1
        clique_expand(s, p & s.a[v])
        s.ncur -= 1
        if s.found:
            return
        p ^= b
        if s.k:
            if s.ncur + popcount64(p) < s.k:
                return
        elif s.ncur + popcount64(p) <= s.nbest:
            return
    if not s.k and s.ncur > s.nbest:
        for i in range(s.ncur):
            s.best[i] = s.cur[i]
        s.nbest = s.ncur


def clique_search(adj, int n, int k, cand):
    cdef u64 a[MAXN]
    cdef CliqueState s
    load(adj, n, a)
    s.a = a
    s.k = k
    s.ncur = 0
    s.nbest = 0
    s.found = 0
    cdef u64 c = <u64>cand
    with nogil:
        clique_expand(&s, c)
    if k and not s.found:
        return None
    return [s.best[i] for i in range(s.nbest)]


cdef struct MatchState:
    u64* a
    u64 closed[MAXN]
    int cu[MAXN]
    int cv[MAXN]
    int ncur
    int bu[MAXN]
    int bv[MAXN]
    int nbest


cdef void match_rec(MatchState* s, u64 avail) nogil:
    cdef u64 active = 0, f = avail, nb
    cdef int v, u, i
    while f:
        v = ctz64(f)
        f &= f - 1
        if s.a[v] & avail:
            active |= bit(v)
    if not active:
        if s.ncur > s.nbest:
            for i in range(s.ncur):
                s.bu[i] = s.cu[i]
                s.bv[i] = s.cv[i]
            s.nbest = s.ncur
        return
    if s.ncur + popcount64(active) // 2 <= s.nbest:
        return
    u = ctz64(active)
    nb = s.a[u] & active
    while nb:
        v = ctz64(nb)
        nb &= nb - 1
        s.cu[s.ncur] = u
        s.cv[s.ncur] = v
        s.ncur += 1
        match_rec(s, active & ~(s.closed[u] | s.closed[v]))
        s.ncur -= 1
    match_rec(s, active & ~bit(u))


def max_induced_matching(adj, int n, alive):
    cdef u64 a[MAXN]
    cdef MatchState s
    cdef int v
    load(adj, n, a)
    s.a = a
    for v in range(n):
        s.closed[v] = a[v] | bit(v)
    s.ncur = 0
    s.nbest = -1
    cdef u64 live = <u64>alive
    with nogil:
        match_rec(&s, live)
    return [(s.bu[v], s.bv[v]) for v in range(s.nbest)]


cdef struct EmbedState:
    u64* h
    int pn
    u64 ok[MAXN]
    int nrel[MAXN]
    int rel_j[MAXN][MAXN]
    int rel_adj[MAXN][MAXN]
    int img[MAXN]


cdef int embed_rec(EmbedState* s, int depth, u64 used) nogil:
    cdef u64 cand, b
    cdef int r, j
    if depth == s.pn:
        return 1
    cand = s.ok[depth] & ~used
    for r in range(s.nrel[depth]):
        j = s.rel_j[depth][r]
        if s.rel_adj[depth][r]:
            cand &= s.h[s.img[j]]
        else:
            cand &= ~s.h[s.img[j]]
        if not cand:
            return 0
    while cand:
        b = cand & (~cand + 1)
        s.img[depth] = ctz64(cand)
        if embed_rec(s, depth + 1, used | b):
            return 1
        cand ^= b
    return 0


def induced_embedding(hadj, int hn, padj, int pn):
    from ._kernels_py import _pattern_order

    if pn == 0:
        return []
    if pn > hn:
        return None
    cdef u64 h[MAXN]
    cdef u64 pa[MAXN]
    cdef EmbedState* s = <EmbedState*>malloc(sizeof(EmbedState))
    cdef int i, j, v, p, q, need
    cdef int hdeg[MAXN]
    cdef int pdeg[MAXN]
    cdef int found
    if s == NULL:
        raise MemoryError()
    try:
        load(hadj, hn, h)
        load(padj, pn, pa)
        for v in range(hn):
            hdeg[v] = popcount64(h[v])
        pdeg_list = []
        for p in range(pn):
            pdeg[p] = popcount64(pa[p])
            pdeg_list.append(pdeg[p])
        order = _pattern_order(padj, pn, pdeg_list)
        s.h = h
        s.pn = pn
        for i in range(pn):
            p = order[i]
            need = pdeg[p]
            s.ok[i] = 0
            for v in range(hn):
                if hdeg[v] >= need:
                    s.ok[i] |= bit(v)
            s.nrel[i] = i
            for j in range(i):
                q = order[j]
                s.rel_j[i][j] = j
                s.rel_adj[i][j] = 1 if (pa[p] >> q) & 1 else 0
        with nogil:
            found = embed_rec(s, 0, 0)
        if not found:
            return None
        emb = [0] * pn
        for i in range(pn):
            emb[order[i]] = s.img[i]
        return emb
    finally:
        free(s)
