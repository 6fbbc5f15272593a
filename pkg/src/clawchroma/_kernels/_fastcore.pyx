# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over uint64 adjacency masks (n <= 64).

Mirrors _kernels.pure function by function, with the same deterministic
search orders, so either backend produces identical results. The dispatcher
in _kernels/__init__ routes calls here when the extension built and the
graph fits in one machine word.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #include <stdint.h>
    static inline int popcount64(uint64_t x) { return __builtin_popcountll(x); }
    static inline int ctz64(uint64_t x) { return __builtin_ctzll(x); }
    static inline uint64_t above_mask(int v) {
        return v >= 63 ? 0ULL : (~0ULL) << (v + 1);
    }
    """
    int popcount64(uint64_t) nogil
    int ctz64(uint64_t) nogil
    uint64_t above_mask(int) nogil

cdef uint64_t ONE = 1


cdef int _load_adj(object adj_obj, int n, uint64_t* out) except -1:
    cdef int i
    for i in range(n):
        out[i] = <uint64_t> adj_obj[i]
    return 0


# ---------------------------------------------------------------- recognition

cdef bint _has_claw(uint64_t* adj, int n) nogil:
    cdef uint64_t nu, ma, mb, mc
    cdef int u, a, b
    for u in range(n):
        nu = adj[u]
        if popcount64(nu) < 3:
            continue
        ma = nu
        while ma:
            a = ctz64(ma)
            ma &= ma - 1
            mb = nu & ~adj[a] & above_mask(a)
            while mb:
                b = ctz64(mb)
                mb &= mb - 1
                if mb & ~adj[b]:
                    return True
    return False


cdef bint _has_w(uint64_t* adj, int n) nogil:
    cdef uint64_t md, common, ma, mb
    cdef int d, e, a, b
    for d in range(n):
        md = adj[d] & above_mask(d)
        while md:
            e = ctz64(md)
            md &= md - 1
            common = adj[d] & adj[e]
            if popcount64(common) < 3:
                continue
            ma = common
            while ma:
                a = ctz64(ma)
                ma &= ma - 1
                mb = common & adj[a] & above_mask(a)
                while mb:
                    b = ctz64(mb)
                    mb &= mb - 1
                    if common & ~adj[a] & ~adj[b]:
                        return True
    return False


def find_claw(object adj_obj, int n):
    cdef uint64_t adj[64]
    cdef uint64_t nu, ma, mb, mc
    cdef int u, a, b, c
    if n == 0:
        return None
    _load_adj(adj_obj, n, adj)
    for u in range(n):
        nu = adj[u]
        if popcount64(nu) < 3:
            continue
        ma = nu
        while ma:
            a = ctz64(ma)
            ma &= ma - 1
            mb = nu & ~adj[a] & above_mask(a)
            while mb:
                b = ctz64(mb)
                mb &= mb - 1
                mc = mb & ~adj[b]
                if mc:
                    c = ctz64(mc)
                    return (u, a, b, c)
    return None


def find_k5_minus_p3(object adj_obj, int n):
    cdef uint64_t adj[64]
    cdef uint64_t md, common, ma, mb, mc
    cdef int d, e, a, b, c
    if n == 0:
        return None
    _load_adj(adj_obj, n, adj)
    for d in range(n):
        md = adj[d] & above_mask(d)
        while md:
            e = ctz64(md)
            md &= md - 1
            common = adj[d] & adj[e]
            if popcount64(common) < 3:
                continue
            ma = common
            while ma:
                a = ctz64(ma)
                ma &= ma - 1
                mb = common & adj[a] & above_mask(a)
                while mb:
                    b = ctz64(mb)
                    mb &= mb - 1
                    mc = common & ~adj[a] & ~adj[b]
                    if mc:
                        c = ctz64(mc)
                        return (a, b, c, d, e)
    return None


# --------------------------------------------------------------- clique search

cdef int _color_order(uint64_t* adj, uint64_t cand, int* vs, int* bounds) nogil:
    cdef uint64_t rem = cand, avail, b
    cdef int cnt = 0, color = 0, v
    while rem:
        color += 1
        avail = rem
        while avail:
            v = ctz64(avail)
            b = ONE << v
            avail ^= b
            avail &= ~adj[v]
            rem ^= b
            vs[cnt] = v
            bounds[cnt] = color
            cnt += 1
    return cnt


cdef int _expand_clique(uint64_t* adj, uint64_t cand, int size, int best) nogil:
    cdef int vs[64]
    cdef int bounds[64]
    cdef int cnt = _color_order(adj, cand, vs, bounds)
    cdef int i, v
    cdef uint64_t nc
    for i in range(cnt - 1, -1, -1):
        if size + bounds[i] <= best:
            return best
        v = vs[i]
        nc = cand & adj[v]
        if nc:
            best = _expand_clique(adj, nc, size + 1, best)
        elif size + 1 > best:
            best = size + 1
        cand ^= ONE << v
    return best


cdef bint _expand_has(uint64_t* adj, uint64_t cand, int size, int k) nogil:
    cdef int vs[64]
    cdef int bounds[64]
    cdef int cnt = _color_order(adj, cand, vs, bounds)
    cdef int i, v
    for i in range(cnt - 1, -1, -1):
        if size + bounds[i] < k:
            return False
        v = vs[i]
        if size + 1 == k:
            return True
        if _expand_has(adj, cand & adj[v], size + 1, k):
            return True
        cand ^= ONE << v
    return False


cdef bint _has_clique_c(uint64_t* adj, uint64_t sub, int k) nogil:
    if k <= 0:
        return True
    if popcount64(sub) < k:
        return False
    return _expand_has(adj, sub, 0, k)


def clique_number(object adj_obj, int n, object sub_obj):
    cdef uint64_t adj[64]
    cdef uint64_t sub = <uint64_t> sub_obj
    if sub == 0:
        return 0
    _load_adj(adj_obj, n, adj)
    return _expand_clique(adj, sub, 0, 0)


def has_clique(object adj_obj, int n, object sub_obj, int k):
    cdef uint64_t adj[64]
    cdef uint64_t sub = <uint64_t> sub_obj
    if k <= 0:
        return True
    if popcount64(sub) < k:
        return False
    _load_adj(adj_obj, n, adj)
    return bool(_expand_has(adj, sub, 0, k))


def lex_min_max_clique(object adj_obj, int n, object sub_obj):
    cdef uint64_t adj[64]
    cdef uint64_t sub = <uint64_t> sub_obj
    cdef uint64_t res = 0, cand, m, nxt
    cdef int need, v
    cdef bint found
    if sub == 0:
        return 0
    _load_adj(adj_obj, n, adj)
    need = _expand_clique(adj, sub, 0, 0)
    cand = sub
    while need:
        found = False
        m = cand
        while m:
            v = ctz64(m)
            m &= m - 1
            nxt = cand & adj[v] & above_mask(v)
            if _has_clique_c(adj, nxt, need - 1):
                res |= ONE << v
                cand = nxt
                need -= 1
                found = True
                break
        if not found:
            raise AssertionError("clique extension lost")
    return res


cdef void _rec_max_cliques(uint64_t* adj, uint64_t mask, uint64_t cand,
                           int left, list out):
    cdef uint64_t m, b, nxt
    cdef int v
    if left == 0:
        out.append(mask)
        return
    m = cand
    while m:
        v = ctz64(m)
        b = ONE << v
        m ^= b
        nxt = cand & adj[v] & above_mask(v)
        if popcount64(nxt) >= left - 1 and _has_clique_c(adj, nxt, left - 1):
            _rec_max_cliques(adj, mask | b, nxt, left - 1, out)


def max_cliques(object adj_obj, int n, object sub_obj):
    cdef uint64_t adj[64]
    cdef uint64_t sub = <uint64_t> sub_obj
    cdef int need
    if sub == 0:
        return [0]
    _load_adj(adj_obj, n, adj)
    need = _expand_clique(adj, sub, 0, 0)
    out = []
    _rec_max_cliques(adj, 0, sub, need, out)
    return out


# ------------------------------------------------------------------- coloring

def dsatur(object adj_obj, int n, object sub_obj):
    cdef uint64_t adj[64]
    cdef uint64_t nbc[64]
    cdef int colors[64]
    cdef int deg[64]
    cdef uint64_t sub = <uint64_t> sub_obj
    cdef uint64_t m, mw, bit
    cdef int count, i, v, best, bs, bd, s, c
    for i in range(n):
        colors[i] = 0
        nbc[i] = 0
        deg[i] = 0
    count = popcount64(sub)
    if count:
        _load_adj(adj_obj, n, adj)
        m = sub
        while m:
            v = ctz64(m)
            m &= m - 1
            deg[v] = popcount64(adj[v] & sub)
        for i in range(count):
            best = -1
            bs = -1
            bd = -1
            m = sub
            while m:
                v = ctz64(m)
                m &= m - 1
                if colors[v]:
                    continue
                s = popcount64(nbc[v])
                if s > bs or (s == bs and deg[v] > bd):
                    best = v
                    bs = s
                    bd = deg[v]
            c = ctz64(~nbc[best]) + 1
            colors[best] = c
            bit = ONE << (c - 1)
            mw = adj[best] & sub
            while mw:
                v = ctz64(mw)
                mw &= mw - 1
                nbc[v] |= bit
    return [colors[i] for i in range(n)]


cdef bint _bt(uint64_t* adj, uint64_t sub, int k, int* colors, uint64_t* nbc,
              int* deg, uint64_t uncol, int top):
    cdef int best = -1, bs = -1, bd = -1, v, w, s, c, limit
    cdef uint64_t m, mw, changed, bit
    if uncol == 0:
        return True
    m = uncol
    while m:
        v = ctz64(m)
        m &= m - 1
        s = popcount64(nbc[v])
        if s > bs or (s == bs and deg[v] > bd):
            best = v
            bs = s
            bd = deg[v]
    v = best
    limit = top + 1 if top < k else k
    for c in range(1, limit + 1):
        bit = ONE << (c - 1)
        if nbc[v] & bit:
            continue
        colors[v] = c
        changed = 0
        mw = adj[v] & sub
        while mw:
            w = ctz64(mw)
            mw &= mw - 1
            if not (nbc[w] & bit):
                nbc[w] |= bit
                changed |= ONE << w
        if _bt(adj, sub, k, colors, nbc, deg, uncol & ~(ONE << v),
               c if c > top else top):
            return True
        mw = changed
        while mw:
            w = ctz64(mw)
            mw &= mw - 1
            nbc[w] ^= bit
        colors[v] = 0
    return False


def k_color(object adj_obj, int n, object sub_obj, int k, object clique_obj=0):
    cdef uint64_t adj[64]
    cdef uint64_t nbc[64]
    cdef int colors[64]
    cdef int deg[64]
    cdef uint64_t sub = <uint64_t> sub_obj
    cdef uint64_t clique = <uint64_t> clique_obj
    cdef uint64_t m, mw, bit
    cdef int i, v, used
    if sub == 0:
        return [0] * n
    if k <= 0 or popcount64(clique) > k:
        return None
    _load_adj(adj_obj, n, adj)
    for i in range(n):
        colors[i] = 0
        nbc[i] = 0
        deg[i] = 0
    m = sub
    while m:
        v = ctz64(m)
        m &= m - 1
        deg[v] = popcount64(adj[v] & sub)
    used = 0
    m = clique
    while m:
        v = ctz64(m)
        m &= m - 1
        used += 1
        colors[v] = used
        bit = ONE << (used - 1)
        mw = adj[v] & sub
        while mw:
            i = ctz64(mw)
            mw &= mw - 1
            nbc[i] |= bit
    if _bt(adj, sub, k, colors, nbc, deg, sub & ~clique, used):
        return [colors[i] for i in range(n)]
    return None


# ------------------------------------------------------------------ sweeping

def scan_in_class(int n, object start_obj, object stop_obj):
    """Edge masks in [start, stop) whose graphs avoid both forbidden subgraphs."""
    cdef uint64_t start = <uint64_t> start_obj
    cdef uint64_t stop = <uint64_t> stop_obj
    cdef uint64_t adj[64]
    cdef int pi[66]
    cdef int pj[66]
    cdef uint64_t mask, m
    cdef int i, j, p
    if n > 11:
        raise ValueError("edge-mask scans are capped at 11 vertices")
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            pi[p] = i
            pj[p] = j
            p += 1
    out = []
    mask = start
    while mask < stop:
        for i in range(n):
            adj[i] = 0
        m = mask
        while m:
            p = ctz64(m)
            m &= m - 1
            i = pi[p]
            j = pj[p]
            adj[i] |= ONE << j
            adj[j] |= ONE << i
        if not _has_claw(adj, n) and not _has_w(adj, n):
            out.append(mask)
        mask += 1
    return out
