"""Pure-Python kernels over bitmask adjacency.

These are the hot primitives behind recognition, clique search and exact
coloring. The compiled extension (_fastcore) implements the same functions
with the same deterministic search orders for n <= 64; this module is the
always-available fallback and the reference for cross-backend tests.

Conventions: adj is an indexable of per-vertex neighbor bitmasks, sub is a
bitmask restricting the operation to an induced subgraph, colors are 1-based
and 0 means uncolored.
"""

from __future__ import annotations


def find_claw(adj, n: int):
    """Least induced K1,3 as (center, leaf1, leaf2, leaf3), or None.

    Witnesses are ordered by center, then by the ascending leaf triple.
    """
    for u in range(n):
        nu = adj[u]
        if nu.bit_count() < 3:
            continue
        ma = nu
        while ma:
            ba = ma & -ma
            a = ba.bit_length() - 1
            ma ^= ba
            mb = nu & ~adj[a] & (-1 << (a + 1))
            while mb:
                bb = mb & -mb
                b = bb.bit_length() - 1
                mb ^= bb
                mc = mb & ~adj[b]
                if mc:
                    c = (mc & -mc).bit_length() - 1
                    return (u, a, b, c)
    return None


def find_k5_minus_p3(adj, n: int):
    """Least induced K5-minus-P3 as (a, b, c, d, e), or None.

    Role labels: d, e span the dominating edge (adjacent to a, b and c),
    ab is an edge, and c is adjacent to neither a nor b. The search anchors
    on the edge (d, e) and scans its common neighborhood, minimizing
    (d, e, a, b, c) with d < e and a < b.
    """
    for d in range(n):
        md = adj[d] & (-1 << (d + 1))
        while md:
            bd = md & -md
            e = bd.bit_length() - 1
            md ^= bd
            common = adj[d] & adj[e]
            if common.bit_count() < 3:
                continue
            ma = common
            while ma:
                ba = ma & -ma
                a = ba.bit_length() - 1
                ma ^= ba
                mb = common & adj[a] & (-1 << (a + 1))
                while mb:
                    bb = mb & -mb
                    b = bb.bit_length() - 1
                    mb ^= bb
                    mc = common & ~adj[a] & ~adj[b]
                    if mc:
                        c = (mc & -mc).bit_length() - 1
                        return (a, b, c, d, e)
    return None


def _color_order(adj, cand: int):
    """Greedy color classes over cand: vertex list plus per-vertex class index.

    Classes are built least-vertex-first; the class index of a vertex bounds
    the largest clique containing it inside cand, which is the branch bound
    used by the clique searches.
    """
    vs = []
    bounds = []
    rem = cand
    color = 0
    while rem:
        color += 1
        avail = rem
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            avail ^= b
            avail &= ~adj[v]
            rem ^= b
            vs.append(v)
            bounds.append(color)
    return vs, bounds


def clique_number(adj, n: int, sub: int) -> int:
    """Exact maximum clique size within sub (0 for the empty mask)."""

    def expand(cand: int, size: int, best: int) -> int:
        vs, bounds = _color_order(adj, cand)
        for i in range(len(vs) - 1, -1, -1):
            if size + bounds[i] <= best:
                return best
            v = vs[i]
            nc = cand & adj[v]
            if nc:
                best = expand(nc, size + 1, best)
            elif size + 1 > best:
                best = size + 1
            cand ^= 1 << v
        return best

    if not sub:
        return 0
    return expand(sub, 0, 0)


def has_clique(adj, n: int, sub: int, k: int) -> bool:
    """True iff sub contains a clique of size k."""
    if k <= 0:
        return True
    if sub.bit_count() < k:
        return False

    def expand(cand: int, size: int) -> bool:
        vs, bounds = _color_order(adj, cand)
        for i in range(len(vs) - 1, -1, -1):
            if size + bounds[i] < k:
                return False
            v = vs[i]
            if size + 1 == k:
                return True
            if expand(cand & adj[v], size + 1):
                return True
            cand ^= 1 << v
        return False

    return expand(sub, 0)


def lex_min_max_clique(adj, n: int, sub: int) -> int:
    """The lexicographically least maximum clique within sub, as a mask.

    Cliques are compared as ascending vertex tuples. Built greedily: each
    step commits the least vertex that still extends to a maximum clique.
    """
    need = clique_number(adj, n, sub)
    res = 0
    cand = sub
    while need:
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            nxt = cand & adj[v] & (-1 << (v + 1))
            if has_clique(adj, n, nxt, need - 1):
                res |= b
                cand = nxt
                need -= 1
                break
        else:  # pragma: no cover - unreachable for consistent inputs
            raise AssertionError("clique extension lost")
    return res


def max_cliques(adj, n: int, sub: int) -> list[int]:
    """All maximum cliques within sub as masks, in ascending-tuple order.

    The empty mask has the empty clique as its single maximum clique.
    """
    need = clique_number(adj, n, sub)
    if need == 0:
        return [0]
    out: list[int] = []

    def rec(mask: int, cand: int, left: int) -> None:
        if left == 0:
            out.append(mask)
            return
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            nxt = cand & adj[v] & (-1 << (v + 1))
            if nxt.bit_count() >= left - 1 and has_clique(adj, n, nxt, left - 1):
                rec(mask | b, nxt, left - 1)

    rec(0, sub, need)
    return out


def dsatur(adj, n: int, sub: int) -> list[int]:
    """Greedy coloring by saturation degree, restricted to sub.

    Vertex selection: max saturation, ties by induced degree, ties by least
    index. Returns 1-based colors; vertices outside sub get 0.
    """
    colors = [0] * n
    count = sub.bit_count()
    if count == 0:
        return colors
    deg = [0] * n
    order = []
    m = sub
    while m:
        b = m & -m
        v = b.bit_length() - 1
        m ^= b
        deg[v] = (adj[v] & sub).bit_count()
        order.append(v)
    nbc = [0] * n  # bit c-1 set iff some neighbor is colored c
    for _ in range(count):
        best = -1
        bs = -1
        bd = -1
        for v in order:
            if colors[v]:
                continue
            s = nbc[v].bit_count()
            if s > bs or (s == bs and deg[v] > bd):
                best, bs, bd = v, s, deg[v]
        used = nbc[best]
        c = ((~used) & (used + 1)).bit_length()  # lowest zero bit, 1-based
        colors[best] = c
        bit = 1 << (c - 1)
        mw = adj[best] & sub
        while mw:
            bw = mw & -mw
            nbc[bw.bit_length() - 1] |= bit
            mw ^= bw
    return colors


def k_color(adj, n: int, sub: int, k: int, clique: int = 0):
    """A proper coloring of sub with at most k colors, or None.

    Exact backtracking with DSATUR-style dynamic vertex selection, symmetry
    breaking (a fresh color must be the next unused index) and an optional
    precolored clique (its vertices take colors 1..|clique| in ascending
    order). Deterministic. Returns 1-based colors, 0 outside sub.
    """
    if sub == 0:
        return [0] * n
    if k <= 0 or clique.bit_count() > k:
        return None
    colors = [0] * n
    nbc = [0] * n
    deg = [0] * n
    m = sub
    while m:
        b = m & -m
        v = b.bit_length() - 1
        m ^= b
        deg[v] = (adj[v] & sub).bit_count()
    used = 0
    m = clique
    while m:
        b = m & -m
        v = b.bit_length() - 1
        m ^= b
        used += 1
        colors[v] = used
        bit = 1 << (used - 1)
        mw = adj[v] & sub
        while mw:
            bw = mw & -mw
            nbc[bw.bit_length() - 1] |= bit
            mw ^= bw

    def bt(uncol: int, top: int) -> bool:
        if uncol == 0:
            return True
        best = -1
        bs = -1
        bd = -1
        m = uncol
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            s = nbc[v].bit_count()
            if s > bs or (s == bs and deg[v] > bd):
                best, bs, bd = v, s, deg[v]
        v = best
        limit = top + 1 if top < k else k
        forbidden = nbc[v]
        for c in range(1, limit + 1):
            bit = 1 << (c - 1)
            if forbidden & bit:
                continue
            colors[v] = c
            changed = 0
            mw = adj[v] & sub
            while mw:
                bw = mw & -mw
                w = bw.bit_length() - 1
                mw ^= bw
                if not nbc[w] & bit:
                    nbc[w] |= bit
                    changed |= bw
            if bt(uncol & ~(1 << v), c if c > top else top):
                return True
            mw = changed
            while mw:
                bw = mw & -mw
                nbc[bw.bit_length() - 1] ^= bit
                mw ^= bw
            colors[v] = 0
        return False

    if bt(sub & ~clique, used):
        return colors
    return None


def scan_in_class(n: int, start: int, stop: int) -> list[int]:
    """Edge masks in [start, stop) whose graphs avoid both forbidden subgraphs.

    The edge-bit order matches graph.from_edge_mask.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for mask in range(start, stop):
        adj = [0] * n
        mm = mask
        p = 0
        while mm:
            if mm & 1:
                i, j = pairs[p]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            mm >>= 1
            p += 1
        if find_claw(adj, n) is None and find_k5_minus_p3(adj, n) is None:
            out.append(mask)
    return out
