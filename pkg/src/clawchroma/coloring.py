"""Proper-coloring values, the DSATUR baseline, and the exact oracle.

exact_chromatic is the ground truth the verification sweeps compare
everything against: it brackets the search between the clique number and the
DSATUR color count and decides each k by exact backtracking. Outputs are
canonicalized (colors renumbered by first occurrence in vertex order) so
identical inputs produce identical bytes downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import _kernels as K
from .bitops import iter_bits
from .errors import PartialColoringError, ScaleExceededError
from .graph import Graph

ORACLE_MAX_VERTICES = 64


@dataclass(frozen=True)
class Coloring:
    """Total vertex -> color assignment; colors are 1-based."""

    assignment: tuple[int, ...]

    @cached_property
    def colors_used(self) -> int:
        return len(set(self.assignment))

    def color_of(self, v: int) -> int:
        return self.assignment[v]

    def canonical(self) -> "Coloring":
        """Renumber colors by first occurrence in vertex order."""
        relabel: dict[int, int] = {}
        out = []
        for c in self.assignment:
            if c not in relabel:
                relabel[c] = len(relabel) + 1
            out.append(relabel[c])
        return Coloring(tuple(out))


def _check_total(g: Graph, coloring: Coloring) -> None:
    a = coloring.assignment
    if len(a) != g.n:
        raise PartialColoringError(
            f"assignment covers {len(a)} vertices, graph has {g.n}"
        )
    for v, c in enumerate(a):
        if c < 1:
            raise PartialColoringError(f"vertex {v} is uncolored")


def verify_proper(g: Graph, coloring: Coloring) -> tuple[int, int] | None:
    """None when proper, else the least monochromatic edge (u, v)."""
    _check_total(g, coloring)
    a = coloring.assignment
    for u in range(g.n):
        for v in iter_bits(g.adj[u] & (-1 << (u + 1))):
            if a[u] == a[v]:
                return (u, v)
    return None


def dsatur_greedy(g: Graph) -> Coloring:
    """Deterministic DSATUR coloring; an upper bound for the exact search."""
    raw = K.dsatur(g.adj, g.n, g.full_mask())
    return Coloring(tuple(raw)).canonical()


def _pruning_clique(g: Graph) -> int:
    if g.n <= ORACLE_MAX_VERTICES:
        return K.lex_min_max_clique(g.adj, g.n, g.full_mask())
    # beyond oracle scale fall back to a cheap greedy clique for pruning
    mask = 0
    cand = g.full_mask()
    while cand:
        best, bd = -1, -1
        for v in iter_bits(cand):
            d = (g.adj[v] & cand).bit_count()
            if d > bd:
                best, bd = v, d
        mask |= 1 << best
        cand &= g.adj[best]
    return mask


def k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper coloring with at most k colors iff one exists; exact."""
    if k < 0:
        return None
    # n colors always suffice, so larger palettes decide identically
    raw = K.k_color(g.adj, g.n, g.full_mask(), min(k, g.n), _pruning_clique(g))
    if raw is None:
        return None
    return Coloring(tuple(raw)).canonical()


def exact_chromatic(g: Graph) -> tuple[int, Coloring]:
    """The chromatic number plus a witness coloring.

    Bracketed below by the clique number and above by DSATUR; exact
    backtracking decides each k in between.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise ScaleExceededError(
            f"exact chromatic oracle capped at {ORACLE_MAX_VERTICES} vertices"
        )
    if g.n == 0:
        return 0, Coloring(())
    adj, n, full = g.adj, g.n, g.full_mask()
    clique = K.lex_min_max_clique(adj, n, full)
    lo = clique.bit_count()
    upper = dsatur_greedy(g)
    hi = upper.colors_used
    for k in range(lo, hi):
        raw = K.k_color(adj, n, full, k, clique)
        if raw is not None:
            return k, Coloring(tuple(raw)).canonical()
    return hi, upper
