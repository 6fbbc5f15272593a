"""Forbidden-subgraph detection and neighborhood classification.

The graph class of interest excludes two induced subgraphs: the claw K1,3
and K5-minus-P3 (the join of an edge plus an isolated vertex with another
edge; 5 vertices, 8 edges). For graphs in the class, the induced neighborhood
of every vertex falls into one of four shapes relative to a maximum clique Q
of the neighborhood and the rest R = N(u) - Q:

  cycle_c5      <N(u)> is a 5-cycle
  path_p4       <N(u)> is a 4-vertex path
  unique_miss   <R> complete, each r misses exactly one q, all distinct
  isolated_rest <R> complete and no R-Q edges (includes R empty)

classify_neighborhood reports the first matching shape for the fixed
lexicographically-least maximum clique; verify_neighborhood_all_cliques
checks the universal reading over every maximum clique of the neighborhood.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels as K
from .bitops import bits_tuple, iter_bits, mask_is_clique
from .errors import NotInClassError, VertexOutOfRangeError
from .graph import Graph

CLAW = "claw"
K5_MINUS_P3 = "k5_minus_p3"

CYCLE_C5 = "cycle_c5"
PATH_P4 = "path_p4"
UNIQUE_MISS = "unique_miss"
ISOLATED_REST = "isolated_rest"
VIOLATION = "violation"


@dataclass(frozen=True)
class ForbiddenWitness:
    """Role-labeled induced copy of a forbidden subgraph.

    claw: (center, leaf1, leaf2, leaf3) with ascending leaves.
    k5_minus_p3: (a, b, c, d, e) with edges exactly
    {ab, de, ad, ae, bd, be, cd, ce} and non-edges {ac, bc}.
    """

    kind: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class ClassVerdict:
    """Membership result; truthy iff the graph is in the class."""

    in_class: bool
    witness: ForbiddenWitness | None = None

    def __bool__(self) -> bool:
        return self.in_class


@dataclass(frozen=True)
class NeighborhoodShape:
    outcome: str
    clique: tuple[int, ...]
    rest: tuple[int, ...]
    miss_map: tuple[tuple[int, int], ...] | None = None
    witness: ForbiddenWitness | tuple[int, ...] | None = None


def find_claw(g: Graph) -> ForbiddenWitness | None:
    hit = K.find_claw(g.adj, g.n)
    if hit is None:
        return None
    return ForbiddenWitness(CLAW, hit)


def find_k5_minus_p3(g: Graph) -> ForbiddenWitness | None:
    hit = K.find_k5_minus_p3(g.adj, g.n)
    if hit is None:
        return None
    return ForbiddenWitness(K5_MINUS_P3, hit)


def is_in_class(g: Graph) -> ClassVerdict:
    """Decide class membership; the claw is checked first."""
    w = find_claw(g)
    if w is None:
        w = find_k5_minus_p3(g)
    if w is None:
        return ClassVerdict(True)
    return ClassVerdict(False, w)


def _is_c5(adj, sub: int) -> bool:
    if sub.bit_count() != 5:
        return False
    for v in iter_bits(sub):
        if (adj[v] & sub).bit_count() != 2:
            return False
    # 2-regular on 5 vertices is necessarily a single 5-cycle
    return True


def _is_p4(adj, sub: int) -> bool:
    if sub.bit_count() != 4:
        return False
    degs = sorted((adj[v] & sub).bit_count() for v in iter_bits(sub))
    # 4 vertices, degree multiset (1,1,2,2): only the path realizes it
    return degs == [1, 1, 2, 2]


def _unique_miss_map(adj, clique: int, rest: int):
    """(r, q) pairs when every r misses exactly one q, injectively; else None."""
    if not mask_is_clique(adj, rest):
        return None
    pairs = []
    seen = 0
    for r in iter_bits(rest):
        non = clique & ~adj[r]
        if non.bit_count() != 1:
            return None
        if non & seen:
            return None
        seen |= non
        pairs.append((r, non.bit_length() - 1))
    return tuple(pairs)


def _is_isolated_rest(adj, clique: int, rest: int) -> bool:
    if not mask_is_clique(adj, rest):
        return False
    for r in iter_bits(rest):
        if adj[r] & clique:
            return False
    return True


def _shape_holds(adj, nb: int, clique: int, rest: int) -> bool:
    if _is_c5(adj, nb) or _is_p4(adj, nb):
        return True
    if rest and _unique_miss_map(adj, clique, rest) is not None:
        return True
    return _is_isolated_rest(adj, clique, rest)


def classify_neighborhood(g: Graph, u: int) -> NeighborhoodShape:
    """Shape of <N(u)> relative to its least maximum clique.

    Match order: cycle_c5, path_p4, unique_miss, isolated_rest; an empty rest
    is reported as isolated_rest. Graphs in the class never reach violation.
    """
    if not (0 <= u < g.n):
        raise VertexOutOfRangeError(f"vertex {u} outside 0..{g.n - 1}")
    adj = g.adj
    nb = adj[u]
    clique = K.lex_min_max_clique(adj, g.n, nb)
    rest = nb & ~clique
    q_t = bits_tuple(clique)
    r_t = bits_tuple(rest)
    if _is_c5(adj, nb):
        return NeighborhoodShape(CYCLE_C5, q_t, r_t)
    if _is_p4(adj, nb):
        return NeighborhoodShape(PATH_P4, q_t, r_t)
    if rest:
        pairs = _unique_miss_map(adj, clique, rest)
        if pairs is not None:
            return NeighborhoodShape(UNIQUE_MISS, q_t, r_t, miss_map=pairs)
    if _is_isolated_rest(adj, clique, rest):
        return NeighborhoodShape(ISOLATED_REST, q_t, r_t)
    witness = is_in_class(g).witness or bits_tuple(nb)
    return NeighborhoodShape(VIOLATION, q_t, r_t, witness=witness)


def verify_neighborhood_all_cliques(
    g: Graph, u: int, *, assume_in_class: bool = False
) -> bool:
    """True iff one of the four shapes holds for EVERY maximum clique of <N(u)>.

    Raises NotInClassError when the graph is outside the class (skipped with
    assume_in_class=True, for sweeps that already ran recognition).
    """
    if not (0 <= u < g.n):
        raise VertexOutOfRangeError(f"vertex {u} outside 0..{g.n - 1}")
    if not assume_in_class:
        verdict = is_in_class(g)
        if not verdict:
            raise NotInClassError(verdict.witness)
    adj = g.adj
    nb = adj[u]
    if _is_c5(adj, nb) or _is_p4(adj, nb):
        return True
    for clique in K.max_cliques(adj, g.n, nb):
        rest = nb & ~clique
        if rest and _unique_miss_map(adj, clique, rest) is not None:
            continue
        if not _is_isolated_rest(adj, clique, rest):
            return False
    return True
