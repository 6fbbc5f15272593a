"""Two-color (Kempe) components: extraction, swapping, shape checks.

In a claw-free graph every component of the subgraph induced by two color
classes of a proper coloring is a path or a cycle; find_branching_component
hunts for a counterexample (a component with a vertex of degree >= 3) and is
expected to come back empty on every claw-free input the suite produces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitops import bits_tuple, iter_bits, mask_components
from .coloring import Coloring
from .errors import SameColorPairError, StaleComponentError
from .graph import Graph

PATH = "path"
CYCLE = "cycle"
OTHER = "other"


@dataclass(frozen=True)
class KempeComponent:
    """Value snapshot of one connected two-class component.

    A single vertex and a single edge both count as paths; shape OTHER
    carries the least vertex of degree >= 3 as its witness.
    """

    vertices: tuple[int, ...]
    shape: str
    color_pair: tuple[int, int]
    branch_vertex: int | None = None


def _classify(adj, comp: int, pair: tuple[int, int]) -> KempeComponent:
    edges2 = 0
    for v in iter_bits(comp):
        d = (adj[v] & comp).bit_count()
        if d >= 3:
            return KempeComponent(bits_tuple(comp), OTHER, pair, branch_vertex=v)
        edges2 += d
    size = comp.bit_count()
    shape = CYCLE if edges2 == 2 * size and size >= 3 else PATH
    return KempeComponent(bits_tuple(comp), shape, pair)


def two_color_components(
    g: Graph, coloring: Coloring, alpha: int, beta: int
) -> list[KempeComponent]:
    """Components of the subgraph induced by the alpha/beta color classes.

    Ordered by least contained vertex. The coloring must be proper.
    """
    if alpha == beta:
        raise SameColorPairError(f"color pair ({alpha}, {alpha})")
    a = coloring.assignment
    sub = 0
    for v in range(g.n):
        if a[v] == alpha or a[v] == beta:
            sub |= 1 << v
    pair = (alpha, beta)
    return [_classify(g.adj, comp, pair) for comp in mask_components(g.adj, sub)]


def swap_component(coloring: Coloring, comp: KempeComponent) -> Coloring:
    """Exchange the component's two colors on exactly its vertices.

    An involution; properness is preserved because the component is closed
    under two-class adjacency. Raises StaleComponentError when the snapshot
    no longer matches the coloring.
    """
    alpha, beta = comp.color_pair
    out = list(coloring.assignment)
    for v in comp.vertices:
        c = out[v]
        if c == alpha:
            out[v] = beta
        elif c == beta:
            out[v] = alpha
        else:
            raise StaleComponentError(
                f"vertex {v} carries color {c}, not {alpha}/{beta}"
            )
    return Coloring(tuple(out))


def find_branching_component(g: Graph, coloring: Coloring) -> KempeComponent | None:
    """Least component that is neither a path nor a cycle, over all color pairs.

    None means every two-class component is a path or a cycle, which is
    guaranteed for claw-free graphs.
    """
    present = sorted(set(coloring.assignment))
    for i, alpha in enumerate(present):
        for beta in present[i + 1 :]:
            for comp in two_color_components(g, coloring, alpha, beta):
                if comp.shape == OTHER:
                    return comp
    return None
