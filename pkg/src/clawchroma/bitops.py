"""Small helpers for vertex sets stored as integer bitmasks.

Bit i of a mask corresponds to vertex i. Python integers give word-parallel
membership, intersection and popcount at any width, so the same helpers back
both the pure kernels and the high-level modules.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def bits_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def mask_is_clique(adj: tuple[int, ...], mask: int) -> bool:
    """True iff every pair inside mask is adjacent."""
    for v in iter_bits(mask):
        if mask & ~adj[v] & ~(1 << v):
            return False
    return True


def mask_components(adj: tuple[int, ...], sub: int) -> list[int]:
    """Connected components of the subgraph induced by sub.

    Returned as masks, ordered by least contained vertex.
    """
    comps = []
    rest = sub
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            grow = 0
            m = frontier
            while m:
                b = m & -m
                grow |= adj[b.bit_length() - 1]
                m ^= b
            grow &= sub & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        rest &= ~comp
    return comps
