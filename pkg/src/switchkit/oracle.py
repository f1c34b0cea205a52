"""Brute-force switching oracles.

These are the ground truth every polynomial algorithm in the toolkit is
checked against.  They scan switching sets in increasing popcount with
vertex 0 pinned outside A (S(G,A) = S(G,V\\A) makes that half redundant) and
return the first witness, so results are deterministic.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator

from .errors import TooLarge
from .graph import Graph, VertexSet, switch

ORACLE_CAP = 22

Predicate = Callable[[Graph], bool]


def subset_masks(g: Graph) -> Iterator[int]:
    """Masks over V with vertex 0 excluded, by increasing popcount then lex."""
    verts = range(1, g.n)
    for k in range(max(g.n, 1)):
        for combo in combinations(verts, k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            yield mask


def _check_cap(g: Graph) -> None:
    if g.n > ORACLE_CAP:
        raise TooLarge(f"oracle capped at n <= {ORACLE_CAP}, got {g.n}")


def oracle_upper(g: Graph, in_class: Predicate) -> VertexSet | None:
    """Smallest-first A with S(g,A) in the class, or None if no switch is."""
    _check_cap(g)
    for mask in subset_masks(g):
        if in_class(switch(g, mask)):
            return VertexSet(g.n, mask)
    return None


def oracle_lower(g: Graph, in_class: Predicate) -> bool:
    """True iff every switch of g lies in the class."""
    _check_cap(g)
    return all(in_class(switch(g, mask)) for mask in subset_masks(g))


def oracle_upper_all(g: Graph, in_class: Predicate) -> list[VertexSet]:
    """Every A (vertex 0 excluded) whose switch lands in the class."""
    _check_cap(g)
    return [
        VertexSet(g.n, mask) for mask in subset_masks(g) if in_class(switch(g, mask))
    ]


def normalize_mask(g: Graph, mask: int) -> int:
    """Complement-symmetry normal form: the version with vertex 0 outside A."""
    if g.n and mask & 1:
        return g.full_mask() & ~mask
    return mask
