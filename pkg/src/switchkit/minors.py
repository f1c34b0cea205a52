"""Exhaustive minor containment for tiny graphs.

A minor model assigns each pattern vertex a nonempty connected branch set,
pairwise disjoint, with at least one crossing edge for every pattern edge.
Branch sets are enumerated outright, which is why this is capped at hosts
of 8 vertices (the outerplanar recognizer only ever needs 5).
"""

from __future__ import annotations

from .errors import TooLarge
from .graph import Graph, bits_of

MINOR_CAP = 8


def _connected_subsets(g: Graph, allowed: int) -> list[int]:
    """All nonempty subsets of ``allowed`` inducing a connected subgraph."""
    verts = bits_of(allowed)
    out = []
    for sub in range(1, 1 << len(verts)):
        mask = 0
        for i, v in enumerate(verts):
            if sub >> i & 1:
                mask |= 1 << v
        low = mask & -mask
        comp = low
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= g.rows[v] & mask
            frontier = nxt & ~comp
            comp |= nxt & mask
        if comp == mask:
            out.append(mask)
    return out


def has_minor(g: Graph, h: Graph) -> bool:
    """True iff h is a minor of g (vertex/edge deletions plus contractions)."""
    if g.n > MINOR_CAP:
        raise TooLarge(f"minor test capped at n <= {MINOR_CAP}, got {g.n}")
    if h.n > g.n or h.edge_count() > g.edge_count():
        return False
    if h.n == 0:
        return True
    # hardest pattern vertices first
    horder = sorted(range(h.n), key=lambda v: -h.degree(v))

    def touches(a: int, b: int) -> bool:
        for v in bits_of(a):
            if g.rows[v] & b:
                return True
        return False

    def assign(pos: int, used: int, branches: dict[int, int]) -> bool:
        if pos == h.n:
            return True
        hv = horder[pos]
        for branch in _connected_subsets(g, g.full_mask() & ~used):
            ok = True
            for hu, bu in branches.items():
                if h.has_edge(hu, hv) and not touches(branch, bu):
                    ok = False
                    break
            if not ok:
                continue
            branches[hv] = branch
            if assign(pos + 1, used | branch, branches):
                return True
            del branches[hv]
        return False

    return assign(0, 0, {})
