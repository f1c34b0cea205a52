"""Named small graphs and constructors for parameterized families.

Names are lowercase ASCII and stable for CLI use: fixed graphs by word
("paw", "domino"), parameterized ones by spelling out the parameter
("p4", "c7", "k5", "4k1", "k1_3", "k3+k1").
"""

from __future__ import annotations

from .graph import Graph, disjoint_union


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def edgeless_graph(k: int) -> Graph:
    return Graph.empty(k)


def star_graph(k: int) -> Graph:
    """K_{1,k}: center 0, leaves 1..k."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(k: int) -> Graph:
    """W_k: a C_k plus a hub adjacent to every cycle vertex."""
    edges = [(i, (i + 1) % k) for i in range(k)] + [(k, i) for i in range(k)]
    return Graph.from_edges(k + 1, edges)


def _fixed_patterns() -> dict[str, Graph]:
    paw = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    claw = star_graph(3)
    bull = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
    gem = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
    house = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    net = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)])
    sun = Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]
    )
    domino = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    return {
        "paw": paw,
        "diamond": diamond,
        "claw": claw,
        "bull": bull,
        "gem": gem,
        "house": house,
        "net": net,
        "sun": sun,
        "domino": domino,
        "w4": wheel_graph(4),
        "w5": wheel_graph(5),
        "k2+2k1": disjoint_union(complete_graph(2), edgeless_graph(2)),
        "k3+k1": disjoint_union(complete_graph(3), edgeless_graph(1)),
        "p3+k1": disjoint_union(path_graph(3), edgeless_graph(1)),
        "p4+k1": disjoint_union(path_graph(4), edgeless_graph(1)),
        "k2+k1": disjoint_union(complete_graph(2), edgeless_graph(1)),
        "2k2": disjoint_union(complete_graph(2), complete_graph(2)),
        "3k2": disjoint_union(*([complete_graph(2)] * 3)),
    }


_FIXED = _fixed_patterns()


def pattern(name: str) -> Graph:
    """Look up a pattern by name; parameterized spellings are parsed."""
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]
    try:
        if key.startswith("k1_"):
            return star_graph(int(key[3:]))
        if key.startswith("p") and key[1:].isdigit():
            return path_graph(int(key[1:]))
        if key.startswith("c") and key[1:].isdigit():
            return cycle_graph(int(key[1:]))
        if key.startswith("k") and key[1:].isdigit():
            return complete_graph(int(key[1:]))
        if key.endswith("k1") and key[:-2].isdigit():
            return edgeless_graph(int(key[:-2]))
    except ValueError as exc:
        raise KeyError(f"bad pattern parameter in {name!r}") from exc
    raise KeyError(f"unknown pattern {name!r}")


def pattern_names() -> list[str]:
    """The fixed table plus representative parameterized spellings."""
    return sorted(_FIXED) + ["c<k>", "p<k>", "k<k>", "<k>k1", "k1_<k>"]
