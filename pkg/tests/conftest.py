"""Shared fixtures: one graph per isomorphism class for small orders.

Orders 0..7 come from the networkx graph atlas; order 8 is generated once
per session by one-vertex extension of the order-7 representatives,
deduplicated by canonical form (12346 classes, ~30s).
"""

from __future__ import annotations

import random

import pytest
from networkx.generators.atlas import graph_atlas_g

from switchkit.canonical import canonical_form
from switchkit.graph import Graph


def _from_nx(G) -> Graph:
    return Graph.from_edges(
        G.number_of_nodes(), [(int(u), int(v)) for u, v in G.edges()]
    )


@pytest.fixture(scope="session")
def atlas_by_order() -> dict[int, list[Graph]]:
    out: dict[int, list[Graph]] = {0: [Graph.empty(0)]}
    for G in graph_atlas_g()[1:]:
        out.setdefault(G.number_of_nodes(), []).append(_from_nx(G))
    return out


@pytest.fixture(scope="session")
def graphs_up_to_7(atlas_by_order) -> list[Graph]:
    return [g for n in range(8) for g in atlas_by_order[n]]


@pytest.fixture(scope="session")
def reps8(atlas_by_order) -> list[Graph]:
    reps: dict[bytes, Graph] = {}
    for g in atlas_by_order[7]:
        for nb in range(1 << 7):
            rows = [r | ((nb >> v & 1) << 7) for v, r in enumerate(g.rows)]
            rows.append(nb)
            h = Graph(8, tuple(rows))
            form = canonical_form(h)
            if form not in reps:
                reps[form] = h
    assert len(reps) == 12346  # the known count of 8-vertex graphs
    return list(reps.values())


def random_graph(rng: random.Random, n: int, density: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < density
    ]
    return Graph.from_edges(n, edges)
