"""The named pattern table and parameterized constructors."""

import pytest

from switchkit.canonical import canonical_form
from switchkit.graph import complement
from switchkit.patterns import (
    complete_bipartite_graph,
    cycle_graph,
    path_graph,
    pattern,
    pattern_names,
    star_graph,
    wheel_graph,
)


def test_complement_identities():
    assert canonical_form(pattern("claw")) == canonical_form(
        complement(pattern("k3+k1"))
    )
    assert canonical_form(pattern("paw")) == canonical_form(
        complement(pattern("p3+k1"))
    )
    assert canonical_form(pattern("diamond")) == canonical_form(
        complement(pattern("k2+2k1"))
    )
    # the house is the complement of P5
    assert canonical_form(pattern("house")) == canonical_form(
        complement(path_graph(5))
    )


@pytest.mark.parametrize(
    "name,n,m,degs",
    [
        ("paw", 4, 4, [1, 2, 2, 3]),
        ("diamond", 4, 5, [2, 2, 3, 3]),
        ("claw", 4, 3, [1, 1, 1, 3]),
        ("bull", 5, 5, [1, 1, 2, 3, 3]),
        ("gem", 5, 7, [2, 2, 3, 3, 4]),
        ("house", 5, 6, [2, 2, 2, 3, 3]),
        ("net", 6, 6, [1, 1, 1, 3, 3, 3]),
        ("sun", 6, 9, [2, 2, 2, 4, 4, 4]),
        ("domino", 6, 7, [2, 2, 2, 2, 3, 3]),
        ("w4", 5, 8, [3, 3, 3, 3, 4]),
        ("w5", 6, 10, [3, 3, 3, 3, 3, 5]),
    ],
)
def test_fixed_patterns_shape(name, n, m, degs):
    g = pattern(name)
    assert g.n == n and g.edge_count() == m
    assert sorted(g.degrees()) == degs


def test_parameterized_spellings():
    assert pattern("p4") == path_graph(4)
    assert pattern("c7") == cycle_graph(7)
    assert pattern("k1_3").edges() == star_graph(3).edges()
    assert pattern("k5").edge_count() == 10
    assert pattern("4k1").n == 4 and pattern("4k1").edge_count() == 0


def test_sun_contains_bull_and_net_contains_bull():
    from switchkit.search import contains_induced

    assert contains_induced(pattern("sun"), pattern("bull")) is not None
    assert contains_induced(pattern("net"), pattern("bull")) is not None


def test_unknown_pattern():
    with pytest.raises(KeyError):
        pattern("nonesuch")


def test_names_listing():
    names = pattern_names()
    assert "paw" in names and "domino" in names


def test_wheel_and_complete_bipartite():
    assert wheel_graph(5).degrees().count(5) == 1
    k23 = complete_bipartite_graph(2, 3)
    assert sorted(k23.degrees()) == [2, 2, 2, 3, 3]
