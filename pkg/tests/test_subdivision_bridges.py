"""Subdivision search, bridges, overlap diagrams and the cycle-based planarity test."""
from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
from hypothesis import given, settings

from ccrit.bridges import (
    all_orderings,
    bridges,
    cycle_subgraph,
    ordering,
    overlap_diagram,
    simple_cycles,
    tutte_planarity,
)
from ccrit.crossing import planar_bool
from ccrit.graph import Multigraph, complete_graph, cycle_graph
from ccrit.named import c3_box_c3, complete_bipartite, mobius_ladder, named_graph, petersen, q3, wheel
from ccrit.subdivision import find_subdivision, max_v2n, validate_embedding

from conftest import simple_graphs


def contains_cubic_subdivision(g: Multigraph, pattern: Multigraph) -> bool:
    """Brute force over edge subsets: some subgraph with degrees 2 and 3 suppresses to the pattern."""
    target = pattern.simple().to_networkx()
    edges = g.simple().edge_classes()
    for k in range(pattern.m, len(edges) + 1):
        for sub in combinations(edges, k):
            h = nx.Graph(list(sub))
            degs = dict(h.degree())
            if sum(1 for d in degs.values() if d == 3) != pattern.n:
                continue
            if any(d not in (2, 3) for d in degs.values()):
                continue
            # suppress degree-2 vertices
            h = nx.MultiGraph(h)
            for v in [v for v, d in degs.items() if d == 2]:
                a, b = list(h.neighbors(v)) if len(set(h.neighbors(v))) == 2 else (None, None)
                if a is None:
                    break
                h.remove_node(v)
                h.add_edge(a, b)
            else:
                if nx.is_isomorphic(nx.Graph(h), target) and h.number_of_edges() == pattern.m:
                    return True
    return False


# -------------------------------------------------------- subdivisions
def test_petersen_contains_k33():
    r = find_subdivision(petersen(), named_graph("V2n", 3))
    assert r.status == "found"
    assert validate_embedding(petersen(), named_graph("V2n", 3).simple(), r.embedding)


def test_impossible_patterns():
    assert find_subdivision(named_graph("V2n", 5), named_graph("V2n", 6)).status == "none"
    assert find_subdivision(complete_graph(5), complete_bipartite(3, 3)).status == "none"


def test_budget_exhaustion_is_undecided():
    r = find_subdivision(petersen(), mobius_ladder(4).simple(), budget=1)
    assert r.status in ("undecided", "found")
    n, st = max_v2n(c3_box_c3(), cap=5, budget=1)
    assert st == "undecided"


def test_max_v2n_examples():
    assert max_v2n(c3_box_c3(), cap=5) == (3, "exact")
    assert max_v2n(named_graph("V2n", 5), cap=6) == (5, "exact")
    assert max_v2n(q3(), cap=5) == (2, "exact")
    assert max_v2n(cycle_graph(5), cap=4) == (None, "exact")


def test_max_v2n_of_petersen_matches_brute_force():
    n, st = max_v2n(petersen(), cap=5)
    assert st == "exact"
    assert contains_cubic_subdivision(petersen(), mobius_ladder(n))
    assert not contains_cubic_subdivision(petersen(), mobius_ladder(n + 1))


def test_v8_in_c3xc3_matches_brute_force():
    assert contains_cubic_subdivision(c3_box_c3(), mobius_ladder(3))
    assert not contains_cubic_subdivision(c3_box_c3(), mobius_ladder(4))


@settings(max_examples=20)
@given(simple_graphs(min_n=6, max_n=8))
def test_k33_search_matches_brute_force(g):
    if g.m > 14:
        return
    r = find_subdivision(g, complete_bipartite(3, 3))
    assert (r.status == "found") == contains_cubic_subdivision(g, complete_bipartite(3, 3))
    if r:
        assert validate_embedding(g, complete_bipartite(3, 3), r.embedding)


# ------------------------------------------------------------ bridges
def test_bridge_examples():
    k4 = complete_graph(4)
    d = bridges(k4, cycle_subgraph((0, 1, 2)), (0, 1, 2))
    assert len(d.bridges) == 1
    (b,) = d.bridges
    assert b.nucleus == {3} and b.attachments == {0, 1, 2}

    k5 = complete_graph(5)
    d = bridges(k5, cycle_subgraph((0, 1, 2, 3, 4)))
    assert len(d.bridges) == 5 and all(b.is_edge_bridge for b in d.bridges)

    w = wheel(5)
    rim = (1, 2, 3, 4, 5)
    d = bridges(w, cycle_subgraph(rim), rim)
    assert len(d.bridges) == 1 and d.bridges[0].attachments == set(rim)
    assert d.residual_arcs(d.bridges[0])[0] == (1, 2)


@given(simple_graphs(min_n=4, max_n=8))
def test_bridges_partition_the_edges(g):
    cycles = list(simple_cycles(g))
    if not cycles:
        return
    c = cycles[0]
    d = bridges(g, cycle_subgraph(c), c)
    assert d.reconstitute() == g
    seen = [e for b in d.bridges for e in b.edges]
    assert len(seen) == len(set(seen)) == g.m - len(c)


def test_overlap_diagram_examples():
    k5 = overlap_diagram(complete_graph(5), (0, 1, 2, 3, 4))
    assert len(k5.edges) == 5 and not k5.bipartite and len(k5.odd_cycle) % 2 == 1
    k4 = overlap_diagram(complete_graph(4), (0, 1, 2))
    assert k4.edges == () and k4.bipartite
    k33 = overlap_diagram(complete_bipartite(3, 3), (0, 3, 1, 4, 2, 5))
    assert len(k33.bridges) == 3 and len(k33.edges) == 3 and not k33.bipartite


def test_tutte_examples():
    assert not tutte_planarity(complete_bipartite(3, 3))
    tree = Multigraph(range(6), [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert tutte_planarity(tree)
    assert tutte_planarity(q3())


@settings(max_examples=30)
@given(simple_graphs(min_n=1, max_n=8))
def test_tutte_agrees_with_planarity(g):
    assert tutte_planarity(g) == planar_bool(g)


def test_ordering_lemma_on_outerplanar_chords():
    # two paths P and Q joined by non-crossing rungs: the rung order is unique up to inversion
    rng = random.Random(11)
    for _ in range(20):
        k = rng.randint(2, 5)
        P = tuple(range(0, 2 * k, 2))
        Q = tuple(range(1, 2 * k, 2))
        g = Multigraph(range(2 * k), list(zip(P, P[1:])) + list(zip(Q, Q[1:])) + list(zip(P, Q)))
        h = Multigraph(range(2 * k), list(zip(P, P[1:])) + list(zip(Q, Q[1:])))
        bs = list(bridges(g, h).bridges)
        rng.shuffle(bs)
        assert ordering(P, Q, bs) is not None
        orders = all_orderings(P, Q, bs)
        assert len(orders) == 2 and orders[0] == orders[1][::-1]
