"""Growing candidates back from a peripherally-4-connected graph."""
from __future__ import annotations

from itertools import islice

import pytest

from ccrit.canon import is_isomorphic
from ccrit.connectivity import is_k_connected
from ccrit.crossing import is_k_crossing_critical
from ccrit.graph import GraphError, ekey
from ccrit.growback import GrowChoice, build, choices, grow_back, one_drawing_pairs
from ccrit.named import complete_bipartite, named_graph
from ccrit.reduction import planar_3_reduce

K33 = named_graph("K33")


def test_one_drawing_pairs_of_k33():
    pairs = one_drawing_pairs(K33)
    assert len(pairs) == 18
    for e, f in pairs:
        assert not set(e) & set(f)  # crossing edges are never adjacent
    assert one_drawing_pairs(complete_bipartite(3, 4)) == []


def test_no_bits_gives_back_the_base():
    g = build(K33, GrowChoice(frozenset(), ()))
    assert g is not None and g.graph == K33
    assert all(len(c) == 1 for c in g.classes.values())


def test_choices_respect_the_pruning_rule():
    pairs = one_drawing_pairs(K33)
    sizes = []
    for ch in islice(choices(K33), 300):
        assert all(e in ch.bits or f in ch.bits for e, f in pairs)
        sizes.append(len(ch.bits))
    assert sizes == sorted(sizes)  # fewest set bits first
    assert sizes[0] >= 1


def test_classes_partition_the_grown_graph():
    for ch in islice(choices(K33), 120):
        gg = build(K33, ch)
        if gg is None:
            continue
        parts = [x for c in gg.classes.values() for x in c]
        assert sorted(parts) == sorted(gg.graph.vertices)
        assert set(gg.classes) == set(K33.vertices)
        assert all(v in gg.classes[v] for v in K33.vertices)


def test_grown_graphs_reduce_back_to_the_base():
    n = 0
    for ch in islice(choices(K33), 150):
        gg = build(K33, ch)
        if gg is None or gg.graph.n == K33.n or not is_k_connected(gg.graph, 3):
            continue
        tr = planar_3_reduce(gg.graph)
        assert is_isomorphic(tr.result.simple(), K33), ch.describe()
        n += 1
    assert n > 20


def test_double_bits_between_high_degree_vertices():
    k5 = named_graph("K5")
    g = build(k5, GrowChoice(frozenset({ekey(0, 1)}), ()))
    assert g is not None and g.graph.mult(0, 1) == 2 and g.graph.n == 5


def test_describe_is_readable():
    ch = GrowChoice(frozenset({ekey(0, 3)}), ((0, None),), ((3, "triangle"),))
    assert ch.describe() == "bits=0-3 U=0:all noses=3:triangle"


def test_grow_back_needs_a_simple_base():
    with pytest.raises(GraphError):
        build(K33.with_edge(0, 3), GrowChoice(frozenset(), ()))


def test_budgeted_grow_back_is_undecided_and_finds_critical_graphs():
    r = grow_back(K33, max_tests=3)
    assert r.status == "undecided" and r.tested == 3
    for gg, verdict in r.critical:
        assert verdict.critical and verdict.cr == 2
        assert is_k_crossing_critical(gg.graph, 2).critical
