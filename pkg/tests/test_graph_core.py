"""Multigraph container, serialisation, canonical forms, connectivity and named graphs."""
from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ccrit.canon import canonical_form, is_isomorphic
from ccrit.connectivity import (
    find_hugs,
    is_i4c,
    is_p4c,
    p4c_witness,
    three_cuts,
    vertex_connectivity,
)
from ccrit.formats import ParseError, decode_graph, detect_format, encode_graph
from ccrit.graph import (
    DegenerateInputError,
    GraphError,
    Multigraph,
    complete_graph,
    contract_set,
    cycle_graph,
    identify,
    subdivide,
    suppress_degree_two,
)
from ccrit.named import (
    bicycle_wheel,
    c3_box_c3,
    complete_bipartite,
    k34_star,
    k34_star_contraction,
    named_graph,
    petersen,
    q3,
    wheel,
)

from conftest import multigraphs, simple_graphs


# ------------------------------------------------------------ oracles
def brute_connectivity(g: Multigraph) -> int:
    """Smallest vertex set whose removal disconnects g (n-1 for complete graphs)."""
    vs = g.vertices
    if not g.is_connected():
        return 0
    for k in range(len(vs) - 1):
        for s in combinations(vs, k):
            h = g.without_vertices(s)
            if h.n >= 2 and not h.is_connected():
                return k
    return len(vs) - 1


def brute_p4c(g: Multigraph) -> bool:
    """Every 3-cut leaves one single vertex on one side, by listing all splits."""
    if brute_connectivity(g) < 3 or g.n < 4:
        return brute_connectivity(g) >= 3 or g.n <= 3 and g.is_connected()
    for s in combinations(g.vertices, 3):
        h = g.without_vertices(s)
        comps = h.components()
        if len(comps) < 2:
            continue
        # some split of the components puts >= 2 vertices on both sides
        sizes = [len(c) for c in comps]
        for r in range(1, len(comps)):
            for pick in combinations(range(len(comps)), r):
                a = sum(sizes[i] for i in pick)
                if a >= 2 and h.n - a >= 2:
                    return False
    return True


def nx_iso(a: Multigraph, b: Multigraph) -> bool:
    return nx.is_isomorphic(
        a.to_networkx(multigraph=True), b.to_networkx(multigraph=True)
    )


# ---------------------------------------------------------- Multigraph
def test_multiplicities_merge_instead_of_duplicating():
    g = Multigraph(range(2), [(0, 1), (1, 0), (0, 1, 2)])
    assert g.edges() == [((0, 1), 4)]
    assert g.m == 4 and g.degree(0) == 4 and g.num_neighbors(0) == 1


def test_self_loops_and_zero_multiplicity_are_rejected():
    with pytest.raises(GraphError):
        Multigraph(range(2), [(1, 1)])
    with pytest.raises(GraphError):
        Multigraph(range(2), [(0, 1, 0)])


def test_edge_ends_are_always_vertices():
    g = Multigraph(range(2), [(0, 5)])
    assert g.vertex_set == {0, 1, 5}


def test_without_edge_zero_removes_every_copy():
    g = Multigraph(range(2), [(0, 1, 3)])
    assert g.without_edge(0, 1).mult(0, 1) == 2
    assert not g.without_edge(0, 1, 0).has_edge(0, 1)


def test_suppression_restores_k4_from_a_subdivided_edge():
    h, new = subdivide(complete_graph(4), 0, 1, 2)
    assert len(new) == 2
    assert is_isomorphic(suppress_degree_two(h), complete_graph(4))


def test_suppression_turns_two_parallel_paths_into_a_digon():
    # triangle 0,1,2 plus two length-2 paths from 0 to 3 and an edge 3-1, 3-2
    g = Multigraph(range(6), [(0, 1), (1, 2), (0, 2), (0, 4), (4, 3), (0, 5), (5, 3), (3, 1), (3, 2)])
    s = suppress_degree_two(g)
    assert s.mult(0, 3) == 2
    assert all(s.degree(v) != 2 for v in s.vertices)


def test_suppression_is_identity_at_min_degree_three():
    assert suppress_degree_two(petersen()) == petersen()


def test_suppression_rejects_cycle_components():
    with pytest.raises(DegenerateInputError):
        suppress_degree_two(cycle_graph(5))


@given(multigraphs(min_n=4, max_n=7, max_mult=2))
def test_suppression_is_idempotent_and_keeps_high_degrees(g):
    try:
        s = suppress_degree_two(g)
    except DegenerateInputError:
        return
    assert suppress_degree_two(s) == s
    high = sorted(d for d in (g.degree(v) for v in g.vertices) if d >= 3)
    assert sorted(d for d in (s.degree(v) for v in s.vertices) if d >= 3) == high


@given(multigraphs(min_n=4, max_n=7, max_mult=2), st.randoms(use_true_random=False))
def test_suppression_is_order_independent(g, r):
    perm = list(g.vertices)
    r.shuffle(perm)
    h = g.relabel(dict(zip(g.vertices, perm)))
    try:
        a, b = suppress_degree_two(g), suppress_degree_two(h)
    except DegenerateInputError:
        return
    assert canonical_form(a) == canonical_form(b)


def test_contract_set_examples():
    k5 = complete_graph(5)
    assert contract_set(k5, [2]) == k5
    whole = contract_set(k5, k5.vertices)
    assert whole.n == 1 and whole.m == 0
    with pytest.raises(GraphError):
        contract_set(cycle_graph(6), [0, 3])


def test_contracting_the_matching_of_k34_star_gives_k34():
    ks = k34_star()
    assert ks.n == 10 and ks.m == 15
    assert is_isomorphic(k34_star_contraction(3), complete_bipartite(3, 4))
    one = k34_star_contraction(1)
    assert one.n == 9


# ------------------------------------------------------------- formats
def test_graph6_k5():
    g = decode_graph("D~{", "graph6")
    assert (g.n, g.m) == (5, 10)
    assert encode_graph(complete_graph(5), "graph6") == "D~{"


def test_edgelist_digon_and_single_vertex():
    d = decode_graph("n=2\n0-1 x2\n", "edgelist")
    assert d.edges() == [((0, 1), 2)]
    e = decode_graph("n=1\n", "edgelist")
    assert (e.n, e.m) == (1, 0)


def test_graph6_refuses_multigraphs():
    with pytest.raises(GraphError):
        encode_graph(Multigraph(range(2), [(0, 1, 2)]), "graph6")


def test_parse_errors_report_the_offset():
    with pytest.raises(ParseError, match="byte"):
        decode_graph("D~", "graph6")
    with pytest.raises(ParseError):
        decode_graph(":Fa@x^\x7f", "sparse6")


def test_detect_format():
    assert detect_format("D~{") == "graph6"
    assert detect_format(":Fa@x^") == "sparse6"
    assert detect_format("n=3\n0-1\n") == "edgelist"


@given(multigraphs(min_n=1, max_n=12, max_mult=2))
def test_sparse6_and_edgelist_round_trip(g):
    for fmt in ("sparse6", "edgelist"):
        text = encode_graph(g, fmt)
        assert decode_graph(text, fmt) == g
        assert encode_graph(decode_graph(text, fmt), fmt) == text


@given(simple_graphs(min_n=1, max_n=12))
def test_graph6_round_trip(g):
    assert decode_graph(encode_graph(g, "graph6"), "graph6") == g


def test_sparse6_agrees_with_networkx():
    # an independent encoder for simple graphs
    for g in (petersen(), complete_graph(5), c3_box_c3()):
        ours = decode_graph(encode_graph(g, "sparse6"), "sparse6")
        theirs = nx.from_sparse6_bytes(encode_graph(g, "sparse6").encode())
        assert nx.is_isomorphic(ours.to_networkx(), theirs)
        g6 = nx.to_graph6_bytes(g.to_networkx(), header=False).decode().strip()
        assert g6 == encode_graph(g, "graph6")


# ------------------------------------------------------------- canonical
def test_v6_is_k33():
    assert canonical_form(named_graph("V2n", 3)) == canonical_form(complete_bipartite(3, 3))
    assert canonical_form(named_graph("V2n", 2)) == canonical_form(complete_graph(4))


def test_multiplicity_changes_the_form():
    assert canonical_form(Multigraph(range(2), [(0, 1, 2)])) != canonical_form(Multigraph(range(2), [(0, 1)]))


def test_k5_relabelled_a_hundred_times():
    rng = random.Random(5)
    k5 = complete_graph(5)
    base = canonical_form(k5)
    for _ in range(100):
        perm = list(range(10, 15))
        rng.shuffle(perm)
        assert canonical_form(k5.relabel(dict(zip(range(5), perm)))) == base


@given(multigraphs(min_n=1, max_n=7, max_mult=2), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabelling(g, r):
    perm = list(range(100, 100 + g.n))
    r.shuffle(perm)
    assert canonical_form(g.relabel(dict(zip(g.vertices, perm)))) == canonical_form(g)


@given(multigraphs(min_n=1, max_n=6, max_mult=2), multigraphs(min_n=1, max_n=6, max_mult=2))
def test_canonical_form_decides_isomorphism(a, b):
    assert (canonical_form(a) == canonical_form(b)) == nx_iso(a, b)


# ----------------------------------------------------------- connectivity
def test_connectivity_examples():
    assert str(vertex_connectivity(complete_graph(5), cap=3)) == ">3"
    assert vertex_connectivity(complete_graph(5)).value == 4
    two, _ = complete_graph(5).disjoint_union(complete_graph(5))
    glued = identify(two, [(0, 5)])
    c = vertex_connectivity(glued)
    assert c.value == 1 and c.witness.vertices == (0,)
    assert c.witness.replay(glued)
    assert vertex_connectivity(named_graph("V2n", 5)).value == 3


@given(simple_graphs(min_n=2, max_n=7))
def test_connectivity_matches_brute_force(g):
    c = vertex_connectivity(g, cap=4)
    exact = brute_connectivity(g)
    if c.capped:
        assert exact > 4
    else:
        assert c.value == min(exact, 4) or exact == c.value
    if c.witness is not None:
        assert c.witness.replay(g)


def test_p4c_examples():
    assert is_p4c(complete_graph(5))
    assert is_p4c(complete_bipartite(3, 3))
    # two K4's sharing a triangle: each side of the 3-cut is one vertex
    k4k4 = Multigraph(range(5), [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2)])
    assert is_p4c(k4k4)
    # two 5-spoke wheels glued along the rim path 1-2-3
    w = wheel(5)
    two, mp = w.disjoint_union(w)
    glued = identify(two, [(v, mp[v]) for v in (1, 2, 3)])
    assert vertex_connectivity(glued).value == 3
    assert not is_p4c(glued)
    wit = p4c_witness(glued)
    assert wit is not None and wit.kind == "3-cut-partition" and wit.replay(glued)
    assert not brute_p4c(glued)


@given(simple_graphs(min_n=4, max_n=8))
def test_p4c_matches_brute_force(g):
    if brute_connectivity(g) < 3:
        assert not is_p4c(g)
        return
    assert is_p4c(g) == brute_p4c(g)
    w = p4c_witness(g)
    if w is not None:
        assert w.replay(g)


def test_three_cuts_of_k33_are_the_neighbourhoods():
    cuts = set(three_cuts(complete_bipartite(3, 3)))
    assert cuts == {(0, 1, 2), (3, 4, 5)}


def test_hug_examples():
    k4 = complete_graph(4)
    assert {r.edge for r in find_hugs(k4) if r.kind != "simultaneously-deletable-pair"} == {(a, b) for a, b in combinations(range(4), 2)}
    assert find_hugs(c3_box_c3()) == []
    assert is_i4c(c3_box_c3())


def test_bear_hug_pair():
    # u=0 with neighbours w=1, x=2, y=3; heads a=4 on ux and b=5 on uy
    # and no edge uw left for a hug, so the two bear hugs form a pair
    g = Multigraph(range(8), [
        (0, 1), (0, 2), (0, 3), (4, 0), (4, 2), (4, 6), (5, 0), (5, 3), (5, 7),
        (1, 6), (1, 7), (2, 6), (3, 7), (2, 7), (3, 6), (1, 2),
    ])
    recs = find_hugs(g)
    kinds = {r.kind for r in recs}
    assert "bear" in kinds or "deletable" in kinds
    for r in recs:
        if r.kind == "simultaneously-deletable-pair":
            e1, e2 = r.edge
            assert set(e1) & set(e2)


# ------------------------------------------------------------- named
def test_named_counts():
    assert is_isomorphic(named_graph("V2n", 2), complete_graph(4))
    v10 = named_graph("V2n", 5)
    assert (v10.n, v10.m) == (10, 15)
    assert sum(1 for t in v10.edge_tags.values() if t.startswith("r")) == 10
    assert (petersen().n, petersen().m) == (10, 15)
    assert (c3_box_c3().n, c3_box_c3().m) == (9, 18)
    assert (q3().n, q3().m) == (8, 12)
    g = bicycle_wheel("xybxyb")
    assert (g.n, g.m) == (8, 15)
    assert g.has_edge(6, 7)
    with pytest.raises(GraphError):
        named_graph("no-such-graph")
