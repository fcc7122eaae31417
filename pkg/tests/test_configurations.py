"""The derived catalog of basic (T,U)-configurations."""
from __future__ import annotations

from collections import Counter

import pytest

from ccrit.configurations import (
    ATT,
    completion,
    configuration_catalog,
    enumerate_basic,
    format_configuration,
    host_feasible,
    is_basic,
    load_catalog,
    parse_configuration,
    validate_configuration,
)
from ccrit.connectivity import is_k_connected
from ccrit.crossing import planar_bool
from ccrit.graph import Multigraph
from ccrit.reduction import Configuration, apex_graph, is_bridge_of, tu_profile

CAT = configuration_catalog()
ALLOWED = {(0, 0), (1, 0), (2, 1), (3, 2), (3, 3)}


def dog() -> Multigraph:
    return Multigraph(range(5), [(3, 4), (3, 1, 2), (4, 2, 2), (3, 0), (4, 0)])


def test_catalog_size_is_at_most_twenty():
    # a published bound; the derived catalog is larger and this is logged
    assert len(CAT) <= 20, f"derived catalog has {len(CAT)} configurations"


def test_every_configuration_has_few_vertices():
    assert max(c.nucleus_size for c in CAT) <= 6
    assert all(c.graph.n <= 9 for c in CAT)


def test_class_counts_are_pinned():
    counts = Counter(c.profile().sizes for c in CAT)
    assert dict(counts) == {(0, 0): 1, (1, 0): 3, (2, 1): 9, (3, 2): 6, (3, 3): 23}
    assert set(counts) == ALLOWED


def test_entries_validate_by_both_routes():
    for c, T, U in load_catalog():
        assert validate_configuration(c, T, U) == [], c.name
        p = c.profile()
        assert p.sizes in ALLOWED
        assert p.consistency_issues() == []


def test_entries_respect_the_host_restrictions():
    for c in CAT:
        h = c.graph
        assert c.att == ATT
        assert is_bridge_of(h, ATT)
        assert planar_bool(apex_graph(h, ATT))
        assert all(h.degree(t) in (1, 2) for t in ATT)
        assert all(h.degree(v) >= 3 for v in h.vertices if v not in ATT)
        assert all(m <= 2 for _, m in h.edges())
        assert is_k_connected(completion(h), 3)


def test_names_and_profiles_agree():
    for c in CAT:
        t, u = c.profile().sizes
        assert c.name.startswith(f"TU{t}{u}-n{c.nucleus_size}-")
    assert len({c.name for c in CAT}) == len(CAT)


def test_format_parse_round_trip():
    for c in CAT:
        line = format_configuration(c)
        back, T, U = parse_configuration(line)
        assert back.graph == c.graph and back.name == c.name
        assert (T, U) == (c.profile().T, c.profile().U)


def test_wrong_declared_profile_is_reported():
    c = CAT[0]
    p = c.profile()
    bad = frozenset(ATT) - p.T
    assert validate_configuration(c, bad, p.U)


def test_claw_is_the_only_zero_zero_entry():
    (claw,) = [c for c in CAT if c.profile().sizes == (0, 0)]
    assert claw.nucleus_size == 1 and claw.graph.m == 3


def test_dog_gadget_is_not_basic_but_reduces_to_a_catalog_dog():
    h = dog()
    assert tu_profile(h, ATT).doglike
    assert host_feasible(h)
    dogs = [c for c in CAT if c.profile().doglike]
    assert dogs and all(c.profile().nose is not None for c in dogs)


def test_adding_an_edge_to_a_basic_configuration_is_not_basic():
    for c in CAT[:8]:
        h = c.graph
        inner = [v for v in h.vertices if v not in ATT]
        if len(inner) < 2:
            continue
        bigger = h.with_edge(inner[0], inner[1])
        if tu_profile(bigger, ATT).sizes == c.profile().sizes and max(m for _, m in bigger.edges()) <= 2:
            p, q = tu_profile(bigger, ATT), c.profile()
            if (p.T, p.U) == (q.T, q.U):
                assert not is_basic(bigger)


def test_small_enumeration_is_a_prefix_of_the_catalog():
    small = {format_configuration(c) for c in enumerate_basic(2)}
    shipped = {format_configuration(c) for c in CAT}
    assert small <= shipped
    assert {c.nucleus_size for c in enumerate_basic(2)} <= {1, 2}


@pytest.mark.slow
def test_full_enumeration_reproduces_the_shipped_data():
    assert [format_configuration(c) for c in enumerate_basic(4)] == [format_configuration(c) for c in CAT]


def test_relabelling_permutes_the_profile():
    c = next(c for c in CAT if c.profile().doglike)
    nose = c.profile().nose
    for perm in ((1, 0, 2), (2, 1, 0), (0, 2, 1)):
        r = c.relabelled(perm)
        assert isinstance(r, Configuration)
        assert r.profile().nose == nose  # the graph is the same, only the order changes
        assert r.att[perm.index(0)] == c.att[0]
