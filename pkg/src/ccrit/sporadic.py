"""The 2-crossing-critical graphs that are not 3-connected or not peripherally-4-connected.

* 13 graphs that are not 2-connected: two Kuratowski blocks, disjoint or
  sharing one vertex, where the shared vertex is a node or a vertex
  subdividing an edge of each block.
* 36 graphs that are 2-connected with two non-planar cleavage units: two
  unit types out of five glued directly along a hinge (16), or through a
  3- or 4-cycle unit (20).
* 4 graphs from K_{3,4}^* by contracting 0..3 matching edges.

Everything is generated and then deduplicated by canonical form; the
expected counts are checked by the tests, not assumed here.  Note that the
graphs using unit type 4 or 5 do not verify 2-critical: deleting a suitable
edge of such a unit leaves it non-planar.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .canon import canonical_form
from .cleavage import cleavage_units, digonal_kernel
from .connectivity import vertex_connectivity
from .graph import GraphError, Multigraph, identify, subdivide
from .named import complete_bipartite, k34_star_contraction
from .graph import complete_graph


@dataclass(frozen=True)
class Sporadic:
    family: str  # sporadic-13 | sporadic-36 | four-K34*
    name: str
    graph: Multigraph


def _kuratowski(name: str) -> Multigraph:
    return complete_graph(5) if name == "K5" else complete_bipartite(3, 3)


def _attach_point(g: Multigraph, at: str) -> tuple[Multigraph, int]:
    """A node of ``g`` or a new vertex subdividing one of its edges (all are equivalent)."""
    if at == "node":
        return g, 0
    (u, v) = g.edge_classes()[0]
    h, (s,) = subdivide(g, u, v, 1)
    return h, s


def not_2_connected() -> list[Sporadic]:
    out, seen = [], set()
    for a, b in combinations_with_replacement(("K5", "K33"), 2):
        ga, gb = _kuratowski(a), _kuratowski(b)
        u, sh = ga.disjoint_union(gb)
        _add(out, seen, Sporadic("sporadic-13", f"{a}+{b}", u))
        for pa, pb in product(("node", "subdivision"), repeat=2):
            ha, xa = _attach_point(ga, pa)
            hb, xb = _attach_point(gb, pb)
            u, sh = ha.disjoint_union(hb)
            g = identify(u, [(xa, sh[xb])])
            _add(out, seen, Sporadic("sporadic-13", f"{a}({pa})*{b}({pb})", g))
    return out


# ---------------------------------------------------------- unit types
def unit_type(t: int) -> tuple[Multigraph, int, int]:
    """Unit type t (1..5) as (graph without the virtual edge, u, v)."""
    k33 = complete_bipartite(3, 3)  # sides 0,1,2 | 3,4,5
    if t == 1:
        return complete_graph(5).without_edge(0, 1), 0, 1
    if t == 2:
        return k33.without_edge(0, 3), 0, 3
    if t == 3:
        return k33, 0, 1  # virtual edge joins two nodes on one side
    if t == 4:
        g, (s,) = subdivide(k33, 0, 3, 1)
        return g, s, 4  # node 4 is not incident with the subdivided edge 0-3
    if t == 5:
        g, (s,) = subdivide(k33, 0, 3, 1)
        g, (r,) = subdivide(g, 1, 4, 1)
        return g, s, r
    raise GraphError("unit types are 1..5")


def _glue_pair(t1: int, t2: int, flip: bool) -> Multigraph:
    g1, u1, v1 = unit_type(t1)
    g2, u2, v2 = unit_type(t2)
    if flip:
        u2, v2 = v2, u2
    un, sh = g1.disjoint_union(g2)
    return identify(un, [(u1, sh[u2]), (v1, sh[v2])])


def _glue_triangle(t1: int, t2: int, flip: bool) -> Multigraph:
    """Hinges u1v1 and u2v2 share v1 = u2; the real edge u1 v2 closes the 3-cycle."""
    g1, u1, v1 = unit_type(t1)
    g2, u2, v2 = unit_type(t2)
    if flip:
        u2, v2 = v2, u2
    un, sh = g1.disjoint_union(g2)
    g = identify(un, [(v1, sh[u2])])
    return g.with_edge(u1, sh[v2])


def _glue_square(t1: int, t2: int, flip: bool) -> Multigraph:
    """Opposite hinges u1v1 and u2v2 of a 4-cycle, with real edges v1 u2 and v2 u1."""
    g1, u1, v1 = unit_type(t1)
    g2, u2, v2 = unit_type(t2)
    if flip:
        u2, v2 = v2, u2
    un, sh = g1.disjoint_union(g2)
    return un.with_edge(v1, sh[u2]).with_edge(sh[v2], u1)


def two_nonplanar_units() -> tuple[list[Sporadic], list[Sporadic]]:
    """(two-unit graphs, three-unit graphs)."""
    two, three, seen = [], [], set()
    for t1, t2 in combinations_with_replacement(range(1, 6), 2):
        for flip in (False, True):
            _add(two, seen, Sporadic("sporadic-36", f"units{t1}{t2}{'f' if flip else ''}", _glue_pair(t1, t2, flip)))
    for t1 in (1, 2):
        for t2 in range(1, 6):
            if t2 in (1, 2) and t2 < t1:
                continue
            for flip in (False, True):
                tri = _glue_triangle(t1, t2, flip)
                _add(three, seen, Sporadic("sporadic-36", f"tri{t1}{t2}{'f' if flip else ''}", tri))
                sq = _glue_square(t1, t2, flip)
                _add(three, seen, Sporadic("sporadic-36", f"sq{t1}{t2}{'f' if flip else ''}", sq))
    return two, three


def k34_family() -> list[Sporadic]:
    return [Sporadic("four-K34*", f"K34*/{j}", k34_star_contraction(j)) for j in range(4)]


def _add(out: list[Sporadic], seen: set[bytes], s: Sporadic) -> None:
    key = canonical_form(s.graph)
    if key not in seen:
        seen.add(key)
        out.append(s)


def generate_sporadics() -> dict[str, list[Sporadic]]:
    two, three = two_nonplanar_units()
    return {
        "sporadic-13": not_2_connected(),
        "sporadic-36": two + three,
        "four-K34*": k34_family(),
    }


# ------------------------------------------------------------ classify
@dataclass(frozen=True)
class Classification:
    kind: str  # sporadic-13 | sporadic-36 | digonal-kernel | 3-connected | unmatched
    name: str = ""
    kernel: Multigraph | None = None

    def __str__(self) -> str:
        return f"{self.kind}:{self.name}" if self.name else self.kind


_TABLE: dict[bytes, Sporadic] | None = None


def _table() -> dict[bytes, Sporadic]:
    global _TABLE
    if _TABLE is None:
        _TABLE = {}
        for ss in generate_sporadics().values():
            for s in ss:
                _TABLE[canonical_form(s.graph)] = s
    return _TABLE


def classify_non_3_connected(g: Multigraph) -> Classification:
    """Place a (2-critical) graph of connectivity < 3 in the trichotomy.

    Graphs that are not 2-connected, or have two non-planar cleavage units,
    are looked up by canonical form; otherwise the digonal kernel is
    returned.  Criticality of the input is the caller's responsibility.
    """
    if vertex_connectivity(g, 3).value >= 3 and g.n > 3:
        return Classification("3-connected")
    hit = _table().get(canonical_form(g))
    if hit is not None and hit.family != "four-K34*":
        return Classification(hit.family, hit.name)
    if vertex_connectivity(g, 2).value < 2:
        return Classification("unmatched")
    if len(cleavage_units(g).nonplanar_units()) != 1:
        return Classification("unmatched")
    return Classification("digonal-kernel", "", digonal_kernel(g))
