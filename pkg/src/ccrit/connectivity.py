"""Connectivity predicates: small vertex cuts, peripheral and internal 4-connectivity, hugs."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .graph import Edge, Multigraph, ekey


@dataclass(frozen=True)
class CutWitness:
    kind: str  # vertex-cut | 3-cut-partition | hug | isthmus
    vertices: tuple[int, ...] = ()
    edges: tuple[Edge, ...] = ()
    sides: tuple[tuple[int, ...], ...] = ()

    def replay(self, g: Multigraph) -> bool:
        """Check the witness against ``g``."""
        if self.kind == "vertex-cut":
            h = g.without_vertices(self.vertices)
            return h.n == 0 or not h.is_connected() or h.n <= 1 and g.n > 1
        if self.kind == "3-cut-partition":
            h = g.without_vertices(self.vertices)
            a, b = (set(s) for s in self.sides)
            if len(a) < 2 or len(b) < 2 or a & b or (a | b) != h.vertex_set:
                return False
            return not any(h.has_edge(x, y) for x in a for y in b)
        if self.kind == "hug":
            (u, w), = self.edges
            (v,) = self.vertices
            return g.has_edge(u, w) and g.has_edge(u, v) and g.has_edge(w, v) and g.num_neighbors(v) == 3
        if self.kind == "isthmus":
            (u, w), = self.edges
            return g.has_edge(u, w) and not g.without_edge(u, w, 0).is_connected()
        return False


@dataclass(frozen=True)
class Connectivity:
    value: int
    capped: bool
    witness: CutWitness | None = field(default=None, compare=False)

    def __str__(self) -> str:
        return f">{self.value - 1}" if self.capped else str(self.value)


def _simple_nx(g: Multigraph) -> nx.Graph:
    return g.to_networkx()


def vertex_connectivity(g: Multigraph, cap: int = 4) -> Connectivity:
    """Exact vertex connectivity up to ``cap``; above it reports ``>cap``.

    A complete graph K_n has connectivity n-1 and no cut witness.
    """
    if cap > 4 or cap < 0:
        raise ValueError("cap must be in 0..4")
    if g.n <= 1:
        return Connectivity(0, False)
    comps = g.components()
    if len(comps) > 1:
        return Connectivity(0, False, CutWitness("vertex-cut", (), sides=tuple(tuple(sorted(c)) for c in comps)))
    h = _simple_nx(g)
    k = nx.node_connectivity(h)
    if k > cap:
        return Connectivity(cap + 1, True)
    if k == g.n - 1:
        return Connectivity(k, False)
    cut = tuple(sorted(nx.minimum_node_cut(h)))
    rest = g.without_vertices(cut)
    return Connectivity(k, False, CutWitness("vertex-cut", cut, sides=tuple(tuple(sorted(c)) for c in rest.components())))


def is_k_connected(g: Multigraph, k: int) -> bool:
    """More than ``k`` vertices and no vertex cut of fewer than ``k`` vertices."""
    if g.n <= k:
        return False
    return nx.node_connectivity(_simple_nx(g)) >= k


def three_cuts(g: Multigraph) -> list[tuple[int, int, int]]:
    """All 3-vertex cuts of a 3-connected graph, sorted."""
    out: set[tuple[int, int, int]] = set()
    h = _simple_nx(g)
    verts = g.vertices
    for a, b in combinations(verts, 2):
        r = h.copy()
        r.remove_nodes_from((a, b))
        if r.number_of_nodes() < 2:
            continue
        for c in nx.articulation_points(r):
            out.add(tuple(sorted((a, b, c))))  # type: ignore[arg-type]
    return sorted(out)


def _balanced_split(comps: list[frozenset[int]]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Split components into two groups of >= 2 vertices each, if possible."""
    total = sum(len(c) for c in comps)
    reach: dict[int, tuple[int, ...]] = {0: ()}
    for i, c in enumerate(comps):
        for s, chosen in list(reach.items()):
            t = s + len(c)
            if t not in reach:
                reach[t] = chosen + (i,)
    for s, chosen in sorted(reach.items()):
        if 2 <= s <= total - 2 and 0 < len(chosen) < len(comps):
            a = tuple(sorted(v for i in chosen for v in comps[i]))
            b = tuple(sorted(v for i, c in enumerate(comps) if i not in chosen for v in c))
            return a, b
    return None


def p4c_witness(g: Multigraph) -> CutWitness | None:
    """``None`` if ``g`` is peripherally-4-connected, else a failure witness."""
    if g.n < 4 or not is_k_connected(g, 3):
        c = vertex_connectivity(g, 3)
        return c.witness or CutWitness("vertex-cut", ())
    for s in three_cuts(g):
        comps = g.without_vertices(s).components()
        split = _balanced_split(comps)
        if split is not None:
            return CutWitness("3-cut-partition", s, sides=split)
    return None


def is_peripherally_4_connected(g: Multigraph) -> tuple[bool, CutWitness | None]:
    w = p4c_witness(g)
    return w is None, w


def is_p4c(g: Multigraph) -> bool:
    return p4c_witness(g) is None


def reducible_3_cuts(g: Multigraph) -> list[tuple[tuple[int, int, int], list[frozenset[int]]]]:
    """3-cuts whose components can be split into two parts of >= 2 vertices."""
    out = []
    for s in three_cuts(g):
        comps = g.without_vertices(s).components()
        if _balanced_split(comps) is not None:
            out.append((s, comps))
    return out


# ---------------------------------------------------------------- hugs
@dataclass(frozen=True)
class HugRecord:
    edge: tuple  # an edge (u, w), or a pair of edges for a simultaneous pair
    head: int | tuple[int, int]
    kind: str  # deletable | bear | simultaneously-deletable-pair


def _hugs_raw(g: Multigraph) -> list[tuple[Edge, int]]:
    out = []
    for (u, w), _ in g.edges():
        common = set(g.neighbors(u)) & set(g.neighbors(w))
        for v in sorted(common):
            if g.num_neighbors(v) == 3:
                out.append(((u, w), v))
    return out


def _is_bear(g: Multigraph, e: Edge, v: int, hugs: list[tuple[Edge, int]]) -> bool:
    for u, w in (e, e[::-1]):
        nu = set(g.neighbors(u))
        for f, t in hugs:
            if u not in f or f == e or t == v:
                continue
            if nu <= {t, v, w} | set(g.neighbors(t)):
                return True
    return False


def find_hugs(g: Multigraph) -> list[HugRecord]:
    """Hugs of ``g`` with their heads and classification.

    A hug is an edge ``e`` lying in a triangle whose third vertex (the head)
    has exactly three distinct neighbours.  Each (edge, head) incidence is
    reported; a simultaneously deletable pair is two bear hugs sharing an end.
    """
    raw = _hugs_raw(g)
    recs: list[HugRecord] = []
    bears: list[tuple[Edge, int]] = []
    for e, v in raw:
        bear = _is_bear(g, e, v, raw)
        recs.append(HugRecord(e, v, "bear" if bear else "deletable"))
        if bear:
            bears.append((e, v))
    seen: set[tuple[Edge, Edge]] = set()
    for (e1, v1), (e2, v2) in combinations(bears, 2):
        if e1 != e2 and set(e1) & set(e2):
            key = (min(e1, e2), max(e1, e2))
            if key not in seen:
                seen.add(key)
                recs.append(HugRecord(key, (v1, v2), "simultaneously-deletable-pair"))
    return recs


def has_hug(g: Multigraph) -> bool:
    return bool(_hugs_raw(g))


def is_internally_4_connected(g: Multigraph) -> bool:
    return is_p4c(g) and not has_hug(g)


is_i4c = is_internally_4_connected


def edge_key(u: int, v: int) -> Edge:
    return ekey(u, v)
