"""H-bridges, overlap diagrams of cycles, and Tutte's planarity criterion."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations

from .graph import Edge, GraphError, Multigraph, ekey


@dataclass(frozen=True)
class Bridge:
    nucleus: frozenset[int]
    attachments: frozenset[int]
    edges: tuple[Edge, ...]  # edge instances (repeated for parallel copies)

    @property
    def is_edge_bridge(self) -> bool:
        return not self.nucleus


@dataclass(frozen=True)
class BridgeDecomposition:
    host: Multigraph
    sub: Multigraph
    bridges: tuple[Bridge, ...]
    cycle: tuple[int, ...] | None = None

    def residual_arcs(self, b: Bridge) -> list[tuple[int, ...]]:
        """Maximal subpaths of the cycle meeting ``b`` only in their ends."""
        if self.cycle is None:
            raise GraphError("residual arcs need a cycle")
        return residual_arcs(self.cycle, b.attachments)

    def reconstitute(self) -> Multigraph:
        edges = [(u, v, m) for (u, v), m in self.sub.edges()]
        for b in self.bridges:
            edges.extend(b.edges)
        return Multigraph(self.host.vertex_set, edges)


def residual_arcs(cycle: tuple[int, ...], att: frozenset[int]) -> list[tuple[int, ...]]:
    k = len(cycle)
    idx = [i for i, v in enumerate(cycle) if v in att]
    if not idx:
        return [tuple(cycle) + (cycle[0],)]
    arcs = []
    for a, b in zip(idx, idx[1:] + [idx[0] + k]):
        arc = tuple(cycle[j % k] for j in range(a, b + 1))
        arcs.append(arc)
    return arcs


def bridges(g: Multigraph, h: Multigraph, cycle: tuple[int, ...] | None = None) -> BridgeDecomposition:
    """Decompose ``E(g) - E(h)`` into h-bridges."""
    hv = h.vertex_set
    if not hv <= g.vertex_set:
        raise GraphError("h is not a subgraph of g")
    for (u, v), m in h.edges():
        if g.mult(u, v) < m:
            raise GraphError(f"edge {u}-{v} of h not in g")
    out: list[Bridge] = []
    # edge bridges: leftover copies between vertices of h
    for (u, v), m in g.edges():
        if u in hv and v in hv:
            for _ in range(m - h.mult(u, v)):
                out.append(Bridge(frozenset(), frozenset((u, v)), ((u, v),)))
    rest = g.without_vertices(hv)
    for comp in rest.components():
        edges: list[Edge] = []
        att: set[int] = set()
        for x in comp:
            for y, m in g.adjacency(x).items():
                if y in comp and y < x:
                    continue
                edges.extend([ekey(x, y)] * m)
                if y in hv:
                    att.add(y)
        out.append(Bridge(frozenset(comp), frozenset(att), tuple(sorted(edges))))
    out.sort(key=lambda b: (sorted(b.attachments), sorted(b.nucleus), b.edges))
    return BridgeDecomposition(g, h, tuple(out), cycle)


def cycle_subgraph(cycle: tuple[int, ...]) -> Multigraph:
    k = len(cycle)
    return Multigraph(cycle, [(cycle[i], cycle[(i + 1) % k]) for i in range(k)])


# --------------------------------------------------------------- overlaps
def _positions(cycle: tuple[int, ...], att: frozenset[int]) -> list[int]:
    return sorted(i for i, v in enumerate(cycle) if v in att)


def avoid(cycle: tuple[int, ...], a: Bridge, b: Bridge) -> bool:
    """True iff all attachments of ``b`` lie on one residual arc of ``a``."""
    for arc in residual_arcs(cycle, a.attachments):
        if b.attachments <= set(arc):
            return True
    return False


def are_skew(cycle: tuple[int, ...], a: Bridge, b: Bridge) -> bool:
    """Attachments x, y of a and u, v of b alternating x, u, y, v around the cycle."""
    pa, pb = _positions(cycle, a.attachments), _positions(cycle, b.attachments)
    for x, y in combinations(pa, 2):
        inside = any(x < u < y for u in pb)
        outside = any(u < x or u > y for u in pb)
        if inside and outside:
            return True
    return False


def are_3_equivalent(a: Bridge, b: Bridge) -> bool:
    return len(a.attachments & b.attachments) >= 3


@dataclass(frozen=True)
class OverlapDiagram:
    cycle: tuple[int, ...]
    bridges: tuple[Bridge, ...]
    edges: tuple[tuple[int, int, str], ...]  # (i, j, skew | 3-equivalent)
    coloring: tuple[int, ...] | None  # bipartition certificate
    odd_cycle: tuple[int, ...] | None  # bridge indices of an odd cycle

    @property
    def bipartite(self) -> bool:
        return self.coloring is not None


def overlap_diagram(g: Multigraph, cycle: tuple[int, ...]) -> OverlapDiagram:
    """Overlap diagram of the bridges of ``cycle``, with its certificate."""
    cycle = tuple(cycle)
    c = cycle_subgraph(cycle)
    if len(set(cycle)) != len(cycle) or len(cycle) < 3:
        raise GraphError("cycle must have >= 3 distinct vertices")
    dec = bridges(g, c, cycle)
    bs = dec.bridges
    edges = []
    for i, j in combinations(range(len(bs)), 2):
        if are_skew(cycle, bs[i], bs[j]):
            edges.append((i, j, "skew"))
        elif are_3_equivalent(bs[i], bs[j]):
            edges.append((i, j, "3-equivalent"))
    coloring, odd = _two_colour(len(bs), [(i, j) for i, j, _ in edges])
    return OverlapDiagram(cycle, bs, tuple(edges), coloring, odd)


def _two_colour(n: int, edges: list[tuple[int, int]]):
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    col = [-1] * n
    parent = [-1] * n
    for s in range(n):
        if col[s] >= 0:
            continue
        col[s] = 0
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y in adj[x]:
                if col[y] < 0:
                    col[y] = 1 - col[x]
                    parent[y] = x
                    dq.append(y)
                elif col[y] == col[x]:
                    return None, _odd_cycle(x, y, parent)
    return tuple(col), None


def _odd_cycle(x: int, y: int, parent: list[int]) -> tuple[int, ...]:
    px = [x]
    while parent[px[-1]] >= 0:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] >= 0:
        py.append(parent[py[-1]])
    sx = set(px)
    lca = next(v for v in py if v in sx)
    a = px[: px.index(lca) + 1]
    b = py[: py.index(lca)]
    return tuple(a + b[::-1])


# ------------------------------------------------------------- Tutte test
def simple_cycles(g: Multigraph):
    """Every cycle of the underlying simple graph once, as a vertex tuple."""
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    for s in sorted(adj):
        path = [s]
        onpath = {s}

        def rec(x: int):
            for y in sorted(adj[x]):
                if y < s:
                    continue
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif y > s and y not in onpath:
                    path.append(y)
                    onpath.add(y)
                    yield from rec(y)
                    path.pop()
                    onpath.discard(y)

        yield from rec(s)


def tutte_planarity(g: Multigraph) -> bool:
    """Planar iff every cycle has a bipartite overlap diagram (forests trivially)."""
    s = g.simple()
    for cyc in simple_cycles(s):
        if not overlap_diagram(s, cyc).bipartite:
            return False
    return True


# --------------------------------------------------------- ordering lemma
def _span(path: tuple[int, ...], att: frozenset[int]) -> tuple[int, int] | None:
    idx = [i for i, v in enumerate(path) if v in att]
    if not idx:
        return None
    return min(idx), max(idx)


def ordering_valid(P: tuple[int, ...], Q: tuple[int, ...], bs: list[Bridge], order: tuple[int, ...]) -> bool:
    """Do P_{B1}, ..., P_{Bk} and Q_{B1}, ..., Q_{Bk} occur in this order along P and Q,
    for some choice of orientations of P and Q?

    P_B is the minimal subpath of P containing the attachments of B on P.
    Consecutive subpaths may share an end vertex.
    """

    def along(path: tuple[int, ...]) -> bool:
        spans = [_span(path, bs[i].attachments) for i in order]
        if any(s is None for s in spans):
            return False
        return all(spans[t][1] <= spans[t + 1][0] for t in range(len(spans) - 1))  # type: ignore[index]

    okP = along(P) or along(P[::-1])
    okQ = along(Q) or along(Q[::-1])
    if not (okP and okQ):
        return False
    # orientations must be chosen jointly for the whole order
    for p in (P, P[::-1]):
        for q in (Q, Q[::-1]):
            if along(p) and along(q):
                return True
    return False


def ordering(P: tuple[int, ...], Q: tuple[int, ...], bs: list[Bridge]) -> tuple[int, ...] | None:
    """An order of the bridges realising the ordering lemma, with P read forwards."""
    spans = {i: _span(P, b.attachments) for i, b in enumerate(bs)}
    if any(s is None for s in spans.values()):
        return None
    order = tuple(sorted(range(len(bs)), key=lambda i: (spans[i], _span(Q, bs[i].attachments) or (0, 0))))
    if ordering_valid(P, Q, bs, order):
        return order
    return None


def all_orderings(P: tuple[int, ...], Q: tuple[int, ...], bs: list[Bridge]) -> list[tuple[int, ...]]:
    return [o for o in permutations(range(len(bs))) if ordering_valid(P, Q, bs, o)]
