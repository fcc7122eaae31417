"""Immutable undirected multigraphs without loops.

Parallel edges are stored as a multiplicity on the vertex pair, never as
repeated entries.  Every editing helper returns a new graph.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import Union

import networkx as nx

Edge = tuple[int, int]
EdgeSpec = Union[tuple[int, int], tuple[int, int, int]]


class GraphError(ValueError):
    """Raised on malformed graph construction or invalid editing requests."""


class DegenerateInputError(GraphError):
    """Raised when an operation is undefined on its input, e.g. a cycle component."""


def ekey(u: int, v: int) -> Edge:
    """Normalised key for the vertex pair {u, v}."""
    if u == v:
        raise GraphError(f"self-loop at {u} is not allowed")
    return (u, v) if u < v else (v, u)


class Multigraph:
    """A loopless multigraph on integer vertex ids.

    ``edges`` may contain ``(u, v)`` pairs (counted once per occurrence) or
    ``(u, v, m)`` triples.  Optional tags are opaque provenance strings.
    """

    __slots__ = ("_vertices", "_mult", "_adj", "_vtags", "_etags", "_hash")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[EdgeSpec] = (),
        vertex_tags: Mapping[int, str] | None = None,
        edge_tags: Mapping[Edge, str] | None = None,
    ) -> None:
        verts = set(int(v) for v in vertices)
        mult: dict[Edge, int] = {}
        for spec in edges:
            if len(spec) == 2:
                u, v = spec  # type: ignore[misc]
                m = 1
            else:
                u, v, m = spec  # type: ignore[misc]
            if m < 1:
                raise GraphError(f"multiplicity must be >= 1, got {m} on {u}-{v}")
            k = ekey(int(u), int(v))
            mult[k] = mult.get(k, 0) + int(m)
            verts.add(k[0])
            verts.add(k[1])
        adj: dict[int, dict[int, int]] = {v: {} for v in verts}
        for (u, v), m in mult.items():
            adj[u][v] = m
            adj[v][u] = m
        self._vertices = frozenset(verts)
        self._mult = mult
        self._adj = adj
        self._vtags = dict(vertex_tags or {})
        self._etags = {ekey(*k): t for k, t in (edge_tags or {}).items() if ekey(*k) in mult}
        self._hash: int | None = None

    # ------------------------------------------------------------------ basic
    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._vertices))

    @property
    def vertex_set(self) -> frozenset[int]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self._mult.values())

    @property
    def vertex_tags(self) -> dict[int, str]:
        return dict(self._vtags)

    @property
    def edge_tags(self) -> dict[Edge, str]:
        return dict(self._etags)

    def edges(self) -> list[tuple[Edge, int]]:
        """Sorted list of ``((u, v), multiplicity)`` with ``u < v``."""
        return sorted(self._mult.items())

    def edge_classes(self) -> list[Edge]:
        return sorted(self._mult)

    def edge_instances(self) -> list[Edge]:
        """Every edge repeated according to its multiplicity, sorted."""
        out: list[Edge] = []
        for e, m in sorted(self._mult.items()):
            out.extend([e] * m)
        return out

    def mult(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self._mult.get(ekey(u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return self.mult(u, v) > 0

    def has_vertex(self, v: int) -> bool:
        return v in self._vertices

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self._adj[v]))

    def adjacency(self, v: int) -> dict[int, int]:
        """Neighbour -> multiplicity mapping (a copy)."""
        return dict(self._adj[v])

    def degree(self, v: int) -> int:
        """Degree counting parallel edges."""
        return sum(self._adj[v].values())

    def num_neighbors(self, v: int) -> int:
        return len(self._adj[v])

    def max_multiplicity(self) -> int:
        return max(self._mult.values(), default=0)

    def is_simple(self) -> bool:
        return self.max_multiplicity() <= 1

    def min_degree(self) -> int:
        return min((self.degree(v) for v in self._vertices), default=0)

    # ------------------------------------------------------------- equality
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._mult == other._mult

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, frozenset(self._mult.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m}, classes={len(self._mult)})"

    # -------------------------------------------------------------- editing
    def _rebuild(
        self,
        vertices: Iterable[int],
        mult: Mapping[Edge, int],
        vtags: Mapping[int, str] | None = None,
        etags: Mapping[Edge, str] | None = None,
    ) -> Multigraph:
        vt = self._vtags if vtags is None else vtags
        et = self._etags if etags is None else etags
        verts = set(vertices)
        return Multigraph(
            verts,
            [(u, v, m) for (u, v), m in mult.items() if m > 0],
            {v: t for v, t in vt.items() if v in verts},
            et,
        )

    def with_edge(self, u: int, v: int, m: int = 1, tag: str | None = None) -> Multigraph:
        mult = dict(self._mult)
        k = ekey(u, v)
        mult[k] = mult.get(k, 0) + m
        etags = dict(self._etags)
        if tag is not None:
            etags[k] = tag
        return self._rebuild(self._vertices | {u, v}, mult, etags=etags)

    def without_edge(self, u: int, v: int, m: int = 1) -> Multigraph:
        """Remove ``m`` copies of ``uv`` (all copies if ``m`` is 0)."""
        k = ekey(u, v)
        have = self._mult.get(k, 0)
        if have == 0:
            raise GraphError(f"edge {u}-{v} not present")
        if m == 0 or m > have:
            m = have
        mult = dict(self._mult)
        mult[k] = have - m
        return self._rebuild(self._vertices, mult)

    def with_multiplicity(self, u: int, v: int, m: int) -> Multigraph:
        mult = dict(self._mult)
        mult[ekey(u, v)] = m
        return self._rebuild(self._vertices | {u, v}, mult)

    def with_vertices(self, vs: Iterable[int]) -> Multigraph:
        return self._rebuild(self._vertices | set(vs), self._mult)

    def without_vertices(self, vs: Iterable[int]) -> Multigraph:
        drop = set(vs)
        mult = {e: m for e, m in self._mult.items() if e[0] not in drop and e[1] not in drop}
        return self._rebuild(self._vertices - drop, mult)

    def subgraph(self, vs: Iterable[int]) -> Multigraph:
        keep = set(vs)
        return self.without_vertices(self._vertices - keep)

    def edge_subgraph(self, edges: Iterable[EdgeSpec]) -> Multigraph:
        """Subgraph formed by the given edges (with their ends)."""
        return Multigraph((), edges, edge_tags=self._etags)

    def relabel(self, mapping: Mapping[int, int]) -> Multigraph:
        """Rename vertices; ``mapping`` must be injective on the vertex set."""
        f = {v: mapping.get(v, v) for v in self._vertices}
        if len(set(f.values())) != len(f):
            raise GraphError("relabelling is not injective")
        mult: dict[Edge, int] = {}
        for (u, v), m in self._mult.items():
            mult[ekey(f[u], f[v])] = m
        etags = {ekey(f[u], f[v]): t for (u, v), t in self._etags.items()}
        vtags = {f[v]: t for v, t in self._vtags.items()}
        return Multigraph(f.values(), [(u, v, m) for (u, v), m in mult.items()], vtags, etags)

    def consecutive(self) -> tuple[Multigraph, dict[int, int]]:
        """Relabel to ``0..n-1`` in sorted order; returns graph and old->new map."""
        mp = {v: i for i, v in enumerate(self.vertices)}
        return self.relabel(mp), mp

    def simple(self) -> Multigraph:
        """The underlying simple graph."""
        return Multigraph(self._vertices, list(self._mult), self._vtags, self._etags)

    def with_tags(
        self,
        vertex_tags: Mapping[int, str] | None = None,
        edge_tags: Mapping[Edge, str] | None = None,
    ) -> Multigraph:
        vt = dict(self._vtags)
        vt.update(vertex_tags or {})
        et = dict(self._etags)
        et.update({ekey(*k): t for k, t in (edge_tags or {}).items()})
        return self._rebuild(self._vertices, self._mult, vt, et)

    def disjoint_union(self, other: Multigraph) -> tuple[Multigraph, dict[int, int]]:
        """Union with a shifted copy of ``other``; returns graph and the shift map."""
        base = max(self._vertices, default=-1) + 1
        low = min(other._vertices, default=0)
        shift = {v: v - low + base for v in other._vertices}
        o = other.relabel(shift)
        edges = [(u, v, m) for (u, v), m in self._mult.items()]
        edges += [(u, v, m) for (u, v), m in o._mult.items()]
        vt = dict(self._vtags)
        vt.update(o._vtags)
        et = dict(self._etags)
        et.update(o._etags)
        return Multigraph(self._vertices | o._vertices, edges, vt, et), shift

    # ---------------------------------------------------------- structure
    def to_networkx(self, multigraph: bool = False) -> nx.Graph:
        """Convert; simple by default (multiplicities stored as ``mult``)."""
        if multigraph:
            gm = nx.MultiGraph()
            gm.add_nodes_from(self._vertices)
            for (u, v), m in self._mult.items():
                for _ in range(m):
                    gm.add_edge(u, v)
            return gm
        g = nx.Graph()
        g.add_nodes_from(self._vertices)
        for (u, v), m in self._mult.items():
            g.add_edge(u, v, mult=m)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Multigraph:
        if g.is_multigraph():
            return cls(g.nodes(), [(u, v) for u, v in g.edges() if u != v])
        return cls(g.nodes(), [(u, v, d.get("mult", 1)) for u, v, d in g.edges(data=True) if u != v])

    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        out: list[frozenset[int]] = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


# ------------------------------------------------------------------ helpers
def contract_set(g: Multigraph, s: Iterable[int], keep: int | None = None) -> Multigraph:
    """Contract the connected vertex set ``s`` to a single vertex.

    The surviving vertex is ``keep`` (default ``min(s)``).  Edges from ``s`` to
    an outside vertex are merged by adding multiplicities; edges inside ``s``
    disappear.
    """
    sset = set(s)
    if not sset:
        raise GraphError("cannot contract an empty set")
    if not sset <= g.vertex_set:
        raise GraphError("contracted set contains unknown vertices")
    if not g.subgraph(sset).is_connected():
        raise GraphError(f"set {sorted(sset)} does not induce a connected subgraph")
    rep = min(sset) if keep is None else keep
    if rep not in sset:
        raise GraphError("kept vertex must belong to the contracted set")
    mult: dict[Edge, int] = {}
    for (u, v), m in g.edges():
        a = rep if u in sset else u
        b = rep if v in sset else v
        if a == b:
            continue
        k = ekey(a, b)
        mult[k] = mult.get(k, 0) + m
    verts = (g.vertex_set - sset) | {rep}
    vt = {v: t for v, t in g.vertex_tags.items() if v in verts}
    return Multigraph(verts, [(u, v, m) for (u, v), m in mult.items()], vt)


def identify(g: Multigraph, pairs: Iterable[tuple[int, int]]) -> Multigraph:
    """Identify vertex pairs (b merged into a).  Identified adjacent ends are an error."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            lo, hi = min(ra, rb), max(ra, rb)
            parent[hi] = lo
    f = {v: find(v) for v in g.vertices}
    edges = []
    etags: dict[Edge, str] = {}
    for (u, v), m in g.edges():
        a, b = f[u], f[v]
        if a == b:
            raise GraphError(f"identification turns edge {u}-{v} into a loop")
        edges.append((a, b, m))
        if (u, v) in g.edge_tags:
            etags[ekey(a, b)] = g.edge_tags[(u, v)]
    vt = {f[v]: t for v, t in g.vertex_tags.items()}
    return Multigraph(set(f.values()), edges, vt, etags)


def suppress_degree_two(g: Multigraph) -> Multigraph:
    """Suppress every vertex of degree two, keeping parallel edges created.

    Vertices are processed in ascending id; a component that is a cycle (or
    would become a loop) is rejected.
    """
    for comp in g.components():
        if len(comp) >= 2 and all(g.degree(v) == 2 for v in comp):
            raise DegenerateInputError(f"component {sorted(comp)} is a cycle")
    mult = {e: m for e, m in g.edges()}
    adj: dict[int, dict[int, int]] = {v: g.adjacency(v) for v in g.vertices}
    etags = g.edge_tags
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            nb = adj[v]
            if sum(nb.values()) != 2:
                continue
            if len(nb) == 1:
                raise DegenerateInputError(f"suppressing {v} would create a loop")
            a, b = sorted(nb)
            ta, tb = etags.pop(ekey(a, v), None), etags.pop(ekey(b, v), None)
            for x in (a, b):
                del adj[x][v]
                del mult[ekey(x, v)]
            del adj[v]
            k = ekey(a, b)
            mult[k] = mult.get(k, 0) + 1
            adj[a][b] = adj[a].get(b, 0) + 1
            adj[b][a] = adj[a][b]
            if ta is not None and ta == tb and k not in etags:
                etags[k] = ta
            changed = True
    vt = {v: t for v, t in g.vertex_tags.items() if v in adj}
    return Multigraph(adj.keys(), [(u, v, m) for (u, v), m in mult.items()], vt, etags)


def subdivide(g: Multigraph, u: int, v: int, k: int = 1) -> tuple[Multigraph, list[int]]:
    """Replace one copy of ``uv`` by a path with ``k`` new internal vertices."""
    base = max(g.vertex_set) + 1
    new = list(range(base, base + k))
    h = g.without_edge(u, v, 1).with_vertices(new)
    path = [u, *new, v]
    for a, b in zip(path, path[1:]):
        h = h.with_edge(a, b)
    return h, new


def cycle_graph(n: int) -> Multigraph:
    return Multigraph(range(n), [(i, (i + 1) % n) for i in range(n)]) if n >= 3 else Multigraph(range(n))


def complete_graph(n: int) -> Multigraph:
    return Multigraph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])
