"""Topological containment: does a host graph contain a subdivision of a pattern?

Branch and bound over node images.  Pattern vertices are placed one at a
time (highest degree first, then those with most placed neighbours); after
every placement the pattern edges to already placed vertices are routed as
internally disjoint host paths through unused vertices, with backtracking
over every path choice.  The search is exhaustive, so "none" is exact; a node
budget turns exhaustion into an explicit "undecided".
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Edge, GraphError, Multigraph, ekey
from .named import mobius_ladder


@dataclass(frozen=True)
class SubdivisionEmbedding:
    nodes: dict[int, int]
    branches: dict[Edge, tuple[int, ...]]

    def pattern_edges_with_tag(self, pattern: Multigraph, prefix: str) -> dict[str, tuple[int, ...]]:
        tags = pattern.edge_tags
        return {tags[e]: p for e, p in self.branches.items() if tags.get(e, "").startswith(prefix)}


@dataclass(frozen=True)
class SubdivisionResult:
    status: str  # found | none | undecided
    embedding: SubdivisionEmbedding | None = None
    nodes: int = field(default=0, compare=False)

    def __bool__(self) -> bool:
        return self.status == "found"


class _Budget(Exception):
    pass


def validate_embedding(g: Multigraph, pattern: Multigraph, emb: SubdivisionEmbedding) -> bool:
    imgs = set(emb.nodes.values())
    if len(imgs) != len(emb.nodes) or set(emb.nodes) != pattern.vertex_set:
        return False
    interior_seen: set[int] = set()
    for e in pattern.edge_classes():
        path = emb.branches.get(e)
        if path is None:
            return False
        a, b = emb.nodes[e[0]], emb.nodes[e[1]]
        if {path[0], path[-1]} != {a, b} or len(path) < 2:
            return False
        for x, y in zip(path, path[1:]):
            if not g.has_edge(x, y):
                return False
        inner = path[1:-1]
        if len(set(inner)) != len(inner) or set(inner) & imgs or set(inner) & interior_seen:
            return False
        interior_seen |= set(inner)
    return True


class _Searcher:
    def __init__(self, g: Multigraph, pattern: Multigraph, budget: int) -> None:
        self.adj = {v: set(g.neighbors(v)) for v in g.vertices}
        self.pat = {v: set(pattern.neighbors(v)) for v in pattern.vertices}
        self.budget = budget
        self.count = 0
        self.order = self._order(pattern)
        self.phi: dict[int, int] = {}
        self.used: set[int] = set()
        self.paths: dict[Edge, tuple[int, ...]] = {}

    def tick(self) -> None:
        self.count += 1
        if self.budget and self.count > self.budget:
            raise _Budget

    def _order(self, pattern: Multigraph) -> list[int]:
        verts = list(pattern.vertices)
        first = max(verts, key=lambda v: (pattern.num_neighbors(v), -v))
        order = [first]
        rest = set(verts) - {first}
        while rest:
            nxt = max(rest, key=lambda v: (len(self.pat[v] & set(order)), pattern.num_neighbors(v), -v))
            order.append(nxt)
            rest.remove(nxt)
        return order

    def free_degree_ok(self) -> bool:
        """Every placed node must still have room for its unrouted branches."""
        for p, h in self.phi.items():
            need = sum(1 for q in self.pat[p] if ekey(p, q) not in self.paths)
            if need == 0:
                continue
            room = 0
            for w in self.adj[h]:
                if w not in self.used:
                    room += 1
                else:
                    for q in self.pat[p]:
                        if self.phi.get(q) == w and ekey(p, q) not in self.paths:
                            room += 1
                            break
            if room < need:
                return False
        return True

    def _paths(self, s: int, t: int):
        """Simple s-t paths whose interiors avoid used vertices (shortest-first DFS)."""
        free = lambda x: x not in self.used  # noqa: E731
        # distances to t through free vertices
        dist = {t: 0}
        dq = deque([t])
        while dq:
            x = dq.popleft()
            for y in self.adj[x]:
                if y not in dist and (free(y) or y == s):
                    dist[y] = dist[x] + 1
                    if y != s:
                        dq.append(y)
        if s not in dist:
            return
        path = [s]
        onpath = {s}

        def rec(x: int):
            self.tick()
            if t in self.adj[x]:
                yield tuple(path + [t])
            nbrs = sorted((y for y in self.adj[x] if free(y) and y not in onpath and y in dist), key=lambda y: (dist[y], y))
            for y in nbrs:
                path.append(y)
                onpath.add(y)
                yield from rec(y)
                path.pop()
                onpath.discard(y)

        yield from rec(s)

    def route(self, todo: list[tuple[int, int]]):
        if not todo:
            yield True
            return
        p, q = todo[0]
        e = ekey(p, q)
        s, t = self.phi[p], self.phi[q]
        for path in self._paths(s, t):
            inner = path[1:-1]
            self.used.update(inner)
            self.paths[e] = path if e[0] == p else path[::-1]
            if self.free_degree_ok():
                yield from self.route(todo[1:])
            del self.paths[e]
            self.used.difference_update(inner)

    def place(self, idx: int) -> bool:
        if idx == len(self.order):
            return True
        p = self.order[idx]
        deg = len(self.pat[p])
        for h in sorted(self.adj):
            if h in self.used or len(self.adj[h]) < deg:
                continue
            self.tick()
            self.phi[p] = h
            self.used.add(h)
            if self.free_degree_ok():
                todo = [(p, q) for q in sorted(self.pat[p]) if q in self.phi and q != p]
                for _ in self.route(todo):
                    if self.place(idx + 1):
                        return True
            self.used.discard(h)
            del self.phi[p]
        return False


def find_subdivision(g: Multigraph, pattern: Multigraph, budget: int = 0) -> SubdivisionResult:
    """Search for a subdivision of ``pattern`` in ``g``; ``budget`` 0 means unlimited."""
    if not pattern.is_simple():
        raise GraphError("pattern must be simple")
    if pattern.n and pattern.min_degree() < 3:
        raise GraphError("pattern must have minimum degree >= 3")
    h = g.simple()
    # cheap exact obstructions
    if pattern.n > h.n or pattern.m > h.m:
        return SubdivisionResult("none")
    hd = sorted((h.num_neighbors(v) for v in h.vertices), reverse=True)
    pd = sorted((pattern.num_neighbors(v) for v in pattern.vertices), reverse=True)
    if any(a < b for a, b in zip(hd, pd)):
        return SubdivisionResult("none")
    s = _Searcher(h, pattern, budget)
    try:
        ok = s.place(0)
    except _Budget:
        return SubdivisionResult("undecided", None, s.count)
    if not ok:
        return SubdivisionResult("none", None, s.count)
    emb = SubdivisionEmbedding(dict(s.phi), dict(s.paths))
    assert validate_embedding(h, pattern, emb)
    return SubdivisionResult("found", emb, s.count)


def max_v2n(g: Multigraph, cap: int = 6, budget: int = 0) -> tuple[int | None, str]:
    """Largest n <= cap such that g contains a subdivision of V_2n.

    Containment is monotone in n (V_2n contains a subdivision of V_2n-2), so
    the search stops at the first failure.  Returns ``(n, status)`` with
    ``n`` None when not even V4 = K4 is present; status is ``undecided`` if a
    budget ran out before the answer was settled.
    """
    best: int | None = None
    for n in range(2, cap + 1):
        r = find_subdivision(g, mobius_ladder(n).simple(), budget)
        if r.status == "undecided":
            return best, "undecided"
        if r.status == "none":
            return best, "exact"
        best = n
    return best, "exact"
