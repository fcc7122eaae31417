"""Canonical forms of small vertex-coloured multigraphs.

Individualisation-refinement: colour refinement whose signatures include edge
multiplicities, branching on the first smallest non-trivial cell, and keeping
the lexicographically least relabelled edge list.  Twin vertices and
automorphisms discovered at leaves prune equivalent branches.
"""
from __future__ import annotations

from collections.abc import Hashable, Mapping

from .formats import encode_graph
from .graph import Multigraph

Cert = tuple[tuple[int, int, int], ...]


def _refine(cells: list[list[int]], adj: dict[int, dict[int, int]]) -> list[list[int]]:
    while True:
        idx = {v: i for i, c in enumerate(cells) for v in c}
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple(sorted((idx[w], m) for w, m in adj[v].items())) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(c)
                continue
            changed = True
            for k in keys:
                out.append([v for v in c if sig[v] == k])
        cells = out
        if not changed:
            return cells


def _twins(a: int, b: int, adj: dict[int, dict[int, int]]) -> bool:
    """True when swapping a and b is an automorphism of the (coloured) graph."""
    na, nb = adj[a], adj[b]
    if len(na) != len(nb):
        return False
    for w, m in na.items():
        if w == b:
            continue
        if nb.get(w, 0) != m:
            return False
    return all(w == a or na.get(w, 0) == m for w, m in nb.items())


class _Search:
    def __init__(self, adj: dict[int, dict[int, int]]) -> None:
        self.adj = adj
        self.best: Cert | None = None
        self.best_pos: dict[int, int] | None = None
        self.autos: list[dict[int, int]] = []

    def cert(self, cells: list[list[int]]) -> tuple[Cert, dict[int, int]]:
        pos = {c[0]: i for i, c in enumerate(cells)}
        edges = []
        for u, nb in self.adj.items():
            pu = pos[u]
            for w, m in nb.items():
                pw = pos[w]
                if pu < pw:
                    edges.append((pu, pw, m))
        edges.sort()
        return tuple(edges), pos

    def run(self, cells: list[list[int]], path: tuple[int, ...]) -> None:
        cells = _refine(cells, self.adj)
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            cert, pos = self.cert(cells)
            if self.best is None or cert < self.best:
                self.best, self.best_pos = cert, pos
            elif cert == self.best:
                assert self.best_pos is not None
                inv = {p: v for v, p in self.best_pos.items()}
                self.autos.append({v: inv[p] for v, p in pos.items()})
            return
        cell = cells[target]
        done: list[int] = []
        for v in cell:
            if any(_twins(u, v, self.adj) for u in done):
                continue
            if done and self._same_orbit(v, done, path):
                continue
            done.append(v)
            rest = [w for w in cell if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            self.run(child, path + (v,))

    def _same_orbit(self, v: int, done: list[int], path: tuple[int, ...]) -> bool:
        gens = [a for a in self.autos if all(a[p] == p for p in path)]
        if not gens:
            return False
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        for a in gens:
            for x, y in a.items():
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        rv = find(v)
        return any(find(u) == rv for u in done)


def canonical_labeling(
    g: Multigraph, colors: Mapping[int, Hashable] | None = None
) -> tuple[dict[int, int], tuple]:
    """Return (vertex -> canonical position, colour sequence by position)."""
    adj = {v: g.adjacency(v) for v in g.vertices}
    if not adj:
        return {}, ()
    col = {v: (colors or {}).get(v, None) for v in adj}
    keys = sorted(set(col.values()), key=repr)
    cells = [[v for v in sorted(adj) if col[v] == k] for k in keys]
    s = _Search(adj)
    s.run(cells, ())
    assert s.best_pos is not None
    pos = s.best_pos
    inv = {p: v for v, p in pos.items()}
    seq = tuple(repr(col[inv[i]]) for i in range(len(inv))) if colors else ()
    return pos, seq


def canonical_graph(g: Multigraph, colors: Mapping[int, Hashable] | None = None) -> Multigraph:
    pos, _ = canonical_labeling(g, colors)
    return Multigraph(range(g.n), [(pos[u], pos[v], m) for (u, v), m in g.edges()])


def canonical_form(g: Multigraph, colors: Mapping[int, Hashable] | None = None) -> bytes:
    """Byte string equal for two inputs iff they are isomorphic multigraphs.

    With ``colors`` the isomorphism must preserve vertex colours; the colour
    sequence in canonical order is appended after a ``|`` separator.
    """
    pos, seq = canonical_labeling(g, colors)
    h = Multigraph(range(g.n), [(pos[u], pos[v], m) for (u, v), m in g.edges()])
    out = encode_graph(h, "sparse6").encode()
    if colors:
        out += b"|" + ",".join(seq).encode()
    return out


def is_isomorphic(a: Multigraph, b: Multigraph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return canonical_form(a) == canonical_form(b)
