"""Cleavage units of 2-connected graphs, digonal paths and digonal kernels.

Units are found by splitting at 2-separations until none is left (every
piece is then a triangle, a 3-bond or a 3-connected graph) and merging
adjacent cycles with cycles and bonds with bonds along their shared virtual
edge.  The result is Tutte's decomposition.  Every step is a brute-force
search over vertex pairs, which is ample for graphs of a few dozen vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count

from .crossing import planar_bool
from .graph import Edge, GraphError, Multigraph, ekey

# an edge of a piece: (u, v, key); real keys are ("r", i), virtual keys ("v", i)
PEdge = tuple[int, int, tuple[str, int]]


@dataclass(frozen=True)
class CleavageUnit:
    kind: str  # 3-connected | cycle | bond
    vertices: tuple[int, ...]
    real: tuple[Edge, ...]  # real edge instances (repeated for parallel copies)
    virtual: tuple[tuple[int, int, int], ...]  # (u, v, label)

    def graph(self) -> Multigraph:
        """The unit with its virtual edges as ordinary edges."""
        return Multigraph(self.vertices, list(self.real) + [(u, v) for u, v, _ in self.virtual])

    @property
    def size(self) -> int:
        return len(self.real) + len(self.virtual)


@dataclass(frozen=True)
class CleavageDecomposition:
    host: Multigraph
    units: tuple[CleavageUnit, ...]
    links: tuple[tuple[int, int, int, Edge], ...]  # (unit i, unit j, label, hinge)

    def nonplanar_units(self) -> list[int]:
        return [i for i, u in enumerate(self.units) if not planar_bool(u.graph())]

    def glue(self, flips: frozenset[int] = frozenset()) -> Multigraph:
        """Reassemble along the virtual edges.

        With no flips this reproduces the host exactly.  A flipped label
        identifies the hinge of the far side the other way round, which can
        give a non-isomorphic graph.
        """
        if not self.units:
            return Multigraph()
        adj: dict[int, list[tuple[int, int, Edge]]] = {i: [] for i in range(len(self.units))}
        for i, j, lab, hinge in self.links:
            adj[i].append((j, lab, hinge))
            adj[j].append((i, lab, hinge))
        maps: dict[int, dict[int, int]] = {0: {v: v for v in self.units[0].vertices}}
        stack = [0]
        while stack:
            i = stack.pop()
            for j, lab, (u, v) in adj[i]:
                if j in maps:
                    continue
                mu, mv = maps[i][u], maps[i][v]
                if lab in flips:
                    mu, mv = mv, mu
                maps[j] = {x: mu if x == u else mv if x == v else x for x in self.units[j].vertices}
                stack.append(j)
        edges = []
        for i, unit in enumerate(self.units):
            edges.extend((maps[i][a], maps[i][b]) for a, b in unit.real)
        return Multigraph(set().union(*(maps[i].values() for i in maps)), edges)


class _Labels:
    def __init__(self) -> None:
        self.c = count()

    def __call__(self) -> int:
        return next(self.c)


def _vertices(piece: list[PEdge]) -> set[int]:
    return {x for u, v, _ in piece for x in (u, v)}


def _bridges_of_pair(piece: list[PEdge], u: int, v: int) -> list[list[PEdge]]:
    out: list[list[PEdge]] = []
    rest: list[PEdge] = []
    for e in piece:
        if {e[0], e[1]} == {u, v}:
            out.append([e])
        else:
            rest.append(e)
    adj: dict[int, list[int]] = {}
    for idx, (a, b, _) in enumerate(rest):
        for x in (a, b):
            if x not in (u, v):
                adj.setdefault(x, []).append(idx)
    seen_e: set[int] = set()
    seen_v: set[int] = set()
    for start in sorted(adj):
        if start in seen_v:
            continue
        comp_e: list[int] = []
        stack = [start]
        seen_v.add(start)
        while stack:
            x = stack.pop()
            for idx in adj[x]:
                if idx in seen_e:
                    continue
                seen_e.add(idx)
                comp_e.append(idx)
                a, b, _ = rest[idx]
                y = b if a == x else a
                if y not in (u, v) and y not in seen_v:
                    seen_v.add(y)
                    stack.append(y)
        out.append([rest[i] for i in sorted(comp_e)])
    return out


def _find_split(piece: list[PEdge]) -> tuple[int, int, list[PEdge], list[PEdge]] | None:
    if len(piece) < 4:
        return None
    verts = sorted(_vertices(piece))
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            bs = _bridges_of_pair(piece, u, v)
            if len(bs) < 2:
                continue
            big = [b for b in bs if len(b) >= 2]
            small = [b for b in bs if len(b) == 1]
            if big and len(bs) >= 2:
                h = big[0]
                k = [e for b in bs if b is not h for e in b]
                if len(k) >= 2:
                    return u, v, h, k
            if not big and len(bs) >= 4:
                # a bond with four or more edges: split off two of them
                return u, v, small[0] + small[1], [e for b in small[2:] for e in b]
    return None


def _kind(piece: list[PEdge]) -> str:
    vs = _vertices(piece)
    if len(vs) == 2:
        return "bond"
    deg: dict[int, int] = {}
    for u, v, _ in piece:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if all(d == 2 for d in deg.values()):
        return "cycle"
    return "3-connected"


def cleavage_units(g: Multigraph) -> CleavageDecomposition:
    """Tutte's cleavage units of a 2-connected graph, with the virtual-edge tree."""
    if g.n < 2 or not g.is_connected():
        raise GraphError("cleavage units need a 2-connected graph")
    if g.n > 2:
        for v in g.vertices:
            if not g.without_vertices([v]).is_connected():
                raise GraphError(f"not 2-connected: {v} is a cut vertex")
    if g.m < 2:
        raise GraphError("cleavage units need at least two edges")
    rid = count()
    start: list[PEdge] = [(u, v, ("r", next(rid))) for u, v in g.edge_instances()]
    fresh = _Labels()
    todo, done = [start], []
    while todo:
        p = todo.pop()
        s = _find_split(p)
        if s is None:
            done.append(p)
            continue
        u, v, h, k = s
        lab = fresh()
        todo.append(h + [(u, v, ("v", lab))])
        todo.append(k + [(u, v, ("v", lab))])
    done = _merge(done)
    units = []
    where: dict[int, list[tuple[int, Edge]]] = {}
    for i, p in enumerate(done):
        real = tuple(sorted(ekey(a, b) for a, b, key in p if key[0] == "r"))
        virt = tuple(sorted((min(a, b), max(a, b), key[1]) for a, b, key in p if key[0] == "v"))
        for a, b, lab in virt:
            where.setdefault(lab, []).append((i, (a, b)))
        units.append(CleavageUnit(_kind(p), tuple(sorted(_vertices(p))), real, virt))
    links = []
    for lab, occ in sorted(where.items()):
        (i, e), (j, _) = occ
        links.append((i, j, lab, e))
    return CleavageDecomposition(g, tuple(units), tuple(links))


def _merge(pieces: list[list[PEdge]]) -> list[list[PEdge]]:
    """Merge cycle-cycle and bond-bond neighbours across their common virtual edge."""
    pieces = [list(p) for p in pieces]
    changed = True
    while changed:
        changed = False
        owner: dict[int, list[int]] = {}
        for i, p in enumerate(pieces):
            for _, _, key in p:
                if key[0] == "v":
                    owner.setdefault(key[1], []).append(i)
        for lab, (i, j) in sorted(owner.items()):
            ki, kj = _kind(pieces[i]), _kind(pieces[j])
            if ki == kj and ki in ("cycle", "bond"):
                merged = [e for e in pieces[i] + pieces[j] if e[2] != ("v", lab)]
                pieces = [p for t, p in enumerate(pieces) if t not in (i, j)] + [merged]
                changed = True
                break
    return pieces


# ------------------------------------------------------------- digons
def expand_digons(g: Multigraph, lengths: dict[Edge, int]) -> Multigraph:
    """Replace each listed digon uv by a digonal path with ``lengths[uv]`` edges."""
    h = g
    nxt = max(g.vertex_set, default=-1) + 1
    for e, length in sorted(lengths.items()):
        u, v = ekey(*e)
        if g.mult(u, v) != 2:
            raise GraphError(f"{u}-{v} is not a digon")
        if length < 1:
            raise GraphError("digonal path length must be >= 1")
        if length == 1:
            continue
        h = h.without_edge(u, v, 0)
        path = [u] + list(range(nxt, nxt + length - 1)) + [v]
        nxt += length - 1
        for a, b in zip(path, path[1:]):
            h = h.with_edge(a, b, 2)
    return h


def digonal_kernel(g: Multigraph) -> Multigraph:
    """The unique non-planar cleavage unit with its virtual edges doubled."""
    dec = cleavage_units(g)
    bad = dec.nonplanar_units()
    if len(bad) != 1:
        raise GraphError(f"digonal kernel needs exactly one non-planar unit, found {len(bad)}")
    unit = dec.units[bad[0]]
    edges = list(unit.real) + [(u, v, 2) for u, v, _ in unit.virtual]
    return Multigraph(unit.vertices, edges)
