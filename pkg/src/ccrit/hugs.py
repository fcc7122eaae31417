"""Hug elimination and peripherally-4-connected extensions.

Deleting hugs one at a time (or a simultaneously deletable pair of bear
hugs together) takes a non-planar peripherally-4-connected graph down to a
subdivision of an internally-4-connected one.  The extension moves go the
other way: from an internally-4-connected graph they build the
peripherally-4-connected graphs whose hug elimination can end there.

Intermediate graphs are kept unsuppressed, so the degree-2 vertices that
pair deletions leave behind stay visible to the checks; hugs themselves are
looked up in the suppressed graph and mapped back to paths.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .canon import canonical_form
from .connectivity import find_hugs, is_i4c, is_p4c
from .crossing import planar_bool
from .graph import Edge, GraphError, Multigraph, ekey, suppress_degree_two


class HugEliminationError(GraphError):
    pass


@dataclass(frozen=True)
class HugStep:
    kind: str  # deletable | pair
    edges: tuple[Edge, ...]  # edges of the suppressed graph
    heads: tuple[int, ...]
    removed: tuple[Edge, ...]  # edge instances removed from the unsuppressed graph


@dataclass(frozen=True)
class HugTrace:
    start: Multigraph
    graphs: tuple[Multigraph, ...]  # G_0 = start, G_1, ... (unsuppressed)
    steps: tuple[HugStep, ...]

    @property
    def final(self) -> Multigraph:
        return self.graphs[-1]


def _branch_paths(g: Multigraph) -> dict[Edge, list[list[int]]]:
    """Paths of ``g`` between vertices of degree != 2, keyed by their ends."""
    branch = {v for v in g.vertices if g.degree(v) != 2}
    out: dict[Edge, list[list[int]]] = {}
    used: set[tuple[int, int, int]] = set()  # (a, b, copy index) of consumed instances
    for u in sorted(branch):
        for w, m in sorted(g.adjacency(u).items()):
            for copy in range(m):
                if (u, w, copy) in used:
                    continue
                path = [u, w]
                used.add((u, w, copy))
                used.add((w, u, copy))
                while path[-1] not in branch:
                    x = path[-1]
                    (y,) = [t for t in g.neighbors(x) if t != path[-2]] or [path[-2]]
                    used.add((x, y, 0))
                    used.add((y, x, 0))
                    path.append(y)
                out.setdefault(ekey(path[0], path[-1]), []).append(path if path[0] <= path[-1] else path[::-1])
    return out


def _remove_path(g: Multigraph, path: list[int]) -> tuple[Multigraph, list[Edge]]:
    removed = []
    for a, b in zip(path, path[1:]):
        g = g.without_edge(a, b)
        removed.append(ekey(a, b))
    inner = [x for x in path[1:-1] if g.degree(x) == 0]
    return g.without_vertices(inner), removed


def theorem_checks(prev: Multigraph, cur: Multigraph, step: HugStep | None) -> list[str]:
    """Conditions (1)-(3) of hug elimination for one graph of the sequence.

    (1) the graph is a subdivision of a non-planar peripherally-4-connected
    graph; (2) a degree-2 vertex not present before the step is an end of
    both edges of a pair deletion; (3) every degree-2 vertex has two
    neighbours of degree 3.
    """
    out = []
    try:
        h = suppress_degree_two(cur)
    except GraphError as exc:
        return [f"(1) suppression fails: {exc}"]
    if planar_bool(h):
        out.append("(1) suppressed graph is planar")
    if not is_p4c(h):
        out.append("(1) suppressed graph is not peripherally-4-connected")
    if step is not None:
        for v in cur.vertices:
            if cur.degree(v) == 2 and not (prev.has_vertex(v) and prev.degree(v) == 2):
                if step.kind != "pair":
                    out.append(f"(2) vertex {v} became degree 2 after a single deletion")
                elif not all(v in e for e in step.edges):
                    out.append(f"(2) vertex {v} is not an end of both deleted edges")
    for v in cur.vertices:
        if cur.degree(v) == 2:
            bad = [u for u in cur.neighbors(v) if cur.degree(u) != 3]
            if bad or cur.num_neighbors(v) != 2:
                out.append(f"(3) degree-2 vertex {v} has neighbours of degree {[cur.degree(u) for u in cur.neighbors(v)]}")
    return out


def _options(g: Multigraph) -> list[tuple[str, tuple[Edge, ...], tuple[int, ...]]]:
    h = suppress_degree_two(g)
    recs = find_hugs(h)
    single = sorted({(r.edge, r.head) for r in recs if r.kind == "deletable"})
    pairs = sorted({(r.edge, r.head) for r in recs if r.kind == "simultaneously-deletable-pair"})
    opts: list[tuple[str, tuple[Edge, ...], tuple[int, ...]]] = []
    seen: set[Edge] = set()
    for e, v in single:
        if e not in seen:
            seen.add(e)
            opts.append(("deletable", (e,), (v,)))
    for es, vs in pairs:
        opts.append(("pair", tuple(es), tuple(vs)))
    return opts


def _apply(g: Multigraph, kind: str, edges: tuple[Edge, ...], heads: tuple[int, ...]) -> tuple[Multigraph, HugStep]:
    paths = _branch_paths(g)
    removed: list[Edge] = []
    for e in edges:
        ps = paths.get(ekey(*e))
        if not ps:
            raise HugEliminationError(f"no path for hug edge {e}")
        g, r = _remove_path(g, min(ps, key=len))
        removed += r
    return g, HugStep(kind, edges, heads, tuple(removed))


def hug_eliminate(g: Multigraph, check: bool = True, budget: int = 10_000) -> tuple[Multigraph, HugTrace]:
    """Delete hugs until none is left; return (suppressed final graph, trace).

    Deletable hugs are tried before simultaneously deletable pairs, each in
    sorted order; a step is taken only if its result passes
    :func:`theorem_checks`.  A greedy sequence can reach a graph whose every
    hug is a bear hug and whose every pair deletion breaks the conditions,
    so the search backtracks out of such dead ends.  ``budget`` bounds the
    number of graphs examined.
    """
    if not is_p4c(g):
        raise HugEliminationError("input is not peripherally-4-connected")
    if planar_bool(g):
        raise HugEliminationError("input is planar")
    dead: set[bytes] = set()
    examined = 0
    problems: list[str] = []

    def rec(cur: Multigraph) -> list[tuple[Multigraph, HugStep]] | None:
        nonlocal examined
        examined += 1
        if examined > budget:
            raise HugEliminationError(f"budget of {budget} graphs exhausted")
        opts = _options(cur)
        if not opts:
            final = suppress_degree_two(cur)
            if check and not is_i4c(final):
                problems.append("hug-free graph is not internally-4-connected")
                return None
            return []
        for kind, edges, heads in opts:
            nxt, step = _apply(cur, kind, edges, heads)
            key = canonical_form(nxt)
            if key in dead:
                continue
            issues = theorem_checks(cur, nxt, step) if check else []
            if issues:
                problems.append(f"{kind} {edges}: {issues}")
                if any(not i.startswith("(2)") for i in issues):
                    dead.add(key)  # (1) and (3) do not depend on the previous graph
                continue
            tail = rec(nxt)
            if tail is not None:
                return [(nxt, step)] + tail
            dead.add(key)
        return None

    seq = rec(g)
    if seq is None:
        raise HugEliminationError("no hug deletion sequence keeps the theorem conditions: " + "; ".join(problems[:6]))
    graphs = (g,) + tuple(h for h, _ in seq)
    return suppress_degree_two(graphs[-1]), HugTrace(g, graphs, tuple(st for _, st in seq))


# --------------------------------------------------------------- extensions
def _degree3(g: Multigraph) -> list[int]:
    return [v for v in g.vertices if g.degree(v) == 3 and g.num_neighbors(v) == 3]


def extension_moves(g: Multigraph) -> Iterator[tuple[str, Multigraph]]:
    """One application of either move, in a fixed order."""
    for v in _degree3(g):
        for a, b in combinations(g.neighbors(v), 2):
            if not g.has_edge(a, b):
                yield f"add {a}-{b} at {v}", g.with_edge(a, b)
    d3 = set(_degree3(g))
    s = max(g.vertex_set) + 1
    for (u, w), m in g.edges():
        if m != 1 or u not in d3 or w not in d3:
            continue
        base = g.without_edge(u, w).with_edge(u, s).with_edge(s, w)
        for a in g.neighbors(u):
            if a == w:
                continue
            for b in g.neighbors(w):
                if b == u or b == a:
                    continue
                yield f"split {u}-{w} to {a},{b}", base.with_edge(s, a).with_edge(s, b)


def p4c_extensions(g: Multigraph, limit: int | None = None, include_self: bool = True) -> Iterator[Multigraph]:
    """Closure of ``g`` under the two extension moves, one graph per isomorphism class.

    Only peripherally-4-connected results are kept and extended further.
    ``limit`` caps how many graphs are produced.
    """
    seen = {canonical_form(g)}
    queue = deque([g])
    produced = 0
    if include_self:
        produced += 1
        yield g
    while queue:
        cur = queue.popleft()
        for _, h in extension_moves(cur):
            if limit is not None and produced >= limit:
                return
            key = canonical_form(h)
            if key in seen:
                continue
            seen.add(key)
            if not is_p4c(h) or planar_bool(h):
                continue
            queue.append(h)
            produced += 1
            yield h
