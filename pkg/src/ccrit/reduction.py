"""Planar 3-reductions to peripherally-4-connected graphs, (T,U)-profiles,
representative replacements and configuration substitution.

A reduction is recorded as a :class:`ReductionTrace`: the original graph,
the contraction steps, and for every vertex ``v`` of the reduced graph the
set ``K_v`` of original vertices that contract to it.  Everything below is
computed from the trace and the original graph, so a trace can be replayed
and audited independently of how it was produced.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable

from .connectivity import is_k_connected, is_p4c, reducible_3_cuts
from .crossing import planar_bool
from .graph import Edge, GraphError, Multigraph, contract_set, ekey
from .named import complete_bipartite
from .subdivision import find_subdivision


class ReductionError(GraphError):
    """The input leaves the class handled by planar 3-reductions."""

    def __init__(self, message: str, diagnosis: str) -> None:
        super().__init__(message)
        self.diagnosis = diagnosis


# ------------------------------------------------------------------ flows
def _edge_disjoint_paths(
    g: Multigraph, source: int, sinks: dict[int, int], removed: Iterable[int] = (), need: int = 2
) -> int:
    """Number (capped at ``need``) of edge-disjoint paths from ``source`` to the sinks.

    ``sinks`` maps each sink to how many paths may end there.  Sinks absorb:
    a path stops at the first sink it reaches.  Vertices in ``removed`` are
    deleted first.  This is a unit-capacity max flow into a super-sink, so
    a path may later be rerouted to end at a different sink.
    """
    gone = set(removed)
    top = object()  # the super-sink
    cap: dict[tuple[object, object], int] = {}
    nbrs: dict[object, set[object]] = {}

    def arc(a: object, b: object, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)

    for (u, v), m in g.edges():
        if u in gone or v in gone:
            continue
        for a, b in ((u, v), (v, u)):
            if a not in sinks:  # nothing leaves a sink except into the super-sink
                arc(a, b, m)
    for t, c in sinks.items():
        if t not in gone and t != source:
            arc(t, top, c)
    flow = 0
    while flow < need:
        prev: dict[object, object] = {source: None}
        dq: deque = deque([source])
        while dq and top not in prev:
            a = dq.popleft()
            for b in nbrs.get(a, ()):
                if b not in prev and cap.get((a, b), 0) > 0:
                    prev[b] = a
                    dq.append(b)
        if top not in prev:
            break
        b = top
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


@dataclass(frozen=True)
class TUProfile:
    cut: tuple[int, int, int]
    T: frozenset[int]
    U: frozenset[int]
    apex_planar: bool

    @property
    def doglike(self) -> bool:
        return len(self.T) == 3 and len(self.U) == 2

    @property
    def nose(self) -> int | None:
        return next(iter(self.T - self.U)) if self.doglike else None

    @property
    def sizes(self) -> tuple[int, int]:
        return len(self.T), len(self.U)

    def consistency_issues(self) -> list[str]:
        """The (T,U) rules that hold for every configuration."""
        out = []
        if len(self.T) <= 1 and self.U:
            out.append("|T| <= 1 but U is not empty")
        if len(self.T) == 2 and set(self.U) != set(self.cut) - set(self.T):
            out.append("|T| = 2 but U is not the vertex outside T")
        if len(self.T) == 3 and len(self.U) < 2:
            out.append("|T| = 3 but |U| < 2")
        return out

    def __str__(self) -> str:
        def fmt(s: frozenset[int]) -> str:
            return "{" + ",".join(str(v) for v in sorted(s)) + "}"

        extra = f" nose={self.nose}" if self.doglike else ""
        return f"T={fmt(self.T)} U={fmt(self.U)} |T|,|U|={len(self.T)},{len(self.U)}{extra}"


def is_bridge_of(h: Multigraph, att: tuple[int, int, int]) -> bool:
    """Is ``h`` a single bridge of its attachment set (connected nucleus, all attached)?"""
    inner = h.without_vertices(att)
    if inner.n == 0:
        return False
    if not inner.is_connected():
        return False
    if any(h.mult(a, b) for a, b in combinations(att, 2)):
        return False
    return all(h.degree(t) > 0 for t in att)


def apex_graph(h: Multigraph, att: tuple[int, int, int]) -> Multigraph:
    apex = max(h.vertex_set) + 1
    return Multigraph(h.vertex_set | {apex}, [*((u, v, m) for (u, v), m in h.edges()), *((apex, t) for t in att)])


def tu_profile(h: Multigraph, att: tuple[int, int, int]) -> TUProfile:
    """T and U of the configuration ``(h, att)`` from edge-disjoint path counts."""
    T, U = set(), set()
    for w in att:
        a, b = (t for t in att if t != w)
        if _edge_disjoint_paths(h, w, {a: 1, b: 1}) >= 2:
            T.add(w)
        if _edge_disjoint_paths(h, a, {b: 2}, removed=(w,)) >= 2:
            U.add(w)
    return TUProfile(tuple(att), frozenset(T), frozenset(U), planar_bool(apex_graph(h, att)))


# ------------------------------------------------------------ reduction
@dataclass(frozen=True)
class ReductionStep:
    cut: tuple[int, int, int]
    nucleus: tuple[int, ...]  # vertices of the current graph
    rep: int


@dataclass(frozen=True)
class ReductionTrace:
    original: Multigraph
    result: Multigraph
    steps: tuple[ReductionStep, ...]
    classes: dict[int, frozenset[int]] = field(compare=False)

    def K(self, v: int) -> frozenset[int]:
        return self.classes[v]

    def owner(self) -> dict[int, int]:
        return {x: v for v, ks in self.classes.items() for x in ks}

    def replay(self) -> Multigraph:
        """Contract the classes of the original graph; equals ``result``."""
        g = self.original
        for step in self.steps:
            g = contract_set(g, step.nucleus, keep=step.rep)
        return g

    def cross_edges(self, u: int, v: int) -> list[tuple[int, int, int]]:
        """Edges (a, b, multiplicity) of the original graph with a in K_u, b in K_v."""
        ku, kv = self.classes[u], self.classes[v]
        out = []
        for a in sorted(ku):
            for b, m in sorted(self.original.adjacency(a).items()):
                if b in kv:
                    out.append((a, b, m))
        return out


def _k34() -> Multigraph:
    return complete_bipartite(3, 4)


def _candidates(g: Multigraph) -> list[tuple[tuple[int, int, int], frozenset[int]]]:
    """(cut, nucleus) pairs with a contractible planar bridge."""
    out = []
    for s, comps in reducible_3_cuts(g):
        total = g.n - 3
        for c in comps:
            if len(c) < 2 or total - len(c) < 2:
                continue
            b = g.subgraph(set(c) | set(s))
            for a, bb in combinations(s, 2):
                if b.mult(a, bb):
                    b = b.without_edge(a, bb, 0)
            if planar_bool(apex_graph(b, s)):
                out.append((s, frozenset(c)))
    return out


def planar_3_reduce(
    g: Multigraph, check_k34: bool = True, k34_budget: int = 200_000, check_steps: bool = True
) -> ReductionTrace:
    """Contract inclusion-maximal planar bridges of reducible 3-cuts until peripherally-4-connected.

    Raises :class:`ReductionError` when the input is not 3-connected, when a
    K_{3,4} subdivision is found, or when a reducible 3-cut has no planar
    contractible side.
    """
    if not is_k_connected(g, 3):
        raise ReductionError("input is not 3-connected", "not-3-connected")
    if check_k34:
        r = find_subdivision(g.simple(), _k34(), k34_budget)
        if r.status == "found":
            raise ReductionError("input contains a K_{3,4} subdivision", "K34-subdivision")
    classes = {v: frozenset((v,)) for v in g.vertices}
    cur = g
    steps = []
    while not is_p4c(cur):
        cands = _candidates(cur)
        if not cands:
            raise ReductionError("a reducible 3-cut has no planar contractible bridge", "nonplanar-sides")
        maximal = [c for c in cands if not any(c[1] < d[1] for d in cands)]
        s, nuc = min(maximal, key=lambda c: (-len(c[1]), sorted(c[1]), c[0]))
        rep = min(nuc)
        cur = contract_set(cur, nuc, keep=rep)
        classes[rep] = frozenset().union(*(classes.pop(x) for x in nuc))
        steps.append(ReductionStep(s, tuple(sorted(nuc)), rep))
        if check_steps and not is_k_connected(cur, 3):
            raise ReductionError("a contraction broke 3-connectivity", "step-not-3-connected")
    return ReductionTrace(g, cur, tuple(steps), classes)


# ------------------------------------------------------- local structure
@dataclass(frozen=True)
class LocalConfiguration:
    """G_v for a vertex v of the reduced graph with exactly three neighbours."""

    v: int
    graph: Multigraph  # K_v plus the attachments x, y, z (ids of the reduced graph)
    att: tuple[int, int, int]
    prime: dict[int, int]  # t -> t', in K_t whenever possible
    m: dict[int, int]  # number of K_v vertices adjacent to K_t
    n: dict[int, int]  # number of K_t vertices adjacent to K_v

    @property
    def kv(self) -> frozenset[int]:
        return self.graph.vertex_set - set(self.att)

    def prime_in_kv(self, t: int) -> bool:
        return self.prime[t] in self.kv


def local_configuration(trace: ReductionTrace, v: int) -> LocalConfiguration:
    red = trace.result
    nb = red.neighbors(v)
    if len(nb) != 3:
        raise GraphError(f"vertex {v} has {len(nb)} neighbours, not 3")
    kv = trace.classes[v]
    g = trace.original
    edges = [(a, b, m) for (a, b), m in g.edges() if a in kv and b in kv]
    prime, mm, nn = {}, {}, {}
    for t in nb:
        ce = trace.cross_edges(v, t)
        for a, _, m in ce:
            edges.append((a, t, m))
        ins = {a for a, _, _ in ce}
        outs = {b for _, b, _ in ce}
        mm[t], nn[t] = len(ins), len(outs)
        if len(outs) == 1:
            prime[t] = next(iter(outs))
        elif len(ins) == 1:
            prime[t] = next(iter(ins))
        else:
            raise GraphError(f"K_{v}-K_{t} edges share no vertex")
    graph = Multigraph(set(kv) | set(nb), edges)
    return LocalConfiguration(v, graph, tuple(nb), prime, mm, nn)


def tu_classify(trace: ReductionTrace, v: int) -> TUProfile:
    lc = local_configuration(trace, v)
    p = tu_profile(lc.graph, lc.att)
    issues = p.consistency_issues()
    if issues:
        raise AssertionError(f"profile of {v} violates: {issues}")
    return p


# ------------------------------------------------------ trace invariants
def _isthmi(h: Multigraph) -> list[Edge]:
    """Edge classes whose removal (all copies) disconnects ``h``."""
    out = []
    for (a, b), _ in h.edges():
        if not h.without_edge(a, b, 0).is_connected():
            out.append((a, b))
    return out


def _triangle_rule(h: Multigraph) -> list[str]:
    out = []
    for a in h.vertices:
        for b, c in combinations(sorted(x for x in h.neighbors(a) if x > a), 2):
            if h.has_edge(b, c):
                low = [x for x in (a, b, c) if h.num_neighbors(x) == 3]
                if len(low) >= 2:
                    out.append(f"triangle {a},{b},{c} has vertices {low} with 3 neighbours")
    return out


def trace_invariants(trace: ReductionTrace, critical: bool = True) -> list[str]:
    """Violations of the structural lemmas on a reduction trace (empty when all hold).

    Checked: one vertex covers all K_u-K_v edges; components beside an
    isthmus of K_v see two neighbours; x', y', z' are distinct; the triangle
    rule on the reduced graph; and, for critical inputs, at most two
    vertices of K_v see K_x.
    """
    red = trace.result
    bad: list[str] = []
    g = trace.original
    own = trace.owner()
    for (u, v), _ in red.edges():
        ce = trace.cross_edges(u, v)
        ends = [{a, b} for a, b, _ in ce]
        if not set.intersection(*ends):
            bad.append(f"K_{u}-K_{v} edges share no vertex")
        if critical:
            for a, b in ((u, v), (v, u)):
                hit = {x for x, _, _ in trace.cross_edges(a, b)}
                if len(hit) > 2:
                    bad.append(f"{len(hit)} vertices of K_{a} adjacent to K_{b}")
    for v, kv in trace.classes.items():
        if len(kv) < 2:
            continue
        h = g.subgraph(kv)
        for a, b in _isthmi(h):
            rest = h.without_edge(a, b, 0)
            for comp in rest.components():
                seen = {own[y] for x in comp for y in g.neighbors(x) if own[y] != v}
                if len(seen) < 2:
                    bad.append(f"component {sorted(comp)} of K_{v}-I({a},{b}) sees {sorted(seen)}")
        if red.num_neighbors(v) == 3:
            nb = red.neighbors(v)
            choices = []
            for t in nb:
                ce = trace.cross_edges(v, t)
                common = set.intersection(*({a, b} for a, b, _ in ce))
                choices.append(sorted(common))
            for pick in product(*choices):
                if len(set(pick)) < 3:
                    bad.append(f"x',y',z' not distinct for {v}: {pick}")
                    break
    s = red.simple()
    if not planar_bool(s):
        bad.extend(_triangle_rule(s))
    return bad


# ------------------------------------------------------------- g_rep
@dataclass(frozen=True)
class Replacement:
    graph: Multigraph
    case: str  # dog | single-vertex | single-vertex-33 | triangle
    kept: tuple[int, ...]  # vertices of K_rep(v)


class UncoveredCase(GraphError):
    """No case of the replacement theorem applies to this vertex."""


def _cap_attachments(g: Multigraph, lc: LocalConfiguration, prof: TUProfile, reps: Iterable[int]) -> Multigraph:
    """Parallel-edge fine print: toward t' in K_t keep two edges when t is in T, else one."""
    for w in reps:
        for t in lc.att:
            tp = lc.prime[t]
            if lc.prime_in_kv(t):
                continue
            m = g.mult(w, tp)
            cap = 2 if t in prof.T else 1
            if m > cap:
                g = g.with_multiplicity(w, tp, cap)
    return g


def _dog_cut_edge(lc: LocalConfiguration, prof: TUProfile) -> Edge:
    """The edge of K_v separating the y-side from the z-side in G_v - nose."""
    x = prof.nose
    y, z = (t for t in lc.att if t != x)
    h = lc.graph.without_vertices([x])
    for (a, b), m in h.edges():
        if m != 1 or a in lc.att or b in lc.att:
            continue
        rest = h.without_edge(a, b)
        comp = next(c for c in rest.components() if y in c)
        if z not in comp:
            return (a, b)
    raise GraphError("doglike configuration without a separating cut-edge")


def _cycle_through(h: Multigraph, terminals: tuple[int, int, int], limit: int = 200_000) -> list[int] | None:
    """A cycle of ``h`` through all three terminals (vertex list), by DFS."""
    a, b, c = terminals
    adj = {v: sorted(h.neighbors(v)) for v in h.vertices}
    path = [a]
    on = {a}
    steps = 0

    def rec(x: int) -> list[int] | None:
        nonlocal steps
        steps += 1
        if steps > limit:
            return None
        for y in adj[x]:
            if y == a and len(path) >= 3 and b in on and c in on:
                return list(path)
            if y not in on:
                path.append(y)
                on.add(y)
                r = rec(y)
                if r:
                    return r
                path.pop()
                on.discard(y)
        return None

    return rec(a)


def g_rep(
    trace: ReductionTrace, v: int, profile: TUProfile | None = None, neighbour_profiles: dict[int, TUProfile] | None = None
) -> Replacement:
    """The representative replacement of K_v in the original graph."""
    g = trace.original
    lc = local_configuration(trace, v)
    if len(lc.kv) < 2:
        raise GraphError(f"K_{v} is a single vertex")
    prof = profile or tu_profile(lc.graph, lc.att)
    if not prof.apex_planar:
        raise GraphError(f"G_{v} is not a (T,U)-configuration")
    kv = lc.kv
    if prof.doglike:
        a, b = _dog_cut_edge(lc, prof)
        inner = g.subgraph(kv).without_edge(a, b)
        h = g
        reps = []
        for comp in inner.components():
            h = contract_set(h, comp, keep=min(comp))
            reps.append(min(comp))
        h = _cap_attachments(h, lc, prof, reps)
        return Replacement(h, "dog", tuple(sorted(reps)))
    if neighbour_profiles is None:
        neighbour_profiles = {}
        for t in lc.att:
            if trace.result.num_neighbors(t) == 3 and len(trace.classes[t]) >= 2:
                lt = local_configuration(trace, t)
                neighbour_profiles[t] = tu_profile(lt.graph, lt.att)
    dogs = [t for t in lc.att if t in neighbour_profiles and neighbour_profiles[t].doglike]
    if not dogs or prof.sizes == (3, 3):
        h = contract_set(g, kv, keep=min(kv))
        h = _cap_attachments(h, lc, prof, [min(kv)])
        return Replacement(h, "single-vertex-33" if dogs else "single-vertex", (min(kv),))
    for x in dogs:
        for y in lc.att:
            if y == x or y in prof.T:
                continue
            return _triangle_case(g, lc, prof)
    raise UncoveredCase(f"vertex {v}: doglike neighbour {dogs} with T={sorted(prof.T)}")


def _kmin_terminal(g: Multigraph, lc: LocalConfiguration, t: int) -> int:
    """t' as a vertex of K^min_v: outside K_v only when several K_v vertices see it."""
    tp = lc.prime[t]
    if tp in lc.kv or lc.m[t] > 1:
        return tp
    return next(a for a in sorted(lc.kv) if g.has_edge(a, tp))


def _triangle_case(g: Multigraph, lc: LocalConfiguration, prof: TUProfile) -> Replacement:
    kv = lc.kv
    terminals = tuple(_kmin_terminal(g, lc, t) for t in lc.att)
    kmax = set(kv) | {p for p in terminals}
    h_local = g.subgraph(kmax)
    outside = [p for p in terminals if p not in kv]
    for a, b in combinations(outside, 2):
        if h_local.mult(a, b):
            h_local = h_local.without_edge(a, b, 0)
    cyc = _cycle_through(h_local, terminals)  # type: ignore[arg-type]
    if cyc is None:
        raise GraphError("no cycle through x', y', z'")
    k = len(cyc)
    cyc_edges = {ekey(cyc[i], cyc[(i + 1) % k]) for i in range(k)}
    on_cycle = set(cyc)
    h = g.without_vertices(set(kv) - on_cycle)
    # drop K_v edges off the cycle, and edges to outside terminals off the cycle
    for (a, b), m in list(h.edges()):
        inside = a in kv or b in kv
        if not inside:
            continue
        both_local = (a in kmax and b in kmax)
        if both_local and ekey(a, b) not in cyc_edges:
            h = h.without_edge(a, b, 0)
        elif both_local and m > 1:
            h = h.with_multiplicity(a, b, 1)
    # contract each arc between consecutive terminals onto a terminal inside K_v
    idx = [i for i, x in enumerate(cyc) if x in terminals]
    for s, t in zip(idx, idx[1:] + [idx[0] + k]):
        arc = [cyc[j % k] for j in range(s, t + 1)]
        inner = arc[1:-1]
        if not inner:
            continue
        keep = arc[0] if arc[0] in kv else arc[-1]
        if keep not in kv:
            raise GraphError("arc between two outside terminals has internal vertices")
        h = contract_set(h, [keep] + inner, keep=keep)
    reps = tuple(sorted(p for p in terminals if p in kv))
    return Replacement(h, "triangle", reps)


def full_replacement(trace: ReductionTrace) -> tuple[Multigraph, list[tuple[int, str]]]:
    """Apply g_rep once per non-trivial degree-3 class, re-reducing in between."""
    log = []
    cur = trace
    done: set[int] = set()
    while True:
        todo = [
            v
            for v in sorted(cur.result.vertices)
            if v not in done and cur.result.num_neighbors(v) == 3 and len(cur.classes[v]) >= 2
        ]
        if not todo:
            return cur.original, log
        v = todo[0]
        rep = g_rep(cur, v)
        log.append((v, rep.case))
        done.add(v)
        cur = planar_3_reduce(rep.graph, check_k34=False)
        # vertex ids of the reduced graph are class minima, which replacement keeps stable
        done = {d for d in done if d in cur.classes}


# -------------------------------------------------------- substitution
@dataclass(frozen=True)
class Configuration:
    """A (T,U)-configuration: a graph with three labelled attachments."""

    name: str
    graph: Multigraph
    att: tuple[int, int, int]

    def profile(self) -> TUProfile:
        return tu_profile(self.graph, self.att)

    @property
    def nucleus_size(self) -> int:
        return self.graph.n - 3

    def relabelled(self, perm: tuple[int, int, int]) -> Configuration:
        """Permute the roles of the attachments: new att[i] = att[perm[i]]."""
        return Configuration(self.name, self.graph, tuple(self.att[p] for p in perm))  # type: ignore[arg-type]


def compatibility_issues(lc: LocalConfiguration, conf: Configuration) -> list[str]:
    """Reasons why ``conf`` (attachments in the order of ``lc.att``) is not (G,K_v)-compatible."""
    out = []
    h = conf.graph
    # same T and U, read through the attachment order
    mine = tu_profile(lc.graph, lc.att)
    theirs = conf.profile()
    for label, a, b in (("T", mine.T, theirs.T), ("U", mine.U, theirs.U)):
        mapped = {lc.att[i] for i in range(3) if conf.att[i] in b}
        if mapped != set(a):
            out.append(f"{label} differs: {sorted(a)} in G_v, {sorted(mapped)} in H")
    N = [i for i, t in enumerate(lc.att) if lc.prime_in_kv(t)]
    for i in N:
        if h.num_neighbors(conf.att[i]) != 1:
            out.append(f"attachment {lc.att[i]} in N has {h.num_neighbors(conf.att[i])} neighbours in H")
    for i, t in enumerate(lc.att):
        if lc.graph.degree(t) != h.degree(conf.att[i]):
            out.append(f"degree of {t}: {lc.graph.degree(t)} in G_v, {h.degree(conf.att[i])} in H")
    rest = h.without_vertices([conf.att[i] for i in N])
    nbar = [conf.att[i] for i in range(3) if i not in N] + [h.neighbors(conf.att[i])[0] for i in N if h.num_neighbors(conf.att[i]) == 1]
    if rest.n > 1 and len(set(nbar)) == 3:
        if _cycle_through(rest, tuple(nbar)) is None:  # type: ignore[arg-type]
            out.append("H - N has no cycle through the attachments")
    elif rest.n > 1 and len(set(nbar)) < 3:
        out.append("attachments of H - N are not distinct")
    return out


def substitute_configuration(trace: ReductionTrace, v: int, conf: Configuration, check: bool = True) -> Multigraph:
    """G^H_v: replace K_v by the configuration ``conf`` (attachments ordered as the neighbours of v)."""
    lc = local_configuration(trace, v)
    if check:
        issues = compatibility_issues(lc, conf)
        if issues:
            raise GraphError("incompatible configuration: " + "; ".join(issues))
    g = trace.original
    kv = lc.kv
    h = conf.graph
    N = {i for i, t in enumerate(lc.att) if lc.prime_in_kv(t)}
    keep_in_kv = {lc.prime[lc.att[i]] for i in N}
    # edges of G with an end in K_v, except the t'-K_t edges for t in N
    base_edges = []
    for (a, b), m in g.edges():
        if a in kv or b in kv:
            ok = False
            for i in N:
                tp = lc.prime[lc.att[i]]
                kt = trace.classes[lc.att[i]]
                if (a == tp and b in kt) or (b == tp and a in kt):
                    ok = True
            if not ok:
                continue
        base_edges.append((a, b, m))
    verts = (g.vertex_set - kv) | keep_in_kv
    base = Multigraph(verts, base_edges)
    # map H - N into the graph
    nxt = max(g.vertex_set) + 1
    mp: dict[int, int] = {}
    for i, t in enumerate(lc.att):
        if i in N:
            hn = h.neighbors(conf.att[i])[0]
            mp[hn] = lc.prime[t]
        else:
            mp[conf.att[i]] = lc.prime[t]
    dropped = {conf.att[i] for i in N}
    for x in h.vertices:
        if x in dropped or x in mp:
            continue
        mp[x] = nxt
        nxt += 1
    edges = [(mp[a], mp[b], m) for (a, b), m in h.edges() if a not in dropped and b not in dropped]
    return Multigraph(base.vertex_set | set(mp.values()), [*((a, b, m) for (a, b), m in base.edges()), *edges])
