"""Planarity, exact small crossing numbers, and crossing-criticality.

``cr_le(g, k)`` decides whether ``g`` has a drawing with at most ``k``
crossings by searching over crossing configurations.  A configuration is a
set of pairs of edge instances plus, for every instance crossed more than
once, the order of its crossings along the edge.  Planarizing replaces each
crossing by a new degree-4 vertex.

The search is guided by Kuratowski subgraphs: if the current planarization
is not planar, any completion to a planar one must put a new crossing on two
segments of its Kuratowski subgraph (otherwise a subdivision of that
subgraph survives).  Only pairs of non-adjacent, not-yet-crossed original
edges are used; some crossing-minimal drawing has no other kind of crossing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator

import networkx as nx

from .graph import DegenerateInputError, Edge, Multigraph, ekey, suppress_degree_two

Instance = tuple[int, int, int]  # (u, v, copy index) with u < v


# ---------------------------------------------------------------- planarity
@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    witness: Multigraph | None = None

    def __bool__(self) -> bool:
        return self.planar


def _nx_simple(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(vertices)
    h.add_edges_from(edges)
    return h


def is_planar(g: Multigraph) -> PlanarityResult:
    """Exact planarity; a Kuratowski subgraph (K5 or K33 subdivision) on failure."""
    h = g.to_networkx()
    ok, cert = nx.check_planarity(h, counterexample=True)
    if ok:
        return PlanarityResult(True)
    return PlanarityResult(False, Multigraph(cert.nodes(), list(cert.edges())))


def planar_bool(g: Multigraph) -> bool:
    return nx.check_planarity(g.to_networkx())[0]


def kuratowski_type(w: Multigraph) -> str:
    """``K5`` or ``K33`` for a Kuratowski subdivision."""
    branch = [v for v in w.vertices if w.degree(v) > 2]
    return "K5" if len(branch) == 5 else "K33"


# ---------------------------------------------------- crossing configurations
@dataclass(frozen=True)
class CrossingConfiguration:
    """Crossing pairs plus, per instance, the order of its crossings from u to v."""

    pairs: tuple[tuple[Instance, Instance], ...]
    orders: tuple[tuple[Instance, tuple[Instance, ...]], ...] = ()

    @property
    def size(self) -> int:
        return len(self.pairs)

    def order_of(self, inst: Instance) -> tuple[Instance, ...]:
        for i, seq in self.orders:
            if i == inst:
                return seq
        partners = [b if a == inst else a for a, b in self.pairs if inst in (a, b)]
        return tuple(partners)

    def to_text(self) -> str:
        if not self.pairs:
            return "none"
        parts = []
        for a, b in self.pairs:
            parts.append(f"{a[0]}-{a[1]}#{a[2]}/{b[0]}-{b[1]}#{b[2]}")
        return ";".join(parts)


def instances_of(g: Multigraph) -> list[Instance]:
    return [(u, v, i) for (u, v), m in g.edges() for i in range(m)]


def planarize(g: Multigraph, config: CrossingConfiguration) -> Multigraph:
    """Replace every crossing of ``config`` by a new vertex."""
    base = max(g.vertex_set, default=-1) + 1
    cvert: dict[frozenset, int] = {}
    for idx, (a, b) in enumerate(config.pairs):
        cvert[frozenset((a, b))] = base + idx
    edges: list[tuple[int, int]] = []
    for inst in instances_of(g):
        seq = config.order_of(inst)
        chain = [inst[0]] + [cvert[frozenset((inst, p))] for p in seq] + [inst[1]]
        edges.extend(zip(chain, chain[1:]))
    return Multigraph(set(g.vertex_set) | set(cvert.values()), edges)


def nonplanar_lower_bound(g: Multigraph) -> int:
    """Euler-formula lower bound on the crossing number of the underlying simple graph."""
    s = g.simple()
    n = sum(1 for v in s.vertices if s.degree(v) > 0)
    m = s.m
    if n < 3:
        return 0
    lb = m - 3 * n + 6
    if s.n and _triangle_free(s):
        lb = max(lb, m - 2 * n + 4)
    return max(0, lb)


def _triangle_free(g: Multigraph) -> bool:
    for (u, v), _ in g.edges():
        if set(g.neighbors(u)) & set(g.neighbors(v)):
            return False
    return True


class _Search:
    """Kuratowski-guided configuration search on a fixed instance list."""

    def __init__(
        self,
        vertices: Iterable[int],
        instances: list[tuple[int, int]],
        crossable: list[bool],
    ) -> None:
        self.vertices = sorted(set(vertices))
        self.inst = instances
        self.crossable = crossable
        self.base = max(self.vertices, default=-1) + 1
        self.failed: dict[tuple, int] = {}
        self.nodes = 0
        # parallel instances of one class are interchangeable while uncrossed
        self.cls = {}
        for i, (u, v) in enumerate(instances):
            self.cls.setdefault(ekey(u, v), []).append(i)

    def adjacent(self, i: int, j: int) -> bool:
        a, b = self.inst[i], self.inst[j]
        return bool({a[0], a[1]} & {b[0], b[1]})

    def build(self, chains: tuple[tuple[int, ...], ...], pairs: list[tuple[int, int]]):
        cid = {frozenset(p): self.base + k for k, p in enumerate(pairs)}
        segs: dict[Edge, list[tuple[int, int]]] = {}
        for i, ch in enumerate(chains):
            u, v = self.inst[i]
            path = [u] + [cid[frozenset((i, p))] for p in ch] + [v]
            for pos, (a, b) in enumerate(zip(path, path[1:])):
                segs.setdefault(ekey(a, b), []).append((i, pos))
        nverts = self.vertices + list(cid.values())
        return _nx_simple(nverts, segs.keys()), segs

    def solve(self, k: int):
        chains = tuple(() for _ in self.inst)
        return self._rec(chains, [], k)

    def _rec(self, chains, pairs, k):
        self.nodes += 1
        h, segs = self.build(chains, pairs)
        if k == 0:
            return (list(pairs), chains) if nx.check_planarity(h)[0] else None
        ok, cert = nx.check_planarity(h, counterexample=True)
        if ok:
            return list(pairs), chains
        if self.failed.get(chains, -1) >= k:
            return None
        cand: set[tuple[int, int]] = set()
        for a, b in cert.edges():
            for i, pos in segs[ekey(a, b)]:
                if not self.crossable[i]:
                    continue
                if not chains[i]:
                    c = ekey(*self.inst[i])
                    first = next(j for j in self.cls[c] if self.crossable[j] and not chains[j])
                    if i != first:
                        continue
                cand.add((i, pos))
        crossed = {frozenset(p) for p in pairs}
        for (i, pi), (j, pj) in combinations(sorted(cand), 2):
            if i == j or self.adjacent(i, j) or frozenset((i, j)) in crossed:
                continue
            new = list(chains)
            new[i] = chains[i][:pi] + (j,) + chains[i][pi:]
            new[j] = chains[j][:pj] + (i,) + chains[j][pj:]
            r = self._rec(tuple(new), pairs + [(i, j)], k - 1)
            if r is not None:
                return r
        self.failed[chains] = k
        return None


@dataclass(frozen=True)
class CrResult:
    ok: bool
    witness: CrossingConfiguration | None = None
    nodes: int = field(default=0, compare=False)

    def __bool__(self) -> bool:
        return self.ok


def _config_from(insts: list[Instance], pairs, chains) -> CrossingConfiguration:
    cps = tuple((insts[i], insts[j]) for i, j in pairs)
    orders = tuple((insts[i], tuple(insts[p] for p in ch)) for i, ch in enumerate(chains) if len(ch) > 1)
    return CrossingConfiguration(cps, orders)


def cr_le_instances(
    vertices: Iterable[int], insts: list[Instance], crossable: list[bool], k: int
) -> CrResult:
    s = _Search(vertices, [(u, v) for u, v, _ in insts], crossable)
    r = s.solve(k)
    if r is None:
        return CrResult(False, None, s.nodes)
    pairs, chains = r
    return CrResult(True, _config_from(insts, pairs, chains), s.nodes)


def cr_le(g: Multigraph, k: int) -> CrResult:
    """Does ``g`` have a drawing with at most ``k`` crossings?"""
    if k < 0:
        return CrResult(False)
    if nonplanar_lower_bound(g) > k:
        return CrResult(False)
    insts = instances_of(g)
    return cr_le_instances(g.vertices, insts, [True] * len(insts), k)


def crossing_number(g: Multigraph, cap: int = 3) -> int | None:
    """Exact crossing number if it is at most ``cap``, otherwise ``None``."""
    lb = nonplanar_lower_bound(g)
    for k in range(lb, cap + 1):
        if cr_le(g, k):
            return k
    return None


def format_cr(value: int | None, cap: int) -> str:
    return str(value) if value is not None else f">{cap}"


# ----------------------------------------------------------------- oracle
def _all_configs(insts: list[Instance], k: int, adjacent_ok: bool) -> Iterator[CrossingConfiguration]:
    pairs = []
    for a, b in combinations(insts, 2):
        if not adjacent_ok and ({a[0], a[1]} & {b[0], b[1]}):
            continue
        pairs.append((a, b))
    for chosen in combinations(pairs, k):
        used: dict[Instance, list[Instance]] = {}
        for a, b in chosen:
            used.setdefault(a, []).append(b)
            used.setdefault(b, []).append(a)
        multi = [(i, ps) for i, ps in used.items() if len(ps) > 1]
        choices = [list(permutations(ps)) for _, ps in multi]

        def rec(idx: int, acc: list) -> Iterator[CrossingConfiguration]:
            if idx == len(multi):
                yield CrossingConfiguration(tuple(chosen), tuple(acc))
                return
            for perm in choices[idx]:
                yield from rec(idx + 1, acc + [(multi[idx][0], tuple(perm))])

        yield from rec(0, [])


def crossing_number_slow(g: Multigraph, cap: int = 2) -> int | None:
    """Unpruned oracle: tries every set of ``k`` instance pairs, adjacent or not, in every order."""
    insts = instances_of(g)
    for k in range(cap + 1):
        for cfg in _all_configs(insts, k, adjacent_ok=True):
            if planar_bool(planarize(g, cfg)):
                return k
    return None


def planarizing_configurations(g: Multigraph, k: int) -> list[CrossingConfiguration]:
    """Every k-pair configuration of non-adjacent instances that planarizes ``g``."""
    out = []
    for cfg in _all_configs(instances_of(g), k, adjacent_ok=False):
        if planar_bool(planarize(g, cfg)):
            out.append(cfg)
    return out


# ------------------------------------------------------------ criticality
@dataclass(frozen=True)
class CriticalityVerdict:
    status: str  # k-critical | cr-too-low | non-critical-edge
    k: int
    cr: int | None  # exact value when <= cap, else None
    cr_cap: int
    witness: CrossingConfiguration | Edge | None = None
    edge_witnesses: tuple[tuple[Edge, CrossingConfiguration | None], ...] = field(default=(), compare=False)

    @property
    def critical(self) -> bool:
        return self.status == "k-critical"

    def cr_text(self) -> str:
        return format_cr(self.cr, self.cr_cap)


def is_k_crossing_critical(
    g: Multigraph, k: int, cr_cap: int = 3, suppress: bool = True, exact_cr: bool = True
) -> CriticalityVerdict:
    """k-crossing-criticality by edge deletion.

    ``g`` is k-critical iff cr(g) >= k and cr(g - e) <= k - 1 for every edge
    class e (one copy deleted).  Degree-2 vertices are suppressed first.
    """
    if suppress:
        g = suppress_degree_two(g)
    if any(g.degree(v) == 0 for v in g.vertices) and g.n > 1:
        raise DegenerateInputError("isolated vertex")
    low = cr_le(g, k - 1)
    if low:
        cr = crossing_number(g, k - 1)
        return CriticalityVerdict("cr-too-low", k, cr, cr_cap, low.witness)
    cr: int | None = k
    if exact_cr:
        cr = None
        for j in range(k, cr_cap + 1):
            if cr_le(g, j):
                cr = j
                break
    ew = []
    for (u, v), _ in g.edges():
        h = g.without_edge(u, v, 1)
        r = cr_le(h, k - 1)
        if not r:
            return CriticalityVerdict("non-critical-edge", k, cr, cr_cap, (u, v))
        ew.append(((u, v), r.witness))
    return CriticalityVerdict("k-critical", k, cr, cr_cap, None, tuple(ew))


# ----------------------------------------------------- parallel structure
def validate_parallel_structure(g: Multigraph) -> list[str]:
    """Multiplicity diagnostics for a 2-critical graph (empty list when clean)."""
    issues = []
    for (u, v), m in g.edges():
        if m > 2:
            issues.append(f"multiplicity {m} > 2 on {u}-{v}")
        elif m == 2:
            if not planar_bool(g.without_edge(u, v, 0)):
                issues.append(f"deleting digon {u}-{v} leaves a non-planar graph")
    return issues
