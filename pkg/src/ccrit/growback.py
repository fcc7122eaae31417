"""Growing 3-connected candidates back from a peripherally-4-connected graph.

Every edge ``vt`` of the reduced graph ``L`` carries one bit.  At a vertex
``v`` with three neighbours the bit says whether ``t`` is in ``T_v``; the
rule ``t in T_v  <=>  v in T_t`` makes the bit of an edge between two such
vertices shared by both ends.  Between two vertices of degree at least 4
the bit is the multiplicity (1 or 2) of the edge.  A vertex whose three bits
are all set also gets a ``U`` choice: the full triple, or a dog with one of
its neighbours as nose.

Choices are realised by small gadgets joined through *ports*.  A port is
either one gadget vertex carrying the edge with multiplicity 1 or 2, or two
gadget vertices with one edge each (the side of a dog facing its nose).  Two
split ports cannot meet, and a split port needs a doubled port opposite.

The nose ``x`` of a dog is a single vertex, or (when ``x`` has three
neighbours and is not a dog itself) a triangle with one corner per
neighbour, or, if ``|T_x| != 3``, an edge whose first end faces the dog.

A 1-drawing of ``L`` whose crossing edges both have clear bits extends to a
1-drawing of the grown graph (gadgets are drawn in small discs and doubled
edges alongside their originals), so such choices are discarded before
any criticality test.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator

from .canon import canonical_form
from .connectivity import is_k_connected
from .crossing import CriticalityVerdict, is_k_crossing_critical, planarizing_configurations
from .graph import Edge, GraphError, Multigraph, ekey


@dataclass(frozen=True)
class GrowChoice:
    bits: frozenset[Edge]  # edges whose bit is set
    u: tuple[tuple[int, int | None], ...]  # (vertex, nose or None for U = all) for full-T vertices
    nose_shape: tuple[tuple[int, str], ...] = ()  # (nose vertex, vertex | triangle | edge)

    def describe(self) -> str:
        bits = ",".join(f"{a}-{b}" for a, b in sorted(self.bits)) or "none"
        us = ",".join(f"{v}:{'all' if x is None else 'nose' + str(x)}" for v, x in self.u) or "none"
        ns = ",".join(f"{v}:{s}" for v, s in self.nose_shape) or "none"
        return f"bits={bits} U={us} noses={ns}"


@dataclass(frozen=True)
class GrownGraph:
    choice: GrowChoice
    graph: Multigraph
    classes: dict[int, frozenset[int]] = field(compare=False)  # vertex of L -> gadget vertices


@dataclass
class GrowResult:
    base: Multigraph
    critical: list[tuple[GrownGraph, CriticalityVerdict]]
    tested: int
    skipped: int  # pruned by the 1-drawing rule or not 3-connected
    exhausted: bool  # the test budget ran out before the choice space did

    @property
    def status(self) -> str:
        return "undecided" if self.exhausted else "complete"


def _three(l: Multigraph, v: int) -> bool:
    return l.num_neighbors(v) == 3


def _bit(bits: frozenset[Edge], a: int, b: int) -> bool:
    return ekey(a, b) in bits


def build(l: Multigraph, choice: GrowChoice) -> GrownGraph | None:
    """The grown graph for one choice, or ``None`` if the ports do not fit."""
    if l.max_multiplicity() > 1:
        raise GraphError("grow-back starts from a simple graph")
    noses = dict(choice.u)
    shapes = dict(choice.nose_shape)
    nxt = max(l.vertex_set) + 1
    ports: dict[tuple[int, int], list[tuple[int, int]]] = {}
    classes: dict[int, frozenset[int]] = {}
    inner: list[tuple[int, int, int]] = []

    def fresh() -> int:
        nonlocal nxt
        nxt += 1
        return nxt - 1

    for v in l.vertices:
        nb = l.neighbors(v)
        m = {t: 2 if _bit(choice.bits, v, t) else 1 for t in nb}
        x = noses.get(v)
        if x is not None:
            y, z = (t for t in nb if t != x)
            yp, zp = v, fresh()
            inner.append((yp, zp, 1))
            ports[(v, y)] = [(yp, 2)]
            ports[(v, z)] = [(zp, 2)]
            ports[(v, x)] = [(yp, 1), (zp, 1)]
            classes[v] = frozenset((yp, zp))
            continue
        shape = shapes.get(v, "vertex")
        if shape == "triangle":
            corners = {t: (v if i == 0 else fresh()) for i, t in enumerate(nb)}
            for a, b in combinations(corners.values(), 2):
                inner.append((a, b, 1))
            for t in nb:
                ports[(v, t)] = [(corners[t], m[t])]
            classes[v] = frozenset(corners.values())
        elif shape.startswith("edge"):
            dog = int(shape[4:])
            x1, x2 = v, fresh()
            inner.append((x1, x2, 1))
            for t in nb:
                ports[(v, t)] = [(x1 if t == dog else x2, m[t])]
            classes[v] = frozenset((x1, x2))
        else:
            for t in nb:
                ports[(v, t)] = [(v, m[t])]
            classes[v] = frozenset((v,))
    edges = list(inner)
    for (a, b), _ in l.edges():
        p, q = ports[(a, b)], ports[(b, a)]
        if len(p) == 1 and len(q) == 1:
            (pa, ma), (qb, mb) = p[0], q[0]
            if ma != mb:
                return None
            edges.append((pa, qb, ma))
        elif len(p) == 2 and len(q) == 2:
            return None
        else:
            split, single = (p, q) if len(p) == 2 else (q, p)
            (s, ms), = single
            if ms != 2:
                return None
            for w, _ in split:
                edges.append((w, s, 1))
    verts = {w for ws in classes.values() for w in ws}
    return GrownGraph(choice, Multigraph(verts, edges), classes)


def one_drawing_pairs(l: Multigraph) -> list[tuple[Edge, Edge]]:
    """Edge pairs crossed in some 1-drawing of ``l`` (empty if cr(l) != 1)."""
    out = set()
    for cfg in planarizing_configurations(l, 1):
        (a, b) = cfg.pairs[0]
        out.add(tuple(sorted((ekey(a[0], a[1]), ekey(b[0], b[1])))))
    return sorted(out)  # type: ignore[return-value]


def choices(l: Multigraph) -> Iterator[GrowChoice]:
    """Every choice, fewest set bits first; the 1-drawing rule is applied here."""
    edges = l.edge_classes()
    pairs = one_drawing_pairs(l)
    for k in range(len(edges) + 1):
        for chosen in combinations(edges, k):
            bits = frozenset(chosen)
            if any(e not in bits and f not in bits for e, f in pairs):
                continue
            full = [v for v in l.vertices if _three(l, v) and all(_bit(bits, v, t) for t in l.neighbors(v))]
            for us in product(*[[None, *l.neighbors(v)] for v in full]):
                u = tuple(zip(full, us))
                noses = {v: x for v, x in u if x is not None}
                if any(noses.get(x) == v for v, x in noses.items()):
                    continue  # two dogs facing each other
                yield from _with_nose_shapes(l, bits, u, noses)


def _with_nose_shapes(l: Multigraph, bits: frozenset[Edge], u, noses: dict[int, int]) -> Iterator[GrowChoice]:
    faced: dict[int, list[int]] = {}
    for v, x in noses.items():
        faced.setdefault(x, []).append(v)
    opts = []
    for x, dogs in sorted(faced.items()):
        shapes = ["vertex"]
        if _three(l, x) and x not in noses and len(dogs) == 1:
            shapes.append("triangle")
            if not all(_bit(bits, x, t) for t in l.neighbors(x)):
                shapes.append(f"edge{dogs[0]}")
        opts.append([(x, s) for s in shapes])
    for combo in product(*opts):
        yield GrowChoice(bits, u, tuple(pair for pair in combo if pair[1] != "vertex"))


def grow_back(l: Multigraph, max_tests: int | None = 200, cr_cap: int = 3) -> GrowResult:
    """Test grown candidates of ``l`` for 2-criticality, within a budget of ``max_tests``."""
    found: list[tuple[GrownGraph, CriticalityVerdict]] = []
    seen: set[bytes] = set()
    tested = skipped = 0
    exhausted = False
    for ch in choices(l):
        gg = build(l, ch)
        if gg is None or not is_k_connected(gg.graph, 3):
            skipped += 1
            continue
        key = canonical_form(gg.graph)
        if key in seen:
            continue
        seen.add(key)
        if max_tests is not None and tested >= max_tests:
            exhausted = True
            break
        tested += 1
        verdict = is_k_crossing_critical(gg.graph, 2, cr_cap=cr_cap)
        if verdict.critical:
            found.append((gg, verdict))
    return GrowResult(l, found, tested, skipped, exhausted)
