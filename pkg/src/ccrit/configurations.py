"""Basic (T,U)-configurations.

A configuration is a graph H with three attachments x, y, z (no edges among
them) whose nucleus is connected and whose apex graph H^+ is planar.  The
basic ones are those that are minimal under taking subgraphs and
suppressing degree-2 nucleus vertices: no proper sub-configuration has the
same pair (T, U).

The catalog is derived by exhaustive search over small nuclei with the
restrictions that hold in a 3-connected 2-crossing-critical host after the
representative replacement: every attachment has degree 1 or 2 in H, every
nucleus vertex has degree at least 3, and no edge has multiplicity above 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator

from .canon import canonical_form
from .connectivity import is_k_connected
from .graph import GraphError, Multigraph, contract_set
from .reduction import Configuration, TUProfile, is_bridge_of, tu_profile

ATT = (0, 1, 2)


def _colours(h: Multigraph) -> dict[int, str]:
    return {v: "a" if v in ATT else "i" for v in h.vertices}


def _labelled_colours(h: Multigraph) -> dict[int, str]:
    return {v: f"a{v}" if v in ATT else "i" for v in h.vertices}


def clean(h: Multigraph) -> Multigraph:
    """Drop dangling nucleus pieces and suppress nucleus vertices of degree 2."""
    changed = True
    while changed:
        changed = False
        for v in h.vertices:
            if v in ATT:
                continue
            d = h.degree(v)
            nb = h.neighbors(v)
            if d <= 1 or (d == 2 and len(nb) == 1):
                h = h.without_vertices([v])
            elif d == 2 and not (nb[0] in ATT and nb[1] in ATT):
                h = h.without_vertices([v]).with_vertices(nb).with_edge(*nb)
            else:
                continue
            changed = True
            break
    return h.with_vertices(ATT)


def completion(h: Multigraph) -> Multigraph:
    """The most connected host around ``h``.

    Each attachment is replaced by vertices of the outside world: one per
    edge when a single nucleus vertex meets it, one shared vertex when two
    nucleus vertices do.  The outside vertices form a clique.
    """
    nxt = max(h.vertex_set) + 1
    edges = [(a, b, m) for (a, b), m in h.edges() if a not in ATT and b not in ATT]
    outside = []
    for t in ATT:
        nb = h.adjacency(t)
        if len(nb) == 1:
            (a, m), = nb.items()
            for _ in range(m):
                edges.append((a, nxt))
                outside.append(nxt)
                nxt += 1
        else:
            for a in nb:
                edges.append((a, nxt))
            outside.append(nxt)
            nxt += 1
    edges += list(combinations(outside, 2))
    return Multigraph([v for v in h.vertices if v not in ATT] + outside, edges)


def host_feasible(h: Multigraph) -> bool:
    """Can ``h`` sit as G_v inside a 3-connected graph?  Its completion must be 3-connected."""
    return is_k_connected(completion(h), 3)


def _signature(p: TUProfile) -> tuple[frozenset[int], frozenset[int]]:
    return p.T, p.U


def is_basic(h: Multigraph) -> bool:
    """No proper sub-configuration (up to suppression) with the same (T, U)."""
    target = _signature(tu_profile(h, ATT))

    @lru_cache(maxsize=None)
    def contains(key: bytes) -> bool:
        g = _by_key[key]
        if _signature(tu_profile(g, ATT)) != target:
            return False
        if is_bridge_of(g, ATT):
            return True
        return any(contains(_key(clean(g.without_edge(a, b)))) for (a, b), _ in g.edges())

    _by_key: dict[bytes, Multigraph] = {}

    def _key(g: Multigraph) -> bytes:
        k = canonical_form(g, _labelled_colours(g))
        _by_key.setdefault(k, g)
        return k

    for (a, b), _ in h.edges():
        if contains(_key(clean(h.without_edge(a, b)))):
            return False
    return True


def _attachment_patterns(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Ways one attachment meets a nucleus on ``n`` vertices: ((vertex, multiplicity), ...)."""
    inner = range(3, 3 + n)
    out: list[tuple[tuple[int, int], ...]] = [((v, 1),) for v in inner]
    out += [((v, 2),) for v in inner]
    out += [((a, 1), (b, 1)) for a, b in combinations(inner, 2)]
    return out


def _nuclei(n: int) -> Iterator[Multigraph]:
    """Connected multigraphs (multiplicity <= 2) on vertices 3..n+2, one per isomorphism class."""
    verts = list(range(3, 3 + n))
    pairs = list(combinations(verts, 2))
    seen: set[bytes] = set()
    for ms in product((0, 1, 2), repeat=len(pairs)):
        g = Multigraph(verts, [(a, b, m) for (a, b), m in zip(pairs, ms) if m])
        if not g.is_connected():
            continue
        k = canonical_form(g)
        if k in seen:
            continue
        seen.add(k)
        yield g


def enumerate_basic(max_nucleus: int = 4, max_edges: int | None = None) -> list[Configuration]:
    """Every basic configuration with at most ``max_nucleus`` nucleus vertices."""
    found: dict[bytes, Configuration] = {}
    for n in range(1, max_nucleus + 1):
        pats = _attachment_patterns(n)
        for nuc in _nuclei(n):
            deg = {v: nuc.degree(v) for v in nuc.vertices}
            for chosen in combinations_with_replacement(range(len(pats)), 3):
                h = _assemble(nuc, [pats[i] for i in chosen], deg)
                if h is None:
                    continue
                if max_edges is not None and h.m > max_edges:
                    continue
                key = canonical_form(h, _colours(h))
                if key in found:
                    continue
                p = tu_profile(h, ATT)
                if not p.apex_planar or not is_bridge_of(h, ATT) or not host_feasible(h):
                    continue
                if not is_basic(h):
                    continue
                found[key] = Configuration(_name(p, n, len(found)), h, ATT)
    return sorted(found.values(), key=lambda c: (c.profile().sizes, c.graph.n, c.graph.m, c.name))


def _assemble(nuc: Multigraph, pats, deg: dict[int, int]) -> Multigraph | None:
    d = dict(deg)
    edges = [(a, b, m) for (a, b), m in nuc.edges()]
    for t, pat in zip(ATT, pats):
        for v, m in pat:
            d[v] += m
            edges.append((t, v, m))
    if any(x < 3 for x in d.values()):
        return None
    return Multigraph(list(ATT) + list(nuc.vertices), edges)


def _name(p: TUProfile, n: int, idx: int) -> str:
    t, u = p.sizes
    return f"TU{t}{u}-n{n}-{idx}"




# --------------------------------------------------------------- catalog
_DATA = "configurations.txt"


def format_configuration(c: Configuration) -> str:
    p = c.profile()
    edges = " ".join(f"{a}-{b}" + (f"x{m}" if m > 1 else "") for (a, b), m in c.graph.edges())
    t = ",".join(map(str, sorted(p.T)))
    u = ",".join(map(str, sorted(p.U)))
    return f"name={c.name} T={t} U={u} edges={edges}"


def parse_configuration(line: str) -> tuple[Configuration, frozenset[int], frozenset[int]]:
    """One data line -> (configuration, declared T, declared U)."""
    head, _, edge_text = line.partition(" edges=")
    fields = dict(kv.split("=", 1) for kv in head.split())
    edges = []
    for tok in edge_text.split():
        pair, _, mult = tok.partition("x")
        a, b = map(int, pair.split("-"))
        edges.append((a, b, int(mult or 1)))
    g = Multigraph(sorted({x for a, b, _ in edges for x in (a, b)} | set(ATT)), edges)

    def ints(s: str) -> frozenset[int]:
        return frozenset(int(x) for x in s.split(",") if x)

    return Configuration(fields["name"], g, ATT), ints(fields["T"]), ints(fields["U"])


def write_catalog(path: str, max_nucleus: int = 4) -> int:
    cs = enumerate_basic(max_nucleus)
    with open(path, "w") as fh:
        fh.write(f"# basic (T,U)-configurations, attachments 0 1 2, nucleus <= {max_nucleus}\n")
        for c in cs:
            fh.write(format_configuration(c) + "\n")
    return len(cs)


def load_catalog(path: str | None = None) -> list[tuple[Configuration, frozenset[int], frozenset[int]]]:
    if path is None:
        from importlib.resources import files

        text = files("ccrit").joinpath("data", _DATA).read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return [parse_configuration(ln) for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


def validate_configuration(c: Configuration, T: frozenset[int], U: frozenset[int]) -> list[str]:
    """Problems with a catalog entry, checked by two independent routes.

    The direct route recomputes (T, U) and apex planarity on the
    configuration.  The host route glues the configuration into K_4 at the
    attachments, contracts the nucleus as a planar 3-reduction would and reads the profile of
    the contracted vertex with :func:`tu_classify`.
    """
    from .reduction import ReductionTrace, ReductionStep, tu_classify

    out = []
    p = c.profile()
    if (p.T, p.U) != (T, U):
        out.append(f"{c.name}: direct profile {p} differs from the declared one")
    if not p.apex_planar:
        out.append(f"{c.name}: apex graph is not planar")
    out += [f"{c.name}: {s}" for s in p.consistency_issues()]
    w = max(c.graph.vertex_set) + 1
    host = c.graph.with_vertices([w])
    for a, b in combinations(ATT, 2):
        host = host.with_edge(a, b)
    for t in ATT:
        host = host.with_edge(t, w)
    nucleus = [v for v in c.graph.vertices if v not in ATT]
    rep = min(nucleus)
    result = contract_set(host, nucleus, keep=rep)
    classes = {v: frozenset([v]) for v in result.vertices}
    classes[rep] = frozenset(nucleus)
    trace = ReductionTrace(host, result, (ReductionStep(_host_cut(host, nucleus), tuple(nucleus), rep),), classes)
    if len(result.neighbors(rep)) != 3:
        out.append(f"{c.name}: contracted nucleus does not have three neighbours")
        return out
    q = tu_classify(trace, rep)
    if q.sizes != p.sizes:
        out.append(f"{c.name}: host profile {q} has sizes {q.sizes}, expected {p.sizes}")
    return out


def _host_cut(host: Multigraph, nucleus: list[int]) -> tuple[int, int, int]:
    inner = set(nucleus)
    return tuple(sorted({b for a in nucleus for b in host.neighbors(a) if b not in inner}))  # type: ignore[return-value]


def configuration_catalog() -> list[Configuration]:
    """The derived catalog of basic configurations (shipped data, validated on load)."""
    return list(_catalog())


@lru_cache(maxsize=1)
def _catalog() -> tuple[Configuration, ...]:
    out = []
    for c, T, U in load_catalog():
        issues = validate_configuration(c, T, U)
        if issues:
            raise GraphError("; ".join(issues))
        out.append(c)
    return tuple(out)
