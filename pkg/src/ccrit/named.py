"""Constructors for the named graphs used throughout the package."""
from __future__ import annotations

from collections.abc import Callable
from typing import Any

from .graph import GraphError, Multigraph, complete_graph, contract_set, cycle_graph


def mobius_ladder(n: int) -> Multigraph:
    """V_{2n}: the 2n-cycle 0..2n-1 plus the n diagonals i -- i+n.

    Rim edge (i, i+1) is tagged ``r{i}``, spoke (i, i+n) is tagged ``s{i}``.
    """
    if n < 2:
        raise GraphError("V2n needs n >= 2")
    N = 2 * n
    edges, tags = [], {}
    for i in range(N):
        e = (i, (i + 1) % N)
        edges.append(e)
        tags[tuple(sorted(e))] = f"r{i}"
    for i in range(n):
        edges.append((i, i + n))
        tags[(i, i + n)] = f"s{i}"
    return Multigraph(range(N), edges, edge_tags=tags)


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(range(a + b), [(i, a + j) for i in range(a) for j in range(b)])


def k34_star() -> Multigraph:
    """Two copies of K_{2,3} whose 3-sides are joined by a perfect matching (tag ``M``)."""
    left = [(a, b) for a in (0, 1) for b in (2, 3, 4)]
    right = [(a, c) for a in (5, 6) for c in (7, 8, 9)]
    match = [(2, 7), (3, 8), (4, 9)]
    return Multigraph(range(10), left + right + match, edge_tags={e: "M" for e in match})


def k34_star_contraction(j: int) -> Multigraph:
    """K_{3,4}* with the first ``j`` matching edges contracted (j = 3 gives K_{3,4})."""
    if not 0 <= j <= 3:
        raise GraphError("between 0 and 3 matching edges can be contracted")
    g = k34_star()
    for b, c in [(2, 7), (3, 8), (4, 9)][:j]:
        g = contract_set(g, {b, c})
    return g


def q3() -> Multigraph:
    return Multigraph(range(8), [(u, u ^ (1 << i)) for u in range(8) for i in range(3) if u < u ^ (1 << i)])


EVEN_Q3 = (0, 3, 5, 6)


def q3_v() -> Multigraph:
    """Q3 plus a vertex joined to one side of its bipartition."""
    g = q3()
    for u in EVEN_Q3:
        g = g.with_edge(u, 8)
    return g


def q3_2e() -> Multigraph:
    """Q3 plus two of the four antipodal (bipartition-preserving) edges."""
    return q3().with_edge(0, 7).with_edge(3, 4)


def q3_t() -> Multigraph:
    """Q3 plus a 3-cycle on three vertices of one side, and the fourth joined to its antipode."""
    return q3().with_edge(3, 5).with_edge(5, 6).with_edge(3, 6).with_edge(0, 7)


def c3_box_c3() -> Multigraph:
    edges = []
    for i in range(3):
        for j in range(3):
            edges.append((3 * i + j, 3 * ((i + 1) % 3) + j))
            edges.append((3 * i + j, 3 * i + (j + 1) % 3))
    return Multigraph(range(9), edges)


def petersen() -> Multigraph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(range(10), edges)


def wheel(n: int) -> Multigraph:
    """Hub 0 joined to every vertex of the rim cycle 1..n."""
    if n < 3:
        raise GraphError("wheel rim needs >= 3 vertices")
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    return Multigraph(range(n + 1), rim + [(0, i) for i in range(1, n + 1)])


def prism(n: int) -> Multigraph:
    """Circular ladder C_n x K_2."""
    edges = [(i, (i + 1) % n) for i in range(n)] + [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Multigraph(range(2 * n), edges)


def bicycle_wheel(pattern: str) -> Multigraph:
    """Rim cycle 0..r-1 with axle x=r, y=r+1 (adjacent).

    ``pattern[i]`` lists the axle ends joined to rim vertex i: ``x``, ``y``,
    ``b`` (both) or ``-`` (none).
    """
    r = len(pattern)
    if r < 3:
        raise GraphError("rim needs >= 3 vertices")
    x, y = r, r + 1
    edges = [(i, (i + 1) % r) for i in range(r)] + [(x, y)]
    for i, ch in enumerate(pattern):
        if ch not in "xyb-":
            raise GraphError(f"bad spoke code {ch!r}")
        if ch in "xb":
            edges.append((i, x))
        if ch in "yb":
            edges.append((i, y))
    tags = {r: "axle-x", r + 1: "axle-y"}
    return Multigraph(range(r + 2), edges, vertex_tags=tags)


_BUILDERS: dict[str, Callable[..., Multigraph]] = {
    "V2n": mobius_ladder,
    "mobius": mobius_ladder,
    "K5": lambda: complete_graph(5),
    "K4": lambda: complete_graph(4),
    "K": complete_graph,
    "K33": lambda: complete_bipartite(3, 3),
    "K34": lambda: complete_bipartite(3, 4),
    "Kab": complete_bipartite,
    "K34*": k34_star,
    "K34*/": k34_star_contraction,
    "Q3": q3,
    "Q3v": q3_v,
    "Q3^v": q3_v,
    "Q32e": q3_2e,
    "Q3^2e": q3_2e,
    "Q3t": q3_t,
    "Q3^t": q3_t,
    "C3xC3": c3_box_c3,
    "C3□C3": c3_box_c3,
    "petersen": petersen,
    "Petersen": petersen,
    "wheel": wheel,
    "prism": prism,
    "cycle": cycle_graph,
    "bicycle": bicycle_wheel,
}


def named_graph(name: str, *args: Any, **kwargs: Any) -> Multigraph:
    """Build a named graph, e.g. ``named_graph("V2n", 5)`` or ``named_graph("bicycle", "xyxyxy")``."""
    try:
        fn = _BUILDERS[name]
    except KeyError:
        raise GraphError(f"unknown graph name {name!r}") from None
    return fn(*args, **kwargs)


def graph_names() -> list[str]:
    return sorted(_BUILDERS)
