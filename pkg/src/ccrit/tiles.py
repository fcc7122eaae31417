"""Tiles, their algebra, and the 42-tile set built from frames and pictures.

A tile is a graph with two ordered walls.  Joining identifies the right wall
of one tile with the left wall of the next, cyclizing identifies the two
walls of one tile.  Tile drawings are decided by planarity of an augmented
graph: the walls are laid on a boundary cycle and an apex is joined to every
boundary vertex, so the tile must be drawn on one side of the cycle with the
walls in order.  Only the tile's own edges may cross.
"""
from __future__ import annotations

import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from importlib import resources
from itertools import product

from .canon import canonical_form
from .crossing import CrResult, Instance, cr_le_instances
from .graph import Edge, GraphError, Multigraph, ekey, identify, suppress_degree_two

RIM = "rim"


@dataclass(frozen=True)
class Tile:
    graph: Multigraph
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        lw, rw = tuple(self.left), tuple(self.right)
        object.__setattr__(self, "left", lw)
        object.__setattr__(self, "right", rw)
        if len(set(lw)) != len(lw) or len(set(rw)) != len(rw):
            raise GraphError("wall vertices must be distinct")
        if set(lw) & set(rw):
            raise GraphError("left and right walls must be disjoint")
        if not (set(lw) | set(rw)) <= self.graph.vertex_set:
            raise GraphError("wall vertices must belong to the graph")

    # walls -----------------------------------------------------------
    def right_inverted(self) -> Tile:
        return Tile(self.graph, self.left, self.right[::-1])

    def left_inverted(self) -> Tile:
        return Tile(self.graph, self.left[::-1], self.right)

    def inverted(self) -> Tile:
        return Tile(self.graph, self.left[::-1], self.right[::-1])

    def reversed(self) -> Tile:
        return Tile(self.graph, self.right, self.left)

    def without_edge(self, u: int, v: int) -> Tile:
        return Tile(self.graph.without_edge(u, v, 1), self.left, self.right)

    def relabel(self, mapping: dict[int, int]) -> Tile:
        f = lambda v: mapping.get(v, v)  # noqa: E731
        return Tile(self.graph.relabel(mapping), tuple(map(f, self.left)), tuple(map(f, self.right)))

    def canonical(self, reversal: bool = False) -> bytes:
        """Wall-respecting canonical form (optionally also up to reversal)."""
        forms = [_wall_form(self)]
        if reversal:
            forms.append(_wall_form(self.reversed()))
        return min(forms)


def _wall_form(t: Tile) -> bytes:
    colors: dict[int, tuple[str, int]] = {v: ("", 0) for v in t.graph.vertices}
    for i, v in enumerate(t.left):
        colors[v] = ("L", i)
    for i, v in enumerate(t.right):
        colors[v] = ("R", i)
    return canonical_form(t.graph, colors)


def tile_transform(t: Tile, op: str) -> Tile:
    ops = {
        "right-invert": t.right_inverted,
        "left-invert": t.left_inverted,
        "invert": t.inverted,
        "reverse": t.reversed,
    }
    try:
        return ops[op]()
    except KeyError:
        raise GraphError(f"unknown tile transform {op!r}") from None


def tile_join(a: Tile, b: Tile) -> Tile:
    """a (x) b: identify the right wall of ``a`` term by term with the left wall of ``b``."""
    if len(a.right) != len(b.left):
        raise GraphError(f"incompatible walls: |rho|={len(a.right)} but |lambda'|={len(b.left)}")
    union, shift = a.graph.disjoint_union(b.graph)
    g = identify(union, [(x, shift[y]) for x, y in zip(a.right, b.left)])
    return Tile(g, a.left, tuple(shift[v] for v in b.right))


def join_all(tiles: Iterable[Tile]) -> Tile:
    it = iter(tiles)
    try:
        acc = next(it)
    except StopIteration:
        raise GraphError("cannot join an empty sequence") from None
    for t in it:
        acc = tile_join(acc, t)
    return acc


def tile_cyclize(t: Tile) -> Multigraph:
    """Identify lambda_i with rho_i; multiplicities and degree-2 vertices are kept."""
    if len(t.left) != len(t.right):
        raise GraphError("tile is not cyclically compatible")
    return identify(t.graph, list(zip(t.left, t.right)))


# ------------------------------------------------------------ tile drawings
def _frame_instances(t: Tile) -> tuple[list[int], list[Instance], list[bool], Multigraph]:
    g = t.graph
    base = max(g.vertex_set, default=-1) + 1
    a, b, apex = base, base + 1, base + 2
    cycle = [a, *t.left, b, *reversed(t.right)]
    gadget = [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
    gadget += [(apex, c) for c in cycle]
    insts: list[Instance] = []
    crossable: list[bool] = []
    for (u, v), m in g.edges():
        for i in range(m):
            insts.append((u, v, i))
            crossable.append(True)
    seen: dict[Edge, int] = {}
    for u, v in gadget:
        k = ekey(u, v)
        idx = g.mult(*k) + seen.get(k, 0)
        seen[k] = seen.get(k, 0) + 1
        insts.append((k[0], k[1], idx))
        crossable.append(False)
    aug = Multigraph(set(g.vertex_set) | {a, b, apex}, [(u, v) for u, v, _ in insts])
    return sorted(aug.vertex_set), insts, crossable, aug


def tile_frame_graph(t: Tile) -> Multigraph:
    """The tile plus a boundary cycle through both walls and an apex on that cycle."""
    return _frame_instances(t)[3]


def tcr_le(t: Tile, m: int) -> CrResult:
    """Is there a tile drawing with at most ``m`` crossings (tile edges only)?"""
    if m < 0:
        return CrResult(False)
    verts, insts, crossable, _ = _frame_instances(t)
    return cr_le_instances(verts, insts, crossable, m)


def tile_crossing_number(t: Tile, cap: int = 2) -> int | None:
    for k in range(cap + 1):
        if tcr_le(t, k):
            return k
    return None


def degeneracy_failures(t: Tile, k: int) -> list[str]:
    """Reasons ``t`` is not k-degenerate (empty when it is)."""
    out = []
    if not tcr_le(t, 0):
        out.append("not planar as a tile")
    inv = t.right_inverted()
    for u, v in t.graph.edge_classes():
        if not tcr_le(inv.without_edge(u, v), k - 1):
            out.append(f"tcr(T^ - {u}-{v}) >= {k}")
    return out


def is_k_degenerate(t: Tile, k: int) -> bool:
    if not tcr_le(t, 0):
        return False
    inv = t.right_inverted()
    return all(tcr_le(inv.without_edge(u, v), k - 1) for u, v in t.graph.edge_classes())


# ----------------------------------------------------------- data blocks
@dataclass(frozen=True)
class Block:
    """One FRAME or PICTURE record of the tile data file."""

    kind: str
    name: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int, bool], ...]
    left: tuple[str, ...] = ()
    right: tuple[str, ...] = ()
    square: tuple[tuple[str, ...], ...] = ()


CORNERS = ("w", "we", "x", "xe")
# 180 degree rotation of the square: the corner map and the side shift
ROTATE = {"w": "x", "we": "xe", "x": "w", "xe": "we"}


def _parse_edges(text: str, where: str) -> list[tuple[str, str, int, bool]]:
    out = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        toks = item.split()
        if "-" not in toks[0]:
            raise GraphError(f"{where}: bad edge {item!r}")
        u, v = toks[0].split("-", 1)
        m, rim = 1, False
        for tok in toks[1:]:
            if tok == RIM:
                rim = True
            elif tok.startswith("x") and tok[1:].isdigit():
                m = int(tok[1:])
            else:
                raise GraphError(f"{where}: bad edge flag {tok!r}")
        out.append((u, v, m, rim))
    return out


def parse_tile_data(text: str) -> dict[str, dict[str, Block]]:
    blocks: dict[str, dict[str, Block]] = {"FRAME": {}, "PICTURE": {}}
    cur: dict | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        head, _, rest = line.partition(" ")
        if head in ("FRAME", "PICTURE"):
            if cur is not None:
                raise GraphError(f"{where}: block {cur['name']} not closed")
            cur = {"kind": head, "name": rest.strip(), "V": [], "E": [], "LWALL": [], "RWALL": [], "SQUARE": []}
            continue
        if cur is None:
            raise GraphError(f"{where}: data outside a block")
        if line == "END":
            b = _make_block(cur)
            blocks[b.kind][b.name] = b
            cur = None
            continue
        key, sep, val = line.partition(":")
        if not sep or key not in ("V", "E", "LWALL", "RWALL", "SQUARE"):
            raise GraphError(f"{where}: unknown record {line!r}")
        if key == "E":
            cur["E"].extend(_parse_edges(val, where))
        elif key == "SQUARE":
            cur["SQUARE"] = [tuple(p.split()) for p in val.split("|")]
        else:
            cur[key].extend(val.split())
    if cur is not None:
        raise GraphError(f"block {cur['name']} not closed")
    return blocks


def _make_block(d: dict) -> Block:
    name = f"{d['kind'].lower()} {d['name']}"
    verts = tuple(d["V"])
    vs = set(verts)
    if len(vs) != len(verts):
        raise GraphError(f"{name}: repeated vertex")
    for u, v, _, _ in d["E"]:
        if u not in vs or v not in vs:
            raise GraphError(f"{name}: edge {u}-{v} uses an undeclared vertex")
    sq = tuple(d["SQUARE"])
    if len(sq) != 4:
        raise GraphError(f"{name}: SQUARE needs four sides")
    if d["kind"] == "FRAME":
        if tuple(p[0] for p in sq) != CORNERS or any(len(p) != 1 for p in sq):
            raise GraphError(f"{name}: SQUARE must list the corners w | we | x | xe")
    else:
        for p, (s, t) in zip(sq, [("w", "we"), ("we", "x"), ("x", "xe"), ("xe", "w")]):
            if p[0] != s or p[-1] != t:
                raise GraphError(f"{name}: side {' '.join(p)} should run {s}..{t}")
            have = {frozenset((u, v)) for u, v, _, _ in d["E"]}
            for u, v in zip(p, p[1:]):
                if frozenset((u, v)) not in have:
                    raise GraphError(f"{name}: side edge {u}-{v} missing from E")
    for c in CORNERS:
        if c not in vs:
            raise GraphError(f"{name}: corner {c} missing")
    return Block(d["kind"], d["name"], verts, tuple(d["E"]), tuple(d["LWALL"]), tuple(d["RWALL"]), sq)


def load_tile_data(path: str | None = None) -> dict[str, dict[str, Block]]:
    if path is None:
        text = resources.files("ccrit").joinpath("data/tiles.txt").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_tile_data(text)


# ------------------------------------------------------------- the set S
@dataclass(frozen=True)
class TileSource:
    picture: str
    frame: str
    rotation: int  # 0 or 180
    names: tuple[str, ...] = field(default=(), compare=False)  # vertex id -> local name

    def __str__(self) -> str:
        return f"{self.picture}/{self.frame}/{self.rotation}"


def insert_picture(frame: Block, picture: Block, rotation: int = 0) -> tuple[Tile, tuple[str, ...]]:
    """Identify the square of ``picture`` (possibly rotated) with the frame's square."""
    if rotation not in (0, 180):
        raise GraphError("rotation must be 0 or 180")
    rename = (lambda s: ROTATE.get(s, s)) if rotation else (lambda s: s)  # noqa: E731
    names: list[str] = list(frame.vertices)
    for v in picture.vertices:
        nv = rename(v)
        key = nv if nv in CORNERS else f"p:{v}"
        if key not in names:
            names.append(key)
    ids = {s: i for i, s in enumerate(names)}
    pid = lambda v: ids[rename(v)] if rename(v) in CORNERS else ids[f"p:{v}"]  # noqa: E731
    edges, tags = [], {}
    for u, v, m, rim in frame.edges:
        edges.append((ids[u], ids[v], m))
        if rim:
            tags[ekey(ids[u], ids[v])] = RIM
    rim_pairs = set()
    for side in (picture.square[1], picture.square[3]):
        rim_pairs |= {frozenset(p) for p in zip(side, side[1:])}
    for u, v, m, rim in picture.edges:
        edges.append((pid(u), pid(v), m))
        if rim or frozenset((u, v)) in rim_pairs:
            tags[ekey(pid(u), pid(v))] = RIM
    g = Multigraph(range(len(names)), edges, edge_tags=tags)
    return Tile(g, tuple(ids[s] for s in frame.left), tuple(ids[s] for s in frame.right)), tuple(names)


@dataclass(frozen=True)
class TileCatalog:
    frames: dict[str, Block]
    pictures: dict[str, Block]
    tiles: tuple[Tile, ...]
    sources: tuple[TileSource, ...]  # first construction producing each tile
    combos: tuple[tuple[TileSource, int], ...]  # every picture x frame x rotation -> tile index

    def __len__(self) -> int:
        return len(self.tiles)

    def per_picture(self) -> dict[str, int]:
        out: dict[str, set[int]] = {}
        for src, idx in self.combos:
            out.setdefault(src.picture, set()).add(idx)
        return {p: len(s) for p, s in out.items()}

    def index_of(self, t: Tile) -> int | None:
        key = t.canonical()
        for i, u in enumerate(self.tiles):
            if u.canonical() == key:
                return i
        return None


def build_tile_set_S(
    data: dict[str, dict[str, Block]] | None = None, reversal: bool = False, verify: bool = False
) -> TileCatalog:
    """All picture x frame x rotation tiles, deduplicated by wall-respecting isomorphism.

    With ``verify`` every tile and its full inversion is checked for
    2-degeneracy, and a failure names the construction that produced it.
    """
    data = load_tile_data() if data is None else data
    frames, pictures = data["FRAME"], data["PICTURE"]
    tiles: list[Tile] = []
    sources: list[TileSource] = []
    keys: dict[bytes, int] = {}
    combos = []
    for pname in pictures:
        for fname in frames:
            for rot in (0, 180):
                t, names = insert_picture(frames[fname], pictures[pname], rot)
                src = TileSource(pname, fname, rot, names)
                key = t.canonical(reversal)
                if key not in keys:
                    keys[key] = len(tiles)
                    tiles.append(t)
                    sources.append(src)
                combos.append((src, keys[key]))
    cat = TileCatalog(dict(frames), dict(pictures), tuple(tiles), tuple(sources), tuple(combos))
    if verify:
        for t, src in zip(cat.tiles, cat.sources):
            for label, u in (("T", t), ("inverted T", t.inverted())):
                bad = degeneracy_failures(u, 2)
                if bad:
                    raise GraphError(f"{label} from {src}: {'; '.join(bad)}")
    return cat


_CATALOG: TileCatalog | None = None


def default_catalog() -> TileCatalog:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = build_tile_set_S()
    return _CATALOG


# ------------------------------------------------------------- the family
@dataclass(frozen=True)
class TileSequence:
    """Indices into a catalog, with an inversion mark per position."""

    items: tuple[tuple[int, bool], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple((int(i), bool(b)) for i, b in self.items))

    @classmethod
    def family(cls, ids: Iterable[int]) -> TileSequence:
        """Alternating marks: inverted exactly at odd positions."""
        return cls(tuple((i, k % 2 == 1) for k, i in enumerate(ids)))

    @property
    def is_family_shape(self) -> bool:
        n = len(self.items)
        return n % 2 == 1 and n >= 3 and all(b == (k % 2 == 1) for k, (_, b) in enumerate(self.items))

    def tiles(self, catalog: TileCatalog) -> list[Tile]:
        out = []
        for i, inv in self.items:
            t = catalog.tiles[i]
            out.append(t.inverted() if inv else t)
        return out

    def __str__(self) -> str:
        return " ".join(f"{'^' if b else ''}{i}" for i, b in self.items)


def sequence_graph(seq: TileSequence, catalog: TileCatalog, suppress: bool = True) -> Multigraph:
    """circ((join of the sequence) right-inverted), optionally with degree-2 vertices suppressed."""
    tiles = seq.tiles(catalog)
    for a, b in zip(tiles, tiles[1:]):
        if len(a.right) != len(b.left):
            raise GraphError("incompatible consecutive tiles")
    g = tile_cyclize(join_all(tiles).right_inverted())
    g = suppress_degree_two(g) if suppress else g
    return g.consecutive()[0]


def family_sequences(m: int, catalog: TileCatalog) -> Iterator[TileSequence]:
    """All family-shaped sequences of length 2m+1, in lexicographic order of tile ids."""
    if m < 1:
        raise GraphError("family sequences need m >= 1")
    for ids in product(range(len(catalog)), repeat=2 * m + 1):
        yield TileSequence.family(ids)


def enumerate_family(
    m: int, dedupe: bool = True, catalog: TileCatalog | None = None
) -> Iterator[tuple[TileSequence, Multigraph]]:
    catalog = catalog or default_catalog()
    seen: set[bytes] = set()
    for seq in family_sequences(m, catalog):
        g = sequence_graph(seq, catalog)
        if dedupe:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        yield seq, g


def sample_family(
    m: int, count: int, seed: int = 0, catalog: TileCatalog | None = None
) -> list[tuple[TileSequence, Multigraph]]:
    """A deterministic sample of distinct family graphs for a given seed."""
    catalog = catalog or default_catalog()
    rng = random.Random(seed)
    n = len(catalog)
    out: list[tuple[TileSequence, Multigraph]] = []
    seen: set[bytes] = set()
    tries = 0
    while len(out) < count and tries < 50 * count + 100:
        tries += 1
        seq = TileSequence.family(rng.randrange(n) for _ in range(2 * m + 1))
        g = sequence_graph(seq, catalog)
        key = canonical_form(g)
        if key in seen:
            continue
        seen.add(key)
        out.append((seq, g))
    return out


def rim_edges(g: Multigraph) -> list[Edge]:
    return sorted(e for e, t in g.edge_tags.items() if t == RIM)


def rim_cycle(g: Multigraph) -> tuple[int, ...] | None:
    """The rim as a vertex cycle, if the rim-tagged edges form one cycle through its vertices."""
    es = rim_edges(g)
    if not es:
        return None
    adj: dict[int, list[int]] = {}
    for u, v in es:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(len(x) != 2 for x in adj.values()):
        return None
    start = min(adj)
    cyc, prev, cur = [start], None, start
    while True:
        nxt = next((y for y in adj[cur] if y != prev), None) if prev is not None else adj[cur][0]
        if nxt == start:
            break
        cyc.append(nxt)
        prev, cur = cur, nxt
        if len(cyc) > len(adj):
            return None
    return tuple(cyc) if len(cyc) == len(adj) else None
