"""graph6 / sparse6 / edgelist serialisation.

The graph6 and sparse6 bit layouts are delegated to networkx's reference
implementation; this module adds validation with byte offsets, multiplicity
handling and the plain edgelist format (``n=<count>`` header, then lines
``u-v`` or ``u-v x<mult>``).
"""
from __future__ import annotations

import re

import networkx as nx

from .graph import GraphError, Multigraph

FORMATS = ("graph6", "sparse6", "edgelist")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def _strip(text: str | bytes) -> tuple[bytes, int]:
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    start = 0
    for hdr in (b">>graph6<<", b">>sparse6<<"):
        if data.startswith(hdr):
            start = len(hdr)
    return data, start


def _check_printable(data: bytes, start: int) -> None:
    for i in range(start, len(data)):
        if not 63 <= data[i] <= 126:
            raise ParseError(f"character {data[i]!r} outside the range 63..126", i)


def _read_n(data: bytes, pos: int) -> tuple[int, int]:
    """Decode the size field N(n) starting at ``pos``; returns (n, next pos)."""
    if pos >= len(data):
        raise ParseError("missing vertex-count field", pos)
    if data[pos] != 126:
        return data[pos] - 63, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        width, p = 6, pos + 2
    else:
        width, p = 3, pos + 1
    if p + width > len(data):
        raise ParseError("truncated vertex-count field", len(data))
    n = 0
    for i in range(width):
        n = (n << 6) | (data[p + i] - 63)
    return n, p + width


def _decode_graph6(text: str | bytes) -> Multigraph:
    data, start = _strip(text)
    _check_printable(data, start)
    n, pos = _read_n(data, start)
    need = (n * (n - 1) // 2 + 5) // 6
    have = len(data) - pos
    if have != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {have}", min(len(data), pos + need))
    g = nx.from_graph6_bytes(data[start:])
    return Multigraph(range(n), list(g.edges()))


def _decode_sparse6(text: str | bytes) -> Multigraph:
    data, start = _strip(text)
    if start >= len(data) or data[start] != ord(":"):
        raise ParseError("sparse6 data must start with ':'", start)
    _check_printable(data, start + 1)
    n, _ = _read_n(data, start + 1)
    g = nx.from_sparse6_bytes(b":" + data[start + 1 :])
    edges = [(u, v) for u, v in g.edges() if u != v]
    if len(edges) != g.number_of_edges():
        raise ParseError("sparse6 stream encodes a self-loop", start)
    return Multigraph(range(n), edges)


_EDGE_RE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*(?:x\s*(\d+))?\s*$")


def _decode_edgelist(text: str | bytes) -> Multigraph:
    s = text.decode() if isinstance(text, bytes) else text
    n: int | None = None
    edges: list[tuple[int, int, int]] = []
    offset = 0
    for line in s.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            if n is None:
                m = re.fullmatch(r"n\s*=\s*(\d+)", body)
                if not m:
                    raise ParseError("edgelist must start with an 'n=<count>' header", offset)
                n = int(m.group(1))
            else:
                m = _EDGE_RE.match(body)
                if not m:
                    raise ParseError(f"malformed edge line {body!r}", offset)
                u, v = int(m.group(1)), int(m.group(2))
                k = int(m.group(3) or 1)
                if u >= n or v >= n:
                    raise ParseError(f"vertex id out of range in {body!r}", offset)
                if u == v:
                    raise ParseError(f"self-loop in {body!r}", offset)
                if k < 1:
                    raise ParseError(f"multiplicity must be positive in {body!r}", offset)
                edges.append((u, v, k))
        offset += len(line.encode())
    if n is None:
        raise ParseError("missing 'n=<count>' header", 0)
    return Multigraph(range(n), edges)


def decode_graph(text: str | bytes, fmt: str) -> Multigraph:
    """Parse ``text`` in the named format."""
    if fmt == "graph6":
        return _decode_graph6(text)
    if fmt == "sparse6":
        return _decode_sparse6(text)
    if fmt == "edgelist":
        return _decode_edgelist(text)
    raise ValueError(f"unknown format {fmt!r}")


def detect_format(text: str | bytes) -> str:
    s = text.decode(errors="replace") if isinstance(text, bytes) else text
    s = s.lstrip()
    if s.startswith(":") or s.startswith(">>sparse6<<"):
        return "sparse6"
    if s.startswith("n=") or s.startswith("n ") or s.startswith("#"):
        return "edgelist"
    return "graph6"


def encode_graph(g: Multigraph, fmt: str) -> str:
    """Serialise ``g``; vertices are renumbered ``0..n-1`` in sorted order."""
    h, _ = g.consecutive()
    if fmt == "edgelist":
        lines = [f"n={h.n}"]
        for (u, v), m in h.edges():
            lines.append(f"{u}-{v}" if m == 1 else f"{u}-{v} x{m}")
        return "\n".join(lines) + "\n"
    if fmt == "graph6":
        if not h.is_simple():
            raise GraphError("graph6 cannot represent parallel edges; use sparse6")
        return nx.to_graph6_bytes(h.to_networkx(), header=False).decode().strip()
    if fmt == "sparse6":
        return nx.to_sparse6_bytes(h.to_networkx(multigraph=True), header=False).decode().strip()
    raise ValueError(f"unknown format {fmt!r}")


def to_sparse6(g: Multigraph) -> str:
    return encode_graph(g, "sparse6")


def from_sparse6(s: str) -> Multigraph:
    return decode_graph(s, "sparse6")
