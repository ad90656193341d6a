"""graph6 encoding/decoding and DOT export."""

from __future__ import annotations

from typing import Iterable

from .graph import Graph

HEADER = ">>graph6<<"


def _encode_order(n: int) -> bytes:
    if n < 0:
        raise ValueError("order must be non-negative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("order too large for graph6")


def _decode_order(data: bytes) -> tuple[int, int]:
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        chunk = data[2:8]
        width = 8
    else:
        chunk = data[1:4]
        width = 4
    expected = width - (2 if width == 8 else 1)
    if len(chunk) != expected:
        raise ValueError("truncated graph6 order field")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, width


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g``; the upper triangle is read column by column."""
    n = g.order
    out = bytearray(_encode_order(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    text = out.decode("ascii")
    return HEADER + text if header else text


def from_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    for c in data:
        if not 63 <= c <= 126:
            raise ValueError(f"invalid graph6 byte {c!r}")
    n, offset = _decode_order(data)
    body = data[offset:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need} for order {n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_dot(
    g: Graph,
    name: str = "G",
    red_edges: Iterable[tuple[int, int]] | None = None,
) -> str:
    """DOT text for ``g``. Edges listed in ``red_edges`` are drawn red, the rest blue."""
    red = None if red_edges is None else {tuple(sorted(e)) for e in red_edges}
    lines = [f"graph {name} {{"]
    for v in range(g.order):
        lines.append(f"  {v};")
    for i, j in g.edges():
        if red is None:
            lines.append(f"  {i} -- {j};")
        else:
            colour = "red" if (i, j) in red else "blue"
            lines.append(f"  {i} -- {j} [color={colour}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
