"""graph6 encoding and decoding (McKay's format, byte-exact)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph too large for graph6: n={n}")


def encode(g: Graph) -> str:
    n = g.n
    nbits = n * (n - 1) // 2
    bits = bytearray(nbits + (-nbits) % 6)
    for u, v in g.edges:
        # column-wise upper triangle: x(0,1) x(0,2) x(1,2) x(0,3) ...
        bits[v * (v - 1) // 2 + u] = 1
    out = [_encode_n(n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def decode(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    s = line.rstrip("\r\n")
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
    for i in range(base, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise Graph6Error(f"invalid graph6 character {s[i]!r}", i)
    if len(s) == base:
        raise Graph6Error("empty graph6 string", base)

    pos = base
    if s[pos] != "~":
        n = ord(s[pos]) - 63
        pos += 1
    else:
        width = 3
        pos += 1
        if pos < len(s) and s[pos] == "~":
            width = 6
            pos += 1
        if len(s) < pos + width:
            raise Graph6Error("truncated vertex count", len(s))
        n = 0
        for c in s[pos:pos + width]:
            n = (n << 6) | (ord(c) - 63)
        pos += width

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes, found {len(body)}", len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing characters after adjacency data", pos + nbytes)

    edges = []
    k = 0
    v, u = 1, 0
    for j, c in enumerate(body):
        val = ord(c) - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (val >> shift) & 1:
                    raise Graph6Error("nonzero padding bits", pos + j)
                continue
            if (val >> shift) & 1:
                edges.append((u, v))
            k += 1
            u += 1
            if u == v:
                u = 0
                v += 1
    return Graph(n, edges)


def read_lines(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line."""
    for line in stream:
        if line.strip():
            yield decode(line.strip())


def write_lines(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")
