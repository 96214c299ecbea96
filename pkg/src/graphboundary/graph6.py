"""graph6 encoding (McKay's nauty format) for simple undirected graphs.

Each byte carries six bits offset by 63.  The header holds the vertex count,
followed by the upper triangle of the adjacency matrix in column order:
x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian, zero padded.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError, build_graph

HEADER = ">>graph6<<"
_MAX_N = 258047


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _size_bytes(n: int) -> list[int]:
    if n < 0 or n > _MAX_N:
        raise GraphError(f"graph6 supports 0 <= n <= {_MAX_N}, got {n}")
    if n <= 62:
        return [n]
    return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]


def encode(g: Graph) -> str:
    out = _size_bytes(g.n)
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        nb = g.neighbor_set(j)
        for i in range(j):
            acc = (acc << 1) | (i in nb)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return "".join(chr(b + 63) for b in out)


def decode(text: str) -> Graph:
    line = text.strip()
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    vals = []
    for i, ch in enumerate(line):
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside [63, 126]", base + i)
        vals.append(b - 63)
    if not vals:
        raise Graph6Error("empty graph6 string", base)
    if vals[0] < 63:
        n, pos = vals[0], 1
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated size header", base + len(vals))
        if vals[1] == 63:
            raise Graph6Error("8-byte size header (n > 258047) not supported", base + 1)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - pos
    if have < need:
        raise Graph6Error(f"truncated bit payload: need {need} bytes, got {have}", base + len(vals))
    if have > need:
        raise Graph6Error("trailing bytes after bit payload", base + pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def read_file(fh: TextIO) -> Iterator[Graph]:
    """One graph per non-blank line."""
    for lineno, line in enumerate(fh, 1):
        if not line.strip():
            continue
        try:
            yield decode(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from None


def write_lines(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(encode(g) + "\n")
