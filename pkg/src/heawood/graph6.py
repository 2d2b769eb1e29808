"""graph6 encoding for graphs with at most 62 vertices."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph, GraphError, build

MAX_N = 62
HEADER = ">>graph6<<"


def _bit_pairs(n: int) -> Iterator[tuple[int, int]]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode(g: Graph) -> str:
    if g.n > MAX_N:
        raise GraphError(f"graph6 encoding here supports n <= {MAX_N}, got {g.n}")
    bits = [1 if (i, j) in g.edges else 0 for i, j in _bit_pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return "".join(chars)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"invalid graph6 character {ch!r}")
    n = ord(s[0]) - 63
    if n > MAX_N:
        raise GraphError("multi-byte graph6 size headers are not supported")
    if n == 0:
        raise GraphError("graph6 string encodes an empty vertex set")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = s[1:]
    if len(body) < need:
        raise GraphError(f"truncated graph6 string: need {need} data chars, got {len(body)}")
    if len(body) > need:
        raise GraphError(f"graph6 string has {len(body) - need} trailing characters")
    bits = []
    for ch in body:
        value = ord(ch) - 63
        bits.extend((value >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise GraphError("graph6 padding bits must be zero")
    edges = [pair for pair, b in zip(_bit_pairs(n), bits) if b]
    return build(n, edges)


def read_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield decode(line)


def write_lines(graphs: Iterable[Graph]) -> str:
    return "".join(encode(g) + "\n" for g in graphs)
