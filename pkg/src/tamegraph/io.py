"""Edge-list and graph6 readers and writers.

Edge-list documents start with a header ``n m`` followed by ``m`` lines
``u v`` (``0 <= u < v < n``). ``#`` starts a comment; blank lines are
skipped.
"""
from __future__ import annotations

from .errors import ParseError
from .graph import Graph

EDGELIST = "edgelist"
GRAPH6 = "graph6"
FORMATS = (EDGELIST, GRAPH6)


def parse_edgelist(text: str) -> Graph:
    header = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("header counts must be non-negative", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex id out of range in edge ({a}, {b}) for n={n}", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError("missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ParseError("empty graph6 string", 1)
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= d < 64 for d in data):
        raise ParseError("graph6 characters must lie in the range '?'..'~'", 1)
    if data[0] != 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field", 1)
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        rest = data[8:]
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", 1)
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(rest)} bytes, expected {(need + 5) // 6}", 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[idx // 6] >> (5 - idx % 6)) & 1:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def parse_graph(text: str, fmt: str = EDGELIST) -> Graph:
    if fmt == EDGELIST:
        return parse_edgelist(text)
    if fmt == GRAPH6:
        return parse_graph6(text)
    raise ValueError(f"unknown format {fmt!r}")


def format_graph(g: Graph, fmt: str = EDGELIST) -> str:
    if fmt == EDGELIST:
        return format_edgelist(g)
    if fmt == GRAPH6:
        return to_graph6(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse_weights(text: str, n: int) -> tuple:
    """One non-negative integer per line, in vertex order."""
    weights = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            w = int(line)
        except ValueError:
            raise ParseError(f"weight must be an integer, got {line!r}", lineno) from None
        if w < 0:
            raise ParseError(f"weight must be non-negative, got {w}", lineno)
        weights.append(w)
    if len(weights) != n:
        raise ParseError(f"expected {n} weights, got {len(weights)}")
    return tuple(weights)
