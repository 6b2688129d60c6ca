"""graph6 and edge-list text formats.

graph6 packs the upper triangle of the adjacency matrix column-major,
six bits per printable byte with an offset of 63.  Decoding errors
report the byte offset at which the input went wrong.
"""

from __future__ import annotations

from .graph import Graph

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the failing byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _check_bytes(text: str, start: int) -> None:
    for i in range(start, len(text)):
        b = ord(text[i])
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside graph6 range 63..126", i)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty input", 0)
    _check_bytes(s, 0)
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = 1
    elif len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise Graph6Error("truncated 3-byte length header", len(s))
        n = 0
        for i in range(1, 4):
            n = n << 6 | (ord(s[i]) - 63)
        body = 4
    else:
        raise Graph6Error("length headers beyond 3 bytes are not supported", 0)
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - body < need:
        raise Graph6Error(f"need {need} data bytes, found {len(s) - body}", len(s))
    if len(s) - body > need:
        raise Graph6Error("trailing garbage after graph data", body + need)
    rows = [0] * n
    pos = 0  # bit index into the upper triangle stream
    for k in range(need):
        chunk = ord(s[body + k]) - 63
        for shift in range(5, -1, -1):
            if pos >= nbits:
                if chunk >> shift & 1:
                    raise Graph6Error("nonzero padding bits", body + k)
                continue
            if chunk >> shift & 1:
                u, v = _triangle_pair(pos)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            pos += 1
    return Graph(n, tuple(rows))


def _triangle_pair(pos: int) -> tuple[int, int]:
    # upper triangle column-major: (0,1), (0,2), (1,2), (0,3), ...
    v = 1
    while pos >= v:
        pos -= v
        v += 1
    return pos, v


def to_graph6(g: Graph) -> str:
    """Encode a Graph as a canonical-length graph6 string."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    else:
        raise ValueError(f"n={n} exceeds the supported graph6 range")
    stream = 0
    nbits = n * (n - 1) // 2
    pos = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            if col >> u & 1:
                stream |= 1 << (nbits - 1 - pos)
            pos += 1
    need = (nbits + 5) // 6
    stream <<= need * 6 - nbits
    body = "".join(chr((stream >> 6 * (need - 1 - k) & 63) + 63) for k in range(need))
    return head + body


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated "u v" pairs, optionally preceded by "n".

    Without a leading order line the order is one more than the largest
    index mentioned.
    """
    tokens = text.split()
    if not tokens:
        raise ValueError("empty edge-list input")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"non-integer token in edge list: {exc}") from None
    if len(values) % 2 == 1:
        n, values = values[0], values[1:]
    else:
        n = max(values) + 1 if values else 1
    if any(v < 0 for v in values):
        raise ValueError("negative vertex index in edge list")
    pairs = list(zip(values[::2], values[1::2]))
    return Graph.from_edges(n, pairs)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_dot(g: Graph) -> str:
    """DOT rendering for external visualization tools."""
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n) if not g.adj[v]]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def looks_like_graph6(line: str) -> bool:
    """Cheap sniff to distinguish graph6 from edge-list content."""
    s = line.strip()
    if s.startswith(_HEADER):
        return True
    return bool(s) and not all(tok.isdigit() for tok in s.split())
