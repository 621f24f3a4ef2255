"""graph6 encoding and decoding (dense graphs only)."""

from __future__ import annotations

from .graph import DENSE_LIMIT, Graph, GraphError

HEADER = ">>graph6<<"
MAX_N = 68719476735


class Graph6Error(GraphError):
    pass


def _size_word(n: int) -> str:
    if n < 0 or n > MAX_N:
        raise Graph6Error(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_rows(n: int, rows) -> str:
    out = [_size_word(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def graph6_encode(g: Graph) -> str:
    """graph6 line for ``g`` without the trailing newline."""
    if g.dense:
        return encode_rows(g.n, g.rows)
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    rows = [sum(1 << u for u in s if u < j) for j, s in enumerate(adj)]
    return encode_rows(g.n, rows)


def graph6_decode(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii")
    line = line.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line")
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"illegal character {ch!r}")
    vals = [ord(ch) - 63 for ch in line]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated size word")
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated size word")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph.from_edges(n, edges, sparse=n > DENSE_LIMIT)


def read_graph6(lines):
    """Yield graphs from an iterable of lines, skipping blank lines.

    Malformed input raises :class:`Graph6Error` naming the 1-based line number.
    """
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        if not line.strip():
            continue
        try:
            yield graph6_decode(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
