"""graph6 and plain edge-list serialization."""

from __future__ import annotations

from .graph import Graph, bits


class GraphFormatError(ValueError):
    """Malformed serialized graph. ``position`` is the offset of the first bad byte."""

    def __init__(self, message: str, position: int = -1):
        super().__init__(message if position < 0 else f"{message} (byte {position})")
        self.position = position


HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    offset = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        offset = len(HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string", offset)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", offset + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated vertex count", offset + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated vertex count", offset + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise GraphFormatError(f"expected {need} data bytes for n={n}, got {len(body)}",
                               offset + len(vals))
    if len(body) > need:
        raise GraphFormatError("trailing bytes after graph data", offset + pos + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = need * 6 - k
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", offset + pos + need - 1)
    return Graph._trusted(n, tuple(adj))


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0])
    except ValueError:
        raise GraphFormatError("edge list header must be 'n m'") from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative header values")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(lines) - 1}")
    adj = [0] * n
    for lineno, parts in enumerate(lines[1:], start=2):
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected 'u v'") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"line {lineno}: bad edge ({u}, {v})")
        if adj[u] >> v & 1:
            raise GraphFormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, tuple(adj))


def looks_like_edge_list(text: str) -> bool:
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    return len(parts) == 2 and all(p.isdigit() for p in parts)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = "edgelist" if looks_like_edge_list(text) else "graph6"
    if fmt == "edgelist":
        return from_edge_list(text)
    if fmt == "graph6":
        return from_graph6(text)
    raise ValueError(f"unknown format {fmt!r}")


def edge_mask_graph(n: int, mask: int) -> Graph:
    """Graph whose edge set is selected by ``mask`` over the pairs in lexicographic order."""
    adj = [0] * n
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if mask >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph._trusted(n, tuple(adj))


def edge_mask(g: Graph) -> int:
    mask = k = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] >> v & 1:
                mask |= 1 << k
            k += 1
    return mask


__all__ = [
    "GraphFormatError", "to_graph6", "from_graph6", "to_edge_list", "from_edge_list",
    "parse_graph", "edge_mask_graph", "edge_mask", "bits",
]
