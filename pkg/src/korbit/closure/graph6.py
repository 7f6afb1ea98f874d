import re
from typing import List, Tuple, Union

import numpy as np

from ..exceptions import EdgeListParseError, Graph6ParseError
from .digraph import EDGE_COLOR, NON_EDGE_COLOR, ColoredDigraph

HEADER = b">>graph6<<"


def _decode_size(data: bytes) -> Tuple[int, int]:
    """Vertex count N(n) and the offset where the adjacency bytes start."""
    if not data:
        raise Graph6ParseError("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise Graph6ParseError("truncated vertex count", len(data))
    n = 0
    for byte in data[start : start + width]:
        n = (n << 6) | (byte - 63)
    return n, start + width


def parse_graph6(text: Union[str, bytes]) -> ColoredDigraph:
    """Decode one graph6 string into a diagonal/edge/non-edge coloring.

    Bits of the upper triangle are read column by column, six per byte,
    most significant first.

    Raises:
        Graph6ParseError: bad byte, sparse6/digraph6 input, truncated or
            overlong data; the error carries the byte offset.
    """
    data = bytes(min(ord(c), 255) for c in text) if isinstance(text, str) else text
    data = data.rstrip(b"\r\n")
    base = 0
    if data.startswith(HEADER):
        data, base = data[len(HEADER) :], len(HEADER)
    if data[:1] in (b":", b"&", b";"):
        raise Graph6ParseError("sparse6 and digraph6 are not supported", base)
    for offset, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"byte {byte!r} outside 63..126", base + offset)
    n, start = _decode_size(data)
    if n == 0:
        raise Graph6ParseError("graph has no vertices", base)
    bit_count = n * (n - 1) // 2
    needed = -(-bit_count // 6)
    body = data[start:]
    if len(body) < needed:
        raise Graph6ParseError(
            f"truncated: {n} vertices need {needed} bytes, got {len(body)}",
            base + len(data),
        )
    if len(body) > needed:
        raise Graph6ParseError("unexpected trailing bytes", base + start + needed)
    values = np.frombuffer(body, dtype=np.uint8).astype(np.int64) - 63
    bits = ((values[:, None] >> np.arange(5, -1, -1)) & 1).reshape(-1)[:bit_count]
    colors = np.full((n, n), NON_EDGE_COLOR, dtype=np.int64)
    np.fill_diagonal(colors, 0)
    rows, cols = np.triu_indices(n, k=1)
    order = np.lexsort((rows, cols))
    rows, cols = rows[order], cols[order]
    edges = bits.astype(bool)
    colors[rows[edges], cols[edges]] = EDGE_COLOR
    colors[cols[edges], rows[edges]] = EDGE_COLOR
    return ColoredDigraph(colors)


def parse_edge_list(text: str) -> ColoredDigraph:
    """Parse "n" followed by one "u v" line per undirected edge (1-based)."""
    lines: List[Tuple[int, str]] = [
        (number, raw.split("#", 1)[0].strip())
        for number, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(number, line) for number, line in lines if line]
    if not lines or not lines[0][1].isdigit():
        line = lines[0][0] if lines else 1
        raise EdgeListParseError("expected the vertex count", line)
    n = int(lines[0][1])
    if n == 0:
        raise EdgeListParseError("graph has no vertices", lines[0][0])
    colors = np.full((n, n), NON_EDGE_COLOR, dtype=np.int64)
    np.fill_diagonal(colors, 0)
    for number, line in lines[1:]:
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise EdgeListParseError(f"expected 'u v', got {line!r}", number)
        u, v = (int(f) for f in fields)
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise EdgeListParseError(f"bad edge ({u}, {v}) on {n} vertices", number)
        colors[u - 1, v - 1] = colors[v - 1, u - 1] = EDGE_COLOR
    return ColoredDigraph(colors)


_EDGE_LIST_HEAD = re.compile(r"^\s*\d+\s*$")


def import_graph(text: Union[str, bytes]) -> ColoredDigraph:
    """Colored digraph from graph6 text or from an edge list."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    first = next((line for line in text.splitlines() if line.strip()), "")
    if _EDGE_LIST_HEAD.match(first):
        return parse_edge_list(text)
    return parse_graph6(text.strip())
