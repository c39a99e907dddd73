"""graph6 text encoding of small graphs.

Bit-exact implementation of the published graph6 definition: the vertex
count in a single offset-63 byte (our capacity of 32 never needs the
multi-byte forms), then the upper triangle of the adjacency matrix read
column by column, packed into 6-bit chunks, each chunk offset by 63.
One graph per line; an optional ">>graph6<<" header prefix is stripped.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import CapacityError, Graph, MAX_VERTICES

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty line")
    first = ord(line[0])
    if first == 126:
        # Multi-byte vertex counts start at n=63, beyond our capacity.
        raise CapacityError(f"graph6 line encodes n >= 63, capacity is {MAX_VERTICES}")
    if not 63 <= first <= 125:
        raise Graph6Error(f"malformed header byte {line[0]!r}")
    n = first - 63
    if n == 0:
        raise Graph6Error("graph on 0 vertices rejected")
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 line encodes n={n}, capacity is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    body = line[1:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"bit field for n={n} needs {expected} bytes, got {len(body)}"
        )
    acc = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"malformed body byte {ch!r}")
        acc = acc << 6 | val
    acc >>= 6 * expected - nbits  # drop padding
    rows = [0] * n
    pos = nbits
    for col in range(1, n):
        for row in range(col):
            pos -= 1
            if acc >> pos & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
    return Graph(n, rows)


def to_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (no trailing newline)."""
    n = g.n
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for col in range(1, n):
        for row in range(col):
            acc = acc << 1 | (g.adj[row] >> col & 1)
            nbits += 1
    pad = (6 - nbits % 6) % 6
    acc <<= pad
    nbits += pad
    while nbits:
        nbits -= 6
        out.append(chr((acc >> nbits & 63) + 63))
    return "".join(out)


def parse_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a sequence of graph6 lines, naming the line on failure.

    Blank lines are skipped; line numbers are 1-based and count every
    input line, blank or not.
    """
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        try:
            yield parse_graph6(stripped)
        except (Graph6Error, CapacityError) as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc
