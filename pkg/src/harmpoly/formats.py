"""graph6 / sparse6 encoding and plain edge-list ingestion."""

from __future__ import annotations

import re
from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"
_MAX_N = (1 << 36) - 1


class FormatError(ValueError):
    """Malformed graph6/sparse6/edge-list input."""

    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        where = ""
        if offset is not None:
            where = f" at byte offset {offset}"
        elif line is not None:
            where = f" on line {line}"
        super().__init__(message + where)
        self.offset = offset
        self.line = line


# -- size prefix --------------------------------------------------------------


def _encode_size(n: int) -> bytes:
    if n < 0 or n > _MAX_N:
        raise FormatError(f"vertex count {n} outside 0..2^36-1")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _decode_size(data: bytes, start: int) -> tuple[int, int]:
    """Returns ``(n, offset after prefix)``."""

    def need(k: int) -> None:
        if len(data) < start + k:
            raise FormatError("truncated size prefix", offset=len(data))

    need(1)
    if data[start] != 126:
        return data[start] - 63, start + 1
    need(2)
    if data[start + 1] != 126:
        need(4)
        n = 0
        for b in data[start + 1 : start + 4]:
            n = (n << 6) | (b - 63)
        return n, start + 4
    need(8)
    n = 0
    for b in data[start + 2 : start + 8]:
        n = (n << 6) | (b - 63)
    return n, start + 8


def _check_bytes(data: bytes, start: int) -> None:
    for i in range(start, len(data)):
        if not 63 <= data[i] <= 126:
            raise FormatError(f"byte {data[i]!r} outside the printable range 63..126", offset=i)


def _as_bytes(line: str | bytes) -> bytes:
    if isinstance(line, str):
        try:
            line = line.encode("ascii")
        except UnicodeEncodeError as exc:
            raise FormatError("non-ASCII character", offset=exc.start) from None
    return line.rstrip(b"\r\n")


# -- graph6 ---------------------------------------------------------------------


def write_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    out = bytearray(_encode_size(n))
    acc = 0
    nbits = 0
    adj = g.adjacency
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (1 if i in row else 0)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    text = out.decode("ascii")
    return GRAPH6_HEADER + text if header else text


def parse_graph6(line: str | bytes) -> Graph:
    data = _as_bytes(line)
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER.encode()) else 0
    if len(data) == start:
        raise FormatError("empty graph6 record", offset=start)
    _check_bytes(data, start)
    n, pos = _decode_size(data, start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise FormatError(
            f"truncated adjacency: expected {nbytes} bytes, found {len(body)}", offset=len(data)
        )
    if len(body) > nbytes:
        raise FormatError("trailing bytes after adjacency data", offset=pos + nbytes)
    adj: list[list[int]] = [[] for _ in range(n)]
    k = 0
    i, j = 0, 1
    for b in body:
        v = b - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                break
            if (v >> shift) & 1:
                adj[i].append(j)
                adj[j].append(i)
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._from_adjacency(adj)


# -- sparse6 --------------------------------------------------------------------


def _sparse6_k(n: int) -> int:
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def write_sparse6(g: Graph, header: bool = False) -> str:
    n = g.n
    if n == 0:
        raise FormatError("sparse6 cannot encode the graph with no vertices")
    k = _sparse6_k(n)
    bits: list[int] = []

    def enc(x: int) -> None:
        bits.extend((x >> (k - 1 - i)) & 1 for i in range(k))

    cur = 0
    for v, u in sorted((v, u) for u, v in g.edges):  # u < v, ordered by larger end
        if v == cur:
            bits.append(0)
            enc(u)
        elif v == cur + 1:
            cur = v
            bits.append(1)
            enc(u)
        else:
            cur = v
            bits.append(1)
            enc(v)
            bits.append(0)
            enc(u)
    pad = -len(bits) % 6
    if k < 6 and n == (1 << k) and pad >= k and cur < n - 1:
        # padding of 1s would otherwise decode as an edge to vertex n-1
        bits.append(0)
        pad = -len(bits) % 6
    bits.extend([1] * pad)
    out = bytearray(b":") + _encode_size(n)
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i : i + 6]:
            chunk = (chunk << 1) | b
        out.append(chunk + 63)
    text = out.decode("ascii")
    return SPARSE6_HEADER + text if header else text


def parse_sparse6(line: str | bytes) -> Graph:
    data = _as_bytes(line)
    start = len(SPARSE6_HEADER) if data.startswith(SPARSE6_HEADER.encode()) else 0
    if len(data) <= start or data[start] != ord(":"):
        raise FormatError("sparse6 record must start with ':'", offset=start)
    _check_bytes(data, start + 1)
    n, pos = _decode_size(data, start + 1)
    if n == 0:
        raise FormatError("sparse6 record with zero vertices", offset=start + 1)
    k = _sparse6_k(n)
    stream = []
    for b in data[pos:]:
        v = b - 63
        stream.extend((v >> s) & 1 for s in range(5, -1, -1))
    edges = []
    v = 0
    i = 0
    while i + 1 + k <= len(stream):
        b = stream[i]
        x = 0
        for bit in stream[i + 1 : i + 1 + k]:
            x = (x << 1) | bit
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            edges.append((x, v))
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def parse_record(line: str | bytes) -> Graph:
    """graph6 or sparse6, told apart by the leading ':'."""
    data = _as_bytes(line)
    if data.startswith(b":") or data.startswith(SPARSE6_HEADER.encode()):
        return parse_sparse6(data)
    return parse_graph6(data)


def iter_records(stream: TextIO | Iterable[str], fmt: str = "g6") -> Iterator[Graph]:
    """One graph per non-blank line, read lazily."""
    parse = {"g6": parse_record, "s6": parse_sparse6}[fmt]
    for raw in stream:
        line = raw.strip()
        if line:
            yield parse(line)


# -- edge lists -------------------------------------------------------------------

_COUNT_LINE = re.compile(r"^n\s*=\s*(\d+)$")


def parse_edge_list(text: str) -> Graph:
    """Whitespace-separated ``u v`` pairs, one per line.

    An optional first line ``n=<count>`` adds isolated vertices. Labels may be
    any tokens; the original labels are kept in ``Graph.labels``. Integer
    labels keep their numeric order, other labels their order of appearance.
    ``#`` starts a comment.
    """
    declared = None
    pairs: list[tuple[str, str]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _COUNT_LINE.match(line)
        if m and not seen_content:
            declared = int(m.group(1))
            seen_content = True
            continue
        seen_content = True
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {raw.strip()!r}", line=lineno)
        if parts[0] == parts[1]:
            raise FormatError(f"loop at vertex {parts[0]!r}", line=lineno)
        pairs.append((parts[0], parts[1]))

    order: list[str] = []
    seen = set()
    for a, b in pairs:
        for t in (a, b):
            if t not in seen:
                seen.add(t)
                order.append(t)
    numeric = all(t.isdigit() for t in order)
    if numeric:
        values = sorted({int(t) for t in order})
        if declared is not None and (not values or values[-1] < declared):
            labels: list = list(range(declared))
        else:
            labels = values
        index = {str(v): i for i, v in enumerate(labels)}
        # '01' and '1' name the same vertex
        index.update({t: labels.index(int(t)) for t in order})
    else:
        labels = list(order)
        index = {t: i for i, t in enumerate(labels)}
    n = len(labels)
    if declared is not None:
        if declared < n:
            raise FormatError(f"n={declared} but {n} distinct vertices appear", line=1)
        labels = labels + [None] * (declared - n)  # unnamed isolated vertices
        n = declared
    return Graph(n, ((index[a], index[b]) for a, b in pairs), labels=labels)
