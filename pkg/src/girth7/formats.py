"""Interchange formats: graph6, sorted edge lists, and typed JSON.

graph6 and edge lists carry no vertex types; imported graphs tag every
vertex as a point.  JSON keeps the tags.
"""

from __future__ import annotations

import json

from .errors import MalformedInput
from .incidence import POINT, TYPE_NAMES, LeviGraph

FORMATS = ("graph6", "edgelist", "json")
_HEADER = b">>graph6<<"


def _check_nonempty(g: LeviGraph):
    if g.n == 0:
        raise ValueError("the empty graph has no interchange representation")


# -- graph6 ---------------------------------------------------------------------


def _size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: LeviGraph) -> bytes:
    """Standard graph6 encoding, newline terminated, no header."""
    _check_nonempty(g)
    n = g.n
    nbits = n * (n - 1) // 2
    bits = bytearray((nbits + 5) // 6 * 6)
    # bit for pair (i, j), i < j, sits at position j(j-1)/2 + i
    for u, w in g.edges():
        bits[w * (w - 1) // 2 + u] = 1
    out = bytearray(_size_bytes(n))
    for pos in range(0, len(bits), 6):
        chunk = bits[pos:pos + 6]
        out.append(63 + (chunk[0] << 5 | chunk[1] << 4 | chunk[2] << 3 | chunk[3] << 2 | chunk[4] << 1 | chunk[5]))
    return bytes(out) + b"\n"


def from_graph6(data: bytes) -> LeviGraph:
    data = data.rstrip(b"\r\n")
    off = 0
    if data.startswith(_HEADER):
        off = len(_HEADER)
    if off >= len(data):
        raise MalformedInput("missing order header", off)
    for i in range(off, len(data)):
        if not 63 <= data[i] <= 126:
            raise MalformedInput(f"byte {data[i]!r} outside the printable graph6 range", i)
    if data[off] != 126:
        n, off = data[off] - 63, off + 1
    elif len(data) > off + 1 and data[off + 1] == 126:
        if len(data) < off + 8:
            raise MalformedInput("truncated 8-byte order header", len(data))
        n = 0
        for b in data[off + 2:off + 8]:
            n = n << 6 | (b - 63)
        off += 8
    else:
        if len(data) < off + 4:
            raise MalformedInput("truncated 4-byte order header", len(data))
        n = 0
        for b in data[off + 1:off + 4]:
            n = n << 6 | (b - 63)
        off += 4
    if n == 0:
        raise MalformedInput("graph of order 0", off - 1)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[off:]
    if len(body) != need:
        raise MalformedInput(f"expected {need} adjacency bytes, found {len(body)}", off + min(len(body), need))
    adj = [[] for _ in range(n)]
    pos = 0
    u, w = 0, 1
    for bi, b in enumerate(body):
        v = b - 63
        for s in range(5, -1, -1):
            if pos >= nbits:
                if v >> s & 1:
                    raise MalformedInput("nonzero padding bit", off + bi)
                continue
            if v >> s & 1:
                adj[u].append(w)
                adj[w].append(u)
            pos += 1
            u += 1
            if u == w:
                u, w = 0, w + 1
    return LeviGraph(adj, [POINT] * n)


# -- edge list -------------------------------------------------------------------


def to_edgelist(g: LeviGraph) -> bytes:
    """``u v`` per line, u < v, sorted.  Isolated vertices after the last
    edge endpoint are not representable."""
    _check_nonempty(g)
    return "".join(f"{u} {w}\n" for u, w in sorted(g.edges())).encode()


def from_edgelist(data: bytes) -> LeviGraph:
    """Inverse of :func:`to_edgelist`.  A lone integer on the first data line
    is read as the order; ``#`` starts a comment line."""
    text = data.decode("ascii", errors="replace")
    off = 0
    n = None
    edges = []
    for raw in text.splitlines(keepends=True):
        line = raw.strip()
        start = off
        off += len(raw.encode())
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise MalformedInput(f"non-integer token in {line!r}", start) from None
        if n is None and len(nums) == 1:
            n = nums[0]
            if n <= 0:
                raise MalformedInput("graph of order 0", start)
            continue
        if len(nums) != 2:
            raise MalformedInput(f"expected 'u v', got {line!r}", start)
        u, w = nums
        if u < 0 or w < 0 or u == w:
            raise MalformedInput(f"invalid edge {u} {w}", start)
        edges.append((u, w, start))
    if n is None:
        n = max((max(u, w) for u, w, _ in edges), default=-1) + 1
        if n == 0:
            raise MalformedInput("graph of order 0", 0)
    adj = [set() for _ in range(n)]
    for u, w, start in edges:
        if max(u, w) >= n:
            raise MalformedInput(f"vertex out of range in edge {u} {w}", start)
        if w in adj[u]:
            raise MalformedInput(f"repeated edge {u} {w}", start)
        adj[u].add(w)
        adj[w].add(u)
    return LeviGraph(adj, [POINT] * n)


# -- JSON ------------------------------------------------------------------------


def to_json(g: LeviGraph) -> bytes:
    _check_nonempty(g)
    obj = {
        "n": g.n,
        "vertexType": [TYPE_NAMES[t] for t in g.vertex_type],
        "adjacency": [list(a) for a in g.adjacency],
    }
    return (json.dumps(obj, separators=(",", ":")) + "\n").encode()


def from_json(data: bytes) -> LeviGraph:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedInput(exc.msg, exc.pos) from None
    except UnicodeDecodeError as exc:
        raise MalformedInput("input is not UTF-8", exc.start) from None
    if not isinstance(obj, dict) or not {"n", "vertexType", "adjacency"} <= obj.keys():
        raise MalformedInput("expected an object with n, vertexType and adjacency", 0)
    n, vt, adj = obj["n"], obj["vertexType"], obj["adjacency"]
    if not isinstance(n, int) or n <= 0:
        raise MalformedInput("n must be a positive integer", 0)
    if len(vt) != n or len(adj) != n:
        raise MalformedInput("vertexType and adjacency must have n entries", 0)
    code = {name: i for i, name in enumerate(TYPE_NAMES)}
    if any(t not in code for t in vt):
        raise MalformedInput(f"vertex types must be among {TYPE_NAMES}", 0)
    try:
        return LeviGraph(adj, [code[t] for t in vt])
    except (ValueError, KeyError, TypeError) as exc:
        raise MalformedInput(f"invalid adjacency: {exc}", 0) from None


_EXPORT = {"graph6": to_graph6, "edgelist": to_edgelist, "json": to_json}
_IMPORT = {"graph6": from_graph6, "edgelist": from_edgelist, "json": from_json}


def export(g: LeviGraph, fmt: str) -> bytes:
    if fmt not in _EXPORT:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
    return _EXPORT[fmt](g)


def import_graph(data: bytes, fmt: str) -> LeviGraph:
    if fmt not in _IMPORT:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
    return _IMPORT[fmt](data)


def guess_format(path: str) -> str:
    low = path.lower()
    if low.endswith(".g6") or low.endswith(".graph6"):
        return "graph6"
    if low.endswith(".json"):
        return "json"
    return "edgelist"

