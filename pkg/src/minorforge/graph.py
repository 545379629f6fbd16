"""Dense bitmask graphs, graph6 I/O and structural primitives.

Vertices are ``0..n-1``. Row ``v`` of the adjacency is a Python ``int`` whose
bit ``u`` is set iff ``uv`` is an edge, so neighbourhood intersection is a
single ``&``.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 512

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph."""

    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.adj)
        if n > MAX_ORDER:
            raise GraphError(f"order {n} exceeds maximum {MAX_ORDER}")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError("negative order")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.adj)

    order = n

    @property
    def vertex_mask(self) -> int:
        return (1 << len(self.adj)) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"


def _check_vertices(g: Graph, vertices: Iterable[int]) -> list[int]:
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for order {g.n}")
    return vs


# ---------------------------------------------------------------- graph6

def _decode_size(data: str) -> tuple[int, int]:
    """Return ``(n, offset of first edge byte)``."""
    if not data:
        raise Graph6Error("empty record", 0)
    for i, ch in enumerate(data[:8]):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", i)
    if data[0] != "~":
        return ord(data[0]) - 63, 1
    if len(data) >= 2 and data[1] == "~":
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size field", len(data))
        n = 0
        for ch in data[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 258047:
            raise Graph6Error("non-canonical 8-byte size field", 0)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte size field", len(data))
    n = 0
    for ch in data[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    if n < 63:
        raise Graph6Error("non-canonical 4-byte size field", 0)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is accepted)."""
    data = text.strip("\r\n")
    base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if data.startswith(":") or data.startswith("&"):
        raise Graph6Error("sparse6/digraph6 records are not supported", base)
    try:
        n, pos = _decode_size(data)
    except Graph6Error as e:
        raise Graph6Error(str(e).rsplit(" (byte", 1)[0], base + e.offset) from None
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds maximum {MAX_ORDER}", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    for i, ch in enumerate(body):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", base + pos + i)
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} edge bytes, got {len(body)}", base + pos + len(body))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage", base + pos + nbytes)
    stream = 0
    for ch in body:
        stream = (stream << 6) | (ord(ch) - 63)
    pad = 6 * nbytes - nbits
    if stream & ((1 << pad) - 1):
        raise Graph6Error("padding bit set beyond the triangle", base + pos + nbytes - 1)
    rows = [0] * n
    k = 6 * nbytes - 1
    for v in range(1, n):
        for u in range(v):
            if stream >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k -= 1
    return Graph(tuple(rows))


def write_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:  # pragma: no cover - MAX_ORDER keeps us far below this
        raise GraphError(f"order {n} not encodable")
    acc = nacc = 0
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | (row >> u & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | Graph6Error]]:
    """Yield ``(line_number, record, graph_or_error)`` for each non-comment line.

    Malformed records are yielded with the exception instead of a graph so the
    caller decides whether to skip or abort.
    """
    for lineno, line in enumerate(lines, 1):
        rec = line.strip()
        if not rec or rec.startswith("#"):
            continue
        if rec == GRAPH6_HEADER:
            continue
        try:
            yield lineno, rec, parse_graph6(rec)
        except Graph6Error as e:
            yield lineno, rec, e


# ---------------------------------------------------------------- generators

def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p).

    Uses ``random.Random(seed)`` (MT19937), drawing one ``random()`` per vertex
    pair in graph6 order (0,1),(0,2),(1,2),(0,3),...; the pair is an edge iff
    the draw is ``< p``.
    """
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    if n < 0 or n > MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rng = random.Random(seed)
    rows = [0] * n
    for v in range(1, n):
        for u in range(v):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def spider_graph(legs: int, length: int) -> Graph:
    """Centre 0 with ``legs`` paths of ``length`` edges; leg i uses vertices
    ``1 + i*length .. (i+1)*length`` from the centre outwards."""
    edges = []
    for i in range(legs):
        prev = 0
        for j in range(length):
            v = 1 + i * length + j
            edges.append((prev, v))
            prev = v
    return Graph.from_edges(1 + legs * length, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(tuple(rows))


# ---------------------------------------------------------------- structure

def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int], dict[int, int]]:
    """Return ``(sub, new_to_old, old_to_new)``; new labels follow ascending old order."""
    new_to_old = _check_vertices(g, keep)
    old_to_new = {v: i for i, v in enumerate(new_to_old)}
    rows = []
    for v in new_to_old:
        row = 0
        for u in bits(g.adj[v]):
            j = old_to_new.get(u)
            if j is not None:
                row |= 1 << j
        rows.append(row)
    return Graph(tuple(rows)), new_to_old, old_to_new


def delete_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, list[int], dict[int, int]]:
    dropped = set(_check_vertices(g, drop))
    return induced_subgraph(g, (v for v in range(g.n) if v not in dropped))


def is_connected_set(g: Graph, vertices: int) -> bool:
    """Whether the vertex mask induces a connected subgraph (empty counts as not)."""
    if not vertices:
        return False
    seen = vertices & -vertices
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & vertices & ~seen
        seen |= frontier
    return seen == vertices


def contract_set(g: Graph, s: Iterable[int]) -> Graph:
    """Contract the connected set ``s`` to one vertex.

    The merged vertex takes the smallest label of ``s``; the remaining vertices
    keep their relative order.
    """
    members = _check_vertices(g, s)
    if not members:
        raise GraphError("cannot contract an empty set")
    smask = mask_of(members)
    if not is_connected_set(g, smask):
        raise GraphError(f"set {members} does not induce a connected subgraph")
    rep = members[0]
    keep = [v for v in range(g.n) if v == rep or not smask >> v & 1]
    index = {v: i for i, v in enumerate(keep)}
    nbr_of_s = 0
    for v in members:
        nbr_of_s |= g.adj[v]
    nbr_of_s &= ~smask
    rows = [0] * len(keep)
    for v in keep:
        src = nbr_of_s if v == rep else g.adj[v]
        row = 0
        for u in bits(src):
            if smask >> u & 1:
                row |= 1 << index[rep]
            else:
                row |= 1 << index[u]
        rows[index[v]] = row
    return Graph(tuple(rows))


def connected_components(g: Graph) -> list[list[int]]:
    remaining = g.vertex_mask
    comps = []
    while remaining:
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(list(bits(seen)))
        remaining &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def bfs_distances(g: Graph, sources: Iterable[int]) -> list[int | None]:
    """Hop distance from each vertex to the nearest source; ``None`` if unreachable."""
    srcs = _check_vertices(g, sources)
    if not srcs:
        raise GraphError("bfs needs at least one source")
    dist: list[int | None] = [None] * g.n
    queue = deque(srcs)
    for s in srcs:
        dist[s] = 0
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v]):
            if dist[u] is None:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def is_stable(g: Graph, vertices: Sequence[int]) -> bool:
    m = mask_of(vertices)
    return all(not (g.adj[v] & m) for v in vertices)


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    m = mask_of(vertices)
    return all((g.adj[v] | 1 << v) & m == m for v in vertices)


def small_graphs(max_n: int = 7) -> list[Graph]:
    """All graphs on at most ``max_n`` (<= 7) vertices, one per isomorphism class."""
    from importlib.resources import files

    if max_n > 7:
        raise GraphError("bundled corpus stops at 7 vertices")
    text = files("minorforge").joinpath("data/graphs_upto7.g6").read_text()
    out = []
    for lineno, rec, g in read_graph6_lines(text.splitlines()):
        if isinstance(g, Exception):  # pragma: no cover - bundled data is well formed
            raise g
        if g.n <= max_n:
            out.append(g)
    return out
