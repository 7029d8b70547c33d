"""Finite simple undirected graphs over vertex ids ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, so neighborhood and
separation queries reduce to bit operations.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator

from .errors import ContractError, ParseError


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph.

    ``labels`` is an optional tuple of display names, one per vertex id.
    Equality and hashing ignore labels.
    """

    __slots__ = ("n", "adj", "labels", "_memo")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n < 0:
            raise ContractError("vertex count must be non-negative")
        adj = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ContractError(f"edge ({i},{j}) out of range for n={n}")
            if i == j:
                raise ContractError(f"self-loop at {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.n = n
        self.adj = tuple(adj)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ContractError("labels must name every vertex")
        self.labels = labels
        self._memo = {}

    @classmethod
    def from_adjacency(cls, adj, labels=None) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g.labels = tuple(labels) if labels is not None else None
        g._memo = {}
        return g

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i]) if i < j]

    @property
    def m(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> set[int]:
        return set(iter_bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> set[int]:
        return self.neighbors(v) | {v}

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degree_sequence(self) -> list[int]:
        return sorted((self.degree(v) for v in range(self.n)), reverse=True)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def vertex(self, label: str) -> int:
        if self.labels and label in self.labels:
            return self.labels.index(label)
        raise KeyError(label)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..k-1`` in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[a], pos[b]) for a in vs for b in iter_bits(self.adj[a]) if b in pos and pos[a] < pos[b]]
        labels = [self.label(v) for v in vs] if self.labels else None
        return Graph(len(vs), edges, labels)

    def remove_edge(self, i: int, j: int) -> "Graph":
        adj = list(self.adj)
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)
        return Graph.from_adjacency(adj, self.labels)

    def component_of(self, start: int, allowed: int) -> int:
        """Bitmask of the component containing ``start`` inside ``allowed``."""
        comp = frontier = 1 << start
        adj = self.adj
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & allowed & ~comp
            comp |= frontier
        return comp

    def components_without(self, removed: int) -> dict[int, int]:
        """Map vertex -> component mask in ``G - removed``; memoised per graph."""
        key = ("comp", removed)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        allowed = self.full_mask & ~removed
        out = {}
        rest = allowed
        while rest:
            v = (rest & -rest).bit_length() - 1
            comp = self.component_of(v, allowed)
            for w in iter_bits(comp):
                out[w] = comp
            rest &= ~comp
        self._memo[key] = out
        return out

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.component_of(0, self.full_mask) == self.full_mask


def separates(g: Graph, s, a: int, b: int) -> bool:
    """True iff ``a`` and ``b`` lie in different components of ``g - s``.

    ``s`` may be a bitmask or an iterable of vertices.
    """
    removed = s if isinstance(s, int) else mask_of(s)
    if a == b:
        raise ContractError("separates: a and b must differ")
    if removed >> a & 1 or removed >> b & 1:
        raise ContractError("separates: endpoints must lie outside the separator")
    return not (g.components_without(removed)[a] >> b & 1)


def distances(g: Graph) -> list[list[float]]:
    """All-pairs hop counts by BFS; unreachable pairs are ``math.inf``."""
    key = ("dist",)
    if key in g._memo:
        return g._memo[key]
    out = []
    for s in range(g.n):
        row = [math.inf] * g.n
        row[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in iter_bits(g.adj[v]):
                if row[w] == math.inf:
                    row[w] = row[v] + 1
                    queue.append(w)
        out.append(row)
    g._memo[key] = out
    return out


def contains_induced(g: Graph, p: Graph):
    """First induced copy of ``p`` in ``g`` as a tuple ``m`` with ``m[i]`` the image of ``i``.

    Images are tried in increasing order, so the result is the lexicographically
    least image tuple. Returns None when there is no induced copy.
    """
    k = p.n
    if k > g.n:
        return None
    if k == 0:
        return ()
    pdeg = [p.degree(i) for i in range(k)]
    gdeg = [g.degree(v) for v in range(g.n)]
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        want = 0
        for q in iter_bits(p.adj[i] & ((1 << i) - 1)):
            want |= 1 << image[q]
        for c in range(g.n):
            if used >> c & 1 or gdeg[c] < pdeg[i]:
                continue
            if g.adj[c] & used != want:
                continue
            image[i] = c
            if extend(i + 1, used | (1 << c)):
                return True
        return False

    if extend(0, 0):
        return tuple(image)
    return None


def is_induced_copy(g: Graph, p: Graph, image) -> bool:
    if len(set(image)) != p.n:
        return False
    return all(
        p.has_edge(i, j) == g.has_edge(image[i], image[j])
        for i in range(p.n)
        for j in range(i + 1, p.n)
    )


# -- text formats -------------------------------------------------------------

def _as_text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        return data.decode("ascii")
    return data


def from_edge_list(text) -> Graph:
    """Parse ``n m`` header plus ``m`` lines ``i j`` with ``0 <= i < j < n``.

    Lines starting with ``#`` are ignored.
    """
    lines = [
        (no, line.strip())
        for no, line in enumerate(_as_text(text).split("\n"), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing header", 1)
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"malformed header {header!r}", no)
    n, m = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}", no)
    seen = set()
    edges = []
    for no, line in body:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"malformed edge {line!r}", no)
        i, j = int(parts[0]), int(parts[1])
        if i >= n or j >= n:
            raise ParseError(f"vertex index out of range in {line!r}", no)
        if i == j:
            raise ParseError(f"self-loop {line!r}", no)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError(f"duplicate edge {line!r}", no)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{i} {j}\n" for i, j in edges])


def from_graph6(line) -> Graph:
    """Decode one graph6 line (short form, n <= 62)."""
    s = _as_text(line).strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}")
    if ord(s[0]) == 126:
        raise ParseError("graph6 long form (n > 62) is not supported")
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    data = s[1:]
    if len(data) != need:
        raise ParseError(f"graph6 bit vector has {len(data)} bytes, expected {need}")
    bits = []
    for ch in data:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ContractError("graph6 short form supports n <= 62")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# -- small constructors ---------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ContractError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
