"""Recognizers for the graph classes characterized by toll walk axioms.

Each recognizer runs two or three independent methods and records every
method's answer in ``ClassReport.methods``; ``member`` is the answer of the
first (definitional) method. Non-members always carry a certificate that
``recheck_certificate`` can verify from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .catalog import at_free_patterns, catalog
from .errors import DisconnectedGraphError
from .graphs import Graph, contains_induced, distances, is_induced_copy, iter_bits

# slow induced-cycle search is skipped for chordal graphs above this size
SLOW_CHECK_LIMIT = 16


@dataclass(frozen=True)
class ClassReport:
    name: str
    member: bool
    certificate: object = None
    methods: dict = field(default_factory=dict, compare=False)

    @property
    def agree(self) -> bool:
        return len(set(self.methods.values())) <= 1


def _require_connected(g: Graph, what: str) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError(what)


# -- chordal --------------------------------------------------------------------

def perfect_elimination_order(g: Graph):
    """Maximum cardinality search; returns an elimination order or None if not chordal."""
    n = g.n
    weight = [0] * n
    numbered = 0
    order = []
    for _ in range(n):
        best = max((v for v in range(n) if not numbered >> v & 1), key=lambda v: (weight[v], -v))
        order.append(best)
        numbered |= 1 << best
        for w in iter_bits(g.adj[best] & ~numbered):
            weight[w] += 1
    peo = order[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in iter_bits(g.adj[v]) if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        need = 0
        for w in later:
            if w != parent:
                need |= 1 << w
        if need & ~g.adj[parent]:
            return None
    return peo


def find_induced_cycle(g: Graph, min_len: int = 4):
    """First induced cycle with at least ``min_len`` vertices, as a vertex tuple.

    The cycle starts at its smallest vertex; search is depth-first in vertex order.
    """
    adj = g.adj
    for s in range(g.n):
        higher = ~((1 << (s + 1)) - 1)

        def extend(path, inner):
            # inner: mask of path vertices other than s and the last vertex
            last = path[-1]
            for c in iter_bits(adj[last] & higher):
                bit = 1 << c
                if bit & inner or c in path:
                    continue
                if adj[c] & inner:
                    continue
                if len(path) >= 2 and adj[c] >> s & 1:
                    if len(path) + 1 >= min_len:
                        return tuple(path) + (c,)
                    continue
                found = extend(path + [c], inner | (1 << last if last != s else 0))
                if found:
                    return found
            return None

        found = extend([s], 0)
        if found:
            return found
    return None


def is_induced_cycle(g: Graph, cycle) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.has_edge(cycle[i], cycle[j])
            if adjacent != (j - i == 1 or (i == 0 and j == k - 1)):
                return False
    return True


def is_chordal(g: Graph) -> ClassReport:
    fast = perfect_elimination_order(g) is not None
    methods = {"peo": fast}
    cycle = None
    if not fast or g.n <= SLOW_CHECK_LIMIT:
        cycle = find_induced_cycle(g, 4)
        methods["induced_cycle"] = cycle is None
    return ClassReport("chordal", fast, cycle, methods)


# -- AT-free ---------------------------------------------------------------------

def asteroidal_triple(g: Graph):
    """Lexicographically least triple u<v<w in which every pair avoids the third's closed neighborhood."""
    comps = [g.components_without(g.closed_mask(w)) for w in range(g.n)]

    def joined(a, b, w):
        c = comps[w]
        return a in c and b in c and bool(c[a] >> b & 1)

    for u, v, w in combinations(range(g.n), 3):
        if joined(u, v, w) and joined(u, w, v) and joined(v, w, u):
            return (u, v, w)
    return None


def is_at_free(g: Graph) -> ClassReport:
    t = asteroidal_triple(g)
    return ClassReport("AT-free", t is None, t, {"triples": t is None})


def at_free_forbidden_crosscheck(g: Graph, max_pattern: int = 7) -> dict:
    """Compare the direct triple test against the catalog of AT-free obstructions."""
    if max_pattern < 7:
        raise ValueError("max_pattern must be at least 7")
    direct = is_at_free(g).member
    hit = None
    for name, p in at_free_patterns(max_pattern):
        image = contains_induced(g, p)
        if image is not None:
            hit = (name, image)
            break
    by_patterns = hit is None
    return {
        "agree": direct == by_patterns,
        "direct": direct,
        "patterns": by_patterns,
        "pattern_hit": hit,
        "complete": max_pattern >= g.n,
    }


# -- distance-hereditary -----------------------------------------------------------

def long_induced_path(g: Graph):
    """First induced path that is longer than the distance between its ends, or None."""
    dist = distances(g)
    adj = g.adj
    for s in range(g.n):

        def extend(path, body):
            # body: mask of path vertices other than the last
            last = path[-1]
            for c in iter_bits(adj[last] & ~body & ~(1 << last)):
                if adj[c] & body:
                    continue
                new = path + [c]
                if len(new) - 1 > dist[s][c]:
                    return tuple(new)
                found = extend(new, body | (1 << last))
                if found:
                    return found
            return None

        found = extend([s], 0)
        if found:
            return found
    return None


def dh_obstructions(max_n: int):
    out = [("house", catalog("house")), ("domino", catalog("domino")), ("fan3", catalog("fan3"))]
    out += [(f"hole:{k}", catalog(f"hole:{k}")) for k in range(5, max_n + 1)]
    return out


def _first_obstruction(g: Graph, patterns):
    for name, p in patterns:
        image = contains_induced(g, p)
        if image is not None:
            return (name, image)
    return None


def is_distance_hereditary(g: Graph) -> ClassReport:
    _require_connected(g, "is_distance_hereditary")
    path = long_induced_path(g)
    hit = _first_obstruction(g, dh_obstructions(g.n))
    if hit is not None:
        cert = ("pattern",) + hit
    else:
        cert = ("path", path) if path is not None else None
    return ClassReport(
        "distance-hereditary",
        path is None,
        cert,
        {"induced_paths": path is None, "forbidden": hit is None},
    )


# -- Ptolemaic ----------------------------------------------------------------------

def ptolemy_violation(g: Graph):
    """First ordered quadruple (u,v,w,x) with d(u,v)d(w,x) + d(u,x)d(v,w) < d(u,w)d(v,x)."""
    d = distances(g)
    for u, v, w, x in permutations(range(g.n), 4):
        if d[u][v] * d[w][x] + d[u][x] * d[v][w] < d[u][w] * d[v][x]:
            return (u, v, w, x)
    return None


def is_ptolemaic(g: Graph) -> ClassReport:
    _require_connected(g, "is_ptolemaic")
    quad = ptolemy_violation(g)
    chordal = is_chordal(g)
    dh = is_distance_hereditary(g)
    fan = contains_induced(g, catalog("fan3"))
    methods = {
        "inequality": quad is None,
        "chordal_dh": chordal.member and dh.member,
        "chordal_fan_free": chordal.member and fan is None,
    }
    if quad is not None:
        cert = ("quadruple", quad)
    elif not chordal.member:
        cert = ("cycle", chordal.certificate)
    elif fan is not None:
        cert = ("pattern", "fan3", fan)
    elif not dh.member:
        cert = dh.certificate
    else:
        cert = None
    return ClassReport("Ptolemaic", quad is None, cert, methods)


# -- trees and triangles ---------------------------------------------------------------

def is_tree(g: Graph) -> ClassReport:
    connected = g.is_connected()
    member = connected and g.m == g.n - 1
    cert = None
    if not member:
        cert = ("disconnected", None) if not connected else ("cycle", find_induced_cycle(g, 3))
    return ClassReport("tree", member, cert, {"count": member})


def find_triangle(g: Graph):
    for a in range(g.n):
        for b in iter_bits(g.adj[a] >> (a + 1) << (a + 1)):
            common = g.adj[a] & g.adj[b] >> (b + 1) << (b + 1)
            if common:
                c = (common & -common).bit_length() - 1
                return (a, b, c)
    return None


def is_triangle_free(g: Graph) -> ClassReport:
    t = find_triangle(g)
    return ClassReport("triangle-free", t is None, t, {"search": t is None})


def recheck_certificate(g: Graph, report: ClassReport) -> bool:
    """Independently confirm that a non-member certificate really disqualifies ``g``."""
    if report.member:
        return report.certificate is None
    cert = report.certificate
    name = report.name
    if name == "chordal":
        return is_induced_cycle(g, cert) and len(cert) >= 4
    if name == "AT-free":
        u, v, w = cert
        return all(
            _avoiding_path(g, a, b, c) for a, b, c in ((u, v, w), (u, w, v), (v, w, u))
        )
    if name == "triangle-free":
        a, b, c = cert
        return g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    if name == "tree":
        kind, data = cert
        return not g.is_connected() if kind == "disconnected" else is_induced_cycle(g, data)
    if name in ("distance-hereditary", "Ptolemaic"):
        kind = cert[0]
        if kind == "path":
            path = cert[1]
            d = distances(g)
            return _is_induced_path(g, path) and len(path) - 1 > d[path[0]][path[-1]]
        if kind == "pattern":
            _, pname, image = cert
            return is_induced_copy(g, catalog(pname), image)
        if kind == "cycle":
            return is_induced_cycle(g, cert[1]) and len(cert[1]) >= 4
        if kind == "quadruple":
            u, v, w, x = cert[1]
            d = distances(g)
            return d[u][v] * d[w][x] + d[u][x] * d[v][w] < d[u][w] * d[v][x]
    return False


def _is_induced_path(g: Graph, path) -> bool:
    k = len(path)
    if len(set(path)) != k:
        return False
    return all(
        g.has_edge(path[i], path[j]) == (j - i == 1) for i in range(k) for j in range(i + 1, k)
    )


def _avoiding_path(g: Graph, a: int, b: int, c: int) -> bool:
    """Breadth-first search from a to b that never enters N[c]."""
    blocked = g.closed_neighborhood(c)
    if a in blocked or b in blocked:
        return False
    seen = {a}
    frontier = [a]
    while frontier:
        nxt = []
        for x in frontier:
            for y in g.neighbors(x):
                if y not in seen and y not in blocked:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return b in seen


CLASS_NAMES = ("chordal", "AT-free", "distance-hereditary", "Ptolemaic", "tree", "triangle-free")


def classify(g: Graph) -> list[ClassReport]:
    reports = [is_chordal(g), is_at_free(g)]
    if g.is_connected():
        reports += [is_distance_hereditary(g), is_ptolemaic(g)]
    reports += [is_tree(g), is_triangle_free(g)]
    return reports

