"""Toll walk intervals.

A toll walk from ``u`` to ``v`` is a walk whose second vertex is the only
neighbor of ``u`` on it and whose second-to-last vertex is the only neighbor
of ``v`` on it. ``T(u, v)`` collects every vertex lying on such a walk.

Two independent computations are provided: a separator test (fast, used by
everything else) and a walk automaton that follows the definition directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError, DisconnectedGraphError
from .graphs import Graph, iter_bits, separates


@dataclass(frozen=True)
class TollInterval:
    u: int
    v: int
    members: frozenset

    def __contains__(self, w) -> bool:
        return w in self.members

    def sorted(self) -> list[int]:
        return sorted(self.members)


def _check(g: Graph, u: int, v: int, what: str) -> None:
    for w in (u, v):
        if not (isinstance(w, int) and 0 <= w < g.n):
            raise ContractError(f"vertex {w!r} not in graph with n={g.n}")
    key = ("connected",)
    ok = g._memo.get(key)
    if ok is None:
        ok = g._memo[key] = g.is_connected()
    if not ok:
        raise DisconnectedGraphError(what)


def interval_mask(g: Graph, u: int, v: int) -> int:
    """Bitmask of ``T(u, v)`` via the separator test; assumes valid, connected input.

    A vertex ``w`` outside ``{u, v}`` lies on a toll walk between non-adjacent
    ``u`` and ``v`` iff ``N[u] - w`` does not separate ``w`` from ``v`` and
    ``N[v] - w`` does not separate ``w`` from ``u``.
    """
    if u == v:
        return 1 << u
    if g.has_edge(u, v):
        return (1 << u) | (1 << v)
    nu, nv = g.closed_mask(u), g.closed_mask(v)
    members = (1 << u) | (1 << v)
    for w in range(g.n):
        if w == u or w == v:
            continue
        bit = 1 << w
        if separates(g, nu & ~bit, w, v):
            continue
        if separates(g, nv & ~bit, w, u):
            continue
        members |= bit
    return members


def toll_interval(g: Graph, u: int, v: int) -> TollInterval:
    _check(g, u, v, "toll_interval")
    return TollInterval(u, v, frozenset(iter_bits(interval_mask(g, u, v))))


def toll_interval_oracle(g: Graph, u: int, v: int) -> TollInterval:
    """``T(u, v)`` for distinct non-adjacent ``u``, ``v`` straight from the walk definition.

    Walks are read as words over states:

    * ``u`` first, then a vertex ``a`` adjacent to ``u``;
    * if ``a`` is also adjacent to ``v`` the walk may end at once (``u a v``);
    * otherwise ``a`` must avoid ``N[v]``, every later vertex except ``v``
      must avoid ``N[u]``, every vertex before the last inner one must avoid
      ``N[v]``, and the last inner vertex ``b`` is adjacent to ``v``.

    A vertex belongs to the interval iff it appears in a state that is both
    reachable from the start and able to reach the end. The separator test
    is never consulted.
    """
    _check(g, u, v, "toll_interval_oracle")
    if u == v or g.has_edge(u, v):
        raise ContractError("oracle is defined for distinct non-adjacent vertices")
    nbr = [g.neighbors(w) for w in range(g.n)]
    near_u = nbr[u] | {u}
    near_v = nbr[v] | {v}
    middle = set(range(g.n)) - near_u - near_v

    start, end = ("start", u), ("end", v)

    def successors(state):
        kind, w = state
        if kind == "start":
            for a in nbr[u]:
                if a in nbr[v]:
                    yield ("both", a)
                else:
                    yield ("first", a)
        elif kind == "both":
            yield end
        elif kind in ("first", "mid"):
            for y in nbr[w]:
                if y in middle:
                    yield ("mid", y)
                elif y in nbr[v] and y not in near_u:
                    yield ("last", y)
        elif kind == "last":
            yield end

    states = {start}
    edges = []
    todo = [start]
    while todo:
        s = todo.pop()
        for t in successors(s):
            edges.append((s, t))
            if t not in states:
                states.add(t)
                todo.append(t)
    back = {}
    for s, t in edges:
        back.setdefault(t, []).append(s)
    alive = {end} if end in states else set()
    todo = list(alive)
    while todo:
        t = todo.pop()
        for s in back.get(t, ()):
            if s not in alive:
                alive.add(s)
                todo.append(s)
    members = {w for _, w in alive} | {u, v}
    return TollInterval(u, v, frozenset(members))


def toll_transit(g: Graph):
    """The toll walk transit function of a connected graph."""
    from .transit import TransitFunction

    if g.n:
        _check(g, 0, 0, "toll_transit")
    values = {}
    for a in range(g.n):
        for b in range(a, g.n):
            values[(a, b)] = interval_mask(g, a, b)
    return TransitFunction._trusted(g.n, values, labels=g.labels)
