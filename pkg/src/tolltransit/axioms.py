"""Betweenness axioms on transit functions.

Each axiom has two implementations:

* ``violates(R, id, values)`` says whether one assignment of the universally
  quantified variables is a violating instance (existential parts are searched
  inside). It is the literal statement and is used to re-check witnesses.
* a pruned nested-loop checker that walks the assignments in lexicographic
  order of the axiom's own variable order and stops at the first violation.

Both agree on the first witness; the test suite checks this on random inputs.

Edge tests ``R(a, b) = {a, b}`` are taken on sets, so ``a = b`` counts as an
edge because ``R(a, a) = {a}``.

Distinctness beyond the wording of each axiom (documented in ``DISTINCT``):
``tr`` needs ``u != v`` and ``dh``/``pt`` need all five variables distinct,
otherwise every graph with an edge or an induced three-vertex path violates them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from .errors import ContractError
from .transit import TransitFunction

VARIABLES = {
    "b1": ("u", "v", "x"),
    "b1p": ("u", "v", "x"),
    "b2": ("u", "v", "x"),
    "b2p": ("u", "v", "x"),
    "J0": ("u", "x", "y", "v"),
    "J2": ("u", "v", "x"),
    "J3": ("u", "v", "x", "y"),
    "J4": ("u", "v", "x", "y"),
    "J4p": ("u", "v", "x", "y"),
    "JC": ("u", "x", "y", "v"),
    "tr": ("u", "v", "x"),
    "TW1": ("u", "v", "x", "y", "z"),
    "TW1p": ("u", "v", "x", "w", "y", "z"),
    "TW2": ("u", "v", "x", "z"),
    "TW3": ("u", "v", "x"),
    "TWC": ("u", "v", "x"),
    "TWA": ("u", "v", "x"),
    "dh": ("u", "x", "y", "v", "z"),
    "dh1": ("u", "x", "y", "v"),
    "pt": ("u", "x", "y", "v", "z"),
    "SP": ("x", "y"),
}

AXIOM_IDS = tuple(VARIABLES)

# Variables required to be pairwise different. Entries marked "stated" come
# from "different elements" in the axiom; the others are needed to keep the
# axiom from failing on trivial graphs.
DISTINCT = {
    "J0": ("u", "x", "y", "v"),  # stated
    "JC": ("u", "x", "y", "v"),  # stated
    "TW3": ("u", "v", "x"),  # stated
    "TWC": ("u", "v", "x"),  # stated
    "TWA": ("u", "v", "x"),  # stated
    "tr": ("u", "v"),
    "dh": ("u", "x", "y", "v", "z"),
    "pt": ("u", "x", "y", "v", "z"),
}


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: str
    satisfied: bool
    witness: tuple | None = None

    @property
    def variables(self) -> tuple:
        return VARIABLES[self.axiom]

    def named_witness(self) -> dict | None:
        if self.witness is None:
            return None
        return dict(zip(self.variables, self.witness))

    def describe(self, r: TransitFunction | None = None) -> str:
        if self.satisfied:
            return f"{self.axiom}: satisfied"
        label = r.label if r is not None else str
        parts = ",".join(f"{k}={label(v)}" for k, v in zip(self.variables, self.witness))
        return f"{self.axiom}: violated ({parts})"


# -- literal bodies -----------------------------------------------------------

def _ctx(r: TransitFunction):
    t = r.table

    def inn(w, a, b):
        return bool(t[a][b] >> w & 1)

    def e(a, b):
        return t[a][b] == (1 << a) | (1 << b)

    return t, inn, e


def _distinct(name, values) -> bool:
    want = DISTINCT.get(name)
    if not want:
        return True
    pos = [VARIABLES[name].index(v) for v in want]
    picked = [values[i] for i in pos]
    return len(set(picked)) == len(picked)


def _body_b1(r, u, v, x):
    t, inn, e = _ctx(r)
    return inn(x, u, v) and x != v and inn(v, x, u)


def _body_b1p(r, u, v, x):
    t, inn, e = _ctx(r)
    return inn(x, u, v) and v != x and not e(v, x) and inn(v, u, x)


def _body_b2(r, u, v, x):
    t, inn, e = _ctx(r)
    return inn(x, u, v) and bool(t[u][x] & ~t[u][v])


def _body_b2p(r, u, v, x):
    t, inn, e = _ctx(r)
    return inn(x, u, v) and not e(u, x) and bool(t[x][v] & ~t[u][v])


def _body_J0(r, u, x, y, v):
    t, inn, e = _ctx(r)
    return inn(x, u, y) and inn(y, x, v) and not inn(x, u, v)


def _body_J2(r, u, v, x):
    t, inn, e = _ctx(r)
    return e(u, x) and e(x, v) and u != v and not e(u, v) and not inn(x, u, v)


def _body_J3(r, u, v, x, y):
    t, inn, e = _ctx(r)
    return inn(x, u, y) and inn(y, x, v) and x != y and not e(u, v) and not inn(x, u, v)


def _body_J4(r, u, v, x, y):
    t, inn, e = _ctx(r)
    return _body_J3(r, u, v, x, y) and e(u, x) and e(y, v)


def _body_J4p(r, u, v, x, y):
    t, inn, e = _ctx(r)
    return (
        inn(x, u, y)
        and inn(y, x, v)
        and not e(u, x)
        and not e(y, v)
        and not e(x, y)
        and not e(u, v)
        and not inn(x, u, v)
    )


def _body_JC(r, u, x, y, v):
    t, inn, e = _ctx(r)
    return inn(x, u, y) and inn(y, x, v) and e(x, y) and not inn(x, u, v)


def _body_tr(r, u, v, x):
    t, inn, e = _ctx(r)
    return e(u, x) and e(x, v) and not inn(x, u, v)


def _body_TW1(r, u, v, x, y, z):
    t, inn, e = _ctx(r)
    return (
        inn(x, u, v)
        and inn(y, u, v)
        and u != x
        and x != y
        and y != v
        and e(x, z)
        and e(z, y)
        and not e(x, v)
        and not e(u, y)
        and not inn(z, u, v)
    )


def _body_TW2(r, u, v, x, z):
    t, inn, e = _ctx(r)
    return inn(x, u, v) and not e(u, x) and not e(x, v) and e(x, z) and not inn(z, u, v)


def _tw3_candidates(r, u, v, x):
    t, inn, e = _ctx(r)
    return [
        v1
        for v1 in range(r.n)
        if inn(v1, x, v) and v1 != x and e(x, v1) and not e(u, v1)
    ]


def _body_TW3(r, u, v, x):
    t, inn, e = _ctx(r)
    return inn(x, u, v) and not _tw3_candidates(r, u, v, x)


def _body_TWC(r, u, v, x):
    t, inn, e = _ctx(r)
    return inn(x, u, v) and not any(not inn(x, v1, v) for v1 in _tw3_candidates(r, u, v, x))


def _body_TWA(r, u, v, x):
    t, inn, e = _ctx(r)
    if not inn(x, u, v):
        return False
    for x1 in range(r.n):
        if (
            inn(x1, x, v)
            and inn(x1, u, v)
            and x1 != x
            and e(x, x1)
            and not e(u, x1)
            and t[x1][v] & ~t[x][v] == 0
            and t[x1][v] != t[x][v]
        ):
            return False
    return True


def _body_TW1p(r, u, v, x, w, y, z):
    t, inn, e = _ctx(r)
    return (
        inn(x, u, v)
        and inn(y, u, v)
        and x != u
        and y != v
        and not e(x, v)
        and not e(u, y)
        and e(x, z)
        and e(z, w)
        and e(w, y)
        and not e(u, w)
        and not inn(z, u, v)
    )


def _body_dh(r, u, x, y, v, z):
    t, inn, e = _ctx(r)
    both = t[u][y] & t[x][v]
    return (
        all(both >> s & 1 for s in (x, y, z))
        and not e(u, v)
        and e(x, y)
        and x != y
        and e(u, z)
        and e(v, z)
        and e(x, z)
        and e(y, z)
    )


def _body_dh1(r, u, x, y, v):
    t, inn, e = _ctx(r)
    return (
        inn(x, u, y)
        and inn(y, x, v)
        and e(x, y)
        and x != y
        and not e(u, x)
        and not e(y, v)
        and not inn(x, u, v)
    )


def _body_pt(r, u, x, y, v, z):
    t, inn, e = _ctx(r)
    return (
        inn(x, u, y)
        and inn(z, u, y)
        and inn(y, x, v)
        and inn(z, x, v)
        and e(x, y)
        and (e(x, z) or e(y, z))
    )


def _body_SP(r, x, y):
    t, inn, e = _ctx(r)
    return not e(x, y) and t[x][y] != (1 << r.n) - 1


_RAW_BODIES = {
    "b1": _body_b1,
    "b1p": _body_b1p,
    "b2": _body_b2,
    "b2p": _body_b2p,
    "J0": _body_J0,
    "J2": _body_J2,
    "J3": _body_J3,
    "J4": _body_J4,
    "J4p": _body_J4p,
    "JC": _body_JC,
    "tr": _body_tr,
    "TW1": _body_TW1,
    "TW1p": _body_TW1p,
    "TW2": _body_TW2,
    "TW3": _body_TW3,
    "TWC": _body_TWC,
    "TWA": _body_TWA,
    "dh": _body_dh,
    "dh1": _body_dh1,
    "pt": _body_pt,
    "SP": _body_SP,
}


def violates(r: TransitFunction, axiom: str, values) -> bool:
    """True iff the assignment ``values`` (in the axiom's variable order) is a violation."""
    if axiom not in _RAW_BODIES:
        raise ContractError(f"unknown axiom id {axiom!r}")
    values = tuple(values)
    if len(values) != len(VARIABLES[axiom]):
        raise ContractError(f"{axiom} takes {len(VARIABLES[axiom])} variables")
    return _distinct(axiom, values) and _RAW_BODIES[axiom](r, *values)


def brute_force(r: TransitFunction, axiom: str) -> AxiomVerdict:
    """Unpruned search over every assignment; slow reference for the fast checkers."""
    for values in product(range(r.n), repeat=len(VARIABLES[axiom])):
        if violates(r, axiom, values):
            return AxiomVerdict(axiom, False, values)
    return AxiomVerdict(axiom, True)


# -- pruned checkers ----------------------------------------------------------
# Each returns the first violating tuple in lexicographic variable order, or None.

def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _fast_b1(r):
    t, n = r.table, r.n
    for u in range(n):
        for v in range(n):
            for x in _bits(t[u][v]):
                if x != v and t[x][u] >> v & 1:
                    return (u, v, x)


def _fast_b1p(r):
    t, n = r.table, r.n
    for u in range(n):
        for v in range(n):
            for x in _bits(t[u][v]):
                if x != v and t[v][x] != (1 << v | 1 << x) and t[u][x] >> v & 1:
                    return (u, v, x)


def _fast_b2(r):
    t, n = r.table, r.n
    for u in range(n):
        for v in range(n):
            for x in _bits(t[u][v]):
                if t[u][x] & ~t[u][v]:
                    return (u, v, x)


def _fast_b2p(r):
    t, n = r.table, r.n
    for u in range(n):
        for v in range(n):
            for x in _bits(t[u][v]):
                if t[u][x] != (1 << u | 1 << x) and t[x][v] & ~t[u][v]:
                    return (u, v, x)


def _edge(t, a, b):
    return t[a][b] == (1 << a | 1 << b)


def _fast_J0(r, need_edge=False):
    t, n = r.table, r.n
    for u in range(n):
        for x in range(n):
            if x == u:
                continue
            for y in range(n):
                if y in (u, x) or not t[u][y] >> x & 1:
                    continue
                if need_edge and not _edge(t, x, y):
                    continue
                for v in range(n):
                    if v in (u, x, y):
                        continue
                    if t[x][v] >> y & 1 and not t[u][v] >> x & 1:
                        return (u, x, y, v)


def _fast_JC(r):
    return _fast_J0(r, need_edge=True)


def _fast_J2(r):
    t, n = r.table, r.n
    for u in range(n):
        for v in range(n):
            if u == v or _edge(t, u, v):
                continue
            for x in range(n):
                if _edge(t, u, x) and _edge(t, x, v) and not t[u][v] >> x & 1:
                    return (u, v, x)


def _fast_J3(r, kind="J3"):
    t, n = r.table, r.n
    for u in range(n):
        for v in range(n):
            if _edge(t, u, v):
                continue
            miss = ~t[u][v]
            for x in range(n):
                if not miss >> x & 1:
                    continue
                ex = _edge(t, u, x)
                if kind == "J4" and not ex or kind == "J4p" and ex:
                    continue
                for y in range(n):
                    if not (t[u][y] >> x & 1 and t[x][v] >> y & 1):
                        continue
                    if kind == "J4p":
                        if _edge(t, y, v) or _edge(t, x, y):
                            continue
                    else:
                        if x == y:
                            continue
                        if kind == "J4" and not _edge(t, y, v):
                            continue
                    return (u, v, x, y)


def _fast_tr(r):
    t, n = r.table, r.n
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            for x in range(n):
                if _edge(t, u, x) and _edge(t, x, v) and not t[u][v] >> x & 1:
                    return (u, v, x)


def _fast_TW1(r):
    t, n = r.table, r.n
    for u in range(n):
        for v in range(n):
            inside = t[u][v]
            for x in _bits(inside):
                if x == u or _edge(t, x, v):
                    continue
                for y in _bits(inside):
                    if y == x or y == v or _edge(t, u, y):
                        continue
                    for z in range(n):
                        if _edge(t, x, z) and _edge(t, z, y) and not inside >> z & 1:
                            return (u, v, x, y, z)


def _fast_TW1p(r):
    t, n = r.table, r.n
    edge_rows = [[_edge(t, a, b) for b in range(n)] for a in range(n)]
    for u in range(n):
        for v in range(n):
            inside = t[u][v]
            for x in _bits(inside):
                if x == u or edge_rows[x][v]:
                    continue
                for w in range(n):
                    if edge_rows[u][w]:
                        continue
                    for y in _bits(inside):
                        if y == v or edge_rows[u][y] or not edge_rows[w][y]:
                            continue
                        for z in range(n):
                            if edge_rows[x][z] and edge_rows[z][w] and not inside >> z & 1:
                                return (u, v, x, w, y, z)


def _fast_TW2(r):
    t, n = r.table, r.n
    for u in range(n):
        for v in range(n):
            inside = t[u][v]
            for x in _bits(inside):
                if _edge(t, u, x) or _edge(t, x, v):
                    continue
                for z in range(n):
                    if _edge(t, x, z) and not inside >> z & 1:
                        return (u, v, x, z)


def _fast_exists(r, body):
    n = r.n
    t = r.table
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            for x in _bits(t[u][v]):
                if x in (u, v):
                    continue
                if body(r, u, v, x):
                    return (u, v, x)


def _fast_TW3(r):
    return _fast_exists(r, _body_TW3)


def _fast_TWC(r):
    return _fast_exists(r, _body_TWC)


def _fast_TWA(r):
    return _fast_exists(r, _body_TWA)


def _fast_dh(r):
    t, n = r.table, r.n
    for u in range(n):
        for x in range(n):
            if x == u:
                continue
            for y in range(n):
                if y in (u, x) or not _edge(t, x, y):
                    continue
                for v in range(n):
                    if v in (u, x, y) or _edge(t, u, v):
                        continue
                    both = t[u][y] & t[x][v]
                    if not (both >> x & 1 and both >> y & 1):
                        continue
                    for z in _bits(both):
                        if z in (u, x, y, v):
                            continue
                        if _edge(t, u, z) and _edge(t, v, z) and _edge(t, x, z) and _edge(t, y, z):
                            return (u, x, y, v, z)


def _fast_dh1(r):
    t, n = r.table, r.n
    for u in range(n):
        for x in range(n):
            if _edge(t, u, x):
                continue
            for y in range(n):
                if x == y or not _edge(t, x, y) or not t[u][y] >> x & 1:
                    continue
                for v in range(n):
                    if t[x][v] >> y & 1 and not _edge(t, y, v) and not t[u][v] >> x & 1:
                        return (u, x, y, v)


def _fast_pt(r):
    t, n = r.table, r.n
    for u in range(n):
        for x in range(n):
            if x == u:
                continue
            for y in range(n):
                if y in (u, x) or not _edge(t, x, y) or not t[u][y] >> x & 1:
                    continue
                for v in range(n):
                    if v in (u, x, y) or not t[x][v] >> y & 1:
                        continue
                    for z in _bits(t[u][y] & t[x][v]):
                        if z in (u, x, y, v):
                            continue
                        if _edge(t, x, z) or _edge(t, y, z):
                            return (u, x, y, v, z)


def _fast_SP(r):
    t, n = r.table, r.n
    full = (1 << n) - 1
    for x in range(n):
        for y in range(n):
            if not _edge(t, x, y) and t[x][y] != full:
                return (x, y)


_FAST: dict[str, Callable] = {
    "b1": _fast_b1,
    "b1p": _fast_b1p,
    "b2": _fast_b2,
    "b2p": _fast_b2p,
    "J0": _fast_J0,
    "J2": _fast_J2,
    "J3": _fast_J3,
    "J4": lambda r: _fast_J3(r, "J4"),
    "J4p": lambda r: _fast_J3(r, "J4p"),
    "JC": _fast_JC,
    "tr": _fast_tr,
    "TW1": _fast_TW1,
    "TW1p": _fast_TW1p,
    "TW2": _fast_TW2,
    "TW3": _fast_TW3,
    "TWC": _fast_TWC,
    "TWA": _fast_TWA,
    "dh": _fast_dh,
    "dh1": _fast_dh1,
    "pt": _fast_pt,
    "SP": _fast_SP,
}


def check_axiom(r: TransitFunction, axiom: str) -> AxiomVerdict:
    """Decide one axiom; on failure the witness is the lexicographically first violation."""
    fast = _FAST.get(axiom)
    if fast is None:
        raise ContractError(f"unknown axiom id {axiom!r}")
    witness = fast(r)
    if witness is None:
        return AxiomVerdict(axiom, True)
    return AxiomVerdict(axiom, False, tuple(witness))


def check_axioms(r: TransitFunction, ids) -> list[AxiomVerdict]:
    ids = list(ids)
    for a in ids:
        if a not in _FAST:
            raise ContractError(f"unknown axiom id {a!r}")
    return [check_axiom(r, a) for a in ids]


def satisfies_all(r: TransitFunction, ids) -> bool:
    return all(check_axiom(r, a).satisfied for a in ids)
