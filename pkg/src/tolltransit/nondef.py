"""Gadget graphs, ternary structures and the distance-based Duplicator.

``G_d`` joins two 4d-cycles ``u_1..u_4d`` and ``v_1..v_4d`` by rungs
``u_i v_i`` and hangs ``x`` on ``v_1`` and ``v_{2d+1}``. ``G'_d`` is the same
except that each layer splits into two 2d-cycles. Vertex ids are
``u_i -> i-1``, ``v_i -> 4d+i-1`` and ``x -> 8d`` in both graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import ContractError
from .graphs import Graph, distances, iter_bits
from .tollwalk import toll_transit


def _check_d(d: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise ContractError(f"gadget parameter d must be an integer >= 2, got {d!r}")


def _labels(d: int, prime: str) -> list[str]:
    return (
        [f"u{prime}_{i}" for i in range(1, 4 * d + 1)]
        + [f"v{prime}_{i}" for i in range(1, 4 * d + 1)]
        + [f"x{prime}"]
    )


def u_id(d: int, i: int) -> int:
    return (i - 1) % (4 * d)


def v_id(d: int, i: int) -> int:
    return 4 * d + (i - 1) % (4 * d)


def x_id(d: int) -> int:
    return 8 * d


def build_G_d(d: int) -> Graph:
    _check_d(d)
    m = 4 * d
    edges = []
    for i in range(1, m + 1):
        edges.append((u_id(d, i), u_id(d, i + 1)))
        edges.append((v_id(d, i), v_id(d, i + 1)))
        edges.append((u_id(d, i), v_id(d, i)))
    edges += [(v_id(d, 1), x_id(d)), (v_id(d, 2 * d + 1), x_id(d))]
    return Graph(8 * d + 1, edges, _labels(d, ""))


def build_G_d_prime(d: int) -> Graph:
    _check_d(d)
    edges = []
    for layer in (u_id, v_id):
        edges.append((layer(d, 1), layer(d, 2 * d)))
        edges.append((layer(d, 2 * d + 1), layer(d, 4 * d)))
        for i in range(1, 2 * d):
            edges.append((layer(d, i), layer(d, i + 1)))
            edges.append((layer(d, 2 * d + i), layer(d, 2 * d + i + 1)))
    edges += [(u_id(d, j), v_id(d, j)) for j in range(1, 4 * d + 1)]
    edges += [(v_id(d, 1), x_id(d)), (v_id(d, 2 * d + 1), x_id(d))]
    return Graph(8 * d + 1, edges, _labels(d, "'"))


# -- ternary structures -----------------------------------------------------------

@dataclass(frozen=True)
class TernaryStructure:
    """Universe ``0..n-1`` with ``D(x, y, z)`` iff bit ``y`` of ``F[x][z]``."""

    n: int
    F: tuple
    graph: Graph | None = None

    def D(self, x: int, y: int, z: int) -> bool:
        return bool(self.F[x][z] >> y & 1)

    def label(self, v: int) -> str:
        return self.graph.label(v) if self.graph is not None else str(v)

    def triples(self):
        return [(x, y, z) for x in range(self.n) for z in range(self.n) for y in iter_bits(self.F[x][z])]


def transit_conditions(s: TernaryStructure):
    """First violation of (i) D(u,u,v), (ii) symmetry, (iii) D(u,x,u) => x=u, or None."""
    for u in range(s.n):
        for v in range(s.n):
            if not s.D(u, u, v):
                return ("i", u, v)
            if s.F[u][v] != s.F[v][u]:
                return ("ii", u, v)
        if s.F[u][u] != 1 << u:
            return ("iii", u, u)
    return None


def w_structure(g: Graph) -> TernaryStructure:
    """``D(x, y, z)`` iff ``y`` lies on a toll walk between ``x`` and ``z``."""
    r = toll_transit(g)
    s = TernaryStructure(g.n, r.table, g)
    bad = transit_conditions(s)
    if bad is not None:
        raise AssertionError(f"W-structure violates condition ({bad[0]}) at {bad[1:]}")
    return s


def scant_structure(g: Graph) -> TernaryStructure:
    """The scant structure with underlying graph ``g``: ``F(x, z)`` is ``{x, z}`` on edges, else everything."""
    full = (1 << g.n) - 1
    rows = []
    for x in range(g.n):
        row = []
        for z in range(g.n):
            if x == z:
                row.append(1 << x)
            elif g.has_edge(x, z):
                row.append((1 << x) | (1 << z))
            else:
                row.append(full)
        rows.append(tuple(row))
    return TernaryStructure(g.n, tuple(rows), g)


@dataclass(frozen=True)
class ScantVerdict:
    scant: bool
    witness: tuple | None = None  # (x, y, sorted F(x, y)) of the lexicographically first offence
    offending: tuple = ()

    def offending_pairs(self) -> dict:
        return {(x, y): members for x, y, members in self.offending}


def is_scant(s: TernaryStructure) -> ScantVerdict:
    """Every ``F(x, y)`` must be ``{x, y}`` or the whole universe.

    Pairs are scanned with ``x < y`` in id order; all offending pairs are
    returned, the first one doubling as the witness.
    """
    bad = transit_conditions(s)
    if bad is not None:
        raise ContractError(f"structure violates condition ({bad[0]}) at {bad[1:]}")
    full = (1 << s.n) - 1
    offending = []
    for x in range(s.n):
        for y in range(x + 1, s.n):
            f = s.F[x][y]
            if f != (1 << x) | (1 << y) and f != full:
                offending.append((x, y, tuple(iter_bits(f))))
    if not offending:
        return ScantVerdict(True)
    return ScantVerdict(False, offending[0], tuple(offending))


def check_partial_isomorphism(pairs, a: TernaryStructure, b: TernaryStructure) -> bool:
    """``pairs`` is a list of ``(a_i, b_i)``; checks well-definedness, injectivity and D on all triples."""
    fwd, back = {}, {}
    for x, y in pairs:
        if fwd.setdefault(x, y) != y or back.setdefault(y, x) != x:
            return False
    dom = list(fwd)
    for p in dom:
        for q in dom:
            for r in dom:
                if a.D(p, q, r) != b.D(fwd[p], fwd[q], fwd[r]):
                    return False
    return True


# -- Duplicator strategy on G_d versus G'_d ---------------------------------------------

def _index_map(d: int, i: int) -> int:
    """Canonical index correspondence; fixes 1 and 2d+1 and is its own inverse."""
    if i <= d:
        return i
    if i <= 2 * d:
        return i + 2 * d
    if i <= 3 * d:
        return i
    return i - 2 * d


def canonical_image(d: int, w: int) -> int:
    """Map a vertex id of one gadget to the other, layer by layer.

    Moves in the V layer are mirrored through their U mate: the index of
    ``v_t`` is mapped exactly as the index of ``u_t`` would be.
    """
    if w == x_id(d):
        return w
    m = 4 * d
    layer, i = divmod(w, m)
    return layer * m + _index_map(d, i + 1) - 1


def anchors(d: int) -> tuple:
    return (u_id(d, 1), v_id(d, 1), x_id(d), u_id(d, 2 * d + 1), v_id(d, 2 * d + 1))


def _layer(d: int, w: int) -> int:
    return 2 if w == x_id(d) else w // (4 * d)


@dataclass
class RoundReport:
    round: int
    side: str
    spoiler: int
    reply: int
    conditions: bool
    partial_iso: bool
    flagged: bool = False
    w_iso: bool = True

    def line(self) -> str:
        return (
            f"round {self.round}: spoiler side={self.side} v={self.spoiler}; "
            f"duplicator v={self.reply}; partial-iso={'ok' if self.partial_iso else 'FAIL'}"
            + ("" if self.w_iso else "; w-iso=no")
            + ("" if self.conditions else "; conditions=FAIL")
            + ("; flagged=no-qualifying-reply" if self.flagged else "")
        )


@dataclass
class StrategyRun:
    d: int
    rounds: int
    reports: list = field(default_factory=list)

    @property
    def duplicator_won(self) -> bool:
        return all(r.conditions and r.partial_iso and not r.flagged for r in self.reports)

    def trace(self) -> str:
        return "\n".join(r.line() for r in self.reports)


class _Gadgets:
    def __init__(self, d: int):
        self.d = d
        self.ga = build_G_d(d)
        self.gb = build_G_d_prime(d)
        self.da = distances(self.ga)
        self.db = distances(self.gb)
        self.wa = w_structure(self.ga)
        self.wb = w_structure(self.gb)
        self.sb = scant_structure(self.gb)


_GADGET_CACHE: dict = {}


def _gadgets(d: int) -> _Gadgets:
    if d not in _GADGET_CACHE:
        _GADGET_CACHE[d] = _Gadgets(d)
    return _GADGET_CACHE[d]


def conditions_hold(da, db, pairs, threshold: int) -> bool:
    """Distance conditions: equal distances up to ``threshold``, both above it otherwise."""
    for j, (aj, bj) in enumerate(pairs):
        for al, bl in pairs[j + 1:]:
            ds, dp = da[aj][al], db[bj][bl]
            if ds <= threshold:
                if dp != ds:
                    return False
            elif dp <= threshold:
                return False
    return True


def _qualifies(d, own, other, pairs_own, pairs_other, cand, moved, threshold):
    """Candidate ``cand`` (other side) answering ``moved`` (own side) keeps the conditions."""
    for po, pt in zip(pairs_own, pairs_other):
        if pt == cand:
            return False
        ds = own[moved][po]
        dp = other[cand][pt]
        if ds <= threshold:
            if dp != ds:
                return False
        elif dp <= threshold:
            return False
    return True


def duplicator_reply(d: int, n: int, pairs, side: str, w: int):
    """Reply to Spoiler choosing ``w`` on ``side`` ("A" is G_d, "B" is G'_d) in round ``len(pairs)+1``.

    Returns ``(reply, flagged)``. The canonical image is used when it keeps the
    distance conditions; otherwise the least qualifying vertex of the same layer.
    Anchors always answer anchors. ``flagged`` is set when nothing qualifies.
    """
    gad = _gadgets(d)
    i = len(pairs) + 1
    threshold = 2 ** (n - i)
    a_side = [p[0] for p in pairs]
    b_side = [p[1] for p in pairs]
    if side == "A":
        own, other, mine, theirs = gad.da, gad.db, a_side, b_side
    else:
        own, other, mine, theirs = gad.db, gad.da, b_side, a_side
    if w in mine:
        return theirs[mine.index(w)], False
    anchor_set = anchors(d)
    preferred = canonical_image(d, w)
    if w in anchor_set:
        options = [preferred]
    else:
        layer = _layer(d, w)
        options = [preferred] + [
            c for c in range(8 * d + 1) if _layer(d, c) == layer and c not in anchor_set and c != preferred
        ]
    for c in options:
        if _qualifies(d, own, other, mine, theirs, c, w, threshold):
            return c, False
    return preferred, True


def random_spoiler(d: int, rounds: int, rng: random.Random):
    size = 8 * d + 1
    return [(rng.choice("AB"), rng.randrange(size)) for _ in range(rounds)]


def duplicator_strategy_play(d: int, n: int, spoiler) -> StrategyRun:
    """Play ``n`` rounds of the distance-based Duplicator on W(G_d) versus W(G'_d).

    ``spoiler`` is a list of ``(side, vertex)`` moves or a ``random.Random``.
    After every round the distance conditions at threshold ``2^(n-i)`` and the
    partial isomorphism from W(G_d) to the scant structure on G'_d are
    checked; these decide the run. Whether the map is also a partial
    isomorphism onto W(G'_d) is recorded as ``w_iso`` only, since that
    structure is not scant and three pebbles can tell it apart.
    """
    if not d > 2 ** (n + 1):
        raise ContractError(f"strategy needs d > 2^(n+1); got d={d}, n={n}")
    if isinstance(spoiler, random.Random):
        moves = random_spoiler(d, n, spoiler)
    else:
        moves = list(spoiler)
        if len(moves) != n:
            raise ContractError(f"spoiler script has {len(moves)} moves, expected {n}")
    gad = _gadgets(d)
    pairs = []
    run = StrategyRun(d, n)
    for i, (side, w) in enumerate(moves, 1):
        if side not in ("A", "B") or not 0 <= w <= 8 * d:
            raise ContractError(f"bad spoiler move {(side, w)!r}")
        reply, flagged = duplicator_reply(d, n, pairs, side, w)
        pairs.append((w, reply) if side == "A" else (reply, w))
        cond = conditions_hold(gad.da, gad.db, pairs, 2 ** (n - i))
        iso = check_partial_isomorphism(pairs, gad.wa, gad.sb)
        w_iso = check_partial_isomorphism(pairs, gad.wa, gad.wb)
        run.reports.append(RoundReport(i, side, w, reply, cond, iso, flagged, w_iso))
    return run
