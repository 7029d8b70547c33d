"""Exhaustive and randomized checks of the axiomatic characterizations.

Theorem ids bind an axiom list on the toll walk transit function to a graph
class. ``iff`` theorems compare both sides on every graph; implication ids
(``prop-*``) evaluate the conclusion only where the hypothesis holds and
count how often it did.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from pathlib import Path

from . import classes
from .axioms import check_axiom
from .errors import ContractError, ParseError
from .graphs import Graph, from_graph6, iter_bits
from .tollwalk import toll_interval, toll_transit
from .transit import TransitFunction, make_transit_function, underlying_graph

CHAR_AXIOMS = {
    "char-chordal": ("b2", "J2", "JC", "TW1", "TW2", "TWC"),
    "char-tree": ("b2", "tr", "JC", "TW1", "TW2", "TWC"),
    "char-atfree": ("b1p", "b2p", "J2", "J4", "J4p", "TW1p", "TWA"),
    "char-ptolemaic": ("b2", "J2", "JC", "TW1", "TW2", "TWC", "pt"),
    "char-dh": ("b2", "J2", "J4", "dh", "dh1", "TW1p", "TWC"),
}


def _chordal(g):
    return classes.is_chordal(g)


def _tree(g):
    return classes.is_tree(g)


def _atfree(g):
    return classes.is_at_free(g)


def _ptolemaic(g):
    return classes.is_ptolemaic(g)


def _dh(g):
    return classes.is_distance_hereditary(g)


def _trianglefree(g):
    return classes.is_triangle_free(g)


@dataclass(frozen=True)
class Theorem:
    id: str
    kind: str  # "iff" or "implies"
    axioms: tuple = ()
    graph_class: object = None
    hypothesis_axioms: tuple = ()
    hypothesis_class: object = None
    conclusion: tuple = ()


THEOREMS = {
    "thm-jc-chordal": Theorem("thm-jc-chordal", "iff", ("JC",), _chordal),
    "lem-tr-trianglefree": Theorem("lem-tr-trianglefree", "iff", ("tr",), _trianglefree),
    "thm-jc-tr-tree": Theorem("thm-jc-tr-tree", "iff", ("JC", "tr"), _tree),
    "cor-b1p-atfree": Theorem("cor-b1p-atfree", "iff", ("b1p",), _atfree),
    "thm-pt-ptolemaic": Theorem("thm-pt-ptolemaic", "iff", ("JC", "pt"), _ptolemaic),
    "thm-dh-dh1-dh": Theorem("thm-dh-dh1-dh", "iff", ("dh", "dh1"), _dh),
    "prop-chordal-twc": Theorem("prop-chordal-twc", "implies", hypothesis_class=_chordal, conclusion=("TWC",)),
    "prop-jc-implies-b2": Theorem("prop-jc-implies-b2", "implies", hypothesis_axioms=("JC",), conclusion=("b2",)),
    "prop-atfree-j4p-b2p": Theorem("prop-atfree-j4p-b2p", "implies", hypothesis_class=_atfree, conclusion=("J4p", "b2p")),
    "prop-atfree-twa": Theorem("prop-atfree-twa", "implies", hypothesis_class=_atfree, conclusion=("TWA",)),
    "prop-dh-b2-twc": Theorem("prop-dh-b2-twc", "implies", hypothesis_class=_dh, conclusion=("b2", "TWC")),
    "char-chordal": Theorem("char-chordal", "iff", CHAR_AXIOMS["char-chordal"], _chordal),
    "char-tree": Theorem("char-tree", "iff", CHAR_AXIOMS["char-tree"], _tree),
    "char-atfree": Theorem("char-atfree", "iff", CHAR_AXIOMS["char-atfree"], _atfree),
    "char-ptolemaic": Theorem("char-ptolemaic", "iff", CHAR_AXIOMS["char-ptolemaic"], _ptolemaic),
    "char-dh": Theorem("char-dh", "iff", CHAR_AXIOMS["char-dh"], _dh),
}

THEOREM_IDS = tuple(THEOREMS)


def theorem(tid: str) -> Theorem:
    try:
        return THEOREMS[tid]
    except KeyError:
        raise ContractError(f"unknown theorem id {tid!r}") from None


# -- graph corpora ---------------------------------------------------------------

def _invariant_classes(g: Graph):
    deg = [g.degree(v) for v in range(g.n)]
    key = [(deg[v], tuple(sorted(deg[w] for w in iter_bits(g.adj[v])))) for v in range(g.n)]
    groups = {}
    for v in range(g.n):
        groups.setdefault(key[v], []).append(v)
    return [groups[k] for k in sorted(groups)]


def canonical_code(g: Graph) -> tuple:
    """Minimum upper-triangle adjacency bit string over vertex orders that list
    vertices class by class (classes ordered by an isomorphism invariant)."""
    groups = _invariant_classes(g)
    best = None
    for parts in product(*(permutations(grp) for grp in groups)):
        order = [v for part in parts for v in part]
        code = 0
        for j in range(1, g.n):
            row = g.adj[order[j]]
            for i in range(j):
                code = (code << 1) | (row >> order[i] & 1)
        if best is None or code < best:
            best = code
    return (g.n, best if best is not None else 0)


def _from_code(code: tuple) -> Graph:
    n, bits = code
    edges = []
    k = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph(n, edges)


BUILTIN_MAX_N = 7


@lru_cache(maxsize=None)
def _connected_codes(n: int) -> tuple:
    if n == 1:
        return (canonical_code(Graph(1)),)
    seen = set()
    for code in _connected_codes(n - 1):
        base = _from_code(code)
        for nbrs in range(1, 1 << (n - 1)):
            edges = base.edges() + [(i, n - 1) for i in iter_bits(nbrs)]
            seen.add(canonical_code(Graph(n, edges)))
    return tuple(sorted(seen))


def enumerate_graphs(n: int, source: str | Path = "builtin"):
    """All connected graphs on ``n`` vertices up to isomorphism, in a fixed order.

    ``source`` is ``"builtin"`` (``n <= 7``) or the path of a graph6 file, whose
    graphs on ``n`` vertices are returned in file order.
    """
    if source == "builtin":
        if not 1 <= n <= BUILTIN_MAX_N:
            raise ContractError(f"builtin enumeration supports 1 <= n <= {BUILTIN_MAX_N}")
        return [_from_code(c) for c in _connected_codes(n)]
    return [g for g in read_corpus(source) if g.n == n]


def read_corpus(path) -> list[Graph]:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise ContractError(f"cannot read corpus {path}: {exc}") from None
    graphs = []
    for no, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            g = from_graph6(line)
        except ParseError as exc:
            raise ParseError(str(exc), no) from None
        if not g.is_connected():
            raise ContractError(f"corpus line {no}: graph is disconnected")
        graphs.append(g)
    return graphs


def corpus(max_n: int, source="builtin", min_n: int = 1) -> list[Graph]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(enumerate_graphs(n, source))
    return out


# -- single-graph verification ------------------------------------------------------

@dataclass(frozen=True)
class TheoremCheck:
    left: bool
    right: bool | None
    agree: bool
    witness: object = None


def _first_violation(r: TransitFunction, ids):
    for a in ids:
        v = check_axiom(r, a)
        if not v.satisfied:
            return v
    return None


def verify_theorem(tid: str, g: Graph, r: TransitFunction | None = None) -> TheoremCheck:
    th = theorem(tid)
    if not g.is_connected():
        from .errors import DisconnectedGraphError

        raise DisconnectedGraphError("verify_theorem")
    if r is None:
        r = toll_transit(g)
    if th.kind == "iff":
        bad = _first_violation(r, th.axioms)
        left = bad is None
        report = th.graph_class(g)
        right = report.member
        witness = None
        if left != right:
            witness = bad if bad is not None else report.certificate
        return TheoremCheck(left, right, left == right, witness)
    if th.hypothesis_class is not None:
        rep = th.hypothesis_class(g)
        hyp = rep.member
    else:
        hyp = _first_violation(r, th.hypothesis_axioms) is None
    if not hyp:
        return TheoremCheck(False, None, True)
    bad = _first_violation(r, th.conclusion)
    return TheoremCheck(True, bad is None, bad is None, bad)


@dataclass
class EquivalenceReport:
    theorem: str
    graphs_checked: int = 0
    hypothesis_held: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.disagreements


def _verify_chunk(args):
    tid, codes = args
    out = []
    for code in codes:
        g = Graph.from_adjacency(code)
        out.append(verify_theorem(tid, g))
    return out


def sweep(tid: str, max_n: int, source="builtin", jobs: int = 1, min_n: int = 1) -> EquivalenceReport:
    """Run ``verify_theorem`` over every corpus graph with ``min_n <= n <= max_n``."""
    theorem(tid)
    if max_n < 2:
        raise ContractError("sweep needs max_n >= 2")
    graphs = corpus(max_n, source, min_n)
    if jobs > 1 and len(graphs) > 1:
        size = max(1, len(graphs) // (jobs * 4))
        chunks = [(tid, [g.adj for g in graphs[i:i + size]]) for i in range(0, len(graphs), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [c for part in pool.map(_verify_chunk, chunks) for c in part]
    else:
        results = [verify_theorem(tid, g) for g in graphs]
    report = EquivalenceReport(tid)
    for g, res in zip(graphs, results):
        report.graphs_checked += 1
        if res.left:
            report.hypothesis_held += 1
        if not res.agree:
            report.disagreements.append((g, res.left, res.right, res.witness))
    return report


# -- converse probing ------------------------------------------------------------------

PROBABILITIES = (0.1, 0.2, 0.3, 0.4, 0.5)


def random_transit(n: int, p: float, rng: random.Random) -> TransitFunction:
    values = {}
    for a in range(n):
        for b in range(a + 1, n):
            members = [a, b] + [c for c in range(n) if c not in (a, b) and rng.random() < p]
            values[(a, b)] = members
    return make_transit_function(n, values, default_pairs=True)


@dataclass
class ProbeReport:
    theorem: str
    trials: int = 0
    satisfied: int = 0
    disconnected: list = field(default_factory=list)
    falsifications: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.falsifications


def _probe_one(th: Theorem, r: TransitFunction, report: ProbeReport) -> None:
    report.trials += 1
    if _first_violation(r, th.axioms) is not None:
        return
    report.satisfied += 1
    g = underlying_graph(r)
    if not g.is_connected():
        report.disconnected.append(r)
        return
    member = th.graph_class(g).member
    same = toll_transit(g) == r
    if not (member and same):
        report.falsifications.append((r, member, same))


def probe_converse(tid: str, trials: int, max_n: int, seed: int, inject=()) -> ProbeReport:
    """Sample random transit functions and test the converse of a characterization.

    Every sampled ``R`` satisfying the axiom list must have a connected
    underlying graph in the class with ``R`` equal to its toll walk function.
    Functions whose underlying graph is disconnected are set aside. ``inject``
    adds hand-picked functions before the random ones.
    """
    if tid not in CHAR_AXIOMS:
        raise ContractError(f"{tid!r} is not a characterization theorem")
    th = THEOREMS[tid]
    rng = random.Random(seed)
    report = ProbeReport(tid)
    for r in inject:
        _probe_one(th, r, report)
    for _ in range(trials):
        n = rng.randint(2, max_n)
        p = rng.choice(PROBABILITIES)
        _probe_one(th, random_transit(n, p, rng), report)
    return report


# -- induced path lemmas ------------------------------------------------------------------

LEMMA_HYPOTHESES = {
    "easy1": ("J2", "JC", "TW2"),
    "easy": ("J2", "J4", "J4p", "TW1p"),
    "easydh": ("J2", "J4", "dh1", "TW1p"),
}


def induced_paths(g: Graph):
    """Every induced path with at least two vertices, each listed once from its smaller end."""
    adj = g.adj
    out = []

    def extend(path, body):
        last = path[-1]
        for c in iter_bits(adj[last] & ~body & ~(1 << last)):
            if adj[c] & body:
                continue
            new = path + [c]
            if new[0] < new[-1]:
                out.append(tuple(new))
            extend(new, body | (1 << last))

    for s in range(g.n):
        extend([s], 0)
    return out


@dataclass
class LemmaReport:
    lemma: str
    precondition: bool
    failed_axiom: object = None
    paths_checked: int = 0
    violations: list = field(default_factory=list)


def induced_path_lemma_check(g: Graph, lemma: str) -> LemmaReport:
    """Check ``V(P) <= T(u, v)`` for induced paths, plus neighbors of far inner vertices.

    The second part covers each ``z`` adjacent to an inner vertex of ``P``
    that is itself adjacent to neither end.
    """
    if lemma not in LEMMA_HYPOTHESES:
        raise ContractError(f"unknown lemma {lemma!r}")
    r = toll_transit(g)
    bad = _first_violation(r, LEMMA_HYPOTHESES[lemma])
    if bad is not None:
        return LemmaReport(lemma, False, bad)
    report = LemmaReport(lemma, True)
    for path in induced_paths(g):
        report.paths_checked += 1
        u, v = path[0], path[-1]
        members = toll_interval(g, u, v).members
        missing = [w for w in path if w not in members]
        if missing:
            report.violations.append((path, "path", missing))
            continue
        for p in path[1:-1]:
            if g.has_edge(p, u) or g.has_edge(p, v):
                continue
            for z in g.neighbors(p):
                if z not in members:
                    report.violations.append((path, "neighbor", z))
    return report
