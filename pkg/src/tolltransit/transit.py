"""Transit functions on ``{0, .., n-1}``.

A transit function ``R`` assigns a set to every unordered pair with
``u in R(u, v)``, ``R(u, v) = R(v, u)`` and ``R(u, u) = {u}``. Values are held
as bitmasks in a full ``n x n`` table so axiom checkers can index directly.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import ParseError, TransitError
from .graphs import Graph, iter_bits, mask_of


class TransitFunction:
    __slots__ = ("n", "table", "labels")

    def __init__(self, n: int, table, labels=None):
        self.n = n
        self.table = table
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def _trusted(cls, n: int, values: Mapping[tuple[int, int], int], labels=None):
        table = [[0] * n for _ in range(n)]
        for (a, b), m in values.items():
            table[a][b] = table[b][a] = m
        return cls(n, tuple(tuple(row) for row in table), labels)

    def mask(self, a: int, b: int) -> int:
        return self.table[a][b]

    def __call__(self, a: int, b: int) -> frozenset:
        return frozenset(iter_bits(self.table[a][b]))

    def is_edge(self, a: int, b: int) -> bool:
        return self.table[a][b] == (1 << a) | (1 << b)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def __eq__(self, other):
        return isinstance(other, TransitFunction) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        big = {
            (a, b): sorted(self(a, b))
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if not self.is_edge(a, b)
        }
        return f"TransitFunction(n={self.n}, non_edge_values={big})"

    def entries(self):
        """Pairs ``a < b`` whose value is larger than ``{a, b}``, with sorted members."""
        return [
            (a, b, sorted(self(a, b)))
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if not self.is_edge(a, b)
        ]


def make_transit_function(
    n: int,
    entries: Mapping[tuple[int, int], Iterable[int]] | Iterable = (),
    default_pairs: bool = False,
    labels=None,
) -> TransitFunction:
    """Validate and build a transit function.

    ``entries`` maps pairs to member collections; a pair and its reverse may
    both be given if they agree. Unlisted pairs become ``{a, b}`` when
    ``default_pairs`` is set and are an error otherwise; unlisted diagonal
    pairs are always ``{a}``.
    """
    items = entries.items() if isinstance(entries, Mapping) else entries
    values: dict[tuple[int, int], int] = {}
    for (a, b), members in items:
        if not (0 <= a < n and 0 <= b < n):
            raise TransitError(f"pair ({a},{b}) outside universe of size {n}", (a, b))
        members = list(members)
        for c in members:
            if not 0 <= c < n:
                raise TransitError(f"R({a},{b}) names element {c} outside universe", (a, b))
        m = mask_of(members)
        key = (min(a, b), max(a, b))
        if key in values and values[key] != m:
            raise TransitError(f"R({a},{b}) and R({b},{a}) disagree", (a, b))
        values[key] = m
    for a in range(n):
        for b in range(a, n):
            key = (a, b)
            if key not in values:
                if a == b or default_pairs:
                    values[key] = (1 << a) | (1 << b)
                else:
                    raise TransitError(f"no value given for pair ({a},{b})", key)
            m = values[key]
            if a == b and m != 1 << a:
                raise TransitError(f"R({a},{a}) must be {{{a}}} (t3)", key)
            if not (m >> a & 1 and m >> b & 1):
                raise TransitError(f"R({a},{b}) must contain both {a} and {b} (t1)", key)
    return TransitFunction._trusted(n, values, labels)


def underlying_graph(r: TransitFunction) -> Graph:
    """Graph with ``ab`` an edge iff ``a != b`` and ``R(a, b) = {a, b}``."""
    edges = [(a, b) for a in range(r.n) for b in range(a + 1, r.n) if r.is_edge(a, b)]
    return Graph(r.n, edges, r.labels)


def parse_transit(text) -> TransitFunction:
    """Read the transit file format.

    Line 1 holds ``n``; each further line ``a b : c1 c2 ...`` sets ``R(a, b)``.
    Unlisted pairs default to ``{a, b}``; lines starting with ``#`` are ignored.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("ascii")
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.split("\n"), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing universe size", 1)
    no, head = lines[0]
    if not head.isdigit():
        raise ParseError(f"malformed universe size {head!r}", no)
    n = int(head)
    entries = []
    seen = {}
    for no, line in lines[1:]:
        left, sep, right = line.partition(":")
        pair = left.split()
        members = right.split()
        if not sep or len(pair) != 2 or not all(t.isdigit() for t in pair + members):
            raise ParseError(f"malformed entry {line!r}", no)
        a, b = int(pair[0]), int(pair[1])
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"pair ({a},{b}) already given on line {seen[key]}", no)
        seen[key] = no
        entries.append(((a, b), [int(t) for t in members]))
    try:
        return make_transit_function(n, entries, default_pairs=True)
    except TransitError as exc:
        line = seen.get((min(exc.pair), max(exc.pair))) if exc.pair else None
        raise ParseError(str(exc), line) from exc


def format_transit(r: TransitFunction) -> str:
    out = [f"{r.n}\n"]
    for a, b, members in r.entries():
        out.append(f"{a} {b} : {' '.join(map(str, members))}\n")
    return "".join(out)
