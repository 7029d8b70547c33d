"""Named small graphs: distance-hereditary obstructions, AT-free obstructions,
fan families and a few generic shapes.

Every graph carries vertex labels. Parametric names take the form
``name:k``, e.g. ``hole:6`` or ``XF3:2``.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .errors import ContractError
from .graphs import Graph, complete_graph, cycle_graph, path_graph


def _labelled(n, edges, labels):
    return Graph(n, edges, labels)


@lru_cache(maxsize=None)
def fig2_data() -> dict:
    """Transcribed AT-free obstructions: edges, marked u/v/x ids, degree checksums."""
    text = resources.files("tolltransit").joinpath("data/fig2_patterns.json").read_text()
    return json.loads(text)


FIG2_NAMES = ("T2", "X2", "X3") + tuple(f"X{k}" for k in range(30, 42))


def _fig2(name: str) -> Graph:
    entry = fig2_data()[name]
    n = entry["n"]
    labels = [chr(ord("a") + i) for i in range(n)]
    for role, vid in entry["marked"].items():
        labels[vid] = f"{labels[vid]}={role}"
    return Graph(n, [tuple(e) for e in entry["edges"]], labels)


def fig2_marked(name: str) -> tuple[int, int, int]:
    """The marked (u, v, x) of an AT-free obstruction."""
    m = fig2_data()[name]["marked"]
    return m["u"], m["v"], m["x"]


def house() -> Graph:
    # square x y c d with roof vertex u over c d
    return _labelled(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)], ["x", "y", "c", "d", "u"])


def domino() -> Graph:
    return _labelled(
        6,
        [(0, 1), (1, 2), (2, 3), (3, 0), (2, 5), (5, 4), (4, 3)],
        ["x", "y", "c", "d", "u", "v"],
    )


def fan3() -> Graph:
    # path u x y v plus the universal vertex z
    return _labelled(
        5,
        [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
        ["u", "x", "y", "v", "z"],
    )


def c4() -> Graph:
    return _labelled(4, [(0, 1), (1, 2), (2, 3), (3, 0)], ["u", "x", "y", "v"])


def c6() -> Graph:
    return _labelled(6, [(i, (i + 1) % 6) for i in range(6)], ["u", "x", "v1", "a", "v", "b"])


def p_graph() -> Graph:
    # four-cycle a x y v plus pendant u on a
    return _labelled(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0)], ["a", "x", "y", "v", "u"])


def pan5() -> Graph:
    # five-cycle a x y b v plus pendant u on a
    return _labelled(
        6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0)], ["a", "x", "y", "b", "v", "u"]
    )


def fan_family(kind: int, n: int, with_uvx: bool = False) -> Graph:
    """F2 / F3 / F4 on a path of ``n`` vertices, optionally extended to XF2 / XF3 / XF4.

    Vertex order: p1..pn, then y1 (F3, F4 only), y2, then u, v, x.
    """
    if n < 1:
        raise ContractError("fan families need n >= 1")
    labels = [f"p{i}" for i in range(1, n + 1)]
    edges = [(i, i + 1) for i in range(n - 1)]
    if kind == 2:
        y2 = n
        labels.append("y2")
        edges += [(i, y2) for i in range(n)]
        y1 = None
    else:
        y1, y2 = n, n + 1
        labels += ["y1", "y2"]
        edges += [(i, y) for i in range(n) for y in (y1, y2)]
        if kind == 3:
            edges.append((y1, y2))
    if with_uvx:
        u, v, x = len(labels), len(labels) + 1, len(labels) + 2
        labels += ["u", "v", "x"]
        if kind == 2:
            edges += [(u, 0), (n - 1, v), (y2, x)]
        else:
            edges += [(u, 0), (u, y1), (v, n - 1), (v, y2), (x, y1), (x, y2)]
    return Graph(len(labels), edges, labels)


def _plain(g: Graph) -> Graph:
    return Graph(g.n, g.edges(), [str(i) for i in range(g.n)])


def _param(name: str, arg: str | None, low: int) -> int:
    if arg is None:
        raise ContractError(f"{name} needs a parameter, e.g. {name}:{low}")
    try:
        k = int(arg)
    except ValueError:
        raise ContractError(f"{name}: parameter {arg!r} is not an integer") from None
    if k < low:
        raise ContractError(f"{name}: parameter must be >= {low}, got {k}")
    return k


FIXED = {
    "house": house,
    "domino": domino,
    "fan3": fan3,
    "C4": c4,
    "C5": lambda: _plain(cycle_graph(5)),
    "C6": c6,
    "Pgraph": p_graph,
    "pan5": pan5,
}

PARAMETRIC = ("Ck", "hole", "path", "cycle", "complete", "F2", "F3", "F4", "XF2", "XF3", "XF4", "G_d", "GP_d")


def catalog(name: str) -> Graph:
    """Resolve a pattern name to its labelled graph."""
    base, _, arg = name.partition(":")
    arg = arg if _ else None
    if base in FIXED and arg is None:
        return FIXED[base]()
    if base in FIG2_NAMES and arg is None:
        return _fig2(base)
    if base == "Ck":
        return _plain(cycle_graph(_param(base, arg, 4)))
    if base == "hole":
        return _plain(cycle_graph(_param(base, arg, 5)))
    if base == "cycle":
        return _plain(cycle_graph(_param(base, arg, 3)))
    if base == "path":
        return _plain(path_graph(_param(base, arg, 1)))
    if base == "complete":
        return _plain(complete_graph(_param(base, arg, 1)))
    if base in ("F2", "F3", "F4", "XF2", "XF3", "XF4"):
        return fan_family(int(base[-1]), _param(base, arg, 1), base.startswith("X"))
    if base in ("G_d", "GP_d"):
        from .nondef import build_G_d, build_G_d_prime

        d = _param(base, arg, 2)
        return build_G_d(d) if base == "G_d" else build_G_d_prime(d)
    raise ContractError(f"unknown pattern name {name!r}")


def at_free_patterns(max_vertices: int):
    """AT-free obstructions with at most ``max_vertices`` vertices, as (name, graph)."""
    out = []
    for k in range(6, max_vertices + 1):
        out.append((f"cycle:{k}", catalog(f"cycle:{k}")))
    for name in FIG2_NAMES:
        if fig2_data()[name]["n"] <= max_vertices:
            out.append((name, catalog(name)))
    # XF2 on n path vertices has n + 4 vertices; XF3 and XF4 have n + 5.
    # XF2 with a single path vertex is a tree without an asteroidal triple.
    for n in range(2, max_vertices - 3):
        out.append((f"XF2:{n}", catalog(f"XF2:{n}")))
    for n in range(1, max_vertices - 4):
        out.append((f"XF3:{n}", catalog(f"XF3:{n}")))
        out.append((f"XF4:{n}", catalog(f"XF4:{n}")))
    return out
