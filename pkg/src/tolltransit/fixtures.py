"""Nine hand-built transit functions separating the axioms from each other.

Each entry lists the universe in order (vertex ids follow that order), the
pairs whose value is larger than the pair itself, and which axioms the
function is meant to satisfy and violate. Every unlisted pair ``a != b``
maps to ``{a, b}``.
"""

from __future__ import annotations

from .catalog import fan3
from .errors import ContractError
from .tollwalk import toll_transit
from .transit import TransitFunction, make_transit_function

ALL = "ALL"

_SPECS = {
    1: (
        "u v z x y",
        {
            "u v": ALL,
            "z v": ALL,
            "x v": "x y v",
            "u z": "u x z",
            "u y": "u x y",
            "z y": "z x y",
        },
        {"b2p", "J2", "J4", "J4p", "TW1p", "TWA"},
        {"b1p", "b1"},
    ),
    2: (
        "u v w x y z",
        {
            "u v": "u y x v",
            "u y": "u x y",
            "u w": "u y w",
            "y v": "y z x v",
            "u z": "u x z",
            "w v": "w z v",
        },
        {"b1p", "J2", "J4", "J4p", "TW1p", "TWA"},
        {"b2p", "b2"},
    ),
    3: (
        "u v x y z",
        {"u v": "u z v", "u y": "u x y", "x v": "x y v"},
        {"b1p", "b2p", "J2", "J4p", "TW1p", "TWA"},
        {"J4", "JC"},
    ),
    4: (
        "u v x y z1 z2 z3",
        {
            "u v": "u z1 z2 z3 v",
            "u y": "u x z1 z2 y",
            "x v": "x z2 z3 y v",
            "u x": "u z1 x",
            "x y": "x z2 y",
            "y v": "y z3 v",
            "z1 y": "z1 z2 y",
            "z3 x": "z3 z2 x",
        },
        {"b1p", "b2p", "J2", "J4", "TW1p", "TWA"},
        {"J4p"},
    ),
    5: (
        "u v w x y z",
        {
            "u v": "u y x v",
            "u y": "u x y",
            "u w": "u x w",
            "x v": "x y v",
            "u z": "u x z",
            "z v": "z y v",
            "w v": "w y v",
        },
        {"b1p", "b2p", "J2", "J4", "J4p", "TWA"},
        {"TW1p"},
    ),
    6: (
        "u v x y",
        {"u v": ALL, "x v": "x y v"},
        {"b1p", "b2p", "J2", "J4", "J4p", "TW1p"},
        {"TWA", "TWC"},
    ),
    7: (
        "u v x y",
        {"u v": "u x v"},
        {"b1p", "b2p", "J4", "J4p", "TWA", "TW1p"},
        {"J2", "tr"},
    ),
    8: (
        "u v w x y z",
        {
            "u v": "u v",
            "u y": "u z x y",
            "u x": "u z x",
            "u w": "u z x y w",
            "z y": "z x y",
            "z w": "z x y w",
            "z v": "z x y w v",
            "x w": "x y w",
            "x v": "x y w v",
            "y v": "y w v",
        },
        {"b2", "J2", "J4", "dh", "TW1", "TW2", "TWC"},
        {"dh1", "JC"},
    ),
}

_FAN_EXPECTED = (
    {"b2", "J2", "J4", "JC", "dh1", "TW1", "TW2", "TWC"},
    {"dh", "pt"},
)


def _build(universe: str, entries: dict) -> TransitFunction:
    names = universe.split()
    ids = {name: i for i, name in enumerate(names)}
    values = {}
    for pair, members in entries.items():
        a, b = (ids[p] for p in pair.split())
        if members == ALL:
            values[(a, b)] = range(len(names))
        else:
            values[(a, b)] = [ids[m] for m in members.split()]
    return make_transit_function(len(names), values, default_pairs=True, labels=names)


def fixture(k: int):
    """Return ``(R, expected_satisfied, expected_violated)`` for example ``k`` in 1..9."""
    if k == 9:
        sat, viol = _FAN_EXPECTED
        return toll_transit(fan3()), set(sat), set(viol)
    if k not in _SPECS:
        raise ContractError(f"fixture index must be in 1..9, got {k}")
    universe, entries, sat, viol = _SPECS[k]
    return _build(universe, entries), set(sat), set(viol)
