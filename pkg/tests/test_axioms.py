import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tolltransit.axioms import AXIOM_IDS, DISTINCT, VARIABLES, brute_force, check_axiom, check_axioms, violates
from tolltransit.catalog import catalog
from tolltransit.errors import ContractError, ParseError, TransitError
from tolltransit.fixtures import fixture
from tolltransit.graphs import complete_graph, cycle_graph
from tolltransit.harness import random_transit
from tolltransit.nondef import build_G_d
from tolltransit.tollwalk import toll_transit
from tolltransit.transit import format_transit, make_transit_function, parse_transit, underlying_graph

from conftest import connected_graphs, transit_functions

UNIVERSAL = ("J2", "J4", "TW1", "TW2", "TW1p", "TW3")


def test_default_pairs():
    r = make_transit_function(2, {}, default_pairs=True)
    assert r(0, 1) == {0, 1}
    assert r(0, 0) == {0}


def test_t3_rejected():
    with pytest.raises(TransitError) as exc:
        make_transit_function(2, {(0, 0): [0, 1]}, default_pairs=True)
    assert exc.value.pair == (0, 0)


def test_t1_rejected_and_missing_pairs():
    with pytest.raises(TransitError) as exc:
        make_transit_function(3, {(0, 2): [0, 1]}, default_pairs=True)
    assert exc.value.pair == (0, 2)
    with pytest.raises(TransitError):
        make_transit_function(2, {})
    with pytest.raises(TransitError):
        make_transit_function(3, {(0, 1): [0, 1], (1, 0): [0, 1, 2]}, default_pairs=True)


def test_example3_accepted():
    r, _, _ = fixture(3)
    lab = {r.label(i): i for i in range(r.n)}
    assert {r.label(w) for w in r(lab["u"], lab["v"])} == {"u", "z", "v"}
    assert r(lab["v"], lab["u"]) == r(lab["u"], lab["v"])


def test_fixture4_symmetric_closure():
    r, _, _ = fixture(4)
    lab = {r.label(i): i for i in range(r.n)}
    assert {r.label(w) for w in r(lab["y"], lab["z1"])} == {"z1", "z2", "y"}


def test_underlying_graph_examples():
    assert underlying_graph(toll_transit(cycle_graph(5))) == cycle_graph(5)
    assert underlying_graph(make_transit_function(4, {}, default_pairs=True)) == complete_graph(4)
    r, _, _ = fixture(1)
    g = underlying_graph(r)
    pairs = {frozenset((r.label(a), r.label(b))) for a, b in g.edges()}
    listed = {frozenset(p) for p in (("u", "v"), ("z", "v"), ("x", "v"), ("u", "z"), ("u", "y"), ("z", "y"))}
    everything = {frozenset((a, b)) for a in "uvzxy" for b in "uvzxy" if a < b}
    assert pairs == everything - listed
    assert pairs == {frozenset(p) for p in (("u", "x"), ("x", "z"), ("x", "y"), ("y", "v"))}


def test_transit_file_round_trip():
    r, _, _ = fixture(4)
    text = format_transit(r)
    back = parse_transit(text)
    assert back == r
    assert parse_transit("# c\n3\n0 2 : 0 1 2\n")(0, 2) == {0, 1, 2}


@pytest.mark.parametrize(
    "text, line",
    [("x\n", 1), ("3\n0 2 0 1 2\n", 2), ("3\n0 2 : 0 1 2\n2 0 : 0 2\n", 3), ("3\n0 2 : 1\n", 2)],
)
def test_transit_file_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_transit(text)
    assert exc.value.line == line


def test_c4_violates_jc_with_consecutive_witness():
    g = catalog("C4")
    v = check_axiom(toll_transit(g), "JC")
    assert not v.satisfied
    u, x, y, w = v.witness
    assert g.has_edge(u, x) and g.has_edge(x, y) and g.has_edge(y, w)
    assert len({u, x, y, w}) == 4


def test_c6_violates_twc():
    assert not check_axiom(toll_transit(catalog("C6")), "TWC").satisfied


def test_example1_b1p_witness():
    r, _, _ = fixture(1)
    v = check_axiom(r, "b1p")
    assert not v.satisfied
    assert {r.label(w) for w in v.witness} == {"u", "z", "v"}


def test_g2_is_scant():
    assert check_axiom(toll_transit(build_G_d(2)), "SP").satisfied


def test_check_axioms_batch():
    r, _, _ = fixture(6)
    got = [v.satisfied for v in check_axioms(r, ["TW1p", "TWA", "TWC"])]
    assert got == [True, False, False]
    assert check_axioms(r, []) == []
    assert all(v.satisfied for v in check_axioms(toll_transit(catalog("path:4")), ["JC", "tr"]))


def test_unknown_axiom():
    r = toll_transit(catalog("C4"))
    with pytest.raises(ContractError):
        check_axiom(r, "ba")
    with pytest.raises(ContractError):
        check_axioms(r, ["JC", "nope"])


@pytest.mark.parametrize("k", [5, 6, 7, 9])
def test_fixture_reproduces_expected_sets(k):
    r, sat, viol = fixture(k)
    for a in sat:
        assert check_axiom(r, a).satisfied, (k, a)
    for a in viol:
        assert not check_axiom(r, a).satisfied, (k, a)


def test_fixture_expected_sets_cover_examples():
    assert {"TW1p"} <= fixture(5)[2]
    assert {"b1p", "b2p", "J2", "J4", "J4p", "TWA"} <= fixture(5)[1]
    assert {"J2", "tr"} <= fixture(7)[2]
    r9, _, viol9 = fixture(9)
    assert r9 == toll_transit(catalog("fan3"))
    assert {"dh", "pt"} <= viol9


# Transcribed verbatim, these fixtures break axioms they are listed as satisfying.
# Each witness below was confirmed by hand against the literal axiom text.
KNOWN_DEVIATIONS = {
    1: {"TWA": {"u": "u", "v": "v", "x": "z"}},
    2: {
        "J2": {"u": "u", "v": "w", "x": "x"},
        "TW1p": {"u": "u", "v": "v", "x": "y", "w": "w", "y": "y", "z": "w"},
        "TWA": {"u": "u", "v": "v", "x": "y"},
    },
    3: {"J2": {"u": "u", "v": "y", "x": "z"}},
    4: {"J2": {"u": "u", "v": "x", "x": "z2"}, "TWA": {"u": "u", "v": "y", "x": "x"}},
    8: {"J2": {"u": "u", "v": "w", "x": "v"}},
}


@pytest.mark.parametrize("k", sorted(KNOWN_DEVIATIONS))
def test_fixture_known_deviations(k):
    r, sat, viol = fixture(k)
    for a in viol:
        assert not check_axiom(r, a).satisfied
    found = {}
    for a in sorted(sat):
        v = check_axiom(r, a)
        if not v.satisfied:
            found[a] = {name: r.label(w) for name, w in v.named_witness().items()}
            assert violates(r, a, v.witness)
    assert found == KNOWN_DEVIATIONS[k]


def test_fixture_range():
    with pytest.raises(ContractError):
        fixture(0)
    with pytest.raises(ContractError):
        fixture(10)


def test_every_axiom_has_variables_and_distinctness():
    assert set(AXIOM_IDS) == set(VARIABLES)
    for a, names in DISTINCT.items():
        assert set(names) <= set(VARIABLES[a])


SMALL = [a for a in AXIOM_IDS if a != "TW1p"]


@settings(max_examples=120, deadline=None)
@given(transit_functions(max_n=5))
def test_fast_checkers_match_brute_force(r):
    for a in SMALL:
        assert check_axiom(r, a) == brute_force(r, a), a


@settings(max_examples=40, deadline=None)
@given(transit_functions(max_n=4))
def test_fast_tw1p_matches_brute_force(r):
    assert check_axiom(r, "TW1p") == brute_force(r, "TW1p")


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=3, max_n=6))
def test_fast_checkers_match_brute_force_on_graphs(g):
    r = toll_transit(g)
    for a in SMALL:
        assert check_axiom(r, a) == brute_force(r, a), a


@settings(max_examples=150, deadline=None)
@given(transit_functions(max_n=5))
def test_witness_reevaluates(r):
    for a in AXIOM_IDS:
        v = check_axiom(r, a)
        assert v.satisfied == (v.witness is None)
        if v.witness is not None:
            assert violates(r, a, v.witness)
            assert len(v.witness) == len(VARIABLES[a])


@settings(max_examples=200, deadline=None)
@given(transit_functions(max_n=5))
def test_j0_implies_jc_and_j3_implies_j4(r):
    if check_axiom(r, "J0").satisfied:
        assert check_axiom(r, "JC").satisfied
    if check_axiom(r, "J3").satisfied:
        assert check_axiom(r, "J4").satisfied
        assert check_axiom(r, "J4p").satisfied


def test_j0_and_j3_premises_occur():
    rng = random.Random(3)
    hits = {"J0": 0, "J3": 0}
    for _ in range(400):
        r = random_transit(rng.randint(3, 5), rng.choice([0.1, 0.5]), rng)
        for a in hits:
            hits[a] += check_axiom(r, a).satisfied
    assert all(v > 10 for v in hits.values())


@settings(max_examples=200, deadline=None)
@given(transit_functions(min_n=3, max_n=5))
def test_tw1_and_tw2_specialize_to_tw1p(r):
    v1 = check_axiom(r, "TW1")
    if not v1.satisfied:
        u, v, x, y, z = v1.witness
        assert violates(r, "TW1p", (u, v, x, y, y, z))
        if not r.is_edge(u, z):
            assert violates(r, "TW1p", (u, v, x, z, y, z))
    v2 = check_axiom(r, "TW2")
    if not v2.satisfied:
        u, v, x, z = v2.witness
        assert violates(r, "TW1p", (u, v, x, x, x, z))
        if not r.is_edge(u, z):
            assert violates(r, "TW1p", (u, v, x, z, x, z))


def test_specialization_premise_occurs():
    rng = random.Random(5)
    seen = 0
    for _ in range(300):
        r = random_transit(rng.randint(4, 5), 0.3, rng)
        seen += not check_axiom(r, "TW1").satisfied
    assert seen > 0


@settings(max_examples=50, deadline=None)
@given(transit_functions(max_n=5), st.sampled_from(AXIOM_IDS))
def test_witness_determinism(r, a):
    first = check_axiom(r, a)
    again = check_axiom(parse_transit(format_transit(r)), a)
    assert first == again


def test_universal_axioms_on_corpus(corpus6):
    for g in corpus6:
        r = toll_transit(g)
        for a in UNIVERSAL:
            assert check_axiom(r, a).satisfied, (g, a)
