import networkx as nx
import pytest

from tolltransit.catalog import catalog
from tolltransit.errors import ContractError, DisconnectedGraphError, ParseError
from tolltransit.fixtures import fixture
from tolltransit.graphs import Graph, complete_graph, to_graph6
from tolltransit.harness import (
    CHAR_AXIOMS,
    THEOREM_IDS,
    canonical_code,
    corpus,
    enumerate_graphs,
    induced_path_lemma_check,
    probe_converse,
    read_corpus,
    sweep,
    verify_theorem,
)
from tolltransit.axioms import check_axiom
from tolltransit.classes import is_chordal, is_distance_hereditary, is_ptolemaic
from tolltransit.tollwalk import toll_transit


def test_theorem_ids():
    assert len(THEOREM_IDS) == 16
    assert CHAR_AXIOMS["char-atfree"] == ("b1p", "b2p", "J2", "J4", "J4p", "TW1p", "TWA")


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_enumeration_counts(n, count):
    assert len(enumerate_graphs(n)) == count


@pytest.mark.slow
def test_enumeration_n7():
    assert len(enumerate_graphs(7)) == 853


def test_enumeration_matches_atlas():
    atlas = [h for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= 6 and nx.is_connected(h)]
    ours = {canonical_code(g) for g in corpus(6)}
    theirs = {canonical_code(Graph(h.number_of_nodes(), list(h.edges()))) for h in atlas}
    assert ours == theirs
    assert len(ours) == len(atlas)


def test_enumeration_is_deterministic():
    assert [to_graph6(g) for g in enumerate_graphs(5)] == [to_graph6(g) for g in enumerate_graphs(5)]


def test_enumeration_limits():
    with pytest.raises(ContractError):
        enumerate_graphs(8)


def test_corpus_file(tmp_path):
    path = tmp_path / "c.g6"
    path.write_text("# small\nC~\nBw\n")
    assert [g.n for g in read_corpus(path)] == [4, 3]
    assert enumerate_graphs(4, path) == [complete_graph(4)]
    bad = tmp_path / "bad.g6"
    bad.write_text("C~\nA?\n")
    with pytest.raises(ContractError):
        read_corpus(bad)
    broken = tmp_path / "broken.g6"
    broken.write_text("C~\nC\n")
    with pytest.raises(ParseError) as exc:
        read_corpus(broken)
    assert exc.value.line == 2
    with pytest.raises(ContractError):
        read_corpus(tmp_path / "missing.g6")


def test_verify_theorem_examples():
    c = verify_theorem("thm-jc-chordal", catalog("C4"))
    assert (c.left, c.right, c.agree) == (False, False, True)
    c = verify_theorem("thm-jc-chordal", complete_graph(3))
    assert (c.left, c.right, c.agree) == (True, True, True)
    c = verify_theorem("thm-dh-dh1-dh", catalog("house"))
    assert (c.left, c.right, c.agree) == (False, False, True)
    with pytest.raises(DisconnectedGraphError):
        verify_theorem("thm-jc-chordal", Graph(2))
    with pytest.raises(ContractError):
        verify_theorem("thm-nope", complete_graph(3))


def test_sweep_examples():
    for tid, n in (("thm-jc-chordal", 6), ("cor-b1p-atfree", 6), ("lem-tr-trianglefree", 5)):
        rep = sweep(tid, n)
        assert rep.holds and rep.graphs_checked == len(corpus(n))
    with pytest.raises(ContractError):
        sweep("thm-jc-chordal", 1)


def test_sweep_counts_hypothesis():
    rep = sweep("prop-jc-implies-b2", 5)
    assert rep.holds
    assert 0 < rep.hypothesis_held < rep.graphs_checked


def test_sweep_jobs_deterministic():
    one = sweep("thm-pt-ptolemaic", 5)
    many = sweep("thm-pt-ptolemaic", 5, jobs=2)
    assert (one.graphs_checked, one.hypothesis_held, one.disagreements) == (
        many.graphs_checked,
        many.hypothesis_held,
        many.disagreements,
    )


@pytest.mark.parametrize("tid", THEOREM_IDS)
def test_every_theorem_holds_up_to_six(tid):
    assert sweep(tid, 6).holds


def test_probe_examples():
    rep = probe_converse("char-chordal", 500, 4, seed=1)
    assert rep.holds and rep.trials == 500
    again = probe_converse("char-chordal", 500, 4, seed=1)
    assert (again.satisfied, len(again.disconnected)) == (rep.satisfied, len(rep.disconnected))
    rep = probe_converse("char-chordal", 0, 4, seed=1, inject=[toll_transit(catalog("path:4"))])
    assert rep.satisfied == 1 and rep.holds
    r3, _, _ = fixture(3)
    rep = probe_converse("char-chordal", 0, 4, seed=1, inject=[r3])
    assert rep.satisfied == 0 and rep.holds
    with pytest.raises(ContractError):
        probe_converse("thm-jc-chordal", 10, 4, seed=1)


def test_lemma_examples(corpus6):
    rep = induced_path_lemma_check(catalog("path:5"), "easy1")
    assert rep.precondition and not rep.violations and rep.paths_checked == 10
    for g in corpus6:
        if is_chordal(g).member:
            rep = induced_path_lemma_check(g, "easy1")
            assert rep.precondition and not rep.violations
    # every hypothesis of "easy" holds on C6 (non-adjacent pairs see the whole cycle)
    assert induced_path_lemma_check(catalog("C6"), "easy").precondition
    rep = induced_path_lemma_check(B2_COUNTEREXAMPLE, "easy")
    assert not rep.precondition and rep.failed_axiom.axiom == "J4p" and rep.paths_checked == 0
    with pytest.raises(ContractError):
        induced_path_lemma_check(catalog("C6"), "hard")


def test_lemmas_hold_whenever_hypotheses_do(corpus6):
    for g in corpus6:
        for lemma in ("easy1", "easy", "easydh"):
            rep = induced_path_lemma_check(g, lemma)
            assert not rep.violations, (g, lemma)


def test_pendant_on_middle_of_short_path_is_outside():
    # the inner vertex is adjacent to both ends, so its pendant neighbour is not covered
    g = Graph(4, [(0, 1), (1, 2), (1, 3)])
    assert 3 not in toll_transit(g)(0, 2)
    assert not induced_path_lemma_check(g, "easy1").violations


# A 7-vertex chordal, distance-hereditary, Ptolemaic graph on which b2 fails.
B2_COUNTEREXAMPLE = Graph(7, [(0, 5), (1, 4), (2, 6), (3, 6), (4, 5), (4, 6), (5, 6)])


def test_b2_counterexample_at_seven_vertices():
    g = B2_COUNTEREXAMPLE
    assert is_chordal(g).member and is_distance_hereditary(g).member and is_ptolemaic(g).member
    r = toll_transit(g)
    assert check_axiom(r, "JC").satisfied
    v = check_axiom(r, "b2")
    assert v.witness == (0, 2, 1)
    assert r(0, 2) == {0, 1, 2, 4, 5, 6}
    assert r(0, 1) == set(range(7))
    assert not verify_theorem("prop-jc-implies-b2", g).agree
    assert not verify_theorem("char-chordal", g).agree
