import pytest

import altfree as af


def test_matrix_and_hypergraph_round_trip():
    h = af.OrderedHypergraph(3, [[0, 1], [2]])
    m = af.incidence(h)
    assert m.to_strings() == ["10", "10", "01"]
    assert af.from_incidence(m) == h
    assert af.parse_hypergraph(af.serialize_hypergraph(h)) == h


def test_tree_matches_embedded_matrix():
    m23 = next(e for e in af.corpus_entries() if e["name"] == "m23")
    assert af.incidence(af.build_tree(2, 3)) == m23["matrix"]


def test_alternation_and_freeness():
    h = af.OrderedHypergraph(4, [[0, 2], [1, 3]])
    assert af.alternation_length(h, 0, 1) == 4
    report = af.is_free_ordered(h, 4)
    assert not report["is_free"]
    assert report["witness"] == [0, 1, 2, 3]
    assert af.find_free_ordering(h, 4) is not None


def test_pattern_search():
    m = af.BinaryMatrix(["010", "101"])
    rows, cols = af.contains_pattern(m, af.Pattern.xt(3))
    assert rows == [0, 1]
    assert cols == [0, 1, 2]
    k4 = next(e for e in af.corpus_entries() if e["name"] == "k4")
    assert af.contains_pattern(k4["matrix"], af.Pattern.xt(3)) is None


def test_corpus_verifies():
    outcomes = af.corpus_verify()
    assert len(outcomes) >= 5
    failures = [(n, d) for n, d, ok in outcomes if not ok]
    assert failures == []


def test_coloring_chi4():
    k4 = next(e for e in af.corpus_entries() if e["name"] == "k4")["hypergraph"]
    assert af.proper_coloring(k4, 3, 2) is None
    coloring = af.proper_coloring(k4, 4, 2)
    assert sorted(set(coloring)) == [0, 1, 2, 3]


def test_max_free_uniform_count():
    assert af.max_free_uniform_count(4, 2, 4)["count"] == 5
    assert af.max_free_uniform_count(5, 2, 4)["count"] == 7


def test_budget_exhaustion_raises():
    h = af.build_tree(3, 3)
    with pytest.raises(af.BudgetExhausted):
        af.find_free_ordering(h, 4, node_limit=1)


def test_hitting_sets():
    assert af.shallow_hitting_set(af.build_prefix_union(6, 3), 2) is not None
    assert af.shallow_hitting_set(af.build_tree(3, 3), 2) is None


def test_cli_in_process():
    code, out, err = af.run_cli(["corpus", "verify"])
    assert code == 0 and err == ""
    assert out.count("PASS") == 5
    code, out, _ = af.run_cli(["oracle", "max-uniform", "4", "2", "4"])
    assert code == 0 and out == "5\n"
