import pytest

import circsq


def test_word_operations():
    assert circsq.canonical_rotation("cab") == "abc"
    assert circsq.is_primitive("abab") is False
    assert circsq.primitive_root("abab") == ("ab", 2)
    assert circsq.circular_factors("abac", 2) == ["ab", "ac", "ba", "ca"]
    assert circsq.rational_power("abc", 7) == "abcabca"


def test_square_counts():
    assert circsq.count_squares("aabb", circular=True) == 2
    assert circsq.count_squares("abaabaab") == circsq.count_squares("abaabaab", circular=False)
    w = "abaabbab"
    assert circsq.distinct_squares_circular(w) == circsq.distinct_squares_circular_via_doubling(w)
    assert circsq.odd_even_formula(5, 2) == (2, 3)


def test_rauzy_example():
    g = circsq.build_rauzy_graph("abacabacabac", 1)
    assert len(g.vertices) == 3
    assert len(g.edges) == 4
    assert g.cyclomatic_number() == 2
    assert g.is_weakly_connected()
    circuits = g.circuits()
    assert len(circuits) == 2
    assert sorted(len(c) for c in circuits) == [2, 2]
    assert circsq.split_point("abac") == 1
    assert sum(len(c) for c in circsq.decompose_split("abac", 1)) == 4
    assert g.to_dot().startswith("digraph")


def test_verify_small_sweep():
    report = circsq.verify(alphabet=2, max_len=6)
    assert report["passed"]
    assert circsq.verify(alphabet=2, max_len=6, jobs=2) == report


def test_errors():
    with pytest.raises(ValueError):
        circsq.split_point("abab")
    with pytest.raises(ValueError):
        circsq.verify(checks="no-such-check", alphabet=2, max_len=4)
