from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from winlose import TooLarge, WinLoseGame, build_graph, solve_bruteforce, verify_nash
from winlose.digraph import chordless_cycles, is_undominated
from winlose.oracle import enumerate_uic, support_enumeration_nash

from conftest import DIGON, K33, PERMUTATION, Q3, SHARED_EDGE


def test_enumerate_uic_permutation():
    assert [c.vertices for c in enumerate_uic(build_graph(PERMUTATION))] == [
        (0, 2, 1, 3)]


def test_enumerate_uic_shared_edge():
    found = [c.vertices for c in enumerate_uic(build_graph(SHARED_EDGE))]
    assert found == [(0, 3, 1, 4), (1, 4, 2, 5)]


def test_enumerate_uic_digon():
    assert [c.vertices for c in enumerate_uic(build_graph(DIGON))] == [(0, 1)]


def test_enumerate_uic_empty_on_counterexample():
    assert enumerate_uic(build_graph(K33)) == []


def test_enumerate_uic_limit():
    g = build_graph(WinLoseGame.from_lists([[0] * 9] * 9, [[0] * 9] * 9))
    with pytest.raises(TooLarge):
        enumerate_uic(g)


@settings(deadline=None)
@given(st.lists(st.lists(st.sampled_from([0, 1]), min_size=3, max_size=3),
                min_size=3, max_size=3),
       st.lists(st.lists(st.sampled_from([0, 1]), min_size=3, max_size=3),
                min_size=3, max_size=3))
def test_enumerate_uic_matches_definition(mr, mc):
    g = build_graph(WinLoseGame.from_lists(mr, mc))
    by_scan = {c.vertices for c in enumerate_uic(g)}
    by_definition = {
        c.vertices for c in chordless_cycles(g) if is_undominated(g, c)
    }
    assert by_scan == by_definition


def test_support_enumeration_permutation():
    p = support_enumeration_nash(PERMUTATION)
    assert p is not None
    assert p.row_probs == (Fraction(1, 2), Fraction(1, 2))
    assert verify_nash(PERMUTATION, p).accept


def test_support_enumeration_finds_pure_first():
    p = support_enumeration_nash(DIGON)
    assert p is not None and p.row_probs == (Fraction(1),)


def test_support_enumeration_on_counterexample():
    p = support_enumeration_nash(K33)
    assert p is not None
    assert verify_nash(K33, p).accept


def test_support_enumeration_limit():
    big = WinLoseGame.from_lists([[0] * 9] * 9, [[0] * 9] * 9)
    with pytest.raises(TooLarge):
        support_enumeration_nash(big)


def test_bruteforce_prefers_cycle_method():
    result = solve_bruteforce(PERMUTATION)
    assert result is not None
    assert result.method == "cycle"
    assert result.cycle.vertices == (0, 2, 1, 3)
    assert result.report.accept


def test_bruteforce_falls_back_to_support():
    result = solve_bruteforce(K33)
    assert result is not None
    assert result.method == "support"
    assert result.cycle is None
    assert result.report.accept


def test_bruteforce_q3():
    result = solve_bruteforce(Q3)
    assert result is not None and result.method == "cycle"
    assert verify_nash(Q3, result.profile).accept


def test_bruteforce_too_large_when_no_method_fits():
    big = WinLoseGame.from_lists([[0] * 9] * 9, [[0] * 9] * 9)
    with pytest.raises(TooLarge):
        solve_bruteforce(big)


@settings(deadline=None, max_examples=60)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 2 ** 18 - 1))
def test_bruteforce_always_verified(rows, cols, bits):
    cells = rows * cols
    mr = [[(bits >> (i * cols + j)) & 1 for j in range(cols)]
          for i in range(rows)]
    mc = [[(bits >> (cells + i * cols + j)) & 1 for j in range(cols)]
          for i in range(rows)]
    game = WinLoseGame.from_lists(mr, mc)
    result = solve_bruteforce(game)
    assert result is not None
    assert result.report.accept
    if result.method == "cycle":
        assert result.cycle is not None
