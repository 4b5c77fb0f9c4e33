from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from winlose import (
    MixedProfile,
    ParseError,
    WinLoseGame,
    parse_game,
    parse_profile,
    write_game,
    write_profile,
)
from winlose.fileio import format_fraction


def test_parse_one_by_one():
    g = parse_game("1 1\n1\n1\n")
    assert g.row_payoffs == ((1,),) and g.col_payoffs == ((1,),)


def test_parse_permutation():
    g = parse_game("2 2\n1 0\n0 1\n0 1\n1 0\n")
    assert g.row_payoffs == ((1, 0), (0, 1))
    assert g.col_payoffs == ((0, 1), (1, 0))


def test_parse_rejects_out_of_range_entry():
    with pytest.raises(ParseError) as e:
        parse_game("2 2\n1 2\n0 1\n0 1\n1 0\n")
    msg = str(e.value)
    assert "out of range" in msg
    assert "(line 2, entry 2)" in msg


def test_parse_rejects_bad_header():
    with pytest.raises(ParseError, match="header"):
        parse_game("1\n1\n1\n")
    with pytest.raises(ParseError, match="integers"):
        parse_game("a b\n1\n1\n")
    with pytest.raises(ParseError, match="positive"):
        parse_game("0 2\n")


def test_parse_rejects_wrong_line_count():
    with pytest.raises(ParseError, match="matrix lines"):
        parse_game("2 2\n1 0\n0 1\n0 1\n")
    # Trailing garbage counts as an extra line.
    with pytest.raises(ParseError, match="matrix lines"):
        parse_game("1 1\n1\n1\njunk\n")


def test_parse_rejects_short_row():
    with pytest.raises(ParseError) as e:
        parse_game("2 2\n1 0\n0\n0 1\n1 0\n")
    assert "line 3" in str(e.value)


def test_parse_empty():
    with pytest.raises(ParseError, match="empty"):
        parse_game("")


def test_format_fraction_always_slashed():
    assert format_fraction(Fraction(1, 2)) == "1/2"
    assert format_fraction(Fraction(1)) == "1/1"
    assert format_fraction(Fraction(0)) == "0/1"
    assert format_fraction(Fraction(6, 14)) == "3/7"


def test_game_round_trip_fixed():
    text = "2 3\n1 0 1\n0 1 0\n0 1 0\n1 0 1\n"
    assert write_game(parse_game(text)) == text


def test_profile_round_trip():
    p = MixedProfile(
        (Fraction(1, 3), Fraction(2, 3)), (Fraction(0), Fraction(1))
    )
    text = write_profile(p)
    assert text == "1/3 2/3\n0/1 1/1\n"
    assert parse_profile(text) == p


def test_parse_profile_rejects_bad_sum():
    with pytest.raises(Exception):
        parse_profile("1/2 1/3\n1/1\n")


def test_parse_profile_rejects_garbage():
    with pytest.raises(ParseError):
        parse_profile("1/2 huh\n1/2 1/2\n")
    with pytest.raises(ParseError, match="two lines"):
        parse_profile("1/1\n")


matrix = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 3).flatmap(
        lambda c: st.tuples(
            st.lists(st.lists(st.sampled_from([0, 1]), min_size=c, max_size=c),
                     min_size=r, max_size=r),
            st.lists(st.lists(st.sampled_from([0, 1]), min_size=c, max_size=c),
                     min_size=r, max_size=r),
        )
    )
)


@given(matrix)
def test_game_write_parse_round_trip(pair):
    mr, mc = pair
    g = WinLoseGame.from_lists(mr, mc)
    assert parse_game(write_game(g)) == g


@given(st.lists(st.integers(0, 5), min_size=1, max_size=4),
       st.lists(st.integers(0, 5), min_size=1, max_size=4))
def test_profile_write_parse_round_trip(rw, cw):
    def norm(ws):
        total = sum(ws)
        if total == 0:
            ws = [1] * len(ws)
            total = len(ws)
        return tuple(Fraction(w, total) for w in ws)

    p = MixedProfile(norm(rw), norm(cw))
    assert parse_profile(write_profile(p)) == p
