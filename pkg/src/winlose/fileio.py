"""Plain-text serialization for games and mixed profiles.

Game files: a header line "rows cols", then `rows` lines for the row
player's matrix and `rows` lines for the column player's, entries 0/1
separated by single spaces.  Profile files: two lines of exact fractions
"p/q" (row mixture, then column mixture).  Writers and parsers round-trip
byte-for-byte up to a trailing newline.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .game import MixedProfile, WinLoseGame

_FRACTION_RE = re.compile(r"^(-?\d+)/(\d+)$")


def _tokenize(text: str) -> list[list[str]]:
    lines = text.split("\n")
    while lines and lines[-1] == "":
        lines.pop()
    return [line.split() for line in lines]


def parse_game(text: str) -> WinLoseGame:
    rows_of_tokens = _tokenize(text)
    if not rows_of_tokens:
        raise ParseError("empty game file", line=1)
    header = rows_of_tokens[0]
    if len(header) != 2:
        raise ParseError(f"header must be 'rows cols', got {len(header)} tokens", line=1)
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("header entries must be integers", line=1) from None
    if rows < 1 or cols < 1:
        raise ParseError("dimensions must be positive", line=1)
    body = rows_of_tokens[1:]
    if len(body) != 2 * rows:
        raise ParseError(
            f"expected {2 * rows} matrix lines, got {len(body)}", line=len(rows_of_tokens)
        )

    def read_matrix(offset: int) -> tuple[tuple[int, ...], ...]:
        out = []
        for i in range(rows):
            tokens = body[offset + i]
            lineno = 2 + offset + i
            if len(tokens) != cols:
                raise ParseError(
                    f"expected {cols} entries, got {len(tokens)}", line=lineno
                )
            entries = []
            for j, tok in enumerate(tokens):
                if tok not in ("0", "1"):
                    raise ParseError(
                        f"entry {tok!r} out of range, expected 0 or 1",
                        line=lineno, column=j + 1,
                    )
                entries.append(int(tok))
            out.append(tuple(entries))
        return tuple(out)

    game = WinLoseGame(read_matrix(0), read_matrix(rows))
    game.validate()
    return game


def write_game(game: WinLoseGame) -> str:
    game.validate()
    lines = [f"{game.rows} {game.cols}"]
    for mat in (game.row_payoffs, game.col_payoffs):
        lines.extend(" ".join(str(e) for e in row) for row in mat)
    return "\n".join(lines) + "\n"


def format_fraction(x: Fraction) -> str:
    """Lowest terms, always with the slash: Fraction(1) -> "1/1"."""
    return f"{x.numerator}/{x.denominator}"


def _parse_fraction_line(tokens: list[str], lineno: int) -> tuple[Fraction, ...]:
    probs = []
    for j, tok in enumerate(tokens):
        m = _FRACTION_RE.match(tok)
        if not m:
            raise ParseError(
                f"bad fraction {tok!r}, expected 'p/q'", line=lineno, column=j + 1
            )
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise ParseError("zero denominator", line=lineno, column=j + 1)
        probs.append(Fraction(num, den))
    if not probs:
        raise ParseError("empty probability line", line=lineno)
    return tuple(probs)


def parse_profile(text: str) -> MixedProfile:
    rows_of_tokens = _tokenize(text)
    if len(rows_of_tokens) != 2:
        raise ParseError(
            f"profile must have exactly two lines, got {len(rows_of_tokens)}", line=1
        )
    profile = MixedProfile(
        _parse_fraction_line(rows_of_tokens[0], 1),
        _parse_fraction_line(rows_of_tokens[1], 2),
    )
    profile.validate()
    return profile


def write_profile(profile: MixedProfile) -> str:
    row_line = " ".join(format_fraction(p) for p in profile.row_probs)
    col_line = " ".join(format_fraction(p) for p in profile.col_probs)
    return row_line + "\n" + col_line + "\n"
