"""Shared fixtures: small hand-checked games and an in-process CLI runner."""
from __future__ import annotations

import contextlib
import io

import pytest

from winlose import Side, Vertex, WinLoseGame, write_game
from winlose.cli import run
from winlose.game import GameGraph


def game(mr, mc) -> WinLoseGame:
    return WinLoseGame.from_lists(mr, mc)


def side_graph(sides: dict[int, Side], arcs) -> GameGraph:
    verts = tuple(Vertex(i, s, True, f"n{i}") for i, s in sorted(sides.items()))
    return GameGraph(verts, frozenset(arcs))


def subdivided_k5() -> GameGraph:
    """Rotational-tournament K5 on rows {0,1,2} and columns {3,4}, every
    branch subdivided to keep the graph bipartite and simple."""
    branch = sorted(
        [(i, (i + 1) % 5) for i in range(5)] + [(i, (i + 2) % 5) for i in range(5)]
    )
    sides = {0: Side.ROW, 1: Side.ROW, 2: Side.ROW, 3: Side.COL, 4: Side.COL}
    arcs: list[tuple[int, int]] = []
    nxt = 5
    for (u, v) in branch:
        if sides[u] is sides[v]:
            sides[nxt] = sides[u].other()
            arcs += [(u, nxt), (nxt, v)]
            nxt += 1
        else:
            sides[nxt] = sides[u].other()
            sides[nxt + 1] = sides[u]
            arcs += [(u, nxt), (nxt, nxt + 1), (nxt + 1, v)]
            nxt += 2
    return side_graph(sides, arcs)


def subdivided_v8() -> GameGraph:
    """Wagner graph, ring forward on 0..7 (even ids rows), each antipodal
    chord i -> i+4 subdivided once."""
    sides = {i: Side.ROW if i % 2 == 0 else Side.COL for i in range(8)}
    arcs = [(i, (i + 1) % 8) for i in range(8)]
    nxt = 8
    for i in range(4):
        sides[nxt] = sides[i].other()
        arcs += [(i, nxt), (nxt, i + 4)]
        nxt += 1
    return side_graph(sides, arcs)


# One 4-cycle r1 -> c1 -> r2 -> c2 -> r1; unique equilibrium is uniform.
PERMUTATION = game([[1, 0], [0, 1]], [[0, 1], [1, 0]])

# M_R = M_C = [[1]]: the digon, a pure equilibrium at (r1, c1).
DIGON = game([[1]], [[1]])

# Two 4-cycles r1c1r2c2 and r2c2r3c3 sharing the arc r2 -> c2.  The
# decomposition is two polygons plus a bond on {r2, c2}.
SHARED_EDGE = game(
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[0, 1, 0], [1, 0, 1], [0, 1, 0]],
)

# A strongly connected orientation of the cube: rows on even corners,
# columns on odd ones, a Hamiltonian cycle r1c1r2c2r4c4r3c3 plus the
# four leftover edges pointing column -> row.
Q3 = game(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]],
)

# Directed 8-cycle r1 c1 r2 c2 r3 c3 r4 c4.
EIGHT_CYCLE = game(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]],
)

# Theta-like graph on columns {c1, c2} with three connections, plus a
# tail c1 -> r4 -> c3 -> r3 giving the dominator r3 of the pair {c1, c2}
# (r3 -> c1 and r3 -> c2 are both real).  Unique equilibrium cycle
# r3 -> c1 -> r4 -> c3.
THETA = game(
    [[0, 1, 0], [1, 0, 0], [1, 1, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 0]],
)

# Orientation of K3,3 with no undominated induced cycle; every entry of
# exactly one matrix is 1, so the associated graph is all of K3,3.
K33 = game(
    [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
    [[1, 1, 0], [1, 0, 1], [0, 1, 1]],
)


@pytest.fixture
def permutation():
    return PERMUTATION


@pytest.fixture
def shared_edge():
    return SHARED_EDGE


@pytest.fixture
def q3():
    return Q3


@pytest.fixture
def theta():
    return THETA


@pytest.fixture
def k33():
    return K33


def run_cli(*argv: str) -> tuple[int, str, str]:
    """Run the CLI in-process; returns (exit status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def cli(tmp_path):
    """CLI runner plus a helper that materializes games as files."""

    def write(name: str, g: WinLoseGame) -> str:
        p = tmp_path / name
        p.write_text(write_game(g))
        return str(p)

    return run_cli, write
