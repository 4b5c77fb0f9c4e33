"""Whole-game solving: preprocessing, decomposition, stitching.

The chain: a mutually winning entry gives a pure equilibrium outright;
an edgeless game is all zeroes and any pure pair works.  Otherwise the
game graph is cut down to a source strongly connected piece (nothing
points into it, so outside strategies never pay more than inside ones),
recursing until the piece is the whole graph.  Biconnected blocks of
that graph are then tried in order: cycles and their dominators never
cross a cut vertex, so a block-local undominated induced cycle is one
of the whole graph.  The first block whose decomposition solves and
stitches yields the equilibrium; the profile is re-verified against the
full game before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import biconnected_components, find_digon, source_sccs
from .errors import GuaranteeViolation, UnsupportedComponent
from .game import (
    DirectedCycle,
    GameGraph,
    MixedProfile,
    WinLoseGame,
    build_graph,
    cycle_to_profile,
    pure_profile,
    verify_nash,
)
from .solvers import UNSUPPORTED, classify
from .stitch import select_and_stitch
from .tricon import decompose, orient_and_subdivide


@dataclass(frozen=True)
class SolveResult:
    profile: MixedProfile
    method: str  # "pure" or "cycle"
    pure: tuple[int, int] | None
    cycle: DirectedCycle | None
    kinds: tuple[str, ...]


def _pure(game: WinLoseGame, row: int, col: int) -> SolveResult:
    return SolveResult(pure_profile(game, row, col), "pure", (row, col), None, ())


def _argmax(values: list[int]) -> int:
    best = 0
    for i, v in enumerate(values):
        if v > values[best]:
            best = i
    return best


def _restrict(
    game: WinLoseGame, rows: list[int], cols: list[int]
) -> WinLoseGame:
    return WinLoseGame.from_lists(
        [[game.row_payoffs[i][j] for j in cols] for i in rows],
        [[game.col_payoffs[i][j] for j in cols] for i in rows],
    )


def _extend(
    game: WinLoseGame, rows: list[int], cols: list[int], inner: SolveResult
) -> SolveResult:
    """Lift a sub-game result back to the full index space."""
    zero = Fraction(0)
    row_probs = [zero] * game.rows
    col_probs = [zero] * game.cols
    for k, i in enumerate(rows):
        row_probs[i] = inner.profile.row_probs[k]
    for k, j in enumerate(cols):
        col_probs[j] = inner.profile.col_probs[k]
    profile = MixedProfile(tuple(row_probs), tuple(col_probs))

    def outer_id(x: int) -> int:
        if x < len(rows):
            return rows[x]
        return game.rows + cols[x - len(rows)]

    pure = None
    if inner.pure is not None:
        pure = (rows[inner.pure[0]], cols[inner.pure[1]])
    cycle = None
    if inner.cycle is not None:
        cycle = DirectedCycle(tuple(outer_id(x) for x in inner.cycle.vertices))
    return SolveResult(profile, inner.method, pure, cycle, inner.kinds)


def _solve_block(
    graph: GameGraph, block: frozenset[tuple[int, int]], fresh_base: int
) -> tuple[DirectedCycle, tuple[str, ...]]:
    members = frozenset(x for e in block for x in e)
    bg = graph.subgraph(members)
    tree = decompose(bg)
    tree = orient_and_subdivide(tree, bg, fresh_base=fresh_base)
    kinds = tuple(classify(c) for c in tree.components)
    if UNSUPPORTED in kinds:
        raise UnsupportedComponent(
            "decomposition contains a component outside the supported classes"
        )
    cycle, _ = select_and_stitch(tree, bg)
    return cycle, kinds


def solve_game(game: WinLoseGame) -> SolveResult:
    """Equilibrium of a win-lose game whose graph decomposes into the
    supported component classes.  Raises UnsupportedComponent otherwise,
    GuaranteeViolation when an internal contract breaks."""
    game.validate()
    result = _solve(game)
    report = verify_nash(game, result.profile)
    if not report.accept:
        raise GuaranteeViolation(
            "solver produced a profile with a beating deviation"
        )
    return result


def _solve(game: WinLoseGame) -> SolveResult:
    graph = build_graph(game)
    digon = find_digon(graph)
    if digon is not None:
        return _pure(game, digon[0], digon[1] - game.rows)

    if not graph.edges:
        return _pure(game, 0, 0)

    source = sorted(source_sccs(graph), key=min)[0]
    if len(source) == 1:
        (v,) = source
        heads = graph.out(v)
        if heads:
            w = heads[0]
            if v < game.rows:
                return _pure(game, v, w - game.rows)
            return _pure(game, w, v - game.rows)
        # isolated vertex: drop it and extend with zero weight
        rows = [i for i in range(game.rows) if i != v]
        cols = [j for j in range(game.cols) if j + game.rows != v]
        if not rows or not cols:
            return _pure(game, 0, _argmax(list(game.col_payoffs[0])))
        return _extend(game, rows, cols, _solve(_restrict(game, rows, cols)))

    if len(source) < len(graph.ids):
        rows = sorted(i for i in source if i < game.rows)
        cols = sorted(j - game.rows for j in source if j >= game.rows)
        return _extend(game, rows, cols, _solve(_restrict(game, rows, cols)))

    fresh_base = max(graph.ids) + 1
    failures: list[Exception] = []
    blocks = sorted(biconnected_components(graph), key=lambda b: sorted(b))
    for block in blocks:
        try:
            cycle, kinds = _solve_block(graph, block, fresh_base)
        except (UnsupportedComponent, GuaranteeViolation) as exc:
            failures.append(exc)
            continue
        return SolveResult(
            cycle_to_profile(graph, cycle), "cycle", None, cycle, kinds
        )
    for exc in failures:
        if isinstance(exc, UnsupportedComponent):
            raise exc
    if failures:
        raise failures[0]
    raise GuaranteeViolation("strongly connected graph has no blocks")
