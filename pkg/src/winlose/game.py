"""Win-lose bimatrix games and their associated directed strategy graphs.

A win-lose game is a pair of 0/1 payoff matrices of equal shape.  Its
associated graph has one vertex per row and per column; row i points at
column j when the row matrix has a 1 at (i, j), and column j points at
row i when the column matrix does.  A uniform mixture over the row and
column vertices of a suitable cycle of this graph is a Nash equilibrium,
which is what the rest of the package goes looking for.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import NotACycle, ShapeMismatch, SubdividedCycle


class Side(enum.Enum):
    ROW = "row"
    COL = "col"

    def other(self) -> "Side":
        return Side.COL if self is Side.ROW else Side.ROW


@dataclass(frozen=True)
class Vertex:
    """A strategy-graph vertex.  Non-original vertices are helpers added
    while subdividing virtual edges during decomposition."""

    id: int
    side: Side
    original: bool = True
    label: str = ""

    def __post_init__(self):
        if not self.label:
            object.__setattr__(self, "label", f"v{self.id}")


@dataclass(frozen=True)
class WinLoseGame:
    """Row and column payoff matrices with entries in {0, 1}."""

    row_payoffs: tuple[tuple[int, ...], ...]
    col_payoffs: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_lists(row_payoffs, col_payoffs) -> "WinLoseGame":
        return WinLoseGame(
            tuple(tuple(r) for r in row_payoffs),
            tuple(tuple(r) for r in col_payoffs),
        )

    @property
    def rows(self) -> int:
        return len(self.row_payoffs)

    @property
    def cols(self) -> int:
        return len(self.row_payoffs[0]) if self.row_payoffs else 0

    def validate(self) -> None:
        if self.rows == 0 or self.cols == 0:
            raise ShapeMismatch("game must have at least one row and one column")
        for name, mat in (("row", self.row_payoffs), ("column", self.col_payoffs)):
            if len(mat) != self.rows:
                raise ShapeMismatch(f"{name} matrix has {len(mat)} rows, expected {self.rows}")
            for i, row in enumerate(mat):
                if len(row) != self.cols:
                    raise ShapeMismatch(
                        f"{name} matrix row {i} has {len(row)} entries, expected {self.cols}"
                    )
                for j, entry in enumerate(row):
                    if entry not in (0, 1):
                        raise ShapeMismatch(
                            f"{name} matrix entry ({i}, {j}) is {entry!r}, expected 0 or 1"
                        )


@dataclass(frozen=True)
class GameGraph:
    """Immutable directed graph with side-tagged vertices.

    Vertex identity is the integer id; edges are (tail, head) pairs over
    ids.  Adjacency views are cached and iterate in ascending id order so
    every traversal in the package is reproducible.
    """

    vertices: tuple[Vertex, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex ids")
        known = set(ids)
        for (u, v) in self.edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if u not in known or v not in known:
                raise ValueError(f"edge ({u}, {v}) references unknown vertex")
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices, key=lambda v: v.id)))

    @cached_property
    def by_id(self) -> dict[int, Vertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def ids(self) -> tuple[int, ...]:
        return tuple(v.id for v in self.vertices)

    @cached_property
    def out_adj(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v.id: [] for v in self.vertices}
        for (u, w) in sorted(self.edges):
            adj[u].append(w)
        return {u: tuple(ws) for u, ws in adj.items()}

    @cached_property
    def in_adj(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v.id: [] for v in self.vertices}
        for (u, w) in sorted(self.edges):
            adj[w].append(u)
        return {w: tuple(us) for w, us in adj.items()}

    def side(self, vid: int) -> Side:
        return self.by_id[vid].side

    def label(self, vid: int) -> str:
        return self.by_id[vid].label

    def out(self, vid: int) -> tuple[int, ...]:
        return self.out_adj[vid]

    def inn(self, vid: int) -> tuple[int, ...]:
        return self.in_adj[vid]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def subgraph(self, keep: set[int]) -> "GameGraph":
        """Induced subgraph on the given vertex ids (ids preserved)."""
        vs = tuple(v for v in self.vertices if v.id in keep)
        es = frozenset((u, v) for (u, v) in self.edges if u in keep and v in keep)
        return GameGraph(vs, es)

    def undirected_edges(self) -> set[tuple[int, int]]:
        return {(min(u, v), max(u, v)) for (u, v) in self.edges}

    def is_bipartite_by_side(self) -> bool:
        return all(self.side(u) != self.side(v) for (u, v) in self.edges)


@dataclass(frozen=True)
class DirectedCycle:
    """A simple directed cycle, stored with its minimum vertex id first."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise NotACycle("a cycle needs at least two vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise NotACycle("cycle vertices must be distinct")
        k = self.vertices.index(min(self.vertices))
        object.__setattr__(self, "vertices", self.vertices[k:] + self.vertices[:k])

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, vid: int) -> bool:
        return vid in self.vertex_set

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def arcs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def check_in(self, graph: GameGraph) -> None:
        """Raise NotACycle unless every arc exists in the graph."""
        for (u, v) in self.arcs():
            if not graph.has_edge(u, v):
                raise NotACycle(f"missing arc ({u}, {v})")


@dataclass(frozen=True)
class MixedProfile:
    """A mixed-strategy pair with exact rational probabilities."""

    row_probs: tuple[Fraction, ...]
    col_probs: tuple[Fraction, ...]

    def validate(self, game: WinLoseGame | None = None) -> None:
        for name, probs in (("row", self.row_probs), ("column", self.col_probs)):
            if any(p < 0 for p in probs):
                raise ShapeMismatch(f"{name} probabilities must be nonnegative")
            if sum(probs, Fraction(0)) != 1:
                raise ShapeMismatch(f"{name} probabilities must sum to exactly 1")
        if game is not None:
            if len(self.row_probs) != game.rows or len(self.col_probs) != game.cols:
                raise ShapeMismatch(
                    f"profile shape ({len(self.row_probs)}, {len(self.col_probs)}) "
                    f"does not match game shape ({game.rows}, {game.cols})"
                )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a profile for the Nash property.

    Deviation payoffs list, for every pure strategy, the payoff it would
    earn against the opponent's mixture; the profile is accepted when no
    pure deviation beats the equilibrium payoff on either side.
    """

    accept: bool
    row_value: Fraction
    col_value: Fraction
    row_deviation_payoffs: tuple[Fraction, ...]
    col_deviation_payoffs: tuple[Fraction, ...]

    def beating_deviations(self) -> tuple[list[int], list[int]]:
        rows = [i for i, p in enumerate(self.row_deviation_payoffs) if p > self.row_value]
        cols = [j for j, p in enumerate(self.col_deviation_payoffs) if p > self.col_value]
        return rows, cols


def build_graph(game: WinLoseGame) -> GameGraph:
    """Associated graph: row i is vertex i, column j is vertex rows + j."""
    game.validate()
    rows, cols = game.rows, game.cols
    vertices = tuple(
        [Vertex(i, Side.ROW, True, f"r{i + 1}") for i in range(rows)]
        + [Vertex(rows + j, Side.COL, True, f"c{j + 1}") for j in range(cols)]
    )
    edges = set()
    for i in range(rows):
        for j in range(cols):
            if game.row_payoffs[i][j]:
                edges.add((i, rows + j))
            if game.col_payoffs[i][j]:
                edges.add((rows + j, i))
    return GameGraph(vertices, frozenset(edges))


def cycle_to_profile(graph: GameGraph, cycle: DirectedCycle) -> MixedProfile:
    """Uniform mixture over the cycle's row and column vertices.

    The graph must be one produced by build_graph for the target game so
    that vertex ids map back to strategy indices.
    """
    cycle.check_in(graph)
    for vid in cycle.vertices:
        if not graph.by_id[vid].original:
            raise SubdividedCycle(f"cycle contains helper vertex {graph.label(vid)}")
    row_ids = [v.id for v in graph.vertices if v.side is Side.ROW and v.original]
    col_ids = [v.id for v in graph.vertices if v.side is Side.COL and v.original]
    row_index = {vid: k for k, vid in enumerate(row_ids)}
    col_index = {vid: k for k, vid in enumerate(col_ids)}
    on_rows = [vid for vid in cycle.vertices if graph.side(vid) is Side.ROW]
    on_cols = [vid for vid in cycle.vertices if graph.side(vid) is Side.COL]
    if not on_rows or not on_cols:
        raise NotACycle("cycle must touch both sides of the game")
    row_probs = [Fraction(0)] * len(row_ids)
    col_probs = [Fraction(0)] * len(col_ids)
    for vid in on_rows:
        row_probs[row_index[vid]] = Fraction(1, len(on_rows))
    for vid in on_cols:
        col_probs[col_index[vid]] = Fraction(1, len(on_cols))
    return MixedProfile(tuple(row_probs), tuple(col_probs))


def pure_profile(game: WinLoseGame, row: int, col: int) -> MixedProfile:
    row_probs = tuple(Fraction(1) if i == row else Fraction(0) for i in range(game.rows))
    col_probs = tuple(Fraction(1) if j == col else Fraction(0) for j in range(game.cols))
    return MixedProfile(row_probs, col_probs)


def expected_payoffs(game: WinLoseGame, profile: MixedProfile) -> tuple[Fraction, Fraction]:
    """Exact expected payoffs (row player, column player)."""
    game.validate()
    profile.validate(game)
    row_value = Fraction(0)
    col_value = Fraction(0)
    for i, xi in enumerate(profile.row_probs):
        if xi == 0:
            continue
        for j, yj in enumerate(profile.col_probs):
            if yj == 0:
                continue
            w = xi * yj
            row_value += w * game.row_payoffs[i][j]
            col_value += w * game.col_payoffs[i][j]
    return row_value, col_value


def verify_nash(game: WinLoseGame, profile: MixedProfile) -> VerificationReport:
    """Check the Nash property against every pure deviation."""
    row_value, col_value = expected_payoffs(game, profile)
    row_dev = []
    for i in range(game.rows):
        payoff = sum(
            (yj * game.row_payoffs[i][j] for j, yj in enumerate(profile.col_probs) if yj),
            Fraction(0),
        )
        row_dev.append(payoff)
    col_dev = []
    for j in range(game.cols):
        payoff = sum(
            (xi * game.col_payoffs[i][j] for i, xi in enumerate(profile.row_probs) if xi),
            Fraction(0),
        )
        col_dev.append(payoff)
    accept = all(p <= row_value for p in row_dev) and all(p <= col_value for p in col_dev)
    return VerificationReport(accept, row_value, col_value, tuple(row_dev), tuple(col_dev))
