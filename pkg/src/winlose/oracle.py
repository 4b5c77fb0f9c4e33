"""Brute-force equilibrium search for desk-scale games.

Two independent strategies: exhaustive enumeration of undominated induced
cycles in the strategy graph (any such cycle certifies an equilibrium),
and classical support enumeration with exact rational linear solves.  The
package's structural pipeline is cross-checked against this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import GuaranteeViolation, TooLarge
from .game import (
    DirectedCycle,
    GameGraph,
    MixedProfile,
    VerificationReport,
    WinLoseGame,
    build_graph,
    cycle_to_profile,
    verify_nash,
)

UIC_VERTEX_LIMIT = 16
SUPPORT_SIDE_LIMIT = 8


def enumerate_uic(graph: GameGraph, limit: int = UIC_VERTEX_LIMIT) -> list[DirectedCycle]:
    """Every undominated induced directed cycle, by exhaustive subset scan.

    A vertex subset carries an induced cycle exactly when each member has
    in- and out-degree 1 inside the subset and following successors from
    any member walks the whole subset.  Results are sorted by (length,
    vertex tuple).  Raises TooLarge above the vertex limit.
    """
    n = len(graph.vertices)
    if n > limit:
        raise TooLarge(f"{n} vertices exceeds the exhaustive-scan limit of {limit}")
    ids = list(graph.ids)
    pos = {vid: k for k, vid in enumerate(ids)}
    out_mask = [0] * n
    in_mask = [0] * n
    for (u, v) in graph.edges:
        out_mask[pos[u]] |= 1 << pos[v]
        in_mask[pos[v]] |= 1 << pos[u]

    found = []
    for mask in range(3, 1 << n):
        bits = mask.bit_count()
        if bits < 2:
            continue
        ok = True
        m = mask
        while m:
            k = (m & -m).bit_length() - 1
            m &= m - 1
            if (out_mask[k] & mask).bit_count() != 1 or (in_mask[k] & mask).bit_count() != 1:
                ok = False
                break
        if not ok:
            continue
        start = (mask & -mask).bit_length() - 1
        order = [start]
        cur = start
        for _ in range(bits - 1):
            cur = (out_mask[cur] & mask).bit_length() - 1
            order.append(cur)
        cur = (out_mask[cur] & mask).bit_length() - 1
        if cur != start or len(set(order)) != bits:
            continue
        dominated = False
        for k in range(n):
            if mask >> k & 1:
                continue
            if (out_mask[k] & mask).bit_count() >= 2:
                dominated = True
                break
        if dominated:
            continue
        found.append(DirectedCycle(tuple(ids[k] for k in order)))
    return sorted(found, key=lambda c: (len(c), c.vertices))


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over the rationals; free variables pinned to zero.
    Returns None when the system is inconsistent."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [list(rows[i]) + [rhs[i]] for i in range(m)]
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        scale = aug[r][c]
        aug[r] = [x / scale for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivot_of_col[c] = r
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for c, i in pivot_of_col.items():
        x[c] = aug[i][n]
    return x


def _indifference_mixture(
    payoffs,             # opponent-facing payoff lookup: payoffs(i, j)
    supported: tuple[int, ...],
    mixing_over: tuple[int, ...],
) -> tuple[Fraction, ...] | None:
    """Probabilities over `mixing_over` giving every strategy in
    `supported` the same payoff, summing to one; None when impossible or
    negative."""
    n = len(mixing_over)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    first = supported[0]
    for other in supported[1:]:
        rows.append(
            [Fraction(payoffs(first, j) - payoffs(other, j)) for j in mixing_over]
        )
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * n)
    rhs.append(Fraction(1))
    sol = _solve_linear(rows, rhs)
    if sol is None or any(p < 0 for p in sol):
        return None
    return tuple(sol)


def support_enumeration_nash(
    game: WinLoseGame, limit: int = SUPPORT_SIDE_LIMIT
) -> MixedProfile | None:
    """First equilibrium found over support pairs ordered by total size
    then lexicographic position.  Candidate mixtures come from exact
    indifference solves; acceptance is delegated to verify_nash.  Raises
    TooLarge when either side exceeds the limit."""
    game.validate()
    if game.rows > limit or game.cols > limit:
        raise TooLarge(
            f"{game.rows}x{game.cols} exceeds the support-enumeration limit of {limit}"
        )
    all_rows = tuple(range(game.rows))
    all_cols = tuple(range(game.cols))
    for total in range(2, game.rows + game.cols + 1):
        for rsize in range(max(1, total - game.cols), min(game.rows, total - 1) + 1):
            csize = total - rsize
            for rsup in itertools.combinations(all_rows, rsize):
                for csup in itertools.combinations(all_cols, csize):
                    y = _indifference_mixture(
                        lambda i, j: game.row_payoffs[i][j], rsup, csup
                    )
                    if y is None:
                        continue
                    x = _indifference_mixture(
                        lambda j, i: game.col_payoffs[i][j], csup, rsup
                    )
                    if x is None:
                        continue
                    row_probs = [Fraction(0)] * game.rows
                    col_probs = [Fraction(0)] * game.cols
                    for k, i in enumerate(rsup):
                        row_probs[i] = x[k]
                    for k, j in enumerate(csup):
                        col_probs[j] = y[k]
                    profile = MixedProfile(tuple(row_probs), tuple(col_probs))
                    if verify_nash(game, profile).accept:
                        return profile
    return None


@dataclass(frozen=True)
class OracleResult:
    profile: MixedProfile
    method: str                      # "cycle" or "support"
    cycle: DirectedCycle | None
    report: VerificationReport


def solve_bruteforce(
    game: WinLoseGame,
    uic_limit: int = UIC_VERTEX_LIMIT,
    support_limit: int = SUPPORT_SIDE_LIMIT,
) -> OracleResult | None:
    """Cycle scan first, support enumeration second.

    Returns None when both methods ran out of candidates; raises TooLarge
    when the instance fits neither method's budget.
    """
    game.validate()
    graph = build_graph(game)
    ran_any = False
    if len(graph.vertices) <= uic_limit:
        ran_any = True
        cycles = enumerate_uic(graph, limit=uic_limit)
        if cycles:
            profile = cycle_to_profile(graph, cycles[0])
            report = verify_nash(game, profile)
            if not report.accept:
                raise GuaranteeViolation(
                    "undominated induced cycle failed equilibrium verification"
                )
            return OracleResult(profile, "cycle", cycles[0], report)
    if game.rows <= support_limit and game.cols <= support_limit:
        ran_any = True
        profile = support_enumeration_nash(game, limit=support_limit)
        if profile is not None:
            return OracleResult(profile, "support", None, verify_nash(game, profile))
    if not ran_any:
        raise TooLarge(
            f"instance exceeds both oracle budgets "
            f"({len(graph.vertices)} vertices, {game.rows}x{game.cols})"
        )
    return None
