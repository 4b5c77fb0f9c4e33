"""Combining per-component cycles into one cycle of the game graph.

The decomposition tree is first pruned: a separating pair both of whose
vertices receive real edges from a single off-pair vertex keeps only its
link to that vertex's component.  Each component then contributes one
cycle, tree edges survive only where the cycle actually runs along the
pair's virtual path, and every surviving pair keeps exactly two links
whose cycles cross it in opposite directions.  What remains are paths;
folding a path joins neighbouring cycles at their shared pair, dropping
both virtual copies, until a cycle made of real edges only is left.  The
result is verified against the game graph, and a failed verification
triggers an exhaustive re-search over every component's full cycle set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .digraph import is_induced_cycle, is_undominated
from .errors import (
    GuaranteeViolation,
    StitchDirectionMismatch,
    StitchSelectionFailed,
    StitchVerificationError,
)
from .game import DirectedCycle, GameGraph
from .solvers import component_uics, solve_component, traversed_virtuals
from .tricon import Component, SeparatingPair, TriconnectedTree


@dataclass(frozen=True)
class PairDomination:
    """A pair vertex-pair dominated from inside one component."""

    pair: SeparatingPair
    dominator: int
    component: int


@dataclass(frozen=True)
class PrunedForest:
    tree: TriconnectedTree
    edges: tuple[tuple[int, SeparatingPair], ...]
    dominations: tuple[PairDomination, ...]


@dataclass(frozen=True)
class StitchPath:
    """Alternating component/pair walk with the data needed to fold it.

    components and cycles run left to right; pairs[i] sits between
    components[i] and components[i+1]; directions[i] is the order in
    which components[i]'s cycle runs along pairs[i]'s virtual path (the
    right-hand neighbour runs it the other way).
    """

    components: tuple[int, ...]
    pairs: tuple[SeparatingPair, ...]
    cycles: tuple[DirectedCycle, ...]
    directions: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.components or len(self.cycles) != len(self.components):
            raise ValueError("one cycle per component required")
        if len(self.pairs) != len(self.components) - 1 or \
                len(self.directions) != len(self.pairs):
            raise ValueError("pair sequence must interleave the components")


def traversal_map(
    component: Component, cycle: DirectedCycle
) -> dict[SeparatingPair, tuple[int, int]]:
    """Which separating pairs the cycle runs along, and in which order."""
    out: dict[SeparatingPair, tuple[int, int]] = {}
    for ve in traversed_virtuals(component, cycle):
        if ve.pair in out and out[ve.pair] != ve.direction:
            raise GuaranteeViolation(
                "cycle runs along both directions of one separating pair"
            )
        out[ve.pair] = ve.direction
    return out


def prune_by_pair_domination(tree: TriconnectedTree, graph: GameGraph) -> PrunedForest:
    """Detach each dominated pair from every component but the one
    holding its dominating vertex (lowest component id on ties)."""
    kept: list[tuple[int, SeparatingPair]] = []
    records: list[PairDomination] = []
    for pair in tree.pairs:
        (u, v) = pair.ends()
        hit: tuple[int, int] | None = None
        for comp in tree.components_on(pair):
            for w in sorted(comp.vertices):
                if w in (u, v):
                    continue
                if graph.has_edge(w, u) and graph.has_edge(w, v):
                    if hit is None or comp.cid < hit[0]:
                        hit = (comp.cid, w)
                    break
        if hit is None:
            kept.extend((cid, p) for (cid, p) in tree.tree_edges if p == pair)
        else:
            kept.append((hit[0], pair))
            records.append(PairDomination(pair, hit[1], hit[0]))
    return PrunedForest(tree, tuple(sorted(kept)), tuple(records))


def _pair_selections(
    used: dict[SeparatingPair, list[int]],
    trav: dict[int, dict[SeparatingPair, tuple[int, int]]],
    real_bonds: dict[SeparatingPair, int],
) -> dict[SeparatingPair, tuple[int, int]]:
    """Two opposite-direction components per multiply-linked pair, lowest
    ids first; pairs with one link or a single direction are dropped.

    A pair backed by a bond with a real arc must stitch through that
    bond: any other junction leaves the real arc as a chord of the
    folded cycle.  Such a pair is dropped when the bond cannot take
    part or no partner crosses the other way."""
    chosen: dict[SeparatingPair, tuple[int, int]] = {}
    for pair in sorted(used):
        cids = used[pair]
        if pair in real_bonds:
            bond = real_bonds[pair]
            if bond not in cids:
                continue
            want = (trav[bond][pair][1], trav[bond][pair][0])
            partners = [c for c in sorted(cids) if trav[c][pair] == want]
            if partners:
                chosen[pair] = (bond, partners[0])
            continue
        if len(cids) < 2:
            continue
        by_dir: dict[tuple[int, int], list[int]] = {}
        for cid in sorted(cids):
            by_dir.setdefault(trav[cid][pair], []).append(cid)
        if len(by_dir) < 2:
            continue
        dirs = sorted(by_dir)
        chosen[pair] = (by_dir[dirs[0]][0], by_dir[dirs[1]][0])
    return chosen


def reduce_to_paths(
    forest: PrunedForest, cycles: dict[int, DirectedCycle | None]
) -> list[StitchPath]:
    """Turn the pruned tree into foldable paths.

    A tree edge survives only if the component's cycle runs along the
    pair; each surviving pair keeps exactly two oppositely-directed
    links.  A path is emitted only when every component on it has all
    its traversed pairs matched, so folding ends in a real cycle.
    Raises StitchSelectionFailed when no path can be built.
    """
    tree = forest.tree
    trav: dict[int, dict[SeparatingPair, tuple[int, int]]] = {}
    for comp in tree.components:
        z = cycles.get(comp.cid)
        if z is not None:
            trav[comp.cid] = traversal_map(comp, z)

    used: dict[SeparatingPair, list[int]] = {}
    for (cid, pair) in forest.edges:
        if cid in trav and pair in trav[cid]:
            used.setdefault(pair, []).append(cid)
    real_bonds = {
        comp.distinct_pairs()[0]: comp.cid
        for comp in tree.components
        if comp.shape == "bond" and comp.real_arcs
    }
    chosen = _pair_selections(used, trav, real_bonds)

    adj: dict[int, list[SeparatingPair]] = {}
    for pair, (c1, c2) in chosen.items():
        adj.setdefault(c1, []).append(pair)
        adj.setdefault(c2, []).append(pair)

    paths: list[StitchPath] = []
    # lone components first: cycles that are already free of virtual paths
    for cid in sorted(trav):
        if not trav[cid] and cid not in adj:
            paths.append(StitchPath((cid,), (), (cycles[cid],), ()))

    seen: set[int] = set()
    for start in sorted(adj):
        if start in seen or len(adj[start]) != 1:
            continue
        walk = [start]
        walk_pairs: list[SeparatingPair] = []
        prev_pair: SeparatingPair | None = None
        good = True
        while True:
            cur = walk[-1]
            seen.add(cur)
            nxt = [p for p in adj[cur] if p != prev_pair]
            if len(adj[cur]) > 2 or set(adj[cur]) != set(trav[cur]):
                good = False
                break
            if not nxt:
                break
            prev_pair = nxt[0]
            walk_pairs.append(prev_pair)
            (c1, c2) = chosen[prev_pair]
            walk.append(c2 if c1 == cur else c1)
        if not good:
            seen.update(walk)
            continue
        if walk[0] > walk[-1]:
            walk.reverse()
            walk_pairs.reverse()
        paths.append(
            StitchPath(
                tuple(walk),
                tuple(walk_pairs),
                tuple(cycles[c] for c in walk),
                tuple(trav[walk[i]][p] for i, p in enumerate(walk_pairs)),
            )
        )

    if not paths:
        raise StitchSelectionFailed(
            "no component cycles combine into a foldable path"
        )
    paths.sort(key=lambda p: (len(p.components), p.components))
    return paths


def _segment(cycle: DirectedCycle, start: int, stop: int) -> tuple[int, ...]:
    vs = cycle.vertices
    i = vs.index(start)
    out = [start]
    while vs[(i + 1) % len(vs)] != stop:
        i = (i + 1) % len(vs)
        out.append(vs[i])
    return tuple(out)


def stitch_two(
    c1: DirectedCycle,
    c2: DirectedCycle,
    pair: SeparatingPair,
    c1_direction: tuple[int, int],
    c2_direction: tuple[int, int],
) -> DirectedCycle:
    """Join two cycles crossing the pair's virtual paths in opposite
    directions: both virtual runs are dropped and the real remainders
    concatenated at the pair vertices."""
    ends = set(pair.ends())
    if set(c1_direction) != ends or set(c2_direction) != ends:
        raise StitchDirectionMismatch("directions do not run along the pair")
    if c1_direction == c2_direction:
        raise StitchDirectionMismatch(
            f"both cycles cross {pair.ends()} the same way"
        )
    (x, y) = c1_direction
    for c in (c1, c2):
        if x not in c.vertex_set or y not in c.vertex_set:
            raise StitchDirectionMismatch("a cycle misses the pair vertices")
    # c1 runs x->...->y along the virtual path, so its real part is y->..->x
    return DirectedCycle(_segment(c1, y, x) + _segment(c2, x, y))


def stitch_path(path: StitchPath, graph: GameGraph) -> DirectedCycle:
    """Fold a path left to right and verify the outcome in the graph."""
    running = path.cycles[0]
    for i, pair in enumerate(path.pairs):
        d_left = path.directions[i]
        d_right = (d_left[1], d_left[0])
        running = stitch_two(running, path.cycles[i + 1], pair, d_left, d_right)
    for x in running.vertices:
        if x not in graph.by_id:
            raise StitchVerificationError(
                f"stitched cycle keeps synthetic vertex {x}"
            )
    if not is_induced_cycle(graph, running):
        raise StitchVerificationError(
            "stitched cycle is not an induced cycle of the game graph"
        )
    if not is_undominated(graph, running):
        raise StitchVerificationError("stitched cycle is dominated")
    return running


def _try(
    forest: PrunedForest,
    cycles: dict[int, DirectedCycle | None],
    graph: GameGraph,
) -> tuple[DirectedCycle, StitchPath] | None:
    try:
        paths = reduce_to_paths(forest, cycles)
    except StitchSelectionFailed:
        return None
    for path in paths:
        try:
            return stitch_path(path, graph), path
        except (StitchVerificationError, StitchDirectionMismatch):
            continue
    return None


def select_and_stitch(
    tree: TriconnectedTree, graph: GameGraph
) -> tuple[DirectedCycle, StitchPath]:
    """End of the pipeline: prune, pick one cycle per component, reduce,
    fold, verify.  When the deterministic first choice fails, re-search
    over the components' complete cycle sets before giving up."""
    forest = prune_by_pair_domination(tree, graph)
    first: dict[int, DirectedCycle | None] = {}
    for comp in tree.components:
        try:
            first[comp.cid] = solve_component(comp)
        except GuaranteeViolation:
            first[comp.cid] = None
    got = _try(forest, first, graph)
    if got is not None:
        return got

    pools: list[list[DirectedCycle | None]] = []
    cids = sorted(first)
    for cid in cids:
        options = list(component_uics(tree.component(cid)))
        pools.append(options if options else [None])
    for combo in itertools.product(*pools):
        candidate = dict(zip(cids, combo))
        if candidate == first:
            continue
        got = _try(forest, candidate, graph)
        if got is not None:
            return got
    raise StitchVerificationError(
        "no combination of component cycles folds into a verified cycle"
    )
