"""Per-component search for undominated induced directed cycles.

Each decomposition component is classified by its suppressed simple graph
(helper chains contracted, antiparallel virtual twins collapsed): bond,
polygon, planar three-connected, or a subdivision of K5 or of the Wagner
graph V8.  The planar kinds are solved by scanning faces of an embedding;
K5 by deleting one carefully chosen edge and solving the planar rest; V8
by a constructive case analysis on the eight-vertex orientation.  Every
candidate is verified inside the full component before it is returned,
and a component-wide induced-cycle scan backs up each special-purpose
routine.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from .digraph import chordless_cycles, is_induced_cycle, is_undominated, is_uic
from .errors import GuaranteeViolation, UnsupportedComponent
from .game import DirectedCycle, GameGraph, Side, Vertex
from .planar import face_walks, is_planar
from .tricon import Component, SeparatingPair, VirtualEdge

POLYGON = "Polygon"
BOND = "Bond"
PLANAR = "Planar3Conn"
K5 = "K5Subdivision"
V8 = "V8Subdivision"
UNSUPPORTED = "Unsupported"


# ---------------------------------------------------------------- shared

def suppressed_edges(component: Component) -> set[tuple[int, int]]:
    """Undirected simple edges over the component's original vertices:
    real arcs flattened, each virtual pair contributing one edge."""
    out = {(min(u, v), max(u, v)) for (u, v) in component.real_arcs}
    out |= {(ve.pair.u, ve.pair.v) for ve in component.virtuals}
    return out


def traversed_virtuals(component: Component, cycle: DirectedCycle) -> list[VirtualEdge]:
    """Virtual paths the cycle runs along, identified by helper membership.
    Helpers have in- and out-degree one, so traversal is all or nothing."""
    members = cycle.vertex_set
    return [
        ve for ve in component.virtuals
        if any(s in members for s in ve.subdividing)
    ]


def has_real_arc(component: Component, cycle: DirectedCycle) -> bool:
    return any(arc in component.real_arcs for arc in cycle.arcs())


def stitchworthy(component: Component, cycle: DirectedCycle) -> bool:
    """A component cycle is worth lifting when it uses at least one real
    arc, or runs along virtual paths of two distinct separating pairs.
    This excludes exactly the spurious cycle formed by one pair's two
    antiparallel virtual paths."""
    if has_real_arc(component, cycle):
        return True
    pairs = {ve.pair for ve in traversed_virtuals(component, cycle)}
    return len(pairs) >= 2


def component_uics(component: Component, graph: GameGraph | None = None) -> list[DirectedCycle]:
    """All undominated induced cycles of the component graph that are
    worth lifting, by exhaustive chordless-cycle search."""
    g = component.graph if graph is None else graph
    out = [
        c for c in chordless_cycles(g)
        if is_undominated(g, c) and stitchworthy(component, c)
    ]
    return sorted(out, key=lambda c: (len(c), c.vertices))


def _strong(arcs, verts) -> bool:
    """Strong connectivity of a small abstract digraph."""
    verts = list(verts)
    if not verts:
        return False
    fwd: dict[int, list[int]] = {v: [] for v in verts}
    bwd: dict[int, list[int]] = {v: [] for v in verts}
    for (u, v) in arcs:
        fwd[u].append(v)
        bwd[v].append(u)
    for adj in (fwd, bwd):
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(verts):
            return False
    return True


def _abstract_induced(arcs, order: tuple[int, ...]) -> bool:
    members = set(order)
    cycle_arcs = {(order[i], order[(i + 1) % len(order)]) for i in range(len(order))}
    if not cycle_arcs <= set(arcs):
        return False
    for (u, v) in arcs:
        if u in members and v in members and (u, v) not in cycle_arcs:
            return False
    return True


def _abstract_undominated(arcs, members: set[int], verts) -> bool:
    for v in verts:
        if v in members:
            continue
        if sum(1 for (x, y) in arcs if x == v and y in members) >= 2:
            return False
    return True


# ---------------------------------------------------------------- classify

def _hamiltonian_orders(adj: dict[int, list[int]], start: int) -> Iterator[list[int]]:
    n = len(adj)
    path = [start]
    on = {start}

    def extend() -> Iterator[list[int]]:
        if len(path) == n:
            if start in adj[path[-1]]:
                yield list(path)
            return
        for w in adj[path[-1]]:
            if w in on:
                continue
            path.append(w)
            on.add(w)
            yield from extend()
            on.discard(w)
            path.pop()

    yield from extend()


def wagner_labeling(und_edges: set[tuple[int, int]]) -> dict[int, int] | None:
    """Isomorphism onto the standard Wagner graph: ring edges {i, i+1 mod
    8} plus the four antipodal chords {i, i+4}.  Returns vertex -> label
    or None."""
    verts = sorted({x for e in und_edges for x in e})
    if len(verts) != 8 or len(und_edges) != 12:
        return None
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for (u, v) in sorted(und_edges):
        adj[u].append(v)
        adj[v].append(u)
    if any(len(ns) != 3 for ns in adj.values()):
        return None
    edge_set = {(min(u, v), max(u, v)) for (u, v) in und_edges}
    for ham in _hamiltonian_orders(adj, verts[0]):
        if all(
            (min(ham[k], ham[(k + 4) % 8]), max(ham[k], ham[(k + 4) % 8])) in edge_set
            for k in range(4)
        ):
            return {ham[k]: k for k in range(8)}
    return None


def classify(component: Component) -> str:
    """Component kind, decided on the suppressed simple graph."""
    originals = component.vertices
    if len(originals) == 2:
        return BOND
    edges = suppressed_edges(component)
    degree = {v: 0 for v in originals}
    for (u, v) in edges:
        degree[u] += 1
        degree[v] += 1
    if all(d == 2 for d in degree.values()):
        return POLYGON
    if len(originals) == 5 and len(edges) == 10:
        return K5
    if wagner_labeling(edges) is not None:
        return V8
    if is_planar(edges):
        return PLANAR
    return UNSUPPORTED


# ---------------------------------------------------------------- planar

def solve_planar(component: Component, graph: GameGraph | None = None) -> DirectedCycle:
    """First face of a planar embedding that is a directed, chordless,
    undominated, liftable cycle.  The optional graph narrows the search
    to a subgraph of the component (used by the K5 routine)."""
    g = component.graph if graph is None else graph
    for walk in face_walks(g.undirected_edges()):
        if len(walk) < 3 or len(set(walk)) != len(walk):
            continue
        for seq in (walk, walk[::-1]):
            arcs = [(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]
            if not all(g.has_edge(u, v) for (u, v) in arcs):
                continue
            cycle = DirectedCycle(tuple(seq))
            if (
                is_induced_cycle(g, cycle)
                and is_undominated(g, cycle)
                and stitchworthy(component, cycle)
            ):
                return cycle
            break
    raise GuaranteeViolation("no face qualifies as an undominated induced cycle")


# ---------------------------------------------------------------- bond

def solve_bond(component: Component) -> DirectedCycle:
    """Real arc plus the antiparallel virtual path."""
    if not component.real_arcs:
        raise GuaranteeViolation("bond without a real arc cannot seed a cycle")
    (a, b) = sorted(component.real_arcs)[0]
    pair = SeparatingPair(a, b)
    back = component.virtual_on(pair, (b, a))
    if back is None:
        raise GuaranteeViolation("bond lacks the return virtual path")
    cycle = DirectedCycle((a, b) + back.subdividing)
    if not is_uic(component.graph, cycle):
        raise GuaranteeViolation("bond cycle failed verification")
    return cycle


# ---------------------------------------------------------------- K5 / V8 shared

def branch_directions(
    component: Component,
) -> dict[tuple[int, int], dict[tuple[int, int], VirtualEdge | None]]:
    """Per suppressed edge, the realizable directions: maps a normalized
    vertex pair to {direction: VirtualEdge or None for a real arc}."""
    out: dict[tuple[int, int], dict[tuple[int, int], VirtualEdge | None]] = {}
    for (u, v) in sorted(component.real_arcs):
        out.setdefault((min(u, v), max(u, v)), {})[(u, v)] = None
    for ve in component.virtuals:
        out.setdefault((ve.pair.u, ve.pair.v), {})[ve.direction] = ve
    return out


def direction_selections(
    branches: dict[tuple[int, int], dict[tuple[int, int], VirtualEdge | None]],
) -> Iterator[dict[tuple[int, int], tuple[int, int]]]:
    """Every way of keeping one direction per suppressed edge, most pairs
    being forced; deterministic order."""
    keys = sorted(branches)
    options = [sorted(branches[k]) for k in keys]
    for combo in itertools.product(*options):
        yield dict(zip(keys, combo))


def _selection_graph(
    component: Component,
    selection: dict[tuple[int, int], tuple[int, int]],
    drop: tuple[int, int] | None = None,
) -> GameGraph:
    """Component subgraph keeping only the selected direction of every
    suppressed edge, optionally dropping one suppressed edge entirely."""
    branches = branch_directions(component)
    arcs: set[tuple[int, int]] = set()
    keep_helpers: set[int] = set()
    for key, direction in selection.items():
        if key == drop:
            continue
        ve = branches[key][direction]
        if ve is None:
            arcs.add(direction)
        else:
            arcs.update(ve.path_arcs())
            keep_helpers.update(ve.subdividing)
    vertices = tuple(
        v for v in component.graph.vertices
        if v.original or v.id in keep_helpers
    )
    return GameGraph(vertices, frozenset(arcs))


def _expand_branch_cycle(
    component: Component,
    selection: dict[tuple[int, int], tuple[int, int]],
    order: tuple[int, ...],
) -> DirectedCycle:
    """Lift a cycle over suppressed vertices into the component graph by
    splicing in the selected virtual paths."""
    branches = branch_directions(component)
    full: list[int] = []
    for i, u in enumerate(order):
        v = order[(i + 1) % len(order)]
        key = (min(u, v), max(u, v))
        ve = branches[key][(u, v)]
        full.append(u)
        if ve is not None:
            full.extend(ve.subdividing)
    return DirectedCycle(tuple(full))


# ---------------------------------------------------------------- K5

def qualifying_removals(arcs: frozenset[tuple[int, int]], colors: dict[int, object]) -> list[tuple[int, int]]:
    """Branch edges whose removal keeps the orientation strongly connected
    while the endpoints share a color or the head is alone in its color."""
    verts = sorted({x for a in arcs for x in a})
    out = []
    for e in sorted(arcs):
        (w1, w2) = e
        same = colors[w1] == colors[w2]
        sole = sum(1 for x in verts if colors[x] == colors[w2]) == 1
        if not (same or sole):
            continue
        if _strong(arcs - {e}, verts):
            out.append(e)
    return out


def k5_removable_edge(
    arcs: frozenset[tuple[int, int]], colors: dict[int, object]
) -> tuple[int, int] | None:
    """First qualifying edge of a strongly connected K5 orientation."""
    found = qualifying_removals(arcs, colors)
    return found[0] if found else None


def find_removable_edge(component: Component) -> tuple[int, int]:
    """Removable branch edge for a K5-subdivision component, taken from
    the first strongly connected one-direction selection."""
    branches = branch_directions(component)
    colors = {v: component.graph.side(v) for v in component.vertices}
    verts = list(component.vertices)
    for selection in direction_selections(branches):
        arcs = frozenset(selection.values())
        if not _strong(arcs, verts):
            continue
        e = k5_removable_edge(arcs, colors)
        if e is not None:
            return e
    raise GuaranteeViolation("no removable edge in any K5 orientation")


def solve_k5(component: Component) -> DirectedCycle:
    """Delete a removable branch edge, solve the planar remainder, and
    keep the first cycle that survives verification in the full component."""
    branches = branch_directions(component)
    colors = {v: component.graph.side(v) for v in component.vertices}
    verts = list(component.vertices)
    for selection in direction_selections(branches):
        arcs = frozenset(selection.values())
        if not _strong(arcs, verts):
            continue
        for e in qualifying_removals(arcs, colors):
            key = (min(e), max(e))
            remainder = _selection_graph(component, selection, drop=key)
            try:
                cycle = solve_planar(component, graph=remainder)
            except GuaranteeViolation:
                continue
            if is_uic(component.graph, cycle) and stitchworthy(component, cycle):
                return cycle
    for cycle in component_uics(component):
        return cycle
    raise GuaranteeViolation("K5 component yielded no undominated induced cycle")


# ---------------------------------------------------------------- V8

def _ring(i: int) -> int:
    return i % 8


def _pattern_four_cycles() -> list[tuple[int, ...]]:
    out = []
    for i in range(8):
        out.append((_ring(i), _ring(i + 1), _ring(i + 5), _ring(i + 4)))
        out.append((_ring(i), _ring(i + 4), _ring(i + 5), _ring(i + 1)))
    return out


def _window_five_cycles() -> list[tuple[int, ...]]:
    out = []
    for i in range(8):
        out.append(tuple(_ring(i + k) for k in range(5)))
        out.append((_ring(i),) + tuple(_ring(i + k) for k in range(4, 0, -1)))
    return out


def _arcs_of(order: tuple[int, ...]) -> list[tuple[int, int]]:
    return [(order[i], order[(i + 1) % len(order)]) for i in range(len(order))]


def _dihedral_maps() -> list[dict[int, int]]:
    maps = []
    for k in range(8):
        maps.append({j: _ring(j + k) for j in range(8)})
    for k in range(8):
        maps.append({j: _ring(k - j) for j in range(8)})
    return maps


def v8_uic(arcs: frozenset[tuple[int, int]]) -> DirectedCycle | None:
    """Undominated induced cycle of a strongly connected orientation of
    the standard Wagner graph (labels 0..7).

    Tries, in order: the short cross 4-cycles; the five-vertex ring
    windows; the forced-orientation chains that arise when every window
    is dominated; finally an exhaustive induced-cycle scan.
    """
    arc_set = set(arcs)
    verts = range(8)

    def ok(order: tuple[int, ...]) -> bool:
        return (
            all(a in arc_set for a in _arcs_of(order))
            and _abstract_induced(arc_set, order)
            and _abstract_undominated(arc_set, set(order), verts)
        )

    for order in _pattern_four_cycles():
        if all(a in arc_set for a in _arcs_of(order)):
            if ok(order):
                return DirectedCycle(order)
    for order in _window_five_cycles():
        if all(a in arc_set for a in _arcs_of(order)):
            if ok(order):
                return DirectedCycle(order)

    # Every existing window is dominated.  Per the forced-chain analysis,
    # normalize the window to (0..4) by a ring symmetry and read off the
    # candidate cycles each dominator forces.
    window = (0, 1, 2, 3, 4)
    f_candidates = [(2, 6, 5, 1), (3, 7, 6, 2), (0, 7, 3, 4)]
    for phi in _dihedral_maps():
        mapped = {(phi[u], phi[v]) for (u, v) in arc_set}
        if not all(a in mapped for a in _arcs_of(window)):
            continue
        inv = {v: k for k, v in phi.items()}
        h_dominates = (7, 0) in mapped and (7, 3) in mapped
        f_dominates = (5, 1) in mapped and (5, 4) in mapped
        candidates: list[tuple[int, ...]] = []
        if h_dominates:
            candidates.append((7, 3, 4, 5, 6) if (6, 2) in mapped else (2, 6, 7, 0, 1))
        if f_dominates:
            candidates.extend(f_candidates)
        for cand in candidates:
            if all(a in mapped for a in _arcs_of(cand)) and \
                    _abstract_induced(mapped, cand) and \
                    _abstract_undominated(mapped, set(cand), verts):
                return DirectedCycle(tuple(inv[x] for x in cand))

    fallback = GameGraph(
        tuple(Vertex(i, Side.ROW, True, f"n{i}") for i in range(8)),
        frozenset(arc_set),
    )
    best = [
        c for c in chordless_cycles(fallback)
        if is_undominated(fallback, c)
    ]
    if best:
        return sorted(best, key=lambda c: (len(c), c.vertices))[0]
    return None


def solve_v8(component: Component) -> DirectedCycle:
    """Map the component onto the standard Wagner labels, solve each
    strongly connected one-direction orientation, and keep the first
    lifted cycle that verifies in the full component."""
    labeling = wagner_labeling(suppressed_edges(component))
    if labeling is None:
        raise GuaranteeViolation("component is not a Wagner-graph subdivision")
    inverse = {lbl: v for v, lbl in labeling.items()}
    branches = branch_directions(component)
    verts = list(component.vertices)
    for selection in direction_selections(branches):
        arcs = frozenset(selection.values())
        if not _strong(arcs, verts):
            continue
        std = frozenset((labeling[u], labeling[v]) for (u, v) in arcs)
        found = v8_uic(std)
        if found is None:
            continue
        order = tuple(inverse[x] for x in found.vertices)
        cycle = _expand_branch_cycle(component, selection, order)
        if is_uic(component.graph, cycle) and stitchworthy(component, cycle):
            return cycle
    for cycle in component_uics(component):
        return cycle
    raise GuaranteeViolation("V8 component yielded no undominated induced cycle")


# ---------------------------------------------------------------- dispatch

def solve_component(component: Component) -> DirectedCycle:
    """Kind-dispatched search, with an exhaustive backstop."""
    kind = classify(component)
    if kind == UNSUPPORTED:
        raise UnsupportedComponent(
            f"component {component.cid} is outside the supported classes"
        )
    try:
        if kind == BOND:
            cycle = solve_bond(component)
        elif kind in (POLYGON, PLANAR):
            cycle = solve_planar(component)
        elif kind == K5:
            cycle = solve_k5(component)
        else:
            cycle = solve_v8(component)
    except GuaranteeViolation:
        for cycle in component_uics(component):
            return cycle
        raise
    if not (is_uic(component.graph, cycle) and stitchworthy(component, cycle)):
        raise GuaranteeViolation("solver output failed verification")
    return cycle
