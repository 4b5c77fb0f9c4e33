"""Directed-graph algorithms shared across the solver pipeline.

Everything here is deterministic: neighbours are visited in ascending id
order, so repeated runs enumerate cycles and components identically.
"""

from __future__ import annotations

from collections.abc import Iterator

from .game import DirectedCycle, GameGraph


def find_digon(graph: GameGraph) -> tuple[int, int] | None:
    """First antiparallel edge pair (u, v), u < v, if any."""
    for (u, v) in sorted(graph.edges):
        if u < v and (v, u) in graph.edges:
            return (u, v)
    return None


def strongly_connected_components(graph: GameGraph) -> list[set[int]]:
    """Tarjan's algorithm, iterative.  Components come out in reverse
    topological order of the condensation."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[set[int]] = []
    counter = 0

    for root in graph.ids:
        if root in index:
            continue
        work: list[tuple[int, Iterator[int]]] = [(root, iter(graph.out(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(graph.out(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def is_strongly_connected(graph: GameGraph) -> bool:
    return len(strongly_connected_components(graph)) == 1


def source_sccs(graph: GameGraph) -> list[set[int]]:
    """Strongly connected components with no incoming edge from outside,
    sorted by minimum vertex id."""
    comps = strongly_connected_components(graph)
    owner: dict[int, int] = {}
    for k, comp in enumerate(comps):
        for v in comp:
            owner[v] = k
    has_incoming = [False] * len(comps)
    for (u, v) in graph.edges:
        if owner[u] != owner[v]:
            has_incoming[owner[v]] = True
    sources = [comp for k, comp in enumerate(comps) if not has_incoming[k]]
    return sorted(sources, key=min)


def biconnected_components(graph: GameGraph) -> list[frozenset[tuple[int, int]]]:
    """Edge sets of the biconnected blocks of the underlying undirected
    graph.  Each undirected edge is reported as (min id, max id); bridges
    form singleton blocks; isolated vertices are not reported."""
    und: dict[int, list[int]] = {v.id: [] for v in graph.vertices}
    for (u, v) in sorted(graph.undirected_edges()):
        und[u].append(v)
        und[v].append(u)

    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    edge_stack: list[tuple[int, int]] = []
    comps: list[frozenset[tuple[int, int]]] = []
    counter = 0

    for root in graph.ids:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        work: list[tuple[int, int | None, Iterator[int]]] = [(root, None, iter(und[root]))]
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    work.append((w, v, iter(und[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                if low[v] >= disc[pv]:
                    comp = set()
                    while True:
                        (a, b) = edge_stack.pop()
                        comp.add((min(a, b), max(a, b)))
                        if (a, b) == (pv, v):
                            break
                    comps.append(frozenset(comp))
                low[pv] = min(low[pv], low[v])
    return comps


def is_biconnected(graph: GameGraph) -> bool:
    """True when the undirected view is connected, spans every vertex,
    and forms a single block with at least one edge."""
    comps = biconnected_components(graph)
    if len(comps) != 1:
        return False
    covered = {v for e in comps[0] for v in e}
    return covered == set(graph.ids)


def is_induced_cycle(graph: GameGraph, cycle: DirectedCycle) -> bool:
    """The subgraph induced by the cycle's vertices has no edges beyond
    the cycle's own arcs."""
    members = cycle.vertex_set
    arcs = set(cycle.arcs())
    for (u, v) in graph.edges:
        if u in members and v in members and (u, v) not in arcs:
            return False
    return arcs <= graph.edges


def cycle_dominators(graph: GameGraph, cycle: DirectedCycle) -> list[int]:
    """Off-cycle vertices with at least two out-edges into the cycle."""
    members = cycle.vertex_set
    out = []
    for v in graph.ids:
        if v in members:
            continue
        hits = sum(1 for w in graph.out(v) if w in members)
        if hits >= 2:
            out.append(v)
    return out


def is_undominated(graph: GameGraph, cycle: DirectedCycle) -> bool:
    return not cycle_dominators(graph, cycle)


def is_uic(graph: GameGraph, cycle: DirectedCycle) -> bool:
    """Undominated induced cycle test: the certificate the solvers emit."""
    return is_induced_cycle(graph, cycle) and is_undominated(graph, cycle)


def chordless_cycles(graph: GameGraph, max_count: int | None = None) -> Iterator[DirectedCycle]:
    """Enumerate the induced (chordless) directed cycles.

    Each cycle is rooted at its minimum vertex; roots are tried in
    ascending order and paths only visit vertices above the root, so no
    cycle is reported twice.  Digons come out as 2-cycles.
    """
    emitted = 0
    ids = graph.ids
    for root in ids:
        path = [root]
        on_path = {root}

        def extend() -> Iterator[DirectedCycle]:
            nonlocal emitted
            tail = path[-1]
            for w in graph.out(tail):
                if w <= root or w in on_path:
                    continue
                # chord screen: w may touch the path only via the arc
                # tail->w used to reach it (and possibly w->root).
                if (w, tail) in graph.edges:
                    if len(path) > 1:
                        continue
                    # path == [root]: w->root closes a digon below.
                ok = True
                for p in path[:-1]:
                    if (p, w) in graph.edges:
                        ok = False
                        break
                    if (w, p) in graph.edges and p != root:
                        ok = False
                        break
                if not ok:
                    continue
                closes = (w, root) in graph.edges
                if closes:
                    yield DirectedCycle(tuple(path) + (w,))
                    emitted += 1
                    if max_count is not None and emitted >= max_count:
                        return
                    continue
                path.append(w)
                on_path.add(w)
                yield from extend()
                on_path.discard(w)
                path.pop()
                if max_count is not None and emitted >= max_count:
                    return

        yield from extend()
        if max_count is not None and emitted >= max_count:
            return


def reachable(graph: GameGraph, start: int, forbidden: frozenset[int] = frozenset()) -> set[int]:
    """Vertices reachable from start without entering the forbidden set.
    The start itself is always included (even if listed as forbidden)."""
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in graph.out(v):
            if w in seen or w in forbidden:
                continue
            seen.add(w)
            frontier.append(w)
    return seen


def has_path(graph: GameGraph, source: int, target: int,
             forbidden: frozenset[int] = frozenset()) -> bool:
    """Directed path from source to target avoiding forbidden vertices
    (endpoints exempt)."""
    if source == target:
        return True
    blocked = forbidden - {source, target}
    return target in reachable(graph, start=source, forbidden=frozenset(blocked))
