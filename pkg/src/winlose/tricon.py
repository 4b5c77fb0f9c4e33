"""Split-pair decomposition of biconnected strategy graphs.

The underlying undirected graph is recursively split at separating vertex
pairs into a canonical set of components: polygons (cycles), bonds
(parallel edges between one pair), and three-connected remainders.  Every
split leaves a twin pair of virtual edges tying the two sides together;
after splitting, twin-linked polygon pairs and bond pairs are merged back
so the final component set is the unique canonical one.

A second pass orients each virtual edge: a direction is installed exactly
when the rest of the graph offers a directed detour between the pair
vertices, and it is installed as a short subdivided path through fresh
helper vertices so components stay simple, digon-free, and two-colorable
by side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from .errors import GuaranteeViolation, NotBiconnected
from .digraph import find_digon, has_path, is_biconnected, is_strongly_connected
from .game import GameGraph, Vertex


@dataclass(frozen=True, order=True)
class SeparatingPair:
    """Unordered vertex pair whose removal disconnects the graph."""

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("pair vertices must differ")
        if self.u > self.v:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)

    def ends(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class VirtualEdge:
    """One installed direction of a virtual edge: a subdivided directed
    path from direction[0] to direction[1] through fresh helper vertices
    (one helper when the pair shares a side, two otherwise)."""

    pair: SeparatingPair
    direction: tuple[int, int]
    subdividing: tuple[int, ...]

    def path_vertices(self) -> tuple[int, ...]:
        return (self.direction[0],) + self.subdividing + (self.direction[1],)

    def path_arcs(self) -> list[tuple[int, int]]:
        vs = self.path_vertices()
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]


@dataclass
class Component:
    """One canonical piece of the decomposition.

    Before orientation only the real arcs and the pair placeholders are
    known; orient_and_subdivide fills in `virtuals` and `graph`.
    """

    cid: int
    shape: str                                   # "polygon" | "bond" | "triconnected"
    vertices: tuple[int, ...]
    real_arcs: frozenset[tuple[int, int]]
    pair_records: tuple[SeparatingPair, ...]     # one entry per virtual placeholder
    virtuals: tuple[VirtualEdge, ...] = ()
    graph: GameGraph | None = None

    def distinct_pairs(self) -> list[SeparatingPair]:
        return sorted(set(self.pair_records))

    def helper_ids(self) -> frozenset[int]:
        return frozenset(s for ve in self.virtuals for s in ve.subdividing)

    def virtual_on(self, pair: SeparatingPair, direction: tuple[int, int]) -> VirtualEdge | None:
        for ve in self.virtuals:
            if ve.pair == pair and ve.direction == direction:
                return ve
        return None


@dataclass
class TriconnectedTree:
    components: tuple[Component, ...]
    pairs: tuple[SeparatingPair, ...]
    tree_edges: tuple[tuple[int, SeparatingPair], ...]

    def component(self, cid: int) -> Component:
        return self.components[cid]

    def components_on(self, pair: SeparatingPair) -> list[Component]:
        return [self.components[cid] for (cid, p) in self.tree_edges if p == pair]


@dataclass
class _MEdge:
    """Internal multigraph edge during splitting."""

    eid: int
    u: int
    v: int
    arc: tuple[int, int] | None      # original directed arc; None for virtual
    twin: int | None                 # eid of the twin virtual on the other side

    @property
    def is_virtual(self) -> bool:
        return self.arc is None

    def touches(self, x: int) -> bool:
        return self.u == x or self.v == x


def _separation_classes(
    store: dict[int, _MEdge], eids: list[int], a: int, b: int
) -> list[list[int]]:
    """Partition the edges into classes joined by paths avoiding a and b.
    Edges directly between a and b are singleton classes."""
    parent = {e: e for e in eids}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    incident: dict[int, list[int]] = {}
    for eid in eids:
        e = store[eid]
        for x in (e.u, e.v):
            if x not in (a, b):
                incident.setdefault(x, []).append(eid)
    for eids_at_x in incident.values():
        for other in eids_at_x[1:]:
            union(eids_at_x[0], other)

    groups: dict[int, list[int]] = {}
    for eid in sorted(eids):
        groups.setdefault(find(eid), []).append(eid)
    return sorted(groups.values(), key=lambda g: g[0])


def _vertices_of(store: dict[int, _MEdge], eids: list[int]) -> list[int]:
    out: set[int] = set()
    for eid in eids:
        e = store[eid]
        out.add(e.u)
        out.add(e.v)
    return sorted(out)


def _find_split(
    store: dict[int, _MEdge], eids: list[int]
) -> tuple[int, int, list[int], list[int]] | None:
    """First separating pair (in sorted order) together with a two-group
    partition of the edge classes, both groups holding >= 2 edges."""
    verts = _vertices_of(store, eids)
    for (a, b) in itertools.combinations(verts, 2):
        classes = _separation_classes(store, eids, a, b)
        k = len(classes)
        multi = [c for c in classes if len(c) >= 2]
        splits = (
            (k >= 2 and len(multi) >= 2)
            or (k >= 3 and len(multi) == 1)
            or (k >= 4 and len(multi) == 0)
        )
        if not splits:
            continue
        if multi:
            side1 = multi[0]
        else:
            side1 = classes[0] + classes[1]
        chosen = set(side1)
        side2 = [e for e in eids if e not in chosen]
        return (a, b, side1, side2)
    return None


def _shape_of(store: dict[int, _MEdge], eids: set[int]) -> str:
    verts = _vertices_of(store, list(eids))
    if len(verts) == 2:
        return "bond"
    degree = {v: 0 for v in verts}
    for eid in eids:
        e = store[eid]
        degree[e.u] += 1
        degree[e.v] += 1
    if all(d == 2 for d in degree.values()):
        return "polygon"
    return "triconnected"


def decompose(graph: GameGraph) -> TriconnectedTree:
    """Canonical polygon/bond/triconnected decomposition of a biconnected
    digon-free graph.  Virtual edges are left unoriented."""
    if len(graph.vertices) < 2 or not is_biconnected(graph):
        raise NotBiconnected("decomposition requires a biconnected graph")
    if find_digon(graph) is not None:
        raise GuaranteeViolation("decomposition input must be digon-free")

    store: dict[int, _MEdge] = {}
    next_eid = 0
    for (u, v) in sorted(graph.edges):
        store[next_eid] = _MEdge(next_eid, min(u, v), max(u, v), arc=(u, v), twin=None)
        next_eid += 1

    work: list[list[int]] = [list(store)]
    terminal: list[set[int]] = []
    while work:
        eids = work.pop()
        found = _find_split(store, eids)
        if found is None:
            terminal.append(set(eids))
            continue
        a, b, side1, side2 = found
        e1, e2 = next_eid, next_eid + 1
        next_eid += 2
        store[e1] = _MEdge(e1, a, b, arc=None, twin=e2)
        store[e2] = _MEdge(e2, a, b, arc=None, twin=e1)
        work.append(side1 + [e1])
        work.append(side2 + [e2])

    # canonical merge: twin-linked polygon pairs and bond pairs collapse.
    merged = True
    while merged:
        merged = False
        owner: dict[int, int] = {}
        for i, eset in enumerate(terminal):
            for eid in eset:
                owner[eid] = i
        for i, eset in enumerate(terminal):
            for eid in sorted(eset):
                e = store[eid]
                if not e.is_virtual:
                    continue
                j = owner[e.twin]
                if j == i:
                    continue
                si = _shape_of(store, terminal[i])
                sj = _shape_of(store, terminal[j])
                if si == sj and si in ("polygon", "bond"):
                    union = (terminal[i] | terminal[j]) - {eid, e.twin}
                    keep = min(i, j)
                    drop = max(i, j)
                    terminal[keep] = union
                    terminal.pop(drop)
                    merged = True
                    break
            if merged:
                break

    draft = []
    for eset in terminal:
        verts = tuple(_vertices_of(store, list(eset)))
        real = frozenset(store[e].arc for e in eset if not store[e].is_virtual)
        pair_records = tuple(
            sorted(
                SeparatingPair(store[e].u, store[e].v)
                for e in eset
                if store[e].is_virtual
            )
        )
        draft.append((verts, _shape_of(store, eset), real, pair_records))
    draft.sort(key=lambda d: (d[0], d[1], sorted(d[2])))

    components = tuple(
        Component(cid, shape, verts, real, pair_records)
        for cid, (verts, shape, real, pair_records) in enumerate(draft)
    )
    pairs = tuple(sorted({p for c in components for p in c.pair_records}))
    tree_edges = tuple(
        (c.cid, p) for c in components for p in c.distinct_pairs()
    )
    tree = TriconnectedTree(components, pairs, tree_edges)
    _check_tree(tree, graph)
    return tree


def _check_tree(tree: TriconnectedTree, graph: GameGraph) -> None:
    covered: set[tuple[int, int]] = set()
    for c in tree.components:
        covered |= c.real_arcs
    if covered != set(graph.edges):
        raise GuaranteeViolation("components do not cover the original arcs")
    n = len(tree.components) + len(tree.pairs)
    if len(tree.tree_edges) != n - 1:
        raise GuaranteeViolation("component-pair structure is not a tree")
    # connectivity over the bipartite node set
    if tree.pairs:
        adj: dict[object, list[object]] = {}
        for (cid, p) in tree.tree_edges:
            adj.setdefault(("c", cid), []).append(("p", p))
            adj.setdefault(("p", p), []).append(("c", cid))
        for c in tree.components:
            adj.setdefault(("c", c.cid), [])
        seen = set()
        stack: list[object] = [("c", tree.components[0].cid)]
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(adj.get(node, ()))
        if len(seen) != n:
            raise GuaranteeViolation("component-pair structure is not connected")


def orient_and_subdivide(
    tree: TriconnectedTree, graph: GameGraph, fresh_base: int | None = None
) -> TriconnectedTree:
    """Install every externally realizable direction of every virtual edge
    as a subdivided directed path; fill in component graphs.

    The graph must be the strongly connected block the tree came from.
    Helper ids start at fresh_base (default: above the graph's own ids)
    and are assigned in (component, pair, direction) order.
    """
    next_id = (max(graph.ids) + 1) if fresh_base is None else fresh_base
    base = next_id
    new_components = []
    for comp in tree.components:
        members = frozenset(comp.vertices)
        arcs: set[tuple[int, int]] = set(comp.real_arcs)
        helpers: list[Vertex] = []
        virtuals: list[VirtualEdge] = []
        for pair in comp.distinct_pairs():
            installed = 0
            for (x, y) in (pair.ends(), pair.ends()[::-1]):
                if not has_path(graph, x, y, forbidden=members):
                    continue
                sx, sy = graph.side(x), graph.side(y)
                sides = [sx.other()] if sx is sy else [sx.other(), sx]
                sub_ids = []
                prev = x
                for side in sides:
                    vert = Vertex(next_id, side, False, f"s{next_id - base + 1}")
                    next_id += 1
                    helpers.append(vert)
                    sub_ids.append(vert.id)
                    arcs.add((prev, vert.id))
                    prev = vert.id
                arcs.add((prev, y))
                virtuals.append(VirtualEdge(pair, (x, y), tuple(sub_ids)))
                installed += 1
            if installed == 0:
                raise GuaranteeViolation(
                    f"no realizable direction for pair ({pair.u}, {pair.v})"
                )
        comp_graph = GameGraph(
            tuple(graph.by_id[v] for v in comp.vertices) + tuple(helpers),
            frozenset(arcs),
        )
        if not comp_graph.is_bipartite_by_side():
            raise GuaranteeViolation("component lost two-colorability")
        if not is_strongly_connected(comp_graph):
            raise GuaranteeViolation("component is not strongly connected")
        new_components.append(
            replace(comp, virtuals=tuple(virtuals), graph=comp_graph)
        )
    return TriconnectedTree(tuple(new_components), tree.pairs, tree.tree_edges)


def serialize_tree(tree: TriconnectedTree, kinds: dict[int, str]) -> str:
    """COMP/PAIR/EDGE dump; requires oriented components and a kind label
    per component id."""
    lines = []
    for c in tree.components:
        if c.graph is None:
            raise GuaranteeViolation("serialization needs oriented components")
        verts = ",".join(v.label for v in c.graph.vertices)
        lines.append(f"COMP {c.cid} kind={kinds[c.cid]} verts={verts}")
    label = {}
    for c in tree.components:
        for v in c.graph.vertices:
            label[v.id] = v.label
    for p in tree.pairs:
        lines.append(f"PAIR {label[p.u]} {label[p.v]}")
    for (cid, p) in tree.tree_edges:
        lines.append(f"EDGE {cid} {label[p.u]},{label[p.v]}")
    return "\n".join(lines) + "\n"
