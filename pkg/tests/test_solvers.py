from __future__ import annotations

import itertools

import pytest

from winlose import GuaranteeViolation, Side, UnsupportedComponent, build_graph
from winlose.digraph import is_strongly_connected, is_uic
from winlose.solvers import (
    BOND,
    K5,
    PLANAR,
    POLYGON,
    UNSUPPORTED,
    V8,
    classify,
    component_uics,
    find_removable_edge,
    k5_removable_edge,
    qualifying_removals,
    solve_bond,
    solve_component,
    solve_k5,
    solve_planar,
    solve_v8,
    stitchworthy,
    suppressed_edges,
    v8_uic,
    wagner_labeling,
)
from winlose.tricon import decompose, orient_and_subdivide

from conftest import (
    EIGHT_CYCLE,
    K33,
    Q3,
    SHARED_EDGE,
    THETA,
    subdivided_k5,
    subdivided_v8,
)

RING = [(i, (i + 1) % 8) for i in range(8)]
V8_FORWARD = frozenset(RING + [(i, i + 4) for i in range(4)])
V8_BENT = frozenset(
    [(0, 1), (1, 2), (2, 3), (3, 4), (5, 4), (6, 5), (7, 6), (0, 7),
     (4, 0), (1, 5), (6, 2), (7, 3)]
)


def components_of(graph):
    tree = decompose(graph)
    tree = orient_and_subdivide(tree, graph)
    return tree.components


def one_component(graph, kind):
    comps = [c for c in components_of(graph) if classify(c) == kind]
    assert len(comps) == 1, f"expected one {kind} component"
    return comps[0]


# ------------------------------------------------------------- classify

def test_classify_polygon_and_bond():
    comps = components_of(build_graph(SHARED_EDGE))
    kinds = sorted(classify(c) for c in comps)
    assert kinds == [BOND, POLYGON, POLYGON]


def test_classify_planar_triconnected():
    assert classify(one_component(build_graph(Q3), PLANAR)) is PLANAR


def test_classify_k5_core():
    comps = components_of(subdivided_k5())
    kinds = sorted(classify(c) for c in comps)
    assert kinds.count(K5) == 1
    assert kinds.count(POLYGON) == 10


def test_classify_v8_core():
    comps = components_of(subdivided_v8())
    kinds = sorted(classify(c) for c in comps)
    assert kinds.count(V8) == 1
    assert kinds.count(POLYGON) == 4


def test_classify_unsupported_k33():
    comp = components_of(build_graph(K33))[0]
    assert classify(comp) == UNSUPPORTED


def test_suppressed_edges_of_k5_core():
    comp = one_component(subdivided_k5(), K5)
    edges = suppressed_edges(comp)
    assert len(edges) == 10
    assert edges == {(a, b) for a, b in itertools.combinations(range(5), 2)}


# ------------------------------------------------------- wagner labeling

def test_wagner_labeling_identity_shape():
    und = {(min(u, v), max(u, v)) for (u, v) in V8_FORWARD}
    phi = wagner_labeling(und)
    assert phi is not None
    mapped = {tuple(sorted((phi[u], phi[v]))) for (u, v) in und}
    std = {tuple(sorted((i, (i + 1) % 8))) for i in range(8)}
    std |= {(i, i + 4) for i in range(4)}
    assert mapped == std


def test_wagner_labeling_relabeled():
    perm = {i: (3 * i + 1) % 8 for i in range(8)}  # bijection on 0..7
    und = {
        tuple(sorted((perm[u], perm[v])))
        for (u, v) in V8_FORWARD
    }
    assert wagner_labeling(und) is not None


def test_wagner_labeling_rejects_other_cubic_graphs():
    k33 = {(u, v) for u in range(3) for v in range(3, 6)}
    assert wagner_labeling(k33) is None
    cube = {(min(a, b), max(a, b))
            for a in range(8) for b in range(8)
            if a < b and bin(a ^ b).count("1") == 1}
    assert wagner_labeling(cube) is None


# ------------------------------------------------------------ stitchworthy

def test_stitchworthy_rules():
    from winlose import DirectedCycle

    comps = components_of(build_graph(SHARED_EDGE))
    bond = next(c for c in comps if c.shape == "bond")
    real = solve_bond(bond)
    assert stitchworthy(bond, real)
    # The two antiparallel virtual paths of one pair fold into a cycle
    # that must never be lifted.
    empty = next(
        c for c in components_of(build_graph(THETA))
        if c.shape == "bond" and not c.real_arcs)
    pair = empty.distinct_pairs()[0]
    fwd = empty.virtual_on(pair, (pair.u, pair.v))
    bwd = empty.virtual_on(pair, (pair.v, pair.u))
    assert fwd is not None and bwd is not None
    spurious = DirectedCycle(
        (pair.u,) + fwd.subdividing + (pair.v,) + bwd.subdividing)
    assert is_uic(empty.graph, spurious)
    assert not stitchworthy(empty, spurious)


def test_distinct_pair_virtual_cycle_is_stitchworthy():
    # All-virtual cycles are liftable once they cross two different
    # pairs; only the single-pair round trip is spurious.
    from winlose import DirectedCycle
    from winlose.tricon import Component, SeparatingPair, VirtualEdge

    p_ab = SeparatingPair(0, 1)
    p_bc = SeparatingPair(1, 2)
    p_ca = SeparatingPair(0, 2)
    comp = Component(
        cid=0,
        shape="polygon",
        vertices=(0, 1, 2),
        real_arcs=frozenset(),
        pair_records=(p_ab, p_bc, p_ca),
        virtuals=(
            VirtualEdge(p_ab, (0, 1), (10,)),
            VirtualEdge(p_ab, (1, 0), (13,)),
            VirtualEdge(p_bc, (1, 2), (11,)),
            VirtualEdge(p_ca, (2, 0), (12,)),
        ),
    )
    ring = DirectedCycle((0, 10, 1, 11, 2, 12))
    assert stitchworthy(comp, ring)
    round_trip = DirectedCycle((0, 10, 1, 13))
    assert not stitchworthy(comp, round_trip)


# ----------------------------------------------------------------- bond

def test_solve_bond_uses_real_arc_and_return_path():
    comps = components_of(build_graph(SHARED_EDGE))
    bond = next(c for c in comps if c.shape == "bond")
    cycle = solve_bond(bond)
    assert (1, 4) in cycle.arcs()
    assert is_uic(bond.graph, cycle)


def test_solve_bond_requires_a_real_arc():
    comps = components_of(build_graph(THETA))
    empty = next(c for c in comps if c.shape == "bond" and not c.real_arcs)
    with pytest.raises(GuaranteeViolation):
        solve_bond(empty)


# --------------------------------------------------------------- planar

def test_solve_planar_on_polygon():
    comps = components_of(build_graph(SHARED_EDGE))
    poly = next(c for c in comps if 0 in c.vertices)
    cycle = solve_planar(poly)
    assert is_uic(poly.graph, cycle)
    assert stitchworthy(poly, cycle)


def test_solve_planar_on_q3():
    comp = one_component(build_graph(Q3), PLANAR)
    cycle = solve_planar(comp)
    assert is_uic(comp.graph, cycle)
    # Q3 has no virtual edges, so the cycle is made of real arcs only.
    assert all(arc in comp.real_arcs for arc in cycle.arcs())


# ------------------------------------------------------------------- K5

def test_qualifying_removals_tournament():
    tournament = frozenset(
        [(i, (i + 1) % 5) for i in range(5)] + [(i, (i + 2) % 5) for i in range(5)]
    )
    mono = {i: "same" for i in range(5)}
    found = qualifying_removals(tournament, mono)
    assert found[0] == (0, 1)
    assert k5_removable_edge(tournament, mono) == (0, 1)
    # Independent re-check of the removal condition.
    for e in found:
        rest = tournament - {e}
        reach = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for (a, b) in rest:
                if a == x and b not in reach:
                    reach.add(b)
                    frontier.append(b)
        assert reach == set(range(5))


def test_qualifying_removals_near_sink_orientation():
    # v = 4 receives from a, b, c = 1, 2, 3 and escapes through u = 0.
    arcs = frozenset(
        [(2, 1), (3, 2), (1, 3), (1, 4), (2, 4), (3, 4), (4, 0),
         (0, 1), (0, 2), (0, 3)]
    )
    mono = qualifying_removals(arcs, {i: "same" for i in range(5)})
    assert (1, 4) in mono
    split = qualifying_removals(
        arcs, {0: "c", 4: "c", 1: "r", 2: "r", 3: "r"})
    assert split == [(1, 3), (2, 1), (3, 2)]
    # Every survivor joins same-colored endpoints here.
    for (a, b) in split:
        assert a in {1, 2, 3} and b in {1, 2, 3}


def test_qualifying_removals_singleton_class_head():
    arcs = frozenset(
        [(2, 1), (3, 2), (1, 3), (1, 4), (2, 4), (3, 4), (4, 0),
         (0, 1), (0, 2), (0, 3)]
    )
    colors = {0: "r", 1: "r", 2: "r", 3: "r", 4: "c"}
    found = qualifying_removals(arcs, colors)
    for (a, b) in found:
        assert colors[a] == colors[b] or b == 4


def test_find_removable_edge_on_subdivided_core():
    comp = one_component(subdivided_k5(), K5)
    assert find_removable_edge(comp) == (0, 1)


def test_solve_k5_verified_in_component():
    comp = one_component(subdivided_k5(), K5)
    cycle = solve_k5(comp)
    assert is_uic(comp.graph, cycle)
    assert stitchworthy(comp, cycle)


# ------------------------------------------------------------------- V8

def test_v8_uic_forward_ring():
    cycle = v8_uic(V8_FORWARD)
    assert cycle is not None
    assert cycle.vertices == (0, 1, 5, 6, 7)


def test_v8_uic_bent_fixture():
    cycle = v8_uic(V8_BENT)
    assert cycle is not None
    assert cycle.vertices == (0, 1, 5, 4)


def test_v8_uic_answers_are_verified_against_scan():
    from winlose.game import GameGraph, Vertex
    for arcs in (V8_FORWARD, V8_BENT):
        g = GameGraph(
            tuple(Vertex(i, Side.ROW, True, f"n{i}") for i in range(8)),
            arcs,
        )
        cycle = v8_uic(arcs)
        assert cycle is not None and is_uic(g, cycle)


def test_solve_v8_on_subdivided_core():
    comp = one_component(subdivided_v8(), V8)
    cycle = solve_v8(comp)
    assert is_uic(comp.graph, cycle)
    assert stitchworthy(comp, cycle)


# ------------------------------------------------------------ dispatcher

def test_solve_component_dispatches_every_kind():
    for graph, kind in (
        (build_graph(Q3), PLANAR),
        (subdivided_k5(), K5),
        (subdivided_v8(), V8),
    ):
        comp = one_component(graph, kind)
        cycle = solve_component(comp)
        assert is_uic(comp.graph, cycle)
        assert stitchworthy(comp, cycle)


def test_solve_component_polygon_eight_cycle():
    comp = components_of(build_graph(EIGHT_CYCLE))[0]
    cycle = solve_component(comp)
    assert cycle.vertices == (0, 4, 1, 5, 2, 6, 3, 7)


def test_solve_component_rejects_unsupported():
    comp = components_of(build_graph(K33))[0]
    with pytest.raises(UnsupportedComponent):
        solve_component(comp)


def test_component_uics_sorted_shortest_first():
    comps = components_of(build_graph(SHARED_EDGE))
    poly = next(c for c in comps if 0 in c.vertices)
    cycles = component_uics(poly)
    lengths = [len(c) for c in cycles]
    assert lengths == sorted(lengths)
    for c in cycles:
        assert is_uic(poly.graph, c)
        assert stitchworthy(poly, c)
