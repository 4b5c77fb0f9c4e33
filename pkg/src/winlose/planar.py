"""Planarity testing and face enumeration, backed by networkx.

Only the undirected structure matters here; callers overlay directions.
Face walks are produced in a deterministic order: half-edges are visited
sorted, each face reported once from its lowest half-edge.
"""

from __future__ import annotations

import networkx as nx


def _nx_graph(und_edges) -> nx.Graph:
    g = nx.Graph()
    g.add_edges_from(sorted(und_edges))
    return g


def is_planar(und_edges) -> bool:
    ok, _ = nx.check_planarity(_nx_graph(und_edges))
    return ok


def face_walks(und_edges) -> list[tuple[int, ...]]:
    """Boundary walks of every face of one planar embedding.

    Each walk is the vertex sequence around the face, first vertex not
    repeated at the end.  Raises ValueError on nonplanar input.
    """
    g = _nx_graph(und_edges)
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise ValueError("graph is not planar")
    seen: set[tuple[int, int]] = set()
    walks = []
    for u in sorted(g.nodes):
        for v in sorted(g.adj[u]):
            if (u, v) in seen:
                continue
            walk = emb.traverse_face(u, v, mark_half_edges=seen)
            walks.append(tuple(walk))
    return walks
