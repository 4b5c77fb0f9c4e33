"""Seeded instance generators for the supported graph classes.

The planar core is a plane quadrangulation grown by repeatedly splitting
a quadrilateral face with a fresh degree-two vertex, oriented strongly
connected by a randomized depth-first search (tree arcs down, back arcs
up).  The richer classes glue wide pieces onto the core by identifying
one piece edge with an existing core arc: a five-vertex clique with a
strongly connected rotating-tournament orientation, or an eight-vertex
ring with its four cross chords.  Same-side piece connections get one
subdividing vertex, so the glued graph stays bipartite; every piece
keeps the class closed under edge-gluing.  All randomness flows from
one seeded generator, making output reproducible byte for byte.
"""

from __future__ import annotations

import random

from .game import Side, WinLoseGame

CLASSES = ("planar", "k33free", "k5free-v8", "mixed")
MIN_SIZE = 4
MAX_SIZE = 64


def _quadrangulation(
    size: int, rng: random.Random
) -> tuple[dict[int, Side], list[tuple[int, int]]]:
    """Bipartite plane quadrangulation on `size` vertices, grown from a
    four-cycle; returns vertex sides and undirected edges."""
    sides = {0: Side.ROW, 1: Side.COL, 2: Side.ROW, 3: Side.COL}
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    faces = [(0, 1, 2, 3), (0, 1, 2, 3)]
    nxt = 4
    while nxt < size:
        face = faces.pop(rng.randrange(len(faces)))
        if rng.randrange(2):
            face = (face[1], face[2], face[3], face[0])
        (a, b, c, d) = face
        x = nxt
        nxt += 1
        sides[x] = sides[a].other()
        edges.append((min(a, x), max(a, x)))
        edges.append((min(c, x), max(c, x)))
        faces.append((a, b, c, x))
        faces.append((c, d, a, x))
    return sides, edges


def _orient(
    edges: list[tuple[int, int]], rng: random.Random
) -> set[tuple[int, int]]:
    """Strongly connected orientation of a bridgeless graph: random DFS,
    tree arcs away from the root, every other arc back up."""
    adj: dict[int, list[int]] = {}
    for (u, v) in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    verts = sorted(adj)
    root = rng.choice(verts)
    for v in verts:
        rng.shuffle(adj[v])
    arcs: set[tuple[int, int]] = set()
    oriented: set[tuple[int, int]] = set()
    visited = {root}
    stack: list[tuple[int, int]] = [(root, 0)]
    while stack:
        (u, i) = stack.pop()
        if i < len(adj[u]):
            stack.append((u, i + 1))
            w = adj[u][i]
            key = (min(u, w), max(u, w))
            if key in oriented:
                continue
            oriented.add(key)
            arcs.add((u, w))
            if w not in visited:
                visited.add(w)
                stack.append((w, 0))
    return arcs


_TOURNAMENT = tuple(
    sorted([(i, (i + 1) % 5) for i in range(5)] + [(i, (i + 2) % 5) for i in range(5)])
)


def _attach_k5(
    arcs: set[tuple[int, int]],
    sides: dict[int, Side],
    glue: tuple[int, int],
    nxt: int,
    rng: random.Random,
) -> int:
    """Glue a subdivided five-clique onto the arc `glue`, reusing its
    endpoints as two of the five branch vertices."""
    (x, y) = glue
    branch = [x, y]
    for _ in range(3):
        sides[nxt] = rng.choice((Side.ROW, Side.COL))
        branch.append(nxt)
        nxt += 1
    for (i, j) in _TOURNAMENT:
        if (i, j) == (0, 1):
            continue  # realized by the glue arc itself
        (a, b) = branch[i], branch[j]
        if sides[a] == sides[b]:
            sides[nxt] = sides[a].other()
            arcs.add((a, nxt))
            arcs.add((nxt, b))
            nxt += 1
        else:
            arcs.add((a, b))
    return nxt


def _attach_v8(
    arcs: set[tuple[int, int]],
    sides: dict[int, Side],
    glue: tuple[int, int],
    nxt: int,
    rng: random.Random,
) -> int:
    """Glue a subdivided eight-ring with its four cross chords onto the
    arc `glue`, the ring running in the arc's direction."""
    (x, y) = glue
    ring = [x, y]
    for k in range(2, 8):
        sides[nxt] = sides[x] if k % 2 == 0 else sides[y]
        ring.append(nxt)
        nxt += 1
    for k in range(1, 8):
        arcs.add((ring[k], ring[(k + 1) % 8]))
    for k in range(4):
        (a, b) = ring[k], ring[k + 4]
        if rng.randrange(2):
            (a, b) = (b, a)
        sides[nxt] = sides[a].other()
        arcs.add((a, nxt))
        arcs.add((nxt, b))
        nxt += 1
    return nxt


def generate(cls: str, size: int, seed: int) -> WinLoseGame:
    """Deterministic random instance of the requested class; `size`
    counts the planar core's vertices."""
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    if not MIN_SIZE <= size <= MAX_SIZE:
        raise ValueError(
            f"size out of bounds: {size} not in [{MIN_SIZE}, {MAX_SIZE}]"
        )
    rng = random.Random(seed)
    sides, edges = _quadrangulation(size, rng)
    arcs = _orient(edges, rng)

    if cls == "planar":
        k5_count, v8_count = 0, 0
    elif cls == "k33free":
        k5_count, v8_count = 1 + rng.randrange(2), 0
    elif cls == "k5free-v8":
        k5_count, v8_count = 0, 1 + rng.randrange(2)
    else:
        k5_count, v8_count = 1, 1
    glue_arcs = rng.sample(sorted(arcs), k5_count + v8_count)

    nxt = max(sides) + 1
    for i in range(k5_count):
        nxt = _attach_k5(arcs, sides, glue_arcs[i], nxt, rng)
    for i in range(v8_count):
        nxt = _attach_v8(arcs, sides, glue_arcs[k5_count + i], nxt, rng)

    rows = [v for v in sorted(sides) if sides[v] is Side.ROW]
    cols = [v for v in sorted(sides) if sides[v] is Side.COL]
    row_index = {v: i for i, v in enumerate(rows)}
    col_index = {v: j for j, v in enumerate(cols)}
    mr = [[0] * len(cols) for _ in rows]
    mc = [[0] * len(cols) for _ in rows]
    for (u, v) in arcs:
        if sides[u] is Side.ROW:
            mr[row_index[u]][col_index[v]] = 1
        else:
            mc[row_index[v]][col_index[u]] = 1
    return WinLoseGame.from_lists(mr, mc)
