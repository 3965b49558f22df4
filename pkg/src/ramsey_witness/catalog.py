"""Small-graph catalogues for exhaustive checks.

``data/connected_1_8.g6`` lists every connected graph on 1 to 8 vertices up
to isomorphism, one canonical graph6 string per line, sorted by order and
then by string.  It is produced by :func:`enumerate_connected`, which needs
the optional ``pynauty`` dependency; reading it does not.
"""

from __future__ import annotations

import random
from functools import lru_cache
from importlib import resources
from typing import Iterator

from .graph import Graph, parse_graph6, write_graph6

CATALOG_FILE = "connected_1_8.g6"
CATALOG_MAX_ORDER = 8

# OEIS A001349: connected graphs on n unlabelled vertices
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


@lru_cache(maxsize=1)
def _catalog_lines() -> tuple[str, ...]:
    text = resources.files("ramsey_witness").joinpath("data", CATALOG_FILE).read_text("ascii")
    return tuple(line for line in text.splitlines() if line)


def connected_graph6(max_order: int = CATALOG_MAX_ORDER, min_order: int = 1) -> list[str]:
    if max_order > CATALOG_MAX_ORDER:
        raise ValueError(f"packaged catalogue stops at order {CATALOG_MAX_ORDER}")
    out = []
    for line in _catalog_lines():
        n = ord(line[0]) - 63
        if min_order <= n <= max_order:
            out.append(line)
    return out


def connected_graphs(max_order: int = CATALOG_MAX_ORDER, min_order: int = 1) -> Iterator[Graph]:
    for line in connected_graph6(max_order, min_order):
        yield parse_graph6(line)


def _canonical(g: Graph):
    import pynauty

    adjacency = {v: g.neighbors(v) for v in range(g.order)}
    pg = pynauty.Graph(g.order, adjacency_dict=adjacency)
    labels = pynauty.canon_label(pg)
    # canon_label[i] is the original vertex placed at canonical position i
    pos = {v: i for i, v in enumerate(labels)}
    canon = Graph.from_edges(g.order, [(pos[u], pos[v]) for u, v in g.edges()])
    return pynauty.certificate(pg), canon


def enumerate_connected(order: int) -> list[str]:
    """All connected graphs of the given order up to isomorphism (graph6).

    Every connected graph on ``k+1`` vertices has a non-cut vertex, so it
    arises from a connected graph on ``k`` vertices by adding one vertex with
    a non-empty neighbourhood; duplicates are removed by nauty certificate.
    """
    if order < 1:
        return []
    level = {b"": Graph.from_edges(1, [])}
    for k in range(1, order):
        nxt = {}
        for g in level.values():
            for nb in range(1, 1 << k):
                adj = list(g.adj) + [nb]
                for v in range(k):
                    if nb >> v & 1:
                        adj[v] |= 1 << k
                cert, canon = _canonical(Graph._trusted(k + 1, adj))
                if cert not in nxt:
                    nxt[cert] = canon
        level = nxt
    return sorted(write_graph6(g) for g in level.values())


def write_catalog(path, max_order: int = CATALOG_MAX_ORDER) -> int:
    lines = []
    for n in range(1, max_order + 1):
        lines.extend(enumerate_connected(n))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")
    return len(lines)


def random_connected_graph(order: int, rng: random.Random, density: float | None = None) -> Graph:
    """Random spanning tree plus independent extra edges.

    ``density`` is the probability of each non-tree pair; drawn uniformly
    from [0, 0.6] when not given.
    """
    if order < 1:
        raise ValueError("order must be positive")
    p = rng.uniform(0.0, 0.6) if density is None else density
    perm = list(range(order))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, order):
        j = rng.randrange(i)
        u, v = perm[i], perm[j]
        edges.add((min(u, v), max(u, v)))
    for u in range(order):
        for v in range(u + 1, order):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(order, sorted(edges))
