"""Exact graph parameters.

All optimisers return a witness next to the value.  Where several optima
exist the witness is the lexicographically least one, comparing sorted
vertex lists (or sorted edge lists ``(u, v)`` with ``u < v``).
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterator, Sequence

from . import _core
from .graph import Graph, PreconditionError, _bits, is_connected

__all__ = [
    "independence_number",
    "maximum_matching",
    "matching_number",
    "induced_matching_number",
    "vertex_cover_number",
    "fractional_matching_number",
    "induced_family_matching_number",
    "connected_subsets",
]


def independence_number(g: Graph) -> tuple[int, list[int]]:
    best = max_independent_within(g, g.full_mask)
    return len(best), best


def max_clique(g: Graph, within: int | None = None) -> list[int]:
    """Lexicographically least maximum clique inside the mask ``within``."""
    cand = g.full_mask if within is None else within
    return _core.clique_search(g.adj, g.order, 0, cand)


def max_independent_within(g: Graph, within: int) -> list[int]:
    comp = g.complement()
    return _core.clique_search(comp.adj, g.order, 0, within)


def vertex_cover_number(g: Graph) -> int:
    # complement of a maximum independent set is a minimum vertex cover
    return g.order - independence_number(g)[0]


# ------------------------------------------------------------ matchings


def _blossom(n: int, nbrs: Sequence[Sequence[int]]) -> list[int]:
    """Edmonds' blossom algorithm; returns the mate array (-1 = exposed)."""
    match = [-1] * n
    for v in range(n):
        if match[v] < 0:
            for w in nbrs[v]:
                if match[w] < 0:
                    match[v] = w
                    match[w] = v
                    break

    for root in range(n):
        if match[root] >= 0:
            continue
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        end = -1
        while queue and end < 0:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        end = to
                        break
                    used[match[to]] = True
                    queue.append(match[to])
        v = end
        while v >= 0:
            pv = parent[v]
            ppv = match[pv]
            match[v] = pv
            match[pv] = v
            v = ppv
    return match


def _matching_size(g: Graph, alive: int) -> int:
    verts = list(_bits(alive))
    index = {v: i for i, v in enumerate(verts)}
    nbrs = [[index[w] for w in _bits(g.adj[v] & alive)] for v in verts]
    mate = _blossom(len(verts), nbrs)
    return sum(1 for m in mate if m >= 0) // 2


def matching_number(g: Graph) -> int:
    return _matching_size(g, g.full_mask)


def maximum_matching(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    """Maximum matching, lexicographically least among all maximum ones.

    Vertices are decided in ascending order: each is matched to its smallest
    free neighbour that still leaves a maximum matching on the rest, or left
    exposed if none does.
    """
    target = matching_number(g)
    alive = g.full_mask
    chosen: list[tuple[int, int]] = []
    for u in range(g.order):
        if len(chosen) == target:
            break
        if not alive >> u & 1:
            continue
        alive &= ~(1 << u)
        need = target - len(chosen) - 1
        for v in _bits(g.adj[u] & alive):
            rest = alive & ~(1 << v)
            if _matching_size(g, rest) == need:
                chosen.append((u, v))
                alive = rest
                break
    return len(chosen), chosen


def induced_matching_number(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    best = _core.max_induced_matching(g.adj, g.order, g.full_mask)
    return len(best), best


def fractional_matching_number(g: Graph) -> Fraction:
    """Exact fractional matching number.

    Equals half the matching number of the bipartite double cover (each
    vertex ``v`` split into ``v_left``/``v_right``, each edge ``uv`` giving
    ``u_left v_right`` and ``v_left u_right``), solved with augmenting paths.
    """
    n = g.order
    right_mate = [-1] * n
    nbrs = [list(_bits(m)) for m in g.adj]

    def augment(u: int, seen: list[bool]) -> bool:
        for w in nbrs[u]:
            if seen[w]:
                continue
            seen[w] = True
            if right_mate[w] < 0 or augment(right_mate[w], seen):
                right_mate[w] = u
                return True
        return False

    size = 0
    for u in range(n):
        if augment(u, [False] * n):
            size += 1
    return Fraction(size, 2)


# ------------------------------------------------------------ family packings


def connected_subsets(g: Graph, k: int) -> Iterator[int]:
    """Every vertex set of size ``k`` inducing a connected subgraph, as a mask.

    Each set is produced exactly once (Wernicke's ESU enumeration).
    """
    if k <= 0:
        return
    adj = g.adj

    def extend(sub: int, closed: int, ext: int, root: int, size: int) -> Iterator[int]:
        if size == k:
            yield sub
            return
        while ext:
            b = ext & -ext
            w = b.bit_length() - 1
            ext ^= b
            new = adj[w] & ~closed
            new &= ~((1 << (root + 1)) - 1)
            yield from extend(sub | b, closed | adj[w] | b, ext | new, root, size + 1)

    for v in range(g.order):
        above = ~((1 << (v + 1)) - 1)
        yield from extend(1 << v, adj[v] | (1 << v), adj[v] & above, v, 1)


def _shape_key(g: Graph) -> tuple:
    return (g.order, g.size, tuple(sorted(g.degree(v) for v in range(g.order))))


def induced_family_matching_number(
    g: Graph, family: Sequence[Graph]
) -> tuple[int, list[list[int]]]:
    """Maximum number of components of an induced subgraph whose components
    are each isomorphic to a member of ``family``.

    Candidate components are all connected vertex sets inducing a member;
    two candidates conflict if they overlap or are joined by an edge.  The
    answer is a maximum independent set of the conflict graph.
    """
    from .families import contains_induced
    from .graph import induced_subgraph

    if not family:
        raise PreconditionError("family must be non-empty")
    for h in family:
        if h.order == 0 or not is_connected(h):
            raise PreconditionError("family members must be connected and non-empty")
    if g.order == 0:
        return 0, []
    by_shape: dict[tuple, list[Graph]] = {}
    for h in family:
        by_shape.setdefault(_shape_key(h), []).append(h)
    sizes = sorted({h.order for h in family})
    cands: list[tuple[int, ...]] = []
    for k in sizes:
        for mask in connected_subsets(g, k):
            verts = list(_bits(mask))
            sub, _ = induced_subgraph(g, verts)
            members = by_shape.get(_shape_key(sub))
            if members and any(contains_induced(sub, h) is not None for h in members):
                cands.append(tuple(verts))
    cands.sort()
    if not cands:
        return 0, []
    masks = [sum(1 << v for v in c) for c in cands]
    reach = []
    for m in masks:
        r = m
        for v in _bits(m):
            r |= g.adj[v]
        reach.append(r)
    nc = len(cands)
    # compatibility graph: candidates that can coexist
    compat = [0] * nc
    for i in range(nc):
        for j in range(i + 1, nc):
            if not reach[i] & masks[j]:
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    best = _core.clique_search(compat, nc, 0, (1 << nc) - 1)
    return len(best), [list(cands[i]) for i in best]
