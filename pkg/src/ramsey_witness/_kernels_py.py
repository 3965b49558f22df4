"""Pure-Python bitset kernels.

Every graph is passed as a sequence of adjacency bitmasks: bit ``w`` of
``adj[v]`` is set iff ``v`` and ``w`` are adjacent.  The compiled module
``_kernels`` exposes the same functions with the same results for graphs of
at most 64 vertices; this module handles any order.
"""

from __future__ import annotations

from typing import Sequence


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def _bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def reach_mask(adj: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` inside ``allowed`` (start included)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def articulation_mask(adj: Sequence[int], n: int, alive: int) -> int:
    """Articulation points of the subgraph induced on ``alive``.

    Iterative lowpoint DFS; each component of the induced subgraph is
    handled separately.
    """
    disc = [-1] * n
    low = [0] * n
    result = 0
    t = 0
    for root in _bits(alive):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [[root, -1, adj[root] & alive]]
        while stack:
            frame = stack[-1]
            v, p, rem = frame
            if rem:
                b = rem & -rem
                frame[2] = rem ^ b
                w = b.bit_length() - 1
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append([w, v, adj[w] & alive])
                elif w != p and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if p < 0:
                    continue
                if low[v] < low[p]:
                    low[p] = low[v]
                if p == root:
                    root_children += 1
                elif low[v] >= disc[p]:
                    result |= 1 << p
        if root_children >= 2:
            result |= 1 << root
    return result


def _color_bound(adj: Sequence[int], cand: int) -> int:
    # greedy partition of cand into independent sets; bounds any clique in cand
    colors = 0
    while cand:
        colors += 1
        q = cand
        while q:
            b = q & -q
            v = b.bit_length() - 1
            q &= ~adj[v] & ~b
            cand &= ~b
    return colors


def clique_search(adj: Sequence[int], n: int, k: int, cand: int) -> list[int] | None:
    """Clique search restricted to the vertex mask ``cand``.

    ``k == 0``: return the lexicographically least maximum clique (sorted).
    ``k > 0``: return the lexicographically first clique of size ``k``, or
    ``None`` when no such clique exists.
    """
    best: list[int] = []
    cur: list[int] = []
    found = False

    def expand(p: int) -> None:
        nonlocal best, found
        if k:
            if len(cur) == k:
                best = cur[:]
                found = True
                return
            if len(cur) + _color_bound(adj, p) < k:
                return
        else:
            if not p:
                if len(cur) > len(best):
                    best = cur[:]
                return
            if len(cur) + _color_bound(adj, p) <= len(best):
                return
        while p:
            b = p & -p
            v = b.bit_length() - 1
            cur.append(v)
            expand(p & adj[v])
            cur.pop()
            if found:
                return
            p ^= b
            if k:
                if len(cur) + bin(p).count("1") < k:
                    return
            elif len(cur) + bin(p).count("1") <= len(best):
                return
        if not k and len(cur) > len(best):
            best = cur[:]

    expand(cand)
    if k:
        return best if found else None
    return best


def max_induced_matching(adj: Sequence[int], n: int, alive: int) -> list[tuple[int, int]]:
    """Lexicographically least maximum induced matching inside ``alive``.

    Branches on the lowest vertex that still has a live neighbour: match it
    to each live neighbour in ascending order, then leave it unmatched.  That
    visits edge lists in lexicographic order, so the first maximum found is
    the least one.
    """
    closed = [adj[v] | (1 << v) for v in range(n)]
    best: list[tuple[int, int]] = []
    best_size = -1
    cur: list[tuple[int, int]] = []

    def rec(avail: int) -> None:
        nonlocal best, best_size
        active = 0
        for v in _bits(avail):
            if adj[v] & avail:
                active |= 1 << v
        if not active:
            if len(cur) > best_size:
                best = cur[:]
                best_size = len(cur)
            return
        if len(cur) + bin(active).count("1") // 2 <= best_size:
            return
        u = _low(active)
        for v in _bits(adj[u] & active):
            cur.append((u, v))
            rec(active & ~(closed[u] | closed[v]))
            cur.pop()
        rec(active & ~(1 << u))

    rec(alive)
    return best


def induced_embedding(
    hadj: Sequence[int], hn: int, padj: Sequence[int], pn: int
) -> list[int] | None:
    """First induced embedding of the pattern into the host, or ``None``.

    Returns ``emb`` with ``emb[p]`` the host image of pattern vertex ``p``.
    Pattern vertices are matched in a connectivity-first order; host
    candidates are tried in ascending order, so the result is deterministic.
    """
    if pn == 0:
        return []
    if pn > hn:
        return None
    pdeg = [bin(padj[p]).count("1") for p in range(pn)]
    hdeg = [bin(hadj[v]).count("1") for v in range(hn)]
    order = _pattern_order(padj, pn, pdeg)
    pos = {p: i for i, p in enumerate(order)}
    full = (1 << hn) - 1
    # for each depth: (degree-feasible host mask, [(earlier depth, adjacent?)])
    plan = []
    for i, p in enumerate(order):
        need = pdeg[p]
        ok = 0
        for v in range(hn):
            if hdeg[v] >= need:
                ok |= 1 << v
        rel = [(pos[q], bool(padj[p] >> q & 1)) for q in order[:i]]
        plan.append((ok, rel))
    img = [0] * pn

    def rec(depth: int, used: int) -> bool:
        if depth == pn:
            return True
        ok, rel = plan[depth]
        cand = ok & ~used
        for j, is_adj in rel:
            if is_adj:
                cand &= hadj[img[j]]
            else:
                cand &= ~hadj[img[j]]
            if not cand:
                return False
        cand &= full
        while cand:
            b = cand & -cand
            img[depth] = b.bit_length() - 1
            if rec(depth + 1, used | b):
                return True
            cand ^= b
        return False

    if not rec(0, 0):
        return None
    emb = [0] * pn
    for i, p in enumerate(order):
        emb[p] = img[i]
    return emb


def _pattern_order(padj: Sequence[int], pn: int, pdeg: list[int]) -> list[int]:
    placed = 0
    order: list[int] = []
    remaining = set(range(pn))
    while remaining:
        best = min(
            remaining,
            key=lambda p: (-bin(padj[p] & placed).count("1"), -pdeg[p], p),
        )
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order
