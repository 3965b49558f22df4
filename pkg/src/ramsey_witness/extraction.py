"""Witness extraction for the connected Ramsey-type theorems.

Each pipeline follows the corresponding constructive proof step by step and
returns an :class:`ExtractionOutcome`.  The proofs only guarantee success
above astronomically large thresholds, so every stage works with the sizes
it actually achieves: the outcome is a verified witness whenever the stages
get far enough, and otherwise a failure naming the stage that fell short.

Theorem names used in the route strings:

* ``path-clique-star``: connected graphs on many vertices contain a long
  induced path, a big clique or a big induced star.
* ``independence``: large independence number forces ``P_n``, ``H_n^1`` or
  ``K_{1,n}``.
* ``induced-matching``: large induced matching number forces ``P_n``,
  ``H_n^2``, ``T_n``, ``S_n^2`` or ``F_n``.
* ``matching``: large matching number forces ``P_n``, ``K_n``, ``K_{n,n}``,
  ``S_n^2`` or ``F_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from . import _core
from .families import FamilySpec, Witness, max_family_parameter, verify_embedding
from .graph import (
    ContractionMap,
    Graph,
    PreconditionError,
    _bits,
    contract_matching,
    induced_subgraph,
    is_connected,
    vertex_mask,
)
from .invariants import independence_number, induced_matching_number, maximum_matching

__all__ = [
    "ColorQuad",
    "ColoredCompleteGraph",
    "ExtractionOutcome",
    "SoundnessError",
    "pendant_extension",
    "prune_keep",
    "extract_path_clique_star",
    "extract_independence_witness",
    "expand_contracted_path",
    "expand_hairy",
    "expand_star",
    "extract_induced_matching_witness",
    "color_matching_pairs",
    "monochromatic_clique",
    "extract_matching_witness",
    "verify_witness",
    "THEOREM_TARGETS",
]


class SoundnessError(RuntimeError):
    """A pipeline produced a witness that fails independent verification."""


class ColorQuad(NamedTuple):
    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class ColoredCompleteGraph:
    """Complete graph on matching edges, each pair coloured by how the two
    edges see each other.  Vertex ``i`` stands for the edge ``x[i] y[i]``."""

    x: tuple[int, ...]
    y: tuple[int, ...]
    colors: dict[tuple[int, int], ColorQuad] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.x)

    def color(self, i: int, j: int) -> ColorQuad:
        return self.colors[(i, j) if i < j else (j, i)]


@dataclass(frozen=True)
class ExtractionOutcome:
    witness: Witness | None
    route: str = ""
    stage: str | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.witness is not None

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok, "route": self.route}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        else:
            out["stage"] = self.stage
            out["detail"] = self.detail
        return out


def _fail(stage: str, detail: str, route: str = "") -> ExtractionOutcome:
    return ExtractionOutcome(None, route=route, stage=stage, detail=detail)


def verify_witness(g: Graph, w: Witness) -> bool:
    """Independent check: injective, in range, and induced (pairwise)."""
    return verify_embedding(g, w.spec, w.embedding)


def _lift(w: Witness, keep: Sequence[int]) -> Witness:
    return Witness(w.spec, tuple(keep[v] for v in w.embedding))


def _finish(host: Graph, outcome: ExtractionOutcome, keep: Sequence[int] | None = None) -> ExtractionOutcome:
    if outcome.witness is None:
        return outcome
    w = outcome.witness if keep is None else _lift(outcome.witness, keep)
    if not verify_witness(host, w):
        raise SoundnessError(f"{outcome.route}: witness {w.spec.label()} {w.embedding} does not verify")
    return ExtractionOutcome(w, route=outcome.route)


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        raise PreconditionError(f"{what} requires a connected graph")


# ------------------------------------------------------------ lemma + pruning


def pendant_extension(g: Graph, tree: Sequence[int], pivots: Sequence[int]) -> list[int]:
    """Private pendant neighbours for the pivots of a connected subgraph.

    ``tree`` induces a connected subgraph ``T``; every pivot is a cut-vertex
    of ``g`` but not of ``T``.  For pivot ``v`` some component of ``g - v``
    misses ``T``; its smallest neighbour of ``v`` is returned.  The results
    are pairwise non-adjacent and each sees exactly its own pivot in ``T``.
    The returned list is aligned with ``pivots``.
    """
    _require_connected(g, "pendant_extension")
    tmask = vertex_mask(tree)
    if not tmask or tmask >> g.order:
        raise PreconditionError("tree must be a non-empty vertex set of the graph")
    if _core.reach_mask(g.adj, next(_bits(tmask)), tmask) != tmask:
        raise PreconditionError("tree does not induce a connected subgraph")
    g_cut = _core.articulation_mask(g.adj, g.order, g.full_mask)
    t_cut = _core.articulation_mask(g.adj, g.order, tmask)
    out = []
    for v in pivots:
        if not tmask >> v & 1:
            raise PreconditionError(f"pivot {v} is not in the tree")
        if not g_cut >> v & 1:
            raise PreconditionError(f"pivot {v} is not a cut-vertex of the graph")
        if t_cut >> v & 1:
            raise PreconditionError(f"pivot {v} is a cut-vertex of the tree")
        allowed = g.full_mask & ~(1 << v)
        for w in _bits(g.adj[v] & ~tmask):
            if not _core.reach_mask(g.adj, w, allowed) & tmask:
                out.append(w)
                break
        else:
            raise PreconditionError(f"pivot {v}: no component of G - v avoids the tree")
    return out


def prune_keep(g: Graph, protected: Sequence[int]) -> tuple[Graph, list[int]]:
    """Delete unprotected non-cut-vertices, smallest index first, until every
    unprotected survivor is a cut-vertex.  Returns the pruned graph and its
    new-to-old vertex map."""
    _require_connected(g, "prune_keep")
    pmask = vertex_mask(protected)
    if not pmask:
        raise PreconditionError("prune_keep needs at least one protected vertex")
    alive = g.full_mask
    while True:
        cut = _core.articulation_mask(g.adj, g.order, alive)
        cand = alive & ~pmask & ~cut
        if not cand:
            break
        alive &= ~(cand & -cand)
    return induced_subgraph(g, _bits(alive))


# ------------------------------------------------------------ path / clique / star

_PCS_ORDER = ("Path", "Clique", "Star")


def _path_clique_star(g: Graph, limit: int | None = None) -> dict[str, tuple[int, Witness | None]]:
    return {kind: max_family_parameter(g, kind, limit=limit) for kind in _PCS_ORDER}


def _trim(w: Witness, n: int) -> Witness:
    """Cut a path, clique or star witness down to parameter ``n``."""
    kind = w.spec.kind
    if kind in ("Path", "Clique"):
        return Witness(FamilySpec(kind, n), w.embedding[:n])
    if kind == "Star":
        return Witness(FamilySpec.star(n), w.embedding[: n + 1])
    raise ValueError(f"cannot trim {kind}")


def extract_path_clique_star(g: Graph, n: int) -> ExtractionOutcome:
    """Largest induced path, clique or star, preferring that order on ties."""
    _require_connected(g, "extract_path_clique_star")
    found = _path_clique_star(g)
    kind = max(_PCS_ORDER, key=lambda k: (found[k][0], -_PCS_ORDER.index(k)))
    size, w = found[kind]
    route = "path-clique-star"
    if size < n:
        sizes = ", ".join(f"{k}={found[k][0]}" for k in _PCS_ORDER)
        return _fail("path-clique-star search", f"largest structures: {sizes}; need {n}", route)
    return _finish(g, ExtractionOutcome(w, route=f"{route}:{kind}"))


# ------------------------------------------------------------ independence


def _hairy_from_clique(g1: Graph, clique: Sequence[int], umask: int, n: int) -> ExtractionOutcome:
    # a clique holds at most one vertex of the independent set U
    core = [v for v in clique if not umask >> v & 1][:n]
    if len(core) < n:
        return _fail("clique branch", f"clique avoiding U has {len(core)} vertices; need {n}")
    try:
        pend = pendant_extension(g1, core, core)
    except PreconditionError as exc:
        return _fail("pendant extension", str(exc))
    return ExtractionOutcome(Witness(FamilySpec.hairy(n, 1), tuple(core + pend)), route="independence:clique")


def extract_independence_witness(g: Graph, n: int) -> ExtractionOutcome:
    """``P_n``, ``H_n^1`` or ``K_{1,n}`` via a maximum independent set.

    Prune unprotected non-cut-vertices around the independent set ``U``,
    then look for a path, clique or star at parameter ``n + 1``.  Paths and
    stars are returned directly; a clique loses its (at most one) vertex of
    ``U`` and the lemma grows a private pendant on each remaining vertex.
    """
    _require_connected(g, "extract_independence_witness")
    _, indep = independence_number(g)
    g1, keep = prune_keep(g, indep)
    index = {v: i for i, v in enumerate(keep)}
    umask = vertex_mask(index[v] for v in indep)
    found = _path_clique_star(g1, limit=n + 1)
    first = max(_PCS_ORDER, key=lambda k: (found[k][0], -_PCS_ORDER.index(k)))
    order = [first] + [k for k in _PCS_ORDER if k != first]
    reasons = []
    for kind in order:
        size, w = found[kind]
        if kind == "Clique":
            if w is None:
                reasons.append("no clique")
                continue
            outcome = _hairy_from_clique(g1, list(w.embedding), umask, n)
            if outcome.ok:
                return _finish(g, outcome, keep)
            reasons.append(f"{outcome.stage}: {outcome.detail}")
        elif size >= n:
            return _finish(g, ExtractionOutcome(_trim(w, n), route=f"independence:{kind.lower()}"), keep)
        else:
            reasons.append(f"{kind}={size}")
    return _fail("path-clique-star search", "; ".join(reasons), "independence")


# ------------------------------------------------------------ induced matching


def _expanded_graph(g: Graph, cm: ContractionMap) -> Graph:
    adj = []
    for idx, pre in enumerate(cm.expansion_of):
        m = 0
        for v in pre:
            for w in _bits(g.adj[v]):
                m |= 1 << cm.contracted_of[w]
        adj.append(m & ~(1 << idx))
    return Graph._trusted(len(cm.expansion_of), adj)


def _single(cm: ContractionMap, u: int) -> int:
    pre = cm.expansion_of[u]
    if len(pre) != 1:
        raise PreconditionError(f"vertex {u} of the contracted graph is a contracted edge")
    return pre[0]


def _end_towards(g: Graph, edge: tuple[int, int], target: int) -> int:
    x, y = edge
    return x if g.adjacent(x, target) else y


def expand_contracted_path(g: Graph, cm: ContractionMap, path: Sequence[int]) -> list[int]:
    """Blow an induced path of the contracted graph back up into ``g``.

    An interior contracted vertex keeps the end of its edge adjacent to both
    path neighbours if there is one, otherwise both ends in path order.  A
    contracted path end keeps both ends when only one of them sees its
    neighbour (which lengthens the path) and a single end otherwise.
    """
    gp = _expanded_graph(g, cm)
    k = len(path)
    if len(set(path)) != k:
        raise PreconditionError("path repeats a vertex")
    for i in range(k):
        for j in range(i + 1, k):
            if gp.adjacent(path[i], path[j]) != (j == i + 1):
                raise PreconditionError("input is not an induced path of the contracted graph")
    out: list[int] = []
    for i, u in enumerate(path):
        pre = cm.expansion_of[u]
        if len(pre) == 1:
            out.append(pre[0])
            continue
        x, y = pre
        prev = _single(cm, path[i - 1]) if i > 0 else None
        nxt = _single(cm, path[i + 1]) if i + 1 < k else None
        nbrs = [w for w in (prev, nxt) if w is not None]
        if len(nbrs) == 2:
            common = [z for z in (x, y) if all(g.adjacent(z, w) for w in nbrs)]
            if common:
                out.append(common[0])
            elif g.adjacent(x, prev):
                out.extend((x, y))
            else:
                out.extend((y, x))
        elif len(nbrs) == 1:
            w = nbrs[0]
            if g.adjacent(x, w) and g.adjacent(y, w):
                out.append(x)
            else:
                near = x if g.adjacent(x, w) else y
                far = y if near == x else x
                out.extend((near, far) if prev is not None else (far, near))
        else:
            out.extend((x, y))
    return out


def _pigeonhole(g: Graph, cm: ContractionMap, pairs: Sequence[tuple[int, int]]):
    """Split ``(anchor, contracted vertex)`` pairs by how many ends of the
    contracted edge see the anchor.  Returns (both, one) lists of
    ``(anchor, near end, far end)``."""
    both, one = [], []
    for anchor, u in pairs:
        x, y = cm.contracted_edge_of[u]
        ax, ay = g.adjacent(anchor, x), g.adjacent(anchor, y)
        if ax and ay:
            both.append((anchor, x, y))
        elif ax:
            one.append((anchor, x, y))
        else:
            one.append((anchor, y, x))
    return both, one


def _pendant_hairs(g: Graph, cm: ContractionMap, gp: Graph, tree: list[int], pivots: list[int]) -> list[int]:
    """Lemma on the contracted graph, then each new pendant expanded to the
    end of its edge that sees its pivot."""
    pend = pendant_extension(gp, tree, pivots)
    out = []
    for p, w in zip(pivots, pend):
        anchor = _single(cm, p)
        pre = cm.expansion_of[w]
        out.append(pre[0] if len(pre) == 1 else _end_towards(g, pre, anchor))
    return out


def expand_hairy(
    g: Graph, cm: ContractionMap, hairy: Witness, contracted: Sequence[int], n: int
) -> ExtractionOutcome:
    """Turn ``H_k^1`` in the contracted graph (clique avoiding the contracted
    vertices) into ``T_n`` or ``H_n^2`` in ``g``.

    With at least ``2n`` contracted leaves the edges behind them are split
    by how many ends see their clique vertex (``T_n`` preferred on ties);
    otherwise ``n`` ordinary leaves get private pendants from the lemma.
    """
    if hairy.spec.kind != "HairyClique" or hairy.spec.l != 1:
        raise PreconditionError("expected an H_k^1 witness")
    k = hairy.spec.n
    clique = list(hairy.embedding[:k])
    leaves = list(hairy.embedding[k:])
    umask = vertex_mask(contracted)
    if any(umask >> v & 1 for v in clique):
        raise PreconditionError("clique of the hairy witness meets the contracted vertices")
    in_u = [i for i in range(k) if umask >> leaves[i] & 1]
    out_u = [i for i in range(k) if not umask >> leaves[i] & 1]
    both, one = _pigeonhole(g, cm, [(_single(cm, clique[i]), leaves[i]) for i in in_u])

    def by_class() -> ExtractionOutcome | None:
        if len(both) >= n:
            sel = both[:n]
            emb = [a for a, _, _ in sel] + [v for _, x, y in sel for v in (x, y)]
            return ExtractionOutcome(Witness(FamilySpec.triangles(n), tuple(emb)), route="induced-matching:hairy-both-ends")
        if len(one) >= n:
            sel = one[:n]
            emb = [a for a, _, _ in sel] + [v for _, z, o in sel for v in (z, o)]
            return ExtractionOutcome(Witness(FamilySpec.hairy(n, 2), tuple(emb)), route="induced-matching:hairy-one-end")
        return None

    def by_lemma() -> ExtractionOutcome:
        sel = out_u[:n]
        core = [clique[i] for i in sel]
        pivots = [leaves[i] for i in sel]
        try:
            tips = _pendant_hairs(g, cm, _expanded_graph(g, cm), core + pivots, pivots)
        except PreconditionError as exc:
            return _fail("pendant extension", str(exc), "induced-matching:hairy")
        emb = [_single(cm, c) for c in core]
        for p, t in zip(pivots, tips):
            emb.extend((_single(cm, p), t))
        return ExtractionOutcome(Witness(FamilySpec.hairy(n, 2), tuple(emb)), route="induced-matching:hairy-lemma")

    if len(in_u) >= 2 * n:
        res = by_class()
        if res is not None:
            return res
    if len(out_u) >= n:
        res = by_lemma()
        if res.ok:
            return res
    res = by_class()
    if res is not None:
        return res
    return _fail(
        "hairy expansion",
        f"H^1_{k}: {len(in_u)} contracted leaves (classes {len(both)}/{len(one)}), "
        f"{len(out_u)} other leaves; need {n}",
        "induced-matching:hairy",
    )


def expand_star(
    g: Graph, cm: ContractionMap, star: Witness, contracted: Sequence[int], n: int
) -> ExtractionOutcome:
    """Turn ``K_{1,k}`` in the contracted graph into ``S_n^2`` or ``F_n``.

    Contracted centre: the end seeing more leaves becomes the centre and the
    lemma hangs a pendant on ``n`` of its leaves.  Ordinary centre: ``n``
    ordinary leaves go through the lemma the same way; otherwise contracted
    leaves are split by how many ends see the centre (``F_n`` preferred).
    """
    if star.spec.kind != "Star":
        raise PreconditionError("expected a star witness")
    c = star.embedding[0]
    leaves = list(star.embedding[1:])
    umask = vertex_mask(contracted)
    gp = None

    def lemma_route(center: int, pivots: list[int], route: str) -> ExtractionOutcome:
        nonlocal gp
        if gp is None:
            gp = _expanded_graph(g, cm)
        try:
            tips = _pendant_hairs(g, cm, gp, [c] + pivots, pivots)
        except PreconditionError as exc:
            return _fail("pendant extension", str(exc), route)
        emb = [center]
        for p, t in zip(pivots, tips):
            emb.extend((_single(cm, p), t))
        return ExtractionOutcome(Witness(FamilySpec.spider(n, 2), tuple(emb)), route=route)

    if umask >> c & 1:
        x, y = cm.contracted_edge_of[c]
        lx = [v for v in leaves if g.adjacent(x, _single(cm, v))]
        ly = [v for v in leaves if g.adjacent(y, _single(cm, v))]
        end, seen = (x, lx) if len(lx) >= len(ly) else (y, ly)
        if len(seen) < n:
            return _fail(
                "star expansion",
                f"contracted centre: best end sees {len(seen)} leaves; need {n}",
                "induced-matching:star",
            )
        return lemma_route(end, seen[:n], "induced-matching:star-contracted-centre")

    center = _single(cm, c)
    plain = [v for v in leaves if not umask >> v & 1]
    merged = [v for v in leaves if umask >> v & 1]
    if len(plain) >= n:
        res = lemma_route(center, plain[:n], "induced-matching:star-lemma")
        if res.ok:
            return res
    both, one = _pigeonhole(g, cm, [(center, u) for u in merged])
    if len(both) >= n:
        emb = [center] + [v for _, x, y in both[:n] for v in (x, y)]
        return ExtractionOutcome(Witness(FamilySpec.friendship(n), tuple(emb)), route="induced-matching:star-both-ends")
    if len(one) >= n:
        emb = [center] + [v for _, z, o in one[:n] for v in (z, o)]
        return ExtractionOutcome(Witness(FamilySpec.spider(n, 2), tuple(emb)), route="induced-matching:star-one-end")
    return _fail(
        "star expansion",
        f"K_1,{len(leaves)}: {len(plain)} ordinary leaves, contracted classes {len(both)}/{len(one)}; need {n}",
        "induced-matching:star",
    )


def _hairy_in_contracted(gp: Graph, clique: Sequence[int], umask: int, cap: int) -> Witness | None:
    # clique branch of the independence argument, run inside the contracted graph
    core = [v for v in clique if not umask >> v & 1][:cap]
    if not core:
        return None
    pend = pendant_extension(gp, core, core)
    return Witness(FamilySpec.hairy(len(core), 1), tuple(core + pend))


def extract_induced_matching_witness(g: Graph, n: int) -> ExtractionOutcome:
    """``P_n``, ``H_n^2``, ``T_n``, ``S_n^2`` or ``F_n`` via a maximum
    induced matching.

    The matching's ends are protected while other non-cut-vertices are
    pruned; contracting the matching gives a graph in which the contracted
    vertices are independent and everything else is a cut-vertex.  There the
    independence argument looks for a path, a clique (grown into ``H_k^1``
    by the lemma) or a star, searched up to ``3n + 2`` and tried largest
    first (ties: path, clique, star); the structure is then expanded back
    into ``g``.
    """
    _require_connected(g, "extract_induced_matching_witness")
    size, matching = induced_matching_number(g)
    route = "induced-matching"
    if size == 0:
        return _fail("induced matching", "graph has no edges", route)
    ends = [v for e in matching for v in e]
    g1, keep = prune_keep(g, ends)
    index = {v: i for i, v in enumerate(keep)}
    gp, cm = contract_matching(g1, [(index[u], index[v]) for u, v in matching])
    contracted = cm.contracted
    umask = vertex_mask(contracted)
    cap = 3 * n + 2
    found = _path_clique_star(gp, limit=cap)
    order = sorted(_PCS_ORDER, key=lambda k: (-found[k][0], _PCS_ORDER.index(k)))
    notes = []
    for kind in order:
        size, w = found[kind]
        if w is None:
            notes.append(f"no {kind.lower()}")
            continue
        if kind == "Path":
            path = expand_contracted_path(g1, cm, w.embedding)
            if len(path) >= n:
                res = ExtractionOutcome(Witness(FamilySpec.path(n), tuple(path[:n])), route=f"{route}:path")
                return _finish(g, res, keep)
            notes.append(f"path {size} expands to {len(path)}")
        elif kind == "Clique":
            hairy = _hairy_in_contracted(gp, w.embedding, umask, cap)
            if hairy is None:
                notes.append("clique lies in contracted vertices")
                continue
            res = expand_hairy(g1, cm, hairy, contracted, n)
            if res.ok:
                return _finish(g, res, keep)
            notes.append(f"{res.stage}: {res.detail}")
        else:
            comp = gp.complement()
            stars = []
            for c in range(gp.order):
                leaves = _core.clique_search(comp.adj, gp.order, 0, gp.adj[c])[:cap]
                if len(leaves) >= n:
                    stars.append((-len(leaves), c, leaves))
            stars.sort()
            for _, c, leaves in stars:
                star = Witness(FamilySpec.star(len(leaves)), (c, *leaves))
                res = expand_star(g1, cm, star, contracted, n)
                if res.ok:
                    return _finish(g, res, keep)
            notes.append(f"star {size} did not expand")
    return _fail("contracted-graph search", "; ".join(notes), route)


# ------------------------------------------------------------ matching


def color_matching_pairs(g: Graph, matching: Sequence[tuple[int, int]]) -> ColoredCompleteGraph:
    """Colour every pair of oriented matching edges ``(x_i, y_i)``,
    ``(x_j, y_j)`` (``i < j``) by adjacency of ``x_i x_j``, ``y_i y_j``,
    ``x_i y_j`` and ``y_i x_j``."""
    seen = 0
    for x, y in matching:
        if not g.adjacent(x, y):
            raise PreconditionError(f"({x}, {y}) is not an edge")
        if seen >> x & 1 or seen >> y & 1:
            raise PreconditionError("edges share an end; not a matching")
        seen |= (1 << x) | (1 << y)
    xs = tuple(x for x, _ in matching)
    ys = tuple(y for _, y in matching)
    colors = {}
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            colors[(i, j)] = ColorQuad(
                int(g.adjacent(xs[i], xs[j])),
                int(g.adjacent(ys[i], ys[j])),
                int(g.adjacent(xs[i], ys[j])),
                int(g.adjacent(ys[i], xs[j])),
            )
    return ColoredCompleteGraph(xs, ys, colors)


ALL_QUADS = tuple(ColorQuad(a, b, c, d) for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1))

# witness-producing colours first, the recursive (0,0,0,0) case last
PIPELINE_COLOR_ORDER = tuple(
    sorted(
        ALL_QUADS,
        key=lambda q: (
            0 if q.a or q.b else 1 if (q.c, q.d) == (1, 1) else 2 if q.c or q.d else 3,
            tuple(-v for v in q),
        ),
    )
)


def _color_graph(h: ColoredCompleteGraph, quad: ColorQuad) -> list[int]:
    adj = [0] * h.order
    for (i, j), col in h.colors.items():
        if col == quad:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def monochromatic_clique(
    h: ColoredCompleteGraph, k: int, order: Sequence[ColorQuad] = ALL_QUADS
) -> tuple[ColorQuad, list[int]] | None:
    """A ``k``-set whose pairs all share one colour, trying colours in
    ``order``; the lexicographically first such set for the first colour
    that has one."""
    if k < 1:
        raise ValueError("k must be at least 1")
    m = h.order
    if k > m:
        return None
    if k == 1:
        return order[0], [0]
    for quad in order:
        found = _core.clique_search(_color_graph(h, quad), m, k, (1 << m) - 1)
        if found is not None:
            return quad, found
    return None


def _needed(quad: ColorQuad, n: int) -> int:
    # class size that already forces a target at parameter n
    if quad == (1, 1, 1, 1):
        return (n + 1) // 2
    if quad.a or quad.b or (quad.c and quad.d):
        return n
    if quad.c or quad.d:
        return 2 * n
    # all-zero: the class is an induced matching; the recursion decides
    return 1


def _color_witness(g: Graph, h: ColoredCompleteGraph, quad: ColorQuad, sel: list[int], n: int, route: str):
    xs = [h.x[i] for i in sel]
    ys = [h.y[i] for i in sel]
    k = len(sel)
    half = k // 2
    tag = f"{route}:{''.join(map(str, quad))}"
    if quad == (1, 1, 1, 1):
        # every cross pair is adjacent as well, so both ends form one clique
        w = Witness(FamilySpec.clique(2 * k), tuple(v for pair in zip(xs, ys) for v in pair))
    elif quad.a:
        w = Witness(FamilySpec.clique(k), tuple(xs))
    elif quad.b:
        w = Witness(FamilySpec.clique(k), tuple(ys))
    elif quad.c and quad.d:
        w = Witness(FamilySpec.biclique(k), tuple(xs + ys))
    elif quad.c:
        # x_i y_j is an edge whenever i < j
        w = Witness(FamilySpec.biclique(half), tuple(xs[:half] + ys[k - half :]))
    elif quad.d:
        w = Witness(FamilySpec.biclique(half), tuple(ys[:half] + xs[k - half :]))
    else:
        inner = extract_induced_matching_witness(g, n)
        if not inner.ok:
            return _fail(inner.stage, inner.detail, f"{tag}>{inner.route}")
        w = inner.witness
        if w.spec.kind in ("HairyClique", "TriangleClique"):
            # the clique core of H_n^2 and T_n is a K_n
            w = Witness(FamilySpec.clique(n), w.embedding[:n])
        return _finish(g, ExtractionOutcome(w, route=f"{tag}>{inner.route}"))
    return _finish(g, ExtractionOutcome(w, route=tag))


def extract_matching_witness(g: Graph, n: int, r: int) -> ExtractionOutcome:
    """``P_n``, ``K_n``, ``K_{n,n}``, ``S_n^2`` or ``F_n`` via a maximum
    matching whose edges (lower end first) are pair-coloured.

    A monochromatic ``2r``-set decides the case as in the proof.  When none
    exists, the largest monochromatic set of each colour is checked against
    the size that already forces a target at ``n`` (``n`` for clique and
    full-biclique colours, ``2n`` for the half-graph colours; the all-zero
    colour always hands over to the induced-matching pipeline).
    """
    _require_connected(g, "extract_matching_witness")
    if r < n:
        raise PreconditionError(f"r = {r} must be at least n = {n}")
    route = "matching"
    size, matching = maximum_matching(g)
    if size == 0:
        return _fail("maximum matching", "graph has no edges", route)
    h = color_matching_pairs(g, matching)
    found = monochromatic_clique(h, 2 * r, PIPELINE_COLOR_ORDER) if size >= 2 * r else None
    if found is not None:
        quad, sel = found
        res = _color_witness(g, h, quad, sel, n, route)
        if res.ok:
            return res
    sizes = []
    for quad in PIPELINE_COLOR_ORDER:
        sel = _core.clique_search(_color_graph(h, quad), h.order, 0, (1 << h.order) - 1)
        if len(sel) >= 2:
            sizes.append(f"{''.join(map(str, quad))}={len(sel)}")
        if sel and len(sel) >= _needed(quad, n):
            res = _color_witness(g, h, quad, sel, n, f"{route}-achieved")
            if res.ok:
                return res
    return _fail(
        "monochromatic clique",
        f"no monochromatic set of size {2 * r} among {size} matching edges; largest classes: {', '.join(sizes) or 'none'}",
        route,
    )


THEOREM_TARGETS = {
    "independence": ("Path", "HairyClique1", "Star"),
    "induced-matching": ("Path", "HairyClique2", "TriangleClique", "Spider2", "Friendship"),
    "matching": ("Path", "Clique", "Biclique", "Spider2", "Friendship"),
}


def target_specs(theorem: str, n: int) -> list[FamilySpec]:
    """Family members listed in a theorem's conclusion at parameter ``n``."""
    table = {
        "Path": FamilySpec.path(n),
        "Clique": FamilySpec.clique(n),
        "Star": FamilySpec.star(n),
        "Biclique": FamilySpec.biclique(n),
        "HairyClique1": FamilySpec.hairy(n, 1),
        "HairyClique2": FamilySpec.hairy(n, 2),
        "TriangleClique": FamilySpec.triangles(n),
        "Spider2": FamilySpec.spider(n, 2),
        "Friendship": FamilySpec.friendship(n),
    }
    try:
        return [table[k] for k in THEOREM_TARGETS[theorem]]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem!r}") from None


def run_pipeline(g: Graph, theorem: str, n: int, r: int | None = None) -> ExtractionOutcome:
    if theorem == "independence":
        return extract_independence_witness(g, n)
    if theorem == "induced-matching":
        return extract_induced_matching_witness(g, n)
    if theorem == "matching":
        return extract_matching_witness(g, n, n if r is None else r)
    if theorem == "path-clique-star":
        return extract_path_clique_star(g, n)
    raise ValueError(f"unknown theorem {theorem!r}")
