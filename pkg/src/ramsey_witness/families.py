"""Named graph families, induced-subgraph detection and witnesses.

Canonical vertex numbering of :func:`generate` (part of the public
contract, so embeddings are reproducible):

``Path(n)``
    ``0 - 1 - ... - n-1``.
``Clique(n)``
    ``0..n-1``.
``Star(n)``
    centre ``0``, leaves ``1..n``.
``Biclique(n, m)``
    sides ``0..n-1`` and ``n..n+m-1``.
``HairyClique(n, l)``
    clique ``0..n-1``; the hair of clique vertex ``i`` is
    ``n+i*l, ..., n+i*l+l-1`` with ``n+i*l`` adjacent to ``i``.
``TriangleClique(n)``
    clique ``0..n-1``; ``n+2i`` and ``n+2i+1`` close a triangle on ``i``.
``Spider(n, l)``
    centre ``0``; leg ``i`` is ``1+i*l, ..., 1+i*l+l-1`` starting next to the
    centre.
``Friendship(n)``
    centre ``0``; triangle ``i`` uses ``1+2i`` and ``2+2i``.
``GeneralBroom(H, X, l)``
    handle ``0..l-1`` with ``0`` the broom's endpoint and ``l-1`` joined to
    every vertex of ``X``; the copy of ``H`` is ``l..l+|H|-1``.
``GeneralHairy(H, X, n, l)``
    clique ``0..n-1``; broom ``i`` has its endpoint identified with ``i`` and
    its other ``l-1+|H|`` vertices in broom order at ``n+i*(l-1+|H|)``.
``GeneralStar(H, X, n, l)``
    centre ``0`` (all endpoints identified); broom ``i`` occupies
    ``1+i*(l-1+|H|)`` onwards in broom order.

With these conventions ``GeneralHairy(P1, {0}, n, l) == HairyClique(n, l)``,
``GeneralHairy(K2, {0, 1}, n, 1) == TriangleClique(n)``,
``GeneralStar(P1, {0}, n, l) == Spider(n, l)`` and
``GeneralStar(K2, {0, 1}, n, 1) == Friendship(n)``, vertex for vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _core
from .graph import Graph, is_connected, parse_graph6, write_graph6

__all__ = [
    "FamilySpec",
    "Witness",
    "generate",
    "contains_induced",
    "max_family_parameter",
    "SINGLE_PARAMETER_KINDS",
]

KINDS = (
    "Path",
    "Clique",
    "Star",
    "Biclique",
    "HairyClique",
    "TriangleClique",
    "Spider",
    "Friendship",
    "GeneralBroom",
    "GeneralHairy",
    "GeneralStar",
)

# kinds driven by a single size parameter n (Biclique means Biclique(n, n))
SINGLE_PARAMETER_KINDS = (
    "Path",
    "Clique",
    "Star",
    "Biclique",
    "HairyClique",
    "TriangleClique",
    "Spider",
    "Friendship",
    "GeneralHairy",
    "GeneralStar",
)


@dataclass(frozen=True)
class FamilySpec:
    """One member of a named family.

    ``n`` is the size parameter (``m`` is the second side of a biclique),
    ``l`` the length parameter, and ``pattern``/``attach`` the graph ``H``
    and attachment set ``X`` of the generalised kinds.
    """

    kind: str
    n: int = 1
    m: int | None = None
    l: int | None = None
    pattern: Graph | None = None
    attach: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.kind == "Biclique":
            if self.m is None:
                object.__setattr__(self, "m", self.n)
            if self.m < 1:
                raise ValueError("m must be at least 1")
        if self.kind in ("HairyClique", "Spider", "GeneralBroom", "GeneralHairy", "GeneralStar"):
            if self.l is None or self.l < 1:
                raise ValueError(f"{self.kind} needs a length l >= 1")
        if self.kind.startswith("General"):
            h = self.pattern
            if h is None or self.attach is None:
                raise ValueError(f"{self.kind} needs a pattern graph and an attachment set")
            attach = tuple(sorted(set(self.attach)))
            object.__setattr__(self, "attach", attach)
            if not attach or attach[0] < 0 or attach[-1] >= h.order:
                raise ValueError("attachment set must be a non-empty subset of the pattern's vertices")
            if not is_connected(h):
                raise ValueError("pattern graph must be connected")

    # constructors read better at call sites than keyword soup
    @classmethod
    def path(cls, n: int) -> FamilySpec:
        return cls("Path", n)

    @classmethod
    def clique(cls, n: int) -> FamilySpec:
        return cls("Clique", n)

    @classmethod
    def star(cls, n: int) -> FamilySpec:
        return cls("Star", n)

    @classmethod
    def biclique(cls, n: int, m: int | None = None) -> FamilySpec:
        return cls("Biclique", n, m=n if m is None else m)

    @classmethod
    def hairy(cls, n: int, l: int) -> FamilySpec:
        return cls("HairyClique", n, l=l)

    @classmethod
    def triangles(cls, n: int) -> FamilySpec:
        return cls("TriangleClique", n)

    @classmethod
    def spider(cls, n: int, l: int) -> FamilySpec:
        return cls("Spider", n, l=l)

    @classmethod
    def friendship(cls, n: int) -> FamilySpec:
        return cls("Friendship", n)

    def with_n(self, n: int) -> FamilySpec:
        m = n if self.kind == "Biclique" else self.m
        return FamilySpec(self.kind, n, m, self.l, self.pattern, self.attach)

    def label(self) -> str:
        if self.kind == "Biclique":
            return f"Biclique({self.n},{self.m})"
        if self.kind in ("HairyClique", "Spider"):
            return f"{self.kind}({self.n},l={self.l})"
        if self.kind.startswith("General"):
            h = write_graph6(self.pattern)
            return f"{self.kind}(H={h},X={list(self.attach)},n={self.n},l={self.l})"
        return f"{self.kind}({self.n})"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "n": self.n}
        if self.m is not None:
            out["m"] = self.m
        if self.l is not None:
            out["l"] = self.l
        if self.pattern is not None:
            out["pattern"] = write_graph6(self.pattern)
            out["attach"] = list(self.attach)
        return out

    @classmethod
    def from_json(cls, data: dict) -> FamilySpec:
        pattern = data.get("pattern")
        attach = data.get("attach")
        return cls(
            data["kind"],
            int(data.get("n", 1)),
            m=data.get("m"),
            l=data.get("l"),
            pattern=parse_graph6(pattern) if pattern is not None else None,
            attach=tuple(attach) if attach is not None else None,
        )


@dataclass(frozen=True)
class Witness:
    """An induced copy of ``generate(spec)`` in a host graph.

    ``embedding[p]`` is the host vertex playing pattern vertex ``p``.
    """

    spec: FamilySpec
    embedding: tuple[int, ...]

    @property
    def parameter(self) -> int:
        return self.spec.n

    def to_json(self) -> dict:
        return {"family": self.spec.to_json(), "embedding": list(self.embedding)}

    @classmethod
    def from_json(cls, data: dict) -> Witness:
        return cls(FamilySpec.from_json(data["family"]), tuple(int(v) for v in data["embedding"]))


# ------------------------------------------------------------ generators


class _Builder:
    def __init__(self, order: int):
        self.order = order
        self.edges: list[tuple[int, int]] = []

    def add(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def clique(self, vertices: Sequence[int]) -> None:
        for i, u in enumerate(vertices):
            for v in vertices[i + 1 :]:
                self.add(u, v)

    def graph(self) -> Graph:
        return Graph.from_edges(self.order, self.edges)


def _broom_edges(b: _Builder, place: Sequence[int], h: Graph, attach: Sequence[int], l: int) -> None:
    # place[t] is the vertex playing broom vertex t (t = 0 is the endpoint)
    for t in range(l - 1):
        b.add(place[t], place[t + 1])
    for x in attach:
        b.add(place[l - 1], place[l + x])
    for u, v in h.edges():
        b.add(place[l + u], place[l + v])


def generate(spec: FamilySpec) -> Graph:
    kind, n, l = spec.kind, spec.n, spec.l
    if kind == "Path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "Clique":
        b = _Builder(n)
        b.clique(range(n))
        return b.graph()
    if kind == "Star":
        return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])
    if kind == "Biclique":
        m = spec.m
        return Graph.from_edges(n + m, [(i, n + j) for i in range(n) for j in range(m)])
    if kind == "HairyClique":
        b = _Builder(n * (l + 1))
        b.clique(range(n))
        for i in range(n):
            base = n + i * l
            b.add(i, base)
            for j in range(l - 1):
                b.add(base + j, base + j + 1)
        return b.graph()
    if kind == "TriangleClique":
        b = _Builder(3 * n)
        b.clique(range(n))
        for i in range(n):
            b.clique([i, n + 2 * i, n + 2 * i + 1])
        return b.graph()
    if kind == "Spider":
        b = _Builder(n * l + 1)
        for i in range(n):
            base = 1 + i * l
            b.add(0, base)
            for j in range(l - 1):
                b.add(base + j, base + j + 1)
        return b.graph()
    if kind == "Friendship":
        b = _Builder(2 * n + 1)
        for i in range(n):
            b.clique([0, 1 + 2 * i, 2 + 2 * i])
        return b.graph()
    h, attach = spec.pattern, spec.attach
    block = l - 1 + h.order
    if kind == "GeneralBroom":
        b = _Builder(l + h.order)
        _broom_edges(b, range(l + h.order), h, attach, l)
        return b.graph()
    if kind == "GeneralHairy":
        b = _Builder(n + n * block)
        b.clique(range(n))
        for i in range(n):
            base = n + i * block
            _broom_edges(b, [i] + list(range(base, base + block)), h, attach, l)
        return b.graph()
    # GeneralStar
    b = _Builder(1 + n * block)
    for i in range(n):
        base = 1 + i * block
        _broom_edges(b, [0] + list(range(base, base + block)), h, attach, l)
    return b.graph()


# ------------------------------------------------------------ detection


def contains_induced(host: Graph, pattern: Graph) -> list[int] | None:
    """An induced embedding of ``pattern`` into ``host`` or ``None``."""
    return _core.induced_embedding(host.adj, host.order, pattern.adj, pattern.order)


def _max_clique_witness(host: Graph, limit: int | None) -> tuple[int, Witness | None]:
    best = _core.clique_search(host.adj, host.order, 0, host.full_mask)
    if limit is not None:
        best = best[:limit]
    if not best:
        return 0, None
    return len(best), Witness(FamilySpec.clique(len(best)), tuple(best))


def _max_star_witness(host: Graph, limit: int | None) -> tuple[int, Witness | None]:
    comp = host.complement()
    best_k, best = 0, None
    for v in range(host.order):
        nb = host.adj[v]
        if bin(nb).count("1") <= best_k:
            continue
        leaves = _core.clique_search(comp.adj, host.order, 0, nb)
        if len(leaves) > best_k:
            best_k, best = len(leaves), (v, leaves)
            if limit is not None and best_k >= limit:
                break
    if best is None:
        return 0, None
    v, leaves = best
    if limit is not None:
        leaves = leaves[:limit]
    return len(leaves), Witness(FamilySpec.star(len(leaves)), (v, *leaves))


def max_family_parameter(
    host: Graph,
    kind: str,
    *,
    l: int | None = None,
    pattern: Graph | None = None,
    attach: Sequence[int] | None = None,
    limit: int | None = None,
    generic: bool = False,
) -> tuple[int, Witness | None]:
    """Largest ``n`` such that ``kind(n)`` is an induced subgraph of ``host``.

    Relies on every single-parameter family being nested in ``n``.  The search
    stops at ``limit`` when given.  Cliques and stars use dedicated searches
    unless ``generic`` is set.
    """
    if kind not in SINGLE_PARAMETER_KINDS:
        raise ValueError(f"{kind} is not a single-parameter family")
    if not generic and kind == "Clique":
        return _max_clique_witness(host, limit)
    if not generic and kind == "Star":
        return _max_star_witness(host, limit)
    template = FamilySpec(
        kind,
        1,
        l=l,
        pattern=pattern,
        attach=tuple(attach) if attach is not None else None,
    )
    best_n, best = 0, None
    n = 1
    while limit is None or n <= limit:
        spec = template.with_n(n)
        pat = generate(spec)
        if pat.order > host.order:
            break
        emb = contains_induced(host, pat)
        if emb is None:
            break
        best_n, best = n, Witness(spec, tuple(emb))
        n += 1
    return best_n, best


def verify_embedding(host: Graph, spec: FamilySpec, embedding: Sequence[int]) -> bool:
    """Direct pairwise check that ``embedding`` realises ``generate(spec)``
    as an induced subgraph of ``host``."""
    pat = generate(spec)
    if len(embedding) != pat.order or len(set(embedding)) != len(embedding):
        return False
    if any(not (isinstance(v, int) and 0 <= v < host.order) for v in embedding):
        return False
    for p in range(pat.order):
        for q in range(p + 1, pat.order):
            if pat.adjacent(p, q) != host.adjacent(embedding[p], embedding[q]):
                return False
    return True

