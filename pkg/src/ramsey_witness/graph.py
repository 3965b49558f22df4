"""Immutable simple graphs, graph6 I/O and the structural queries the
extraction pipelines are built on.

Vertices are always the dense range ``0..order-1``.  Operations that delete
or merge vertices return a freshly indexed graph together with an explicit
map back to the old indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from . import _core

__all__ = [
    "Graph",
    "Graph6Error",
    "PreconditionError",
    "ContractionMap",
    "parse_graph6",
    "write_graph6",
    "read_graph6",
    "is_connected",
    "cut_vertices",
    "induced_subgraph",
    "contract_matching",
    "to_dot",
]

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class PreconditionError(ValueError):
    """An operation was called on input outside its contract."""


def _bits(x: int) -> Iterator[int]:
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


class Graph:
    """A finite simple undirected graph on vertices ``0..order-1``.

    Adjacency is stored as one bitmask per vertex.  Instances are immutable
    and hashable.
    """

    __slots__ = ("order", "adj")

    order: int
    adj: tuple[int, ...]

    def __init__(self, order: int, adj: Sequence[int]):
        if order < 0 or len(adj) != order:
            raise ValueError("adjacency must have one mask per vertex")
        full = (1 << order) - 1
        for v, mask in enumerate(adj):
            if mask < 0 or mask & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in _bits(mask):
                if not adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def _trusted(cls, order: int, adj: Sequence[int]) -> Graph:
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(order, adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.order, self.adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph._trusted, (self.order, self.adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, w) for u in range(self.order) for w in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph._trusted(
            self.order, [full & ~m & ~(1 << v) for v, m in enumerate(self.adj)]
        )


# ---------------------------------------------------------------- graph6


def _check_char(line: str, i: int) -> int:
    c = ord(line[i])
    if not 63 <= c <= 126:
        raise Graph6Error(f"character {line[i]!r} outside graph6 range", i)
    return c - 63


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (a leading ``>>graph6<<`` header is skipped)."""
    text = line.rstrip("\r\n")
    pos = len(GRAPH6_HEADER) if text.startswith(GRAPH6_HEADER) else 0
    if pos >= len(text):
        raise Graph6Error("empty graph6 string", pos)
    if text[pos] == ":" or text[pos] == "&":
        raise Graph6Error("sparse6/digraph6 input is not supported", pos)
    first = _check_char(text, pos)
    if first < 63:
        n = first
        pos += 1
    else:
        wide = pos + 1 < len(text) and text[pos + 1] == "~"
        width = 6 if wide else 3
        start = pos + (2 if wide else 1)
        if start + width > len(text):
            raise Graph6Error("truncated order header", len(text))
        n = 0
        for i in range(start, start + width):
            n = (n << 6) | _check_char(text, i)
        pos = start + width
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(text) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for order {n}, found {len(text) - pos}",
            min(pos + nbytes, len(text)),
        )
    adj = [0] * n
    k = 0
    i = 0
    j = 1
    for off in range(pos, pos + nbytes):
        val = _check_char(text, off)
        for shift in range(5, -1, -1):
            if k >= nbits:
                if val >> shift & 1:
                    raise Graph6Error("padding bits are not zero", off)
                continue
            if val >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph._trusted(n, adj)


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6 (no header, no newline).

    Orders up to 62 use the one-byte header; larger orders use the standard
    4- or 8-byte forms.
    """
    n = g.order
    if n < 63:
        out = [chr(n + 63)]
    elif n < 258048:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:
        out = ["~", "~"] + [chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)]
    acc = 0
    nacc = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = 0
                nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def read_graph6(path) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for every non-blank line of a file."""
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            yield lineno, parse_graph6(line.strip())


# ---------------------------------------------------------------- structure


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has exactly one component (order 0 is not connected)."""
    if g.order == 0:
        return False
    full = g.full_mask
    return _core.reach_mask(g.adj, 0, full) == full


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        raise PreconditionError(f"{what} requires a connected graph")


def cut_vertices(g: Graph) -> list[int]:
    _require_connected(g, "cut_vertices")
    return list(_bits(_core.articulation_mask(g.adj, g.order, g.full_mask)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``; returns it with the new-to-old map.

    New indices follow ascending old indices.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.order:
            raise PreconditionError(f"vertex {v} not in graph of order {g.order}")
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        m = 0
        for w in _bits(g.adj[v]):
            i = index.get(w)
            if i is not None:
                m |= 1 << i
        adj.append(m)
    return Graph._trusted(len(keep), adj), keep


def vertex_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class ContractionMap:
    """Bookkeeping between a graph and its image after contracting a matching.

    ``contracted_of[v]`` is the image of original vertex ``v``;
    ``expansion_of[u]`` lists the originals merged into image ``u``;
    ``contracted_edge_of[u]`` is the contracted edge for merged images.
    """

    contracted_of: tuple[int, ...]
    expansion_of: tuple[tuple[int, ...], ...]
    contracted_edge_of: Mapping[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def contracted(self) -> list[int]:
        return sorted(self.contracted_edge_of)


def _check_matching(g: Graph, matching: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    seen = 0
    out = []
    for u, v in matching:
        if not (0 <= u < g.order and 0 <= v < g.order) or not g.adjacent(u, v):
            raise PreconditionError(f"({u}, {v}) is not an edge")
        if seen >> u & 1 or seen >> v & 1:
            raise PreconditionError(f"({u}, {v}) shares an end with another matching edge")
        seen |= (1 << u) | (1 << v)
        out.append((min(u, v), max(u, v)))
    return out


def contract_matching(g: Graph, matching: Iterable[tuple[int, int]]) -> tuple[Graph, ContractionMap]:
    """Contract every edge of ``matching`` into a single vertex.

    Image vertices are numbered by their smallest preimage.
    """
    edges = _check_matching(g, matching)
    partner = {}
    for u, v in edges:
        partner[u] = v
        partner[v] = u
    image = [-1] * g.order
    expansion: list[tuple[int, ...]] = []
    merged: dict[int, tuple[int, int]] = {}
    for v in range(g.order):
        if image[v] >= 0:
            continue
        idx = len(expansion)
        image[v] = idx
        if v in partner:
            w = partner[v]
            image[w] = idx
            expansion.append((v, w))
            merged[idx] = (v, w)
        else:
            expansion.append((v,))
    adj = []
    for idx, pre in enumerate(expansion):
        m = 0
        for v in pre:
            for w in _bits(g.adj[v]):
                m |= 1 << image[w]
        adj.append(m & ~(1 << idx))
    cmap = ContractionMap(tuple(image), tuple(expansion), merged)
    return Graph._trusted(len(expansion), adj), cmap


def to_dot(g: Graph, labels: Mapping[int, str] | Sequence[str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.order):
        if labels is not None:
            lab = labels[v] if not isinstance(labels, Mapping) else labels.get(v, str(v))
            lines.append(f'  {v} [label="{lab}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
