"""Immutable simple graphs backed by integer bitsets.

Vertex ``x`` of a graph of order ``v`` owns bit ``x`` of every mask. A
neighborhood is a Python ``int`` so set algebra is word-parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

ISO_ORDER_LIMIT = 12


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``0..order-1`` stored as a bitmask."""

    order: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.order:
            raise ValueError(f"vertex set {self.mask:#x} exceeds order {self.order}")

    @classmethod
    def of(cls, order: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for x in members:
            if not 0 <= x < order:
                raise ValueError(f"vertex {x} out of range for order {order}")
            mask |= 1 << x
        return cls(order, mask)

    @classmethod
    def full(cls, order: int) -> "VertexSet":
        return cls(order, (1 << order) - 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.order and bool(self.mask >> x & 1)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.order, self.mask & other.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.order, self.mask | other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.order, self.mask & ~other.mask)

    def isdisjoint(self, other: "VertexSet") -> bool:
        return not self.mask & other.mask

    def sorted(self) -> list[int]:
        return list(bits(self.mask))


class Graph:
    """Finite simple graph on vertices ``0..order-1``.

    Instances are immutable; build them with :class:`GraphBuilder`,
    :meth:`from_edges` or :meth:`from_rows`.
    """

    __slots__ = ("_order", "_rows")

    def __init__(self, order: int, rows: Sequence[int]):
        rows = tuple(rows)
        if len(rows) != order:
            raise ValueError(f"expected {order} rows, got {len(rows)}")
        for x, row in enumerate(rows):
            if row < 0 or row >> order:
                raise ValueError(f"row {x} has bits outside the vertex range")
            if row >> x & 1:
                raise ValueError(f"loop at vertex {x}")
            for y in bits(row):
                if not rows[y] >> x & 1:
                    raise ValueError(f"adjacency not symmetric at ({x}, {y})")
        self._order = order
        self._rows = rows

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        return cls(len(rows), rows)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        builder = GraphBuilder(order)
        for x, y in edges:
            builder.add_edge(x, y)
        return builder.build()

    @classmethod
    def from_relation(cls, order: int, adjacent) -> "Graph":
        """Graph where ``x ~ y`` iff ``adjacent(x, y)`` for ``x < y``."""
        builder = GraphBuilder(order)
        for x, y in combinations(range(order), 2):
            if adjacent(x, y):
                builder.add_edge(x, y)
        return builder.build()

    @property
    def order(self) -> int:
        return self._order

    @property
    def rows(self) -> tuple[int, ...]:
        """Neighborhood bitmasks indexed by vertex."""
        return self._rows

    def row(self, x: int) -> int:
        return self._rows[x]

    def adjacent(self, x: int, y: int) -> bool:
        return bool(self._rows[x] >> y & 1)

    def neighborhood(self, x: int) -> VertexSet:
        return VertexSet(self._order, self._rows[x])

    def degree(self, x: int) -> int:
        return bin(self._rows[x]).count("1")

    def degrees(self) -> list[int]:
        return [bin(r).count("1") for r in self._rows]

    def vertices(self) -> VertexSet:
        return VertexSet.full(self._order)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(x, y)`` with ``x < y`` in lexicographic order."""
        return [(x, y) for x, row in enumerate(self._rows) for y in bits(row >> x + 1 << x + 1)]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._order, self._rows))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={self.edge_count()})"


class GraphBuilder:
    """Mutable staging area for a :class:`Graph`."""

    def __init__(self, order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        self.order = order
        self._rows = [0] * order

    def add_edge(self, x: int, y: int) -> "GraphBuilder":
        if not (0 <= x < self.order and 0 <= y < self.order):
            raise ValueError(f"edge ({x}, {y}) out of range for order {self.order}")
        if x == y:
            raise ValueError(f"loop at vertex {x}")
        self._rows[x] |= 1 << y
        self._rows[y] |= 1 << x
        return self

    def build(self) -> Graph:
        return Graph(self.order, self._rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, [full & ~row & ~(1 << x) for x, row in enumerate(g.rows)])


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled order-preservingly to ``0..|s|-1``."""
    if not isinstance(s, VertexSet):
        s = VertexSet.of(g.order, s)
    elif s.order != g.order:
        raise ValueError("vertex set belongs to a graph of different order")
    members = s.sorted()
    rows = []
    for x in members:
        row = g.row(x)
        rows.append(sum(1 << i for i, y in enumerate(members) if row >> y & 1))
    return Graph(len(members), rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``x`` renamed ``perm[x]``."""
    if sorted(perm) != list(range(g.order)):
        raise ValueError("perm is not a permutation of the vertex range")
    return Graph.from_edges(g.order, ((perm[x], perm[y]) for x, y in g.edges()))


def is_isomorphic_small(g: Graph, h: Graph) -> bool:
    """Decide isomorphism by backtracking with degree pruning.

    Refuses graphs above :data:`ISO_ORDER_LIMIT` vertices.
    """
    if max(g.order, h.order) > ISO_ORDER_LIMIT:
        raise ValueError(f"isomorphism test limited to order <= {ISO_ORDER_LIMIT}")
    return find_isomorphism(g, h) is not None


def find_isomorphism(
    g: Graph,
    h: Graph,
    colors_g: Sequence[int] | None = None,
    colors_h: Sequence[int] | None = None,
) -> list[int] | None:
    """Return ``phi`` with ``g.adjacent(x, y) == h.adjacent(phi[x], phi[y])``, or None.

    Optional vertex colors must be preserved by ``phi``. No order guard.
    """
    n = g.order
    if n != h.order or g.edge_count() != h.edge_count():
        return None
    if colors_g is None or colors_h is None:
        colors_g = colors_h = [0] * n
    # Fold colors into the degree key so one comparison prunes both.
    gdeg = [(d, c) for d, c in zip(g.degrees(), colors_g)]
    hdeg = [(d, c) for d, c in zip(h.degrees(), colors_h)]
    if sorted(gdeg) != sorted(hdeg):
        return None
    # Place high-degree, well-connected vertices first to prune early.
    order = sorted(range(n), key=lambda x: -gdeg[x][0])
    phi = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        x = order[i]
        for y in range(n):
            if used >> y & 1 or hdeg[y] != gdeg[x]:
                continue
            if all(g.adjacent(x, order[j]) == h.adjacent(y, phi[order[j]]) for j in range(i)):
                phi[x] = y
                used |= 1 << y
                if extend(i + 1):
                    return True
                used &= ~(1 << y)
                phi[x] = -1
        return False

    return phi if extend(0) else None


# -- serialization -----------------------------------------------------------

GRAPH6_SHORT_LIMIT = 62
GRAPH6_LONG_LIMIT = 258047


def _encode_order(n: int) -> bytes:
    if n <= GRAPH6_SHORT_LIMIT:
        return bytes([n + 63])
    if n <= GRAPH6_LONG_LIMIT:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError(f"graph6 supports at most {GRAPH6_LONG_LIMIT} vertices")


def encode_graph6(g: Graph) -> bytes:
    """Encode in graph6: order prefix, then the upper triangle column by column.

    Orders up to 62 use one prefix byte; 63..258047 use ``~`` followed by
    three 6-bit groups.
    """
    out = bytearray(_encode_order(g.order))
    acc = nbits = 0
    for j in range(1, g.order):
        row = g.row(j)
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << 6 - nbits) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise ValueError("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise ValueError(f"graph6 byte {b} outside 63..126")
    vals = [b - 63 for b in data]
    if vals[0] == 63:
        if len(vals) < 4:
            raise ValueError("truncated graph6 order prefix")
        if vals[1] == 63:
            raise ValueError("8-byte graph6 order prefix is not supported")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    builder = GraphBuilder(n)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> 5 - k % 6 & 1:
                builder.add_edge(i, j)
            k += 1
    return builder.build()


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.order} {len(edges)}"]
    lines.extend(f"{x} {y}" for x, y in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    tokens = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not tokens or len(tokens[0]) != 2:
        raise ValueError("edge list must start with a 'v e' header")
    try:
        order, count = int(tokens[0][0]), int(tokens[0][1])
        edges = [(int(a), int(b)) for a, b in tokens[1:]]
    except ValueError as exc:
        raise ValueError(f"malformed edge list: {exc}") from None
    if len(edges) != count:
        raise ValueError(f"header announces {count} edges, found {len(edges)}")
    return Graph.from_edges(order, edges)


def parse_graph(text: str | bytes) -> Graph:
    """Parse either an edge list or a single graph6 line."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    stripped = text.strip()
    first = stripped.splitlines()[0] if stripped else ""
    if len(first.split()) == 2 or first.startswith("#"):
        return parse_edge_list(text)
    return decode_graph6(first)
