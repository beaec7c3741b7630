"""Point-line incidence structures, partial geometries and their sources.

Latin squares give nets ``pg(n-1, 2, 2)``; Steiner triple systems give,
after dualizing, geometries ``pg((v-1)/2 - 1, 2, 3)`` whose point graph is
the block-intersection graph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphBuilder, bits, find_isomorphism

STRUCTURE_ISO_LIMIT = 24


@dataclass(frozen=True)
class PgParams:
    s: int
    t: int
    alpha: int

    def __post_init__(self):
        if self.s < 2 or self.t < 1 or self.alpha < 1:
            raise ValueError(f"degenerate parameters {self}: need s >= 2, t >= 1, alpha >= 1")
        if self.alpha > min(self.s, self.t) + 1:
            raise ValueError(f"alpha={self.alpha} exceeds min(s, t) + 1")

    @classmethod
    def parse(cls, text: str) -> "PgParams":
        try:
            s, t, alpha = (int(x) for x in text.split(","))
        except ValueError:
            raise ValueError(f"expected 's,t,alpha', got {text!r}") from None
        return cls(s, t, alpha)

    def __str__(self) -> str:
        return f"{self.s},{self.t},{self.alpha}"

    def astuple(self) -> tuple[int, int, int]:
        return self.s, self.t, self.alpha


class PgClass(str, enum.Enum):
    DESIGN = "design"
    DUAL_DESIGN = "dual-design"
    NET = "net"
    TRANSVERSAL_DESIGN = "transversal-design"
    GENERALIZED_QUADRANGLE = "generalized-quadrangle"
    PROPER = "proper"


def classify(p: PgParams) -> frozenset[PgClass]:
    """All class labels whose defining equality ``p`` satisfies.

    ``PROPER`` is reported only when no equality label applies.
    """
    s, t, a = p.astuple()
    labels = set()
    if s + 1 == a:
        labels.add(PgClass.DESIGN)
    if t + 1 == a:
        labels.add(PgClass.DUAL_DESIGN)
    if t == a:
        labels.add(PgClass.NET)
    if s == a:
        labels.add(PgClass.TRANSVERSAL_DESIGN)
    if a == 1:
        labels.add(PgClass.GENERALIZED_QUADRANGLE)
    if not labels and 1 < a < min(s, t):
        labels.add(PgClass.PROPER)
    return frozenset(labels)


class IncidenceStructure:
    """Points ``0..point_count-1`` and lines given as point sets."""

    __slots__ = ("point_count", "lines", "_masks")

    def __init__(self, point_count: int, lines: Sequence[Sequence[int]]):
        normalized = []
        for line in lines:
            pts = tuple(sorted(set(line)))
            if len(pts) != len(line):
                raise ValueError(f"line {list(line)} repeats a point")
            if len(pts) < 2:
                raise ValueError(f"line {list(line)} has fewer than two points")
            if pts[0] < 0 or pts[-1] >= point_count:
                raise ValueError(f"line {list(line)} has points outside 0..{point_count - 1}")
            normalized.append(pts)
        if len(set(normalized)) != len(normalized):
            raise ValueError("repeated line")
        self.point_count = point_count
        self.lines = tuple(normalized)
        self._masks = tuple(sum(1 << p for p in line) for line in self.lines)

    @property
    def line_masks(self) -> tuple[int, ...]:
        return self._masks

    def lines_through(self, p: int) -> list[int]:
        return [i for i, m in enumerate(self._masks) if m >> p & 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return self.point_count == other.point_count and sorted(self.lines) == sorted(other.lines)

    def __hash__(self) -> int:
        return hash((self.point_count, tuple(sorted(self.lines))))

    def __repr__(self) -> str:
        return f"IncidenceStructure(points={self.point_count}, lines={len(self.lines)})"

    def to_text(self) -> str:
        out = [f"pg {self.point_count} {len(self.lines)}"]
        out.extend(" ".join(map(str, line)) for line in self.lines)
        return "\n".join(out) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "IncidenceStructure":
        rows = _data_rows(text)
        head = rows[0] if rows else []
        if len(head) != 3 or head[0] != "pg":
            raise ValueError("incidence file must start with 'pg <points> <lines>'")
        points, count = _ints(head[1:])
        body = [_ints(r) for r in rows[1:]]
        if len(body) != count:
            raise ValueError(f"header announces {count} lines, found {len(body)}")
        return cls(points, body)


def _data_rows(text: str) -> list[list[str]]:
    return [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]


def _ints(tokens: Sequence[str]) -> list[int]:
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise ValueError(f"expected integers, got {' '.join(tokens)!r}") from None


def _analyse(structure: IncidenceStructure) -> tuple[PgParams | None, str | None]:
    masks = structure.line_masks
    for i, j in combinations(range(len(masks)), 2):
        if bin(masks[i] & masks[j]).count("1") > 1:
            return None, f"partial-linear-space: lines {i} and {j} share two or more points"
    sizes = {len(line) for line in structure.lines}
    if len(sizes) != 1:
        return None, f"line-size: lines have sizes {sorted(sizes)}"
    through = [structure.lines_through(p) for p in range(structure.point_count)]
    degrees = {len(ls) for ls in through}
    if len(degrees) != 1:
        return None, f"point-degree: points lie on {sorted(degrees)} lines"
    s = sizes.pop() - 1
    t = degrees.pop() - 1
    alpha = None
    for li, lmask in enumerate(masks):
        for p in range(structure.point_count):
            if lmask >> p & 1:
                continue
            meet = sum(1 for m in through[p] if masks[m] & lmask)
            if alpha is None:
                alpha = meet
            elif meet != alpha:
                return None, f"alpha: point {p} sees {meet} lines meeting line {li}, expected {alpha}"
    if alpha is None:
        return None, "alpha: every point lies on every line"
    if s < 2 or t < 1 or alpha < 1:
        return None, f"nondegeneracy: (s,t,alpha)=({s},{t},{alpha}) needs s >= 2, t >= 1, alpha >= 1"
    return PgParams(s, t, alpha), None


def verify_partial_geometry(structure: IncidenceStructure) -> PgParams | None:
    """Return ``(s, t, alpha)`` if the structure is a nondegenerate partial geometry."""
    return _analyse(structure)[0]


def partial_geometry_violation(structure: IncidenceStructure) -> str | None:
    """The first violated axiom, or None for a partial geometry."""
    return _analyse(structure)[1]


def point_graph(structure: IncidenceStructure) -> Graph:
    """Collinearity graph of a partial geometry with ``s + 1 > alpha``."""
    params, reason = _analyse(structure)
    if params is None:
        raise ValueError(f"not a partial geometry ({reason})")
    if params.s + 1 <= params.alpha:
        raise ValueError(f"pg({params}) has s + 1 = alpha: its point graph is complete")
    return collinearity_graph(structure)


def collinearity_graph(structure: IncidenceStructure) -> Graph:
    builder = GraphBuilder(structure.point_count)
    for line in structure.lines:
        for x, y in combinations(line, 2):
            builder.add_edge(x, y)
    return builder.build()


def dual(structure: IncidenceStructure) -> IncidenceStructure:
    """Swap points and lines: dual point ``i`` is line ``i``."""
    return IncidenceStructure(
        len(structure.lines),
        [structure.lines_through(p) for p in range(structure.point_count)],
    )


def incidence_graph(structure: IncidenceStructure) -> Graph:
    """Bipartite graph: points first, then one vertex per line."""
    n = structure.point_count
    builder = GraphBuilder(n + len(structure.lines))
    for i, line in enumerate(structure.lines):
        for p in line:
            builder.add_edge(p, n + i)
    return builder.build()


def structures_isomorphic(a: IncidenceStructure, b: IncidenceStructure) -> bool:
    """Point-and-line preserving isomorphism via the incidence graphs.

    Limited to ``point_count + line_count <= 24``.
    """
    size_a = a.point_count + len(a.lines)
    if max(size_a, b.point_count + len(b.lines)) > STRUCTURE_ISO_LIMIT:
        raise ValueError(f"structure isomorphism limited to {STRUCTURE_ISO_LIMIT} points plus lines")
    if a.point_count != b.point_count or len(a.lines) != len(b.lines):
        return False
    colors = [0] * a.point_count + [1] * len(a.lines)
    return find_isomorphism(incidence_graph(a), incidence_graph(b), colors, colors) is not None


def star_geometry() -> IncidenceStructure:
    """The pg(3,1,2) on the 2-subsets of {0..4}; line ``i`` holds the pairs containing ``i``."""
    pairs = list(combinations(range(5), 2))
    return IncidenceStructure(len(pairs), [[k for k, pr in enumerate(pairs) if i in pr] for i in range(5)])


def fano_plane() -> IncidenceStructure:
    return IncidenceStructure(7, [[i, (i + 1) % 7, (i + 3) % 7] for i in range(7)])


# -- Latin squares ----------------------------------------------------------


@dataclass(frozen=True)
class LatinSquare:
    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        n = self.n
        if len(cells) != n or any(len(row) != n for row in cells):
            raise ValueError(f"Latin square of order {n} needs an {n}x{n} array")
        symbols = set(range(n))
        for i, row in enumerate(cells):
            if set(row) != symbols:
                raise ValueError(f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            if {row[j] for row in cells} != symbols:
                raise ValueError(f"column {j} is not a permutation of 0..{n - 1}")

    def to_text(self) -> str:
        return f"ls {self.n}\n" + "".join(" ".join(map(str, row)) + "\n" for row in self.cells)

    @classmethod
    def from_text(cls, text: str) -> "LatinSquare":
        rows = _data_rows(text)
        if not rows or len(rows[0]) != 2 or rows[0][0] != "ls":
            raise ValueError("Latin square file must start with 'ls <n>'")
        (n,) = _ints(rows[0][1:])
        return cls(n, tuple(tuple(_ints(r)) for r in rows[1:]))


def latin_square_to_net(ls: LatinSquare) -> IncidenceStructure:
    """Net on the cells ``r*n + c``; lines are rows, then columns, then symbol classes."""
    n = ls.n
    if n < 3:
        raise ValueError(f"order {n} gives s = {n - 1} < 2, a degenerate net")
    rows = [[r * n + c for c in range(n)] for r in range(n)]
    cols = [[r * n + c for r in range(n)] for c in range(n)]
    syms = [[r * n + c for r in range(n) for c in range(n) if ls.cells[r][c] == k] for k in range(n)]
    return IncidenceStructure(n * n, rows + cols + syms)


# -- Steiner triple systems -------------------------------------------------


@dataclass(frozen=True)
class SteinerTripleSystem:
    v: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        triples = tuple(tuple(sorted(tr)) for tr in self.triples)
        object.__setattr__(self, "triples", triples)
        v = self.v
        if len(triples) != v * (v - 1) // 6 or v * (v - 1) % 6:
            raise ValueError(f"STS({v}) needs v(v-1)/6 triples, got {len(triples)}")
        seen = set()
        for tr in triples:
            if len(tr) != 3 or len(set(tr)) != 3 or tr[0] < 0 or tr[2] >= v:
                raise ValueError(f"bad triple {tr}")
            for pair in combinations(tr, 2):
                if pair in seen:
                    raise ValueError(f"pair {pair} covered twice")
                seen.add(pair)
        if len(seen) != v * (v - 1) // 2:
            raise ValueError("some point pair is not covered")

    def to_text(self) -> str:
        return f"sts {self.v}\n" + "".join(" ".join(map(str, tr)) + "\n" for tr in self.triples)

    @classmethod
    def from_text(cls, text: str) -> "SteinerTripleSystem":
        rows = _data_rows(text)
        if not rows or len(rows[0]) != 2 or rows[0][0] != "sts":
            raise ValueError("STS file must start with 'sts <v>'")
        (v,) = _ints(rows[0][1:])
        return cls(v, tuple(tuple(_ints(r)) for r in rows[1:]))


def sts_to_dual_geometry(sts: SteinerTripleSystem) -> IncidenceStructure:
    """Blocks become points; original point ``p`` becomes the line of blocks through ``p``.

    Valid for every STS; for ``v = 7`` the point graph is complete and
    :func:`point_graph` refuses it.
    """
    return IncidenceStructure(
        len(sts.triples),
        [[b for b, tr in enumerate(sts.triples) if p in tr] for p in range(sts.v)],
    )


# -- neighborhood triangle partition ---------------------------------------


def _clique_partitions(g: Graph, members: int, size: int, limit: int = 2) -> list[list[int]]:
    found: list[list[int]] = []

    def rec(remaining: int, parts: list[int]):
        if len(found) >= limit:
            return
        if not remaining:
            found.append(list(parts))
            return
        u = (remaining & -remaining).bit_length() - 1
        pool = list(bits(g.row(u) & remaining))
        for rest in combinations(pool, size - 1):
            if all(g.adjacent(a, b) for a, b in combinations(rest, 2)):
                clique = (1 << u) | sum(1 << y for y in rest)
                parts.append(clique)
                rec(remaining & ~clique, parts)
                parts.pop()

    rec(members, [])
    return found


def line_cliques(g: Graph, x: int) -> list[int]:
    """The three cliques that partition the neighborhood of ``x`` in a Latin-square graph.

    Raises when no such partition exists or when it is not unique.
    """
    nbrs = g.row(x)
    deg = g.degree(x)
    if deg % 3:
        raise ValueError(f"degree {deg} of vertex {x} is not divisible by 3")
    parts = _clique_partitions(g, nbrs, deg // 3)
    if not parts:
        raise ValueError(f"neighborhood of {x} is not a union of three equal cliques")
    if len(parts) > 1:
        raise ValueError(f"neighborhood of {x} splits into cliques in several ways; pass them explicitly")
    return parts[0]


def triangle_partition_check(g: Graph, x: int, cliques: Sequence[int] | None = None) -> bool:
    """Whether edges between the line-cliques through ``x`` split into disjoint triangles.

    ``cliques`` are bitmasks of the three line-cliques (lines through ``x``
    minus ``x``); they are derived from the graph when omitted. Every
    cross-clique edge must lie in exactly one triangle meeting all three
    cliques, and those triangles must be vertex-disjoint.
    """
    if cliques is None:
        cliques = line_cliques(g, x)
    if len(cliques) != 3 or sum(cliques) != g.row(x) or cliques[0] & cliques[1] or cliques[1] & cliques[2] or cliques[0] & cliques[2]:
        raise ValueError("cliques must be three disjoint sets covering the neighborhood")
    for c in cliques:
        for a, b in combinations(bits(c), 2):
            if not g.adjacent(a, b):
                raise ValueError("a supplied line-clique is not a clique")
    triangles = set()
    for i, j in ((0, 1), (0, 2), (1, 2)):
        third = cliques[3 - i - j]
        for a in bits(cliques[i]):
            for b in bits(g.row(a) & cliques[j]):
                closing = g.row(a) & g.row(b) & third
                if bin(closing).count("1") != 1:
                    return False
                triangles.add(frozenset((a, b, closing.bit_length() - 1)))
    covered = set()
    for tri in triangles:
        if covered & tri:
            return False
        covered |= tri
    return True
