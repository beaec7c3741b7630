"""Existential-closure and fullness checks with reproducible witnesses.

Failures are reported for the first pair ``(A, B)`` under a fixed order:
``n``-subsets in lexicographic order, then bipartition masks ascending,
where bit ``i`` of the mask puts the ``i``-th subset element into ``A``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .graph import Graph, VertexSet, bits

MAX_CATALOG_ORDER = 5


@dataclass(frozen=True)
class EcReport:
    n: int
    holds: bool
    witness: tuple[VertexSet, VertexSet] | None = None

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("a witness is required exactly when the property fails")

    def witness_lists(self) -> tuple[list[int], list[int]]:
        if self.witness is None:
            return [], []
        a, b = self.witness
        return a.sorted(), b.sorted()

    def to_text(self, labels=None) -> str:
        if self.holds:
            return f"{self.n}-e.c.: holds"
        a, b = self.witness_lists()
        line = f"{self.n}-e.c.: fails  A={a} B={b}  (no extension vertex)"
        if labels is not None:
            line += f"\n  A labels: {[labels[x] for x in a]}\n  B labels: {[labels[x] for x in b]}"
        return line

    def to_kv(self) -> str:
        a, b = self.witness_lists()
        return (
            f"property=nec\nn={self.n}\nholds={str(self.holds).lower()}\n"
            f"witness_a={','.join(map(str, a))}\nwitness_b={','.join(map(str, b))}\n"
        )


@dataclass(frozen=True)
class FullnessReport:
    r: int
    holds: bool
    missing: Graph | None = None
    anchor: int | None = None

    def to_text(self) -> str:
        where = "" if self.anchor is None else f" through vertex {self.anchor}"
        if self.holds:
            return f"{self.r}-full{where}: holds"
        return f"{self.r}-full{where}: fails  missing induced subgraph edges={self.missing.edges()}"

    def to_kv(self) -> str:
        missing = "" if self.missing is None else ";".join(f"{x}-{y}" for x, y in self.missing.edges())
        return (
            f"property=full\nr={self.r}\nholds={str(self.holds).lower()}\n"
            f"missing_order={'' if self.missing is None else self.missing.order}\nmissing_edges={missing}\n"
        )


def _check_pair(g: Graph, a: VertexSet, b: VertexSet) -> None:
    if a.order != g.order or b.order != g.order:
        raise ValueError("vertex sets must match the graph order")
    if not a.isdisjoint(b):
        raise ValueError("A and B must be disjoint")


def extensions(g: Graph, a: VertexSet, b: VertexSet) -> VertexSet:
    """Vertices outside ``A ∪ B`` joined to all of ``A`` and none of ``B``."""
    _check_pair(g, a, b)
    cand = (1 << g.order) - 1 & ~a.mask & ~b.mask
    for x in a:
        cand &= g.row(x)
    for x in b:
        cand &= ~g.row(x)
    return VertexSet(g.order, cand)


def gamma(g: Graph, a: VertexSet, b: VertexSet) -> int:
    """Number of extension vertices of the bipartition ``(A, B)``."""
    return len(extensions(g, a, b))


def _split(order: int, subset: tuple[int, ...], mask: int) -> tuple[VertexSet, VertexSet]:
    a = [x for i, x in enumerate(subset) if mask >> i & 1]
    b = [x for i, x in enumerate(subset) if not mask >> i & 1]
    return VertexSet.of(order, a), VertexSet.of(order, b)


def _first_failure(rows: tuple[int, ...], n: int, first: int) -> tuple[tuple[int, ...], int] | None:
    """First failing (subset, mask) among subsets whose least element is ``first``."""
    v = len(rows)
    full = (1 << v) - 1
    subset = [first]
    # vals[m]: candidate extensions for the prefix bipartition with A-mask m.
    start = full & ~(1 << first)
    row = rows[first]
    stack_vals = [[start & ~row, start & row]]

    def dfs(depth: int, nxt: int):
        vals = stack_vals[-1]
        if depth == n:
            for m, cand in enumerate(vals):
                if not cand:
                    return tuple(subset), m
            return None
        for x in range(nxt, v - (n - depth) + 1):
            bit = 1 << x
            row = rows[x]
            stack_vals.append([c & ~bit & ~row for c in vals] + [c & ~bit & row for c in vals])
            subset.append(x)
            found = dfs(depth + 1, x + 1)
            subset.pop()
            stack_vals.pop()
            if found:
                return found
        return None

    return dfs(1, first + 1)


def _validate_level(g: Graph, n: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n >= g.order:
        raise ValueError(f"n={n} must be below the order {g.order}: no vertex lies outside an n-set")


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("NECGRAPH_JOBS", "1")))
    except ValueError:
        return 1


def is_n_ec(g: Graph, n: int, jobs: int = 1) -> EcReport:
    """Decide whether every bipartitioned ``n``-set has an extension vertex.

    With ``jobs > 1`` the subsets are split by least element across worker
    processes; the reported witness is still the first in the fixed order.
    """
    _validate_level(g, n)
    firsts = range(g.order - n + 1)
    if jobs <= 1:
        for first in firsts:
            found = _first_failure(g.rows, n, first)
            if found:
                break
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_first_failure, [g.rows] * len(firsts), [n] * len(firsts), firsts)
            found = next((r for r in results if r), None)
    if found is None:
        return EcReport(n, True)
    subset, mask = found
    return EcReport(n, False, _split(g.order, subset, mask))


def naive_is_n_ec(g: Graph, n: int) -> EcReport:
    """Reference checker using plain loops over an adjacency matrix."""
    _validate_level(g, n)
    v = g.order
    adj = [[g.adjacent(x, y) for y in range(v)] for x in range(v)]
    for subset in combinations(range(v), n):
        for mask in range(1 << n):
            a = [x for i, x in enumerate(subset) if mask >> i & 1]
            b = [x for i, x in enumerate(subset) if not mask >> i & 1]
            extended = False
            for z in range(v):
                if z in subset:
                    continue
                if all(adj[z][x] for x in a) and not any(adj[z][y] for y in b):
                    extended = True
                    break
            if not extended:
                return EcReport(n, False, (VertexSet.of(v, a), VertexSet.of(v, b)))
    return EcReport(n, True)


def max_ec(g: Graph, cap: int, jobs: int = 1) -> int:
    """Largest ``n <= cap`` for which ``g`` is n-e.c. (0 if not even 1-e.c.)."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    best = 0
    for n in range(1, min(cap, g.order - 1) + 1):
        if not is_n_ec(g, n, jobs).holds:
            break
        best = n
    return best


# -- fullness ---------------------------------------------------------------


def _canonical_code(order: int, edges: list[tuple[int, int]]) -> int:
    """Least upper-triangle bit code over all vertex relabellings."""
    pairs = list(combinations(range(order), 2))
    best = None
    for perm in permutations(range(order)):
        present = {(min(perm[x], perm[y]), max(perm[x], perm[y])) for x, y in edges}
        code = sum(1 << i for i, p in enumerate(pairs) if p in present)
        if best is None or code < best:
            best = code
    return best or 0


@lru_cache(maxsize=None)
def graph_catalog(r: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class of ``r``-vertex graphs.

    Sorted by edge count, then canonical code.
    """
    if not 1 <= r <= MAX_CATALOG_ORDER:
        raise ValueError(f"catalog available for 1 <= r <= {MAX_CATALOG_ORDER}")
    pairs = list(combinations(range(r), 2))
    codes = set()
    for labelled in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if labelled >> i & 1]
        codes.add(_canonical_code(r, edges))
    classes = [Graph.from_edges(r, [p for i, p in enumerate(pairs) if code >> i & 1]) for code in codes]
    classes.sort(key=lambda h: (h.edge_count(), _canonical_code(r, h.edges())))
    return tuple(classes)


def find_induced_embedding(g: Graph, h: Graph, anchor: int | None = None) -> list[int] | None:
    """Injective map ``phi`` from ``h`` into ``g`` preserving adjacency and non-adjacency.

    With ``anchor`` set, the image must contain that vertex of ``g``.
    """
    v, r = g.order, h.order
    if r > v:
        return None
    full = (1 << v) - 1
    gdeg = g.degrees()
    hdeg = h.degrees()
    fits = [
        sum(1 << y for y in range(v) if gdeg[y] >= hdeg[u] and v - 1 - gdeg[y] >= r - 1 - hdeg[u])
        for u in range(r)
    ]

    def search(order: list[int], phi: dict[int, int], used: int) -> list[int] | None:
        if len(phi) == r:
            return [phi[u] for u in range(r)]
        u = order[len(phi)]
        cand = full & ~used & fits[u]
        for w, y in phi.items():
            cand &= g.row(y) if h.adjacent(u, w) else ~g.row(y)
        for y in bits(cand):
            phi[u] = y
            found = search(order, phi, used | 1 << y)
            if found:
                return found
            del phi[u]
        return None

    base = sorted(range(r), key=lambda u: -hdeg[u])
    if anchor is None:
        return search(base, {}, 0)
    for u in range(r):
        if not fits[u] >> anchor & 1:
            continue
        order = [u] + [w for w in base if w != u]
        found = search(order, {u: anchor}, 1 << anchor)
        if found:
            return found
    return None


def is_r_full(g: Graph, r: int, anchor: int | None = None) -> FullnessReport:
    """Check that every ``r``-vertex graph occurs as an induced subgraph of ``g``.

    ``anchor`` restricts to copies that contain the given vertex.
    """
    if not 1 <= r <= MAX_CATALOG_ORDER:
        raise ValueError(f"r must lie in 1..{MAX_CATALOG_ORDER}")
    if anchor is not None and not 0 <= anchor < g.order:
        raise ValueError(f"anchor {anchor} out of range")
    for h in graph_catalog(r):
        if find_induced_embedding(g, h, anchor) is None:
            return FullnessReport(r, False, h, anchor)
    return FullnessReport(r, True, None, anchor)
