"""Strongly regular graphs: detection, parameter identities, 2-e.c. test.

All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .geometry import PgParams
from .graph import Graph, bits, complement

# Reason codes returned by srg_reason.
OK = "ok"
COMPLETE_OR_EMPTY = "complete-or-empty"
NOT_REGULAR = "not-regular"
LAMBDA_NONCONSTANT = "lambda-nonconstant"
MU_NONCONSTANT = "mu-nonconstant"


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if min(self.v, self.k, self.lam, self.mu) < 0:
            raise ValueError(f"negative parameter in {self.astuple()}")

    @classmethod
    def parse(cls, text: str) -> "SrgParams":
        try:
            v, k, lam, mu = (int(x) for x in text.split(","))
        except ValueError:
            raise ValueError(f"expected 'v,k,lambda,mu', got {text!r}") from None
        return cls(v, k, lam, mu)

    def astuple(self) -> tuple[int, int, int, int]:
        return self.v, self.k, self.lam, self.mu

    def __str__(self) -> str:
        return ",".join(map(str, self.astuple()))

    @property
    def disconnected(self) -> bool:
        """``mu = 0``: a disjoint union of complete graphs."""
        return self.mu == 0


def _analyse(g: Graph) -> tuple[SrgParams | None, str]:
    v = g.order
    degrees = set(g.degrees())
    if g.edge_count() == 0 or g.edge_count() == v * (v - 1) // 2:
        return None, COMPLETE_OR_EMPTY
    if len(degrees) != 1:
        return None, NOT_REGULAR
    k = degrees.pop()
    lam = mu = None
    rows = g.rows
    for x in range(v):
        for y in range(x + 1, v):
            common = bin(rows[x] & rows[y]).count("1")
            if rows[x] >> y & 1:
                if lam is None:
                    lam = common
                elif common != lam:
                    return None, LAMBDA_NONCONSTANT
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    return None, MU_NONCONSTANT
    return SrgParams(v, k, lam, mu), OK


def srg_params(g: Graph) -> SrgParams | None:
    """Parameters ``(v, k, lambda, mu)`` if ``g`` is strongly regular, else None."""
    return _analyse(g)[0]


def srg_reason(g: Graph) -> str:
    """``"ok"`` or the first reason ``g`` is not strongly regular."""
    return _analyse(g)[1]


def check_param_identity(p: SrgParams) -> bool:
    """``(v - k - 1) mu == k (k - lambda - 1)``."""
    return (p.v - p.k - 1) * p.mu == p.k * (p.k - p.lam - 1)


def complement_params(p: SrgParams) -> SrgParams:
    v, k, lam, mu = p.astuple()
    out = (v, v - k - 1, v - 2 * k + mu - 2, v - 2 * k + lam)
    if min(out) < 0:
        raise ValueError(f"complement parameters {out} of {p.astuple()} are negative")
    return SrgParams(*out)


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= g.row(x)
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.order) - 1


def has_triangle(g: Graph) -> bool:
    return any(g.row(x) & g.row(y) for x, y in g.edges())


class TwoEcVerdict(NamedTuple):
    holds: bool
    reason: str


def is_2ec_srg(g: Graph) -> TwoEcVerdict:
    """2-e.c. test for a strongly regular graph via connectivity and triangles
    of the graph and its complement."""
    if srg_params(g) is None:
        raise ValueError(f"graph is not strongly regular ({srg_reason(g)})")
    h = complement(g)
    for graph, name in ((g, "graph"), (h, "complement")):
        if not is_connected(graph):
            return TwoEcVerdict(False, f"{name} disconnected")
        if not has_triangle(graph):
            return TwoEcVerdict(False, f"{name} triangle-free")
    return TwoEcVerdict(True, "graph and complement connected with triangles")


def pg_point_graph_params(p: PgParams) -> SrgParams:
    s, t, a = p.astuple()
    if s + 1 <= a:
        raise ValueError(f"pg({p}) has s + 1 = alpha: point graph would be complete")
    num = (s + 1) * (s * t + a)
    if num % a:
        raise ValueError(f"alpha={a} does not divide (s+1)(st+alpha)={num}")
    return SrgParams(num // a, s * (t + 1), (s - 1) + t * (a - 1), (t + 1) * a)


def pseudo_geometric_inverse(p: SrgParams) -> PgParams | None:
    """The ``(s, t, alpha)`` whose point-graph parameters equal ``p``, if any.

    Candidates come from the divisors ``t + 1`` of ``k``.
    """
    found = []
    for d in range(2, p.k + 1):
        if p.k % d or p.mu % d:
            continue
        s, t, a = p.k // d, d - 1, p.mu // d
        if s < 2 or a < 1 or a > min(s, t) + 1 or s + 1 <= a:
            continue
        if (s - 1) + t * (a - 1) != p.lam:
            continue
        if (s + 1) * (s * t + a) % a == 0 and (s + 1) * (s * t + a) // a == p.v:
            found.append(PgParams(s, t, a))
    if len(found) > 1:
        raise ValueError(f"{p.astuple()} matches several geometries: {found}")
    return found[0] if found else None


def complement_triangle_free_value(p: PgParams) -> int:
    """``(s - alpha)^2 t + (t - alpha) s + alpha (alpha - 1)``.

    Equals ``alpha`` times the complement's lambda, so zero means the
    complement of the point graph has no triangle.
    """
    s, t, a = p.astuple()
    return (s - a) ** 2 * t + (t - a) * s + a * (a - 1)


def complement_triangle_free_geo(p: PgParams) -> bool:
    return complement_triangle_free_value(p) == 0
