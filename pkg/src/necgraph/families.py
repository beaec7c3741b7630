"""Named graph families with labels and, where applicable, their geometry."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .constructions import (
    FieldSpec,
    GroupSpec,
    bose_sts,
    cayley_table,
    paley_graph,
    paley_labels,
    petersen,
    symplectic_graph,
    symplectic_labels,
)
from .geometry import (
    IncidenceStructure,
    LatinSquare,
    PgParams,
    SteinerTripleSystem,
    latin_square_to_net,
    point_graph,
    star_geometry,
    sts_to_dual_geometry,
    verify_partial_geometry,
)
from .graph import Graph
from .srg import srg_params

FAMILIES = (
    "symplectic",
    "paley",
    "cayley-net",
    "latin-file-net",
    "bose-sts",
    "sts-file-dual",
    "pg-file",
    "petersen",
    "pg-star",
)


@dataclass(frozen=True)
class Construction:
    graph: Graph
    labels: tuple[str, ...]
    geometry: IncidenceStructure | None = None
    latin_square: LatinSquare | None = None
    sts: SteinerTripleSystem | None = None

    @property
    def pg_params(self) -> PgParams | None:
        return None if self.geometry is None else verify_partial_geometry(self.geometry)

    def summary(self) -> str:
        parts = [f"order={self.graph.order}", f"edges={self.graph.edge_count()}"]
        pg = self.pg_params
        if pg is not None:
            parts.append(f"(s,t,a)=({pg})")
        srg = srg_params(self.graph)
        parts.append(f"srg=({srg})" if srg else "srg=none")
        return " ".join(parts)


def from_net(ls: LatinSquare) -> Construction:
    net = latin_square_to_net(ls)
    labels = tuple(f"{r},{c}" for r in range(ls.n) for c in range(ls.n))
    return Construction(point_graph(net), labels, net, latin_square=ls)


def from_sts(sts: SteinerTripleSystem) -> Construction:
    geo = sts_to_dual_geometry(sts)
    labels = tuple("-".join(map(str, tr)) for tr in sts.triples)
    return Construction(point_graph(geo), labels, geo, sts=sts)


def from_geometry(geo: IncidenceStructure) -> Construction:
    return Construction(point_graph(geo), tuple(map(str, range(geo.point_count))), geo)


def build(family: str, *, r=None, p=None, k=1, modulus=None, group=None, v=None, text=None) -> Construction:
    """Construct a family member; ``text`` carries the contents of an input file."""
    if family == "symplectic":
        _need(r, "r")
        return Construction(symplectic_graph(r), tuple(symplectic_labels(r)))
    if family == "paley":
        _need(p, "p")
        spec = FieldSpec(p, k, tuple(modulus) if modulus else None)
        return Construction(paley_graph(spec), tuple(paley_labels(spec)))
    if family == "cayley-net":
        _need(group, "group")
        return from_net(cayley_table(GroupSpec.parse(group)))
    if family == "bose-sts":
        _need(v, "v")
        return from_sts(bose_sts(v))
    if family == "petersen":
        pairs = list(combinations(range(5), 2))
        return Construction(petersen(), tuple(f"{a}{b}" for a, b in pairs))
    if family == "pg-star":
        return from_geometry(star_geometry())
    if family in ("latin-file-net", "sts-file-dual", "pg-file"):
        _need(text, "input")
        if family == "latin-file-net":
            return from_net(LatinSquare.from_text(text))
        if family == "sts-file-dual":
            return from_sts(SteinerTripleSystem.from_text(text))
        return from_geometry(IncidenceStructure.from_text(text))
    raise ValueError(f"unknown family {family!r}")


def _need(value, name: str) -> None:
    if value is None:
        raise ValueError(f"missing required parameter --{name}")
