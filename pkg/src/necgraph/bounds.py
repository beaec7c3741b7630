"""Necessary conditions on n-e.c. point graphs of partial geometries.

Each test is an exact integer inequality; a violation certifies that no
graph with the given parameters is 3-e.c. None of them is sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .geometry import PgClass, PgParams, classify
from .srg import SrgParams, complement_triangle_free_geo, pg_point_graph_params


@dataclass(frozen=True)
class BoundEntry:
    name: str
    applicable: bool
    satisfied: bool
    slack: int | None = None
    cap: int | None = None  # largest n the entry allows, None if it says nothing about n

    def __post_init__(self):
        if self.slack is not None and self.applicable and (self.slack >= 0) != self.satisfied:
            raise ValueError(f"{self.name}: slack {self.slack} contradicts satisfied={self.satisfied}")


@dataclass(frozen=True)
class BoundReport:
    params: PgParams
    entries: tuple[BoundEntry, ...] = field(default_factory=tuple)
    n_max_possible: int = 0

    @property
    def feasible_3ec(self) -> bool:
        return self.n_max_possible >= 3

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_text(self) -> str:
        lines = [f"pg({self.params})  classes={','.join(sorted(c.value for c in classify(self.params))) or '-'}"]
        lines.append(f"  {'bound':<22}{'applicable':>11}{'satisfied':>11}{'slack':>8}{'cap':>5}")
        for e in self.entries:
            slack = "-" if e.slack is None else str(e.slack)
            cap = "-" if e.cap is None else str(e.cap)
            lines.append(f"  {e.name:<22}{str(e.applicable).lower():>11}{str(e.satisfied).lower():>11}{slack:>8}{cap:>5}")
        lines.append(f"  n_max_possible={self.n_max_possible}")
        return "\n".join(lines)

    def to_kv(self) -> str:
        out = [f"params={self.params}"]
        for e in self.entries:
            slack = "" if e.slack is None else e.slack
            out.append(
                f"bound={e.name} applicable={str(e.applicable).lower()} "
                f"satisfied={str(e.satisfied).lower()} slack={slack}"
            )
        out.append(f"n_max_possible={self.n_max_possible}")
        return "\n".join(out) + "\n"


def basic_nec_cap(p: PgParams) -> int:
    """``min(s - alpha + 1, t + 1, alpha + 1)``: no point graph is n-e.c. beyond it."""
    return min(p.s - p.alpha + 1, p.t + 1, p.alpha + 1)


def srg_3ec_test(p: SrgParams) -> BoundEntry:
    """``mu (k - lambda - 3) >= v - 2k + mu - 2``."""
    slack = p.mu * (p.k - p.lam - 3) - (p.v - 2 * p.k + p.mu - 2)
    return BoundEntry("srg-3ec", True, slack >= 0, slack, None if slack >= 0 else 2)


def geometric_3ec_test(p: PgParams) -> BoundEntry:
    """Clique-counting condition for a 3-e.c. point graph.

    Uses ``alpha (t^2-1)(s - 2 alpha + 2)`` on the left when
    ``s >= 2 alpha - 1`` and the weaker ``alpha (t^2-1)(s - alpha + 1)``
    otherwise; the right side is ``v + (alpha - 2s)(t + 1) - 2``. For
    ``t = 1`` the left side vanishes and the entry is inapplicable.
    """
    s, t, a = p.astuple()
    num = (s + 1) * (s * t + a)
    if num % a:
        raise ValueError(f"alpha={a} does not divide (s+1)(st+alpha)={num}")
    strong = s >= 2 * a - 1
    name = "geometric-3ec" if strong else "geometric-3ec-weak"
    if t == 1:
        return BoundEntry(name, False, True)
    width = s - 2 * a + 2 if strong else s - a + 1
    lhs = a * (t * t - 1) * width
    rhs = num // a + (a - 2 * s) * (t + 1) - 2
    slack = lhs - rhs
    return BoundEntry(name, True, slack >= 0, slack, None if slack >= 0 else 2)


def _quadratic_interval(b: int, c: int) -> range:
    """Integers ``s >= 0`` with ``s^2 - b s + c <= 0``."""
    disc = b * b - 4 * c
    if disc < 0:
        return range(0)
    root = isqrt(disc)
    lo = max(-((root - b) // 2), 0)
    hi = (b + root) // 2
    return range(lo, hi + 1) if lo <= hi else range(0)


def net_polynomial(s: int, t: int) -> int:
    return s * s - (t**3 + t) * s + 2 * t**4 - 2 * t**3 - t * t + 3 * t - 1


def dual_design_polynomial(s: int, t: int) -> int:
    return s * s - (t**3 + 2 * t * t + 2 * t) * s + 2 * t**4 + 4 * t**3 + t * t - t


def net_3ec_polynomial(t: int) -> range:
    """Values of ``s`` for which a net pg(s,t,t) passes the counting condition."""
    if t < 2:
        raise ValueError("t must be at least 2")
    return _quadratic_interval(t**3 + t, 2 * t**4 - 2 * t**3 - t * t + 3 * t - 1)


def dual_design_3ec_polynomial(t: int) -> range:
    """Values of ``s`` for which a dual design pg(s,t,t+1) passes the counting condition."""
    if t < 2:
        raise ValueError("t must be at least 2")
    return _quadratic_interval(t**3 + 2 * t * t + 2 * t, 2 * t**4 + 4 * t**3 + t * t - t)


def sts_admissible(v: int) -> bool:
    if v < 7:
        raise ValueError("v must be at least 7")
    return v % 6 in (1, 3)


def two_ec_condition(p: PgParams) -> bool:
    """Point graph is 2-e.c. iff ``s >= alpha + 1`` and the complement has a triangle."""
    return p.s >= p.alpha + 1 and not complement_triangle_free_geo(p)


def screen(p: PgParams) -> BoundReport:
    """Run every applicable necessary condition and combine them into a cap on n."""
    entries = []
    cap = basic_nec_cap(p)
    entries.append(BoundEntry("basic-cap", True, True, None, cap))
    two_ec = two_ec_condition(p)
    entries.append(BoundEntry("two-ec", True, two_ec, None, None if two_ec else 1))
    srg = pg_point_graph_params(p)
    entries.append(srg_3ec_test(srg))
    entries.append(geometric_3ec_test(p))
    classes = classify(p)
    if PgClass.NET in classes and p.t >= 2 and p.s >= 2 * p.alpha - 1:
        val = net_polynomial(p.s, p.t)
        entries.append(BoundEntry("net-polynomial", True, val <= 0, -val, None if val <= 0 else 2))
    if PgClass.DUAL_DESIGN in classes and p.t >= 2 and p.s >= 2 * p.alpha - 1:
        val = dual_design_polynomial(p.s, p.t)
        entries.append(BoundEntry("dual-design-polynomial", True, val <= 0, -val, None if val <= 0 else 2))
        if p.t == 2:
            v = 2 * p.s + 3
            entries.append(BoundEntry("sts-admissible", True, sts_admissible(v), None, None))
    caps = [e.cap for e in entries if e.applicable and e.cap is not None]
    return BoundReport(p, tuple(entries), min(caps))


def admissible_params(s: int, t: int, alpha: int) -> PgParams | None:
    """``PgParams`` when the triple is nondegenerate, has a non-complete point
    graph, and an integral vertex count; otherwise None."""
    try:
        p = PgParams(s, t, alpha)
    except ValueError:
        return None
    if s + 1 <= alpha or (s + 1) * (s * t + alpha) % alpha:
        return None
    return p


def sweep(s_values, t_values, alpha_values) -> list[BoundReport]:
    out = []
    for s in s_values:
        for t in t_values:
            for a in alpha_values:
                p = admissible_params(s, t, a)
                if p is not None:
                    out.append(screen(p))
    out.sort(key=lambda r: r.params.astuple())
    return out
