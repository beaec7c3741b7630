"""Generators for the graph and design families under study.

Element orders are fixed so outputs are byte-reproducible: GF(2)^{2r}
vectors count in binary, field elements are little-endian coefficient
vectors read as base-p integers, group elements use mixed radix with the
first factor least significant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .geometry import LatinSquare, SteinerTripleSystem
from .graph import Graph, GraphBuilder

MAX_SYMPLECTIC_R = 6
MAX_FIELD_DEGREE = 3


# -- symplectic graphs -------------------------------------------------------


def symplectic_form(r: int) -> list[list[int]]:
    """The 2r x 2r block-diagonal matrix with blocks [[0,1],[1,0]] over GF(2)."""
    n = 2 * r
    return [[1 if i // 2 == j // 2 and i != j else 0 for j in range(n)] for i in range(n)]


def symplectic_product(x: int, y: int) -> int:
    """``x^T N y`` over GF(2) for vectors packed into ints (coordinate i = bit i)."""
    evens = 0x5555555555555555
    swapped = (y & evens) << 1 | (y >> 1) & evens
    return bin(x & swapped).count("1") & 1


def symplectic_graph(r: int) -> Graph:
    """Sp(2r): vertex ``i`` is the nonzero vector with integer value ``i + 1``."""
    if r < 1:
        raise ValueError("r must be positive")
    if r > MAX_SYMPLECTIC_R:
        raise ValueError(f"r > {MAX_SYMPLECTIC_R} exceeds the desk-scale guard")
    v = (1 << 2 * r) - 1
    return Graph.from_relation(v, lambda a, b: symplectic_product(a + 1, b + 1) == 1)


def symplectic_vertex(vector: int) -> int:
    if vector == 0:
        raise ValueError("the zero vector is not a vertex")
    return vector - 1


def symplectic_labels(r: int) -> list[str]:
    width = 2 * r
    return [format(i + 1, f"0{width}b")[::-1] for i in range((1 << width) - 1)]


# -- finite fields and Paley graphs -------------------------------------------


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def least_nonresidue(p: int) -> int:
    squares = {x * x % p for x in range(1, p)}
    return next(n for n in range(2, p) if n not in squares)


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^k) as GF(p)[x] modulo a monic irreducible polynomial.

    ``modulus`` lists coefficients from the constant term up, leading 1 included.
    """

    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if not 1 <= self.k <= MAX_FIELD_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_FIELD_DEGREE}")
        modulus = self.modulus
        if modulus is None:
            if self.k == 1:
                modulus = (0, 1)
            elif self.k == 2 and self.p > 2:
                modulus = ((-least_nonresidue(self.p)) % self.p, 0, 1)
            else:
                raise ValueError(f"supply a modulus for GF({self.p}^{self.k})")
        modulus = tuple(c % self.p for c in modulus)
        object.__setattr__(self, "modulus", modulus)
        if len(modulus) != self.k + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.k}")
        if not is_irreducible(self.p, modulus):
            raise ValueError(f"modulus {modulus} is reducible over GF({self.p})")

    @property
    def order(self) -> int:
        return self.p**self.k


def is_irreducible(p: int, poly: tuple[int, ...]) -> bool:
    """Irreducibility over GF(p) for degree <= 3: no root in GF(p)."""
    degree = len(poly) - 1
    if degree > MAX_FIELD_DEGREE:
        raise ValueError("root test only decides degree <= 3")
    if degree == 1:
        return True
    return all(sum(c * pow(x, i, p) for i, c in enumerate(poly)) % p for x in range(p))


class FiniteField:
    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p, self.k = spec.p, spec.k
        self.order = spec.order
        self._vecs = [self._digits(i) for i in range(self.order)]
        self._mul = [[self._index(self._polymul(a, b)) for b in self._vecs] for a in self._vecs]

    def _digits(self, i: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            i, d = divmod(i, self.p)
            out.append(d)
        return tuple(out)

    def _index(self, vec) -> int:
        return sum(c * self.p**i for i, c in enumerate(vec))

    def _polymul(self, a, b) -> list[int]:
        p, k, mod = self.p, self.k, self.spec.modulus
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                for i in range(k + 1):
                    prod[deg - k + i] = (prod[deg - k + i] - c * mod[i]) % p
        return prod[:k]

    def vector(self, x: int) -> tuple[int, ...]:
        return self._vecs[x]

    def add(self, x: int, y: int) -> int:
        return self._index((a + b) % self.p for a, b in zip(self._vecs[x], self._vecs[y]))

    def neg(self, x: int) -> int:
        return self._index((-a) % self.p for a in self._vecs[x])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def inverse(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._mul[x].index(1)

    def nonzero_squares(self) -> set[int]:
        return {self._mul[x][x] for x in range(1, self.order)}


def paley_graph(field: FieldSpec) -> Graph:
    """Vertices are field elements; ``x ~ y`` iff ``x - y`` is a nonzero square."""
    q = field.order
    if q % 4 != 1:
        raise ValueError(f"Paley graphs need q = 1 mod 4, got q = {q}")
    gf = FiniteField(field)
    squares = gf.nonzero_squares()
    return Graph.from_relation(q, lambda x, y: gf.sub(x, y) in squares)


def paley_labels(field: FieldSpec) -> list[str]:
    gf = FiniteField(field)
    return ["(" + ",".join(map(str, gf.vector(x))) + ")" for x in range(gf.order)]


# -- groups and Cayley tables -------------------------------------------------

# Element r^i s^j at index i + 4j, with s r = r^-1 s.
DIHEDRAL_8 = (
    (0, 1, 2, 3, 4, 5, 6, 7),
    (1, 2, 3, 0, 5, 6, 7, 4),
    (2, 3, 0, 1, 6, 7, 4, 5),
    (3, 0, 1, 2, 7, 4, 5, 6),
    (4, 7, 6, 5, 0, 3, 2, 1),
    (5, 4, 7, 6, 1, 0, 3, 2),
    (6, 5, 4, 7, 2, 1, 0, 3),
    (7, 6, 5, 4, 3, 2, 1, 0),
)

# Elements 1, -1, i, -i, j, -j, k, -k.
QUATERNION_8 = (
    (0, 1, 2, 3, 4, 5, 6, 7),
    (1, 0, 3, 2, 5, 4, 7, 6),
    (2, 3, 1, 0, 6, 7, 5, 4),
    (3, 2, 0, 1, 7, 6, 4, 5),
    (4, 5, 7, 6, 1, 0, 2, 3),
    (5, 4, 6, 7, 0, 1, 3, 2),
    (6, 7, 4, 5, 3, 2, 1, 0),
    (7, 6, 5, 4, 2, 3, 0, 1),
)


def is_group_table(table) -> bool:
    n = len(table)
    return all(table[0][i] == i == table[i][0] for i in range(n)) and all(
        table[table[a][b]][c] == table[a][table[b][c]] for a in range(n) for b in range(n) for c in range(n)
    )


for _table in (DIHEDRAL_8, QUATERNION_8):
    LatinSquare(8, _table)
    assert is_group_table(_table)


@dataclass(frozen=True)
class GroupSpec:
    """``kind`` is one of cyclic, elementary-abelian-2, direct-product, dihedral, quaternion.

    ``orders`` holds the cyclic factor orders for the abelian kinds.
    """

    kind: str
    orders: tuple[int, ...] = ()

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls("cyclic", (n,))

    @classmethod
    def elementary_abelian_2(cls, t: int) -> "GroupSpec":
        return cls("elementary-abelian-2", (2,) * t)

    @classmethod
    def direct_product(cls, *orders: int) -> "GroupSpec":
        return cls("direct-product", tuple(orders))

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse names like ``z8``, ``z2^3``, ``z4xz2``, ``d4``, ``q8``."""
        name = text.strip().lower()
        if name in ("d4", "d8", "dihedral", "dihedral8"):
            return cls("dihedral", (8,))
        if name in ("q8", "quaternion"):
            return cls("quaternion", (8,))
        try:
            if name.startswith("z2^"):
                return cls.elementary_abelian_2(int(name[3:]))
            factors = [int(f.lstrip("z")) for f in name.split("x")]
        except ValueError:
            raise ValueError(f"unknown group {text!r}") from None
        if not all(f.startswith("z") for f in name.split("x")):
            raise ValueError(f"unknown group {text!r}")
        if len(factors) == 1:
            return cls.cyclic(factors[0])
        return cls.direct_product(*factors)

    @property
    def order(self) -> int:
        if self.kind in ("dihedral", "quaternion"):
            return 8
        out = 1
        for n in self.orders:
            out *= n
        return out


def cayley_table(spec: GroupSpec) -> LatinSquare:
    """Cayley table with identity at index 0."""
    if spec.kind == "dihedral":
        return LatinSquare(8, DIHEDRAL_8)
    if spec.kind == "quaternion":
        return LatinSquare(8, QUATERNION_8)
    if spec.kind not in ("cyclic", "elementary-abelian-2", "direct-product"):
        raise ValueError(f"unsupported group kind {spec.kind!r}")
    radices = spec.orders
    if not radices or any(n < 1 for n in radices):
        raise ValueError(f"bad factor orders {radices}")
    elements = [tuple(reversed(e)) for e in product(*(range(n) for n in reversed(radices)))]
    index = {e: i for i, e in enumerate(elements)}
    table = tuple(
        tuple(index[tuple((x + y) % n for x, y, n in zip(a, b, radices))] for b in elements) for a in elements
    )
    return LatinSquare(len(elements), table)


# -- Steiner triple systems -------------------------------------------------


def bose_sts(v: int) -> SteinerTripleSystem:
    """Bose construction on Z_m x {0,1,2}, ``m = v/3``; point ``(i, c)`` has index ``i + m*c``."""
    if v % 6 != 3 or v < 9:
        raise ValueError(f"Bose construction needs v = 3 mod 6 and v >= 9, got {v}")
    m = v // 3
    half = (m + 1) // 2  # inverse of 2 mod odd m
    triples = [(i, i + m, i + 2 * m) for i in range(m)]
    for c in range(3):
        for i, j in combinations(range(m), 2):
            k = (i + j) * half % m
            triples.append((i + m * c, j + m * c, k + m * ((c + 1) % 3)))
    return SteinerTripleSystem(v, tuple(triples))


def petersen() -> Graph:
    """Kneser graph K(5,2) on the 2-subsets of {0..4} in lexicographic order."""
    pairs = list(combinations(range(5), 2))
    return Graph.from_relation(10, lambda a, b: not set(pairs[a]) & set(pairs[b]))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_relation(n, lambda a, b: True)


def empty_graph(n: int) -> Graph:
    return GraphBuilder(n).build()
