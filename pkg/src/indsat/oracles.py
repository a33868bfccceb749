"""Exact adjacency oracles for the five explicit infinite constructions.

Vertices are symbolic (rationals, rational pairs, integer tuples); adjacency
is decided exactly, never through floating point.  sqrt(2) comparisons go
through quadratic-field sign computation, and pi comparisons walk a table of
continued-fraction enclosures until one side is certain (any rational input
differs from pi, so a deep enough table always decides).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .graphs import Graph

UP_RIGHT = "up_right"
TORERO = "torero"
RATIONAL_GEOMETRIC = "rational_geometric"
GRID_CLIQUE = "grid_clique"
Z3_AGREE = "z3_agree"


@dataclass(frozen=True)
class OracleKind:
    tag: str
    p: int = 0  # grid dimension, used by GRID_CLIQUE only

    def __post_init__(self):
        if self.tag not in (UP_RIGHT, TORERO, RATIONAL_GEOMETRIC, GRID_CLIQUE, Z3_AGREE):
            raise ValueError(f"unknown oracle kind {self.tag!r}")
        if self.tag == GRID_CLIQUE and self.p < 1:
            raise ValueError("grid dimension must be at least 1")


def grid_clique(p: int) -> OracleKind:
    return OracleKind(GRID_CLIQUE, p)


UP_RIGHT_KIND = OracleKind(UP_RIGHT)
TORERO_KIND = OracleKind(TORERO)
RATIONAL_GEOMETRIC_KIND = OracleKind(RATIONAL_GEOMETRIC)
Z3_AGREE_KIND = OracleKind(Z3_AGREE)

# Vertex payloads per kind:
#   up_right            (Fraction, Fraction)
#   torero              Fraction in (0, 1)
#   rational_geometric  Fraction
#   grid_clique(p)      tuple of p ints
#   z3_agree            ((i, j, k), clone_index)
OracleVertex = Union[Fraction, tuple]


class QuadValue:
    """Exact value a + b*sqrt(2) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a: Fraction, b: Fraction = Fraction(0)):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __sub__(self, other: "QuadValue") -> "QuadValue":
        return QuadValue(self.a - other.a, self.b - other.b)

    def sign(self) -> int:
        """Sign of a + b*sqrt(2), decided by comparing a^2 with 2 b^2."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Opposite signs: |a| vs |b|*sqrt(2), i.e. a^2 vs 2 b^2, never equal
        # for rational a, b not both zero (sqrt(2) is irrational).
        bigger_rational = a * a > 2 * b * b
        if a > 0:
            return 1 if bigger_rational else -1
        return -1 if bigger_rational else 1

    def __lt__(self, other: "QuadValue") -> bool:
        return (self - other).sign() < 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuadValue) and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"QuadValue({self.a}, {self.b})"


# Continued-fraction coefficients of pi; enough terms to separate pi from any
# rational with denominator below ~1e20.
_PI_CF = (3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1, 2, 2, 2, 2,
          1, 84, 2, 1, 1, 15, 3, 13, 1, 4, 2, 6, 6, 99, 1, 2, 2, 6, 3, 5, 1, 1)


def _convergents() -> list[Fraction]:
    out = []
    p0, q0, p1, q1 = 1, 0, _PI_CF[0], 1
    out.append(Fraction(p1, q1))
    for a in _PI_CF[1:]:
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        out.append(Fraction(p1, q1))
    return out


_PI_CONVERGENTS = _convergents()


class PiComparisonExhausted(ArithmeticError):
    """The fixed convergent table could not separate the input from pi."""


def pi_bounds(depth: int = 3) -> tuple[Fraction, Fraction]:
    """Rational (lo, hi) with lo < pi < hi; deeper means tighter.

    depth=0 gives (3, 22/7); depth grows two convergents at a time.
    """
    idx = 2 * depth
    if idx + 1 >= len(_PI_CONVERGENTS):
        raise PiComparisonExhausted(f"no enclosure at depth {depth}")
    return _PI_CONVERGENTS[idx], _PI_CONVERGENTS[idx + 1]


def compare_to_pi(q: Fraction) -> int:
    """-1 if q < pi, +1 if q > pi.  Exact; rational q never equals pi."""
    q = Fraction(q)
    # Even-indexed convergents sit below pi, odd-indexed above.
    for i, c in enumerate(_PI_CONVERGENTS):
        if i % 2 == 0:
            if q <= c:
                return -1
        else:
            if q >= c:
                return 1
    raise PiComparisonExhausted(f"convergent table exhausted for {q}")


def _check_vertex(kind: OracleKind, v: OracleVertex) -> None:
    tag = kind.tag
    if tag == UP_RIGHT:
        if not (isinstance(v, tuple) and len(v) == 2
                and all(isinstance(c, Fraction) for c in v)):
            raise ValueError(f"up-and-right vertex must be a rational pair, got {v!r}")
    elif tag == TORERO:
        if not isinstance(v, Fraction) or not 0 < v < 1:
            raise ValueError(f"torero vertex must be a rational in (0,1), got {v!r}")
    elif tag == RATIONAL_GEOMETRIC:
        if not isinstance(v, Fraction):
            raise ValueError(f"rational-geometric vertex must be a rational, got {v!r}")
    elif tag == GRID_CLIQUE:
        if not (isinstance(v, tuple) and len(v) == kind.p
                and all(isinstance(c, int) for c in v)):
            raise ValueError(f"grid vertex must be a {kind.p}-tuple of ints, got {v!r}")
    else:  # Z3_AGREE
        ok = (isinstance(v, tuple) and len(v) == 2 and isinstance(v[1], int)
              and v[1] >= 0 and isinstance(v[0], tuple) and len(v[0]) == 3
              and all(isinstance(c, int) for c in v[0]))
        if not ok:
            raise ValueError(f"z3 vertex must be ((i,j,k), clone>=0), got {v!r}")


def oracle_adjacent(kind: OracleKind, u: OracleVertex, v: OracleVertex) -> bool:
    """Exact adjacency decision for two distinct vertices of the same kind."""
    _check_vertex(kind, u)
    _check_vertex(kind, v)
    if u == v:
        raise ValueError("oracle_adjacent needs two distinct vertices")
    tag = kind.tag
    if tag == UP_RIGHT:
        (q, r), (s, t) = u, v
        plus = QuadValue(q - s, r - t).sign()
        minus = QuadValue(q - s, t - r).sign()
        # Same strict order under both linear forms means "up and right".
        return plus == minus
    if tag == TORERO:
        return u + v > 1
    if tag == RATIONAL_GEOMETRIC:
        return compare_to_pi(abs(u - v)) < 0
    if tag == GRID_CLIQUE:
        return sum(1 for a, b in zip(u, v) if a != b) == 1
    # Z3_AGREE: clones of one point form a clique; distinct points are
    # adjacent when they agree in at least one coordinate.
    pu, pv = u[0], v[0]
    if pu == pv:
        return True
    return any(a == b for a, b in zip(pu, pv))


def oracle_window(kind: OracleKind,
                  vertices: Sequence[OracleVertex]) -> tuple[Graph, tuple[OracleVertex, ...]]:
    """Finite induced sample: graph plus the vertex labeling, index-aligned."""
    vertices = tuple(vertices)
    if len(set(vertices)) != len(vertices):
        raise ValueError("duplicate oracle vertices in window")
    n = len(vertices)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if oracle_adjacent(kind, vertices[i], vertices[j])]
    return Graph.from_edges(n, edges), vertices


# --- JSON serialization of oracle vertices ---------------------------------


def fraction_to_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def fraction_from_str(s: str) -> Fraction:
    return Fraction(s)


def vertex_to_json(kind: OracleKind, v: OracleVertex):
    tag = kind.tag
    if tag == UP_RIGHT:
        return [fraction_to_str(v[0]), fraction_to_str(v[1])]
    if tag in (TORERO, RATIONAL_GEOMETRIC):
        return fraction_to_str(v)
    if tag == GRID_CLIQUE:
        return list(v)
    return [list(v[0]), v[1]]


def vertex_from_json(kind: OracleKind, data) -> OracleVertex:
    tag = kind.tag
    if tag == UP_RIGHT:
        return (Fraction(data[0]), Fraction(data[1]))
    if tag in (TORERO, RATIONAL_GEOMETRIC):
        return Fraction(data)
    if tag == GRID_CLIQUE:
        return tuple(int(c) for c in data)
    return (tuple(int(c) for c in data[0]), int(data[1]))


def kind_to_json(kind: OracleKind) -> dict:
    out = {"tag": kind.tag}
    if kind.tag == GRID_CLIQUE:
        out["p"] = kind.p
    return out


def kind_from_json(data: dict) -> OracleKind:
    return OracleKind(data["tag"], data.get("p", 0))
