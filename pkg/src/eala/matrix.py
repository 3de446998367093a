"""2x2 matrices over the quaternion torus and the Lie algebra sl2(Q).

Matrices act on ``V = Q + Q`` (column vectors) by left multiplication, which
makes them endomorphisms of ``V`` as a *right* Q-module.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence, Tuple

from .errors import DegreeOverflow
from .linalg import Echelon
from .torus import ONE_T, ZERO_T, TorusElement, box_degrees, monomial, parse_torus

__all__ = [
    "Matrix2",
    "E11",
    "E12",
    "E21",
    "E22",
    "diag",
    "identity",
    "mat_mul",
    "bracket",
    "is_in_sl2",
    "sl2_membership_bruteforce",
    "MAX_BRUTEFORCE_BOX",
]

POSITIONS = ((0, 0), (0, 1), (1, 0), (1, 1))


class Matrix2:
    """Immutable 2x2 matrix with :class:`TorusElement` entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[TorusElement]]):
        (a, b), (c, d) = entries
        self.entries = ((_t(a), _t(b)), (_t(c), _t(d)))

    def __getitem__(self, ij: Tuple[int, int]) -> TorusElement:
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other) -> bool:
        if isinstance(other, Matrix2):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __bool__(self) -> bool:
        return any(self[p] for p in POSITIONS)

    def map(self, f) -> "Matrix2":
        return Matrix2([[f(x) for x in row] for row in self.entries])

    def __add__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2([[self[i, j] + other[i, j] for j in (0, 1)] for i in (0, 1)])

    def __sub__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2([[self[i, j] - other[i, j] for j in (0, 1)] for i in (0, 1)])

    def __neg__(self) -> "Matrix2":
        return self.map(lambda x: -x)

    def scale(self, c) -> "Matrix2":
        return self.map(lambda x: x.scale(c))

    def __mul__(self, other):
        if isinstance(other, Matrix2):
            return mat_mul(self, other)
        return self.scale(other)

    def __rmul__(self, c) -> "Matrix2":
        return self.scale(c)

    def apply(self, column: Sequence[TorusElement]) -> Tuple[TorusElement, TorusElement]:
        u, v = column
        return (self[0, 0] * u + self[0, 1] * v, self[1, 0] * u + self[1, 1] * v)

    def trace(self) -> TorusElement:
        return self[0, 0] + self[1, 1]

    def degrees(self) -> set:
        out = set()
        for p in POSITIONS:
            out |= self[p].support()
        return out

    def degree_component(self, d) -> "Matrix2":
        return self.map(lambda x: x.restrict(d))

    def coordinates(self) -> dict:
        """Coordinate vector keyed by ``(row, col, degree)``."""
        out = {}
        for p in POSITIONS:
            for d, c in self[p].terms.items():
                out[(p[0], p[1], d)] = c
        return out

    def __str__(self) -> str:
        (a, b), (c, d) = self.entries
        return f"[[{a}, {b}], [{c}, {d}]]"

    def __repr__(self) -> str:
        return f"Matrix2({str(self)!r})"


def _t(x) -> TorusElement:
    return x if isinstance(x, TorusElement) else TorusElement.scalar(x)


def _unit(i: int, j: int, x) -> Matrix2:
    rows = [[ZERO_T, ZERO_T], [ZERO_T, ZERO_T]]
    rows[i][j] = _t(x)
    return Matrix2(rows)


def E11(x=1) -> Matrix2:
    return _unit(0, 0, x)


def E12(x=1) -> Matrix2:
    return _unit(0, 1, x)


def E21(x=1) -> Matrix2:
    return _unit(1, 0, x)


def E22(x=1) -> Matrix2:
    return _unit(1, 1, x)


def diag(x, y) -> Matrix2:
    return Matrix2([[x, ZERO_T], [ZERO_T, y]])


def identity() -> Matrix2:
    return diag(ONE_T, ONE_T)


def zero_matrix() -> Matrix2:
    return diag(ZERO_T, ZERO_T)


def mat_mul(x: Matrix2, y: Matrix2) -> Matrix2:
    return Matrix2(
        [
            [x[i, 0] * y[0, j] + x[i, 1] * y[1, j] for j in (0, 1)]
            for i in (0, 1)
        ]
    )


def bracket(x: Matrix2, y: Matrix2) -> Matrix2:
    return mat_mul(x, y) - mat_mul(y, x)


def is_in_sl2(x: Matrix2) -> bool:
    """Membership in ``[gl2(Q), gl2(Q)]``.

    ``[Q, Q]`` is exactly the span of monomials of degree other than
    (even, even), so a matrix lies in sl2(Q) iff its trace has no (even, even)
    part.
    """
    return not x.trace().even_even_part()


MAX_BRUTEFORCE_BOX = 8


def monomial_matrices(box: int) -> Iterator[Matrix2]:
    for d in box_degrees(box):
        m = monomial(*d)
        for i, j in POSITIONS:
            yield _unit(i, j, m)


@lru_cache(maxsize=None)
def _commutator_span(box: int) -> Echelon:
    ech = Echelon()
    mats = list(monomial_matrices(box))
    for x in mats:
        for y in mats:
            c = bracket(x, y)
            if c:
                ech.add(c.coordinates())
    return ech


def sl2_membership_bruteforce(x: Matrix2, box: int) -> bool:
    """Decide whether ``x`` is a linear combination of brackets of monomial
    matrices with degrees in ``[-box, box]^2``.

    This deliberately ignores the trace criterion and works from the
    definition ``sl2(Q) = [gl2(Q), gl2(Q)]``.
    """
    if box < 1:
        raise ValueError("box must be >= 1")
    if box > MAX_BRUTEFORCE_BOX:
        raise DegreeOverflow(f"box {box} exceeds MAX_BRUTEFORCE_BOX={MAX_BRUTEFORCE_BOX}")
    return _commutator_span(box).contains(x.coordinates())


def parse_matrix(text: str) -> Matrix2:
    """Inverse of ``str(Matrix2)``."""
    s = text.strip()
    if not (s.startswith("[[") and s.endswith("]]")):
        raise ValueError(f"not a matrix: {text!r}")
    body = s[2:-2]
    rows = body.split("], [")
    if len(rows) != 2:
        raise ValueError(f"not a 2x2 matrix: {text!r}")
    out = []
    for row in rows:
        cells = _split_top(row)
        if len(cells) != 2:
            raise ValueError(f"row needs two entries: {row!r}")
        out.append([parse_torus(c) for c in cells])
    return Matrix2(out)


def _split_top(text: str) -> list:
    depth, start, out = 0, 0, []
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            out.append(text[start:i])
            start = i + 1
    out.append(text[start:])
    return out
