"""Root/degree double grading of ``L = sl2(Q)`` and its invariant form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from .errors import BadRootIndex
from .linalg import determinant
from .matrix import E12, E21, Matrix2, diag
from .scalars import ZERO, Scalar
from .torus import Degree, ZERO_T, box_degrees, is_even_even, monomial

__all__ = [
    "ROOTS",
    "GradedIndex",
    "root_component",
    "degree_component",
    "form_L",
    "graded_basis",
    "slice_basis",
    "slice_gram",
    "GramRow",
    "gram_report",
]

ROOTS = (-2, 0, 2)


@dataclass(frozen=True, order=True)
class GradedIndex:
    degree: Degree
    root: int

    def __post_init__(self):
        if self.root not in ROOTS:
            raise BadRootIndex(f"root {self.root} not in {ROOTS}")


def root_component(x: Matrix2, root: int) -> Matrix2:
    if root == 2:
        return Matrix2([[ZERO_T, x[0, 1]], [ZERO_T, ZERO_T]])
    if root == -2:
        return Matrix2([[ZERO_T, ZERO_T], [x[1, 0], ZERO_T]])
    if root == 0:
        return diag(x[0, 0], x[1, 1])
    raise BadRootIndex(f"root {root} not in {ROOTS}")


def degree_component(x: Matrix2, d: Degree) -> Matrix2:
    return x.degree_component(tuple(d))


def form_L(x: Matrix2, y: Matrix2) -> Scalar:
    """``(x11 y11 + x12 y21 + x21 y12 + x22 y22)`` at degree (0, 0)."""
    s = ZERO
    for i in (0, 1):
        for j in (0, 1):
            s = s + _constant_of_product(x[i, j], y[j, i])
    return s


def _constant_of_product(u, v) -> Scalar:
    # only opposite degrees reach (0, 0); (i^a j^b)(i^-a j^-b) = (-1)^(ab)
    s = ZERO
    if not u or not v:
        return s
    vt = v.terms
    for (a, b), c in u.terms.items():
        w = vt.get((-a, -b))
        if w is not None:
            s = s - c * w if (a * b) & 1 else s + c * w
    return s


def slice_basis(d: Degree, root: int) -> List[Matrix2]:
    """Deterministic basis of the graded piece ``L^d_root``.

    Root 0 holds ``diag(m, -m)`` and, for degrees other than (even, even),
    also ``diag(m, m)``, where ``m = i^a j^b``.
    """
    m = monomial(*d)
    if root == 2:
        return [E12(m)]
    if root == -2:
        return [E21(m)]
    if root == 0:
        out = [diag(m, -m)]
        if not is_even_even(d):
            out.append(diag(m, m))
        return out
    raise BadRootIndex(f"root {root} not in {ROOTS}")


def graded_basis(box: int) -> Iterator[Tuple[GradedIndex, Matrix2]]:
    """All graded basis elements with degree in ``[-box, box]^2``, lex by degree then root."""
    for d in box_degrees(box):
        for r in ROOTS:
            for b in slice_basis(d, r):
                yield GradedIndex(d, r), b


def slice_gram(d: Degree, root: int) -> List[List[Scalar]]:
    """Gram matrix pairing ``L^d_root`` against ``L^{-d}_{-root}``."""
    left = slice_basis(d, root)
    right = slice_basis((-d[0], -d[1]), -root)
    return [[form_L(x, y) for y in right] for x in left]


@dataclass(frozen=True)
class GramRow:
    degree: Degree
    root: int
    dim: int
    determinant: Scalar

    def __str__(self) -> str:
        return f"{self.degree}\t{self.root}\t{self.dim}\t{self.determinant}"


def gram_report(box: int) -> List[GramRow]:
    rows = []
    for d in box_degrees(box):
        for r in ROOTS:
            g = slice_gram(d, r)
            rows.append(GramRow(d, r, len(g), determinant(g)))
    return rows
