"""Sparse exact linear algebra over :class:`~eala.scalars.Scalar`.

Vectors are dictionaries ``{key: Scalar}`` with arbitrary hashable keys, so
the same routines serve coordinate vectors of torus elements, matrices and
unknowns of a linear system alike.  Keys are compared through a caller-given
ordering only when a deterministic pivot choice matters.
"""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .scalars import ONE, ZERO, Scalar

Vector = Dict[Hashable, Scalar]

__all__ = ["Echelon", "solve", "nullspace", "determinant"]


def _axpy(target: Vector, coeff: Scalar, source: Vector) -> None:
    """``target += coeff * source`` in place, dropping zeros."""
    for k, v in source.items():
        s = target.get(k)
        if s is None:
            target[k] = coeff * v
        else:
            s = s + coeff * v
            if s:
                target[k] = s
            else:
                del target[k]


class Echelon:
    """Incrementally maintained, fully reduced row basis of a span.

    Each stored row has a pivot key with coefficient one, and no other stored
    row has a nonzero entry at that key.  Rows may carry a *tag* vector that
    records how they were combined from the inserted vectors.
    """

    def __init__(self, order=None):
        self.rows: Dict[Hashable, Vector] = {}
        self.tags: Dict[Hashable, Vector] = {}
        self._order = order

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vector, tag: Optional[Vector] = None) -> Tuple[Vector, Vector]:
        v = dict(vec)
        t = dict(tag) if tag is not None else {}
        for k in [k for k in v if k in self.rows]:
            c = v.get(k)
            if c:
                _axpy(v, -c, self.rows[k])
                if self.tags:
                    _axpy(t, -c, self.tags[k])
        return v, t

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)[0]

    def add(self, vec: Vector, tag: Optional[Vector] = None) -> bool:
        """Insert ``vec``; returns ``False`` when it was already in the span."""
        v, t = self.reduce(vec, tag)
        if not v:
            return False
        pivot = min(v, key=self._order) if self._order else next(iter(v))
        inv = v[pivot].inverse()
        v = {k: c * inv for k, c in v.items()}
        t = {k: c * inv for k, c in t.items()}
        for k, row in self.rows.items():
            c = row.get(pivot)
            if c:
                _axpy(row, -c, v)
                if tag is not None or self.tags:
                    _axpy(self.tags.setdefault(k, {}), -c, t)
        self.rows[pivot] = v
        if tag is not None or self.tags:
            self.tags[pivot] = t
        return True


def solve(columns: Sequence[Vector], rhs: Vector) -> Optional[List[Scalar]]:
    """Find ``x`` with ``sum(x[i] * columns[i]) == rhs``.

    Returns one particular solution, or ``None`` when the system is
    inconsistent.
    """
    ech = Echelon()
    for i, col in enumerate(columns):
        ech.add(col, {i: ONE})
    if not ech.contains(rhs):
        return None
    # rows are fully reduced, so rhs = sum over pivots p of rhs[p] * row_p
    x = [ZERO] * len(columns)
    for p in ech.rows:
        c = rhs.get(p)
        if c:
            for i, w in ech.tags[p].items():
                x[i] = x[i] + c * w
    return x


def nullspace(columns: Sequence[Vector]) -> List[List[Scalar]]:
    """Basis of ``{x : sum(x[i] * columns[i]) == 0}``, one list per basis vector."""
    ech = Echelon()
    basis = []
    n = len(columns)
    for i, col in enumerate(columns):
        v, t = ech.reduce(col, {i: ONE})
        if v:
            ech.add(v, t)
        else:
            basis.append([t.get(j, ZERO) for j in range(n)])
    return basis


def determinant(matrix: Sequence[Sequence[Scalar]]) -> Scalar:
    """Determinant by exact Gaussian elimination."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    det = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        piv = m[c][c]
        det = det * piv
        inv = piv.inverse()
        for r in range(c + 1, n):
            f = m[r][c] * inv
            if f:
                for k in range(c, n):
                    m[r][k] = m[r][k] - f * m[c][k]
    return det


def span_contains(vectors: Iterable[Vector], target: Vector) -> bool:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.contains(target)
