"""A non-standard ad-diagonalizable element ``S`` of ``sl2(Q)`` and its checks.

``m: Q + Q -> Q``, ``(u, v) -> (1+i)u - (1+j)v`` is a split epimorphism of
right Q-modules.  A section ``q(x) = (a x, b x)`` gives the idempotent
``p = q m`` projecting onto a free complement ``U`` of ``W = ker m``, and
``S = 2p - 1`` acts as ``-1`` on ``W`` and ``+1`` on ``U``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
import random
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, List, Tuple

from .core import (
    DEFAULT_THETA,
    EalaElement,
    Theta,
    bracket_E,
    central,
    cocycle,
    lift,
)
from .errors import (
    BoxExhausted,
    CubicFailed,
    DegreeOverflow,
    DPrimeBracketNonZero,
    NotInSl2,
    ProbeUndecided,
    Y0NonZero,
)
from .lie_torus import graded_basis
from .linalg import nullspace, solve
from .matrix import Matrix2, _split_top, bracket, identity, is_in_sl2, zero_matrix
from .report import FAIL, NOT_FALSIFIED, PASS, VerificationReport, timer
from .scalars import ONE, ZERO, Scalar
from .torus import (
    I,
    J,
    ONE_T,
    TorusElement,
    box_degrees,
    monomial,
    parse_torus,
)

__all__ = [
    "ONE_PLUS_I",
    "ONE_PLUS_J",
    "Section",
    "SElement",
    "YDecomposition",
    "DPrime",
    "apply_m",
    "format_column",
    "parse_column",
    "solve_section",
    "find_section",
    "build_projection",
    "build_S",
    "ad",
    "ad_cubic",
    "ad_cubic_check",
    "eigenprojection",
    "eigen_decompose",
    "compute_y",
    "build_d_prime",
    "abelian_seed_check",
    "weight_cocycle_check",
    "kernel_basis",
    "nonfreeness_probe",
    "load_section_fixture",
    "write_section_fixture",
    "default_S",
    "fixture_path",
    "central_term",
    "eigenvectors",
]

ONE_PLUS_I = ONE_T + I
ONE_PLUS_J = ONE_T + J

MAX_BOX = 16


def _check_box(box: int) -> None:
    if box < 0:
        raise ValueError("box must be >= 0")
    if box > MAX_BOX:
        raise DegreeOverflow(f"box {box} exceeds MAX_BOX={MAX_BOX}")


def apply_m(u: TorusElement, v: TorusElement) -> TorusElement:
    return ONE_PLUS_I * u - ONE_PLUS_J * v


def format_column(w: Tuple[TorusElement, TorusElement]) -> str:
    return f"({w[0]}, {w[1]})"


def parse_column(text: str) -> Tuple[TorusElement, TorusElement]:
    """Inverse of :func:`format_column`."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"not a column: {text!r}")
    cells = _split_top(s[1:-1])
    if len(cells) != 2:
        raise ValueError(f"column needs two entries: {text!r}")
    return parse_torus(cells[0]), parse_torus(cells[1])


# ---------------------------------------------------------------------------
# section of m
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Section:
    """``q(x) = (a x, b x)`` with ``m(q(x)) = x``."""

    a: TorusElement
    b: TorusElement

    def residual(self) -> TorusElement:
        return apply_m(self.a, self.b) - ONE_T

    def is_valid(self) -> bool:
        return not self.residual()

    def support_size(self) -> int:
        return len(self.a) + len(self.b)

    def column(self) -> Tuple[TorusElement, TorusElement]:
        return (self.a, self.b)


def _m_columns(box: int, row=None):
    """Unknown labels ``(slot, degree)`` and the image of each under ``m``.

    ``row = (r0, r1)`` stands for the map ``(u, v) -> r0 u - r1 v``.
    """
    r0, r1 = row if row is not None else (ONE_PLUS_I, ONE_PLUS_J)
    labels, cols = [], []
    for slot, left in ((0, r0), (1, -r1)):
        for d in box_degrees(box):
            labels.append((slot, d))
            cols.append(dict((left * monomial(*d)).terms))
    return labels, cols


def _assemble(labels, values) -> Tuple[TorusElement, TorusElement]:
    parts: List[Dict] = [{}, {}]
    for (slot, d), c in zip(labels, values):
        if c:
            parts[slot][d] = c
    return TorusElement(parts[0]), TorusElement(parts[1])


def solve_section(box: int) -> Section:
    """Minimal-support section with coefficients supported in ``[-box, box]^2``.

    Among all solutions, the one with the fewest terms is returned; ties go to
    the lexicographically least support (unknowns ordered ``a`` before ``b``,
    then by degree).  A minimal-support solution has linearly independent
    support columns, so the coefficients on a given support are unique.
    """
    _check_box(box)
    labels, cols = _m_columns(box)
    target = {(0, 0): ONE}
    if solve(cols, target) is None:
        raise BoxExhausted(box)
    n = len(labels)
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            x = solve([cols[i] for i in subset], target)
            if x is None or not all(x):
                continue
            values = [ZERO] * n
            for i, c in zip(subset, x):
                values[i] = c
            sec = Section(*_assemble(labels, values))
            assert sec.is_valid()
            return sec
    raise AssertionError("feasible system without a minimal-support solution")


def find_section(start_box: int = 0, max_box: int = MAX_BOX) -> Tuple[Section, int]:
    """Grow the box from ``start_box`` until a section exists.

    Returns the section and the first feasible box.
    """
    box = start_box
    while True:
        try:
            return solve_section(box), box
        except BoxExhausted:
            if box >= max_box:
                raise
            box += 1


# ---------------------------------------------------------------------------
# fixture
# ---------------------------------------------------------------------------

FIXTURE_NAME = "section.txt"


def fixture_path() -> Path:
    return Path(str(resources.files("eala") / "data" / FIXTURE_NAME))


def write_section_fixture(sec: Section, box: int, path=None) -> Path:
    path = Path(path) if path is not None else fixture_path()
    if not sec.is_valid():
        raise ValueError("refusing to pin a section with nonzero residual")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        "# section q(x) = (a x, b x) of m(u, v) = (1+i)u - (1+j)v\n"
        f"box: {box}\n"
        f"a: {sec.a}\n"
        f"b: {sec.b}\n"
        "residual: (1+i)*a - (1+j)*b - 1 = 0\n",
        encoding="utf-8",
    )
    return path


def load_section_fixture(path=None) -> Tuple[Section, int]:
    """Read the pinned section; its residual is recomputed, never trusted."""
    path = Path(path) if path is not None else fixture_path()
    fields = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        key, _, value = line.partition(":")
        fields[key.strip()] = value.strip()
    sec = Section(parse_torus(fields["a"]), parse_torus(fields["b"]))
    if not sec.is_valid():
        raise ValueError(f"fixture {path} has nonzero residual {sec.residual()}")
    return sec, int(fields["box"])


# ---------------------------------------------------------------------------
# p and S
# ---------------------------------------------------------------------------


def build_projection(sec: Section) -> Matrix2:
    """Matrix of ``p = q m``."""
    a, b = sec.a, sec.b
    return Matrix2(
        [
            [a * ONE_PLUS_I, -(a * ONE_PLUS_J)],
            [b * ONE_PLUS_I, -(b * ONE_PLUS_J)],
        ]
    )


@dataclass(frozen=True)
class SElement:
    matrix: Matrix2


def build_S(p: Matrix2) -> SElement:
    S = p.scale(2) - identity()
    if S * S != identity():
        raise ValueError("S*S != 1; p is not idempotent")
    if not is_in_sl2(S):
        raise NotInSl2(f"trace of S has (even, even) part: {S.trace().even_even_part()}")
    return SElement(S)


def default_S() -> SElement:
    sec, _ = load_section_fixture()
    return build_S(build_projection(sec))


def ad(S, x: Matrix2) -> Matrix2:
    return bracket(_mat(S), x)


def _mat(S) -> Matrix2:
    return S.matrix if isinstance(S, SElement) else S


def ad_cubic(S, x: Matrix2) -> Matrix2:
    """``(ad S)(ad S - 2)(ad S + 2) x = (ad S)^3 x - 4 (ad S) x``."""
    a1 = ad(S, x)
    a3 = ad(S, ad(S, a1))
    return a3 - a1.scale(4)


def ad_cubic_check(S, box: int, seed: int = 0) -> VerificationReport:
    _check_box(box)
    n = 0
    with timer() as ms:
        witness = None
        for _, x in graded_basis(box):
            n += 1
            if ad_cubic(S, x):
                witness = str(x)
                break
    return VerificationReport(
        "spectrum.cubic", FAIL if witness else PASS, box, n, seed, witness, ms[0]
    )


_QUARTER = Scalar(Fraction(1, 4))
_EIGHTH = Scalar(Fraction(1, 8))


def eigen_decompose(S, x: Matrix2) -> Dict[int, Matrix2]:
    """Split ``x`` into ``ad S``-eigencomponents for eigenvalues 0, 2, -2.

    Uses the Lagrange projectors of ``t(t-2)(t+2)``; raises
    :class:`CubicFailed` if that polynomial does not annihilate ``x``.
    """
    a1 = ad(S, x)
    a2 = ad(S, a1)
    a3 = ad(S, a2)
    if a3 != a1.scale(4):
        raise CubicFailed(f"(ad S)(ad S-2)(ad S+2) does not kill {x}")
    parts = {
        0: x - a2.scale(_QUARTER),
        2: (a2 + a1.scale(2)).scale(_EIGHTH),
        -2: (a2 - a1.scale(2)).scale(_EIGHTH),
    }
    for lam, v in parts.items():
        if ad(S, v) != v.scale(lam):
            raise CubicFailed(f"projection for eigenvalue {lam} left the eigenspace")
    return parts


def eigenprojection(S, lam: int, x: Matrix2) -> Matrix2:
    if lam not in (0, 2, -2):
        raise ValueError(f"eigenvalue {lam} not in (0, 2, -2)")
    return eigen_decompose(S, x)[lam]


# ---------------------------------------------------------------------------
# y = [S, d_theta] and d'
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class YDecomposition:
    y: Matrix2
    y0: Matrix2
    y2: Matrix2
    ym2: Matrix2


def compute_y(S, theta: Theta = DEFAULT_THETA) -> YDecomposition:
    """Decompose ``y = [S, d_theta]_E = -d_theta(S)`` into ``ad S``-eigenparts."""
    y = bracket_E(lift(_mat(S)), EalaElement(zero_matrix(), ZERO, ONE), theta)
    assert not y.c_coeff and not y.d_coeff
    parts = eigen_decompose(S, y.l_part)
    yd = YDecomposition(y.l_part, parts[0], parts[2], parts[-2])
    if yd.y0:
        raise Y0NonZero(f"y0 = {yd.y0}")
    return yd


@dataclass(frozen=True)
class DPrime:
    element: EalaElement


def build_d_prime(S, yd: YDecomposition, theta: Theta = DEFAULT_THETA) -> DPrime:
    """``d' = d_theta - y2/2 + y_{-2}/2``; asserts ``[S, d'] = 0``."""
    half = Scalar(Fraction(1, 2))
    l = yd.ym2.scale(half) - yd.y2.scale(half)
    dp = EalaElement(l, ZERO, ONE)
    br = bracket_E(lift(_mat(S)), dp, theta)
    if br:
        raise DPrimeBracketNonZero(str(br))
    return DPrime(dp)


def central_term(S, yd: YDecomposition, theta: Theta = DEFAULT_THETA) -> Scalar:
    """``sigma(S, y_{-2} - y_2)`` at ``d_theta``."""
    return cocycle(_mat(S), yd.ym2 - yd.y2, theta)


def abelian_seed_check(S, dp: DPrime, theta: Theta = DEFAULT_THETA, seed: int = 0) -> VerificationReport:
    seed_elems = [lift(_mat(S)), central(), dp.element]
    n = 0
    witness = None
    with timer() as ms:
        for i, j in itertools.combinations_with_replacement(range(3), 2):
            n += 1
            br = bracket_E(seed_elems[i], seed_elems[j], theta)
            if br:
                witness = str(br)
                break
    return VerificationReport(
        "lemmas.abelian_seed", FAIL if witness else PASS, 0, n, seed, witness, ms[0]
    )


def eigenvectors(S, box: int) -> List[Tuple[int, Matrix2]]:
    """Nonzero eigencomponents of every graded basis element in the box."""
    out = []
    for _, x in graded_basis(box):
        for lam, v in eigen_decompose(S, x).items():
            if v:
                out.append((lam, v))
    return out


def weight_cocycle_check(
    S, box: int, samples: int = 1000, seed: int = 0, theta: Theta = DEFAULT_THETA
) -> VerificationReport:
    """``sigma(S, [l_a, l_b]) == (a + b) sigma(l_a, l_b)`` on eigenvector pairs."""
    _check_box(box)
    with timer() as ms:
        vecs = eigenvectors(S, box)
        n_pairs = len(vecs) ** 2
        rng = random.Random(seed)
        if n_pairs <= samples:
            pairs = list(itertools.product(range(len(vecs)), repeat=2))
        else:
            pairs = [(rng.randrange(len(vecs)), rng.randrange(len(vecs))) for _ in range(samples)]
        Sm = _mat(S)
        witness = None
        for i, j in pairs:
            (alpha, la), (beta, lb) = vecs[i], vecs[j]
            lhs = cocycle(Sm, bracket(la, lb), theta)
            rhs = cocycle(la, lb, theta) * (alpha + beta)
            if lhs != rhs:
                witness = f"{la} ; {lb}"
                break
    return VerificationReport(
        "lemmas.weight_cocycle", FAIL if witness else PASS, box, len(pairs), seed, witness, ms[0]
    )


# ---------------------------------------------------------------------------
# bounded non-freeness probe for W = ker m
# ---------------------------------------------------------------------------


def kernel_basis(box: int, row=None) -> List[Tuple[TorusElement, TorusElement]]:
    """Basis of ``ker m`` among columns with support in ``[-box, box]^2``."""
    labels, cols = _m_columns(box, row)
    # kernel of (u, v) -> (1+i)u - (1+j)v; _m_columns already negates the v part
    return [_assemble(labels, vec) for vec in nullspace(cols)]


def _widths(t: TorusElement) -> Tuple[int, int]:
    da = [d[0] for d in t.terms]
    db = [d[1] for d in t.terms]
    return max(da) - min(da), max(db) - min(db)


def _bounding(t: TorusElement):
    da = [d[0] for d in t.terms]
    db = [d[1] for d in t.terms]
    return min(da), max(da), min(db), max(db)


def _rectangles(box: int, width_a: int, width_b: int):
    """Distinct clipped rectangles of the given widths inside the box."""
    seen = set()
    for x0, y0 in box_degrees(box):
        r = (
            max(x0, -box),
            min(x0 + width_a, box),
            max(y0, -box),
            min(y0 + width_b, box),
        )
        if r not in seen:
            seen.add(r)
            yield r


def _left_divides(w: Tuple[TorusElement, TorusElement], c: Tuple[TorusElement, TorusElement]):
    """Solve ``w x = c`` for ``x`` in Q, or return ``None``.

    Newton polygons add under multiplication, so ``x`` lies in the box
    ``bounds(c_i) - bounds(w_i)`` for every coordinate with ``w_i != 0``.
    """
    lo_a, hi_a, lo_b, hi_b = None, None, None, None
    for wi, ci in zip(w, c):
        if not wi:
            if ci:
                return None
            continue
        if not ci:
            return None
        wa0, wa1, wb0, wb1 = _bounding(wi)
        ca0, ca1, cb0, cb1 = _bounding(ci)
        box_i = (ca0 - wa0, ca1 - wa1, cb0 - wb0, cb1 - wb1)
        if lo_a is None:
            lo_a, hi_a, lo_b, hi_b = box_i
        else:
            lo_a, hi_a = max(lo_a, box_i[0]), min(hi_a, box_i[1])
            lo_b, hi_b = max(lo_b, box_i[2]), min(hi_b, box_i[3])
    if lo_a is None or lo_a > hi_a or lo_b > hi_b:
        return None
    degs = [(a, b) for a in range(lo_a, hi_a + 1) for b in range(lo_b, hi_b + 1)]
    cols = []
    for d in degs:
        mono = monomial(*d)
        vec = {}
        for slot, wi in enumerate(w):
            for k, v in (wi * mono).terms.items():
                vec[(slot, k)] = v
        cols.append(vec)
    rhs = {}
    for slot, ci in enumerate(c):
        for k, v in ci.terms.items():
            rhs[(slot, k)] = v
    x = solve(cols, rhs)
    if x is None:
        return None
    return TorusElement({d: v for d, v in zip(degs, x) if v})


def nonfreeness_probe(box: int, S=None, seed: int = 0, row=None) -> VerificationReport:
    """Search for a single generator of ``W = ker m`` with support in the box.

    If ``W = wQ`` then every ``k`` in ``W`` is ``k = w x`` and, since Newton
    polygons add under multiplication in Q, each coordinate of ``w`` is at most
    as wide (in both lattice directions) as the matching coordinate of any
    nonzero element of ``W``.  The probe takes those widths from the kernel
    basis of the box and the columns of ``1 - p``, enumerates every rectangle
    of that size inside the box for both coordinates, solves ``m(w) = 0`` on
    the rectangle pair, and finally checks whether a candidate ``w`` generates
    ``W`` by solving ``w x = c`` for both columns ``c`` of ``1 - p`` (which
    generate ``W``).  A generator found this way is reported as FALSIFIED
    (status ``fail``); otherwise the result is NOT-FALSIFIED for this box.

    ``row`` replaces ``(1+i, 1+j)`` by another pair ``(r0, r1)``; ``S`` must
    then be the matching involution.  This exists for control experiments.
    """
    _check_box(box)
    Sm = _mat(S) if S is not None else default_S().matrix
    with timer() as ms:
        status, n, witness = _probe(box, Sm, row)
    return VerificationReport("probe.nonfree", status, box, n, seed, witness, ms[0])


def _probe(box: int, Sm: Matrix2, row):
    r0, r1 = row if row is not None else (ONE_PLUS_I, ONE_PLUS_J)
    p = (Sm + identity()).scale(Scalar(Fraction(1, 2)))
    e = identity() - p
    gens = [(e[0, 0], e[1, 0]), (e[0, 1], e[1, 1])]
    gens = [g for g in gens if g[0] or g[1]]

    kern = kernel_basis(box, row)
    for k in kern:
        if Sm.apply(k) != (-k[0], -k[1]):
            # a kernel vector outside the -1 eigenspace of S
            return FAIL, len(kern), format_column(k)
    if not kern:
        return NOT_FALSIFIED, 0, None

    refs = kern + gens
    bounds = []
    for slot in (0, 1):
        ws = [_widths(r[slot]) for r in refs if r[slot]]
        bounds.append((min(w[0] for w in ws), min(w[1] for w in ws)))

    for rect0 in _rectangles(box, *bounds[0]):
        for rect1 in _rectangles(box, *bounds[1]):
            labels, cols = [], []
            for slot, (a0, a1, b0, b1), left in ((0, rect0, r0), (1, rect1, -r1)):
                for a in range(a0, a1 + 1):
                    for b in range(b0, b1 + 1):
                        labels.append((slot, (a, b)))
                        cols.append(dict((left * monomial(a, b)).terms))
            family = nullspace(cols)
            if not family:
                continue
            if len(family) > 1:
                raise ProbeUndecided(
                    f"{len(family)}-dimensional candidate family on rectangles {rect0}, {rect1}"
                )
            w = _assemble(labels, family[0])
            if all(_left_divides(w, g) is not None for g in gens):
                return FAIL, len(kern), format_column(w)
    return NOT_FALSIFIED, len(kern), None
