"""The extended affine Lie algebra ``E = L + C + D``.

``D = k*d_theta`` is spanned by one degree derivation and ``C = D*`` by its
dual functional ``c``.  Both are one-dimensional, so an element of ``E`` is a
triple ``(l, gamma, delta)`` standing for ``l + gamma*c + delta*d_theta`` and a
value of the cocycle (a functional on ``D``) is stored as its value on
``d_theta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import NotAnEigenvector
from .lie_torus import form_L
from .matrix import Matrix2, bracket, diag, is_in_sl2, parse_matrix, zero_matrix
from .scalars import ONE, SQRT2, ZERO, Scalar, as_scalar, parse_scalar
from .torus import Degree, ONE_T, TorusElement

__all__ = [
    "Theta",
    "DEFAULT_THETA",
    "EalaElement",
    "StandardMad",
    "derive",
    "cocycle",
    "bracket_E",
    "form_E",
    "simultaneous_eigenvalues",
    "central",
    "d_theta",
    "lift",
]


@dataclass(frozen=True)
class Theta:
    """Additive functional on Z^2 with ``theta(1, 0) = 1`` and irrational ``theta(0, 1)``."""

    value_e1: Scalar = ONE
    value_e2: Scalar = SQRT2

    def __post_init__(self):
        if as_scalar(self.value_e1) != ONE:
            raise ValueError("theta((1,0)) must be 1")
        if as_scalar(self.value_e2).is_rational():
            raise ValueError("theta((0,1)) must be irrational")

    def __call__(self, d: Degree) -> Scalar:
        return self.value_e1 * d[0] + self.value_e2 * d[1]


DEFAULT_THETA = Theta()


def derive(x: Matrix2, theta: Theta = DEFAULT_THETA) -> Matrix2:
    """Degree derivation: scale each degree-``d`` part by ``theta(d)``."""
    return x.map(lambda t: _derive_entry(t, theta))


def _derive_entry(t: TorusElement, theta: Theta) -> TorusElement:
    out = {}
    for d, c in t.terms.items():
        v = c * theta(d)
        if v:
            out[d] = v
    return TorusElement._raw(out)


def cocycle(x: Matrix2, y: Matrix2, theta: Theta = DEFAULT_THETA) -> Scalar:
    """``sigma(x, y)`` evaluated at ``d_theta``, i.e. ``form_L(d_theta(x), y)``."""
    return form_L(derive(x, theta), y)


@dataclass(frozen=True)
class EalaElement:
    l_part: Matrix2
    c_coeff: Scalar = ZERO
    d_coeff: Scalar = ZERO

    def __post_init__(self):
        object.__setattr__(self, "c_coeff", as_scalar(self.c_coeff))
        object.__setattr__(self, "d_coeff", as_scalar(self.d_coeff))
        if not is_in_sl2(self.l_part):
            raise ValueError("l_part is not in sl2(Q)")

    def __add__(self, other: "EalaElement") -> "EalaElement":
        return EalaElement(
            self.l_part + other.l_part,
            self.c_coeff + other.c_coeff,
            self.d_coeff + other.d_coeff,
        )

    def __sub__(self, other: "EalaElement") -> "EalaElement":
        return self + other.scale(-1)

    def scale(self, c) -> "EalaElement":
        c = as_scalar(c)
        return EalaElement(self.l_part.scale(c), self.c_coeff * c, self.d_coeff * c)

    def __bool__(self) -> bool:
        return bool(self.l_part) or bool(self.c_coeff) or bool(self.d_coeff)

    def __str__(self) -> str:
        return f"{self.l_part} (+) {self.c_coeff}*c (+) {self.d_coeff}*d"


def lift(x: Matrix2) -> EalaElement:
    return EalaElement(x)


def central(gamma=1) -> EalaElement:
    return EalaElement(zero_matrix(), gamma, ZERO)


def d_theta(delta=1) -> EalaElement:
    return EalaElement(zero_matrix(), ZERO, delta)


def bracket_E(x: EalaElement, y: EalaElement, theta: Theta = DEFAULT_THETA) -> EalaElement:
    l = bracket(x.l_part, y.l_part)
    if x.d_coeff:
        l = l + derive(y.l_part, theta).scale(x.d_coeff)
    if y.d_coeff:
        l = l - derive(x.l_part, theta).scale(y.d_coeff)
    return EalaElement(l, cocycle(x.l_part, y.l_part, theta), ZERO)


def form_E(x: EalaElement, y: EalaElement) -> Scalar:
    return form_L(x.l_part, y.l_part) + x.c_coeff * y.d_coeff + y.c_coeff * x.d_coeff


@dataclass(frozen=True)
class StandardMad:
    """``H = k*P + C + D`` with ``P = a*diag(1, -1)``."""

    generator_scale: Scalar = ONE

    def __post_init__(self):
        object.__setattr__(self, "generator_scale", as_scalar(self.generator_scale))
        if not self.generator_scale:
            raise ValueError("generator_scale must be nonzero")

    @property
    def P(self) -> Matrix2:
        return diag(ONE_T, -ONE_T).scale(self.generator_scale)

    def basis(self) -> Tuple[EalaElement, EalaElement, EalaElement]:
        return (EalaElement(self.P), central(), d_theta())


def _ratio(image: Matrix2, x: Matrix2) -> Scalar:
    """The scalar ``r`` with ``image == r*x``; raises when there is none."""
    coords = x.coordinates()
    if not coords:
        raise NotAnEigenvector("zero vector")
    key, xv = next(iter(sorted(coords.items())))
    r = image.coordinates().get(key, ZERO) / xv
    if image != x.scale(r):
        raise NotAnEigenvector(f"{image} is not a multiple of {x}")
    return r


def simultaneous_eigenvalues(
    x: Matrix2, mad: StandardMad = StandardMad(), theta: Theta = DEFAULT_THETA
) -> Tuple[Scalar, Scalar]:
    """``(alpha, beta)`` with ``[P, x] = alpha*x`` and ``d_theta(x) = beta*x``."""
    return _ratio(bracket(mad.P, x), x), _ratio(derive(x, theta), x)


def parse_eala(text: str) -> EalaElement:
    """Inverse of ``str(EalaElement)``."""
    m_text, c_text, d_text = text.split(" (+) ")
    if not c_text.endswith("*c") or not d_text.endswith("*d"):
        raise ValueError(f"not an EALA element: {text!r}")
    return EalaElement(parse_matrix(m_text), parse_scalar(c_text[:-2]), parse_scalar(d_text[:-2]))
