"""The quaternion torus ``Q = (t1, t2)`` as a Z^2-graded algebra.

``Q`` has the k-basis ``i^a j^b`` for ``(a, b)`` in Z^2 with ``i*i = t1``,
``j*j = t2`` and ``i*j = -j*i``.  The Laurent ring ``R = k[t1^±1, t2^±1]`` is
the subalgebra spanned by monomials of (even, even) degree, so it is not given
a type of its own.

Monomials multiply by

    (i^a j^b)(i^c j^d) = (-1)^(b*c) i^(a+c) j^(b+d),

which is valid for all integer exponents.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .errors import DegreeOverflow, NonInvertible
from .scalars import ONE, ZERO, Scalar, as_scalar, parse_scalar

__all__ = [
    "Degree",
    "TorusElement",
    "MAX_DEGREE",
    "check_degree",
    "monomial",
    "box_degrees",
    "ONE_T",
    "ZERO_T",
    "I",
    "J",
    "T1",
    "T2",
    "parse_torus",
]

Degree = Tuple[int, int]

# exponents are kept within a signed 32-bit range
MAX_DEGREE = 2**31 - 1


def check_degree(d: Degree) -> Degree:
    a, b = d
    if not (-MAX_DEGREE <= a <= MAX_DEGREE and -MAX_DEGREE <= b <= MAX_DEGREE):
        raise DegreeOverflow(f"degree {d} outside +/-{MAX_DEGREE}")
    return d


def box_degrees(box: int) -> Iterator[Degree]:
    """Degrees of ``[-box, box]^2`` in lexicographic order."""
    for a in range(-box, box + 1):
        for b in range(-box, box + 1):
            yield (a, b)


def monomial_sign(d1: Degree, d2: Degree) -> int:
    return -1 if (d1[1] * d2[0]) & 1 else 1


def is_even_even(d: Degree) -> bool:
    return not (d[0] & 1) and not (d[1] & 1)


class TorusElement:
    """A finitely supported map ``Degree -> Scalar``; immutable.

    Zero coefficients are never stored, so two elements are equal exactly when
    their term dictionaries are.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Degree, object] = ()):
        clean: Dict[Degree, Scalar] = {}
        for d, c in dict(terms).items():
            c = as_scalar(c)
            if c:
                clean[check_degree((int(d[0]), int(d[1])))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Degree, Scalar]) -> "TorusElement":
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, c) -> "TorusElement":
        return cls({(0, 0): c})

    # -- basic protocol -------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, TorusElement):
            return self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == TorusElement.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def support(self) -> set:
        return set(self.terms)

    def component(self, d: Degree) -> Scalar:
        """Coefficient of ``i^a j^b``; zero when absent."""
        return self.terms.get(tuple(d), ZERO)

    def constant(self) -> Scalar:
        return self.terms.get((0, 0), ZERO)

    def even_even_part(self) -> "TorusElement":
        return TorusElement._raw({d: c for d, c in self.terms.items() if is_even_even(d)})

    def restrict(self, d: Degree) -> "TorusElement":
        c = self.terms.get(d)
        return TorusElement._raw({d: c} if c is not None else {})

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- linear structure -----------------------------------------------
    def __add__(self, other) -> "TorusElement":
        other = _coerce(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for d, c in other.terms.items():
            s = out.get(d)
            if s is None:
                out[d] = c
            else:
                s = s + c
                if s:
                    out[d] = s
                else:
                    del out[d]
        return TorusElement._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "TorusElement":
        return TorusElement._raw({d: -c for d, c in self.terms.items()})

    def __sub__(self, other) -> "TorusElement":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "TorusElement":
        return _coerce(other) - self

    def scale(self, c) -> "TorusElement":
        c = as_scalar(c)
        if not c:
            return TorusElement._raw({})
        return TorusElement._raw({d: v * c for d, v in self.terms.items()})

    # -- multiplication -------------------------------------------------
    def __mul__(self, other) -> "TorusElement":
        if not isinstance(other, TorusElement):
            return self.scale(other)
        out: Dict[Degree, Scalar] = {}
        for (a, b), x in self.terms.items():
            for (c, d), y in other.terms.items():
                deg = (a + c, b + d)
                v = x * y
                if (b * c) & 1:
                    v = -v
                s = out.get(deg)
                out[deg] = v if s is None else s + v
        for deg in [k for k, v in out.items() if not v]:
            del out[deg]
        if out:
            _check_product_degrees(out)
        return TorusElement._raw(out)

    def __rmul__(self, other) -> "TorusElement":
        return self.scale(other)

    def __pow__(self, n: int) -> "TorusElement":
        if n < 0:
            return self.invert_monomial() ** (-n)
        result = TorusElement.scalar(ONE)
        for _ in range(n):
            result = result * self
        return result

    def commutator(self, other: "TorusElement") -> "TorusElement":
        return self * other - other * self

    def conjugate(self) -> "TorusElement":
        """The standard involution: ``x0 + x1 i + x2 j + x3 ij -> x0 - x1 i - x2 j - x3 ij``."""
        return TorusElement._raw(
            {d: (c if is_even_even(d) else -c) for d, c in self.terms.items()}
        )

    def invert_monomial(self) -> "TorusElement":
        if len(self.terms) != 1:
            raise NonInvertible(f"{self} is not a nonzero monomial")
        ((a, b), c), = self.terms.items()
        coeff = c.inverse()
        if (a * b) & 1:
            coeff = -coeff
        return TorusElement._raw({check_degree((-a, -b)): coeff})

    # -- text -----------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            if (a, b) == (0, 0):
                parts.append(str(c))
            else:
                parts.append(f"{c}*i^{a}*j^{b}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TorusElement({str(self)!r})"


def _check_product_degrees(terms: Dict[Degree, Scalar]) -> None:
    for d in terms:
        if abs(d[0]) > MAX_DEGREE or abs(d[1]) > MAX_DEGREE:
            raise DegreeOverflow(f"product degree {d} outside +/-{MAX_DEGREE}")


def _coerce(x) -> TorusElement:
    if isinstance(x, TorusElement):
        return x
    return TorusElement.scalar(x)


def monomial(a: int, b: int, coeff=1) -> TorusElement:
    """``coeff * i^a j^b``."""
    return TorusElement({(a, b): coeff})


def from_terms(items: Iterable[Tuple[Degree, object]]) -> TorusElement:
    out = TorusElement()
    for d, c in items:
        out = out + TorusElement({d: c})
    return out


ZERO_T = TorusElement()
ONE_T = monomial(0, 0)
I = monomial(1, 0)
J = monomial(0, 1)
T1 = monomial(2, 0)
T2 = monomial(0, 2)

_TERM = re.compile(r"^(?P<c>.+?)\*i\^(?P<a>-?\d+)\*j\^(?P<b>-?\d+)$")


def _split_terms(text: str) -> list:
    # split on " + " only outside parentheses; radical scalars contain " + "
    out, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", i):
            out.append(text[start:i])
            i += 3
            start = i
            continue
        i += 1
    out.append(text[start:])
    return out


def parse_torus(text: str) -> TorusElement:
    """Inverse of ``str(TorusElement)``."""
    s = text.strip()
    if s == "0":
        return TorusElement()
    terms: Dict[Degree, Scalar] = {}
    for part in _split_terms(s):
        part = part.strip()
        m = _TERM.match(part)
        if m:
            d = (int(m.group("a")), int(m.group("b")))
            c = parse_scalar(m.group("c"))
        else:
            d, c = (0, 0), parse_scalar(part)
        if d in terms:
            raise ValueError(f"repeated degree {d} in {text!r}")
        terms[d] = c
    return TorusElement(terms)
