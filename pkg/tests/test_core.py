import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import scalars, sl2_matrices
from eala.core import (
    DEFAULT_THETA,
    EalaElement,
    StandardMad,
    Theta,
    bracket_E,
    central,
    cocycle,
    d_theta,
    derive,
    form_E,
    lift,
    parse_eala,
    simultaneous_eigenvalues,
)
from eala.errors import NotAnEigenvector
from eala.lie_torus import form_L, graded_basis
from eala.matrix import E12, E21, bracket, diag, identity, zero_matrix
from eala.scalars import ONE, SQRT2, ZERO, Scalar
from eala.torus import I, J, T1, monomial

P = diag(1, -1)
eala_elements = st.builds(EalaElement, sl2_matrices, scalars, scalars)


def test_theta_validation():
    assert DEFAULT_THETA((1, 0)) == 1
    assert DEFAULT_THETA((0, 1)) == SQRT2
    assert DEFAULT_THETA((3, -2)) == Scalar(3, -2)
    with pytest.raises(ValueError):
        Theta(ONE, Scalar(2))
    with pytest.raises(ValueError):
        Theta(Scalar(2), SQRT2)
    Theta(ONE, Scalar(1, 3))


def test_derive_examples():
    assert derive(E12(I)) == E12(I)
    assert derive(E12(J)) == E12(J).scale(SQRT2)
    assert derive(P) == zero_matrix()


@given(sl2_matrices)
def test_cocycle_vanishes_on_the_diagonal(x):
    assert cocycle(x, x) == 0


def test_cocycle_examples():
    # sigma(E12(i), E21(i^-1)) = theta(1,0) * form(E12(i), E21(i^-1)) = 1
    assert cocycle(E12(I), E21(I.invert_monomial())) == 1
    # with an extra factor t1 the degrees no longer cancel
    assert cocycle(E12(I), E21(I.invert_monomial() * T1)) == 0
    assert cocycle(P, E12(I) + E21(J)) == 0


def test_cocycle_by_hand():
    x = E12(monomial(1, 1))
    y = E21(monomial(-1, -1))
    # theta(1,1) * (i j)(i^-1 j^-1) constant term; (ij)(i^-1 j^-1) = -1
    assert cocycle(x, y) == Scalar(1, 1) * -1


def test_bracket_examples():
    br = bracket_E(d_theta(), lift(E12(I)))
    assert br.l_part == E12(I) and not br.c_coeff and not br.d_coeff
    x = EalaElement(E12(I) + E21(J), 2, 3)
    assert not bracket_E(central(), x)
    assert not bracket_E(x, central())


@given(eala_elements)
def test_self_bracket_vanishes(x):
    assert not bracket_E(x, x)


def test_form_E_examples():
    assert form_E(central(), d_theta()) == 1
    assert form_E(central(), central()) == 0
    x, y = E12(I), E21(I.invert_monomial())
    assert form_E(lift(x), lift(y)) == form_L(x, y)


@given(eala_elements, eala_elements, eala_elements)
def test_jacobi(x, y, z):
    total = (
        bracket_E(x, bracket_E(y, z))
        + bracket_E(y, bracket_E(z, x))
        + bracket_E(z, bracket_E(x, y))
    )
    assert not total


@given(sl2_matrices, sl2_matrices, sl2_matrices)
def test_cocycle_identity(x, y, z):
    assert cocycle(bracket(x, y), z) + cocycle(bracket(y, z), x) + cocycle(bracket(z, x), y) == 0


@given(sl2_matrices, sl2_matrices)
def test_cocycle_antisymmetry(x, y):
    assert cocycle(x, y) == -cocycle(y, x)


@given(eala_elements, eala_elements, eala_elements)
def test_form_E_symmetric_invariant(x, y, z):
    assert form_E(x, y) == form_E(y, x)
    assert form_E(bracket_E(x, y), z) == form_E(x, bracket_E(y, z))


@given(eala_elements, eala_elements)
def test_brackets_stay_in_core(x, y):
    assert bracket_E(x, y).d_coeff == 0


def test_complement_pairing_nonsingular():
    c, d = central(), d_theta()
    g = [[form_E(u, v) for v in (c, d)] for u in (c, d)]
    assert g[0][0] * g[1][1] - g[0][1] * g[1][0] != 0


def test_eigenvalue_examples():
    mad = StandardMad(Scalar(3))
    assert simultaneous_eigenvalues(E12(I), mad) == (6, 1)
    x = diag(monomial(1, 2), monomial(1, 2).scale(-1))
    assert simultaneous_eigenvalues(x, mad) == (0, Scalar(1, 2))
    assert simultaneous_eigenvalues(E12(1), mad) == (6, 0)
    with pytest.raises(NotAnEigenvector):
        simultaneous_eigenvalues(E12(I) + E21(I), mad)
    with pytest.raises(NotAnEigenvector):
        simultaneous_eigenvalues(E12(I + J), mad)


def test_standard_mad_box1():
    mad = StandardMad()
    for gi, x in graded_basis(1):
        alpha, beta = simultaneous_eigenvalues(x, mad)
        assert alpha == gi.root and beta == DEFAULT_THETA(gi.degree)


def test_standard_mad_is_abelian():
    h = StandardMad(Scalar(Fraction(-1, 2))).basis()
    for u, v in itertools.product(h, repeat=2):
        assert not bracket_E(u, v)
    with pytest.raises(ValueError):
        StandardMad(ZERO)


def test_eala_rejects_non_sl2():
    with pytest.raises(ValueError):
        EalaElement(identity())


@given(eala_elements)
def test_text_round_trip(x):
    assert parse_eala(str(x)) == x


def test_text_form():
    assert str(d_theta()) == "[[0, 0], [0, 0]] (+) 0/1*c (+) 1/1*d"
