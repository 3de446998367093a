import itertools
from fractions import Fraction

import pytest

from eala import counterexample as cx
from eala.core import EalaElement, bracket_E, central, derive, lift
from eala.errors import BoxExhausted, CubicFailed, DegreeOverflow
from eala.lie_torus import graded_basis
from eala.matrix import E12, E21, Matrix2, bracket, diag, identity, is_in_sl2
from eala.report import FAIL, NOT_FALSIFIED, PASS
from eala.scalars import ONE, Scalar
from eala.torus import ONE_T, I, J, TorusElement, monomial
from oracles import multiply_terms

P = diag(1, -1)


@pytest.fixture(scope="module")
def section():
    return cx.load_section_fixture()[0]


@pytest.fixture(scope="module")
def S(section):
    return cx.build_S(cx.build_projection(section))


@pytest.fixture(scope="module")
def y(S):
    return cx.compute_y(S)


def _rational_terms(t):
    assert all(c.is_rational() for c in t.terms.values())
    return {d: c.rational for d, c in t.terms.items()}


# -- section -------------------------------------------------------------


def test_box0_is_infeasible():
    with pytest.raises(BoxExhausted):
        cx.solve_section(0)


def test_solver_escalates_to_box1():
    sec, box = cx.find_section(0)
    assert box == 1
    assert sec.is_valid()


def test_box_bounds():
    with pytest.raises(ValueError):
        cx.solve_section(-1)
    with pytest.raises(DegreeOverflow):
        cx.solve_section(cx.MAX_BOX + 1)


def test_fixture_residual_by_rewriting(section):
    # recompute (1+i)a - (1+j)b with the word-rewriting oracle
    one_i = {(0, 0): Fraction(1), (1, 0): Fraction(1)}
    one_j = {(0, 0): Fraction(1), (0, 1): Fraction(1)}
    lhs = multiply_terms(one_i, _rational_terms(section.a))
    for d, c in multiply_terms(one_j, _rational_terms(section.b)).items():
        lhs[d] = lhs.get(d, 0) - c
    assert {d: c for d, c in lhs.items() if c} == {(0, 0): 1}


def test_fixture_matches_solver(section):
    sec, box = cx.find_section(0)
    assert sec == section
    assert cx.load_section_fixture()[1] == box


def test_fixture_round_trip(tmp_path, section):
    path = cx.write_section_fixture(section, 1, tmp_path / "s.txt")
    assert cx.load_section_fixture(path) == (section, 1)
    path.write_text(path.read_text().replace("1/2*i^-1*j^0", "1/3*i^-1*j^0"))
    with pytest.raises(ValueError):
        cx.load_section_fixture(path)


def test_minimal_support(section):
    # no section with three or fewer terms exists in the box
    labels, cols = cx._m_columns(1)
    from eala.linalg import solve

    target = {(0, 0): ONE}
    for size in range(1, section.support_size()):
        for subset in itertools.combinations(range(len(cols)), size):
            assert solve([cols[i] for i in subset], target) is None


def test_affine_family(section):
    kern = cx.kernel_basis(1)
    assert kern
    for w1, w2 in kern[:5]:
        assert not cx.apply_m(w1, w2)
        shifted = cx.Section(section.a + w1, section.b + w2)
        assert shifted.is_valid()


# -- p and S ---------------------------------------------------------------


def test_projection_identities(section):
    p = cx.build_projection(section)
    assert p * p == p
    for col in [(ONE_T, ONE_T), (I, J), (monomial(1, 1), monomial(-1, 2))]:
        u, v = p.apply(col)
        assert cx.apply_m(u, v) == cx.apply_m(*col)


def test_projection_kills_kernel(section):
    p = cx.build_projection(section)
    for w in cx.kernel_basis(1):
        assert p.apply(w) == (TorusElement(), TorusElement())


def test_S_basics(S, section):
    Sm = S.matrix
    assert Sm * Sm == identity()
    assert is_in_sl2(Sm)
    for w in cx.kernel_basis(1):
        assert Sm.apply(w) == (-w[0], -w[1])
    # image of q is the +1 eigenspace
    for x in (ONE_T, I, monomial(-1, 1)):
        col = (section.a * x, section.b * x)
        assert Sm.apply(col) == col


def test_S_is_not_diagonal(S):
    assert S.matrix != P and S.matrix != -P


def test_non_idempotent_is_rejected():
    with pytest.raises(ValueError):
        cx.build_S(E12(I))


# -- spectrum ----------------------------------------------------------------


def test_cubic_with_P():
    for x in [E12(1), E21(1), P, E12(I), diag(I, I)]:
        assert not cx.ad_cubic(P, x)
    assert cx.ad_cubic_check(P, 2).status == PASS


def test_cubic_with_S_box1(S):
    r = cx.ad_cubic_check(S, 1)
    assert r.status == PASS and r.samples == sum(1 for _ in graded_basis(1))


def test_cubic_failure_is_reported():
    bad = Matrix2([[ONE_T, ONE_T], [TorusElement(), -ONE_T]]).scale(3)
    r = cx.ad_cubic_check(bad, 0)
    assert r.status == FAIL and r.witness
    with pytest.raises(CubicFailed):
        cx.eigen_decompose(bad, E21(1))


def test_projectors_with_P():
    x = E12(I)
    assert cx.eigenprojection(P, 2, x) == x
    assert not cx.eigenprojection(P, 0, x)
    with pytest.raises(ValueError):
        cx.eigenprojection(P, 1, x)


def test_central_degree_diagonal(S):
    x = diag(monomial(2, 2), -monomial(2, 2))
    p0 = cx.eigenprojection(S, 0, x)
    assert not cx.ad(S, p0)


def test_projectors_partition(S):
    for _, x in graded_basis(1):
        parts = cx.eigen_decompose(S, x)
        assert parts[0] + parts[2] + parts[-2] == x
        for lam, v in parts.items():
            assert cx.ad(S, v) == v.scale(lam)
            again = cx.eigen_decompose(S, v)
            assert again[lam] == v
            assert all(not again[mu] for mu in again if mu != lam)


# -- y and the corrected derivation -------------------------------------------------------------


def test_y_decomposition(S, y):
    assert not y.y0
    assert y.y0 + y.y2 + y.ym2 == y.y
    assert y.y == -derive(S.matrix)
    assert cx.ad(S, y.y2) == y.y2.scale(2)
    assert cx.ad(S, y.ym2) == y.ym2.scale(-2)


def test_y_for_P():
    yd = cx.compute_y(P)
    assert not yd.y and not yd.y2 and not yd.ym2


def test_d_prime(S, y):
    dp = cx.build_d_prime(S, y)
    half = Scalar(Fraction(1, 2))
    assert dp.element.d_coeff == 1 and dp.element.c_coeff == 0
    assert dp.element.l_part == y.ym2.scale(half) - y.y2.scale(half)
    assert not bracket_E(lift(S.matrix), dp.element)
    assert cx.central_term(S, y) == 0


def test_d_prime_expansion(S, y):
    # l-part of [S, d'] expands to -derive(S) - [S, y2]/2 + [S, y-2]/2
    half = Scalar(Fraction(1, 2))
    l = -derive(S.matrix) - bracket(S.matrix, y.y2).scale(half) + bracket(S.matrix, y.ym2).scale(half)
    assert l == y.y - y.y2 - y.ym2
    assert not l


def test_d_prime_for_P():
    dp = cx.build_d_prime(P, cx.compute_y(P))
    assert dp.element == EalaElement(P - P, 0, 1)


def test_abelian_seed(S, y):
    dp = cx.build_d_prime(S, y)
    r = cx.abelian_seed_check(S, dp)
    assert r.status == PASS and r.samples == 6
    assert not bracket_E(lift(S.matrix), central())


def test_weight_cocycle_instances(S):
    vecs = cx.eigenvectors(S, 1)
    by = {lam: [v for mu, v in vecs if mu == lam] for lam in (0, 2, -2)}
    assert all(by.values())
    from eala.core import cocycle

    Sm = S.matrix
    for a, b in [(0, 0), (2, -2), (2, 0)]:
        for la in by[a][:4]:
            for lb in by[b][:4]:
                lhs = cocycle(Sm, bracket(la, lb))
                assert lhs == cocycle(la, lb) * (a + b)
                if a + b == 0:
                    assert lhs == 0


def test_weight_cocycle_check_samples(S):
    r = cx.weight_cocycle_check(S, 1, samples=50, seed=7)
    assert r.status == PASS and r.samples == 50


# -- probe ---------------------------------------------------------------------


def test_probe_box0_and_box1(S):
    r0 = cx.nonfreeness_probe(0, S)
    assert r0.status == NOT_FALSIFIED and r0.samples == 0
    r1 = cx.nonfreeness_probe(1, S)
    assert r1.status == NOT_FALSIFIED and r1.samples > 0


def test_probe_kernel_dimension_box1():
    # (1+i)u = (1+j)v with supports in [-1,1]^2: count by brute force over
    # the degree-indexed linear map
    labels, cols = cx._m_columns(1)
    from eala.linalg import nullspace

    assert len(nullspace(cols)) == len(cx.kernel_basis(1)) == 3


def test_probe_falsifies_a_free_kernel():
    # m'(u, v) = u - (1+j)v has kernel (1+j, 1)Q, a free module
    row = (ONE_T, ONE_T + J)
    p = Matrix2([[ONE_T, -(ONE_T + J)], [TorusElement(), TorusElement()]])
    S = cx.build_S(p)
    r = cx.nonfreeness_probe(1, S, row=row)
    assert r.status == FAIL
    assert r.witness


def test_probe_witness_is_a_kernel_generator():
    row = (ONE_T, ONE_T + J)
    p = Matrix2([[ONE_T, -(ONE_T + J)], [TorusElement(), TorusElement()]])
    r = cx.nonfreeness_probe(1, cx.build_S(p), row=row)
    w1, w2 = cx.parse_column(r.witness)
    assert not (w1 - (ONE_T + J) * w2)
    # (1+j, 1) is a right multiple of the witness
    assert w2.is_monomial()
    assert (w1 * w2.invert_monomial(), ONE_T) == (ONE_T + J, ONE_T)


def test_column_text_round_trip():
    col = (monomial(1, 0, Scalar(1, 2)) + ONE_T, monomial(-1, -1))
    assert cx.parse_column(cx.format_column(col)) == col
    with pytest.raises(ValueError):
        cx.parse_column("1, 2")
