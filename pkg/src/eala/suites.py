"""Registry of verification checks and the suite runner behind ``verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from . import counterexample as cx
from .core import (
    DEFAULT_THETA,
    EalaElement,
    StandardMad,
    bracket_E,
    central,
    cocycle,
    d_theta,
    derive,
    form_E,
    lift,
    simultaneous_eigenvalues,
)
from .errors import BoxExhausted, ConfigError, EalaError
from .lie_torus import (
    ROOTS,
    form_L,
    gram_report,
    graded_basis,
    slice_basis,
)
from .linalg import Echelon, determinant
from .matrix import (
    Matrix2,
    bracket,
    diag,
    identity,
    is_in_sl2,
    mat_mul,
    monomial_matrices,
    sl2_membership_bruteforce,
)
from .report import FAIL, PASS, VerificationReport, timer
from .scalars import Scalar
from .torus import (
    I,
    J,
    T1,
    T2,
    TorusElement,
    box_degrees,
    is_even_even,
    monomial,
)

__all__ = [
    "SuiteConfig",
    "SUITES",
    "REGISTRY",
    "run_suite",
    "Sampler",
]

SUITES = ("torus", "matrix", "form", "cocycle", "jacobi", "section", "spectrum", "lemmas", "probe")

PALETTE = tuple(Fraction(x) for x in ("-2", "-1", "-1/2", "1/3", "1/2", "1", "2", "3"))


@dataclass
class SuiteConfig:
    box: int = 3
    samples: int = 1000
    seed: int = 0
    output_path: Optional[str] = None
    format: str = "text"
    timing: bool = False

    def validate(self) -> None:
        if not isinstance(self.box, int) or self.box < 0:
            raise ConfigError(f"box must be a non-negative integer, got {self.box!r}")
        if not isinstance(self.samples, int) or self.samples < 1:
            raise ConfigError(f"samples must be >= 1, got {self.samples!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError(f"seed must be an unsigned integer, got {self.seed!r}")
        if self.format not in ("text", "json"):
            raise ConfigError(f"format must be text or json, got {self.format!r}")


class Sampler:
    """Seeded source of random torus, matrix and EALA elements.

    Degrees are uniform in the box and coefficients come from a fixed rational
    palette, so every draw is exact and reproducible.
    """

    def __init__(self, seed: int, box: int, max_terms: int = 2):
        self.rng = random.Random(seed)
        self.box = max(box, 1)
        self.max_terms = max_terms

    def coeff(self) -> Fraction:
        return self.rng.choice(PALETTE)

    def degree(self):
        return (self.rng.randint(-self.box, self.box), self.rng.randint(-self.box, self.box))

    def torus(self, min_terms: int = 1) -> TorusElement:
        out = TorusElement()
        for _ in range(self.rng.randint(min_terms, self.max_terms)):
            out = out + monomial(*self.degree(), self.coeff())
        return out

    def matrix(self) -> Matrix2:
        return Matrix2([[self.torus(0), self.torus(0)], [self.torus(0), self.torus(0)]])

    def sl2(self) -> Matrix2:
        x = self.matrix()
        fix = x.trace().even_even_part()
        return Matrix2([[x[0, 0], x[0, 1]], [x[1, 0], x[1, 1] - fix]])

    def eala(self) -> EalaElement:
        c = self.coeff() if self.rng.random() < 0.7 else 0
        d = self.coeff() if self.rng.random() < 0.7 else 0
        return EalaElement(self.sl2(), c, d)


# ---------------------------------------------------------------------------
# shared state for dependent suites
# ---------------------------------------------------------------------------


@dataclass
class _Context:
    config: SuiteConfig
    cache: Dict[str, object] = field(default_factory=dict)

    def section(self):
        if "section" not in self.cache:
            self.cache["section"] = cx.load_section_fixture()[0]
        return self.cache["section"]

    def S(self):
        if "S" not in self.cache:
            self.cache["S"] = cx.build_S(cx.build_projection(self.section()))
        return self.cache["S"]

    def y(self):
        if "y" not in self.cache:
            self.cache["y"] = cx.compute_y(self.S())
        return self.cache["y"]

    def d_prime(self):
        if "d_prime" not in self.cache:
            self.cache["d_prime"] = cx.build_d_prime(self.S(), self.y())
        return self.cache["d_prime"]


Outcome = tuple  # (status, box, samples, witness)


def _first_failure(items: Iterable, predicate: Callable, show: Callable = str):
    """Run ``predicate`` over ``items``; return ``(count, witness_or_None)``."""
    n = 0
    for item in items:
        n += 1
        if not predicate(item):
            return n, show(item)
    return n, None


def _outcome(box: int, n: int, witness) -> Outcome:
    return (FAIL if witness is not None else PASS, box, n, witness)


# ---------------------------------------------------------------------------
# torus
# ---------------------------------------------------------------------------


def check_torus_relations(ctx: _Context) -> Outcome:
    # each entry is lhs - rhs of a defining relation; the witness is the defect
    defects = [
        I * I - T1,
        J * J - T2,
        I * J + J * I,
        (I * J) * (I * J) + T1 * T2,
    ]
    n, w = _first_failure(defects, lambda d: not d)
    return _outcome(0, n, w)


def check_torus_associativity(ctx: _Context) -> Outcome:
    box = ctx.config.box
    monos = [monomial(*d) for d in box_degrees(box)]

    def triples():
        for x in monos:
            for y in monos:
                xy = x * y
                for z in monos:
                    yield x, y, z, xy

    n, w = _first_failure(
        triples(),
        lambda t: t[3] * t[2] == t[0] * (t[1] * t[2]),
        lambda t: f"{t[0]} ; {t[1]} ; {t[2]}",
    )
    return _outcome(box, n, w)


def check_torus_grading(ctx: _Context) -> Outcome:
    s = Sampler(ctx.config.seed, ctx.config.box)

    def ok(pair):
        x, y = pair
        sums = {(a + c, b + d) for a, b in x.support() for c, d in y.support()}
        return (x * y).support() <= sums

    pairs = ((s.torus(), s.torus()) for _ in range(ctx.config.samples))
    n, w = _first_failure(pairs, ok, lambda p: f"{p[0]} ; {p[1]}")
    return _outcome(ctx.config.box, n, w)


def check_torus_conjugation(ctx: _Context) -> Outcome:
    s = Sampler(ctx.config.seed, ctx.config.box)

    def ok(pair):
        x, y = pair
        return (x * y).conjugate() == y.conjugate() * x.conjugate() and x.conjugate().conjugate() == x

    pairs = ((s.torus(), s.torus()) for _ in range(ctx.config.samples))
    n, w = _first_failure(pairs, ok, lambda p: f"{p[0]} ; {p[1]}")
    return _outcome(ctx.config.box, n, w)


def check_torus_center(ctx: _Context) -> Outcome:
    """Commutators of monomials in the box span exactly the non-(even, even) monomials
    of that box, and a monomial is central iff its degree is (even, even).

    Only the inner box is compared: for even ``box`` some odd degrees on the
    rim of the doubled box, such as ``(2*box, 1)``, are not commutators of
    monomials from the box.
    """
    box = max(ctx.config.box, 1)
    monos = [monomial(*d) for d in box_degrees(box)]
    span = Echelon()
    for x in monos:
        for y in monos:
            c = x.commutator(y)
            if c:
                span.add(dict(c.terms))
    n = 0
    for d in box_degrees(box):
        n += 1
        in_span = span.contains({d: Scalar(1)})
        if in_span == is_even_even(d):
            return _outcome(box, n, str(monomial(*d)))
    for d in box_degrees(box):
        n += 1
        m = monomial(*d)
        central_ = not m.commutator(I) and not m.commutator(J)
        if central_ != is_even_even(d):
            return _outcome(box, n, str(m))
    return _outcome(box, n, None)


# ---------------------------------------------------------------------------
# matrix
# ---------------------------------------------------------------------------


def _oracle_box(config: SuiteConfig) -> int:
    return max(1, min(config.box, 2))


def check_sl2_oracle(ctx: _Context) -> Outcome:
    box = _oracle_box(ctx.config)
    n, w = _first_failure(
        monomial_matrices(box),
        lambda x: is_in_sl2(x) == sl2_membership_bruteforce(x, box),
    )
    return _outcome(box, n, w)


def check_trace_commutator(ctx: _Context) -> Outcome:
    s = Sampler(ctx.config.seed, ctx.config.box)

    def ok(pair):
        x, y = pair
        return not (mat_mul(x, y).trace() - mat_mul(y, x).trace()).even_even_part()

    pairs = ((s.matrix(), s.matrix()) for _ in range(ctx.config.samples))
    n, w = _first_failure(pairs, ok, lambda p: f"{p[0]} ; {p[1]}")
    return _outcome(ctx.config.box, n, w)


def check_sl2_closure(ctx: _Context) -> Outcome:
    s = Sampler(ctx.config.seed, ctx.config.box)
    pairs = ((s.matrix(), s.matrix()) for _ in range(ctx.config.samples))
    n, w = _first_failure(pairs, lambda p: is_in_sl2(bracket(*p)), lambda p: f"{p[0]} ; {p[1]}")
    return _outcome(ctx.config.box, n, w)


# ---------------------------------------------------------------------------
# form
# ---------------------------------------------------------------------------


def check_form_symmetry(ctx: _Context) -> Outcome:
    s = Sampler(ctx.config.seed, ctx.config.box)
    pairs = ((s.sl2(), s.sl2()) for _ in range(ctx.config.samples))
    n, w = _first_failure(pairs, lambda p: form_L(*p) == form_L(p[1], p[0]), lambda p: f"{p[0]} ; {p[1]}")
    return _outcome(ctx.config.box, n, w)


def check_form_invariance(ctx: _Context) -> Outcome:
    s = Sampler(ctx.config.seed, ctx.config.box)
    triples = ((s.sl2(), s.sl2(), s.sl2()) for _ in range(ctx.config.samples))
    n, w = _first_failure(
        triples,
        lambda t: form_L(bracket(t[0], t[1]), t[2]) == form_L(t[0], bracket(t[1], t[2])),
        lambda t: " ; ".join(map(str, t)),
    )
    return _outcome(ctx.config.box, n, w)


def check_form_graded(ctx: _Context) -> Outcome:
    box = ctx.config.box
    basis = list(graded_basis(box))

    def pairs():
        for gi, x in basis:
            for gj, y in basis:
                yield gi, x, gj, y

    def ok(t):
        gi, x, gj, y = t
        opposite = gi.degree == (-gj.degree[0], -gj.degree[1]) and gi.root == -gj.root
        return opposite or not form_L(x, y)

    n, w = _first_failure(pairs(), ok, lambda t: f"{t[1]} ; {t[3]}")
    return _outcome(box, n, w)


def check_form_nondegenerate(ctx: _Context) -> Outcome:
    box = ctx.config.box
    rows = gram_report(box)
    n, w = _first_failure(rows, lambda r: bool(r.determinant), lambda r: str(slice_basis(r.degree, r.root)[0]))
    return _outcome(box, n, w)


def check_form_dimension(ctx: _Context) -> Outcome:
    box = ctx.config.box

    def items():
        for d in box_degrees(box):
            for r in ROOTS:
                yield d, r

    def ok(t):
        d, r = t
        expected = (1 if is_even_even(d) else 2) if r == 0 else 1
        return len(slice_basis(d, r)) == expected

    n, w = _first_failure(items(), ok, lambda t: str(slice_basis(*t)[0]))
    return _outcome(box, n, w)


# ---------------------------------------------------------------------------
# cocycle and the EALA bracket/form
# ---------------------------------------------------------------------------


def check_cocycle_antisymmetry(ctx: _Context) -> Outcome:
    s = Sampler(ctx.config.seed, ctx.config.box)
    pairs = ((s.sl2(), s.sl2()) for _ in range(ctx.config.samples))
    n, w = _first_failure(
        pairs,
        lambda p: cocycle(*p) == -cocycle(p[1], p[0]) and not cocycle(p[0], p[0]),
        lambda p: f"{p[0]} ; {p[1]}",
    )
    return _outcome(ctx.config.box, n, w)


def check_cocycle_identity(ctx: _Context) -> Outcome:
    s = Sampler(ctx.config.seed, ctx.config.box)

    def ok(t):
        x, y, z = t
        return not (
            cocycle(bracket(x, y), z) + cocycle(bracket(y, z), x) + cocycle(bracket(z, x), y)
        )

    triples = ((s.sl2(), s.sl2(), s.sl2()) for _ in range(ctx.config.samples))
    n, w = _first_failure(triples, ok, lambda t: " ; ".join(map(str, t)))
    return _outcome(ctx.config.box, n, w)


def check_eala_form(ctx: _Context) -> Outcome:
    s = Sampler(ctx.config.seed, ctx.config.box)

    def ok(t):
        x, y, z = t
        return form_E(x, y) == form_E(y, x) and form_E(bracket_E(x, y), z) == form_E(x, bracket_E(y, z))

    triples = ((s.eala(), s.eala(), s.eala()) for _ in range(ctx.config.samples))
    n, w = _first_failure(triples, ok, lambda t: " ; ".join(map(str, t)))
    return _outcome(ctx.config.box, n, w)


def check_eala_complement(ctx: _Context) -> Outcome:
    """The pairing of ``{c, d_theta}`` with itself is nonsingular."""
    pair = (central(), d_theta())
    gram = [[form_E(x, y) for y in pair] for x in pair]
    det = determinant(gram)
    return _outcome(0, 1, None if det else f"gram {gram}")


def check_eala_core(ctx: _Context) -> Outcome:
    """Every bracket lands in ``L + C`` (zero derivation part)."""
    s = Sampler(ctx.config.seed, ctx.config.box)
    pairs = ((s.eala(), s.eala()) for _ in range(ctx.config.samples))
    n, w = _first_failure(pairs, lambda p: not bracket_E(*p).d_coeff, lambda p: f"{p[0]} ; {p[1]}")
    return _outcome(ctx.config.box, n, w)


# ---------------------------------------------------------------------------
# jacobi
# ---------------------------------------------------------------------------


def check_jacobi_matrix(ctx: _Context) -> Outcome:
    s = Sampler(ctx.config.seed, ctx.config.box)

    def ok(t):
        x, y, z = t
        return not (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y)))

    triples = ((s.matrix(), s.matrix(), s.matrix()) for _ in range(ctx.config.samples))
    n, w = _first_failure(triples, ok, lambda t: " ; ".join(map(str, t)))
    return _outcome(ctx.config.box, n, w)


def check_jacobi_eala(ctx: _Context) -> Outcome:
    s = Sampler(ctx.config.seed, ctx.config.box)

    def ok(t):
        x, y, z = t
        total = (
            bracket_E(x, bracket_E(y, z))
            + bracket_E(y, bracket_E(z, x))
            + bracket_E(z, bracket_E(x, y))
        )
        return not total

    triples = ((s.eala(), s.eala(), s.eala()) for _ in range(ctx.config.samples))
    n, w = _first_failure(triples, ok, lambda t: " ; ".join(map(str, t)))
    return _outcome(ctx.config.box, n, w)


# ---------------------------------------------------------------------------
# section, spectrum, lemmas, probe
# ---------------------------------------------------------------------------


def check_section_box0(ctx: _Context) -> Outcome:
    try:
        sec = cx.solve_section(0)
    except BoxExhausted:
        return _outcome(0, 1, None)
    return _outcome(0, 1, cx.format_column(sec.column()))


def check_section_solve(ctx: _Context) -> Outcome:
    sec, box = cx.find_section(0)
    if not sec.is_valid():
        return _outcome(box, 1, str(sec.residual()))
    pinned, pinned_box = cx.load_section_fixture()
    if (pinned, pinned_box) != (sec, box):
        # the freshly solved section disagrees with the pinned one
        return _outcome(box, 1, cx.format_column(sec.column()))
    return _outcome(box, 1, None)


def check_spectrum_projection(ctx: _Context) -> Outcome:
    sec = ctx.section()
    p = cx.build_projection(sec)
    S = ctx.S().matrix
    row = Matrix2([[cx.ONE_PLUS_I, -cx.ONE_PLUS_J], [TorusElement(), TorusElement()]])
    q = sec.column()
    # defects that must vanish, shown as the offending element
    Sq = S.apply(q)
    checks = [
        p * p - p,
        mat_mul(row, p) - row,
        S * S - identity(),
        diag(S.trace().even_even_part(), TorusElement()),
        diag(Sq[0] - q[0], Sq[1] - q[1]),
    ]
    n, w = _first_failure(checks, lambda d: not d)
    return _outcome(0, n, w)


def check_spectrum_cubic(ctx: _Context) -> Outcome:
    r = cx.ad_cubic_check(ctx.S(), ctx.config.box, ctx.config.seed)
    return (r.status, r.box, r.samples, r.witness)


def check_spectrum_projectors(ctx: _Context) -> Outcome:
    S = ctx.S()
    box = ctx.config.box

    def ok(item):
        _, x = item
        parts = cx.eigen_decompose(S, x)
        if parts[0] + parts[2] + parts[-2] != x:
            return False
        for lam, v in parts.items():
            again = cx.eigen_decompose(S, v)
            for mu, u in again.items():
                if (mu == lam and u != v) or (mu != lam and u):
                    return False
        return True

    n, w = _first_failure(graded_basis(box), ok, lambda item: str(item[1]))
    return _outcome(box, n, w)


def check_standard_mad(ctx: _Context) -> Outcome:
    mad = StandardMad()
    box = ctx.config.box

    def ok(item):
        g, x = item
        alpha, beta = simultaneous_eigenvalues(x, mad)
        return alpha == mad.generator_scale * g.root and beta == DEFAULT_THETA(g.degree)

    n, w = _first_failure(graded_basis(box), ok, lambda item: str(item[1]))
    return _outcome(box, n, w)


def check_y0(ctx: _Context) -> Outcome:
    yd = ctx.y()
    ok = (
        not yd.y0
        and yd.y0 + yd.y2 + yd.ym2 == yd.y
        and yd.y == -derive(ctx.S().matrix)
    )
    return _outcome(0, 1, None if ok else str(yd.y0))


def check_d_prime(ctx: _Context) -> Outcome:
    dp = ctx.d_prime()
    br = bracket_E(lift(ctx.S().matrix), dp.element)
    return _outcome(0, 1, None if not br else str(br))


def check_central_term(ctx: _Context) -> Outcome:
    v = cx.central_term(ctx.S(), ctx.y())
    return _outcome(0, 1, None if not v else str(v))


def check_abelian_seed(ctx: _Context) -> Outcome:
    r = cx.abelian_seed_check(ctx.S(), ctx.d_prime(), seed=ctx.config.seed)
    return (r.status, r.box, r.samples, r.witness)


def check_weight_cocycle(ctx: _Context) -> Outcome:
    r = cx.weight_cocycle_check(ctx.S(), ctx.config.box, ctx.config.samples, ctx.config.seed)
    return (r.status, r.box, r.samples, r.witness)


def _probe_reports(ctx: _Context) -> List[VerificationReport]:
    out = []
    for box in range(ctx.config.box + 1):
        try:
            out.append(cx.nonfreeness_probe(box, ctx.S(), ctx.config.seed))
        except EalaError as exc:
            out.append(
                VerificationReport(
                    "probe.nonfree", FAIL, box, 0, ctx.config.seed, f"{type(exc).__name__}: {exc}"
                )
            )
    return out


# check_id -> (suite, check function); order here is the output order
REGISTRY: Dict[str, tuple] = {
    "torus.relations": ("torus", check_torus_relations),
    "torus.associativity": ("torus", check_torus_associativity),
    "torus.grading": ("torus", check_torus_grading),
    "torus.conjugation": ("torus", check_torus_conjugation),
    "torus.center": ("torus", check_torus_center),
    "matrix.sl2_oracle": ("matrix", check_sl2_oracle),
    "matrix.trace_commutator": ("matrix", check_trace_commutator),
    "matrix.sl2_closure": ("matrix", check_sl2_closure),
    "form.symmetry": ("form", check_form_symmetry),
    "form.invariance": ("form", check_form_invariance),
    "form.graded": ("form", check_form_graded),
    "form.nondegenerate": ("form", check_form_nondegenerate),
    "form.dimension": ("form", check_form_dimension),
    "cocycle.antisymmetry": ("cocycle", check_cocycle_antisymmetry),
    "cocycle.identity": ("cocycle", check_cocycle_identity),
    "cocycle.form_E": ("cocycle", check_eala_form),
    "cocycle.complement": ("cocycle", check_eala_complement),
    "cocycle.core_closure": ("cocycle", check_eala_core),
    "jacobi.matrix": ("jacobi", check_jacobi_matrix),
    "jacobi.eala": ("jacobi", check_jacobi_eala),
    "section.box0": ("section", check_section_box0),
    "section.solve": ("section", check_section_solve),
    "spectrum.projection": ("spectrum", check_spectrum_projection),
    "spectrum.cubic": ("spectrum", check_spectrum_cubic),
    "spectrum.projectors": ("spectrum", check_spectrum_projectors),
    "spectrum.standard_mad": ("spectrum", check_standard_mad),
    "lemmas.y0": ("lemmas", check_y0),
    "lemmas.d_prime": ("lemmas", check_d_prime),
    "lemmas.central_term": ("lemmas", check_central_term),
    "lemmas.abelian_seed": ("lemmas", check_abelian_seed),
    "lemmas.weight_cocycle": ("lemmas", check_weight_cocycle),
    "probe.nonfree": ("probe", None),
}


def _resolve(selection: Sequence[str]) -> List[str]:
    chosen = set()
    for name in selection:
        if name == "all":
            chosen.update(SUITES)
        elif name in SUITES:
            chosen.add(name)
        else:
            raise ConfigError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    if not chosen:
        raise ConfigError("no suite selected")
    return [s for s in SUITES if s in chosen]


def run_suite(config: SuiteConfig, selection: Sequence[str]) -> List[VerificationReport]:
    """Run the selected suites in dependency order and collect their reports.

    Configuration problems raise :class:`ConfigError` before anything runs.
    A check that raises one of the package's errors is reported as a failure
    with the exception text as witness.
    """
    config.validate()
    suites = _resolve(selection)
    ctx = _Context(config)
    reports = []
    for check_id, (suite, fn) in REGISTRY.items():
        if suite not in suites:
            continue
        if fn is None:
            reports.extend(_probe_reports(ctx))
            continue
        with timer() as ms:
            try:
                status, box, n, witness = fn(ctx)
            except (EalaError, AssertionError, ValueError) as exc:
                status, box, n, witness = FAIL, config.box, 0, f"{type(exc).__name__}: {exc}"
        reports.append(VerificationReport(check_id, status, box, n, config.seed, witness, ms[0]))
    if not config.timing:
        for r in reports:
            r.duration_ms = 0
    return reports
