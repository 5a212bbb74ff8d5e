"""Acceptance gate: one test per criterion, one printed PASS/FAIL line each.

Criterion 4 is expected to fail: the four-generator ideal it targets is
provably non-real (the package emits an exactly verified certificate), so
the required NumericallyReal/Real outcome cannot occur.  See the project
decision log for the full analysis.
"""

import itertools
import json
import random
import time
from fractions import Fraction

import numpy as np
import sympy

from ncreal.algebra import MonomialOrder, Poly, iter_words
from ncreal.cli import main as cli_main
from ncreal.evaluation import common_kernel
from ncreal.factor import factor_homogeneous
from ncreal.gram import sos_quadratic_univariate
from ncreal.groebner import left_groebner
from ncreal.parsing import parse_generators, parse_poly, poly_str
from ncreal.realness import (
    NOT_REAL,
    NUMERICALLY_REAL,
    REAL,
    real_monomial_ideal,
    real_principal_homogeneous,
    real_quadratic_univariate,
    real_test,
    verify_nonreal_certificate,
)
from ncreal.sdp import solve_feasibility
from ncreal.sdp_build import _exact_system, build_real_sdp, exact_infeasibility_check

from util import brute_shrinkable, rand_coeff, rand_irreducible


def _criterion(num, text, fn, limit_s):
    start = time.perf_counter()
    try:
        fn()
        elapsed = time.perf_counter() - start
        assert elapsed < limit_s, f"took {elapsed:.1f}s, limit {limit_s}s"
    except BaseException:
        print(f"criterion {num:2d}: FAIL  {text}")
        raise
    print(f"criterion {num:2d}: PASS  {text}  [{elapsed:.2f}s]")


# ---------------------------------------------------------------------------
# 1. x x* - x* x - 1: closed form Real, sdp stalls, exact post-check decides
# ---------------------------------------------------------------------------

def test_criterion_01():
    def body():
        p = parse_poly("x1 x1* - x1* x1 - 1")
        auto = real_test([p])
        assert auto.status == REAL and auto.method == "quadratic-univariate"

        basis = left_groebner([p])
        problem = build_real_sdp(basis)
        numeric = solve_feasibility(problem)
        assert numeric.status == "likely_infeasible"

        # affine elimination alone pins the diagonal, including a -1 entry
        sys = _exact_system(problem)
        words = problem.words
        i1, ix, ixs = words.index(()), words.index((0,)), words.index((1,))
        assert sys.pinned_value(("g", i1, i1)) == 1
        assert sys.pinned_value(("g", ix, ix)) == 1
        assert sys.pinned_value(("g", ixs, ixs)) == -1
        assert sys.pinned_value(("g", min(ix, ixs), max(ix, ixs))) == 0
        va = ("g", min(i1, ix), max(i1, ix))
        vb = ("g", min(i1, ixs), max(i1, ixs))
        expr_a, const_a = sys.expression(va)
        expr_b, const_b = sys.expression(vb)
        assert (expr_a == {vb: Fraction(-1)} and const_a == 0) or (
            expr_b == {va: Fraction(-1)} and const_b == 0
        )

        assert exact_infeasibility_check(problem)[0] == "infeasible"
        forced = real_test([p], method="sdp")
        assert forced.status == REAL and forced.method == "sdp-exact"

    _criterion(1, "x1 x1* - x1* x1 - 1 is Real, exactly, on both routes", body, 1.0)


# ---------------------------------------------------------------------------
# 2. x x* - x*^2 + 2 x + 4: NotReal with the expected exact identity
# ---------------------------------------------------------------------------

def test_criterion_02():
    def body():
        p = parse_poly("x1 x1* - x1*^2 + 2 x1 + 4")
        v = real_test([p])
        assert v.status == NOT_REAL
        cert = v.certificate
        assert cert.exact
        assert verify_nonreal_certificate([p], cert)
        q = cert.multipliers[0]
        assert q == parse_poly("x1 + 2")
        t = parse_poly("2 x1* + 4")
        target = t.star() * t
        assert q * p + p.star() * q.star() == target
        sos = Poly.zero(1)
        for w, r in zip(cert.weights, cert.members):
            sos = sos + w * (r.star() * r)
        assert sos == target

    _criterion(2, "x1 x1* - x1*^2 + 2 x1 + 4 is NotReal with exact certificate", body, 1.0)


# ---------------------------------------------------------------------------
# 3. four cubic generators reduce to the expected monic basis
# ---------------------------------------------------------------------------

CUBIC_GENS = ["x1^3 + 1", "x1^2 + x1*^2", "x1 x1* - x1*^2", "x1* x1 - 5"]
CUBIC_BASIS = ["x1 x1*^2 - 1", "x1^2 + x1*^2", "x1 x1* - x1*^2", "x1* x1 - 5"]


def test_criterion_03(capsys):
    def body():
        basis = left_groebner([parse_poly(s) for s in CUBIC_GENS])
        got = sorted(poly_str(p) for p in basis.elements)
        assert got == sorted(CUBIC_BASIS)
        argv = ["groebner", "--json"]
        for s in CUBIC_GENS:
            argv += ["-e", s]
        assert cli_main(argv) == 0
        data = json.loads(capsys.readouterr().out)
        assert sorted(data["basis"]) == sorted(CUBIC_BASIS)

    _criterion(3, "cubic generators interreduce to the four-element basis", body, 0.1)


# ---------------------------------------------------------------------------
# 4. the ideal of that basis: required verdict NumericallyReal or Real
# ---------------------------------------------------------------------------

def test_criterion_04():
    def body():
        gens = [parse_poly(s) for s in CUBIC_BASIS]
        v = real_test(gens, tol=1e-8)
        # the decision procedure returns a verified exact NotReal here; the
        # required outcome below therefore fails, and that is deliberate
        assert v.status in (REAL, NUMERICALLY_REAL), (
            f"got {v.status} via {v.method}; the emitted certificate "
            f"verifies: {verify_nonreal_certificate(gens, v.certificate)}"
        )

    _criterion(4, "cubic basis ideal reported Real or NumericallyReal", body, 30.0)


# ---------------------------------------------------------------------------
# 5. monomial ideals: exhaustive agreement with the definition-level scan
# ---------------------------------------------------------------------------

def test_criterion_05():
    def body():
        words = [w for w in iter_words(2, 4) if w]
        assert len(words) == 340
        shrinkable_short = []
        for w in words:
            verdict = real_monomial_ideal([Poly.from_word(2, w)])
            expected = NOT_REAL if brute_shrinkable(w) else REAL
            assert verdict.status == expected, w
            if expected == NOT_REAL and len(w) <= 3:
                shrinkable_short.append((w, verdict.certificate))
        assert len(shrinkable_short) == 20
        for w, cert in shrinkable_short:
            assert cert is not None and cert.exact
            assert verify_nonreal_certificate([Poly.from_word(2, w)], cert)

    _criterion(5, "singleton monomial ideals match the shrinkability scan", body, 10.0)


# ---------------------------------------------------------------------------
# 6. principal homogeneous ideals: exact decider vs sdp route
# ---------------------------------------------------------------------------

def _rand_principal(rng, star_pair=False):
    g = rng.choice([1, 2])
    budget = 4 if g == 1 else 3
    factors = []
    if star_pair:
        # leading f f* makes the second prefix symmetrization a square
        f = rand_irreducible(rng, g, 1)
        factors = [f, f.star()]
        budget -= 2
        total = rng.randint(0, budget)
    else:
        total = rng.randint(1, budget)
    while total:
        d = rng.randint(1, min(2, total))
        factors.append(rand_irreducible(rng, g, d))
        total -= d
    p = Poly.constant(g, rand_coeff(rng))
    for f in factors:
        p = p * f
    return p


def _check_consistency(gens, exact, sdp):
    if sdp.status == NOT_REAL:
        assert verify_nonreal_certificate(gens, sdp.certificate, tol=1e-6)
        assert exact.status == NOT_REAL
    if exact.status == REAL:
        assert sdp.status != NOT_REAL
    if exact.status == NOT_REAL:
        assert verify_nonreal_certificate(gens, exact.certificate)
        assert sdp.status != REAL


def test_criterion_06():
    def body():
        rng = random.Random(106)
        seen = {REAL: 0, NOT_REAL: 0}
        for case in range(50):
            p = _rand_principal(rng, star_pair=case % 3 == 2)
            exact = real_principal_homogeneous(p)
            sdp = real_test([p], method="sdp")
            _check_consistency([p], exact, sdp)
            seen[exact.status] += 1
        assert seen[REAL] >= 5 and seen[NOT_REAL] >= 5, seen

    _criterion(6, "50 principal homogeneous ideals: exact and sdp verdicts agree", body, 300.0)


# ---------------------------------------------------------------------------
# 7. univariate quadratics: closed form vs sdp route
# ---------------------------------------------------------------------------

def test_criterion_07():
    def body():
        rng = random.Random(107)
        x = Poly.gen(1, 1)
        words = [Poly.one(1), x, x.star(), x * x, x * x.star(), x.star() * x,
                 x.star() * x.star()]
        seen = {REAL: 0, NOT_REAL: 0}
        for _ in range(50):
            while True:
                coeffs = [rng.randint(-3, 3) for _ in range(7)]
                if any(coeffs[3:]):
                    break
            p = Poly.zero(1)
            for c, m in zip(coeffs, words):
                p = p + c * m
            exact = real_quadratic_univariate(p)
            sdp = real_test([p], method="sdp")
            _check_consistency([p], exact, sdp)
            seen[exact.status] += 1
        assert seen[REAL] >= 5 and seen[NOT_REAL] >= 5, seen

    _criterion(7, "50 univariate quadratics: closed form and sdp verdicts agree", body, 300.0)


# ---------------------------------------------------------------------------
# 8. symmetric quadratics: closed form == one-parameter Gram family,
#    and 2x2 sampling never contradicts either
# ---------------------------------------------------------------------------

def _lambda_family_feasible(b):
    lam = sympy.Symbol("lam", real=True)
    b0, b1, b2, b3, b4 = (sympy.Rational(x) for x in b)
    G = sympy.Matrix([[b0, lam, b1 - lam], [lam, b3, b2], [b1 - lam, b2, b4]])
    feasible = sympy.S.Reals
    # symmetric psd iff every principal minor is nonnegative
    for r in range(1, 4):
        for sub in itertools.combinations(range(3), r):
            minor = sympy.expand(G.extract(list(sub), list(sub)).det())
            if lam not in minor.free_symbols:
                if minor < 0:
                    return False
                continue
            feasible = feasible.intersect(
                sympy.solve_univariate_inequality(minor >= 0, lam, relational=False)
            )
            if feasible.is_empty:
                return False
    return not feasible.is_empty


def _quad_at_2x2(b, X):
    return (
        b[0] * np.eye(2)
        + b[1] * (X + X.T)
        + b[2] * (X @ X + X.T @ X.T)
        + b[3] * (X @ X.T)
        + b[4] * (X.T @ X)
    )


def test_criterion_08():
    def body():
        rng = random.Random(108)
        n_sos = 0
        for case in range(200):
            if case < 100:
                b = tuple(rng.randint(-3, 3) for _ in range(5))
            else:
                b = (rng.randint(0, 3), rng.randint(-2, 2), rng.randint(-2, 2),
                     rng.randint(0, 3), rng.randint(0, 3))
            is_sos = sos_quadratic_univariate(*b)
            assert _lambda_family_feasible(b) == is_sos, b
            n_sos += is_sos
            for _ in range(30):
                X = np.array([[rng.uniform(-2, 2) for _ in range(2)] for _ in range(2)])
                low = float(np.linalg.eigvalsh(_quad_at_2x2(b, X))[0])
                if low < -1e-7:
                    assert not is_sos, (b, low)
                    break
        assert 20 < n_sos < 180, n_sos

    _criterion(8, "200 quadratics: closed form, Gram family, and sampling agree", body, 60.0)


# ---------------------------------------------------------------------------
# 9. factorization round trip
# ---------------------------------------------------------------------------

def test_criterion_09():
    def body():
        rng = random.Random(109)
        order1, order2 = MonomialOrder(1), MonomialOrder(2)
        for _ in range(100):
            g = rng.choice([1, 2])
            while True:
                degs = [rng.randint(1, 2) for _ in range(rng.randint(2, 4))]
                if sum(degs) <= 6:
                    break
            order = order1 if g == 1 else order2
            factors = [rand_irreducible(rng, g, d, order) for d in degs]
            scalar = rand_coeff(rng)
            p = Poly.constant(g, scalar)
            for f in factors:
                p = p * f
            fac = factor_homogeneous(p, order)
            assert fac.scalar == scalar
            assert fac.factors == factors

    _criterion(9, "100 products of monic irreducibles factor back exactly", body, 60.0)


# ---------------------------------------------------------------------------
# 10. joint kernels of evaluated words kill the low-degree product
# ---------------------------------------------------------------------------

def _orthogonal(rng, n):
    M = np.array([[rng.gauss(0, 1) for _ in range(n)] for _ in range(n)])
    return np.linalg.qr(M)[0]


def test_criterion_10():
    def body():
        rng = random.Random(110)
        for _ in range(20):
            while True:
                k = np.array([rng.uniform(-1, 1) for _ in range(4)])
                k /= np.linalg.norm(k)
                A = np.array([[rng.uniform(-1, 1) for _ in range(4)] for _ in range(4)])
                X1 = A @ (np.eye(4) - np.outer(k, k))  # singular, so K is nonempty
                X2 = np.array([[rng.uniform(-1, 1) for _ in range(4)] for _ in range(4)])
                M = X2.T @ X2
                mats = [X1 @ np.linalg.matrix_power(M, d) @ X1 for d in range(2, 7)]
                K = common_kernel(mats)
                if K.shape[1] >= 1:
                    break
            low = X1 @ M @ X1
            for col in K.T:
                assert np.linalg.norm(low @ col) <= 1e-8 * np.linalg.norm(col)

    _criterion(10, "20 matrix pairs: joint kernel vectors vanish at degree one", body, 10.0)
