"""Deciding whether a finitely generated left ideal is real.

A left ideal I is real when sum_i a_i^* a_i in I + I^* forces every a_i
into I; for finitely generated ideals this is equivalent to the left
Nullstellensatz for I.  A verdict is one of

    Real             -- proved real (exact reasoning)
    NotReal          -- proved not real, with a certificate
    NumericallyReal  -- the SDP stalled the way infeasible problems do, but
                        no exact proof was extracted
    Inconclusive     -- nothing could be certified

A NonRealCertificate consists of multipliers q_t (one per input generator)
and a weighted SOS such that

    sum_t ( q_t gen_t + gen_t^* q_t^* )  ==  sum_k w_k r_k^* r_k ,

with some member r_k outside the ideal: the sum of squares lands in
I + I^* while a square root escapes I, which is exactly non-realness.
Certificates are exact (Fractions) whenever a closed form or a rational
lift succeeds, and numeric (float coefficient dicts, checked to a
tolerance) otherwise.

Dispatch tries exact closed forms first -- monomial ideals, purely
analytic generators, linear, univariate quadratic, homogeneous principal,
analytic + antianalytic -- and falls back to the semidefinite feasibility
route with exact rational post-processing.
"""

from fractions import Fraction

import numpy as np

from .algebra import (
    MonomialOrder,
    Poly,
    shrink_length,
    word_dict_add,
    word_dict_mul,
    word_dict_star,
    word_star,
    word_str,
)
from .exactla import psd_check_exact
from .factor import factor_homogeneous
from .gram import decompose_quadratic_univariate, pm_sos_kind, quad_coeffs
from .groebner import left_groebner
from .parsing import parse_poly, parse_word, poly_str
from .sdp import solve_feasibility
from .sdp_build import (
    build_real_sdp,
    exact_infeasibility_check,
    exact_lift,
    recover_multipliers,
)

REAL = "Real"
NOT_REAL = "NotReal"
NUMERICALLY_REAL = "NumericallyReal"
INCONCLUSIVE = "Inconclusive"


# ---------------------------------------------------------------------------
# certificates and verdicts
# ---------------------------------------------------------------------------

class NonRealCertificate:
    """Witness of non-realness; see the module docstring for the identity.

    Exact certificates hold Poly multipliers/members and Fraction weights;
    numeric ones hold {word: float} dicts and float weights.
    """

    def __init__(self, multipliers, weights, members, exact, residual=None):
        self.multipliers = list(multipliers)
        self.weights = list(weights)
        self.members = list(members)
        self.exact = exact
        self.residual = residual

    def to_json(self):
        if self.exact:
            return {
                "exact": True,
                "multipliers": [poly_str(q) for q in self.multipliers],
                "sos": {
                    "weights": [str(w) for w in self.weights],
                    "polys": [poly_str(r) for r in self.members],
                },
                "residual": None,
            }
        return {
            "exact": False,
            "multipliers": [_terms_json(q) for q in self.multipliers],
            "sos": {
                "weights": [float(w) for w in self.weights],
                "polys": [_terms_json(r) for r in self.members],
            },
            "residual": self.residual,
        }

    @classmethod
    def from_json(cls, data, g):
        if data["exact"]:
            return cls(
                [parse_poly(s, g) for s in data["multipliers"]],
                [Fraction(w) for w in data["sos"]["weights"]],
                [parse_poly(s, g) for s in data["sos"]["polys"]],
                True,
            )
        return cls(
            [_terms_from_json(d, g) for d in data["multipliers"]],
            [float(w) for w in data["sos"]["weights"]],
            [_terms_from_json(d, g) for d in data["sos"]["polys"]],
            False,
            data.get("residual"),
        )


def _terms_json(d):
    return {word_str(w): float(c) for w, c in d.items()}


def _terms_from_json(data, g):
    return {parse_word(s, g): float(c) for s, c in data.items()}


class RealnessVerdict:
    def __init__(self, status, method, certificate=None, residual=None, detail=""):
        self.status = status
        self.method = method
        self.certificate = certificate
        self.residual = residual
        self.detail = detail

    def to_json(self):
        return {
            "status": self.status,
            "method": self.method,
            "detail": self.detail,
            "residual": self.residual,
            "certificate": self.certificate.to_json() if self.certificate else None,
        }

    def __repr__(self):
        return f"RealnessVerdict({self.status}, method={self.method!r})"


# ---------------------------------------------------------------------------
# float coefficient-dict helpers
# ---------------------------------------------------------------------------

def _float_terms(p):
    return {w: float(c) for w, c in p.terms.items()}


def _inf_norm(d):
    return max((abs(c) for c in d.values()), default=0.0)


def _normal_form_float(d, basis):
    """Suffix-reduce a float coefficient dict against an exact basis."""
    work = dict(d)
    while True:
        hit = None
        for w in sorted(work, key=basis.order.key):
            for idx, lw in enumerate(basis.leads):
                if len(lw) <= len(w) and w[len(w) - len(lw):] == lw:
                    hit = (w, idx)
                    break
            if hit:
                break
        if hit is None:
            return work
        w, idx = hit
        omega = {w[: len(w) - len(basis.leads[idx])]: work[w]}
        work = word_dict_add(work, word_dict_mul(omega, _float_terms(basis.elements[idx])), -1.0)


def _numeric_identity_residual(gens, cert):
    acc = {}
    for q, p in zip(cert.multipliers, gens):
        qp = word_dict_mul(q, _float_terms(p))
        acc = word_dict_add(acc, qp)
        acc = word_dict_add(acc, word_dict_star(qp))
    for w, r in zip(cert.weights, cert.members):
        acc = word_dict_add(acc, word_dict_mul(word_dict_star(r), r), -w)
    return _inf_norm(acc)


# ---------------------------------------------------------------------------
# certificate verification
# ---------------------------------------------------------------------------

def verify_nonreal_certificate(gens, cert, tol=1e-8):
    """Check a NonRealCertificate against the generators it claims to refute.

    Exact certificates must satisfy the identity exactly, with positive
    weights and some member of nonzero normal form.  Numeric certificates
    must satisfy it coefficientwise within tol, have weights >= -tol, and
    keep some member visibly outside the ideal (normal form above sqrt(tol)
    relative to the member's own size).
    """
    gens = list(gens)
    if not gens or len(cert.multipliers) != len(gens):
        return False
    if len(cert.weights) != len(cert.members):
        return False
    basis = left_groebner(gens)
    if cert.exact:
        lhs = Poly.zero(gens[0].g)
        for q, p in zip(cert.multipliers, gens):
            lhs = lhs + q * p + p.star() * q.star()
        rhs = Poly.zero(gens[0].g)
        for w, r in zip(cert.weights, cert.members):
            if w <= 0:
                return False
            rhs = rhs + w * (r.star() * r)
        if not rhs or lhs != rhs:
            return False
        return any(basis.normal_form(r) for r in cert.members)
    if any(w < -tol for w in cert.weights):
        return False
    if _numeric_identity_residual(gens, cert) > tol:
        return False
    for r in cert.members:
        nf = _normal_form_float(r, basis)
        if _inf_norm(nf) > np.sqrt(tol) * max(1.0, _inf_norm(r)):
            return True
    return False


# ---------------------------------------------------------------------------
# exact deciders
# ---------------------------------------------------------------------------

def real_monomial_ideal(gens, order=None):
    """Realness of an ideal generated by (nonconstant) monomials.

    After discarding generators that are left multiples of others, the
    ideal is real iff every surviving word w avoids the shape w = u u* v
    with u nonempty.  A shrinkable survivor yields the certificate
    q = v^*/(2c) against c*w, with member u^* v:
    q (c w) + (c w)^* q^* = v^* w = (u^* v)^* (u^* v).
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    g = gens[0].g
    words = []
    for p in gens:
        if not p.is_monomial() or p.is_constant():
            raise ValueError("generators must be nonconstant monomials")
        (w, _), = p.terms.items()
        words.append(w)
    survivors = []
    for i, w in enumerate(words):
        redundant = False
        for j, u in enumerate(words):
            if j == i:
                continue
            if len(u) < len(w) and w[len(w) - len(u):] == u:
                redundant = True
                break
            if u == w and j < i:
                redundant = True
                break
        if not redundant:
            survivors.append(i)
    for i in survivors:
        w = words[i]
        k = shrink_length(w)
        if k is None:
            continue
        v = w[2 * k:]
        member = Poly.from_word(g, w[k:])
        c = gens[i].terms[w]
        mult = [Poly.zero(g) for _ in gens]
        mult[i] = Poly.from_word(g, word_star(v), Fraction(1, 2) / c)
        cert = NonRealCertificate(mult, [Fraction(1)], [member], exact=True)
        if not verify_nonreal_certificate(gens, cert):
            raise AssertionError("internal error: monomial certificate failed to verify")
        return RealnessVerdict(
            NOT_REAL, "monomial", cert,
            detail=f"generator {word_str(w)} shrinks at length {k}",
        )
    return RealnessVerdict(
        REAL, "monomial",
        detail="all minimal generating words are left unshrinkable",
    )


def _analytic_antianalytic_core(p, method):
    g = p.g
    const = p.constant_coeff()
    analytic, anti = {}, {}
    for w, c in p.terms.items():
        if not w:
            continue
        if all(not (code & 1) for code in w):
            analytic[w] = c
        elif all(code & 1 for code in w):
            anti[w] = c
        else:
            raise ValueError("generator mixes plain and starred letters inside a word")
    a = Poly(g, analytic)
    b_star = Poly(g, anti)
    if p.is_constant():
        raise ValueError("generator must be nonconstant")
    if const and b_star == -a.star():
        sign = Fraction(1 if const > 0 else -1)
        cert = NonRealCertificate(
            [Poly.constant(g, sign)], [2 * abs(const)], [Poly.one(g)], exact=True,
        )
        if not verify_nonreal_certificate([p], cert):
            raise AssertionError("internal error: analytic certificate failed to verify")
        return RealnessVerdict(
            NOT_REAL, method, cert,
            detail="p = a - a* + c with c nonzero, so p + p* = 2c",
        )
    return RealnessVerdict(REAL, method)


def real_linear(p):
    """Realness of a principal ideal with a degree-1 generator."""
    if p.degree() != 1:
        raise ValueError("generator must have degree 1")
    return _analytic_antianalytic_core(p, "linear")


def real_analytic_antianalytic(p):
    """Realness of (p) for p = analytic + antianalytic, nonconstant.

    Not real exactly when p = a - a^* + c with a nonzero constant c.
    """
    return _analytic_antianalytic_core(p, "analytic-antianalytic")


def real_quadratic_univariate(p):
    """Realness of (p) for a univariate quadratic, by closed form.

    With p = a0 + a1 x + a2 x* + a3 x^2 + a4 x x* + a5 x* x + a6 x*^2:

    * if a4 + a6 != 0 or a3 + a5 != 0, the ideal is not real iff
      +(p + p*) or -(p + p*) is a nonzero sum of squares (constant
      multiplier certificate);
    * otherwise a5 = -a3 and a6 = -a4, and a degree-one multiplier
      q = q0 + t(a4 x + a3 x*) decides, split on a3 + a4.
    """
    if p.g != 1 or p.variables_used() not in (set(), {1}):
        raise ValueError("generator must be univariate (relabel to x1 first)")
    if p.degree() != 2:
        raise ValueError("generator must have degree 2")
    a0, a1, a2, a3, a4, a5, a6 = (
        p.coefficient(w) for w in [(), (0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]
    )
    if a4 + a6 != 0 or a3 + a5 != 0:
        sym = p + p.star()
        if sym:
            for sign in (Fraction(1), Fraction(-1)):
                cert = _quadratic_certificate(p, Poly.constant(1, sign))
                if cert is not None:
                    return RealnessVerdict(
                        NOT_REAL, "quadratic-univariate", cert,
                        detail=f"{'+' if sign > 0 else '-'}(p + p*) is a nonzero sum of squares",
                    )
        return RealnessVerdict(REAL, "quadratic-univariate")
    if a3 + a4 == 0:
        # quadratic part is -a4 (x - x*)^2 with a4 != 0
        witness = a1 + a2 == 0 and (a2 * a4 != 0 or (a0 * a4 >= 0 and (a0 or a4)))
        if witness:
            if a2 * a4 != 0:
                q0, t = Fraction(0), Fraction(1 if a2 * a4 > 0 else -1)
            else:
                q0, t = Fraction(1 if a4 > 0 else -1), Fraction(0)
        else:
            return RealnessVerdict(REAL, "quadratic-univariate")
    else:
        if a1 + a2 == 0 or a0 * (a3 + a4) ** 2 != (a1 + a2) * (a1 * a4 - a2 * a3):
            return RealnessVerdict(REAL, "quadratic-univariate")
        t = Fraction(1 if (a1 + a2) * (a3 + a4) > 0 else -1)
        q0 = (a1 * a4 - a2 * a3) * t / (a3 + a4)
    x = Poly.gen(1, 1)
    q = Poly.constant(1, q0) + t * a4 * x + t * a3 * x.star()
    cert = _quadratic_certificate(p, q)
    if cert is None:
        raise AssertionError("internal error: constructed multiplier gives no SOS")
    return RealnessVerdict(
        NOT_REAL, "quadratic-univariate", cert,
        detail=f"multiplier q = {poly_str(q)}",
    )


def _quadratic_certificate(p, q):
    """Certificate for a univariate quadratic from multiplier q, or None."""
    s = q * p + p.star() * q.star()
    if not s:
        return None
    sos = decompose_quadratic_univariate(*quad_coeffs(s))
    if sos is None:
        return None
    cert = NonRealCertificate([q], sos.weights, sos.polys, exact=True)
    if not verify_nonreal_certificate([p], cert):
        raise AssertionError("internal error: quadratic certificate failed to verify")
    return cert


def _prefix_products(fac, g):
    prods = []
    cur = Poly.constant(g, fac.scalar)
    for f in fac.factors:
        cur = cur * f
        prods.append(cur)
    return prods


def real_principal_homogeneous(p, order=None):
    """Realness of (p) for nonzero homogeneous p, via the factorization.

    With p = c f_1 ... f_k, the ideal fails to be real iff some prefix
    product P_l = c f_1 ... f_l has +(P_l + P_l^*) or -(P_l + P_l^*) a
    nonzero sum of squares; the multiplier is then +-(f_{l+1} ... f_k)^*
    and the members are r F for the squares r and the tail F.
    """
    if not p or not p.is_homogeneous() or p.degree() < 1:
        raise ValueError("generator must be nonzero homogeneous of degree >= 1")
    g = p.g
    if order is None:
        order = MonomialOrder(g)
    fac = factor_homogeneous(p, order)
    for ell, prod in enumerate(_prefix_products(fac, g), start=1):
        kind, sos = pm_sos_kind(prod + prod.star(), order)
        if kind not in ("plus", "minus"):
            continue
        sign = Fraction(1 if kind == "plus" else -1)
        q = Poly.constant(g, sign)
        for f in reversed(fac.factors[ell:]):
            q = q * f.star()
        tail = Poly.one(g)
        for f in fac.factors[ell:]:
            tail = tail * f
        cert = NonRealCertificate(
            [q], sos.weights, [r * tail for r in sos.polys], exact=True,
        )
        if not verify_nonreal_certificate([p], cert):
            raise AssertionError("internal error: principal certificate failed to verify")
        return RealnessVerdict(
            NOT_REAL, "principal-homogeneous", cert,
            detail=f"prefix product of the first {ell} factor(s) has a signed SOS symmetrization",
        )
    return RealnessVerdict(
        REAL, "principal-homogeneous",
        detail="no signed prefix symmetrization is a nonzero sum of squares",
    )


def realness_prefilter_principal(p, order=None):
    """Cheap exact filter for arbitrary principal ideals.

    Factor the top-degree part; when no signed symmetrized prefix product
    is even a sum of squares (zero included), the ideal is real.  Returns a
    Real verdict or None.
    """
    if not p or p.is_constant():
        raise ValueError("generator must be nonconstant")
    if order is None:
        order = MonomialOrder(p.g)
    fac = factor_homogeneous(p.leading_part(), order)
    for prod in _prefix_products(fac, p.g):
        kind, _ = pm_sos_kind(prod + prod.star(), order)
        if kind != "neither":
            return None
    return RealnessVerdict(
        REAL, "prefilter",
        detail="no signed symmetrized prefix of the leading part is a sum of squares",
    )


# ---------------------------------------------------------------------------
# SDP route
# ---------------------------------------------------------------------------

def _realign_multipliers_exact(basis, qdicts):
    """Multipliers over basis elements -> multipliers over the input generators."""
    g = basis.g
    out = [Poly.zero(g) for _ in range(basis.ngens)]
    for j in range(len(basis.elements)):
        qj = Poly(g, qdicts.get(j, {}))
        if not qj:
            continue
        for t in range(basis.ngens):
            out[t] = out[t] + qj * basis.reps[j][t]
    return out


def _realign_multipliers_float(basis, qdicts):
    out = [{} for _ in range(basis.ngens)]
    for j, qd in qdicts.items():
        for t in range(basis.ngens):
            rep = _float_terms(basis.reps[j][t])
            if rep:
                out[t] = word_dict_add(out[t], word_dict_mul(qd, rep))
    return out


def _exact_sdp_certificate(basis, problem, G, qdicts):
    res = psd_check_exact(G)
    if not res.is_psd:
        return None
    weights, members = [], []
    for k in range(problem.n):
        if not res.diag[k]:
            continue
        r = Poly.zero(basis.g)
        for i in range(problem.n):
            if res.lower[i][k]:
                r = r + Poly.from_word(basis.g, problem.words[res.perm[i]], res.lower[i][k])
        weights.append(res.diag[k])
        members.append(r)
    return NonRealCertificate(
        _realign_multipliers_exact(basis, qdicts), weights, members, exact=True,
    )


def _numeric_sdp_certificate(gens, basis, problem, G, tol):
    qnum = recover_multipliers(problem, G)
    w, V = np.linalg.eigh((G + G.T) / 2.0)
    # Keep every essentially-positive eigenpair: dropping weight inflates the
    # identity residual, so only noise-level eigenvalues are discarded.
    cutoff = 1e-14 * max(1.0, float(w[-1])) if len(w) else 0.0
    weights, members = [], []
    for k in range(len(w)):
        if w[k] <= cutoff:
            continue
        weights.append(float(w[k]))
        members.append(
            {problem.words[i]: float(V[i, k]) for i in range(problem.n) if V[i, k]}
        )
    cert = NonRealCertificate(
        _realign_multipliers_float(basis, qnum), weights, members, exact=False,
    )
    cert.residual = _numeric_identity_residual(gens, cert)
    return cert, qnum


def _sdp_route(gens, basis, tol, max_iter, stall_window, exact_cap):
    problem = build_real_sdp(basis)
    result = solve_feasibility(problem, tol=tol, max_iter=max_iter, stall_window=stall_window)

    if result.status == "feasible":
        cert, qnum = _numeric_sdp_certificate(gens, basis, problem, result.G, tol)
        lifted = exact_lift(problem, result.G, qnum)
        if lifted is not None:
            exact_cert = _exact_sdp_certificate(basis, problem, *lifted)
            if exact_cert is not None and verify_nonreal_certificate(gens, exact_cert):
                return RealnessVerdict(
                    NOT_REAL, "sdp-exact", exact_cert,
                    detail="numeric solution lifted to an exact rational witness",
                )
        if verify_nonreal_certificate(gens, cert, tol=50 * tol):
            return RealnessVerdict(
                NOT_REAL, "sdp-numeric", cert, residual=cert.residual,
                detail=f"feasible after {result.iterations} projection steps",
            )
        return RealnessVerdict(
            INCONCLUSIVE, "sdp-numeric", residual=cert.residual,
            detail="projections converged but the certificate failed verification",
        )

    exact_status, data = exact_infeasibility_check(problem, max_unknowns=exact_cap)
    if exact_status == "infeasible":
        return RealnessVerdict(
            REAL, "sdp-exact",
            detail="exact elimination refutes the feasibility system",
        )
    if exact_status == "feasible":
        exact_cert = _exact_sdp_certificate(basis, problem, *data)
        if exact_cert is not None and verify_nonreal_certificate(gens, exact_cert):
            return RealnessVerdict(
                NOT_REAL, "sdp-exact", exact_cert,
                detail="exact elimination produced a feasible witness",
            )
    if result.status == "likely_infeasible":
        return RealnessVerdict(
            NUMERICALLY_REAL, "sdp-numeric", residual=result.final_gap,
            detail=f"projection gap stalled at {result.final_gap:.3e} "
                   f"after {result.iterations} steps",
        )
    return RealnessVerdict(
        INCONCLUSIVE, "sdp-numeric", residual=result.final_gap,
        detail=f"no decision within {result.iterations} projection steps",
    )


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def _embed_single(cert, gens, idx):
    mult = [Poly.zero(gens[0].g) for _ in gens]
    mult[idx] = cert.multipliers[0]
    return NonRealCertificate(mult, cert.weights, cert.members, cert.exact, cert.residual)


def _decide_single_exact(p, order):
    """Closed-form chain for one nonconstant generator; None when none applies."""
    if p.degree() == 1:
        return real_linear(p)
    used = p.variables_used()
    if p.degree() == 2 and len(used) == 1:
        var = used.pop()
        verdict = real_quadratic_univariate(p.relabel_variable(var, 1, 1))
        if verdict.certificate is not None:
            cert = verdict.certificate
            back = NonRealCertificate(
                [q.relabel_variable(1, var, p.g) for q in cert.multipliers],
                cert.weights,
                [r.relabel_variable(1, var, p.g) for r in cert.members],
                cert.exact,
            )
            if not verify_nonreal_certificate([p], back):
                raise AssertionError("internal error: relabeled certificate failed to verify")
            verdict.certificate = back
        return verdict
    if p.is_homogeneous():
        return real_principal_homogeneous(p, order)
    try:
        return _analytic_antianalytic_core(p, "analytic-antianalytic")
    except ValueError:
        pass
    return realness_prefilter_principal(p, order)


def real_test(gens, order=None, method="auto", tol=1e-8, max_iter=20000,
              stall_window=500, exact_cap=120):
    """Decide realness of the left ideal generated by gens.

    method: "auto" (closed forms, then SDP), "exact" (closed forms only;
    Inconclusive when none applies), or "sdp" (the feasibility route
    directly).  Certificate multipliers always align with the gens list as
    given, including zero entries.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    g = gens[0].g
    if any(p.g != g for p in gens):
        raise ValueError("generators live in algebras with different numbers of variables")
    if method not in ("auto", "exact", "sdp"):
        raise ValueError(f"unknown method {method!r}")
    if order is None:
        order = MonomialOrder(g)

    live = [(t, p) for t, p in enumerate(gens) if p]
    if not live:
        return RealnessVerdict(REAL, "zero-ideal", detail="every generator is zero")
    if any(p.is_constant() for _, p in live):
        return RealnessVerdict(
            REAL, "unit-ideal", detail="a generator is a nonzero constant",
        )

    if method in ("auto", "exact"):
        if all(p.is_monomial() for _, p in live):
            verdict = real_monomial_ideal([p for _, p in live], order)
            if verdict.certificate is not None:
                hit = next(
                    i for i, (_, p) in enumerate(live)
                    if verdict.certificate.multipliers[i]
                )
                verdict.certificate = _embed_single(
                    NonRealCertificate(
                        [verdict.certificate.multipliers[hit]],
                        verdict.certificate.weights,
                        verdict.certificate.members,
                        True,
                    ),
                    gens, live[hit][0],
                )
            return verdict
        if all(p.is_analytic() for _, p in live):
            return RealnessVerdict(
                REAL, "analytic", detail="analytic generators always give a real ideal",
            )
        if len(live) == 1:
            t, p = live[0]
            verdict = _decide_single_exact(p, order)
            if verdict is not None:
                if verdict.certificate is not None:
                    verdict.certificate = _embed_single(verdict.certificate, gens, t)
                return verdict

    basis = left_groebner(gens, order)
    if not basis.elements:
        return RealnessVerdict(REAL, "zero-ideal", detail="every generator reduces to zero")
    if any(p.is_constant() for p in basis.elements):
        return RealnessVerdict(
            REAL, "unit-ideal", detail="the basis contains a nonzero constant",
        )
    if method in ("auto", "exact") and len(basis.elements) == 1 and len(gens) > 1:
        # several generators collapsed to a principal ideal
        verdict = _decide_single_exact(basis.elements[0], order)
        if verdict is not None:
            if verdict.certificate is not None:
                qdict = {0: verdict.certificate.multipliers[0].terms}
                cert = NonRealCertificate(
                    _realign_multipliers_exact(basis, qdict),
                    verdict.certificate.weights,
                    verdict.certificate.members,
                    True,
                )
                if not verify_nonreal_certificate(gens, cert):
                    raise AssertionError("internal error: realigned certificate failed to verify")
                verdict.certificate = cert
            return verdict

    if method == "exact":
        return RealnessVerdict(
            INCONCLUSIVE, "exact",
            detail="no exact closed form applies to these generators",
        )
    return _sdp_route(gens, basis, tol, max_iter, stall_window, exact_cap)
