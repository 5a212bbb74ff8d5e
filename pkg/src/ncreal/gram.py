"""Gram matrices and sums of hermitian squares.

A homogeneous p of degree d1 + d2 has a unique (d1, d2)-Gram matrix A over
the word bases W_{d1} (rows) and W_{d2} (columns):

    p = sum_{u in W_{d1}, v in W_{d2}}  A[u][v] * (u)^* v

Uniqueness holds because in the free algebra the products (u)^* v are
pairwise distinct words.  For d1 = d2 = d, p is a sum of hermitian squares
sum_k r_k^* r_k iff p = p^* and the (d, d)-Gram matrix is positive
semidefinite; an exact LDL^T factorization then yields the squares, and a
rational witness vector certifies the negative case.
"""

from fractions import Fraction

from .algebra import MonomialOrder, Poly, word_star, words_of_degree
from .exactla import psd_check_exact


class GramMatrix:
    """Exact (d1, d2)-Gram matrix of a homogeneous polynomial."""

    def __init__(self, row_words, col_words, entries, g):
        self.row_words = row_words
        self.col_words = col_words
        self.entries = entries  # list of rows of Fractions
        self.g = g

    def reconstruct(self):
        """Return sum A[i][j] * (row_i)^* col_j, which must equal the input."""
        terms = {}
        for i, u in enumerate(self.row_words):
            for j, v in enumerate(self.col_words):
                c = self.entries[i][j]
                if c:
                    terms[word_star(u) + v] = c
        return Poly(self.g, terms)


def gram_matrix(p, d1, d2, order=None):
    """Gram matrix of p with row degree d1 and column degree d2.

    p must be zero or homogeneous of degree d1 + d2.
    """
    if order is None:
        order = MonomialOrder(p.g)
    if p and (not p.is_homogeneous() or p.degree() != d1 + d2):
        raise ValueError("polynomial is not homogeneous of degree %d" % (d1 + d2))
    rows = words_of_degree(p.g, d1, order)
    cols = words_of_degree(p.g, d2, order)
    col_index = {w: j for j, w in enumerate(cols)}
    row_index = {w: i for i, w in enumerate(rows)}
    entries = [[Fraction(0)] * len(cols) for _ in rows]
    for w, c in p.terms.items():
        u, v = w[:d1], w[d1:]
        entries[row_index[word_star(u)]][col_index[v]] = c
    return GramMatrix(rows, cols, entries, p.g)


class SosCertificate:
    """Weighted sum of hermitian squares: sum_k weights[k] * polys[k]^* polys[k]."""

    def __init__(self, weights, polys):
        self.weights = list(weights)
        self.polys = list(polys)

    def expand(self, g=None):
        if not self.polys:
            if g is None:
                raise ValueError("empty certificate needs an explicit g to expand")
            return Poly.zero(g)
        total = Poly.zero(self.polys[0].g)
        for w, r in zip(self.weights, self.polys):
            total = total + w * (r.star() * r)
        return total

    def __len__(self):
        return len(self.polys)


class SosCheckResult:
    def __init__(self, is_sos, certificate=None, witness=None, reason=""):
        self.is_sos = is_sos
        self.certificate = certificate
        self.witness = witness  # rational vector v with v^T A v < 0, over the degree-d basis
        self.reason = reason

    def __bool__(self):
        return self.is_sos


def is_sos_homogeneous(p, order=None):
    """Decide whether a homogeneous symmetric p is a sum of hermitian squares.

    Returns an SosCheckResult; .certificate satisfies certificate.expand() == p
    when the answer is yes, .witness refutes PSD-ness of the Gram matrix when
    the answer is no.
    """
    if order is None:
        order = MonomialOrder(p.g)
    if not p:
        return SosCheckResult(True, SosCertificate([], []))
    if not p.is_homogeneous():
        raise ValueError("input must be homogeneous (or zero)")
    d = p.degree()
    if d % 2:
        return SosCheckResult(False, reason="odd degree")
    if not p.is_symmetric():
        return SosCheckResult(False, reason="not symmetric")
    gm = gram_matrix(p, d // 2, d // 2, order)
    res = psd_check_exact(gm.entries)
    if not res.is_psd:
        return SosCheckResult(False, witness=res.witness, reason="gram matrix not psd")
    # Read the squares off the permuted LDL^T factorization.
    n = len(gm.row_words)
    weights, polys = [], []
    for k in range(n):
        if not res.diag[k]:
            continue
        terms = {}
        for i in range(n):
            if res.lower[i][k]:
                terms[gm.row_words[res.perm[i]]] = res.lower[i][k]
        weights.append(res.diag[k])
        polys.append(Poly(p.g, terms))
    cert = SosCertificate(weights, polys)
    if cert.expand(p.g) != p:
        raise AssertionError("internal error: SOS certificate does not expand to the input")
    return SosCheckResult(True, cert)


def pm_sos_kind(p, order=None):
    """Classify a symmetric homogeneous p as zero / +SOS / -SOS / neither.

    Returns (kind, certificate) with kind in {"zero", "plus", "minus",
    "neither"}; the certificate (for plus/minus) expands to p resp. -p.
    """
    if not p:
        return "zero", None
    if not p.is_symmetric():
        raise ValueError("input must be symmetric")
    plus = is_sos_homogeneous(p, order)
    if plus:
        return "plus", plus.certificate
    minus = is_sos_homogeneous(-p, order)
    if minus:
        return "minus", minus.certificate
    return "neither", None


# -- univariate quadratics ---------------------------------------------------
#
# For g = 1 write a symmetric quadratic as
#   s = b0 + b1 (x + x^*) + b2 (x^2 + x^*^2) + b3 x x^* + b4 x^* x .
# s is a sum of hermitian squares iff
#   b0 >= 0,  b3 >= 0,  b4 >= 0,  b3 b4 - b2^2 >= 0,
#   -b1^2 + b0 (2 b2 + b3 + b4) >= 0.


def quad_poly(b0, b1, b2, b3, b4):
    """Build b0 + b1(x+x*) + b2(x^2+x*^2) + b3 xx* + b4 x*x over g=1."""
    b0, b1, b2, b3, b4 = (Fraction(b) for b in (b0, b1, b2, b3, b4))
    terms = {}
    if b0:
        terms[()] = b0
    if b1:
        terms[(0,)] = b1
        terms[(1,)] = b1
    if b2:
        terms[(0, 0)] = b2
        terms[(1, 1)] = b2
    if b3:
        terms[(0, 1)] = b3
    if b4:
        terms[(1, 0)] = b4
    return Poly(1, terms)


def quad_coeffs(p):
    """Inverse of quad_poly; raises if p is not symmetric of that shape."""
    if p.g != 1 or (p and p.degree() is not None and p.degree() > 2):
        raise ValueError("expected a univariate polynomial of degree <= 2")
    b0 = p.coefficient(())
    b1 = p.coefficient((0,))
    b2 = p.coefficient((0, 0))
    b3 = p.coefficient((0, 1))
    b4 = p.coefficient((1, 0))
    if quad_poly(b0, b1, b2, b3, b4) != p:
        raise ValueError("polynomial is not symmetric")
    return b0, b1, b2, b3, b4


def sos_quadratic_univariate(b0, b1, b2, b3, b4):
    """Closed-form SOS test for b0 + b1(x+x*) + b2(x^2+x*^2) + b3 xx* + b4 x*x."""
    b0, b1, b2, b3, b4 = (Fraction(b) for b in (b0, b1, b2, b3, b4))
    return (
        b0 >= 0
        and b3 >= 0
        and b4 >= 0
        and b3 * b4 - b2 * b2 >= 0
        and -b1 * b1 + b0 * (2 * b2 + b3 + b4) >= 0
    )


def decompose_quadratic_univariate(b0, b1, b2, b3, b4):
    """Constructive SOS decomposition of a univariate symmetric quadratic.

    Returns an SosCertificate with expand() == quad_poly(b0,...,b4), or None
    when the closed-form test fails.  The decomposition shifts x by
    mu = b1 / (2 b2 + b3 + b4), splitting off the constant square, and
    factors the homogeneous part through its 2x2 Gram matrix
    [[b4, b2], [b2, b3]] over the basis (x, x^*).
    """
    b0, b1, b2, b3, b4 = (Fraction(b) for b in (b0, b1, b2, b3, b4))
    if not sos_quadratic_univariate(b0, b1, b2, b3, b4):
        return None
    sigma = 2 * b2 + b3 + b4
    if sigma:
        mu = b1 / sigma
        const = b0 - b1 * b1 / sigma  # = (-b1^2 + b0*sigma) / sigma >= 0
    else:
        # b3*b4 >= b2^2 and b3 + b4 = -2 b2 force b1 = 0 via the last condition.
        mu = Fraction(0)
        const = b0
    weights, polys = [], []
    if const:
        weights.append(const)
        polys.append(Poly.one(1))
    hom = psd_check_exact([[b4, b2], [b2, b3]])
    if not hom.is_psd:
        raise AssertionError("internal error: homogeneous block not psd")
    x = Poly.gen(1, 1)
    shifted = [x + mu, x.star() + mu]  # rows (x, x^*) of the homogeneous Gram matrix
    for k in range(2):
        if not hom.diag[k]:
            continue
        r = Poly.zero(1)
        for i in range(2):
            if hom.lower[i][k]:
                r = r + hom.lower[i][k] * shifted[hom.perm[i]]
        weights.append(hom.diag[k])
        polys.append(r)
    cert = SosCertificate(weights, polys)
    if cert.expand(1) != quad_poly(b0, b1, b2, b3, b4):
        raise AssertionError("internal error: quadratic decomposition mismatch")
    return cert
