"""Shared random generators for the test suite.

Everything takes an explicit random.Random so individual tests stay
reproducible.
"""

from fractions import Fraction

from ncreal.algebra import MonomialOrder, Poly, iter_words
from ncreal.factor import is_irreducible_homogeneous


def rand_word(rng, g, d):
    return tuple(rng.randrange(2 * g) for _ in range(d))


def rand_coeff(rng, lo=-3, hi=3, den=2):
    c = 0
    while c == 0:
        c = Fraction(rng.randint(lo, hi), rng.randint(1, den))
    return c


def rand_poly(rng, g, max_deg, nterms=4):
    terms = {}
    for _ in range(nterms):
        w = rand_word(rng, g, rng.randint(0, max_deg))
        terms[w] = terms.get(w, 0) + rand_coeff(rng)
    return Poly(g, {w: c for w, c in terms.items() if c})


def rand_homogeneous(rng, g, d, nterms=3):
    words = [w for w in iter_words(g, d) if len(w) == d]
    terms = {}
    for _ in range(nterms):
        w = words[rng.randrange(len(words))]
        terms[w] = terms.get(w, 0) + rand_coeff(rng)
    p = Poly(g, {w: c for w, c in terms.items() if c})
    return p if p else Poly.from_word(g, words[0])


def rand_linear_factor(rng, g, order=None):
    """Random monic homogeneous degree-1 polynomial (always irreducible)."""
    order = order or MonomialOrder(g)
    while True:
        terms = {}
        for code in range(2 * g):
            if rng.random() < 0.5:
                terms[(code,)] = rand_coeff(rng)
        if terms:
            return Poly(g, terms).monic(order)


def rand_irreducible(rng, g, d, order=None, tries=40):
    """Random monic irreducible homogeneous polynomial of degree d."""
    order = order or MonomialOrder(g)
    if d == 1:
        return rand_linear_factor(rng, g, order)
    for _ in range(tries):
        p = rand_homogeneous(rng, g, d, nterms=rng.randint(2, 4)).monic(order)
        if is_irreducible_homogeneous(p, order):
            return p
    # x^d + (x*)^d has full-rank Gram matrices at every split
    w1 = (0,) * d
    w2 = (1,) * d
    return Poly(g, {w1: Fraction(1), w2: Fraction(1)})


def brute_shrinkable(w):
    """Definition-level scan: w = u u* v with u nonempty."""
    for k in range(1, len(w) // 2 + 1):
        u = w[:k]
        ustar = tuple(c ^ 1 for c in reversed(u))
        if w[k : 2 * k] == ustar:
            return True
    return False
