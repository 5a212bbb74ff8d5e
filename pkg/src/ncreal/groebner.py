"""Left Groebner bases for finitely generated left ideals.

Left ideals only admit left multiples omega * p, so a word w is reducible by
p exactly when lead(p) is a suffix of w: w = omega * lead(p).  The basis
algorithm is interreduction on leading words: while some lead(p_i) is a
suffix of lead(p_j) (i != j; for equal leads the later element is reduced
against the earlier), replace p_j by the monic part of p_j - omega * p_i and
drop zeros.  Leads strictly decrease in the degree-first order, which is
well-founded, so this terminates.

Each basis element carries a representation as a left combination of the
original generators, which lets callers rewrite certificates found against
the basis in terms of their own input.
"""

from fractions import Fraction

from .algebra import MonomialOrder, Poly, words_up_to


class LeftGroebnerBasis:
    """Monic basis of a left ideal with suffix-reduction normal forms."""

    def __init__(self, g, order, elements, reps, ngens):
        self.g = g
        self.order = order
        self.elements = elements
        self.leads = [p.leading_word(order) for p in elements]
        self.reps = reps  # reps[i][t]: elements[i] == sum_t reps[i][t] * gens[t]
        self.ngens = ngens

    def __len__(self):
        return len(self.elements)

    def _find_reduction(self, p):
        """Largest reducible word of p together with the reducing element."""
        for w in sorted(p.terms, key=self.order.key):
            for idx, lw in enumerate(self.leads):
                if len(lw) <= len(w) and w[len(w) - len(lw):] == lw:
                    return w, idx
        return None

    def normal_form(self, p, with_cofactors=False):
        """Reduce p; returns nf, or (nf, cofactors) with p == sum cof[i]*elements[i] + nf."""
        cof = [Poly.zero(self.g) for _ in self.elements]
        work = p
        while True:
            hit = self._find_reduction(work)
            if hit is None:
                break
            w, idx = hit
            omega = Poly(self.g, {w[: len(w) - len(self.leads[idx])]: work.terms[w]})
            work = work - omega * self.elements[idx]
            cof[idx] = cof[idx] + omega
        if with_cofactors:
            return work, cof
        return work

    def contains(self, p):
        return not self.normal_form(p)

    def is_irreducible_word(self, w):
        return not any(
            len(lw) <= len(w) and w[len(w) - len(lw):] == lw for lw in self.leads
        )

    def represent(self, idx):
        """Cofactors of elements[idx] over the original generators."""
        return self.reps[idx]


def left_groebner(gens, order=None):
    """Compute the left Groebner basis of the left ideal generated by gens."""
    if not gens:
        raise ValueError("need at least one generator")
    g = gens[0].g
    if any(p.g != g for p in gens):
        raise ValueError("generators live in algebras with different numbers of variables")
    if order is None:
        order = MonomialOrder(g)
    elements, reps = [], []
    for t, p in enumerate(gens):
        if not p:
            continue
        c = p.leading_coeff(order)
        rep = [Poly.zero(g) for _ in gens]
        rep[t] = Poly.constant(g, Fraction(1) / c)
        elements.append((Fraction(1) / c) * p)
        reps.append(rep)

    changed = True
    while changed:
        changed = False
        for j in range(len(elements)):
            lj = elements[j].leading_word(order)
            hit = None
            for i in range(len(elements)):
                if i == j:
                    continue
                li = elements[i].leading_word(order)
                if li == lj:
                    if i < j:
                        hit = i
                        break
                elif len(li) < len(lj) and lj[len(lj) - len(li):] == li:
                    hit = i
                    break
            if hit is None:
                continue
            i = hit
            li = elements[i].leading_word(order)
            omega = Poly(g, {lj[: len(lj) - len(li)]: Fraction(1)})
            new = elements[j] - omega * elements[i]
            new_rep = [reps[j][t] - omega * reps[i][t] for t in range(len(gens))]
            if not new:
                del elements[j]
                del reps[j]
            else:
                c = new.leading_coeff(order)
                elements[j] = (Fraction(1) / c) * new
                reps[j] = [(Fraction(1) / c) * r for r in new_rep]
            changed = True
            break

    return LeftGroebnerBasis(g, order, elements, reps, len(gens))


def truncated_basis(basis, e):
    """All left word multiples v * p_i of basis elements with degree <= e."""
    if basis.elements and e < max(p.degree() for p in basis.elements):
        raise ValueError("truncation degree below the maximal basis degree")
    out = []
    for p in basis.elements:
        for v in words_up_to(basis.g, e - p.degree(), basis.order):
            out.append(Poly(basis.g, {v: Fraction(1)}) * p)
    return out
