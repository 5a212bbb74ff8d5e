"""Exact rational linear algebra: LDL^T with symmetric pivoting, ranks,
and a sparse Gauss-Jordan eliminator for affine systems.

Everything here is Fraction arithmetic; a verdict from this module is a
proof, not an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Matrix = list[list[Fraction]]


def to_fraction_matrix(A) -> Matrix:
    return [[Fraction(x) for x in row] for row in A]


@dataclass
class PsdResult:
    """Outcome of the exact PSD check.

    When is_psd, perm/lower/diag give A[perm[i]][perm[j]] = (L D L^T)[i][j]
    with L unit lower triangular and D = diag(diag) >= 0.  Otherwise
    witness is a rational vector with witness^T A witness < 0.
    """
    is_psd: bool
    perm: list[int]
    lower: Matrix
    diag: list[Fraction]
    witness: list[Fraction] | None


def psd_check_exact(A) -> PsdResult:
    """Decide A >= 0 for an exactly symmetric rational matrix.

    Pivots on the first positive diagonal entry of the active block; a
    negative diagonal or a nonzero off-diagonal entry in an all-zero
    diagonal block refutes PSD, and the refuting vector of the reduced
    block is pulled back through the partial factorization.
    """
    M = to_fraction_matrix(A)
    n = len(M)
    for i, row in enumerate(M):
        if len(row) != n:
            raise ValueError("matrix must be square")
        for j in range(n):
            if M[i][j] != M[j][i]:
                raise ValueError("matrix must be symmetric")

    perm = list(range(n))
    L: Matrix = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    diag: list[Fraction] = [Fraction(0)] * n

    def pull_back(k: int, reduced: list[Fraction]) -> list[Fraction]:
        # Reduced witness y lives in permuted coordinates k..n-1.  Solve
        # L11^T z1 = -L21^T y (back substitution) so that (z1, y) tests the
        # original quadratic form with the same negative value, then undo
        # the permutation.
        rhs = [-sum(L[i][c] * reduced[i - k] for i in range(k, n)) for c in range(k)]
        z = [Fraction(0)] * n
        # back substitution on the unit upper-triangular system L11^T z1 = rhs
        for c in range(k - 1, -1, -1):
            acc = rhs[c]
            for r in range(c + 1, k):
                acc -= L[r][c] * z[r]
            z[c] = acc
        for i in range(k, n):
            z[i] = reduced[i - k]
        out = [Fraction(0)] * n
        for pos, orig in enumerate(perm):
            out[orig] = z[pos]
        return out

    for k in range(n):
        neg = next((i for i in range(k, n) if M[i][i] < 0), None)
        if neg is not None:
            y = [Fraction(0)] * (n - k)
            y[neg - k] = Fraction(1)
            return PsdResult(False, perm, L, diag, pull_back(k, y))
        piv = next((i for i in range(k, n) if M[i][i] > 0), None)
        if piv is None:
            # diagonal of the active block is identically zero
            for i in range(k, n):
                for j in range(i + 1, n):
                    if M[i][j]:
                        y = [Fraction(0)] * (n - k)
                        y[i - k] = Fraction(1)
                        y[j - k] = Fraction(-1 if M[i][j] > 0 else 1)
                        return PsdResult(False, perm, L, diag, pull_back(k, y))
            break
        if piv != k:
            perm[k], perm[piv] = perm[piv], perm[k]
            M[k], M[piv] = M[piv], M[k]
            for row in M:
                row[k], row[piv] = row[piv], row[k]
            # swap only the computed multiplier columns; columns >= k of L
            # are still identity and must stay that way
            for c in range(k):
                L[k][c], L[piv][c] = L[piv][c], L[k][c]
        d = M[k][k]
        diag[k] = d
        for i in range(k + 1, n):
            f = M[i][k] / d
            L[i][k] = f
            if f:
                for j in range(k, n):
                    M[i][j] -= f * M[k][j]
                for j in range(k, n):
                    M[j][i] = M[i][j]
    return PsdResult(True, perm, L, diag, None)


def rank_exact(A) -> int:
    """Rank of a rational matrix by plain Gaussian elimination."""
    M = to_fraction_matrix(A)
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    rank = 0
    col = 0
    while rank < rows and col < cols:
        piv = next((r for r in range(rank, rows) if M[r][col]), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        prow = M[rank]
        inv = 1 / prow[col]
        for r in range(rank + 1, rows):
            f = M[r][col] * inv
            if f:
                row = M[r]
                for c in range(col, cols):
                    row[c] -= f * prow[c]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# sparse exact affine systems
# ---------------------------------------------------------------------------

class Inconsistent(Exception):
    """The affine system has no solution (the exact infeasibility proof)."""


class ExactAffineSystem:
    """Rows sum(coeff * var) = const over named variables, kept in solved
    form var -> (expression over free variables, constant).

    Rows can keep arriving after a solve (the PSD-propagation loop feeds
    forced zeros back in); expressions stay closed under the current set
    of pivots.
    """

    def __init__(self):
        self.solved: dict = {}          # var -> (dict free-var -> Fraction, Fraction)
        self._order: dict = {}          # deterministic pivot tie-break
        self.inconsistent = False

    def _substitute(self, row: dict, const: Fraction) -> tuple[dict, Fraction]:
        out: dict = {}
        for var, coeff in row.items():
            if var in self.solved:
                expr, c0 = self.solved[var]
                const = const - coeff * c0
                for fv, fc in expr.items():
                    val = out.get(fv, Fraction(0)) + coeff * fc
                    if val:
                        out[fv] = val
                    else:
                        out.pop(fv, None)
            else:
                val = out.get(var, Fraction(0)) + coeff
                if val:
                    out[var] = val
                else:
                    out.pop(var, None)
        return out, const

    def add_row(self, row: dict, const) -> None:
        """Insert sum(coeff*var) = const and re-close the solved form."""
        const = Fraction(const)
        for var in row:
            self._order.setdefault(var, len(self._order))
        reduced, const = self._substitute({v: Fraction(c) for v, c in row.items()}, const)
        if not reduced:
            if const:
                self.inconsistent = True
                raise Inconsistent(f"0 = {const}")
            return
        pivot = min(reduced, key=lambda v: self._order[v])
        pc = reduced.pop(pivot)
        expr = {v: -c / pc for v, c in reduced.items()}
        c0 = const / pc
        self.solved[pivot] = (expr, c0)
        # eliminate the new pivot from every stored expression
        for var, (vexpr, vc) in list(self.solved.items()):
            if var == pivot or pivot not in vexpr:
                continue
            f = vexpr.pop(pivot)
            vc = vc + f * c0
            for fv, fc in expr.items():
                val = vexpr.get(fv, Fraction(0)) + f * fc
                if val:
                    vexpr[fv] = val
                else:
                    vexpr.pop(fv, None)
            self.solved[var] = (vexpr, vc)

    def expression(self, var) -> tuple[dict, Fraction]:
        """Solved form of var: (free-variable coefficients, constant)."""
        if var in self.solved:
            expr, c0 = self.solved[var]
            return dict(expr), c0
        return ({var: Fraction(1)}, Fraction(0))

    def pinned_value(self, var) -> Fraction | None:
        expr, c0 = self.expression(var)
        return c0 if not expr else None

    def evaluate(self, var, assignment: dict) -> Fraction:
        """Value of var once every free variable is assigned."""
        expr, c0 = self.expression(var)
        return c0 + sum((assignment[fv] * fc for fv, fc in expr.items()), Fraction(0))

    def free_variables(self, variables=None) -> list:
        if variables is None:
            variables = self._order  # every variable ever mentioned, insertion order
        return [v for v in variables if v not in self.solved]
