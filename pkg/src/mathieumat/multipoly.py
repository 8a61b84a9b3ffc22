"""Sparse multivariate polynomials over an exact field and generic ranks.

The rank of a polynomial matrix over the rational function field
K(x_1, ..., x_n) is computed by fraction-free (Bareiss) elimination with
exact polynomial division, never by randomized evaluation: small-field
instances can defeat evaluation at field points, and exactness is the
whole point of this layer.

Exponent vectors are plain tuples; the zero polynomial stores no terms,
so equality of term maps is equality of polynomials.
"""

from __future__ import annotations

import itertools

from .linalg import DenseMatrix, Field


class MultiPoly:
    """A polynomial in ``nvars`` variables with exact coefficients.

    Terms map exponent tuples to nonzero canonical coefficients.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms=None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError("bad exponent vector %r" % (exps,))
                coeff = field.of(coeff)
                if coeff != field.zero:
                    clean[exps] = coeff
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    @staticmethod
    def zero(field, nvars) -> "MultiPoly":
        return MultiPoly(field, nvars)

    @staticmethod
    def constant(field, nvars, c) -> "MultiPoly":
        return MultiPoly(field, nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(field, nvars, i) -> "MultiPoly":
        """The variable x_i, 1-based."""
        exps = [0] * nvars
        exps[i - 1] = 1
        return MultiPoly(field, nvars, {tuple(exps): field.one})

    @staticmethod
    def linear_form(field, coeffs) -> "MultiPoly":
        """sum coeffs[i] * x_{i+1} over as many variables as coefficients."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            exps = [0] * n
            exps[i] = 1
            terms[tuple(exps)] = c
        return MultiPoly(field, n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Maximum total degree, -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.nvars, tuple(sorted(self.terms.items()))))

    def _compatible(self, other):
        if self.field != other.field or self.nvars != other.nvars:
            raise ValueError("polynomials over different rings")

    def __add__(self, other):
        self._compatible(other)
        f = self.field
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = f.add(out.get(exps, f.zero), c)
            if s == f.zero:
                out.pop(exps, None)
            else:
                out[exps] = s
        return MultiPoly(f, self.nvars, out)

    def __neg__(self):
        f = self.field
        return MultiPoly(f, self.nvars, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._compatible(other)
        f = self.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = f.add(out.get(e, f.zero), f.mul(c1, c2))
                if s == f.zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(f, self.nvars, out)

    def scale(self, c) -> "MultiPoly":
        f = self.field
        c = f.of(c)
        return MultiPoly(f, self.nvars, {e: f.mul(c, v) for e, v in self.terms.items()})

    def evaluate(self, point):
        """Value at a point given as a sequence of ``nvars`` scalars."""
        if len(point) != self.nvars:
            raise ValueError("point arity %d != %d variables" % (len(point), self.nvars))
        f = self.field
        point = [f.of(x) for x in point]
        total = f.zero
        for exps, coeff in self.terms.items():
            v = coeff
            for x, e in zip(point, exps):
                for _ in range(e):
                    v = f.mul(v, x)
            total = f.add(total, v)
        return total

    def _lead(self):
        """Leading (exponents, coefficient) under lexicographic order."""
        e = max(self.terms)
        return e, self.terms[e]

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            mono = "*".join(
                "x%d^%d" % (i + 1, e) if e > 1 else "x%d" % (i + 1)
                for i, e in enumerate(exps) if e)
            c = self.terms[exps]
            bits.append(("%s*%s" % (c, mono)) if mono else str(c))
        return "MultiPoly(%s)" % " + ".join(bits)


def divexact(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Exact division of polynomials; raises if the remainder is nonzero.

    Inexactness here always indicates a bug in the caller (fraction-free
    elimination only ever divides by earlier pivots), so fail loudly.
    """
    num._compatible(den)
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    f = num.field
    den_lead_e, den_lead_c = den._lead()
    den_lead_inv = f.inv(den_lead_c)
    quot = {}
    rem = dict(num.terms)
    while rem:
        e = max(rem)
        qe = tuple(a - b for a, b in zip(e, den_lead_e))
        if any(x < 0 for x in qe):
            raise ArithmeticError("inexact polynomial division")
        qc = f.mul(rem[e], den_lead_inv)
        quot[qe] = qc
        for de, dc in den.terms.items():
            te = tuple(a + b for a, b in zip(qe, de))
            s = f.sub(rem.get(te, f.zero), f.mul(qc, dc))
            if s == f.zero:
                rem.pop(te, None)
            else:
                rem[te] = s
    return MultiPoly(f, num.nvars, quot)


class PolyMatrix:
    """Dense matrix of MultiPoly entries over a shared ring."""

    __slots__ = ("field", "nvars", "rows", "cols", "entries")

    def __init__(self, field, nvars, entries, cols=None):
        grid = tuple(tuple(entries_row) for entries_row in entries)
        nrow = len(grid)
        ncol = len(grid[0]) if nrow else (cols or 0)
        for row in grid:
            if len(row) != ncol:
                raise ValueError("ragged rows")
            for p in row:
                if not isinstance(p, MultiPoly) or p.field != field or p.nvars != nvars:
                    raise ValueError("entry over a different ring")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "rows", nrow)
        object.__setattr__(self, "cols", ncol)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, *a):
        raise AttributeError("PolyMatrix is immutable")

    @staticmethod
    def from_constant(m: DenseMatrix, nvars=0) -> "PolyMatrix":
        f = m.field
        return PolyMatrix(f, nvars, [
            [MultiPoly.constant(f, nvars, x) for x in row] for row in m.entries
        ], cols=m.cols)

    def evaluate(self, point) -> DenseMatrix:
        return DenseMatrix(self.field, [
            [p.evaluate(point) for p in row] for row in self.entries
        ], cols=self.cols)

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and (self.field, self.nvars, self.entries) ==
                (other.field, other.nvars, other.entries)
        )

    def __hash__(self):
        return hash((self.field, self.nvars, self.entries))


def poly_matrix_rank(m: PolyMatrix) -> int:
    """Rank of ``m`` over the function field K(x_1..x_nvars).

    Fraction-free elimination: every division is by a previous pivot and
    provably exact; a nonzero remainder aborts the run.
    """
    work = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    if nrows == 0 or ncols == 0:
        return 0
    one = MultiPoly.constant(m.field, m.nvars, m.field.one)
    prev = one
    pr = 0
    for c in range(ncols):
        if pr >= nrows:
            break
        src = next((r for r in range(pr, nrows) if not work[r][c].is_zero()), None)
        if src is None:
            continue
        work[pr], work[src] = work[src], work[pr]
        pivot = work[pr][c]
        for r in range(pr + 1, nrows):
            below = work[r][c]
            for cc in range(c + 1, ncols):
                num = pivot * work[r][cc] - below * work[pr][cc]
                work[r][cc] = num if num.is_zero() else divexact(num, prev)
            work[r][c] = MultiPoly.zero(m.field, m.nvars)
        prev = pivot
        pr += 1
    return pr


def find_nonvanishing(f: MultiPoly, s):
    """First grid point of s^nvars (lexicographic in the given order of
    ``s``) where ``f`` is nonzero, or None if ``f`` vanishes on the grid.

    When ``f`` is nonzero, a witness is guaranteed if #s > deg f, or if
    ``f`` is homogeneous with 0 in s and #s >= max(deg f, 2).
    """
    vals = [f.field.of(x) for x in s]
    if len(set(vals)) != len(vals):
        raise ValueError("grid values must be distinct")
    if f.nvars == 0:
        return () if not f.is_zero() else None
    for point in itertools.product(vals, repeat=f.nvars):
        if f.evaluate(point) != f.field.zero:
            return point
    return None


def action_matrix(space) -> PolyMatrix:
    """The n x dim matrix whose j-th column is (j-th basis matrix) * x."""
    f, n = space.field, space.n
    mats = space.basis_matrices
    cols = [[MultiPoly.linear_form(f, mat.row(i)) for i in range(n)] for mat in mats]
    return PolyMatrix(f, n, [[col[i] for col in cols] for i in range(n)], cols=len(mats))


def generic_rank_of_action(space) -> int:
    """dim over K(x) of the span of C*x for C in the subspace.

    Independent of the chosen basis of the subspace.
    """
    if space.dim == 0:
        return 0
    return poly_matrix_rank(action_matrix(space))


def generic_rank_univariate(space, k: int, j: int) -> int:
    """Rank over K(x_j) of the columns C*(e_k + x_j e_j), C in the basis.

    ``k`` and ``j`` are 1-based coordinate indices.
    """
    f, n = space.field, space.n
    if not (1 <= k <= n and 1 <= j <= n):
        raise ValueError("coordinate indices out of range")
    if space.dim == 0:
        return 0
    cols = []
    for mat in space.basis_matrices:
        col = []
        for i in range(n):
            col.append(MultiPoly(f, 1, {
                (0,): mat.entries[i][k - 1],
                (1,): mat.entries[i][j - 1],
            }))
        cols.append(col)
    pm = PolyMatrix(f, 1, [[col[i] for col in cols] for i in range(n)], cols=len(cols))
    return poly_matrix_rank(pm)
