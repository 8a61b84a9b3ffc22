"""Exact scalar arithmetic and dense linear algebra over F_p and Q.

Scalars are plain Python values in canonical form: residues in ``[0, p)``
(ints) for a prime field, always-reduced ``fractions.Fraction`` for the
rationals.  A :class:`Field` object supplies the arithmetic; matrices and
subspaces carry their field.  Everything here is immutable after
construction and all operations are pure, so values can be shared freely
between concurrent tasks.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import SingularMatrixError


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; bases 2,3,5,7 are exact below 3.2e9.
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """A prime field F_p (``p`` > 0) or the rationals (``p`` == 0)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if p != 0:
            if p >= 2**31:
                raise ValueError("prime must be < 2**31, got %d" % p)
            if not _is_prime(p):
                raise ValueError("%d is not prime" % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, *a):
        raise AttributeError("Field is immutable")

    @staticmethod
    def prime(p: int) -> "Field":
        if p == 0:
            raise ValueError("characteristic 0 is Field.rationals()")
        return Field(p)

    @staticmethod
    def rationals() -> "Field":
        return Field(0)

    @property
    def is_prime_field(self) -> bool:
        return self.p != 0

    def characteristic(self) -> int:
        return self.p

    @property
    def order(self):
        """Number of elements, or None for the rationals."""
        return self.p if self.p else None

    def size_at_least(self, k: int) -> bool:
        return self.p == 0 or self.p >= k

    def size_greater(self, k: int) -> bool:
        return self.p == 0 or self.p > k

    def of(self, x):
        """Canonical representative of an int or Fraction in this field."""
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator == 1:
                    return x.numerator % self.p
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return x % self.p
        return x if isinstance(x, Fraction) else Fraction(x)

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return -a % self.p if self.p else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        """All field elements in canonical order (prime fields only)."""
        if not self.p:
            raise ValueError("the rationals are not enumerable")
        return range(self.p)

    def first_elements(self, k: int):
        """The first ``k`` canonical elements: 0, 1, 2, ...

        For F_p at most ``p`` are available; the rationals never run out.
        """
        if self.p:
            return list(range(min(k, self.p)))
        return [Fraction(i) for i in range(k)]

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "F%d" % self.p if self.p else "Q"


class DenseMatrix:
    """Immutable dense matrix with exact entries over a fixed field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries, cols: int | None = None):
        rows = tuple(tuple(field.of(x) for x in row) for row in entries)
        nrow = len(rows)
        ncol = len(rows[0]) if nrow else (cols or 0)
        for row in rows:
            if len(row) != ncol:
                raise ValueError("ragged rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", nrow)
        object.__setattr__(self, "cols", ncol)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, *a):
        raise AttributeError("DenseMatrix is immutable")

    @staticmethod
    def zeros(field, rows, cols) -> "DenseMatrix":
        z = field.zero
        return DenseMatrix(field, [[z] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(field, n) -> "DenseMatrix":
        z, o = field.zero, field.one
        return DenseMatrix(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def unit(field, rows, cols, i, j) -> "DenseMatrix":
        """The matrix with a single 1 at position (i, j)."""
        z = field.zero
        m = [[z] * cols for _ in range(rows)]
        m[i][j] = field.one
        return DenseMatrix(field, m)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, DenseMatrix)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.entries))

    def __add__(self, other):
        f = self.field
        return DenseMatrix(f, [
            [f.add(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self.entries, other.entries)
        ])

    def __sub__(self, other):
        f = self.field
        return DenseMatrix(f, [
            [f.sub(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self.entries, other.entries)
        ])

    def __neg__(self):
        f = self.field
        return DenseMatrix(f, [[f.neg(a) for a in row] for row in self.entries])

    def scale(self, c) -> "DenseMatrix":
        f = self.field
        c = f.of(c)
        return DenseMatrix(f, [[f.mul(c, a) for a in row] for row in self.entries])

    def __matmul__(self, other):
        return self.mul(other)

    def mul(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch: %dx%d @ %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        f = self.field
        bt = [other.column(j) for j in range(other.cols)]
        out = []
        if f.p:
            p = f.p
            for row in self.entries:
                out.append(tuple(sum(a * b for a, b in zip(row, col)) % p for col in bt))
        else:
            for row in self.entries:
                out.append(tuple(sum(a * b for a, b in zip(row, col)) for col in bt))
        return DenseMatrix(f, out, cols=other.cols)

    def mul_vector(self, v) -> tuple:
        f = self.field
        if f.p:
            return tuple(sum(a * b for a, b in zip(row, v)) % f.p for row in self.entries)
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def power(self, k: int) -> "DenseMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = DenseMatrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                out = out.mul(base)
            base = base.mul(base) if k > 1 else base
            k >>= 1
        return out

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(
            self.field,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def trace(self):
        f = self.field
        t = f.zero
        for i in range(min(self.rows, self.cols)):
            t = f.add(t, self.entries[i][i])
        return t

    def submatrix(self, row_indices, col_indices) -> "DenseMatrix":
        return DenseMatrix(self.field, [
            [self.entries[i][j] for j in col_indices] for i in row_indices
        ], cols=len(col_indices))

    def row(self, i) -> tuple:
        return self.entries[i]

    def column(self, j) -> tuple:
        return tuple(row[j] for row in self.entries)

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.entries for x in row)

    def flatten(self) -> tuple:
        """Row-major vectorization."""
        return tuple(x for row in self.entries for x in row)

    @staticmethod
    def from_flat(field, rows, cols, flat) -> "DenseMatrix":
        return DenseMatrix(
            field, [flat[i * cols:(i + 1) * cols] for i in range(rows)], cols=cols)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return "DenseMatrix(%r, [%s])" % (self.field, body)


def _eliminate(field, rows, ncols):
    """In-place Gauss-Jordan on a list of row lists.  Returns pivot columns."""
    pivots = []
    r = 0
    zero = field.zero
    for c in range(ncols):
        if r == len(rows):
            break
        src = next((i for i in range(r, len(rows)) if rows[i][c] != zero), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        inv = field.inv(rows[r][c])
        if inv != field.one:
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != zero:
                factor = rows[i][c]
                rows[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: DenseMatrix):
    """Reduced row echelon form.

    Returns ``(reduced, rank, pivots)`` where ``reduced`` is the unique
    RREF of ``m``, ``rank`` its number of nonzero rows and ``pivots`` the
    strictly increasing pivot column indices.
    """
    rows = [list(row) for row in m.entries]
    pivots = _eliminate(m.field, rows, m.cols)
    rank = len(pivots)
    return DenseMatrix(m.field, rows, cols=m.cols), rank, tuple(pivots)


def rank_of_rows(field, rows) -> int:
    """Rank of a list of equal-length scalar rows.  Does not mutate."""
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    return len(_eliminate(field, work, ncols))


class VectorSubspace:
    """A subspace of K^n held by its canonical RREF basis.

    Two subspaces are equal iff their basis grids are identical, which
    makes equality structural.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis, pivots):
        # Internal: callers go through from_vectors / zero / full.
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, *a):
        raise AttributeError("VectorSubspace is immutable")

    @staticmethod
    def from_vectors(field, ambient_dim, vectors) -> "VectorSubspace":
        rows = [[field.of(x) for x in v] for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("vector length != ambient dimension")
        pivots = _eliminate(field, rows, ambient_dim)
        basis = tuple(tuple(r) for r in rows[: len(pivots)])
        return VectorSubspace(field, ambient_dim, basis, tuple(pivots))

    @staticmethod
    def zero(field, ambient_dim) -> "VectorSubspace":
        return VectorSubspace(field, ambient_dim, (), ())

    @staticmethod
    def full(field, ambient_dim) -> "VectorSubspace":
        eye = DenseMatrix.identity(field, ambient_dim)
        return VectorSubspace(field, ambient_dim, eye.entries, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v) -> tuple:
        """Residual of ``v`` after reduction against the basis."""
        f = self.field
        v = [f.of(x) for x in v]
        for row, piv in zip(self.basis, self.pivots):
            c = v[piv]
            if c != f.zero:
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        return tuple(v)

    def member(self, v) -> bool:
        z = self.field.zero
        return all(x == z for x in self.reduce(v))

    def contains_subspace(self, other: "VectorSubspace") -> bool:
        return all(self.member(row) for row in other.basis)

    def sum(self, other: "VectorSubspace") -> "VectorSubspace":
        self._check_compatible(other)
        return VectorSubspace.from_vectors(
            self.field, self.ambient_dim, list(self.basis) + list(other.basis))

    def intersect(self, other: "VectorSubspace") -> "VectorSubspace":
        """Intersection via the kernel of the stacked coefficient system."""
        self._check_compatible(other)
        f = self.field
        k, l = self.dim, other.dim
        if k == 0 or l == 0:
            return VectorSubspace.zero(f, self.ambient_dim)
        # Columns: coefficients (a, b) with sum a_i self_i - sum b_j other_j = 0.
        system = DenseMatrix(f, [
            [self.basis[i][c] for i in range(k)]
            + [f.neg(other.basis[j][c]) for j in range(l)]
            for c in range(self.ambient_dim)
        ])
        coeffs = kernel(system)
        vectors = []
        for coeff in coeffs.basis:
            v = [f.zero] * self.ambient_dim
            for i in range(k):
                if coeff[i] != f.zero:
                    v = [f.add(x, f.mul(coeff[i], y)) for x, y in zip(v, self.basis[i])]
            vectors.append(v)
        return VectorSubspace.from_vectors(f, self.ambient_dim, vectors)

    def basis_vectors(self):
        return self.basis

    def _check_compatible(self, other):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different ambient spaces")

    def __eq__(self, other):
        return (
            isinstance(other, VectorSubspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return "VectorSubspace(%r, dim %d of K^%d)" % (self.field, self.dim, self.ambient_dim)


def kernel(m: DenseMatrix) -> VectorSubspace:
    """The right kernel {v : m v = 0} as a canonical subspace."""
    f = m.field
    reduced, rank, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for fc in free:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(reduced.entries[r][fc])
        vectors.append(v)
    return VectorSubspace.from_vectors(f, m.cols, vectors)


def solve_affine(a: DenseMatrix, b):
    """All solutions of ``a x = b``.

    Returns ``None`` when inconsistent, else ``(particular, directions)``
    with ``directions = kernel(a)``; every solution is the particular one
    plus a kernel element.
    """
    f = a.field
    b = [f.of(x) for x in b]
    if len(b) != a.rows:
        raise ValueError("right-hand side length != row count")
    aug = DenseMatrix(f, [list(row) + [b[i]] for i, row in enumerate(a.entries)]) \
        if a.rows else DenseMatrix.zeros(f, 0, a.cols + 1)
    reduced, rank, pivots = rref(aug)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [f.zero] * a.cols
    for r, pc in enumerate(pivots):
        x[pc] = reduced.entries[r][a.cols]
    return tuple(x), kernel(a)


def invert(m: DenseMatrix) -> DenseMatrix:
    """Inverse of a square matrix; raises SingularMatrixError if rank-deficient."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    f = m.field
    n = m.rows
    eye = DenseMatrix.identity(f, n)
    aug = DenseMatrix(f, [list(mr) + list(ir) for mr, ir in zip(m.entries, eye.entries)])
    reduced, rank, _ = rref(aug)
    if rank < n or any(reduced.entries[i][i] != f.one for i in range(n)):
        raise SingularMatrixError("matrix has rank < %d" % n)
    return DenseMatrix(f, [row[n:] for row in reduced.entries])


def all_vectors(field, n):
    """All vectors of K^n in lexicographic order (prime fields only)."""
    for tup in itertools.product(field.elements(), repeat=n):
        yield tup


def all_matrices(field, rows, cols):
    """All rows x cols matrices, lexicographic by row-major entries."""
    for flat in itertools.product(field.elements(), repeat=rows * cols):
        yield DenseMatrix.from_flat(field, rows, cols, flat)


def all_subspaces(field, ambient_dim, dim):
    """All dim-dimensional subspaces of K^ambient_dim (prime fields only).

    Enumerates canonical RREF bases directly: every subspace appears
    exactly once, grouped by pivot-column pattern.
    """
    for pivots in itertools.combinations(range(ambient_dim), dim):
        pivot_set = set(pivots)
        free_slots = [
            (r, c)
            for r in range(dim)
            for c in range(pivots[r] + 1, ambient_dim)
            if c not in pivot_set
        ]
        for values in itertools.product(field.elements(), repeat=len(free_slots)):
            rows = [[field.zero] * ambient_dim for _ in range(dim)]
            for r in range(dim):
                rows[r][pivots[r]] = field.one
            for (r, c), v in zip(free_slots, values):
                rows[r][c] = v
            basis = tuple(tuple(r) for r in rows)
            yield VectorSubspace(field, ambient_dim, basis, tuple(pivots))
