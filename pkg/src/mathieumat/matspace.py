"""K-subspaces of Mat_n(K): trace duality, conjugation, filtration, profile.

A subspace is held as a canonical RREF basis of its row-major
vectorization, so subspace equality is structural.  Levels ``k`` of the
column filtration run from 0 (zero space) to n (the whole space);
coordinate indices such as the ``k`` of ``e_k`` are 1-based to match the
usual linear-algebra convention, while raw matrix entries stay 0-based.
"""

from __future__ import annotations

import itertools

from .errors import FieldTooSmallError
from .linalg import (
    DenseMatrix,
    Field,
    VectorSubspace,
    invert,
    kernel,
    rank_of_rows,
)
from .multipoly import generic_rank_of_action


class MatrixSubspace:
    """A K-linear subspace of Mat_n(K) with a canonical basis."""

    __slots__ = ("field", "n", "basis", "basis_matrices")

    def __init__(self, field: Field, n: int, basis: VectorSubspace):
        if basis.field != field or basis.ambient_dim != n * n:
            raise ValueError("basis does not live in Mat_%d" % n)
        mats = tuple(DenseMatrix.from_flat(field, n, n, row) for row in basis.basis)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "basis_matrices", mats)

    def __setattr__(self, *a):
        raise AttributeError("MatrixSubspace is immutable")

    @staticmethod
    def from_matrices(field, n, mats) -> "MatrixSubspace":
        vecs = []
        for m in mats:
            if not isinstance(m, DenseMatrix):
                m = DenseMatrix(field, m)
            if m.rows != n or m.cols != n or m.field != field:
                raise ValueError("generator is not an n x n matrix over the field")
            vecs.append(m.flatten())
        return MatrixSubspace(field, n, VectorSubspace.from_vectors(field, n * n, vecs))

    @staticmethod
    def zero_space(field, n) -> "MatrixSubspace":
        return MatrixSubspace(field, n, VectorSubspace.zero(field, n * n))

    @staticmethod
    def full_space(field, n) -> "MatrixSubspace":
        return MatrixSubspace(field, n, VectorSubspace.full(field, n * n))

    @property
    def dim(self) -> int:
        return self.basis.dim

    def contains(self, m: DenseMatrix) -> bool:
        return self.basis.member(m.flatten())

    def contains_identity(self) -> bool:
        return self.contains(DenseMatrix.identity(self.field, self.n))

    def sum(self, other: "MatrixSubspace") -> "MatrixSubspace":
        return MatrixSubspace(self.field, self.n, self.basis.sum(other.basis))

    def intersect(self, other: "MatrixSubspace") -> "MatrixSubspace":
        return MatrixSubspace(self.field, self.n, self.basis.intersect(other.basis))

    def adjoin_identity(self) -> "MatrixSubspace":
        """The sum with the scalar line K*I."""
        eye = DenseMatrix.identity(self.field, self.n)
        return self.sum(MatrixSubspace.from_matrices(self.field, self.n, [eye]))

    def elements(self):
        """All members (prime fields), lexicographic by basis coefficients."""
        coeffs = self.field.elements()
        for tup in itertools.product(coeffs, repeat=self.dim):
            m = DenseMatrix.zeros(self.field, self.n, self.n)
            for c, b in zip(tup, self.basis_matrices):
                if c:
                    m = m + b.scale(c)
            yield m

    def __eq__(self, other):
        return (
            isinstance(other, MatrixSubspace)
            and self.field == other.field
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.n, self.basis))

    def __repr__(self):
        return "MatrixSubspace(%r, dim %d of Mat_%d)" % (self.field, self.dim, self.n)


def trace_pairing(c: DenseMatrix, m: DenseMatrix):
    """tr(c m) computed as the Hadamard sum: sum_ij c_ij m_ji."""
    f = c.field
    total = f.zero
    for i in range(c.rows):
        for j in range(c.cols):
            total = f.add(total, f.mul(c.entries[i][j], m.entries[j][i]))
    return total


def constraint_space(space: MatrixSubspace) -> MatrixSubspace:
    """All C with tr(C M) = 0 for every M in the space (the trace dual).

    Its dimension is n^2 - dim(space); applying it twice returns the
    original space.
    """
    f, n = space.field, space.n
    # tr(C M) = vec(M^T) . vec(C), so the dual is a kernel.
    rows = [m.transpose().flatten() for m in space.basis_matrices]
    system = DenseMatrix(f, rows, cols=n * n)
    return MatrixSubspace(f, n, kernel(system))


def conjugate(space: MatrixSubspace, t: DenseMatrix) -> MatrixSubspace:
    """The subspace t^-1 (space) t; raises SingularMatrixError for bad t."""
    if t.rows != space.n or t.cols != space.n:
        raise ValueError("conjugator has wrong size")
    t_inv = invert(t)
    return MatrixSubspace.from_matrices(
        space.field, space.n,
        [t_inv.mul(m).mul(t) for m in space.basis_matrices])


def filtration_level(space: MatrixSubspace, k: int) -> MatrixSubspace:
    """Members whose columns beyond the k-th vanish (level k = 0..n).

    Level 0 is the zero space, level n the space itself, and the levels
    form a nested chain.
    """
    n = space.n
    if not 0 <= k <= n:
        raise ValueError("level %d out of range 0..%d" % (k, n))
    if k == n:
        return space
    f = space.field
    mats = space.basis_matrices
    if not mats:
        return space
    # Linear conditions on basis coefficients: entries in columns > k vanish.
    rows = [
        [m.entries[r][c] for m in mats]
        for r in range(n)
        for c in range(k, n)
    ]
    coeffs = kernel(DenseMatrix(f, rows, cols=len(mats)))
    gens = []
    for coeff in coeffs.basis:
        g = DenseMatrix.zeros(f, n, n)
        for ci, m in zip(coeff, mats):
            if ci:
                g = g + m.scale(ci)
        gens.append(g)
    return MatrixSubspace.from_matrices(f, n, gens)


def column_space(space: MatrixSubspace, vec) -> VectorSubspace:
    """span{C vec : C in space} inside K^n."""
    f, n = space.field, space.n
    if len(vec) != n:
        raise ValueError("vector has wrong length")
    return VectorSubspace.from_vectors(
        f, n, [m.mul_vector(vec) for m in space.basis_matrices])


def column_space_dim(space: MatrixSubspace, vec) -> int:
    """dim of column_space without building the subspace object."""
    if space.dim == 0:
        return 0
    return rank_of_rows(space.field, [m.mul_vector(vec) for m in space.basis_matrices])


def rct(m: DenseMatrix, r: int) -> DenseMatrix:
    """The top-right block: first r rows, last n-r columns (1 <= r <= n-1)."""
    n = m.rows
    if not 1 <= r <= n - 1:
        raise ValueError("r = %d out of range 1..%d" % (r, n - 1))
    return m.submatrix(range(r), range(r, n))


def is_rct_zero(m: DenseMatrix, r: int) -> bool:
    n = m.rows
    if not 1 <= r <= n - 1:
        raise ValueError("r = %d out of range 1..%d" % (r, n - 1))
    z = m.field.zero
    return all(m.entries[i][j] == z for i in range(r) for j in range(r, n))


def rct_zero_members(space: MatrixSubspace, r: int) -> MatrixSubspace:
    """The subspace of members whose top-right r x (n-r) block vanishes."""
    f, n = space.field, space.n
    if not 1 <= r <= n - 1:
        raise ValueError("r = %d out of range 1..%d" % (r, n - 1))
    mats = space.basis_matrices
    if not mats:
        return space
    rows = [
        [m.entries[i][j] for m in mats]
        for i in range(r)
        for j in range(r, n)
    ]
    coeffs = kernel(DenseMatrix(f, rows, cols=len(mats)))
    gens = []
    for coeff in coeffs.basis:
        g = DenseMatrix.zeros(f, n, n)
        for ci, m in zip(coeff, mats):
            if ci:
                g = g + m.scale(ci)
        gens.append(g)
    return MatrixSubspace.from_matrices(f, n, gens)


class BinaryProfile:
    """The 0/1 matrix B of a filtered space with its column statistics.

    ``B[i][j]`` (0-based grid) is 1 iff the coordinate projection
    e_{i+1}^t (level j+1 column space) is nonzero; ``b[j]`` counts the
    ones in column j; ``col_dims[j]`` is the dimension of the level-(j+1)
    column space; ``d[k]`` is the generic dimension of level k (0..n).
    """

    __slots__ = ("n", "B", "b", "col_dims", "d")

    def __init__(self, n, B, b, col_dims, d):
        B = tuple(tuple(int(x) for x in row) for row in B)
        b = tuple(int(x) for x in b)
        col_dims = tuple(int(x) for x in col_dims)
        d = tuple(int(x) for x in d)
        if len(B) != n or any(len(row) != n for row in B):
            raise ValueError("B must be n x n")
        if any(x not in (0, 1) for row in B for x in row):
            raise ValueError("B entries must be 0/1")
        if len(b) != n or len(col_dims) != n or len(d) != n + 1:
            raise ValueError("bad vector lengths")
        for j in range(n):
            if b[j] != sum(B[i][j] for i in range(n)):
                raise ValueError("b[%d] does not match column of B" % j)
            if b[j] < col_dims[j]:
                raise ValueError("b[%d] < column dimension" % j)
        if d[0] != 0 or any(d[k] > d[k + 1] for k in range(n)):
            raise ValueError("d must be nondecreasing from 0")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "col_dims", col_dims)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *a):
        raise AttributeError("BinaryProfile is immutable")

    def rows_increasing(self) -> bool:
        """B_ij = 0 implies B_i(j-1) = 0: ones extend to the right."""
        return all(
            self.B[i][j] <= self.B[i][j + 1]
            for i in range(self.n) for j in range(self.n - 1))

    def columns_decreasing_above_diagonal(self) -> bool:
        """Within each column, above the diagonal the ones sit on top."""
        return all(
            self.B[i][j] >= self.B[i + 1][j]
            for j in range(self.n) for i in range(j - 1))

    def __eq__(self, other):
        return (
            isinstance(other, BinaryProfile)
            and (self.n, self.B, self.b, self.col_dims, self.d) ==
                (other.n, other.B, other.b, other.col_dims, other.d)
        )

    def __hash__(self):
        return hash((self.n, self.B, self.b, self.col_dims, self.d))

    def __repr__(self):
        grid = "; ".join("".join(str(x) for x in row) for row in self.B)
        return "BinaryProfile(B=[%s], b=%r, d=%r)" % (grid, self.b, self.d)


def filtration(space: MatrixSubspace):
    """All levels 0..n of the column filtration, as a list."""
    return [filtration_level(space, k) for k in range(space.n + 1)]


def binary_profile(space: MatrixSubspace) -> BinaryProfile:
    """The binary matrix B with counts b, column dims, and generic dims d."""
    f, n = space.field, space.n
    levels = filtration(space)
    B = [[0] * n for _ in range(n)]
    col_dims = []
    for j in range(1, n + 1):
        ej = tuple(f.one if i == j - 1 else f.zero for i in range(n))
        cs = column_space(levels[j], ej)
        col_dims.append(cs.dim)
        for row in cs.basis:
            for i in range(n):
                if row[i] != f.zero:
                    B[i][j - 1] = 1
    b = [sum(B[i][j] for i in range(n)) for j in range(n)]
    d = [generic_rank_of_action(levels[k]) for k in range(n + 1)]
    return BinaryProfile(n, B, b, col_dims, d)


def find_generic_vector(space: MatrixSubspace, k: int, require_pivot_one=False):
    """A vector v with v_{k+1} = ... = v_n = 0 whose column space at
    level k has the full generic dimension d_k; with ``require_pivot_one``
    additionally v_k = 1.

    Deterministic: scans the grid S^k, S the first min(#K, d_k + 1)
    canonical field elements, in lexicographic order.  The vanishing
    bound for the top minor guarantees a witness whenever #K >= d_k
    (#K > d_k for the pivot form); below those bounds the scan may still
    succeed, and FieldTooSmallError is raised only when it does not.
    """
    f, n = space.field, space.n
    if require_pivot_one and not 1 <= k <= n:
        raise ValueError("pivot form needs a coordinate level 1..n")
    level = filtration_level(space, k)
    dk = generic_rank_of_action(level)
    zero, one = f.zero, f.one
    if dk == 0:
        v = [zero] * n
        if require_pivot_one:
            v[k - 1] = one
        return tuple(v)
    grid = f.first_elements(dk + 1)
    tail = (zero,) * (n - k)
    for point in itertools.product(grid, repeat=k):
        if require_pivot_one and point[k - 1] == zero:
            continue
        v = point + tail
        if column_space_dim(level, v) == dk:
            if require_pivot_one and point[k - 1] != one:
                inv = f.inv(point[k - 1])
                v = tuple(f.mul(inv, x) for x in v)
            return v
    guaranteed = f.size_greater(dk) if require_pivot_one else f.size_at_least(dk)
    if guaranteed:
        raise AssertionError(
            "no generic vector found at level %d despite #K bound; "
            "this indicates a bug in the generic-rank machinery" % k)
    raise FieldTooSmallError(
        "no vector over K attains generic dimension %d at level %d "
        "(guaranteed only for #K %s %d)"
        % (dk, k, ">" if require_pivot_one else ">=", dk + (1 if require_pivot_one else 0)),
        needed=dk + (1 if require_pivot_one else 0))
