"""Conjugation normal form for identity-adjoined constraint spaces.

The normalization drives the binary profile of a filtered subspace of
Mat_n(K) into shape by a sequence of three kinds of conjugation moves:

* ``generic_vector`` -- send a grid-found generic vector to e_k, making
  the level-k column space attain its generic dimension;
* ``unit_triangular`` -- a lower-triangular conjugation that turns the
  level-k column space into a span of standard basis unit vectors;
* ``permutation`` -- reorder leading coordinates so the k-th profile
  column becomes decreasing above the diagonal.

Moves are applied for k = n down to 1.  When the field is strictly
larger than min(d_{n-1}, n-1) after the first move, a single descending
pass with all three moves per level suffices; otherwise the
generic-vector pass runs in full first and the unit-triangular pass
second.  Every move is logged with its conjugator so a run can be
replayed and audited move by move.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldTooSmallError, PreconditionViolated
from .linalg import DenseMatrix
from .matspace import (
    MatrixSubspace,
    binary_profile,
    column_space,
    column_space_dim,
    conjugate,
    constraint_space,
    filtration_level,
    find_generic_vector,
    rct_zero_members,
)
from .multipoly import generic_rank_of_action, generic_rank_univariate

DOUBLE_PASS = "double_pass"
SINGLE_PASS = "single_pass"


@dataclass(frozen=True)
class Move:
    kind: str        # generic_vector | unit_triangular | permutation
    level: int
    t: DenseMatrix


@dataclass(frozen=True)
class NormalizationResult:
    c_n_input: MatrixSubspace
    t_total: DenseMatrix
    c_n_final: MatrixSubspace
    profile: object
    branch: str
    log: tuple


@dataclass(frozen=True)
class RctCertificate:
    """A conjugator t and block size r after which every member of the
    identity-adjoined conjugated space with zero top-right block is scalar."""
    t: DenseMatrix
    r: int


def pencil_condition(space: MatrixSubspace, j: int, k: int) -> bool:
    """Whether the level-j column space already has the dimension of the
    generic line e_k + x e_j (1-based coordinates).

    When true, equality holds; the normalization arranges this at every
    level, which forces the profile rows to be increasing.
    """
    f, n = space.field, space.n
    level = filtration_level(space, j)
    ej = tuple(f.one if i == j - 1 else f.zero for i in range(n))
    return column_space_dim(level, ej) >= generic_rank_univariate(level, k, j)


def _basis_vector(field, n, k):
    return tuple(field.one if i == k - 1 else field.zero for i in range(n))


def move_generic_vector(space: MatrixSubspace, k: int, pivot=False):
    """Conjugate so the level-k column space attains its generic dimension.

    Returns ``(t, conjugated)``.  The conjugator's columns right of k are
    identity columns; with ``pivot`` the found vector has k-th entry 1
    and t is the identity outside column k.  No-op (t = I) when the
    level is already saturated or zero.
    """
    f, n = space.field, space.n
    eye = DenseMatrix.identity(f, n)
    if k == 0:
        return eye, space
    level = filtration_level(space, k)
    dk = generic_rank_of_action(level)
    if dk == 0 or column_space_dim(level, _basis_vector(f, n, k)) == dk:
        return eye, space
    v = find_generic_vector(space, k, require_pivot_one=pivot)
    entries = [list(row) for row in eye.entries]
    for i in range(n):
        entries[i][k - 1] = v[i]
    if v[k - 1] == f.zero:
        # Keep t invertible: the column of the last nonzero coordinate of
        # v moves to e_k.  Only columns left of k change; nothing at
        # levels above k depends on those.
        tstar = max(i for i in range(n) if v[i] != f.zero)
        for i in range(n):
            entries[i][tstar] = f.one if i == k - 1 else f.zero
    t = DenseMatrix(f, entries)
    out = conjugate(space, t)
    assert column_space_dim(filtration_level(out, k), _basis_vector(f, n, k)) == dk
    return t, out


def move_unit_triangular(space: MatrixSubspace, k: int):
    """Lower-triangular conjugation making the level-k column space a
    span of standard basis unit vectors (so its one-count equals its
    dimension).  No-op when it already is."""
    f, n = space.field, space.n
    eye = DenseMatrix.identity(f, n)
    if k == 0:
        return eye, space
    cs = column_space(filtration_level(space, k), _basis_vector(f, n, k))
    if all(sum(1 for x in row if x != f.zero) == 1 for row in cs.basis):
        return eye, space
    entries = [list(row) for row in eye.entries]
    # RREF rows have distinct leading coordinates; read bottom-up and
    # plant each as the column of its own leading position.
    for row in reversed(cs.basis):
        lead = next(i for i in range(n) if row[i] != f.zero)
        for i in range(n):
            entries[i][lead] = row[i]
    t = DenseMatrix(f, entries)
    return t, conjugate(space, t)


def move_permutation(space: MatrixSubspace, k: int):
    """Permute leading coordinates so column k of the profile becomes
    decreasing above the diagonal.  The permutation is stable and fixes
    every coordinate from the lowest 1 of the column downward."""
    f, n = space.field, space.n
    eye = DenseMatrix.identity(f, n)
    if k == 0:
        return eye, space
    cs = column_space(filtration_level(space, k), _basis_vector(f, n, k))
    ind = [0] * n
    for row in cs.basis:
        for i in range(n):
            if row[i] != f.zero:
                ind[i] = 1
    above = ind[:k - 1]
    if all(a >= b for a, b in zip(above, above[1:])):
        return eye, space
    s = max(i for i in range(k - 1) if ind[i]) + 1
    order = sorted(range(s), key=lambda i: (-ind[i], i))
    entries = [[f.zero] * n for _ in range(n)]
    for new, old in enumerate(order):
        entries[new][old] = f.one
    for i in range(s, n):
        entries[i][i] = f.one
    perm = DenseMatrix(f, entries)          # perm . w  sorts the indicator
    t = perm.transpose()                    # = perm^(-1)
    return t, conjugate(space, t)


class NormalizationError(AssertionError):
    """A postcondition that cannot fail short of a bug did; carries the move log."""

    def __init__(self, message, log):
        dump = "\n".join(
            "  %-16s level %d, t=%r" % (m.kind, m.level, m.t) for m in log)
        super().__init__("%s\nmove log:\n%s" % (message, dump or "  (empty)"))
        self.log = tuple(log)


def normalize(space: MatrixSubspace) -> NormalizationResult:
    """Run the full profile normalization on an arbitrary subspace of
    Mat_n(K).

    Requires #K >= d_n (the generic dimension of the whole space);
    raises FieldTooSmallError otherwise.  The result's profile satisfies,
    machine-checked before returning:

    * b_j = dim(level-j column space) = d_j for every j;
    * rows of B increasing;
    * columns of B decreasing above the diagonal whenever
      #K > min(b_{n-1}, n-1);
    * when the identity belongs to the space, additionally
      b_n > min(b_{n-1}, n-1) and B_{(n-1)n} >= B_{n(n-1)}.
    """
    f, n = space.field, space.n
    d_top = generic_rank_of_action(space)
    if not f.size_at_least(d_top):
        raise FieldTooSmallError(
            "normalization needs #K >= %d" % d_top, needed=d_top)
    log = []
    cur = space

    def apply(kind, k, move):
        nonlocal cur
        t, cur = move
        if t != DenseMatrix.identity(f, n):
            log.append(Move(kind, k, t))

    apply("generic_vector", n, move_generic_vector(cur, n))
    d_next = generic_rank_of_action(filtration_level(cur, n - 1))
    branch = SINGLE_PASS if f.size_greater(min(d_next, n - 1)) else DOUBLE_PASS

    if branch == SINGLE_PASS:
        for k in range(n, 0, -1):
            dk = generic_rank_of_action(filtration_level(cur, k))
            if dk == n:
                if k < n:
                    apply("generic_vector", k, move_generic_vector(cur, k))
                continue
            if k < n:
                apply("generic_vector", k, move_generic_vector(cur, k, pivot=True))
            apply("unit_triangular", k, move_unit_triangular(cur, k))
            apply("permutation", k, move_permutation(cur, k))
    else:
        for k in range(n - 1, 0, -1):
            apply("generic_vector", k, move_generic_vector(cur, k))
        for k in range(n, 0, -1):
            apply("unit_triangular", k, move_unit_triangular(cur, k))

    t_total = DenseMatrix.identity(f, n)
    for move in log:
        t_total = t_total.mul(move.t)
    profile = binary_profile(cur)
    result = NormalizationResult(
        c_n_input=space, t_total=t_total, c_n_final=cur,
        profile=profile, branch=branch, log=tuple(log))
    _check_postconditions(result, d_top)
    return result


def _check_postconditions(result: NormalizationResult, d_top: int):
    prof = result.profile
    space = result.c_n_final
    f, n = space.field, space.n
    log = result.log

    def ensure(ok, what):
        if not ok:
            raise NormalizationError("postcondition failed: " + what, log)

    ensure(result.c_n_final == conjugate(result.c_n_input, result.t_total),
           "final space is the conjugate of the input by t_total")
    ensure(prof.d[n] == d_top, "top generic dimension unchanged")
    ensure(prof.b == prof.col_dims == tuple(prof.d[1:]),
           "b_j = dim column space = d_j for all j")
    ensure(prof.rows_increasing(), "rows of B increasing")
    b_next = prof.b[n - 2] if n >= 2 else 0
    if f.size_greater(min(b_next, n - 1)):
        ensure(prof.columns_decreasing_above_diagonal(),
               "columns of B decreasing above the diagonal")
    if space.contains_identity():
        ensure(prof.b[n - 1] > min(b_next, n - 1),
               "b_n exceeds min(b_{n-1}, n-1)")
        if n >= 2:
            ensure(prof.B[n - 2][n - 1] >= prof.B[n - 1][n - 2],
                   "B_{(n-1)n} >= B_{n(n-1)}")


def rct_zero_is_scalar(space: MatrixSubspace, r: int) -> bool:
    """Whether, inside the identity-adjoined space, the members with zero
    top-right r x (n-r) block are exactly the scalar line."""
    f, n = space.field, space.n
    scalars = MatrixSubspace.from_matrices(f, n, [DenseMatrix.identity(f, n)])
    return rct_zero_members(space.adjoin_identity(), r) == scalars


def rct_certificate(m: MatrixSubspace) -> RctCertificate:
    """Find a conjugation after which the constraint space of ``m`` plus
    the scalar line meets {zero top-right block} only in the scalars.

    Preconditions: the identity is not a constraint of ``m`` and the
    constraint space has dimension strictly between 0 and n; the field
    must have at least d_n elements.  Under these the normalization
    always succeeds, with r + 1 = d_n.
    """
    f, n = m.field, m.n
    c = constraint_space(m)
    if c.contains_identity():
        raise PreconditionViolated("the identity is a constraint of the space")
    if not 0 < c.dim < n:
        raise PreconditionViolated(
            "constraint dimension %d must lie strictly between 0 and %d"
            % (c.dim, n))
    cn = c.adjoin_identity()
    d_top = generic_rank_of_action(cn)
    if not f.size_at_least(d_top):
        raise FieldTooSmallError(
            "certificate needs #K >= %d" % d_top, needed=d_top)
    result = normalize(cn)
    r = d_top - 1
    assert 1 <= r <= n - 1, "generic dimension out of range: %d" % d_top
    if not rct_zero_is_scalar(conjugate(c, result.t_total), r):
        raise NormalizationError(
            "normalized space still has a non-scalar member with zero "
            "top-right block", result.log)
    return RctCertificate(t=result.t_total, r=r)
