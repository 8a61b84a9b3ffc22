import random

import pytest

from mathieumat.errors import FieldTooSmallError, PreconditionViolated
from mathieumat.linalg import DenseMatrix, Field, invert
from mathieumat.matspace import (
    MatrixSubspace,
    binary_profile,
    column_space,
    column_space_dim,
    conjugate,
    constraint_space,
    filtration_level,
)
from mathieumat.multipoly import generic_rank_of_action
from mathieumat.normalize import (
    DOUBLE_PASS,
    SINGLE_PASS,
    move_generic_vector,
    move_permutation,
    move_unit_triangular,
    normalize,
    pencil_condition,
    rct_certificate,
    rct_zero_is_scalar,
)

F2 = Field.prime(2)
F3 = Field.prime(3)
F5 = Field.prime(5)
F7 = Field.prime(7)
QQ = Field.rationals()


def pair_space(field):
    return MatrixSubspace.from_matrices(field, 3, [
        DenseMatrix(field, [[0, 1, 0], [0, 1, 0], [0, 0, 0]]),
        DenseMatrix(field, [[0, 0, 0], [0, 1, 1], [0, 0, 0]]),
    ])


def e(field, n, k):
    return tuple(field.one if i == k - 1 else field.zero for i in range(n))


def random_space(rng, field, n, adjoin=False):
    gens = [DenseMatrix(field, [[rng.randrange(field.p) for _ in range(n)]
                                for _ in range(n)])
            for _ in range(rng.randrange(0, n))]
    s = MatrixSubspace.from_matrices(field, n, gens)
    return s.adjoin_identity() if adjoin else s


def normalizable(rng, field, n, adjoin):
    while True:
        cn = random_space(rng, field, n, adjoin)
        if field.size_at_least(generic_rank_of_action(cn)):
            return cn


def test_pencil_condition_examples():
    eye = MatrixSubspace.from_matrices(F3, 3, [DenseMatrix.identity(F3, 3)])
    assert pencil_condition(eye, 2, 2)
    # before normalization the running example fails at (j, k) = (3, 2):
    # the column space at level 3 has dimension 2 but the pencil rank is 3
    cn2 = pair_space(F2).adjoin_identity()
    assert not pencil_condition(cn2, 3, 2)
    # after a generic-vector move at the top level it holds for every k
    cn3 = pair_space(F3).adjoin_identity()
    _, moved = move_generic_vector(cn3, 3)
    for k in (1, 2, 3):
        assert pencil_condition(moved, 3, k)


def test_move_generic_vector_saturates_level():
    cn3 = pair_space(F3).adjoin_identity()
    level = filtration_level(cn3, 3)
    assert column_space_dim(level, e(F3, 3, 3)) == 2
    t, moved = move_generic_vector(cn3, 3)
    assert moved == conjugate(cn3, t)
    assert column_space_dim(filtration_level(moved, 3), e(F3, 3, 3)) == 3
    # identity columns right of k (here k = n, so just invertibility)
    invert(t)


def test_move_generic_vector_noops():
    eye3 = MatrixSubspace.from_matrices(F5, 3, [DenseMatrix.identity(F5, 3)])
    t, out = move_generic_vector(eye3, 3)
    assert t == DenseMatrix.identity(F5, 3) and out == eye3
    # a level whose filtration is zero
    t, out = move_generic_vector(eye3, 1)
    assert t == DenseMatrix.identity(F5, 3) and out == eye3


def test_move_generic_vector_pivot_form_is_identity_outside_column():
    cn3 = pair_space(F3).adjoin_identity()
    _, moved = move_generic_vector(cn3, 3)
    # craft a level below n that needs a pivot move
    t, _ = move_generic_vector(moved, 2, pivot=True)
    n = 3
    for j in range(n):
        if j == 1:
            continue
        assert t.column(j) == e(F3, 3, j + 1)


def test_move_unit_triangular_spans_units():
    # level-3 column space span{e2+e3} becomes span{e2}
    m = DenseMatrix(F5, [[0, 0, 0], [0, 0, 1], [0, 0, 1]])
    s = MatrixSubspace.from_matrices(F5, 3, [m])
    t, out = move_unit_triangular(s, 3)
    assert out == conjugate(s, t)
    cs = column_space(filtration_level(out, 3), e(F5, 3, 3))
    assert cs.dim == 1 and cs.member((0, 1, 0))
    # t is lower triangular
    for i in range(3):
        for j in range(i + 1, 3):
            assert t.entries[i][j] == 0
    prof = binary_profile(out)
    assert prof.b[2] == 1


def test_move_unit_triangular_noops():
    eye3 = MatrixSubspace.from_matrices(F5, 3, [DenseMatrix.identity(F5, 3)])
    t, out = move_unit_triangular(eye3, 3)
    assert t == DenseMatrix.identity(F5, 3) and out == eye3
    t, out = move_unit_triangular(MatrixSubspace.zero_space(F5, 3), 2)
    assert t == DenseMatrix.identity(F5, 3)


def test_move_permutation_sorts_column():
    # column-4 indicator (1,0,1,0): sorted above the diagonal to (1,1,0,0)
    f = F5
    s = MatrixSubspace.from_matrices(f, 4, [
        DenseMatrix.unit(f, 4, 4, 0, 3),
        DenseMatrix.unit(f, 4, 4, 2, 3),
    ])
    t, out = move_permutation(s, 4)
    assert out == conjugate(s, t)
    cs = column_space(filtration_level(out, 4), e(f, 4, 4))
    assert cs.member((1, 0, 0, 0)) and cs.member((0, 1, 0, 0))
    prof = binary_profile(out)
    assert [prof.B[i][3] for i in range(4)] == [1, 1, 0, 0]


def test_move_permutation_noops():
    f = F5
    s = MatrixSubspace.from_matrices(f, 4, [
        DenseMatrix.unit(f, 4, 4, 0, 3),
        DenseMatrix.unit(f, 4, 4, 1, 3),
    ])
    t, _ = move_permutation(s, 4)
    assert t == DenseMatrix.identity(f, 4)
    t, _ = move_permutation(MatrixSubspace.zero_space(f, 4), 4)
    assert t == DenseMatrix.identity(f, 4)


def test_normalize_running_example_over_f3():
    res = normalize(pair_space(F3).adjoin_identity())
    prof = res.profile
    assert prof.b[2] == prof.d[3] == 3
    assert prof.rows_increasing()
    assert prof.columns_decreasing_above_diagonal()
    assert res.branch == SINGLE_PASS


def test_normalize_field_too_small_over_f2():
    with pytest.raises(FieldTooSmallError) as exc:
        normalize(pair_space(F2).adjoin_identity())
    assert exc.value.needed == 3


def test_normalize_scalars_trivial():
    for field in (F2, F7, QQ):
        res = normalize(MatrixSubspace.from_matrices(
            field, 3, [DenseMatrix.identity(field, 3)]))
        assert res.profile.B == ((0, 0, 0), (0, 0, 0), (0, 0, 1))
        assert res.t_total == DenseMatrix.identity(field, 3)


def test_normalize_double_pass_branch():
    # the top level starts saturated, so the first move is a no-op and
    # d_2 = 2 = #K survives to the branch decision: double pass
    s = MatrixSubspace.from_matrices(F2, 3, [
        DenseMatrix.unit(F2, 3, 3, 0, 0),
        DenseMatrix.unit(F2, 3, 3, 1, 1),
        DenseMatrix.unit(F2, 3, 3, 0, 2),
        DenseMatrix.unit(F2, 3, 3, 1, 2),
    ])
    res = normalize(s)
    assert res.branch == DOUBLE_PASS
    assert res.profile.b == res.profile.col_dims == tuple(res.profile.d[1:])
    assert res.profile.b == (0, 2, 2)


def test_normalize_log_replays():
    rng = random.Random(71)
    for _ in range(10):
        cn = normalizable(rng, F5, 3, adjoin=rng.random() < 0.5)
        res = normalize(cn)
        replay = cn
        for move in res.log:
            assert move.kind in ("generic_vector", "unit_triangular", "permutation")
            replay = conjugate(replay, move.t)
        assert replay == res.c_n_final
        assert res.c_n_final == conjugate(cn, res.t_total)


def test_normalize_idempotent_profile():
    rng = random.Random(73)
    for _ in range(8):
        cn = normalizable(rng, F7, 3, adjoin=True)
        first = normalize(cn)
        second = normalize(first.c_n_final)
        assert second.profile == first.profile


def test_normalized_identity_spaces_satisfy_corner_inequalities():
    # with I in the space: B_{kn} >= B_{nk} for every k, and when
    # b_n <= n-1 also b_{n-1} < d_n
    rng = random.Random(79)
    n = 3
    for _ in range(15):
        cn = normalizable(rng, F5, n, adjoin=True)
        prof = normalize(cn).profile
        for k in range(1, n):
            assert prof.B[k - 1][n - 1] >= prof.B[n - 1][k - 1]
        if prof.b[n - 1] <= n - 1:
            assert prof.b[n - 2] < prof.d[n]


def test_normalize_over_rationals():
    s = MatrixSubspace.from_matrices(QQ, 3, [
        DenseMatrix(QQ, [[0, 1, 0], [0, 1, 0], [0, 0, 0]]),
        DenseMatrix(QQ, [[0, 0, 0], [0, 1, 1], [0, 0, 0]]),
    ]).adjoin_identity()
    res = normalize(s)
    assert res.branch == SINGLE_PASS
    assert res.profile.b[2] == 3


def test_lower_triangular_column_replacement():
    # t with k-th column zero above the diagonal and identity columns to
    # the right replaces the level-k column space by its t^-1 image
    rng = random.Random(83)
    f = F5
    n, k = 3, 2
    for _ in range(10):
        s = random_space(rng, f, n)
        entries = [list(row) for row in DenseMatrix.identity(f, n).entries]
        for i in range(k - 1, n):  # in-column and below-diagonal freedom
            entries[i][k - 1] = rng.randrange(1, 5) if i == k - 1 else rng.randrange(5)
        for j in range(k - 1):     # anything invertible on the left block
            for i in range(n):
                entries[i][j] = rng.randrange(5)
        t = DenseMatrix(f, entries)
        try:
            ti = invert(t)
        except Exception:
            continue
        before = column_space(filtration_level(s, k), e(f, n, k))
        after = column_space(filtration_level(conjugate(s, t), k), e(f, n, k))
        from mathieumat.linalg import VectorSubspace
        expected = VectorSubspace.from_vectors(
            f, n, [ti.mul_vector(v) for v in before.basis])
        assert after == expected


def test_normalize_total_on_small_universes():
    # every subspace of Mat_2(F_2) and Mat_2(F_3) normalizes (the
    # internal postcondition checks run on each of the 67 + 212 cases)
    from mathieumat.linalg import all_subspaces
    for field in (F2, F3):
        count = 0
        for dim in range(5):
            for basis in all_subspaces(field, 4, dim):
                cn = MatrixSubspace(field, 2, basis)
                assert field.size_at_least(generic_rank_of_action(cn))
                normalize(cn)
                count += 1
        assert count == (67 if field is F2 else 212)


def test_rct_zero_is_scalar_for_zero_space():
    z = MatrixSubspace.zero_space(F3, 3)
    assert rct_zero_is_scalar(z, 1)
    assert rct_zero_is_scalar(z, 2)


def test_rct_certificate_on_running_dual():
    m = constraint_space(pair_space(F3))
    cert = rct_certificate(m)
    assert cert.r == 2
    assert rct_zero_is_scalar(conjugate(constraint_space(m), cert.t), cert.r)


def test_rct_certificate_preconditions():
    # the trace-zero space has the scalar line as its constraints
    u = lambda i, j: DenseMatrix.unit(F3, 3, 3, i, j)
    h = MatrixSubspace.from_matrices(F3, 3, [
        u(i, j) for i in range(3) for j in range(3) if i != j
    ] + [u(0, 0) - u(1, 1), u(0, 0) - u(2, 2)])
    assert constraint_space(h).contains_identity()
    with pytest.raises(PreconditionViolated):
        rct_certificate(h)
    # dimension bounds: full space has zero-dimensional constraints
    with pytest.raises(PreconditionViolated):
        rct_certificate(MatrixSubspace.full_space(F3, 2))


def test_rct_certificate_field_too_small():
    with pytest.raises(FieldTooSmallError):
        rct_certificate(constraint_space(pair_space(F2)))
