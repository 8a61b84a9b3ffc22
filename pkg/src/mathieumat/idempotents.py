"""Affine families of idempotents cut out by trace constraints.

For a block size r, an upper-form candidate has the identity on its
leading r x r block, free entries on the lower-left (n-r) x r block and
zeros elsewhere; every matrix of that shape is an idempotent of rank r.
Whenever each constraint with vanishing top-right block has trace-zero
leading principal minor, the trace conditions can be solved inside the
free block alone, giving an affine family of idempotents that all lie in
the original space.  The lower form (identity on the trailing block,
rank n-r) is solved directly by the same system with a different
right-hand side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import HypothesisFailed, PreconditionViolated
from .linalg import DenseMatrix, VectorSubspace, invert, solve_affine
from .matspace import MatrixSubspace, constraint_space, rct_zero_members
from .normalize import rct_zero_is_scalar

UPPER = "upper"
LOWER = "lower"


@dataclass(frozen=True)
class AffineFamily:
    """particular + directions, all idempotent of the same rank.

    ``directions`` lives in K^((n-r)r): row-major coordinates of the
    free lower-left block.
    """
    n: int
    r: int
    form: str
    particular: DenseMatrix
    directions: VectorSubspace

    @property
    def dim(self) -> int:
        return self.directions.dim

    @property
    def rank(self) -> int:
        return self.r if self.form == UPPER else self.n - self.r

    def with_block(self, flat_block) -> DenseMatrix:
        """The member whose free block is shifted by ``flat_block``."""
        f = self.particular.field
        n, r = self.n, self.r
        entries = [list(row) for row in self.particular.entries]
        for a in range(n - r):
            for s in range(r):
                entries[r + a][s] = f.add(entries[r + a][s], flat_block[a * r + s])
        return DenseMatrix(f, entries)

    def members(self):
        """All members (prime fields), lexicographic in direction coords."""
        f = self.particular.field
        for coeffs in itertools.product(f.elements(), repeat=self.dim):
            shift = [f.zero] * ((self.n - self.r) * self.r)
            for c, row in zip(coeffs, self.directions.basis):
                if c:
                    shift = [f.add(x, f.mul(c, y)) for x, y in zip(shift, row)]
            yield self.with_block(shift)


@dataclass(frozen=True)
class FullSpaceCertificate:
    """Two idempotents of complementary ranks whose sum is unipotent."""
    e: DenseMatrix
    e_prime: DenseMatrix
    r: int


def corner_slice(space: MatrixSubspace, r: int) -> MatrixSubspace:
    """Members supported on the lower-left (n-r) x r block only."""
    f, n = space.field, space.n
    gens = [
        DenseMatrix.unit(f, n, n, i, j)
        for i in range(r, n) for j in range(r)
    ]
    block = MatrixSubspace.from_matrices(f, n, gens)
    return space.intersect(block)


def _minor_trace(m: DenseMatrix, r: int, form: str):
    f = m.field
    idx = range(r) if form == UPPER else range(r, m.rows)
    total = f.zero
    for i in idx:
        total = f.add(total, m.entries[i][i])
    return total


def idempotent_family(space: MatrixSubspace, r: int, form: str = UPPER) -> AffineFamily:
    """The affine family of idempotents of the given form inside ``space``.

    Raises HypothesisFailed (with an offending constraint as witness)
    when some constraint with zero top-right block has a nonzero
    principal-minor trace on the relevant block.  The family dimension
    always equals the dimension of the lower-left corner slice of the
    space.
    """
    f, n = space.field, space.n
    if form not in (UPPER, LOWER):
        raise ValueError("form must be %r or %r" % (UPPER, LOWER))
    if not 1 <= r <= n - 1:
        raise ValueError("r = %d out of range 1..%d" % (r, n - 1))
    constraints = constraint_space(space)
    for z in rct_zero_members(constraints, r).basis_matrices:
        if _minor_trace(z, r, form) != f.zero:
            raise HypothesisFailed(
                "a zero-corner constraint has nonzero %s minor trace" % form,
                witness=z)
    cmats = constraints.basis_matrices
    ncols = (n - r) * r
    rows = []
    rhs = []
    for c in cmats:
        rows.append([c.entries[s][r + a] for a in range(n - r) for s in range(r)])
        rhs.append(f.neg(_minor_trace(c, r, form)))
    system = DenseMatrix(f, rows, cols=ncols)
    sol = solve_affine(system, rhs)
    assert sol is not None, "solvable by construction once the hypothesis holds"
    block, directions = sol
    entries = [[f.zero] * n for _ in range(n)]
    fixed = range(r) if form == UPPER else range(r, n)
    for i in fixed:
        entries[i][i] = f.one
    for a in range(n - r):
        for s in range(r):
            entries[r + a][s] = block[a * r + s]
    return AffineFamily(n=n, r=r, form=form,
                        particular=DenseMatrix(f, entries), directions=directions)


def full_space_certificate(space: MatrixSubspace, r: int) -> FullSpaceCertificate:
    """Idempotents of ranks r and n-r in ``space`` with unipotent sum.

    Requires the identity not to be a constraint, and every
    identity-adjoined constraint with zero top-right block to be scalar;
    a Mathieu subspace admitting such a certificate is the full algebra.
    """
    f, n = space.field, space.n
    constraints = constraint_space(space)
    if constraints.contains_identity():
        raise PreconditionViolated("the identity is a constraint of the space")
    if not rct_zero_is_scalar(constraints, r):
        adjoined = rct_zero_members(constraints.adjoin_identity(), r)
        scalars = MatrixSubspace.from_matrices(f, n, [DenseMatrix.identity(f, n)])
        witness = next(m for m in adjoined.basis_matrices if not scalars.contains(m))
        raise HypothesisFailed(
            "a zero-corner member of the adjoined constraints is not scalar",
            witness=witness)
    e = idempotent_family(space, r, UPPER).particular
    e_prime = idempotent_family(space, r, LOWER).particular
    total = e + e_prime
    eye = DenseMatrix.identity(f, n)
    nil = total - eye
    power = nil
    for _ in range(n - 1):
        power = power.mul(nil)
    assert power.is_zero(), "sum of the two idempotents must be unipotent"
    # decomposition sanity on a canonical sample: A = A (e+e')^-1 e + A (e+e')^-1 e'
    sample = DenseMatrix.unit(f, n, n, 0, 0)
    inv_total = invert(total)
    restored = sample.mul(inv_total).mul(e) + sample.mul(inv_total).mul(e_prime)
    assert restored == sample
    return FullSpaceCertificate(e=e, e_prime=e_prime, r=r)
