#!/usr/bin/env python3
"""Affine families of idempotents inside a matrix subspace.

A candidate idempotent carries the identity on a leading (or trailing)
principal block and free entries on the lower-left block.  When every
constraint with zero top-right block has trace-zero principal minor, the
trace conditions are solvable inside the free block, and the solutions
form an affine family whose dimension equals that of the lower-left
corner slice of the space.  Complementary families give two idempotents
with a unipotent sum -- the certificate that a Mathieu subspace
containing them must be everything.
"""

from mathieumat import (
    DenseMatrix,
    Field,
    HypothesisFailed,
    MatrixSubspace,
    corner_slice,
    full_space_certificate,
    idempotent_family,
)

F3 = Field.prime(3)


def main():
    print("=== a one-parameter family ===")
    u = lambda i, j: DenseMatrix.unit(F3, 2, 2, i, j)
    m = MatrixSubspace.from_matrices(F3, 2, [u(0, 0), u(1, 0), u(1, 1)])
    fam = idempotent_family(m, 1, "upper")
    print("family dimension:", fam.dim,
          " corner slice dimension:", corner_slice(m, 1).dim)
    for member in fam.members():
        print("  member", member.entries,
              "idempotent:", member.mul(member) == member)
    print()

    print("=== a failing hypothesis, with witness ===")
    h = MatrixSubspace.from_matrices(F3, 2, [
        u(0, 1), u(1, 0), u(0, 0) - u(1, 1)])
    try:
        idempotent_family(h, 1, "upper")
    except HypothesisFailed as exc:
        print("HypothesisFailed; witness constraint:", exc.witness.entries)
    print()

    print("=== the full-space certificate ===")
    full = MatrixSubspace.full_space(F3, 2)
    cert = full_space_certificate(full, 1)
    print("e       =", cert.e.entries)
    print("e'      =", cert.e_prime.entries)
    total = cert.e + cert.e_prime
    nil = total - DenseMatrix.identity(F3, 2)
    print("e + e'  =", total.entries, " (unipotent: (e+e'-I)^2 = 0:",
          nil.mul(nil).is_zero(), ")")


if __name__ == "__main__":
    main()
