"""Brute-force Mathieu-subspace semantics over small prime fields.

Everything here is exhaustive: powers of a matrix over F_p are
eventually periodic, so "for all large exponents" means "for every
exponent in the eventual cycle", which turns the defining quantifiers
into finite checks.  The multiplier loops are batched with numpy (exact
integer arithmetic mod p; the guard keeps products far below overflow),
and the first counterexample in enumeration order is returned as a
replayable witness.

Enumeration orders are fixed: candidate matrices by lexicographic
row-major entries, subspace members by lexicographic basis coefficients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NotLeftIdealError, PreconditionViolated, TooLargeError
from .linalg import DenseMatrix, VectorSubspace, invert, kernel
from .matspace import MatrixSubspace, conjugate, constraint_space

ENUMERATION_GUARD = 2 ** 20

LEFT = "left"
RIGHT = "right"
PRE_TWO_SIDED = "pre_two_sided"
TWO_SIDED = "two_sided"
ALL_TYPES = (LEFT, RIGHT, PRE_TWO_SIDED, TWO_SIDED)


def _require_enumerable(field, n):
    if not field.p:
        raise TooLargeError("the rationals are not enumerable")
    if field.p ** (n * n) > ENUMERATION_GUARD:
        raise TooLargeError(
            "%d^%d matrices exceed the enumeration guard 2^20" % (field.p, n * n))


@dataclass(frozen=True)
class PowerTrajectory:
    """Powers a^1, a^2, ... split into the pre-period and the cycle."""
    a: DenseMatrix
    tail: tuple      # a^1 .. a^t, the part before the cycle is entered
    cycle: tuple     # a^(t+1) .. a^(t+period)

    @property
    def tail_len(self) -> int:
        return len(self.tail)

    @property
    def period(self) -> int:
        return len(self.cycle)

    def power(self, m: int) -> DenseMatrix:
        """a^m for m >= 1 via the stored trajectory."""
        if m < 1:
            raise ValueError("exponent must be >= 1")
        if m <= self.tail_len:
            return self.tail[m - 1]
        return self.cycle[(m - self.tail_len - 1) % self.period]


def power_trajectory(a: DenseMatrix) -> PowerTrajectory:
    """Minimal tail and period with a^(m+period) = a^m for all m > tail."""
    if a.rows != a.cols:
        raise ValueError("trajectory of a non-square matrix")
    if not a.field.p:
        raise TooLargeError("power trajectories need a finite field")
    seen = {}
    seq = []
    cur = a
    m = 1
    while cur not in seen:
        seen[cur] = m
        seq.append(cur)
        cur = cur.mul(a)
        m += 1
    first = seen[cur]
    return PowerTrajectory(a=a, tail=tuple(seq[:first - 1]), cycle=tuple(seq[first - 1:]))


@dataclass(frozen=True)
class Witness:
    """A replayable counterexample: all powers of ``a`` stay inside, yet
    the displayed product escapes at the given cycle exponent (hence at
    infinitely many exponents)."""
    a: DenseMatrix
    b: Optional[DenseMatrix]
    c: Optional[DenseMatrix]
    exponent: int


@dataclass(frozen=True)
class MathieuVerdict:
    holds: bool
    vtype: str
    witness: Optional[Witness]


def all_matrices_np(p: int, n: int) -> np.ndarray:
    """All n x n matrices over F_p as an (p^(n*n), n, n) int array in
    lexicographic row-major order."""
    count = p ** (n * n)
    idx = np.arange(count, dtype=np.int64)
    cols = []
    for pos in range(n * n):
        cols.append((idx // p ** (n * n - 1 - pos)) % p)
    return np.stack(cols, axis=1).reshape(count, n, n)


def _np_of(m: DenseMatrix) -> np.ndarray:
    return np.array(m.entries, dtype=np.int64)


def _mat_of(field, arr) -> DenseMatrix:
    return DenseMatrix(field, [[int(x) for x in row] for row in arr])


class _MembershipOracle:
    """Vectorized membership tests via the trace pairing with the dual."""

    def __init__(self, space: MatrixSubspace):
        self.space = space
        self.p = space.field.p
        cons = constraint_space(space)
        self.kstack = np.array(
            [m.entries for m in cons.basis_matrices], dtype=np.int64
        ) if cons.dim else None

    def violations(self, batch: np.ndarray) -> np.ndarray:
        """Boolean array over the leading axes: True = not a member."""
        if self.kstack is None:
            return np.zeros(batch.shape[:-2], dtype=bool)
        pairings = np.einsum("kab,...ba->...k", self.kstack, batch) % self.p
        return (pairings != 0).any(axis=-1)


def _full_power_pairs(space: MatrixSubspace):
    """(member, trajectory) pairs of the full power set, in coefficient
    order.  Since the first power must already belong, only subspace
    members are candidates."""
    _require_enumerable(space.field, space.n)
    out = []
    for a in space.elements():
        traj = power_trajectory(a)
        if all(space.contains(x) for x in traj.tail) and \
                all(space.contains(x) for x in traj.cycle):
            out.append((a, traj))
    return out


def full_power_set(space: MatrixSubspace):
    """All members whose every power stays inside the space."""
    return [a for a, _ in _full_power_pairs(space)]


def radical(space: MatrixSubspace):
    """All a whose large powers eventually stay inside: every element of
    the cycle of a belongs to the space.  Lexicographic order."""
    _require_enumerable(space.field, space.n)
    f, n = space.field, space.n
    out = []
    for flat in itertools.product(f.elements(), repeat=n * n):
        a = DenseMatrix.from_flat(f, n, n, flat)
        traj = power_trajectory(a)
        if all(space.contains(z) for z in traj.cycle):
            out.append(a)
    return out


def _first_one_sided_violation(traj, mats, oracle, left):
    """First multiplier index violating b z (or z b) membership, with the
    first bad cycle position there; None when all products stay inside."""
    combined = None
    per_pos = []
    for z in traj.cycle:
        if z.is_zero():
            per_pos.append(None)
            continue
        z_np = _np_of(z)
        prods = (mats @ z_np if left else z_np @ mats) % oracle.p
        bad = oracle.violations(prods)
        per_pos.append(bad)
        combined = bad if combined is None else (combined | bad)
    if combined is None or not combined.any():
        return None
    b_idx = int(np.argmax(combined))
    pos = next(i for i, bad in enumerate(per_pos) if bad is not None and bad[b_idx])
    return b_idx, pos


def _first_two_sided_violation(traj, mats, oracle, chunk=256):
    count = mats.shape[0]
    combined = np.zeros((count, count), dtype=bool)
    for z in traj.cycle:
        if z.is_zero():
            continue
        bz = (mats @ _np_of(z)) % oracle.p
        for lo in range(0, count, chunk):
            hi = min(lo + chunk, count)
            prods = (bz[lo:hi, None] @ mats[None, :]) % oracle.p
            combined[lo:hi] |= oracle.violations(prods)
    if not combined.any():
        return None
    flat = int(np.argmax(combined))
    b_idx, c_idx = divmod(flat, count)
    for pos, z in enumerate(traj.cycle):
        if z.is_zero():
            continue
        prod = (mats[b_idx] @ _np_of(z) @ mats[c_idx]) % oracle.p
        if oracle.violations(prod[None])[0]:
            return b_idx, c_idx, pos
    raise AssertionError("violation vanished on single-pair replay")


def verify_mathieu(space: MatrixSubspace, vtype: str) -> MathieuVerdict:
    """Exhaustively check one of the four defining properties.

    For every member a all of whose powers stay inside, every multiplier
    (pair) is checked against every element of a's power cycle; the
    first counterexample in enumeration order becomes the witness.
    """
    if vtype not in ALL_TYPES:
        raise ValueError("unknown type %r" % vtype)
    _require_enumerable(space.field, space.n)
    f, n = space.field, space.n
    if space.dim == n * n:
        return MathieuVerdict(holds=True, vtype=vtype, witness=None)
    oracle = _MembershipOracle(space)
    mats = all_matrices_np(f.p, n)
    for a, traj in _full_power_pairs(space):
        checks = {
            LEFT: (True,),
            RIGHT: (False,),
            PRE_TWO_SIDED: (True, False),
        }
        if vtype == TWO_SIDED:
            hit = _first_two_sided_violation(traj, mats, oracle)
            if hit is not None:
                b_idx, c_idx, pos = hit
                return MathieuVerdict(False, vtype, Witness(
                    a=a, b=_mat_of(f, mats[b_idx]), c=_mat_of(f, mats[c_idx]),
                    exponent=traj.tail_len + 1 + pos))
        else:
            for left in checks[vtype]:
                hit = _first_one_sided_violation(traj, mats, oracle, left)
                if hit is not None:
                    idx, pos = hit
                    mult = _mat_of(f, mats[idx])
                    return MathieuVerdict(False, vtype, Witness(
                        a=a, b=mult if left else None, c=None if left else mult,
                        exponent=traj.tail_len + 1 + pos))
    return MathieuVerdict(holds=True, vtype=vtype, witness=None)


def witness_replays(space: MatrixSubspace, witness: Witness) -> bool:
    """Confirm a witness by direct power iteration: all powers of a stay
    inside, while the product escapes at the witness exponent and again
    one full period later."""
    traj = power_trajectory(witness.a)
    for x in traj.tail + traj.cycle:
        if not space.contains(x):
            return False

    def product(power):
        out = power
        if witness.b is not None:
            out = witness.b.mul(out)
        if witness.c is not None:
            out = out.mul(witness.c)
        return out

    if witness.exponent <= traj.tail_len:
        return False
    first = product(traj.power(witness.exponent))
    later = product(traj.power(witness.exponent + traj.period))
    return (not space.contains(first)) and (not space.contains(later))


def proposition_family(field, n: int, a_param) -> MatrixSubspace:
    """The codimension-n family: zero lower row left of the corner and
    trace tied to the corner entry by the parameter a.

    Requires the characteristic to avoid 1..n-1, the prime field itself
    to avoid {n, n+1} (those cases need an element outside the prime
    subfield), and a to avoid -1..-n; under these the family is a
    two-sided Mathieu subspace with no nonzero idempotent.
    """
    p = field.characteristic()
    if 0 < p <= n - 1:
        raise PreconditionViolated(
            "characteristic %d lies in 1..%d" % (p, n - 1))
    if p in (n, n + 1):
        raise PreconditionViolated(
            "over the prime field F_%d the parameter cannot leave the prime "
            "subfield as characteristic %d requires" % (p, p))
    a = field.of(a_param)
    for j in range(1, n + 1):
        if field.add(field.of(j), a) == field.zero:
            raise PreconditionViolated(
                "parameter equal to -%d admits idempotents" % j)
    rows = []
    for j in range(n - 1):
        row = [field.zero] * (n * n)
        row[(n - 1) * n + j] = field.one
        rows.append(row)
    trace_row = [field.zero] * (n * n)
    for i in range(n):
        trace_row[i * n + i] = field.one
    trace_row[n * n - 1] = field.add(field.one, a)
    rows.append(trace_row)
    return MatrixSubspace(field, n, kernel(DenseMatrix(field, rows, cols=n * n)))


def newton_char_poly(a: DenseMatrix):
    """Characteristic polynomial coefficients (descending powers of t)
    recovered from the power sums tr(a), tr(a^2), ..., tr(a^n).

    Needs n! invertible: characteristic 0 or > n.
    """
    f = a.field
    n = a.rows
    if a.rows != a.cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    p = f.characteristic()
    if 0 < p <= n:
        raise PreconditionViolated(
            "power-sum recovery divides by 1..%d; characteristic %d is too small"
            % (n, p))
    sums = []
    power = a
    for _ in range(n):
        sums.append(power.trace())
        power = power.mul(a)
    elem = [f.one]
    for k in range(1, n + 1):
        acc = f.zero
        sign = f.one
        for i in range(1, k + 1):
            acc = f.add(acc, f.mul(sign, f.mul(elem[k - i], sums[i - 1])))
            sign = f.neg(sign)
        elem.append(f.div(acc, f.of(k)))
    coeffs = []
    sign = f.one
    for k in range(n + 1):
        coeffs.append(f.mul(sign, elem[k]))
        sign = f.neg(sign)
    return tuple(coeffs)


@dataclass(frozen=True)
class TraceChainReport:
    """The implication chain for spaces of trace-zero matrices:
    small-characteristic avoidance => identity-free variant => nilpotent
    radical => two-sided Mathieu."""
    char_avoids_1_to_n: bool
    char_avoids_1_to_n_minus_1_and_identity_free: bool
    radical_nilpotent: bool
    two_sided_mathieu: bool
    nilpotency_bound_ok: Optional[bool]

    @property
    def chain_holds(self) -> bool:
        flags = (self.char_avoids_1_to_n,
                 self.char_avoids_1_to_n_minus_1_and_identity_free,
                 self.radical_nilpotent,
                 self.two_sided_mathieu)
        return all(not a or b for a, b in zip(flags, flags[1:]))


def trace_chain_report(space: MatrixSubspace) -> TraceChainReport:
    """Evaluate the four chained predicates for a trace-zero subspace.

    Raises PreconditionViolated when some basis matrix has nonzero
    trace; raises AssertionError if an implication fails (it cannot,
    short of a bug)."""
    f, n = space.field, space.n
    for m in space.basis_matrices:
        if m.trace() != f.zero:
            raise PreconditionViolated("the space contains a nonzero-trace matrix")
    _require_enumerable(f, n)
    p = f.characteristic()
    pred1 = not 0 < p <= n
    pred2 = (not 0 < p <= n - 1) and not space.contains_identity()
    rad = radical(space)
    zero = DenseMatrix.zeros(f, n, n)
    nilpotent = {}
    for a in rad:
        nilpotent[a] = a.power(n).is_zero()
    pred3 = all(nilpotent.values())
    pred4 = verify_mathieu(space, TWO_SIDED).holds
    bound_ok = None
    if pred2:
        bound_ok = True
        for a in rad:
            traj = power_trajectory(a)
            threshold = traj.tail_len + 1
            while threshold > 1 and space.contains(traj.power(threshold - 1)):
                threshold -= 1
            if not a.power(n * threshold) == zero:
                bound_ok = False
    flags = (pred1, pred2, pred3, pred4)
    assert all(not x or y for x, y in zip(flags, flags[1:])), \
        "implication chain violated: %r" % (flags,)
    return TraceChainReport(
        char_avoids_1_to_n=pred1,
        char_avoids_1_to_n_minus_1_and_identity_free=pred2,
        radical_nilpotent=pred3,
        two_sided_mathieu=pred4,
        nilpotency_bound_ok=bound_ok)


def _unit_products_member_rows(space):
    """Rows of the linear system 'E_ij A inside the space for all i, j'."""
    f, n = space.field, space.n
    cons = constraint_space(space)
    rows = []
    for kmat in cons.basis_matrices:
        for i in range(n):
            for j in range(n):
                # tr(K E_ij A) = sum_t K[t][i] A[j][t]
                row = [f.zero] * (n * n)
                for t in range(n):
                    row[j * n + t] = kmat.entries[t][i]
                rows.append(row)
    return rows


def max_left_ideal(space: MatrixSubspace) -> MatrixSubspace:
    """The unique maximal left ideal contained in the space.

    Consists of all A with E_ij A inside the space for every unit E_ij;
    any left ideal inside the space satisfies that, and the set itself
    is a left ideal.  Works over any field.
    """
    f, n = space.field, space.n
    rows = _unit_products_member_rows(space)
    system = DenseMatrix(f, rows, cols=n * n)
    return MatrixSubspace(f, n, kernel(system))


def is_left_ideal(space: MatrixSubspace) -> bool:
    f, n = space.field, space.n
    for a in space.basis_matrices:
        for i in range(n):
            for j in range(n):
                if not space.contains(DenseMatrix.unit(f, n, n, i, j).mul(a)):
                    return False
    return True


@dataclass(frozen=True)
class LeftIdealForm:
    """Conjugation data for a left ideal: after conjugating by t it kills
    exactly the last n-k coordinates, and the returned idempotent
    generates it."""
    t: DenseMatrix
    k: int
    idempotent: DenseMatrix


def left_ideal_normal_form(ideal: MatrixSubspace) -> LeftIdealForm:
    """Normalize a left ideal to the column-kill shape.

    The last n-k columns of t span the common kernel of the ideal;
    conjugating by t yields exactly the matrices vanishing on the last
    n-k coordinates.  Raises NotLeftIdealError on bad input.
    """
    if not is_left_ideal(ideal):
        raise NotLeftIdealError("input is not closed under left multiplication")
    f, n = ideal.field, ideal.n
    stacked = [row for m in ideal.basis_matrices for row in m.entries]
    common = kernel(DenseMatrix(f, stacked, cols=n))
    k = n - common.dim
    columns = []
    taken = VectorSubspace.from_vectors(f, n, common.basis)
    for i in range(n):
        e = tuple(f.one if j == i else f.zero for j in range(n))
        if not taken.member(e):
            columns.append(e)
            taken = taken.sum(VectorSubspace.from_vectors(f, n, [e]))
        if len(columns) == k:
            break
    columns += list(common.basis)
    t = DenseMatrix(f, [[columns[j][i] for j in range(n)] for i in range(n)])
    conjugated = conjugate(ideal, t)
    expected = MatrixSubspace.from_matrices(f, n, [
        DenseMatrix.unit(f, n, n, u, v) for u in range(n) for v in range(k)])
    assert conjugated == expected, "left ideal is not a full column-kill space"
    diag = DenseMatrix(f, [[f.one if i == j < k else f.zero for j in range(n)]
                           for i in range(n)])
    idem = t.mul(diag).mul(invert(t))
    return LeftIdealForm(t=t, k=k, idempotent=idem)


@dataclass(frozen=True)
class LeftIdealEquivalences:
    """Three equivalent views of the one-sided property: the space is
    left Mathieu, its idempotents all lie in the maximal left ideal, and
    space and ideal have the same radical."""
    left_mathieu: bool
    idempotents_in_ideal: bool
    radicals_match: bool
    ideal: MatrixSubspace
    idempotent_count: int

    @property
    def consistent(self) -> bool:
        return self.left_mathieu == self.idempotents_in_ideal == self.radicals_match


def left_ideal_equivalences(space: MatrixSubspace) -> LeftIdealEquivalences:
    """Evaluate all three predicates exhaustively; they must agree."""
    _require_enumerable(space.field, space.n)
    ideal = max_left_ideal(space)
    left = verify_mathieu(space, LEFT).holds
    idems = [e for e in space.elements() if e.mul(e) == e]
    in_ideal = all(ideal.contains(e) for e in idems)
    radicals = set(radical(space)) == set(radical(ideal))
    report = LeftIdealEquivalences(
        left_mathieu=left, idempotents_in_ideal=in_ideal,
        radicals_match=radicals, ideal=ideal, idempotent_count=len(idems))
    assert report.consistent, "equivalence chain violated: %r" % (report,)
    return report


@dataclass(frozen=True)
class SmallCodimReport:
    """For proper subspaces of codimension below n: a left Mathieu
    subspace is automatically two-sided and the field exceeds F_2."""
    left_mathieu: bool
    two_sided_mathieu: Optional[bool]
    field_order: int


def small_codim_report(space: MatrixSubspace) -> SmallCodimReport:
    f, n = space.field, space.n
    codim = n * n - space.dim
    if not 0 < codim < n:
        raise PreconditionViolated(
            "codimension %d must lie strictly between 0 and %d" % (codim, n))
    left = verify_mathieu(space, LEFT).holds
    two = None
    if left:
        two = verify_mathieu(space, TWO_SIDED).holds
        assert two, "left Mathieu subspace of small codimension must be two-sided"
        assert f.p > 2, "left Mathieu subspace of small codimension needs #K > 2"
    return SmallCodimReport(left_mathieu=left, two_sided_mathieu=two,
                            field_order=f.p)
