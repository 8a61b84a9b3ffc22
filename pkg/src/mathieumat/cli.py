"""Command-line front end: parse space files, run computations, report.

Reports are a single structured document on stdout (plain text, or JSON
with ``--json``); diagnostics go to stderr.  Identical input files give
byte-identical payloads; only the wall-time field varies.  Exit status
is 0 on success (and, for ``repro``, only when the observed outcome
matches the expected one), 1 on domain errors or mismatches, 2 on
argument or parse errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import spacefile
from .errors import MathieuMatError, SpaceFileError
from .idempotents import LOWER, UPPER, idempotent_family
from .linalg import DenseMatrix, Field, all_matrices, all_subspaces, invert
from .matspace import (
    MatrixSubspace,
    binary_profile,
    conjugate,
    constraint_space,
)
from .normalize import normalize, rct_certificate, rct_zero_is_scalar
from .verify import (
    ALL_TYPES,
    LEFT,
    PRE_TWO_SIDED,
    RIGHT,
    TWO_SIDED,
    left_ideal_normal_form,
    max_left_ideal,
    proposition_family,
    radical,
    verify_mathieu,
    witness_replays,
)

TYPE_FLAGS = {"left": LEFT, "right": RIGHT, "pre2": PRE_TWO_SIDED, "two": TWO_SIDED}


def matrix_payload(m: DenseMatrix):
    if m.field.p:
        return [[int(x) for x in row] for row in m.entries]
    return [[str(x) for x in row] for row in m.entries]


@dataclass
class Report:
    command: str
    digest: str
    payload: dict
    move_log: Optional[list]
    wall_time_ms: float

    def to_dict(self):
        out = {
            "command": self.command,
            "digest": self.digest,
            "payload": self.payload,
            "wall_time_ms": self.wall_time_ms,
        }
        if self.move_log is not None:
            out["move_log"] = self.move_log
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _render_text(report: Report, stream):
    print("command: %s" % report.command, file=stream)
    print("digest: %s" % report.digest, file=stream)
    for key in sorted(report.payload):
        print("%s: %s" % (key, json.dumps(report.payload[key], sort_keys=True)),
              file=stream)
    if report.move_log is not None:
        print("move_log:", file=stream)
        for move in report.move_log:
            print("  %s" % json.dumps(move, sort_keys=True), file=stream)
    print("wall_time_ms: %.1f" % report.wall_time_ms, file=stream)


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _load(args):
    with open(args.file, "rb") as fh:
        raw = fh.read()
    sf = spacefile.loads(raw.decode("utf-8"))
    field, space = sf.resolve(args.field)
    return _digest(raw), sf, field, space


def cmd_constraints(args):
    digest, sf, field, space = _load(args)
    cons = constraint_space(space)
    payload = {
        "field": repr(field),
        "n": space.n,
        "space_dim": space.dim,
        "dim": cons.dim,
        "identity_in_constraints": cons.contains_identity(),
        "basis": [matrix_payload(m) for m in cons.basis_matrices],
    }
    return digest, payload, None


def cmd_profile(args):
    digest, sf, field, space = _load(args)
    prof = binary_profile(space)
    payload = {
        "field": repr(field),
        "n": space.n,
        "B": [list(row) for row in prof.B],
        "b": list(prof.b),
        "col_dims": list(prof.col_dims),
        "d": list(prof.d),
    }
    return digest, payload, None


def cmd_normalize(args):
    digest, sf, field, space = _load(args)
    result = normalize(space)
    prof = result.profile
    payload = {
        "field": repr(field),
        "n": space.n,
        "branch": result.branch,
        "t_total": matrix_payload(result.t_total),
        "B": [list(row) for row in prof.B],
        "b": list(prof.b),
        "d": list(prof.d),
        "final_basis": [matrix_payload(m) for m in result.c_n_final.basis_matrices],
    }
    move_log = [
        {"kind": m.kind, "level": m.level, "t": matrix_payload(m.t)}
        for m in result.log
    ]
    return digest, payload, move_log


def cmd_idempotents(args):
    digest, sf, field, space = _load(args)
    form = UPPER if args.form == "upper" else LOWER
    fam = idempotent_family(space, args.r, form)
    payload = {
        "field": repr(field),
        "n": space.n,
        "r": fam.r,
        "form": fam.form,
        "rank": fam.rank,
        "dim": fam.dim,
        "particular": matrix_payload(fam.particular),
        "directions": [list(map(_scalar_payload(field), row))
                       for row in fam.directions.basis],
    }
    return digest, payload, None


def _scalar_payload(field):
    if field.p:
        return int
    return str


def cmd_verify(args):
    digest, sf, field, space = _load(args)
    verdict = verify_mathieu(space, TYPE_FLAGS[args.type])
    payload = {
        "field": repr(field),
        "n": space.n,
        "type": verdict.vtype,
        "holds": verdict.holds,
        "witness": None,
    }
    if verdict.witness is not None:
        w = verdict.witness
        payload["witness"] = {
            "a": matrix_payload(w.a),
            "b": matrix_payload(w.b) if w.b is not None else None,
            "c": matrix_payload(w.c) if w.c is not None else None,
            "exponent": w.exponent,
            "replays": witness_replays(space, w),
        }
    return digest, payload, None


def cmd_radical(args):
    digest, sf, field, space = _load(args)
    rad = radical(space)
    canon = json.dumps([matrix_payload(m) for m in rad])
    payload = {
        "field": repr(field),
        "n": space.n,
        "count": len(rad),
        "sha256": _digest(canon.encode("utf-8")),
    }
    if len(rad) <= 64:
        payload["elements"] = [matrix_payload(m) for m in rad]
    return digest, payload, None


def cmd_maxideal(args):
    digest, sf, field, space = _load(args)
    ideal = max_left_ideal(space)
    nf = left_ideal_normal_form(ideal)
    payload = {
        "field": repr(field),
        "n": space.n,
        "dim": ideal.dim,
        "k": nf.k,
        "t": matrix_payload(nf.t),
        "idempotent": matrix_payload(nf.idempotent),
        "basis": [matrix_payload(m) for m in ideal.basis_matrices],
    }
    return digest, payload, None


def cmd_main2(args):
    digest, sf, field, space = _load(args)
    cert = rct_certificate(space)
    conjugated = conjugate(constraint_space(space), cert.t)
    payload = {
        "field": repr(field),
        "n": space.n,
        "r": cert.r,
        "t": matrix_payload(cert.t),
        "conclusion_holds": rct_zero_is_scalar(conjugated, cert.r),
    }
    return digest, payload, None


# --- canned reproductions ------------------------------------------------

def running_pair_space(field) -> MatrixSubspace:
    """The two-generator space behind the small-field obstruction."""
    return MatrixSubspace.from_matrices(field, 3, [
        DenseMatrix(field, [[0, 1, 0], [0, 1, 0], [0, 0, 0]]),
        DenseMatrix(field, [[0, 0, 0], [0, 1, 1], [0, 0, 0]]),
    ])


def repro_counterexample():
    """Exhaustive check that no conjugation over F_2 makes the zero-corner
    members of the adjoined running pair scalar, for either block size."""
    f = Field.prime(2)
    space = running_pair_space(f)
    conjugators = 0
    fixed = 0
    for t in all_matrices(f, 3, 3):
        try:
            invert(t)
        except MathieuMatError:
            continue
        conjugators += 1
        moved = conjugate(space, t)
        for r in (1, 2):
            if rct_zero_is_scalar(moved, r):
                fixed += 1
    expected = "all 168 conjugators fail for r in {1,2}"
    if conjugators == 168 and fixed == 0:
        observed = expected
    else:
        observed = "%d of %d conjugators produce a scalar-only corner" \
            % (fixed, conjugators)
    return expected, observed, {"conjugators": conjugators, "successes": fixed}


def repro_proposition():
    f = Field.prime(5)
    fam = proposition_family(f, 2, 1)
    verdict = verify_mathieu(fam, TWO_SIDED)
    idems = [e for e in fam.elements() if e.mul(e) == e]
    only_zero = len(idems) == 1 and idems[0].is_zero()
    expected = "two-sided Mathieu: true; only idempotent is zero"
    observed = "two-sided Mathieu: %s; %s" % (
        str(verdict.holds).lower(),
        "only idempotent is zero" if only_zero else "%d idempotents" % len(idems))
    return expected, observed, {"holds": verdict.holds, "idempotents": len(idems)}


def _trace_zero(field, n):
    gens = [DenseMatrix.unit(field, n, n, i, j)
            for i in range(n) for j in range(n) if i != j]
    gens += [DenseMatrix.unit(field, n, n, 0, 0) - DenseMatrix.unit(field, n, n, i, i)
             for i in range(1, n)]
    return MatrixSubspace.from_matrices(field, n, gens)


def repro_codim1_boundary():
    """Trace-zero matrices of Mat_2(F_p): Mathieu of all four types for
    p in {3, 5}, and of none for p = 2 (witnesses replayed)."""
    outcomes = {}
    ok = True
    for p in (2, 3, 5):
        h = _trace_zero(Field.prime(p), 2)
        verdicts = {t: verify_mathieu(h, t) for t in ALL_TYPES}
        holds = {t: v.holds for t, v in verdicts.items()}
        if p == 2:
            ok &= not any(holds.values())
            ok &= all(witness_replays(h, v.witness)
                      for v in verdicts.values() if v.witness is not None)
            ok &= all(v.witness is not None for v in verdicts.values())
        else:
            ok &= all(holds.values())
        outcomes["p=%d" % p] = holds
    expected = "Mathieu for p in {3,5}, not for p=2 (witnesses replay)"
    observed = expected if ok else "boundary pattern violated: %r" % outcomes
    return expected, observed, {"outcomes": outcomes}


def repro_cor62_f2():
    f = Field.prime(2)
    total = 0
    left_count = 0
    for sub in all_subspaces(f, 4, 3):
        total += 1
        space = MatrixSubspace(f, 2, sub)
        if verify_mathieu(space, LEFT).holds:
            left_count += 1
    expected = "0 of 15 codim-1 subspaces of Mat_2(F_2) are left Mathieu"
    observed = "%d of %d codim-1 subspaces of Mat_2(F_2) are left Mathieu" \
        % (left_count, total)
    return expected, observed, {"total": total, "left_mathieu": left_count}


REPROS = {
    "counterexample": repro_counterexample,
    "proposition": repro_proposition,
    "codim1-zhao": repro_codim1_boundary,
    "cor62-f2": repro_cor62_f2,
}


def cmd_repro(args):
    expected, observed, extra = REPROS[args.name]()
    payload = {
        "name": args.name,
        "expected": expected,
        "observed": observed,
        "match": expected == observed,
    }
    payload.update(extra)
    return "-", payload, None


# --- driver ---------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="mathieumat",
        description="exact computations on subspaces of Mat_n over F_p and Q")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_file=True, help=None):
        p = sub.add_parser(name, help=help)
        if needs_file:
            p.add_argument("file", help="space file (see package docs for format)")
            p.add_argument("--field", default=None,
                           help="override the file's field: a prime or Q")
        p.add_argument("--seed", type=int, default=None,
                       help="seed recorded in the report (reserved)")
        p.add_argument("--json", action="store_true", help="emit the report as JSON")
        p.set_defaults(fn=fn)
        return p

    add("constraints", cmd_constraints, help="trace-dual basis and dimension")
    add("profile", cmd_profile, help="binary profile B, counts b, generic dims d")
    add("normalize", cmd_normalize, help="run the conjugation normal form")
    p = add("idempotents", cmd_idempotents, help="affine idempotent family")
    p.add_argument("--r", type=int, required=True, help="block size, 1..n-1")
    p.add_argument("--form", choices=["upper", "lower"], default="upper")
    p = add("verify", cmd_verify, help="exhaustive Mathieu verdict")
    p.add_argument("--type", choices=sorted(TYPE_FLAGS), required=True)
    add("radical", cmd_radical, help="brute-force radical of the space")
    add("maxideal", cmd_maxideal, help="maximal left ideal and its normal form")
    add("main2", cmd_main2,
        help="conjugation making zero-corner constraints scalar")
    p = add("repro", cmd_repro, needs_file=False, help="canned reproductions")
    p.add_argument("name", choices=sorted(REPROS))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        digest, payload, move_log = args.fn(args)
    except SpaceFileError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except MathieuMatError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1
    if getattr(args, "seed", None) is not None:
        payload["seed"] = args.seed
    report = Report(
        command=args.command,
        digest=digest,
        payload=payload,
        move_log=move_log,
        wall_time_ms=(time.perf_counter() - start) * 1000.0,
    )
    if args.json:
        print(report.to_json())
    else:
        _render_text(report, sys.stdout)
    if args.command == "repro" and not payload["match"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
