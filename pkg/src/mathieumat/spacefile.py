"""Plain-text space files: a key-value header plus integer matrix blocks.

Example::

    # any line starting with '#' is a comment
    field 5
    n 3
    name running-example
    basis
    0 1 0
    0 1 0
    0 0 0

    0 0 0
    0 1 1
    0 0 0

``field`` is either a prime or the letter Q.  Entries are arbitrary
integers; they are reduced modulo p (or read as rationals) only when the
file is resolved against a field, so a single file can serve several
fields via an override.  ``loads`` and ``dumps`` round-trip exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import SpaceFileError
from .linalg import DenseMatrix, Field
from .matspace import MatrixSubspace


@dataclass(frozen=True)
class SpaceFile:
    field_token: str          # "Q" or the decimal prime
    n: int
    basis: tuple              # tuple of n x n int tuples, as written
    name: Optional[str] = None

    def resolve(self, field_override: Optional[str] = None):
        """The (Field, MatrixSubspace) this file denotes."""
        token = field_override if field_override is not None else self.field_token
        field = parse_field_token(token)
        mats = [DenseMatrix(field, rows) for rows in self.basis]
        return field, MatrixSubspace.from_matrices(field, self.n, mats)


def parse_field_token(token: str) -> Field:
    token = str(token).strip()
    if token.upper() == "Q":
        return Field.rationals()
    try:
        p = int(token)
    except ValueError:
        raise SpaceFileError("field must be a prime or Q, got %r" % token)
    try:
        return Field.prime(p)
    except ValueError as exc:
        raise SpaceFileError(str(exc))


def loads(text: str) -> SpaceFile:
    """Parse a space file; raises SpaceFileError with the offending line."""
    lines = text.splitlines()
    header = {}
    i = 0
    in_basis = False
    while i < len(lines):
        raw = lines[i].strip()
        i += 1
        if not raw or raw.startswith("#"):
            continue
        if raw == "basis":
            in_basis = True
            break
        parts = raw.split(None, 1)
        if len(parts) != 2:
            raise SpaceFileError("expected 'key value'", line=i)
        key, value = parts
        if key not in ("field", "n", "name"):
            raise SpaceFileError("unknown header key %r" % key, line=i)
        if key in header:
            raise SpaceFileError("duplicate header key %r" % key, line=i)
        header[key] = value.strip()
    if "field" not in header:
        raise SpaceFileError("missing 'field' header")
    if "n" not in header:
        raise SpaceFileError("missing 'n' header")
    parse_field_token(header["field"])      # validate early
    try:
        n = int(header["n"])
    except ValueError:
        raise SpaceFileError("n must be an integer, got %r" % header["n"])
    if n < 1:
        raise SpaceFileError("n must be positive, got %d" % n)

    blocks = []
    current = []
    if in_basis:
        while i < len(lines):
            raw = lines[i].strip()
            i += 1
            if raw.startswith("#"):
                continue
            if not raw:
                if current:
                    blocks.append(current)
                    current = []
                continue
            entries = raw.split()
            if len(entries) != n:
                raise SpaceFileError(
                    "expected %d entries, got %d" % (n, len(entries)), line=i)
            try:
                row = tuple(int(x) for x in entries)
            except ValueError:
                raise SpaceFileError("entries must be integers", line=i)
            if len(current) == n:
                raise SpaceFileError(
                    "matrix block has more than %d rows "
                    "(separate blocks with a blank line)" % n, line=i)
            current.append(row)
        if current:
            blocks.append(current)
    for b in blocks:
        if len(b) != n:
            raise SpaceFileError(
                "matrix block has %d rows, expected %d" % (len(b), n))
    return SpaceFile(
        field_token=header["field"],
        n=n,
        basis=tuple(tuple(b) for b in blocks),
        name=header.get("name"))


def dumps(sf: SpaceFile) -> str:
    """Canonical text form; loads(dumps(sf)) == sf."""
    out = ["field %s" % sf.field_token, "n %d" % sf.n]
    if sf.name is not None:
        out.append("name %s" % sf.name)
    out.append("basis")
    for idx, block in enumerate(sf.basis):
        if idx:
            out.append("")
        for row in block:
            out.append(" ".join(str(x) for x in row))
    return "\n".join(out) + "\n"


def load_path(path: str) -> SpaceFile:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def from_subspace(space: MatrixSubspace, name: Optional[str] = None) -> SpaceFile:
    """A space file whose blocks are the canonical basis of the space."""
    f = space.field
    token = "Q" if not f.p else str(f.p)
    basis = []
    for m in space.basis_matrices:
        if f.p:
            basis.append(tuple(tuple(int(x) for x in row) for row in m.entries))
        else:
            for row in m.entries:
                for x in row:
                    if x.denominator != 1:
                        raise ValueError(
                            "only integer entries can be written to a space file")
            basis.append(tuple(tuple(int(x) for x in row) for row in m.entries))
    return SpaceFile(field_token=token, n=space.n, basis=tuple(basis), name=name)
