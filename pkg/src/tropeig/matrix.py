"""Dense max-plus vectors and matrices.

Vectors are plain tuples of scalars.  Indices are 0-based in the API; anything
printed for a human (CLI output, traces) is shifted to 1-based.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ParseError, ZeroVector
from .semiring import EPS, Scalar, format_scalar, is_eps, scalar, tinv, tmul

TropVector = tuple


def vector(entries: Iterable) -> TropVector:
    out = tuple(scalar(e) for e in entries)
    if not out:
        raise DimensionMismatch("vectors need at least one entry")
    return out


def unit_vector(n: int, i: int) -> TropVector:
    return tuple(Fraction(0) if k == i else EPS for k in range(n))


def is_nonzero(x: Sequence[Scalar]) -> bool:
    return any(not is_eps(v) for v in x)


@dataclass(frozen=True, init=False, repr=False)
class TropMatrix:
    """An ``n x m`` grid of scalars, immutable after construction."""

    rows: tuple

    def __init__(self, rows: Iterable[Iterable]):
        grid = tuple(tuple(scalar(v) for v in row) for row in rows)
        if not grid or not grid[0]:
            raise DimensionMismatch("matrix must be at least 1x1")
        width = len(grid[0])
        if any(len(r) != width for r in grid):
            raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "rows", grid)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.n == self.m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def diagonal(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    def entries(self):
        for row in self.rows:
            yield from row

    def shifted(self, c: Scalar) -> "TropMatrix":
        """``c ⊗ A``: add the finite constant ``c`` to every entry."""
        return TropMatrix([[tmul(c, v) for v in row] for row in self.rows])

    def transpose(self) -> "TropMatrix":
        return TropMatrix(zip(*self.rows))

    @classmethod
    def identity(cls, n: int) -> "TropMatrix":
        return cls([unit_vector(n, i) for i in range(n)])

    @classmethod
    def column(cls, x: Sequence) -> "TropMatrix":
        return cls([[v] for v in x])

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(v) for v in row) for row in self.rows)
        return f"TropMatrix([{body}])"


def require_square(A: TropMatrix) -> int:
    if not A.is_square:
        raise DimensionMismatch(f"square matrix required, got {A.shape}")
    return A.n


def matmul(A: TropMatrix, B: TropMatrix) -> TropMatrix:
    if A.m != B.n:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    cols = list(zip(*B.rows))
    return TropMatrix(
        [[max((tmul(a, b) for a, b in zip(row, col)), default=EPS) for col in cols] for row in A.rows]
    )


def matvec(A: TropMatrix, x: Sequence[Scalar]) -> TropVector:
    if A.m != len(x):
        raise DimensionMismatch(f"cannot multiply {A.shape} by vector of length {len(x)}")
    return tuple(max(tmul(a, v) for a, v in zip(row, x)) for row in A.rows)


def quadratic_form(A: TropMatrix, x: Sequence[Scalar]) -> Scalar:
    """``x^T ⊗ A ⊗ x = max_{i,j} x_i + a_ij + x_j``; ``EPS`` if no finite term."""
    n = require_square(A)
    if len(x) != n:
        raise DimensionMismatch(f"vector of length {len(x)} for a {n}x{n} matrix")
    support = [i for i in range(n) if not is_eps(x[i])]
    best = EPS
    for i in support:
        row = A.rows[i]
        for j in support:
            a = row[j]
            if not is_eps(a):
                t = x[i] + a + x[j]
                if t > best:
                    best = t
    return best


def self_inner(x: Sequence[Scalar]) -> Scalar:
    """``x^T ⊗ x``, which is twice the largest entry."""
    top = max(x)
    return EPS if is_eps(top) else 2 * top


def max_norm(x: Sequence[Scalar]) -> Scalar:
    top = max(x)
    if is_eps(top):
        raise ZeroVector("max-norm of the zero vector")
    return top


def scale(x: Sequence[Scalar]) -> TropVector:
    """Subtract the max-norm from every entry, so the result has norm 0."""
    shift = tinv(max_norm(x))
    return tuple(tmul(v, shift) for v in x)


# -- file formats -----------------------------------------------------------

def _token(v: Scalar) -> str:
    return format_scalar(v)


def matrix_to_json(A: TropMatrix) -> str:
    return json.dumps({"n": A.n, "m": A.m, "rows": [[_token(v) for v in row] for row in A.rows]})


def matrix_from_json(text: str) -> TropMatrix:
    try:
        doc = json.loads(text, parse_float=Fraction, parse_constant=_json_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if isinstance(doc, list):
        rows = doc
    elif isinstance(doc, dict) and "rows" in doc:
        rows = doc["rows"]
    else:
        raise ParseError('expected {"n": .., "m": .., "rows": [[..], ..]}')
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("rows must be a list of lists")
    A = TropMatrix(rows)
    if isinstance(doc, dict):
        if "n" in doc and doc["n"] != A.n or "m" in doc and doc["m"] != A.m:
            raise ParseError(f"declared shape ({doc.get('n')}, {doc.get('m')}) != actual {A.shape}")
    return A


def _json_constant(name: str):
    if name == "-Infinity":
        return EPS
    raise ParseError(f"unsupported JSON constant {name}")


def matrix_to_csv(A: TropMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in A.rows:
        writer.writerow(_token(v) for v in row)
    return buf.getvalue()


def matrix_from_csv(text: str) -> TropMatrix:
    rows = [[cell.strip() for cell in row] for row in csv.reader(io.StringIO(text)) if any(c.strip() for c in row)]
    if not rows:
        raise ParseError("empty CSV")
    return TropMatrix(rows)


def load_matrix(path, fmt: str | None = None) -> TropMatrix:
    """Read a matrix file; ``fmt`` defaults to the file extension."""
    path = str(path)
    if fmt is None:
        fmt = "csv" if path.lower().endswith(".csv") else "json"
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "json":
        return matrix_from_json(text)
    if fmt == "csv":
        return matrix_from_csv(text)
    raise ParseError(f"unknown format {fmt!r}")
