"""Dense exact-integer matrices, the banded families and column/row contraction.

Indices in the public API are 1-based: ``X.entry(1, 1)`` is the top-left
entry, and ``contract_column(X, 1)`` contracts on the first column.
"""
from __future__ import annotations

import csv
import io
import json
import operator
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import DomainError, NotContractibleError

__all__ = [
    "Matrix",
    "FamilyKind",
    "build",
    "build_H",
    "build_K",
    "build_S",
    "build_A",
    "build_B",
    "hadamard",
    "contract_column",
    "contract_row",
    "find_contractible_column",
    "matrix_to_json",
    "matrix_from_json",
    "matrix_to_csv",
    "matrix_from_csv",
]


@dataclass(frozen=True)
class Matrix:
    """Immutable ``rows x cols`` matrix of Python integers, stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DomainError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        entries = tuple(operator.index(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DomainError(
                f"expected {self.rows * self.cols} entries for a {self.rows}x{self.cols} "
                f"matrix, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DomainError("empty matrix")
        width = len(rows[0])
        for i, r in enumerate(rows, start=1):
            if len(r) != width:
                raise DomainError(f"row {i} has {len(r)} entries, expected {width}")
        return cls(len(rows), width, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def filled(cls, rows: int, cols: int, value: int) -> "Matrix":
        return cls(rows, cols, (value,) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> int:
        """Entry in row ``i``, column ``j`` (both 1-based)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"entry ({i},{j}) outside a {self.rows}x{self.cols} matrix")
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def row(self, i: int) -> tuple:
        if not 1 <= i <= self.rows:
            raise IndexError(f"row {i} outside a {self.rows}x{self.cols} matrix")
        start = (i - 1) * self.cols
        return self.entries[start:start + self.cols]

    def column(self, j: int) -> tuple:
        if not 1 <= j <= self.cols:
            raise IndexError(f"column {j} outside a {self.rows}x{self.cols} matrix")
        return self.entries[j - 1::self.cols]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[k:k + c]) for k in range(0, len(self.entries), c)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(e for j in range(self.cols) for e in self.entries[j::self.cols]))

    def is_nonnegative(self) -> bool:
        return all(e >= 0 for e in self.entries)

    def __str__(self) -> str:
        rows = self.to_rows()
        width = max(len(str(e)) for e in self.entries)
        return "\n".join(" ".join(str(e).rjust(width) for e in r) for r in rows)


class FamilyKind(str, Enum):
    H = "H"
    K = "K"
    S = "S"
    A = "A"
    B = "B"


def _check_order(n: int) -> None:
    if n < 1:
        raise DomainError(f"empty matrix family: order must be >= 1, got {n}")


def _band(n: int, diagonal: Sequence[int], sub: int, sup: int) -> Matrix:
    _check_order(n)
    entries = [0] * (n * n)
    for i in range(n):
        entries[i * n + i] = diagonal[i]
        if i + 1 < n:
            entries[(i + 1) * n + i] = sub
            entries[i * n + i + 1] = sup
    return Matrix(n, n, tuple(entries))


def build_H(n: int) -> Matrix:
    """Tridiagonal band (1, 1, 2) with a 3 in the top-left corner."""
    _check_order(n)
    return _band(n, [3] + [1] * (n - 1), 1, 2)


def build_K(n: int) -> Matrix:
    """Tridiagonal band (1, 1, 2) with a 3 in diagonal position (2, 2)."""
    _check_order(n)
    diagonal = [1] * n
    if n >= 2:
        diagonal[1] = 3
    return _band(n, diagonal, 1, 2)


def build_S(n: int) -> Matrix:
    """Sign matrix: -1 on the subdiagonal, 1 everywhere else."""
    _check_order(n)
    return Matrix(n, n, tuple(-1 if i == j + 1 else 1 for i in range(n) for j in range(n)))


def build_A(n: int) -> Matrix:
    return hadamard(build_H(n), build_S(n))


def build_B(n: int) -> Matrix:
    return hadamard(build_K(n), build_S(n))


_BUILDERS = {
    FamilyKind.H: "build_H",
    FamilyKind.K: "build_K",
    FamilyKind.S: "build_S",
    FamilyKind.A: "build_A",
    FamilyKind.B: "build_B",
}


def build(family, n: int) -> Matrix:
    """Build a member of ``family`` (a :class:`FamilyKind` or its letter)."""
    try:
        kind = FamilyKind(family)
    except ValueError:
        raise DomainError(f"unknown matrix family {family!r}; expected one of H, K, S, A, B") from None
    return globals()[_BUILDERS[kind]](n)


def hadamard(X: Matrix, Y: Matrix) -> Matrix:
    if X.shape != Y.shape:
        raise DomainError(f"Hadamard product needs equal shapes, got {X.rows}x{X.cols} "
                          f"and {Y.rows}x{Y.cols}")
    return Matrix(X.rows, X.cols, tuple(a * b for a, b in zip(X.entries, Y.entries)))


def _nonzero_rows(X: Matrix, k: int) -> list[int]:
    return [i for i, e in enumerate(X.column(k), start=1) if e != 0]


def contract_column(X: Matrix, k: int) -> Matrix:
    """Contract ``X`` on column ``k``.

    With ``i < j`` the two rows holding the nonzeros of column ``k``, row
    ``i`` becomes ``X[j,k] * r_i + X[i,k] * r_j``; row ``j`` and column
    ``k`` are then deleted.
    """
    if X.rows < 2 or X.cols < 2:
        raise DomainError(f"contraction needs at least a 2x2 matrix, got {X.rows}x{X.cols}")
    if not 1 <= k <= X.cols:
        raise DomainError(f"column {k} outside a {X.rows}x{X.cols} matrix")
    nz = _nonzero_rows(X, k)
    if len(nz) != 2:
        raise NotContractibleError(
            f"not contractible on column {k}: it has {len(nz)} nonzero entries, expected 2")
    i, j = nz
    a_ik, a_jk = X.entry(i, k), X.entry(j, k)
    r_i, r_j = X.row(i), X.row(j)
    merged = [a_jk * x + a_ik * y for x, y in zip(r_i, r_j)]

    out = []
    for r in range(1, X.rows + 1):
        if r == j:
            continue
        src = merged if r == i else X.row(r)
        out.extend(e for c, e in enumerate(src, start=1) if c != k)
    return Matrix(X.rows - 1, X.cols - 1, tuple(out))


def contract_row(X: Matrix, k: int) -> Matrix:
    """Contract ``X`` on row ``k`` (the transpose dual of :func:`contract_column`)."""
    try:
        return contract_column(X.transpose(), k).transpose()
    except NotContractibleError:
        nz = sum(1 for e in X.row(k) if e != 0) if 1 <= k <= X.rows else 0
        raise NotContractibleError(
            f"not contractible on row {k}: it has {nz} nonzero entries, expected 2") from None


def find_contractible_column(X: Matrix) -> Optional[int]:
    """Smallest column index holding exactly two nonzeros, or ``None``."""
    for k in range(1, X.cols + 1):
        if sum(1 for e in X.column(k) if e != 0) == 2:
            return k
    return None


# -- serialization ---------------------------------------------------------

def matrix_to_json(X: Matrix) -> dict:
    return {
        "rows": X.rows,
        "cols": X.cols,
        "entries": [[str(e) for e in r] for r in X.to_rows()],
    }


def matrix_from_json(doc) -> Matrix:
    """Parse the ``{"rows", "cols", "entries"}`` document (a dict or JSON text)."""
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    try:
        rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    except (KeyError, TypeError):
        raise DomainError("matrix JSON must be an object with rows, cols and entries") from None
    try:
        parsed = [[int(e) for e in r] for r in entries]
    except (TypeError, ValueError) as exc:
        raise DomainError(f"matrix entries must be decimal integers: {exc}") from None
    X = Matrix.from_rows(parsed)
    if X.shape != (rows, cols):
        raise DomainError(f"declared shape {rows}x{cols} does not match entries ({X.rows}x{X.cols})")
    return X


def matrix_to_csv(X: Matrix) -> str:
    return "".join(",".join(str(e) for e in r) + "\n" for r in X.to_rows())


def matrix_from_csv(text: str) -> Matrix:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    try:
        return Matrix.from_rows([[int(e) for e in r] for r in rows])
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"matrix entries must be decimal integers: {exc}") from None
