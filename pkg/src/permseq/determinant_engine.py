"""Exact integer determinants."""
from __future__ import annotations

from enum import Enum
from typing import Optional

from .errors import CapExceededError, DomainError
from .matrix_core import Matrix

__all__ = ["DeterminantMethod", "determinant", "determinant_bareiss", "determinant_laplace"]

LAPLACE_CAP = 10


class DeterminantMethod(str, Enum):
    BAREISS = "bareiss"
    LAPLACE = "laplace"


def _require_square(X: Matrix) -> int:
    if not X.is_square:
        raise DomainError(f"determinant needs a square matrix, got {X.rows}x{X.cols}")
    return X.rows


def determinant_bareiss(X: Matrix) -> int:
    """Fraction-free Gaussian elimination.

    After step ``k`` every entry of the trailing block is a ``(k+1)``-order
    minor of ``X``, so the division by the previous pivot is always exact.
    """
    n = _require_square(X)
    M = X.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        row_k = M[k]
        for i in range(k + 1, n):
            row_i = M[i]
            a_ik = row_i[k]
            for j in range(k + 1, n):
                q, r = divmod(pivot * row_i[j] - a_ik * row_k[j], prev)
                if r:
                    raise ArithmeticError("inexact Bareiss division")
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def determinant_laplace(X: Matrix, cap: Optional[int] = None) -> int:
    """Signed cofactor expansion along rows, sharing repeated minors."""
    n = _require_square(X)
    cap = LAPLACE_CAP if cap is None else cap
    if n > cap:
        raise CapExceededError("laplace determinant", n, cap)
    rows = X.to_rows()
    support = [[(c, a) for c, a in enumerate(r) if a != 0] for r in rows]
    memo: dict[int, int] = {}

    def expand(r: int, used: int) -> int:
        if r == n:
            return 1
        hit = memo.get(used)
        if hit is not None:
            return hit
        total = 0
        for c, a in support[r]:
            if used >> c & 1:
                continue
            # position of column c among the columns still free in this minor
            pos = c - bin(used & ((1 << c) - 1)).count("1")
            term = a * expand(r + 1, used | (1 << c))
            total += -term if pos & 1 else term
        memo[used] = total
        return total

    return expand(0, 0)


def determinant(X: Matrix, method=DeterminantMethod.BAREISS, cap: Optional[int] = None) -> int:
    method = DeterminantMethod(method)
    if method is DeterminantMethod.LAPLACE:
        return determinant_laplace(X, cap)
    return determinant_bareiss(X)
