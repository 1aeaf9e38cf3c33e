"""Exact permanent engines.

Three independent routes to the same number:

* :func:`permanent_laplace` expands along rows straight from the definition,
* :func:`permanent_ryser` uses inclusion-exclusion over column subsets,
* :func:`permanent_contraction` contracts the matrix column by column down to
  a 2x2 block; valid for nonnegative matrices only.
"""
from __future__ import annotations

import os
from bisect import bisect_left
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .errors import CapExceededError, DomainError, NegativeEntryError, StuckContractionError
from .matrix_core import Matrix, matrix_to_json

__all__ = [
    "PermanentMethod",
    "LAPLACE_CAP",
    "RYSER_CAP",
    "ryser_cap",
    "permanent",
    "permanent_laplace",
    "permanent_ryser",
    "permanent_contraction",
    "contraction_chain",
    "ContractionStep",
    "ContractionTrace",
]

LAPLACE_CAP = 10
RYSER_CAP = 24
RYSER_CAP_ENV = "PERMSEQ_MAX_RYSER_N"

# Below this order the pure-Python Gray-code loop is as fast as numpy.
_RYSER_VECTOR_MIN_N = 12
_RYSER_CHUNK = 1 << 16
_INT64_LIMIT = 1 << 62


class PermanentMethod(str, Enum):
    LAPLACE = "laplace"
    RYSER = "ryser"
    CONTRACTION = "contraction"


def ryser_cap() -> int:
    """Current Ryser cap, honouring ``PERMSEQ_MAX_RYSER_N`` when set."""
    raw = os.environ.get(RYSER_CAP_ENV)
    if raw is None or raw.strip() == "":
        return RYSER_CAP
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{RYSER_CAP_ENV} must be an integer, got {raw!r}") from None


def _require_square(X: Matrix, what: str) -> int:
    if not X.is_square:
        raise DomainError(f"{what} needs a square matrix, got {X.rows}x{X.cols}")
    return X.rows


def permanent_laplace(X: Matrix, cap: Optional[int] = None) -> int:
    """Sum over permutations of products, expanded row by row.

    Minors are keyed by the set of columns already used, so each distinct
    minor is expanded once.
    """
    n = _require_square(X, "permanent")
    cap = LAPLACE_CAP if cap is None else cap
    if n > cap:
        raise CapExceededError("laplace permanent", n, cap)
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
            if not used >> c & 1:
                total += a * expand(r + 1, used | (1 << c))
        memo[used] = total
        return total

    return expand(0, 0)


def _ryser_python(rows: list[list[int]]) -> int:
    n = len(rows)
    cols = [[rows[i][j] for i in range(n)] for j in range(n)]
    sums = [0] * n
    total = 0
    gray = 0
    for k in range(1, 1 << n):
        bit = (k & -k).bit_length() - 1
        gray ^= 1 << bit
        col = cols[bit]
        if gray >> bit & 1:
            for i in range(n):
                sums[i] += col[i]
        else:
            for i in range(n):
                sums[i] -= col[i]
        prod = 1
        for s in sums:
            if s == 0:
                prod = 0
                break
            prod *= s
        # |S| has the parity of k along a Gray-code walk.
        total += -prod if k & 1 else prod
    return -total if n & 1 else total


def _ryser_numpy(rows: list[list[int]]) -> int:
    """Chunked Gray-code Ryser in int64; caller guarantees no overflow."""
    n = len(rows)
    A = np.array(rows, dtype=np.int64)
    sums = np.zeros(n, dtype=np.int64)
    total = 0
    top = 1 << n
    for lo in range(1, top, _RYSER_CHUNK):
        k = np.arange(lo, min(lo + _RYSER_CHUNK, top), dtype=np.int64)
        bit = np.log2(k & -k).astype(np.int64)
        gray = k ^ (k >> 1)
        sign = np.where((gray >> bit) & 1, 1, -1).astype(np.int64)
        deltas = A[:, bit].T * sign[:, None]
        running = sums + np.cumsum(deltas, axis=0)
        prods = np.prod(running, axis=1)
        prods[k & 1 == 1] *= -1
        total += int(prods.sum())
        sums = running[-1]
    return -total if n & 1 else total


def _fits_int64(rows: list[list[int]]) -> bool:
    bound = 1 << len(rows)
    for r in rows:
        bound *= sum(abs(a) for a in r)
        if bound >= _INT64_LIMIT:
            return False
    return True


def permanent_ryser(X: Matrix, cap: Optional[int] = None) -> int:
    """Ryser's inclusion-exclusion formula with Gray-code ordered subsets.

    Each subset differs from its predecessor by one column, so the row sums
    are updated incrementally.  Large orders run vectorised in int64 when an
    a-priori bound rules out overflow, otherwise in Python integers.
    """
    n = _require_square(X, "permanent")
    cap = ryser_cap() if cap is None else cap
    if n > cap:
        raise CapExceededError("ryser permanent", n, cap)
    rows = X.to_rows()
    if n >= _RYSER_VECTOR_MIN_N and _fits_int64(rows):
        return _ryser_numpy(rows)
    return _ryser_python(rows)


@dataclass(frozen=True)
class ContractionStep:
    """One contraction; indices are 1-based within the matrix being contracted."""

    pivot_column: int
    merged_rows: tuple[int, int]
    leading_pair: tuple[int, int]


@dataclass(frozen=True)
class ContractionTrace:
    steps: tuple[ContractionStep, ...]
    terminal: Matrix
    value: int

    def to_json(self) -> dict:
        return {
            "steps": [
                {
                    "pivot": s.pivot_column,
                    "rows": list(s.merged_rows),
                    "leading": [str(v) for v in s.leading_pair],
                }
                for s in self.steps
            ],
            "terminal": matrix_to_json(self.terminal),
            "value": str(self.value),
        }


@dataclass
class _SparseState:
    """Mutable working copy used by the contraction chain.

    Rows and columns keep their original ids; deletions only shrink the
    active id lists, so no step touches more than the two merged rows.
    """

    rows: dict[int, dict[int, int]]
    support: dict[int, set[int]]
    active_rows: list[int]
    active_cols: list[int]
    steps: list[ContractionStep] = field(default_factory=list)

    @classmethod
    def from_matrix(cls, X: Matrix) -> "_SparseState":
        rows: dict[int, dict[int, int]] = {}
        support: dict[int, set[int]] = {c: set() for c in range(X.cols)}
        for i, r in enumerate(X.to_rows()):
            rows[i] = {c: a for c, a in enumerate(r) if a != 0}
            for c in rows[i]:
                support[c].add(i)
        return cls(rows, support, list(range(X.rows)), list(range(X.cols)))

    @property
    def size(self) -> int:
        return len(self.active_rows)

    def pivot(self) -> Optional[tuple[int, int]]:
        for pos, c in enumerate(self.active_cols):
            if len(self.support[c]) == 2:
                return pos, c
        return None

    def contract(self, pos: int, k: int) -> None:
        i, j = sorted(self.support[k])
        r_i, r_j = self.rows[i], self.rows[j]
        a_ik, a_jk = r_i[k], r_j[k]
        merged: dict[int, int] = {}
        for c in r_i.keys() | r_j.keys():
            v = a_jk * r_i.get(c, 0) + a_ik * r_j.get(c, 0)
            if v != 0 and c != k:
                merged[c] = v
        for c in r_i:
            self.support[c].discard(i)
        for c in r_j:
            self.support[c].discard(j)
        for c in merged:
            self.support[c].add(i)
        self.rows[i] = merged
        del self.rows[j]
        del self.support[k]
        row_pos_i = bisect_left(self.active_rows, i)
        row_pos_j = bisect_left(self.active_rows, j)
        del self.active_rows[row_pos_j]
        del self.active_cols[pos]

        first = self.rows[self.active_rows[0]]
        lead = (first.get(self.active_cols[0], 0), first.get(self.active_cols[1], 0))
        self.steps.append(ContractionStep(pos + 1, (row_pos_i + 1, row_pos_j + 1), lead))

    def to_matrix(self) -> Matrix:
        return Matrix.from_rows(
            [[self.rows[i].get(c, 0) for c in self.active_cols] for i in self.active_rows]
        )


def _small_permanent(X: Matrix) -> int:
    if X.rows == 1:
        return X.entries[0]
    a, b, c, d = X.entries
    return a * d + b * c


def contraction_chain(X: Matrix) -> ContractionTrace:
    """Contract on the smallest contractible column until at most 2x2 remains."""
    _require_square(X, "contraction permanent")
    if not X.is_nonnegative():
        raise NegativeEntryError("contraction invariance requires nonnegative matrix")
    state = _SparseState.from_matrix(X)
    while state.size > 2:
        found = state.pivot()
        if found is None:
            raise StuckContractionError(
                f"stuck: no contractible column in the remaining {state.size}x{state.size} matrix")
        state.contract(*found)
    terminal = state.to_matrix()
    return ContractionTrace(tuple(state.steps), terminal, _small_permanent(terminal))


def permanent_contraction(X: Matrix) -> int:
    return contraction_chain(X).value


def permanent(X: Matrix, method=PermanentMethod.RYSER, cap: Optional[int] = None) -> int:
    method = PermanentMethod(method)
    if method is PermanentMethod.LAPLACE:
        return permanent_laplace(X, cap)
    if method is PermanentMethod.RYSER:
        return permanent_ryser(X, cap)
    return permanent_contraction(X)
