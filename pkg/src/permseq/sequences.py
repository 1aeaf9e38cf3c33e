"""Jacobsthal and Jacobsthal-Lucas numbers.

Both sequences obey ``x[n+2] = x[n+1] + 2*x[n]``; they differ only in their
seeds, (0, 1) and (2, 1).  Terms are computed by plain iteration so that this
module stays independent of the matrix engines it is used to check.
"""
from __future__ import annotations

from enum import Enum

from .errors import DomainError

__all__ = ["SequenceKind", "term", "term_range", "cassini_residual"]


class SequenceKind(str, Enum):
    JACOBSTHAL = "jacobsthal"
    JACOBSTHAL_LUCAS = "jacobsthal-lucas"

    @property
    def seeds(self) -> tuple[int, int]:
        return (0, 1) if self is SequenceKind.JACOBSTHAL else (2, 1)


def _kind(kind) -> SequenceKind:
    try:
        return SequenceKind(kind)
    except ValueError:
        raise DomainError(f"unknown sequence {kind!r}") from None


def term(kind, n: int) -> int:
    """The ``n``-th term (``n >= 0``) of the sequence selected by ``kind``."""
    if n < 0:
        raise DomainError(f"negative index {n}: negatively subscripted terms are not supported")
    a, b = _kind(kind).seeds
    for _ in range(n):
        a, b = b, b + 2 * a
    return a


def term_range(kind, start: int, stop: int) -> list[int]:
    """Terms ``start..stop`` inclusive, in a single pass."""
    if start < 0 or stop < start:
        raise DomainError(f"invalid index range [{start}, {stop}]")
    a, b = _kind(kind).seeds
    out = []
    for n in range(stop + 1):
        if n >= start:
            out.append(a)
        a, b = b, b + 2 * a
    return out


def cassini_residual(n: int) -> int:
    """``J[n+1]*J[n-1] - J[n]**2 - (-1)**n * 2**(n-1)``; zero when the identity holds."""
    if n < 1:
        raise DomainError(f"Cassini residual needs n >= 1, got {n}")
    prev, cur, nxt = term_range(SequenceKind.JACOBSTHAL, n - 1, n + 1)
    sign = -1 if n % 2 else 1
    return nxt * prev - cur * cur - sign * (1 << (n - 1))
