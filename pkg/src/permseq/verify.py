"""Verification suites tying the matrix families to the sequences.

Every suite returns a :class:`VerificationReport`; a failed check is recorded
in the report (the first one, with the engine that produced it) rather than
raised, so one sweep shows the whole picture.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional

from . import matrix_core as mc
from . import permanent_engines as pe
from .determinant_engine import DeterminantMethod, determinant_bareiss
from .matrix_core import Matrix
from .permanent_engines import PermanentMethod
from .sequences import SequenceKind, cassini_residual, term

__all__ = [
    "Failure",
    "VerificationReport",
    "SUITES",
    "verify_thm1",
    "verify_thm2",
    "verify_detper",
    "verify_cassini",
    "verify_contraction_invariance",
    "run_suite",
    "random_contractible_matrix",
]

SUITES = ("thm1", "thm2", "detper", "cassini", "contraction")

DEFAULT_MAX_N = {"thm1": 9, "thm2": 9, "detper": 64, "cassini": 256, "contraction": 6}


@dataclass(frozen=True)
class Failure:
    n: int
    expected: int
    actual: int
    engine: str


@dataclass
class VerificationReport:
    suite: str
    max_n: int
    effective_max_n: int
    engine: Optional[str] = None
    checks_run: int = 0
    first_failure: Optional[Failure] = None
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    @property
    def clamped(self) -> bool:
        return self.effective_max_n < self.max_n

    def check(self, n: int, expected: int, actual: int, engine: str) -> bool:
        self.checks_run += 1
        if expected != actual and self.first_failure is None:
            self.first_failure = Failure(n, expected, actual, engine)
        return expected == actual

    def to_json(self) -> dict:
        doc = {
            "suite": self.suite,
            "max_n": self.max_n,
            "effective_max_n": self.effective_max_n,
            "clamped": self.clamped,
            "engine": self.engine,
            "seed": self.seed,
            "checks_run": self.checks_run,
            "passed": self.passed,
            "first_failure": None,
        }
        f = self.first_failure
        if f is not None:
            doc["first_failure"] = {
                "n": f.n, "expected": str(f.expected), "actual": str(f.actual), "engine": f.engine,
            }
        return doc

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.suite}: {self.checks_run} checks, n <= {self.effective_max_n}"
        if self.engine:
            line += f" [{self.engine}]"
        if self.clamped:
            line += f" (clamped from {self.max_n})"
        f = self.first_failure
        if f is not None:
            line += f"; first failure at n={f.n}: expected {f.expected}, got {f.actual} ({f.engine})"
        return line


def _engine_cap(engine: PermanentMethod) -> Optional[int]:
    if engine is PermanentMethod.LAPLACE:
        return pe.LAPLACE_CAP
    if engine is PermanentMethod.RYSER:
        return pe.ryser_cap()
    return None


def _verify_family(suite, family, kind, offset, max_n, engine) -> VerificationReport:
    engine = PermanentMethod(engine)
    cap = _engine_cap(engine)
    effective = max_n if cap is None else min(max_n, cap)
    report = VerificationReport(suite, max_n, effective, engine.value)
    for n in range(1, effective + 1):
        X = mc.build(family, n)
        report.check(n, term(kind, n + offset), pe.permanent(X, engine), engine.value)
    return report


def verify_thm1(max_n: int = 9, engine=PermanentMethod.CONTRACTION) -> VerificationReport:
    """per(H_n) == J[n+2] for n = 1..max_n."""
    return _verify_family("thm1", "H", SequenceKind.JACOBSTHAL, 2, max_n, engine)


def verify_thm2(max_n: int = 9, engine=PermanentMethod.CONTRACTION) -> VerificationReport:
    """per(K_n) == j[n] for n = 1..max_n."""
    return _verify_family("thm2", "K", SequenceKind.JACOBSTHAL_LUCAS, 0, max_n, engine)


def verify_detper(max_n: int = 64) -> VerificationReport:
    """det(A_n) == J[n+2] and det(B_n) == j[n], cross-checked with contraction permanents."""
    report = VerificationReport("detper", max_n, max_n, DeterminantMethod.BAREISS.value)
    bareiss, contraction = DeterminantMethod.BAREISS.value, PermanentMethod.CONTRACTION.value
    for n in range(1, max_n + 1):
        J = term(SequenceKind.JACOBSTHAL, n + 2)
        j = term(SequenceKind.JACOBSTHAL_LUCAS, n)
        report.check(n, J, determinant_bareiss(mc.build("A", n)), bareiss)
        report.check(n, j, determinant_bareiss(mc.build("B", n)), bareiss)
        report.check(n, J, pe.permanent_contraction(mc.build("H", n)), contraction)
        report.check(n, j, pe.permanent_contraction(mc.build("K", n)), contraction)
    return report


def verify_cassini(max_n: int = 256) -> VerificationReport:
    report = VerificationReport("cassini", max_n, max_n)
    for n in range(1, max_n + 1):
        report.check(n, 0, cassini_residual(n), "sequences")
    return report


def random_contractible_matrix(rng: random.Random, n: int, high: int = 9) -> Matrix:
    """Random ``n x n`` matrix, entries in ``0..high``, with one column forced to two nonzeros."""
    rows = [[rng.randint(0, high) for _ in range(n)] for _ in range(n)]
    k = rng.randrange(n)
    i, j = rng.sample(range(n), 2)
    for r in range(n):
        rows[r][k] = rng.randint(1, high) if r in (i, j) else 0
    return Matrix.from_rows(rows)


def verify_contraction_invariance(trials: int = 200, max_n: int = 6, seed: int = 42,
                                  fixtures: Optional[Iterable[Matrix]] = None) -> VerificationReport:
    """One contraction step preserves the permanent of a nonnegative matrix.

    Matrices come from ``fixtures`` when given, otherwise ``trials`` seeded
    random ones of order ``2..max_n``.  Only nonnegative square matrices with a
    contractible column count as checks.
    """
    effective = min(max_n, pe.LAPLACE_CAP)
    report = VerificationReport("contraction", max_n, effective, PermanentMethod.LAPLACE.value,
                                seed=None if fixtures is not None else seed)
    if fixtures is None:
        if effective < 2:
            return report
        rng = random.Random(seed)
        fixtures = (random_contractible_matrix(rng, rng.randint(2, effective)) for _ in range(trials))
    for X in fixtures:
        k = mc.find_contractible_column(X)
        if k is None or not X.is_square or not X.is_nonnegative() or X.rows > effective:
            continue
        before = pe.permanent_laplace(X)
        after = pe.permanent_laplace(mc.contract_column(X, k))
        report.check(X.rows, before, after, PermanentMethod.CONTRACTION.value)
    return report


def run_suite(name: str, max_n: Optional[int] = None, engine=PermanentMethod.CONTRACTION,
              seed: int = 42, trials: int = 200) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    if max_n is None:
        max_n = DEFAULT_MAX_N[name]
    if name == "thm1":
        return verify_thm1(max_n, engine)
    if name == "thm2":
        return verify_thm2(max_n, engine)
    if name == "detper":
        return verify_detper(max_n)
    if name == "cassini":
        return verify_cassini(max_n)
    return verify_contraction_invariance(trials, max_n, seed)
