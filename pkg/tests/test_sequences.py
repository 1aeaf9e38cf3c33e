import pytest

from permseq.errors import DomainError
from permseq.sequences import SequenceKind, cassini_residual, term, term_range

J = SequenceKind.JACOBSTHAL
j = SequenceKind.JACOBSTHAL_LUCAS

# value table for n = 1..9, verbatim
TABLE_J = [1, 1, 3, 5, 11, 21, 43, 85, 171]
TABLE_j = [1, 5, 7, 17, 31, 65, 127, 257, 511]


def test_table():
    assert term_range(J, 1, 9) == TABLE_J
    assert term_range(j, 1, 9) == TABLE_j


def test_seeds():
    assert term(J, 0) == 0
    assert term(J, 1) == 1
    assert term(j, 0) == 2
    assert term(j, 1) == 1


def test_pointwise():
    assert term(J, 9) == 171
    assert term_range(J, 4, 4) == [5]
    assert term(J, 10) == 341
    assert term(J, 11) == 683


def test_string_kinds():
    assert term("jacobsthal-lucas", 3) == 7
    with pytest.raises(DomainError):
        term("fibonacci", 3)


def test_errors():
    with pytest.raises(DomainError):
        term(J, -1)
    with pytest.raises(DomainError):
        term_range(J, 3, 2)
    with pytest.raises(DomainError):
        cassini_residual(0)


@pytest.mark.parametrize("kind", [J, j])
def test_recurrence_closure(kind):
    xs = term_range(kind, 0, 514)
    for n in range(513):
        assert xs[n + 2] == xs[n + 1] + 2 * xs[n]
    assert term(kind, 512) == xs[512]


@pytest.mark.parametrize("kind", [J, j])
def test_range_matches_term(kind):
    a = 17
    for i, v in enumerate(term_range(kind, a, 60)):
        assert v == term(kind, a + i)


@pytest.mark.parametrize("kind", [J, j])
def test_monotone(kind):
    xs = term_range(kind, 2, 200)
    assert all(b > a for a, b in zip(xs, xs[1:]))


def test_closed_forms_as_independent_oracle():
    # (2^n - (-1)^n) / 3 and 2^n + (-1)^n
    for n in range(300):
        assert 3 * term(J, n) == 2 ** n - (-1) ** n
        assert term(j, n) == 2 ** n + (-1) ** n


@pytest.mark.parametrize("n", [1, 3, 8])
def test_cassini_examples(n):
    assert cassini_residual(n) == 0


def test_cassini_hand_values():
    # J4*J2 - J3^2 = 5 - 9 = -4 = (-1)^3 2^2 ; 171*43 - 85^2 = 128 = 2^7
    assert 5 * 1 - 3 ** 2 == -4
    assert 171 * 43 - 85 ** 2 == 128


def test_cassini_range():
    assert all(cassini_residual(n) == 0 for n in range(1, 257))
