import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permseq import matrix_core as mc
from permseq.errors import DomainError, NotContractibleError
from permseq.matrix_core import (
    Matrix,
    build_A,
    build_B,
    build_H,
    build_K,
    build_S,
    contract_column,
    contract_row,
    find_contractible_column,
    hadamard,
)
from permseq.permanent_engines import permanent_laplace

from oracles import band, perm_bruteforce


def rows(X):
    return X.to_rows()


class TestMatrix:
    def test_entry_is_one_based(self):
        X = Matrix.from_rows([[1, 2], [3, 4]])
        assert X.entry(1, 1) == 1
        assert X.entry(2, 1) == 3
        with pytest.raises(IndexError):
            X.entry(0, 1)

    def test_wrong_entry_count(self):
        with pytest.raises(DomainError):
            Matrix(2, 2, (1, 2, 3))

    def test_empty(self):
        with pytest.raises(DomainError):
            Matrix(0, 1, ())
        with pytest.raises(DomainError):
            Matrix.from_rows([])

    def test_ragged_rows(self):
        with pytest.raises(DomainError, match="row 2"):
            Matrix.from_rows([[1, 2], [3]])

    def test_float_entries_rejected(self):
        with pytest.raises(TypeError):
            Matrix.from_rows([[1.5]])

    def test_transpose(self):
        X = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert rows(X.transpose()) == [[1, 4], [2, 5], [3, 6]]

    def test_big_integers_survive(self):
        big = 2 ** 300 + 1
        X = Matrix.from_rows([[big, -big]])
        assert X.entry(1, 2) == -big


class TestBuilders:
    def test_H3(self):
        assert rows(build_H(3)) == [[3, 2, 0], [1, 1, 2], [0, 1, 1]]

    def test_H1_H2(self):
        assert rows(build_H(1)) == [[3]]
        assert rows(build_H(2)) == [[3, 2], [1, 1]]

    def test_H5_row4(self):
        assert list(build_H(5).row(4)) == [0, 0, 1, 1, 2]

    def test_K(self):
        assert rows(build_K(3)) == [[1, 2, 0], [1, 3, 2], [0, 1, 1]]
        assert rows(build_K(1)) == [[1]]
        assert rows(build_K(2)) == [[1, 2], [1, 3]]

    def test_S(self):
        assert rows(build_S(3)) == [[1, 1, 1], [-1, 1, 1], [1, -1, 1]]
        assert rows(build_S(1)) == [[1]]
        assert list(build_S(4).row(4)) == [1, 1, -1, 1]

    def test_A_B(self):
        assert rows(build_A(3)) == [[3, 2, 0], [-1, 1, 2], [0, -1, 1]]
        assert rows(build_B(3)) == [[1, 2, 0], [-1, 3, 2], [0, -1, 1]]
        assert rows(build_A(1)) == [[3]]

    @pytest.mark.parametrize("builder", [build_H, build_K, build_S, build_A, build_B])
    def test_zero_order_rejected(self, builder):
        with pytest.raises(DomainError, match="empty matrix family"):
            builder(0)

    @pytest.mark.parametrize("n", range(1, 12))
    def test_against_band_oracle(self, n):
        assert rows(build_H(n)) == band(n, [3] + [1] * (n - 1), 1, 2)
        assert rows(build_K(n)) == band(n, ([1, 3] + [1] * n)[:n], 1, 2)
        assert rows(build_A(n)) == band(n, [3] + [1] * (n - 1), -1, 2)
        assert rows(build_B(n)) == band(n, ([1, 3] + [1] * n)[:n], -1, 2)

    @pytest.mark.parametrize("n", range(1, 20))
    def test_hadamard_identities(self, n):
        assert build_A(n) == hadamard(build_H(n), build_S(n))
        assert build_B(n) == hadamard(build_K(n), build_S(n))

    @pytest.mark.parametrize("family", "HKSAB")
    def test_builders_are_pure(self, family):
        assert mc.build(family, 7) == mc.build(family, 7)
        assert mc.build(family, 7).entries == mc.build(family, 7).entries

    def test_unknown_family(self):
        with pytest.raises(DomainError):
            mc.build("Q", 3)


class TestHadamard:
    def test_entrywise(self):
        assert rows(hadamard(Matrix.from_rows([[2, 3]]), Matrix.from_rows([[4, 5]]))) == [[8, 15]]

    def test_ones_is_identity(self):
        X = build_K(5)
        assert hadamard(X, Matrix.filled(5, 5, 1)) == X

    def test_shape_mismatch(self):
        with pytest.raises(DomainError):
            hadamard(build_H(2), build_H(3))


class TestContraction:
    def test_H4_first_row(self):
        C = contract_column(build_H(4), 1)
        assert rows(C) == [[5, 6, 0], [1, 1, 2], [0, 1, 1]]

    def test_K4_first_row(self):
        C = contract_column(build_K(4), 1)
        assert list(C.row(1)) == [5, 2, 0]

    def test_two_by_two(self):
        assert rows(contract_column(Matrix.from_rows([[1, 7], [1, 9]]), 1)) == [[16]]

    def test_rows_need_not_be_adjacent(self):
        X = Matrix.from_rows([[2, 1, 0], [0, 4, 5], [3, 6, 7]])
        # rows 1 and 3 meet column 1: 3*(2,1,0) + 2*(3,6,7) = (12,15,14)
        assert rows(contract_column(X, 1)) == [[15, 14], [4, 5]]

    def test_not_contractible(self):
        with pytest.raises(NotContractibleError, match="column 1"):
            contract_column(Matrix.filled(3, 3, 1), 1)
        with pytest.raises(NotContractibleError):
            contract_column(Matrix.from_rows([[1, 0], [0, 1]]), 1)

    def test_too_small(self):
        with pytest.raises(DomainError):
            contract_column(Matrix.from_rows([[1, 2]]), 1)

    def test_negative_entries_allowed(self):
        C = contract_column(build_A(3), 1)
        assert rows(C) == [[-1 * 2 + 3 * 1, 3 * 2], [-1, 1]]

    def test_contract_row_duality(self):
        H = build_H(4)
        assert contract_row(H.transpose(), 1) == contract_column(H, 1).transpose()
        assert rows(contract_row(Matrix.from_rows([[1, 1], [7, 9]]), 1)) == [[16]]

    def test_contract_row_error(self):
        X = Matrix.from_rows([[1, 1, 1], [0, 1, 0], [1, 0, 1]])
        with pytest.raises(NotContractibleError, match="row 1"):
            contract_row(X, 1)

    def test_find_contractible_column(self):
        assert find_contractible_column(build_H(5)) == 1
        assert find_contractible_column(Matrix.filled(3, 3, 1)) is None
        assert find_contractible_column(Matrix.from_rows([[0, 1], [0, 1]])) == 2


nonneg_matrices = st.integers(2, 6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.lists(st.integers(0, 9), min_size=n, max_size=n), min_size=n, max_size=n),
        st.integers(0, n - 1),
        st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True),
    )
)


@settings(max_examples=200, deadline=None)
@given(nonneg_matrices)
def test_contraction_preserves_permanent(case):
    n, data, k, (i, j) = case
    for r in range(n):
        data[r][k] = max(data[r][k], 1) if r in (i, j) else 0
    X = Matrix.from_rows(data)
    C = contract_column(X, k + 1)
    assert C.shape == (n - 1, n - 1)
    assert perm_bruteforce(C.to_rows()) == perm_bruteforce(data)
    assert permanent_laplace(C) == permanent_laplace(X)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 6), st.integers(2, 6), st.randoms(use_true_random=False))
def test_row_column_duality_random(m, n, rng):
    X = Matrix.from_rows([[rng.choice([0, 0, 1, -2, 3]) for _ in range(n)] for _ in range(m)])
    for k in range(1, n + 1):
        try:
            expected = contract_column(X, k).transpose()
        except NotContractibleError:
            with pytest.raises(NotContractibleError):
                contract_row(X.transpose(), k)
        else:
            assert contract_row(X.transpose(), k) == expected


class TestSerialization:
    def test_json_round_trip(self):
        X = Matrix.from_rows([[2 ** 100, -1], [0, 7]])
        doc = mc.matrix_to_json(X)
        assert doc == {"rows": 2, "cols": 2, "entries": [[str(2 ** 100), "-1"], ["0", "7"]]}
        assert mc.matrix_from_json(json.dumps(doc)) == X

    def test_json_accepts_plain_ints(self):
        assert mc.matrix_from_json({"rows": 1, "cols": 2, "entries": [[1, 2]]}) == Matrix.from_rows([[1, 2]])

    def test_json_shape_mismatch(self):
        with pytest.raises(DomainError):
            mc.matrix_from_json({"rows": 2, "cols": 2, "entries": [[1, 2]]})

    def test_json_bad_entry(self):
        with pytest.raises(DomainError):
            mc.matrix_from_json({"rows": 1, "cols": 1, "entries": [["x"]]})

    def test_csv_round_trip(self):
        X = build_B(4)
        text = mc.matrix_to_csv(X)
        assert text.splitlines()[1] == "-1,3,2,0"
        assert mc.matrix_from_csv(text) == X
