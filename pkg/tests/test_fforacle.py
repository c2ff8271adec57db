"""Tests of the finite-field brute-force oracle."""

import pytest

from charvar.errors import TooLargeError
from charvar.fforacle import (
    MAX_FIELD_SIZE,
    MatTuple,
    PrimeField,
    VerifyRow,
    count_irr_classes,
    count_irr_tuples,
    enumerate_gl,
    gl_order,
    is_abs_irreducible,
    overall_status,
    verify_cases,
)

SUPPORTED_SIZES = [2, 3, 4, 5, 7, 8, 9]


class TestPrimeField:
    @pytest.mark.parametrize("q", SUPPORTED_SIZES)
    def test_construction_passes_axiom_audit(self, q):
        field = PrimeField(q)
        assert field.q == q

    @pytest.mark.parametrize("q", [0, 1, 6, 10, 12])
    def test_rejects_non_prime_powers_and_big_sizes(self, q):
        with pytest.raises(ValueError):
            PrimeField(q)

    def test_characteristics(self):
        assert PrimeField(4).p == 2
        assert PrimeField(8).p == 2
        assert PrimeField(9).p == 3
        assert PrimeField(7).p == 7

    @pytest.mark.parametrize("q", [4, 8, 9])
    def test_frobenius_is_additive(self, q):
        # (a + b)^p = a^p + b^p distinguishes true fields from wrong tables.
        field = PrimeField(q)

        def power(a, e):
            out = 1
            for _ in range(e):
                out = field.mul[out][a]
            return out

        for a in range(q):
            for b in range(q):
                lhs = power(field.add[a][b], field.p)
                rhs = field.add[power(a, field.p)][power(b, field.p)]
                assert lhs == rhs

    def test_det_of_identity_and_singular(self):
        field = PrimeField(3)
        assert field.det(field.identity(3)) == 1
        assert field.det(((1, 2), (2, 1))) == 0  # rows proportional mod 3

    def test_det_multiplicative(self):
        field = PrimeField(5)
        a = ((1, 2), (3, 4))
        b = ((2, 0), (1, 3))
        lhs = field.det(field.mat_mul(a, b))
        rhs = field.mul[field.det(a)][field.det(b)]
        assert lhs == rhs


class TestEnumeration:
    def test_gl_order_values(self):
        assert gl_order(1, 5) == 4
        assert gl_order(2, 2) == 6
        assert gl_order(2, 3) == 48
        assert gl_order(3, 2) == 168

    @pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (2, 4), (3, 2)])
    def test_enumerate_gl_count(self, n, q):
        # enumerate_gl also asserts the count internally; check len anyway.
        assert len(enumerate_gl(n, PrimeField(q))) == gl_order(n, q)

    def test_matrix_guard(self):
        with pytest.raises(TooLargeError):
            enumerate_gl(4, PrimeField(3))  # 3^16 matrices

    def test_tuple_guard(self):
        with pytest.raises(TooLargeError):
            count_irr_tuples(2, 2, PrimeField(8))  # 3528^2 tuples

    def test_mat_tuple_rejects_singular(self):
        field = PrimeField(2)
        with pytest.raises(ValueError):
            MatTuple(2, (((1, 0), (1, 0)),), field)

    def test_mat_tuple_rejects_wrong_shape(self):
        field = PrimeField(2)
        with pytest.raises(ValueError):
            MatTuple(2, (((1,),),), field)


class TestIrreducibility:
    def test_scalar_case_always_irreducible(self):
        field = PrimeField(3)
        assert is_abs_irreducible((((2,),), ((1,),)), field)

    def test_identity_pair_is_reducible(self):
        field = PrimeField(2)
        ident = field.identity(2)
        assert not is_abs_irreducible((ident, ident), field)

    def test_commuting_pair_is_reducible(self):
        field = PrimeField(3)
        a = ((2, 0), (0, 1))
        assert not is_abs_irreducible((a, a), field)

    def test_standard_irreducible_pair(self):
        field = PrimeField(2)
        swap = ((0, 1), (1, 0))
        shear = ((1, 1), (0, 1))
        assert is_abs_irreducible((swap, shear), field)

    def test_conjugation_invariance_exhaustive(self):
        field = PrimeField(2)
        gl = enumerate_gl(2, field)
        inverse = {
            g: h for g in gl for h in gl if field.mat_mul(g, h) == field.identity(2)
        }
        for a in gl:
            for b in gl:
                flag = is_abs_irreducible((a, b), field)
                for g in gl:
                    conj = tuple(
                        field.mat_mul(field.mat_mul(g, m), inverse[g]) for m in (a, b)
                    )
                    assert is_abs_irreducible(conj, field) == flag


class TestCounts:
    @pytest.mark.parametrize("q", [2, 3, 4, 5])
    @pytest.mark.parametrize("r", [2, 3])
    def test_size_one_counts(self, q, r):
        assert count_irr_classes(1, r, PrimeField(q)) == (q - 1) ** r

    def test_frozen_2_2_counts(self):
        assert count_irr_classes(2, 2, PrimeField(2)) == 3
        assert count_irr_classes(2, 2, PrimeField(3)) == 68

    def test_frozen_2_2_f4(self):
        assert count_irr_classes(2, 2, PrimeField(4)) == 423

    def test_free_action_divisibility(self):
        field = PrimeField(3)
        raw = count_irr_tuples(2, 2, field)
        pgl = gl_order(2, 3) // 2
        assert raw == 68 * pgl


class TestVerify:
    def test_rows_match_symbolic(self):
        rows = verify_cases(1, 2, [2, 3, 4, 5])
        assert [row.orbit_count for row in rows] == [1, 4, 9, 16]
        assert all(row.match for row in rows)
        assert overall_status(rows) == "ok"

    def test_status_warning_for_one_characteristic(self):
        good = VerifyRow(1, 2, 3, 4, 4, 4)
        bad2 = VerifyRow(1, 2, 2, 1, 1, 7)
        bad4 = VerifyRow(1, 2, 4, 9, 9, 7)
        # q=2 and q=4 share characteristic 2: still one bad characteristic.
        assert overall_status([good, bad2]) == "warning"
        assert overall_status([good, bad2, bad4]) == "warning"

    def test_status_failure_for_two_characteristics(self):
        bad2 = VerifyRow(1, 2, 2, 1, 1, 7)
        bad3 = VerifyRow(1, 2, 3, 4, 4, 7)
        assert overall_status([bad2, bad3]) == "failure"

    def test_match_property(self):
        assert VerifyRow(1, 2, 2, 1, 1, 1).match
        assert not VerifyRow(1, 2, 2, 1, 1, 2).match

    def test_max_field_size_honoured(self):
        with pytest.raises(ValueError):
            PrimeField(MAX_FIELD_SIZE + 2)
