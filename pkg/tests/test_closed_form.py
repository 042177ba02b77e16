from fractions import Fraction

import pytest

from wheelwalk.closed_form import (
    FormulaInconsistency,
    HittingQuery,
    effective_resistance,
    folded_hitting_vector,
    hitting_time,
    identified_tree_count,
    inverse_folded_matrix,
    spanning_tree_count,
)
from wheelwalk import closed_form
from wheelwalk.oracle import invert, solve_linear
from wheelwalk.wheel_model import (
    CENTER,
    Peripheral,
    RationalMatrix,
    WheelSpec,
    folded_matrix,
    folded_rhs,
)

P = Peripheral


def solved_folded(n):
    """Independent route: solve H h' = (3, ..., 3, n) by elimination."""
    return solve_linear(folded_matrix(n).rows, folded_rhs(n))


class TestHittingTime:
    def test_k4(self):
        assert hitting_time(3, P(0), P(1)) == 3
        assert solved_folded(3) == [3, 3]

    def test_n4(self):
        assert solved_folded(4) == [Fraction(64, 15), Fraction(16, 3), Fraction(67, 15)]
        assert hitting_time(4, P(0), P(1)) == Fraction(64, 15)
        assert hitting_time(4, P(0), P(2)) == Fraction(16, 3)
        assert hitting_time(4, CENTER, P(0)) == Fraction(67, 15)

    def test_n5(self):
        h = solved_folded(5)
        assert (h[0], h[-1]) == (Fraction(60, 11), Fraction(67, 11))
        assert hitting_time(5, P(0), P(1)) == Fraction(60, 11)
        assert hitting_time(5, CENTER, P(0)) == Fraction(67, 11)

    @pytest.mark.parametrize("n", [3, 4, 7, 12])
    def test_trivial_cases(self, n):
        assert hitting_time(n, P(0), P(0)) == 0
        assert hitting_time(n, CENTER, CENTER) == 0
        assert hitting_time(n, P(0), CENTER) == 3

    def test_query_form(self):
        q = HittingQuery(WheelSpec(4), P(0), P(1))
        assert hitting_time(q) == Fraction(64, 15)

    def test_rotation(self):
        assert hitting_time(7, P(3), P(5)) == hitting_time(7, P(0), P(2))
        assert hitting_time(7, P(5), P(3)) == hitting_time(7, P(0), P(2))
        assert hitting_time(7, P(10), P(3)) == 0

    @pytest.mark.parametrize("n", range(3, 61))
    def test_fold_symmetry(self, n):
        for ell in range(1, n):
            assert hitting_time(n, P(0), P(ell)) == hitting_time(n, P(0), P(n - ell))

    @pytest.mark.parametrize("n", range(5, 61))
    def test_monotone_to_antipode(self, n):
        values = [hitting_time(n, P(0), P(ell)) for ell in range(1, n // 2 + 1)]
        assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("n", range(3, 61))
    def test_folded_system_consistency(self, n):
        assert folded_matrix(n).apply(folded_hitting_vector(n)) == folded_rhs(n)


class TestInverse:
    def test_n3(self):
        expected = [[Fraction(3, 4), Fraction(1, 4)], [Fraction(1, 2), Fraction(1, 2)]]
        assert inverse_folded_matrix(3).tolist() == expected
        assert invert(folded_matrix(3)).tolist() == expected

    def test_n4(self):
        F = Fraction
        expected = [[F(11, 15), F(1, 3), F(4, 15)], [F(2, 3), F(2, 3), F(1, 3)], [F(8, 15), F(1, 3), F(7, 15)]]
        assert inverse_folded_matrix(4).tolist() == expected
        assert invert(folded_matrix(4)).tolist() == expected

    def test_spot_entries(self):
        assert inverse_folded_matrix(9)[4, 4] == Fraction(17, 38)
        assert invert(folded_matrix(9))[4, 4] == Fraction(17, 38)
        assert inverse_folded_matrix(8)[4, 3] == Fraction(3, 7)

    @pytest.mark.parametrize("n", range(3, 61))
    def test_is_inverse(self, n):
        k = inverse_folded_matrix(n)
        assert folded_matrix(n) @ k == RationalMatrix.identity(n // 2 + 1)
        assert all(x > 0 for row in k.rows for x in row)

    @pytest.mark.parametrize("n", range(3, 31))
    def test_reproduces_hitting_times(self, n):
        assert inverse_folded_matrix(n).apply(folded_rhs(n)) == folded_hitting_vector(n)

    @pytest.mark.parametrize("n", [5, 6, 13, 20])
    def test_agrees_with_elimination(self, n):
        assert inverse_folded_matrix(n) == invert(folded_matrix(n))


class TestResistance:
    def test_values(self):
        assert effective_resistance(3, CENTER, P(0)) == Fraction(1, 2)
        assert effective_resistance(4, CENTER, P(0)) == Fraction(7, 15)
        assert effective_resistance(4, P(0), P(1)) == Fraction(8, 15)
        assert effective_resistance(4, P(0), CENTER) == Fraction(7, 15)

    def test_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            effective_resistance(5, P(2), P(7))

    @pytest.mark.parametrize("n", range(3, 41))
    def test_commute_time_relation(self, n):
        spec = WheelSpec(n)
        for a in spec.vertices():
            for b in spec.vertices():
                if a == b:
                    continue
                commute = hitting_time(n, a, b) + hitting_time(n, b, a)
                assert effective_resistance(n, a, b) == commute / (2 * 2 * n)


class TestTreeCounts:
    @pytest.mark.parametrize("n, expected", [(3, 16), (4, 45), (5, 121)])
    def test_wheel(self, n, expected):
        assert spanning_tree_count(n) == expected

    def test_identified(self):
        assert identified_tree_count(3, P(0), P(1)) == 8
        assert identified_tree_count(4, CENTER, P(0)) == 21
        assert identified_tree_count(4, P(0), P(1)) == 24
        assert identified_tree_count(5, CENTER, P(0)) == 55

    def test_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            identified_tree_count(4, CENTER, CENTER)

    @pytest.mark.parametrize("n", range(3, 41))
    def test_kirchhoff(self, n):
        spec = WheelSpec(n)
        total = spanning_tree_count(n)
        vs = spec.vertices()
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                assert identified_tree_count(n, a, b) == effective_resistance(n, a, b) * total

    def test_non_integral_result_is_loud(self, monkeypatch):
        # a transcription slip in the even branch must not be silently floored
        real = closed_form.L
        monkeypatch.setattr(closed_form, "L", lambda k: real(k) + (1 if k == 5 else 0))
        with pytest.raises(FormulaInconsistency):
            identified_tree_count(4, CENTER, P(0))
