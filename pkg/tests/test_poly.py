from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as stn

from apsums.errors import DomainError
from apsums.exact import Progression, fallfac, risefac
from apsums.poly import Polynomial, fallfac_poly, risefac_poly

F = Fraction

rationals = stn.fractions(min_value=-8, max_value=8, max_denominator=30)
polys = stn.lists(rationals, min_size=0, max_size=6).map(Polynomial)


class TestBasics:
    def test_trimming_and_degree(self):
        assert Polynomial([1, 2, 0, 0]).degree == 1
        assert Polynomial([]).degree == -1
        assert Polynomial([0, 0]).degree == -1
        assert not Polynomial([0])

    def test_getitem_beyond_degree_is_zero(self):
        assert Polynomial([1, 2])[10] == 0

    def test_negative_exponent_rejected(self):
        with pytest.raises(DomainError):
            Polynomial([1])[-1]
        with pytest.raises(DomainError):
            Polynomial.monomial(-2)

    def test_text(self):
        assert str(Polynomial([0, 2, -3, 1])) == "0 + 2*x + -3*x^2 + 1*x^3"
        assert str(Polynomial()) == "0"

    def test_equality_is_value_equality(self):
        assert Polynomial([1, 0]) == Polynomial([1])


class TestArithmetic:
    def test_product(self):
        # (1 + x)(1 - x) = 1 - x^2
        assert Polynomial([1, 1]) * Polynomial([1, -1]) == Polynomial([1, 0, -1])

    def test_power(self):
        assert Polynomial([1, 1]) ** 3 == Polynomial([1, 3, 3, 1])

    def test_evaluate_horner(self):
        p = Polynomial([F(1, 2), 0, 3])
        assert p.evaluate(F(1, 3)) == F(1, 2) + 3 * F(1, 9)

    def test_derivative(self):
        assert Polynomial([5, 1, 4]).derivative() == Polynomial([1, 8])

    def test_shift(self):
        # (x+2)^2 = x^2 + 4x + 4
        assert Polynomial([0, 0, 1]).shifted(2) == Polynomial([4, 4, 1])

    @given(polys, polys, rationals)
    def test_evaluation_is_a_homomorphism(self, p, q, x):
        assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
        assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)

    @given(polys, rationals, rationals)
    def test_shift_agrees_with_evaluation(self, p, c, x):
        assert p.shifted(c).evaluate(x) == p.evaluate(x + c)


class TestFactorialBasis:
    @given(stn.integers(1, 3), stn.integers(0, 3), stn.integers(0, 6), rationals)
    def test_polynomials_match_evaluators(self, d, a, m, x):
        prog = Progression(d, a)
        assert fallfac_poly(prog, m).evaluate(x) == fallfac(prog, x, m)
        assert risefac_poly(prog, m).evaluate(x) == risefac(prog, x, m)

    def test_monic_of_right_degree(self):
        p = fallfac_poly(Progression(2, 1), 4)
        assert p.degree == 4
        assert p[4] == 1
