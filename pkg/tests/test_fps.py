import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as stn

from apsums.errors import (
    CompositionDomainError,
    ExpDomainError,
    InsufficientOrder,
    LogDomainError,
    NonInvertibleSeries,
    PowDomainError,
    ReversionDomainError,
)
from apsums.exact import Progression, risefac
from apsums.fps import Fps, reverse_coefficient_lagrange

F = Fraction

rationals = stn.fractions(min_value=-6, max_value=6, max_denominator=20)


def series(order, unit_constant=False, reversible=False):
    """Strategy producing random series with the requested shape."""

    def build(coeffs):
        if unit_constant:
            coeffs = [F(1)] + coeffs[1:]
        if reversible:
            first = coeffs[1] if coeffs[1] != 0 else F(1)
            coeffs = [F(0), first] + coeffs[2:]
        return Fps(coeffs)

    return stn.lists(rationals, min_size=order + 1, max_size=order + 1).map(build)


class TestConstruction:
    def test_pad_and_truncate(self):
        assert Fps([1, 2], order=4).coefficients == (F(1), F(2), F(0), F(0), F(0))
        assert Fps([1, 2, 3, 4], order=1).coefficients == (F(1), F(2))

    def test_trailing_zeros_are_kept(self):
        f = Fps([1, 0, 0])
        assert f.order == 2
        assert f != Fps([1])

    def test_coefficient_beyond_order(self):
        with pytest.raises(InsufficientOrder):
            Fps([1, 2])[5]

    def test_truncated_cannot_extend(self):
        with pytest.raises(InsufficientOrder):
            Fps([1, 2]).truncated(3)

    def test_text_form(self):
        assert str(Fps([1, 1, F(1, 2)])) == "1 + 1*t + 1/2*t^2 ; order=2"


class TestMul:
    def test_difference_of_squares(self):
        assert Fps([1, 1], order=2) * Fps([1, -1], order=2) == Fps([1, 0, -1])

    def test_exp_times_exp(self):
        product = Fps.exp_of(1, 3) * Fps.exp_of(1, 3)
        assert product == Fps([1, 2, 2, F(4, 3)])
        assert product == Fps.exp_of(2, 3)

    def test_one_is_neutral(self):
        f = Fps([3, -1, F(2, 7)])
        assert f * Fps.one(2) == f

    def test_truncates_to_smaller_order(self):
        f = Fps([1, 1, 1, 1, 1])
        g = Fps([1, 1])
        assert (f * g).order == 1


class TestReciprocal:
    def test_geometric(self):
        assert Fps([1, -1], order=3).reciprocal() == Fps([1, 1, 1, 1])

    def test_constant(self):
        assert Fps.constant(2, 2).reciprocal() == Fps.constant(F(1, 2), 2)

    def test_ratio_two(self):
        assert Fps([1, -2], order=2).reciprocal() == Fps([1, 2, 4])

    def test_zero_constant_rejected(self):
        with pytest.raises(NonInvertibleSeries):
            Fps([0, 1]).reciprocal()


class TestCompose:
    def test_exp_after_log(self):
        outer = Fps.exp_of(1, 4)
        inner = Fps([1, 1], order=4).log()
        assert outer.compose(inner) == Fps([1, 1, 0, 0, 0])

    def test_geometric_of_mobius(self):
        outer = Fps.geometric(1, 3)
        inner = Fps.x(3) * Fps([1, -1], order=3).reciprocal()
        assert outer.compose(inner) == Fps([1, 1, 2, 4])

    def test_zero_inner_gives_constant(self):
        f = Fps([5, 7, 11])
        assert f.compose(Fps.zero(2)) == Fps.constant(5, 2)

    def test_nonzero_inner_constant_rejected(self):
        with pytest.raises(CompositionDomainError):
            Fps([1, 1]).compose(Fps([1, 1]))


class TestReverse:
    def test_exp_minus_one(self):
        f = Fps.exp_of(1, 5) - 1
        assert f.reverse() == Fps([1, 1], order=5).log()

    def test_identity_fixed_point(self):
        assert Fps.x(6).reverse() == Fps.x(6)

    def test_mobius(self):
        f = Fps.x(5) * Fps([1, 1], order=5).reciprocal()  # t/(1+t)
        expected = Fps.x(5) * Fps([1, -1], order=5).reciprocal()  # t/(1-t)
        assert f.reverse() == expected

    def test_preconditions(self):
        with pytest.raises(ReversionDomainError):
            Fps([1, 1]).reverse()
        with pytest.raises(ReversionDomainError):
            Fps([0, 0, 1]).reverse()
        with pytest.raises(ReversionDomainError):
            Fps([0]).reverse()

    @given(series(10, reversible=True))
    def test_roundtrip(self, f):
        assert f.reverse().reverse() == f

    @given(series(9, reversible=True))
    def test_composes_to_identity(self, f):
        assert f.compose(f.reverse()) == Fps.x(9)
        assert f.reverse().compose(f) == Fps.x(9)

    @given(series(10, reversible=True))
    def test_lagrange_oracle(self, f):
        g = f.reverse()
        for n in range(11):
            assert reverse_coefficient_lagrange(f, n, 1) == g[n] * math.factorial(n)

    def test_lagrange_higher_powers(self):
        f = Fps.exp_of(1, 8) - 1
        g = f.reverse()
        for k in range(4):
            power = Fps.one(8)
            for _ in range(k):
                power = power * g
            for n in range(9):
                expected = power[n] * F(math.factorial(n), math.factorial(k))
                assert reverse_coefficient_lagrange(f, n, k) == expected


class TestLogExpPow:
    def test_mercator(self):
        assert Fps([1, 1], order=3).log() == Fps([0, 1, F(-1, 2), F(1, 3)])

    def test_log_of_one(self):
        assert Fps.one(4).log() == Fps.zero(4)

    def test_log_ratio_two(self):
        assert Fps([1, -2], order=2).log() == Fps([0, -2, -2])

    def test_log_precondition(self):
        with pytest.raises(LogDomainError):
            Fps([2, 1]).log()

    def test_exp_of_t(self):
        assert Fps.x(3).exp() == Fps([1, 1, F(1, 2), F(1, 6)])

    def test_exp_of_zero(self):
        assert Fps.zero(3).exp() == Fps.one(3)

    def test_exp_of_two_t(self):
        assert Fps([0, 2], order=2).exp() == Fps([1, 2, 2])

    def test_exp_precondition(self):
        with pytest.raises(ExpDomainError):
            Fps([1, 1]).exp()

    @given(series(10, unit_constant=True))
    def test_exp_log_roundtrip(self, f):
        assert f.log().exp() == f

    def test_binomial_series(self):
        assert Fps([1, -2], order=3).pow(F(-1, 2)) == Fps([1, 1, F(3, 2), F(5, 2)])

    def test_pow_zero(self):
        f = Fps([1, 5, -3])
        assert f.pow(0) == Fps.one(2)

    def test_pow_matches_rising_factorial_egf(self):
        # n! [t^n] (1-2t)^(-1/2) generates the [2,1] rising factorials at 0
        f = Fps([1, -2], order=5).pow(F(-1, 2))
        prog = Progression(2, 1)
        for n in range(6):
            assert f.coefficient_times_factorial(n) == risefac(prog, 0, n)

    def test_pow_precondition(self):
        with pytest.raises(PowDomainError):
            Fps([2, 1]).pow(F(1, 2))

    @given(series(8, unit_constant=True), rationals, rationals)
    def test_pow_additivity(self, f, p, q):
        assert f.pow(p) * f.pow(q) == f.pow(p + q)


class TestCalculusAndBorel:
    def test_derivative(self):
        assert Fps([0, 0, 1]).derivative() == Fps([0, 2])

    def test_integral_matches_log_route(self):
        geom = Fps.geometric(1, 2)
        assert geom.integral() == Fps([0, 1, F(1, 2), F(1, 3)])

    def test_integral_then_derivative(self):
        f = Fps([5, 1, F(3, 7), -2])
        assert f.integral().derivative() == f

    def test_derivative_then_integral_drops_constant(self):
        f = Fps([5, 1, F(3, 7)])
        assert f.derivative().integral() == f - 5

    def test_derivative_of_constant_order_series(self):
        with pytest.raises(InsufficientOrder):
            Fps([3]).derivative()

    def test_factorial_transforms(self):
        assert Fps.geometric(1, 4).ogf_to_egf() == Fps.exp_of(1, 4)
        assert Fps.exp_of(2, 4).egf_to_ogf() == Fps.geometric(2, 4)

    @given(series(9))
    def test_transform_roundtrip(self, f):
        assert f.ogf_to_egf().egf_to_ogf() == f
        assert f.egf_to_ogf().ogf_to_egf() == f


class TestRingLaws:
    @given(series(16), series(16), series(16))
    def test_mul_laws(self, f, g, h):
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h

    @given(series(10))
    def test_additive_group(self, f):
        assert f + (-f) == Fps.zero(10)
        assert f - f == Fps.zero(10)
