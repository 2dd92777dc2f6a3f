from fractions import Fraction

import pytest

from genfourier.core.errors import DomainError
from genfourier.core.exact import ONE, PI, GaussPiCoeff
from genfourier.distalg import (
    K_SIDE,
    X_SIDE,
    Const,
    DeltaDeriv,
    DistExpr,
    Heaviside,
    IkPower,
    Monomial,
    NegPower,
    OneSidedPower,
    Sgn,
    SgnPower,
    render_expr,
)
from genfourier.distalg.expr import expr_sum

HALF = GaussPiCoeff.of(Fraction(1, 2))


def x_expr(term, coeff=ONE):
    return DistExpr.of(term, coeff, X_SIDE)


def k_expr(term, coeff=ONE):
    return DistExpr.of(term, coeff, K_SIDE)


class TestCanonicalForm:
    def test_refold_into_heaviside(self):
        e = x_expr(Const(), HALF) + x_expr(Sgn(), HALF)
        assert e == x_expr(Heaviside(1))
        assert len(e) == 1

    def test_both_sides_sum_to_constant(self):
        assert x_expr(Heaviside(1)) + x_expr(Heaviside(-1)) == x_expr(Const())

    def test_refold_one_sided_power(self):
        e = x_expr(Monomial(2)) + x_expr(SgnPower(2))
        assert e == x_expr(OneSidedPower(Fraction(2), 1), GaussPiCoeff.of(2))

    def test_negative_axis_refold(self):
        e = x_expr(Monomial(3)) - x_expr(SgnPower(3))
        assert e.terms == ((GaussPiCoeff.of(2), OneSidedPower(Fraction(3), -1)),)

    def test_unlike_shapes_stay_apart(self):
        e = x_expr(Const()) + x_expr(Const(), PI)
        assert len(e) == 2

    def test_like_terms_merge(self):
        e = x_expr(NegPower(2), GaussPiCoeff.of(Fraction(3, 4))) + x_expr(NegPower(2), GaussPiCoeff.of(Fraction(1, 4)))
        assert e == x_expr(NegPower(2))

    def test_cancellation_leaves_zero(self):
        e = x_expr(Sgn()) - x_expr(Sgn())
        assert e.is_zero
        assert render_expr(e) == "0"
        assert e == DistExpr.zero(X_SIDE)

    def test_no_zero_or_duplicate_terms(self):
        e = DistExpr(
            X_SIDE,
            (
                (GaussPiCoeff.of(0), Sgn()),
                (ONE, DeltaDeriv(1)),
                (ONE, DeltaDeriv(1)),
                (GaussPiCoeff.of(-2), DeltaDeriv(1)),
            ),
        )
        assert e.is_zero

    def test_order_is_independent_of_input(self):
        a = x_expr(NegPower(1)) + x_expr(DeltaDeriv(0)) + x_expr(Heaviside(-1))
        b = x_expr(Heaviside(-1)) + x_expr(NegPower(1)) + x_expr(DeltaDeriv(0))
        assert a.terms == b.terms

    def test_k_side_powers_become_ik(self):
        # k = -i·(ik), k^-2 = -(ik)^-2
        assert k_expr(Monomial(1)) == k_expr(IkPower(1), GaussPiCoeff.gauss(0, -1))
        assert k_expr(NegPower(2)) == k_expr(IkPower(-2), GaussPiCoeff.of(-1))
        assert k_expr(Const()) == k_expr(IkPower(0))

    def test_scale(self):
        e = x_expr(Heaviside(1)).scale(GaussPiCoeff.gauss(0, 2))
        assert e.terms == ((GaussPiCoeff.gauss(0, 2), Heaviside(1)),)
        assert 3 * x_expr(Sgn()) == x_expr(Sgn(), GaussPiCoeff.of(3))


class TestDomains:
    def test_mixing_sides_rejected(self):
        with pytest.raises(DomainError):
            x_expr(Sgn()) + k_expr(Sgn())

    def test_expr_sum_checks_domain(self):
        with pytest.raises(DomainError):
            expr_sum(X_SIDE, [x_expr(Sgn()), k_expr(DeltaDeriv(0))])

    def test_unknown_domain(self):
        with pytest.raises(DomainError):
            DistExpr("t", ())

    def test_primitive_parameters_checked(self):
        with pytest.raises(DomainError):
            Monomial(0)
        with pytest.raises(DomainError):
            OneSidedPower(Fraction(1, 3), 1)
        with pytest.raises(DomainError):
            Heaviside(2)


class TestRender:
    @pytest.mark.parametrize(
        "e, text",
        [
            (x_expr(Heaviside(-1)), "theta(-x)"),
            (x_expr(DeltaDeriv(2, Fraction(1, 2)), GaussPiCoeff.of(3)), "3*delta^(2)@1/2"),
            (x_expr(NegPower(2), GaussPiCoeff.of(-1)), "-x^-2"),
            (x_expr(OneSidedPower(Fraction(-1, 2), 1), GaussPiCoeff.of(1, -1)), "1/√pi * x^(-1/2)*theta"),
            (k_expr(IkPower(Fraction(-1, 2))), "(ik)^(-1/2)"),
            (k_expr(Const(), GaussPiCoeff.of(2, 2)), "2*pi"),
        ],
    )
    def test_single_terms(self, e, text):
        assert render_expr(e) == text

    def test_negative_terms_use_minus(self):
        e = x_expr(Sgn(), GaussPiCoeff.gauss(0, -2)) + x_expr(NegPower(2), GaussPiCoeff.of(Fraction(3, 4)))
        assert render_expr(e) == "-2i*sgn + 3/4*x^-2"
        assert render_expr(x_expr(Sgn()) - x_expr(NegPower(1))) == "sgn - x^-1"

    def test_str_is_render(self):
        e = x_expr(Heaviside(1))
        assert str(e) == render_expr(e) == "theta"
