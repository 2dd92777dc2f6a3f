import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import mpmath
import pytest

from genfourier.core.errors import AddPowerMismatch, ParseError
from genfourier.core.exact import (
    I_UNIT,
    ONE,
    PI,
    ZERO,
    ExactValue,
    GaussPiCoeff,
    as_rational,
    coeff_arith,
    coeff_div,
    coeff_sub,
    eval_float,
    exact_add,
    exp_i_quarter_pi,
    format_coeff,
    gamma_coeff,
    i_power,
    mp_context,
    parse_exact,
    render_exact,
)
from genfourier.utils.numtheory import prime_factors, sqrt_rational_parts, squarefree_split


def _small_rational(rng):
    return Fraction(rng.randint(-50, 50), rng.randint(1, 30))


class TestRationals:
    def test_float_rejected(self):
        with pytest.raises(TypeError):
            as_rational(0.5)

    def test_exact_identities(self, rng):
        for _ in range(200):
            a, b = _small_rational(rng), _small_rational(rng)
            assert (a + b) - b == a
            if b:
                assert (a * b) / b == a


class TestGaussPiCoeff:
    def test_i_squared(self):
        assert coeff_arith(I_UNIT, I_UNIT, "mul") == GaussPiCoeff.of(-1)

    def test_pi_powers_add_on_mul(self):
        result = coeff_arith(GaussPiCoeff.of(2, 2), GaussPiCoeff.of(Fraction(1, 2), 1), "mul")
        assert result == GaussPiCoeff.of(1, 3)

    def test_conjugate_pair_sum(self):
        result = coeff_arith(GaussPiCoeff.gauss(1, 1), GaussPiCoeff.gauss(1, -1), "add")
        assert result == GaussPiCoeff.of(2)

    def test_division_and_subtraction(self):
        # 2π / (½√π) = 4√π
        assert coeff_div(GaussPiCoeff.of(2, 2), GaussPiCoeff.of(Fraction(1, 2), 1)) == GaussPiCoeff.of(4, 1)
        assert coeff_div(I_UNIT, I_UNIT) == ONE
        assert coeff_sub(PI, PI).is_zero
        with pytest.raises(ZeroDivisionError):
            coeff_div(ONE, ZERO)

    def test_unlike_powers_rejected(self):
        with pytest.raises(AddPowerMismatch):
            coeff_arith(ONE, PI, "add")
        with pytest.raises(AddPowerMismatch):
            GaussPiCoeff.sqrt_of(2) + ONE

    def test_zero_is_canonical(self):
        assert GaussPiCoeff(Fraction(0), Fraction(0), 5, 7) == ZERO
        assert PI + ZERO == PI
        assert (PI - PI).shape == (0, 1)

    def test_radicand_squarefree(self):
        c = GaussPiCoeff(Fraction(1), Fraction(0), 0, 12)
        assert c.radicand == 3
        assert c.re == 2
        assert GaussPiCoeff.sqrt_of(2) * GaussPiCoeff.sqrt_of(2) == GaussPiCoeff.of(2)

    def test_sqrt_of_fraction(self):
        # √(1/2) = √2/2
        assert GaussPiCoeff.sqrt_of(Fraction(1, 2)) == GaussPiCoeff(Fraction(1, 2), Fraction(0), 0, 2)

    def test_inverse(self, rng):
        for _ in range(50):
            c = GaussPiCoeff(_small_rational(rng) or 1, _small_rational(rng), rng.randint(-3, 3), rng.choice((1, 2, 3, 5)))
            assert c * c.inverse() == ONE

    def test_i_power_cycle(self):
        assert i_power(0) == ONE
        assert i_power(1) == I_UNIT
        assert i_power(2) == GaussPiCoeff.of(-1)
        assert i_power(-1) == GaussPiCoeff.gauss(0, -1)
        assert i_power(7) == i_power(3)

    def test_eighth_roots(self):
        root = exp_i_quarter_pi(1)
        assert root * root == I_UNIT
        assert exp_i_quarter_pi(4) == GaussPiCoeff.of(-1)
        assert root.to_complex() == pytest.approx(complex(math.sqrt(0.5), math.sqrt(0.5)), abs=1e-15)

    @pytest.mark.parametrize(
        "alpha, expected",
        [
            (Fraction(1, 2), GaussPiCoeff.of(1, 1)),
            (Fraction(3, 2), GaussPiCoeff.of(Fraction(1, 2), 1)),
            (Fraction(5, 2), GaussPiCoeff.of(Fraction(3, 4), 1)),
            (Fraction(-1, 2), GaussPiCoeff.of(-2, 1)),
            (Fraction(-3, 2), GaussPiCoeff.of(Fraction(4, 3), 1)),
            (4, GaussPiCoeff.of(6)),
        ],
    )
    def test_gamma(self, alpha, expected):
        assert gamma_coeff(alpha) == expected

    @pytest.mark.parametrize(
        "coeff, text",
        [
            (PI, "pi"),
            (GaussPiCoeff.of(1, -1), "1/√pi"),
            (GaussPiCoeff.of(Fraction(-1, 2), -1), "-1/(2*√pi)"),
            (GaussPiCoeff.gauss(0, 1, 2), "i*pi"),
            (GaussPiCoeff.of(Fraction(3, 4), 2), "3*pi/4"),
            (exp_i_quarter_pi(1), "(1/2+1/2i)*√2"),
            (GaussPiCoeff.gauss(0, Fraction(3, 4)), "3/4i"),
            (GaussPiCoeff.sqrt_of(Fraction(1, 2)), "√2/2"),
            (ZERO, "0"),
        ],
    )
    def test_format(self, coeff, text):
        assert format_coeff(coeff) == text


class TestExactValue:
    def test_add_logs(self):
        v = exact_add(ExactValue.from_log(3, Fraction(3, 4)), ExactValue.from_log(3, Fraction(1, 4)))
        assert v == ExactValue.from_log(3)

    def test_add_pi(self):
        half = ExactValue.from_pi(Fraction(1, 2))
        assert exact_add(half, half) == ExactValue.from_pi(1)

    def test_cancellation(self):
        v = exact_add(ExactValue.from_log(2), ExactValue.from_log(2, -1))
        assert v.is_zero
        assert v.log_terms == ()

    def test_composite_log_factored(self):
        assert ExactValue.from_log(9) == ExactValue.from_log(3, 2)
        assert ExactValue.build(logs={12: 1}).logs == {2: Fraction(2), 3: Fraction(1)}

    def test_associative_commutative(self, rng):
        def random_value():
            logs = {rng.choice((2, 3, 5, 6, 10)): _small_rational(rng) for _ in range(2)}
            return ExactValue.build(_small_rational(rng), _small_rational(rng), logs)

        for _ in range(100):
            a, b, c = random_value(), random_value(), random_value()
            assert a + b == b + a
            assert (a + b) + c == a + (b + c)

    @pytest.mark.parametrize(
        "value, text",
        [
            (ExactValue.from_pi(Fraction(3, 4)), "3/4*pi"),
            (ExactValue.build(logs={5: Fraction(125, 96), 3: Fraction(-45, 32)}), "-45/32*ln(3) + 125/96*ln(5)"),
            (ExactValue.zero(), "0"),
            (ExactValue.build(Fraction(1, 2), -1, {2: 1}), "1/2 - 1*pi + 1*ln(2)"),
        ],
    )
    def test_render(self, value, text):
        assert render_exact(value) == text

    def test_parse_inverts_render(self, rng):
        for _ in range(100):
            logs = {rng.choice((2, 3, 4, 5, 7, 9)): _small_rational(rng) for _ in range(3)}
            v = ExactValue.build(_small_rational(rng), _small_rational(rng), logs)
            assert parse_exact(render_exact(v)) == v

    def test_parse_rejects_composite_log(self):
        with pytest.raises(ParseError):
            parse_exact("1/2*ln(4)")

    def test_parse_error_offset(self):
        with pytest.raises(ParseError) as info:
            parse_exact("3/4*pie")
        assert info.value.offset == 6
        assert info.value.expected == ["+", "-", "end of text"]

    def test_parse_error_missing_term(self):
        with pytest.raises(ParseError) as info:
            parse_exact("3/4*pi + ")
        assert info.value.offset == 9
        assert info.value.expected == ["term"]

    @pytest.mark.parametrize(
        "value, expected",
        [
            (ExactValue.from_pi(Fraction(3, 4)), 2.356194490192345),
            (ExactValue.from_log(2), 0.6931471805599453),
            (ExactValue.zero(), 0.0),
        ],
    )
    def test_eval_float(self, value, expected):
        assert eval_float(value) == pytest.approx(expected, rel=4 * 2.0**-52, abs=0)

    def test_eval_overflow(self):
        with pytest.raises(OverflowError):
            eval_float(ExactValue.from_rational(10**400))

    def test_concurrent_evaluation(self):
        values = [
            parse_exact("-45/32*ln(3) + 125/96*ln(5)"),
            parse_exact("115/192*pi"),
            parse_exact("1/3 + 7/5*ln(7)"),
        ]
        before = mpmath.mp.prec
        serial = [eval_float(v) for v in values]
        with ThreadPoolExecutor(max_workers=8) as pool:
            threaded = list(pool.map(eval_float, values * 50, [20, 40, 60] * 50))
        assert threaded == pytest.approx(serial * 50, rel=1e-15)
        assert mpmath.mp.prec == before

    def test_context_is_thread_private(self):
        local = mp_context(40)
        with ThreadPoolExecutor(max_workers=1) as pool:
            other = pool.submit(mp_context, 40).result()
        assert other is not local
        assert local.dps == other.dps == 40
        assert mp_context(40) is local


class TestNumtheory:
    def test_prime_factors(self):
        assert prime_factors(9) == {3: 2}
        assert prime_factors(12) == {2: 2, 3: 1}
        assert prime_factors(1) == {}

    def test_squarefree_split(self):
        assert squarefree_split(72) == (6, 2)
        assert squarefree_split(1) == (1, 1)

    def test_sqrt_rational_parts(self):
        assert sqrt_rational_parts(Fraction(9, 4)) == (Fraction(3, 2), 1)
        assert sqrt_rational_parts(Fraction(1, 2)) == (Fraction(1, 2), 2)
        assert sqrt_rational_parts(0) == (Fraction(0), 1)
