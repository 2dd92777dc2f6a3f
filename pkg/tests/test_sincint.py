import csv
import math
from fractions import Fraction
from pathlib import Path

import pytest

from genfourier.core.errors import DomainError
from genfourier.core.exact import ExactValue, eval_float, parse_exact, render_exact
from genfourier.sincint import (
    FULL,
    HALF,
    SincQuery,
    antideriv_coeff_A,
    antideriv_coeff_B,
    full_line,
    full_line_diag,
    half_line,
    sinc_integral,
    sinc_table,
)

GOLDEN = Path(__file__).parent / "golden" / "sincint_golden.csv"


def _golden_rows():
    with open(GOLDEN, "r", encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))


@pytest.mark.parametrize("row", _golden_rows(), ids=lambda r: f"{r['range']}-{r['n']}-{r['m']}")
def test_golden(row):
    query = SincQuery(int(row["n"]), int(row["m"]), row["range"])
    value = sinc_integral(query)
    assert value == parse_exact(row["exact"])
    assert render_exact(value) == row["exact"]


def test_golden_records_published_typo():
    notes = {(r["n"], r["m"], r["range"]): r["note"] for r in _golden_rows()}
    assert "typo" in notes[("3", "1", HALF)]
    assert half_line(3, 1) == ExactValue.from_pi(Fraction(1, 4))


class TestFullLine:
    @pytest.mark.parametrize("n", range(1, 21))
    def test_diagonal_rearrangement(self, n):
        assert full_line(n, n) == full_line_diag(n)

    def test_odd_integrand_vanishes(self):
        for n in range(1, 16):
            for m in range(1, n + 1):
                if (n - m) % 2 == 1:
                    assert full_line(n, m).is_zero

    def test_odd_parity_short_circuits(self):
        assert SincQuery(5, 2).odd_parity
        assert not SincQuery(5, 3).odd_parity
        assert sinc_integral(SincQuery(5, 2)) == ExactValue.zero()
        assert sinc_integral(SincQuery(5, 2, HALF)) == half_line(5, 2)

    def test_pi_multiples(self):
        for n in range(1, 16):
            for m in range(1, n + 1):
                value = full_line(n, m)
                assert value.coeff_one == 0
                assert value.log_terms == ()


class TestHalfLine:
    def test_half_of_full_line(self):
        for n in range(1, 21):
            for m in range(1, n + 1):
                if (n - m) % 2 == 0:
                    assert half_line(n, m) == full_line(n, m).scale(Fraction(1, 2))

    def test_odd_case_is_logarithmic(self):
        for n in range(2, 13):
            for m in range(1, n + 1):
                if (n - m) % 2 == 1:
                    value = half_line(n, m)
                    assert value.coeff_one == 0
                    assert value.coeff_pi == 0

    def test_float(self):
        assert eval_float(half_line(5, 4)) == pytest.approx(0.5506987508757058, abs=1e-12)
        assert eval_float(half_line(4, 3)) == pytest.approx(math.log(2), abs=1e-15)

    def test_regularized_finite_part(self):
        query = SincQuery(2, 1, HALF)
        assert query.is_regularized
        assert sinc_integral(query) == ExactValue.from_log(2, Fraction(1, 2))
        assert not SincQuery(3, 1, HALF).is_regularized
        assert not SincQuery(2, 1, FULL).is_regularized


class TestRecursion:
    @pytest.mark.parametrize("m", range(1, 31))
    def test_coefficient_a(self, m):
        assert antideriv_coeff_A(m) == Fraction(1, math.factorial(m - 1))

    @pytest.mark.parametrize("m", range(1, 31))
    def test_coefficient_b(self, m):
        harmonic = sum((Fraction(1, j) for j in range(1, m)), Fraction(0))
        assert antideriv_coeff_B(m) == (1 + harmonic) / math.factorial(m - 1)

    def test_small_values(self):
        assert antideriv_coeff_B(2) == 2
        assert antideriv_coeff_B(3) == Fraction(5, 4)


class TestDomain:
    @pytest.mark.parametrize("n, m", [(2, 3), (1, 0), (0, 0)])
    def test_bad_orders(self, n, m):
        with pytest.raises(DomainError):
            SincQuery(n, m)
        with pytest.raises(DomainError):
            full_line(n, m)

    def test_bad_range(self):
        with pytest.raises(DomainError):
            SincQuery(3, 1, "quarter")

    def test_bad_recursion_index(self):
        with pytest.raises(DomainError):
            antideriv_coeff_A(0)


class TestTable:
    def test_rows(self):
        rows = sinc_table(3)
        assert len(rows) == 12
        keys = [(r.query.n, r.query.m, r.query.range) for r in rows]
        assert keys == sorted(keys)
        first = rows[0]
        assert first.exact == ExactValue.from_pi(1)
        assert first.value == pytest.approx(math.pi, abs=1e-15)

    def test_exact_column_parses_back(self):
        for row in sinc_table(12):
            assert parse_exact(render_exact(row.exact)) == row.exact

    def test_max_n_positive(self):
        with pytest.raises(DomainError):
            sinc_table(0)
