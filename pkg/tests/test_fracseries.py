import csv
import math
from fractions import Fraction

import pytest

from genfourier.core.errors import DomainError, ParseError, UnknownName, UnsupportedAlpha
from genfourier.core.exact import ONE, PI, ZERO, GaussPiCoeff
from genfourier.fracseries import (
    Harmonic,
    TrigSeries,
    builtin_series,
    format_cell,
    frac_deriv_series,
    parse_cell,
    read_series_csv,
    sample_series,
    series_energy,
    write_samples_csv,
    write_series_csv,
    write_svg,
)

HALF = Fraction(1, 2)
SQRT2 = GaussPiCoeff.sqrt_of(2)


class TestBuiltins:
    def test_sawtooth(self):
        s = builtin_series("sawtooth", 4)
        assert s.mean == ZERO
        assert [h.n for h in s.harmonics] == [1, 2, 3, 4]
        assert s.harmonic(2).b == GaussPiCoeff.of(-1)
        assert s.harmonic(3).b == GaussPiCoeff.of(Fraction(2, 3))

    def test_absx(self):
        s = builtin_series("absx", 3)
        assert s.mean == GaussPiCoeff.of(HALF, 2)
        assert [h.n for h in s.harmonics] == [1, 3, 5]
        assert s.harmonic(3).a == GaussPiCoeff.of(Fraction(-4, 9), -2)
        assert s.harmonic(2).is_zero

    def test_unknown_name(self):
        with pytest.raises(UnknownName):
            builtin_series("square", 5)

    def test_order_positive(self):
        with pytest.raises(DomainError):
            builtin_series("sawtooth", 0)


class TestSeriesType:
    def test_zero_harmonics_dropped(self):
        s = TrigSeries(ZERO, (Harmonic(1, ONE), Harmonic(2), Harmonic(3, ZERO, ONE)))
        assert s.order == 2

    def test_frequencies_increasing(self):
        with pytest.raises(DomainError):
            TrigSeries(ZERO, (Harmonic(2, ONE), Harmonic(1, ONE)))

    def test_real_coefficients_only(self):
        with pytest.raises(DomainError):
            Harmonic(1, GaussPiCoeff.gauss(0, 1))

    def test_unlike_shapes_rejected(self):
        with pytest.raises(DomainError, match="harmonic 1"):
            Harmonic(1, ONE, PI)
        assert Harmonic(1, ZERO, PI).b == PI
        assert Harmonic(2, SQRT2, 3 * SQRT2).a == SQRT2

    def test_from_triples(self):
        s = TrigSeries.from_triples(1, [(1, 0, 2), (4, Fraction(1, 3), 0)])
        assert s.mean == ONE
        assert s.harmonic(4).a == GaussPiCoeff.of(Fraction(1, 3))


class TestFracDeriv:
    def test_half_rotates_sine_into_cosine(self):
        # ∂^{1/2} sin 2x = cos 2x + sin 2x
        s = TrigSeries.from_triples(0, [(2, 0, 1)])
        d = frac_deriv_series(s, HALF)
        assert d.harmonic(2) == Harmonic(2, ONE, ONE)

    def test_sawtooth_half(self):
        d = frac_deriv_series(builtin_series("sawtooth", 3), HALF)
        assert d.harmonic(1) == Harmonic(1, SQRT2, SQRT2)
        # n = 2: √2·(-1)·√2/2 = -1
        assert d.harmonic(2) == Harmonic(2, GaussPiCoeff.of(-1), GaussPiCoeff.of(-1))

    def test_absx_half(self):
        d = frac_deriv_series(builtin_series("absx", 2), HALF)
        h = d.harmonic(1)
        assert h.a == SQRT2 * GaussPiCoeff.of(-2, -2)
        assert h.b == SQRT2 * GaussPiCoeff.of(2, -2)
        assert d.mean == ZERO

    def test_second_derivative(self):
        d = frac_deriv_series(builtin_series("sawtooth", 3), 2)
        assert d.harmonic(3) == Harmonic(3, ZERO, GaussPiCoeff.of(-6))

    def test_first_derivative_of_cosine(self):
        s = TrigSeries.from_triples(0, [(3, 1, 0)])
        assert frac_deriv_series(s, 1).harmonic(3) == Harmonic(3, ZERO, GaussPiCoeff.of(-3))

    def test_zero_order_is_identity(self):
        s = builtin_series("absx", 4)
        assert frac_deriv_series(s, 0) == s

    @pytest.mark.parametrize("name", ["sawtooth", "absx"])
    @pytest.mark.parametrize("alpha, beta", [(HALF, HALF), (HALF, Fraction(3, 2)), (Fraction(1), Fraction(3, 2))])
    def test_semigroup(self, name, alpha, beta):
        s = builtin_series(name, 6)
        assert frac_deriv_series(frac_deriv_series(s, alpha), beta) == frac_deriv_series(s, alpha + beta)

    @pytest.mark.parametrize("alpha", [HALF, Fraction(1), Fraction(3, 2)])
    def test_energy(self, alpha):
        s = builtin_series("absx", 5)
        d = frac_deriv_series(s, alpha)
        for h in s.harmonics:
            # n^{2α}(a² + b²)
            expected = GaussPiCoeff.of(h.n ** int(2 * alpha)) * series_energy(s, h.n)
            assert series_energy(d, h.n) == expected

    def test_unsupported_alpha(self):
        with pytest.raises(UnsupportedAlpha):
            frac_deriv_series(builtin_series("sawtooth", 2), Fraction(1, 3))

    def test_negative_alpha(self):
        with pytest.raises(DomainError):
            frac_deriv_series(builtin_series("sawtooth", 2), -HALF)


class TestSampling:
    def test_sawtooth_vanishes_at_origin(self):
        assert sample_series(builtin_series("sawtooth", 30), [0.0]) == [0.0]

    def test_absx_near_origin(self):
        (value,) = sample_series(builtin_series("absx", 100), [0.0])
        assert 0 < value < 0.013

    def test_sawtooth_approximates_x(self):
        (value,) = sample_series(builtin_series("sawtooth", 2000), [1.0])
        assert value == pytest.approx(1.0, abs=5e-3)

    def test_matches_direct_sum(self):
        s = frac_deriv_series(builtin_series("sawtooth", 10), HALF)
        xs = [-2.5, -0.3, 0.7, 3.0]
        expected = [
            sum(math.sqrt(2 * n) * (-1) ** (n - 1) / n * (math.cos(n * x) + math.sin(n * x)) for n in range(1, 11))
            for x in xs
        ]
        assert sample_series(s, xs) == pytest.approx(expected, abs=1e-12)


class TestCells:
    @pytest.mark.parametrize(
        "text, coeff",
        [
            ("0", ZERO),
            ("-4*pi^-1", GaussPiCoeff.of(-4, -2)),
            ("1/2*pi", GaussPiCoeff.of(HALF, 2)),
            ("1/2*sqrt(2)", GaussPiCoeff.sqrt_of(HALF)),
            ("3*pi^(-1/2)", GaussPiCoeff.of(3, -1)),
            ("2*pi^2", GaussPiCoeff.of(2, 4)),
        ],
    )
    def test_parse(self, text, coeff):
        assert parse_cell(text) == coeff

    @pytest.mark.parametrize("coeff", [ZERO, PI, GaussPiCoeff.of(-4, -2), SQRT2 * GaussPiCoeff.of(-2, -2), GaussPiCoeff.of(3, 1)])
    def test_format_parses_back(self, coeff):
        assert parse_cell(format_cell(coeff)) == coeff

    def test_bad_cell(self):
        with pytest.raises(ParseError):
            parse_cell("pi/4")

    def test_complex_cell_rejected(self):
        with pytest.raises(DomainError):
            format_cell(GaussPiCoeff.gauss(0, 1))


class TestFiles:
    def test_series_csv_round_trip(self, tmp_path):
        path = tmp_path / "absx.csv"
        s = frac_deriv_series(builtin_series("absx", 4), HALF)
        s = TrigSeries(GaussPiCoeff.of(HALF, 2), s.harmonics)
        write_series_csv(s, str(path))
        assert read_series_csv(str(path)) == s

    def test_rows_sorted(self, tmp_path):
        path = tmp_path / "series.csv"
        path.write_text("n,a,b\n3,0,1/3\n0,1/2*pi,0\n1, 0 ,2\n", encoding="utf-8")
        s = read_series_csv(str(path))
        assert s.mean == GaussPiCoeff.of(HALF, 2)
        assert [h.n for h in s.harmonics] == [1, 3]

    def test_missing_column(self, tmp_path):
        path = tmp_path / "series.csv"
        path.write_text("n,a\n1,1\n", encoding="utf-8")
        with pytest.raises(DomainError):
            read_series_csv(str(path))

    def test_unlike_shapes_in_file(self, tmp_path):
        path = tmp_path / "series.csv"
        path.write_text("n,a,b\n1,1*sqrt(2),1\n", encoding="utf-8")
        with pytest.raises(DomainError, match="series.csv"):
            read_series_csv(str(path))

    def test_unlike_mean_rows(self, tmp_path):
        path = tmp_path / "series.csv"
        path.write_text("n,a,b\n0,1,0\n0,1*pi,0\n", encoding="utf-8")
        with pytest.raises(DomainError, match="mean rows"):
            read_series_csv(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_series_csv(str(tmp_path / "nope.csv"))

    def test_samples_csv(self, tmp_path, config):
        path = tmp_path / "samples.csv"
        write_samples_csv([0.0, 0.5], [1.0, 0.1], str(path), config)
        with open(path, encoding="utf-8", newline="") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["x", "y"]
        assert float(rows[2][1]) == 0.1
        assert len(rows) == 3

    def test_samples_length_mismatch(self, tmp_path):
        with pytest.raises(DomainError):
            write_samples_csv([0.0], [1.0, 2.0], str(tmp_path / "bad.csv"))

    def test_svg(self, tmp_path):
        path = tmp_path / "plot.svg"
        write_svg([0.0, 1.0, 2.0], [0.0, 1.0, 0.0], str(path))
        text = path.read_text(encoding="utf-8")
        assert text.startswith("<svg")
        assert "<polyline" in text
