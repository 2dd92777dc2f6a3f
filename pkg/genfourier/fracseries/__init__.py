"""Fractional derivatives of periodic trigonometric series"""

from genfourier.fracseries.io import (
    format_cell,
    parse_cell,
    read_series_csv,
    write_samples_csv,
    write_series_csv,
    write_svg,
)
from genfourier.fracseries.series import (
    BUILTIN_NAMES,
    Harmonic,
    TrigSeries,
    builtin_series,
    frac_deriv_series,
    sample_series,
    series_energy,
)

__all__ = [
    "BUILTIN_NAMES",
    "Harmonic",
    "TrigSeries",
    "builtin_series",
    "format_cell",
    "frac_deriv_series",
    "parse_cell",
    "read_series_csv",
    "sample_series",
    "series_energy",
    "write_samples_csv",
    "write_series_csv",
    "write_svg",
]
