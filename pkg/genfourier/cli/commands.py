"""CLI command implementations"""

import csv
import math
import sys
from typing import Optional

import numpy as np

from genfourier.cli.verify import VerificationSuite
from genfourier.core.config import Config
from genfourier.core.errors import DomainError
from genfourier.core.exact import eval_float, parse_rational, render_exact
from genfourier.distalg import K_SIDE, X_SIDE, frac_derivative, ft, ift, parse_expr, render_expr
from genfourier.fracseries import (
    TrigSeries,
    builtin_series,
    frac_deriv_series,
    read_series_csv,
    sample_series,
    write_samples_csv,
    write_svg,
)
from genfourier.sincint import SincQuery, sinc_integral, sinc_table

FORMATS = ("exact", "float", "both")
DEFAULT_XMIN = -math.pi
DEFAULT_XMAX = math.pi


def cmd_ft(expr: str):
    """x 侧表达式的 Fourier 变换"""
    print(render_expr(ft(parse_expr(expr, X_SIDE))))


def cmd_ifft(expr: str):
    """k 侧表达式的 Fourier 逆变换"""
    print(render_expr(ift(parse_expr(expr, K_SIDE))))


def cmd_fracderiv(expr: str, alpha: str):
    """分数阶导数"""
    print(render_expr(frac_derivative(parse_expr(expr, X_SIDE), parse_rational(alpha))))


def cmd_sincint(n: int, m: int, range_: str, fmt: str, config: Config):
    """单个 sinc 幂积分"""
    exact = sinc_integral(SincQuery(n, m, range_))
    if fmt in ("exact", "both"):
        print(render_exact(exact))
    if fmt in ("float", "both"):
        print(config.float_format().format(eval_float(exact, config.MP_DPS)))


def cmd_sincint_table(max_n: int, config: Config):
    """积分表（CSV 输出到标准输出）"""
    rows = sinc_table(max_n, show_progress=True)
    fmt = config.float_format()
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "m", "range", "exact", "float"])
    for row in rows:
        q = row.query
        writer.writerow([q.n, q.m, q.range, render_exact(row.exact), fmt.format(row.value)])


def _truncate(s: TrigSeries, order: int) -> TrigSeries:
    return TrigSeries(s.mean, s.harmonics[:order])


def cmd_series(
    name: Optional[str],
    coeffs: Optional[str],
    alpha: str,
    order: int,
    samples: int,
    xmin: float,
    xmax: float,
    out: str,
    svg: Optional[str],
    config: Config,
):
    """三角级数的分数阶导数采样"""
    if samples < 2:
        raise DomainError(f"need at least 2 samples, got {samples}")
    if not xmin < xmax:
        raise DomainError(f"need xmin < xmax, got [{xmin}, {xmax}]")
    if coeffs:
        series = _truncate(read_series_csv(coeffs), order)
        source = coeffs
    elif name:
        series = builtin_series(name, order)
        source = name
    else:
        raise DomainError("either --name or --coeffs is required")

    derived = frac_deriv_series(series, parse_rational(alpha))
    xs = np.linspace(xmin, xmax, samples)
    ys = sample_series(derived, xs, config)
    write_samples_csv(xs, ys, out, config)
    if svg:
        write_svg(xs, ys, svg)

    print(f"级数: {source}")
    print(f"阶数: {series.order}")
    print(f"alpha: {alpha}")
    print("-" * 50)
    print(f"采样点数: {samples}  区间: [{xmin:.6g}, {xmax:.6g}]")
    print(f"CSV 输出: {out}")
    if svg:
        print(f"SVG 输出: {svg}")
    print("=" * 50)


def cmd_verify(tol: Optional[float], seed: Optional[int], name_filter: Optional[str], config: Config) -> int:
    """运行验证套件，返回退出码"""
    stats = VerificationSuite(config, tol=tol, seed=seed, name_filter=name_filter).run()
    for result in stats.results:
        print(result.line)
    print(stats.summary)
    return 0 if stats.failed == 0 else 1
