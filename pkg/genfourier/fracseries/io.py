"""Series and sample CSV files, minimal SVG polyline"""

import csv
import logging
from fractions import Fraction
from pathlib import Path
from typing import List, Sequence, Tuple

import pyparsing as pp

from genfourier.core.config import Config
from genfourier.core.errors import AddPowerMismatch, DomainError, ParseError
from genfourier.core.exact import ZERO, GaussPiCoeff, format_rational
from genfourier.fracseries.series import Harmonic, TrigSeries

logger = logging.getLogger(__name__)

SERIES_COLUMNS = ["n", "a", "b"]
SAMPLE_COLUMNS = ["x", "y"]

# 单元格: p/q[*sqrt(r)][*pi | *pi^e | *pi^(h/2)]
_RAT = pp.Combine(pp.Optional("-") + pp.Word(pp.nums) + pp.Optional("/" + pp.Word(pp.nums)))
_INT = pp.Combine(pp.Optional("-") + pp.Word(pp.nums))
_SQRT = pp.Suppress("*sqrt(") + pp.Word(pp.nums)("radicand") + pp.Suppress(")")
_PI_EXP = _INT("pi_exp") | (pp.Suppress("(") + _RAT("pi_exp") + pp.Suppress(")"))
_PI = pp.Literal("*pi")("pi") + pp.Optional(pp.Suppress("^") + _PI_EXP)
_CELL = _RAT("value") + pp.Optional(_SQRT) + pp.Optional(_PI) + pp.StringEnd()


def format_cell(c: GaussPiCoeff) -> str:
    """实系数的单元格文本"""
    if not c.is_real:
        raise DomainError(f"series coefficients must be real, got {c}")
    text = format_rational(c.re)
    if c.radicand != 1:
        text += f"*sqrt({c.radicand})"
    h = c.pi_half_power
    if h == 2:
        text += "*pi"
    elif h % 2 == 0 and h != 0:
        text += f"*pi^{h // 2}"
    elif h % 2 == 1:
        text += f"*pi^({h}/2)"
    return text


def parse_cell(text: str) -> GaussPiCoeff:
    text = text.strip().replace(" ", "")
    try:
        result = _CELL.parse_string(text)
    except pp.ParseBaseException as e:
        raise ParseError.from_pyparsing(text, e, continuations=("*sqrt(", "*pi")) from None
    value = Fraction(result["value"])
    radicand = int(result["radicand"]) if "radicand" in result else 1
    half_power = 0
    if "pi" in result:
        exponent = Fraction(result["pi_exp"]) if "pi_exp" in result else Fraction(1)
        if (2 * exponent).denominator != 1:
            raise ParseError(text, text.find("pi"), ["pi exponent with denominator 1 or 2"])
        half_power = int(2 * exponent)
    if radicand < 1:
        raise ParseError(text, text.find("sqrt"), ["positive radicand"])
    return GaussPiCoeff(value, Fraction(0), half_power, radicand)


def read_series_csv(path: str) -> TrigSeries:
    """
    读取级数 CSV（表头 n,a,b；均值行 0,a,0）

    行可以乱序，按频率排序后构造 TrigSeries

    Raises:
        FileNotFoundError: 文件不存在
        DomainError: 缺少列、频率重复，或同一谐波的 a、b 形状不同
        ParseError: 系数无法解析
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"series file not found: {path}")
    mean = ZERO
    rows: List[Tuple[int, GaussPiCoeff, GaussPiCoeff]] = []
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames:
            missing = set(SERIES_COLUMNS) - set(reader.fieldnames)
            if missing:
                raise DomainError(f"missing columns in {path}: {sorted(missing)}")
        for row in reader:
            n = int(row["n"])
            a = parse_cell(row["a"])
            b = parse_cell(row["b"])
            if n == 0:
                if not b.is_zero:
                    raise DomainError(f"mean row of {path} must have b = 0")
                try:
                    mean = mean + a
                except AddPowerMismatch:
                    raise DomainError(f"mean rows of {path} have unlike coefficients {mean} and {a}") from None
            else:
                rows.append((n, a, b))
    rows.sort(key=lambda r: r[0])
    try:
        series = TrigSeries(mean, tuple(Harmonic(n, a, b) for n, a, b in rows))
    except DomainError as exc:
        raise DomainError(f"{path}: {exc}") from None
    logger.info(f"read series of order {series.order} from {path}")
    return series


def write_series_csv(s: TrigSeries, path: str):
    """写出级数 CSV，均值行在最前"""
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(SERIES_COLUMNS)
        writer.writerow([0, format_cell(s.mean), "0"])
        for h in s.harmonics:
            writer.writerow([h.n, format_cell(h.a), format_cell(h.b)])
    logger.info(f"wrote series of order {s.order} to {path}")


def write_samples_csv(xs: Sequence[float], ys: Sequence[float], path: str, config: Config = None):
    """写出采样 CSV（表头 x,y，17 位有效数字）"""
    if len(xs) != len(ys):
        raise DomainError(f"sample length mismatch: {len(xs)} x values, {len(ys)} y values")
    fmt = (config or Config).float_format()
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(SAMPLE_COLUMNS)
        for x, y in zip(xs, ys):
            writer.writerow([fmt.format(x), fmt.format(y)])
    logger.info(f"wrote {len(xs)} samples to {path}")


def write_svg(xs: Sequence[float], ys: Sequence[float], path: str, width: int = 800, height: int = 400):
    """单条折线的最简 SVG，坐标线性映射到画布"""
    if len(xs) < 2 or len(xs) != len(ys):
        raise DomainError("need at least two samples of equal length for an SVG polyline")
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0
    points = " ".join(
        f"{(x - x_lo) / x_span * width:.3f},{height - (y - y_lo) / y_span * height:.3f}" for x, y in zip(xs, ys)
    )
    with open(path, "w", encoding="utf-8") as f:
        f.write(f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">\n')
        f.write(f'<polyline fill="none" stroke="black" points="{points}"/>\n')
        f.write("</svg>\n")
    logger.info(f"wrote SVG polyline with {len(xs)} points to {path}")
