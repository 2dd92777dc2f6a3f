"""CLI entry point for genfourier"""

import argparse
import sys
from typing import List, Optional

from genfourier.cli.commands import (
    DEFAULT_XMAX,
    DEFAULT_XMIN,
    FORMATS,
    cmd_fracderiv,
    cmd_ft,
    cmd_ifft,
    cmd_series,
    cmd_sincint,
    cmd_sincint_table,
    cmd_verify,
)
from genfourier.core.config import Config
from genfourier.core.errors import GenFourierError
from genfourier.fracseries import BUILTIN_NAMES
from genfourier.sincint.formulas import RANGES


def create_parser() -> argparse.ArgumentParser:
    """创建命令行解析器"""
    parser = argparse.ArgumentParser(
        prog="genfourier",
        description="广义函数的 Fourier 变换、分数阶导数与 sinc 幂积分",
    )
    subparsers = parser.add_subparsers(dest="command", help="可用命令")

    # ft 命令
    ft_parser = subparsers.add_parser(
        "ft",
        help="x 侧表达式的 Fourier 变换",
    )
    ft_parser.add_argument(
        "--expr",
        required=True,
        help='表达式 (如: "theta" 或 "x^2 + 3*delta")',
    )

    # ifft 命令
    ifft_parser = subparsers.add_parser(
        "ifft",
        help="k 侧表达式的 Fourier 逆变换",
    )
    ifft_parser.add_argument(
        "--expr",
        required=True,
        help='表达式 (如: "pi*delta + (ik)^(-1)")',
    )

    # fracderiv 命令
    fracderiv_parser = subparsers.add_parser(
        "fracderiv",
        help="分数阶导数",
    )
    fracderiv_parser.add_argument(
        "--expr",
        required=True,
        help="x 侧表达式",
    )
    fracderiv_parser.add_argument(
        "--alpha",
        required=True,
        help="阶数，分母为 1 或 2 的有理数 (如: 1/2)",
    )

    # sincint 命令
    sincint_parser = subparsers.add_parser(
        "sincint",
        help="∫ sinⁿx/xᵐ dx 的精确值",
    )
    sincint_parser.add_argument(
        "--n",
        type=int,
        help="正弦的幂次",
    )
    sincint_parser.add_argument(
        "--m",
        type=int,
        help="分母的幂次 (1 ≤ m ≤ n)",
    )
    sincint_parser.add_argument(
        "--range",
        choices=RANGES,
        default="full",
        help="积分区间: full 为整个实轴, half 为 [0,∞) (默认: full)",
    )
    sincint_parser.add_argument(
        "--format",
        choices=FORMATS,
        default="exact",
        help="输出格式 (默认: exact)",
    )
    sincint_parser.add_argument(
        "--table",
        action="store_true",
        help="输出 1 ≤ m ≤ n ≤ max-n 的 CSV 积分表",
    )
    sincint_parser.add_argument(
        "--max-n",
        type=int,
        help="积分表的最大 n",
    )

    # series 命令
    series_parser = subparsers.add_parser(
        "series",
        help="三角级数的分数阶导数采样",
    )
    series_parser.add_argument(
        "--name",
        choices=BUILTIN_NAMES,
        help="内置级数",
    )
    series_parser.add_argument(
        "--coeffs",
        help="系数 CSV 文件 (表头 n,a,b)，优先于 --name",
    )
    series_parser.add_argument(
        "--alpha",
        required=True,
        help="阶数，分母为 1 或 2 的非负有理数",
    )
    series_parser.add_argument(
        "--order",
        type=int,
        required=True,
        help="保留的非零谐波个数",
    )
    series_parser.add_argument(
        "--samples",
        type=int,
        default=1000,
        help="采样点数 (默认: 1000)",
    )
    series_parser.add_argument(
        "--xmin",
        type=float,
        default=DEFAULT_XMIN,
        help="采样区间左端 (默认: -π)",
    )
    series_parser.add_argument(
        "--xmax",
        type=float,
        default=DEFAULT_XMAX,
        help="采样区间右端 (默认: π)",
    )
    series_parser.add_argument(
        "--out",
        required=True,
        help="采样 CSV 输出路径",
    )
    series_parser.add_argument(
        "--svg",
        help="可选的 SVG 折线输出路径",
    )

    # verify 命令
    verify_parser = subparsers.add_parser(
        "verify",
        help="运行全部验证检查",
    )
    verify_parser.add_argument(
        "--tol",
        type=float,
        help="覆盖数值检查的容限",
    )
    verify_parser.add_argument(
        "--seed",
        type=int,
        help="随机性质检验的种子 (默认: Config.DEFAULT_SEED)",
    )
    verify_parser.add_argument(
        "--filter",
        help="只运行名称包含该子串的检查",
    )

    return parser


def _dispatch(parser: argparse.ArgumentParser, args: argparse.Namespace, config: Config) -> int:
    if args.command == "ft":
        cmd_ft(args.expr)
    elif args.command == "ifft":
        cmd_ifft(args.expr)
    elif args.command == "fracderiv":
        cmd_fracderiv(args.expr, args.alpha)
    elif args.command == "sincint":
        if args.table:
            if args.max_n is None:
                parser.error("sincint --table requires --max-n")
            cmd_sincint_table(args.max_n, config)
        else:
            if args.n is None or args.m is None:
                parser.error("sincint requires --n and --m (or --table --max-n)")
            cmd_sincint(args.n, args.m, args.range, args.format, config)
    elif args.command == "series":
        if not args.name and not args.coeffs:
            parser.error("series requires --name or --coeffs")
        cmd_series(
            args.name,
            args.coeffs,
            args.alpha,
            args.order,
            args.samples,
            args.xmin,
            args.xmax,
            args.out,
            args.svg,
            config,
        )
    elif args.command == "verify":
        return cmd_verify(args.tol, args.seed, args.filter, config)
    return 0


def run_cli(argv: Optional[List[str]] = None) -> int:
    """
    执行一次命令行调用

    Returns:
        退出码: 0 成功；1 验证失败；2 参数或解析错误
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            parser.print_help()
            return 2
        return _dispatch(parser, args, Config())
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except (GenFourierError, OSError) as e:
        print(f"错误: {e}", file=sys.stderr)
        return 2


def main():
    """主入口函数"""
    try:
        sys.exit(run_cli())
    except KeyboardInterrupt:
        print("\n操作已取消", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
