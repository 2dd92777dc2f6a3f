"""CLI module"""

from genfourier.cli.commands import (
    cmd_fracderiv,
    cmd_ft,
    cmd_ifft,
    cmd_series,
    cmd_sincint,
    cmd_sincint_table,
    cmd_verify,
)
from genfourier.cli.verify import CheckResult, VerificationSuite, VerifyStats

__all__ = [
    "CheckResult",
    "VerificationSuite",
    "VerifyStats",
    "cmd_fracderiv",
    "cmd_ft",
    "cmd_ifft",
    "cmd_series",
    "cmd_sincint",
    "cmd_sincint_table",
    "cmd_verify",
]
