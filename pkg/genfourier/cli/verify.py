"""Verification suite: invariant and oracle checks across all packages"""

import logging
import math
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Tuple, Union

import numpy as np
from tqdm import tqdm

from genfourier.core.config import Config
from genfourier.core.exact import GaussPiCoeff, ExactValue, eval_float, parse_exact, render_exact
from genfourier.distalg import (
    Const,
    DistExpr,
    ExpLine,
    FermiDirac,
    Heaviside,
    Monomial,
    NegPower,
    derivative,
    eval_pointwise,
    frac_derivative,
    ft,
    ift,
    render_expr,
)
from genfourier.distalg.sampling import random_expr
from genfourier.distalg.terms import monomial
from genfourier.fracseries import Harmonic, TrigSeries, builtin_series, frac_deriv_series, sample_series, series_energy
from genfourier.quadoracle import QuadOracle, be_sine_closed, fd_csch_closed, fd_sine_closed
from genfourier.sincint import (
    FULL,
    HALF,
    SincQuery,
    antideriv_coeff_A,
    antideriv_coeff_B,
    full_line,
    full_line_diag,
    half_line,
)

logger = logging.getLogger(__name__)

Value = Union[float, str]
# (expected, got, err)
Outcome = Tuple[Value, Value, float]

EXACT = 0.0
QUANTUM_BETAS = (0.5, 1.0, 2.0, 10.0)
QUANTUM_KS = (0.25, 1.0, 4.0)
HALF_ORDERS = (Fraction(1, 2), Fraction(1), Fraction(3, 2))


@dataclass
class Check:
    """一项检查：名称、参数、容限和执行函数"""

    name: str
    params: str
    run: Callable[[], Outcome]
    tol: float = EXACT


@dataclass
class CheckResult:
    """单项检查结果"""

    name: str
    params: str
    expected: Value
    got: Value
    err: float
    passed: bool

    @property
    def line(self) -> str:
        return (
            f"CHECK {self.name} {self.params} expected={_fmt(self.expected)} "
            f"got={_fmt(self.got)} err={self.err:.3e} {'PASS' if self.passed else 'FAIL'}"
        )


@dataclass
class VerifyStats:
    """验证统计信息"""

    total: int = 0
    passed: int = 0
    failed: int = 0
    results: List[CheckResult] = field(default_factory=list)

    @property
    def summary(self) -> str:
        return f"SUMMARY passed={self.passed} failed={self.failed}"


def _fmt(value: Value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value).replace(" ", "")


def _same(expected, got) -> Outcome:
    """精确比较，err 为 0 或 1"""
    return str(expected), str(got), EXACT if expected == got else 1.0


def _close(expected: float, got: float) -> Outcome:
    return expected, got, abs(expected - got)


# ---------------------------------------------------------------------------
# distalg
# ---------------------------------------------------------------------------


def _x(term, coeff=None) -> DistExpr:
    return DistExpr.of(term) if coeff is None else DistExpr.of(term, coeff)


def _roundtrip(seed: int, samples: int) -> Outcome:
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        e = random_expr(rng)
        if ift(ft(e)) != e:
            failures += 1
            logger.warning(f"round trip failed for {render_expr(e)}")
    return 0.0, float(failures), float(failures)


def _linearity(seed: int, samples: int) -> Outcome:
    rng = random.Random(seed + 1)
    failures = 0
    for _ in range(samples):
        a, b = random_expr(rng), random_expr(rng)
        if ft(a + b) != ft(a) + ft(b):
            failures += 1
            logger.warning(f"linearity failed for {render_expr(a)} and {render_expr(b)}")
    return 0.0, float(failures), float(failures)


def _power_rule(term, m: int) -> Outcome:
    if isinstance(term, Monomial):
        n = term.n
        expected = _x(monomial(n - m), GaussPiCoeff.of(math.factorial(n) // math.factorial(n - m))) if m <= n else None
    else:
        n = term.n
        coeff = (-1) ** m * math.factorial(n + m - 1) // math.factorial(n - 1)
        expected = _x(NegPower(n + m), GaussPiCoeff.of(coeff))
    got = frac_derivative(_x(term), m)
    if expected is None:
        return "0", render_expr(got), EXACT if got.is_zero else 1.0
    return render_expr(expected), render_expr(got), EXACT if got == expected else 1.0


def _half_theta_rl(x: float) -> Outcome:
    half = frac_derivative(_x(Heaviside(1)), Fraction(1, 2))
    expected = eval_pointwise(half, x).real
    result = QuadOracle().rl_half_derivative("heaviside", x)
    return _close(expected, result.value)


def _distalg_checks(config: Config, seed: int) -> List[Check]:
    samples = config.PROPERTY_SAMPLES
    checks = [
        Check(
            "distalg.ft",
            "expr=theta",
            lambda: _same("pi*delta + (ik)^(-1)", render_expr(ft(_x(Heaviside(1))))),
        ),
        Check(
            "distalg.fracderiv",
            "expr=theta alpha=1/2",
            lambda: _same("1/√pi * x^(-1/2)*theta", render_expr(frac_derivative(_x(Heaviside(1)), Fraction(1, 2)))),
        ),
        Check("distalg.roundtrip", f"seed={seed} samples={samples}", lambda: _roundtrip(seed, samples)),
        Check("distalg.linearity", f"seed={seed} samples={samples}", lambda: _linearity(seed, samples)),
        Check(
            "distalg.const_annihilated",
            "alpha=1/2",
            lambda: _same("0", render_expr(frac_derivative(_x(Const()), Fraction(1, 2)))),
        ),
    ]
    half = Fraction(1, 2)
    for label, term in (("theta", Heaviside(1)), ("exp(ix)", ExpLine(1)), ("exp(i2x)", ExpLine(2)), ("1", Const())):
        checks.append(
            Check(
                "distalg.semigroup",
                f"expr={label}",
                lambda term=term: _same(
                    render_expr(derivative(_x(term))),
                    render_expr(frac_derivative(frac_derivative(_x(term), half), half)),
                ),
            )
        )
    for n in range(1, 5):
        for m in range(1, 4):
            checks.append(Check("distalg.power_rule", f"x^{n} m={m}", lambda n=n, m=m: _power_rule(Monomial(n), m)))
            checks.append(Check("distalg.power_rule", f"x^-{n} m={m}", lambda n=n, m=m: _power_rule(NegPower(n), m)))
    for label, x in (("1/pi", 1 / math.pi), ("1", 1.0), ("4", 4.0)):
        checks.append(Check("distalg.half_theta_rl", f"x={label}", lambda x=x: _half_theta_rl(x), 1e-6))
    return checks


# ---------------------------------------------------------------------------
# fracseries
# ---------------------------------------------------------------------------


def _random_series(rng: random.Random) -> TrigSeries:
    order = rng.randint(1, 50)
    frequencies = sorted(rng.sample(range(1, 80), order))
    harmonics = [
        Harmonic(n, GaussPiCoeff.of(Fraction(rng.randint(-9, 9), rng.randint(1, 5))),
                 GaussPiCoeff.of(Fraction(rng.randint(-9, 9), rng.randint(1, 5))))
        for n in frequencies
    ]
    return TrigSeries(GaussPiCoeff.of(rng.randint(-3, 3)), tuple(harmonics))


def _series_pool(seed: int, count: int) -> List[TrigSeries]:
    rng = random.Random(seed + 2)
    pool = [builtin_series(name, order) for name in ("sawtooth", "absx") for order in (1, 5, 50)]
    pool.extend(_random_series(rng) for _ in range(count))
    return pool


def _series_semigroup(pool: List[TrigSeries], alpha: Fraction, beta: Fraction) -> Outcome:
    failures = sum(
        1 for s in pool if frac_deriv_series(frac_deriv_series(s, alpha), beta) != frac_deriv_series(s, alpha + beta)
    )
    return 0.0, float(failures), float(failures)


def _series_energy(pool: List[TrigSeries], alpha: Fraction) -> Outcome:
    j = int(2 * alpha)
    failures = 0
    for s in pool:
        d = frac_deriv_series(s, alpha)
        for h in s.harmonics:
            if series_energy(d, h.n) != GaussPiCoeff.of(h.n**j) * series_energy(s, h.n):
                failures += 1
    return 0.0, float(failures), float(failures)


def _cos_sin_pair(a: int) -> Outcome:
    half = Fraction(1, 2)
    cos = TrigSeries.from_triples(0, [(a, 1, 0)])
    sin = TrigSeries.from_triples(0, [(a, 0, 1)])
    twice_cos = frac_deriv_series(frac_deriv_series(cos, half), half)
    twice_sin = frac_deriv_series(frac_deriv_series(sin, half), half)
    ok = twice_cos == TrigSeries.from_triples(0, [(a, 0, -a)]) and twice_sin == TrigSeries.from_triples(0, [(a, a, 0)])
    return "-a*sin,a*cos", "match" if ok else "mismatch", EXACT if ok else 1.0


def _literal_half_sawtooth(xs: np.ndarray, order: int) -> np.ndarray:
    n = np.arange(1, order + 1, dtype=float)
    signs = np.where(n % 2 == 1, 1.0, -1.0)
    phases = np.outer(xs, n)
    return math.sqrt(2) * ((np.sin(phases) + np.cos(phases)) * (signs / np.sqrt(n))).sum(axis=1)


def _literal_half_absx(xs: np.ndarray, order: int) -> np.ndarray:
    n = 2 * np.arange(order, dtype=float) + 1
    phases = np.outer(xs, n)
    return -4 / (math.pi * math.sqrt(2)) * ((np.cos(phases) - np.sin(phases)) / n**1.5).sum(axis=1)


def _figure(name: str, order: int) -> Outcome:
    xs = np.linspace(-math.pi, math.pi, 201)
    literal = _literal_half_sawtooth if name == "sawtooth" else _literal_half_absx
    expected = literal(xs, order)
    got = np.asarray(sample_series(frac_deriv_series(builtin_series(name, order), Fraction(1, 2)), xs))
    worst = int(np.argmax(np.abs(expected - got)))
    return float(expected[worst]), float(got[worst]), float(abs(expected[worst] - got[worst]))


def _fracseries_checks(config: Config, seed: int) -> List[Check]:
    pool = _series_pool(seed, max(1, config.PROPERTY_SAMPLES // 20))
    checks = []
    for alpha in HALF_ORDERS:
        for beta in HALF_ORDERS:
            checks.append(
                Check(
                    "fracseries.semigroup",
                    f"alpha={alpha} beta={beta} series={len(pool)}",
                    lambda alpha=alpha, beta=beta: _series_semigroup(pool, alpha, beta),
                )
            )
        checks.append(Check("fracseries.energy", f"alpha={alpha}", lambda alpha=alpha: _series_energy(pool, alpha)))
    for a in (1, 2, 3):
        checks.append(Check("fracseries.cos_sin", f"a={a}", lambda a=a: _cos_sin_pair(a)))
    for order in (5, 10, 20, 30):
        checks.append(Check("fracseries.figure", f"name=sawtooth order={order}", lambda order=order: _figure("sawtooth", order), 1e-12))
    checks.append(Check("fracseries.figure", "name=absx order=100", lambda: _figure("absx", 100), 1e-12))
    return checks


# ---------------------------------------------------------------------------
# sincint
# ---------------------------------------------------------------------------

_GOLDEN = [
    (FULL, 3, 3, ExactValue.from_pi(Fraction(3, 4))),
    (FULL, 4, 4, ExactValue.from_pi(Fraction(2, 3))),
    (FULL, 5, 5, ExactValue.from_pi(Fraction(115, 192))),
    (FULL, 6, 6, ExactValue.from_pi(Fraction(11, 20))),
    (HALF, 3, 2, ExactValue.from_log(3, Fraction(3, 4))),
    (HALF, 4, 3, ExactValue.from_log(2)),
    (HALF, 5, 4, ExactValue.build(logs={5: Fraction(125, 96), 3: Fraction(-45, 32)})),
    (HALF, 1, 1, ExactValue.from_pi(Fraction(1, 2))),
    (HALF, 2, 2, ExactValue.from_pi(Fraction(1, 2))),
    (HALF, 3, 1, ExactValue.from_pi(Fraction(1, 4))),
]


def _exact(range_: str, n: int, m: int) -> ExactValue:
    return full_line(n, m) if range_ == FULL else half_line(n, m)


def _halving(max_n: int) -> Outcome:
    failures = 0
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            full = full_line(n, m)
            odd = SincQuery(n, m).odd_parity
            expected = ExactValue.zero() if odd else half_line(n, m).scale(2)
            if full != expected:
                failures += 1
    return 0.0, float(failures), float(failures)


def _parity(max_n: int) -> Outcome:
    failures = 0
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            v = half_line(n, m)
            odd = SincQuery(n, m, HALF).odd_parity
            if not odd and (v.log_terms or v.coeff_one):
                failures += 1
            if odd and (v.coeff_pi or v.coeff_one):
                failures += 1
    return 0.0, float(failures), float(failures)


def _recursion(max_m: int) -> Outcome:
    failures = 0
    for m in range(1, max_m + 1):
        harmonic = sum((Fraction(1, j) for j in range(1, m)), Fraction(0))
        if antideriv_coeff_A(m) * math.factorial(m - 1) != 1:
            failures += 1
        if antideriv_coeff_B(m) * math.factorial(m - 1) != 1 + harmonic:
            failures += 1
    return 0.0, float(failures), float(failures)


def _reparse(max_n: int) -> Outcome:
    failures = 0
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            for v in (full_line(n, m), half_line(n, m)):
                if parse_exact(render_exact(v)) != v:
                    failures += 1
    return 0.0, float(failures), float(failures)


def _oracle(range_: str, n: int, m: int, tol: float) -> Outcome:
    expected = eval_float(_exact(range_, n, m))
    result = QuadOracle().integrate_sinc_power(n, m, range_, tol=min(tol, 1e-9))
    return _close(expected, result.value)


def _sincint_checks(config: Config, seed: int) -> List[Check]:
    checks = []
    for range_, n, m, expected in _GOLDEN:
        checks.append(
            Check(
                "sincint.golden",
                f"n={n} m={m} range={range_}",
                lambda range_=range_, n=n, m=m, expected=expected: _same(
                    render_exact(expected), render_exact(_exact(range_, n, m))
                ),
            )
        )
    for n in range(1, 21):
        checks.append(
            Check("sincint.diag", f"n={n}", lambda n=n: _same(render_exact(full_line(n, n)), render_exact(full_line_diag(n))))
        )
    checks.append(Check("sincint.halving", "max_n=20", lambda: _halving(20)))
    checks.append(Check("sincint.parity", "max_n=20", lambda: _parity(20)))
    checks.append(Check("sincint.recursion", "max_m=30", lambda: _recursion(30)))
    checks.append(Check("sincint.reparse", "max_n=12", lambda: _reparse(12)))
    for n in range(1, 13):
        for m in range(1, n + 1):
            for range_ in (FULL, HALF):
                checks.append(
                    Check(
                        "sincint.oracle",
                        f"n={n} m={m} range={range_}",
                        lambda range_=range_, n=n, m=m: _oracle(range_, n, m, 1e-9),
                        1e-8,
                    )
                )
    return checks


# ---------------------------------------------------------------------------
# quadoracle
# ---------------------------------------------------------------------------


def _zero_temperature() -> Outcome:
    # β → ∞ 时 FD 分布趋于 Θ(-x)，两者像之差的光滑部分趋于 0
    step = ft(_x(Heaviside(-1)))
    magnitudes = [
        abs(eval_pointwise(ft(_x(FermiDirac(beta))) - step, 1.0, exclude_singular=True)) for beta in (1, 10, 100)
    ]
    decreasing = all(b < a for a, b in zip(magnitudes, magnitudes[1:]))
    ok = decreasing and magnitudes[-1] < 1e-3
    return 1e-3, magnitudes[-1], EXACT if ok else 1.0


def _quadoracle_checks(config: Config, seed: int) -> List[Check]:
    checks = []
    for beta in QUANTUM_BETAS:
        for k in QUANTUM_KS:
            params = f"beta={beta:g} k={k:g}"
            checks.append(
                Check(
                    "quadoracle.fd_sine",
                    params,
                    lambda beta=beta, k=k: _close(fd_sine_closed(beta, k), QuadOracle().fd_sine_transform(beta, k).value),
                    1e-6,
                )
            )
            checks.append(
                Check(
                    "quadoracle.be_sine",
                    params,
                    lambda beta=beta, k=k: _close(be_sine_closed(beta, k), QuadOracle().be_sine_transform(beta, k).value),
                    1e-6,
                )
            )
            checks.append(
                Check(
                    "quadoracle.fd_partial_fraction",
                    params + " N=100000",
                    lambda beta=beta, k=k: _close(
                        fd_csch_closed(beta, k), QuadOracle().fd_partial_fraction(beta, k, 100_000).imag
                    ),
                    1e-4,
                )
            )
    for alpha in (0.25, 0.5, 1.5, 2.5):
        checks.append(
            Check(
                "quadoracle.alt_sum",
                f"alpha={alpha:g} N=10000",
                lambda alpha=alpha: _close(QuadOracle.alt_sum_closed(alpha), QuadOracle().alt_sum(alpha, 10_000)),
                config.ACCEL_TOL,
            )
        )
    checks.append(Check("quadoracle.zero_temperature", "beta=1,10,100 k=1", _zero_temperature))
    return checks


# ---------------------------------------------------------------------------
# 套件
# ---------------------------------------------------------------------------


class VerificationSuite:
    """全部验证检查的集合"""

    def __init__(
        self,
        config: Optional[Config] = None,
        tol: Optional[float] = None,
        seed: Optional[int] = None,
        name_filter: Optional[str] = None,
    ):
        self.config = config or Config()
        self.tol = tol
        self.seed = self.config.DEFAULT_SEED if seed is None else seed
        self.name_filter = name_filter

    def checks(self) -> List[Check]:
        builders = (_distalg_checks, _fracseries_checks, _sincint_checks, _quadoracle_checks)
        selected = []
        for build in builders:
            for check in build(self.config, self.seed):
                if self.name_filter and self.name_filter not in check.name:
                    continue
                if self.tol is not None and check.tol > EXACT:
                    check.tol = self.tol
                selected.append(check)
        return selected

    def _execute(self, check: Check) -> CheckResult:
        try:
            expected, got, err = check.run()
        except Exception as e:
            logger.error(f"{check.name} {check.params}: {type(e).__name__}: {e}")
            return CheckResult(check.name, check.params, "-", f"{type(e).__name__}", math.inf, False)
        passed = not math.isnan(err) and err <= check.tol
        return CheckResult(check.name, check.params, expected, got, err, passed)

    def run(self, show_progress: bool = True) -> VerifyStats:
        """
        并行执行所有检查

        Returns:
            VerifyStats，结果按 (名称, 参数) 排序
        """
        checks = self.checks()
        results: List[CheckResult] = []
        max_threads = self.config.MAX_THREADS
        logger.info(f"Running {len(checks)} checks with {max_threads} threads (seed={self.seed})")

        if max_threads <= 1:
            for check in tqdm(checks, desc="Verifying", disable=not show_progress):
                results.append(self._execute(check))
        else:
            with ThreadPoolExecutor(max_workers=max_threads) as executor:
                futures = {executor.submit(self._execute, c): c for c in checks}
                for future in tqdm(
                    as_completed(futures),
                    total=len(futures),
                    desc="Verifying",
                    disable=not show_progress,
                ):
                    results.append(future.result())

        results.sort(key=lambda r: (r.name, r.params))
        stats = VerifyStats(total=len(results), results=results)
        stats.passed = sum(1 for r in results if r.passed)
        stats.failed = stats.total - stats.passed
        logger.info(f"Verification finished: {stats.passed} passed, {stats.failed} failed")
        return stats
