"""Configuration management for genfourier"""

import logging
from dataclasses import dataclass, field


@dataclass
class Config:
    """genfourier 配置类"""

    # 数值积分配置
    DEFAULT_TOL: float = 1e-9
    ACCEL_TOL: float = 1e-8
    EVAL_BUDGET: int = 10**7
    EULER_DEPTH: int = 20
    TAYLOR_CUTOFF: float = 1e-3

    # 高精度求值配置
    MP_DPS: int = 40
    CSV_DIGITS: int = 17

    # 性质检验配置
    DEFAULT_SEED: int = 20240531
    PROPERTY_SAMPLES: int = 1000

    # 并行处理配置
    MAX_THREADS: int = 4

    # 日志配置
    LOG_LEVEL: int = logging.INFO

    _logging_initialized: bool = field(default=False, repr=False)

    def __post_init__(self):
        self._init_logging()

    def _init_logging(self):
        """初始化日志配置"""
        logging.basicConfig(
            level=self.LOG_LEVEL,
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        )
        self._logging_initialized = True

    def float_format(self) -> str:
        """CSV 浮点数格式（有效数字位数）"""
        return f"{{:.{self.CSV_DIGITS}g}}"
