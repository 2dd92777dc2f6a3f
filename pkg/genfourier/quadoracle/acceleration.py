"""Series acceleration by iterated averaging of partial sums (Euler transformation)"""

import logging
from typing import Sequence

import numpy as np

logger = logging.getLogger(__name__)


def euler_accelerate(partial_sums: Sequence[float], depth: int = 20) -> float:
    """
    对交错级数的部分和反复取相邻平均

    Args:
        partial_sums: 按顺序排列的部分和（至少 depth+1 个时使用最后 depth+1 个）
        depth: 平均次数

    Returns:
        外推的极限估计
    """
    sums = np.asarray(partial_sums)
    if sums.size == 0:
        raise ValueError("no partial sums to accelerate")
    sums = sums[-(depth + 1):]
    while sums.size > 1:
        sums = 0.5 * (sums[:-1] + sums[1:])
    return float(sums[0])


def accelerated_sum(terms: np.ndarray, depth: int = 20) -> float:
    """级数前 N 项的 Euler 加速和"""
    return euler_accelerate(np.cumsum(terms), depth)
