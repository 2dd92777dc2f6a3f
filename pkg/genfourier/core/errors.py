"""Exception types raised by genfourier"""

from typing import Iterable, Optional


class GenFourierError(ValueError):
    """所有 genfourier 错误的基类"""


class AddPowerMismatch(GenFourierError):
    """相加的两个系数 π 幂次或根式不同"""

    def __init__(self, left, right):
        super().__init__(f"Cannot add unlike coefficients: {left!r} + {right!r}")
        self.left = left
        self.right = right


class UnsupportedTerm(GenFourierError):
    """变换表中没有对应条目"""

    def __init__(self, kind: str, detail: str = ""):
        message = f"Unsupported term: {kind}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.kind = kind


class NonInvertibleCombination(GenFourierError):
    """k 侧表达式不在变换表的像中"""


class UnsupportedFractionalOperand(GenFourierError):
    """乘以 (ik)^α 后超出分布分类"""

    def __init__(self, kind: str, alpha):
        super().__init__(f"Fractional derivative of order {alpha} leaves the taxonomy for {kind}")
        self.kind = kind
        self.alpha = alpha


class SingularPoint(GenFourierError):
    """在极点处求值"""

    def __init__(self, kind: str, t: float):
        super().__init__(f"{kind} is singular at t={t!r}")
        self.kind = kind
        self.t = t


class ParseError(GenFourierError):
    """解析错误，带字节偏移和期望的记号集合"""

    END_OF_TEXT = "end of text"

    def __init__(self, text: str, position: int, expected: Optional[Iterable[str]] = None):
        """
        Args:
            text: 原始输入
            position: 出错处的字符下标（换算为 UTF-8 字节偏移后保存在 offset 中）
            expected: 该处期望的记号
        """
        position = min(max(position, 0), len(text))
        self.text = text
        self.position = position
        self.offset = len(text[:position].encode("utf-8"))
        self.expected = sorted(set(expected or ()))
        hint = f", expected one of {self.expected}" if self.expected else ""
        super().__init__(f"Parse error at byte offset {self.offset} in {text!r}{hint}")

    @classmethod
    def from_pyparsing(cls, text: str, exc, continuations: Iterable[str] = ("+", "-")) -> "ParseError":
        """由 pyparsing 异常构造；停在文本中间时，期望的是结尾或 continuations 之一"""
        msg = exc.msg[len("Expected "):] if exc.msg.startswith("Expected ") else exc.msg
        expected = [*continuations, cls.END_OF_TEXT] if msg == cls.END_OF_TEXT else [msg]
        return cls(text, exc.loc, expected)


class DomainError(GenFourierError):
    """参数不在定义域内"""


class UnsupportedAlpha(GenFourierError):
    """分数阶的分母不是 1 或 2"""

    def __init__(self, alpha):
        super().__init__(f"Unsupported order alpha={alpha}: denominator must be 1 or 2")
        self.alpha = alpha


class UnknownName(GenFourierError):
    """未知的内置名称"""


class NoConvergence(GenFourierError):
    """数值积分在预算内未收敛"""

    def __init__(self, evaluations: int, detail: str = ""):
        message = f"No convergence after {evaluations} evaluations"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.evaluations = evaluations
