"""
异常定义
每个异常携带命令行退出码
"""

from typing import Optional


class GateSynthError(Exception):
    """所有 gatesynth 异常的基类"""

    exit_code = 1


class ExprSyntaxError(GateSynthError, ValueError):
    """表达式语法错误，position 从 1 开始计数"""

    exit_code = 2

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InputFormatError(GateSynthError, ValueError):
    """输入文件或参数格式错误"""

    exit_code = 2


class ArityError(GateSynthError, ValueError):
    """变量下标或位宽不匹配"""

    exit_code = 2


class NotReversibleError(GateSynthError, ValueError):
    """两个输入映射到同一个输出"""

    exit_code = 3

    def __init__(self, first: str, second: str, output: str):
        self.inputs = (first, second)
        self.output = output
        super().__init__(
            f"map is not reversible: inputs {first} and {second} both map to {output}"
        )


class NotPermutationError(GateSynthError, ValueError):
    """矩阵不是置换矩阵"""

    exit_code = 4

    def __init__(self, column: int, reason: str):
        self.column = column
        super().__init__(f"not a permutation matrix: column {column} {reason}")


class ShapeError(GateSynthError, ValueError):
    """矩阵形状不合法"""

    exit_code = 4


class DimensionCapError(GateSynthError, ValueError):
    """超出允许的位数上限"""

    exit_code = 5


class VerificationError(GateSynthError):
    """数值残差或等价性检查失败"""

    exit_code = 6
