"""
从真值表提取积之和 (SOP) 表达式，并用归结 (resolution) 化简

每个乘积项用 (bits, mask) 表示，mask 中为 1 的位置已被消去。
化简按轮进行：同一轮中掩码相同、未掩码位恰好相差一位的两项合并为一项，
没有参与任何合并的项进入结果；直到某一轮不再产生新项。
结果包含所有保留下来的蕴含项，不做最小覆盖选择，因此不一定最简。
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import FrozenSet, Iterable, List, Tuple

import numpy as np

from .bits import BitVector, TruthTable, decode
from .boolexpr import And, Constant, Expr, Not, Or, Variable, arity, format_legacy
from .errors import ArityError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cube:
    """乘积项：bits 为各变量的极性，mask 为已消去的位置（x1 是最高位）"""

    n: int
    bits: int
    mask: int = 0

    def __post_init__(self):
        full = (1 << self.n) - 1
        if not 0 <= self.mask <= full or not 0 <= self.bits <= full:
            raise ArityError(f"cube bits/mask out of range for width {self.n}")
        # 被掩码的位置归零，相等的项结构上相等
        object.__setattr__(self, 'bits', self.bits & (full ^ self.mask))

    @classmethod
    def from_strings(cls, bits: str, mask: str) -> 'Cube':
        """例如 Cube.from_strings('011', '100')"""
        if len(bits) != len(mask):
            raise ArityError("bits and mask must have the same width")
        return cls(len(bits), int(bits, 2), int(mask, 2))

    @property
    def bits_vector(self) -> BitVector:
        return decode(self.bits, self.n)

    @property
    def mask_vector(self) -> BitVector:
        return decode(self.mask, self.n)

    def literal_count(self) -> int:
        return self.n - bin(self.mask).count('1')

    def covers(self, k: int) -> bool:
        """输入下标 k 是否满足该乘积项"""
        full = (1 << self.n) - 1
        return (k & (full ^ self.mask)) == self.bits

    def __str__(self) -> str:
        # '1-0' 形式，'-' 表示消去的位置
        return ''.join(
            '-' if m else str(b) for b, m in zip(self.bits_vector, self.mask_vector)
        )


@dataclass(frozen=True)
class CubeList:
    """乘积项之和"""

    n: int
    cubes: Tuple[Cube, ...] = ()

    def __post_init__(self):
        cubes = tuple(self.cubes)
        for cube in cubes:
            if cube.n != self.n:
                raise ArityError(f"cube of width {cube.n} in a list of width {self.n}")
        object.__setattr__(self, 'cubes', cubes)

    def __len__(self) -> int:
        return len(self.cubes)

    def __iter__(self):
        return iter(self.cubes)

    def covered_set(self) -> FrozenSet[int]:
        """所有被某个乘积项覆盖的输入下标"""
        return frozenset(k for k in range(1 << self.n) if any(c.covers(k) for c in self.cubes))


def _unique(cubes: Iterable[Cube]) -> List[Cube]:
    # 保持首次出现的顺序
    return list(dict.fromkeys(cubes))


def minterms(tt: TruthTable, j: int) -> CubeList:
    """
    记录使第 j 个输出为 1 的全部输入

    Args:
        tt: 真值表
        j: 输出下标（从 0 开始）

    Returns:
        按 b 编码递增的最小项列表
    """
    column = tt.column(j)
    return CubeList(tt.inputs, tuple(Cube(tt.inputs, int(k)) for k in np.flatnonzero(column)))


def simplify_resolution(c: CubeList) -> CubeList:
    """
    归结化简，迭代到不动点

    Args:
        c: 乘积项列表（通常是最小项）

    Returns:
        去重后的乘积项列表，顺序与各轮产生的顺序一致
    """
    n = c.n
    full = (1 << n) - 1
    current = _unique(c.cubes)
    result: List[Cube] = []
    rounds = 0

    while current:
        rounds += 1
        merged: List[Cube] = []
        used = [False] * len(current)
        for i, first in enumerate(current):
            for j in range(i + 1, len(current)):
                second = current[j]
                # 只比较掩码相同的项
                if first.mask != second.mask:
                    continue
                diff = (first.bits ^ second.bits) & (full ^ first.mask)
                # 恰好一位不同
                if diff and not diff & (diff - 1):
                    merged.append(Cube(n, first.bits, first.mask | diff))
                    used[i] = used[j] = True
            if not used[i]:
                result.append(first)
        logger.debug("resolution round %d: %d cubes -> %d merged", rounds, len(current), len(merged))
        current = _unique(merged)

    return CubeList(n, tuple(_unique(result)))


def _product(cube: Cube) -> Expr:
    literals: List[Expr] = []
    for k, (bit, masked) in enumerate(zip(cube.bits_vector, cube.mask_vector), 1):
        if masked:
            continue
        literals.append(Variable(k) if bit else Not(Variable(k)))
    if not literals:
        return Constant(1)
    return reduce(And, literals)


def expr_from_cubes(c: CubeList) -> Expr:
    """积之和表达式；空列表为常量 0，全掩码的项为常量 1"""
    if not c.cubes:
        return Constant(0)
    return reduce(Or, [_product(cube) for cube in c.cubes])


def equivalent(e: Expr, tt: TruthTable, j: int) -> bool:
    """
    穷举检查表达式与真值表第 j 列是否一致

    Args:
        e: 表达式
        tt: 真值表
        j: 输出下标

    Returns:
        全部 2^n 个输入上都一致时为 True
    """
    if arity(e) > tt.inputs:
        return False
    n = tt.inputs
    k = np.arange(1 << n)
    columns = np.array([(k >> (n - 1 - i)) & 1 for i in range(n)], dtype=np.int8)
    values = np.broadcast_to(e.evaluate_columns(columns), (1 << n,))
    return bool(np.array_equal(values, tt.column(j)))


def expressions_from_table(tt: TruthTable) -> List[Expr]:
    """每个输出列的化简后表达式"""
    return [expr_from_cubes(simplify_resolution(minterms(tt, j))) for j in range(tt.outputs)]


def format_column(exprs: List[Expr], zero_based: bool = True) -> List[str]:
    """
    计算机代数风格的列向量，每行居中并用方括号括起

    例如 '[                 x0                ]'
    """
    texts = [format_legacy(e, zero_based) for e in exprs]
    width = max(len(t) for t in texts)
    lines = []
    for text in texts:
        pad = width - len(text)
        left = (pad + 1) // 2
        lines.append('[' + ' ' * left + text + ' ' * (pad - left) + ']')
    return lines
