"""
可逆映射与置换矩阵的互相转换
以及非可逆函数的 oracle U_f 和 Hadamard 基下的 U_{f,H}

矩阵约定：U_f 在 (行 b(f(x)), 列 b(x)) 处为 1，即 U|x> = |f(x)>
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .bits import BitVector, TruthTable, decode, encode
from .errors import ArityError, NotReversibleError, ShapeError
from .linalg import ComplexMatrix, PermutationSpec, kron_all, log2_size

logger = logging.getLogger(__name__)

# Walsh-Hadamard 变换
HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)


@dataclass(frozen=True)
class ReversibleMap:
    """{0,...,2^n - 1} 上的双射，perm[encode(x)] = encode(f(x))"""

    n: int
    perm: Tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(v) for v in self.perm)
        size = 1 << self.n
        if self.n < 1:
            raise ArityError(f"bit width must be at least 1, got {self.n}")
        if len(perm) != size:
            raise ArityError(f"map on {self.n} bits needs {size} entries, got {len(perm)}")
        seen = {}
        for k, v in enumerate(perm):
            if not 0 <= v < size:
                raise ArityError(f"image {v} of input {k} outside 0..{size - 1}")
            if v in seen:
                raise NotReversibleError(
                    str(decode(seen[v], self.n)), str(decode(k, self.n)), str(decode(v, self.n))
                )
            seen[v] = k
        object.__setattr__(self, 'perm', perm)

    @classmethod
    def identity(cls, n: int) -> 'ReversibleMap':
        return cls(n, tuple(range(1 << n)))

    def __call__(self, x: BitVector) -> BitVector:
        if x.width != self.n:
            raise ArityError(f"input width {x.width} does not match map width {self.n}")
        return decode(self.perm[encode(x)], self.n)


def map_from_truth_table(tt: TruthTable) -> ReversibleMap:
    """
    从 n 输入 n 输出的真值表构造可逆映射

    Args:
        tt: 真值表，要求 inputs == outputs

    Returns:
        ReversibleMap；若两个输入的输出相同则抛出 NotReversibleError
    """
    if tt.inputs != tt.outputs:
        raise ArityError(
            f"reversible maps need as many outputs as inputs, got {tt.inputs} -> {tt.outputs}"
        )
    return ReversibleMap(tt.inputs, tuple(encode(row) for row in tt.rows))


def truth_table_from_map(m: ReversibleMap) -> TruthTable:
    """映射的真值表"""
    return TruthTable(m.n, m.n, tuple(decode(v, m.n) for v in m.perm))


def matrix_from_map(m: ReversibleMap) -> PermutationSpec:
    return PermutationSpec(len(m.perm), m.perm)


def map_from_matrix(p: PermutationSpec) -> ReversibleMap:
    """
    逐列读出映射：第 c 列的 1 在第 r 行，则 decode(c) -> decode(r)

    Args:
        p: 置换矩阵，大小必须是 2 的幂
    """
    n = log2_size(p.size)
    if n == 0:
        raise ShapeError("a 1x1 matrix does not describe a boolean map")
    return ReversibleMap(n, p.image)


def oracle_matrix(tt: TruthTable) -> PermutationSpec:
    """
    oracle U_f: |x>|y> -> |x>|y XOR f(x)>，y 是最低位

    Args:
        tt: 单输出真值表

    Returns:
        大小为 2^(n+1) 的 PermutationSpec
    """
    if tt.outputs != 1:
        raise ArityError(f"oracle construction needs a single-output function, got {tt.outputs} outputs")
    f = tt.column(0)
    image = []
    for k in range(1 << tt.inputs):
        for y in (0, 1):
            image.append(2 * k + (y ^ int(f[k])))
    logger.debug("oracle on %d+1 bits, %d flipped blocks", tt.inputs, int(f.sum()))
    return PermutationSpec(len(image), tuple(image))


def hadamard_power(k: int) -> ComplexMatrix:
    """U_H 的 k 重 Kronecker 幂"""
    if k == 0:
        return np.ones((1, 1), dtype=np.complex128)
    return kron_all([HADAMARD] * k)


def hadamard_conjugate(u: ComplexMatrix) -> ComplexMatrix:
    """
    换到 Hadamard 基：W u W，W = U_H ⊗ ... ⊗ U_H

    Args:
        u: 2^k x 2^k 方阵
    """
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {u.shape}")
    w = hadamard_power(log2_size(u.shape[0]))
    return w @ u @ w


def compose(a: ReversibleMap, b: ReversibleMap) -> ReversibleMap:
    """先作用 a 再作用 b"""
    if a.n != b.n:
        raise ArityError(f"cannot compose maps of widths {a.n} and {b.n}")
    return ReversibleMap(a.n, tuple(b.perm[v] for v in a.perm))


def invert(a: ReversibleMap) -> ReversibleMap:
    inverse = [0] * len(a.perm)
    for k, v in enumerate(a.perm):
        inverse[v] = k
    return ReversibleMap(a.n, tuple(inverse))


def _reverse_bits(k: int, n: int) -> int:
    return int(format(k, f'0{n}b')[::-1], 2)


def bit_reversed_order(p: PermutationSpec) -> PermutationSpec:
    """
    按位反转重新编号行列

    计算机代数程序把 x1 存在 bitset 的最低位，其打印的矩阵就是这里的标准矩阵
    在下标位反转后的样子；只用于显示
    """
    n = log2_size(p.size)
    image = [0] * p.size
    for c, r in enumerate(p.image):
        image[_reverse_bits(c, n)] = _reverse_bits(r, n)
    return PermutationSpec(p.size, tuple(image))
