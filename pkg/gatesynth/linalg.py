"""
稠密复矩阵工具
乘积、Kronecker 积、直和、共轭转置、范数，以及置换矩阵的紧凑表示与文件格式
"""

import json
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from .config import JSON_DIGITS, PERMUTATION_TOL
from .errors import InputFormatError, NotPermutationError, ShapeError

logger = logging.getLogger(__name__)

# 稠密矩阵直接使用 complex128 的 numpy 数组
ComplexMatrix = np.ndarray


def as_matrix(values) -> ComplexMatrix:
    """转换为二维 complex128 数组"""
    m = np.array(values, dtype=np.complex128)
    if m.ndim != 2:
        raise ShapeError(f"expected a two-dimensional matrix, got shape {m.shape}")
    return m


def identity(d: int) -> ComplexMatrix:
    return np.eye(d, dtype=np.complex128)


def is_power_of_two(d: int) -> bool:
    return d >= 1 and (d & (d - 1)) == 0


def log2_size(d: int) -> int:
    """d = 2^k 时返回 k，否则抛出 ShapeError"""
    if not is_power_of_two(d):
        raise ShapeError(f"dimension {d} is not a power of two")
    return d.bit_length() - 1


@dataclass(frozen=True)
class PermutationSpec:
    """置换矩阵的紧凑形式：image[c] = r 表示 (r, c) 处为 1"""

    size: int
    image: Tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(r) for r in self.image)
        if len(image) != self.size:
            raise ShapeError(f"permutation of size {self.size} has {len(image)} image entries")
        seen = {}
        for c, r in enumerate(image):
            if not 0 <= r < self.size:
                raise NotPermutationError(c, f"maps to row {r}, outside 0..{self.size - 1}")
            if r in seen:
                raise NotPermutationError(c, f"repeats row {r} already used by column {seen[r]}")
            seen[r] = c
        object.__setattr__(self, 'image', image)

    @classmethod
    def identity(cls, size: int) -> 'PermutationSpec':
        return cls(size, tuple(range(size)))

    @classmethod
    def from_list(cls, image: Sequence[int]) -> 'PermutationSpec':
        return cls(len(image), tuple(image))

    def to_dict(self) -> Dict:
        return {'size': self.size, 'image': list(self.image)}


def _same_shape(a: ComplexMatrix, b: ComplexMatrix):
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")


def matmul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Kronecker 积，(a⊗b)[i*p+k, j*q+l] = a[i,j] * b[k,l]"""
    return np.kron(a, b)


def kron_all(factors: Sequence[ComplexMatrix]) -> ComplexMatrix:
    """从左到右的 Kronecker 积"""
    result = factors[0]
    for factor in factors[1:]:
        result = np.kron(result, factor)
    return result


def direct_sum(blocks: Sequence[ComplexMatrix]) -> ComplexMatrix:
    """
    直和（块对角拼接）

    Args:
        blocks: 方阵列表，按顺序放在对角线上

    Returns:
        块对角矩阵
    """
    if not blocks:
        raise ShapeError("direct sum needs at least one block")
    for i, block in enumerate(blocks):
        block = np.asarray(block)
        if block.ndim != 2 or block.shape[0] != block.shape[1]:
            raise ShapeError(f"block {i} is not square: shape {block.shape}")
    return scipy.linalg.block_diag(*[np.asarray(b, dtype=np.complex128) for b in blocks])


def adjoint(a: ComplexMatrix) -> ComplexMatrix:
    return a.conj().T


def frobenius_distance(a: ComplexMatrix, b: ComplexMatrix) -> float:
    _same_shape(a, b)
    return float(np.linalg.norm(a - b, 'fro'))


def max_abs_diff(a: ComplexMatrix, b: ComplexMatrix) -> float:
    _same_shape(a, b)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def to_dense(p: PermutationSpec) -> ComplexMatrix:
    """置换矩阵的稠密形式"""
    m = np.zeros((p.size, p.size), dtype=np.complex128)
    m[list(p.image), list(range(p.size))] = 1
    return m


def from_dense(m: ComplexMatrix, tol: float = PERMUTATION_TOL) -> PermutationSpec:
    """
    从稠密矩阵恢复置换

    Args:
        m: 方阵
        tol: 判定 0 与 1 的容差

    Returns:
        PermutationSpec；任一列不是单位列时抛出 NotPermutationError
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"permutation matrix must be square, got shape {m.shape}")
    image = []
    for c in range(m.shape[1]):
        column = m[:, c]
        ones = np.flatnonzero(np.abs(column - 1) <= tol)
        if len(ones) != 1:
            raise NotPermutationError(c, f"has {len(ones)} entries equal to 1")
        rest = np.delete(column, ones[0])
        if rest.size and np.max(np.abs(rest)) > tol:
            bad = int(np.argmax(np.abs(column) * (np.arange(len(column)) != ones[0])))
            raise NotPermutationError(c, f"has nonzero entry {column[bad]} in row {bad}")
        image.append(int(ones[0]))
    return PermutationSpec(len(image), tuple(image))


# ---------------------------------------------------------------------------
# 文件格式
# ---------------------------------------------------------------------------

def _number(x: float) -> float:
    value = float(f"{x:.{JSON_DIGITS}g}")
    return 0.0 if value == 0 else value


def matrix_to_dict(m: ComplexMatrix) -> Dict:
    """矩阵 JSON：{"rows", "cols", "entries": [[re, im], ...]}，按行存储"""
    flat = np.asarray(m, dtype=np.complex128).ravel()
    return {
        'rows': int(m.shape[0]),
        'cols': int(m.shape[1]),
        'entries': [[_number(z.real), _number(z.imag)] for z in flat],
    }


def matrix_from_dict(data: Dict) -> ComplexMatrix:
    try:
        rows, cols = int(data['rows']), int(data['cols'])
        entries = data['entries']
    except (KeyError, TypeError, ValueError) as e:
        raise InputFormatError(f"matrix JSON needs rows, cols and entries: {e}")
    if rows < 1 or cols < 1 or not isinstance(entries, list):
        raise InputFormatError("matrix JSON needs positive rows and cols and a list of entries")
    if len(entries) != rows * cols:
        raise InputFormatError(f"matrix JSON has {len(entries)} entries, expected {rows * cols}")
    try:
        values = [complex(float(re_), float(im)) for re_, im in entries]
    except (TypeError, ValueError) as e:
        raise InputFormatError(f"matrix entries must be [re, im] pairs: {e}")
    return np.array(values, dtype=np.complex128).reshape(rows, cols)


def _image_list(image, source: str) -> List[int]:
    # bool 是 int 的子类，需单独排除
    if not isinstance(image, list) or not all(isinstance(r, int) and not isinstance(r, bool) for r in image):
        raise InputFormatError(f"permutation image must be a list of integers, got {source}")
    return image


def permutation_from_dict(data: Dict) -> PermutationSpec:
    try:
        size, image = int(data['size']), data['image']
    except (KeyError, TypeError, ValueError) as e:
        raise InputFormatError(f"permutation JSON needs size and image: {e}")
    return PermutationSpec(size, tuple(_image_list(image, repr(image))))


def parse_permutation_list(text: str) -> PermutationSpec:
    """解析 '[2,3,1,0]' 形式的置换"""
    try:
        image = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"cannot parse permutation list {text!r}: {e}")
    return PermutationSpec.from_list(_image_list(image, repr(text)))


_ROW_PATTERN = re.compile(r'^\s*\[(.*)\]\s*$')


def matrix_from_text(text: str) -> ComplexMatrix:
    """解析 '[1 0 0 0]' 形式的方括号行"""
    rows = []
    for number, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        match = _ROW_PATTERN.match(line)
        if not match:
            raise InputFormatError(f"line {number}: expected a bracketed row, got {line!r}")
        try:
            rows.append([complex(token.replace('i', 'j')) for token in match.group(1).split()])
        except ValueError as e:
            raise InputFormatError(f"line {number}: {e}")
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise InputFormatError("bracketed rows must all have the same length")
    return np.array(rows, dtype=np.complex128)


def load_matrix_file(path: Union[str, Path]) -> Union[ComplexMatrix, PermutationSpec]:
    """
    读取矩阵文件

    Args:
        path: 矩阵 JSON、置换 JSON 或方括号文本

    Returns:
        稠密矩阵或 PermutationSpec
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise InputFormatError(f"{path}: not a UTF-8 text file: {e}")
    if text.lstrip().startswith('{'):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputFormatError(f"{path}: invalid JSON: {e}")
        if 'image' in data:
            return permutation_from_dict(data)
        return matrix_from_dict(data)
    return matrix_from_text(text)


def _entry_text(z: complex) -> str:
    re_, im = float(z.real), float(z.imag)
    if abs(im) == 0:
        return f"{re_:.12g}" if re_ != 0 else "0"
    if abs(re_) == 0:
        return f"{im:.12g}i"
    return f"{re_:.12g}{im:+.12g}i"


def format_matrix(m: ComplexMatrix, entry_text=_entry_text) -> List[str]:
    """
    方括号行文本，例如 '[1 0 0 0]'

    每列按最宽元素右对齐
    """
    cells = [[entry_text(z) for z in row] for row in np.asarray(m)]
    widths = [max(len(cells[r][c]) for r in range(len(cells))) for c in range(len(cells[0]))]
    return ['[' + ' '.join(cell.rjust(widths[c]) for c, cell in enumerate(row)) + ']' for row in cells]
