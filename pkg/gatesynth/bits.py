"""
位向量、b 编码与真值表
x1 始终是最高位：b(x1,...,xn) = sum_j xj * 2^(n-j)
"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from .errors import ArityError, InputFormatError

_COLUMN_PATTERN = re.compile(r'^[xy][0-9]+$')


@dataclass(frozen=True)
class BitVector:
    """有序位向量 (x1, ..., xn)，x1 写在最左边"""

    bits: Tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise ArityError("bit vector width must be at least 1")
        if any(b not in (0, 1) for b in bits):
            raise ArityError(f"bit vector entries must be 0 or 1, got {self.bits!r}")
        object.__setattr__(self, 'bits', bits)

    @classmethod
    def from_string(cls, text: str) -> 'BitVector':
        """从 '101' 这样的字符串构造"""
        text = text.strip()
        if not text or any(ch not in '01' for ch in text):
            raise InputFormatError(f"invalid bit string: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def width(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __str__(self) -> str:
        return ''.join(str(b) for b in self.bits)


def encode(x: BitVector) -> int:
    """
    b 编码：x1 为最高位

    Args:
        x: 位向量

    Returns:
        区间 [0, 2^n) 内的整数
    """
    index = 0
    for bit in x.bits:
        index = (index << 1) | bit
    return index


def decode(k: int, n: int) -> BitVector:
    """
    b 编码的逆

    Args:
        k: 下标，0 <= k < 2^n
        n: 位宽

    Returns:
        宽度为 n 的位向量
    """
    if n < 1:
        raise ArityError(f"width must be at least 1, got {n}")
    if not 0 <= k < (1 << n):
        raise ArityError(f"index {k} out of range for width {n}")
    return BitVector(tuple((k >> (n - 1 - j)) & 1 for j in range(n)))


@dataclass(frozen=True)
class TruthTable:
    """全函数 {0,1}^n -> {0,1}^m，第 k 行是 f(decode(k, n))"""

    inputs: int
    outputs: int
    rows: Tuple[BitVector, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        if self.inputs < 1 or self.outputs < 1:
            raise ArityError("truth tables need at least one input and one output")
        if len(rows) != (1 << self.inputs):
            raise ArityError(
                f"truth table on {self.inputs} inputs needs {1 << self.inputs} rows, got {len(rows)}"
            )
        for k, row in enumerate(rows):
            if row.width != self.outputs:
                raise ArityError(f"row {k} has width {row.width}, expected {self.outputs}")
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def from_array(cls, values: Union[np.ndarray, Sequence[Sequence[int]]], inputs: int) -> 'TruthTable':
        """从 (2^n, m) 的 0/1 数组构造"""
        array = np.asarray(values, dtype=int)
        if array.ndim != 2:
            raise ArityError("truth table array must be two-dimensional")
        rows = tuple(BitVector(tuple(int(v) for v in row)) for row in array)
        return cls(inputs, array.shape[1], rows)

    def as_array(self) -> np.ndarray:
        """(2^n, m) 的整数数组"""
        return np.array([row.bits for row in self.rows], dtype=np.int8)

    def column(self, j: int) -> np.ndarray:
        if not 0 <= j < self.outputs:
            raise ArityError(f"output index {j} out of range for {self.outputs} outputs")
        return self.as_array()[:, j]

    def to_lines(self) -> List[str]:
        """'100 -> 101' 格式的文本行"""
        return [f"{decode(k, self.inputs)} -> {row}" for k, row in enumerate(self.rows)]

    def to_frame(self) -> pd.DataFrame:
        """转换为 DataFrame，列为 x1..xn, y1..ym"""
        inputs = np.array([decode(k, self.inputs).bits for k in range(len(self.rows))], dtype=int)
        columns = {f"x{j + 1}": inputs[:, j] for j in range(self.inputs)}
        outputs = self.as_array().astype(int)
        columns.update({f"y{j + 1}": outputs[:, j] for j in range(self.outputs)})
        return pd.DataFrame(columns)

    @classmethod
    def from_frame(cls, df: pd.DataFrame) -> 'TruthTable':
        """
        从 DataFrame 读取真值表

        Args:
            df: 含 x1..xn 与 y1..ym 列的表，行顺序任意

        Returns:
            TruthTable
        """
        bad = [str(c) for c in df.columns if not _COLUMN_PATTERN.match(str(c))]
        if bad:
            raise InputFormatError(f"truth table columns must be named x1..xn and y1..ym, got {', '.join(bad)}")
        x_cols = sorted((c for c in df.columns if str(c).startswith('x')), key=lambda c: int(str(c)[1:]))
        y_cols = sorted((c for c in df.columns if str(c).startswith('y')), key=lambda c: int(str(c)[1:]))
        if not x_cols or not y_cols:
            raise InputFormatError("truth table needs x1..xn and y1..ym columns")
        pairs = [
            (BitVector(tuple(int(v) for v in row[x_cols])), BitVector(tuple(int(v) for v in row[y_cols])))
            for _, row in df.iterrows()
        ]
        return _table_from_pairs(pairs)

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> 'TruthTable':
        """解析 '<输入> -> <输出>' 文本行，空行与 # 注释忽略"""
        pairs = []
        for number, line in enumerate(lines, 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            left, sep, right = line.partition('->')
            if not sep:
                raise InputFormatError(f"line {number}: expected '<bits> -> <bits>', got {line!r}")
            pairs.append((BitVector.from_string(left), BitVector.from_string(right)))
        return _table_from_pairs(pairs)


def _table_from_pairs(pairs: List[Tuple[BitVector, BitVector]]) -> TruthTable:
    if not pairs:
        raise InputFormatError("truth table is empty")
    n = pairs[0][0].width
    m = pairs[0][1].width
    rows = [None] * (1 << n)
    for x, y in pairs:
        if x.width != n or y.width != m:
            raise InputFormatError(f"inconsistent widths in row {x} -> {y}")
        k = encode(x)
        if rows[k] is not None:
            raise InputFormatError(f"input {x} listed twice")
        rows[k] = y
    missing = [str(decode(k, n)) for k, row in enumerate(rows) if row is None]
    if missing:
        raise InputFormatError(f"truth table is not total, missing inputs: {', '.join(missing)}")
    return TruthTable(n, m, tuple(rows))


def evaluate_row(tt: TruthTable, x: BitVector) -> BitVector:
    """查表：返回 rows[encode(x)]"""
    if x.width != tt.inputs:
        raise ArityError(f"input width {x.width} does not match table width {tt.inputs}")
    return tt.rows[encode(x)]


def read_truth_table(path: Union[str, Path]) -> TruthTable:
    """
    读取真值表文件

    Args:
        path: .csv 文件（pandas 读取）或 '<输入> -> <输出>' 文本文件

    Returns:
        TruthTable
    """
    path = Path(path)
    try:
        if path.suffix.lower() == '.csv':
            try:
                df = pd.read_csv(path, dtype=str)
            except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
                raise InputFormatError(f"{path}: cannot parse CSV: {e}")
            try:
                df = df.astype(int)
            except ValueError as e:
                raise InputFormatError(f"{path}: truth table entries must be 0 or 1: {e}")
            return TruthTable.from_frame(df)
        with open(path, 'r', encoding='utf-8') as f:
            return TruthTable.from_lines(f)
    except UnicodeDecodeError as e:
        raise InputFormatError(f"{path}: not a UTF-8 text file: {e}")
