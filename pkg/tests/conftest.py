"""共享 fixture"""

from pathlib import Path

import numpy as np
import pytest

from gatesynth.bits import TruthTable
from gatesynth.boolexpr import parse, truth_table
from gatesynth.linalg import PermutationSpec

EXAMPLES_DIR = Path(__file__).parent.parent / "data" / "examples"

X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
I2 = np.eye(2, dtype=np.complex128)


def table_of(texts, n=None):
    """表达式列表的真值表，n 缺省为最大变量下标"""
    exprs = [parse(t) for t in texts]
    if n is None:
        n = max(max(e.variables(), default=0) for e in exprs)
    return truth_table(exprs, n)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def examples_dir() -> Path:
    return EXAMPLES_DIR


@pytest.fixture
def cnot_spec() -> PermutationSpec:
    return PermutationSpec.from_list([0, 1, 3, 2])


@pytest.fixture
def four_cycle_spec() -> PermutationSpec:
    return PermutationSpec.from_list([2, 3, 1, 0])


@pytest.fixture
def majority_table():
    return table_of(['(x1 & x2) | (x1 & x3) | (x2 & x3)'])


@pytest.fixture
def three_bit_table():
    return table_of(['x1 ^ x3', 'x1 ^ x2', '(x1 & x2) ^ (x1 & x3) ^ (x2 & x3)'])


def random_permutation(rng, size: int) -> PermutationSpec:
    return PermutationSpec.from_list([int(v) for v in rng.permutation(size)])


def random_table(rng, n: int, m: int):
    return TruthTable.from_array(rng.integers(0, 2, size=(1 << n, m)), n)
