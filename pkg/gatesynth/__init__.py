"""
gatesynth
布尔函数与置换矩阵量子门的互相转换、Hamilton 算符与 Pauli 展开
"""

from .bits import BitVector, TruthTable, decode, encode, read_truth_table
from .boolexpr import Expr, eval_expr, format_expr, format_legacy, parse, truth_table
from .errors import GateSynthError
from .ham import cycles, hamiltonian, matrix_exp, skew_log
from .linalg import PermutationSpec, from_dense, to_dense
from .minimize import expressions_from_table, minterms, simplify_resolution
from .pauli import decompose, reconstruct, spin_form
from .synth import (ReversibleMap, hadamard_conjugate, map_from_matrix, map_from_truth_table,
                    matrix_from_map, oracle_matrix, bit_reversed_order)

__version__ = '1.0.0'

__all__ = [
    'BitVector', 'TruthTable', 'decode', 'encode', 'read_truth_table',
    'Expr', 'eval_expr', 'format_expr', 'format_legacy', 'parse', 'truth_table',
    'GateSynthError',
    'cycles', 'hamiltonian', 'matrix_exp', 'skew_log',
    'PermutationSpec', 'from_dense', 'to_dense',
    'expressions_from_table', 'minterms', 'simplify_resolution',
    'decompose', 'reconstruct', 'spin_form',
    'ReversibleMap', 'hadamard_conjugate', 'map_from_matrix', 'map_from_truth_table',
    'matrix_from_map', 'oracle_matrix', 'bit_reversed_order',
]
