"""
Pauli 基展开
2^n x 2^n 矩阵在 σ_{w1} ⊗ ... ⊗ σ_{wn} (w ∈ {0,1,2,3}) 这组正交基下的系数，
以及自旋矩阵 S_i = σ_i / 2 下的改写
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import PAULI_DROP_TOL
from .errors import ArityError, ShapeError
from .linalg import ComplexMatrix, kron_all, log2_size

logger = logging.getLogger(__name__)

SIGMA = (
    np.array([[1, 0], [0, 1]], dtype=np.complex128),
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)

BASES = ('sigma', 'spin')


@dataclass(frozen=True)
class PauliTerm:
    """系数 coeff 乘以 word 对应的 Kronecker 积；basis 为 'sigma' 或 'spin'"""

    word: Tuple[int, ...]
    coeff: complex
    basis: str = 'sigma'

    def __post_init__(self):
        word = tuple(int(w) for w in self.word)
        if not word or any(w not in (0, 1, 2, 3) for w in word):
            raise ArityError(f"invalid Pauli word {self.word!r}")
        if self.basis not in BASES:
            raise ArityError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, 'word', word)
        object.__setattr__(self, 'coeff', complex(self.coeff))

    def to_dict(self) -> Dict:
        return {'word': list(self.word), 're': self.coeff.real, 'im': self.coeff.imag}


def sigma(i: int) -> ComplexMatrix:
    """σ_0 = I_2, σ_1, σ_2, σ_3"""
    if i not in (0, 1, 2, 3):
        raise ArityError(f"Pauli index must be 0..3, got {i}")
    return SIGMA[i].copy()


def pauli_word_matrix(word: Sequence[int]) -> ComplexMatrix:
    """σ_{w1} ⊗ ... ⊗ σ_{wn}，从左到右"""
    if len(word) == 0:
        raise ArityError("Pauli word must not be empty")
    return kron_all([sigma(w) for w in word])


def trace_coefficient(m: ComplexMatrix, word: Sequence[int]) -> complex:
    """单个系数 Tr(m · P_word) / 2^n"""
    p = pauli_word_matrix(word)
    # Tr(AB) = sum_ij A_ij B_ji
    return complex(np.sum(m * p.T) / m.shape[0])


def _coefficient_tensor(m: ComplexMatrix, n: int) -> np.ndarray:
    # 交错排列 (i1, j1, i2, j2, ...)，每对 (i, j) 通过 T[w, 2i+j] = σ_w[j, i] 映到 w
    t = m.reshape((2,) * (2 * n))
    t = t.transpose([axis for q in range(n) for axis in (q, n + q)]).reshape((4,) * n)
    transform = np.stack([s.T.reshape(4) for s in SIGMA])
    for q in range(n):
        t = np.moveaxis(np.tensordot(transform, t, axes=([1], [q])), 0, q)
    return t.reshape(4 ** n) / (2 ** n)


def decompose(m: ComplexMatrix, tol: float = PAULI_DROP_TOL) -> List[PauliTerm]:
    """
    Pauli 展开

    Args:
        m: 2^n x 2^n 矩阵
        tol: 模不超过 tol 的系数被丢弃

    Returns:
        按 word 字典序排列的 PauliTerm 列表
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"Pauli decomposition needs a square matrix, got shape {m.shape}")
    n = log2_size(m.shape[0])
    if n == 0:
        raise ShapeError("Pauli decomposition needs at least one qubit")
    coefficients = _coefficient_tensor(m, n)
    terms = [
        PauliTerm(word, coefficients[index])
        for index, word in enumerate(product(range(4), repeat=n))
        if abs(coefficients[index]) > tol
    ]
    logger.debug("decompose: %d of %d words kept", len(terms), 4 ** n)
    return terms


def reconstruct(terms: Sequence[PauliTerm], n: int) -> ComplexMatrix:
    """Σ coeff · P_word；空列表给出零矩阵"""
    result = np.zeros((2 ** n, 2 ** n), dtype=np.complex128)
    for term in terms:
        if len(term.word) != n:
            raise ArityError(f"word {term.word} has length {len(term.word)}, expected {n}")
        factor = 2 ** sum(1 for w in term.word if w) if term.basis == 'spin' else 1
        result += (term.coeff / factor) * pauli_word_matrix(term.word)
    return result


def spin_form(terms: Sequence[PauliTerm]) -> List[PauliTerm]:
    """
    改写到自旋矩阵：σ_i = 2 S_i，每个非零下标使系数乘 2

    Args:
        terms: σ 基下的项

    Returns:
        S 基下的项（word 不变）
    """
    result = []
    for term in terms:
        if term.basis == 'spin':
            result.append(term)
            continue
        factor = 2 ** sum(1 for w in term.word if w)
        result.append(PauliTerm(term.word, term.coeff * factor, 'spin'))
    return result


def scale_terms(terms: Sequence[PauliTerm], unit: float) -> List[PauliTerm]:
    """系数除以 unit，例如 π/4"""
    return [PauliTerm(t.word, t.coeff / unit, t.basis) for t in terms]


def _coeff_text(z: complex) -> str:
    if abs(z.imag) <= PAULI_DROP_TOL:
        return f"{'-' if z.real < 0 else '+'}{abs(z.real):.12g}"
    if abs(z.real) <= PAULI_DROP_TOL:
        return f"{'-' if z.imag < 0 else '+'}{abs(z.imag):.12g}i"
    return f"+({z.real:.12g}{z.imag:+.12g}i)"


def format_term(term: PauliTerm) -> str:
    """'<符号><系数> * s1 (x) s0'；自旋基使用 'S'"""
    letter = 's' if term.basis == 'sigma' else 'S'
    factors = ' (x) '.join(f"{letter}{w}" for w in term.word)
    return f"{_coeff_text(term.coeff)} * {factors}"


def terms_to_dict(terms: Sequence[PauliTerm], n: int, basis: Optional[str] = None) -> Dict:
    if basis is None:
        basis = terms[0].basis if terms else 'sigma'
    return {'n': n, 'basis': basis, 'terms': [t.to_dict() for t in terms]}
