"""
置换矩阵的 Hamilton 算符

对置换矩阵 U 构造反厄米矩阵 K，使 e^K = U；H = iK 为厄米矩阵。
物理上 Ĥ = ħω·H 且 ωt = 1；任何满足 ω't' = ωt 的重新标度都不改变 e^{-iĤt/ħ}。

U 的谱直接由其循环结构给出：长度为 L 的循环贡献 L 次单位根
e^{2πik/L}，特征向量支撑在该循环上，(v_k)_{c_j} = e^{-2πikj/L}/√L。
特征相位取主值 θ ∈ (-π, π]，特征值 -1 取 θ = +π。
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

import numpy as np
import scipy.linalg

from .config import HERMITIAN_TOL, PI_PRETTY_TOL
from .errors import ShapeError, VerificationError
from .linalg import ComplexMatrix, PermutationSpec, adjoint, matrix_to_dict, max_abs_diff, to_dense
from .synth import ReversibleMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleDecomposition:
    """循环分解：每个循环从其最小元素开始，循环按起点排序"""

    cycles: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.cycles)

    def lengths(self) -> List[int]:
        return [len(c) for c in self.cycles]

    def __str__(self) -> str:
        return ''.join('(' + ' '.join(str(i) for i in c) + ')' for c in self.cycles)


def cycles(m: Union[ReversibleMap, PermutationSpec]) -> CycleDecomposition:
    """
    置换的规范循环分解

    Args:
        m: ReversibleMap 或 PermutationSpec

    Returns:
        CycleDecomposition，perm(c_i) = c_{i+1 mod L}
    """
    image = m.perm if isinstance(m, ReversibleMap) else m.image
    visited = [False] * len(image)
    found = []
    for start in range(len(image)):
        if visited[start]:
            continue
        cycle = []
        current = start
        while not visited[current]:
            visited[current] = True
            cycle.append(current)
            current = image[current]
        found.append(tuple(cycle))
    return CycleDecomposition(tuple(found))


def principal_angle(k: int, length: int) -> float:
    """e^{2πik/L} 的主值相位，取值 (-π, π]"""
    # 用整数比较避免 2πk/L 在 π 附近的舍入误差
    if 2 * k > length:
        return 2 * math.pi * (k - length) / length
    return 2 * math.pi * k / length


def eigenphases(decomposition: CycleDecomposition) -> List[float]:
    """按循环顺序列出全部特征相位"""
    return [principal_angle(k, len(c)) for c in decomposition.cycles for k in range(len(c))]


def _cycle_block(length: int) -> ComplexMatrix:
    # F[j, k] = e^{-2πijk/L}/√L 的列是该循环上的特征向量
    j = np.arange(length)
    f = np.exp(-2j * np.pi * np.outer(j, j) / length) / np.sqrt(length)
    theta = np.array([principal_angle(k, length) for k in range(length)])
    return (f * (1j * theta)) @ f.conj().T


def skew_log(p: PermutationSpec) -> ComplexMatrix:
    """
    反厄米矩阵 K，e^K = U

    Args:
        p: 置换矩阵

    Returns:
        K，按 (K - K†)/2 对称化
    """
    decomposition = cycles(p)
    k = np.zeros((p.size, p.size), dtype=np.complex128)
    blocks: Dict[int, ComplexMatrix] = {}
    for cycle in decomposition.cycles:
        if len(cycle) == 1:
            continue
        if len(cycle) not in blocks:
            blocks[len(cycle)] = _cycle_block(len(cycle))
        index = np.array(cycle)
        k[np.ix_(index, index)] = blocks[len(cycle)]
    logger.debug("skew_log: cycle structure %s", decomposition.lengths())
    return (k - adjoint(k)) / 2


# Padé 系数，阶数 3, 5, 7, 9, 13
_PADE_COEFFICIENTS = {
    3: [120, 60, 12, 1],
    5: [30240, 15120, 3360, 420, 30, 1],
    7: [17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1],
    9: [17643225600, 8821612800, 2075673600, 302702400, 30270240, 2162160, 110880, 3960, 90, 1],
    13: [64764752532480000, 32382376266240000, 7771770303897600, 1187353796428800,
         129060195264000, 10559470521600, 670442572800, 33522128640, 1323241920,
         40840800, 960960, 16380, 182, 1],
}
_PADE_THETA = [(3, 0.01495585217958292), (5, 0.2539398330063230), (7, 0.9504178996162932),
               (9, 2.097847961257068), (13, 5.371920351148152)]


def _pade(a: ComplexMatrix, m: int) -> ComplexMatrix:
    c = _PADE_COEFFICIENTS[m]
    ident = np.eye(a.shape[0], dtype=np.complex128)
    if m == 13:
        a2 = a @ a
        a4 = a2 @ a2
        a6 = a2 @ a4
        u = a @ (a6 @ (c[13] * a6 + c[11] * a4 + c[9] * a2) + c[7] * a6 + c[5] * a4 + c[3] * a2 + c[1] * ident)
        v = a6 @ (c[12] * a6 + c[10] * a4 + c[8] * a2) + c[6] * a6 + c[4] * a4 + c[2] * a2 + c[0] * ident
    else:
        powers = [ident, a @ a]
        for _ in range(2, (m + 1) // 2):
            powers.append(powers[-1] @ powers[1])
        u = sum(c[j] * powers[j // 2] for j in range(m, 0, -2))
        u = a @ u
        v = sum(c[j] * powers[j // 2] for j in range(m - 1, -1, -2))
    return scipy.linalg.solve(v - u, v + u)


def matrix_exp(a: ComplexMatrix) -> ComplexMatrix:
    """
    矩阵指数：缩放与平方 + Padé 近似

    Args:
        a: 方阵

    Returns:
        e^a；对 skew_log 给出的 K (d <= 64)，max|e^K - U| <= 1e-10
    """
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"matrix exponential needs a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        return a.copy()
    norm = np.linalg.norm(a, 1)
    for m, theta in _PADE_THETA:
        if norm <= theta:
            return _pade(a, m)
    t, s = math.frexp(norm / _PADE_THETA[-1][1])
    s = s - (t == 0.5)
    logger.debug("matrix_exp: norm %.3g, scaling by 2^%d", norm, s)
    result = _pade(a / 2.0 ** s, 13)
    for _ in range(s):
        result = result @ result
    return result


@dataclass(frozen=True)
class HamiltonianResult:
    """K（反厄米）、H = iK（厄米，无量纲，ωt = 1）与残差 max|e^K - U|"""

    K: ComplexMatrix
    H: ComplexMatrix
    residual: float

    def to_dict(self) -> Dict:
        return {
            'K': matrix_to_dict(self.K),
            'H': matrix_to_dict(self.H),
            'residual': self.residual,
            'omega_t_convention': 1.0,
        }


def hamiltonian(p: PermutationSpec) -> HamiltonianResult:
    """
    置换矩阵的 Hamilton 算符

    Args:
        p: 置换矩阵

    Returns:
        HamiltonianResult；Ĥ = ħω·H 且 ωt = 1，H 的本征值落在 [-π, π)
    """
    k = skew_log(p)
    h = 1j * k
    # 对称化后 K 精确反厄米
    if max_abs_diff(adjoint(k), -k) > HERMITIAN_TOL or max_abs_diff(adjoint(h), h) > HERMITIAN_TOL:
        raise VerificationError("generator lost skew-hermiticity")
    residual = max_abs_diff(matrix_exp(k), to_dense(p))
    return HamiltonianResult(K=k, H=h, residual=residual)


def _pi_text(x: float, tol: float) -> str:
    quarters = round(x / (math.pi / 4))
    if abs(x - quarters * math.pi / 4) > tol:
        return f"{x:.12g}"
    if quarters == 0:
        return "0"
    frac = Fraction(quarters, 4)
    num = {1: '', -1: '-'}.get(frac.numerator, str(frac.numerator))
    return f"{num}pi" if frac.denominator == 1 else f"{num}pi/{frac.denominator}"


def format_pi(z: complex, tol: float = PI_PRETTY_TOL) -> str:
    """
    打印复数，π/4 的整数倍写成 'pi/4'、'-pi/2' 等

    例如 (π/4)(-1-i) 打印为 '-pi/4-pi/4*i'
    """
    re_text = _pi_text(float(z.real), tol)
    im_text = _pi_text(float(z.imag), tol)
    if im_text == "0":
        return re_text
    if re_text == "0":
        return f"{im_text}*i"
    sign = '' if im_text.startswith('-') else '+'
    return f"{re_text}{sign}{im_text}*i"
