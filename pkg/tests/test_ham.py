import math

import numpy as np
import pytest
import scipy.linalg

from gatesynth.ham import (cycles, eigenphases, format_pi, hamiltonian, matrix_exp, principal_angle,
                           skew_log)
from gatesynth.errors import ShapeError
from gatesynth.linalg import PermutationSpec, adjoint, direct_sum, identity, max_abs_diff, to_dense

from conftest import random_permutation

# 四循环置换 P 的生成元，K = (π/4) K_P
K_P = np.array([
    [1j, 1j, -1 - 1j, 1 - 1j],
    [1j, 1j, 1 - 1j, -1 - 1j],
    [1 - 1j, -1 - 1j, 1j, 1j],
    [-1 - 1j, 1 - 1j, 1j, 1j],
])

# H = iK = (π/4) H_P
H_P = np.array([
    [-1, -1, 1 - 1j, 1 + 1j],
    [-1, -1, 1 + 1j, 1 - 1j],
    [1 + 1j, 1 - 1j, -1, -1],
    [1 - 1j, 1 + 1j, -1, -1],
])


class TestCycles:
    def test_cnot(self, cnot_spec):
        assert str(cycles(cnot_spec)) == "(0)(1)(2 3)"

    def test_four_cycle(self, four_cycle_spec):
        assert cycles(four_cycle_spec).cycles == ((0, 2, 1, 3),)

    def test_identity(self):
        decomposition = cycles(PermutationSpec.identity(5))
        assert decomposition.lengths() == [1] * 5
        assert decomposition.size == 5

    def test_canonical_form(self, rng):
        for _ in range(50):
            p = random_permutation(rng, 16)
            decomposition = cycles(p)
            starts = [c[0] for c in decomposition.cycles]
            assert starts == sorted(starts)
            assert all(c[0] == min(c) for c in decomposition.cycles)
            assert sorted(i for c in decomposition.cycles for i in c) == list(range(16))
            for c in decomposition.cycles:
                for j, i in enumerate(c):
                    assert p.image[i] == c[(j + 1) % len(c)]


class TestEigenphases:
    def test_four_cycle(self, four_cycle_spec):
        assert eigenphases(cycles(four_cycle_spec)) == [0.0, math.pi / 2, math.pi, -math.pi / 2]

    def test_minus_one_is_plus_pi(self):
        assert principal_angle(1, 2) == math.pi
        assert principal_angle(3, 6) == pytest.approx(math.pi)
        assert principal_angle(4, 6) < 0

    def test_branch(self):
        for length in range(1, 12):
            for k in range(length):
                assert -math.pi < principal_angle(k, length) <= math.pi


class TestSkewLog:
    def test_cnot(self, cnot_spec):
        expected = direct_sum([np.zeros((2, 2)), (math.pi * 1j / 2) * np.array([[1, -1], [-1, 1]])])
        assert max_abs_diff(skew_log(cnot_spec), expected) < 1e-12

    def test_four_cycle(self, four_cycle_spec):
        assert max_abs_diff(skew_log(four_cycle_spec), (math.pi / 4) * K_P) < 1e-12

    def test_identity(self):
        assert np.array_equal(skew_log(PermutationSpec.identity(4)), np.zeros((4, 4)))

    def test_properties(self, rng):
        for d in (2, 4, 8, 16):
            for _ in range(50):
                p = random_permutation(rng, d)
                k = skew_log(p)
                assert np.array_equal(adjoint(k), -k)
                # 全 1 向量是 U 的不动向量，因此在 K 的核中
                assert np.max(np.abs(k @ np.ones(d))) < 1e-12
                assert np.linalg.norm(k, 2) <= math.pi + 1e-12

    def test_fixed_points_give_zero_rows_and_columns(self, rng):
        for d in (4, 8, 16):
            for _ in range(50):
                p = random_permutation(rng, d)
                k = skew_log(p)
                for i in (i for i, r in enumerate(p.image) if r == i):
                    assert np.array_equal(k[i, :], np.zeros(d))
                    assert np.array_equal(k[:, i], np.zeros(d))
        k = skew_log(PermutationSpec.from_list([0, 1, 3, 2]))
        assert not k[:2, :].any() and not k[:, :2].any()


class TestMatrixExp:
    def test_zero(self):
        assert max_abs_diff(matrix_exp(np.zeros((3, 3))), identity(3)) < 1e-15

    def test_cnot(self, cnot_spec):
        k = skew_log(cnot_spec)
        assert max_abs_diff(matrix_exp(k), to_dense(cnot_spec)) < 1e-10

    def test_shift_by_two_pi(self, cnot_spec):
        k = skew_log(cnot_spec)
        shifted = k + 2j * math.pi * identity(4)
        assert max_abs_diff(matrix_exp(shifted), matrix_exp(k)) < 1e-9

    def test_against_scipy(self, rng):
        for size, scale in [(2, 0.001), (3, 0.1), (4, 1.0), (5, 3.0), (6, 5.0)]:
            a = scale * (rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size)))
            expected = scipy.linalg.expm(a)
            assert max_abs_diff(matrix_exp(a), expected) <= 1e-9 * max(1.0, np.max(np.abs(expected)))

    def test_non_square(self):
        with pytest.raises(ShapeError):
            matrix_exp(np.zeros((2, 3)))

    def test_residual_random(self, rng):
        for d in (2, 4, 8, 16):
            for _ in range(100):
                p = random_permutation(rng, d)
                assert max_abs_diff(matrix_exp(skew_log(p)), to_dense(p)) <= 1e-10


class TestHamiltonian:
    def test_four_cycle(self, four_cycle_spec):
        result = hamiltonian(four_cycle_spec)
        assert max_abs_diff(result.H, (math.pi / 4) * H_P) < 1e-12
        assert np.allclose(adjoint(result.H), result.H, atol=1e-12)
        assert result.residual <= 1e-10

    def test_identity(self):
        result = hamiltonian(PermutationSpec.identity(4))
        assert np.array_equal(result.H, np.zeros((4, 4)))
        assert result.residual < 1e-15

    def test_cnot(self, cnot_spec):
        result = hamiltonian(cnot_spec)
        expected = np.zeros((4, 4))
        expected[2:, 2:] = -(math.pi / 2) * np.array([[1, -1], [-1, 1]])
        assert max_abs_diff(result.H, expected) < 1e-12
        assert max_abs_diff(scipy.linalg.expm(-1j * result.H), to_dense(cnot_spec)) < 1e-10

    def test_eigenvalues_in_half_open_range(self, rng):
        # θ(-1) = +π，偶数长度的循环使 H = iK 含本征值 -π
        for d in (2, 4, 8, 16):
            for _ in range(50):
                h = hamiltonian(random_permutation(rng, d)).H
                values = np.linalg.eigvalsh(h)
                assert values.min() >= -math.pi - 1e-9
                assert values.max() < math.pi - 1e-6
        values = np.linalg.eigvalsh(hamiltonian(PermutationSpec.from_list([1, 0])).H)
        assert values == pytest.approx([-math.pi, 0.0])

    def test_to_dict(self, cnot_spec):
        data = hamiltonian(cnot_spec).to_dict()
        assert data['omega_t_convention'] == 1.0
        assert data['K']['rows'] == 4
        assert len(data['H']['entries']) == 16


class TestFormatPi:
    @pytest.mark.parametrize("z, text", [
        (0, "0"),
        (math.pi / 4, "pi/4"),
        (-math.pi / 2, "-pi/2"),
        (math.pi, "pi"),
        (3 * math.pi / 4, "3pi/4"),
        (complex(-math.pi / 4, -math.pi / 4), "-pi/4-pi/4*i"),
        (1j * math.pi / 4, "pi/4*i"),
        (0.3, "0.3"),
    ])
    def test_examples(self, z, text):
        assert format_pi(complex(z)) == text
