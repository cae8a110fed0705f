import pytest

from gatesynth.boolexpr import Constant, format_expr, parse
from gatesynth.errors import ArityError
from gatesynth.minimize import (Cube, CubeList, equivalent, expr_from_cubes, expressions_from_table,
                                format_column, minterms, simplify_resolution)
from gatesynth.synth import map_from_matrix, oracle_matrix, truth_table_from_map
from gatesynth.linalg import PermutationSpec

from conftest import random_table, table_of


def cubes(n, *pairs):
    return CubeList(n, tuple(Cube.from_strings(bits, mask) for bits, mask in pairs))


def minterm_list(n, *bits):
    return CubeList(n, tuple(Cube.from_strings(b, '0' * n) for b in bits))


class TestCube:
    def test_masked_bits_normalized(self):
        assert Cube.from_strings('111', '100') == Cube.from_strings('011', '100')
        assert str(Cube.from_strings('101', '010')) == '1-1'

    def test_covers(self):
        cube = Cube.from_strings('010', '100')
        assert sorted(k for k in range(8) if cube.covers(k)) == [2, 6]
        assert cube.literal_count() == 2

    def test_width_mismatch(self):
        with pytest.raises(ArityError):
            CubeList(2, (Cube(3, 0),))


class TestMinterms:
    def test_xor(self):
        assert [str(c) for c in minterms(table_of(['x1 ^ x2']), 0)] == ['01', '10']

    def test_majority(self, majority_table):
        assert [str(c) for c in minterms(majority_table, 0)] == ['011', '101', '110', '111']

    def test_constant_zero(self):
        assert len(minterms(table_of(['x1 & !x1']), 0)) == 0

    def test_output_out_of_range(self, majority_table):
        with pytest.raises(ArityError):
            minterms(majority_table, 1)


class TestResolution:
    def test_majority(self, majority_table):
        result = simplify_resolution(minterms(majority_table, 0))
        assert set(result.cubes) == {
            Cube.from_strings('011', '100'),
            Cube.from_strings('101', '010'),
            Cube.from_strings('110', '001'),
        }

    def test_single_cube(self):
        single = minterm_list(3, '101')
        assert simplify_resolution(single) == single

    def test_oracle_ancilla_function(self):
        result = simplify_resolution(minterm_list(3, '001', '011', '100', '111'))
        assert [str(c) for c in result] == ['100', '0-1', '-11']
        expected = parse("x1 & !x2 & !x3 | !x1 & x3 | x2 & x3")
        assert expr_from_cubes(result) == expected

    def test_full_square_collapses(self):
        result = simplify_resolution(minterm_list(2, '00', '01', '10', '11'))
        assert [str(c) for c in result] == ['--']
        assert expr_from_cubes(result) == Constant(1)

    def test_no_duplicates(self, rng):
        for _ in range(50):
            tt = random_table(rng, 4, 1)
            result = simplify_resolution(minterms(tt, 0))
            assert len(set(result.cubes)) == len(result.cubes)


class TestExprFromCubes:
    def test_empty(self):
        assert expr_from_cubes(CubeList(2)) == Constant(0)

    def test_single_minterm(self):
        assert format_expr(expr_from_cubes(minterm_list(2, '10'))) == "x1 & !x2"


class TestEquivalent:
    def test_examples(self, majority_table):
        simplified = expr_from_cubes(simplify_resolution(minterms(majority_table, 0)))
        assert equivalent(simplified, majority_table, 0)
        assert not equivalent(parse("x1"), table_of(['!x1']), 0)
        assert equivalent(parse("x1 ^ x2"), table_of(['x1 ^ x2']), 0)

    def test_too_many_variables(self):
        assert not equivalent(parse("x3"), table_of(['x1']), 0)


class TestProperties:
    def test_soundness(self, rng):
        for _ in range(250):
            n = int(rng.integers(1, 6))
            tt = random_table(rng, n, 2)
            for j, e in enumerate(expressions_from_table(tt)):
                assert equivalent(e, tt, j)

    def test_cover_and_idempotence(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 6))
            tt = random_table(rng, n, 1)
            source = minterms(tt, 0)
            result = simplify_resolution(source)
            ones = {c.bits for c in source}
            assert result.covered_set() == frozenset(ones)
            assert simplify_resolution(result).covered_set() == result.covered_set()

    def test_masks_only_grow(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 6))
            count = int(rng.integers(1, 8))
            source = CubeList(n, tuple(
                Cube(n, int(rng.integers(0, 1 << n)), int(rng.integers(0, 1 << n))) for _ in range(count)
            ))
            result = simplify_resolution(source)
            assert result.covered_set() == source.covered_set()
            for cube in result:
                # 每个结果项都由某个输入项扩大掩码得到
                origins = [s for s in source if (s.mask & ~cube.mask) == 0 and (s.bits & ~cube.mask) == cube.bits]
                assert origins
                assert all(cube.literal_count() <= s.literal_count() for s in origins)


class TestExtraction:
    def test_swap_not_matrix(self):
        tt = truth_table_from_map(map_from_matrix(PermutationSpec.from_list([2, 0, 3, 1])))
        first, second = expressions_from_table(tt)
        assert equivalent(first, table_of(['!x2'], n=2), 0)
        assert equivalent(second, table_of(['x1'], n=2), 0)

    def test_golden_column(self):
        tt = truth_table_from_map(map_from_matrix(oracle_matrix(table_of(['x1 & !x2']))))
        lines = format_column(expressions_from_table(tt), zero_based=True)
        assert lines == [
            "[                 x0                ]",
            "[                 x1                ]",
            "[x0*NOT[x1]*NOT[x2]+NOT[x0]*x2+x1*x2]",
        ]
