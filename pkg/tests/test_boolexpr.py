import numpy as np
import pytest

from gatesynth.bits import BitVector, decode
from gatesynth.boolexpr import (And, Constant, Not, Or, Variable, Xor, arity, eval_expr, format_expr,
                                format_legacy, parse, truth_table)
from gatesynth.errors import ArityError, ExprSyntaxError


def random_expr(rng, depth: int, n: int):
    if depth == 0 or rng.random() < 0.2:
        if rng.random() < 0.15:
            return Constant(int(rng.integers(0, 2)))
        return Variable(int(rng.integers(1, n + 1)))
    kind = int(rng.integers(0, 4))
    if kind == 0:
        return Not(random_expr(rng, depth - 1, n))
    op = (And, Xor, Or)[kind - 1]
    return op(random_expr(rng, depth - 1, n), random_expr(rng, depth - 1, n))


class TestParse:
    def test_and_not(self):
        assert parse("x1 & !x2") == And(Variable(1), Not(Variable(2)))

    def test_xor(self):
        assert parse("x1 ^ x2") == Xor(Variable(1), Variable(2))

    def test_majority(self):
        x1, x2, x3 = Variable(1), Variable(2), Variable(3)
        expected = Or(Or(And(x1, x2), And(x1, x3)), And(x2, x3))
        assert parse("(x1 & x2) | (x1 & x3) | (x2 & x3)") == expected

    def test_precedence(self):
        # ! > & > ^ > |
        x1, x2, x3 = Variable(1), Variable(2), Variable(3)
        assert parse("x1 | x2 ^ x3") == Or(x1, Xor(x2, x3))
        assert parse("x1 ^ x2 & x3") == Xor(x1, And(x2, x3))
        assert parse("!x1 & x2") == And(Not(x1), x2)

    def test_left_associative(self):
        x1, x2, x3 = Variable(1), Variable(2), Variable(3)
        assert parse("x1 ^ x2 ^ x3") == Xor(Xor(x1, x2), x3)

    def test_whitespace_and_constants(self):
        assert parse("  x12^1 ") == Xor(Variable(12), Constant(1))
        assert parse("0") == Constant(0)

    @pytest.mark.parametrize("text", ["x1 &", "x1 && x2", "(x1", "y1", "x1 x2", ""])
    def test_syntax_errors(self, text):
        with pytest.raises(ExprSyntaxError):
            parse(text)

    def test_syntax_error_position(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse("x1 & & x2")
        assert info.value.position == 6

    def test_variable_zero_rejected(self):
        with pytest.raises(ArityError):
            parse("x0 & x1")

    def test_declared_arity(self):
        e = parse("x2", declared_arity=3)
        assert arity(e, 3) == 3
        with pytest.raises(ArityError):
            parse("x1 & x4", declared_arity=3)


class TestEval:
    def test_examples(self):
        assert eval_expr(parse("x1 & !x2"), BitVector((1, 0))) == 1
        assert eval_expr(parse("x1 ^ x2"), BitVector((1, 1))) == 0
        assert eval_expr(Constant(0), BitVector((1, 1, 1))) == 0

    def test_xor_table(self):
        e = parse("x1 ^ x2")
        assert [eval_expr(e, decode(k, 2)) for k in range(4)] == [0, 1, 1, 0]

    def test_width_too_small(self):
        with pytest.raises(ArityError):
            eval_expr(parse("x3"), BitVector((1, 0)))

    def test_operators_act_pointwise(self, rng):
        for _ in range(100):
            a, b = random_expr(rng, 4, 4), random_expr(rng, 4, 4)
            for k in range(16):
                x = decode(k, 4)
                va, vb = eval_expr(a, x), eval_expr(b, x)
                assert eval_expr(And(a, b), x) == va & vb
                assert eval_expr(Or(a, b), x) == va | vb
                assert eval_expr(Xor(a, b), x) == va ^ vb
                assert eval_expr(Not(a), x) == 1 - va
            ca, cb = (truth_table([e], 4).column(0) for e in (a, b))
            assert np.array_equal(truth_table([Xor(a, b)], 4).column(0), ca ^ cb)


class TestTruthTable:
    def test_cnot(self):
        tt = truth_table([parse("x1"), parse("x1 ^ x2")], 2)
        assert tt.to_lines() == ["00 -> 00", "01 -> 01", "10 -> 11", "11 -> 10"]

    def test_swap_not(self):
        tt = truth_table([parse("!x2"), parse("x1")], 2)
        assert [str(r) for r in tt.rows] == ["10", "00", "11", "01"]

    def test_constant(self):
        tt = truth_table([Constant(0)], 1)
        assert [str(r) for r in tt.rows] == ["0", "0"]

    def test_arity_violation(self):
        with pytest.raises(ArityError):
            truth_table([parse("x3")], 2)

    def test_matches_row_by_row_evaluation(self, rng):
        for _ in range(50):
            e = random_expr(rng, 5, 4)
            tt = truth_table([e], 4)
            assert [r[0] for r in tt.rows] == [eval_expr(e, decode(k, 4)) for k in range(16)]


class TestFormat:
    def test_examples(self):
        assert format_expr(And(Variable(1), Not(Variable(2)))) == "x1 & !x2"
        assert format_expr(Or(And(Variable(1), Variable(2)), Variable(3))) == "(x1 & x2) | x3"
        assert format_expr(Xor(Variable(1), Constant(1))) == "x1 ^ 1"

    def test_negated_group(self):
        assert format_expr(Not(Or(Variable(1), Variable(2)))) == "!(x1 | x2)"

    def test_parse_format_identity(self, rng):
        for _ in range(300):
            e = random_expr(rng, 8, 5)
            assert parse(format_expr(e)) == e

    def test_legacy_style(self):
        e = parse("x1 & !x2 & !x3 | !x1 & x3 | x2 & x3")
        assert format_legacy(e) == "x0*NOT[x1]*NOT[x2]+NOT[x0]*x2+x1*x2"
        assert format_legacy(e, zero_based=False) == "x1*NOT[x2]*NOT[x3]+NOT[x1]*x3+x2*x3"
        assert format_legacy(parse("(x1 | x2) & x3"), zero_based=False) == "(x1+x2)*x3"
