"""
布尔表达式：解析、求值、打印
运算符 & (AND), | (OR), ^ (XOR), ! (NOT)，常量 0/1，变量 x1, x2, ...
优先级 ! > & > ^ > |，二元运算左结合
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from lark import Lark, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from .bits import BitVector, TruthTable, decode
from .errors import ArityError, ExprSyntaxError, GateSynthError

logger = logging.getLogger(__name__)

EXPR_GRAMMAR = r"""
    ?start: or_expr

    ?or_expr: xor_expr
            | or_expr "|" xor_expr   -> or_

    ?xor_expr: and_expr
             | xor_expr "^" and_expr -> xor

    ?and_expr: not_expr
             | and_expr "&" not_expr -> and_

    ?not_expr: atom
             | "!" not_expr          -> not_

    ?atom: "0"                       -> false
         | "1"                       -> true
         | VAR                       -> var
         | "(" or_expr ")"

    VAR: /x[0-9]+/

    %import common.WS
    %ignore WS
"""


class Expr:
    """表达式树节点基类"""

    # 打印优先级，数值越大结合越紧
    precedence = 5

    def evaluate(self, bits: Sequence[int]) -> int:
        raise NotImplementedError

    def evaluate_columns(self, columns: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def variables(self) -> set:
        raise NotImplementedError


@dataclass(frozen=True)
class Constant(Expr):
    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ArityError(f"constant must be 0 or 1, got {self.value!r}")

    def evaluate(self, bits):
        return self.value

    def evaluate_columns(self, columns):
        return np.full(columns.shape[1], self.value, dtype=np.int8)

    def variables(self):
        return set()


@dataclass(frozen=True)
class Variable(Expr):
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ArityError(f"variable index must be >= 1, got x{self.index}")

    def evaluate(self, bits):
        return bits[self.index - 1]

    def evaluate_columns(self, columns):
        return columns[self.index - 1]

    def variables(self):
        return {self.index}


@dataclass(frozen=True)
class Not(Expr):
    child: Expr
    precedence = 4

    def evaluate(self, bits):
        return 1 - self.child.evaluate(bits)

    def evaluate_columns(self, columns):
        return 1 - self.child.evaluate_columns(columns)

    def variables(self):
        return self.child.variables()


@dataclass(frozen=True)
class _Binary(Expr):
    left: Expr
    right: Expr
    symbol = '?'
    legacy_symbol = '?'

    def variables(self):
        return self.left.variables() | self.right.variables()


@dataclass(frozen=True)
class And(_Binary):
    precedence = 3
    symbol = '&'
    legacy_symbol = '*'

    def evaluate(self, bits):
        return self.left.evaluate(bits) & self.right.evaluate(bits)

    def evaluate_columns(self, columns):
        return self.left.evaluate_columns(columns) & self.right.evaluate_columns(columns)


@dataclass(frozen=True)
class Xor(_Binary):
    precedence = 2
    symbol = '^'
    legacy_symbol = '^'

    def evaluate(self, bits):
        return self.left.evaluate(bits) ^ self.right.evaluate(bits)

    def evaluate_columns(self, columns):
        return self.left.evaluate_columns(columns) ^ self.right.evaluate_columns(columns)


@dataclass(frozen=True)
class Or(_Binary):
    precedence = 1
    symbol = '|'
    legacy_symbol = '+'

    def evaluate(self, bits):
        return self.left.evaluate(bits) | self.right.evaluate(bits)

    def evaluate_columns(self, columns):
        return self.left.evaluate_columns(columns) | self.right.evaluate_columns(columns)


class _ToExpr(Transformer):
    """把 lark 语法树转换为 Expr"""

    def false(self, _):
        return Constant(0)

    def true(self, _):
        return Constant(1)

    def var(self, items):
        return Variable(int(str(items[0])[1:]))

    def not_(self, items):
        return Not(items[0])

    def and_(self, items):
        return And(items[0], items[1])

    def xor(self, items):
        return Xor(items[0], items[1])

    def or_(self, items):
        return Or(items[0], items[1])


_PARSER = Lark(EXPR_GRAMMAR, start='start', parser='lalr')


def arity(e: Expr, declared: Optional[int] = None) -> int:
    """表达式的元数：最大变量下标与声明值中的较大者"""
    highest = max(e.variables(), default=0)
    return max(highest, declared or 0)


def parse(text: str, declared_arity: Optional[int] = None) -> Expr:
    """
    解析表达式字符串

    Args:
        text: 例如 "x1 & !x2"
        declared_arity: 声明的变量个数（可选）

    Returns:
        表达式树
    """
    try:
        tree = _PARSER.parse(text)
    except UnexpectedEOF:
        raise ExprSyntaxError("unexpected end of expression", len(text) + 1)
    except UnexpectedInput as e:
        position = e.pos_in_stream + 1 if e.pos_in_stream is not None and e.pos_in_stream >= 0 else None
        raise ExprSyntaxError(f"syntax error in {text!r}", position)

    try:
        expr = _ToExpr().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, GateSynthError):
            raise e.orig_exc
        raise

    highest = max(expr.variables(), default=0)
    if declared_arity is not None and declared_arity < highest:
        raise ArityError(f"expression references x{highest} but arity {declared_arity} was declared")
    logger.debug("parsed %r -> %r", text, expr)
    return expr


def eval_expr(e: Expr, x: BitVector) -> int:
    """
    在输入 x 上求值

    Args:
        e: 表达式
        x: 位向量，宽度不小于表达式元数

    Returns:
        0 或 1
    """
    needed = arity(e)
    if x.width < needed:
        raise ArityError(f"expression needs {needed} inputs, got a vector of width {x.width}")
    return int(e.evaluate(x.bits))


def _input_columns(n: int) -> np.ndarray:
    # 第 j 行是全部 2^n 个输入的 x_{j+1}
    k = np.arange(1 << n)
    return np.array([(k >> (n - 1 - j)) & 1 for j in range(n)], dtype=np.int8)


def truth_table(exprs: List[Expr], n: int) -> TruthTable:
    """
    把 m 个表达式展开为真值表

    Args:
        exprs: 输出 y1..ym 的表达式
        n: 输入位宽

    Returns:
        TruthTable，rows[k][j] = eval(exprs[j], decode(k, n))
    """
    for j, e in enumerate(exprs):
        if arity(e) > n:
            raise ArityError(f"output {j + 1} uses x{arity(e)} but the table has only {n} inputs")
    if not exprs:
        raise ArityError("at least one expression is required")
    columns = _input_columns(n)
    values = np.stack([np.broadcast_to(e.evaluate_columns(columns), (1 << n,)) for e in exprs], axis=1)
    return TruthTable.from_array(values, n)


def _wrap(child: Expr, parent: Expr, right: bool, render) -> str:
    text = render(child)
    if isinstance(child, _Binary):
        if type(child) is not type(parent) or right:
            return f"({text})"
    return text


def format_expr(e: Expr) -> str:
    """
    按本模块语法打印表达式

    嵌套的不同二元运算总是加括号，例如 "(x1 & x2) | x3"
    """
    if isinstance(e, Constant):
        return str(e.value)
    if isinstance(e, Variable):
        return f"x{e.index}"
    if isinstance(e, Not):
        inner = format_expr(e.child)
        if isinstance(e.child, _Binary):
            inner = f"({inner})"
        return f"!{inner}"
    left = _wrap(e.left, e, False, format_expr)
    right = _wrap(e.right, e, True, format_expr)
    return f"{left} {e.symbol} {right}"


def format_legacy(e: Expr, zero_based: bool = True) -> str:
    """
    计算机代数输出风格：'*' 表示 AND，'+' 表示 OR，NOT[...] 表示取反

    Args:
        e: 表达式
        zero_based: True 时 x1 打印为 x0
    """
    offset = 1 if zero_based else 0

    def render(node: Expr) -> str:
        if isinstance(node, Constant):
            return str(node.value)
        if isinstance(node, Variable):
            return f"x{node.index - offset}"
        if isinstance(node, Not):
            return f"NOT[{render(node.child)}]"
        left = render(node.left)
        if node.left.precedence < node.precedence:
            left = f"({left})"
        right = render(node.right)
        if node.right.precedence <= node.precedence and isinstance(node.right, _Binary):
            right = f"({right})"
        return f"{left}{node.legacy_symbol}{right}"

    return render(e)
