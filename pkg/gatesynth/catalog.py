"""
常用示例门
可逆门以输出表达式列表给出，非可逆函数以单个表达式给出
"""

from typing import Dict, List

# 可逆门：y1; y2; ...
REVERSIBLE_GATES: Dict[str, List[str]] = {
    'cnot': ['x1', 'x1 ^ x2'],
    'four_cycle': ['x1 ^ 1', 'x1 ^ x2'],
    'swap_not': ['!x2', 'x1'],
    'three_bit': ['x1 ^ x3', 'x1 ^ x2', '(x1 & x2) ^ (x1 & x3) ^ (x2 & x3)'],
}

# three_bit 的逆
THREE_BIT_INVERSE: List[str] = [
    'x1 & x2 & !x3 | !x1 & x3 | !x2 & x3',
    '!x1 & x2 & !x3 | x1 & x3 | !x2 & x3',
    'x1 & !x2 & !x3 | !x1 & x3 | x2 & x3',
]

# 非可逆函数，用于构造 oracle
ORACLE_FUNCTIONS: Dict[str, str] = {
    'and_not': 'x1 & !x2',
    'xor': 'x1 ^ x2',
    'majority': '(x1 & x2) | (x1 & x3) | (x2 & x3)',
}
