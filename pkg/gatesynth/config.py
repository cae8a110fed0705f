"""
项目配置
路径常量与数值容差的默认值
"""

from pathlib import Path

# 项目路径配置
PROJECT_ROOT = Path(__file__).parent.parent
DATA_DIR = PROJECT_ROOT / "data"
EXAMPLES_DIR = DATA_DIR / "examples"
REPORTS_DIR = DATA_DIR / "reports"

# 数值容差
PERMUTATION_TOL = 1e-9      # from_dense 判定 0/1 元素
HERMITIAN_TOL = 1e-12       # K† = -K, H† = H 检查
PAULI_DROP_TOL = 1e-12      # 丢弃的 Pauli 系数
RESIDUAL_TOL = 1e-10        # max|e^K - U|
PI_PRETTY_TOL = 1e-12       # 识别 π/4 的整数倍

# 规模上限
MAX_BITS = 12
MAX_PAULI_BITS = 8

# JSON 输出的有效数字
JSON_DIGITS = 17
