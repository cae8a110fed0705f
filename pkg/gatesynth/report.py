"""
Excel 报告
把真值表、置换、K、H 与 Pauli 项写入多工作表的 Excel 文件
"""

import logging
import os
import tempfile
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from openpyxl.styles import Alignment, Font, PatternFill

from .bits import TruthTable, decode
from .ham import HamiltonianResult, format_pi
from .linalg import ComplexMatrix, PermutationSpec, log2_size
from .pauli import PauliTerm, format_term

logger = logging.getLogger(__name__)

HEADER_FILL = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
HEADER_FONT = Font(color="FFFFFF", bold=True, size=11)
MAX_COLUMN_WIDTH = 60


def truth_table_frame(tt: TruthTable) -> pd.DataFrame:
    return tt.to_frame()


def permutation_frame(p: PermutationSpec) -> pd.DataFrame:
    """每列一行：输入下标、输出下标及其位串"""
    n = log2_size(p.size) if p.size > 1 else 1
    return pd.DataFrame({
        'column': list(range(p.size)),
        'row': list(p.image),
        'input': [str(decode(c, n)) for c in range(p.size)],
        'output': [str(decode(r, n)) for r in p.image],
    })


def matrix_frame(m: ComplexMatrix) -> pd.DataFrame:
    """矩阵元素的文本形式，π/4 的整数倍写成 pi/4 等"""
    m = np.asarray(m)
    return pd.DataFrame(
        [[format_pi(z) for z in row] for row in m],
        columns=[str(c) for c in range(m.shape[1])],
    )


def terms_frame(terms: Sequence[PauliTerm]) -> pd.DataFrame:
    return pd.DataFrame({
        'word': [''.join(str(w) for w in t.word) for t in terms],
        're': [t.coeff.real for t in terms],
        'im': [t.coeff.imag for t in terms],
        'term': [format_term(t) for t in terms],
    })


def hamiltonian_frames(result: HamiltonianResult) -> List[Tuple[str, pd.DataFrame]]:
    return [
        ('K', matrix_frame(result.K)),
        ('H', matrix_frame(result.H)),
        ('residual', pd.DataFrame({'max_abs_diff': [result.residual], 'omega_t': [1.0]})),
    ]


class WorkbookReport:
    """多工作表的 Excel 报告"""

    def __init__(self):
        self.sheets: List[Tuple[str, pd.DataFrame]] = []

    def add_sheet(self, name: str, df: pd.DataFrame):
        # Excel 工作表名最长 31 个字符
        name = name[:31]
        existing = {n for n, _ in self.sheets}
        if name in existing:
            raise ValueError(f"duplicate sheet name {name!r}")
        self.sheets.append((name, df))

    def format_excel(self, writer):
        """标题行着色、自动列宽、冻结首行"""
        workbook = writer.book
        for sheet_name in workbook.sheetnames:
            sheet = workbook[sheet_name]

            for cell in sheet[1]:
                cell.fill = HEADER_FILL
                cell.font = HEADER_FONT
                cell.alignment = Alignment(horizontal="center", vertical="center", wrap_text=True)

            for column in sheet.columns:
                column_letter = column[0].column_letter
                max_length = max((len(str(cell.value)) for cell in column if cell.value is not None), default=0)
                sheet.column_dimensions[column_letter].width = min(max_length + 2, MAX_COLUMN_WIDTH)

            sheet.freeze_panes = sheet['A2']

    def save(self, path: Union[str, Path]) -> Path:
        """
        写入 Excel 文件（先写临时文件，成功后改名）

        Args:
            path: 目标 .xlsx 路径

        Returns:
            实际写入的路径
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        if not self.sheets:
            raise ValueError("report has no sheets")

        fd, tmp_name = tempfile.mkstemp(suffix='.xlsx', dir=path.parent)
        os.close(fd)
        try:
            with pd.ExcelWriter(tmp_name, engine='openpyxl') as writer:
                for name, df in self.sheets:
                    df.to_excel(writer, sheet_name=name, index=False)
                self.format_excel(writer)
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.remove(tmp_name)
            raise
        logger.info("✓ Saved workbook to: %s", path)
        return path
