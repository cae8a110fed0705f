#!/usr/bin/env python3
"""
Excel报告生成脚本
为示例门生成包含真值表、置换矩阵、K、H 与 Pauli 项的多工作表报告
"""

import sys
from datetime import datetime
from pathlib import Path

import pandas as pd

# 项目路径配置
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from gatesynth.boolexpr import format_expr, parse, truth_table  # noqa: E402
from gatesynth.catalog import ORACLE_FUNCTIONS, REVERSIBLE_GATES  # noqa: E402
from gatesynth.config import MAX_PAULI_BITS, REPORTS_DIR  # noqa: E402
from gatesynth.errors import GateSynthError  # noqa: E402
from gatesynth.ham import cycles, hamiltonian  # noqa: E402
from gatesynth.minimize import expressions_from_table  # noqa: E402
from gatesynth.pauli import decompose  # noqa: E402
from gatesynth.report import (WorkbookReport, hamiltonian_frames, permutation_frame,  # noqa: E402
                              terms_frame, truth_table_frame)
from gatesynth.synth import map_from_truth_table, matrix_from_map, oracle_matrix  # noqa: E402


class GateReportGenerator:
    """示例门报告生成器"""

    def __init__(self, output_dir: Path = REPORTS_DIR):
        self.output_dir = Path(output_dir)
        self.output_file = self.output_dir / "gate_catalog.xlsx"
        self.summary_rows = []

    def add_gate(self, report: WorkbookReport, name: str, tt, p):
        """一个门的全部工作表"""
        result = hamiltonian(p)
        report.add_sheet(f"{name}_table", truth_table_frame(tt))
        report.add_sheet(f"{name}_perm", permutation_frame(p))
        for suffix, df in hamiltonian_frames(result):
            if suffix != 'residual':
                report.add_sheet(f"{name}_{suffix}", df)
        n = p.size.bit_length() - 1
        term_count = None
        if n <= MAX_PAULI_BITS:
            terms = decompose(result.H)
            report.add_sheet(f"{name}_pauli", terms_frame(terms))
            term_count = len(terms)

        self.summary_rows.append({
            'gate': name,
            'bits': n,
            'cycles': str(cycles(p)),
            'residual': result.residual,
            'pauli_terms': term_count,
            'recovered': '; '.join(format_expr(e) for e in expressions_from_table(tt)),
        })
        print(f"  ✓ {name}: cycles {cycles(p)}, residual {result.residual:.2e}")

    def generate_report(self) -> Path:
        """生成完整的Excel报告"""
        print("\n" + "="*60)
        print("Generating Gate Catalog Report")
        print("="*60 + "\n")

        report = WorkbookReport()

        print("Reversible gates:")
        for name, texts in REVERSIBLE_GATES.items():
            exprs = [parse(t) for t in texts]
            tt = truth_table(exprs, len(exprs))
            self.add_gate(report, name, tt, matrix_from_map(map_from_truth_table(tt)))
        print()

        print("Oracles:")
        for name, text in ORACLE_FUNCTIONS.items():
            e = parse(text)
            tt = truth_table([e], max(e.variables()))
            self.add_gate(report, f"oracle_{name}", tt, oracle_matrix(tt))
        print()

        summary = pd.DataFrame(self.summary_rows)
        report.sheets.insert(0, ('summary', summary))
        report.save(self.output_file)

        print("="*60)
        print("Report Generation Summary")
        print("="*60)
        print(f"Generated: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
        print(f"Gates: {len(summary)}")
        print(f"Output file: {self.output_file}")
        print(f"File size: {self.output_file.stat().st_size / 1024:.2f} KB")
        print("\n✓ Excel report generated successfully!")
        return self.output_file


def main():
    """主函数"""
    try:
        GateReportGenerator().generate_report()
    except GateSynthError as e:
        print(f"✗ Error: {e}", file=sys.stderr)
        sys.exit(e.exit_code)


if __name__ == "__main__":
    main()
