"""
命令行入口
表达式 -> 真值表 -> 置换矩阵 -> Hamilton 算符 -> Pauli 项，以及从矩阵反向提取表达式
"""

import argparse
import json
import logging
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import config
from .bits import TruthTable, read_truth_table
from .boolexpr import Expr, arity, format_expr, parse, truth_table
from .errors import (ArityError, DimensionCapError, GateSynthError, InputFormatError,
                     VerificationError)
from .ham import HamiltonianResult, cycles, format_pi, hamiltonian
from .linalg import (ComplexMatrix, PermutationSpec, format_matrix, from_dense, load_matrix_file,
                     log2_size, matrix_to_dict, parse_permutation_list, to_dense)
from .minimize import equivalent, expressions_from_table, format_column
from .pauli import decompose, format_term, scale_terms, spin_form, terms_to_dict
from .report import (WorkbookReport, hamiltonian_frames, matrix_frame, permutation_frame,
                     terms_frame, truth_table_frame)
from .synth import (hadamard_conjugate, map_from_matrix, map_from_truth_table, matrix_from_map,
                    oracle_matrix, bit_reversed_order, truth_table_from_map)

logger = logging.getLogger('gatesynth')

COMMANDS = ('truth', 'synth', 'oracle', 'extract', 'hamiltonian', 'pauli', 'roundtrip')

# 每个命令接受的输入来源
INPUT_SOURCES = {
    'truth': ('expr', 'exprs', 'table'),
    'synth': ('expr', 'exprs', 'table'),
    'oracle': ('expr', 'table'),
    'extract': ('matrix', 'perm'),
    'hamiltonian': ('matrix', 'perm'),
    'pauli': ('matrix', 'perm'),
    'roundtrip': ('expr', 'table'),
}


@dataclass(frozen=True)
class JobConfig:
    """一次命令行调用的全部设置"""

    command: str
    expr: Optional[str] = None
    exprs: Optional[str] = None
    table: Optional[Path] = None
    matrix: Optional[Path] = None
    perm: Optional[str] = None
    arity: Optional[int] = None
    out: Optional[Path] = None
    xlsx: Optional[Path] = None
    json: bool = False
    legacy_style: bool = False
    zero_based: bool = False
    dense: bool = False
    hadamard: bool = False
    raw: bool = False
    spin: bool = False
    tol: float = config.RESIDUAL_TOL
    max_n: int = config.MAX_BITS

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputFormatError(f"unknown command {self.command!r}")
        given = [name for name in ('expr', 'exprs', 'table', 'matrix', 'perm') if getattr(self, name) is not None]
        if len(given) != 1:
            allowed = ', '.join('--' + s for s in INPUT_SOURCES[self.command])
            raise InputFormatError(f"{self.command} needs exactly one input source ({allowed}), got {len(given)}")
        if given[0] not in INPUT_SOURCES[self.command]:
            raise InputFormatError(f"{self.command} does not accept --{given[0]}")
        if self.tol <= 0:
            raise InputFormatError(f"tolerance must be positive, got {self.tol}")
        if self.zero_based and not self.legacy_style:
            raise InputFormatError("--zero-based only applies together with --paper-style")

    @property
    def bit_cap(self) -> int:
        return min(self.max_n, config.MAX_BITS)


@dataclass
class JobOutcome:
    """退出码与渲染好的输出"""

    status: int
    text: str = ''
    error: str = ''


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='gatesynth',
        description='Boolean functions <-> permutation-matrix quantum gates, Hamilton operators and Pauli terms',
    )
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('--expr', help='single boolean expression, e.g. "x1 & !x2"')
    parser.add_argument('--exprs', help='output expressions separated by ";", y1 first')
    parser.add_argument('--table', type=Path, help='truth table file (.csv or "a -> b" lines)')
    parser.add_argument('--matrix', type=Path, help='matrix file (matrix JSON, permutation JSON or bracket rows)')
    parser.add_argument('--perm', help='permutation image list, e.g. "[2,3,1,0]"')
    parser.add_argument('--arity', type=int, help='declared number of input variables')
    parser.add_argument('--out', type=Path, help='write output to FILE instead of standard output')
    parser.add_argument('--xlsx', type=Path, help='also write an Excel report to FILE')
    parser.add_argument('--json', action='store_true', help='JSON output')
    parser.add_argument('--paper-style', '--legacy-style', dest='legacy_style', action='store_true',
                        help='computer-algebra style output (x1 least significant in matrices, *, +, NOT[...])')
    parser.add_argument('--zero-based', action='store_true', help='name variables x0, x1, ... (with --paper-style)')
    parser.add_argument('--dense', action='store_true', help='JSON output as dense matrix instead of permutation')
    parser.add_argument('--hadamard', action='store_true', help='oracle: also print the Hadamard-basis matrix')
    parser.add_argument('--raw', action='store_true', help='pauli: decompose the matrix itself, not its Hamiltonian')
    parser.add_argument('--spin', action='store_true', help='pauli: JSON output in the spin basis')
    parser.add_argument('--tol', type=float, default=config.RESIDUAL_TOL, help='verification residual tolerance')
    parser.add_argument('--max-n', type=int, default=config.MAX_BITS, help='maximum number of bits')
    parser.add_argument('--verbose', '-v', action='store_true', help='progress messages on standard error')
    return parser


def config_from_args(args: argparse.Namespace) -> JobConfig:
    return JobConfig(
        command=args.command,
        expr=args.expr,
        exprs=args.exprs,
        table=args.table,
        matrix=args.matrix,
        perm=args.perm,
        arity=args.arity,
        out=args.out,
        xlsx=args.xlsx,
        json=args.json,
        legacy_style=args.legacy_style,
        zero_based=args.zero_based,
        dense=args.dense,
        hadamard=args.hadamard,
        raw=args.raw,
        spin=args.spin,
        tol=args.tol,
        max_n=args.max_n,
    )


# ---------------------------------------------------------------------------
# 输入
# ---------------------------------------------------------------------------

def _check_bits(n: int, cap: int, what: str):
    if n > cap:
        raise DimensionCapError(f"{what} needs {n} bits, the limit is {cap}")


def _load_table(cfg: JobConfig) -> Tuple[TruthTable, List[Expr]]:
    """读取表达式或真值表文件，返回真值表及（若有）表达式"""
    if cfg.table is not None:
        tt = read_truth_table(cfg.table)
        _check_bits(tt.inputs, cfg.bit_cap, "truth table")
        logger.info("✓ Loaded truth table with %d inputs and %d outputs", tt.inputs, tt.outputs)
        return tt, []
    texts = [cfg.expr] if cfg.expr is not None else [t for t in cfg.exprs.split(';')]
    if any(not t.strip() for t in texts):
        raise InputFormatError("empty expression")
    exprs = [parse(t, cfg.arity) for t in texts]
    n = max(arity(e, cfg.arity) for e in exprs)
    if n == 0:
        raise ArityError("expressions use no variables; pass --arity")
    _check_bits(n, cfg.bit_cap, "expression")
    logger.info("✓ Parsed %d expression(s) over %d variables", len(exprs), n)
    return truth_table(exprs, n), exprs


def _load_matrix(cfg: JobConfig) -> Union[PermutationSpec, ComplexMatrix]:
    if cfg.perm is not None:
        return parse_permutation_list(cfg.perm)
    return load_matrix_file(cfg.matrix)


def _load_permutation(cfg: JobConfig) -> PermutationSpec:
    loaded = _load_matrix(cfg)
    p = loaded if isinstance(loaded, PermutationSpec) else from_dense(loaded)
    _check_bits(log2_size(p.size), cfg.bit_cap, "matrix")
    logger.info("✓ Loaded %dx%d permutation matrix", p.size, p.size)
    return p


# ---------------------------------------------------------------------------
# 输出
# ---------------------------------------------------------------------------

def _dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _permutation_lines(p: PermutationSpec, legacy_style: bool) -> List[str]:
    shown = bit_reversed_order(p) if legacy_style else p
    return format_matrix(to_dense(shown).real.astype(int))


def _permutation_json(p: PermutationSpec, dense: bool) -> str:
    return _dumps(matrix_to_dict(to_dense(p)) if dense else p.to_dict())


def _expression_lines(exprs: Sequence[Expr], cfg: JobConfig) -> List[str]:
    if cfg.legacy_style:
        return format_column(list(exprs), cfg.zero_based)
    return [f"y{j + 1} = {format_expr(e)}" for j, e in enumerate(exprs)]


def _verified_expressions(tt: TruthTable) -> List[Expr]:
    exprs = expressions_from_table(tt)
    for j, e in enumerate(exprs):
        if not equivalent(e, tt, j):
            raise VerificationError(f"simplified expression for y{j + 1} does not reproduce the table")
    return exprs


# ---------------------------------------------------------------------------
# 命令
# ---------------------------------------------------------------------------

def _cmd_truth(cfg: JobConfig, report: WorkbookReport) -> str:
    tt, _ = _load_table(cfg)
    report.add_sheet('truth_table', truth_table_frame(tt))
    if cfg.json:
        return _dumps({'inputs': tt.inputs, 'outputs': tt.outputs, 'rows': [str(r) for r in tt.rows]})
    return '\n'.join(tt.to_lines())


def _cmd_synth(cfg: JobConfig, report: WorkbookReport) -> str:
    tt, _ = _load_table(cfg)
    m = map_from_truth_table(tt)
    p = matrix_from_map(m)
    logger.info("✓ Synthesized %dx%d permutation matrix, cycles %s", p.size, p.size, cycles(p))
    report.add_sheet('truth_table', truth_table_frame(tt))
    report.add_sheet('permutation', permutation_frame(p))
    if cfg.json:
        return _permutation_json(p, cfg.dense)
    return '\n'.join(_permutation_lines(p, cfg.legacy_style))


def _cmd_oracle(cfg: JobConfig, report: WorkbookReport) -> str:
    tt, _ = _load_table(cfg)
    _check_bits(tt.inputs + 1, cfg.bit_cap, "oracle")
    p = oracle_matrix(tt)
    logger.info("✓ Built oracle on %d qubits", tt.inputs + 1)
    report.add_sheet('truth_table', truth_table_frame(tt))
    report.add_sheet('oracle', permutation_frame(p))
    u_h = hadamard_conjugate(to_dense(p)) if cfg.hadamard else None
    if u_h is not None:
        report.add_sheet('hadamard_basis', matrix_frame(u_h))
    if cfg.json:
        if u_h is None:
            return _permutation_json(p, cfg.dense)
        return _dumps({'oracle': p.to_dict(), 'hadamard_basis': matrix_to_dict(u_h)})
    lines = _permutation_lines(p, cfg.legacy_style)
    if u_h is not None:
        lines += [''] + format_matrix(u_h)
    return '\n'.join(lines)


def _cmd_extract(cfg: JobConfig, report: WorkbookReport) -> str:
    p = _load_permutation(cfg)
    tt = truth_table_from_map(map_from_matrix(p))
    exprs = _verified_expressions(tt)
    report.add_sheet('truth_table', truth_table_frame(tt))
    if cfg.json:
        return _dumps({
            'inputs': tt.inputs,
            'rows': [str(r) for r in tt.rows],
            'expressions': [format_expr(e) for e in exprs],
        })
    return '\n'.join(tt.to_lines() + _expression_lines(exprs, cfg))


def _check_residual(result: HamiltonianResult, cfg: JobConfig):
    if result.residual > cfg.tol:
        raise VerificationError(f"residual {result.residual:.3g} exceeds tolerance {cfg.tol:.3g}")


def _cmd_hamiltonian(cfg: JobConfig, report: WorkbookReport) -> str:
    p = _load_permutation(cfg)
    result = hamiltonian(p)
    logger.info("✓ Hamiltonian built, residual %.3g", result.residual)
    for name, df in hamiltonian_frames(result):
        report.add_sheet(name, df)
    _check_residual(result, cfg)
    if cfg.json:
        return _dumps(result.to_dict())
    lines = ['K ='] + format_matrix(result.K, format_pi)
    lines += ['H ='] + format_matrix(result.H, format_pi)
    lines.append(f"residual = {result.residual:.3g}")
    return '\n'.join(lines)


def _cmd_pauli(cfg: JobConfig, report: WorkbookReport) -> str:
    loaded = _load_matrix(cfg)
    size = loaded.size if isinstance(loaded, PermutationSpec) else np.asarray(loaded).shape[0]
    n = log2_size(size)
    _check_bits(n, min(cfg.bit_cap, config.MAX_PAULI_BITS), "Pauli decomposition")
    if cfg.raw:
        m = to_dense(loaded) if isinstance(loaded, PermutationSpec) else np.asarray(loaded)
        what = 'matrix'
    else:
        p = loaded if isinstance(loaded, PermutationSpec) else from_dense(loaded)
        result = hamiltonian(p)
        _check_residual(result, cfg)
        m = result.H
        what = 'H = iK'
    terms = decompose(m)
    spin = spin_form(terms)
    quarter = scale_terms(terms, math.pi / 4)
    logger.info("✓ %d nonzero Pauli terms", len(terms))
    report.add_sheet('pauli_terms', terms_frame(terms))
    report.add_sheet('spin_terms', terms_frame(spin))
    if cfg.json:
        if cfg.spin:
            return _dumps(terms_to_dict(spin, n, 'spin'))
        return _dumps(terms_to_dict(terms, n, 'sigma'))
    lines = [f"# {what} in the sigma basis"] + [format_term(t) for t in terms]
    lines += ['# in units of pi/4'] + [format_term(t) for t in quarter]
    lines += ['# spin basis, S_i = sigma_i / 2'] + [format_term(t) for t in spin]
    return '\n'.join(lines)


def _cmd_roundtrip(cfg: JobConfig, report: WorkbookReport) -> str:
    tt, _ = _load_table(cfg)
    _check_bits(tt.inputs + 1, cfg.bit_cap, "oracle")
    p = oracle_matrix(tt)
    g = truth_table_from_map(map_from_matrix(p))
    # 恢复的映射必须保持 x 并把 f(x) 异或到 y 上
    f = tt.column(0)
    expected = np.array([[*(k >> (tt.inputs - 1 - i) & 1 for i in range(tt.inputs)), y ^ f[k]]
                         for k in range(1 << tt.inputs) for y in (0, 1)], dtype=np.int8)
    if not np.array_equal(g.as_array(), expected):
        raise VerificationError("recovered map differs from |x>|y> -> |x>|y xor f(x)>")
    exprs = _verified_expressions(g)
    logger.info("✓ Roundtrip verified on %d inputs", 1 << g.inputs)
    report.add_sheet('oracle', permutation_frame(p))
    report.add_sheet('recovered_map', truth_table_frame(g))
    if cfg.json:
        return _dumps({
            'oracle': p.to_dict(),
            'rows': [str(r) for r in g.rows],
            'expressions': [format_expr(e) for e in exprs],
        })
    lines = _permutation_lines(p, cfg.legacy_style) + g.to_lines() + _expression_lines(exprs, cfg)
    return '\n'.join(lines)


_HANDLERS = {
    'truth': _cmd_truth,
    'synth': _cmd_synth,
    'oracle': _cmd_oracle,
    'extract': _cmd_extract,
    'hamiltonian': _cmd_hamiltonian,
    'pauli': _cmd_pauli,
    'roundtrip': _cmd_roundtrip,
}


def write_atomic(path: Path, text: str):
    """先写临时文件，成功后改名"""
    path = Path(path)
    directory = path.parent if str(path.parent) else Path('.')
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as f:
            f.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.remove(tmp_name)
        raise


def run(cfg: JobConfig) -> JobOutcome:
    """
    执行一个命令

    Args:
        cfg: 命令行设置

    Returns:
        JobOutcome：退出码、输出文本与错误信息
    """
    report = WorkbookReport()
    try:
        text = _HANDLERS[cfg.command](cfg, report) + '\n'
        if cfg.out is not None:
            write_atomic(cfg.out, text)
            logger.info("✓ Saved output to: %s", cfg.out)
        if cfg.xlsx is not None:
            report.save(cfg.xlsx)
    except GateSynthError as e:
        return JobOutcome(e.exit_code, error=str(e))
    except OSError as e:
        return JobOutcome(1, error=str(e))
    return JobOutcome(0, text=text if cfg.out is None else '')


def configure_logging(verbose: bool):
    """--verbose 时把 gatesynth 的 INFO 消息写到标准错误"""
    package_logger = logging.getLogger('gatesynth')
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
    if not verbose:
        package_logger.setLevel(logging.WARNING)
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(message)s'))
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.INFO)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """主函数"""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        cfg = config_from_args(args)
    except GateSynthError as e:
        print(f"✗ Error: {e}", file=sys.stderr)
        return e.exit_code

    outcome = run(cfg)
    if outcome.status != 0:
        print(f"✗ Error: {outcome.error}", file=sys.stderr)
        return outcome.status
    sys.stdout.write(outcome.text)
    return 0
