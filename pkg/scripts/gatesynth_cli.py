#!/usr/bin/env python3
"""
gatesynth 命令行脚本
用法示例：python scripts/gatesynth_cli.py synth --exprs "x1;x1 ^ x2"
"""

import sys
from pathlib import Path

# 项目路径配置
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from gatesynth.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
