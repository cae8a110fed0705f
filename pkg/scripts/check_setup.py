#!/usr/bin/env python3
"""
检查项目结构与依赖
"""

import sys
from pathlib import Path

print("="*60)
print("Checking gatesynth Setup")
print("="*60 + "\n")

# 检查Python版本
print(f"Python version: {sys.version}")
print()

# 检查项目结构
PROJECT_ROOT = Path(__file__).parent.parent
print(f"Project root: {PROJECT_ROOT}")
print()

required_files = [
    "requirements.txt",
    "pytest.ini",
    "README.md",
    "gatesynth/__init__.py",
    "gatesynth/cli.py",
]

print("Checking required files:")
for filename in required_files:
    exists = "✓" if (PROJECT_ROOT / filename).exists() else "✗"
    print(f"  {exists} {filename}")
print()

required_dirs = [
    "gatesynth",
    "scripts",
    "tests",
    "data/examples",
    "docs",
]

print("Checking directory structure:")
for dir_path in required_dirs:
    exists = "✓" if (PROJECT_ROOT / dir_path).exists() else "✗"
    print(f"  {exists} {dir_path}/")
print()

examples = sorted((PROJECT_ROOT / "data" / "examples").glob("*"))
print(f"Example inputs: {len(examples)}")
for path in examples:
    print(f"  - {path.name}")
print()

# 检查Python包
print("Checking Python packages:")
packages = {
    'numpy': False,
    'scipy': False,
    'pandas': False,
    'openpyxl': False,
    'lark': False,
    'pytest': False,
}

for package in packages.keys():
    try:
        __import__(package)
        packages[package] = True
        print(f"  ✓ {package}")
    except ImportError:
        print(f"  ✗ {package} (not installed)")

print()
print("="*60)

all_files_exist = all((PROJECT_ROOT / f).exists() for f in required_files)
all_dirs_exist = all((PROJECT_ROOT / d).exists() for d in required_dirs)
core_packages = all(packages[p] for p in ('numpy', 'scipy', 'lark'))

if all_files_exist and all_dirs_exist:
    print("✓ Project structure is complete!")
else:
    print("✗ Some files or directories are missing")

if core_packages:
    print("✓ Core packages are installed")
    print("\nYou can now run:")
    print("  python scripts/gatesynth_cli.py roundtrip --expr \"x1 & !x2\" --paper-style --zero-based")
else:
    print("✗ Core packages need to be installed")
    print("\nPlease run:")
    print("  pip install -r requirements.txt")

print("="*60)
