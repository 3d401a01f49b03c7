"""Run the acceptance suite with the per-criterion PASS/FAIL lines streaming.

Usage: python3 scripts/run_acceptance.py [extra pytest args]
"""

import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent

cmd = [
    sys.executable,
    "-m",
    "pytest",
    str(ROOT / "tests" / "test_acceptance.py"),
    "-v",
]
raise SystemExit(subprocess.call(cmd + sys.argv[1:], cwd=ROOT))
