import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).parent.parent / "demos").glob("*.py"))


def test_demos_exist():
    assert len(DEMOS) == 5


@pytest.mark.parametrize("path", DEMOS, ids=lambda p: p.name)
def test_demo_compiles(path):
    compile(path.read_text(), str(path), "exec")


def test_fast_demo_runs_end_to_end():
    # demo 04 is the worked fixture cell; the others trade runtime for range
    demo = next(p for p in DEMOS if p.name.startswith("04"))
    proc = subprocess.run(
        [sys.executable, str(demo)], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0, proc.stderr
    assert "chi = 1" in proc.stdout
    assert "K^3 = -14" in proc.stdout
