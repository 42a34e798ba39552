import subprocess
import sys
from pathlib import Path

BENCH = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"


def test_benchmark_runs_and_cross_checks():
    out = subprocess.run([sys.executable, str(BENCH), "--sizes", "8", "20", "--repeat", "1"],
                         capture_output=True, text=True, check=True)
    rows = out.stdout.strip().splitlines()
    assert rows[-2].split()[0] == "8" and rows[-1].split()[0] == "20"
