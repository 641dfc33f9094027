import importlib.util
from pathlib import Path

BENCH = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"


def test_benchmark_runs_and_backends_agree(capsys):
    spec = importlib.util.spec_from_file_location("bench_kernels", BENCH)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--n", "3", "--deg", "5", "--max-n", "10", "--repeat", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("kernel") or out.startswith("numba unavailable")
