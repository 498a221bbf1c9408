import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "benchmarks"))

import bench_kernels  # noqa: E402


def test_micro_benchmark_runs():
    rows = bench_kernels.micro(1)
    assert {label for label, _ in rows} == {"poly_mul", "tensor2_mul", "sort_odd"}
    for _, times in rows:
        assert times["python"] > 0


def test_backends_agree_on_benchmark_inputs():
    if bench_kernels.cy is None:
        return
    p, q, t1, t2 = bench_kernels.sample_inputs()
    assert bench_kernels.cy.poly_mul(p, q) == bench_kernels.py.poly_mul(p, q)
    assert bench_kernels.cy.tensor2_mul(t1, t2) == bench_kernels.py.tensor2_mul(t1, t2)
