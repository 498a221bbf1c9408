"""Compare the compiled and pure-Python kernels.

Micro benchmarks call both kernel modules directly on the same inputs.
Workload benchmarks run a few real computations in a subprocess per
backend, since the backend is chosen once at import.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from supercm import _kernels_py as py
from supercm.core import gen

try:
    from supercm import _ckernels as cy
except ImportError:
    cy = None

WORKLOADS = {
    "F coproduct of b5*c4*a3": "ffun.coproduct(gen('b', 5) * gen('c', 4) * gen('a', 3))",
    "F antipode of a8, b7, c7, d7": "[ffun.antipode(gen(f, n)) for f, n in "
                                    "(('a', 8), ('b', 7), ('c', 7), ('d', 7))]",
    "H coproduct of (a3 # U*V)(b2 # X)": "bicross.h_coproduct(parse('a3 # U*V', 'h') "
                                         "* parse('b2 # X', 'h'))",
    "jet inverse at order 7": "jets.invert(jets.SuperJet.universal(7))",
}

RUNNER = """
import functools, gc, timeit
import supercm
from supercm import ffun, bicross, jets
from supercm.core import gen
from supercm.parse import parse

assert supercm.BACKEND == {backend!r}


def run():
    # start from cold caches so every repeat does the full computation
    for obj in gc.get_objects():
        if isinstance(obj, functools._lru_cache_wrapper):
            obj.cache_clear()
    {stmt}


print(min(timeit.repeat(run, number=1, repeat={repeat})))
"""


def sample_inputs(seed=0, size=40):
    rng = random.Random(seed)
    gens = (gen(f, n) for f in "abcd" for n in range(1, 8))
    keys = [next(iter(g.terms)) for g in gens if g.terms and g != g.one()]

    def poly():
        out = {}
        for _ in range(size):
            m = (((), ()), 1)
            for k in rng.sample(keys, 3):
                s, mono = py.mono_mul(m[0], k)
                if s:
                    m = (mono, m[1] * s)
            out[m[0]] = out.get(m[0], 0) + m[1] * rng.choice([-2, -1, 1, 2])
        return {k: v for k, v in out.items() if v}

    p, q = poly(), poly()
    t1 = {(a, b): 1 for a in list(p)[:12] for b in list(q)[:12]}
    t2 = {(b, a): 2 for a in list(p)[:12] for b in list(q)[:12]}
    return p, q, t1, t2


def micro(repeat):
    p, q, t1, t2 = sample_inputs()
    mods = {"python": py}
    if cy is not None:
        mods["cython"] = cy
    rows = []
    for label, call in (("poly_mul", lambda m: m.poly_mul(p, q)),
                        ("tensor2_mul", lambda m: m.tensor2_mul(t1, t2)),
                        ("sort_odd", lambda m: m.sort_odd(range(30, 0, -1)))):
        times = {}
        for name, mod in mods.items():
            times[name] = min(timeit.repeat(lambda: call(mod), number=5, repeat=repeat)) / 5
        rows.append((label, times))
    return rows


def workload(repeat):
    rows = []
    for label, stmt in WORKLOADS.items():
        times = {}
        for backend, flag in (("python", "1"), ("cython", "0")):
            if backend == "cython" and cy is None:
                continue
            code = RUNNER.format(backend=backend, stmt=stmt, repeat=repeat)
            env = dict(os.environ, SUPERCM_PURE_PYTHON=flag)
            out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                                 text=True, check=True)
            times[backend] = float(out.stdout.strip())
        rows.append((label, times))
    return rows


def show(title, rows):
    print(title)
    print(f"  {'case':40s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for label, t in rows:
        c = t.get("cython")
        speed = f"{t['python'] / c:7.2f}x" if c else "     n/a"
        cy_txt = f"{c * 1e3:8.2f}ms" if c else "       n/a"
        print(f"  {label:40s} {t['python'] * 1e3:8.2f}ms {cy_txt} {speed}")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true", help="print raw timings as JSON")
    args = ap.parse_args(argv)
    m = micro(args.repeat)
    w = workload(max(1, args.repeat // 2))
    if args.json:
        print(json.dumps({"micro": dict(m), "workload": dict(w)}, indent=2))
        return
    if cy is None:
        print("compiled kernels not built; only the fallback is timed\n")
    show("kernels", m)
    print()
    show("workloads (caches cleared per run)", w)


if __name__ == "__main__":
    main()
