"""Compare the compiled kernels with the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Micro benchmarks call each kernel directly; the end-to-end rows run a
workload in a subprocess with and without CHARHOPF_PURE=1.
"""

import argparse
import os
import subprocess
import sys
import timeit

from charhopf import _pykernels

try:
    from charhopf import _ckernels
except ImportError:
    _ckernels = None

WORDS = [tuple((i * 7 + j * 3) % 3 + 1 for j in range(12)) for i in range(200)]
POLY_A = list(range(1, 40))
POLY_B = list(range(-20, 19))
PHI = [1, -1, 1, -1, 1, -1]  # low coefficients of a monic degree-6 modulus
CYC_A = [3, -1, 4, 1, -5, 9]
CYC_B = [2, 6, -5, 3, 5, -8]

MICRO = {
    "is_lyndon x200": lambda k: [k.is_lyndon(w) for w in WORDS],
    "min_suffix_start x200": lambda k: [k.min_suffix_start(w) for w in WORDS],
    "lyndon_words(3, 9)": lambda k: k.lyndon_words(3, 9),
    "poly_mul 39x39": lambda k: k.poly_mul(POLY_A, POLY_B),
    "cyc_mul deg 6": lambda k: k.cyc_mul(CYC_A, CYC_B, PHI),
}

WORKLOADS = {
    "oracle dim uq_sl2(5)": "from charhopf.presets import load_preset; "
                            "from charhopf.verify import OracleConfig, oracle_dimension, top_degree; "
                            "p = load_preset('uq_sl2:5'); oracle_dimension(p, OracleConfig(max_zdeg=top_degree(p)))",
    "confluence Uq_sl2": "from charhopf.presets import load_preset; "
                         "from charhopf.rewrite import confluence_selftest; "
                         "confluence_selftest(load_preset('Uq_sl2'), 100, 6)",
}


def _best(fn, repeat):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def _subprocess_time(code, pure, repeat):
    env = dict(os.environ, CHARHOPF_PURE="1" if pure else "0")
    script = f"import time; t = time.perf_counter(); {code}; print(time.perf_counter() - t)"
    runs = []
    for _ in range(repeat):
        out = subprocess.run([sys.executable, "-c", script], env=env, check=True, capture_output=True, text=True)
        runs.append(float(out.stdout.strip().splitlines()[-1]))
    return min(runs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the Python timings are shown")
    print(f"{'benchmark':28s} {'python':>12s} {'cython':>12s} {'speedup':>8s}")
    for name, fn in MICRO.items():
        tp = _best(lambda: fn(_pykernels), args.repeat)
        tc = _best(lambda: fn(_ckernels), args.repeat) if _ckernels else float("nan")
        print(f"{name:28s} {tp * 1e6:10.1f}us {tc * 1e6:10.1f}us {tp / tc:7.1f}x")
    for name, code in WORKLOADS.items():
        tp = _subprocess_time(code, True, args.repeat)
        tc = _subprocess_time(code, False, args.repeat) if _ckernels else float("nan")
        print(f"{name:28s} {tp:11.3f}s {tc:11.3f}s {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
