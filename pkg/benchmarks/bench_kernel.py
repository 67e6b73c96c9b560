#!/usr/bin/env python3
"""Benchmark the compiled polynomial kernel against the pure-Python
fallback on the workloads that dominate runtime: sparse multiplication,
powering, and Groebner normal-form reduction.

Run:  python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import time
from fractions import Fraction

from gkzrational import _kernel_py

try:
    from gkzrational import _speedups
except ImportError:
    _speedups = None


def random_poly(rng, nvars, nterms, max_exp=6):
    terms = {}
    while len(terms) < nterms:
        e = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        terms[e] = Fraction(rng.randint(-99, 99), rng.randint(1, 20))
    return {e: c for e, c in terms.items() if c}


def workload_mul(kernel, rng):
    a = random_poly(rng, 6, 150)
    b = random_poly(rng, 6, 150)
    return lambda: kernel.mul_terms(a, b)


def workload_pow(kernel, rng):
    base = {(2, 0, 1, 0): Fraction(1), (0, 2, 0, 1): Fraction(1)}
    base.update(random_poly(rng, 4, 4, 3))
    return lambda: kernel.pow_terms(base, 8, 4)


def workload_normal_form(kernel, rng):
    nvars = 5
    gens = []
    for _ in range(8):
        g = random_poly(rng, nvars, 5, 3)
        le = kernel.leading_exponent(g, 0)
        lc = g[le]
        tail = {e: c for e, c in g.items() if e != le}
        gens.append((le, lc, tail))
    gens.sort(key=lambda t: kernel.sort_key(0, t[0]))
    p = random_poly(rng, nvars, 120, 8)
    return lambda: kernel.normal_form_terms(p, gens, 0, 10 ** 9)


WORKLOADS = [
    ("mul 150x150 terms, 6 vars", workload_mul),
    ("pow^8 of 6-term quartic", workload_pow),
    ("normal form, 8 gens", workload_normal_form),
]


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    kernels = [("python", _kernel_py)]
    if _speedups is not None:
        kernels.append(("cython", _speedups))
    else:
        print("compiled kernel not available; showing pure Python only")

    print(f"{'workload':34s}" + "".join(f"{name:>12s}" for name, _ in kernels)
          + ("     speedup" if len(kernels) == 2 else ""))
    for label, make in WORKLOADS:
        times = []
        for _name, kernel in kernels:
            rng = random.Random(20240517)
            fn = make(kernel, rng)
            times.append(timeit(fn, args.repeat))
        row = f"{label:34s}" + "".join(f"{t * 1000:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:11.2f}x"
        print(row)

    # cross-check: identical results on one sample per workload
    if len(kernels) == 2:
        rng_a, rng_b = random.Random(7), random.Random(7)
        a = random_poly(rng_a, 6, 80)
        b = random_poly(rng_b, 6, 80)
        assert _kernel_py.mul_terms(a, b) == _speedups.mul_terms(a, b)
        print("parity check: identical products")


if __name__ == "__main__":
    main()
