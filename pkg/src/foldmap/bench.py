"""Benchmark: compiled term-merge kernel vs the pure-Python fallback.

Two workloads: a raw sparse product of two dense degree-24 integer
polynomials (the kernel in isolation) and a full folding-map composition
G_5 o G_5 (the kernel inside the substitution machinery).  Run via
`foldmap bench` or `python benchmarks/bench_kernels.py`.
"""

from __future__ import annotations

import random
import time

from . import _kernel, poly
from .folding import compose, fold

try:
    from . import _speedups
except ImportError:
    _speedups = None


def _random_terms(rng, count, deg):
    terms = {}
    while len(terms) < count:
        i = rng.randrange(deg)
        j = rng.randrange(deg - i)
        terms[(i, j)] = rng.randrange(-(10**6), 10**6) or 1
    return terms


def _time(fn, repeat) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _with_kernel(kernel, fn):
    """Run fn with poly.py temporarily bound to the given kernel."""
    saved = (poly.add_terms, poly.scale_terms, poly.mul_terms)
    poly.add_terms = kernel.add_terms
    poly.scale_terms = kernel.scale_terms
    poly.mul_terms = kernel.mul_terms
    try:
        return fn()
    finally:
        poly.add_terms, poly.scale_terms, poly.mul_terms = saved


def run_bench(repeat: int = 3) -> dict:
    rng = random.Random(42)
    a = _random_terms(rng, 300, 25)
    b = _random_terms(rng, 300, 25)
    g5 = fold("g2", 5)

    kernels = [("pure-python", _kernel)]
    if _speedups is not None:
        kernels.append(("cython", _speedups))

    results = {}
    for name, kernel in kernels:
        raw = _time(lambda: kernel.mul_terms(a, b), repeat)
        composed = _with_kernel(
            kernel, lambda: _time(lambda: compose(g5, g5), repeat)
        )
        results[name] = {"mul_terms_300x300": raw, "compose_G5_G5": composed}
        print(
            f"{name:>12}:  mul_terms 300x300 terms: {raw * 1e3:8.2f} ms   "
            f"compose G5.G5: {composed * 1e3:8.2f} ms"
        )
    if len(results) == 2:
        for key in ("mul_terms_300x300", "compose_G5_G5"):
            ratio = results["pure-python"][key] / results["cython"][key]
            print(f"{'speedup':>12}:  {key}: {ratio:.2f}x")
    else:
        print("compiled kernel not available; showing pure-python only")
    return results
