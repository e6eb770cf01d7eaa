"""The compiled and pure-Python term-merge kernels must agree exactly."""

import os
import random
import subprocess
import sys

import pytest

from foldmap import _kernel
from foldmap.backend import backend_name

try:
    from foldmap import _speedups
except ImportError:
    _speedups = None

needs_ext = pytest.mark.skipif(_speedups is None, reason="extension not built")


def random_terms(rng, count, nvars=2, deg=12):
    out = {}
    for _ in range(count):
        exps = tuple(rng.randrange(deg) for _ in range(nvars))
        out[exps] = rng.randrange(-50, 50) or 3
    return out


@needs_ext
def test_kernels_agree():
    rng = random.Random(123)
    for _ in range(40):
        a = random_terms(rng, rng.randrange(1, 40))
        b = random_terms(rng, rng.randrange(1, 40))
        assert _kernel.mul_terms(a, b) == _speedups.mul_terms(a, b)
        assert _kernel.add_terms(a, b) == _speedups.add_terms(a, b)
        assert _kernel.add_terms(a, b, -1) == _speedups.add_terms(a, b, -1)
        assert _kernel.scale_terms(a, 7) == _speedups.scale_terms(a, 7)


@needs_ext
def test_kernels_agree_three_vars():
    rng = random.Random(7)
    a = random_terms(rng, 25, nvars=3)
    b = random_terms(rng, 25, nvars=3)
    assert _kernel.mul_terms(a, b) == _speedups.mul_terms(a, b)


def test_cancellation_pruned():
    a = {(1, 0): 5}
    b = {(1, 0): -5}
    assert _kernel.add_terms(a, b) == {}
    if _speedups is not None:
        assert _speedups.add_terms(a, b) == {}


def test_backend_names():
    assert _kernel.BACKEND == "pure-python"
    if _speedups is not None:
        assert _speedups.BACKEND == "cython"
    if os.environ.get("FOLDMAP_PURE"):
        assert backend_name() == "pure-python"
    elif _speedups is not None:
        assert backend_name() == "cython"


def test_pure_override_env():
    code = (
        "import foldmap; print(foldmap.backend_name())"
    )
    env = dict(os.environ, FOLDMAP_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "pure-python"
