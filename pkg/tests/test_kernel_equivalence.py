"""The compiled kernel must be indistinguishable from the pure one."""

import os
import random
import subprocess
import sys

import pytest

from epshift import _kernel_py as pure

compiled = pytest.importorskip(
    "epshift._speedups", reason="compiled kernel not built")

FUNCS = ("canon", "member", "window", "shift", "intersect", "union",
         "subset", "exists_shift_subset")


def quad(rng, big):
    tmax, pmax = (120, 80) if big else (10, 7)
    t = rng.randint(0, tmax)
    p = rng.randint(1, pmax)
    h = rng.getrandbits(t) if t else 0
    r = rng.getrandbits(p) if rng.random() < 0.8 else 0
    return pure.canon(h, t, p, r)


@pytest.mark.parametrize("big", [False, True],
                         ids=["fast-path", "fallback-path"])
def test_backends_agree(big):
    rng = random.Random(0xC0DE + big)
    for _ in range(4000):
        a, b = quad(rng, big), quad(rng, big)
        d = rng.randint(-40, 40)
        width = rng.randint(0, 130)
        n = rng.randint(-5, 260)
        assert pure.canon(*a) == compiled.canon(*a)
        assert pure.member(*a, n) == compiled.member(*a, n)
        assert pure.window(*a, width) == compiled.window(*a, width)
        assert pure.shift(*a, d) == compiled.shift(*a, d)
        assert pure.intersect(*a, *b) == compiled.intersect(*a, *b)
        assert pure.union(*a, *b) == compiled.union(*a, *b)
        assert pure.subset(*a, *b) == compiled.subset(*a, *b)
        assert (pure.exists_shift_subset(*a, *b)
                == compiled.exists_shift_subset(*a, *b))


def test_kernel_module_exports_match():
    for name in FUNCS:
        assert callable(getattr(pure, name))
        assert callable(getattr(compiled, name))


def test_env_var_forces_pure_backend():
    env = dict(os.environ, EPSHIFT_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "import epshift; print(epshift.KERNEL_BACKEND)"],
        capture_output=True, text=True, env=env)
    assert out.stdout.strip() == "pure"


def test_default_backend_is_compiled_when_built():
    env = {k: v for k, v in os.environ.items() if k != "EPSHIFT_PURE"}
    out = subprocess.run(
        [sys.executable, "-c",
         "import epshift; print(epshift.KERNEL_BACKEND)"],
        capture_output=True, text=True, env=env)
    assert out.stdout.strip() == "compiled"
