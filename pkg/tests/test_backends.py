"""Pure-Python and compiled kernels must agree bit-for-bit in behavior."""
import os
import subprocess
import sys

import pytest

from mbzeta import BACKEND
from mbzeta import _purepy

compiled = pytest.importorskip(
    "mbzeta._core", reason="compiled kernel extension not built")


def _grid(re_lo, re_hi, im_lo, im_hi, n=9):
    for i in range(n):
        for j in range(n):
            yield complex(re_lo + (re_hi - re_lo) * i / (n - 1),
                          im_lo + (im_hi - im_lo) * j / (n - 1))


def test_backend_label():
    assert BACKEND in ("compiled", "python")


def test_loggamma_parity():
    for z in _grid(-5.5, 6.5, -8.0, 8.0):
        if abs(z - round(z.real)) < 1e-3 and z.real <= 0.5:
            continue
        a = _purepy.loggamma(z)
        b = compiled.loggamma(z)
        assert abs(a - b) <= 1e-13 * max(1.0, abs(a)), z


def test_riemann_zeta_parity():
    for z in _grid(-3.0, 5.0, -30.0, 30.0):
        if abs(z - 1.0) < 1e-2:
            continue
        a = _purepy.riemann_zeta(z, 24, 1.2, 12, 0.5)
        b = compiled.riemann_zeta(z, 24, 1.2, 12, 0.5)
        assert abs(a - b) <= 1e-13 * max(1.0, abs(a)), z


def test_zeta_em_parity():
    for z in _grid(0.6, 4.0, -20.0, 20.0):
        a = _purepy.zeta_em(z, 1.0, 50, 12)
        b = compiled.zeta_em(z, 1.0, 50, 12)
        assert abs(a - b) <= 1e-13 * max(1.0, abs(a)), z
        a = _purepy.zeta_em(z, 2.0, 50, 12)
        b = compiled.zeta_em(z, 2.0, 50, 12)
        assert abs(a - b) <= 1e-13 * max(1.0, abs(a)), z


def test_integrand_parity_all_families():
    cases = [(0, complex(3.0, 0.0), 0.5), (1, complex(4.0, 0.0), 0.0),
             (2, complex(4.0, 0.0), 2.0)]
    for tag, s, prm in cases:
        for z in _grid(1.2, 1.45, -25.0, 25.0, n=7):
            a = _purepy.integrand(tag, s, prm, z, 24, 1.2, 12, 0.5)
            b = compiled.integrand(tag, s, prm, z, 24, 1.2, 12, 0.5)
            assert abs(a - b) <= 1e-12 * max(1e-30, abs(a)), (tag, z)


def _run_with_backend(value):
    env = dict(os.environ, MBZETA_BACKEND=value)
    return subprocess.run(
        [sys.executable, "-c",
         "from mbzeta import BACKEND; import mbzeta.zeta as z; "
         "print(BACKEND, abs(z.riemann_zeta(2.0) - 1.6449340668482264) < 1e-12)"],
        capture_output=True, text=True, env=env)


def test_backend_env_selection():
    out = _run_with_backend("python")
    assert out.returncode == 0, out.stderr
    assert out.stdout.split() == ["python", "True"]
    out = _run_with_backend("compiled")
    assert out.returncode == 0, out.stderr
    assert out.stdout.split() == ["compiled", "True"]
    out = _run_with_backend("auto")
    assert out.returncode == 0, out.stderr
    assert out.stdout.split()[0] in ("compiled", "python")


def test_backend_env_rejects_unknown():
    out = _run_with_backend("fortran")
    assert out.returncode != 0
    assert "MBZETA_BACKEND" in out.stderr
