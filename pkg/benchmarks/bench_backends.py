"""Compare the compiled and pure-Python kernel backends.

Times the three hot kernels on fixed argument grids and one full line
integral, then prints a small table. Run from the repository root:

    python benchmarks/bench_backends.py
"""
import os
import statistics
import sys
import time

os.environ.setdefault("MBZETA_BACKEND", "auto")

from mbzeta import _purepy  # noqa: E402

try:
    from mbzeta import _core
except ImportError:
    _core = None


def _time(fn, repeats=5):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return min(samples), statistics.median(samples)


def _grid(re_lo, re_hi, im_lo, im_hi, n):
    return [complex(re_lo + (re_hi - re_lo) * i / (n - 1),
                    im_lo + (im_hi - im_lo) * j / (n - 1))
            for i in range(n) for j in range(n)]


def bench_kernels(mod):
    zs = _grid(-5.5, 6.5, 0.1, 40.0, 40)
    out = {}

    def run_loggamma():
        for z in zs:
            mod.loggamma(z)

    def run_zeta():
        for z in zs:
            mod.riemann_zeta(z, 24, 1.2, 12, 0.5)

    line = _grid(1.45, 1.55, -30.0, 30.0, 40)

    def run_integrand():
        for z in line:
            mod.integrand(1, complex(4.0, 0.0), 0.0, z, 24, 1.2, 12, 0.5)

    out["loggamma x1600"] = _time(run_loggamma)
    out["riemann_zeta x1600"] = _time(run_zeta)
    out["integrand x1600"] = _time(run_integrand)
    return out


def bench_integral(backend):
    env = dict(os.environ, MBZETA_BACKEND=backend)
    import subprocess
    code = (
        "import time; from mbzeta.contour import *; "
        "t0=time.perf_counter(); "
        "r=integrate_vertical(zeta_zeta_gamma(4.0), VerticalLineSpec(1.5, 1e-10)); "
        "print(time.perf_counter()-t0, r.value.real)")
    best = None
    for _ in range(3):
        p = subprocess.run([sys.executable, "-c", code], capture_output=True,
                           text=True, env=env, check=True)
        dt, value = p.stdout.split()
        best = min(best, float(dt)) if best is not None else float(dt)
    return best, float(value)


def main():
    rows = [("pure python", bench_kernels(_purepy))]
    if _core is not None:
        rows.append(("compiled", bench_kernels(_core)))
    else:
        print("compiled extension not available; showing pure python only\n")

    names = list(rows[0][1])
    width = max(len(n) for n in names) + 2
    header = "kernel".ljust(width) + "".join(f"{label:>16s}" for label, _ in rows)
    if len(rows) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for name in names:
        cells = [res[name][0] for _, res in rows]
        line = name.ljust(width) + "".join(f"{c * 1e3:13.2f} ms" for c in cells)
        if len(cells) == 2:
            line += f"{cells[0] / cells[1]:9.1f}x"
        print(line)

    print()
    for backend in ("python",) + (("compiled",) if _core is not None else ()):
        dt, value = bench_integral(backend)
        print(f"line integral [{backend:8s}]  {dt * 1e3:8.2f} ms   "
              f"value {value:.10f}")


if __name__ == "__main__":
    main()
