#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the pure-Python twin.

Times the eta-power point kernels, single Gauss-Kronrod panels, and a
few end-to-end integrals with each backend, then prints a speedup
table.  The end-to-end rows monkey-patch the backend used by the
adaptive driver, so they measure exactly what the verification suite
pays for.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from etaint import _backend, _forms, quad
from etaint._backend import available_backends


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_eta3_points(impl, n=20_000):
    def run():
        f = impl.eta3_point
        acc = 0.0
        for i in range(n):
            acc += f(0.05 + i * 5e-4)
        return acc

    return run


def bench_eta_points(impl, n=20_000):
    def run():
        f = impl.eta_point
        acc = 0.0
        for i in range(n):
            acc += f(0.05 + i * 5e-4)
        return acc

    return run


def bench_panels(impl, n=2_000):
    def run():
        f = impl.panel
        acc = 0.0
        for i in range(n):
            acc += f(_forms.FORM_COS, 1, 5.0, 0.0, 0.1 + i * 1e-3, 0.2 + i * 1e-3)[0]
        return acc

    return run


def bench_integral(impl, kernel, tol):
    def run():
        saved = _backend.panel
        _backend.panel = impl.panel
        try:
            return quad.integrate(kernel, tol).value
        finally:
            _backend.panel = saved

    return run


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled backend not built; showing pure-Python timings only")

    rows = []
    cases = [
        ("eta_point x20k", bench_eta_points),
        ("eta3_point x20k", bench_eta3_points),
        ("gk15 panel x2k (cos eta)", bench_panels),
        (
            "integrate eta over [0,inf) @1e-11",
            lambda impl: bench_integral(impl, quad.KernelSpec("exp", 1, a=0.0), 1e-11),
        ),
        (
            "integrate cos(5x) eta @1e-10",
            lambda impl: bench_integral(impl, quad.KernelSpec("cos", 1, a=5.0), 1e-10),
        ),
        (
            "integrate x^-1/2 cos(4/x) eta^3 @1e-10",
            lambda impl: bench_integral(impl, quad.KernelSpec("cos_recip", 3, a=4.0), 1e-10),
        ),
    ]
    for name, make in cases:
        t_py = best_of(make(backends["python"]), args.repeat)
        if "compiled" in backends:
            t_cy = best_of(make(backends["compiled"]), args.repeat)
            rows.append((name, t_py, t_cy, t_py / t_cy))
        else:
            rows.append((name, t_py, None, None))

    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, t_py, t_cy, sp in rows:
        if t_cy is None:
            print(f"{name:<{width}}  {t_py*1e3:>8.2f}ms  {'-':>10}  {'-':>8}")
        else:
            print(
                f"{name:<{width}}  {t_py*1e3:>8.2f}ms  {t_cy*1e3:>8.2f}ms  {sp:>7.1f}x"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
