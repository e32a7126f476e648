"""Compare the compiled and pure-Python polynomial kernels.

Runs the raw kernels on random packed-exponent polynomials, then times an
end-to-end quartic chain solve under each backend in a fresh interpreter
(the backend is chosen at import, via JORDAN_LADDER_PURE).

    python3 benchmarks/bench_kernels.py [--n 5] [--repeat 5]
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from jordan_ladder import _kernels_py

try:
    from jordan_ladder import _ckernels
except ImportError:
    _ckernels = None

BITS = 16


def random_poly(rng, terms, nvars=4, max_exp=6, coeff_bits=40):
    out = {}
    for _ in range(terms):
        m = 0
        for v in range(nvars):
            m |= rng.randint(0, max_exp) << (BITS * v)
        out[m] = rng.getrandbits(coeff_bits) - (1 << (coeff_bits - 1)) or 1
    return out


def bench_raw(repeat):
    rng = random.Random(1)
    cases = [(random_poly(rng, 20), random_poly(rng, 20)),
             (random_poly(rng, 80), random_poly(rng, 60)),
             (random_poly(rng, 300), random_poly(rng, 10))]
    rows = []
    for name in ("poly_add", "poly_sub", "poly_mul"):
        for p, q in cases:
            label = f"{name} {len(p)}x{len(q)}"
            times = {}
            for tag, mod in (("python", _kernels_py), ("cython", _ckernels)):
                if mod is None:
                    continue
                fn = getattr(mod, name)
                number = 200 if name == "poly_mul" else 2000
                times[tag] = min(timeit.repeat(lambda: fn(p, q), number=number, repeat=repeat)) / number
            if _ckernels is not None:
                assert _kernels_py.__dict__[name](p, q) == getattr(_ckernels, name)(p, q)
            rows.append((label, times))
    return rows


SOLVE = ("import time; from jordan_ladder import solve_chain, quartic_model, BACKEND;"
         "t=time.perf_counter(); solve_chain(quartic_model(), {n});"
         "print(BACKEND, time.perf_counter()-t)")


def bench_solve(n):
    out = {}
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("JORDAN_LADDER_PURE", None)
        if pure:
            env["JORDAN_LADDER_PURE"] = "1"
        res = subprocess.run([sys.executable, "-c", SOLVE.format(n=n)], env=env,
                             capture_output=True, text=True, check=True)
        backend, secs = res.stdout.split()
        out[backend] = float(secs)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the Python backend is timed")
    print(f"{'kernel':24s} {'python us':>10s} {'cython us':>10s} {'speedup':>8s}")
    for label, t in bench_raw(args.repeat):
        py, cy = t.get("python"), t.get("cython")
        sp = f"{py / cy:8.2f}" if cy else "       -"
        print(f"{label:24s} {py * 1e6:10.2f} {cy * 1e6 if cy else float('nan'):10.2f} {sp}")
    solve = bench_solve(args.n)
    print(f"quartic n={args.n} solve + verify: " + ", ".join(f"{k} {v:.2f} s" for k, v in sorted(solve.items())))


if __name__ == "__main__":
    main()
