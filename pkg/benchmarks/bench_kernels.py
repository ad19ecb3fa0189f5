"""Compiled kernels against the numpy fallback.

Times one Adam update and one soft-update blend on buffers the size of the
default actor and critic, then (with ``--train``) a short training run under
each backend in a subprocess.

    python benchmarks/bench_kernels.py [--repeat 200] [--train]
"""

import argparse
import os
import subprocess
import sys
import time
import timeit

import numpy as np

from vertexnet import _kernels, kernels
from vertexnet.nets import MlpSpec, init_params

SIZES = {
    "actor": MlpSpec((6, 256, 256, 5)),
    "critic": MlpSpec((8, 256, 256, 1)),
}


def buffers(n, dtype, rng):
    p, g = rng.normal(size=(2, n)).astype(dtype)
    m = np.zeros(n, dtype)
    v = np.zeros(n, dtype)
    return p, g, m, v


def time_call(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat)) * 1e6


def bench_kernels(repeat):
    rng = np.random.default_rng(0)
    print(f"{'net':8}{'dtype':9}{'params':>8}{'kernel':>8}{'numpy us':>11}{'compiled us':>13}{'speedup':>9}")
    for name, spec in SIZES.items():
        n = init_params(spec, rng).size
        for dtype in ("float32", "float64"):
            p, g, m, v = buffers(n, dtype, rng)
            args = (1e-3, 0.9, 0.999, 1e-8, 0.5, 0.5)
            rows = [
                ("adam", lambda: kernels.adam_update_numpy(p, g, m, v, *args),
                 lambda: _kernels.adam_update(p, g, m, v, *args)),
                ("blend", lambda: kernels.blend_numpy(p, g, 0.005), lambda: _kernels.blend(p, g, 0.005)),
            ]
            for kernel, slow, fast in rows:
                a, b = time_call(slow, repeat), time_call(fast, repeat)
                print(f"{name:8}{dtype:9}{n:>8}{kernel:>8}{a:>11.1f}{b:>13.1f}{a / b:>8.1f}x")


def bench_train(episodes):
    cmd = [sys.executable, "-m", "vertexnet", "train", "--env", "pendulum", "--policy", "vn", "--seed", "0",
           "--episodes", str(episodes), "--set", "warmup=200"]
    for label, extra in (("numpy", {"VERTEXNET_PURE_PYTHON": "1"}), ("compiled", {})):
        out = f"/tmp/bench-{label}"
        t0 = time.perf_counter()
        subprocess.run(cmd + ["--out", out], check=True, env=dict(os.environ, **extra))
        print(f"train {episodes} pendulum episodes, {label}: {time.perf_counter() - t0:.1f} s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--train", action="store_true", help="also time a short training run per backend")
    ap.add_argument("--episodes", type=int, default=5)
    args = ap.parse_args()
    print(f"selected backend at import: {kernels.BACKEND}")
    bench_kernels(args.repeat)
    if args.train:
        bench_train(args.episodes)


if __name__ == "__main__":
    main()
