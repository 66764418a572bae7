"""Time the numba kernels against their pure-numpy counterparts.

    python benchmarks/bench_kernels.py [--repeat N]

Shapes mirror the autoencoder's hot path (batch 50) and the EM E-step.
"""

import argparse
import time

import numpy as np

from gmmil import kernels


def best_of(fn, repeat):
    fn()  # warm-up (includes numba compilation)
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def cases(rng):
    xp1 = rng.random((50, 29, 29, 1), dtype=np.float32)
    xp2 = rng.random((50, 15, 15, 32), dtype=np.float32)
    cols = rng.random((50, 7, 7, 3, 3, 64), dtype=np.float32)
    wlp = rng.normal(size=(4800, 5))
    x = rng.normal(size=(4800, 100))
    lab = rng.integers(0, 5, 4800)
    return {
        "im2col conv1 (50x29x29x1)": lambda f: f["im2col"](xp1, 3, 2, 14, 14),
        "im2col conv2 (50x15x15x32)": lambda f: f["im2col"](xp2, 3, 2, 7, 7),
        "col2im convT1 (50x7x7x3x3x64)": lambda f: f["col2im"](cols, 15, 15, 2),
        "logsumexp_rows (4800x5)": lambda f: f["logsumexp_rows"](wlp),
        "cluster_sums (4800x100, K=5)": lambda f: f["cluster_sums"](x, lab, 5),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)
    flavours = {
        name: {k: getattr(kernels, f"{k}_{name}") for k in ("im2col", "col2im", "logsumexp_rows", "cluster_sums")}
        for name in ("numpy", "numba")
    }
    rng = np.random.default_rng(0)
    print(f"{'kernel':34s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for label, call in cases(rng).items():
        t_np = best_of(lambda: call(flavours["numpy"]), args.repeat)
        t_nb = best_of(lambda: call(flavours["numba"]), args.repeat)
        print(f"{label:34s} {1e3 * t_np:10.3f} {1e3 * t_nb:10.3f} {t_np / t_nb:8.2f}")
    print(f"active flavour: {'numba' if kernels.USE_NUMBA else 'numpy'}")


if __name__ == "__main__":
    main()
