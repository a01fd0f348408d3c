"""Compare the compiled and pure-Python search kernels on the same bounds.

    python benchmarks/bench_scan.py --x-max 100000 --k-max 4 --n-max 10
"""
import argparse
import time

from dioph11 import oracle, scan


def timed(bounds, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = oracle.brute_force_search(bounds, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--x-max", type=int, default=10 ** 5)
    ap.add_argument("--k-max", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    bounds = oracle.SearchBounds(args.x_max, args.k_max, args.n_max)

    if scan.BACKEND != "cython":
        print("compiled kernel not built; only the pure-Python kernel is available")
    rows = []
    for backend in ("python", "cython"):
        if backend == "cython" and scan.BACKEND != "cython":
            continue
        secs, result = timed(bounds, backend, 1 if backend == "python" else args.repeat)
        rows.append((backend, secs, result))
        print(f"{backend:>7}: {secs:8.3f} s  ({len(result)} solutions)")
    if len(rows) == 2:
        assert rows[0][2] == rows[1][2], "kernels disagree"
        print(f"speedup: {rows[0][1] / rows[1][1]:.1f}x")


if __name__ == "__main__":
    main()
