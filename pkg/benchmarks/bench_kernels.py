"""Time the compiled and numpy backends on random frameworks.

    python benchmarks/bench_kernels.py --sizes 12 16 20 --p 0.2 0.5 --repeat 3
"""

import argparse
import time

from condrank import available_backends, random_af, theta
from condrank.systemz import z_partition, zero_world_counts


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[12, 16, 18, 20, 22])
    parser.add_argument("--p", type=float, nargs="+", default=[0.15, 0.4])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    backends = available_backends()
    print(f"{'n':>3} {'p':>5} {'strata':>6} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for n in args.sizes:
        for p in args.p:
            kb = theta(random_af(n, p, False, args.seed))
            row, results = [], []
            for backend in backends:
                def run():
                    part = z_partition(kb, world_limit=max(n, 24), backend=backend)
                    return len(part.strata), zero_world_counts(part)
                elapsed, result = best_of(run, args.repeat)
                row.append(elapsed)
                results.append(result)
            assert all(r == results[0] for r in results), "backends disagree"
            speedup = row[-1] / row[0] if len(row) > 1 and row[0] else 1.0
            print(f"{n:>3} {p:>5.2f} {results[0][0]:>6} " + " ".join(f"{t:>9.3f}s" for t in row)
                  + f"   {speedup:6.1f}x")


if __name__ == "__main__":
    main()
