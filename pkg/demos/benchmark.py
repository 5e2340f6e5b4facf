"""When does caching neighborhood intersections pay off?

The general variance algorithm repeatedly intersects the neighbor lists of
vertex pairs. On dense graphs the same pair comes up many times, so a
per-run cache removes most of the merge work; on sparse graphs the cache is
pure overhead. This demo times both variants across densities.
"""

import time

from crossvar import variance_general, variance_general_reuse
from crossvar.generators import erdos_renyi


def best_time(fn, g, reps=3):
    best = float("inf")
    for _ in range(reps):
        start = time.perf_counter()
        fn(g)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    print(f"{'n':>5} {'p':>5} {'plain (ms)':>11} {'cached (ms)':>12} {'ratio':>6}")
    for n in (20, 50, 100):
        for p in (0.05, 0.2, 0.5):
            g = erdos_renyi(n, p, seed=1)
            t_plain = best_time(variance_general, g)
            t_cached = best_time(variance_general_reuse, g)
            print(f"{n:>5} {p:>5} {1e3 * t_plain:>11.2f} {1e3 * t_cached:>12.2f} "
                  f"{t_plain / t_cached:>6.2f}")
    print("\nRatios above 1 mean the cache wins; expect growth with density.")


if __name__ == "__main__":
    main()
