"""Check qubit count, gate count <= 3n and depth <= gate count of U_N for every N in a range.

The default range [3, 2**20] takes a few minutes on one core; --jobs splits it.
"""

import argparse
from concurrent.futures import ProcessPoolExecutor

from arbgrover.circuit import depth, gate_count
from arbgrover.stateprep import build_uniform_prep, num_qubits


def check_chunk(bounds):
    lo, hi = bounds
    worst = 0.0
    for N in range(lo, hi):
        c = build_uniform_prep(N)
        n = num_qubits(N)
        g = gate_count(c)
        if c.n_qubits != n or g > 3 * n or depth(c) > g:
            return N, worst
        worst = max(worst, g / n)
    return None, worst


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lo", type=int, default=3)
    parser.add_argument("--hi", type=int, default=1 << 20)
    parser.add_argument("--jobs", type=int, default=4)
    args = parser.parse_args()

    step = 1 << 14
    chunks = [(a, min(a + step, args.hi + 1)) for a in range(args.lo, args.hi + 1, step)]
    with ProcessPoolExecutor(args.jobs) as pool:
        results = list(pool.map(check_chunk, chunks))
    failures = [N for N, _ in results if N is not None]
    worst = max(w for _, w in results)
    if failures:
        raise SystemExit(f"bound violated at N={failures[0]}")
    print(f"N in [{args.lo}, {args.hi}]: all bounds hold; max gate_count/n = {worst:.3f}")


if __name__ == "__main__":
    main()
