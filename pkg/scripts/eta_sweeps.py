"""Write the two improvement sweeps (arbitrary N, and N = 2**(n-1)+1) as CSV."""

import argparse
from pathlib import Path

from arbgrover import analysis

ETA_LIMIT = (1 - 2**-0.5) * 100


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("results"))
    parser.add_argument("--n-max", type=int, default=1 << 12, help="upper end of the arbitrary-N sweep")
    parser.add_argument("--series-n", type=int, default=40, help="largest n in the 2**(n-1)+1 series")
    parser.add_argument("--m", type=int, default=1)
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    rows = analysis.sweep(3, args.n_max, args.m)
    (args.out_dir / "eta_sweep.csv").write_text(analysis.to_csv(rows))
    series = analysis.series_pow2plus1(3, args.series_n, args.m)
    (args.out_dir / "eta_pow2plus1.csv").write_text(analysis.to_csv(series))

    best = max((r for r in rows if r.eta_percent is not None), key=lambda r: r.eta_percent)
    print(f"sweep 3..{args.n_max}: {len(rows)} rows, max eta {best.eta_percent:.2f}% at N={best.N}")
    print(f"series n=3..{args.series_n} (analytic limit {ETA_LIMIT:.4f}%):")
    for r in series[-6:]:
        print(f"  n={r.n:<3} N={r.N:<15} eta={r.eta_percent:.4f}%  eta_asym={r.eta_asymptotic_percent:.4f}%")


if __name__ == "__main__":
    main()
