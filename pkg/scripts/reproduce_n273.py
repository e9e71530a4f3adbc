"""Walk through the N=273, marked |9> instance: blocks, iteration counts, success curve."""

import argparse

from arbgrover import SearchSpec, analysis, run_search
from arbgrover.circuit import depth, gate_count
from arbgrover.grover import build_oracle, build_zero_reflection, success_trajectory, theoretical_success
from arbgrover.stateprep import build_uniform_prep


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-items", type=int, default=273)
    parser.add_argument("--marked", type=int, nargs="+", default=[9])
    parser.add_argument("--shots", type=int, default=4096)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    spec = SearchSpec(args.n_items, frozenset(args.marked))
    blocks = {
        "U_N (prep)": build_uniform_prep(spec.N),
        "U_P (oracle)": build_oracle(spec),
        "U_0 (zero reflection)": build_zero_reflection(spec.n_qubits),
    }
    print(f"N={spec.N}  qubits={spec.n_qubits}  M={spec.M}")
    for name, c in blocks.items():
        print(f"  {name:<22} gates={gate_count(c):>3}  depth={depth(c):>3}")

    row = analysis.ImprovementRow.compute(spec.N, spec.M)
    print(f"T_old={row.t_old}  T_new={row.t_new}  f={row.f:.4f}  eta={row.eta_percent:.2f}%")

    traj = success_trajectory(spec, row.t_old)
    print("k   simulated   sin^2((2k+1)theta)")
    for k, p in enumerate(traj):
        print(f"{k:<3} {p:.9f}  {theoretical_success(spec.N, spec.M, k):.9f}")

    report = run_search(spec, shots=args.shots, seed=args.seed)
    hits = sum(report.histogram.get(x, 0) for x in spec.marked)
    print(f"{report.shots} shots (seed {report.seed}): {hits} on marked items")


if __name__ == "__main__":
    main()
