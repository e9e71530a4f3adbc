"""Command-line entry point: ``arbgrover {prepare,search,compare,analyze,export-qasm}``.

Exit codes: 0 success, 2 usage or domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from arbgrover import analysis, grover, qcore, stateprep
from arbgrover.circuit import depth, gate_count, to_qasm3

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3

FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    pass


def _parse_marked(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--marked must be comma-separated integers, got {text!r}")
    if not values:
        raise UsageError("--marked is empty")
    return values


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"expected a range FROM..TO, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"expected integer bounds in {text!r}")


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _table(pairs: Sequence[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in pairs)


def _fmt_opt(value: Optional[float], spec: str) -> str:
    return "" if value is None else format(value, spec)


def _emit(fmt: str, pairs: list[tuple[str, object]], record: dict, csv_text: Optional[str] = None) -> None:
    if fmt == "json":
        print(json.dumps(record, indent=2, sort_keys=False))
    elif fmt == "csv":
        if csv_text is None:
            keys = list(record)
            vals = ["" if record[k] is None else str(record[k]) for k in keys]
            csv_text = ",".join(keys) + "\n" + ",".join(vals) + "\n"
        sys.stdout.write(csv_text)
    else:
        print(_table(pairs))


def cmd_prepare(args: argparse.Namespace) -> int:
    N = args.n_items
    if N < 2:
        raise UsageError(f"--n-items must be >= 2, got {N}")
    c = stateprep.build_uniform_prep(N)
    pairs: list[tuple[str, object]] = [
        ("N", N),
        ("qubits", c.n_qubits),
        ("gates", gate_count(c)),
        ("depth", depth(c)),
    ]
    record: dict = {"N": N, "qubits": c.n_qubits, "gate_count": gate_count(c), "depth": depth(c)}
    if args.probabilities:
        if c.n_qubits > qcore.MAX_QUBITS:
            raise UsageError(f"simulation needs {c.n_qubits} qubits; the cap is {qcore.MAX_QUBITS}")
        p = qcore.probabilities(stateprep.prepare_uniform(N))
        inside = p[:N]
        leakage = float(p[N:].sum())
        pmax, pmin = float(inside.max()), float(inside.min())
        pairs += [
            ("p_max", f"{pmax:.17g}"),
            ("p_min", f"{pmin:.17g}"),
            ("p_max-p_min", f"{pmax - pmin:.3e}"),
            ("leakage", f"{leakage:.3e}"),
        ]
        record.update(p_max=pmax, p_min=pmin, p_spread=pmax - pmin, leakage=leakage)
    if args.emit_qasm:
        _write(args.emit_qasm, to_qasm3(c))
        pairs.append(("qasm", args.emit_qasm))
        record["qasm"] = args.emit_qasm
    _emit(args.format, pairs, record)
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    marked = _parse_marked(args.marked)
    try:
        spec = grover.SearchSpec(args.n_items, frozenset(marked))
    except ValueError as exc:
        raise UsageError(str(exc))
    if spec.n_qubits > qcore.MAX_QUBITS:
        raise UsageError(f"simulation needs {spec.n_qubits} qubits; the cap is {qcore.MAX_QUBITS}")
    if args.iterations is not None and args.iterations < 0:
        raise UsageError("--iterations must be >= 0")
    if args.shots is not None and args.shots < 1:
        raise UsageError("--shots must be >= 1")
    report = grover.run_search(spec, k=args.iterations, shots=args.shots, seed=args.seed)
    record = report.as_dict()
    pairs: list[tuple[str, object]] = [
        ("N", report.N),
        ("qubits", report.n),
        ("M", report.M),
        ("iterations", report.iterations_used),
        ("oracle_calls", report.oracle_calls),
        ("success", f"{report.success_probability:.6f}"),
        ("theory", f"{report.theoretical_probability:.6f}"),
        ("T_old", report.t_old),
        ("T_new", report.t_new),
        ("eta_percent", _fmt_opt(report.eta_percent, ".2f")),
    ]
    if report.histogram is not None:
        top = sorted(report.histogram.items(), key=lambda kv: (-kv[1], kv[0]))[:5]
        pairs.append(("shots", report.shots))
        pairs.append(("seed", report.seed))
        pairs.append(("top_counts", " ".join(f"{i}:{c}" for i, c in top)))
    csv_text = None
    if args.format == "csv":
        flat = {k: v for k, v in record.items() if k not in ("histogram", "marked")}
        flat["marked"] = ";".join(str(x) for x in report.marked)
        keys = list(flat)
        csv_text = ",".join(keys) + "\n" + ",".join("" if flat[k] is None else str(flat[k]) for k in keys) + "\n"
    _emit(args.format, pairs, record, csv_text)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    try:
        row = analysis.ImprovementRow.compute(args.n_items, args.m)
    except ValueError as exc:
        raise UsageError(str(exc))
    pairs: list[tuple[str, object]] = [
        ("N", row.N),
        ("n", row.n),
        ("M", row.M),
        ("T_old", row.t_old),
        ("T_new", row.t_new),
        ("f", _fmt_opt(row.f, ".4f")),
        ("eta_percent", _fmt_opt(row.eta_percent, ".2f")),
        ("f_asymptotic", f"{row.f_asymptotic:.6f}"),
        ("eta_asymptotic_percent", f"{row.eta_asymptotic_percent:.4f}"),
    ]
    _emit(args.format, pairs, row.as_dict(), analysis.to_csv([row]))
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    if (args.sweep is None) == (args.series is None):
        raise UsageError("give exactly one of --sweep FROM..TO or --series pow2plus1 --n FROM..TO")
    try:
        if args.sweep is not None:
            lo, hi = _parse_range(args.sweep)
            rows = analysis.sweep(lo, hi, args.m)
        else:
            if args.n is None:
                raise UsageError("--series needs --n FROM..TO")
            lo, hi = _parse_range(args.n)
            rows = analysis.series_pow2plus1(lo, hi, args.m)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not rows:
        raise UsageError("range produced no rows")
    _write(args.out, analysis.to_csv(rows))
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_export_qasm(args: argparse.Namespace) -> int:
    N = args.n_items
    if N < 2:
        raise UsageError(f"--n-items must be >= 2, got {N}")
    n = stateprep.num_qubits(N)
    if args.block in ("oracle", "grover"):
        if args.marked is None:
            raise UsageError(f"--block {args.block} requires --marked")
        try:
            spec = grover.SearchSpec(N, frozenset(_parse_marked(args.marked)))
        except ValueError as exc:
            raise UsageError(str(exc))
    if args.block == "prep":
        c = stateprep.build_uniform_prep(N)
    elif args.block == "zero-reflection":
        c = grover.build_zero_reflection(n).with_label("zero-reflection", N=N)
    elif args.block == "oracle":
        c = grover.build_oracle(spec)
    else:
        c = grover.grover_operator(stateprep.build_uniform_prep(N), grover.build_oracle(spec)).circuit
    _write(args.out, to_qasm3(c))
    print(f"wrote {c.label} block ({c.n_qubits} qubits, {gate_count(c)} gates, depth {depth(c)}) to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arbgrover",
        description="Grover search over arbitrary N with ancilla-free uniform-state preparation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prepare", help="build the uniform-superposition circuit U_N")
    p.add_argument("--n-items", type=int, required=True)
    p.add_argument("--probabilities", action="store_true", help="simulate and report uniformity and leakage")
    p.add_argument("--emit-qasm", metavar="PATH")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_prepare)

    p = sub.add_parser("search", help="run Grover search and report success probability")
    p.add_argument("--n-items", type=int, required=True)
    p.add_argument("--marked", required=True, help="comma-separated marked indices")
    p.add_argument("--iterations", type=int)
    p.add_argument("--shots", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("compare", help="oracle calls for rounded-up vs exact search space")
    p.add_argument("--n-items", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--format", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("analyze", help="write improvement sweeps as CSV")
    p.add_argument("--sweep", metavar="FROM..TO")
    p.add_argument("--series", choices=("pow2plus1",))
    p.add_argument("--n", metavar="FROM..TO")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("export-qasm", help="write a circuit block as OpenQASM 3")
    p.add_argument("--block", choices=("prep", "oracle", "zero-reflection", "grover"), required=True)
    p.add_argument("--n-items", type=int, required=True)
    p.add_argument("--marked")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_qasm)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"arbgrover {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"arbgrover {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
