"""Command-line interface: decompose a matrix file, verify a circuit, bench.

Exit codes: 0 success, 1 verification failure, 2 bad input (unreadable file,
malformed text, dimension or unitarity problems, bad argument ranges).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .circuit import Circuit, GateKind, matrix_to_circuit
from .emitters import (
    CircuitFormatError,
    emit_json,
    emit_qasm3,
    emit_qsharp,
    parse_json,
)
from .matrix import QUBIT_LIMIT, haar_random_unitary, load_matrix
from .simulator import default_verification_tol, verify


@dataclass(frozen=True)
class GateCensus:
    """Per-kind gate counts for one circuit."""

    n: int
    x: int
    ry: int
    rz: int
    r1: int
    fcx: int

    @property
    def total(self) -> int:
        return self.x + self.ry + self.rz + self.r1 + self.fcx

    @property
    def ratio(self) -> float:
        """Total gate count relative to 4**n."""
        return self.total / 4**self.n


def census(circuit: Circuit) -> GateCensus:
    """Count gates by kind (X and FCX tallied separately)."""
    counts = {kind: 0 for kind in GateKind}
    for gate in circuit.gates:
        counts[gate.kind] += 1
    return GateCensus(
        n=circuit.n,
        x=counts[GateKind.X],
        ry=counts[GateKind.FCRY],
        rz=counts[GateKind.FCRZ],
        r1=counts[GateKind.FCR1],
        fcx=counts[GateKind.FCX],
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unisynth",
        description="Compile unitary matrices into X and fully-controlled "
        "Ry/Rz/R1 gates, verify circuits, and tabulate gate counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dec = sub.add_parser("decompose", help="compile a matrix file to a circuit")
    dec.add_argument("--input", "-i", required=True, help="matrix JSON file")
    dec.add_argument("--output", "-o", help="write the circuit here (default stdout)")
    dec.add_argument(
        "--backend",
        choices=("qsharp", "qasm3", "json"),
        default="qsharp",
        help="output format (default qsharp)",
    )
    dec.add_argument(
        "--no-optimize",
        action="store_true",
        help="skip the X-cancellation and identity-rotation passes",
    )
    dec.add_argument(
        "--tol",
        type=float,
        help="override both the input unitarity and verification tolerances",
    )
    dec.add_argument(
        "--name", default="ApplyUnitary", help="Q# operation name (qsharp backend)"
    )
    dec.set_defaults(func=_cmd_decompose)

    ver = sub.add_parser("verify", help="simulate a circuit against a matrix file")
    ver.add_argument("--input", "-i", required=True, help="matrix JSON file")
    ver.add_argument("--circuit", "-c", required=True, help="circuit JSON file")
    ver.add_argument("--tol", type=float, help="Frobenius pass threshold")
    ver.set_defaults(func=_cmd_verify)

    ben = sub.add_parser(
        "bench", help="gate-count study over seeded Haar-random unitaries"
    )
    ben.add_argument("--n-min", type=int, default=1, help="smallest qubit count")
    ben.add_argument("--n-max", type=int, default=6, help="largest qubit count")
    ben.add_argument(
        "--seeds-per-n", type=int, default=1, help="matrices sampled per size"
    )
    ben.add_argument("--seed", type=int, default=42, help="base RNG seed")
    ben.add_argument("--output", "-o", help="also write the table as CSV here")
    ben.set_defaults(func=_cmd_bench)
    return parser


def _read_matrix(path: str, tol: float | None = None):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read matrix file: {exc}") from None
    try:
        return load_matrix(text, tol)
    except ValueError as exc:
        raise type(exc)(f"{path}: {exc}") from None


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_decompose(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.input, args.tol)
    circuit = matrix_to_circuit(matrix, optimize=not args.no_optimize, tol=args.tol)
    if args.backend == "qsharp":
        text = emit_qsharp(circuit, operation_name=args.name)
    elif args.backend == "qasm3":
        text = emit_qasm3(circuit)
    else:
        text = emit_json(circuit) + "\n"
    _write_output(text, args.output)
    report = verify(matrix, circuit, tol=args.tol)
    stats = census(circuit)
    print(
        f"gates: x={stats.x} ry={stats.ry} rz={stats.rz} r1={stats.r1} "
        f"fcx={stats.fcx} total={stats.total}",
        file=sys.stderr,
    )
    tol = args.tol if args.tol is not None else default_verification_tol(circuit.n)
    status = "passed" if report.passed else "FAILED"
    print(
        f"verification {status}: frobenius={report.frobenius_error:.3e} "
        f"max_entry={report.max_abs_entry_error:.3e} tol={tol:.1e}",
        file=sys.stderr,
    )
    return 0 if report.passed else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.input)
    try:
        text = Path(args.circuit).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read circuit file: {exc}") from None
    try:
        circuit = parse_json(text)
    except CircuitFormatError as exc:
        raise CircuitFormatError(f"{args.circuit}: {exc}") from None
    report = verify(matrix, circuit, tol=args.tol)
    status = "passed" if report.passed else "FAILED"
    print(
        f"verification {status}: frobenius={report.frobenius_error:.3e} "
        f"max_entry={report.max_abs_entry_error:.3e} gates={report.gate_count}"
    )
    return 0 if report.passed else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    if not 1 <= args.n_min <= args.n_max <= QUBIT_LIMIT:
        raise ValueError(
            f"need 1 <= n-min <= n-max <= {QUBIT_LIMIT}, "
            f"got {args.n_min}..{args.n_max}"
        )
    if args.seeds_per_n < 1:
        raise ValueError("seeds-per-n must be positive")
    rows: list[GateCensus] = []
    for n in range(args.n_min, args.n_max + 1):
        baseline: GateCensus | None = None
        for offset in range(args.seeds_per_n):
            matrix = haar_random_unitary(n, args.seed + offset)
            circuit = matrix_to_circuit(matrix)
            report = verify(matrix, circuit)
            if not report.passed:
                print(
                    f"error: verification failed at n={n} seed={args.seed + offset}: "
                    f"frobenius={report.frobenius_error:.3e}",
                    file=sys.stderr,
                )
                return 1
            stats = census(circuit)
            if baseline is None:
                baseline = stats
            elif stats != baseline:
                # generic inputs share one census; a mismatch is worth a note
                print(
                    f"note: census varies across seeds at n={n}", file=sys.stderr
                )
        rows.append(baseline)
    header = ("n", "x", "ry", "rz", "r1", "fcx", "total", "ratio")
    widths = (3, 8, 8, 8, 4, 4, 9, 7)
    print("".join(h.rjust(w) for h, w in zip(header, widths)))
    for row in rows:
        cells = (row.n, row.x, row.ry, row.rz, row.r1, row.fcx, row.total)
        line = "".join(str(c).rjust(w) for c, w in zip(cells, widths))
        print(line + f"{row.ratio:.2f}".rjust(widths[-1]))
    if args.output:
        lines = [",".join(header)]
        for row in rows:
            lines.append(
                f"{row.n},{row.x},{row.ry},{row.rz},{row.r1},{row.fcx},"
                f"{row.total},{row.ratio:.2f}"
            )
        Path(args.output).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        # covers matrix/circuit format, dimension, unitarity and range errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
