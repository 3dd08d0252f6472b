"""Command-line front end.

Usage:
    bellzuk thresholds --max-n 6 --format csv
    bellzuk scan --n 2 --v-from 0.9 --v-to 1.0 --steps 11
    bellzuk correlations --v 0.85 --format json
    bellzuk verify --max-n 3

Exit status: 0 on success, 1 when a verification check fails, 2 on usage,
domain or size-limit errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Sequence

import numpy as np

from . import __version__
from . import analysis as an
from . import numerics as nm
from . import operators as ops
from .exceptions import BellZukError, DomainError
from .states import noisy_bell, tensor_power

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
VERIFY_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)


def fmt_value(x):
    """12 significant digits for reals; other values pass through."""
    if isinstance(x, (bool, np.bool_)) or x is None or isinstance(x, (int, str)):
        return x
    return float(f"{float(x):.12g}")


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def render(rows: list[dict], fmt: str) -> str:
    rows = [{k: fmt_value(v) for k, v in row.items()} for row in rows]
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    if rows:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(rows[0].keys())
        for row in rows:
            writer.writerow([_cell(v) for v in row.values()])
    return buf.getvalue()


def thresholds_rows(max_n: int) -> list[dict]:
    curve = an.threshold_curve(max_n)
    rows = [
        {"n_copies": n, "threshold": t, "violation_possible": t < 1.0}
        for n, t in curve.entries
    ]
    rows.append({"n_copies": "inf", "threshold": curve.asymptote, "violation_possible": True})
    return rows


def scan_rows(n: int, v_from: float, v_to: float, steps: int) -> list[dict]:
    if not 0.0 <= v_from <= v_to <= 1.0:
        raise DomainError(f"need 0 <= v_from <= v_to <= 1, got {v_from}, {v_to}")
    if steps < 1:
        raise DomainError("steps must be >= 1")
    grid = [v_from] if steps == 1 else np.linspace(v_from, v_to, steps).tolist()
    return [r.as_row() for r in an.scan(n, grid)]


def correlation_rows(v: float) -> list[dict]:
    rho = noisy_bell(v)
    rows = [
        {"kind": "correlation", "name": s, "value": an.correlation(rho, s), "bound": None, "violated": None}
        for s in ("XX", "XY", "YX", "YY")
    ]
    for rep in an.chsh_suite(rho, v):
        rows.append({"kind": "chsh", "name": rep.name, "value": rep.value, "bound": rep.bound, "violated": rep.violated})
    return rows


def _verify_checks(max_n: int) -> list[tuple[str, Callable[[], float]]]:
    """Named checks returning a deviation to be compared against the tolerance."""
    checks: list[tuple[str, Callable[[], float]]] = []
    rng = np.random.default_rng(0)

    def f_roundtrip():
        dev = 0.0
        for _ in range(10):
            f = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            dev = max(dev, nm.max_abs_diff(ops.f_combine(*ops.f_invert(f)), f))
        return dev

    checks.append(("f-roundtrip", f_roundtrip))

    for v in VERIFY_GRID:
        def chsh(v=v):
            vals = [r.value for r in an.chsh_suite(noisy_bell(v))]
            return nm.max_abs_diff(vals, [2 * v, 0, 0, 2 * v])
        checks.append((f"chsh-closed-form V={v}", chsh))

    for n in range(2, 2 * max_n + 1, 2):
        def builders(n=n):
            prod = ops.bell_mermin_product(n)
            devs = [nm.max_abs_diff(prod.b, ops.bell_mermin_closed_form(n))]
            for part in ops.two_block_partitions(n):
                rec = ops.bell_mermin_recursive(part)
                devs += [nm.max_abs_diff(prod.b, rec.b), nm.max_abs_diff(prod.b_prime, rec.b_prime)]
            return max(devs)

        def cube(n=n):
            b = ops.bell_mermin_product(n).b
            return nm.max_abs_diff(b @ b @ b, 2 ** (n - 1) * b)

        checks.append((f"builders-agree n={n}", builders))
        checks.append((f"b-cubed n={n}", cube))

    for n_copies in range(1, max_n + 1):
        for v in VERIFY_GRID:
            def dense_fact(n_copies=n_copies, v=v):
                return abs(an.mermin_expectation_dense(n_copies, v) - an.mermin_expectation_factorized(n_copies, v))

            def expansion(n_copies=n_copies, v=v):
                exp = ops.pauli_expansion(ops.bell_mermin_product(2 * n_copies))
                table = an.correlation_table(tensor_power(noisy_bell(v), n_copies))
                return abs(an.expectation_from_correlations(exp, table) - v**n_copies)

            def state(n_copies=n_copies, v=v):
                rho = tensor_power(noisy_bell(v), n_copies)
                herm = nm.max_abs_diff(rho.matrix, rho.matrix.conj().T)
                tr = abs(nm.trace(rho.matrix) - 1)
                psd = 0.0 if rho.is_psd() else 1.0
                return max(herm, tr, psd)

            checks.append((f"dense-vs-factorized N={n_copies} V={v}", dense_fact))
            checks.append((f"expansion-vs-closed-form N={n_copies} V={v}", expansion))
            checks.append((f"state-valid N={n_copies} V={v}", state))
    return checks


def verify_rows(max_n: int, tol: float) -> list[dict]:
    if max_n < 1:
        raise DomainError("max_n must be >= 1")
    nm.check_qubits(2 * max_n)
    rows = []
    for name, check in _verify_checks(max_n):
        dev = float(check())
        rows.append({"check": name, "deviation": dev, "tolerance": tol, "passed": dev <= tol})
    return rows


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("csv", "json"), default="csv")
    fmt.add_argument("--dense-cap", type=int, default=None,
                     help="qubit cap for dense operators (default: $DENSE_CAP or 12)")

    parser = argparse.ArgumentParser(prog="bellzuk", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"bellzuk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[fmt], help="run the cross-check suite")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("thresholds", parents=[fmt], help="threshold visibility table")
    p.add_argument("--max-n", type=int, default=10)

    p = sub.add_parser("scan", parents=[fmt], help="inequality reports over a visibility grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v-from", type=float, default=0.0)
    p.add_argument("--v-to", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=11)

    p = sub.add_parser("correlations", parents=[fmt], help="pair correlations and CHSH values")
    p.add_argument("--v", type=float, required=True)
    return parser


def _run(args) -> int:
    if args.command == "verify":
        rows = verify_rows(args.max_n, args.tol)
        sys.stdout.write(render(rows, args.format))
        failed = [r["check"] for r in rows if not r["passed"]]
        if failed:
            print(f"verification failed: {failed[0]}", file=sys.stderr)
            return EXIT_FAIL
        return EXIT_OK
    if args.command == "thresholds":
        if args.max_n < 1:
            raise DomainError("max_n must be >= 1")
        rows = thresholds_rows(args.max_n)
    elif args.command == "scan":
        rows = scan_rows(args.n, args.v_from, args.v_to, args.steps)
    else:
        rows = correlation_rows(args.v)
    sys.stdout.write(render(rows, args.format))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.dense_cap is not None:
            with nm.dense_cap_override(args.dense_cap):
                return _run(args)
        return _run(args)
    except BellZukError as exc:
        print(f"bellzuk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
