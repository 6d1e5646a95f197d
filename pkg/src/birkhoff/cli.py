"""Command-line interface.

Subcommands: ``analyze`` (bounds + spectrum report for one matrix),
``verify`` (random-ensemble bound verification), ``certify`` (certified
Perron solve with oracle cross-check), ``complex-probe`` (neighborhood
contraction and metric-equivalence sweep). Matrices are headerless CSV,
one row per line. Every document embeds the tool version, the command, the
full config, the seed, and the input hash; re-running a command with the
same config reproduces the output byte-for-byte (modulo the version).

Exit codes: 0 success, 1 usage/input error, 2 verification failure,
3 unconverged certification.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .contraction import (
    birkhoff_coefficient,
    hopf_bound,
    min_cross_ratio,
    ostrowski_bound,
    sample_complex_contraction_ratio,
)
from .exceptions import BirkhoffError, MatrixParseError
from .metrics import hilbert_distance, metric_equivalence_ratios
from .simplex import random_positive_matrix, random_simplex_vector
from .solver import perron_power_iteration, verify_bounds
from .spectral import eigenvalues, spectral_report
from .validation import check_positive_matrix

# Interior points per complex-probe metric-equivalence sample.
_PROBE_CENTERS = 20


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None = None
    output_path: str | None = None
    n: int | None = None
    count: int | None = None
    seed: int | None = None
    lo: float | None = None
    hi: float | None = None
    eps_list: tuple[float, ...] | None = None
    tol: float | None = None
    max_iter: int | None = None
    format: str = "json"

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["eps_list"] is not None:
            d["eps_list"] = list(d["eps_list"])
        return d


def parse_matrix_file(path: str) -> np.ndarray:
    """Load a headerless CSV matrix and validate strict positivity."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.strip() for line in fh]
    rows: list[list[float]] = []
    width = None
    for r, line in enumerate(lines):
        if not line:
            continue
        cells = line.split(",")
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise MatrixParseError(
                f"row {r}: expected {width} columns, got {len(cells)}", row=r
            )
        parsed = []
        for c, cell in enumerate(cells):
            try:
                parsed.append(float(cell))
            except ValueError:
                raise MatrixParseError(
                    f"row {r}, column {c}: {cell!r} is not a number", row=r, col=c
                ) from None
        rows.append(parsed)
    if not rows:
        raise MatrixParseError("file contains no rows")
    return check_positive_matrix(rows)


def canonical_csv(A: np.ndarray) -> str:
    """Shortest round-trip CSV text of a matrix; basis of the input hash."""
    return "".join(",".join(repr(float(x)) for x in row) + "\n" for row in A)


def matrix_sha256(A: np.ndarray) -> str:
    return hashlib.sha256(canonical_csv(A).encode("utf-8")).hexdigest()


def _complex_pairs(values: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in values]


def _document(config: RunConfig, input_hash: str | None, payload: dict) -> dict:
    doc = {
        "version": __version__,
        "command": config.command,
        "config": config.to_dict(),
        "seed": config.seed,
        "input_sha256": input_hash,
    }
    doc.update(payload)
    return doc


def _emit(text: str, output_path: str | None) -> None:
    if output_path is None:
        sys.stdout.write(text)
    else:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(doc: dict, output_path: str | None) -> None:
    _emit(json.dumps(doc, indent=2) + "\n", output_path)


def cmd_analyze(config: RunConfig) -> int:
    A = parse_matrix_file(config.input_path)
    digest = matrix_sha256(A)
    report = verify_bounds(A)
    vals = eigenvalues(A)
    spectrum = spectral_report(A)
    payload = {
        "matrix_sha256": digest,
        "n": int(A.shape[0]),
        "m": float(A.min()),
        "M": float(A.max()),
        "phi": min_cross_ratio(A),
        "tau": report.tau,
        "hopf": report.hopf,
        "ostrowski": report.ostrowski,
        "eigenvalues": _complex_pairs(vals),
        "rho": spectrum.rho,
        "kappa": report.kappa,
        "bound_holds": report.bound_holds,
        "chain_holds": report.chain_holds,
        "slack_kappa_tau": report.slack_kappa_tau,
    }
    _emit_json(_document(config, digest, payload), config.output_path)
    return 0 if report.bound_holds else 2


def cmd_verify(config: RunConfig) -> int:
    if not 2 <= config.n <= 64:
        raise UsageError(f"--n must be in [2, 64], got {config.n}")
    if config.count < 1:
        raise UsageError(f"--count must be >= 1, got {config.count}")
    if config.lo <= 0 or config.lo >= config.hi:
        raise UsageError(f"need 0 < lo < hi, got lo={config.lo}, hi={config.hi}")
    children = np.random.SeedSequence(config.seed).generate_state(
        config.count, dtype=np.uint64
    )
    slacks = np.empty(config.count)
    failures = 0
    for k in range(config.count):
        A = random_positive_matrix(config.n, config.lo, config.hi, int(children[k]))
        report = verify_bounds(A)
        slacks[k] = report.slack_kappa_tau
        if not report.bound_holds:
            failures += 1
    counts, edges = np.histogram(slacks, bins=10)
    payload = {
        "count": config.count,
        "failures": failures,
        "min_slack": float(slacks.min()),
        "max_slack": float(slacks.max()),
        "mean_slack": float(slacks.mean()),
        "histogram": {
            "bin_edges": [float(e) for e in edges],
            "counts": [int(c) for c in counts],
        },
    }
    _emit_json(_document(config, None, payload), config.output_path)
    return 2 if failures else 0


def cmd_certify(config: RunConfig) -> int:
    if not config.tol > 0:
        raise UsageError(f"--tol must be > 0, got {config.tol}")
    A = parse_matrix_file(config.input_path)
    digest = matrix_sha256(A)
    cert = perron_power_iteration(A, tol=config.tol, max_iter=config.max_iter)
    spectrum = spectral_report(A)
    oracle_distance = hilbert_distance(cert.vector, spectrum.perron_vector)
    payload = {
        "matrix_sha256": digest,
        "vector": [float(x) for x in cert.vector],
        "rho": cert.rho,
        "rho_bracket": [cert.rho_bracket[0], cert.rho_bracket[1]],
        "iterations": cert.iterations,
        "step_distance": cert.step_distance,
        "certified_radius": cert.certified_radius,
        "apriori_radius": cert.apriori_radius,
        "tau": cert.tau,
        "converged": cert.converged,
        "oracle_rho": spectrum.rho,
        "oracle_distance": oracle_distance,
    }
    _emit_json(_document(config, digest, payload), config.output_path)
    if not cert.converged:
        return 3
    ok = (
        cert.certified_radius <= config.tol
        and oracle_distance <= cert.certified_radius + 1e-9
    )
    return 0 if ok else 2


def cmd_complex_probe(config: RunConfig) -> int:
    for eps in config.eps_list:
        if not 0.0 < eps <= 0.01:
            raise UsageError(f"--eps values must be in (0, 0.01], got {eps}")
    if config.count < 1:
        raise UsageError(f"--count must be >= 1, got {config.count}")
    A = parse_matrix_file(config.input_path)
    digest = matrix_sha256(A)
    n = A.shape[0]
    tau = birkhoff_coefficient(A)
    children = np.random.SeedSequence(config.seed).generate_state(
        2 * len(config.eps_list) + _PROBE_CENTERS, dtype=np.uint64
    )
    centers = [
        random_simplex_vector(n, int(children[k])) for k in range(_PROBE_CENTERS)
    ]
    rows = []
    for k, eps in enumerate(config.eps_list):
        ratio = sample_complex_contraction_ratio(
            A, eps, config.count, int(children[_PROBE_CENTERS + 2 * k])
        )
        lo, hi = metric_equivalence_ratios(
            centers, eps, config.count, int(children[_PROBE_CENTERS + 2 * k + 1])
        )
        rows.append(
            {
                "eps": float(eps),
                "max_ratio": ratio,
                "excess_over_tau": ratio - tau,
                "de_dh_min": lo,
                "de_dh_max": hi,
            }
        )
    if config.format == "csv":
        lines = ["eps,max_ratio,excess_over_tau,de_dh_min,de_dh_max"]
        for row in rows:
            lines.append(
                ",".join(
                    repr(row[key])
                    for key in (
                        "eps",
                        "max_ratio",
                        "excess_over_tau",
                        "de_dh_min",
                        "de_dh_max",
                    )
                )
            )
        _emit("\n".join(lines) + "\n", config.output_path)
    else:
        payload = {"matrix_sha256": digest, "tau": tau, "rows": rows}
        _emit_json(_document(config, digest, payload), config.output_path)
    ordered = sorted(rows, key=lambda row: row["eps"])
    smallest, largest = ordered[0], ordered[-1]
    ok = all(row["max_ratio"] <= 1.0 for row in rows) and (
        smallest["excess_over_tau"] <= largest["excess_over_tau"] + 1e-3
    )
    return 0 if ok else 2


class UsageError(BirkhoffError, ValueError):
    """Invalid command-line arguments."""


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default; 2 is reserved for
    # verification failures here, so route usage problems to exit 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(1)


def _eps_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(",") if part)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad eps list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("eps list is empty")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="birkhoff", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="bounds and spectrum for one matrix")
    p_analyze.add_argument("--input", required=True)
    p_analyze.add_argument("--output")

    p_verify = sub.add_parser("verify", help="random-ensemble bound verification")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--count", type=int, required=True)
    p_verify.add_argument("--seed", type=int, required=True)
    p_verify.add_argument("--lo", type=float, required=True)
    p_verify.add_argument("--hi", type=float, required=True)
    p_verify.add_argument("--output")

    p_certify = sub.add_parser("certify", help="certified Perron solve")
    p_certify.add_argument("--input", required=True)
    p_certify.add_argument("--tol", type=float, required=True)
    p_certify.add_argument("--max-iter", type=int, default=10_000)
    p_certify.add_argument("--output")

    p_probe = sub.add_parser(
        "complex-probe", help="neighborhood contraction and metric-equivalence sweep"
    )
    p_probe.add_argument("--input", required=True)
    p_probe.add_argument("--eps", type=_eps_list, required=True)
    p_probe.add_argument("--count", type=int, required=True)
    p_probe.add_argument("--seed", type=int, required=True)
    p_probe.add_argument("--format", choices=("json", "csv"), default="json")
    p_probe.add_argument("--output")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "analyze":
        return RunConfig("analyze", input_path=args.input, output_path=args.output)
    if args.command == "verify":
        return RunConfig(
            "verify",
            output_path=args.output,
            n=args.n,
            count=args.count,
            seed=args.seed,
            lo=args.lo,
            hi=args.hi,
        )
    if args.command == "certify":
        return RunConfig(
            "certify",
            input_path=args.input,
            output_path=args.output,
            tol=args.tol,
            max_iter=args.max_iter,
        )
    return RunConfig(
        "complex-probe",
        input_path=args.input,
        output_path=args.output,
        count=args.count,
        seed=args.seed,
        eps_list=args.eps,
        format=args.format,
    )


_COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "certify": cmd_certify,
    "complex-probe": cmd_complex_probe,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = _config_from_args(args)
    try:
        return _COMMANDS[config.command](config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (BirkhoffError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
