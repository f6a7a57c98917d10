# cyinertia/cli.py
"""
Command-line front end.

Words act right to left: in "R1 R2" the map R2 is applied first and R1 last,
as in the composition rho_1 o rho_2.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO

from . import __version__
from .algebra import MPoly
from .certify import (
    certify_inertia,
    certify_nontrivial,
    certify_off_x,
    certify_restriction,
    certify_tau_sigma_agree,
    eigen_check,
    order_check,
    trace_word,
    uc_oracle_check,
)
from .errors import DegenerateAxisError, HypersurfaceFormatError
from .geometry import (
    FiberMap,
    IndeterminatePoint,
    MultiQuadric,
    in_indeterminacy_union,
    make_rho,
    random_hypersurface,
    sample_on_x,
    trial_seed,
)
from .libs.hypfile import HypersurfaceFile
from .models import CertifyConfig, GenerationConfig, Status, Verdict
from .utils import handle_errors, parse_point, validate_count, validate_field
from .words import parse_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 3
EXIT_INTERNAL_ERROR = 4
WORD_ORDER_NOTE = (
    "Words act right to left: in 'R1 R2' the map R2 is applied first "
    "(the composition rho_1 o rho_2)."
)


class Report:
    """Collects the human-readable report and the machine records of a run"""

    def __init__(self, args: argparse.Namespace, stdout: TextIO):
        self.args = args
        self.stdout = stdout
        self.records: List[Dict[str, Any]] = []
        self.echo(f"cyinertia {__version__}")
        self.echo(f"command: {args.command}")
        if getattr(args, "seed", None) is not None:
            self.echo(f"seed: {args.seed}")

    def echo(self, line: str = "") -> None:
        self.stdout.write(line + "\n")

    def record(self, record: Dict[str, Any]) -> None:
        self.records.append(record)

    def verdict(self, verdict: Verdict) -> int:
        self.echo(verdict.format())
        self.echo()
        self.record(verdict.to_record())
        return verdict.exit_code

    def write(self) -> None:
        out = getattr(self.args, "out", None)
        if not out:
            return
        payload = {
            "version": __version__,
            "command": self.args.command,
            "seed": getattr(self.args, "seed", None),
            "records": self.records,
        }
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _load(path: str) -> MultiQuadric:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise HypersurfaceFormatError(f"Cannot read {path}: {e.strerror}")
    return HypersurfaceFile.loads(text).X


def _axes(args: argparse.Namespace, X: MultiQuadric) -> List[int]:
    if getattr(args, "axis", None) is not None:
        return [args.axis]
    return list(range(1, X.n_plus_1 + 1))


def _combine(codes: Sequence[int]) -> int:
    if Status.REFUTED.exit_code in codes:
        return Status.REFUTED.exit_code
    if Status.INCONCLUSIVE.exit_code in codes:
        return Status.INCONCLUSIVE.exit_code
    return EXIT_OK


def _config(args: argparse.Namespace) -> CertifyConfig:
    config = CertifyConfig()
    if getattr(args, "trials", None) is not None:
        config.trials = validate_count("--trials", args.trials)
    if getattr(args, "kmax", None) is not None:
        config.k_max = validate_count("--kmax", args.kmax)
    if getattr(args, "lift", None) is not None:
        config.lift = args.lift
    return config


# -- subcommands -----------------------------------------------------------


def cmd_gen(args: argparse.Namespace, report: Report) -> int:
    n = validate_count("--n", args.n)
    field = validate_field(args.field)
    config = GenerationConfig(coeff_bound=validate_count("--coeff-bound", args.coeff_bound))
    X = random_hypersurface(n + 1, field, args.seed, config)
    text = HypersurfaceFile(X).dumps()
    report.echo(f"n_plus_1: {X.n_plus_1}")
    report.echo(f"field: {field.spec}")
    report.echo(f"terms: {len(X.poly.terms)}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        report.echo(f"written: {args.out}")
    else:
        report.stdout.write(text)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    for axis in _axes(args, X):
        decomposition = X.decompose_axis(axis)
        report.echo(f"axis {axis}:")
        for j, part in enumerate(decomposition.parts):
            report.echo(f"  F{j} = {part.format()}")
        discriminant = decomposition.discriminant()
        report.echo(f"  discriminant = {discriminant.format()}")
        report.record(
            {
                "axis": axis,
                "F": [part.format() for part in decomposition.parts],
                "discriminant": discriminant.format(),
            }
        )
    return EXIT_OK


def cmd_genericity(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    result = X.genericity_check()
    report.echo(result.format())
    report.record({"passed": result.passed, "failures": result.failures})
    return EXIT_OK if result.passed else Status.REFUTED.exit_code


def cmd_apply(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    word = parse_word(args.word, X.n_plus_1)
    point = parse_point(args.point, X.field, X.n_plus_1)
    steps = trace_word(word, point, X, lift=args.lift or "tau")
    image = steps[-1]
    report.echo(f"word: {word}")
    report.echo(f"point: {point.format()}")
    if isinstance(image, IndeterminatePoint):
        report.echo(f"image: {image.format()}")
        report.record({"word": str(word), "point": point.format(), "image": None,
                       "indeterminate_letter": image.letter_index})
        return EXIT_OK
    report.echo(f"image: {image.format()}")
    report.record({"word": str(word), "point": point.format(), "image": image.format()})
    return EXIT_OK


def cmd_on_x(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    point = parse_point(args.point, X.field, X.n_plus_1)
    on_x = X.contains(point)
    record: Dict[str, Any] = {"point": point.format(), "on_x": on_x}
    report.echo(f"point: {point.format()}")
    report.echo(f"on X: {'yes' if on_x else 'no'}")
    if on_x:
        record["singular"] = X.singular_at(point)
        report.echo(f"singular: {'yes' if record['singular'] else 'no'}")
    try:
        record["indeterminate"] = in_indeterminacy_union(X, point)
        report.echo(f"in Ind(rho): {'yes' if record['indeterminate'] else 'no'}")
    except DegenerateAxisError as e:
        record["indeterminate"] = None
        report.echo(f"in Ind(rho): undefined ({e.message})")
    report.record(record)
    return EXIT_OK


def cmd_sample(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    count = validate_count("--count", args.count)
    for index in range(count):
        point = sample_on_x(X, args.axis, trial_seed(args.seed, index))
        report.echo(point.format())
        report.record({"index": index, "point": point.format()})
    return EXIT_OK


def _corrupted_rho(X: MultiQuadric, axis: int) -> FiberMap:
    rho = make_rho(X, axis)
    one = MPoly.constant(X.field, 1, rho.declared_degree)
    return FiberMap.build(axis, rho.A, rho.B + one, rho.C, rho.D)


def cmd_certify_inertia(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    config = _config(args)
    codes = []
    for axis in _axes(args, X):
        rho = _corrupted_rho(X, axis) if args.mutate else None
        codes.append(report.verdict(
            certify_inertia(X, axis, seed=args.seed, config=config, rho=rho)
        ))
    return _combine(codes)


def cmd_certify_agree(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    config = _config(args)
    return _combine([
        report.verdict(certify_tau_sigma_agree(X, axis, seed=args.seed, config=config))
        for axis in _axes(args, X)
    ])


def cmd_certify_off_x(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    config = _config(args)
    return _combine([
        report.verdict(certify_off_x(X, axis, seed=args.seed, config=config))
        for axis in _axes(args, X)
    ])


def cmd_certify_free(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    word = parse_word(args.word, X.n_plus_1)
    return report.verdict(certify_nontrivial(word, X, seed=args.seed, config=_config(args)))


def cmd_certify_restrict(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    word = parse_word(args.word, X.n_plus_1)
    return report.verdict(certify_restriction(word, X, seed=args.seed, config=_config(args)))


def cmd_order_check(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    config = _config(args)
    codes = []
    for axis in _axes(args, X):
        codes.append(report.verdict(order_check(X, axis, config=config)))
        if args.fiber_samples:
            periods = eigen_check(
                X, axis, trials=validate_count("--fiber-samples", args.fiber_samples),
                seed=args.seed, config=config,
            )
            report.echo(
                f"axis {axis} fiber periods: sampled {len(periods.periods)}, "
                f"skipped {periods.skipped}, minimum {periods.min_period}, "
                f"at most k_max: {periods.short_fibers}"
            )
            report.record({
                "axis": axis, "fiber_periods": list(periods.periods),
                "skipped": periods.skipped,
            })
    return _combine(codes)


def cmd_uc_check(args: argparse.Namespace, report: Report) -> int:
    X = _load(args.input)
    word = parse_word(args.word, X.n_plus_1)
    return report.verdict(uc_oracle_check(word, X, seed=args.seed, config=_config(args)))


COMMANDS = {
    "gen": cmd_gen,
    "decompose": cmd_decompose,
    "genericity": cmd_genericity,
    "apply": cmd_apply,
    "on-x": cmd_on_x,
    "sample": cmd_sample,
    "certify-inertia": cmd_certify_inertia,
    "certify-agree": cmd_certify_agree,
    "certify-off-x": cmd_certify_off_x,
    "certify-free": cmd_certify_free,
    "certify-restrict": cmd_certify_restrict,
    "order-check": cmd_order_check,
    "uc-check": cmd_uc_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyinertia",
        description="Inertia groups of (2,...,2) hypersurfaces in products of P^1.",
        epilog=WORD_ORDER_NOTE,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--version", action="version", version=f"cyinertia {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str, needs_input: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, epilog=WORD_ORDER_NOTE)
        if needs_input:
            p.add_argument("--in", dest="input", required=True, help="hypersurface file")
        p.add_argument("--out", help="write machine-readable records here")
        return p

    p = command("gen", "generate a random generic hypersurface", needs_input=False)
    p.add_argument("--n", type=int, required=True, help="dimension n; the file has n+1 factors")
    p.add_argument(
        "--field",
        default=f"Fp:{CertifyConfig.default_prime}",
        help="'Q' or 'Fp:<p>' (default: the certificate sampling prime)",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coeff-bound", type=int, default=GenerationConfig.coeff_bound)

    p = command("decompose", "print F_{i,0}, F_{i,1}, F_{i,2} and discriminants")
    p.add_argument("--axis", type=int)

    command("genericity", "run the genericity proxy check")

    p = command("apply", "apply a word to a point")
    p.add_argument("--word", required=True)
    p.add_argument("--point", required=True, help="e.g. '1,1' or '[0:1],2'")
    p.add_argument("--lift", choices=("tau", "sigma"))

    p = command("on-x", "test membership, singularity and indeterminacy at a point")
    p.add_argument("--point", required=True)

    p = command("sample", "sample points of X over F_p")
    p.add_argument("--axis", type=int, default=1)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)

    for name, help_text in (
        ("certify-inertia", "rho_i and its inverse fix X pointwise"),
        ("certify-agree", "tau_i and sigma_i agree on X"),
        ("certify-off-x", "rho_i keeps points off X off X"),
    ):
        p = command(name, help_text)
        p.add_argument("--axis", type=int)
        p.add_argument("--trials", type=int)
        p.add_argument("--seed", type=int, default=0)
        if name == "certify-inertia":
            p.add_argument("--mutate", action="store_true",
                           help="replace B of rho_i by B+1 (exercises REFUTED)")

    for name, help_text in (
        ("certify-free", "find a point moved by a reduced rho-word"),
        ("certify-restrict", "compare a word with the lift of its restriction to X"),
        ("uc-check", "compare an I-word's action with its reduced form"),
    ):
        p = command(name, help_text)
        p.add_argument("--word", required=True)
        p.add_argument("--trials", type=int)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--lift", choices=("tau", "sigma"))

    p = command("order-check", "rho_i^k is never scalar for k <= kmax")
    p.add_argument("--axis", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--fiber-samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Execute one subcommand and return its exit code."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT_ERROR
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)

    report = Report(args, stdout)
    result = handle_errors(COMMANDS[args.command])(args, report)
    if not result:
        sys.stderr.write(f"error [{result.error_code}]: {result.error}\n")
        if result.error_code == "UNEXPECTED_ERROR":
            logger.error("%s failed internally: %s", args.command, result.error)
            return EXIT_INTERNAL_ERROR
        return EXIT_INPUT_ERROR
    if args.command != "gen":
        report.write()
    return result.value


def main() -> None:
    sys.exit(run())
