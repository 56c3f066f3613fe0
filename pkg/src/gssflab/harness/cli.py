# -*- coding:utf-8 -*-
"""``gssf-lab`` command line: catalogs, model validation, theorems, equivalence."""

import argparse
import logging
import sys
from typing import List, Optional

import torch

from gssflab.contact import space_names, validate_space
from gssflab.errors import ConfigError, GssfLabError
from gssflab.submanifold import EMBEDDING_SPACES, GEOMETRIC, SYNTHETIC, builtin_embedding
from gssflab.utils import logger

from .config import HarnessConfig, Scenario, load_config
from .equivalence import equivalence_matrix
from .report import FAIL, FORWARD, IDENTITY, PASS, VerificationReport, dump_report, write_report
from .theorems import run_theorem

__all__ = ["main", "build_parser"]

USAGE_EXIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gssf-lab", description="Generalized Sasakian-space-form engine and theorem harness")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging; progress bars")
    parser.add_argument("--config", default=None, help="key=value configuration file")
    commands = parser.add_subparsers(dest="command", required=True)

    spaces = commands.add_parser("spaces", help="built-in model spaces")
    spaces.add_argument("action", choices=["list"])
    embeddings = commands.add_parser("embeddings", help="built-in embeddings")
    embeddings.add_argument("action", choices=["list"])

    validate = commands.add_parser("validate", help="check a model against the GSSF curvature identities")
    validate.add_argument("--space", required=True)
    validate.add_argument("--samples", type=int)
    validate.add_argument("--tol", type=float)
    validate.add_argument("--seed", type=int)
    validate.add_argument("--out")

    theorem = commands.add_parser("theorem", help="verify one totally-geodesic characterisation")
    theorem.add_argument("--id", required=True, dest="theorem_id")
    theorem.add_argument("--space", required=True)
    source = theorem.add_mutually_exclusive_group()
    source.add_argument("--embedding")
    source.add_argument("--synthetic", action="store_true", help="use a seeded synthetic σ")
    theorem.add_argument("--L1", type=float, dest="L1")
    theorem.add_argument("--samples", type=int)
    theorem.add_argument("--tol", type=float)
    theorem.add_argument("--seed", type=int)
    theorem.add_argument("--mode", choices=["forward", "identity"], default="forward")
    theorem.add_argument("--out", required=True)

    equivalence = commands.add_parser("equivalence", help="evaluate the list of equivalent conditions")
    equivalence.add_argument("--space", required=True)
    equivalence.add_argument("--embedding", required=True)
    equivalence.add_argument("--L1", type=float, dest="L1")
    equivalence.add_argument("--samples", type=int)
    equivalence.add_argument("--tol", type=float)
    equivalence.add_argument("--seed", type=int)
    equivalence.add_argument("--out")
    return parser


def _configure(verbose):
    level = logging.DEBUG if verbose > 1 else logging.INFO if verbose == 1 else logging.WARNING
    logging.getLogger("gssflab").setLevel(level)
    torch.set_num_threads(1)
    torch.use_deterministic_algorithms(True)


def _emit(report: VerificationReport, out):
    if out:
        write_report(report, out)
        print("{0}: {1} (max residual {2:.3e}) -> {3}".format(report.theorem_id, report.verdict, report.max_residual, out))
    else:
        sys.stdout.write(dump_report(report))
    return report.exit_code


def _list_spaces(config):
    print("{0:<22}{1:>4}  {2:<28}{3:>6}{4:>6}".format("name", "dim", "(f1, f2, f3)", "alpha", "beta"))
    for name in space_names():
        s = config.space(name)
        params = "({0:g}, {1:g}, {2:g})".format(*s.params.as_tuple())
        print("{0:<22}{1:>4}  {2:<28}{3:>6g}{4:>6g}".format(name, s.dim, params, s.alpha, s.beta))
    return 0


def _list_embeddings():
    print("{0:<24}{1:<22}{2:>3}{3:>7}".format("name", "ambient", "m", "codim"))
    for name, (space_name, _, m) in EMBEDDING_SPACES.items():
        e = builtin_embedding(name)
        print("{0:<24}{1:<22}{2:>3}{3:>7}".format(name, space_name, m, e.codim))
    print("{0:<24}{1:<22}{2:>3}{3:>7}".format("identity", "any", "dim", 0))
    return 0


def _given(value, default):
    return default if value is None else value


def _validate(args, config):
    space = config.space(args.space)
    samples = _given(args.samples, config.samples)
    seed = _given(args.seed, config.seed)
    tol = _given(args.tol, config.validate_tol)
    if samples < 1:
        raise ConfigError("samples must be >= 1")
    if not tol > 0:
        raise ConfigError("tol must be positive")
    reports = validate_space(space, samples, seed, tol, args.verbose)
    results = [
        {"point": r.point, "max_residual": r.max_residual, "residuals": r.residuals, "passed": r.passed}
        for r in reports
    ]
    worst = max(r.max_residual for r in reports)
    scenario = {"space": space.name, "samples": samples, "seed": seed, "tol": tol}
    notes = []
    if not space.printed_form_applies():
        notes.append("∇φ and ∇ξ checked with (alpha, beta) = ({0:g}, {1:g})".format(space.alpha, space.beta))
    verdict = PASS if all(r.passed for r in reports) else FAIL
    return VerificationReport("validate", "model", scenario, [], results, worst, verdict, notes=notes)


def _scenario(args, config, tol_default):
    return Scenario(
        space=args.space,
        embedding=getattr(args, "embedding", None),
        sigma_mode=SYNTHETIC if getattr(args, "synthetic", False) else GEOMETRIC,
        samples=_given(args.samples, config.samples),
        tol=_given(args.tol, tol_default),
        L1=args.L1,
        seed=_given(args.seed, config.seed),
    )


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _configure(args.verbose)
        config = load_config(args.config, HarnessConfig())
        if args.command == "spaces":
            return _list_spaces(config)
        if args.command == "embeddings":
            return _list_embeddings()
        if args.command == "validate":
            return _emit(_validate(args, config), args.out)
        if args.command == "theorem":
            identity = args.mode == "identity"
            scenario = _scenario(args, config, config.identity_tol if identity else config.forward_tol)
            report = run_theorem(args.theorem_id, scenario, IDENTITY if identity else FORWARD, config, args.verbose)
            return _emit(report, args.out)
        scenario = _scenario(args, config, config.forward_tol)
        return _emit(equivalence_matrix(scenario, config, args.verbose), args.out)
    except GssfLabError as err:
        logger.error(str(err))
        print("gssf-lab: error: {0}".format(err), file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
