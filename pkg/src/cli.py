"""
Command-line interface for the filiform cohomology toolkit
"""
import argparse
import logging
import sys

from config import Config
from filiform_lab import FiliformCohomologyLab
from report import render

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Cohomology and central extensions of the restricted filiform Lie algebras m_2^lambda(p)"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", "-p", type=int, required=True, help="Characteristic p (prime, at least 5)")
    common.add_argument("--field-ext", help="Work over GF(p^2) = GF(p)[t]/(t^2 + c1*t + c0), given as c0,c1")
    common.add_argument("--format", choices=Config.SUPPORTED_FORMATS, default=Config.OUTPUT_FORMAT,
                        help="Output format")
    common.add_argument("--max-prime", type=int, default=Config.MAX_PRIME, help="Largest accepted prime")
    common.add_argument("--seed", type=int, default=Config.DEFAULT_SEED, help="Seed for sampled axiom checks")
    common.add_argument("--timing", action="store_true", help="Include wall-clock time in the report")

    subparsers = parser.add_subparsers(dest="command", required=True)

    verify = subparsers.add_parser("verify", parents=[common], help="Check the restricted Lie algebra axioms")
    verify.add_argument("--lambda", dest="lam", default="zero", help='"zero", "random:SEED" or a comma list')
    verify.add_argument("--tamper", metavar="I,J", help="Zero the bracket [e_I, e_J] first (test hook)")

    cohomology = subparsers.add_parser("cohomology", parents=[common], help="Compute H^1, H^1*, H^2 and H^2*")
    cohomology.add_argument("--lambda", dest="lam", default="zero", help='"zero", "random:SEED" or a comma list')

    extensions = subparsers.add_parser("extensions", parents=[common], help="Catalog of central extensions")
    extensions.add_argument("--lambda", dest="lam", default="zero", help='"zero", "random:SEED" or a comma list')

    run_all = subparsers.add_parser("all", parents=[common], help="verify, cohomology and extensions in one report")
    run_all.add_argument("--lambda", dest="lam", default="zero", help='"zero", "random:SEED" or a comma list')

    iso = subparsers.add_parser("iso", parents=[common], help="Decide whether two lambda vectors give isomorphic algebras")
    iso.add_argument("lam", help="First lambda vector")
    iso.add_argument("lam_prime", help="Second lambda vector")

    return parser


def _finish(result, fmt: str) -> int:
    if not result['success']:
        print(f"✗ {result['message']}", file=sys.stderr)
        return EXIT_INVALID
    report = result['report']
    print(render(report, fmt))
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _load(lab: FiliformCohomologyLab, args) -> bool:
    loaded = lab.load_algebra(args.prime, args.lam, args.field_ext, args.max_prime)
    if not loaded['success']:
        print(f"✗ {loaded['message']}", file=sys.stderr)
        return False
    logging.getLogger(__name__).info(loaded['message'])
    return True


def cmd_verify(args) -> int:
    lab = FiliformCohomologyLab()
    if not _load(lab, args):
        return EXIT_INVALID
    if args.tamper:
        try:
            i, j = (int(part) for part in args.tamper.split(","))
        except ValueError:
            print(f"✗ Invalid input: --tamper expects I,J, got {args.tamper!r}", file=sys.stderr)
            return EXIT_INVALID
        tampered = lab.tamper(i, j)
        if not tampered['success']:
            print(f"✗ {tampered['message']}", file=sys.stderr)
            return EXIT_INVALID
    return _finish(lab.verify(seed=args.seed, timing=args.timing), args.format)


def cmd_cohomology(args) -> int:
    lab = FiliformCohomologyLab()
    if not _load(lab, args):
        return EXIT_INVALID
    return _finish(lab.cohomology(timing=args.timing), args.format)


def cmd_extensions(args) -> int:
    lab = FiliformCohomologyLab()
    if not _load(lab, args):
        return EXIT_INVALID
    return _finish(lab.extensions(seed=args.seed, timing=args.timing), args.format)


def cmd_iso(args) -> int:
    lab = FiliformCohomologyLab()
    if not _load(lab, args):
        return EXIT_INVALID
    return _finish(lab.iso(args.lam, args.lam_prime, timing=args.timing), args.format)


def cmd_all(args) -> int:
    lab = FiliformCohomologyLab()
    if not _load(lab, args):
        return EXIT_INVALID
    return _finish(lab.run_all(seed=args.seed, timing=args.timing), args.format)


COMMANDS = {
    "verify": cmd_verify,
    "cohomology": cmd_cohomology,
    "extensions": cmd_extensions,
    "iso": cmd_iso,
    "all": cmd_all,
}


def main(argv=None) -> int:
    """Command-line interface"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK

    try:
        Config.validate_config()
    except ValueError as e:
        print(f"✗ Invalid configuration: {e}", file=sys.stderr)
        return EXIT_INVALID

    logging.basicConfig(level=getattr(logging, Config.LOG_LEVEL.upper(), logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
