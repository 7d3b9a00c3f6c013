"""
Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource ceiling.
"""

import argparse
import logging
import sys
from typing import List, Optional, Tuple

from app import GF_BUILDERS, SEQUENCES, TABLES, MexLabApp, UsageError
from base_identity import IdentityCheckError, ResourceCeilingError, UnknownIdentityError, VerifyParams
from census import CHAIN_MAEX_INTERPRETATIONS
from config import MexLabConfig, setup_logging
from enumeration import ConstraintError
from formats import (
    FormatError,
    OutputFormat,
    render_bivariate,
    render_registry,
    render_reports,
    render_sequence,
    render_stats,
    render_table,
)
from partition import Partition, PartitionError
from qseries import BivariateSeries, SeriesError
from verify import registry

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CEILING = 3


def int_list(text: str) -> Tuple[int, ...]:
    """Parse ``2,3`` or ``1-4`` (or a mix) into a tuple of integers."""
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            if "-" in token[1:]:
                low, high = token.split("-", 1)
                values.extend(range(int(low), int(high) + 1))
            else:
                values.append(int(token))
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer list: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty integer list")
    return tuple(values)


def build_parser(cfg: MexLabConfig) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default="human",
                        help="output format; bfile lines are 'n value' starting at n=0")
    common.add_argument("--save", action="store_true", help=f"also write the output under {cfg.output_dir}")
    common.add_argument("--allow-large", action="store_true",
                        help=f"lift the scan ceiling (n <= {cfg.max_n}) and the order ceiling")

    parser = argparse.ArgumentParser(
        prog="mexlab", description="Chain-mex partition statistics, q-series and identity verification."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    stats = sub.add_parser("stats", parents=[common], help="all statistics of one partition")
    stats.add_argument("--parts", required=True, help="comma-separated parts, e.g. 7,4,4,4,3,1,1")
    stats.add_argument("--r", type=int, help="chain length for chain mex and repeating parts")
    stats.add_argument("--t", type=int, help="chain length for chain maex")
    stats.set_defaults(handler=cmd_stats)

    seq = sub.add_parser("seq", parents=[common], help="a(0..max_n) of a sequence")
    seq.add_argument("name", choices=SEQUENCES)
    seq.add_argument("--max-n", type=int, default=cfg.default_max_n)
    seq.add_argument("--r", type=int, default=1)
    seq.add_argument("--m", type=int, default=3, help="modulus for p-colored")
    seq.add_argument("--j", type=int, default=1, help="residue for p-colored, repeating part for q-count")
    seq.add_argument("--s", type=int, default=2, help="repetition threshold for q-count")
    seq.add_argument("--oracle", action="store_true", help="count by enumeration instead of series")
    seq.set_defaults(handler=cmd_seq)

    table = sub.add_parser("table", parents=[common], help="census cross-tabulation")
    table.add_argument("kind", choices=TABLES)
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--r", type=int)
    table.add_argument("--j", type=int)
    table.add_argument("--list-partitions", action="store_true")
    table.add_argument("--interpretation", choices=CHAIN_MAEX_INTERPRETATIONS, default="exists")
    table.set_defaults(handler=cmd_table)

    verify = sub.add_parser("verify", parents=[common], help="run identity checks")
    verify.add_argument("identity", nargs="?")
    verify.add_argument("--suite", choices=["all"])
    verify.add_argument("--list", action="store_true", help="print the registry")
    verify.add_argument("--max-n", type=int)
    verify.add_argument("--r", type=int_list, default=(1, 2, 3, 4))
    verify.add_argument("--j", type=int_list)
    verify.add_argument("--order", type=int)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--timing", action="store_true", help="include duration_ms in reports")
    verify.set_defaults(handler=cmd_verify)

    gf = sub.add_parser("gf", parents=[common], help="coefficients of a generating function")
    gf.add_argument("name", choices=GF_BUILDERS)
    gf.add_argument("--order", type=int, default=cfg.default_order)
    gf.add_argument("--r", type=int, default=1)
    gf.add_argument("--m", type=int, default=1)
    gf.add_argument("--j", type=int, default=0)
    gf.set_defaults(handler=cmd_gf)
    return parser


# --------------------------
def cmd_stats(app: MexLabApp, args) -> Tuple[str, int]:
    p = Partition.parse(args.parts)
    return render_stats(app.stats(p, args.r, args.t), OutputFormat(args.format)), EXIT_OK


def cmd_seq(app: MexLabApp, args) -> Tuple[str, int]:
    values = app.sequence(args.name, args.max_n, r=args.r, m=args.m, j=args.j, s=args.s, oracle=args.oracle)
    return render_sequence(args.name, values, OutputFormat(args.format)), EXIT_OK


def cmd_table(app: MexLabApp, args) -> Tuple[str, int]:
    table = app.table(args.kind, args.n, args.r, args.j, args.list_partitions, args.interpretation)
    return render_table(table, OutputFormat(args.format), args.list_partitions, args.j), EXIT_OK


def cmd_verify(app: MexLabApp, args) -> Tuple[str, int]:
    fmt = OutputFormat(args.format)
    if args.list:
        return render_registry(registry(), fmt), EXIT_OK
    if args.identity is None and args.suite is None:
        raise UsageError("give an identity id, --suite all or --list")
    if args.identity is not None and args.suite is not None:
        raise UsageError(f"give either {args.identity!r} or --suite all, not both")
    params = VerifyParams(
        max_n=app.cfg.default_max_n if args.max_n is None else args.max_n,
        r_values=args.r,
        j_values=args.j,
        order=app.cfg.default_order if args.order is None else args.order,
        allow_large=args.allow_large,
    )
    ids = None if args.suite == "all" else [args.identity]
    reports = app.verify(ids, params, workers=args.workers)
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE
    return render_reports(reports, fmt, timing=args.timing), code


def cmd_gf(app: MexLabApp, args) -> Tuple[str, int]:
    fmt = OutputFormat(args.format)
    series = app.gf(args.name, args.order, r=args.r, m=args.m, j=args.j)
    if isinstance(series, BivariateSeries):
        return render_bivariate(args.name, series, fmt), EXIT_OK
    return render_sequence(args.name, list(series), fmt), EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    cfg = MexLabConfig.from_env()
    setup_logging(cfg.log_level)
    parser = build_parser(cfg)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    app = MexLabApp(cfg, allow_large=args.allow_large)
    try:
        text, code = args.handler(app, args)
    except ResourceCeilingError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CEILING
    except IdentityCheckError as e:
        print(f"error: identity check raised {e}", file=sys.stderr)
        return EXIT_FAILURE
    except UnknownIdentityError as e:
        print(f"error: unknown identity {e.args[0]!r}; see 'verify --list'", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, PartitionError, ConstraintError, SeriesError, FormatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(text)
    if args.save:
        path = app.save(text, args.command, OutputFormat(args.format))
        logger.info(f"Output saved to {path}")
    return code
