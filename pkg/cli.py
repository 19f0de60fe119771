# Command line front end for gkgrowth
#
# Results are printed on stdout; warnings and errors go through the logger to
# stderr.  Each GrowthError family maps to one exit code from config.
import argparse
import sys

from app import GrowthApp
from config import (
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_SEMANTIC_ERROR,
    EXIT_SIZE_LIMIT,
    EXIT_UNSUPPORTED,
    EXIT_VERIFY_FAILED,
    PROG_NAME,
    VERIFY_SUITES,
    VERSION,
)
from cuspidal import LeadingOnly, RamifiedGrowth, cusp_leading
from errors import (
    AmbiguousExpansion,
    GrowthError,
    InsufficientCuspidalData,
    NotInImage,
    OracleInconsistency,
    ProblemParseError,
    SizeLimitExceeded,
    UnsupportedMultisegment,
    UnsupportedSize,
)
from logging_config import log_error, setup_logging
from utils import parse_int_list
from verification import build_tasks, format_table, run_checks

CUSPIDAL_KINDS = ("leading", "murnaghan_unr", "murnaghan_ram", "level0", "gl2", "ai_quad")

UNSUPPORTED = (UnsupportedMultisegment, InsufficientCuspidalData, UnsupportedSize, AmbiguousExpansion, NotInImage)


def _int_list(text):
    try:
        return parse_int_list(text)
    except ProblemParseError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def exit_code_for(error: GrowthError) -> int:
    if isinstance(error, ProblemParseError):
        return EXIT_PARSE_ERROR
    if isinstance(error, UNSUPPORTED):
        return EXIT_UNSUPPORTED
    if isinstance(error, SizeLimitExceeded):
        return EXIT_SIZE_LIMIT
    if isinstance(error, OracleInconsistency):
        return EXIT_VERIFY_FAILED
    return EXIT_SEMANTIC_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG_NAME,
        description="Growth polynomials and GK dimensions of GL_n representations given by multisegments",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug diagnostics on stderr")
    parser.add_argument("--log-file", help="also write diagnostics to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gk", help="GK dimension and leading term")
    p.add_argument("file")

    p = sub.add_parser("exact", help="full growth polynomial, when it is supported")
    p.add_argument("file")

    p = sub.add_parser("poset", help="multisegments below the given one")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="print a DOT digraph instead of a node list")
    p.add_argument("--node-limit", type=int, help="refuse posets with more nodes than this")

    p = sub.add_parser("verify", help="check closed forms against brute force and each other")
    p.add_argument("--suite", choices=VERIFY_SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=int)
    p.add_argument("--primes", type=_int_list, help="comma separated, e.g. 2,3")
    p.add_argument("--max-N", dest="max_N", type=int)
    p.add_argument("--identity-max-n", type=int, help="largest n for the identities suite")
    p.add_argument("--workers", type=int)

    p = sub.add_parser("cuspidal", help="growth polynomial of one supercuspidal source")
    p.add_argument("kind", choices=CUSPIDAL_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--case", choices=("level0", "e2", "e1"), default="level0")
    p.add_argument("--level", type=int)
    p.add_argument("--ell", type=int, default=0)

    p = sub.add_parser("eval", help="dim pi^(K_N) at a residue field size q")
    p.add_argument("file")
    p.add_argument("--q", dest="q0", type=int)
    p.add_argument("--N", dest="N", type=int)

    p = sub.add_parser("sl", help="leading term for a constituent of the restriction to SL_n")
    p.add_argument("file")
    return parser


def cmd_gk(app, args, out):
    report = app.gk_report(app.load_problem(args.file))
    generic = "true" if report.generic else "false"
    print(f"gk = {report.gk}, coeff = {report.leading.coeff.render()}, generic = {generic}", file=out)
    return EXIT_OK


def cmd_exact(app, args, out):
    print(app.exact(app.load_problem(args.file)).render(), file=out)
    return EXIT_OK


def cmd_poset(app, args, out):
    problem = app.load_problem(args.file)
    if args.dot:
        print(app.poset_dot(problem, args.node_limit), file=out, end="")
        return EXIT_OK
    poset = app.poset(problem, args.node_limit)
    for i, node in enumerate(poset.nodes):
        print(f"{i}: {node.render(normalize=True)}", file=out)
    for upper, lower in poset.hasse_edges:
        print(f"{upper} -> {lower}", file=out)
    return EXIT_OK


def cmd_verify(app, args, out):
    suites = VERIFY_SUITES if args.suite == "all" else (args.suite,)
    workers = args.workers if args.workers is not None else app.settings["verify_workers"]
    tasks = build_tasks(suites, max_n=args.max_n, primes=args.primes, max_N=args.max_N,
                        limit=app.settings["enumeration_limit"], identity_max_n=args.identity_max_n)
    checks = run_checks(tasks, workers=workers)
    print(format_table(checks), file=out)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY_FAILED


def cmd_cuspidal(app, args, out):
    result = app.cuspidal(args.kind, n=args.n, j=args.j, case=args.case, level=args.level, ell=args.ell)
    if isinstance(result, RamifiedGrowth):
        print(f"s-form (s = q^(1/{result.root})): {result.s_growth.render('s')}", file=out)
        print(f"integral q-exponents: {'true' if result.integral_exponents else 'false'}", file=out)
        if result.q_growth is not None:
            print(result.q_growth.render(), file=out)
    elif isinstance(result, LeadingOnly):
        coeff, exponent = cusp_leading(result.n1)
        print(f"leading term only: ({coeff.render()})*X^{exponent} + lower order terms", file=out)
    else:
        print(result.render(), file=out)
    return EXIT_OK


def cmd_eval(app, args, out):
    print(app.evaluate(app.load_problem(args.file), args.q0, args.N), file=out)
    return EXIT_OK


def cmd_sl(app, args, out):
    d, term = app.sl(app.load_problem(args.file))
    print(f"d = {d}, coeff = {term.coeff.render()}, exponent = {term.exponent}", file=out)
    return EXIT_OK


COMMANDS = {
    "gk": cmd_gk,
    "exact": cmd_exact,
    "poset": cmd_poset,
    "verify": cmd_verify,
    "cuspidal": cmd_cuspidal,
    "eval": cmd_eval,
    "sl": cmd_sl,
}


def main(argv=None, app=None, out=None) -> int:
    """Parse argv, run one command and return its exit code"""
    args = build_parser().parse_args(argv)
    app = app if app is not None else GrowthApp()
    setup_logging(verbose=args.verbose, log_to_file=app.settings["log_to_file"], log_file=args.log_file)
    out = out if out is not None else sys.stdout
    try:
        return COMMANDS[args.command](app, args, out)
    except GrowthError as e:
        log_error(str(e))
        return exit_code_for(e)
