"""
Command line entry point: `python -m app.cli <command> ...`.

Results go to stdout in the chosen format; log records and error messages go
to stderr. Exit codes: 0 success, 1 usage or input error, 2 refused
computation, 3 internal invariant violation.
"""
from typing import Dict, List, Optional
import argparse
import json
import logging
import sys

from app.core.config import settings
from app.core.exceptions import UsageError
from app.core.logging_config import configure_logging
from app.services.brauer_service import BrauerService
from app.services.symprod_service import SymProdService
from app.services.taut_service import TautService
from app.services.weight_service import WeightService
from app.tautring.expression import infer_factor_count

logger = logging.getLogger(__name__)

FORMATS = ("text", "latex", "json")
FLAVORS = ("relative", "pointed")


class CommandParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common_options() -> argparse.ArgumentParser:
    common = CommandParser(add_help=False)
    common.add_argument("--g", default=None,
                        help="genus: 'generic' (default), an integer or a fraction; rank for weight commands")
    common.add_argument("--n", type=int, default=None, help="number of curve factors")
    common.add_argument("--format", choices=FORMATS, default=settings.DEFAULT_FORMAT)
    common.add_argument("--flavor", choices=FLAVORS, default=settings.DEFAULT_FLAVOR)
    common.add_argument("--max-terms", type=int, default=1, help="largest diagram combination searched")
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")
    return common


def build_parser() -> CommandParser:
    common = _common_options()
    parser = CommandParser(prog="python -m app.cli", description=settings.PROJECT_NAME)
    commands = parser.add_subparsers(dest="command", parser_class=CommandParser)
    commands.required = True

    def add(name: str, help_text: str) -> CommandParser:
        return commands.add_parser(name, parents=[common], help=help_text)

    add("simplify", "normalize a class expression").add_argument("expression")

    for name, help_text in (("act", "apply a correspondence to a class"),):
        sub = add(name, help_text)
        sub.add_argument("correspondence")
        sub.add_argument("expression")
        sub.add_argument("--source", type=int)
        sub.add_argument("--target", type=int)

    sub = add("compose", "compose two correspondences, the second applied last")
    sub.add_argument("second")
    sub.add_argument("first")
    sub.add_argument("--source", type=int)
    sub.add_argument("--target", type=int)

    add("fp", "pi_1 x pi_1 of D(1,2)^N psi(1)").add_argument("power", type=int)
    sub = add("fpnm", "pi_1^N of D(1..N) psi(1)^M")
    sub.add_argument("factors", type=int)
    sub.add_argument("power", type=int)
    add("gs", "modified small diagonal on the triple product")
    add("zk", "K_1 K_2 - (2g-2) D(1,2) K_1")
    add("y", "pointed Gross-Schoen combination of partial diagonals")
    add("restrict", "restrict a relative class to a pointed curve").add_argument("expression")
    add("deg", "degree of a top-codimension class").add_argument("expression")
    add("lewis-estimate", "Kunneth components and Leray bookkeeping").add_argument("expression")
    add("witness", "comparison against a printed or expected identity").add_argument(
        "name", choices=("printed-fp1", "diagonal-power", "gs-minus-y")
    )
    add("schema", "JSON schema of class output")
    add("loop-parameter", "value of a closed Brauer loop")

    brauer = add("brauer", "Brauer diagram commands")
    brauer_commands = brauer.add_subparsers(dest="brauer_command", parser_class=CommandParser)
    brauer_commands.required = True
    sub = brauer_commands.add_parser("compose", parents=[common])
    sub.add_argument("second")
    sub.add_argument("first")
    sub.add_argument("--k", type=int)
    sub = brauer_commands.add_parser("realize", parents=[common])
    sub.add_argument("diagram")
    sub.add_argument("--k", type=int)
    sub = brauer_commands.add_parser("search", parents=[common])
    sub.add_argument("--source", required=True, help="named cycle, e.g. gs^4")
    sub.add_argument("--target", required=True, help="named cycle, e.g. fp2")
    sub.add_argument("--record", default=None, help="write the result set as JSON to this path")

    add("bbw", "Borel-Weil-Bott degree").add_argument("weight")
    sub = add("kostant", "Kostant weights of a dominant weight")
    sub.add_argument("weight")
    sub.add_argument("--degree", type=int)
    add("dim", "Weyl dimension").add_argument("weight")
    add("tensor", "tensor with the standard representation").add_argument("weight")
    add("decompose-power", "tensor power of the standard representation").add_argument("power", type=int)
    sub = add("vanish", "Fakhruddin vanishing test")
    sub.add_argument("--i", type=int, required=True)
    sub.add_argument("--l", type=int, required=True)
    add("first-nonvanish", "first nonvanishing degree").add_argument("--l", type=int, required=True)
    sub = add("leray", "Leray pieces of a fiber power")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--base-dim", type=int)
    sub = add("grid", "Fakhruddin table")
    sub.add_argument("--g-max", type=int, default=10)
    sub.add_argument("--i-max", type=int, default=10)
    sub.add_argument("--l-max", type=int, default=10)

    symprod = add("symprod", "zero-cycles on symmetric powers")
    symprod_commands = symprod.add_subparsers(dest="symprod_command", parser_class=CommandParser)
    symprod_commands.required = True
    sub = symprod_commands.add_parser("verify", parents=[common])
    sub.add_argument("--alphabet", type=int, required=True)
    sub.add_argument("--removal", choices=("per_copy", "distinct"), default="per_copy")
    sub = symprod_commands.add_parser("decompose", parents=[common])
    sub.add_argument("cycle")
    return parser


def _rank(args) -> int:
    try:
        return int(args.g)
    except (TypeError, ValueError):
        raise UsageError(f"--g must be an integer rank here, got {args.g!r}")


def _require_n(args) -> int:
    if args.n is None:
        raise UsageError(f"{args.command} needs --n")
    return args.n


def _factor_count(args) -> int:
    """--n if given, else the largest factor index in the expression"""
    return infer_factor_count(args.expression) if args.n is None else args.n


def dispatch(args) -> Dict:
    command = args.command
    genus = args.g
    if command == "simplify":
        return TautService.simplify(args.expression, _factor_count(args), args.flavor, genus)
    if command == "act":
        return TautService.act(args.correspondence, args.expression, args.flavor, args.source, args.target, genus)
    if command == "compose":
        return TautService.compose(args.second, args.first, args.flavor, args.source, args.target, genus)
    if command == "fp":
        return TautService.fp(args.power, genus)
    if command == "fpnm":
        return TautService.fpnm(args.factors, args.power, genus)
    if command in ("gs", "zk", "y"):
        return TautService.named(command, genus)
    if command == "restrict":
        return TautService.restrict(args.expression, _factor_count(args), genus)
    if command == "deg":
        return TautService.degree(args.expression, _factor_count(args), args.flavor, genus)
    if command == "lewis-estimate":
        return TautService.lewis_estimate(args.expression, args.n, args.flavor)
    if command == "witness":
        return TautService.witness(args.name)
    if command == "schema":
        return TautService.schema()
    if command == "loop-parameter":
        return BrauerService.loop_parameter(args.flavor, genus)
    if command == "brauer":
        if args.brauer_command == "compose":
            return BrauerService.compose(args.second, args.first, args.k, args.flavor, genus)
        if args.brauer_command == "realize":
            return BrauerService.realize(args.diagram, args.k, args.flavor, genus)
        result = BrauerService.search(args.source, args.target, args.max_terms)
        if args.record and result['status'] == 'success':
            write_record(result['data']['record'], args.record)
        return result
    if command == "bbw":
        return WeightService.bbw(args.weight, _rank(args) if args.g is not None else None)
    if command == "kostant":
        return WeightService.kostant(args.weight, args.degree, _rank(args) if args.g is not None else None)
    if command == "dim":
        return WeightService.dim(args.weight, _rank(args) if args.g is not None else None)
    if command == "tensor":
        return WeightService.tensor(args.weight, _rank(args) if args.g is not None else None)
    if command == "decompose-power":
        return WeightService.decompose_power(args.power, _rank(args))
    if command == "vanish":
        return WeightService.vanish(_rank(args), args.i, args.l)
    if command == "first-nonvanish":
        return WeightService.first_nonvanish(_rank(args), args.l)
    if command == "leray":
        return WeightService.leray(_rank(args), _require_n(args), args.k, args.base_dim)
    if command == "grid":
        return WeightService.grid(args.g_max, args.i_max, args.l_max)
    if command == "symprod":
        if args.symprod_command == "verify":
            return SymProdService.verify(_require_n(args), args.alphabet, args.removal)
        return SymProdService.decompose(args.cycle, args.n)
    raise UsageError(f"unknown command {command!r}")


def write_record(record: Dict, path: str) -> None:
    with open(path, "w") as handle:
        json.dump(record, handle, indent=2, sort_keys=True)
    logger.info(f"search record written to {path}")


def render(result: Dict, output_format: str) -> str:
    if output_format == "json":
        return json.dumps(result['data'], indent=2, sort_keys=True)
    if output_format == "latex":
        return result['latex']
    return result['text']


def report_error(result: Dict, output_format: str) -> None:
    if output_format == "json":
        payload = {key: result[key] for key in ('status', 'kind', 'message', 'exit_code')}
        print(json.dumps(payload, sort_keys=True), file=sys.stderr)
    else:
        print(f"error ({result['kind']}): {result['message']}", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    output_format = "json" if "--format=json" in argv or _flag_value(argv, "--format") == "json" else "text"
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        report_error(e.to_dict(), output_format)
        return e.exit_code
    configure_logging("INFO" if args.verbose else None)
    try:
        result = dispatch(args)
    except UsageError as e:
        result = e.to_dict()
    if result['status'] != 'success':
        report_error(result, args.format)
        return result['exit_code']
    print(render(result, args.format))
    return 0


def _flag_value(argv: List[str], flag: str) -> Optional[str]:
    for position, item in enumerate(argv[:-1]):
        if item == flag:
            return argv[position + 1]
    return None
