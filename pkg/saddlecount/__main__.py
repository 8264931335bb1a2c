"""
Main entry point for running ``saddlecount`` from the command line.

Every command prints its result to stdout in the chosen format. Errors go to
stderr as a single JSON object, with exit status 2 for bad usage and 3 for
everything the engine refuses to compute.
"""
# Black does not do a good job of formatting argparse code, IMHO.
# fmt: off
import argparse
import csv
import io
import json
import sys
import traceback
import typing

from .__version__ import __version__
from .config import enumerate_closed, enumerate_distinct, symmetry_closed, symmetry_distinct
from .config.distinct import zero_pairs
from .errors import SaddleCountError
from .flatsim import (
    COUNTING_CLASSES,
    IrreduciblePermutation,
    TrialRunner,
    empirical_constant,
    permutation_for,
)
from .log import log_heading, log_message, log_result
from .notation import (
    ClosedPattern,
    DistinctPattern,
    parse_closed,
    parse_distinct,
    print_closed,
    print_distinct,
)
from .principal import principal_rows
from .strata import Component, StratumComponent, classify_components
from .sv import (
    CLOSED,
    DISTINCT,
    SVConstant,
    constant_closed,
    constant_general,
    constant_problem1,
    table_closed,
    table_distinct,
    total_closed,
    total_distinct,
)
from .volumes import ENVIRONMENT_VARIABLE, dump_volume_table, table_from_environment

if sys.version_info < (3, 7):
    sys.exit("Fatal Error: saddlecount requires Python 3.7+")

FORMATS = ("text", "json", "csv")


# noinspection PyTypeChecker
parser = argparse.ArgumentParser(
    prog="saddlecount",
    description="Exact Siegel-Veech constants of strata of abelian differentials",
    formatter_class=argparse.ArgumentDefaultsHelpFormatter,
)
parser.add_argument(
    "-V", "--version",
    action="version",
    version="saddlecount " + __version__
)
group = parser.add_argument_group("output configuration")
group.add_argument(
    "--format",
    help="Output format",
    choices=FORMATS,
    default="text",
    dest="output_format",
)
group.add_argument(
    "--volumes",
    help=f"Volume table merged over the bundled one (default: ${ENVIRONMENT_VARIABLE})",
    default=None,
    metavar="FILE",
    dest="volumes_file",
)
group.add_argument(
    "--verbose",
    help="Print full tracebacks on errors",
    action="store_true",
)

commands = parser.add_subparsers(dest="command", metavar="COMMAND")
commands.required = True


def add_component_arguments(command: argparse.ArgumentParser, required: bool = True) -> None:
    command.add_argument(
        "--stratum",
        help="Zero orders of the stratum, e.g. '3,1'",
        required=required,
        metavar="ALPHA",
    )
    command.add_argument(
        "--component",
        help="Connected component: " + ", ".join(Component.ALL),
        default=Component.CONNECTED,
        metavar="LABEL",
    )


command = commands.add_parser(
    "strata",
    help="Describe a stratum and its components",
    formatter_class=argparse.ArgumentDefaultsHelpFormatter,
)
command.add_argument(
    "action",
    choices=["info"],
)
add_component_arguments(command)

command = commands.add_parser(
    "enumerate",
    help="List the configurations of a stratum component",
    formatter_class=argparse.ArgumentDefaultsHelpFormatter,
)
add_component_arguments(command)
command.add_argument(
    "--kind",
    help="Saddle connections joining distinct zeros, or closed ones",
    choices=[DISTINCT, CLOSED],
    required=True,
)
command.add_argument(
    "--m1",
    help="Order of the first zero (distinct kind only)",
    type=int,
    default=None,
)
command.add_argument(
    "--m2",
    help="Order of the second zero (distinct kind only)",
    type=int,
    default=None,
)

command = commands.add_parser(
    "constant",
    help="The constant of a single configuration",
    formatter_class=argparse.ArgumentDefaultsHelpFormatter,
)
add_component_arguments(command)
command.add_argument(
    "--pattern",
    help="Configuration, e.g. '(0+2)>(0+2)>' or '=(H1,1)'",
    required=True,
)
command.add_argument(
    "--kind",
    help="Kind of the pattern, guessed from its syntax when omitted",
    choices=[DISTINCT, CLOSED],
    default=None,
)
command.add_argument(
    "--named-zeros",
    help="Count connections between two named zeros, with labelled unchanged zeros",
    action="store_true",
    dest="named_zeros",
)

command = commands.add_parser(
    "table",
    help="The constants of every configuration of a stratum component",
    formatter_class=argparse.ArgumentDefaultsHelpFormatter,
)
add_component_arguments(command)
command.add_argument(
    "--kind",
    choices=[DISTINCT, CLOSED],
    required=True,
)
command.add_argument(
    "--totals",
    help="Also print the constants for counting every saddle connection at once",
    action="store_true",
)

command = commands.add_parser(
    "volumes",
    help="Show the effective volume table",
    formatter_class=argparse.ArgumentDefaultsHelpFormatter,
)
command.add_argument(
    "--file",
    help="Volume table to load instead of --volumes",
    default=None,
    metavar="FILE",
    dest="file",
)
command.add_argument(
    "--dump",
    help="Write the table in the volume file format",
    action="store_true",
)

command = commands.add_parser(
    "simulate",
    help="Estimate constants by counting on random surfaces",
    formatter_class=argparse.ArgumentDefaultsHelpFormatter,
)
add_component_arguments(command, required=False)
command.add_argument(
    "--permutation",
    help="Interval exchange permutation to suspend, e.g. '4,3,2,1'",
    default=None,
)
command.add_argument(
    "--class",
    help="What to count",
    choices=COUNTING_CLASSES,
    default=COUNTING_CLASSES[0],
    dest="counting_class",
)
command.add_argument(
    "--L",
    help="Length bound",
    type=float,
    default=5.0,
    dest="L",
)
command.add_argument(
    "--trials",
    help="Number of random surfaces",
    type=int,
    default=20,
)
command.add_argument(
    "--seed",
    help="Random seed",
    type=int,
    default=0,
)
command.add_argument(
    "--parallel",
    help="Run trials on a thread pool",
    action="store_true",
)

command = commands.add_parser(
    "principal",
    help="Closed-form constants of the principal stratum",
    formatter_class=argparse.ArgumentDefaultsHelpFormatter,
)
command.add_argument(
    "--genus",
    type=int,
    required=True,
)
# fmt: on


def emit(records: typing.List[dict], output_format: str) -> None:
    """
    Print a list of records. Every record has the same keys, which are the
    csv columns in order.
    """
    if output_format == "json":
        log_result(json.dumps(records, indent=2))
        return

    if not records:
        return
    columns = list(records[0])

    if output_format == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        log_result(buffer.getvalue().rstrip("\n"))
        return

    if len(records) == 1 and "value" in records[0]:
        log_result(str(records[0]["value"]))
        return
    cells = [[str(record[c]) for c in columns] for record in records]
    widths = [max(len(c), *(len(row[k]) for row in cells)) for k, c in enumerate(columns)]
    log_result("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
    for row in cells:
        log_result("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def constant_record(constant: SVConstant) -> dict:
    return {"value": str(constant), "approx": constant.approx}


def do_strata(args, table) -> typing.List[dict]:
    component = StratumComponent.parse(args.stratum, args.component)
    stratum = component.stratum
    records = []
    for label in sorted(classify_components(stratum)):
        try:
            volume = str(table.volume(stratum.alpha, label))
        except SaddleCountError:
            volume = "unknown"
        records.append(
            {
                "stratum": str(stratum),
                "genus": stratum.genus,
                "dim": stratum.dim_complex,
                "component": label,
                "volume": volume,
            }
        )
    return records


def do_enumerate(args, table) -> typing.List[dict]:
    component = StratumComponent.parse(args.stratum, args.component)
    records = []
    if args.kind == DISTINCT:
        if (args.m1 is None) != (args.m2 is None):
            raise ValueError("Invalid zero orders, give both --m1 and --m2")
        pairs = [(args.m1, args.m2)] if args.m1 is not None else zero_pairs(component.alpha)
        for m1, m2 in pairs:
            for cfg in enumerate_distinct(component.stratum, m1, m2):
                symmetry = symmetry_distinct(cfg)
                records.append(
                    {
                        "pattern": print_distinct(cfg),
                        "m1": cfg.m1,
                        "m2": cfg.m2,
                        "p": cfg.p,
                        "gamma": symmetry.rot_order,
                        "gamma_minus": symmetry.gamma_order,
                    }
                )
    else:
        for cfg in enumerate_closed(component, table):
            symmetry = symmetry_closed(cfg)
            records.append(
                {
                    "pattern": print_closed(cfg),
                    "p": cfg.p,
                    "q": cfg.q,
                    "gamma": symmetry.rot_order,
                    "gamma_minus": symmetry.gamma_order,
                }
            )
    return records


def guess_kind(pattern: str) -> str:
    """
    Distinct patterns end every piece with ">", closed ones start every
    piece with a gluing.
    """
    text = pattern.strip()
    if text[:1] in "-=→⇒−":
        return CLOSED
    return DISTINCT


def do_constant(args, table) -> typing.List[dict]:
    component = StratumComponent.parse(args.stratum, args.component)
    kind = args.kind or guess_kind(args.pattern)
    if kind == DISTINCT:
        cfg = parse_distinct(args.pattern)
        if args.named_zeros:
            constant = constant_problem1(cfg, component, table)
        else:
            constant = constant_general(cfg, component, table)
        pattern = DistinctPattern.format(cfg)
    else:
        if args.named_zeros:
            raise ValueError("Invalid option, --named-zeros applies to distinct zeros only")
        cfg = parse_closed(args.pattern)
        constant = constant_closed(cfg, component, table)
        pattern = ClosedPattern.format(cfg)
    return [{"pattern": pattern, **constant_record(constant)}]


def do_table(args, table) -> typing.List[dict]:
    component = StratumComponent.parse(args.stratum, args.component)
    records = []
    if args.kind == DISTINCT:
        for row in table_distinct(component, table):
            records.append(
                {
                    "pattern": print_distinct(row.config),
                    "M": str(row.M),
                    **constant_record(row.constant),
                }
            )
        if args.totals:
            total = total_distinct(component, table)
            records.append({"pattern": "total", "M": "", **constant_record(total)})
    else:
        for row in table_closed(component, table):
            records.append(
                {
                    "pattern": print_closed(row.config),
                    "M": str(row.M),
                    **constant_record(row.constant),
                }
            )
        if args.totals:
            totals = total_closed(component, table)
            records.append(
                {"pattern": "saddle connections", "M": "", **constant_record(totals.saddle_connections)}
            )
            records.append({"pattern": "cylinders", "M": "", **constant_record(totals.cylinders)})
    return records


def do_volumes(args, table) -> typing.Optional[typing.List[dict]]:
    if args.file:
        table = table_from_environment(args.file)
    if args.dump:
        log_result(dump_volume_table(table).rstrip("\n"))
        return None
    return [
        {"partition": str(alpha), "component": label, "volume": str(table.volume(alpha, label))}
        for (alpha, label), _ in table.items()
    ]


def expected_constant(component: StratumComponent, counting_class: str, table) -> typing.Optional[SVConstant]:
    """
    The exact constant a simulation estimates, when the table has the
    volumes for it.
    """
    try:
        if counting_class == "pairs":
            return total_distinct(component, table)
        totals = total_closed(component, table)
    except SaddleCountError:
        return None
    if counting_class == "closed":
        return totals.saddle_connections
    return totals.cylinders


def do_simulate(args, table) -> typing.List[dict]:
    component = None
    if args.stratum:
        component = StratumComponent.parse(args.stratum, args.component)
    if args.permutation:
        pi = IrreduciblePermutation.parse(args.permutation)
    elif component is not None:
        pi = permutation_for(component)
    else:
        raise ValueError("Invalid arguments, give --stratum or --permutation")

    if args.parallel:
        runner = TrialRunner(pi, args.counting_class, args.L, args.trials, args.seed)
        report = runner.run()
    else:
        log_heading(f"Counting {args.counting_class} on {args.trials} suspensions of {pi}")
        report = empirical_constant(pi, args.counting_class, args.L, args.trials, args.seed)

    record = {"permutation": str(pi), **report.to_dict()}
    if args.output_format != "json":
        record["counts"] = " ".join(str(c) for c in report.counts)
    if component is not None:
        expected = expected_constant(component, args.counting_class, table)
        record["expected"] = expected.approx if expected is not None else None
    return [record]


def do_principal(args, table) -> typing.List[dict]:
    return [
        {"configuration": name, **constant_record(constant)}
        for name, constant in principal_rows(args.genus, table)
    ]


COMMANDS = {
    "strata": do_strata,
    "enumerate": do_enumerate,
    "constant": do_constant,
    "table": do_table,
    "volumes": do_volumes,
    "simulate": do_simulate,
    "principal": do_principal,
}


def report_error(error: Exception, verbose: bool) -> None:
    if verbose:
        log_message(traceback.format_exc())
    if isinstance(error, SaddleCountError):
        data = error.to_dict()
    else:
        data = {"error": type(error).__name__, "message": str(error)}
    log_message(json.dumps(data))


def run(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        table = table_from_environment(args.volumes_file)
        records = COMMANDS[args.command](args, table)
    except SaddleCountError as e:
        report_error(e, args.verbose)
        return 3
    except ValueError as e:
        report_error(e, args.verbose)
        return 2

    if records is not None:
        emit(records, args.output_format)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
