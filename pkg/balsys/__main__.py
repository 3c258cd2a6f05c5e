# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Command line interface (CLI) for balsys.

Exit codes: 0 success, 1 unexpected error, 2 parse or usage error, 3 no
witness found (exhausted or budget exceeded), 4 a hypothesis of the
requested construction is not met (below threshold without override, or a
system the construction does not apply to).
"""

import argparse
import logging
import os
import sys
import warnings

from filelock import FileLock

from .common import config
from .common.errors import ConfigError
from .contrib.catalog import expected_profile, get_entry, list_entries, make_system
from .contrib.constants import THRESHOLD_KINDS, compute_J, gamma, thresholds
from .contrib.errors import (
    BelowThresholdError,
    BudgetExceededError,
    DegenerateSystemError,
    FormatError,
    NotApplicableError,
    NotFoundError,
    UnknownSystemError,
)
from .contrib.extremal import max_shape_free
from .contrib.finder import FINDER_KINDS, run_finder
from .contrib.formats import format_matrix, read_matrix, read_pointset
from .contrib.pointset import BELOW_THRESHOLD, FOUND, PointSet, SearchBudget
from .contrib.sumset import AIR_ROUTES, ap_in_difference, generic_in_air_sumset, max_tricoloured
from .contrib.utility import add_verbosity_argument
from .core import json
from .core.errors import DimensionError, FieldError
from .core.field import parse_order
from .version import SCHEMA_VERSION, __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_NOT_FOUND = 3
EXIT_UNMET = 4

warnings.simplefilter("default")


def _print_err(msg=None, *args):
    print(msg, *args, file=sys.stderr)


def _settings(args):
    """Merge configuration values into unset command line options."""
    cfg = config.load_config()
    search, constants, output = cfg["search"], cfg["constants"], cfg["output"]
    for key in ("seed", "budget", "threads", "verify_limit"):
        if getattr(args, key, None) is None:
            setattr(args, key, search[key])
    if not getattr(args, "override_threshold", False):
        args.override_threshold = search["override_threshold"]
    if getattr(args, "tol", None) is None:
        args.tol = constants["tol"]
    if not getattr(args, "tower", False):
        args.tower = constants["gamma_mode"] == "tower"
    if not args.json:
        args.json = output["format"] == "json"
    args.field_given = getattr(args, "q", None) is not None
    if not args.field_given:
        args.q = cfg["catalog"]["default_q"]
    return cfg


def _mode(args):
    return "tower" if args.tower else "flat"


def _budget(args):
    return SearchBudget(args.budget, seed=args.seed)


def _parse_params(pairs):
    params = {}
    for pair in pairs or ():
        key, sep, value = pair.partition("=")
        if not sep:
            raise ValueError(f"Parameters are written as key=value, got '{pair}'.")
        values = [int(v) for v in value.split(",")]
        params[key.strip()] = tuple(values) if "," in value else values[0]
    return params


def _int_list(value):
    try:
        return [int(v) for v in value.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{value}' is not a comma-separated list of integers.")


def _catalog_name(args):
    if args.name and args.name_option and args.name != args.name_option:
        raise ValueError("The catalog name is given twice.")
    name = args.name or args.name_option
    if not name:
        raise ValueError("A catalog name is required; pass NAME or --name NAME.")
    return name


def _load_system(args):
    if args.A and args.catalog:
        raise ValueError("Specify either -A or --catalog, not both.")
    if args.A:
        return read_matrix(args.A)
    if args.catalog:
        return make_system(args.catalog, args.q, **_parse_params(args.param))
    raise ValueError("A system is required; pass -A FILE or --catalog NAME.")


def _given_field(args):
    """Return the field of ``--q``, or None when the ``-S`` header decides it."""
    if args.S and not getattr(args, "field_given", True):
        return None
    return parse_order(args.q)


def _load_pointset(args, ctx):
    if args.S:
        S = read_pointset(args.S)
        if ctx is not None and S.ctx != ctx:
            raise FormatError(args.S, 1, f"Point set over F_{S.ctx.label}, system over F_{ctx.label}.")
        return S
    if args.dim is None:
        raise ValueError("A point set is required; pass -S FILE or --dim N.")
    if args.size is None:
        return PointSet.full(ctx, args.dim)
    return PointSet.random(ctx, args.dim, args.size, seed=args.seed)


def _load_system_and_pointset(args):
    """Load the system and the point set over one field.

    Without an explicit ``--q`` a catalog system is built over the field of
    the ``-S`` file.
    """
    if args.catalog and not args.A and _given_field(args) is None:
        S = _load_pointset(args, None)
        args.q = S.ctx
        return _load_system(args), S
    A = _load_system(args)
    return A, _load_pointset(args, A.ctx)


def _text_lines(value, indent=""):
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, dict) and item:
                yield f"{indent}{key}:"
                yield from _text_lines(item, indent + "  ")
            elif isinstance(item, list) and item and isinstance(item[0], dict):
                yield f"{indent}{key}:"
                for i, entry in enumerate(item):
                    yield f"{indent}  [{i}]"
                    yield from _text_lines(entry, indent + "    ")
            else:
                yield f"{indent}{key}: {json.dumps(item)}"
    else:
        yield f"{indent}{json.dumps(value)}"


def _emit(args, command, payload):
    """Print a report (and write it to ``-o``) as JSON or text."""
    report = {"schema_version": SCHEMA_VERSION, "balsys_version": __version__, "command": command}
    report.update(json.loads(json.dumps(payload)))
    if args.json:
        text = json.dumps(report, indent=2)
    else:
        text = "\n".join(_text_lines(report))
    print(text)
    if getattr(args, "output", None):
        with FileLock(args.output + ".lock"):
            with open(args.output, "a") as file:
                file.write(text + "\n")


def _exit_code(report):
    if report.outcome == FOUND:
        return EXIT_OK
    if report.outcome == BELOW_THRESHOLD:
        return EXIT_UNMET
    return EXIT_NOT_FOUND


def main_classify(args):
    """Handle classify subcommand."""
    A = _load_system(args)
    profile = A.profile
    if not profile.balanced:
        logger.warning("The system is not balanced; the constructions assume balanced systems.")
    if not profile.nondegenerate:
        logger.warning("The system is degenerate (dependent rows or zero columns).")
    payload = {"field": A.ctx.label, "profile": profile}
    if args.catalog:
        payload["expected"] = expected_profile(args.catalog, A.ctx, **_parse_params(args.param))
    _emit(args, "classify", payload)
    return EXIT_OK


def main_find(args):
    """Handle find subcommand."""
    if args.kind == "wshape":
        ctx = read_matrix(args.A).ctx if args.A else _given_field(args)
        A, S = None, _load_pointset(args, ctx)
    else:
        A, S = _load_system_and_pointset(args)
    report = run_finder(
        args.kind,
        A,
        S,
        override=args.override_threshold,
        budget=_budget(args),
        threads=args.threads,
        mode=_mode(args),
        generic=args.generic,
    )
    _emit(args, "find", {"field": S.ctx.label, "n": S.n, "size": len(S), "report": report})
    return _exit_code(report)


def main_constants(args):
    """Handle constants subcommand."""
    ctx = parse_order(args.q)
    mode = _mode(args)
    J = compute_J(ctx.q, args.tol)
    G = gamma(ctx.q, mode, args.tol)
    payload = {
        "q": ctx.q,
        "J": {"value": J.value, "interval": [J.lo, J.hi], "minimizer": J.minimizer},
        "gamma": G,
    }
    if args.A or args.catalog:
        if args.n is None:
            raise ValueError("Thresholds need the dimension --n.")
        A = _load_system(args)
        table = {}
        for kind in THRESHOLD_KINDS:
            table[kind] = thresholds(A, args.n, kind, t=args.t, lam=args.lam, mode=mode)
        payload["thresholds"] = {"n": args.n, "k": A.k, "values": table}
    _emit(args, "constants", payload)
    return EXIT_OK


def main_apdiff(args):
    """Handle apdiff subcommand."""
    S = _load_pointset(args, _given_field(args))
    ctx = S.ctx
    try:
        witness = ap_in_difference(S, args.k, override=args.override_threshold, budget=_budget(args))
    except (NotFoundError, BudgetExceededError) as error:
        _emit(args, "apdiff", {"outcome": "exhausted", "reason": str(error)})
        return EXIT_NOT_FOUND
    _emit(args, "apdiff", {"outcome": "found", "field": ctx.label, "n": S.n, "witness": witness})
    return EXIT_OK


def main_airgeneric(args):
    """Handle airgeneric subcommand."""
    A, S = _load_system_and_pointset(args)
    try:
        result = generic_in_air_sumset(
            A,
            [c for chunk in args.b for c in chunk],
            S,
            route=args.route,
            override=args.override_threshold,
            budget=_budget(args),
            mode=_mode(args),
        )
    except (NotFoundError, BudgetExceededError) as error:
        _emit(args, "airgeneric", {"outcome": "exhausted", "reason": str(error)})
        return EXIT_NOT_FOUND
    _emit(args, "airgeneric", {"outcome": "found", "field": A.ctx.label, "witness": result})
    return EXIT_OK


def main_extremal(args):
    """Handle extremal subcommand."""
    show = args.verbosity >= 3 and not args.json
    if args.tricoloured:
        ctx = parse_order(args.q)
        result = max_tricoloured(ctx, args.dim, budget=_budget(args))
        _emit(args, "extremal", {"field": ctx.label, "n": args.dim, "tricoloured": result})
        return EXIT_OK
    A = _load_system(args)
    result = max_shape_free(A, args.dim, budget=_budget(args), show_progress=show)
    _emit(args, "extremal", {"field": A.ctx.label, "n": args.dim, "shape_free": result})
    return EXIT_OK


def main_catalog_list(args):
    """Handle catalog list subcommand."""
    _emit(args, "catalog", {"entries": list_entries()})
    return EXIT_OK


def main_catalog_emit(args):
    """Handle catalog emit subcommand."""
    A = make_system(_catalog_name(args), args.q, **_parse_params(args.param))
    text = format_matrix(A)
    if args.output:
        with FileLock(args.output + ".lock"):
            with open(args.output, "w") as file:
                file.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main_catalog_show(args):
    """Handle catalog show subcommand."""
    name = _catalog_name(args)
    entry, _ = get_entry(name)
    params = _parse_params(args.param)
    ctx = parse_order(args.q)
    payload = {
        "entry": entry,
        "field": ctx.label,
        "expected": expected_profile(name, ctx, **params),
    }
    _emit(args, "catalog", payload)
    return EXIT_OK


def _read_selected_config(args):
    cfg = None
    if args.local and args.globalcfg:
        raise ValueError("You can specify either -l/--local or -g/--global, not both.")
    elif args.local:
        for fn in config.CONFIG_FILENAMES:
            if os.path.isfile(fn):
                if cfg is None:
                    cfg = config.read_config_file(fn)
                else:
                    cfg.merge(config.read_config_file(fn))
    elif args.globalcfg:
        if os.path.isfile(config.FN_CONFIG):
            cfg = config.read_config_file(config.FN_CONFIG)
    else:
        cfg = config.load_config()
    return cfg


def verify_config(cfg):
    """Verify provided configuration and report invalid keys on stderr."""
    verification = cfg.verify(preserve_errors=True)
    if verification is True:
        _print_err("Passed.")
        return True
    for key in config.invalid_keys(verification):
        _print_err(f"{key} : invalid value")
    return False


def main_config_show(args):
    """Handle config show subcommand."""
    cfg = _read_selected_config(args)
    if cfg is None:
        mode = " local " if args.local else " global " if args.globalcfg else ""
        _print_err(f"Did not find a{mode}configuration file.")
        return EXIT_OK
    for key in args.key:
        for kt in key.split("."):
            cfg = cfg.get(kt)
            if cfg is None:
                break
    if not isinstance(cfg, dict):
        print(cfg)
    else:
        for line in config.Config(cfg).write():
            print(line)
    return EXIT_OK


def main_config_verify(args):
    """Handle config verify subcommand."""
    cfg = _read_selected_config(args)
    if cfg is None:
        raise ConfigError("Did not find a configuration file.")
    if cfg.filename is not None:
        _print_err(f"Verification of config file '{cfg.filename}'.")
    if not verify_config(cfg):
        raise ConfigError("The configuration contains invalid values.")
    return EXIT_OK


def main_config_set(args):
    """Handle config set subcommand."""
    if args.local and args.globalcfg:
        raise ValueError("You can specify either -l/--local or -g/--global, not both.")
    if args.globalcfg:
        fn_config = config.FN_CONFIG
    else:
        fn_config = config.DEFAULT_FILENAME
        for fn in config.CONFIG_FILENAMES:
            if os.path.isfile(fn):
                fn_config = fn
                break
    if os.path.isfile(fn_config):
        cfg = config.read_config_file(fn_config)
    else:
        cfg = config.get_config(fn_config)
    keys = args.key.split(".")
    if len(keys) != 2:
        raise ValueError(f"Keys are written as section.name, got '{args.key}'.")
    if not args.value:
        raise ValueError("No value argument provided!")
    value = args.value[0] if len(args.value) == 1 else args.value
    sec = cfg.setdefault(keys[0], {})
    sec[keys[1]] = value
    if not args.force:
        check = config.get_config(configspec=None)
        check.merge(cfg)
        result = check.verify()
        if result is not True:
            raise ConfigError(f"Invalid value for {config.invalid_keys(result)}; use -f to force.")
    _print_err(f"Updated value '{args.key}'='{value}'.")
    _print_err(f"Writing configuration to '{os.path.abspath(fn_config)}'.")
    cfg.write()
    return EXIT_OK


def _add_field_argument(parser):
    parser.add_argument("--q", help="Field order p or p^s (default from the configuration).")


def _add_system_arguments(parser):
    _add_field_argument(parser)
    parser.add_argument("-A", dest="A", help="Matrix file of the system.")
    parser.add_argument("--catalog", help="Name of a catalog system, e.g. 'star' or '3ap'.")
    parser.add_argument(
        "--param", action="append", help="Catalog parameter as key=value (lists as a=1,-1,1,-1)."
    )


def _add_set_arguments(parser):
    parser.add_argument("-S", dest="S", help="Point-set file.")
    parser.add_argument("--dim", type=int, help="Dimension n of F_q^n when no -S file is given.")
    parser.add_argument("--size", type=int, help="Draw this many random points instead of all of F_q^n.")


def _add_search_arguments(parser):
    parser.add_argument("--seed", type=int, help="Seed of all random choices.")
    parser.add_argument("--budget", type=int, help="Maximal number of candidate evaluations.")
    parser.add_argument(
        "--override-threshold",
        action="store_true",
        help="Search even when the point set is below the guaranteed-success size.",
    )
    parser.add_argument("--threads", type=int, help="Threads for exhaustive enumeration.")
    parser.add_argument("--tower", action="store_true", help="Use the tower form of Gamma_q.")


def _add_name_arguments(parser):
    parser.add_argument("name", nargs="?", help="Catalog name.")
    parser.add_argument("--name", dest="name_option", metavar="NAME", help="Catalog name.")


def _add_output_arguments(parser):
    parser.add_argument("--json", action="store_true", help="Print the report as JSON.")
    parser.add_argument("-o", "--output", help="Append the report to this file.")


def main():
    """Provide command line interface."""
    parser = argparse.ArgumentParser(
        description="balsys finds shapes and generic solutions of balanced linear "
        "systems in subsets of F_q^n."
    )
    parser.add_argument(
        "--debug", action="store_true", help="Show traceback on error for debugging."
    )
    parser.add_argument(
        "--version", action="store_true", help="Display the version number and exit."
    )
    add_verbosity_argument(parser, default=2)
    subparsers = parser.add_subparsers()

    parser_classify = subparsers.add_parser("classify", help="Classify a system.")
    _add_system_arguments(parser_classify)
    _add_output_arguments(parser_classify)
    parser_classify.set_defaults(func=main_classify)

    parser_find = subparsers.add_parser("find", help="Find a witness in a point set.")
    parser_find.add_argument("kind", choices=FINDER_KINDS)
    _add_system_arguments(parser_find)
    _add_set_arguments(parser_find)
    _add_search_arguments(parser_find)
    parser_find.add_argument(
        "--generic", action="store_true", help="Ask wshape for a generic solution."
    )
    _add_output_arguments(parser_find)
    parser_find.set_defaults(func=main_find)

    parser_constants = subparsers.add_parser("constants", help="Print J, Gamma and thresholds.")
    parser_constants.add_argument("--tower", action="store_true", help="Use the tower form of Gamma_q.")
    parser_constants.add_argument("--tol", type=float, help="Width of the enclosure of J.")
    parser_constants.add_argument("--n", type=int, help="Dimension for the thresholds.")
    parser_constants.add_argument("--t", type=int, help="Number of pairs or recombinations.")
    parser_constants.add_argument("--lam", type=int, help="Round of the beta constant.")
    _add_system_arguments(parser_constants)
    _add_output_arguments(parser_constants)
    parser_constants.set_defaults(func=main_constants)

    parser_apdiff = subparsers.add_parser(
        "apdiff", help="Find a progression of nonzero differences in S - S."
    )
    parser_apdiff.add_argument("-k", "--k", dest="k", type=int, default=3, help="Length of the progression.")
    _add_field_argument(parser_apdiff)
    _add_set_arguments(parser_apdiff)
    _add_search_arguments(parser_apdiff)
    _add_output_arguments(parser_apdiff)
    parser_apdiff.set_defaults(func=main_apdiff)

    parser_air = subparsers.add_parser(
        "airgeneric", help="Find a linearly generic solution in a sumset of S."
    )
    _add_system_arguments(parser_air)
    parser_air.add_argument(
        "-b",
        type=_int_list,
        nargs="+",
        required=True,
        help="Coefficients b_1 .. b_l summing to zero, e.g. 1,-1.",
    )
    parser_air.add_argument("--route", choices=AIR_ROUTES, default="auto")
    _add_set_arguments(parser_air)
    _add_search_arguments(parser_air)
    _add_output_arguments(parser_air)
    parser_air.set_defaults(func=main_airgeneric)

    parser_extremal = subparsers.add_parser(
        "extremal", help="Compute exact extremal sizes in small spaces."
    )
    _add_system_arguments(parser_extremal)
    parser_extremal.add_argument("--n", "--dim", dest="dim", type=int, required=True, help="Dimension n.")
    parser_extremal.add_argument(
        "--tricoloured",
        action="store_true",
        help="Longest tricoloured sum-free sequence instead of a shape-free set.",
    )
    parser_extremal.add_argument("--seed", type=int, help=argparse.SUPPRESS)
    parser_extremal.add_argument("--budget", type=int, help="Maximal number of search nodes.")
    _add_output_arguments(parser_extremal)
    parser_extremal.set_defaults(func=main_extremal)

    parser_catalog = subparsers.add_parser("catalog", help="Named example systems.")
    catalog_subparsers = parser_catalog.add_subparsers()

    parser_list = catalog_subparsers.add_parser("list")
    _add_output_arguments(parser_list)
    parser_list.set_defaults(func=main_catalog_list)

    parser_emit = catalog_subparsers.add_parser("emit")
    _add_name_arguments(parser_emit)
    _add_field_argument(parser_emit)
    parser_emit.add_argument("--param", action="append")
    parser_emit.add_argument("-o", "--output", help="Write the matrix file here.")
    parser_emit.set_defaults(func=main_catalog_emit, json=False)

    parser_entry = catalog_subparsers.add_parser("show")
    _add_name_arguments(parser_entry)
    _add_field_argument(parser_entry)
    parser_entry.add_argument("--param", action="append")
    _add_output_arguments(parser_entry)
    parser_entry.set_defaults(func=main_catalog_show)

    parser_config = subparsers.add_parser("config")
    parser_config.add_argument(
        "-g",
        "--global",
        dest="globalcfg",
        action="store_true",
        help="Modify the global configuration.",
    )
    parser_config.add_argument(
        "-l", "--local", action="store_true", help="Modify the local configuration."
    )
    config_subparsers = parser_config.add_subparsers()

    parser_show = config_subparsers.add_parser("show")
    parser_show.add_argument(
        "key",
        type=str,
        nargs="*",
        help="The key(s) to show, omit to show the full configuration.",
    )
    parser_show.set_defaults(func=main_config_show, json=False, configure=False)

    parser_set = config_subparsers.add_parser("set")
    parser_set.add_argument("key", type=str, help="The key to modify, e.g. search.seed.")
    parser_set.add_argument(
        "value", type=str, nargs="*", help="The value to set key to."
    )
    parser_set.add_argument(
        "-f", "--force", action="store_true", help="Override any validation warnings."
    )
    parser_set.set_defaults(func=main_config_set, json=False, configure=False)

    parser_verify = config_subparsers.add_parser("verify")
    parser_verify.set_defaults(func=main_config_verify, json=False, configure=False)

    # This is a hack, as argparse itself does not
    # allow to parse only --version without any
    # of the other required arguments.
    if "--version" in sys.argv:
        print("balsys", __version__)
        sys.exit(EXIT_OK)

    args = parser.parse_args()
    if args.debug:
        logging.basicConfig(level=logging.DEBUG)
    else:
        log_level = [
            logging.CRITICAL,
            logging.ERROR,
            logging.WARNING,
            logging.INFO,
            logging.MORE,
            logging.DEBUG,
        ][min(args.verbosity, 5)]
        logging.basicConfig(level=log_level)

    if not hasattr(args, "func"):
        parser.print_usage()
        sys.exit(EXIT_USAGE)
    try:
        if getattr(args, "configure", True):
            _settings(args)
        code = args.func(args)
    except KeyboardInterrupt:
        _print_err()
        _print_err("Interrupted.")
        if args.debug:
            raise
        sys.exit(EXIT_ERROR)
    except (FormatError, ConfigError, FieldError, UnknownSystemError, DimensionError) as error:
        _print_err(f"Error: {error}")
        if args.debug:
            raise
        sys.exit(EXIT_USAGE)
    except (BelowThresholdError, NotApplicableError, DegenerateSystemError) as error:
        _print_err(f"Error: {error}")
        if args.debug:
            raise
        sys.exit(EXIT_UNMET)
    except (NotFoundError, BudgetExceededError) as error:
        _print_err(f"Error: {error}")
        if args.debug:
            raise
        sys.exit(EXIT_NOT_FOUND)
    except ValueError as error:
        _print_err(f"Error: {error}")
        if args.debug:
            raise
        sys.exit(EXIT_USAGE)
    except Exception as error:
        _print_err(f"Error: {error}")
        if args.debug:
            raise
        sys.exit(EXIT_ERROR)
    else:
        sys.exit(code or EXIT_OK)


if __name__ == "__main__":
    main()
