#!/usr/bin/env python3
"""
WLAN Locator - build radio maps, simulate scans and locate clients by k-NN
fingerprint matching

Exit codes: 0 success, 1 usage error, 2 runtime error.
"""

import argparse
import sys

from cli_parser import EXIT_USAGE, build_parser
from cli_support import (
    UsageError,
    estimate_json,
    format_estimate,
    load_config,
    parse_float_list,
    parse_int_list,
    pick,
    resolve_mode,
    resolve_model,
    resolve_site,
    write_output,
)
from config import Config
from errors import LocatorError
from logger import Logger

EXIT_OK = 0
EXIT_RUNTIME = 2


def cmd_build_map(args: argparse.Namespace, config: Config, logger: Logger) -> int:
    from map_format import save_radio_map
    from simulator import build_radio_map

    site = resolve_site(args)
    spacing = pick(args.spacing, config.get_spacing())
    radio_map = build_radio_map(site, spacing, resolve_model(args, config))
    save_radio_map(radio_map, args.out, logger=logger)
    return EXIT_OK


def cmd_simulate_scan(args: argparse.Namespace, config: Config, logger: Logger) -> int:
    from scan_format import serialize_scan
    from simulator import simulate_scan

    site = resolve_site(args)
    obs = simulate_scan(site, (args.x, args.y), resolve_mode(args.mode), resolve_model(args, config),
                        pick(args.seed, config.get_seed()))
    write_output(serialize_scan(obs), args.out, logger, "Scan")
    return EXIT_OK


def cmd_locate(args: argparse.Namespace, config: Config, logger: Logger) -> int:
    from locator import Locator
    from map_format import load_radio_map
    from scan_format import load_scan

    radio_map = load_radio_map(args.map)
    obs = load_scan(args.scan, mode=resolve_mode(args.mode))
    locator = Locator(radio_map, search=args.search, leaf_size=config.get_leaf_size())
    estimate = locator.locate(obs, pick(args.k, config.get_k()), pick(args.epsilon, config.get_epsilon()))
    if args.format == 'json':
        print(estimate_json(estimate, radio_map))
    else:
        print(format_estimate(estimate))
    return EXIT_OK


def cmd_serve(args: argparse.Namespace, config: Config, logger: Logger) -> int:
    from map_format import load_radio_map
    from server import serve

    radio_map = load_radio_map(args.map)
    serve(radio_map, bind=pick(args.bind, config.get_bind()), epsilon=pick(args.epsilon, config.get_epsilon()),
          search=args.search, leaf_size=config.get_leaf_size(), logger=logger)
    return EXIT_OK


def cmd_request(args: argparse.Namespace, config: Config, logger: Logger) -> int:
    from client import request_locate
    from scan_format import load_scan

    obs = load_scan(args.scan, mode=resolve_mode(args.mode))
    estimate = request_locate(pick(args.bind, config.get_bind()), obs, pick(args.k, config.get_k()),
                              timeout=args.timeout)
    print(format_estimate(estimate))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace, config: Config, logger: Logger) -> int:
    from evaluation import evaluate, k_sweep, spacing_sweep
    from locator import Locator
    from map_format import load_radio_map
    from report_files import spacing_csv, sweep_csv, trials_csv
    from simulator import build_radio_map

    site = resolve_site(args)
    model = resolve_model(args, config)
    k_values = parse_int_list(args.k, '--k') if args.k else [config.get_k()]
    spacings = parse_float_list(args.spacing, '--spacing') if args.spacing else [config.get_spacing()]
    epsilon = pick(args.epsilon, config.get_epsilon())
    n_trials = pick(args.trials, config.get_trials())
    seed = pick(args.seed, config.get_seed())
    mode = resolve_mode(args.mode)
    leaf_size = config.get_leaf_size()

    if n_trials < 1:
        raise UsageError("--trials must be >= 1")
    if len(spacings) > 1 and args.map:
        raise UsageError("a --spacing sweep builds its own maps and cannot be combined with --map")
    if len(spacings) > 1 and len(k_values) > 1:
        raise UsageError("sweep either --k or --spacing, not both")
    if args.errors_out and (len(k_values) > 1 or len(spacings) > 1):
        raise UsageError("--errors-out needs a single --k and a single --spacing")

    logger.info(f"Evaluating {n_trials} trials, seed {seed}, sigma {model.shadowing_sigma_db} dB, "
                f"mode {mode.value}, search {args.search}")

    if len(spacings) > 1:
        rows = spacing_sweep(site, model, spacings, k_values[0], epsilon, n_trials, seed, mode,
                             search=args.search, leaf_size=leaf_size, logger=logger)
        write_output(spacing_csv(rows), args.out, logger, "Report")
        return EXIT_OK

    radio_map = load_radio_map(args.map) if args.map else build_radio_map(site, spacings[0], model)
    rows = k_sweep(radio_map, site, model, k_values, epsilon, n_trials, seed, mode,
                   search=args.search, leaf_size=leaf_size, logger=logger)
    write_output(sweep_csv(rows), args.out, logger, "Report")

    if args.errors_out:
        locator = Locator(radio_map, search=args.search, leaf_size=leaf_size)
        report = evaluate(radio_map, site, model, k_values[0], epsilon, n_trials, seed, mode, locator=locator)
        write_output(trials_csv(report), args.errors_out, logger, "Per-trial errors")
    return EXIT_OK


COMMANDS = {
    'build-map': cmd_build_map,
    'simulate-scan': cmd_simulate_scan,
    'locate': cmd_locate,
    'serve': cmd_serve,
    'request': cmd_request,
    'eval': cmd_eval,
}


def main(argv: list[str] | None = None) -> int:
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    logger = Logger(quiet=args.quiet)
    config = load_config(args, logger)

    try:
        return COMMANDS[args.command](args, config, logger)
    except UsageError as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (LocatorError, OSError) as e:
        logger.error(f"Error: {e}")
        return EXIT_RUNTIME
    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        return EXIT_RUNTIME


if __name__ == '__main__':
    sys.exit(main())
