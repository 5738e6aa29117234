"""Command-line parser construction for the WLAN locator."""

import argparse
import sys

from config import DEFAULT_CONFIG_FILE
from search import SEARCHES
from site_model import PRESETS

EXIT_USAGE = 1


class LocatorArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--config',
        default=DEFAULT_CONFIG_FILE,
        help=f'Path to the JSON settings file (default: {DEFAULT_CONFIG_FILE}; missing default file = built-in defaults)',
    )
    parser.add_argument(
        '-q',
        '--quiet',
        action='store_true',
        default=False,
        help='Suppress progress and error messages on standard error',
    )


def _add_site(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument('--preset', choices=sorted(PRESETS), help='Built-in site model')
    group.add_argument('--site', help='Site file (SITE / AP lines)')


def _add_search(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--search',
        default='kdtree',
        choices=sorted(SEARCHES),
        help='Neighbor search strategy (default: kdtree)',
    )
    parser.add_argument('--epsilon', type=float, default=None,
                        help='Approximation factor for kd-tree search, >= 0 (default: from config, 0)')


def build_parser() -> argparse.ArgumentParser:
    """Create the command-line argument parser."""
    parser = LocatorArgumentParser(
        description='WLAN RSSI-fingerprint indoor localization toolkit',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py build-map --preset uq --spacing 5 --out map.rm
  python main.py simulate-scan --preset uq --x 12.5 --y 30 --mode active --seed 7 --out scan.txt
  python main.py locate --map map.rm --scan scan.txt --k 3
  python main.py serve --map map.rm --bind 127.0.0.1:7117
  python main.py request --bind 127.0.0.1:7117 --scan scan.txt --k 3
  python main.py eval --map map.rm --preset uq --k 3 --trials 200 --seed 1 --sigma 4
  python main.py eval --preset uq --k 1,3,5,77 --trials 200 --seed 1 --sigma 4
  python main.py eval --preset uq --spacing 2,5,10 --k 3 --trials 200 --seed 1
        """,
    )
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')

    build = commands.add_parser('build-map', help='Build a noise-free radio map over a site')
    _add_site(build)
    build.add_argument('--spacing', type=float, default=None, help='Grid spacing in metres (default: from config, 5)')
    build.add_argument('--out', required=True, help='Radio map file to write')
    _add_common(build)

    scan = commands.add_parser('simulate-scan', help='Simulate one scan at a position')
    _add_site(scan)
    scan.add_argument('--x', type=float, required=True, help='Client x in metres')
    scan.add_argument('--y', type=float, required=True, help='Client y in metres')
    scan.add_argument('--mode', choices=['passive', 'active'], default='passive',
                      help='passive = RF monitoring, active = probing (default: passive)')
    scan.add_argument('--sigma', type=float, default=None, help='Shadowing std dev in dB (default: from config)')
    scan.add_argument('--seed', type=int, default=None, help='Noise seed (default: from config, 1)')
    scan.add_argument('--out', default=None, help='Scan file to write (default: standard output)')
    _add_common(scan)

    locate = commands.add_parser('locate', help='Locate one scan against a radio map')
    locate.add_argument('--map', required=True, help='Radio map file')
    locate.add_argument('--scan', required=True, help='Scan text file')
    locate.add_argument('--k', type=int, default=None, help='Number of neighbors (default: from config, 3)')
    locate.add_argument('--mode', choices=['passive', 'active'], default=None,
                        help='Scan mode (default: inferred from hidden ESSIDs)')
    locate.add_argument('--format', default='text', choices=['text', 'json'],
                        help='Output format (default: text)')
    _add_search(locate)
    _add_common(locate)

    serve = commands.add_parser('serve', help='Run the location server')
    serve.add_argument('--map', required=True, help='Radio map file')
    serve.add_argument('--bind', default=None, help='host:port to listen on (default: 127.0.0.1:7117)')
    _add_search(serve)
    _add_common(serve)

    request = commands.add_parser('request', help='Send one scan to a location server')
    request.add_argument('--bind', default=None, help='host:port of the server (default: 127.0.0.1:7117)')
    request.add_argument('--scan', required=True, help='Scan text file')
    request.add_argument('--k', type=int, default=None, help='Number of neighbors (default: from config, 3)')
    request.add_argument('--mode', choices=['passive', 'active'], default=None,
                         help='Scan mode (default: inferred from hidden ESSIDs)')
    request.add_argument('--timeout', type=float, default=5.0, help='Socket timeout in seconds (default: 5)')
    _add_common(request)

    evaluate = commands.add_parser('eval', help='Run localization experiments and print CSV metrics')
    _add_site(evaluate)
    evaluate.add_argument('--map', default=None, help='Radio map file (default: build one from the site)')
    evaluate.add_argument('--spacing', default=None,
                          help='Grid spacing(s) in metres, comma separated; several values run a spacing sweep')
    evaluate.add_argument('--k', default=None, help='k value(s), comma separated; several values run a k sweep')
    evaluate.add_argument('--sigma', type=float, default=None, help='Shadowing std dev in dB (default: from config)')
    evaluate.add_argument('--trials', type=int, default=None, help='Number of test positions (default: from config, 200)')
    evaluate.add_argument('--seed', type=int, default=None, help='Experiment seed (default: from config, 1)')
    evaluate.add_argument('--mode', choices=['passive', 'active'], default='passive',
                          help='Scan mode of the simulated clients (default: passive)')
    evaluate.add_argument('--out', default=None, help='Write the summary CSV here instead of standard output')
    evaluate.add_argument('--errors-out', default=None,
                          help='Also write per-trial errors (CDF table); requires a single k')
    _add_search(evaluate)
    _add_common(evaluate)

    return parser
