"""Runtime helpers shared by the CLI entry point."""

import argparse
import json
import sys

from config import DEFAULT_CONFIG_FILE, Config
from logger import Logger
from models import PositionEstimate, RadioMap, ScanMode
from propagation import PathLossModel
from site_model import PRESETS, Site, load_site


class UsageError(Exception):
    """Flag combination the parser cannot express; reported like an argparse error."""


def load_config(args: argparse.Namespace, logger: Logger) -> Config:
    """An explicitly named config file must exist; the default one may be absent."""
    return Config(args.config, logger=logger, required=args.config != DEFAULT_CONFIG_FILE)


def resolve_site(args: argparse.Namespace) -> Site:
    if args.site:
        return load_site(args.site)
    return PRESETS[args.preset]()


def resolve_model(args: argparse.Namespace, config: Config) -> PathLossModel:
    """Config model, with --sigma overriding the shadowing term when given."""
    model = config.get_path_loss_model()
    sigma = getattr(args, 'sigma', None)
    return model.with_sigma(sigma) if sigma is not None else model


def resolve_mode(value: str | None) -> ScanMode | None:
    return ScanMode(value) if value else None


def pick(cli_value, config_value):
    """CLI flag wins over config."""
    return cli_value if cli_value is not None else config_value


def parse_int_list(text: str, flag: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}") from None
    if not values:
        raise UsageError(f"{flag} needs at least one value")
    return values


def parse_float_list(text: str, flag: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated numbers, got {text!r}") from None
    if not values:
        raise UsageError(f"{flag} needs at least one value")
    return values


def format_estimate(estimate: PositionEstimate) -> str:
    return f"x={estimate.pos[0]:.2f} y={estimate.pos[1]:.2f} k={estimate.k_used}"


def estimate_json(estimate: PositionEstimate, radio_map: RadioMap) -> str:
    """JSON document for --format json: estimate plus the neighbors behind it."""
    return json.dumps({
        'x': round(estimate.pos[0], 2),
        'y': round(estimate.pos[1], 2),
        'k': estimate.k_used,
        'neighbors': [
            {
                'index': n.index,
                'x': radio_map.entries[n.index].pos[0],
                'y': radio_map.entries[n.index].pos[1],
                'distance_db': round(n.distance, 4),
            }
            for n in estimate.neighbors
        ],
    }, indent=2)


def write_output(text: str, out: str | None, logger: Logger, label: str) -> None:
    """Write to a file when out is set, else to standard output."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
    logger.info(f"{label} saved to: {out}")
