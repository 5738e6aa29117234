"""
Radio map persistence.

    RADIOMAP v1 spacing=<m>
    AP <i> <mac> <essid> <x> <y> <z>
    PT <x> <y> <rssi_0> ... <rssi_{D-1}>

dBm values are written with 2 decimals, coordinates with the shortest text that
reads back exactly. The roster must precede the entries; '#' starts a comment.
"""

import re
from pathlib import Path

from errors import InvalidInputError, ParseError
from line_format import content_lines, format_float, parse_float
from logger import Logger
from models import AccessPoint, Fingerprint, MapEntry, RadioMap

_HEADER_RE = re.compile(r'^RADIOMAP v1 spacing=(\S+)$')


def serialize_radio_map(radio_map: RadioMap) -> str:
    lines = [f"RADIOMAP v1 spacing={format_float(radio_map.spacing)}"]
    for i, ap in enumerate(radio_map.roster):
        if not ap.essid or any(ch.isspace() for ch in ap.essid) or '#' in ap.essid:
            raise InvalidInputError(f"ESSID {ap.essid!r} cannot be written as a single token")
        x, y, z = (format_float(v) for v in ap.pos)
        lines.append(f"AP {i} {ap.mac} {ap.essid} {x} {y} {z}")
    for entry in radio_map.entries:
        values = ' '.join(f"{v:.2f}" for v in entry.fp.rssi)
        lines.append(f"PT {format_float(entry.pos[0])} {format_float(entry.pos[1])} {values}".rstrip())
    return '\n'.join(lines) + '\n'


def parse_radio_map(text: str) -> RadioMap:
    spacing: float | None = None
    roster: list[AccessPoint] = []
    entries: list[MapEntry] = []
    positions: dict[tuple[float, float], int] = {}
    last_line = 0

    for line_no, tokens in content_lines(text):
        last_line = line_no
        if spacing is None:
            match = _HEADER_RE.match(' '.join(tokens))
            if not match:
                raise ParseError(line_no, "expected 'RADIOMAP v1 spacing=<m>' header")
            spacing = parse_float(match.group(1), line_no, "spacing")
            if spacing <= 0:
                raise ParseError(line_no, f"spacing must be > 0, got {spacing}")
            continue

        keyword = tokens[0]
        if keyword == 'AP':
            if entries:
                raise ParseError(line_no, "AP lines must precede PT lines")
            roster.append(_parse_ap(tokens, line_no, expected_index=len(roster), roster=roster))
        elif keyword == 'PT':
            entry = _parse_entry(tokens, line_no, dimension=len(roster))
            if entry.pos in positions:
                raise ParseError(line_no, f"duplicate position {entry.pos} (first on line {positions[entry.pos]})")
            positions[entry.pos] = line_no
            entries.append(entry)
        else:
            raise ParseError(line_no, f"unknown record type {keyword!r}")

    if spacing is None:
        raise ParseError(max(last_line, 1), "missing RADIOMAP header")
    if not entries:
        raise ParseError(max(last_line, 1), "radio map has no entries")
    return RadioMap(roster=tuple(roster), spacing=spacing, entries=tuple(entries))


def _parse_ap(tokens: list[str], line_no: int, expected_index: int, roster: list[AccessPoint]) -> AccessPoint:
    if len(tokens) != 7:
        raise ParseError(line_no, "expected 'AP <i> <mac> <essid> <x> <y> <z>'")
    if tokens[1] != str(expected_index):
        raise ParseError(line_no, f"expected roster index {expected_index}, got {tokens[1]!r}")
    try:
        ap = AccessPoint(
            mac=tokens[2],
            essid=tokens[3],
            cloaked=False,
            pos=(parse_float(tokens[4], line_no, "x"),
                 parse_float(tokens[5], line_no, "y"),
                 parse_float(tokens[6], line_no, "z")),
        )
    except InvalidInputError as e:
        raise ParseError(line_no, str(e)) from None
    if any(existing.mac == ap.mac for existing in roster):
        raise ParseError(line_no, f"duplicate AP {ap.mac}")
    return ap


def _parse_entry(tokens: list[str], line_no: int, dimension: int) -> MapEntry:
    if dimension == 0:
        raise ParseError(line_no, "PT line before any AP line")
    if len(tokens) < 3:
        raise ParseError(line_no, "expected 'PT <x> <y> <rssi>...'")
    values = tokens[3:]
    if len(values) != dimension:
        raise ParseError(line_no, f"expected {dimension} RSSI values, got {len(values)}")
    x = parse_float(tokens[1], line_no, "x")
    y = parse_float(tokens[2], line_no, "y")
    rssi = [parse_float(tok, line_no, "RSSI") for tok in values]
    try:
        return MapEntry(pos=(x, y), fp=Fingerprint(tuple(rssi)))
    except InvalidInputError as e:
        raise ParseError(line_no, str(e)) from None


def save_radio_map(radio_map: RadioMap, path: str | Path, logger: Logger | None = None) -> None:
    logger = logger or Logger(quiet=True)
    Path(path).write_text(serialize_radio_map(radio_map), encoding='utf-8', newline='\n')
    logger.info(f"Radio map saved to: {path} ({len(radio_map)} entries, {radio_map.dimension} APs)")


def load_radio_map(path: str | Path) -> RadioMap:
    return parse_radio_map(Path(path).read_text(encoding='utf-8'))
