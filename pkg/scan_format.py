"""
Scan text format: a simplified, fully specified rendition of an iwlist-style
cell listing.

    CELL 1
      MAC: 02:00:00:00:00:01
      ESSID: "UQC-1"
      SIGNAL: -67 dBm

`ESSID: hidden` marks a cloaked network seen through its beacons. Cells are
numbered from 1 and at most 64 are accepted (the driver's scan buffer).
Lines starting with '#' are comments; `# mode=passive` or `# mode=active`
records how the scan was taken.
"""

import re
from collections.abc import Sequence
from pathlib import Path

from errors import InvalidInputError, ParseError
from line_format import format_float, split_lines
from models import MAX_SCAN_ENTRIES, Reading, ScanMode, ScanObservation, normalize_mac

_CELL_RE = re.compile(r'^CELL ([0-9]+)$')
_MAC_RE = re.compile(r'^MAC: (.*)$')
_ESSID_RE = re.compile(r'^ESSID: (?:"(.*)"|(hidden))$')
_SIGNAL_RE = re.compile(r'^SIGNAL: (.*) dBm$')
_NUMBER_RE = re.compile(r'^-?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?$')
_MODE_RE = re.compile(r'^# mode=(passive|active)$')


def parse_scan_text(text: str, mode: ScanMode | None = None) -> ScanObservation:
    """Parse scan text into an observation.

    An explicit mode wins over a `# mode=` comment. Without either, mode is
    PASSIVE when any cell is hidden (only beacon capture reports cloaked
    networks) and ACTIVE otherwise.
    """
    lines = [(n, line.strip()) for n, line in enumerate(split_lines(text), start=1)]
    recorded = None
    for _, line in lines:
        match = _MODE_RE.match(line)
        if match:
            recorded = ScanMode(match.group(1))
    lines = [(n, line) for n, line in lines if line and not line.startswith('#')]
    readings: list[Reading] = []
    seen: dict[str, int] = {}
    pos = 0
    while pos < len(lines):
        line_no, line = lines[pos]
        match = _CELL_RE.match(line)
        if not match:
            raise ParseError(line_no, f"expected 'CELL <n>', got {line!r}")
        digits = match.group(1).lstrip('0') or '0'
        if len(digits) > len(str(MAX_SCAN_ENTRIES)) or int(digits) > MAX_SCAN_ENTRIES:
            raise ParseError(line_no, f"cell {digits[:12]} exceeds the {MAX_SCAN_ENTRIES}-entry scan buffer")
        number = int(digits)
        if number != len(readings) + 1:
            raise ParseError(line_no, f"expected cell {len(readings) + 1}, got cell {number}")
        block = lines[pos + 1:pos + 4]
        if len(block) < 3:
            last = block[-1][0] if block else line_no
            raise ParseError(last, f"cell {number} is incomplete")
        reading = _parse_cell(block)
        mac_line = block[0][0]
        if reading.mac in seen:
            raise ParseError(mac_line, f"duplicate MAC {reading.mac} (first seen on line {seen[reading.mac]})")
        seen[reading.mac] = mac_line
        readings.append(reading)
        pos += 4

    if mode is None:
        mode = recorded or _inferred_mode(readings)
    return ScanObservation(readings=tuple(readings), mode=mode)


def _inferred_mode(readings: Sequence[Reading]) -> ScanMode:
    return ScanMode.PASSIVE if any(r.hidden for r in readings) else ScanMode.ACTIVE


def _parse_cell(block: list[tuple[int, str]]) -> Reading:
    (mac_no, mac_line), (essid_no, essid_line), (signal_no, signal_line) = block

    match = _MAC_RE.match(mac_line)
    if not match:
        raise ParseError(mac_no, f"expected 'MAC: <address>', got {mac_line!r}")
    try:
        mac = normalize_mac(match.group(1))
    except InvalidInputError as e:
        raise ParseError(mac_no, str(e)) from None

    match = _ESSID_RE.match(essid_line)
    if not match:
        raise ParseError(essid_no, f"expected 'ESSID: \"<name>\"' or 'ESSID: hidden', got {essid_line!r}")
    essid = None if match.group(2) else match.group(1)

    match = _SIGNAL_RE.match(signal_line)
    if not match or not _NUMBER_RE.match(match.group(1)):
        raise ParseError(signal_no, f"expected 'SIGNAL: <number> dBm', got {signal_line!r}")
    try:
        return Reading(mac=mac, essid=essid, rssi=float(match.group(1)))
    except InvalidInputError as e:
        raise ParseError(signal_no, str(e)) from None


def serialize_scan(obs: ScanObservation) -> str:
    """Render an observation in scan text format (LF line endings).

    A `# mode=` comment leads the text when the cells alone would be read
    back in a different mode.
    """
    out = []
    if _inferred_mode(obs.readings) is not obs.mode:
        out.append(f"# mode={obs.mode.value}")
    for n, reading in enumerate(obs.readings, start=1):
        if reading.hidden:
            essid = 'ESSID: hidden'
        else:
            if '\n' in reading.essid or '\r' in reading.essid:
                raise InvalidInputError(f"ESSID of {reading.mac} contains a line break")
            essid = f'ESSID: "{reading.essid}"'
        out.extend([
            f"CELL {n}",
            f"  MAC: {reading.mac}",
            f"  {essid}",
            f"  SIGNAL: {format_float(reading.rssi)} dBm",
        ])
    return ''.join(line + '\n' for line in out)


def load_scan(path: str | Path, mode: ScanMode | None = None) -> ScanObservation:
    return parse_scan_text(Path(path).read_text(encoding='utf-8'), mode=mode)
