"""
Site model: floor area, access points and client antenna height.

Site file format (line oriented, '#' starts a comment):

    SITE <width> <depth> <client_height>
    AP <mac> <essid> <cloaked:0|1> <x> <y> <z>
"""

import math
from dataclasses import dataclass
from pathlib import Path

from errors import InvalidInputError, ParseError
from line_format import content_lines, format_float, parse_float
from models import AccessPoint

UQ_CENTRE_WIDTH = 30.5
UQ_CENTRE_DEPTH = 52.0
UQ_CENTRE_AP_HEIGHT = 10.75
CLIENT_HEIGHT = 1.0


@dataclass(frozen=True)
class Site:
    width: float
    depth: float
    aps: tuple[AccessPoint, ...]
    client_height: float = CLIENT_HEIGHT

    def __post_init__(self):
        object.__setattr__(self, 'aps', tuple(self.aps))
        for name in ('width', 'depth', 'client_height'):
            if not math.isfinite(getattr(self, name)):
                raise InvalidInputError(f"site {name} must be finite")
        if self.width <= 0 or self.depth <= 0:
            raise InvalidInputError(f"site dimensions must be > 0, got {self.width} x {self.depth}")
        if not self.aps:
            raise InvalidInputError("a site needs at least one access point")
        macs = [ap.mac for ap in self.aps]
        if len(set(macs)) != len(macs):
            raise InvalidInputError("site contains duplicate AP MACs")
        lowest = min(ap.pos[2] for ap in self.aps)
        if not 0 <= self.client_height < lowest:
            raise InvalidInputError(
                f"client height {self.client_height} must be in [0, {lowest}) (lowest AP)")

    def contains(self, x: float, y: float) -> bool:
        return 0.0 <= x <= self.width and 0.0 <= y <= self.depth

    @property
    def diagonal(self) -> float:
        return math.hypot(self.width, self.depth)


def uq_centre_preset() -> Site:
    """The 30.5 x 52 m hall: six ceiling APs on quarter-width / quarter-depth lines."""
    aps = []
    for y in (13.0, 26.0, 39.0):
        for x in (7.625, 22.875):
            n = len(aps) + 1
            aps.append(AccessPoint(
                mac=f"02:00:00:00:00:{n:02X}",
                essid=f"UQC-{n}",
                cloaked=False,
                pos=(x, y, UQ_CENTRE_AP_HEIGHT),
            ))
    return Site(width=UQ_CENTRE_WIDTH, depth=UQ_CENTRE_DEPTH, aps=tuple(aps), client_height=CLIENT_HEIGHT)


PRESETS = {
    'uq': uq_centre_preset,
}


def parse_site_text(text: str) -> Site:
    header: tuple[float, float, float] | None = None
    aps: list[AccessPoint] = []
    last_line = 0
    for line_no, tokens in content_lines(text):
        last_line = line_no
        keyword = tokens[0]
        if header is None:
            if keyword != 'SITE' or len(tokens) != 4:
                raise ParseError(line_no, "expected 'SITE <width> <depth> <client_height>'")
            header = (parse_float(tokens[1], line_no, "width"),
                      parse_float(tokens[2], line_no, "depth"),
                      parse_float(tokens[3], line_no, "client height"))
            continue
        if keyword != 'AP' or len(tokens) != 7:
            raise ParseError(line_no, "expected 'AP <mac> <essid> <cloaked:0|1> <x> <y> <z>'")
        if tokens[3] not in ('0', '1'):
            raise ParseError(line_no, f"cloaked flag must be 0 or 1, got {tokens[3]!r}")
        try:
            ap = AccessPoint(
                mac=tokens[1],
                essid=tokens[2],
                cloaked=tokens[3] == '1',
                pos=(parse_float(tokens[4], line_no, "x"),
                     parse_float(tokens[5], line_no, "y"),
                     parse_float(tokens[6], line_no, "z")),
            )
        except InvalidInputError as e:
            raise ParseError(line_no, str(e)) from None
        if any(existing.mac == ap.mac for existing in aps):
            raise ParseError(line_no, f"duplicate AP {ap.mac}")
        aps.append(ap)
    if header is None:
        raise ParseError(max(last_line, 1), "missing SITE header")
    try:
        return Site(width=header[0], depth=header[1], aps=tuple(aps), client_height=header[2])
    except InvalidInputError as e:
        raise ParseError(max(last_line, 1), str(e)) from None


def serialize_site(site: Site) -> str:
    lines = [f"SITE {format_float(site.width)} {format_float(site.depth)} {format_float(site.client_height)}"]
    for ap in site.aps:
        _check_token(ap.essid)
        x, y, z = (format_float(v) for v in ap.pos)
        lines.append(f"AP {ap.mac} {ap.essid} {int(ap.cloaked)} {x} {y} {z}")
    return '\n'.join(lines) + '\n'


def load_site(path: str | Path) -> Site:
    return parse_site_text(Path(path).read_text(encoding='utf-8'))


def save_site(site: Site, path: str | Path) -> None:
    Path(path).write_text(serialize_site(site), encoding='utf-8', newline='\n')


def _check_token(essid: str) -> None:
    if not essid or any(ch.isspace() for ch in essid) or '#' in essid:
        raise InvalidInputError(f"ESSID {essid!r} cannot be written as a single token")
