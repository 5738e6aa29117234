"""
Line protocol between scanning clients and the location server.

Newline-delimited UTF-8, one response line per request line:

    LOCATE k=<k> <mac>=<rssi>[,<mac>=<rssi>]*
    OK x=<x> y=<y> k=<k_used>
    ERR <code> <reason>

Coordinates are rendered with exactly 2 decimals. RSSI values use the
shortest text that reads back as the same float, so the server locates on
exactly the values the client measured. A request may carry no readings.
"""

import math
import re
from dataclasses import dataclass

from errors import InvalidInputError, ProtocolError
from line_format import format_float
from models import MAX_SCAN_ENTRIES, PositionEstimate, Reading, ScanMode, ScanObservation

DEFAULT_PORT = 7117
DEFAULT_BIND = f"127.0.0.1:{DEFAULT_PORT}"
# Wider k values saturate at 10**K_DIGITS_MAX, beyond any radio map size.
K_DIGITS_MAX = 18

_REQUEST_RE = re.compile(r'^LOCATE k=(-?[0-9]+)(?: (\S+))?$')
_ITEM_RE = re.compile(r'^([0-9A-F]{2}(?::[0-9A-F]{2}){5})=(-?\d+(?:\.\d+)?(?:e[-+]\d+)?)$')
_COORD = r'(-?(?:0|[1-9]\d*)\.\d{2})'
_OK_RE = re.compile(rf'^OK x={_COORD} y={_COORD} k=([1-9]\d*)$')
_ERR_RE = re.compile(r'^ERR ([1-9]\d{2}) ([a-z][a-z0-9-]*)$')


@dataclass(frozen=True)
class LocateRequest:
    k: int
    readings: tuple[tuple[str, float], ...] = ()

    @classmethod
    def from_observation(cls, obs: ScanObservation, k: int) -> 'LocateRequest':
        return cls(k=k, readings=tuple((r.mac, r.rssi) for r in obs.readings))

    def to_observation(self) -> ScanObservation:
        """Rebuild the scan; the wire carries no ESSIDs, so names come back empty."""
        return ScanObservation(
            readings=tuple(Reading(mac=mac, essid='', rssi=rssi) for mac, rssi in self.readings),
            mode=ScanMode.ACTIVE,
        )


@dataclass(frozen=True)
class LocateReply:
    x: float
    y: float
    k_used: int

    @classmethod
    def from_estimate(cls, estimate: PositionEstimate) -> 'LocateReply':
        return cls(x=estimate.pos[0], y=estimate.pos[1], k_used=estimate.k_used)

    def to_estimate(self) -> PositionEstimate:
        return PositionEstimate(pos=(self.x, self.y), k_used=self.k_used)


@dataclass(frozen=True)
class ErrorReply:
    code: int
    reason: str


ERR_PARSE = ErrorReply(400, 'parse')
ERR_BAD_K = ErrorReply(400, 'bad-k')
ERR_BAD_SCAN = ErrorReply(400, 'bad-scan')
ERR_INTERNAL = ErrorReply(500, 'internal')


def encode_request(request: LocateRequest) -> str:
    line = f"LOCATE k={int(request.k)}"
    if request.readings:
        line += ' ' + ','.join(f"{mac}={format_float(rssi)}" for mac, rssi in request.readings)
    return line


def _decode_k(text: str) -> int:
    negative = text.startswith('-')
    digits = text[1:] if negative else text
    if (len(digits) > 1 and digits[0] == '0') or text == '-0':
        raise ProtocolError(f"non-canonical k: {text[:20]!r}")
    magnitude = 10 ** K_DIGITS_MAX if len(digits) > K_DIGITS_MAX else int(digits)
    return -magnitude if negative else magnitude


def decode_request(line: str) -> LocateRequest:
    match = _REQUEST_RE.match(line)
    if not match:
        raise ProtocolError(f"not a LOCATE request: {line[:80]!r}")
    k_text, body = match.groups()
    k = _decode_k(k_text)
    readings: list[tuple[str, float]] = []
    seen: set[str] = set()
    if body is not None:
        items = body.split(',')
        if len(items) > MAX_SCAN_ENTRIES:
            raise ProtocolError(f"{len(items)} readings exceed the {MAX_SCAN_ENTRIES}-entry limit")
        for item in items:
            item_match = _ITEM_RE.match(item)
            if not item_match:
                raise ProtocolError(f"malformed reading {item[:40]!r}")
            mac, rssi_text = item_match.groups()
            rssi = float(rssi_text)
            if not math.isfinite(rssi):
                raise ProtocolError(f"non-finite RSSI for {mac}")
            if mac in seen:
                raise ProtocolError(f"duplicate MAC {mac}")
            seen.add(mac)
            readings.append((mac, rssi))
    return LocateRequest(k=k, readings=tuple(readings))


def encode_response(response: LocateReply | ErrorReply) -> str:
    if isinstance(response, LocateReply):
        return f"OK x={response.x:.2f} y={response.y:.2f} k={response.k_used}"
    return f"ERR {response.code} {response.reason}"


def decode_response(line: str) -> LocateReply | ErrorReply:
    match = _OK_RE.match(line)
    if match:
        x, y, k = match.groups()
        return LocateReply(x=float(x), y=float(y), k_used=int(k))
    match = _ERR_RE.match(line)
    if match:
        return ErrorReply(code=int(match.group(1)), reason=match.group(2))
    raise ProtocolError(f"not an OK/ERR response: {line[:80]!r}")


def parse_address(text: str) -> tuple[str, int]:
    """Split '<host>:<port>' into its parts."""
    host, sep, port_text = text.rpartition(':')
    if not sep or not host or not port_text.isdigit():
        raise InvalidInputError(f"address must look like <host>:<port>, got {text!r}")
    port = int(port_text)
    if port > 65535:
        raise InvalidInputError(f"port out of range: {port}")
    return host.strip('[]'), port
