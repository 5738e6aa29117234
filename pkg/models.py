"""
Data models for the locator
"""

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import NamedTuple

import numpy as np

from errors import DimensionMismatchError, InvalidInputError

RSSI_FLOOR = -100.0
RSSI_CEIL = -10.0
MAX_SCAN_ENTRIES = 64

MAC_RE = re.compile(r'^[0-9A-F]{2}(?::[0-9A-F]{2}){5}$')


def normalize_mac(text: str) -> str:
    """Return the canonical uppercase form of a MAC, or raise InvalidInputError."""
    mac = text.strip().upper()
    if not MAC_RE.match(mac):
        raise InvalidInputError(f"malformed MAC address: {text!r}")
    return mac


def _finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


class ScanMode(Enum):
    """How a scan was acquired"""
    PASSIVE = "passive"  # RF monitoring: beacons, cloaked networks visible
    ACTIVE = "active"    # solicited responses: cloaked networks invisible


@dataclass(frozen=True)
class AccessPoint:
    """A transmitter: identity plus 3-D position in metres."""
    mac: str
    essid: str
    cloaked: bool = False
    pos: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, 'mac', normalize_mac(self.mac))
        if len(self.pos) != 3:
            raise InvalidInputError(f"AP {self.mac}: position needs x, y, z")
        pos = tuple(float(v) for v in self.pos)
        if not _finite(*pos):
            raise InvalidInputError(f"AP {self.mac}: position must be finite")
        if pos[2] < 0:
            raise InvalidInputError(f"AP {self.mac}: z must be >= 0")
        object.__setattr__(self, 'pos', pos)


@dataclass(frozen=True)
class Fingerprint:
    """RSSI vector in dBm, one slot per roster AP, in roster order."""
    rssi: tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.rssi)
        for i, v in enumerate(values):
            if not math.isfinite(v) or v < RSSI_FLOOR or v > RSSI_CEIL:
                raise InvalidInputError(
                    f"fingerprint slot {i}: {v} dBm outside [{RSSI_FLOOR}, {RSSI_CEIL}]")
        object.__setattr__(self, 'rssi', values)

    @property
    def dimension(self) -> int:
        return len(self.rssi)

    @cached_property
    def vector(self) -> np.ndarray:
        arr = np.asarray(self.rssi, dtype=float)
        arr.flags.writeable = False
        return arr


@dataclass(frozen=True)
class MapEntry:
    """One radio-map example: grid position and the fingerprint observed there."""
    pos: tuple[float, float]
    fp: Fingerprint

    def __post_init__(self):
        pos = tuple(float(v) for v in self.pos)
        if len(pos) != 2 or not _finite(*pos):
            raise InvalidInputError(f"map entry position must be a finite (x, y): {self.pos!r}")
        object.__setattr__(self, 'pos', pos)


@dataclass(frozen=True)
class RadioMap:
    """Roster plus (position, fingerprint) examples on a regular grid."""
    roster: tuple[AccessPoint, ...]
    spacing: float
    entries: tuple[MapEntry, ...]

    def __post_init__(self):
        object.__setattr__(self, 'roster', tuple(self.roster))
        object.__setattr__(self, 'entries', tuple(self.entries))
        if not math.isfinite(self.spacing) or self.spacing <= 0:
            raise InvalidInputError(f"grid spacing must be > 0, got {self.spacing}")
        macs = [ap.mac for ap in self.roster]
        if len(set(macs)) != len(macs):
            raise InvalidInputError("roster contains duplicate MACs")
        seen: set[tuple[float, float]] = set()
        for i, entry in enumerate(self.entries):
            if entry.fp.dimension != len(self.roster):
                raise DimensionMismatchError(
                    f"entry {i} has {entry.fp.dimension} values, roster has {len(self.roster)} APs")
            if entry.pos in seen:
                raise InvalidInputError(f"duplicate map position {entry.pos}")
            seen.add(entry.pos)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def dimension(self) -> int:
        return len(self.roster)

    @cached_property
    def fingerprints(self) -> np.ndarray:
        """(n, D) matrix of entry fingerprints."""
        matrix = np.array([e.fp.rssi for e in self.entries], dtype=float).reshape(len(self.entries), self.dimension)
        matrix.flags.writeable = False
        return matrix

    @cached_property
    def positions(self) -> np.ndarray:
        """(n, 2) matrix of entry positions."""
        matrix = np.array([e.pos for e in self.entries], dtype=float).reshape(len(self.entries), 2)
        matrix.flags.writeable = False
        return matrix


@dataclass(frozen=True)
class Reading:
    """One scan line: who was heard and how strongly. essid None means hidden."""
    mac: str
    essid: str | None
    rssi: float

    def __post_init__(self):
        object.__setattr__(self, 'mac', normalize_mac(self.mac))
        rssi = float(self.rssi)
        if not math.isfinite(rssi):
            raise InvalidInputError(f"reading for {self.mac}: RSSI must be finite")
        object.__setattr__(self, 'rssi', rssi)

    @property
    def hidden(self) -> bool:
        return self.essid is None


@dataclass(frozen=True)
class ScanObservation:
    """Readings produced by a single scan."""
    readings: tuple[Reading, ...] = ()
    mode: ScanMode = ScanMode.ACTIVE

    def __post_init__(self):
        readings = tuple(self.readings)
        if len(readings) > MAX_SCAN_ENTRIES:
            raise InvalidInputError(
                f"scan holds {len(readings)} readings, at most {MAX_SCAN_ENTRIES} allowed")
        macs = [r.mac for r in readings]
        if len(set(macs)) != len(macs):
            dup = next(m for m in macs if macs.count(m) > 1)
            raise InvalidInputError(f"duplicate MAC in scan: {dup}")
        object.__setattr__(self, 'readings', readings)

    def __len__(self) -> int:
        return len(self.readings)

    def by_mac(self) -> dict[str, float]:
        return {r.mac: r.rssi for r in self.readings}


class Neighbor(NamedTuple):
    """Radio-map entry index and its signal-space distance to the query."""
    index: int
    distance: float


@dataclass(frozen=True)
class PositionEstimate:
    """Estimated client position in metres plus the neighbors that produced it.

    Estimates decoded from the wire carry k_used but no neighbor list.
    """
    pos: tuple[float, float]
    neighbors: tuple[Neighbor, ...] = field(default=())
    k_used: int | None = None

    def __post_init__(self):
        neighbors = tuple(Neighbor(int(i), float(d)) for i, d in self.neighbors)
        object.__setattr__(self, 'neighbors', neighbors)
        object.__setattr__(self, 'pos', (float(self.pos[0]), float(self.pos[1])))
        k_used = self.k_used if self.k_used is not None else len(neighbors)
        if k_used < 1:
            raise InvalidInputError("an estimate needs at least one neighbor")
        if neighbors and len(neighbors) != k_used:
            raise InvalidInputError(f"k_used={k_used} but {len(neighbors)} neighbors given")
        if any(a.distance > b.distance for a, b in zip(neighbors, neighbors[1:])):
            raise InvalidInputError("neighbor distances must be non-decreasing")
        object.__setattr__(self, 'k_used', k_used)
