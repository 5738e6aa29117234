"""
Fingerprint alignment and the signal-space metric.

A scan is an unordered set of readings; a fingerprint is the same information
laid out in roster order so two locations can be compared slot by slot. APs a
scan did not hear sit at RSSI_FLOOR, which keeps the Euclidean metric total.
"""

from collections.abc import Sequence

import numpy as np

from errors import DimensionMismatchError
from models import RSSI_CEIL, RSSI_FLOOR, AccessPoint, Fingerprint, Reading, ScanMode, ScanObservation


def clamp_rssi(value: float) -> float:
    """Clamp a dBm value into [RSSI_FLOOR, RSSI_CEIL]."""
    return min(max(float(value), RSSI_FLOOR), RSSI_CEIL)


def align_fingerprint(obs: ScanObservation, roster: Sequence[AccessPoint]) -> Fingerprint:
    """Lay out a scan's readings in roster order.

    Readings for MACs outside the roster are ignored; roster APs the scan
    missed get RSSI_FLOOR.
    """
    heard = obs.by_mac()
    return Fingerprint(tuple(
        clamp_rssi(heard[ap.mac]) if ap.mac in heard else RSSI_FLOOR
        for ap in roster
    ))


def fingerprint_to_observation(fp: Fingerprint, roster: Sequence[AccessPoint],
                               mode: ScanMode = ScanMode.PASSIVE) -> ScanObservation:
    """Turn a fingerprint back into scan readings.

    Slots at the floor were "not heard" and produce no reading. Cloaked APs
    are reported hidden in passive mode and left out in active mode.
    """
    _check_dimension(fp.dimension, len(roster))
    readings = []
    for ap, value in zip(roster, fp.rssi):
        if value <= RSSI_FLOOR:
            continue
        if ap.cloaked and mode == ScanMode.ACTIVE:
            continue
        readings.append(Reading(mac=ap.mac, essid=None if ap.cloaked else ap.essid, rssi=value))
    return ScanObservation(readings=tuple(readings), mode=mode)


def euclidean_distance(a: Fingerprint, b: Fingerprint) -> float:
    """Signal-space distance; lower means more similar."""
    _check_dimension(a.dimension, b.dimension)
    return float(np.linalg.norm(a.vector - b.vector))


def squared_distances(points: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Row-wise squared distance from q to each row of points.

    Both search strategies go through this function so equal inputs give
    bit-identical distances and therefore identical tie-breaking.
    """
    diff = points - q
    return np.sum(diff * diff, axis=1)


def _check_dimension(left: int, right: int) -> None:
    if left != right:
        raise DimensionMismatchError(f"incompatible rosters: {left} vs {right} access points")
