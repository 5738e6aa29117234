"""
Log-distance path loss.

RSSI(d) = p0 - 10 * n * log10(d / d0), with optional log-normal shadowing
applied by the scan simulator on top of the deterministic value computed here.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass, replace

from errors import InvalidInputError
from fingerprint import clamp_rssi
from models import AccessPoint


@dataclass(frozen=True)
class PathLossModel:
    p0_dbm: float = -40.0            # RSSI at the reference distance
    d0_m: float = 1.0                # reference distance
    exponent: float = 3.0            # n; 2 is free space
    shadowing_sigma_db: float = 4.0  # std dev of the Gaussian term, dB

    def __post_init__(self):
        if not math.isfinite(self.p0_dbm):
            raise InvalidInputError("p0_dbm must be finite")
        if not (math.isfinite(self.exponent) and self.exponent > 0):
            raise InvalidInputError(f"path-loss exponent must be > 0, got {self.exponent}")
        if not (math.isfinite(self.d0_m) and self.d0_m > 0):
            raise InvalidInputError(f"reference distance must be > 0, got {self.d0_m}")
        if not (math.isfinite(self.shadowing_sigma_db) and self.shadowing_sigma_db >= 0):
            raise InvalidInputError(f"shadowing sigma must be >= 0, got {self.shadowing_sigma_db}")

    def with_sigma(self, sigma_db: float) -> 'PathLossModel':
        return replace(self, shadowing_sigma_db=sigma_db)


def distance_3d(a: Sequence[float], b: Sequence[float]) -> float:
    return math.dist(a, b)


def raw_path_loss_rssi(ap: AccessPoint, point: Sequence[float], model: PathLossModel) -> float:
    """Unclamped log-distance RSSI; the simulator needs it for the noise-floor rule."""
    dist = distance_3d(ap.pos, point)
    if dist == 0:
        raise InvalidInputError(f"point coincides with AP {ap.mac}; path loss undefined at zero distance")
    return model.p0_dbm - 10.0 * model.exponent * math.log10(dist / model.d0_m)


def path_loss_rssi(ap: AccessPoint, point: Sequence[float], model: PathLossModel) -> float:
    """Noise-free RSSI at a 3-D point, clamped into the fingerprint range."""
    return clamp_rssi(raw_path_loss_rssi(ap, point, model))
