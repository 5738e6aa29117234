"""
Synthetic radio maps and scans over a site model.

Radio maps are noise free. Scans add log-normal shadowing from a generator
seeded by the caller, drop readings that fall below the receiver floor, hide
cloaked networks from active probing and keep at most 64 entries, the size of
the driver's scan buffer.
"""

import math

from errors import InvalidInputError
from fingerprint import clamp_rssi
from models import MAX_SCAN_ENTRIES, RSSI_FLOOR, Fingerprint, MapEntry, RadioMap, Reading, ScanMode, ScanObservation
from propagation import PathLossModel, path_loss_rssi, raw_path_loss_rssi
from rng import seeded_rng
from site_model import Site


def grid_axis(length: float, spacing: float) -> list[float]:
    """Grid coordinates i * spacing that do not exceed length."""
    if not (math.isfinite(spacing) and spacing > 0):
        raise InvalidInputError(f"grid spacing must be > 0, got {spacing}")
    # Tolerance absorbs float error when length is an exact multiple of spacing;
    # the last point may then overshoot by an ulp, so it is pinned to length.
    count = int(math.floor(length / spacing + 1e-9)) + 1
    return [min(i * spacing, length) for i in range(count)]


def build_radio_map(site: Site, spacing: float, model: PathLossModel) -> RadioMap:
    """Noise-free fingerprint at every grid point, roster in site AP order."""
    entries = []
    for x in grid_axis(site.width, spacing):
        for y in grid_axis(site.depth, spacing):
            point = (x, y, site.client_height)
            fp = Fingerprint(tuple(path_loss_rssi(ap, point, model) for ap in site.aps))
            entries.append(MapEntry(pos=(x, y), fp=fp))
    return RadioMap(roster=site.aps, spacing=float(spacing), entries=tuple(entries))


def simulate_scan(site: Site, client_pos: tuple[float, float], mode: ScanMode,
                  model: PathLossModel, seed: int) -> ScanObservation:
    """One scan at client_pos; bit-identical for identical arguments."""
    x, y = float(client_pos[0]), float(client_pos[1])
    if not site.contains(x, y):
        raise InvalidInputError(f"client position ({x}, {y}) lies outside the {site.width} x {site.depth} m site")
    rng = seeded_rng(seed)
    point = (x, y, site.client_height)

    survivors: list[tuple[int, Reading]] = []
    for slot, ap in enumerate(site.aps):
        # Noise is drawn for every AP so passive and active scans with the
        # same seed see the same value for each AP.
        noise = float(rng.normal(0.0, model.shadowing_sigma_db))
        if ap.cloaked and mode == ScanMode.ACTIVE:
            continue
        value = raw_path_loss_rssi(ap, point, model) + noise
        if value < RSSI_FLOOR:
            continue
        essid = None if ap.cloaked else ap.essid
        survivors.append((slot, Reading(mac=ap.mac, essid=essid, rssi=clamp_rssi(value))))

    if len(survivors) > MAX_SCAN_ENTRIES:
        strongest = sorted(survivors, key=lambda item: (-item[1].rssi, item[0]))[:MAX_SCAN_ENTRIES]
        survivors = sorted(strongest, key=lambda item: item[0])

    return ScanObservation(readings=tuple(r for _, r in survivors), mode=mode)
