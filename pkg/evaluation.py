"""
Localization experiments on simulated scans.

A run draws true positions uniformly over the site (continuous, not snapped
to the grid), simulates one scan per position, locates it and records the
planar error. Trial i scans with seed XOR i, and sweeps reuse one trial set
across all arms so arms are compared on identical positions and scans.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from errors import InvalidInputError
from locator import Locator
from logger import Logger
from models import RadioMap, ScanMode, ScanObservation
from propagation import PathLossModel
from rng import POSITION_STREAM, seeded_rng, trial_seed
from search import DEFAULT_LEAF_SIZE
from simulator import build_radio_map, simulate_scan
from site_model import Site


@dataclass(frozen=True)
class Trial:
    index: int
    true_pos: tuple[float, float]
    scan_seed: int


@dataclass(frozen=True)
class TrialResult:
    trial: Trial
    estimate_pos: tuple[float, float]
    error_m: float


@dataclass(frozen=True)
class ErrorReport:
    """Per-trial results (in trial order) and summary statistics."""
    k: int
    epsilon: float
    results: tuple[TrialResult, ...]

    @cached_property
    def errors(self) -> tuple[float, ...]:
        """All planar errors, ascending."""
        return tuple(sorted(r.error_m for r in self.results))

    @property
    def mean(self) -> float:
        return float(np.mean(self.errors))

    @property
    def median(self) -> float:
        return float(np.median(self.errors))

    @property
    def p95(self) -> float:
        return float(np.percentile(self.errors, 95))


@dataclass(frozen=True)
class SweepRow:
    k: int
    mean_m: float
    median_m: float
    p95_m: float

    @classmethod
    def from_report(cls, report: ErrorReport) -> 'SweepRow':
        return cls(k=report.k, mean_m=report.mean, median_m=report.median, p95_m=report.p95)


@dataclass(frozen=True)
class SpacingRow:
    spacing_m: float
    entries: int
    k: int
    mean_m: float
    median_m: float
    p95_m: float


def sample_trials(site: Site, n_trials: int, seed: int) -> list[Trial]:
    """n_trials uniform true positions inside the site."""
    if n_trials < 1:
        raise InvalidInputError(f"n_trials must be >= 1, got {n_trials}")
    rng = seeded_rng(seed, POSITION_STREAM)
    xs = rng.uniform(0.0, site.width, n_trials)
    ys = rng.uniform(0.0, site.depth, n_trials)
    return [Trial(index=i, true_pos=(float(x), float(y)), scan_seed=trial_seed(seed, i))
            for i, (x, y) in enumerate(zip(xs, ys))]


def grid_trials(radio_map: RadioMap, seed: int) -> list[Trial]:
    """One trial per radio-map grid point, in entry order."""
    return [Trial(index=i, true_pos=entry.pos, scan_seed=trial_seed(seed, i))
            for i, entry in enumerate(radio_map.entries)]


def simulate_trials(site: Site, trials: Sequence[Trial], model: PathLossModel,
                    mode: ScanMode = ScanMode.PASSIVE) -> list[ScanObservation]:
    return [simulate_scan(site, t.true_pos, mode, model, t.scan_seed) for t in trials]


def _run(locator: Locator, trials: Sequence[Trial], scans: Sequence[ScanObservation],
         k: int, epsilon: float) -> ErrorReport:
    results = []
    for trial, obs in zip(trials, scans):
        estimate = locator.locate(obs, k, epsilon)
        error = math.dist(estimate.pos, trial.true_pos)
        results.append(TrialResult(trial=trial, estimate_pos=estimate.pos, error_m=error))
    k_used = min(k, len(locator.radio_map))
    return ErrorReport(k=k_used, epsilon=epsilon, results=tuple(results))


def evaluate(radio_map: RadioMap, site: Site, model: PathLossModel, k: int, epsilon: float = 0.0,
             n_trials: int = 200, seed: int = 1, mode: ScanMode = ScanMode.PASSIVE,
             trials: Sequence[Trial] | None = None, locator: Locator | None = None) -> ErrorReport:
    """Locate n_trials simulated scans and report the planar errors.

    Pass trials to fix the test set (e.g. grid_trials); n_trials is then ignored.
    """
    if trials is None:
        trials = sample_trials(site, n_trials, seed)
    locator = locator or Locator(radio_map)
    return _run(locator, trials, simulate_trials(site, trials, model, mode), k, epsilon)


def k_sweep(radio_map: RadioMap, site: Site, model: PathLossModel, k_values: Sequence[int],
            epsilon: float = 0.0, n_trials: int = 200, seed: int = 1,
            mode: ScanMode = ScanMode.PASSIVE, search: str = 'kdtree',
            leaf_size: int = DEFAULT_LEAF_SIZE, logger: Logger | None = None) -> list[SweepRow]:
    """One row per k, all k values evaluated on the same trials and scans."""
    logger = logger or Logger(quiet=True)
    trials = sample_trials(site, n_trials, seed)
    scans = simulate_trials(site, trials, model, mode)
    locator = Locator(radio_map, search=search, leaf_size=leaf_size)
    rows = []
    for k in k_values:
        report = _run(locator, trials, scans, k, epsilon)
        logger.info(f"k={report.k}: mean {report.mean:.2f} m, median {report.median:.2f} m, "
                    f"p95 {report.p95:.2f} m over {len(trials)} trials")
        rows.append(SweepRow.from_report(report))
    return rows


def spacing_sweep(site: Site, model: PathLossModel, spacings: Sequence[float], k: int,
                  epsilon: float = 0.0, n_trials: int = 200, seed: int = 1,
                  mode: ScanMode = ScanMode.PASSIVE, search: str = 'kdtree',
                  leaf_size: int = DEFAULT_LEAF_SIZE, logger: Logger | None = None) -> list[SpacingRow]:
    """One noise-free radio map per grid spacing, all evaluated on the same trials."""
    logger = logger or Logger(quiet=True)
    trials = sample_trials(site, n_trials, seed)
    scans = simulate_trials(site, trials, model, mode)
    rows = []
    for spacing in spacings:
        radio_map = build_radio_map(site, spacing, model)
        report = _run(Locator(radio_map, search=search, leaf_size=leaf_size), trials, scans, k, epsilon)
        logger.info(f"spacing={spacing} m ({len(radio_map)} entries): mean {report.mean:.2f} m")
        rows.append(SpacingRow(spacing_m=float(spacing), entries=len(radio_map), k=report.k,
                               mean_m=report.mean, median_m=report.median, p95_m=report.p95))
    return rows
