"""Simulated localization experiments and their CSV reports."""
import pytest

from errors import InvalidInputError
from evaluation import evaluate, grid_trials, k_sweep, sample_trials, spacing_sweep
from models import ScanMode
from propagation import PathLossModel
from report_files import SPACING_HEADERS, SWEEP_HEADERS, TRIAL_HEADERS, spacing_csv, sweep_csv, trials_csv
from rng import trial_seed
from simulator import build_radio_map
from site_model import uq_centre_preset

SITE = uq_centre_preset()
MODEL = PathLossModel()
NOISE_FREE = MODEL.with_sigma(0.0)


@pytest.fixture(scope="module")
def radio_map():
    return build_radio_map(SITE, 5, MODEL)


def test_trials_are_uniform_inside_the_site():
    trials = sample_trials(SITE, 500, seed=4)
    assert [t.index for t in trials] == list(range(500))
    assert all(SITE.contains(*t.true_pos) for t in trials)
    assert [t.scan_seed for t in trials[:3]] == [4, 5, 6]
    assert trial_seed(4, 1) == 5
    assert sample_trials(SITE, 500, seed=4) == trials
    # Positions land off the grid.
    assert any(t.true_pos[0] % 5 for t in trials)


def test_trial_count_must_be_positive():
    with pytest.raises(InvalidInputError):
        sample_trials(SITE, 0, seed=1)


def test_noise_free_grid_trials_are_exact():
    noise_free_map = build_radio_map(SITE, 5, NOISE_FREE)
    report = evaluate(noise_free_map, SITE, NOISE_FREE, k=1, trials=grid_trials(noise_free_map, seed=1))
    assert len(report.results) == 77
    assert report.errors == (0.0,) * 77
    assert report.mean == 0.0


def test_evaluate_is_deterministic(radio_map):
    first = evaluate(radio_map, SITE, MODEL, k=3, n_trials=50, seed=11)
    second = evaluate(radio_map, SITE, MODEL, k=3, n_trials=50, seed=11)
    assert first == second
    assert trials_csv(first) == trials_csv(second)


def test_errors_are_bounded_by_the_site_diagonal(radio_map):
    report = evaluate(radio_map, SITE, MODEL, k=5, n_trials=100, seed=2)
    assert len(report.results) == 100
    assert all(0.0 <= e <= SITE.diagonal for e in report.errors)
    assert list(report.errors) == sorted(report.errors)
    assert report.median <= report.p95 <= max(report.errors)


def test_small_k_beats_averaging_the_whole_map(radio_map):
    rows = {row.k: row for row in k_sweep(radio_map, SITE, MODEL, [1, 3, 77], n_trials=200, seed=1)}
    assert rows[3].mean_m < rows[77].mean_m
    assert rows[3].mean_m <= rows[1].mean_m


def test_active_scans_on_an_uncloaked_site_match_passive(radio_map):
    passive = evaluate(radio_map, SITE, MODEL, k=3, n_trials=40, seed=9, mode=ScanMode.PASSIVE)
    active = evaluate(radio_map, SITE, MODEL, k=3, n_trials=40, seed=9, mode=ScanMode.ACTIVE)
    assert passive.errors == active.errors


def test_k_above_map_size_is_reported_clamped(radio_map):
    rows = k_sweep(radio_map, SITE, MODEL, [500], n_trials=10, seed=1)
    assert rows[0].k == 77


def test_search_strategies_agree(radio_map):
    fast = k_sweep(radio_map, SITE, MODEL, [1, 4], n_trials=60, seed=3, search='kdtree')
    slow = k_sweep(radio_map, SITE, MODEL, [1, 4], n_trials=60, seed=3, search='brute')
    assert fast == slow


def test_sweep_csv_layout(radio_map):
    rows = k_sweep(radio_map, SITE, MODEL, [1, 2, 3], n_trials=30, seed=1)
    text = sweep_csv(rows)
    lines = text.split("\n")
    assert lines[0] == ",".join(SWEEP_HEADERS)
    assert len(lines) == 5 and lines[-1] == ""
    assert "\r" not in text
    k, mean, median, p95 = lines[1].split(",")
    assert k == "1"
    assert len(mean.split(".")[1]) == 4
    assert text == sweep_csv(k_sweep(radio_map, SITE, MODEL, [1, 2, 3], n_trials=30, seed=1))


def test_spacing_sweep_rows():
    rows = spacing_sweep(SITE, MODEL, [5, 10], k=3, n_trials=30, seed=1)
    assert [(r.spacing_m, r.entries) for r in rows] == [(5.0, 77), (10.0, 24)]
    text = spacing_csv(rows)
    assert text.splitlines()[0] == ",".join(SPACING_HEADERS)
    assert text.splitlines()[1].startswith("5,77,3,")


def test_trials_csv_has_one_row_per_trial(radio_map):
    report = evaluate(radio_map, SITE, MODEL, k=3, n_trials=25, seed=1)
    lines = trials_csv(report).splitlines()
    assert lines[0] == ",".join(TRIAL_HEADERS)
    assert len(lines) == 26
    assert lines[1].startswith("0,")
