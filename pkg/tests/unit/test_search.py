"""kd-tree index checked against the brute-force search."""
import numpy as np
import pytest

from errors import DimensionMismatchError, InvalidInputError
from models import AccessPoint, Fingerprint, MapEntry, RadioMap
from search import SEARCHES, BruteForceSearch, KDTreeIndex, brute_force_k_nearest


def _roster(dim: int) -> tuple[AccessPoint, ...]:
    return tuple(AccessPoint(mac=f"02:00:00:00:00:{i:02X}", essid=f"n{i}", pos=(i, 0, 3)) for i in range(dim))


def _map_from_rows(rows) -> RadioMap:
    rows = [tuple(float(v) for v in row) for row in rows]
    entries = tuple(MapEntry(pos=(float(i), 0.0), fp=Fingerprint(row)) for i, row in enumerate(rows))
    return RadioMap(roster=_roster(len(rows[0])), spacing=1.0, entries=entries)


def _random_map(rng: np.random.Generator, n: int, dim: int, integer: bool) -> RadioMap:
    if integer:
        # Coarse integer values force many exact distance ties.
        rows = rng.integers(-90, -80, size=(n, dim))
    else:
        rows = rng.uniform(-100, -10, size=(n, dim))
    return _map_from_rows(rows)


def _random_query(rng: np.random.Generator, dim: int, integer: bool) -> Fingerprint:
    if integer:
        return Fingerprint(tuple(rng.integers(-90, -80, size=dim)))
    return Fingerprint(tuple(rng.uniform(-100, -10, size=dim)))


def test_registry_names():
    assert set(SEARCHES) == {'brute', 'kdtree'}
    assert SEARCHES['kdtree'] is KDTreeIndex


def test_brute_force_orders_by_distance_then_index():
    radio_map = _map_from_rows([(-50, -50), (-60, -60), (-50, -50), (-40, -40)])
    result = brute_force_k_nearest(radio_map, Fingerprint((-50, -50)), 4)
    assert [n.index for n in result] == [0, 2, 1, 3]
    assert result[0].distance == 0.0
    assert result[2].distance == pytest.approx(np.sqrt(200))


def test_kd_tree_matches_brute_force_exactly():
    rng = np.random.default_rng(42)
    for trial in range(1000):
        n = int(rng.integers(1, 501))
        dim = int(rng.integers(1, 17))
        k = int(rng.integers(1, 11))
        integer = trial % 2 == 0
        radio_map = _random_map(rng, n, dim, integer)
        q = _random_query(rng, dim, integer)
        leaf = int(rng.integers(1, 17))
        assert KDTreeIndex(radio_map, leaf_size=leaf).query(q, k) == brute_force_k_nearest(radio_map, q, k)


@pytest.mark.parametrize("epsilon", [0.1, 0.5, 1.0])
def test_approximate_query_stays_within_bound(epsilon):
    rng = np.random.default_rng(7)
    for _ in range(350):
        n = int(rng.integers(1, 301))
        dim = int(rng.integers(1, 11))
        k = int(rng.integers(1, 11))
        radio_map = _random_map(rng, n, dim, integer=False)
        q = _random_query(rng, dim, integer=False)
        approx = KDTreeIndex(radio_map, leaf_size=2).query(q, k, epsilon)
        exact = brute_force_k_nearest(radio_map, q, k)
        assert len(approx) == len(exact) == min(k, n)
        assert len({nb.index for nb in approx}) == len(approx)
        for got, best in zip(approx, exact):
            assert got.distance <= (1 + epsilon) * best.distance + 1e-9


def test_neighbor_order_is_invariant_under_uniform_offset():
    rng = np.random.default_rng(99)
    for _ in range(300):
        n = int(rng.integers(2, 60))
        dim = int(rng.integers(1, 8))
        c = int(rng.integers(-10, 11))
        rows = rng.integers(-80, -30, size=(n, dim))
        q = rng.integers(-80, -30, size=dim)
        k = int(rng.integers(1, 11))
        plain = _map_from_rows(rows)
        shifted = _map_from_rows(rows + c)
        first = KDTreeIndex(plain).query(Fingerprint(tuple(q)), k)
        second = KDTreeIndex(shifted).query(Fingerprint(tuple(q + c)), k)
        assert [nb.index for nb in first] == [nb.index for nb in second]
        assert [nb.index for nb in first] == [nb.index for nb in brute_force_k_nearest(plain, Fingerprint(tuple(q)), k)]


def test_k_larger_than_map_returns_every_entry():
    radio_map = _map_from_rows([(-50,), (-60,), (-70,)])
    result = KDTreeIndex(radio_map).query(Fingerprint((-65,)), 10)
    assert [n.index for n in result] == [1, 2, 0]


def test_single_entry_index():
    radio_map = _map_from_rows([(-55, -65)])
    index = KDTreeIndex(radio_map)
    assert index.depth() == 1
    assert index.query(Fingerprint((-10, -10)), 3)[0].index == 0


def test_identical_points_collapse_to_a_leaf():
    radio_map = RadioMap(
        roster=_roster(2), spacing=1.0,
        entries=tuple(MapEntry(pos=(float(i), 0.0), fp=Fingerprint((-50, -50))) for i in range(40)),
    )
    index = KDTreeIndex(radio_map, leaf_size=4)
    assert index.depth() == 1
    assert [n.index for n in index.query(Fingerprint((-50, -50)), 5)] == [0, 1, 2, 3, 4]


def test_empty_map_cannot_be_indexed():
    empty = RadioMap(roster=_roster(2), spacing=1.0, entries=())
    with pytest.raises(InvalidInputError):
        KDTreeIndex(empty)


@pytest.mark.parametrize("search_cls", [KDTreeIndex, BruteForceSearch])
def test_query_validation(search_cls):
    index = search_cls(_map_from_rows([(-50, -60), (-70, -80)]))
    with pytest.raises(DimensionMismatchError):
        index.query(Fingerprint((-50,)), 1)
    with pytest.raises(InvalidInputError):
        index.query(Fingerprint((-50, -60)), 0)
    with pytest.raises(InvalidInputError):
        index.query(Fingerprint((-50, -60)), 1, epsilon=-0.5)


@pytest.mark.parametrize("search_name", sorted(SEARCHES))
def test_every_strategy_accepts_tuning_options(search_name):
    radio_map = _map_from_rows([(-50, -60), (-70, -80), (-55, -65)])
    index = SEARCHES[search_name](radio_map, leaf_size=2)
    assert index.name == search_name
    assert [nb.index for nb in index.query(Fingerprint((-56, -66)), 2)] == [2, 0]
