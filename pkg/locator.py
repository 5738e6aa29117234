"""
k-NN localization: find the radio-map entries closest in signal space and
average their grid positions.
"""

from collections.abc import Sequence

import numpy as np

from errors import InvalidInputError
from fingerprint import align_fingerprint
from models import Fingerprint, Neighbor, PositionEstimate, RadioMap, ScanObservation
from search import DEFAULT_LEAF_SIZE, SEARCHES, KDTreeIndex, NeighborSearch


def build_index(radio_map: RadioMap, leaf_size: int = DEFAULT_LEAF_SIZE) -> KDTreeIndex:
    """kd-tree over every entry of a non-empty map."""
    return KDTreeIndex(radio_map, leaf_size=leaf_size)


def k_nearest(index: NeighborSearch, q: Fingerprint, k: int, epsilon: float = 0.0) -> list[Neighbor]:
    return index.query(q, k, epsilon)


def estimate_position(radio_map: RadioMap, neighbors: Sequence[tuple[int, float]]) -> PositionEstimate:
    """Unweighted mean of the neighbors' grid positions."""
    if not neighbors:
        raise InvalidInputError("cannot estimate a position from zero neighbors")
    indices = [int(i) for i, _ in neighbors]
    if any(i < 0 or i >= len(radio_map) for i in indices):
        raise InvalidInputError(f"neighbor index out of range for a map of {len(radio_map)} entries")
    x, y = np.mean(radio_map.positions[indices], axis=0)
    return PositionEstimate(pos=(float(x), float(y)), neighbors=tuple(neighbors))


def locate(radio_map: RadioMap, index: NeighborSearch, obs: ScanObservation,
           k: int, epsilon: float = 0.0) -> PositionEstimate:
    """align_fingerprint -> k_nearest -> estimate_position."""
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise InvalidInputError(f"k must be an integer >= 1, got {k}")
    q = align_fingerprint(obs, radio_map.roster)
    return estimate_position(radio_map, k_nearest(index, q, k, epsilon))


class Locator:
    """A radio map bundled with its search index; shared read-only by servers."""

    def __init__(self, radio_map: RadioMap, search: str = KDTreeIndex.search_name,
                 leaf_size: int = DEFAULT_LEAF_SIZE):
        try:
            search_cls = SEARCHES[search]
        except KeyError:
            raise InvalidInputError(
                f"unknown search strategy {search!r}; choose from {', '.join(sorted(SEARCHES))}") from None
        self.radio_map = radio_map
        self.index: NeighborSearch = search_cls(radio_map, leaf_size=leaf_size)

    def locate(self, obs: ScanObservation, k: int, epsilon: float = 0.0) -> PositionEstimate:
        return locate(self.radio_map, self.index, obs, k, epsilon)
