"""
Exhaustive k-NN search; the reference every index is checked against.
"""

import numpy as np

from fingerprint import squared_distances
from models import Fingerprint, Neighbor, RadioMap
from search.base import NeighborSearch


class BruteForceSearch(NeighborSearch):
    """Scores every entry; epsilon is accepted and ignored (always exact)."""

    search_name = 'brute'

    def query(self, q: Fingerprint, k: int, epsilon: float = 0.0) -> list[Neighbor]:
        vector, k = self._prepare(q, k, epsilon)
        d2 = squared_distances(self.points, vector)
        # lexsort: last key is primary -> by distance, then by index.
        order = np.lexsort((np.arange(len(d2)), d2))[:k]
        return self._to_neighbors([(float(d2[i]), int(i)) for i in order])


def brute_force_k_nearest(radio_map: RadioMap, q: Fingerprint, k: int) -> list[Neighbor]:
    """The k entries closest to q, ascending by (distance, entry index)."""
    return BruteForceSearch(radio_map).query(q, k)
