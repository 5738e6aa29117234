"""
Base class for k-nearest-neighbor search over radio-map fingerprints
"""

import math
from abc import ABC, abstractmethod

import numpy as np

from errors import DimensionMismatchError, InvalidInputError
from models import Fingerprint, Neighbor, RadioMap


class NeighborSearch(ABC):
    """Abstract base class for search strategies.

    Results are ordered by ascending (distance, entry index). Instances are
    immutable after construction and safe to query from several threads.
    """

    # Subclasses set this so callers can name the strategy; falls back to the
    # class name.
    search_name: str = ""

    def __init__(self, radio_map: RadioMap, **options):
        """options carries tuning knobs such as leaf_size; strategies ignore the ones they lack."""
        self.radio_map = radio_map
        self.points = radio_map.fingerprints

    def __len__(self) -> int:
        return len(self.radio_map)

    @property
    def name(self) -> str:
        return self.search_name or self.__class__.__name__

    @abstractmethod
    def query(self, q: Fingerprint, k: int, epsilon: float = 0.0) -> list[Neighbor]:
        """Return the k nearest entries to q."""

    def _prepare(self, q: Fingerprint, k: int, epsilon: float = 0.0) -> tuple[np.ndarray, int]:
        """Validate a query; return the query vector and k clamped to the map size."""
        if q.dimension != self.radio_map.dimension:
            raise DimensionMismatchError(
                f"query has {q.dimension} values, radio map roster has {self.radio_map.dimension} APs")
        if isinstance(k, bool) or int(k) != k or k < 1:
            raise InvalidInputError(f"k must be an integer >= 1, got {k}")
        if not (math.isfinite(epsilon) and epsilon >= 0):
            raise InvalidInputError(f"epsilon must be >= 0, got {epsilon}")
        return q.vector, min(int(k), len(self.radio_map))

    @staticmethod
    def _to_neighbors(scored: list[tuple[float, int]]) -> list[Neighbor]:
        """Convert (squared distance, index) pairs, already ordered, to Neighbors."""
        return [Neighbor(index, math.sqrt(d2)) for d2, index in scored]
