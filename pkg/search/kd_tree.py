"""
kd-tree index over radio-map fingerprints with exact and epsilon-approximate
k-NN queries.

Build splits each node on the dimension of maximum spread at the median
(ties in coordinate broken by entry index), down to leaf buckets. A query
descends to the nearer child first and visits the farther child only when the
splitting plane is close enough to matter:

    exact:        plane_d2             <= worst_d2
    approximate:  plane_d2 * (1+eps)^2 <= worst_d2

so with eps > 0 every returned i-th distance is within a (1 + eps) factor of
the true i-th distance. Ties on the plane are explored, which keeps the
(distance, index) ordering identical to the brute-force search at eps = 0.
"""

import heapq

import numpy as np

from errors import InvalidInputError
from fingerprint import squared_distances
from models import Fingerprint, Neighbor, RadioMap
from search.base import NeighborSearch

DEFAULT_LEAF_SIZE = 8


class _Node:
    __slots__ = ('dim', 'split', 'left', 'right', 'indices')

    def __init__(self, dim: int = -1, split: float = 0.0, left=None, right=None, indices=None):
        self.dim = dim
        self.split = split
        self.left = left
        self.right = right
        self.indices = indices  # set on leaves only


class KDTreeIndex(NeighborSearch):
    """Immutable kd-tree over a radio map's fingerprints."""

    search_name = 'kdtree'

    def __init__(self, radio_map: RadioMap, leaf_size: int = DEFAULT_LEAF_SIZE, **options):
        if len(radio_map) == 0:
            raise InvalidInputError("cannot index an empty radio map")
        if leaf_size < 1:
            raise InvalidInputError(f"leaf size must be >= 1, got {leaf_size}")
        super().__init__(radio_map, **options)
        self.leaf_size = leaf_size
        self.root = self._build(np.arange(len(radio_map)))

    def _build(self, indices: np.ndarray) -> _Node:
        if len(indices) <= self.leaf_size:
            return _Node(indices=indices)
        pts = self.points[indices]
        spread = pts.max(axis=0) - pts.min(axis=0)
        dim = int(np.argmax(spread))
        if spread[dim] == 0:
            # Every point identical: nothing left to split.
            return _Node(indices=indices)
        indices = indices[np.lexsort((indices, pts[:, dim]))]
        mid = len(indices) // 2
        return _Node(
            dim=dim,
            split=float(self.points[indices[mid], dim]),
            left=self._build(indices[:mid]),
            right=self._build(indices[mid:]),
        )

    def query(self, q: Fingerprint, k: int, epsilon: float = 0.0) -> list[Neighbor]:
        vector, k = self._prepare(q, k, epsilon)
        # Max-heap of the k best so far as (-d2, -index): heap[0] is the worst.
        heap: list[tuple[float, int]] = []
        self._search(self.root, vector, k, (1.0 + epsilon) ** 2, heap)
        scored = sorted((-neg_d2, -neg_index) for neg_d2, neg_index in heap)
        return self._to_neighbors(scored)

    def _search(self, node: _Node, q: np.ndarray, k: int, scale: float,
                heap: list[tuple[float, int]]) -> None:
        if node.indices is not None:
            d2 = squared_distances(self.points[node.indices], q)
            for dist2, index in zip(d2.tolist(), node.indices.tolist()):
                item = (-dist2, -index)
                if len(heap) < k:
                    heapq.heappush(heap, item)
                elif item > heap[0]:
                    heapq.heapreplace(heap, item)
            return

        diff = float(q[node.dim]) - node.split
        if diff < 0:
            near, far = node.left, node.right
        else:
            near, far = node.right, node.left
        self._search(near, q, k, scale, heap)
        if len(heap) < k or diff * diff * scale <= -heap[0][0]:
            self._search(far, q, k, scale, heap)

    def depth(self) -> int:
        """Tree height, leaves counting as 1."""
        def walk(node: _Node) -> int:
            if node.indices is not None:
                return 1
            return 1 + max(walk(node.left), walk(node.right))
        return walk(self.root)
