"""
Search strategies
"""

from search.base import NeighborSearch
from search.brute_force import BruteForceSearch, brute_force_k_nearest
from search.kd_tree import DEFAULT_LEAF_SIZE, KDTreeIndex

SEARCHES = {
    BruteForceSearch.search_name: BruteForceSearch,
    KDTreeIndex.search_name: KDTreeIndex,
}

__all__ = [
    'DEFAULT_LEAF_SIZE',
    'SEARCHES',
    'BruteForceSearch',
    'KDTreeIndex',
    'NeighborSearch',
    'brute_force_k_nearest',
]
