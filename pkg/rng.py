"""Seeded generators for reproducible simulation runs."""
import numpy as np

MASK64 = (1 << 64) - 1

# Stream tag for drawing evaluation test positions, kept apart from scan noise.
POSITION_STREAM = 1


def seeded_rng(seed: int, *stream: int) -> np.random.Generator:
    """Generator for a 64-bit seed; extra ints select an independent stream."""
    seed = int(seed) & MASK64
    if stream:
        return np.random.default_rng([seed, *stream])
    return np.random.default_rng(seed)


def trial_seed(seed: int, trial: int) -> int:
    """Scan seed of trial i: seed XOR i."""
    return (int(seed) ^ int(trial)) & MASK64
