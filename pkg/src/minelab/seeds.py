"""Deterministic seed derivation for reproducible game series.

Every game in a series gets its own 64-bit seed derived from
(run_seed, game_index) with a SplitMix64 mix, so series are reproducible,
order-independent, and two solvers given the same run seed face the same
sequence of boards.
"""

_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def game_seed(run_seed: int, game_index: int) -> int:
    """64-bit seed for game `game_index` of a series seeded with `run_seed`."""
    return _splitmix64(_splitmix64(run_seed & _MASK64) ^ (game_index & _MASK64))
