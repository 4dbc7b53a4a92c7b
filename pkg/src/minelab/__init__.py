"""Minesweeper solver laboratory.

Game engine, Single Point Strategy and CSP solvers, from-scratch neural
learners (sliding-window MLP and fully-convolutional CNN), a self-play
trainer, and a benchmark harness with a CLI front end.
"""

from .board import (
    COVERED,
    MINE,
    MODES,
    FirstClickPolicy,
    GameConfig,
    GameStatus,
    bordering_cells,
    mine_density,
    mode_config,
    new_game,
    render,
    uncover,
)

__version__ = "0.1.0"

__all__ = [
    "COVERED",
    "MINE",
    "MODES",
    "FirstClickPolicy",
    "GameConfig",
    "GameStatus",
    "bordering_cells",
    "mine_density",
    "mode_config",
    "new_game",
    "render",
    "uncover",
    "__version__",
]
