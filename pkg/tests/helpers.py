"""Shared test utilities: independent oracles and random-state generators."""

import numpy as np

from minelab.board import COVERED, MINE, GameConfig, GameStatus, new_game, uncover


def recount_values(values: np.ndarray) -> np.ndarray:
    """Recompute every cell's value from scratch: -1 for mines, else the
    number of adjacent mines (8-neighborhood)."""
    mines = (values == MINE).astype(np.int8)
    counts = np.zeros_like(mines)
    rows, cols = mines.shape
    for dr in (-1, 0, 1):
        for dc in (-1, 0, 1):
            if dr == 0 and dc == 0:
                continue
            src = mines[
                max(0, dr) : rows + min(0, dr),
                max(0, dc) : cols + min(0, dc),
            ]
            counts[
                max(0, -dr) : rows + min(0, -dr),
                max(0, -dc) : cols + min(0, -dc),
            ] += src
    return np.where(values == MINE, np.int8(MINE), counts)


def bordering_cells_bruteforce(state) -> set:
    """Direct double-loop application of the bordering-cell definition."""
    out = set()
    for r in range(state.rows):
        for c in range(state.cols):
            if not state.is_covered(r, c):
                continue
            for dr in (-1, 0, 1):
                for dc in (-1, 0, 1):
                    if dr == 0 and dc == 0:
                        continue
                    nr, nc = r + dr, c + dc
                    if 0 <= nr < state.rows and 0 <= nc < state.cols:
                        if not state.is_covered(nr, nc):
                            out.add((r, c))
    return out


def assert_flood_closure(state):
    """No revealed 0 may still have a covered neighbor."""
    vis = state.visible
    for r, c in np.argwhere(vis == 0):
        for dr in (-1, 0, 1):
            for dc in (-1, 0, 1):
                nr, nc = int(r) + dr, int(c) + dc
                if 0 <= nr < state.rows and 0 <= nc < state.cols:
                    assert vis[nr, nc] != COVERED, f"revealed 0 at ({r},{c}) has covered neighbor"


def random_midgame(rng, rows, cols, mines, max_extra_moves=6, first_click=None):
    """A reachable mid-game state: seeded game plus a few random safe uncovers.

    Peeks at the hidden board so the extra moves never hit a mine and the
    game stays in Playing status (unless the board runs out of safe cells).
    """
    kwargs = {} if first_click is None else {"first_click_policy": first_click}
    config = GameConfig(rows, cols, mines, rng_seed=int(rng.integers(2**63)), **kwargs)
    start = (int(rng.integers(rows)), int(rng.integers(cols)))
    game = new_game(config, start)
    for _ in range(int(rng.integers(max_extra_moves + 1))):
        if game.status is not GameStatus.PLAYING:
            break
        safe = [
            (r, c)
            for r, c in np.argwhere(game.state.covered_mask())
            if game.board.value(int(r), int(c)) != MINE
        ]
        if not safe:
            break
        r, c = safe[int(rng.integers(len(safe)))]
        uncover(game, int(r), int(c))
    return game
