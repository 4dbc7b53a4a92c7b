"""Minesweeper game engine.

Cell encoding (integers): 0..8 adjacent-mine counts, -1 mine (hidden board
only), -2 covered (visible board only). Mines are placed when the game is
created, which happens at the first uncover, so the first move can be
protected: under SafeCell the start cell is never a mine, under ZeroCell the
whole 3x3 neighborhood of the start cell is kept mine-free so the first
reveal is a 0 and flood fills.

Flood fill is iterative (explicit deque); huge boards must not exhaust the
stack.
"""

from __future__ import annotations

import enum
from array import array
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import BoardFull, GameOver, InvalidConfig, InvalidCoordinate

COVERED = -2
MINE = -1

NEIGHBOR_OFFSETS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))

#: Standard difficulty presets: mode -> (rows, cols, mines).
MODES = {
    "beginner": (9, 9, 10),
    "intermediate": (16, 16, 40),
    "expert": (16, 30, 99),
}


class FirstClickPolicy(enum.Enum):
    SAFE_CELL = "safe"
    ZERO_CELL = "zero"


class GameStatus(enum.Enum):
    PLAYING = "playing"
    WON = "won"
    LOST = "lost"


@dataclass(frozen=True)
class GameConfig:
    rows: int
    cols: int
    mines: int
    first_click_policy: FirstClickPolicy = FirstClickPolicy.SAFE_CELL
    rng_seed: int = 0

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InvalidConfig(f"board must be at least 1x1, got {self.rows}x{self.cols}")
        if self.mines < 0:
            raise InvalidConfig(f"mine count must be non-negative, got {self.mines}")
        if self.mines >= self.rows * self.cols:
            raise InvalidConfig(
                f"{self.mines} mines do not fit a {self.rows}x{self.cols} board "
                "with a protected first move"
            )

    @property
    def n_cells(self) -> int:
        return self.rows * self.cols


def mode_config(mode: str, first_click=FirstClickPolicy.SAFE_CELL, rng_seed: int = 0) -> GameConfig:
    """GameConfig for a named difficulty mode (see MODES)."""
    try:
        rows, cols, mines = MODES[mode]
    except KeyError:
        raise InvalidConfig(f"unknown mode {mode!r}; known modes: {sorted(MODES)}") from None
    return GameConfig(rows, cols, mines, first_click_policy=first_click, rng_seed=rng_seed)


def mine_density(config: GameConfig) -> float:
    """Mines divided by number of cells; a rough difficulty indicator."""
    return config.mines / (config.rows * config.cols)


class GameBoard:
    """Hidden truth board: -1 for mines, 0..8 adjacent-mine counts."""

    __slots__ = ("rows", "cols", "n_mines", "_values", "_view")

    def __init__(self, rows: int, cols: int):
        self.rows = rows
        self.cols = cols
        self.n_mines = 0
        self._values = array("b", bytes(rows * cols))
        self._view = np.frombuffer(self._values, dtype=np.int8).reshape(rows, cols)

    @property
    def values(self) -> np.ndarray:
        """(rows, cols) int8 view of the hidden board. Do not mutate."""
        return self._view

    def value(self, r: int, c: int) -> int:
        return self._values[r * self.cols + c]

    def is_mine(self, r: int, c: int) -> bool:
        return self._values[r * self.cols + c] == MINE

    @classmethod
    def from_values(cls, values) -> "GameBoard":
        """Build a board from an explicit value matrix (no consistency check)."""
        arr = np.asarray(values, dtype=np.int8)
        board = cls(arr.shape[0], arr.shape[1])
        board._values[:] = array("b", arr.ravel().tolist())
        board.n_mines = int((arr == MINE).sum())
        return board


class GameState:
    """Player-visible board plus status and progress counters."""

    __slots__ = ("rows", "cols", "status", "cells_to_uncover", "moves_made", "_visible", "_view")

    def __init__(self, rows: int, cols: int, mines: int):
        self.rows = rows
        self.cols = cols
        self.status = GameStatus.PLAYING
        self.cells_to_uncover = rows * cols - mines
        self.moves_made = 0
        self._visible = array("b", bytes([COVERED & 0xFF]) * (rows * cols))
        self._view = np.frombuffer(self._visible, dtype=np.int8).reshape(rows, cols)

    @property
    def visible(self) -> np.ndarray:
        """(rows, cols) int8 view of the visible board. Do not mutate."""
        return self._view

    def visible_value(self, r: int, c: int) -> int:
        return self._visible[r * self.cols + c]

    def is_covered(self, r: int, c: int) -> bool:
        return self._visible[r * self.cols + c] == COVERED

    def covered_mask(self) -> np.ndarray:
        return self._view == COVERED


class Game:
    """One Minesweeper game: hidden board, visible state, and its RNG stream.

    Single-threaded; distinct instances share no mutable state.
    """

    __slots__ = ("config", "board", "state", "rng", "revealed_last_move")

    def __init__(self, config: GameConfig, board: GameBoard, state: GameState, rng):
        self.config = config
        self.board = board
        self.state = state
        self.rng = rng
        self.revealed_last_move: list = []

    def uncover(self, r: int, c: int) -> GameStatus:
        return uncover(self, r, c)

    @property
    def status(self) -> GameStatus:
        return self.state.status


def _protected_cells(config: GameConfig, start: tuple) -> set:
    r, c = start
    if config.first_click_policy is FirstClickPolicy.ZERO_CELL:
        return {
            (rr, cc)
            for rr in range(max(0, r - 1), min(config.rows, r + 2))
            for cc in range(max(0, c - 1), min(config.cols, c + 2))
        }
    return {(r, c)}


def place_single_mine(board: GameBoard, start: tuple, rng, protected=None) -> None:
    """Place one mine on a uniformly random eligible cell.

    Eligible = not already a mine and not protected. `protected` defaults to
    just the start cell. Every non-mine 8-neighbor of the new mine is
    incremented by one. Raises BoardFull when no eligible cell remains.
    """
    if protected is None:
        protected = {start}
    values = board._values
    rows, cols = board.rows, board.cols
    protected_free = sum(
        1 for (r, c) in protected if values[r * cols + c] != MINE
    )
    if rows * cols - board.n_mines - protected_free <= 0:
        raise BoardFull(f"no eligible cell left on {rows}x{cols} board")
    n = rows * cols
    while True:
        i = int(rng.integers(n))
        r, c = divmod(i, cols)
        if values[i] != MINE and (r, c) not in protected:
            break
    values[i] = MINE
    board.n_mines += 1
    for dr, dc in NEIGHBOR_OFFSETS:
        nr, nc = r + dr, c + dc
        if 0 <= nr < rows and 0 <= nc < cols:
            j = nr * cols + nc
            if values[j] != MINE:
                values[j] += 1


def new_game(config: GameConfig, start: tuple) -> Game:
    """Create a board with a protected first move and uncover the start cell."""
    r, c = start
    if not (0 <= r < config.rows and 0 <= c < config.cols):
        raise InvalidCoordinate(f"start {start} outside {config.rows}x{config.cols} board")
    protected = _protected_cells(config, start)
    if config.mines > config.n_cells - len(protected):
        raise InvalidConfig(
            f"{config.mines} mines do not fit a {config.rows}x{config.cols} board "
            f"under {config.first_click_policy.value} first-click protection"
        )
    rng = np.random.default_rng(config.rng_seed)
    board = GameBoard(config.rows, config.cols)
    for _ in range(config.mines):
        place_single_mine(board, start, rng, protected=protected)
    state = GameState(config.rows, config.cols, config.mines)
    game = Game(config, board, state, rng)
    uncover(game, r, c)
    return game


def uncover(game: Game, r: int, c: int) -> GameStatus:
    """Uncover a cell: reveal a number, flood fill from a 0, or lose on a mine.

    An already-uncovered cell is a no-op returning the current status and does
    not count as a move; every state-changing call (including a losing one)
    counts as one move. Raises GameOver once the game is decided and
    InvalidCoordinate for out-of-bounds input.
    """
    state = game.state
    board = game.board
    cols = board.cols
    if not (0 <= r < board.rows and 0 <= c < cols):
        raise InvalidCoordinate(f"({r}, {c}) outside {board.rows}x{cols} board")
    if state.status is not GameStatus.PLAYING:
        raise GameOver(f"game already {state.status.value}")
    i = r * cols + c
    visible = state._visible
    if visible[i] != COVERED:
        return state.status
    state.moves_made += 1
    values = board._values
    if values[i] == MINE:
        state.status = GameStatus.LOST
        game.revealed_last_move = []
        return state.status
    revealed = [i]
    visible[i] = values[i]
    state.cells_to_uncover -= 1
    if values[i] == 0:
        _flood(board, state, i, revealed)
    game.revealed_last_move = revealed
    if state.cells_to_uncover == 0:
        state.status = GameStatus.WON
    return state.status


def _flood(board: GameBoard, state: GameState, start: int, revealed: list) -> None:
    """Reveal the zero-connected region around `start` plus its numeric rim.

    Iterative breadth-first walk over flat indices; neighbors of a revealed 0
    are never mines, so every covered neighbor can be revealed directly.
    """
    values = board._values
    visible = state._visible
    rows, cols = board.rows, board.cols
    ctu = state.cells_to_uncover
    append = revealed.append
    queue = deque((start,))
    pop = queue.popleft
    push = queue.append
    while queue:
        i = pop()
        r, c = divmod(i, cols)
        r0 = r - 1 if r > 0 else 0
        r1 = r + 2 if r + 2 <= rows else rows
        c0 = c - 1 if c > 0 else 0
        c1 = c + 2 if c + 2 <= cols else cols
        for nr in range(r0, r1):
            base = nr * cols
            for nc in range(c0, c1):
                j = base + nc
                if visible[j] == COVERED:
                    v = values[j]
                    visible[j] = v
                    ctu -= 1
                    append(j)
                    if v == 0:
                        push(j)
    state.cells_to_uncover = ctu


def _dilate8(mask: np.ndarray) -> np.ndarray:
    """8-neighborhood binary dilation via shifted ORs."""
    out = np.zeros_like(mask)
    out[1:, :] |= mask[:-1, :]
    out[:-1, :] |= mask[1:, :]
    out[:, 1:] |= mask[:, :-1]
    out[:, :-1] |= mask[:, 1:]
    out[1:, 1:] |= mask[:-1, :-1]
    out[1:, :-1] |= mask[:-1, 1:]
    out[:-1, 1:] |= mask[1:, :-1]
    out[:-1, :-1] |= mask[1:, 1:]
    return out


def bordering_cells(state: GameState) -> list:
    """Covered cells with at least one uncovered 8-neighbor, in row-major order."""
    covered = state.covered_mask()
    frontier = covered & _dilate8(~covered)
    return [(int(r), int(c)) for r, c in np.argwhere(frontier)]


def render(state: GameState, board: GameBoard = None) -> str:
    """Board as text: '.' covered, digits for numbers, '*' for mines post-game.

    Mines are only drawn when `board` is given and the game is decided.
    """
    show_mines = board is not None and state.status is not GameStatus.PLAYING
    rows = []
    for r in range(state.rows):
        chars = []
        for c in range(state.cols):
            v = state.visible_value(r, c)
            if v == COVERED:
                if show_mines and board.value(r, c) == MINE:
                    chars.append("*")
                else:
                    chars.append(".")
            else:
                chars.append(str(v))
        rows.append("".join(chars))
    return "\n".join(rows)


def board_from_text(text: str) -> GameBoard:
    """Parse a hidden-board fixture: digits and '*' for mines, one row per line."""
    lines = [line for line in text.strip().splitlines()]
    values = [[MINE if ch == "*" else int(ch) for ch in line] for line in lines]
    return GameBoard.from_values(values)


def game_from_fixture(values_text: str, visible_text: str = None, rng_seed: int = 0) -> Game:
    """Build a mid-game Game from text fixtures.

    `values_text` is the hidden board ('*' mines, digits). `visible_text`
    uses '.' for covered cells and digits for revealed ones; revealed digits
    must match the hidden board. Omitting it leaves everything covered.
    """
    board = board_from_text(values_text)
    config = GameConfig(board.rows, board.cols, board.n_mines, rng_seed=rng_seed)
    state = GameState(board.rows, board.cols, board.n_mines)
    if visible_text is not None:
        lines = visible_text.strip().splitlines()
        if len(lines) != board.rows or any(len(line) != board.cols for line in lines):
            raise InvalidConfig("visible fixture does not match board dimensions")
        for r, line in enumerate(lines):
            for c, ch in enumerate(line):
                if ch == ".":
                    continue
                v = int(ch)
                if v != board.value(r, c):
                    raise InvalidConfig(f"visible {v} at ({r},{c}) contradicts hidden board")
                state._visible[r * board.cols + c] = v
                state.cells_to_uncover -= 1
    return Game(config, board, state, np.random.default_rng(rng_seed))
