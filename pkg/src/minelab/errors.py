"""Exception types shared across the package."""


class MinelabError(Exception):
    """Base class for all package-specific errors."""


class InvalidConfig(MinelabError, ValueError):
    """Board/game configuration violates its invariants."""


class InvalidCoordinate(MinelabError, IndexError):
    """Cell coordinate outside the board."""


class BoardFull(MinelabError):
    """No eligible cell remains for mine placement."""


class GameOver(MinelabError):
    """Move attempted on a finished game."""


class NotUncovered(MinelabError, ValueError):
    """Operation requires an uncovered cell."""


class NotCovered(MinelabError, ValueError):
    """Operation requires a covered cell."""


class InconsistentState(MinelabError):
    """Constraint system admits no mine assignment."""


class TooLarge(MinelabError):
    """Coupled component exceeds the exact-enumeration cap."""


class ShapeError(MinelabError, ValueError):
    """Tensor shape does not match what a layer or update expects."""


class CacheError(MinelabError):
    """Forward cache is stale: parameters changed since the forward pass."""


class UnsupportedKernel(MinelabError, ValueError):
    """Convolution kernel size unsupported (must be odd in both dims)."""


class FormatError(MinelabError):
    """Model file is corrupt, truncated, or has an unknown format version."""


class IoError(MinelabError, OSError):
    """Log/checkpoint path is not usable."""


class ConfigError(MinelabError, ValueError):
    """Training/benchmark configuration is invalid (e.g. path collision)."""
