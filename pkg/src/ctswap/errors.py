"""Exception types shared across the package."""

from __future__ import annotations


class CtswapError(Exception):
    """Base class for all package-specific errors."""


class TieError(CtswapError, ValueError):
    """Two keys compared equal under strict tie handling.

    Positions are 1-based and name the offending pair.
    """

    def __init__(self, first: int, second: int, value: float):
        self.first = first
        self.second = second
        self.value = value
        super().__init__(
            f"duplicate key {value!r} at positions {first} and {second} (strict tie mode)"
        )


class InvalidPDError(CtswapError, ValueError):
    """A parent-distance table is not realizable by any sequence."""

    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"invalid parent-distance table at position {position}: {message}")


class PositionOutOfRangeError(CtswapError, ValueError):
    """A 1-based position argument falls outside its allowed range."""


class LengthMismatchError(CtswapError, ValueError):
    """Two sequences that must have equal length do not."""


class SizeTooLargeError(CtswapError, ValueError):
    """A combinatorial enumeration was requested beyond the resource guard."""


class EmptyPatternSetError(CtswapError, ValueError):
    """Automaton construction needs at least one pattern table."""


class InputFormatError(CtswapError, ValueError):
    """A series file could not be parsed; carries the offending record number."""

    def __init__(self, path: str, line: int, message: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {message}")
