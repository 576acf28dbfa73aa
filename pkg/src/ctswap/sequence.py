"""Numeric sequences and tie handling.

All public APIs use 1-based positions; a sequence of length n spans
positions 1..n. Keys are finite binary64 values. Two tie modes exist:

* ``strict`` (default): keys must be pairwise distinct wherever they are
  compared; duplicates raise :class:`~ctswap.errors.TieError`.
* ``lenient``: ties are broken by position, the earlier index counting as
  smaller. This is a documented extension beyond the distinct-keys model.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

from .errors import TieError

TIE_MODES = ("strict", "lenient")


def _check_tie_mode(tie_mode: str) -> str:
    if tie_mode not in TIE_MODES:
        raise ValueError(f"tie_mode must be one of {TIE_MODES}, got {tie_mode!r}")
    return tie_mode


class Sequence:
    """An immutable list of finite numeric keys.

    NaN and infinities are rejected at construction. Duplicates are allowed
    here (a long text may repeat values in far-apart windows); strict-mode
    operations check distinctness over the span they actually touch.
    """

    __slots__ = ("_keys",)

    def __init__(self, values: Iterable[float]):
        keys = []
        for idx, v in enumerate(values, start=1):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ValueError(f"key at position {idx} is not numeric: {v!r}")
            f = float(v)
            if not math.isfinite(f):
                raise ValueError(f"key at position {idx} is not finite: {v!r}")
            keys.append(f)
        self._keys = tuple(keys)

    @property
    def keys(self) -> tuple[float, ...]:
        return self._keys

    def __len__(self) -> int:
        return len(self._keys)

    def __iter__(self) -> Iterator[float]:
        return iter(self._keys)

    def __getitem__(self, index):
        return self._keys[index]

    def __eq__(self, other) -> bool:
        if isinstance(other, Sequence):
            return self._keys == other._keys
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._keys)

    def __repr__(self) -> str:
        inner = ", ".join(format(k, "g") for k in self._keys)
        return f"Sequence(({inner}))"


def as_keys(values) -> list[float]:
    """Coerce a Sequence or iterable of numbers into a validated key list."""
    if isinstance(values, Sequence):
        return list(values.keys)
    return list(Sequence(values).keys)


def check_distinct(keys: list[float], offset: int = 0) -> None:
    """Raise TieError if any two keys are equal.

    ``offset`` shifts reported positions, so a window starting at text
    position j passes offset=j-1.
    """
    seen: dict[float, int] = {}
    for idx, k in enumerate(keys, start=1):
        if k in seen:
            raise TieError(seen[k] + offset, idx + offset, k)
        seen[k] = idx


def check_window_distinct(keys: list[float], window: int) -> None:
    """Raise TieError if two equal keys fall within one length-``window`` span.

    Equivalent to checking every sliding window of that length: a duplicate
    pair is covered by some window iff the positions differ by < window.
    """
    last: dict[float, int] = {}
    for idx, k in enumerate(keys, start=1):
        prev = last.get(k)
        if prev is not None and idx - prev < window:
            raise TieError(prev, idx, k)
        last[k] = idx
