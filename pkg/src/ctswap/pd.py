"""Parent-distance tables of numeric sequences.

The forward table stores, for every position i, the distance to the
nearest smaller key strictly to its left (0 when no smaller key exists);
the reverse table mirrors this to the right. Both are complete linear
encodings of the sequence's Cartesian tree and are computed in one
monotone-stack pass.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .backend import kernels
from .errors import TieError
from .sequence import _check_tie_mode, as_keys, check_distinct


def forward_pd(values, tie_mode: str = "strict") -> tuple[int, ...]:
    """Forward parent-distance table; pd[0] is always 0."""
    _check_tie_mode(tie_mode)
    keys = as_keys(values)
    if tie_mode == "strict":
        check_distinct(keys)
    return tuple(kernels.forward_pd(keys))


def reverse_pd(values, tie_mode: str = "strict") -> tuple[int, ...]:
    """Reverse parent-distance table; the last entry is always 0."""
    _check_tie_mode(tie_mode)
    keys = as_keys(values)
    if tie_mode == "strict":
        check_distinct(keys)
    return tuple(kernels.reverse_pd(keys))


def stream_pd(values, tie_mode: str = "strict") -> Iterator[tuple[int, int]]:
    """Yield ``(position, global forward PD value)`` lazily, 1-based.

    A single monotone stack gives amortized O(1) work per element, so this
    can feed an automaton scan without materializing tables. In strict mode
    a repeated key raises TieError the moment its second occurrence is
    consumed.
    """
    _check_tie_mode(tie_mode)
    strict = tie_mode == "strict"
    seen: dict[float, int] = {}
    stack: list[tuple[int, float]] = []  # (position, key), keys increasing
    for idx, v in enumerate(_iter_keys(values), start=1):
        if strict:
            prev = seen.get(v)
            if prev is not None:
                raise TieError(prev, idx, v)
            seen[v] = idx
        while stack and stack[-1][1] > v:
            stack.pop()
        yield idx, (idx - stack[-1][0]) if stack else 0
        stack.append((idx, v))


def _iter_keys(values) -> Iterable[float]:
    from .sequence import Sequence  # noqa: PLC0415

    if isinstance(values, Sequence):
        return iter(values.keys)
    # validate lazily so the stream stays a stream
    def gen():
        import math  # noqa: PLC0415

        for idx, v in enumerate(values, start=1):
            f = float(v)
            if not math.isfinite(f):
                raise ValueError(f"key at position {idx} is not finite: {v!r}")
            yield f

    return gen()


def adjust_pd(global_pd: int, depth: int) -> int:
    """Re-read a global forward PD value relative to a window of ``depth``
    preceding elements: a parent outside the window behaves as no smaller
    element at all.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    return global_pd if 1 <= global_pd <= depth else 0
