"""Weak ascent sequences: validation, generation and statistics.

Sequences are plain tuples of ints.  Positions are 1-based in the
docstrings below and 0-based in the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidInputError

__all__ = [
    "SequenceStats",
    "asc",
    "children",
    "generate",
    "iter_sequences",
    "is_ascent_sequence",
    "stats",
    "validate",
    "wasc",
]


def wasc(x: Sequence[int]) -> int:
    """Number of positions i with x_i <= x_{i+1}."""
    if len(x) == 0:
        raise InvalidInputError("wasc of an empty sequence")
    return sum(1 for a, b in zip(x, x[1:]) if a <= b)


def asc(x: Sequence[int]) -> int:
    """Number of strict ascents x_i < x_{i+1}."""
    if len(x) == 0:
        raise InvalidInputError("asc of an empty sequence")
    return sum(1 for a, b in zip(x, x[1:]) if a < b)


def _grows(x: Sequence[int], strict: bool) -> bool:
    if len(x) == 0 or x[0] != 0:
        return False
    count = 0
    for prev, cur in zip(x, x[1:]):
        if not isinstance(cur, int) or cur < 0 or cur > count + 1:
            return False
        if prev < cur or (not strict and prev == cur):
            count += 1
    return True


def validate(x: Sequence[int]) -> bool:
    """Return True iff ``x`` is a weak ascent sequence.

    That is, x_1 = 0 and x_{i+1} <= 1 + wasc(x_1, ..., x_i) for every i.
    """
    try:
        return _grows(tuple(x), strict=False)
    except TypeError:
        return False


def is_ascent_sequence(x: Sequence[int]) -> bool:
    """Same growth rule as :func:`validate` but counting strict ascents."""
    return _grows(tuple(x), strict=True)


def children(x: Sequence[int]) -> list[tuple[int, ...]]:
    """All one-entry extensions of ``x``, in increasing order of the new entry."""
    x = tuple(x)
    return [x + (v,) for v in range(wasc(x) + 2)]


def iter_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Depth-first walk of the generating tree; yields WAsc_n in lex order."""
    if n < 1:
        raise InvalidInputError(f"sequence length must be >= 1, got {n}")
    buf = [0] * n

    def walk(depth: int, count: int) -> Iterator[tuple[int, ...]]:
        if depth == n:
            yield tuple(buf)
            return
        prev = buf[depth - 1]
        for v in range(count + 2):
            buf[depth] = v
            yield from walk(depth + 1, count + (prev <= v))

    yield from walk(1, 0)


def generate(n: int) -> list[tuple[int, ...]]:
    """All weak ascent sequences of length ``n`` in lexicographic order."""
    return list(iter_sequences(n))


@dataclass(frozen=True)
class SequenceStats:
    wasc_count: int
    zero_count: int
    r2l_max_count: int
    last_entry: int
    plateau_positions: frozenset[int]
    is_ascent_sequence: bool
    is_weakly_increasing: bool
    is_bounded_descent: bool


def _r2l_maxima(x: Sequence[int]) -> int:
    # strict right-to-left maxima: entries larger than everything to their right
    count = 0
    best = None
    for v in reversed(x):
        if best is None or v > best:
            count += 1
            best = v
    return count


def stats(x: Sequence[int]) -> SequenceStats:
    """Collect the statistics transported by the bijections.

    ``plateau_positions`` holds the 1-based indices i >= 2 with x_i = x_{i-1}.
    """
    x = tuple(x)
    if not validate(x):
        raise InvalidInputError(f"not a weak ascent sequence: {list(x)}")
    pairs = list(zip(x, x[1:]))
    return SequenceStats(
        wasc_count=wasc(x),
        zero_count=x.count(0),
        r2l_max_count=_r2l_maxima(x),
        last_entry=x[-1],
        plateau_positions=frozenset(i + 2 for i, (a, b) in enumerate(pairs) if a == b),
        is_ascent_sequence=is_ascent_sequence(x),
        is_weakly_increasing=all(a <= b for a, b in pairs),
        is_bounded_descent=all(b >= a - 1 for a, b in pairs),
    )
