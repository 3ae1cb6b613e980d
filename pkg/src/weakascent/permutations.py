"""Weak Fishburn permutations and the active-site bijection with WAsc_n.

A permutation is a tuple in one-line notation over 1..n.  Gaps are
numbered 0..n, gap g sitting just after the g-th entry.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from .errors import DomainError, InvalidInputError, ResourceLimitError
from .sequences import validate

__all__ = [
    "ActiveSiteLabeling",
    "DEFAULT_CUTOFF",
    "active_sites",
    "contains_pattern",
    "gamma",
    "gamma_inv",
    "generate_weak_fishburn",
    "insert_max",
    "is_permutation",
    "numact",
]

DEFAULT_CUTOFF = 9

Pattern = Literal["F", "W"]


def _cutoff() -> int:
    env = os.environ.get("WASC_MAX_N")
    return int(env) if env else DEFAULT_CUTOFF


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def _contains_w(p: Sequence[int]) -> bool:
    n = len(p)
    for i in range(n - 3):
        a, b = p[i], p[i + 1]
        if b <= a:
            continue
        for l in range(i + 3, n):
            if p[l] + 1 != a:
                continue
            for k in range(i + 2, l):
                if p[k] < p[l]:
                    return True
    return False


def _contains_f(p: Sequence[int]) -> bool:
    n = len(p)
    for i in range(n - 2):
        a, b = p[i], p[i + 1]
        if b <= a:
            continue
        for l in range(i + 2, n):
            if p[l] + 1 == a:
                return True
    return False


def contains_pattern(p: Sequence[int], which: Pattern) -> bool:
    """Brute-force test for an occurrence of the pattern ``F`` or ``W``.

    ``W``: indices i < i+1 < k < l with p_i = p_l + 1 and p_k < p_l < p_i < p_{i+1}.
    ``F``: indices i < i+1 < l with p_i = p_l + 1 and p_l < p_i < p_{i+1}.
    """
    if which == "W":
        return _contains_w(p)
    if which == "F":
        return _contains_f(p)
    raise InvalidInputError(f"unknown pattern {which!r}; expected 'F' or 'W'")


@dataclass(frozen=True)
class ActiveSiteLabeling:
    """Active gaps of a permutation; label i belongs to ``site_positions[i]``."""

    site_positions: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.site_positions)

    def gap(self, label: int) -> int:
        return self.site_positions[label]

    def label_of(self, gap: int) -> int:
        return self.site_positions.index(gap)


def _gap_is_active(t: Sequence[int], pos: dict[int, int], i: int) -> bool:
    v = t[i]
    if v <= 2:
        return True
    j = pos[v - 1]
    if j < i:
        return True
    return all(t[m] >= v - 1 for m in range(i + 1, j))


def active_sites(t: Sequence[int]) -> ActiveSiteLabeling:
    t = tuple(t)
    if not is_permutation(t):
        raise InvalidInputError(f"not a permutation: {list(t)}")
    if contains_pattern(t, "W"):
        raise DomainError(f"permutation contains W: {list(t)}")
    return _active_sites(t)


def _active_sites(t: tuple[int, ...]) -> ActiveSiteLabeling:
    n = len(t)
    pos = {v: i for i, v in enumerate(t)}
    gaps = [0]
    gaps.extend(i + 1 for i in range(n - 1) if _gap_is_active(t, pos, i))
    if n > 0:
        gaps.append(n)
    return ActiveSiteLabeling(tuple(gaps))


def numact(t: Sequence[int]) -> int:
    return len(active_sites(t))


def insert_max(t: Sequence[int], label: int) -> tuple[int, ...]:
    """Insert n+1 into the active site carrying ``label``."""
    t = tuple(t)
    sites = active_sites(t)
    if not 0 <= label < len(sites):
        raise InvalidInputError(f"label {label} out of range [0, {len(sites) - 1}]")
    g = sites.gap(label)
    return t[:g] + (len(t) + 1,) + t[g:]


def gamma(p: Sequence[int]) -> tuple[int, ...]:
    """Encode a weak Fishburn permutation as a weak ascent sequence."""
    p = tuple(p)
    if len(p) == 0 or not is_permutation(p):
        raise InvalidInputError(f"not a permutation: {list(p)}")
    if contains_pattern(p, "W"):
        raise DomainError(f"permutation contains W: {list(p)}")
    labels = []
    while len(p) > 1:
        g = p.index(len(p))
        p = p[:g] + p[g + 1:]
        labels.append(_active_sites(p).label_of(g))
    labels.append(0)
    return tuple(reversed(labels))


def gamma_inv(x: Sequence[int]) -> tuple[int, ...]:
    """Decode a weak ascent sequence into its weak Fishburn permutation."""
    x = tuple(x)
    if not validate(x):
        raise InvalidInputError(f"not a weak ascent sequence: {list(x)}")
    p: tuple[int, ...] = (1,)
    for label in x[1:]:
        g = _active_sites(p).gap(label)
        p = p[:g] + (len(p) + 1,) + p[g:]
    return p


def _grow(n: int) -> Iterator[tuple[int, ...]]:
    def walk(p: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(p) == n:
            yield p
            return
        for g in _active_sites(p).site_positions:
            yield from walk(p[:g] + (len(p) + 1,) + p[g:])

    yield from walk((1,))


def generate_weak_fishburn(
    n: int, mode: Literal["filter", "grow"] = "filter", cutoff: int | None = None
) -> list[tuple[int, ...]]:
    """All permutations of [1, n] avoiding W, sorted lexicographically.

    ``filter`` scans all n! permutations; ``grow`` inserts maxima into active
    sites.  Only ``filter`` is subject to the brute-force cutoff.
    """
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if mode == "filter":
        limit = _cutoff() if cutoff is None else cutoff
        if n > limit:
            raise ResourceLimitError(f"n={n} exceeds brute-force cutoff {limit}")
        return [p for p in itertools.permutations(range(1, n + 1)) if not _contains_w(p)]
    if mode == "grow":
        return sorted(_grow(n))
    raise InvalidInputError(f"unknown mode {mode!r}")
