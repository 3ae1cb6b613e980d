"""Inversion sequences, vincular pattern avoidance and the map to WAsc_n.

Inversion sequences are tuples with e_i in [0, i - 1] (1-based i).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, InternalConsistencyError, InvalidInputError

__all__ = [
    "PATTERNS",
    "VincularPattern",
    "avoids",
    "desbot",
    "descent_bottom_positions",
    "generate_avoiding",
    "generate_posdt",
    "is_inversion_sequence",
    "is_posdt",
    "iter_avoiding",
    "parse_pattern",
    "phi_map",
    "phi_map_inv",
    "reduction",
]


def reduction(w: Sequence[int]) -> tuple[int, ...]:
    """Replace the i-th smallest distinct value by i - 1."""
    if len(w) == 0:
        raise InvalidInputError("reduction of an empty word")
    rank = {v: i for i, v in enumerate(sorted(set(w)))}
    return tuple(rank[v] for v in w)


@dataclass(frozen=True)
class VincularPattern:
    """Pattern letters plus the 0-based positions s whose letters s, s+1 must be adjacent."""

    letters: tuple[int, ...]
    adjacent_pairs: frozenset[int] = frozenset()

    def __post_init__(self):
        r = len(self.letters)
        if r == 0:
            raise InvalidInputError("empty pattern")
        if set(self.letters) != set(range(max(self.letters) + 1)):
            raise InvalidInputError(f"pattern letters {self.letters} skip a value")
        if any(not 0 <= s < r - 1 for s in self.adjacent_pairs):
            raise InvalidInputError("adjacency position out of range")

    def __str__(self) -> str:
        out = []
        for s, v in enumerate(self.letters):
            if s in self.adjacent_pairs and (s - 1) not in self.adjacent_pairs:
                out.append("(")
            out.append(str(v))
            if (s - 1) in self.adjacent_pairs and s not in self.adjacent_pairs:
                out.append(")")
        return "".join(out)


_TOKEN = re.compile(r"\((\d+)\)|(\d)")


def parse_pattern(text: str) -> VincularPattern:
    """Parse ``"(10)0"`` style notation; parenthesized letters are adjacent."""
    letters: list[int] = []
    adjacent: set[int] = set()
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise InvalidInputError(f"cannot parse pattern {text!r}")
        if m.group(1) is not None:
            block = m.group(1)
            if len(block) < 2:
                raise InvalidInputError(f"underlined block must have >= 2 letters in {text!r}")
            start = len(letters)
            letters.extend(int(c) for c in block)
            adjacent.update(range(start, len(letters) - 1))
        else:
            letters.append(int(m.group(2)))
        pos = m.end()
    return VincularPattern(tuple(letters), frozenset(adjacent))


PATTERNS = {name: parse_pattern(name) for name in ("(10)0", "(10)1", "100", "110", "120", "210")}


def is_inversion_sequence(e: Sequence[int]) -> bool:
    return all(isinstance(v, int) and 0 <= v < i for i, v in enumerate(e, start=1))


def _occurrences_ending_at(e: Sequence[int], p: VincularPattern, last: int) -> bool:
    r = len(p.letters)
    for head in itertools.combinations(range(last), r - 1):
        idx = head + (last,)
        if any(idx[s + 1] != idx[s] + 1 for s in p.adjacent_pairs):
            continue
        if reduction([e[i] for i in idx]) == p.letters:
            return True
    return False


def avoids(e: Sequence[int], p: VincularPattern | str) -> bool:
    """True iff no subsequence of ``e`` reduces to ``p`` with its adjacencies."""
    if isinstance(p, str):
        p = parse_pattern(p)
    return not any(_occurrences_ending_at(e, p, last) for last in range(len(p.letters) - 1, len(e)))


def descent_bottom_positions(e: Sequence[int]) -> list[int]:
    """0-based positions i with e[i-1] > e[i]."""
    return [i for i in range(1, len(e)) if e[i - 1] > e[i]]


def desbot(e: Sequence[int]) -> set[int]:
    """Set of descent-bottom values."""
    return {e[i] for i in descent_bottom_positions(e)}


def phi_map(e: Sequence[int]) -> tuple[int, ...]:
    """Map a (10)0-avoiding inversion sequence to a weak ascent sequence.

    Each entry is replaced by its 0-based rank among the values the prefix
    allows, namely [0, m - 1] minus the descent bottoms so far.  For the
    first three entries this rank is the entry itself.
    """
    e = tuple(e)
    if not is_inversion_sequence(e):
        raise InvalidInputError(f"not an inversion sequence: {list(e)}")
    if not avoids(e, PATTERNS["(10)0"]):
        raise DomainError(f"inversion sequence contains (10)0: {list(e)}")
    pos = descent_bottom_positions(e)
    if len({e[i] for i in pos}) != len(pos):
        raise InternalConsistencyError("repeated descent bottom in a (10)0-avoider")
    w = list(e[:3])
    blocked: set[int] = desbot(e[:3])
    for m in range(3, len(e)):
        allowed = [v for v in range(m + 1) if v not in blocked]
        w.append(allowed.index(e[m]))
        if e[m - 1] > e[m]:
            blocked.add(e[m])
    return tuple(w)


def phi_map_inv(w: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`phi_map`: pick the w_m-th allowed value at each step."""
    from .sequences import validate

    w = tuple(w)
    if not validate(w):
        raise InvalidInputError(f"not a weak ascent sequence: {list(w)}")
    e = list(w[:3])
    blocked: set[int] = desbot(e)
    for m in range(3, len(w)):
        allowed = [v for v in range(m + 1) if v not in blocked]
        e.append(allowed[w[m]])
        if e[m - 1] > e[m]:
            blocked.add(e[m])
    return tuple(e)


def is_posdt(e: Sequence[int]) -> bool:
    """Inversion sequence none of whose entries equals a descent-top position (1-based)."""
    if not is_inversion_sequence(e):
        return False
    tops = {j + 1 for j in range(len(e) - 1) if e[j] > e[j + 1]}
    return not any(v in tops for v in e)


def _extend(n: int, ok) -> Iterator[tuple[int, ...]]:
    buf: list[int] = []

    def walk() -> Iterator[tuple[int, ...]]:
        if len(buf) == n:
            yield tuple(buf)
            return
        for v in range(len(buf) + 1):
            buf.append(v)
            if ok(buf):
                yield from walk()
            buf.pop()

    yield from walk()


def iter_avoiding(n: int, patterns: Iterable[VincularPattern | str]) -> Iterator[tuple[int, ...]]:
    """Inversion sequences of length ``n`` avoiding all ``patterns``, in lex order.

    Containment is inherited by extensions, so the tree is pruned as soon
    as an occurrence ends at the newest entry.
    """
    if n < 0:
        raise InvalidInputError(f"n must be >= 0, got {n}")
    pats = [parse_pattern(p) if isinstance(p, str) else p for p in patterns]

    def ok(buf: list[int]) -> bool:
        last = len(buf) - 1
        return not any(
            last >= len(p.letters) - 1 and _occurrences_ending_at(buf, p, last) for p in pats
        )

    return _extend(n, ok)


def generate_avoiding(n: int, patterns: Iterable[VincularPattern | str]) -> list[tuple[int, ...]]:
    return list(iter_avoiding(n, patterns))


def generate_posdt(n: int) -> list[tuple[int, ...]]:
    # posdt is closed under taking prefixes, so prune on the prefix
    return list(_extend(n, is_posdt))
