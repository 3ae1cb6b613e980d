"""Weakly (3+1)-free factorial posets and the bijections Psi and Phi.

A factorial poset on [1, n] is stored as its downset-size vector: element
j has strict downset [1, d_j] with 0 <= d_j < j.  Every such vector is a
factorial poset, so only weak (3+1)-freeness needs checking.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Sequence

from .errors import (
    DomainError,
    InternalConsistencyError,
    InvalidInputError,
    PosetRejection,
    ResourceLimitError,
)
from .matrices import Matrix, iter_matrices, validate_matrix

__all__ = [
    "BRUTE_FORCE_CUTOFF",
    "FactorialPoset",
    "LevelDecomposition",
    "find_special_3_plus_1",
    "from_relations",
    "generate_posets",
    "levels",
    "maximal_elements",
    "minimal_elements",
    "partition_matrix",
    "phi",
    "psi",
    "validate_poset",
]

BRUTE_FORCE_CUTOFF = 7


@dataclass(frozen=True)
class FactorialPoset:
    n: int
    downset_sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.downset_sizes) != self.n:
            raise InvalidInputError("downset_sizes must have length n")
        for j, d in enumerate(self.downset_sizes, start=1):
            if not 0 <= d < j:
                raise InvalidInputError(f"downset size {d} of element {j} not in [0, {j - 1}]")

    @classmethod
    def of(cls, sizes: Iterable[int]) -> FactorialPoset:
        sizes = tuple(sizes)
        return cls(len(sizes), sizes)

    def less(self, a: int, b: int) -> bool:
        """a <_P b, elements 1-based."""
        return a <= self.downset_sizes[b - 1]

    def comparable(self, a: int, b: int) -> bool:
        return self.less(a, b) or self.less(b, a)

    def relations(self) -> list[tuple[int, int]]:
        return [(a, b) for b in range(1, self.n + 1) for a in range(1, self.downset_sizes[b - 1] + 1)]

    def to_json(self) -> dict:
        return {"n": self.n, "downset_sizes": list(self.downset_sizes)}


def find_special_3_plus_1(p: FactorialPoset) -> tuple[int, int, int, int] | None:
    """First quadruple (i, j, j+1, k) forming a special 3+1, or None."""
    n = p.n
    for j in range(2, n - 1):
        for i in range(1, j):
            if not p.less(i, j) or p.comparable(i, j + 1) or p.comparable(j, j + 1):
                continue
            for k in range(j + 2, n + 1):
                if p.less(j, k) and not p.comparable(j + 1, k):
                    return (i, j, j + 1, k)
    return None


def from_relations(n: int, relation: Iterable[Sequence[int]]) -> FactorialPoset:
    """Convert a strict order given as (a, b) pairs meaning a <_P b.

    The relation must already be transitively closed.  Raises
    :class:`InvalidInputError` for non-orders and :class:`PosetRejection`
    when the order is not naturally labeled or not factorial.
    """
    rel = set()
    for pair in relation:
        if len(pair) != 2:
            raise InvalidInputError(f"relation entries must be pairs, got {pair!r}")
        a, b = int(pair[0]), int(pair[1])
        if not (1 <= a <= n and 1 <= b <= n):
            raise InvalidInputError(f"pair ({a}, {b}) outside [1, {n}]")
        rel.add((a, b))
    if any(a == b for a, b in rel):
        raise InvalidInputError("relation is not irreflexive")
    for (a, b), (c, d) in itertools.product(rel, repeat=2):
        if b == c and (a, d) not in rel:
            raise InvalidInputError(f"relation not transitive: ({a}, {b}), ({b}, {d})")
    for a, b in rel:
        if a > b:
            raise PosetRejection(f"not naturally labeled: {a} < {b} in P", witness=(a, b))
    sizes = []
    for b in range(1, n + 1):
        down = sorted(a for a, c in rel if c == b)
        if down != list(range(1, len(down) + 1)):
            missing = min(set(range(1, (down[-1] if down else 0) + 1)) - set(down))
            raise PosetRejection(
                f"not factorial: {missing} < {down[-1]} but {missing} is not below {b}",
                witness=(missing, down[-1], b),
            )
        sizes.append(len(down))
    return FactorialPoset(n, tuple(sizes))


def validate_poset(
    poset: FactorialPoset | None = None,
    *,
    n: int | None = None,
    relation: Iterable[Sequence[int]] | None = None,
) -> FactorialPoset:
    """Accept a poset of WPoset_n or raise :class:`PosetRejection` with a witness."""
    if poset is None:
        if n is None or relation is None:
            raise InvalidInputError("give either a FactorialPoset or n and relation")
        poset = from_relations(n, relation)
    witness = find_special_3_plus_1(poset)
    if witness is not None:
        raise PosetRejection(f"contains a special 3+1 on {witness}", witness=witness)
    return poset


def _check(p: FactorialPoset) -> None:
    if find_special_3_plus_1(p) is not None:
        raise DomainError("poset is not weakly (3+1)-free")


def psi(m: Sequence[Sequence[int]]) -> FactorialPoset:
    """Label the 1s column by column, bottom to top; i < j iff col(i) < row(j)."""
    if not validate_matrix(m):
        raise DomainError("matrix is not in WMat")
    size = len(m)
    where: list[tuple[int, int]] = []
    for c in range(size):
        for r in range(size - 1, -1, -1):
            if m[r][c]:
                where.append((r, c))
    ones_before_col = [0]
    for c in range(size):
        ones_before_col.append(ones_before_col[-1] + sum(m[r][c] for r in range(size)))
    for s in range(1, size + 1):
        labels = {i + 1 for i, (_, c) in enumerate(where) if c < s}
        if labels != set(range(1, ones_before_col[s] + 1)):
            raise InternalConsistencyError(f"first {s} columns do not hold an initial segment")
    # element in row r sees everything in columns 1..r-1 (1-based), i.e. ones_before_col[r]
    return FactorialPoset(len(where), tuple(ones_before_col[r] for r, _ in where))


@dataclass(frozen=True)
class LevelDecomposition:
    downsets: tuple[frozenset[int], ...]
    levels: tuple[frozenset[int], ...]


def levels(p: FactorialPoset) -> LevelDecomposition:
    sizes = sorted(set(p.downset_sizes))
    return LevelDecomposition(
        downsets=tuple(frozenset(range(1, s + 1)) for s in sizes),
        levels=tuple(
            frozenset(j for j, d in enumerate(p.downset_sizes, start=1) if d == s) for s in sizes
        ),
    )


def minimal_elements(p: FactorialPoset) -> list[int]:
    return [j for j, d in enumerate(p.downset_sizes, start=1) if d == 0]


def maximal_elements(p: FactorialPoset) -> list[int]:
    # j is maximal iff no element has j in its downset
    top = max(p.downset_sizes)
    return [j for j in range(1, p.n + 1) if j > top]


def partition_matrix(p: FactorialPoset) -> list[list[list[int]]]:
    """Set-valued matrix C with C[i][j] = L_{i-1} cap (D_j minus D_{j-1}), 1-based in i, j."""
    dec = levels(p)
    bounds = [len(d) for d in dec.downsets] + [p.n]
    k = len(dec.levels)
    return [
        [sorted(e for e in dec.levels[i] if bounds[j] < e <= bounds[j + 1]) for j in range(k)]
        for i in range(k)
    ]


def _assert_partition_matrix(c: list[list[list[int]]]) -> None:
    col_of = {}
    for i, row in enumerate(c):
        for j, cell in enumerate(row):
            if cell and j < i:
                raise InternalConsistencyError("partition matrix is not upper triangular")
            for e in cell:
                col_of[e] = j
    for a in col_of:
        for b in col_of:
            if a < b and col_of[b] < col_of[a]:
                raise InternalConsistencyError(f"column of {b} is left of column of {a}")


def _chain(b: list[list[list[int]]], col: int) -> tuple[dict[int, int], list[int]]:
    """Row of every entry in column ``col`` and the run l, l+1, ... climbing from its minimum."""
    where = {e: r for r, row in enumerate(b) for e in row[col]}
    ell = min(where)
    run = [ell]
    while ell + len(run) in where and where[ell + len(run)] < where[run[-1]]:
        run.append(ell + len(run))
    return where, run


def _needs_split(b: list[list[list[int]]], col: int) -> bool:
    # a set of size > 1 can never be covered by the run, so this subsumes that test
    where, run = _chain(b, col)
    return len(run) < len(where)


def phi(p: FactorialPoset) -> Matrix:
    """Split the partition matrix of ``p`` into a 0/1 matrix of WMat_n.

    A column is split while its entries, read bottom to top, are not a run
    l, l+1, ... of singletons each strictly above the last.  The run is
    moved into a fresh column on the left and an empty row is inserted just
    below the row that now closes the new diagonal.
    """
    _check(p)
    b = partition_matrix(p)
    _assert_partition_matrix(b)
    while True:
        col = next((j for j in range(len(b)) if _needs_split(b, j)), None)
        if col is None:
            break
        where, run = _chain(b, col)
        for row in b:
            row.insert(col, [])
        # column col is the new empty one; the split column is col + 1
        for e in run:
            b[where[e]][col + 1].remove(e)
            b[where[e]][col].append(e)
        b.insert(col + 1, [[] for _ in range(len(b[0]))])
    out = tuple(tuple(len(cell) for cell in row) for row in b)
    if any(c > 1 for row in out for c in row):
        raise InternalConsistencyError("phi left a set of size > 1")
    return out


def generate_posets(
    n: int, mode: Literal["brute", "image"] = "brute", cutoff: int | None = None
) -> list[FactorialPoset]:
    """WPoset_n sorted by downset vector, by exhaustive filter or as psi(WMat_n).

    The brute-force mode scans all n! downset vectors and is capped at
    ``cutoff`` (default ``BRUTE_FORCE_CUTOFF``, or ``$WASC_MAX_N``).
    """
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if mode == "brute":
        if cutoff is None:
            env = os.environ.get("WASC_MAX_N")
            cutoff = int(env) if env else BRUTE_FORCE_CUTOFF
        if n > cutoff:
            raise ResourceLimitError(f"n={n} exceeds brute-force cutoff {cutoff}")
        found = []
        for sizes in itertools.product(*(range(j) for j in range(1, n + 1))):
            p = FactorialPoset(n, sizes)
            if find_special_3_plus_1(p) is None:
                found.append(p)
        return found
    if mode == "image":
        return sorted((psi(m) for m in iter_matrices(n)), key=lambda p: p.downset_sizes)
    raise InvalidInputError(f"unknown mode {mode!r}")

