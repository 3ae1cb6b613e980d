"""Upper-triangular 0/1 matrices of the class WMat and the bijection Omega.

A matrix is a tuple of row tuples.  Rows and columns are 1-based in the
docstrings and in every position this module returns or accepts
(``topone``, weak entries, merge positions); storage is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError, InternalConsistencyError, InvalidInputError
from .sequences import validate

__all__ = [
    "Matrix",
    "MatrixStats",
    "expand",
    "format_matrix",
    "is_mergeable",
    "iter_matrices",
    "matrix_stats",
    "merge_at",
    "nonzero_rows",
    "omega",
    "omega_inv",
    "parse_matrix",
    "reduce",
    "topone",
    "validate_matrix",
    "weak_entries",
]

Matrix = tuple[tuple[int, ...], ...]


def _freeze(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(c) for c in row) for row in rows)


def _top(m: Matrix, col: int) -> int | None:
    for r in range(len(m)):
        if m[r][col]:
            return r
    return None


def _bottom(m: Matrix, col: int) -> int | None:
    for r in range(len(m) - 1, -1, -1):
        if m[r][col]:
            return r
    return None


def validate_matrix(m: Sequence[Sequence[int]], n: int | None = None) -> bool:
    """True iff ``m`` is in WMat (in WMat_n when ``n`` is given)."""
    k = len(m)
    if k == 0 or any(len(row) != k for row in m):
        raise InvalidInputError("matrix must be square and non-empty")
    if any(c not in (0, 1) for row in m for c in row):
        return False
    m = _freeze(m)
    if any(m[r][c] for r in range(k) for c in range(r)):
        return False
    if n is not None and sum(map(sum, m)) != n:
        return False
    tops = [_top(m, c) for c in range(k)]
    if any(t is None for t in tops):
        return False
    for c in range(k - 1):
        if tops[c] > _bottom(m, c + 1):
            return False
    return True


def _require(m: Sequence[Sequence[int]]) -> Matrix:
    if not validate_matrix(m):
        raise DomainError("matrix is not in WMat")
    return _freeze(m)


def topone(m: Sequence[Sequence[int]]) -> int:
    """Row of the topmost 1 in the rightmost column."""
    m = _freeze(m)
    t = _top(m, len(m) - 1)
    if t is None:
        raise DomainError("rightmost column is all zero")
    return t + 1


def reduce(m: Sequence[Sequence[int]]) -> tuple[Matrix, int]:
    """Remove the topmost 1 of the last column; return (smaller matrix, label)."""
    m = _require(m)
    if sum(map(sum, m)) < 2:
        raise DomainError("cannot reduce a matrix with a single 1")
    return _reduce(m)


def _reduce(m: Matrix) -> tuple[Matrix, int]:
    k = len(m)
    t = _top(m, k - 1)
    rows = [list(r) for r in m]
    rows[t][k - 1] = 0
    if not any(rows[r][k - 1] for r in range(k)):
        rows = [r[:-1] for r in rows[:-1]]
    return tuple(map(tuple, rows)), t


def expand(m: Sequence[Sequence[int]], i: int) -> Matrix:
    """Inverse step of :func:`reduce`: add a 1 so that topone becomes i + 1."""
    m = _require(m)
    if not 0 <= i <= len(m):
        raise InvalidInputError(f"expand label {i} outside [0, {len(m)}]")
    return _expand(m, i)


def _expand(m: Matrix, i: int) -> Matrix:
    k = len(m)
    rows = [list(r) for r in m]
    if i < _top(m, k - 1):
        rows[i][k - 1] = 1
    else:
        rows = [r + [0] for r in rows] + [[0] * (k + 1)]
        rows[i][k] = 1
    return tuple(map(tuple, rows))


def omega(m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    m = _require(m)
    labels = []
    while sum(map(sum, m)) > 1:
        m, i = _reduce(m)
        labels.append(i)
    labels.append(0)
    return tuple(reversed(labels))


def omega_inv(x: Sequence[int]) -> Matrix:
    x = tuple(x)
    if not validate(x):
        raise InvalidInputError(f"not a weak ascent sequence: {list(x)}")
    m: Matrix = ((1,),)
    for i in x[1:]:
        m = _expand(m, i)
    return m


def iter_matrices(n: int) -> Iterator[Matrix]:
    """WMat_n via the expand tree, in the order of their Omega codes."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")

    def walk(m: Matrix, depth: int) -> Iterator[Matrix]:
        if depth == n:
            yield m
            return
        for i in range(len(m) + 1):
            yield from walk(_expand(m, i), depth + 1)

    yield from walk(((1,),), 1)


@dataclass(frozen=True)
class MatrixStats:
    top_row_sum: int
    dimension: int
    rightmost_col_sum: int
    topone_minus_one: int


def matrix_stats(m: Sequence[Sequence[int]]) -> MatrixStats:
    m = _require(m)
    return MatrixStats(
        top_row_sum=sum(m[0]),
        dimension=len(m),
        rightmost_col_sum=sum(row[-1] for row in m),
        topone_minus_one=topone(m) - 1,
    )


def nonzero_rows(m: Sequence[Sequence[int]]) -> int:
    return sum(1 for row in m if any(row))


def weak_entries(m: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """Positions (k, l) of weak 1s, ordered by column.

    A 1 at (k, l) is weak when column l is zero below row k, and column
    l - 1 has its topmost 1 in row k.
    """
    m = _freeze(m)
    size = len(m)
    found = []
    for col in range(1, size):
        hits = [
            r
            for r in range(size)
            if m[r][col] and _bottom(m, col) == r and _top(m, col - 1) == r
        ]
        if len(hits) > 1:
            raise InternalConsistencyError(f"two weak entries in column {col + 1}")
        found.extend((r + 1, col + 1) for r in hits)
    return found


def merge_at(m: Sequence[Sequence[int]], pos: tuple[int, int]) -> Matrix | None:
    """Merge column l into column l - 1 at the weak entry ``pos = (k, l)``.

    Returns the merged matrix (one dimension smaller), or ``None`` when some
    deleted cell holds a 1, i.e. the matrix is not mergeable there.
    """
    m = _freeze(m)
    if tuple(pos) not in weak_entries(m):
        raise InvalidInputError(f"{pos} is not a weak entry")
    k, l = pos[0] - 1, pos[1] - 1
    size = len(m)
    rows = [list(r) for r in m]
    for i in range(k):
        rows[i][l - 1] += rows[i][l]
        if rows[i][l - 1] > 1:
            raise InternalConsistencyError(f"merge produced entry 2 at ({i + 1}, {l})")
    rows[k][l - 1] = 1

    deleted = {(size - 1, c) for c in range(size)}
    # column l above the weak entry was moved left, not deleted
    deleted.update((i, l) for i in range(k + 1, l + 1))
    deleted.update((j, j) for j in range(l + 1, size))
    if any(rows[r][c] for r, c in deleted):
        return None
    return _freeze([r[:l] + r[l + 1:] for r in rows[:-1]])


def is_mergeable(m: Sequence[Sequence[int]]) -> bool:
    """Merge successively at the leftmost weak entry until none remain."""
    m = _require(m)
    while True:
        entries = weak_entries(m)
        if not entries:
            return True
        m = merge_at(m, entries[0])
        if m is None:
            return False


def format_matrix(m: Sequence[Sequence[int]]) -> str:
    return "\n".join("".join(str(c) for c in row) for row in m)


def parse_matrix(text: str) -> Matrix:
    rows = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if any(set(r) - {"0", "1"} for r in rows):
        raise InvalidInputError("matrix text may contain only '0' and '1'")
    return _freeze([[int(c) for c in r] for r in rows])
