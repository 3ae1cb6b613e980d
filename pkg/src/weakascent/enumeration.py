"""Counting: the a(n, k) recurrence, Catalan numbers and the G(u, z) solver.

All arithmetic is on Python ints.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .errors import InternalConsistencyError, InvalidInputError

__all__ = [
    "BivariateSeries",
    "CountTable",
    "WASC_INDEX_SHIFT",
    "a_table",
    "bfile_lines",
    "catalan",
    "conjecture_check",
    "count_all",
    "series_A",
    "solve_G",
    "wasc_histogram",
]

# a(n, k) counts the length-n weak ascent sequences with k - 1 weak
# ascents; equivalently k is the dimension of the Omega matrix.
WASC_INDEX_SHIFT = 1


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


@dataclass(frozen=True)
class CountTable:
    max_n: int
    a: tuple[tuple[int, ...], ...]
    row_sums: tuple[int, ...]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        return self.a[n][k]

    def by_wasc(self, n: int) -> dict[int, int]:
        """Row n re-indexed by number of weak ascents, zero entries dropped."""
        return {k - WASC_INDEX_SHIFT: v for k, v in enumerate(self.a[n]) if v}


def a_table(max_n: int) -> CountTable:
    """Fill a[n][k] for 0 <= n, k <= max_n.

    a[0][0] = 1, a[n][0] = a[0][k] = 0 otherwise, and
    a[n][k] = sum_{i=0..n} sum_{j=0..k-1} (-1)^j C(k-j, i) C(i, j) a[n-i][k-j-1].
    """
    if max_n < 0:
        raise InvalidInputError(f"max_n must be >= 0, got {max_n}")
    size = max_n + 1
    a = [[0] * size for _ in range(size)]
    a[0][0] = 1
    for n in range(1, size):
        for k in range(1, size):
            total = 0
            for i in range(n + 1):
                for j in range(k):
                    prev = a[n - i][k - j - 1]
                    if prev:
                        total += (-1) ** j * _binom(k - j, i) * _binom(i, j) * prev
            a[n][k] = total
    rows = tuple(tuple(r) for r in a)
    return CountTable(max_n, rows, tuple(sum(r) for r in rows))


def wasc_histogram(n: int) -> dict[int, int]:
    """b(n, k): number of weak ascent sequences of length n with k weak ascents."""
    from .sequences import iter_sequences, wasc

    return dict(sorted(Counter(wasc(x) for x in iter_sequences(n)).items()))


def catalan(n: int) -> int:
    if n < 0:
        raise InvalidInputError(f"catalan index must be >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


# Dense integer polynomials in u: index = degree.

def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _add(p: list[int], q: list[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def _mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _div_one_minus_u(p: list[int]) -> list[int]:
    """Exact quotient p / (1 - u); raises if there is a remainder."""
    # p = (1 - u) q  =>  q_i = p_i + q_{i-1}
    q = []
    acc = 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    if acc + p[-1] != 0:
        raise InternalConsistencyError("coefficient of G is not divisible by (1 - u)")
    return _trim(q or [0])


def _shift_coefficient(g: list[int], r: int) -> list[int]:
    """[z^r] g(u + (u - u^2) z)  =  (u - u^2)^r * sum_d g_d C(d, r) u^(d - r)."""
    inner = [0] * max(1, len(g) - r)
    for d in range(r, len(g)):
        inner[d - r] = g[d] * comb(d, r)
    w = [1]
    for _ in range(r):
        w = _mul(w, [0, 1, -1])
    return _mul(w, _trim(inner))


@dataclass(frozen=True)
class BivariateSeries:
    """G(u, z) truncated in z; ``coefficients[m]`` is the polynomial [z^m] G in u."""

    coefficients: tuple[tuple[int, ...], ...]

    def at_u_equals_one(self) -> list[int]:
        return [sum(c) for c in self.coefficients]


def solve_G(order: int) -> BivariateSeries:
    """Solve G(u, z) = u(1 - u) + u G(u(1 + z - uz), z) up to z^order.

    Comparing z^m coefficients gives (1 - u) g_m = [m = 0] u(1 - u) + u R_m
    where R_m collects the contributions of g_0 .. g_{m-1}.
    """
    if order < 0:
        raise InvalidInputError(f"order must be >= 0, got {order}")
    gs: list[list[int]] = []
    for m in range(order + 1):
        rest = [0]
        for r in range(1, m + 1):
            rest = _add(rest, _shift_coefficient(gs[m - r], r))
        rhs = _mul([0, 1], rest)
        if m == 0:
            rhs = _add(rhs, [0, 1, -1])
        gs.append(_div_one_minus_u(rhs))
    return BivariateSeries(tuple(tuple(g) for g in gs))


def series_A(order: int = 12) -> list[int]:
    """Coefficients of A(z) = G(1, z) through z^order."""
    return solve_G(order).at_u_equals_one()


def conjecture_check(n: int) -> tuple[int, int, bool]:
    """Bounded-descent weak ascent sequences versus I_n(100, 110, 120, 210)."""
    from .inversions import iter_avoiding
    from .sequences import iter_sequences

    left = sum(1 for x in iter_sequences(n) if all(b >= a - 1 for a, b in zip(x, x[1:])))
    right = sum(1 for _ in iter_avoiding(n, ["100", "110", "120", "210"]))
    return left, right, left == right


def count_all(n: int) -> dict[str, int | None]:
    """Sizes of every object family at length n, each counted independently.

    Families whose brute-force oracle is past its cutoff report ``None``.
    """
    from .errors import ResourceLimitError
    from .inversions import generate_posdt, iter_avoiding
    from .matrices import iter_matrices
    from .permutations import generate_weak_fishburn
    from .posets import generate_posets
    from .sequences import iter_sequences

    def guarded(fn):
        try:
            return fn()
        except ResourceLimitError:
            return None

    return {
        "wasc": sum(1 for _ in iter_sequences(n)),
        "perm": guarded(lambda: len(generate_weak_fishburn(n, mode="filter"))),
        "matrix": sum(1 for _ in iter_matrices(n)),
        "poset": guarded(lambda: len(generate_posets(n, mode="brute"))),
        "inv_100": sum(1 for _ in iter_avoiding(n, ["(10)0"])),
        "inv_101": sum(1 for _ in iter_avoiding(n, ["(10)1"])),
        "inv_posdt": len(generate_posdt(n)),
    }


def bfile_lines(order: int) -> list[str]:
    """OEIS b-file lines "n A_n" for n = 0..order."""
    return [f"{n} {v}" for n, v in enumerate(series_A(order))]
