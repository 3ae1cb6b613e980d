"""Exhaustive property suites over all objects up to a given size."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from . import enumeration, inversions, matrices, permutations, posets, sequences

POSET_MAX_N = 7


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _first_failure(items: Iterable, pred: Callable) -> str:
    for item in items:
        if not pred(item):
            return repr(item)
    return ""


def _check(name: str, items: Iterable, pred: Callable) -> Check:
    bad = _first_failure(items, pred)
    return Check(name, not bad, f"counterexample {bad}" if bad else "")


def final_descent_run(x) -> int:
    """Length of the longest strictly decreasing suffix."""
    run = 1
    for i in range(len(x) - 1, 0, -1):
        if x[i - 1] <= x[i]:
            break
        run += 1
    return run


def ones_from_last_nonzero_row(m) -> int:
    """Number of 1s in the columns at or right of the last non-zero row index."""
    last = max(r for r, row in enumerate(m) if any(row))
    return sum(row[c] for row in m for c in range(last, len(m)))


def bijections(max_n: int) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        seqs = sequences.generate(n)
        perms = permutations.generate_weak_fishburn(n, mode="grow")
        out.append(_check(f"gamma(gamma_inv(x)) = x, n={n}", seqs,
                          lambda x: permutations.gamma(permutations.gamma_inv(x)) == x))
        out.append(_check(f"gamma_inv(gamma(p)) = p, n={n}", perms,
                          lambda p: permutations.gamma_inv(permutations.gamma(p)) == p))
        out.append(_check(f"numact = 2 + wasc and lastact = x_n, n={n}", seqs, _numact_ok))
        mats = [matrices.omega_inv(x) for x in seqs]
        out.append(_check(f"omega(omega_inv(x)) = x, n={n}", seqs,
                          lambda x: matrices.omega(matrices.omega_inv(x)) == x))
        out.append(_check(f"omega_inv(omega(m)) = m, n={n}", mats,
                          lambda m: matrices.omega_inv(matrices.omega(m)) == m))
        out.append(_check(f"reduce(expand(m, i)) = (m, i), n={n}",
                          [(m, i) for m in mats for i in range(len(m) + 1)],
                          lambda mi: matrices.reduce(matrices.expand(*mi)) == mi))
        if n >= 2:
            out.append(_check(f"expand(reduce(m)) = m, n={n}", mats,
                              lambda m: matrices.expand(*matrices.reduce(m)) == m))
        if n <= POSET_MAX_N:
            out.append(_check(f"phi(psi(m)) = m, n={n}", mats,
                              lambda m: posets.phi(posets.psi(m)) == m))
            out.append(_check(f"psi(phi(p)) = p, n={n}", posets.generate_posets(n),
                              lambda p: posets.psi(posets.phi(p)) == p))
        invs = inversions.generate_avoiding(n, ["(10)0"])
        images = {inversions.phi_map(e) for e in invs}
        out.append(Check(f"phi_map bijective onto WAsc_n, n={n}",
                         len(images) == len(invs) and images == set(seqs)))
        out.append(_check(f"phi_map preserves descent-bottom positions, n={n}", invs,
                          lambda e: inversions.descent_bottom_positions(e)
                          == inversions.descent_bottom_positions(inversions.phi_map(e))))
    return out


def _numact_ok(x) -> bool:
    p = permutations.gamma_inv(x)
    sites = permutations.active_sites(p)
    return len(sites) == 2 + sequences.wasc(x) and sites.label_of(p.index(len(p))) == x[-1]


def stats(max_n: int) -> list[Check]:
    """Statistic transports in the form that holds exactly.

    The dimension is wasc + 1, the last column sum is the length of the
    final strictly decreasing run, and the maximal elements are the 1s in
    columns at or right of the last non-zero row.
    """
    out = []
    for n in range(1, max_n + 1):
        pairs = [(x, matrices.omega_inv(x)) for x in sequences.generate(n)]

        def seq_ok(pair):
            x, m = pair
            s, ms = sequences.stats(x), matrices.matrix_stats(m)
            return (
                s.zero_count == ms.top_row_sum
                and ms.dimension == s.wasc_count + 1
                and ms.rightmost_col_sum == final_descent_run(x)
                and s.last_entry == ms.topone_minus_one
            )

        out.append(_check(f"sequence/matrix statistics, n={n}", pairs, seq_ok))
        if n <= POSET_MAX_N:
            def poset_ok(pair):
                _, m = pair
                p = posets.psi(m)
                return (
                    len(posets.minimal_elements(p)) == sum(m[0])
                    and len(posets.levels(p).levels) == matrices.nonzero_rows(m)
                    and len(posets.maximal_elements(p)) == ones_from_last_nonzero_row(m)
                )

            out.append(_check(f"matrix/poset statistics, n={n}", pairs, poset_ok))
    return out


def mergeable(max_n: int) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        seqs = sequences.generate(n)
        out.append(_check(f"is_mergeable(omega_inv(x)) iff x is an ascent sequence, n={n}", seqs,
                          lambda x: matrices.is_mergeable(matrices.omega_inv(x))
                          == sequences.is_ascent_sequence(x)))
    return out


def conjecture(max_n: int) -> list[Check]:
    out = []
    table = enumeration.a_table(max_n)
    series = enumeration.series_A(max_n)
    for n in range(1, max_n + 1):
        left, right, same = enumeration.conjecture_check(n)
        out.append(Check(f"bounded-descent WAsc vs I(100,110,120,210), n={n}", same, f"{left} vs {right}"))
        hist = enumeration.wasc_histogram(n)
        out.append(Check(f"a(n, k) = b(n, k - 1), n={n}", table.by_wasc(n) == hist))
        out.append(Check(f"row sum = series coefficient = |WAsc_n|, n={n}",
                         table.row_sums[n] == series[n] == sum(hist.values())))
    return out


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "bijections": bijections,
    "stats": stats,
    "mergeable": mergeable,
    "conjecture": conjecture,
}


def run(suite: str, max_n: int) -> list[Check]:
    if suite == "all":
        return [c for fn in SUITES.values() for c in fn(max_n)]
    return SUITES[suite](max_n)
