import itertools

import pytest
from hypothesis import given

from weakascent import DomainError, InvalidInputError
from weakascent.inversions import (
    PATTERNS,
    VincularPattern,
    avoids,
    desbot,
    descent_bottom_positions,
    generate_avoiding,
    generate_posdt,
    is_posdt,
    parse_pattern,
    phi_map,
    phi_map_inv,
    reduction,
)
from weakascent.sequences import generate

from fixtures import COUNTS
from test_sequences import weak_ascent_sequences


def all_inversion_sequences(n):
    return list(itertools.product(*(range(i) for i in range(1, n + 1))))


def brute_avoids(e, letters, adjacent):
    r = len(letters)
    for idx in itertools.combinations(range(len(e)), r):
        if any(idx[s + 1] != idx[s] + 1 for s in adjacent):
            continue
        sub = [e[i] for i in idx]
        ranks = sorted(set(sub))
        if [ranks.index(v) for v in sub] == list(letters):
            return False
    return True


@pytest.mark.parametrize("w, expected", [((5, 2, 2), (1, 0, 0)), ((3, 1, 3), (1, 0, 1)), ((0, 1, 2), (0, 1, 2))])
def test_reduction(w, expected):
    assert reduction(w) == expected


def test_parse_pattern():
    p = parse_pattern("(10)0")
    assert p == VincularPattern((1, 0, 0), frozenset({0}))
    assert str(p) == "(10)0"
    assert parse_pattern("210").adjacent_pairs == frozenset()
    assert str(parse_pattern("(120)")) == "(120)"
    for bad in ("(1)0", "1a0", "02"):
        with pytest.raises(InvalidInputError):
            parse_pattern(bad)


def test_avoids_examples():
    assert avoids((0, 1, 0, 2, 1, 3), "(10)0")
    assert not avoids((0, 1, 0, 0), "(10)0")
    assert avoids((0, 0, 0), "(10)1")


@pytest.mark.parametrize("name", sorted(PATTERNS))
def test_avoids_matches_brute_force(name):
    p = PATTERNS[name]
    for n in range(1, 7):
        for e in all_inversion_sequences(n):
            assert avoids(e, p) == brute_avoids(e, p.letters, p.adjacent_pairs)


def test_desbot():
    assert desbot((0, 1, 0, 2)) == {0}
    assert desbot((0, 1, 2)) == set()
    assert desbot((0, 1, 0, 2, 1)) == {0, 1}


def test_phi_map_examples():
    assert phi_map((0, 1, 0, 2, 1, 3)) == (0, 1, 0, 1, 0, 1)
    assert phi_map((0,)) == (0,)
    assert phi_map((0, 0, 0, 0)) == (0, 0, 0, 0)
    with pytest.raises(DomainError):
        phi_map((0, 1, 0, 0))
    with pytest.raises(InvalidInputError):
        phi_map((0, 2))


@pytest.mark.parametrize("n", range(1, 8))
def test_phi_map_bijection(n):
    invs = generate_avoiding(n, ["(10)0"])
    images = [phi_map(e) for e in invs]
    assert len(set(images)) == len(invs) == COUNTS[n - 1]
    assert set(images) == set(generate(n))
    for e, w in zip(invs, images):
        assert descent_bottom_positions(e) == descent_bottom_positions(w)
        assert phi_map_inv(w) == e


@pytest.mark.parametrize("n", range(1, 8))
def test_descent_bottoms_distinct(n):
    for e in generate_avoiding(n, ["(10)0"]):
        pos = descent_bottom_positions(e)
        assert len({e[i] for i in pos}) == len(pos)


def test_posdt_examples():
    assert not is_posdt((0, 1, 0, 2))
    assert is_posdt((0, 0, 0, 0))
    rest = [e for e in all_inversion_sequences(4) if e != (0, 1, 0, 2)]
    assert all(is_posdt(e) for e in rest)


@pytest.mark.parametrize("n", range(1, 7))
def test_posdt_prefix_pruning_is_exact(n):
    assert generate_posdt(n) == [e for e in all_inversion_sequences(n) if is_posdt(e)]


@pytest.mark.parametrize("n", range(1, 8))
def test_posdt_counts(n):
    assert len(generate_posdt(n)) == COUNTS[n - 1]


def test_generate_avoiding_counts():
    assert len(generate_avoiding(4, ["(10)0"])) == 23
    assert len(generate_avoiding(4, ["(10)1"])) == 23
    classical = ["100", "110", "120", "210"]
    assert len(generate_avoiding(5, classical)) == 82
    brute = [e for e in all_inversion_sequences(5)
             if all(brute_avoids(e, PATTERNS[p].letters, ()) for p in classical)]
    assert generate_avoiding(5, classical) == brute


@given(weak_ascent_sequences(max_len=12))
def test_phi_map_inverse_larger(w):
    e = phi_map_inv(w)
    assert avoids(e, "(10)0")
    assert phi_map(e) == w
