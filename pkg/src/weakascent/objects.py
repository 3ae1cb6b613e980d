"""Object families, their codecs, and routing through the sequence hub.

Every bijection is defined to or from weak ascent sequences, so a map
between two families goes X -> sequence -> Y.
"""

from __future__ import annotations

import json
import os
from typing import Any, Callable, Iterator

from . import inversions, matrices, permutations, posets, sequences
from .errors import InvalidInputError, ResourceLimitError

KINDS = ("seq", "perm", "matrix", "poset", "inv")

# |WAsc_10| = 1414102; beyond that a full listing is not a desk-scale job
GENERATE_CUTOFF = 10


def _poset_to_seq(p: posets.FactorialPoset) -> tuple[int, ...]:
    return matrices.omega(posets.phi(p))


def _seq_to_poset(x) -> posets.FactorialPoset:
    return posets.psi(matrices.omega_inv(x))


def _check_seq(x) -> tuple[int, ...]:
    x = tuple(x)
    if not sequences.validate(x):
        raise InvalidInputError(f"not a weak ascent sequence: {list(x)}")
    return x


TO_SEQ: dict[str, Callable[[Any], tuple[int, ...]]] = {
    "seq": _check_seq,
    "perm": permutations.gamma,
    "matrix": matrices.omega,
    "poset": _poset_to_seq,
    "inv": inversions.phi_map,
}

FROM_SEQ: dict[str, Callable[[tuple[int, ...]], Any]] = {
    "seq": _check_seq,
    "perm": permutations.gamma_inv,
    "matrix": matrices.omega_inv,
    "poset": _seq_to_poset,
    "inv": inversions.phi_map_inv,
}


def convert(obj: Any, src: str, dst: str) -> Any:
    return FROM_SEQ[dst](TO_SEQ[src](obj))


def enumerate_objects(kind: str, n: int) -> Iterator[Any]:
    """Deterministic listing of one family, sorted."""
    env = os.environ.get("WASC_MAX_N")
    limit = int(env) if env else GENERATE_CUTOFF
    if n > limit:
        raise ResourceLimitError(f"n={n} exceeds generation cutoff {limit}")
    if kind == "seq":
        yield from sequences.iter_sequences(n)
    elif kind == "perm":
        yield from permutations.generate_weak_fishburn(n, mode="grow")
    elif kind == "matrix":
        yield from sorted(matrices.iter_matrices(n))
    elif kind == "poset":
        yield from posets.generate_posets(n, mode="image")
    elif kind == "inv":
        yield from inversions.iter_avoiding(n, [inversions.PATTERNS["(10)0"]])
    else:
        raise InvalidInputError(f"unknown object kind {kind!r}")


def to_json(obj: Any, kind: str) -> Any:
    if kind == "poset":
        return obj.to_json()
    if kind == "matrix":
        return [list(r) for r in obj]
    return list(obj)


def _int_list(value: Any) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise InvalidInputError(f"expected a JSON array of integers, got {value!r}")
    return value


def from_json(value: Any, kind: str) -> Any:
    """Decode a JSON value; structural checks only, membership is left to the maps."""
    if kind == "poset":
        if not isinstance(value, dict) or "n" not in value:
            raise InvalidInputError("poset must be an object with key 'n'")
        n = value["n"]
        if "downset_sizes" in value:
            return posets.FactorialPoset(n, tuple(_int_list(value["downset_sizes"])))
        if "relations" in value:
            return posets.from_relations(n, value["relations"])
        raise InvalidInputError("poset needs 'downset_sizes' or 'relations'")
    if kind == "matrix":
        if not isinstance(value, list) or not value:
            raise InvalidInputError("matrix must be a non-empty array of rows")
        rows = tuple(tuple(_int_list(r)) for r in value)
        if any(len(r) != len(rows) for r in rows):
            raise InvalidInputError("matrix must be square")
        return rows
    if kind in KINDS:
        return tuple(_int_list(value))
    raise InvalidInputError(f"unknown object kind {kind!r}")


def to_text(obj: Any, kind: str) -> str:
    if kind == "matrix":
        return matrices.format_matrix(obj)
    if kind == "poset":
        return " ".join(map(str, obj.downset_sizes))
    return " ".join(map(str, obj))


def from_text(block: str, kind: str) -> Any:
    if kind == "matrix":
        m = matrices.parse_matrix(block)
        if any(len(r) != len(m) for r in m):
            raise InvalidInputError("matrix must be square")
        return m
    try:
        values = tuple(int(tok) for tok in block.replace(",", " ").split())
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse {block!r}") from exc
    if kind == "poset":
        return posets.FactorialPoset.of(values)
    return values


def read_objects(text: str, kind: str) -> Iterator[Any]:
    """Parse JSON lines, or text records (blank-line separated for matrices)."""
    stripped = text.strip()
    if not stripped:
        return
    if stripped[0] in "[{":
        for line in stripped.splitlines():
            if line.strip():
                try:
                    value = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise InvalidInputError(f"bad JSON line {line!r}: {exc.msg}") from exc
                yield from_json(value, kind)
        return
    if kind == "matrix":
        for block in stripped.split("\n\n"):
            if block.strip():
                yield from_text(block, kind)
        return
    for line in stripped.splitlines():
        if line.strip():
            yield from_text(line, kind)
