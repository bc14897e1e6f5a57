"""Signed perfect matchings of an even index set.

A matching is normalized so that each pair is internally sorted and pairs
are sorted by their first entry; the sign is the signature of the flattened
pair sequence read as a permutation of the sorted ground set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    sign: int

    def flatten(self) -> tuple[int, ...]:
        return tuple(x for pair in self.pairs for x in pair)

    def __str__(self) -> str:
        body = "".join(f"({a},{b})" for a, b in self.pairs)
        return f"{'+' if self.sign > 0 else '-'}{body}"


def inversion_sign(seq) -> int:
    """Signature of a sequence of distinct values via inversion counting."""
    inversions = 0
    n = len(seq)
    for p in range(n):
        for q in range(p + 1, n):
            if seq[p] > seq[q]:
                inversions += 1
    return -1 if inversions % 2 else 1


def _pairings(rest: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not rest:
        yield ()
        return
    a = rest[0]
    for idx in range(1, len(rest)):
        b = rest[idx]
        remaining = rest[1:idx] + rest[idx + 1 :]
        for tail in _pairings(remaining):
            yield ((a, b),) + tail


def enumerate_matchings(ground_set: Iterable[int]) -> list[Matching]:
    """All signed matchings of the ground set, lexicographic by pair list."""
    ground = sorted(ground_set)
    if not ground or len(ground) % 2:
        raise InputError(f"ground set must have even positive size, got {len(ground)}")
    if len(set(ground)) != len(ground):
        raise InputError("ground set indices must be distinct")
    out = []
    for pairs in _pairings(tuple(ground)):
        flat = tuple(x for pair in pairs for x in pair)
        out.append(Matching(pairs, inversion_sign(flat)))
    return out


def odd_double_factorial(m: int) -> int:
    """(2m - 1)!!, the number of perfect matchings of 2m points."""
    out = 1
    for k in range(3, 2 * m, 2):
        out *= k
    return out
