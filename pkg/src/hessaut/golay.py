"""The Steiner system S(5,8,24) on the projective line over F_23.

Points of Omega = P^1(F_23) are the integers 0..22 plus a point at
infinity, encoded as -1 so that sorted order puts it first. The octads
are generated as the orbit of one base octad under the fractional linear
maps t -> t+1 and t -> -1/t, which generate PSL(2,23); nothing is read
from a shipped table, so the construction itself stays under test.

The binary Golay code is recovered as the F_2-span of the octads and is
consumed by the Leech lattice membership test.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from itertools import combinations
from typing import Iterable

INFINITY = -1
OMEGA: tuple[int, ...] = (INFINITY,) + tuple(range(23))

BASE_OCTAD = frozenset({INFINITY, 0, 1, 3, 12, 15, 21, 22})


def point_index(p: int) -> int:
    """Coordinate slot of a point: infinity first, then 0..22."""
    return p + 1


def index_point(i: int) -> int:
    return i - 1


def format_point(p: int) -> str:
    return "oo" if p == INFINITY else str(p)


def _translation() -> dict[int, int]:
    g = {k: (k + 1) % 23 for k in range(23)}
    g[INFINITY] = INFINITY
    return g


def _negated_inverse() -> dict[int, int]:
    g = {0: INFINITY, INFINITY: 0}
    for k in range(1, 23):
        g[k] = (-pow(k, -1, 23)) % 23
    return g


class SteinerSystem:
    """All 759 octads, with membership and covering queries."""

    def __init__(self, octads: tuple[frozenset[int], ...]):
        self.octads = octads
        self._members = frozenset(octads)

    def __len__(self) -> int:
        return len(self.octads)

    def is_octad(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return len(s) == 8 and s in self._members

    def octads_through(self, s: Iterable[int]) -> list[frozenset[int]]:
        """All octads containing s; unique for a 5-point set."""
        s = frozenset(s)
        if len(s) > 5:
            raise ValueError("octads_through expects at most 5 points")
        return [k for k in self.octads if s <= k]

    def covering_counts(self) -> Counter:
        """How often each 5-subset of Omega appears inside an octad."""
        counts: Counter = Counter()
        for k in self.octads:
            for five in combinations(sorted(k), 5):
                counts[five] += 1
        return counts


@cache
def steiner_system() -> SteinerSystem:
    """Orbit closure of the base octad under the two generating maps."""
    gens = (_translation(), _negated_inverse())
    seen = {BASE_OCTAD}
    frontier = [BASE_OCTAD]
    while frontier:
        nxt = []
        for octad in frontier:
            for g in gens:
                image = frozenset(g[p] for p in octad)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    octads = tuple(sorted(seen, key=lambda k: tuple(sorted(k))))
    return SteinerSystem(octads)


def build_steiner() -> SteinerSystem:
    return steiner_system()


def is_octad(s: Iterable[int]) -> bool:
    return steiner_system().is_octad(s)


def octads_through(s: Iterable[int]) -> list[frozenset[int]]:
    return steiner_system().octads_through(s)


def set_mask(s: Iterable[int]) -> int:
    mask = 0
    for p in s:
        mask |= 1 << point_index(p)
    return mask


def mask_set(mask: int) -> frozenset[int]:
    return frozenset(index_point(i) for i in range(24) if mask >> i & 1)


@cache
def golay_code() -> frozenset[int]:
    """The 4096 codewords (as 24-bit masks): the F_2-span of the octads."""
    basis: dict[int, int] = {}  # leading bit -> reduced word
    for octad in steiner_system().octads:
        w = set_mask(octad)
        while w:
            lead = w.bit_length() - 1
            if lead in basis:
                w ^= basis[lead]
            else:
                basis[lead] = w
                break
    span = {0}
    for b in basis.values():
        span |= {w ^ b for w in span}
    return frozenset(span)
