"""Equivalence of blocks under affine maps x -> m*x + t of Z_n."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .families import Block
from .ring import NotAUnit, OrbitIndexing, units


class ModulusMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AffineMap:
    n: int
    m: int
    t: int = 0

    def __post_init__(self):
        if gcd(self.m, self.n) != 1:
            raise NotAUnit(f"multiplier {self.m} is not a unit modulo {self.n}")
        object.__setattr__(self, "m", self.m % self.n)
        object.__setattr__(self, "t", self.t % self.n)

    def __call__(self, x: int) -> int:
        return (self.m * x + self.t) % self.n

    def inverse(self) -> AffineMap:
        mi = pow(self.m, -1, self.n) if self.n > 1 else 0
        return AffineMap(self.n, mi, -mi * self.t)


def apply(f: AffineMap, b: Block) -> Block:
    if f.n != b.n:
        raise ModulusMismatch(f"map acts on Z_{f.n}, block lives in Z_{b.n}")
    return Block(b.n, [f(x) for x in b.elements])


def _check(x: Block, y: Block) -> int:
    if x.n != y.n:
        raise ModulusMismatch(f"Z_{x.n} vs Z_{y.n}")
    return x.n


def find_equivalence(x: Block, y: Block) -> AffineMap | None:
    """Lexicographically least (m, t) with m*x + t == y, or None.

    Every unit m is tried; for each, all n translations are compared at once
    against the indicator of ``y``.
    """
    n = _check(x, y)
    if len(x) != len(y):
        return None
    target = y.indicator().astype(bool)
    xs = np.array(x.elements, dtype=np.int64)
    # row t of shifts holds (e + t) mod n for every e in x
    shifts = np.arange(n)[:, None]
    for m in units(n):
        image = (m * xs)[None, :] + shifts
        image %= n
        hits = target[image].all(axis=1)
        if hits.any():
            return AffineMap(n, m, int(np.argmax(hits)))
    return None


def multiplier_equivalences(x: Block, y: Block) -> list[int]:
    """All units m with m*x == y (no translation)."""
    n = _check(x, y)
    if len(x) != len(y):
        return []
    target = set(y.elements)
    return [m for m in units(n) if {m * e % n for e in x.elements} == target]


def orbit_multiplier_equivalences(indexing: OrbitIndexing, J, L) -> list[int]:
    """Units m carrying the orbit union of J onto that of L, decided on
    orbit indices: m permutes the H-orbits, so it suffices to push one
    representative of each chosen orbit."""
    n = indexing.n
    where = indexing.index_of()
    J, L = set(J), set(L)
    if sum(len(indexing[i]) for i in J) != sum(len(indexing[i]) for i in L):
        return []
    out = []
    for m in units(n):
        if {where[indexing[i][0] * m % n] for i in J} == L:
            out.append(m)
    return out
