"""Blocks of Z_v and supplementary difference sets built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .ring import OrbitIndexing


class MixedModuli(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


@dataclass(frozen=True)
class Block:
    """A subset of Z_n, kept sorted and duplicate-free."""

    n: int
    elements: tuple[int, ...] = ()

    def __post_init__(self):
        elems = tuple(sorted(set(int(x) for x in self.elements)))
        if elems and (elems[0] < 0 or elems[-1] >= self.n):
            raise ValueError(f"block elements must lie in [0, {self.n})")
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)

    def negate(self) -> Block:
        return Block(self.n, [(-x) % self.n for x in self.elements])

    def indicator(self) -> np.ndarray:
        x = np.zeros(self.n, dtype=np.int64)
        x[list(self.elements)] = 1
        return x


def _common_modulus(blocks: Sequence[Block]) -> int:
    moduli = {b.n for b in blocks}
    if len(moduli) != 1:
        raise MixedModuli(f"blocks live in different rings: {sorted(moduli)}")
    return moduli.pop()


@dataclass(frozen=True)
class SdsQuadruple:
    """Four blocks of Z_v together with the claimed lambda."""

    v: int
    blocks: tuple[Block, Block, Block, Block]
    lam: int

    def __post_init__(self):
        blocks = tuple(self.blocks)
        if len(blocks) != 4:
            raise ValueError(f"expected 4 blocks, got {len(blocks)}")
        if any(b.n != self.v for b in blocks):
            raise MixedModuli(f"all blocks must live in Z_{self.v}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def cardinals(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def label(self) -> str:
        ks = ",".join(str(k) for k in self.cardinals)
        return f"4-({self.v};{ks};{self.lam})"


def expand(indexing: OrbitIndexing, indices: Iterable[int]) -> Block:
    """Union of the orbits named by ``indices``."""
    elems: list[int] = []
    for i in sorted(set(indices)):
        if not 0 <= i < len(indexing.orbits):
            raise IndexOutOfRange(f"orbit index {i} outside 0..{len(indexing.orbits) - 1}")
        elems.extend(indexing.orbits[i])
    return Block(indexing.n, elems)


@lru_cache(maxsize=32)
def _shift_table(n: int) -> np.ndarray:
    # row s holds (j + s) mod n
    return (np.arange(n)[:, None] + np.arange(n)[None, :]) % n


def autocorrelation(x: np.ndarray) -> np.ndarray:
    """Periodic autocorrelation sum_j x[j] * x[j + s] for every shift s."""
    return x[_shift_table(len(x))] @ x


def difference_counts(blocks: Sequence[Block]) -> np.ndarray:
    """How often each nonzero residue occurs as an ordered in-block difference.

    Entry ``s - 1`` counts pairs (a, a') with a != a' and a - a' = s, summed
    over all blocks.
    """
    if not blocks:
        raise ValueError("need at least one block")
    n = _common_modulus(blocks)
    total = np.zeros(n, dtype=np.int64)
    for b in blocks:
        total += autocorrelation(b.indicator())
    return total[1:]


@dataclass
class VerificationReport:
    passed: bool
    residue: int | None = None
    observed: int | None = None
    counts: np.ndarray | None = field(default=None, repr=False)

    def __bool__(self) -> bool:
        return self.passed


def verify_sds(q: SdsQuadruple, full: bool = False) -> VerificationReport:
    """Check that every nonzero difference occurs exactly ``q.lam`` times.

    On failure the report names the first residue whose count is off.
    """
    counts = difference_counts(q.blocks)
    bad = np.flatnonzero(counts != q.lam)
    if bad.size == 0:
        return VerificationReport(True, counts=counts if full else None)
    s = int(bad[0])
    return VerificationReport(False, s + 1, int(counts[s]), counts if full else None)


def is_skew_type(b: Block) -> bool:
    """X and -X are disjoint and together cover Z_n minus zero."""
    n = b.n
    if n % 2 == 0 or len(b) != (n - 1) // 2:
        return False
    elems = set(b.elements)
    return 0 not in elems and all((-x) % n not in elems for x in elems)


def index_set_is_skew(indices: Iterable[int], pair_count: int) -> bool:
    """Exactly one of 2i, 2i+1 is chosen for every pair index i."""
    idx = set(indices)
    if any(i < 0 or i >= 2 * pair_count for i in idx):
        return False
    return all((2 * i in idx) != (2 * i + 1 in idx) for i in range(pair_count))


@dataclass(frozen=True)
class ParameterReport:
    v: int
    counting_identity: bool
    lambda_relation: bool
    differences: tuple[int, ...]

    @property
    def decomposition(self) -> tuple[int, ...]:
        return tuple(abs(d) for d in self.differences)

    @property
    def squares_total(self) -> int:
        return sum(d * d for d in self.differences)

    @property
    def sum_of_squares(self) -> bool:
        return self.squares_total == 4 * self.v

    def __str__(self) -> str:
        terms = "+".join(f"{d}^2" for d in self.decomposition)
        return f"{self.squares_total}={terms}"


def parameter_identities(q: SdsQuadruple) -> ParameterReport:
    ks = q.cardinals
    v, lam = q.v, q.lam
    return ParameterReport(
        v=v,
        counting_identity=sum(k * (k - 1) for k in ks) == lam * (v - 1),
        lambda_relation=lam == sum(ks) - v,
        differences=tuple(v - 2 * k for k in ks),
    )
