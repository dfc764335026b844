"""Arithmetic in Z_n: units, multiplicative subgroups and their orbits.

The orbit indexing follows the negation-paired convention used for the
published difference families: even positions hold orbits in order of their
representatives, and every odd position holds the negation of the orbit just
before it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

ORDER_RULES = ("ascending", "units-first")


class NotAUnit(ValueError):
    """The proposed generator is not invertible modulo n."""


class SelfNegativeOrbit(ValueError):
    """Some nonzero orbit equals its own negation, so orbits cannot be paired."""


def unit_group_order(n: int) -> int:
    """Euler's totient, by trial division."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def units(n: int) -> list[int]:
    return [x for x in range(n) if gcd(x, n) == 1] if n > 1 else [0]


def multiplicative_order(u: int, n: int) -> int:
    if gcd(u, n) != 1:
        raise NotAUnit(f"{u} is not a unit modulo {n}")
    if n == 1:
        return 1
    k, x = 1, u % n
    while x != 1:
        x = x * u % n
        k += 1
    return k


@dataclass(frozen=True)
class Subgroup:
    n: int
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x % self.n in self.elements


def cyclic_subgroup(n: int, generator: int) -> Subgroup:
    """The subgroup of Z_n^* generated by ``generator``, sorted."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if gcd(generator, n) != 1:
        raise NotAUnit(f"{generator} is not a unit modulo {n}")
    elems = {1 % n}
    x = generator % n
    while x not in elems:
        elems.add(x)
        x = x * generator % n
    return Subgroup(n, tuple(sorted(elems)))


def elements_of_order(n: int, d: int) -> list[int]:
    """All units of multiplicative order exactly ``d``, ascending."""
    if d < 1:
        raise ValueError("order must be positive")
    return [u for u in units(n) if multiplicative_order(u, n) == d]


def orbit(n: int, H: Subgroup | tuple[int, ...], x: int) -> tuple[int, ...]:
    return tuple(sorted({x * h % n for h in H}))


def orbits_of(n: int, H: Subgroup) -> list[tuple[int, ...]]:
    """Orbits of H acting on Z_n by multiplication, ordered by least element.

    ``{0}`` is always the first orbit.
    """
    seen = set()
    out = []
    for x in range(n):
        if x in seen:
            continue
        o = orbit(n, H, x)
        seen.update(o)
        out.append(o)
    return out


@dataclass(frozen=True)
class OrbitIndexing:
    """Negation-paired list of the nonzero H-orbits of Z_n.

    ``orbits[2*i + 1]`` is ``-orbits[2*i]`` for every pair index ``i``.
    """

    n: int
    H: Subgroup
    orbits: tuple[tuple[int, ...], ...]

    @property
    def pair_count(self) -> int:
        return len(self.orbits) // 2

    def __len__(self) -> int:
        return len(self.orbits)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.orbits[i]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    def representatives(self) -> list[int]:
        """Least element of each even-position orbit."""
        return [self.orbits[2 * i][0] for i in range(self.pair_count)]

    def index_of(self) -> dict[int, int]:
        """Map each nonzero residue to the position of its orbit."""
        return {x: i for i, o in enumerate(self.orbits) for x in o}


def paper_indexing(
    n: int,
    H: Subgroup,
    order: str = "ascending",
    representatives: list[int] | None = None,
) -> OrbitIndexing:
    """Index the nonzero H-orbits as alpha_0, alpha_1, ... with negation pairing.

    Even positions take representatives in turn, skipping residues already
    covered; ``alpha_0`` is always H itself.  With ``order="ascending"`` the
    next representative is the least unused residue.  ``"units-first"`` runs
    through all units before any zero divisor, which is the layout of the
    n=145 table.  An explicit ``representatives`` list overrides both.
    """
    if order not in ORDER_RULES:
        raise ValueError(f"unknown order rule {order!r}; expected one of {ORDER_RULES}")
    if H.n != n:
        raise ValueError(f"subgroup lives in Z_{H.n}, not Z_{n}")
    if representatives is not None:
        candidates = [x % n for x in representatives]
    elif order == "units-first":
        candidates = sorted(range(1, n), key=lambda x: (gcd(x, n) != 1, x))
    else:
        candidates = list(range(1, n))

    used: set[int] = set()
    orbits: list[tuple[int, ...]] = []
    for x in candidates:
        if x == 0 or x in used:
            continue
        o = orbit(n, H, x)
        neg = tuple(sorted((n - y) % n for y in o))
        if o == neg:
            raise SelfNegativeOrbit(
                f"orbit of {x} in Z_{n} is closed under negation; -1 lies in the stabilizer"
            )
        orbits.append(o)
        orbits.append(neg)
        used.update(o)
        used.update(neg)
    if len(used) != n - 1:
        missing = sorted(set(range(1, n)) - used)
        raise ValueError(f"representatives do not cover Z_{n} \\ {{0}}; missing {missing[:5]}")
    return OrbitIndexing(n, H, tuple(orbits))
