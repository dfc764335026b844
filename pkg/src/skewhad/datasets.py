"""The six published difference families of orders 109, 145 and 247.

Each case is stored twice: as orbit index sets and as explicit element
listings (``data/explicit_blocks.txt``).  :func:`self_check` expands the
index sets and compares them against the listings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .families import Block, SdsQuadruple, expand
from .ring import OrbitIndexing, Subgroup, cyclic_subgroup, paper_indexing


@dataclass(frozen=True)
class PaperCase:
    id: str
    v: int
    generator: int
    H: tuple[int, ...]
    order: str
    index_sets: tuple[tuple[int, ...], ...]
    cardinals: tuple[int, int, int, int]
    lam: int
    squares: tuple[int, int, int, int]  # as printed, not necessarily in block order

    @property
    def subgroup(self) -> Subgroup:
        return Subgroup(self.v, self.H)

    def indexing(self) -> OrbitIndexing:
        return _indexing(self.v, self.H, self.order)

    def blocks(self) -> tuple[Block, ...]:
        idx = self.indexing()
        return tuple(expand(idx, J) for J in self.index_sets)

    def quadruple(self) -> SdsQuadruple:
        return SdsQuadruple(self.v, self.blocks(), self.lam)

    def explicit_blocks(self) -> tuple[Block, ...]:
        rows = explicit_listings()
        return tuple(Block(self.v, rows[(self.id, k)]) for k in range(1, 5))


@lru_cache(maxsize=None)
def _indexing(v: int, H: tuple[int, ...], order: str) -> OrbitIndexing:
    return paper_indexing(v, Subgroup(v, H), order=order)


H109 = (1, 45, 63)
H145 = (1, 16, 36, 81, 111, 136, 141)
H247 = (1, 9, 16, 55, 61, 81, 139, 144, 235)

CASES: dict[str, PaperCase] = {
    c.id: c
    for c in [
        PaperCase(
            "109A", 109, 45, H109, "ascending",
            (
                (0, 2, 5, 7, 8, 10, 12, 15, 16, 19, 20, 23, 24, 26, 29, 30, 33, 34),
                (4, 5, 6, 7, 11, 15, 18, 19, 20, 22, 25, 30, 32, 33, 35),
                (0, 1, 5, 6, 9, 10, 11, 14, 17, 20, 24, 26, 27, 28, 29, 31, 32),
                (0, 3, 4, 6, 7, 9, 10, 12, 13, 22, 24, 25, 26, 27, 28, 29, 31, 33, 35),
            ),
            (54, 45, 51, 57), 98, (1, 19, 7, 5),
        ),
        PaperCase(
            "109B", 109, 45, H109, "ascending",
            (
                (0, 3, 5, 6, 9, 10, 13, 15, 16, 18, 21, 23, 24, 27, 28, 30, 32, 34),
                (1, 4, 5, 6, 7, 8, 10, 11, 12, 13, 16, 19, 20, 21, 25, 27, 30, 31, 34),
                (0, 1, 2, 3, 4, 6, 10, 12, 13, 15, 16, 17, 20, 22, 23, 24, 25, 29, 34, 35),
                (0, 1, 2, 3, 5, 8, 9, 12, 13, 14, 15, 16, 19, 21, 23, 25, 26, 28, 29, 33, 34),
            ),
            (54, 57, 60, 63), 125, (1, 5, 11, 17),
        ),
        PaperCase(
            "145A", 145, 16, H145, "units-first",
            (
                (1, 2, 4, 7, 9, 10, 13, 14, 16, 19, 20, 22),
                (0, 2, 4, 7, 10, 11, 14, 18, 19, 20, 21, 22),
                (1, 3, 6, 9, 12, 13, 14, 17, 19, 20, 21, 22, 23),
                (2, 3, 5, 6, 7, 9, 12, 13, 15, 16, 19, 20, 21, 22, 23),
            ),
            (72, 66, 67, 81), 141, (1, 13, 11, 17),
        ),
        PaperCase(
            "145B", 145, 16, H145, "units-first",
            (
                (1, 3, 5, 7, 8, 10, 13, 15, 17, 18, 20, 23),
                (0, 1, 2, 4, 12, 13, 15, 18, 19, 20, 22, 23),
                (4, 5, 6, 7, 9, 12, 14, 16, 18, 20, 21, 22, 23),
                (2, 6, 9, 10, 11, 12, 13, 14, 15, 17, 18, 20, 21, 22, 23),
            ),
            (72, 66, 67, 81), 141, (1, 13, 11, 17),
        ),
        PaperCase(
            "247A", 247, 9, H247, "ascending",
            (
                (0, 2, 4, 7, 8, 10, 12, 15, 16, 18, 20, 23, 25, 27, 29),
                (0, 2, 7, 9, 11, 12, 14, 15, 16, 18, 20, 22, 26),
                (2, 3, 4, 12, 13, 14, 15, 16, 18, 20, 23, 24, 26, 27, 29),
                (0, 3, 4, 6, 10, 11, 12, 14, 18, 19, 20, 22, 25, 29),
            ),
            (123, 111, 123, 114), 224, (1, 1, 19, 25),
        ),
        PaperCase(
            "247B", 247, 9, H247, "ascending",
            (
                (0, 3, 5, 7, 8, 11, 12, 15, 17, 18, 21, 22, 24, 27, 29),
                (3, 5, 6, 8, 11, 13, 14, 15, 16, 19, 26, 27, 29),
                (0, 1, 2, 4, 5, 7, 11, 13, 14, 15, 22, 23, 24, 26, 27),
                (0, 3, 8, 9, 10, 11, 13, 17, 19, 24, 25, 27, 28, 29),
            ),
            (123, 111, 123, 114), 224, (1, 1, 19, 25),
        ),
    ]
}

# Even-position orbits alpha_0, alpha_2, ... as tabulated for n=145 and n=247;
# for n=109 the table gives representatives r with alpha_2i = r*H.
ORBIT_TABLES: dict[int, tuple[tuple[int, ...], ...]] = {
    145: (
        H145,
        (2, 17, 32, 72, 77, 127, 137),
        (3, 43, 48, 98, 108, 118, 133),
        (6, 51, 71, 86, 91, 96, 121),
        (7, 52, 82, 107, 112, 117, 132),
        (11, 21, 31, 46, 61, 101, 106),
        (14, 19, 69, 79, 89, 104, 119),
        (22, 42, 57, 62, 67, 92, 122),
        (5, 35, 80, 100, 115, 120, 125),
        (10, 15, 55, 70, 85, 95, 105),
        (29,),
        (58,),
    ),
    247: (
        H247,
        (2, 18, 31, 32, 41, 110, 122, 162, 233),
        (3, 27, 48, 165, 170, 183, 185, 211, 243),
        (5, 28, 45, 58, 80, 158, 187, 201, 226),
        (6, 54, 83, 93, 96, 119, 123, 175, 239),
        (7, 20, 63, 73, 112, 138, 163, 180, 232),
        (10, 56, 69, 90, 116, 127, 155, 160, 205),
        (11, 47, 99, 102, 111, 115, 150, 176, 177),
        (13, 52, 65, 78, 91, 117, 143, 208, 221),
        (14, 29, 40, 79, 113, 126, 146, 217, 224),
        (17, 25, 43, 49, 140, 142, 153, 194, 225),
        (19, 57, 171),
        (33, 34, 37, 50, 59, 86, 98, 141, 203),
        (35, 66, 68, 74, 100, 118, 159, 172, 196),
        (38, 95, 114),
    ),
}
# Printed entries that are not H-orbits.  2*235 = 470 = 223 (mod 247), and the
# explicit listings of every block containing alpha_2 hold 223, never 233.
ORBIT_TABLE_ERRATA: dict[tuple[int, int], tuple[int, int]] = {(247, 2): (233, 223)}


def corrected_orbit_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Even-position orbits with the known misprints replaced."""
    rows = list(ORBIT_TABLES[n])
    for (m, pos), (printed, actual) in ORBIT_TABLE_ERRATA.items():
        if m == n:
            row = rows[pos // 2]
            rows[pos // 2] = tuple(sorted(actual if x == printed else x for x in row))
    return tuple(rows)


REPRESENTATIVES_109 = (1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 13, 15, 16, 18, 20, 23, 25, 30)

# Odd n < 300 for which no skew-Hadamard matrix of order 4n was known after
# these constructions.  Reference only.
OPEN_ORDERS = (
    69, 89, 101, 107, 119, 149, 153, 167, 177, 179, 191, 193, 201,
    205, 209, 213, 223, 225, 229, 233, 235, 239, 245, 249, 251, 253,
    257, 259, 261, 265, 269, 275, 277, 283, 285, 287, 289, 295, 299,
)


def get(case_id: str) -> PaperCase:
    try:
        return CASES[case_id]
    except KeyError:
        raise KeyError(f"unknown case {case_id!r}; choose from {', '.join(CASES)}") from None


def listings_text() -> str:
    return resources.files(__package__).joinpath("data/explicit_blocks.txt").read_text()


@lru_cache(maxsize=None)
def explicit_listings() -> dict[tuple[str, int], tuple[int, ...]]:
    """``(case id, block number) -> elements`` as printed for each family."""
    out = {}
    for line in listings_text().splitlines():
        if not line.strip():
            continue
        v, name, elems = line.split()
        case = v + name[0]
        out[(case, int(name[1]))] = tuple(int(x) for x in elems.split(","))
    return out


def format_listing(case: PaperCase) -> str:
    """Expanded blocks of ``case`` in the layout of the listings file."""
    letter = case.id[-1]
    return "".join(
        f"{case.v} {letter}{k} " + ",".join(map(str, b.elements)) + "\n"
        for k, b in enumerate(case.blocks(), start=1)
    )


def self_check() -> None:
    """Raise if any index-set fixture disagrees with its explicit listing
    or with the subgroup generator it names."""
    for case in CASES.values():
        if cyclic_subgroup(case.v, case.generator).elements != case.H:
            raise AssertionError(f"{case.id}: generator {case.generator} does not give H")
        expanded = case.blocks()
        for k, (b, e) in enumerate(zip(expanded, case.explicit_blocks()), start=1):
            if b != e:
                diff = sorted(set(b.elements) ^ set(e.elements))
                raise AssertionError(f"{case.id} block {k}: expansion differs at {diff[:8]}")
        if tuple(len(b) for b in expanded) != case.cardinals:
            raise AssertionError(f"{case.id}: cardinals {[len(b) for b in expanded]}")
