from math import gcd

import pytest

from skewhad.datasets import ORBIT_TABLES, corrected_orbit_table, REPRESENTATIVES_109, H109, H145, H247
from skewhad.ring import (
    NotAUnit,
    SelfNegativeOrbit,
    Subgroup,
    cyclic_subgroup,
    elements_of_order,
    orbits_of,
    paper_indexing,
    unit_group_order,
)


def brute_totient(n):
    return sum(1 for x in range(1, n + 1) if gcd(x, n) == 1)


@pytest.mark.parametrize("n, phi", [(145, 112), (247, 216), (1, 1), (109, 108)])
def test_unit_group_order(n, phi):
    assert unit_group_order(n) == phi


def test_unit_group_order_matches_brute_force():
    for n in range(1, 400):
        assert unit_group_order(n) == brute_totient(n)


def test_cyclic_subgroup_examples():
    assert cyclic_subgroup(109, 45).elements == (1, 45, 63)
    assert cyclic_subgroup(145, 16).elements == H145
    assert cyclic_subgroup(247, 9).elements == H247
    assert cyclic_subgroup(31, 1).elements == (1,)


def test_cyclic_subgroup_rejects_non_unit():
    with pytest.raises(NotAUnit):
        cyclic_subgroup(145, 5)


def test_elements_of_order():
    cubes = [u for u in range(2, 109) if pow(u, 3, 109) == 1]
    assert cubes == [45, 63]
    assert elements_of_order(109, 3) == cubes
    assert elements_of_order(17, 1) == [1]
    order9 = elements_of_order(247, 9)
    assert 9 in order9
    assert all(pow(u, 9, 247) == 1 and all(pow(u, d, 247) != 1 for d in (1, 3)) for u in order9)


def test_orbit_counts():
    assert len(orbits_of(145, cyclic_subgroup(145, 16))) == 25
    assert len(orbits_of(247, cyclic_subgroup(247, 9))) == 31
    assert orbits_of(11, Subgroup(11, (1,))) == [(x,) for x in range(11)]


@pytest.mark.parametrize("n, gen, order", [(109, 45, "ascending"), (145, 16, "units-first"), (247, 9, "ascending")])
def test_indexing_invariants(n, gen, order):
    H = cyclic_subgroup(n, gen)
    idx = paper_indexing(n, H, order=order)
    seen = [x for o in idx.orbits for x in o]
    assert sorted(seen) == list(range(1, n))
    for o in idx.orbits:
        assert H.order % len(o) == 0
        assert all(x * h % n in o for x in o for h in H)
    for i in range(idx.pair_count):
        assert idx[2 * i + 1] == tuple(sorted(n - x for x in idx[2 * i]))


def test_orbit_sizes():
    sizes109 = paper_indexing(109, cyclic_subgroup(109, 45)).sizes
    assert set(sizes109) == {3} and len(sizes109) == 36
    idx145 = paper_indexing(145, cyclic_subgroup(145, 16), order="units-first")
    singles = sorted(o[0] for o in idx145.orbits if len(o) == 1)
    assert singles == [29, 58, 87, 116]
    assert all(len(o) == 7 for o in idx145.orbits if len(o) != 1)
    idx247 = paper_indexing(247, cyclic_subgroup(247, 9))
    assert sorted(len(o) for o in idx247.orbits).count(3) == 4
    assert all(len(o) in (3, 9) for o in idx247.orbits)


def test_indexing_109_representatives():
    idx = paper_indexing(109, Subgroup(109, H109))
    assert tuple(idx.representatives()) == REPRESENTATIVES_109
    assert idx[2] == (2, 17, 90)


def test_indexing_145_table_needs_units_first():
    H = Subgroup(145, H145)
    assert tuple(paper_indexing(145, H, order="units-first").orbits[0::2]) == ORBIT_TABLES[145]
    assert corrected_orbit_table(145) == ORBIT_TABLES[145]
    assert tuple(paper_indexing(145, H).orbits[0::2]) != ORBIT_TABLES[145]


def test_indexing_247_table():
    idx = paper_indexing(247, Subgroup(247, H247))
    assert tuple(idx.orbits[0::2]) == corrected_orbit_table(247)
    printed = [set(a) ^ set(b) for a, b in zip(idx.orbits[0::2], ORBIT_TABLES[247])]
    assert [d for d in printed if d] == [{223, 233}]
    assert idx[22] == (19, 57, 171)
    assert idx[23] == tuple(sorted(247 - x for x in (19, 57, 171)))


def test_explicit_representatives():
    H = Subgroup(145, H145)
    reps = [o[0] for o in ORBIT_TABLES[145]]
    assert paper_indexing(145, H, representatives=reps) == paper_indexing(145, H, order="units-first")


def test_self_negative_orbit_rejected():
    # -1 = 12 mod 13 has order 2, so H = <12> makes every orbit closed under negation
    with pytest.raises(SelfNegativeOrbit):
        paper_indexing(13, cyclic_subgroup(13, 12))
    with pytest.raises(SelfNegativeOrbit):
        paper_indexing(4, Subgroup(4, (1,)))


def test_printed_247_alpha2_is_not_an_orbit():
    H = Subgroup(247, H247)
    printed = set(ORBIT_TABLES[247][1])
    assert any(x * h % 247 not in printed for x in printed for h in H)
    assert 233 in paper_indexing(247, H)[19]
