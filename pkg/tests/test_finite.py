from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from locus.errors import InputError
from locus.finite import (
    FiniteRingTable,
    RingAxiomError,
    ass_bruteforce,
    crosscheck_gfpoly,
    cyclic,
    find_isomorphism,
    gfpoly,
    is_localizable,
    localizable_monoids,
    localize_finite,
    monoid_closure,
    product,
    survey,
)


def members(T, mask):
    return sorted(T.labels[i] for i in T.members(mask))


def test_build():
    assert cyclic(6).n == 6
    T = gfpoly(2, "x^2")
    assert T.n == 4 and T.labels == ["0", "1", "x", "x + 1"]


def test_bad_tables_rejected():
    add = [[0, 1], [1, 0]]
    with pytest.raises(RingAxiomError):
        FiniteRingTable(add, [[0, 0], [0, 0]])
    with pytest.raises(InputError):
        cyclic(10_000)


def test_monoid_closure():
    Z6, Z4 = cyclic(6), cyclic(4)
    assert members(Z6, monoid_closure(Z6, Z6.mask([2]))) == ["1", "2", "4"]
    assert members(Z4, monoid_closure(Z4, Z4.mask([3]))) == ["1", "3"]
    assert members(Z4, monoid_closure(Z4, Z4.mask([1]))) == ["1"]


def test_ass_and_localize_examples():
    Z6, Z4 = cyclic(6), cyclic(4)
    assert members(Z6, ass_bruteforce(Z6, Z6.mask([1, 3, 5]))) == ["0", "2", "4"]
    assert members(Z6, ass_bruteforce(Z6, Z6.mask([1, 2, 4, 5]))) == ["0", "3"]
    assert ass_bruteforce(Z4, Z4.mask([2])) == Z4.full
    assert localize_finite(Z6, Z6.mask([1, 3, 5])).order == 2
    L = localize_finite(Z6, Z6.mask([1, 2, 4, 5]))
    assert find_isomorphism(L.ring, cyclic(3)) is not None
    L = localize_finite(Z4, Z4.units())
    assert find_isomorphism(L.ring, Z4) is not None
    assert localize_finite(Z4, Z4.mask([2])).zero_ring


def _coprime_part(n, s):
    while (g := gcd(n, s)) > 1:
        n //= g
    return n


@given(st.integers(2, 40), st.integers(0, 60))
def test_cyclic_localization_matches_number_theory(n, s):
    # localizing Z/n at s keeps the largest divisor of n prime to s
    T = cyclic(n)
    S = T.mask([s % n])
    L = localize_finite(T, S)
    assert L.order == _coprime_part(n, s % n if s % n else n)
    assert is_localizable(T, S) == (L.order > 1)


@given(st.integers(2, 40))
def test_cyclic_units_and_nilpotents(n):
    T = cyclic(n)
    assert bin(T.units()).count("1") == sum(1 for a in range(n) if gcd(a, n) == 1)
    rad = 1
    for p in range(2, n + 1):
        if n % p == 0 and all(p % q for q in range(2, p)):
            rad *= p
    assert members(T, T.nilpotents()) == sorted(str(a) for a in range(0, n, rad))


def test_monoid_count_z6():
    Z6 = cyclic(6)
    assert len(localizable_monoids(Z6)) > 0
    rep = survey(Z6)
    assert rep.data["monoid_count"] == 7
    assert sorted(map(sorted, rep.data["maximal_sets"])) == [["1", "2", "4", "5"], ["1", "3", "5"]]


RINGS = {
    "Z/4": lambda: cyclic(4),
    "Z/6": lambda: cyclic(6),
    "Z/12": lambda: cyclic(12),
    "Z/30": lambda: cyclic(30),
    "F2[x]/(x^2)": lambda: gfpoly(2, "x^2"),
    "F2[x]/(x^2+x)": lambda: gfpoly(2, "x^2+x"),
    "F3[x]/(x^2)": lambda: gfpoly(3, "x^2"),
    "Z/2xZ/2": lambda: product([cyclic(2), cyclic(2)]),
    "F4": lambda: gfpoly(2, "x^2+x+1"),
    "Z/8": lambda: cyclic(8),
}


@pytest.mark.parametrize("name", sorted(RINGS))
def test_survey_passes(name):
    rep = survey(RINGS[name]())
    assert rep.passed, rep.failures()


def test_survey_cap():
    with pytest.raises(InputError):
        survey(cyclic(30), cap=16)


@pytest.mark.parametrize("p,f", [(2, "x^2"), (2, "x^2+x"), (3, "x^2-x"), (2, "x^3+x")])
def test_crosscheck(p, f):
    rep = crosscheck_gfpoly(p, f)
    assert rep.instances > 0 and rep.passed, rep.mismatches
