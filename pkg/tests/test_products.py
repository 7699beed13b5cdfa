from itertools import combinations
from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from locus.errors import InputError, Refused
from locus.products import (
    ProductRing,
    ass_and_localize,
    enumerate_filters,
    enumerate_ultrafilters,
    filter_generated,
    first_irreducible,
    is_filter,
    is_ultrafilter,
    max_localizable_product,
    principal_witness,
    product_theory_suite,
    roundtrip,
    saturate_multset,
    saturation_set,
)

F2F3 = ProductRing([{"field": 2}, {"field": 3}])
F235 = ProductRing([{"field": 2}, {"field": 3}, {"field": 5}])
M2F3 = ProductRing([{"matrix": [2, 2]}, {"field": 3}])


def fs(*xs):
    return frozenset(xs)


def test_supports():
    assert F2F3.supp(F2F3.element([1, 0])) == fs(1)
    d = F235.element([1, 1, 0])
    e = F235.element([0, 1, 1])
    assert F235.supp(F235.mul(d, e)) == fs(2)


def test_saturation_examples():
    S = saturate_multset(F2F3, [[1, 2]])
    assert S.filter == fs(fs(1, 2)) and S.size() == 2
    S = saturate_multset(F2F3, [[1, 0]])
    assert S.filter == fs(fs(1), fs(1, 2)) and S.size() == 3
    assert S.elements() == {d for d in F2F3.elements() if d[0] == 1}
    S = saturate_multset(F2F3, [[1, 1]])
    assert S.size() == F2F3.unit_count()
    with pytest.raises(InputError):
        saturate_multset(F2F3, [[0, 0]])
    with pytest.raises(InputError):
        saturate_multset(F2F3, [[1, 0], [0, 1]])


def test_saturation_contains_closure():
    S = [F235.element([1, 2, 0]), F235.element([1, 0, 3])]
    sat = saturate_multset(F235, S)
    assert F235.monoid_closure(S) <= sat.elements()
    assert sat.elements() == saturation_set(F235, F235.monoid_closure(S))


def test_filter_checks():
    I = [1, 2, 3]
    assert not is_filter(I, [fs(), fs(1)])
    assert is_filter(I, [])
    F = filter_generated(I, [fs(1, 2)])
    assert is_filter(I, F) and not is_ultrafilter(I, F)
    assert principal_witness(I, filter_generated(I, [fs(2)])) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_filter_counts(n):
    I = list(range(1, n + 1))
    assert len(enumerate_filters(I)) == 2**n
    ultras = enumerate_ultrafilters(I)
    assert sorted(principal_witness(I, U) for U in ultras) == I


def test_ultrafilters_found_by_brute_force():
    # every maximal proper upward-closed, meet-closed family on {1,2,3}
    I = [1, 2, 3]
    subsets = [frozenset(c) for k in range(4) for c in combinations(I, k)]
    fams = []
    for k in range(1 << len(subsets)):
        F = frozenset(s for j, s in enumerate(subsets) if k >> j & 1)
        if F and is_filter(I, F):
            fams.append(F)
    maximal = [F for F in fams if not any(F < G for G in fams)]
    assert sorted(maximal, key=sorted) == sorted(enumerate_ultrafilters(I), key=sorted)


def test_localize_examples():
    S = max_localizable_product(F235)[0]
    L = ass_and_localize(F235, list(S.elements()))
    assert L.core == fs(1) and L.ring.spec()["components"] == [{"field": 2}]
    assert L.ass.describe() == [0, {"field": 3}, {"field": 5}]
    GL = [d for d in M2F3.elements() if M2F3.usupp(d) == fs(1, 2)]
    L = ass_and_localize(M2F3, GL[:5])
    assert L.core == fs(1, 2)
    S1 = max_localizable_product(M2F3)[0]
    L = ass_and_localize(M2F3, [d for d in S1.elements() if d[1] == 0][:3])
    assert L.ring.spec()["components"] == [{"matrix": [2, 2]}]
    L = ass_and_localize(F235, [F235.one])
    assert L.ass.is_zero() and L.ring.size == 3
    assert ass_and_localize(F2F3, [[1, 0], [0, 1]]).zero_ring


def _max_set_sizes(orders_units):
    total = prod(o for o, _ in orders_units)
    return [total // o * u for o, u in orders_units]


@pytest.mark.parametrize("D", [F2F3, F235, M2F3, ProductRing([{"field": 4}, {"field": 9}])])
def test_max_set_sizes(D):
    sizes = [S.size() for S in max_localizable_product(D)]
    assert sizes == _max_set_sizes([(c.order(), c.unit_count()) for c in D.components])
    for S in max_localizable_product(D):
        assert len(S.elements()) == S.size()


def test_specific_sizes():
    assert [S.size() for S in max_localizable_product(F235)] == [15, 20, 24]
    assert [S.size() for S in max_localizable_product(M2F3)] == [18, 32]
    (S,) = max_localizable_product(ProductRing([{"field": 7}]))
    assert S.size() == 6


def test_field_tables():
    assert first_irreducible(2, 2) == [1, 1, 1]
    D = ProductRing([{"field": 4}])
    c = D.components[0]
    units = [a for a in c.elements() if c.is_unit(a)]
    assert len(units) == 3
    assert all(any(c.mul(a, b) == c.one for b in units) for a in units)


def test_formal_components():
    D = ProductRing([{"field": 2}, {"formal": "A"}])
    assert not D.enumerable
    S = saturate_multset(D, [[1, True]])
    assert S.size() is None
    assert [1, False] not in S
    with pytest.raises(Refused):
        D.elements()
    rep = product_theory_suite(D)
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("D", [F2F3, F235, M2F3])
def test_roundtrip(D):
    rep = roundtrip(D)
    assert rep.passed


def test_suite_products():
    for D in (F2F3, F235, M2F3, ProductRing([{"field": 4}, {"field": 2}])):
        rep = product_theory_suite(D)
        assert rep.passed, rep.failures()
    rep = product_theory_suite(F235)
    assert [S["size"] for S in rep.data["maximal_sets"]] == [15, 20, 24]
    assert rep.data["completely_localizable_size"] == 8


@given(st.lists(st.sampled_from([2, 3, 4, 5]), min_size=1, max_size=3), st.data())
def test_localization_is_core_restriction(qs, data):
    D = ProductRing([{"field": q} for q in qs])
    elems = list(D.elements())
    S = data.draw(st.lists(st.sampled_from(elems), min_size=1, max_size=3))
    core = frozenset(D.index)
    for s in S:
        core &= D.usupp(s)
    L = ass_and_localize(D, S)
    assert L.core == core
    assert L.zero_ring == (not core)
