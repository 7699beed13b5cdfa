import pytest
from hypothesis import given
from hypothesis import strategies as st

from locus.errors import InputError, Refused, ZeroRingError
from locus.localization import (
    ElementClass,
    RingPresentation,
    ass_prime_complement,
    ass_set,
    chain_ideal,
    classify_element,
    hom_exists,
    in_largest_multset,
    is_localizable_set,
    kernel_of_sigma,
    localization_iso,
    localization_radical,
    localize_presentation,
    max_localizable_sets,
    q_a,
    q_c,
)


def ring(ideal=(), vars=("x", "y"), field="Q"):
    return RingPresentation(field, list(vars), list(ideal))


XY = ring(["x*y"])
X2 = ring(["x^2"], ["x"])
QX = ring([], ["x"])


def gens_of(J):
    return sorted(J.canonical())


def test_ass_examples():
    assert ass_set(XY, ["x"]) == XY.ideal_of(["y"])
    assert ass_set(X2, ["x"]).is_unit()
    R = ring(["x^2-x"], ["x"], {"Fp": 5})
    assert ass_set(R, ["x"]) == R.ideal_of(["x-1"])


def test_chain_examples():
    J, step = chain_ideal(XY, ["x"])
    assert J == XY.ideal_of(["y"]) and step == 0
    J, step = chain_ideal(ring(["x^3"], ["x"]), ["x"])
    assert J.is_unit() and step == 2
    J, step = chain_ideal(X2, ["x"])
    assert J.is_unit() and step == 1


def test_localize_examples():
    L = localize_presentation(QX, ["x"])
    assert not L.zero_ring and len(L.inverse_vars) == 1
    assert localize_presentation(X2, ["x"]).zero_ring
    L = localize_presentation(XY, ["x"])
    assert kernel_of_sigma(L) == XY.ideal_of(["y"])
    assert kernel_of_sigma(localize_presentation(QX, ["x"])).is_zero()
    assert kernel_of_sigma(localize_presentation(X2, ["x"])).is_unit()


def test_localizable():
    assert is_localizable_set(XY, ["x"])
    assert not is_localizable_set(X2, ["x"])
    assert is_localizable_set(QX, ["x", "x+1"])


def test_classify():
    assert classify_element(XY, "x").value is ElementClass.LOCALIZABLE
    assert classify_element(XY, "x+y").value is ElementClass.COMPLETELY_LOCALIZABLE
    assert classify_element(X2, "x").value is ElementClass.NON_LOCALIZABLE
    assert classify_element(XY, "1").value is ElementClass.UNIT


def test_max_sets():
    sets = max_localizable_sets(XY).value
    assert sorted(gens_of(s.prime_complement) for s in sets) == [["x"], ["y"]]
    assert [gens_of(s.prime_complement) for s in max_localizable_sets(X2).value] == [["x"]]
    assert max_localizable_sets(QX).value[0].prime_complement.is_zero()
    with pytest.raises(ZeroRingError):
        max_localizable_sets(ring(["1"]))


def test_prime_complement():
    t = ass_prime_complement(XY, ["x"])
    assert t.exact and t.value == XY.ideal_of(["x"])
    R = ring(["x^2*y"])
    assert ass_prime_complement(R, ["y"]).value == R.ideal_of(["y"])
    assert ass_prime_complement(R, ["x"]).value == R.ideal_of(["x^2"])
    with pytest.raises(InputError):
        ass_prime_complement(XY, ["x", "y"])


@pytest.mark.parametrize("ideal", [["x*y"], ["x^2*y"], ["x^2"]])
def test_radical_is_zero(ideal):
    R = ring(ideal, ["x", "y"] if "y" in ideal[0] else ["x"])
    rep = localization_radical(R).value
    assert R.is_zero_in_ring(rep.lrad)


def test_q_c_and_q_a():
    assert [gens_of(F.prime) for F in q_c(XY)] == [["x"], ["y"]]
    (F,) = q_c(QX)
    assert F.prime.is_zero() and F.is_field()
    (F,) = q_c(X2)
    assert not F.is_field()
    Q = q_a(QX)
    assert not Q.zero and Q.factor.is_field()
    Q = q_a(XY)
    assert Q.zero and len(Q.witnesses) == 2
    Q = q_a(X2)
    assert not Q.zero and gens_of(Q.factor.prime) == ["x"]


def test_q_a_refuses_unverified():
    with pytest.raises(Refused):
        q_a(ring(["x^2-2", "y^2-3"]))


def test_fractions():
    F = q_c(XY)[0]
    assert F.fraction("x").is_zero().value
    assert not F.fraction("y").is_zero().value
    a = F.fraction("y+1", "y")
    b = F.fraction("y", "y+1")
    assert (a * b).equals(F.fraction("1")).value
    with pytest.raises(InputError):
        F.fraction("1", "x")


def test_homs():
    assert localization_iso(QX, ["x"], ["x^2"])
    assert hom_exists(QX, ["x"], ["x", "x+1"])
    assert not hom_exists(QX, ["x", "x+1"], ["x"])
    assert not localization_iso(QX, ["x"], ["x", "x+1"])
    assert not localization_iso(XY, ["x"], ["x+y"])
    with pytest.raises(ZeroRingError):
        hom_exists(X2, ["x"], ["1"])


def test_largest_multset():
    assert in_largest_multset(QX, ["x^2"], "x")
    assert not in_largest_multset(QX, ["x"], "x+1")
    assert in_largest_multset(XY, ["x"], "x+y^2")


MONOMIALS = ["x", "y", "z", "x*y", "x^2", "y*z", "x*z^2", "x^2*y"]
GENS = ["x", "y", "z", "x+1", "y-1", "x+y", "x*z"]

instances = st.tuples(
    st.sampled_from(["Q", {"Fp": 2}, {"Fp": 3}, {"Fp": 7}]),
    st.lists(st.sampled_from(MONOMIALS + ["x^2-x", "x*y-z"]), min_size=1, max_size=3, unique=True),
    st.lists(st.sampled_from(GENS), min_size=1, max_size=3, unique=True),
)


@given(instances)
def test_three_ways_agree(inst):
    field, ideal, gens = inst
    R = ring(ideal, ["x", "y", "z"], field)
    a = ass_set(R, gens)
    assert chain_ideal(R, gens)[0] == a
    assert kernel_of_sigma(localize_presentation(R, gens)) == a


@given(instances, st.sampled_from(GENS))
def test_ass_monotone(inst, extra):
    field, ideal, gens = inst
    R = ring(ideal, ["x", "y", "z"], field)
    bigger = gens + [extra]
    assert ass_set(R, bigger).contains_ideal(ass_set(R, gens))
    if is_localizable_set(R, bigger):
        assert hom_exists(R, gens, bigger)
