import pytest
from hypothesis import given
from hypothesis import strategies as st

from locus.errors import Cancelled, InputError, ZeroRingError
from locus.kernel import (
    GF,
    GREVLEX,
    LEX,
    QQ,
    CancelToken,
    Ideal,
    PolyRing,
    cancellable,
    colon,
    eliminate,
    intersect,
    minimal_primes,
    nilpotency_index,
    radical_member,
    reduce,
    saturate,
    saturate_by_colon,
    unit_in_quotient,
)
from locus.status import Status

from conftest import our_basis_as_sympy, polynomials, sympy_reduced_basis

P = PolyRing(QQ, ["x", "y"])
P3 = PolyRing(QQ, ["x", "y", "z"])


def I(*gens, ring=P):
    return Ideal(ring, list(gens))


def test_reduce_examples():
    assert reduce("x*y", I("x*y")) == P.zero
    assert reduce("x^2", I("x*y")) == P("x^2")
    assert reduce("y*(x*y-1)+y", I("x*y-1"), LEX) == P("y")


def test_reduce_signature_mismatch():
    with pytest.raises(InputError):
        reduce(P3("x"), I("x"))


def test_colon_examples():
    assert colon(I("x*y"), "x") == I("y")
    assert colon(I("x^2"), "x") == I("x")
    assert colon(I("x"), "y") == I("x")
    with pytest.raises(InputError):
        colon(I("x"), "0")


def test_saturate_examples():
    assert saturate(I("x*y"), "x") == I("y")
    assert saturate(I("x^2", "x*y"), "x").is_unit()
    assert saturate(I("x^2*y^3"), "x*y").is_unit()


def test_eliminate_examples():
    assert eliminate(I("x*y-1"), ["y"]).is_zero()
    R = PolyRing(QQ, ["t", "x", "y"])
    E = eliminate(Ideal(R, ["x-t", "y-t^2"]), ["t"])
    assert E == Ideal(E.ring, ["y-x^2"])
    R = PolyRing(QQ, ["x", "y", "u"])
    E = eliminate(Ideal(R, ["x*y", "x*u-1"]), ["u"])
    assert E == Ideal(E.ring, ["y"])


def test_membership_and_units():
    assert radical_member("x", I("x^2"))
    assert not radical_member("x", I("x*y"))
    assert radical_member("x+y", I("x^2", "y^2"))
    assert unit_in_quotient("x", I("x*y-1"))
    assert not unit_in_quotient("x", I("x^2"))
    assert unit_in_quotient("1+x", I("x^2"))


def test_intersect_examples():
    assert intersect(I("x"), I("y")) == I("x*y")
    assert intersect(I("x^2"), I("y")) == I("x^2*y")
    assert intersect(I("x*y", "x^2"), Ideal.unit(P)) == I("x*y", "x^2")


def test_minimal_primes_examples():
    mp = minimal_primes(I("x*y"))
    assert mp.status is Status.EXACT
    assert sorted(p.canonical() for p in mp.value) == [["x"], ["y"]]
    assert [p.canonical() for p in minimal_primes(I("x^2", "x*y")).value] == [["x"]]
    mp = minimal_primes(I("x^2*y", "x*z", ring=P3))
    assert {frozenset(p.canonical()) for p in mp.value} == {frozenset({"x"}), frozenset({"y", "z"})}
    with pytest.raises(ZeroRingError):
        minimal_primes(Ideal.unit(P))


def test_minimal_primes_split_nonmonomial():
    mp = minimal_primes(I("x^2-y^2"))
    assert mp.status is Status.EXACT
    assert {tuple(p.canonical()) for p in mp.value} == {("x + y",), ("x - y",)}
    # two algebraic extensions at once are outside the recognised class
    assert minimal_primes(I("x^2-2", "y^2-3")).status is Status.UNVERIFIED


def test_nilpotency_index_examples():
    assert nilpotency_index(I("x^2"), 64) == 2
    assert nilpotency_index(I("x*y"), 64) == 1
    assert nilpotency_index(I("x^3", "y^3"), 64) == 5


def test_cancellation():
    tok = CancelToken()
    tok.cancel()
    with pytest.raises(Cancelled):
        with cancellable(tok):
            Ideal(P3, ["x^3*y-z^2", "y^3*z-x^2", "z^3*x-y^2"]).groebner(LEX)


ring_and_gens = st.sampled_from([QQ, GF(2), GF(3), GF(5)]).flatmap(
    lambda K: st.tuples(st.just(PolyRing(K, ["x", "y", "z"])), st.integers(1, 3))
).flatmap(lambda rn: st.tuples(st.just(rn[0]), st.lists(polynomials(rn[0]), min_size=1, max_size=rn[1])))


@given(ring_and_gens)
def test_groebner_matches_sympy(data):
    ring, gens = data
    J = Ideal(ring, gens)
    for order, name in ((GREVLEX, "grevlex"), (LEX, "lex")):
        assert our_basis_as_sympy(ring, J.groebner(order)) == sympy_reduced_basis(ring, gens, name)


@given(ring_and_gens, st.sampled_from(["x", "y", "x*y", "x+z"]))
def test_saturation_methods_agree(data, f):
    ring, gens = data
    J = Ideal(ring, gens)
    sat = saturate(J, f)
    by_colon, _ = saturate_by_colon(J, f)
    assert sat == by_colon
    assert sat.contains_ideal(J)
    for g in colon(J, f).gens:
        assert ring(f) * g in J


two_ideals = st.sampled_from([QQ, GF(3)]).map(lambda K: PolyRing(K, ["x", "y", "z"])).flatmap(
    lambda R: st.tuples(st.just(R), st.lists(polynomials(R), min_size=1, max_size=2),
                        st.lists(polynomials(R), min_size=1, max_size=2))
)


@given(two_ideals)
def test_intersection_bounds(data):
    ring, g1, g2 = data
    A, B = Ideal(ring, g1), Ideal(ring, g2)
    C = intersect(A, B)
    assert A.contains_ideal(C) and B.contains_ideal(C)
    assert C.contains_ideal(A * B)
