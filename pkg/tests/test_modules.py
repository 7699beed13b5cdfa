import pytest
from hypothesis import given
from hypothesis import strategies as st

from locus.errors import InputError
from locus.localization import RingPresentation, ass_set
from locus.modules import (
    ModulePresentation,
    exact_sequence_check,
    exactness_check,
    localize_module,
    module_quotient,
    quotient_first_comparison,
    submodule_member,
    torsion_submodule,
)


def ring(ideal=(), vars=("x", "y"), field="Q"):
    return RingPresentation(field, list(vars), list(ideal))


QX = ring([], ["x"])
QXY = ring([])
XY = ring(["x*y"])


def test_membership():
    F1 = ModulePresentation(QX, 1)
    assert submodule_member(["x"], F1.submodule([["1"]]))
    assert not submodule_member(["1"], F1.submodule([["x"]]))
    F = ModulePresentation(QXY, 1)
    assert not submodule_member(["y"], F.submodule([["x"]]))
    with pytest.raises(InputError):
        submodule_member(["1", "0"], F1.submodule([["1"]]))


def test_quotients():
    F1 = ModulePresentation(QX, 1)
    assert module_quotient(F1.submodule([["x"]]), "x") == F1.whole()
    assert module_quotient(F1.submodule([["x^2"]]), "x") == F1.submodule([["x"]])
    assert module_quotient(F1.zero(), "x").is_zero()
    with pytest.raises(InputError):
        module_quotient(F1.zero(), "0")


def test_torsion_examples():
    M = ModulePresentation.cyclic(QX, ["x"])
    assert torsion_submodule(M, ["x"]).submodule.is_whole()
    M = ModulePresentation(QX, 2, [["x", "0"]])
    t = torsion_submodule(M, ["x"]).submodule
    assert t == M.submodule([["1", "0"]])
    M = ModulePresentation(XY, 1)
    assert torsion_submodule(M, ["x"]).submodule == M.submodule([["y"]])
    t = torsion_submodule(ModulePresentation.cyclic(ring(["x^2"], ["x"]), []), ["x"])
    assert t.zero_ring and t.submodule.is_whole()


def test_localize_examples():
    assert localize_module(ModulePresentation.cyclic(QX, ["x"]), ["x"]).zero
    loc = localize_module(ModulePresentation(QX, 1), ["x"])
    assert not loc.zero and loc.module.rank == 1
    loc = localize_module(ModulePresentation.cyclic(XY, ["y"]), ["x"])
    assert not loc.zero
    assert all(loc.module.is_zero_vector(r) for r in loc.module.relations)


def test_exactness_examples():
    M = ModulePresentation(XY, 1)
    assert exactness_check(M, [["y"]], [["1"]], ["x"]).as_pair() == (True, True)
    M = ModulePresentation(QX, 1)
    assert exactness_check(M, [["x^2"]], [["x"]], ["x"]).as_pair() == (True, True)
    R = ring(["x^2*y"])
    M = ModulePresentation(R, 1)
    assert exactness_check(M, [["y"]], [["1"]], ["x"]).as_pair() == (True, True)
    with pytest.raises(InputError):
        exactness_check(M, [["1"]], [["y"]], ["x"])


IDEALS = [["x*y"], ["x^2*y"], ["x^2", "x*y"], ["x*y", "y^2"], [], ["x^2-x"], ["y^2"]]
RELS = [[], [["x", "0"]], [["y", "x"]], [["x*y", "0"], ["0", "y"]], [["x^2", "y"]]]
GENS = [["x"], ["y"], ["x+1"], ["x", "y+1"], ["x*y"]]

module_instances = st.tuples(
    st.sampled_from(["Q", {"Fp": 3}]),
    st.sampled_from(IDEALS),
    st.sampled_from(RELS),
    st.sampled_from(GENS),
)


def _module(field, ideal, rels):
    R = ring(ideal, field=field)
    return ModulePresentation(R, 2, rels) if rels else ModulePresentation(R, 1)


@given(st.sampled_from(["Q", {"Fp": 2}, {"Fp": 5}]), st.sampled_from(IDEALS), st.sampled_from(GENS))
def test_torsion_of_ring_is_ass(field, ideal, gens):
    R = ring(ideal, field=field)
    a = ass_set(R, gens)
    M = ModulePresentation(R, 1)
    t = torsion_submodule(M, gens)
    if a.is_unit():
        assert t.zero_ring
    else:
        assert t.submodule == M.submodule([[g] for g in a.gens])


@given(module_instances)
def test_sequence_and_quotient_first(inst):
    field, ideal, rels, gens = inst
    M = _module(field, ideal, rels)
    assert exact_sequence_check(M, gens)
    assert quotient_first_comparison(M, gens)
    t = torsion_submodule(M, gens).submodule
    assert localize_module(M, gens).zero == t.is_whole()


@given(module_instances, st.sampled_from([[["x"]], [["y"]], [["x", "y"]], [["x*y"], ["y^2"]]]))
def test_localization_is_exact(inst, sub):
    field, ideal, rels, gens = inst
    M = _module(field, ideal, rels)
    if M.rank == 2:
        m1 = [v + ["0"] if len(v) == 1 else v for v in sub]
        m2 = [["1", "0"], ["0", "1"]]
    else:
        m1 = [v[:1] for v in sub]
        m2 = [["1"]]
    assert exactness_check(M, m1, m2, gens).as_pair() == (True, True)
