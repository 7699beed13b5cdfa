"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""
import json
import random
import subprocess
import sys
import time

import pytest

from locus.finite import crosscheck_gfpoly, cyclic, gfpoly, product, survey
from locus.localization import (
    ElementClass,
    RingPresentation,
    ass_prime_complement,
    ass_set,
    chain_ideal,
    classify_element,
    kernel_of_sigma,
    localization_radical,
    localize_presentation,
    q_a,
)
from locus.modules import ModulePresentation, exactness_check, quotient_first_comparison, torsion_submodule
from locus.products import ProductRing, ass_and_localize, max_localizable_product, product_theory_suite
from locus.status import Status


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


def _triple_instances(count, seed=2024):
    rng = random.Random(seed)
    pool = ["x*y", "x^2", "y*z", "x*z^2", "x^2*y", "x^2-x", "x*y-z", "y^2-y*z", "x^3", "x*y*z", "z^2-1"]
    gen_pool = ["x", "y", "z", "x+1", "y-1", "x+y", "x*z", "z+2", "x-y"]
    fields = ["Q", {"Fp": 2}, {"Fp": 3}, {"Fp": 5}, {"Fp": 7}]
    out = []
    while len(out) < count:
        nv = rng.randint(1, 3)
        names = ["x", "y", "z"][:nv]
        ideal = [g for g in rng.sample(pool, rng.randint(1, 3)) if set(g) & set("xyz") <= set(names)]
        gens = [g for g in rng.sample(gen_pool, rng.randint(1, 3)) if set(g) & set("xyz") <= set(names)]
        if ideal and gens:
            out.append((fields[len(out) % len(fields)], names, ideal, gens))
    return out


def test_criterion_1_triple_agreement(report):
    t0 = time.perf_counter()
    instances = _triple_instances(30)
    bad = []
    for field, names, ideal, gens in instances:
        R = RingPresentation(field, names, ideal)
        a = ass_set(R, gens)
        c, _ = chain_ideal(R, gens)
        k = kernel_of_sigma(localize_presentation(R, gens))
        if not (a == c == k):
            bad.append((field, ideal, gens))
    dt = time.perf_counter() - t0
    fields = {json.dumps(f) for f, *_ in instances}
    report(1, not bad and dt < 60 and len(fields) > 1,
           f"{len(instances)} instances over {len(fields)} fields, {len(bad)} disagreements, {dt:.1f}s")


SURVEY_RINGS = {
    "Z/4": lambda: cyclic(4),
    "Z/6": lambda: cyclic(6),
    "Z/12": lambda: cyclic(12),
    "Z/30": lambda: cyclic(30),
    "GF(2)[x]/(x^2)": lambda: gfpoly(2, "x^2"),
    "GF(2)[x]/(x^2+x)": lambda: gfpoly(2, "x^2+x"),
    "GF(3)[x]/(x^2)": lambda: gfpoly(3, "x^2"),
    "Z/2 x Z/2": lambda: product([cyclic(2), cyclic(2)]),
}

REQUIRED_CLAUSES = {
    "maximal_sets_exist", "localizable_sets_lie_in_maximal_ones", "non_localizable_elements_are_nilpotent",
    "maximal_sets_are_minimal_prime_complements", "lrad_inside_nilradical", "c_inside_lrad",
    "completely_localizable_avoid_minimal_primes", "ass_is_least_admissible_ideal",
    "ideal_absolute_quotient_criterion", "localization_is_quotient_by_annihilated_ideal",
}


def test_criterion_2_finite_survey(report):
    lines = []
    ok = True
    for name, build in SURVEY_RINGS.items():
        t0 = time.perf_counter()
        rep = survey(build())
        dt = time.perf_counter() - t0
        missing = REQUIRED_CLAUSES - set(rep.clauses)
        good = rep.passed and not missing and dt < 10
        ok &= good
        lines.append(f"{name}: {len(rep.clauses)} clauses, {len(rep.failures())} failing, {dt:.2f}s")
    report(2, ok, "; ".join(lines))


def test_criterion_3_crosscheck(report):
    total, mism = 0, []
    for p, f in [(2, "x^2"), (2, "x^2+x"), (3, "x^2-x")]:
        rep = crosscheck_gfpoly(p, f)
        total += rep.instances
        mism += rep.mismatches
    report(3, not mism and total > 0, f"{total} generator sets compared, {len(mism)} mismatches")


def _completely_localizable_matches(R, samples):
    primes = R.minimal_primes().value
    for s in samples:
        t = classify_element(R, s)
        outside = all(R.element(s) not in P for P in primes)
        if t.status is not Status.EXACT:
            return False
        if (t.value in (ElementClass.COMPLETELY_LOCALIZABLE, ElementClass.UNIT)) != outside:
            return False
    return True


def test_criterion_4_radical_case(report):
    cases = [
        (["x", "y"], ["x*y"], ["x", "y", "x+y", "x+1", "x*y+1", "x^2+y", "1"]),
        (["x", "y", "z"], ["x*z", "y*z"], ["x", "z", "x+z", "y+z", "z+1", "x*y", "x+y+z"]),
        (["x"], ["x^2-x"], ["x", "x-1", "x+1", "2*x-1", "3"]),
    ]
    notes, ok = [], True
    for names, ideal, samples in cases:
        R = RingPresentation("Q", names, ideal)
        mp = R.minimal_primes()
        comps = [ass_prime_complement(R, P) for P in mp.value]
        ass_is_p = all(c.exact and c.value == P for c, P in zip(comps, mp.value))
        rad = localization_radical(R)
        lrad_zero = R.is_zero_in_ring(rad.value.lrad)
        c_zero = R.is_zero_in_ring(rad.value.c_r)
        cl = _completely_localizable_matches(R, samples)
        exact = mp.status is Status.EXACT and rad.status is Status.EXACT
        good = ass_is_p and lrad_zero and c_zero and cl and exact
        ok &= good
        notes.append(f"({', '.join(ideal)}): {'ok' if good else 'FAILED'}")
    report(4, ok, "; ".join(notes))


def test_criterion_5_absolute_quotient(report):
    Q = q_a(RingPresentation("Q", ["x"], []))
    field_handle = not Q.zero and Q.factor.prime.is_zero() and Q.factor.is_field()
    Q = q_a(RingPresentation("Q", ["x", "y"], ["x*y"]))
    split = Q.zero and len(Q.witnesses) == 2
    # presented products k[x] x k[x], F3 x F3, Q x Q x Q
    presented = [
        RingPresentation("Q", ["x", "e"], ["e^2-e"]),
        RingPresentation({"Fp": 3}, ["e"], ["e^2-e"]),
        RingPresentation("Q", ["e", "f"], ["e^2-e", "f^2-f", "e*f"]),
    ]
    rule = all(q_a(R).zero for R in presented)
    products = [
        ProductRing([{"field": 2}, {"field": 3}]),
        ProductRing([{"field": 2}, {"field": 3}, {"field": 5}]),
        ProductRing([{"matrix": [2, 2]}, {"field": 3}]),
        ProductRing([{"field": 4}, {"formal": "A"}]),
    ]
    rule_products = all(product_theory_suite(D).clauses["absolute_quotient_rule"] for D in products)
    report(5, field_handle and split and rule and rule_products,
           f"Q[x] field handle {field_handle}, Q[x,y]/(xy) zero with two witnesses {split}, "
           f"product rule on {len(presented)} presented and {len(products)} explicit products "
           f"{rule and rule_products}")


def test_criterion_6_products(report):
    t0 = time.perf_counter()
    D = ProductRing([{"field": 2}, {"field": 3}, {"field": 5}])
    rep = product_theory_suite(D)
    sizes = [S["size"] for S in rep.data["maximal_sets"]]
    checks = {
        "suite": rep.passed,
        "three maximal sets": len(sizes) == 3,
        # component i a unit, the rest arbitrary: (q_i - 1) * prod of the other orders
        "sizes by counting": sizes == [1 * 3 * 5, 2 * 2 * 5, 2 * 3 * 4],
        "CL size 8": rep.data["completely_localizable_size"] == 8,
        "roundtrip": rep.clauses["filter_roundtrip"],
        "localization is core restriction": rep.clauses["localization_is_restriction_to_core"],
        "Lrad 0": rep.clauses["lrad_is_zero_by_enumeration"],
    }
    A = ProductRing([{"matrix": [2, 2]}, {"field": 3}])
    maxA = max_localizable_product(A)
    locs = [ass_and_localize(A, list(S.elements())).ring.spec()["components"] for S in maxA]
    checks["M2(F2) x F3 sizes"] = [S.size() for S in maxA] == [18, 32]
    checks["M2(F2) x F3 localizations"] = locs == [[{"matrix": [2, 2]}], [{"field": 3}]]
    checks["M2(F2) x F3 suite"] = product_theory_suite(A).passed
    dt = time.perf_counter() - t0
    failed = [k for k, v in checks.items() if not v]
    report(6, not failed and dt < 30,
           f"F2xF3xF5 maximal sizes {sizes}, {rep.data['multiplicative_sets']} multiplicative sets; "
           f"failed {failed or 'none'}; {dt:.1f}s")


MODULE_RINGS = [
    ("Q", ["x*y"], ["x"]), ("Q", ["x^2*y"], ["x"]), ("Q", [], ["x"]), ("Q", ["x^2", "x*y"], ["y"]),
    ({"Fp": 3}, ["x*y"], ["y"]), ({"Fp": 2}, ["x^2-x"], ["x"]), ("Q", ["x*y", "y^2"], ["x+1"]),
    ({"Fp": 5}, ["x^2*y", "y^3"], ["x", "y+1"]), ("Q", ["y^2"], ["x*y"]), ({"Fp": 7}, ["x^3"], ["y"]),
]
MODULES = [
    (1, []), (2, [["x", "0"]]), (2, [["y", "x"]]), (2, [["x*y", "0"], ["0", "y"]]), (1, [["y"]]),
    (2, [["x^2", "y"]]), (2, []), (1, [["x"]]), (2, [["x", "y"]]), (1, [["x*y"]]),
]


def test_criterion_7_modules(report):
    torsion_ok = 0
    for field, ideal, gens in MODULE_RINGS:
        R = RingPresentation(field, ["x", "y"], ideal)
        M = ModulePresentation(R, 1)
        a = ass_set(R, gens)
        t = torsion_submodule(M, gens)
        same = t.zero_ring if a.is_unit() else t.submodule == M.submodule([[g] for g in a.gens])
        torsion_ok += bool(same)

    worked = [
        (RingPresentation("Q", ["x", "y"], ["x*y"]), [["y"]]),
        (RingPresentation("Q", ["x"], []), [["x^2"]]),
        (RingPresentation("Q", ["x", "y"], ["x^2*y"]), [["y"]]),
    ]
    pairs = [exactness_check(ModulePresentation(R, 1), m1, [["1"]], ["x"]).as_pair() for R, m1 in worked]
    for (field, ideal, gens), (rank, rels) in zip(MODULE_RINGS, MODULES):
        R = RingPresentation(field, ["x", "y"], ideal)
        M = ModulePresentation(R, rank, rels)
        basis = [[("1" if i == k else "0") for i in range(rank)] for k in range(rank)]
        m1 = [[("x" if i == 0 else "y") for i in range(rank)]]
        pairs.append(exactness_check(M, m1, basis, gens).as_pair())
    exact_ok = all(p == (True, True) for p in pairs)

    compare_ok = 0
    for (field, ideal, gens), (rank, rels) in zip(MODULE_RINGS, MODULES):
        M = ModulePresentation(RingPresentation(field, ["x", "y"], ideal), rank, rels)
        compare_ok += quotient_first_comparison(M, gens)
    n = len(MODULE_RINGS)
    report(7, torsion_ok == n and exact_ok and compare_ok == n,
           f"torsion = ass on {torsion_ok}/{n}, exactness (true, true) on {len(pairs)} instances: {exact_ok}, "
           f"quotient-first comparison on {compare_ok}/{n}")


XY = {"field": "Q", "vars": ["x", "y"], "ideal": ["x*y"]}
CORPUS = [
    ("ring ass", {"ring": XY, "set": {"gens": ["x"]}}),
    ("ring ass", {"ring": XY, "set": {"prime_complement": ["y"]}}),
    ("ring chain", {"ring": {"vars": ["x"], "ideal": ["x^3"]}, "set": {"gens": ["x"]}}),
    ("ring localize", {"ring": XY, "set": {"gens": ["x"]}}),
    ("ring kernel", {"ring": XY, "set": {"gens": ["x"]}}),
    ("ring classify", {"ring": XY, "element": "x+y"}),
    ("ring maxsets", {"ring": {"vars": ["x", "y", "z"], "ideal": ["x*z", "y*z"]}}),
    ("ring lrad", {"ring": {"vars": ["x", "y"], "ideal": ["x^2*y"]}}),
    ("ring qc", {"ring": XY}),
    ("ring qa", {"ring": XY}),
    ("ring iso", {"ring": {"vars": ["x"]}, "S": {"gens": ["x"]}, "T": {"gens": ["x^2"]}}),
    ("ring hom", {"ring": {"vars": ["x"]}, "S": {"gens": ["x"]}, "T": {"gens": ["x", "x+1"]}}),
    ("ring satmember", {"ring": XY, "set": {"gens": ["x"]}, "element": "x+y^2"}),
    ("finite build", {"ring": {"gfpoly": {"p": 2, "f": "x^2"}}}),
    ("finite survey", {"ring": {"product": [{"cyclic": 2}, {"cyclic": 3}]}}),
    ("finite crosscheck", {"p": 2, "f": "x^2+x"}),
    ("product sat", {"product": {"components": [{"field": 2}, {"field": 3}]}, "elements": [[1, 0]]}),
    ("product filters", {"index": [1, 2, 3]}),
    ("product localize", {"product": {"components": [{"matrix": [2, 2]}, {"field": 3}]},
                          "elements": [[[[1, 0], [0, 1]], 0]]}),
    ("product maxsets", {"product": {"components": [{"field": 2}, {"field": 3}, {"field": 5}]}}),
    ("product suite", {"product": {"components": [{"field": 2}, {"field": 3}, {"field": 5}]}}),
    ("module torsion", {"ring": {"vars": ["x"]}, "module": {"rank": 2, "relations": [["x", "0"]]},
                        "set": {"gens": ["x"]}}),
    ("module localize", {"ring": XY, "module": {"rank": 1, "relations": [["y"]]}, "set": {"gens": ["x"]}}),
    ("module exactness", {"ring": {"vars": ["x", "y"], "ideal": ["x^2*y"]}, "module": {"rank": 1},
                          "set": {"gens": ["x"]}, "m1": [["y"]], "m2": [["1"]]}),
]


def _cli(doc, *flags):
    proc = subprocess.run([sys.executable, "-m", "locus.cli", "run", *flags], input=json.dumps(doc).encode(),
                          capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_criterion_8_determinism(report):
    batch = {"kind": "batch", "tasks": [{"kind": "task", "op": op, "args": a} for op, a in CORPUS]}
    c1, out1 = _cli(batch)
    c2, out2 = _cli(batch)
    c4, out4 = _cli(batch, "--workers", "4")
    singles = [_cli({"kind": "task", "op": op, "args": a})[1] for op, a in CORPUS[:6]]
    singles_again = [_cli({"kind": "task", "op": op, "args": a}, "--workers", "3")[1] for op, a in CORPUS[:6]]
    results = json.loads(out1)["results"]
    errors = [r["op"] for r in results if "error" in r]
    ok = c1 == c2 == c4 == 0 and out1 == out2 == out4 and singles == singles_again and not errors
    report(8, ok, f"{len(CORPUS)} tasks covering {len({op for op, _ in CORPUS})} operations; "
                  f"two runs identical {out1 == out2}; 1 vs 4 workers identical {out1 == out4}; "
                  f"errors {errors or 'none'}")
