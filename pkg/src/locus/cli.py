"""Command-line front end: JSON documents in, JSON results out.

    locus ring ass --file doc.json
    echo '{"kind": "batch", "tasks": [...]}' | locus run --workers 4

Exit codes: 0 ok, 2 bad input, 3 refused or (with --strict) not exact,
4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass

import jsonschema

from . import __version__
from .errors import InputError, InvariantViolation, LocusError, Refused
from .finite import crosscheck, survey
from .finite import table as ft
from .kernel.poly import GREVLEX, LEX, Polynomial
from .localization import (
    MultiplicativeSetSpec,
    RingPresentation,
    _ordered_map,
    ass_prime_complement,
    ass_set,
    chain_ideal,
    classify_element,
    hom_exists,
    in_largest_multset,
    kernel_of_sigma,
    localization_iso,
    localization_radical,
    localize_presentation,
    max_localizable_sets,
    q_a,
    q_c,
)
from .modules import ModulePresentation, exactness_check, localize_module, torsion_submodule
from .products import (
    ProductRing,
    ass_and_localize,
    enumerate_filters,
    enumerate_ultrafilters,
    format_family,
    is_filter,
    is_ultrafilter,
    max_localizable_product,
    principal_witness,
    product_theory_suite,
    saturate_multset,
)
from .status import Status

EXIT_OK, EXIT_INPUT, EXIT_STATUS, EXIT_INVARIANT = 0, 2, 3, 4

# -- schemas ---------------------------------------------------------------------

POLY = {"type": ["string", "integer"]}
POLYS = {"type": "array", "items": POLY}
FIELD = {"oneOf": [{"enum": ["Q", "QQ"]}, {
    "type": "object", "properties": {"Fp": {"type": "integer", "minimum": 2}},
    "required": ["Fp"], "additionalProperties": False,
}]}
RING = {
    "type": "object",
    "properties": {"field": FIELD, "vars": {"type": "array", "items": {"type": "string"}}, "ideal": POLYS},
    "required": ["vars"],
    "additionalProperties": False,
}
MULTSET = {"oneOf": [
    {"type": "object", "properties": {"gens": {**POLYS, "minItems": 1}}, "required": ["gens"], "additionalProperties": False},
    {"type": "object", "properties": {"prime_complement": {**POLYS, "minItems": 1}},
     "required": ["prime_complement"], "additionalProperties": False},
]}
GENS = {"type": "object", "properties": {"gens": {**POLYS, "minItems": 1}}, "required": ["gens"], "additionalProperties": False}
FINITE = {"$ref": "#/$defs/finite"}
FINITE_DEF = {"oneOf": [
    {"type": "object", "properties": {"cyclic": {"type": "integer", "minimum": 1}}, "required": ["cyclic"],
     "additionalProperties": False},
    {"type": "object", "properties": {"gfpoly": {
        "type": "object",
        "properties": {"p": {"type": "integer", "minimum": 2}, "f": {"type": "string"}, "var": {"type": "string"}},
        "required": ["p", "f"], "additionalProperties": False}},
     "required": ["gfpoly"], "additionalProperties": False},
    {"type": "object", "properties": {"product": {"type": "array", "items": {"$ref": "#/$defs/finite"}, "minItems": 1}},
     "required": ["product"], "additionalProperties": False},
    {"type": "object", "properties": {"tables": {
        "type": "object",
        "properties": {
            "add": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
            "mul": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
            "zero": {"type": "integer"}, "one": {"type": "integer"},
            "labels": {"type": "array", "items": {"type": "string"}},
        },
        "required": ["add", "mul"], "additionalProperties": False}},
     "required": ["tables"], "additionalProperties": False},
]}
INDEX = {"type": "array", "items": {"type": ["integer", "string"]}, "minItems": 1}
COMPONENT = {"oneOf": [
    {"type": "object", "properties": {"field": {"type": "integer", "minimum": 2}}, "required": ["field"], "additionalProperties": False},
    {"type": "object", "properties": {"matrix": {"type": "array", "items": {"type": "integer", "minimum": 1},
                                                 "minItems": 2, "maxItems": 2}},
     "required": ["matrix"], "additionalProperties": False},
    {"type": "object", "properties": {"formal": {"type": "string", "minLength": 1}}, "required": ["formal"],
     "additionalProperties": False},
]}
PRODUCT = {
    "type": "object",
    "properties": {"components": {"type": "array", "items": COMPONENT, "minItems": 1}, "index": INDEX},
    "required": ["components"],
    "additionalProperties": False,
}
ELEMENTS = {"type": "array", "items": {"type": "array"}, "minItems": 1}
MODULE = {
    "type": "object",
    "properties": {"rank": {"type": "integer", "minimum": 1}, "relations": {"type": "array", "items": POLYS}},
    "required": ["rank"],
    "additionalProperties": False,
}
VECTORS = {"type": "array", "items": POLYS}


def _args_schema(props, required):
    return {
        "type": "object",
        "properties": props,
        "required": required,
        "additionalProperties": False,
        "$defs": {"finite": FINITE_DEF},
    }


SCHEMAS = {
    "ring ass": _args_schema({"ring": RING, "set": MULTSET}, ["ring", "set"]),
    "ring chain": _args_schema({"ring": RING, "set": GENS}, ["ring", "set"]),
    "ring localize": _args_schema({"ring": RING, "set": GENS}, ["ring", "set"]),
    "ring kernel": _args_schema({"ring": RING, "set": GENS}, ["ring", "set"]),
    "ring classify": _args_schema({"ring": RING, "element": POLY}, ["ring", "element"]),
    "ring maxsets": _args_schema({"ring": RING}, ["ring"]),
    "ring lrad": _args_schema({"ring": RING}, ["ring"]),
    "ring qc": _args_schema({"ring": RING, "bound": {"type": "integer", "minimum": 1}}, ["ring"]),
    "ring qa": _args_schema({"ring": RING}, ["ring"]),
    "ring iso": _args_schema({"ring": RING, "S": GENS, "T": GENS}, ["ring", "S", "T"]),
    "ring hom": _args_schema({"ring": RING, "S": GENS, "T": GENS}, ["ring", "S", "T"]),
    "ring satmember": _args_schema({"ring": RING, "set": GENS, "element": POLY}, ["ring", "set", "element"]),
    "finite build": _args_schema({"ring": FINITE}, ["ring"]),
    "finite survey": _args_schema({"ring": FINITE}, ["ring"]),
    "finite crosscheck": _args_schema({
        "p": {"type": "integer", "minimum": 2}, "f": {"type": "string"}, "var": {"type": "string"},
        "max_size": {"type": "integer", "minimum": 1, "maximum": 3},
    }, ["p", "f"]),
    "product sat": _args_schema({"product": PRODUCT, "elements": ELEMENTS}, ["product", "elements"]),
    "product filters": _args_schema({"index": INDEX, "family": {"type": "array", "items": {"type": "array"}}}, ["index"]),
    "product localize": _args_schema({"product": PRODUCT, "elements": ELEMENTS}, ["product", "elements"]),
    "product maxsets": _args_schema({"product": PRODUCT}, ["product"]),
    "product suite": _args_schema({"product": PRODUCT}, ["product"]),
    "module torsion": _args_schema({"ring": RING, "module": MODULE, "set": GENS}, ["ring", "module", "set"]),
    "module localize": _args_schema({"ring": RING, "module": MODULE, "set": GENS}, ["ring", "module", "set"]),
    "module exactness": _args_schema({"ring": RING, "module": MODULE, "set": GENS, "m1": VECTORS, "m2": VECTORS},
                                     ["ring", "module", "set", "m1", "m2"]),
}

TASK = {
    "type": "object",
    "properties": {"kind": {"const": "task"}, "op": {"enum": sorted(SCHEMAS)}, "args": {"type": "object"}},
    "required": ["kind", "op", "args"],
    "additionalProperties": False,
}
BATCH = {
    "type": "object",
    "properties": {"kind": {"const": "batch"}, "tasks": {"type": "array", "items": TASK}},
    "required": ["kind", "tasks"],
    "additionalProperties": False,
}


def _validate(doc, schema, where):
    try:
        jsonschema.Draft202012Validator(schema).validate(doc)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise InputError(f"{where}: {exc.message}" + (f" at {path}" if path else "")) from None


def _normal_ring(r):
    return {"field": r.get("field", "Q"), "vars": list(r["vars"]), "ideal": list(r.get("ideal", []))}


def parse_task(op: str, args) -> dict:
    """Validate and fill defaults; idempotent, so parse(print(doc)) == doc."""
    if op not in SCHEMAS:
        raise InputError(f"unknown operation {op!r}")
    _validate(args, SCHEMAS[op], op)
    out = json.loads(json.dumps(args))
    if op.split()[0] in ("ring", "module"):
        out["ring"] = _normal_ring(out["ring"])
    if "module" in out:
        out["module"] = {"rank": out["module"]["rank"], "relations": out["module"].get("relations", [])}
    if "product" in out:
        out["product"].setdefault("index", list(range(1, len(out["product"]["components"]) + 1)))
    return out


def parse_document(doc) -> dict:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise InputError("document must be an object with a 'kind'")
    if doc["kind"] == "task":
        _validate(doc, TASK, "task")
        return {"kind": "task", "op": doc["op"], "args": parse_task(doc["op"], doc["args"])}
    if doc["kind"] == "batch":
        _validate(doc, BATCH, "batch")
        return {"kind": "batch", "tasks": [parse_document(t) for t in doc["tasks"]]}
    raise InputError(f"unknown document kind {doc['kind']!r}")


def print_document(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- builders ---------------------------------------------------------------------


@dataclass
class Context:
    order: object = GREVLEX
    cap: int = ft.DEFAULT_CAP
    workers: int = 1
    seed: int = 0


def build_ring(r) -> RingPresentation:
    r = _normal_ring(r)
    return RingPresentation(r["field"], r["vars"], [str(g) for g in r["ideal"]])


def build_finite(spec, cap):
    if "cyclic" in spec:
        return ft.cyclic(spec["cyclic"], cap=cap)
    if "gfpoly" in spec:
        g = spec["gfpoly"]
        return ft.gfpoly(g["p"], g["f"], g.get("var", "x"), cap=cap)
    if "product" in spec:
        return ft.product([build_finite(s, cap) for s in spec["product"]], cap=cap)
    t = spec["tables"]
    return ft.FiniteRingTable(t["add"], t["mul"], t.get("zero", 0), t.get("one", 1), t.get("labels"), cap=cap)


def build_product(p) -> ProductRing:
    return ProductRing(p["components"], p.get("index"))


def build_module(R, m) -> ModulePresentation:
    """Each entry of ``relations`` is one relation vector of length ``rank``."""
    return ModulePresentation(R, m["rank"], [[str(c) for c in v] for v in m.get("relations", [])])


def _gens(s):
    return [str(g) for g in s["gens"]]


# -- formatting --------------------------------------------------------------------


def fmt_ideal(J, ctx: Context) -> list[str]:
    return J.canonical(ctx.order)


def jsonable(x, ctx: Context):
    if isinstance(x, Status):
        return x.value
    if isinstance(x, Polynomial):
        return x.format(ctx.order)
    if isinstance(x, dict):
        return {str(k): jsonable(v, ctx) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v, ctx) for v in x]
    if isinstance(x, (frozenset, set)):
        return sorted(jsonable(v, ctx) for v in x)
    return x


def _result(value, status=Status.EXACT, cert=None):
    return value, status, cert if cert is not None else ({"decided": True} if status is Status.EXACT else {})


# -- operations -----------------------------------------------------------------


def op_ring_ass(a, ctx):
    R = build_ring(a["ring"])
    if "prime_complement" in a["set"]:
        t = ass_prime_complement(R, [str(g) for g in a["set"]["prime_complement"]])
        return _result({"ideal": fmt_ideal(t.value, ctx)}, t.status, t.certificate)
    J = ass_set(R, _gens(a["set"]))
    return _result({"ideal": fmt_ideal(J, ctx), "localizable": not J.is_unit()})


def op_ring_chain(a, ctx):
    R = build_ring(a["ring"])
    J, step = chain_ideal(R, _gens(a["set"]))
    return _result({"ideal": fmt_ideal(J, ctx), "step": step})


def op_ring_localize(a, ctx):
    R = build_ring(a["ring"])
    L = localize_presentation(R, _gens(a["set"]))
    return _result({
        "vars": list(L.ring.variables),
        "ideal": fmt_ideal(L.ideal, ctx),
        "inverse_vars": list(L.inverse_vars),
        "zero_ring": L.zero_ring,
    })


def op_ring_kernel(a, ctx):
    R = build_ring(a["ring"])
    L = localize_presentation(R, _gens(a["set"]))
    return _result({"ideal": fmt_ideal(kernel_of_sigma(L), ctx)})


def op_ring_classify(a, ctx):
    R = build_ring(a["ring"])
    t = classify_element(R, str(a["element"]))
    return _result({"class": t.value.value}, t.status, t.certificate)


def _prime_list(spec: MultiplicativeSetSpec, ctx):
    return {"prime_complement": fmt_ideal(spec.prime_complement, ctx)}


def op_ring_maxsets(a, ctx):
    R = build_ring(a["ring"])
    t = max_localizable_sets(R)
    return _result({"sets": [_prime_list(s, ctx) for s in t.value]}, t.status, t.certificate)


def op_ring_lrad(a, ctx):
    R = build_ring(a["ring"])
    t = localization_radical(R, workers=ctx.workers)
    rep = t.value
    comps = [{"prime": fmt_ideal(P, ctx), "ass": fmt_ideal(c.value, ctx), "status": c.status.value}
             for P, c in rep.components]
    value = {
        "lrad": fmt_ideal(rep.lrad, ctx),
        "c_R": fmt_ideal(rep.c_r, ctx),
        "nilradical": fmt_ideal(rep.nilradical, ctx),
        "lrad_is_zero": R.is_zero_in_ring(rep.lrad),
        "components": comps,
    }
    return _result(value, t.status, t.certificate)


def _factor(F, ctx):
    return {"prime": fmt_ideal(F.prime, ctx), "ass": fmt_ideal(F.ass.value, ctx), "status": F.ass.status.value,
            "is_field": F.is_field()}


def op_ring_qc(a, ctx):
    R = build_ring(a["ring"])
    factors = q_c(R, bound=a.get("bound", 64), workers=ctx.workers)
    status = Status.combine(*(F.ass.status for F in factors))
    return _result({"factors": [_factor(F, ctx) for F in factors]}, status,
                   {"minimal_primes_exact": True, "nilpotent_radical": True})


def op_ring_qa(a, ctx):
    R = build_ring(a["ring"])
    Q = q_a(R)
    if Q.zero:
        wit = [_prime_list(s, ctx) for s in Q.witnesses]
        return _result({"zero_ring": True, "witnesses": wit}, Status.EXACT, {"distinct_maximal_sets": len(wit)})
    F = Q.factor
    return _result({"zero_ring": False, "factor": _factor(F, ctx)}, F.ass.status, dict(F.ass.certificate))


def op_ring_iso(a, ctx):
    R = build_ring(a["ring"])
    S, T = _gens(a["S"]), _gens(a["T"])
    return _result({"iso": localization_iso(R, S, T), "hom_S_T": hom_exists(R, S, T), "hom_T_S": hom_exists(R, T, S)})


def op_ring_hom(a, ctx):
    R = build_ring(a["ring"])
    return _result({"hom": hom_exists(R, _gens(a["S"]), _gens(a["T"]))})


def op_ring_satmember(a, ctx):
    R = build_ring(a["ring"])
    return _result({"member": in_largest_multset(R, _gens(a["set"]), str(a["element"]))})


def op_finite_build(a, ctx):
    T = build_finite(a["ring"], ctx.cap)
    return _result({
        "order": T.n,
        "labels": T.labels,
        "units": T.format_mask(T.units()),
        "nilpotents": T.format_mask(T.nilpotents()),
        "idempotents": [T.labels[i] for i in T.idempotents()],
    })


def op_finite_survey(a, ctx):
    T = build_finite(a["ring"], ctx.cap)
    rep = survey(T, cap=ctx.cap)
    clauses = {k: "pass" if v else "fail" for k, v in rep.clauses.items()}
    return _result({"order": rep.order, "clauses": clauses, "passed": rep.passed, "data": rep.data})


def op_finite_crosscheck(a, ctx):
    T = ft.gfpoly(a["p"], a["f"], a.get("var", "x"), cap=ctx.cap)
    R = RingPresentation({"Fp": a["p"]}, [a.get("var", "x")], [a["f"]])
    rep = crosscheck(T, R, max_size=a.get("max_size", 2))
    return _result({"instances": rep.instances, "mismatches": rep.mismatches, "passed": rep.passed})


def _elements(D, elems):
    return [D.element(e) for e in elems]


def op_product_sat(a, ctx):
    D = build_product(a["product"])
    S = saturate_multset(D, _elements(D, a["elements"]))
    return _result({**S.describe(), "is_unit_group": S.filter == frozenset([frozenset(D.index)])})


def op_product_filters(a, ctx):
    index = a["index"]
    if len(set(map(str, index))) != len(index):
        raise InputError("index labels must be distinct")
    D = ProductRing([{"formal": f"D{k}"} for k in range(len(index))], index)
    out = {
        "filters": [format_family(D, F) for F in enumerate_filters(index)],
        "ultrafilters": [{"filter": format_family(D, F), "principal": principal_witness(index, F)}
                         for F in enumerate_ultrafilters(index)],
    }
    if "family" in a:
        fam = [frozenset(x) for x in a["family"]]
        if any(not x <= frozenset(index) for x in fam):
            raise InputError("family mentions indices outside the index set")
        out["family"] = {
            "is_filter": is_filter(index, fam),
            "is_ultrafilter": is_ultrafilter(index, fam),
            "principal": principal_witness(index, fam),
        }
    return _result(out)


def op_product_localize(a, ctx):
    D = build_product(a["product"])
    return _result(ass_and_localize(D, _elements(D, a["elements"])).describe())


def op_product_maxsets(a, ctx):
    D = build_product(a["product"])
    sets = max_localizable_product(D)
    return _result({"sets": [S.describe() for S in sets], "count": len(sets)})


def op_product_suite(a, ctx):
    D = build_product(a["product"])
    rep = product_theory_suite(D)
    clauses = {k: "pass" if v else "fail" for k, v in rep.clauses.items()}
    return _result({"ring": rep.ring, "clauses": clauses, "passed": rep.passed, "data": rep.data})


def _module(a):
    R = build_ring(a["ring"])
    return R, build_module(R, a["module"])


def op_module_torsion(a, ctx):
    R, M = _module(a)
    t = torsion_submodule(M, _gens(a["set"]))
    return _result({"generators": t.submodule.format(), "whole_module": t.submodule.is_whole(), "zero_ring": t.zero_ring})


def op_module_localize(a, ctx):
    R, M = _module(a)
    return _result(localize_module(M, _gens(a["set"])).describe())


def op_module_exactness(a, ctx):
    R, M = _module(a)
    rep = exactness_check(M, [[str(c) for c in v] for v in a["m1"]], [[str(c) for c in v] for v in a["m2"]], _gens(a["set"]))
    return _result({"condition": rep.condition, "direct": rep.direct})


OPS = {
    "ring ass": op_ring_ass, "ring chain": op_ring_chain, "ring localize": op_ring_localize,
    "ring kernel": op_ring_kernel, "ring classify": op_ring_classify, "ring maxsets": op_ring_maxsets,
    "ring lrad": op_ring_lrad, "ring qc": op_ring_qc, "ring qa": op_ring_qa, "ring iso": op_ring_iso,
    "ring hom": op_ring_hom, "ring satmember": op_ring_satmember,
    "finite build": op_finite_build, "finite survey": op_finite_survey, "finite crosscheck": op_finite_crosscheck,
    "product sat": op_product_sat, "product filters": op_product_filters, "product localize": op_product_localize,
    "product maxsets": op_product_maxsets, "product suite": op_product_suite,
    "module torsion": op_module_torsion, "module localize": op_module_localize,
    "module exactness": op_module_exactness,
}


# -- running ---------------------------------------------------------------------


def _code_for(exc) -> int:
    if isinstance(exc, InvariantViolation):
        return EXIT_INVARIANT
    if isinstance(exc, Refused):
        return EXIT_STATUS
    return EXIT_INPUT


def run_task(op: str, args, ctx: Context, strict=False, timing=False) -> tuple[dict, int]:
    """One operation as a result document and its exit code."""
    t0 = time.perf_counter()
    try:
        parsed = parse_task(op, args)
        value, status, cert = OPS[op](parsed, ctx)
    except (LocusError, ValueError, RecursionError) as exc:
        if isinstance(exc, ValueError) and not isinstance(exc, InputError):
            exc = InputError(str(exc))
        doc = {"op": op, "error": {"type": type(exc).__name__, "message": str(exc)}}
        return doc, _code_for(exc)
    doc = {
        "op": op,
        "args": parsed,
        "value": jsonable(value, ctx),
        "status": status.value,
        "certificate": jsonable(cert, ctx),
    }
    if timing:
        doc["timing_ms"] = round(1000 * (time.perf_counter() - t0), 3)
    code = EXIT_STATUS if strict and status is not Status.EXACT else EXIT_OK
    return doc, code


def run_document(doc, ctx: Context, strict=False, timing=False) -> tuple[dict, int]:
    doc = parse_document(doc)
    if doc["kind"] == "task":
        return run_task(doc["op"], doc["args"], ctx, strict, timing)
    pairs = _ordered_map(lambda t: run_task(t["op"], t["args"], ctx, strict, timing), doc["tasks"], ctx.workers)
    code = max([c for _, c in pairs], default=EXIT_OK)
    return {"kind": "batch", "results": [d for d, _ in pairs]}, code


# -- self check ------------------------------------------------------------------


def selfcheck(seed: int, ctx: Context) -> tuple[dict, int]:
    """Random instances of the cross-method agreements, reproducible by seed."""
    rng = random.Random(seed)
    checks = []
    for k in range(6):
        var = ["x", "y"]
        field = "Q" if k % 2 == 0 else {"Fp": rng.choice([2, 3, 5])}
        mons = ["x", "y", "x*y", "x^2", "y^2", "x^2*y", "x*y^2"]
        ideal = rng.sample(mons, rng.randint(1, 2))
        gens = [rng.choice(["x", "y", "x+y", "x+1", "y-1"])]
        R = RingPresentation(field, var, ideal)
        a = ass_set(R, gens)
        c, _ = chain_ideal(R, gens)
        kk = kernel_of_sigma(localize_presentation(R, gens))
        checks.append({"ring": {"field": field, "vars": var, "ideal": ideal}, "gens": gens,
                       "agree": a == c == kk, "ideal": fmt_ideal(a, ctx)})
    n = rng.choice([4, 6, 8, 9, 10, 12])
    rep = survey(ft.cyclic(n), cap=ctx.cap)
    checks.append({"survey": f"Z/{n}", "agree": rep.passed})
    ok = all(c["agree"] for c in checks)
    return {"kind": "selfcheck", "seed": seed, "checks": checks, "passed": ok}, EXIT_OK if ok else EXIT_INVARIANT


# -- argument parsing ---------------------------------------------------------------


def _common(p):
    p.add_argument("--file", "-f", help="read the document from this file instead of standard input")
    p.add_argument("--strict", action="store_true", help="exit 3 unless every result is exact")
    p.add_argument("--order", choices=["lex", "grevlex"], default="grevlex", help="order for printed bases")
    p.add_argument("--cap", type=int, default=ft.DEFAULT_CAP, help="largest finite ring order to accept")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized drivers")
    p.add_argument("--workers", type=int, default=1, help="threads for independent sub-tasks")
    p.add_argument("--timing", action="store_true", help="add wall-clock timings to the output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="locus", description="Exact localization of rings.")
    parser.add_argument("--version", action="version", version=f"locus {__version__}")
    groups = parser.add_subparsers(dest="group", required=True)
    by_group: dict[str, list[str]] = {}
    for op in OPS:
        g, name = op.split()
        by_group.setdefault(g, []).append(name)
    for g, names in by_group.items():
        gp = groups.add_parser(g, help=f"{g} operations")
        sub = gp.add_subparsers(dest="op", required=True)
        for name in names:
            _common(sub.add_parser(name))
    _common(groups.add_parser("run", help="run a task or batch document"))
    _common(groups.add_parser("selfcheck", help="randomized cross-method checks"))
    return parser


def _read(path):
    text = open(path, encoding="utf-8").read() if path else sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.workers < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    ctx = Context(order=LEX if args.order == "lex" else GREVLEX, cap=args.cap, workers=args.workers, seed=args.seed)
    try:
        if args.group == "selfcheck":
            doc, code = selfcheck(args.seed, ctx)
        elif args.group == "run":
            doc, code = run_document(_read(args.file), ctx, args.strict, args.timing)
        else:
            doc, code = run_task(f"{args.group} {args.op}", _read(args.file), ctx, args.strict, args.timing)
    except LocusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _code_for(exc)
    sys.stdout.write(print_document(doc))
    if "error" in doc:
        print(f"error: {doc['error']['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
