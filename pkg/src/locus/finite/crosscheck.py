"""Compare the Groebner pipeline with the table oracle on GF(p)[x]/(f)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..errors import InputError
from ..localization import RingPresentation, ass_set, is_localizable_set, localize_presentation
from .lab import ass_bruteforce, is_localizable, localize_finite
from .table import FiniteRingTable, gfpoly


def natural_map(T: FiniteRingTable, R: RingPresentation) -> list:
    """Table index -> polynomial, for a table built by :func:`gfpoly`."""
    info = getattr(T, "poly_info", None)
    if info is None:
        raise InputError("natural map needs a table built from GF(p)[x]/(f)")
    (var,) = info["ring"].variables
    if R.variables != (var,):
        raise InputError(f"presentation must be in the single variable {var}")
    out = []
    for vec in info["vectors"]:
        f = R.poly_ring.zero
        for k, c in enumerate(vec):
            if c:
                f = f + R.poly_ring.monomial((k,), c)
        out.append(f)
    return out


def verify_isomorphism(T: FiniteRingTable, R: RingPresentation, iso) -> bool:
    """iso is a bijection onto k[x]/I respecting + and *."""
    nf = [R.normal_form(f) for f in iso]
    if len(set(nf)) != T.n or R.ideal.quotient_dimension() is None:
        return False
    if R.field.characteristic ** R.ideal.quotient_dimension() != T.n:
        return False
    lookup = {f: i for i, f in enumerate(nf)}
    for a in range(T.n):
        for b in range(a, T.n):
            if lookup.get(R.normal_form(iso[a] + iso[b])) != T.add[a][b]:
                return False
            if lookup.get(R.normal_form(iso[a] * iso[b])) != T.mul[a][b]:
                return False
    return lookup.get(R.normal_form(R.poly_ring.one)) == T.one


@dataclass
class CrosscheckReport:
    instances: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def crosscheck(T: FiniteRingTable, R: RingPresentation, iso=None, max_size: int = 2) -> CrosscheckReport:
    """Every generator set of size <= max_size, compared on ass, localizability and order."""
    if iso is None:
        iso = natural_map(T, R)
    if not verify_isomorphism(T, R, iso):
        raise InputError("the supplied element map is not a ring isomorphism")
    rep = CrosscheckReport()
    p = R.field.characteristic
    for k in range(1, max_size + 1):
        for combo in itertools.combinations(range(T.n), k):
            rep.instances += 1
            gens = [iso[a] for a in combo]
            mask = T.mask(combo)
            name = [T.labels[a] for a in combo]
            J = ass_set(R, gens)
            moved = T.mask(a for a in range(T.n) if iso[a] in J)
            brute = ass_bruteforce(T, mask)
            if moved != brute:
                rep.mismatches.append({"gens": name, "what": "ass"})
            if is_localizable_set(R, gens) != is_localizable(T, mask):
                rep.mismatches.append({"gens": name, "what": "localizable"})
            L = localize_presentation(R, gens)
            dim = L.ideal.quotient_dimension()
            order = p**dim if dim is not None else None
            if order != localize_finite(T, mask).order:
                rep.mismatches.append({"gens": name, "what": "order", "groebner": order})
    return rep


def crosscheck_gfpoly(p: int, f: str, var: str = "x") -> CrosscheckReport:
    T = gfpoly(p, f, var)
    R = RingPresentation({"Fp": p}, [var], [f])
    return crosscheck(T, R)
