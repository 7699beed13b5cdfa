"""Shared strategies and the sympy-backed Groebner oracle."""
from __future__ import annotations

import sympy
from fractions import Fraction
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from locus.kernel import GF, QQ, PolyRing

settings.register_profile(
    "locus", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("locus")

FIELDS = [QQ, GF(2), GF(3), GF(5)]


def to_sympy(f, gens):
    out = sympy.Integer(0)
    for e, c in f.terms.items():
        coeff = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)
        term = coeff
        for g, k in zip(gens, e):
            term *= g**k
        out += term
    return out


def sympy_reduced_basis(ring: PolyRing, polys, order="grevlex"):
    """Reduced monic basis from sympy, as a set of expanded expressions."""
    gens = sympy.symbols(list(ring.variables))
    exprs = [to_sympy(p, gens) for p in polys if p]
    if not exprs:
        return set()
    p = ring.field.characteristic
    kw = {"modulus": p} if p else {"domain": "QQ"}
    G = sympy.groebner(exprs, *gens, order=order, **kw)
    out = set()
    for g in G.exprs:
        P = sympy.Poly(g, *gens, domain="QQ")
        lc = P.LC(order=order)
        if p:
            lc = sympy.Integer(pow(int(lc) % p, -1, p))
            out.add((P.as_expr() * lc).expand())
        else:
            out.add((P.as_expr() / lc).expand())
    return _normalize(out, p, gens)


def _normalize(exprs, p, gens):
    if not p:
        return exprs
    # symmetric vs non-negative residues: map coefficients into 0..p-1
    out = set()
    for e in exprs:
        P = sympy.Poly(e, *gens, domain="ZZ")
        out.add(sympy.Poly.from_dict({k: int(v) % p for k, v in P.as_dict().items()}, *gens).as_expr())
    return out


def our_basis_as_sympy(ring: PolyRing, basis):
    gens = sympy.symbols(list(ring.variables))
    p = ring.field.characteristic
    return _normalize({to_sympy(g, gens).expand() for g in basis}, p, gens)


def polynomials(ring: PolyRing, max_terms=3, max_deg=2):
    n = ring.nvars
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    coeffs = st.integers(-3, 3).filter(bool)
    return st.dictionaries(exps, coeffs, min_size=1, max_size=max_terms).map(
        lambda d: sum((ring.monomial(e, c) for e, c in d.items()), ring.zero)
    )
