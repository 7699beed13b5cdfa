"""Ideals of polynomial rings and the elementary ideal operations.

Everything here is built on reduced Groebner bases. The helpers that need an
auxiliary variable (saturation, intersection, radical membership) adjoin it
in front of the existing variables and eliminate it with a block order.
"""
from __future__ import annotations

import threading
from functools import reduce as _fold

from ..errors import InputError
from . import groebner as gb
from .poly import GREVLEX, MonomialOrder, Polynomial, PolyRing, elimination_order


class Ideal:
    """An ideal given by generators, with a per-order Groebner basis cache.

    The cache is guarded by a lock so an ideal can be shared between worker
    threads; the computed bases are canonical, so results never depend on
    which thread filled the cache.
    """

    def __init__(self, ring: PolyRing, gens=()):
        self.ring = ring
        polys = []
        for g in gens:
            if isinstance(g, Polynomial) and g.ring != ring:
                raise InputError(f"signature mismatch: {g.ring} vs {ring}")
            p = ring(g)
            if p:
                polys.append(p)
        self.gens = tuple(polys)
        self._gb: dict[MonomialOrder, tuple[Polynomial, ...]] = {}
        self._lock = threading.Lock()

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.groebner()]})"

    def groebner(self, order: MonomialOrder = GREVLEX) -> tuple[Polynomial, ...]:
        with self._lock:
            cached = self._gb.get(order)
        if cached is not None:
            return cached
        K = self.ring.field
        raw = gb.groebner_basis([g.terms for g in self.gens], K, order.key)
        basis = tuple(Polynomial(self.ring, t) for t in raw)
        with self._lock:
            self._gb.setdefault(order, basis)
        return basis

    def _basis_pairs(self, order):
        return [(max(g.terms, key=order.key), g.terms) for g in self.groebner(order)]

    def reduce(self, f, order: MonomialOrder = GREVLEX) -> Polynomial:
        f = self.ring(f) if not isinstance(f, Polynomial) else f
        if f.ring != self.ring:
            raise InputError(f"signature mismatch: {f.ring} vs {self.ring}")
        r = gb.normal_form(f.terms, self._basis_pairs(order), self.ring.field, order.key)
        return Polynomial(self.ring, r)

    def __contains__(self, f) -> bool:
        return not self.reduce(f)

    def is_unit(self) -> bool:
        """True when the ideal is the whole ring."""
        G = self.groebner()
        return len(G) == 1 and G[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gens

    def contains_ideal(self, other: Ideal) -> bool:
        _check_same(self, other)
        return all(g in self for g in other.gens)

    def __le__(self, other: Ideal) -> bool:
        return other.contains_ideal(self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner() == other.groebner()

    def __hash__(self):
        return hash((self.ring, self.groebner()))

    def __add__(self, other):
        if isinstance(other, Ideal):
            _check_same(self, other)
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(self.ring(g) for g in other))

    def __mul__(self, other: Ideal) -> Ideal:
        _check_same(self, other)
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def power(self, k: int) -> Ideal:
        out = Ideal.unit(self.ring)
        for _ in range(k):
            out = Ideal(out.ring, (out * self).groebner())
        return out

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.groebner())

    def map_to(self, ring: PolyRing) -> Ideal:
        return Ideal(ring, [g.map_to(ring) for g in self.gens])

    def canonical(self, order: MonomialOrder = GREVLEX) -> list[str]:
        return [g.format(order) for g in self.groebner(order)]

    def quotient_dimension(self) -> int | None:
        """k-dimension of k[x]/I, or None when it is infinite."""
        G = self.groebner()
        if not G:
            return None if self.ring.nvars else 1
        if self.is_unit():
            return 0
        lms = [g.leading_monomial() for g in G]
        n = self.ring.nvars
        bounds = []
        for i in range(n):
            pure = [m[i] for m in lms if all(a == 0 for j, a in enumerate(m) if j != i) and m[i] > 0]
            if not pure:
                return None
            bounds.append(min(pure))
        count = 0
        stack = [(0,) * n]
        seen = {stack[0]}
        while stack:
            e = stack.pop()
            if any(gb._divides(m, e) for m in lms):
                continue
            count += 1
            for i in range(n):
                if e[i] + 1 < bounds[i]:
                    f = e[:i] + (e[i] + 1,) + e[i + 1:]
                    if f not in seen:
                        seen.add(f)
                        stack.append(f)
        return count

    def standard_monomials(self) -> list[tuple[int, ...]]:
        """Monomials outside the leading-term ideal (requires finite dimension)."""
        if self.quotient_dimension() is None:
            raise InputError("quotient is infinite dimensional")
        lms = [g.leading_monomial() for g in self.groebner()]
        n = self.ring.nvars
        out, stack, seen = [], [(0,) * n], {(0,) * n}
        while stack:
            e = stack.pop()
            if any(gb._divides(m, e) for m in lms):
                continue
            out.append(e)
            for i in range(n):
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                if f not in seen:
                    seen.add(f)
                    stack.append(f)
        return sorted(out, key=GREVLEX.key)


def _check_same(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise InputError(f"signature mismatch: {I.ring} vs {J.ring}")


def _as_poly(ring, f) -> Polynomial:
    if isinstance(f, Polynomial) and f.ring != ring:
        raise InputError(f"signature mismatch: {f.ring} vs {ring}")
    return ring(f)


def reduce(f, I: Ideal, order: MonomialOrder = GREVLEX) -> Polynomial:
    if isinstance(f, Polynomial) and f.ring != I.ring:
        raise InputError(f"signature mismatch: {f.ring} vs {I.ring}")
    return I.reduce(f, order)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _check_same(I, J)
    return I.groebner() == J.groebner()


def eliminate(I: Ideal, drop) -> Ideal:
    """I intersected with the subring on the variables not in ``drop``.

    The result lives in the smaller ring; use :func:`eliminate_within` to
    keep it in the original ring.
    """
    ring = I.ring
    drop = [v if isinstance(v, str) else ring.variables[v] for v in drop]
    bad = [v for v in drop if v not in ring.index]
    if bad:
        raise InputError(f"cannot eliminate unknown variables {bad}")
    keep = [v for v in ring.variables if v not in set(drop)]
    work = PolyRing(ring.field, [v for v in ring.variables if v in set(drop)] + keep)
    k = ring.nvars - len(keep)
    order = elimination_order(k)
    J = Ideal(work, [g.map_to(work) for g in I.gens])
    sub = PolyRing(ring.field, keep)
    survivors = [g for g in J.groebner(order) if not any(any(e[:k]) for e in g.terms)]
    return Ideal(sub, [_project(g, sub) for g in survivors])


def _project(g: Polynomial, sub: PolyRing) -> Polynomial:
    src = g.ring
    pos = [src.index[v] for v in sub.variables]
    return Polynomial(sub, {tuple(e[p] for p in pos): c for e, c in g.terms.items()})


def eliminate_within(I: Ideal, drop) -> Ideal:
    E = eliminate(I, drop)
    target = I.ring
    return Ideal(target, [g.map_to(target) for g in E.gens])


def _with_tag(ring: PolyRing, base="t"):
    (t,) = ring.fresh_names(base, 1)
    return ring.extend([t], front=True), t


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J as the t-free part of t*I + (1 - t)*J."""
    _check_same(I, J)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    if I.is_zero() or J.is_zero():
        return Ideal.zero(I.ring)
    ext, t = _with_tag(I.ring)
    T = ext.gen(t)
    gens = [T * g.map_to(ext) for g in I.gens] + [(1 - T) * g.map_to(ext) for g in J.gens]
    E = eliminate(Ideal(ext, gens), [t])
    return Ideal(I.ring, [g.map_to(I.ring) for g in E.gens])


def intersect_all(ideals) -> Ideal:
    ideals = list(ideals)
    if not ideals:
        raise InputError("empty intersection")
    return _fold(intersect, ideals)


def divide_exact(a: Polynomial, f: Polynomial) -> Polynomial:
    """a / f, which must leave no remainder."""
    q_terms, r = _divide(a, f)
    if r:
        raise InputError(f"{f} does not divide {a}")
    return q_terms


def _divide(a: Polynomial, f: Polynomial):
    K = a.ring.field
    key = GREVLEX.key
    flm, flc = gb.leading(f.terms, key)
    inv = K.inv(flc)
    p = dict(a.terms)
    q = {}
    r = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        if gb._divides(flm, lm):
            shift = gb._sub(lm, flm)
            coef = K.mul(c, inv)
            q[shift] = K.add(q.get(shift, K.zero), coef)
            gb._axpy(p, coef, shift, f.terms, K)
        else:
            r[lm] = c
            del p[lm]
    return Polynomial(a.ring, {e: c for e, c in q.items() if c}), Polynomial(a.ring, r)


def colon(I: Ideal, f) -> Ideal:
    """(I : f) via I ∩ (f) followed by exact division by f."""
    f = _as_poly(I.ring, f)
    if not f:
        raise InputError("colon by the zero polynomial")
    inter = intersect(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [divide_exact(g, f) for g in inter.gens])


def saturate(I: Ideal, f) -> Ideal:
    """(I : f^∞) = (I + (1 - f*t)) ∩ k[x]."""
    f = _as_poly(I.ring, f)
    if not f:
        raise InputError("saturation by the zero polynomial")
    if f.is_constant():
        return Ideal(I.ring, I.groebner())
    ext, t = _with_tag(I.ring)
    T = ext.gen(t)
    gens = [g.map_to(ext) for g in I.gens] + [1 - f.map_to(ext) * T]
    E = eliminate(Ideal(ext, gens), [t])
    return Ideal(I.ring, [g.map_to(I.ring) for g in E.gens])


def saturate_by_colon(I: Ideal, f, max_steps: int = 1000) -> tuple[Ideal, int]:
    """Ascending chain I ⊆ (I:f) ⊆ (I:f^2) ... to its limit; also the step count."""
    cur = I
    for step in range(max_steps):
        nxt = colon(cur, f)
        if ideal_equal(nxt, cur):
            return cur, step
        cur = nxt
    raise InputError("colon chain did not stabilise")


def radical_member(f, I: Ideal) -> bool:
    """f ∈ √I, decided by 1 ∈ I + (1 - f*t)."""
    f = _as_poly(I.ring, f)
    if not f:
        return True
    ext, t = _with_tag(I.ring)
    T = ext.gen(t)
    J = Ideal(ext, [g.map_to(ext) for g in I.gens] + [1 - f.map_to(ext) * T])
    return J.is_unit()


def unit_in_quotient(f, I: Ideal) -> bool:
    """f is invertible in k[x]/I, i.e. 1 ∈ I + (f)."""
    f = _as_poly(I.ring, f)
    return (I + [f]).is_unit()


def ideal(ring: PolyRing, gens) -> Ideal:
    return Ideal(ring, gens)
