"""Localization of finitely presented commutative algebras.

A ring is ``k[x]/I``; its ideals are stored as their preimages in ``k[x]``
(always containing ``I``). For a finite generating set S the kernel of
``R -> R<S^-1>`` is the saturation of I by the product of the generators.
It is computed three ways (saturation, the colon chain, and elimination
from the adjoined-inverse presentation) so they can be checked against
each other.
"""
from __future__ import annotations

import contextvars
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import reduce as _fold

from .errors import InputError, InvariantViolation, Refused, ZeroRingError
from .kernel.fields import QQ, field_from_tag
from .kernel.ideal import (
    Ideal,
    colon,
    eliminate,
    intersect_all,
    radical_member,
    saturate,
    unit_in_quotient,
)
from .kernel.poly import Polynomial, PolyRing
from .kernel.primes import irreducible_decomposition, is_radical, minimal_primes, nilpotency_index
from .status import Status, StatusTagged


class RingPresentation:
    """k[x1..xn]/I."""

    def __init__(self, field_=QQ, variables=(), ideal=()):
        if isinstance(field_, (str, dict)):
            field_ = field_from_tag(field_)
        self.poly_ring = PolyRing(field_, variables)
        self.ideal = Ideal(self.poly_ring, ideal)
        self._primes = None

    @property
    def field(self):
        return self.poly_ring.field

    @property
    def variables(self):
        return self.poly_ring.variables

    def __repr__(self):
        gens = ", ".join(self.ideal.canonical())
        return f"{self.field!r}[{', '.join(self.variables)}]/({gens})"

    def element(self, f) -> Polynomial:
        if isinstance(f, Polynomial):
            if f.ring != self.poly_ring:
                raise InputError(f"signature mismatch: {f.ring} vs {self.poly_ring}")
            return f
        return self.poly_ring(f)

    def ideal_of(self, gens) -> Ideal:
        """The preimage in k[x] of the ideal of R generated by ``gens``."""
        if isinstance(gens, Ideal):
            gens = gens.gens
        return Ideal(self.poly_ring, [self.element(g) for g in gens]) + self.ideal

    def is_zero_ring(self) -> bool:
        return self.ideal.is_unit()

    def is_zero_in_ring(self, J: Ideal) -> bool:
        """J (a preimage) is the zero ideal of R."""
        return self.ideal.contains_ideal(J)

    def normal_form(self, f) -> Polynomial:
        return self.ideal.reduce(self.element(f))

    def minimal_primes(self) -> StatusTagged:
        if self._primes is None:
            self._primes = minimal_primes(self.ideal)
        return self._primes

    def nilradical(self) -> StatusTagged:
        mp = self.minimal_primes()
        return StatusTagged(intersect_all(mp.value), mp.status, dict(mp.certificate))


@dataclass(frozen=True)
class MultiplicativeSetSpec:
    """Either the monoid generated by ``gens`` or the complement of a prime."""

    gens: tuple = ()
    prime_complement: Ideal | None = None

    def __post_init__(self):
        if self.prime_complement is None and not self.gens:
            raise InputError("a multiplicative set needs generators or a prime")
        if self.prime_complement is not None and self.gens:
            raise InputError("give either generators or a prime complement, not both")
        if self.prime_complement is not None and self.prime_complement.is_unit():
            raise InputError("prime complement needs a proper ideal")

    @classmethod
    def of(cls, R: RingPresentation, gens) -> MultiplicativeSetSpec:
        return cls(gens=tuple(R.element(g) for g in gens))

    @classmethod
    def complement(cls, p: Ideal) -> MultiplicativeSetSpec:
        return cls(prime_complement=p)

    @property
    def is_generated(self) -> bool:
        return bool(self.gens)


def _gens_of(R: RingPresentation, S) -> tuple[Polynomial, ...]:
    if isinstance(S, MultiplicativeSetSpec):
        if not S.is_generated:
            raise InputError("operation needs a generator-list multiplicative set")
        gens = S.gens
    else:
        gens = tuple(S)
    if not gens:
        raise InputError("empty generator list")
    return tuple(R.element(g) for g in gens)


def _product(gens, ring):
    return _fold(lambda a, b: a * b, gens, ring.one)


# -- ass / chain / presentation ----------------------------------------------


def ass_set(R: RingPresentation, S) -> Ideal:
    """Preimage of ass_R(S) = (I : (prod S)^inf)."""
    gens = _gens_of(R, S)
    I = R.ideal
    f = _product(gens, R.poly_ring)
    if f in I:
        return Ideal.unit(R.poly_ring)
    return Ideal(R.poly_ring, saturate(I, f).groebner())


def _colon_any(J: Ideal, g: Polynomial) -> Ideal:
    if not g or g in J:
        return Ideal.unit(J.ring)
    return colon(J, g)


def _sum(ideals, ring):
    gens = [g for J in ideals for g in J.gens]
    return Ideal(ring, Ideal(ring, gens).groebner())


def chain_ideal(R: RingPresentation, S, max_steps: int = 10_000) -> tuple[Ideal, int]:
    """The colon chain a_0 = sum (I:g), a_{k+1} = sum (a_k:g) and its first stable index."""
    gens = _gens_of(R, S)
    ring = R.poly_ring
    cur = _sum([_colon_any(R.ideal, g) for g in gens], ring)
    for step in range(max_steps):
        nxt = _sum([_colon_any(cur, g) for g in gens], ring)
        if nxt == cur:
            return cur, step
        cur = nxt
    raise InvariantViolation("colon chain failed to stabilise")


@dataclass
class LocalizationPresentation:
    base: RingPresentation
    gens: tuple
    ring: PolyRing
    ideal: Ideal
    inverse_vars: tuple
    zero_ring: bool

    def sigma(self, f) -> Polynomial:
        """Image of an element of the base ring in the extended ring."""
        return self.base.element(f).map_to(self.ring)

    def is_unit(self, f) -> bool:
        return unit_in_quotient(self.sigma(f), self.ideal)

    def as_ring(self) -> RingPresentation:
        R = RingPresentation(self.ring.field, self.ring.variables, [])
        R.ideal = self.ideal
        return R

    def describe(self) -> str:
        return f"{self.ring.field!r}[{', '.join(self.ring.variables)}]/({', '.join(self.ideal.canonical())})"


def localize_presentation(R: RingPresentation, S) -> LocalizationPresentation:
    gens = _gens_of(R, S)
    names = R.poly_ring.fresh_names("u", len(gens))
    ext = R.poly_ring.extend(names)
    rels = [g.map_to(ext) for g in R.ideal.gens]
    rels += [g.map_to(ext) * ext.gen(u) - 1 for g, u in zip(gens, names)]
    J = Ideal(ext, rels)
    J = Ideal(ext, J.groebner())
    return LocalizationPresentation(R, gens, ext, J, tuple(names), J.is_unit())


def kernel_of_sigma(L: LocalizationPresentation) -> Ideal:
    E = eliminate(L.ideal, L.inverse_vars)
    base = L.base.poly_ring
    return Ideal(base, [g.map_to(base) for g in E.gens]) if E.ring != base else E


def is_localizable_set(R: RingPresentation, S) -> bool:
    return not ass_set(R, S).is_unit()


# -- element classes, maximal sets ----------------------------------------------


class ElementClass(str, Enum):
    UNIT = "unit"
    COMPLETELY_LOCALIZABLE = "completely-localizable"
    LOCALIZABLE = "localizable"
    NON_LOCALIZABLE = "non-localizable"


def classify_element(R: RingPresentation, r) -> StatusTagged:
    r = R.element(r)
    I = R.ideal
    if radical_member(r, I):
        return StatusTagged(ElementClass.NON_LOCALIZABLE, Status.EXACT, {"nilpotent": True})
    if unit_in_quotient(r, I):
        return StatusTagged(ElementClass.UNIT, Status.EXACT, {"unit": True})
    mp = R.minimal_primes()
    inside = [r in P for P in mp.value]
    cls = ElementClass.LOCALIZABLE if any(inside) else ElementClass.COMPLETELY_LOCALIZABLE
    cert = {"in_minimal_prime": inside, **mp.certificate}
    return StatusTagged(cls, mp.status, cert)


def max_localizable_sets(R: RingPresentation) -> StatusTagged:
    if R.is_zero_ring():
        raise ZeroRingError("the zero ring has no localizable sets")
    mp = R.minimal_primes()
    sets = [MultiplicativeSetSpec.complement(P) for P in mp.value]
    return StatusTagged(sets, mp.status, dict(mp.certificate))


def _find_prime(R: RingPresentation, p) -> Ideal:
    if not isinstance(p, Ideal):
        p = Ideal(R.poly_ring, [R.element(g) for g in p])
    if p.ring != R.poly_ring:
        raise InputError(f"signature mismatch: {p.ring} vs {R.poly_ring}")
    if p.is_unit():
        raise InputError("prime must be proper")
    for P in R.minimal_primes().value:
        if P == p:
            return P
    raise InputError(f"{p.canonical()} is not among the computed minimal primes")


def _avoiding_witnesses(R: RingPresentation, p: Ideal, extra=()) -> list[Polynomial]:
    """Elements outside p: generators of the other minimal primes, variables, extras."""
    pool = []
    for q in R.minimal_primes().value:
        if q == p:
            continue
        pool.extend(g for g in q.groebner() if g not in p)
    pool.extend(x for x in R.poly_ring.gens() if x not in p)
    for w in extra:
        w = R.element(w)
        if w in p:
            raise InputError(f"witness {w} lies in the prime")
        pool.append(w)
    seen, out = set(), []
    for w in pool:
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


def _saturate_all(I: Ideal, witnesses) -> Ideal:
    cur = Ideal(I.ring, I.groebner())
    changed = True
    while changed:
        changed = False
        for w in witnesses:
            nxt = saturate(cur, w)
            if nxt != cur:
                cur = Ideal(I.ring, nxt.groebner())
                changed = True
    return cur


def _monomial_prime_component(I: Ideal, p: Ideal) -> Ideal:
    # components of pure powers; keep those whose variables all lie in p
    pvars = {v for g in p.gens for v in g.variables_used()}
    comps = [Q for Q in irreducible_decomposition(I)
             if all(set(g.variables_used()) <= pvars for g in Q.gens)]
    return Ideal(I.ring, intersect_all(comps).groebner())


def ass_prime_complement(R: RingPresentation, p, extra_witnesses=()) -> StatusTagged:
    """Preimage of ass_R(R \\ p) for a minimal prime p."""
    P = _find_prime(R, p)
    I = R.ideal
    witnesses = _avoiding_witnesses(R, P, extra_witnesses)
    if I.is_monomial():
        J = _monomial_prime_component(I, P)
        sat = _saturate_all(I, witnesses)
        if not J.contains_ideal(sat):
            raise InvariantViolation("witness saturation exceeds the primary component")
        return StatusTagged(J, Status.EXACT, {"method": "monomial irreducible decomposition"})
    J = _saturate_all(I, witnesses)
    if not P.contains_ideal(J):
        raise InvariantViolation("ass(S_p) must lie inside p")
    rad = is_radical(I)
    if rad.exact and rad.value:
        if J != P:
            raise InvariantViolation("radical ideal but ass(S_p) differs from p")
        return StatusTagged(J, Status.EXACT, {"method": "radical ideal", "equals_prime": True})
    return StatusTagged(J, Status.LOWER_BOUND, {"method": "witness saturation"})


def _ordered_map(fn, items, workers: int):
    """Map in parallel but keep input order; each task sees the caller's context."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futs = [pool.submit(contextvars.copy_context().run, fn, x) for x in items]
        return [f.result() for f in futs]


@dataclass
class RadicalReport:
    lrad: Ideal
    c_r: Ideal
    nilradical: Ideal
    components: list  # (prime, StatusTagged ass) pairs


def localization_radical(R: RingPresentation, workers: int = 1) -> StatusTagged:
    """Lrad(R) and c_R, with the containments c_R ⊆ Lrad ⊆ n_R checked."""
    ring = R.poly_ring
    if R.is_zero_ring():
        unit = Ideal.unit(ring)
        return StatusTagged(RadicalReport(unit, unit, unit, []), Status.EXACT, {"zero_ring": True})
    mp = R.minimal_primes()
    comps = _ordered_map(lambda P: ass_prime_complement(R, P), mp.value, workers)
    lrad = Ideal(ring, intersect_all([c.value for c in comps]).groebner())
    nil = Ideal(ring, intersect_all(mp.value).groebner())
    c_r = lrad
    lower_c = _completely_localizable_saturation(R)
    if not lrad.contains_ideal(lower_c):
        raise InvariantViolation("c_R lower bound escapes Lrad")
    if not nil.contains_ideal(lrad):
        raise InvariantViolation("Lrad not inside the nilradical")
    status = Status.combine(mp.status, *(c.status for c in comps))
    cert = {
        "c_subset_lrad": True,
        "lrad_subset_nilradical": True,
        "avoidance_saturation_equals_lrad": lower_c == lrad,
        "component_status": [c.status.value for c in comps],
    }
    report = RadicalReport(lrad, c_r, nil, list(zip(mp.value, comps)))
    return StatusTagged(report, status, cert)


def avoidance_element(R: RingPresentation) -> Polynomial:
    """An element outside every minimal prime, by prime avoidance."""
    primes = R.minimal_primes().value
    ring = R.poly_ring
    total = ring.zero
    for p in primes:
        w = ring.one
        for q in primes:
            if q is p:
                continue
            w = w * next(g for g in q.groebner() if g not in p)
        total = total + w
    return total


def _completely_localizable_saturation(R: RingPresentation) -> Ideal:
    """Saturation of I by a product of elements avoiding all minimal primes (⊆ c_R)."""
    primes = R.minimal_primes().value
    ring = R.poly_ring
    cands = [avoidance_element(R)]
    for x in ring.gens():
        cands.extend([x, x + 1, x - 1])
    good = [c for c in cands if c and not any(c in p for p in primes)]
    return _saturate_all(R.ideal, good)


# -- Q_c, Q_a -----------------------------------------------------------


@dataclass
class LocalFactor:
    """The local ring R_p, with ass(R \\ p) as its kernel."""

    ring: RingPresentation
    prime: Ideal
    ass: StatusTagged

    def fraction(self, num, den=1) -> LocalFraction:
        return LocalFraction(self, self.ring.element(num), self.ring.element(den))

    def is_field(self) -> bool:
        # R_p is a field iff pR_p = 0 iff p ⊆ ass(S_p)
        return self.ass.value.contains_ideal(self.prime)

    def describe(self) -> dict:
        return {
            "prime": self.prime.canonical(),
            "ass": self.ass.value.canonical(),
            "status": self.ass.status.value,
        }


@dataclass(frozen=True)
class LocalFraction:
    site: LocalFactor
    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        if self.den in self.site.prime:
            raise InputError(f"denominator {self.den} lies in the prime")

    def _same(self, other):
        if other.site is not self.site and other.site.prime != self.site.prime:
            raise InputError("fractions live at different primes")

    def __add__(self, other):
        self._same(other)
        return LocalFraction(self.site, self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        self._same(other)
        return LocalFraction(self.site, self.num * other.num, self.den * other.den)

    def __neg__(self):
        return LocalFraction(self.site, -self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def equals(self, other) -> StatusTagged:
        self._same(other)
        diff = self.num * other.den - other.num * self.den
        A = self.site.ass
        if diff in A.value:
            return StatusTagged(True, Status.EXACT, {"difference_in_ass": True})
        if A.exact:
            return StatusTagged(False, Status.EXACT, {"difference_in_ass": False})
        return StatusTagged(False, A.status)

    def is_zero(self) -> StatusTagged:
        return self.equals(LocalFraction(self.site, self.num.ring.zero, self.num.ring.one))

    def is_unit(self) -> bool:
        return self.num not in self.site.prime


def _exact_primes(R: RingPresentation, what: str):
    if R.is_zero_ring():
        raise ZeroRingError(f"{what} of the zero ring")
    mp = R.minimal_primes()
    if not mp.exact:
        raise Refused(f"{what}: minimal primes could not be certified")
    return mp.value


def q_c(R: RingPresentation, bound: int = 64, workers: int = 1) -> list[LocalFactor]:
    """Q_c(R) as its local factors R_p, one per minimal prime."""
    primes = _exact_primes(R, "Q_c")
    if nilpotency_index(R.ideal, bound) is None:
        raise Refused(f"nilradical not shown nilpotent within {bound}")
    comps = _ordered_map(lambda P: ass_prime_complement(R, P), primes, workers)
    return [LocalFactor(R, P, a) for P, a in zip(primes, comps)]


@dataclass
class AbsoluteQuotient:
    zero: bool
    factor: LocalFactor | None = None
    witnesses: tuple = field(default_factory=tuple)


def q_a(R: RingPresentation) -> AbsoluteQuotient:
    """Q_a(R): R_p when there is one minimal prime, else the zero ring."""
    primes = _exact_primes(R, "Q_a")
    if len(primes) == 1:
        P = primes[0]
        return AbsoluteQuotient(False, LocalFactor(R, P, ass_prime_complement(R, P)))
    a, b = primes[0], primes[1]
    # two distinct maximal sets: any element of a outside b and vice versa shows neither contains the other
    return AbsoluteQuotient(True, None, (MultiplicativeSetSpec.complement(a), MultiplicativeSetSpec.complement(b)))


# -- homomorphisms between localizations -----------------------------------------


def _require_localizable(R, S, name):
    if not is_localizable_set(R, S):
        raise ZeroRingError(f"{name} is not localizable")


def hom_exists(R: RingPresentation, S, T) -> bool:
    """An R-homomorphism R<S^-1> -> R<T^-1> exists."""
    _require_localizable(R, S, "S")
    _require_localizable(R, T, "T")
    L = localize_presentation(R, T)
    return all(L.is_unit(s) for s in _gens_of(R, S))


def localization_iso(R: RingPresentation, S, T) -> bool:
    return hom_exists(R, S, T) and hom_exists(R, T, S) and ass_set(R, S) == ass_set(R, T)


def in_largest_multset(R: RingPresentation, S, r) -> bool:
    """r lies in sigma^-1(units of R<S^-1>), the largest set with the same localization."""
    _require_localizable(R, S, "S")
    return localize_presentation(R, S).is_unit(r)
