"""Minimal primes, radicals and monomial decompositions.

Monomial ideals are handled exactly through minimal vertex covers of the
squarefree supports. Other ideals go through a factorizing split: factor a
basis element, branch on its factors, saturate each branch by the earlier
factors, and keep the containment-minimal survivors. The result is exact
only when the candidates are of a shape we can certify as prime and their
intersection is checked to lie in the radical.
"""
from __future__ import annotations

from ..errors import InputError, ZeroRingError
from ..status import Status, StatusTagged
from . import groebner as gb
from .factor import factor_polynomial, is_irreducible
from .ideal import Ideal, intersect_all, radical_member, saturate
from .poly import LEX, Polynomial

DEPTH_CAP = 32


def _sort_ideals(ideals):
    return sorted(ideals, key=lambda J: (len(J.groebner()), J.canonical()))


def _canonical_ideal(J: Ideal) -> Ideal:
    return Ideal(J.ring, J.groebner())


def containment_minimal(ideals) -> list[Ideal]:
    """Deduplicate and drop every ideal that strictly contains another."""
    uniq = []
    for J in ideals:
        if not any(J == K for K in uniq):
            uniq.append(J)
    return [J for J in uniq if not any(K is not J and J.contains_ideal(K) for K in uniq)]


# -- monomial ideals -----------------------------------------------------


def _min_vertex_covers(supports: list[frozenset[int]]) -> list[frozenset[int]]:
    covers = set()

    def extend(chosen: frozenset, rest):
        for k, s in enumerate(rest):
            if not (s & chosen):
                for v in sorted(s):
                    extend(chosen | {v}, rest[k + 1:])
                return
        covers.add(chosen)

    extend(frozenset(), supports)
    return [c for c in covers if not any(d < c for d in covers)]


def monomial_minimal_primes(I: Ideal) -> list[Ideal]:
    ring = I.ring
    supports = []
    for g in I.groebner():
        (e,) = g.terms
        supports.append(frozenset(i for i, a in enumerate(e) if a))
    if any(not s for s in supports):
        raise ZeroRingError("zero ring has no primes")
    supports.sort(key=lambda s: (len(s), sorted(s)))
    covers = _min_vertex_covers(supports)
    primes = [Ideal(ring, [ring.gen(i) for i in sorted(c)]) for c in covers]
    return _sort_ideals(primes)


def squarefree_part(I: Ideal) -> Ideal:
    """Radical of a monomial ideal."""
    if not I.is_monomial():
        raise InputError("squarefree_part needs a monomial ideal")
    ring = I.ring
    gens = []
    for g in I.groebner():
        (e,) = g.terms
        gens.append(ring.monomial(tuple(1 if a else 0 for a in e)))
    return _canonical_ideal(Ideal(ring, gens))


def irreducible_decomposition(I: Ideal) -> list[Ideal]:
    """Irredundant decomposition of a monomial ideal into ideals of pure powers."""
    if not I.is_monomial():
        raise InputError("irreducible_decomposition needs a monomial ideal")
    ring = I.ring
    if I.is_unit():
        return []
    out: list[tuple] = []

    def minimal(mons):
        mons = sorted(set(mons), key=sum)
        keep = []
        for m in mons:
            if not any(gb._divides(k, m) for k in keep):
                keep.append(m)
        return keep

    def split(mons):
        for m in mons:
            support = [i for i, a in enumerate(m) if a]
            if len(support) > 1:
                i = support[0]
                pure = tuple(m[i] if j == i else 0 for j in range(len(m)))
                rest = tuple(0 if j == i else a for j, a in enumerate(m))
                split(minimal(mons + [pure]))
                split(minimal(mons + [rest]))
                return
        out.append(tuple(sorted(mons)))

    split(minimal([next(iter(g.terms)) for g in I.groebner()]))
    comps = sorted(set(out))

    def contains(big, small):
        # every generator of small is divisible by a generator of big
        return all(any(gb._divides(b, s) for b in big) for s in small)

    irredundant = [c for c in comps if not any(d != c and contains(c, d) for d in comps)]
    ideals = [Ideal(ring, [ring.monomial(m) for m in c]) for c in irredundant]
    return _sort_ideals(ideals)


# -- prime recognition -----------------------------------------------------


def recognized_prime(P: Ideal) -> bool:
    """True if P is provably prime by its lex basis shape.

    Accepted: every basis element but at most one is ``x_i - q`` with q free
    of the leading variables, and the remaining element (if any) is
    irreducible. The quotient is then a polynomial ring, or a polynomial ring
    modulo one irreducible element, hence a domain.
    """
    if P.is_unit():
        return False
    G = P.groebner(LEX)
    other = []
    for g in G:
        e = g.leading_monomial(LEX)
        if sum(e) == 1:
            continue
        other.append(g)
    if not other:
        return True
    if len(other) > 1:
        return False
    return is_irreducible(other[0]) is True


# -- general split ----------------------------------------------------------


class _Split:
    def __init__(self, depth_cap):
        self.depth_cap = depth_cap
        self.capped = False

    def run(self, J: Ideal, depth: int) -> list[Ideal]:
        if J.is_unit():
            return []
        J = _canonical_ideal(J)
        if recognized_prime(J):
            return [J]
        if depth >= self.depth_cap:
            self.capped = True
            return [J]
        # the lex basis often exposes univariate eliminants the grevlex one hides
        for g in J.groebner() + J.groebner(LEX):
            facs = factor_polynomial(g)
            if len(facs) == 1 and facs[0][1] == 1:
                continue
            factors = [h for h, _, _ in facs]
            found = []
            for k, h in enumerate(factors):
                branch = J + [h]
                for prev in factors[:k]:
                    branch = saturate(branch, prev)
                found.extend(self.run(branch, depth + 1))
            return containment_minimal(found)
        return [J]


def minimal_primes(I: Ideal, depth_cap: int = DEPTH_CAP) -> StatusTagged:
    """Minimal primes of I, tagged exact or unverified."""
    if I.is_unit():
        raise ZeroRingError("zero ring has no primes")
    ring = I.ring
    if I.is_zero():
        return StatusTagged([Ideal.zero(ring)], Status.EXACT, {"method": "zero ideal of a domain"})
    if I.is_monomial():
        primes = monomial_minimal_primes(I)
        return StatusTagged(primes, Status.EXACT, {"method": "monomial vertex covers"})
    splitter = _Split(depth_cap)
    cands = _sort_ideals(containment_minimal(splitter.run(I, 0)))
    contains_I = all(P.contains_ideal(I) for P in cands)
    inter = intersect_all(cands) if cands else Ideal.unit(ring)
    in_radical = all(radical_member(g, I) for g in inter.gens)
    recognized = [recognized_prime(P) for P in cands]
    cert = {
        "method": "factorizing split",
        "candidates_contain_ideal": contains_I,
        "intersection_in_radical": in_radical,
        "recognized_primes": recognized,
        "depth_cap_hit": splitter.capped,
    }
    ok = contains_I and in_radical and all(recognized) and not splitter.capped
    return StatusTagged(cands, Status.EXACT if ok else Status.UNVERIFIED, cert if ok else {**cert})


def radical(I: Ideal) -> StatusTagged:
    """√I as the intersection of the minimal primes."""
    if I.is_unit():
        return StatusTagged(I, Status.EXACT, {"method": "unit ideal"})
    if I.is_monomial():
        return StatusTagged(squarefree_part(I), Status.EXACT, {"method": "squarefree part"})
    mp = minimal_primes(I)
    R = _canonical_ideal(intersect_all(mp.value))
    return StatusTagged(R, mp.status, dict(mp.certificate))


def is_radical(I: Ideal) -> StatusTagged:
    r = radical(I)
    return StatusTagged(I.contains_ideal(r.value), r.status, dict(r.certificate))


def nilpotency_index(I: Ideal, bound: int = 64) -> int | None:
    """Smallest k <= bound with (√I)^k ⊆ I, or None."""
    if bound < 1:
        raise InputError("bound must be at least 1")
    r = radical(I)
    if not r.exact:
        return None
    R = r.value
    power = R
    for k in range(1, bound + 1):
        if I.contains_ideal(power):
            return k
        power = _canonical_ideal(power * R)
    return None


def in_prime(f: Polynomial, P: Ideal) -> bool:
    return f in P
