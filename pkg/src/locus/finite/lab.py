"""Brute-force localization theory of a finite commutative ring.

Subsets are bitmasks over element indices. In a finite commutative ring the
localization at S is the quotient by ass(S), because the image of S there
consists of non-zero-divisors and hence of units; :func:`localize_finite`
checks this rather than assuming it.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InputError, InvariantViolation
from .table import DEFAULT_CAP, FiniteRingTable, quotient


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def monoid_closure(R: FiniteRingTable, S: int) -> int:
    """Smallest multiplicatively closed set containing S and 1."""
    closed = S | (1 << R.one)
    frontier = list(_bits(closed))
    gens = list(_bits(closed))
    while frontier:
        nxt = []
        for a in frontier:
            row = R.mul[a]
            for g in gens:
                b = row[g]
                if not closed >> b & 1:
                    closed |= 1 << b
                    nxt.append(b)
        frontier = nxt
    return closed


def _extend_monoid(R: FiniteRingTable, M: int, e: int) -> int:
    """closure(M ∪ {e}) for a monoid M: the union of e^k * M."""
    out = M
    layer = M
    while True:
        nxt = 0
        for a in _bits(layer):
            nxt |= 1 << R.mul[a][e]
        if nxt & ~out == 0:
            return out
        layer = nxt & ~out
        out |= nxt


def annihilated_by(R: FiniteRingTable, M: int) -> int:
    """{r | s*r = 0 for some s in M}."""
    z = R.zero
    out = 0
    for s in _bits(M):
        row = R.mul[s]
        for r in range(R.n):
            if row[r] == z:
                out |= 1 << r
    return out


def is_ideal(R: FiniteRingTable, mask: int) -> bool:
    if not mask >> R.zero & 1:
        return False
    elems = list(_bits(mask))
    for a in elems:
        for b in elems:
            if not mask >> R.add[a][b] & 1:
                return False
        row = R.mul[a]
        if any(not mask >> row[r] & 1 for r in range(R.n)):
            return False
    return True


def ass_bruteforce(R: FiniteRingTable, S: int) -> int:
    a = annihilated_by(R, monoid_closure(R, S))
    if not is_ideal(R, a):
        raise InvariantViolation("ass(S) is not an ideal")
    return a


def is_localizable(R: FiniteRingTable, S: int) -> bool:
    return not monoid_closure(R, S) >> R.zero & 1


def unit_mask_mod(R: FiniteRingTable, ideal: int) -> int:
    """Elements whose image in R/ideal is a unit."""
    target = 0
    for a in _bits(ideal):
        target |= 1 << R.add[R.one][a]
    out = 0
    for s in range(R.n):
        row = R.mul[s]
        if any(target >> row[t] & 1 for t in range(R.n)):
            out |= 1 << s
    return out


@dataclass
class FiniteLocalization:
    ring: FiniteRingTable | None  # None is the zero ring
    ass: int
    projection: list[int] | None

    @property
    def order(self) -> int:
        return 1 if self.ring is None else self.ring.n

    @property
    def zero_ring(self) -> bool:
        return self.ring is None


def localize_finite(R: FiniteRingTable, S: int) -> FiniteLocalization:
    a = ass_bruteforce(R, S)
    if a >> R.one & 1:
        return FiniteLocalization(None, a, None)
    Q, proj = quotient(R, a)
    qunits = Q.units()
    for s in _bits(monoid_closure(R, S)):
        if not qunits >> proj[s] & 1:
            raise InvariantViolation(f"image of {R.labels[s]} is not a unit in R/ass(S)")
    return FiniteLocalization(Q, a, proj)


# -- enumeration ---------------------------------------------------------------


def localizable_monoids(R: FiniteRingTable) -> list[int]:
    """Every multiplicatively closed subset containing 1 and not 0, sorted."""
    start = monoid_closure(R, 0)
    if start >> R.zero & 1:
        return []
    nil = R.nilpotents()
    seen = {start}
    stack = [start]
    while stack:
        M = stack.pop()
        for e in range(R.n):
            if M >> e & 1 or nil >> e & 1:
                continue
            N = _extend_monoid(R, M, e)
            if N >> R.zero & 1 or N in seen:
                continue
            seen.add(N)
            stack.append(N)
    return sorted(seen)


def maximal_masks(masks) -> list[int]:
    masks = sorted(set(masks))
    return [m for m in masks if not any(o != m and m & o == m for o in masks)]


def minimal_masks(masks) -> list[int]:
    masks = sorted(set(masks))
    return [m for m in masks if not any(o != m and m & o == o for o in masks)]


def ideal_sum(R: FiniteRingTable, a: int, b: int) -> int:
    out = 0
    bs = list(_bits(b))
    for x in _bits(a):
        row = R.add[x]
        for y in bs:
            out |= 1 << row[y]
    return out


def all_ideals(R: FiniteRingTable) -> list[int]:
    principal = set()
    for r in range(R.n):
        m = 0
        for x in R.mul[r]:
            m |= 1 << x
        principal.add(m)
    ideals = set(principal)
    frontier = list(ideals)
    while frontier:
        nxt = []
        for a in frontier:
            for p in principal:
                s = ideal_sum(R, a, p)
                if s not in ideals:
                    ideals.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(ideals)


def is_prime_ideal(R: FiniteRingTable, P: int) -> bool:
    if P == R.full or P >> R.one & 1:
        return False
    outside = [a for a in range(R.n) if not P >> a & 1]
    for a in outside:
        row = R.mul[a]
        if any(P >> row[b] & 1 for b in outside):
            return False
    return True


def minimal_primes_finite(R: FiniteRingTable, ideals=None) -> list[int]:
    ideals = all_ideals(R) if ideals is None else ideals
    return minimal_masks([P for P in ideals if is_prime_ideal(R, P)])


def sumset(R: FiniteRingTable, a: int, b: int) -> int:
    return ideal_sum(R, a, b)


# -- survey ------------------------------------------------------------------------


@dataclass
class SurveyReport:
    order: int
    clauses: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.clauses.items() if not v]


def _is_local(Q: FiniteRingTable) -> bool:
    """Q is local: its non-units form an ideal."""
    non_units = Q.full & ~Q.units()
    return is_ideal(Q, non_units)


def _image(proj, mask) -> int:
    out = 0
    for a in _bits(mask):
        out |= 1 << proj[a]
    return out


def survey(R: FiniteRingTable, cap: int = DEFAULT_CAP) -> SurveyReport:
    """Check the localization theorems for R by exhaustive enumeration."""
    if R.n > cap:
        raise InputError(f"ring of order {R.n} exceeds the survey cap {cap}")
    rep = SurveyReport(R.n)
    c = rep.clauses
    full, zero_bit = R.full, 1 << R.zero
    if R.is_zero_ring():
        rep.data["zero_ring"] = True
        c["zero_ring_has_no_localizable_sets"] = localizable_monoids(R) == []
        return rep

    monoids = localizable_monoids(R)
    ass_of = {M: annihilated_by(R, M) for M in monoids}
    maxsets = maximal_masks(monoids)
    ideals = all_ideals(R)
    primes = minimal_primes_finite(R, ideals)
    nil = R.nilpotents()
    units = R.units()
    LL = 0
    for M in maxsets:
        LL |= M
    NLL = full & ~LL
    CL = full
    for M in maxsets:
        CL &= M
    Lrad = full
    for M in maxsets:
        Lrad &= ass_of[M]
    union_primes = 0
    inter_primes = full
    for P in primes:
        union_primes |= P
        inter_primes &= P
    c_R = annihilated_by(R, CL)

    rep.data.update(
        monoid_count=len(monoids),
        maximal_sets=[R.format_mask(M) for M in maxsets],
        minimal_primes=[R.format_mask(P) for P in primes],
        nilradical=R.format_mask(nil),
        localizable_elements=R.format_mask(LL),
        non_localizable_elements=R.format_mask(NLL),
        completely_localizable=R.format_mask(CL),
        lrad=R.format_mask(Lrad),
        c_R=R.format_mask(c_R),
        units=R.format_mask(units),
    )

    # existence of maximal localizable sets, and every localizable set lies in one
    c["maximal_sets_exist"] = bool(maxsets)
    c["localizable_sets_lie_in_maximal_ones"] = all(
        any(M & X == M for X in maxsets) for M in monoids
    )

    # localizable elements are exactly the non-nilpotents
    c["localizable_elements_are_non_nilpotent"] = LL == full & ~nil
    c["non_localizable_elements_are_nilpotent"] = NLL == nil
    c["localization_is_quotient_by_annihilated_ideal"] = all(
        is_ideal(R, ass_of[M]) and not localize_finite(R, M).zero_ring for M in monoids
    )
    c["nilradical_is_meet_of_minimal_primes"] = nil == inter_primes

    # maximal sets, their localizations and the radicals
    comps = [full & ~P for P in primes]
    c["maximal_sets_are_minimal_prime_complements"] = sorted(comps) == maxsets
    local_ok = True
    for P in primes:
        loc = localize_finite(R, full & ~P)
        if loc.zero_ring or not _is_local(loc.ring):
            local_ok = False
            continue
        # the maximal ideal of R_p is the image of p
        if _image(loc.projection, P) != loc.ring.full & ~loc.ring.units():
            local_ok = False
    c["prime_complement_localization_is_local"] = local_ok
    c["prime_complement_ass_inside_prime"] = all(
        annihilated_by(R, full & ~P) & ~P == 0 for P in primes
    )
    c["lrad_inside_nilradical"] = Lrad & ~nil == 0
    is_mult = monoid_closure(R, CL) == CL and not CL & zero_bit
    c["completely_localizable_avoid_minimal_primes"] = (
        CL == full & ~union_primes and is_mult
    )
    c["c_inside_nilradical"] = c_R & ~nil == 0
    qc = localize_finite(R, CL)
    c["complete_localization_nilradical_is_image"] = (
        not qc.zero_ring and qc.ring.nilpotents() == _image(qc.projection, nil)
    )

    c["localizable_disjoint_from_lrad"] = LL & Lrad == 0
    c["lrad_inside_non_localizable"] = Lrad & ~NLL == 0
    c["localizable_plus_lrad_is_localizable"] = sumset(R, LL, Lrad) == LL
    c["non_localizable_plus_lrad_is_non_localizable"] = sumset(R, NLL, Lrad) == NLL

    c["c_inside_lrad"] = c_R & ~Lrad == 0
    c["completely_localizable_plus_c"] = sumset(R, CL, c_R) == CL

    # S -> R<S^-1> is injective on maximal sets and S = sigma^-1(units)
    asses = [ass_of[M] for M in maxsets]
    recovered = True
    for M in maxsets:
        loc = localize_finite(R, M)
        pre = 0
        qunits = loc.ring.units()
        for r in range(R.n):
            if qunits >> loc.projection[r] & 1:
                pre |= 1 << r
        recovered &= pre == M
    c["maximal_localizations_pairwise_distinct"] = len(set(asses)) == len(asses)
    c["unit_preimage_recovers_maximal_set"] = recovered

    # ass(S) is the least ideal modulo which S becomes units
    unit_masks = {b: unit_mask_mod(R, b) for b in ideals}
    least_ok = True
    for M in monoids:
        a = ass_of[M]
        admissible = [b for b in ideals if M & unit_masks[b] == M]
        if a not in admissible or any(a & ~b for b in admissible):
            least_ok = False
            break
    c["ass_is_least_admissible_ideal"] = least_ok

    # absolute quotient relative to each a in ass L(R)
    ass_values = sorted(set(ass_of.values()))
    theorem_ok = True
    qa_rel = []
    for a in ass_values:
        family = [M for M in monoids if ass_of[M] == a]
        tops = maximal_masks(family)
        U = 0
        for M in tops:
            U |= M
        U_localizable = is_localizable(R, U)
        # Q_a(R, a) is the colimit of R/ass(S) = R/a over the family: nonzero since a is proper
        qa_nonzero = not a >> R.one & 1
        ok1 = U_localizable == qa_nonzero
        ok2 = True
        if U_localizable:
            b = ass_bruteforce(R, U)
            ok2 = (b == a) == (len(tops) == 1)
        theorem_ok &= ok1 and ok2
        qa_rel.append({"ideal": R.format_mask(a), "maximal_count": len(tops), "U_localizable": U_localizable})
    c["ideal_absolute_quotient_criterion"] = theorem_ok
    rep.data["Qa_by_ideal"] = qa_rel

    # absolute quotient; a ring with a nontrivial idempotent splits as a product
    qa_zero = len(maxsets) != 1
    rep.data["Qa"] = "zero" if qa_zero else R.format_mask(ass_of[maxsets[0]])
    has_split = any(e not in (R.zero, R.one) for e in R.idempotents())
    c["split_ring_has_zero_absolute_quotient"] = (not has_split) or qa_zero

    # Q_c ≅ product of the R_p via r -> (r mod ass(S_p))_p
    locs = [localize_finite(R, full & ~P) for P in primes]
    size = 1
    for L in locs:
        size *= L.order
    crt = set()
    for r in range(R.n):
        crt.add((qc.projection[r],) + tuple(L.projection[r] for L in locs))
    target = {tuple(t[1:]) for t in crt}
    c["complete_localization_is_product_of_local_factors"] = (
        qc.order == size and len(target) == size and len({t[0] for t in crt}) == len(crt)
    )

    # open question: max ass L(R) versus ass max L(R)
    max_ass = maximal_masks(ass_values)
    ass_max = sorted(set(asses))
    rep.data["open_question_max_ass_equals_ass_max"] = max_ass == ass_max
    return rep
