"""Finite direct products of fields, matrix rings and formal division rings.

Elements are tuples with one entry per index. Everything here is driven by
supports: ``supp(d)`` is where d is nonzero and ``usupp(d)`` is where d is a
unit. The two agree on division-ring components. Every component type has
the property that its localizable elements are exactly its units, so a
subset S of the product localizes to the product over the core
``J = ∩ usupp(s)`` and its kernel is the ideal of elements vanishing on J.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InputError, InvariantViolation, Refused
from .finite import lab
from .finite.table import FiniteRingTable, cyclic, gfpoly
from .finite.table import product as table_product
from .kernel.factor import factor_fp
from .kernel.fields import GF, is_prime

ENUM_CAP = 4096


def _prime_power(q: int) -> tuple[int, int]:
    if not isinstance(q, int) or q < 2:
        raise InputError(f"field order must be a prime power, got {q!r}")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1 or not is_prime(p):
        raise InputError(f"field order must be a prime power, got {q}")
    return p, k


def first_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically first monic irreducible of degree k over GF(p), low to high."""
    K = GF(p)
    for tail in itertools.product(range(p), repeat=k):
        coeffs = list(reversed(tail)) + [1]
        if coeffs[0] == 0:
            continue
        facs = factor_fp(coeffs, K)
        if len(facs) == 1 and facs[0][1] == 1:
            return coeffs
    raise InvariantViolation(f"no irreducible of degree {k} over GF({p})")


# -- components -------------------------------------------------------------


class _Component:
    enumerable = True
    commutative = True
    division = False

    def order(self):
        return len(self.elements())

    def unit_count(self):
        return sum(1 for a in self.elements() if self.is_unit(a))


class FieldComponent(_Component):
    """GF(q); entries are indices into a multiplication table."""

    division = True

    def __init__(self, q: int):
        self.q = q
        self.p, self.k = _prime_power(q)
        if q > 256:
            raise InputError(f"field of order {q} is too large to tabulate")
        if self.k == 1:
            self.table = cyclic(q, cap=256)
            self.gen = None
        else:
            coeffs = first_irreducible(self.p, self.k)
            modulus = " + ".join(f"{c}*a^{e}" for e, c in enumerate(coeffs) if c)
            self.table = gfpoly(self.p, modulus, "a", cap=256)
            self.gen = self.table.poly_info["index"][(0, 1) + (0,) * (self.k - 2)]
        T = self.table
        self.zero, self.one = T.zero, T.one
        self.inv = {a: next(b for b in range(T.n) if T.mul[a][b] == T.one) for a in range(T.n) if a != T.zero}

    def spec(self):
        return {"field": self.q}

    def __repr__(self):
        return f"GF({self.q})"

    def elements(self):
        return list(range(self.q))

    def add(self, a, b):
        return self.table.add[a][b]

    def mul(self, a, b):
        return self.table.mul[a][b]

    def neg(self, a):
        return self.table.neg[a]

    def is_zero(self, a):
        return a == self.zero

    def is_unit(self, a):
        return a != self.zero

    def parse(self, v):
        T = self.table
        if isinstance(v, bool):
            raise InputError(f"bad field entry {v!r}")
        if isinstance(v, int):
            out = T.zero
            for _ in range(v % self.p):
                out = T.add[out][T.one]
            return out
        if isinstance(v, str):
            s = v.replace(" ", "")
            for i, lab_ in enumerate(T.labels):
                if lab_.replace(" ", "") == s:
                    return i
            if self.k == 1:
                try:
                    return self.parse(int(s))
                except ValueError:
                    pass
        raise InputError(f"cannot read {v!r} as an element of GF({self.q})")

    def format(self, a):
        return self.table.labels[a]


class MatrixComponent(_Component):
    """M_n(GF(q)), entries row-major tuples of field indices."""

    commutative = False

    def __init__(self, n: int, q: int):
        if not isinstance(n, int) or n < 1:
            raise InputError(f"matrix size must be positive, got {n!r}")
        self.n = n
        self.q = q
        self.F = FieldComponent(q)
        self.enumerable = q ** (n * n) <= ENUM_CAP
        F = self.F
        self.zero = (F.zero,) * (n * n)
        self.one = tuple(F.one if i == j else F.zero for i in range(n) for j in range(n))
        if n == 1:
            self.division = True

    def spec(self):
        return {"matrix": [self.n, self.q]}

    def __repr__(self):
        return f"M{self.n}(GF({self.q}))"

    @cached_property
    def _all(self):
        return [tuple(t) for t in itertools.product(range(self.q), repeat=self.n * self.n)]

    def elements(self):
        if not self.enumerable:
            raise Refused(f"{self!r} has more than {ENUM_CAP} elements")
        return self._all

    def order(self):
        return self.q ** (self.n * self.n)

    def unit_count(self):
        # |GL_n(q)| = prod (q^n - q^k)
        out = 1
        for k in range(self.n):
            out *= self.q**self.n - self.q**k
        return out

    def add(self, a, b):
        return tuple(self.F.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.F.neg(x) for x in a)

    def mul(self, a, b):
        F, n = self.F, self.n
        out = []
        for i in range(n):
            for j in range(n):
                acc = F.zero
                for k in range(n):
                    acc = F.add(acc, F.mul(a[i * n + k], b[k * n + j]))
                out.append(acc)
        return tuple(out)

    def is_zero(self, a):
        return a == self.zero

    def rank(self, a):
        F, n = self.F, self.n
        rows = [list(a[i * n:(i + 1) * n]) for i in range(n)]
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if rows[i][c] != F.zero), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = F.inv[rows[r][c]]
            rows[r] = [F.mul(inv, x) for x in rows[r]]
            for i in range(n):
                if i != r and rows[i][c] != F.zero:
                    f = rows[i][c]
                    rows[i] = [F.add(x, F.neg(F.mul(f, y))) for x, y in zip(rows[i], rows[r])]
            r += 1
        return r

    def is_unit(self, a):
        return self.rank(a) == self.n

    def parse(self, v):
        if not isinstance(v, list) or len(v) != self.n or any(not isinstance(r, list) or len(r) != self.n for r in v):
            raise InputError(f"expected a {self.n}x{self.n} nested list, got {v!r}")
        return tuple(self.F.parse(x) for r in v for x in r)

    def format(self, a):
        n = self.n
        return "[" + ";".join(",".join(self.F.format(x) for x in a[i * n:(i + 1) * n]) for i in range(n)) + "]"


class FormalComponent(_Component):
    """A division ring known only by name; entries are nonzero flags."""

    enumerable = False
    division = True
    zero = False
    one = True

    def __init__(self, tag: str):
        if not isinstance(tag, str) or not tag:
            raise InputError("formal component needs a non-empty tag")
        self.tag = tag

    def spec(self):
        return {"formal": self.tag}

    def __repr__(self):
        return f"Formal({self.tag})"

    def elements(self):
        raise Refused(f"formal component {self.tag} cannot be enumerated")

    def order(self):
        return None

    def unit_count(self):
        return None

    def add(self, a, b):
        raise Refused(f"addition in formal component {self.tag} is not available")

    def neg(self, a):
        return a

    def mul(self, a, b):
        # in a division ring a product is nonzero iff both factors are
        return a and b

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return bool(a)

    def parse(self, v):
        if v in (0, 1, True, False):
            return bool(v)
        if v in ("0", "unit", "1"):
            return v != "0"
        raise InputError(f"formal entries are 0 or 1 (nonzero), got {v!r}")

    def format(self, a):
        return "u" if a else "0"


def component_from_spec(d) -> _Component:
    if not isinstance(d, dict) or len(d) != 1:
        raise InputError(f"component spec must have exactly one key, got {d!r}")
    (kind, v), = d.items()
    if kind == "field":
        return FieldComponent(v)
    if kind == "matrix":
        if not isinstance(v, list) or len(v) != 2:
            raise InputError("matrix component is [n, q]")
        return MatrixComponent(*v)
    if kind == "formal":
        return FormalComponent(v)
    raise InputError(f"unknown component kind {kind!r}")


# -- the product ---------------------------------------------------------------


class ProductRing:
    def __init__(self, components, index=None):
        comps = [c if isinstance(c, _Component) else component_from_spec(c) for c in components]
        if not comps:
            raise InputError("a product needs at least one component")
        if index is None:
            index = list(range(1, len(comps) + 1))
        index = list(index)
        if len(index) != len(comps) or len(set(index)) != len(index):
            raise InputError("index labels must be distinct, one per component")
        self.components = comps
        self.index = tuple(index)
        self._pos = {i: k for k, i in enumerate(self.index)}

    def __repr__(self):
        return " x ".join(map(repr, self.components))

    def spec(self):
        return {"components": [c.spec() for c in self.components], "index": list(self.index)}

    @property
    def size(self) -> int:
        return len(self.components)

    @property
    def enumerable(self) -> bool:
        return all(c.enumerable for c in self.components) and self.order() <= ENUM_CAP

    @property
    def commutative(self) -> bool:
        return all(c.commutative for c in self.components)

    def order(self):
        out = 1
        for c in self.components:
            o = c.order()
            if o is None:
                return None
            out *= o
        return out

    def unit_count(self):
        out = 1
        for c in self.components:
            u = c.unit_count()
            if u is None:
                return None
            out *= u
        return out

    @property
    def one(self):
        return tuple(c.one for c in self.components)

    @property
    def zero(self):
        return tuple(c.zero for c in self.components)

    def element(self, values):
        if isinstance(values, tuple) and len(values) == self.size and self._is_native(values):
            return values
        if not isinstance(values, (list, tuple)) or len(values) != self.size:
            raise InputError(f"element needs {self.size} entries, got {values!r}")
        return tuple(c.parse(v) for c, v in zip(self.components, values))

    def _is_native(self, values):
        for c, v in zip(self.components, values):
            if isinstance(c, FormalComponent) and not isinstance(v, bool):
                return False
            if isinstance(c, FieldComponent) and not (isinstance(v, int) and not isinstance(v, bool) and 0 <= v < c.q):
                return False
            if isinstance(c, MatrixComponent) and not (isinstance(v, tuple) and len(v) == c.n * c.n):
                return False
        return True

    def mul(self, a, b):
        return tuple(c.mul(x, y) for c, x, y in zip(self.components, a, b))

    def add(self, a, b):
        return tuple(c.add(x, y) for c, x, y in zip(self.components, a, b))

    def format(self, a) -> str:
        return "(" + ",".join(c.format(x) for c, x in zip(self.components, a)) + ")"

    def elements(self):
        if not self.enumerable:
            raise Refused("product is not enumerable")
        return [tuple(t) for t in itertools.product(*[c.elements() for c in self.components])]

    def supp(self, d) -> frozenset:
        return frozenset(i for i, c, x in zip(self.index, self.components, d) if not c.is_zero(x))

    def usupp(self, d) -> frozenset:
        return frozenset(i for i, c, x in zip(self.index, self.components, d) if c.is_unit(x))

    def supp_set(self, S) -> frozenset:
        return frozenset(self.supp(s) for s in S)

    def usupp_set(self, S) -> frozenset:
        return frozenset(self.usupp(s) for s in S)

    def subset(self, indices) -> frozenset:
        bad = set(indices) - set(self.index)
        if bad:
            raise InputError(f"unknown indices {sorted(bad, key=str)}")
        return frozenset(indices)

    def sub_product(self, J) -> "ProductRing | None":
        keep = [k for k, i in enumerate(self.index) if i in J]
        if not keep:
            return None
        return ProductRing([self.components[k] for k in keep], [self.index[k] for k in keep])

    def monoid_closure(self, gens) -> set:
        gens = [self.element(g) for g in gens]
        closed = {self.one}
        frontier = [self.one]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in closed:
                        closed.add(b)
                        nxt.append(b)
            frontier = nxt
            if len(closed) > ENUM_CAP:
                raise Refused("monoid closure exceeds the enumeration cap")
        return closed

    def table(self) -> tuple[FiniteRingTable, dict]:
        """Commutative product of fields as a ring table, with element -> index."""
        if not all(isinstance(c, FieldComponent) for c in self.components):
            raise InputError("a ring table needs every component to be a finite field")
        T = table_product([c.table for c in self.components], cap=256)
        return T, {t: k for k, t in enumerate(T.tuples)}


def format_family(D: ProductRing, family) -> list[list]:
    """Families of index subsets as sorted lists of sorted lists."""
    pos = D._pos
    rows = [sorted(a, key=pos.__getitem__) for a in family]
    return sorted(rows, key=lambda r: (len(r), [pos[i] for i in r]))


# -- filters -------------------------------------------------------------------


def _all_subsets(I):
    I = tuple(I)
    return [frozenset(c) for k in range(len(I) + 1) for c in itertools.combinations(I, k)]


def upward_closure(I, family) -> frozenset:
    return frozenset(b for b in _all_subsets(I) if any(a <= b for a in family))


def intersection_closure(family) -> frozenset:
    out = set(family)
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(out), 2):
            if a & b not in out:
                out.add(a & b)
                changed = True
    return frozenset(out)


def filter_generated(I, family) -> frozenset:
    """Smallest upward- and intersection-closed family containing ``family``."""
    if not family:
        return frozenset()
    return upward_closure(I, intersection_closure(family))


def is_filter(I, F) -> bool:
    I = frozenset(I)
    F = frozenset(frozenset(a) for a in F)
    if any(not a <= I for a in F) or frozenset() in F:
        return False
    for a in F:
        for b in _all_subsets(I):
            if a <= b and b not in F:
                return False
    return all(a & b in F for a in F for b in F)


def is_ultrafilter(I, F) -> bool:
    I = frozenset(I)
    F = frozenset(frozenset(a) for a in F)
    return is_filter(I, F) and all(a in F or (I - a) in F for a in _all_subsets(I))


def principal_filter(I, i) -> frozenset:
    return frozenset(a for a in _all_subsets(I) if i in a)


def principal_witness(I, F):
    """The index i with F = {a : i in a}, or None."""
    F = frozenset(frozenset(a) for a in F)
    for i in I:
        if F == principal_filter(I, i):
            return i
    return None


def enumerate_filters(I) -> list[frozenset]:
    """All filters on a finite set: the empty family and {b ⊇ a} for each a ≠ ∅."""
    I = tuple(I)
    out = [frozenset()]
    for a in _all_subsets(I):
        if a:
            out.append(upward_closure(I, [a]))
    return out


def enumerate_ultrafilters(I) -> list[frozenset]:
    filters = enumerate_filters(I)
    maximal = [F for F in filters if F and not any(F < G for G in filters)]
    for F in maximal:
        if principal_witness(I, F) is None:
            raise InvariantViolation("non-principal ultrafilter on a finite set")
    pos = {i: k for k, i in enumerate(I)}
    return sorted(maximal, key=lambda F: pos[principal_witness(I, F)])


# -- saturated multiplicative sets ---------------------------------------------


@dataclass(frozen=True)
class SaturatedMultSet:
    """{d : usupp(d) ∈ filter}."""

    ring: ProductRing
    filter: frozenset

    def __contains__(self, d) -> bool:
        return self.ring.usupp(self.ring.element(d)) in self.filter

    def size(self):
        D = self.ring
        total = 0
        for a in self.filter:
            n = 1
            for i, c in zip(D.index, D.components):
                o, u = c.order(), c.unit_count()
                if o is None:
                    return None
                n *= u if i in a else o - u
            total += n
        return total

    def elements(self) -> set:
        return {d for d in self.ring.elements() if self.ring.usupp(d) in self.filter}

    def describe(self) -> dict:
        return {"filter": format_family(self.ring, self.filter), "size": self.size()}


def saturation_set(D: ProductRing, S) -> set:
    """The saturation as an explicit element set: units on usupp(s), anything elsewhere."""
    out = set()
    for d in D.elements():
        ud = D.usupp(d)
        if any(D.usupp(s) <= ud for s in S):
            out.add(d)
    return out


def saturate_multset(D: ProductRing, S) -> SaturatedMultSet:
    S = [D.element(s) for s in S] + [D.one]
    if any(s == D.zero for s in S):
        raise InputError("0 lies in S: not a multiplicative set")
    family = filter_generated(D.index, D.usupp_set(S))
    if frozenset() in family:
        raise InputError("the supports of S intersect in the empty set: S is not localizable")
    if D.enumerable:
        closure = D.monoid_closure(S)
        if D.zero in closure:
            raise InputError("the monoid generated by S contains 0")
        if D.usupp_set(closure) - family:
            raise InvariantViolation("closure has a unit support outside the generated filter")
    return SaturatedMultSet(D, family)


def filter_set(D: ProductRing, F) -> SaturatedMultSet:
    F = frozenset(frozenset(a) for a in F)
    if not is_filter(D.index, F):
        raise InputError("not a filter on the index set")
    return SaturatedMultSet(D, F)


@dataclass
class RoundtripReport:
    filters: int = 0
    saturated_sets: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _sources(D: ProductRing):
    # every filter on a finite index set is principal over some core, so cyclic monoids reach all of them
    if D.commutative and all(isinstance(c, FieldComponent) for c in D.components) and D.order() <= 256:
        T, _ = D.table()
        return [[T.tuples[k] for k in lab._bits(m)] for m in multiplicative_masks(T)]
    return [sorted(D.monoid_closure([d]), key=repr) for d in D.elements() if d != D.zero]


def roundtrip(D: ProductRing) -> RoundtripReport:
    """supp(S(F)) = F for every filter and S(supp(S)) = S for every saturated set."""
    if not D.enumerable:
        raise Refused("round-trip needs an enumerable product")
    rep = RoundtripReport()
    images = {}
    for F in enumerate_filters(D.index):
        rep.filters += 1
        S = filter_set(D, F).elements()
        if D.usupp_set(S) != F:
            rep.failures.append({"filter": format_family(D, F), "what": "supports of S(F)"})
        if saturation_set(D, S) != S:
            rep.failures.append({"filter": format_family(D, F), "what": "S(F) not saturated"})
        images[F] = frozenset(S)
    if len(set(images.values())) != len(images):
        rep.failures.append({"what": "filter -> set is not injective"})
    saturated = {frozenset()}
    for S in _sources(D):
        # saturation is only meaningful for localizable sets; with division components that is all of them
        if not ass_and_localize(D, S).core:
            continue
        saturated.add(frozenset(saturation_set(D, S)))
    rep.saturated_sets = len(saturated)
    for S in saturated:
        F = D.usupp_set(S)
        if images.get(F) != S:
            rep.failures.append({"what": "S(supp(S)) != S", "size": len(S)})
    if saturated != set(images.values()):
        rep.failures.append({"what": "set -> filter is not surjective"})
    for F, G in itertools.product(images, repeat=2):
        if (F <= G) != (images[F] <= images[G]):
            rep.failures.append({"what": "order", "F": format_family(D, F), "G": format_family(D, G)})
    return rep


# -- localization ----------------------------------------------------------------


@dataclass(frozen=True)
class ProductIdeal:
    """D_K: elements vanishing outside the index set K."""

    ring: ProductRing
    support: frozenset

    def __contains__(self, d) -> bool:
        return self.ring.supp(self.ring.element(d)) <= self.support

    def is_zero(self) -> bool:
        return not self.support

    def is_unit(self) -> bool:
        return self.support == frozenset(self.ring.index)

    def describe(self):
        D = self.ring
        return [c.spec() if i in self.support else 0 for i, c in zip(D.index, D.components)]


@dataclass(frozen=True)
class ProductLocalization:
    ass: ProductIdeal
    core: frozenset
    ring: ProductRing | None

    @property
    def zero_ring(self) -> bool:
        return self.ring is None

    def describe(self):
        return {
            "ass": self.ass.describe(),
            "core": sorted(self.core, key=self.ass.ring._pos.__getitem__),
            "localization": None if self.ring is None else self.ring.spec()["components"],
            "zero_ring": self.zero_ring,
        }


def ass_and_localize(D: ProductRing, S) -> ProductLocalization:
    """Component i survives iff every generator is a unit there."""
    S = [D.element(s) for s in S]
    core = frozenset(D.index)
    for s in S:
        core &= D.usupp(s)
    ass = ProductIdeal(D, frozenset(D.index) - core)
    return ProductLocalization(ass, core, D.sub_product(core))


def max_localizable_product(D: ProductRing) -> list[SaturatedMultSet]:
    """p_i^{-1}(units of A_i), one per index."""
    out = [SaturatedMultSet(D, principal_filter(D.index, i)) for i in D.index]
    if len({S.filter for S in out}) != D.size:
        raise InvariantViolation("maximal sets are not pairwise distinct")
    return out


# -- exhaustive checks -------------------------------------------------------------


def multiplicative_masks(T: FiniteRingTable) -> list[int]:
    """Every submonoid of (T, *) avoiding 0, with no pruning by nilpotency."""
    start = lab.monoid_closure(T, 0)
    if start >> T.zero & 1:
        return []
    seen = {start}
    stack = [start]
    while stack:
        M = stack.pop()
        for e in range(T.n):
            if M >> e & 1:
                continue
            N = lab.monoid_closure(T, M | 1 << e)
            if N >> T.zero & 1 or N in seen:
                continue
            seen.add(N)
            stack.append(N)
    return sorted(seen)


def component_localizable_is_units(c: _Component) -> bool:
    """Checks that every non-unit generates a non-localizable set.

    Matrix rings are simple, so a nonzero localization is injective and a
    one-sided zero divisor can never become invertible there.
    """
    if not c.enumerable:
        return c.division
    if isinstance(c, FieldComponent):
        T = c.table
        return all(lab.is_localizable(T, 1 << a) == c.is_unit(a) for a in range(T.n))
    elems = c.elements()
    for a in elems:
        if c.is_unit(a):
            if not any(c.mul(a, b) == c.one and c.mul(b, a) == c.one for b in elems):
                return False
            continue
        if not any(b != c.zero and (c.mul(a, b) == c.zero or c.mul(b, a) == c.zero) for b in elems):
            return False
    return True


def _localizable_by_rule(D: ProductRing, S) -> bool:
    return bool(ass_and_localize(D, S).core)


@dataclass
class ProductSuiteReport:
    ring: str
    clauses: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.clauses.items() if not v]


def _field_table_checks(D: ProductRing, rep: ProductSuiteReport, maxsets):
    T, index = D.table()
    full = T.full
    mult = multiplicative_masks(T)
    loc = lab.localizable_monoids(T)
    maximal = lab.maximal_masks(loc)
    expected = sorted(T.mask(index[d] for d in S.elements()) for S in maxsets)
    rep.clauses["multiplicative_sets_are_localizable"] = mult == loc
    rep.clauses["enumerated_maximal_sets_are_principal"] = sorted(maximal) == expected
    inside = all(any(M & X == M for X in maximal) for M in mult)
    rep.clauses["every_multiplicative_set_in_a_maximal_one"] = inside
    agree = True
    for M in mult:
        gens = [T.tuples[k] for k in lab._bits(M)]
        L = ass_and_localize(D, gens)
        brute = lab.localize_finite(T, M)
        ideal = T.mask(k for k, t in enumerate(T.tuples) if t in L.ass)
        order = 1 if L.ring is None else L.ring.order()
        if brute.ass != ideal or brute.order != order:
            agree = False
            break
    rep.clauses["localization_is_restriction_to_core"] = agree
    CL = full
    for X in maximal:
        CL &= X
    rep.clauses["completely_localizable_are_units"] = CL == T.units()
    lrad = full
    for X in maximal:
        lrad &= lab.ass_bruteforce(T, X)
    rep.clauses["lrad_is_zero_by_enumeration"] = lrad == 1 << T.zero
    rep.data["multiplicative_sets"] = len(mult)
    rep.data["completely_localizable_count"] = lab.popcount(CL)
    rep.data["completely_localizable"] = T.format_mask(CL)


def _matrix_checks(D: ProductRing, rep: ProductSuiteReport, maxsets):
    elems = D.elements()
    sets = [S.elements() for S in maxsets]
    ok = True
    for d in elems:
        if _localizable_by_rule(D, [d]) != any(d in X for X in sets):
            ok = False
    rep.clauses["localizable_elements_lie_in_maximal_sets"] = ok
    maximal = True
    for X in sets:
        gens = list(X)
        for e in elems:
            if e not in X and _localizable_by_rule(D, gens + [e]):
                maximal = False
    rep.clauses["principal_sets_are_maximal"] = maximal
    rep.data["completely_localizable_count"] = len(set.intersection(*sets))


def product_theory_suite(D: ProductRing) -> ProductSuiteReport:
    rep = ProductSuiteReport(repr(D))
    C = rep.clauses
    I = D.index
    C["components_localizable_are_units"] = all(component_localizable_is_units(c) for c in D.components)
    ultra = enumerate_ultrafilters(I)
    C["ultrafilters_are_principal"] = len(ultra) == D.size and all(principal_witness(I, F) is not None for F in ultra)
    maxsets = max_localizable_product(D)
    C["maximal_sets_match_ultrafilters"] = [S.filter for S in maxsets] == ultra
    locs = [ass_and_localize_filter(D, S.filter) for S in maxsets]
    C["maximal_localizations_are_components"] = all(
        L.core == {i} and L.ring is not None and L.ring.size == 1 for L, i in zip(locs, I)
    )
    lrad = frozenset(I)
    for L in locs:
        lrad &= L.ass.support
    C["lrad_is_zero"] = not lrad
    # intersection over all ultrafilters is the trivial filter {I}
    CL = frozenset.intersection(*[S.filter for S in maxsets])
    C["completely_localizable_is_unit_group"] = CL == frozenset([frozenset(I)])
    # non-localizable elements: empty unit support
    NL = SaturatedMultSet(D, frozenset([frozenset()]))
    nl_size = NL.size()
    expected_nl = None
    if all(c.order() is not None for c in D.components):
        expected_nl = 1
        for c in D.components:
            expected_nl *= c.order() - c.unit_count()
    C["non_localizable_is_product_of_non_units"] = nl_size == expected_nl
    qa_zero = len(maxsets) >= 2
    C["absolute_quotient_rule"] = qa_zero == (D.size >= 2)
    rep.data.update({
        "maximal_sets": [S.describe() for S in maxsets],
        "maximal_localizations": [L.describe() for L in locs],
        "lrad": ProductIdeal(D, lrad).describe(),
        "completely_localizable_size": D.unit_count(),
        "non_localizable_size": nl_size,
        "Qa": "zero ring" if qa_zero else D.components[0].spec(),
    })
    if D.enumerable:
        if all(isinstance(c, FieldComponent) for c in D.components) and D.order() <= 256:
            _field_table_checks(D, rep, maxsets)
            T, _ = D.table()
            rep.data["survey_failures"] = lab.survey(T, cap=256).failures()
            C["finite_survey_passes"] = not rep.data["survey_failures"]
        else:
            _matrix_checks(D, rep, maxsets)
        rt = roundtrip(D)
        C["filter_roundtrip"] = rt.passed
        rep.data["filters"] = rt.filters
        rep.data["saturated_sets"] = rt.saturated_sets
        if "completely_localizable_count" in rep.data:
            C["completely_localizable_count_is_unit_count"] = rep.data["completely_localizable_count"] == D.unit_count()
    return rep


def ass_and_localize_filter(D: ProductRing, F) -> ProductLocalization:
    """Localization at S(F): the core of a filter is the intersection of its members."""
    core = frozenset(D.index)
    for a in F:
        core &= a
    return ProductLocalization(ProductIdeal(D, frozenset(D.index) - core), core, D.sub_product(core))
