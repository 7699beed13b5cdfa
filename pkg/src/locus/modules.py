"""Finitely presented modules over k[x]/I and their localizations.

A vector v in k[x]^n is encoded as the linear form sum v_i*e_i in
k[e_1..e_n, x]. A submodule U becomes the ideal generated by its vectors,
the products I*e_i and every quadratic monomial e_i*e_k. That ideal is
graded by e-degree and its degree-1 part is exactly U, so membership,
intersection, colon and saturation come straight from the ideal routines.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce as _fold

from .errors import InputError, InvariantViolation
from .kernel.ideal import Ideal, colon, eliminate, intersect, saturate, saturate_by_colon
from .kernel.poly import Polynomial, PolyRing, elimination_order
from .localization import RingPresentation, _gens_of, ass_set, localize_presentation


class _Embedding:
    """k[x]^n inside k[e_1..e_n, x] as the e-degree-1 part."""

    def __init__(self, P: PolyRing, n: int, base="e"):
        self.P = P
        self.n = n
        self.names = P.fresh_names(base, n)
        self.E = P.extend(self.names, front=True)
        self.order = elimination_order(n)
        e = [self.E.gen(i) for i in range(n)]
        self.e = e
        self.quadratics = [e[i] * e[k] for i in range(n) for k in range(i, n)]

    def lift(self, v) -> Polynomial:
        out = self.E.zero
        for c, ei in zip(v, self.e):
            if c:
                out = out + c.map_to(self.E) * ei
        return out

    def unlift(self, g: Polynomial) -> tuple:
        n = self.n
        parts = [dict() for _ in range(n)]
        for exp, c in g.terms.items():
            head = exp[:n]
            if sum(head) != 1:
                raise InvariantViolation("not a linear form in the basis symbols")
            parts[head.index(1)][exp[n:]] = c
        return tuple(Polynomial(self.P, d) for d in parts)

    def ideal(self, vectors, ring_ideal: Ideal) -> Ideal:
        gens = [self.lift(v) for v in vectors]
        gens += [g.map_to(self.E) * ei for g in ring_ideal.gens for ei in self.e]
        return Ideal(self.E, gens + self.quadratics)

    def vectors(self, J: Ideal) -> list[tuple]:
        return [self.unlift(g) for g in J.groebner(self.order) if _linear(g, self.n)]


def _linear(g, n):
    return all(sum(e[:n]) == 1 for e in g.terms)


def _vec(P: PolyRing, v, n: int) -> tuple:
    if isinstance(v, (str, int, Polynomial)) and n == 1:
        v = [v]
    if not isinstance(v, (list, tuple)) or len(v) != n:
        raise InputError(f"rank mismatch: expected a vector of length {n}, got {v!r}")
    out = []
    for c in v:
        if isinstance(c, Polynomial) and c.ring != P:
            c = c.map_to(P)
        out.append(P(c))
    return tuple(out)


class ModulePresentation:
    """R^n modulo the span of ``relations`` (column vectors)."""

    def __init__(self, ring: RingPresentation, rank: int, relations=()):
        if not isinstance(rank, int) or rank < 1:
            raise InputError(f"rank must be a positive integer, got {rank!r}")
        self.ring = ring
        self.rank = rank
        self.emb = _Embedding(ring.poly_ring, rank)
        self.relations = tuple(self.vector(r) for r in relations)

    @classmethod
    def from_matrix(cls, ring: RingPresentation, rows):
        """Row-major matrix whose columns are the relations."""
        if not isinstance(rows, list) or not rows:
            raise InputError("relation matrix must be a non-empty list of rows")
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise InputError("relation matrix rows differ in length")
        (m,) = widths
        return cls(ring, len(rows), [[rows[i][j] for i in range(len(rows))] for j in range(m)])

    @classmethod
    def cyclic(cls, ring: RingPresentation, ideal_gens):
        """R/J as a rank-one module."""
        return cls(ring, 1, [[g] for g in ideal_gens])

    def __repr__(self):
        return f"Module(rank={self.rank}, relations={len(self.relations)}) over {self.ring!r}"

    def vector(self, v) -> tuple:
        return _vec(self.ring.poly_ring, v, self.rank)

    def basis(self) -> list[tuple]:
        P = self.ring.poly_ring
        return [tuple(P.one if i == k else P.zero for i in range(self.rank)) for k in range(self.rank)]

    @cached_property
    def relation_ideal(self) -> Ideal:
        return self.emb.ideal(self.relations, self.ring.ideal)

    def submodule(self, gens) -> Submodule:
        return Submodule(self, tuple(self.vector(g) for g in gens))

    def whole(self) -> Submodule:
        return self.submodule(self.basis())

    def zero(self) -> Submodule:
        return Submodule(self, ())

    def is_zero_vector(self, v) -> bool:
        return self.emb.lift(self.vector(v)) in self.relation_ideal

    def is_zero_module(self) -> bool:
        return all(self.is_zero_vector(b) for b in self.basis())

    def _from_ideal(self, J: Ideal) -> Submodule:
        U = Submodule(self, tuple(self.emb.vectors(J)))
        U.__dict__["ideal"] = J
        return U

    def describe(self) -> dict:
        return {
            "rank": self.rank,
            "relations": [[c.format() for c in r] for r in self.relations],
            "ring_ideal": self.ring.ideal.canonical(),
        }


class Submodule:
    """The image in M of the span of ``gens``; stored through its preimage in R^n."""

    def __init__(self, module: ModulePresentation, gens):
        self.module = module
        self.gens = tuple(gens)

    @cached_property
    def ideal(self) -> Ideal:
        M = self.module
        return M.emb.ideal(self.gens + M.relations, M.ring.ideal)

    def __contains__(self, v) -> bool:
        M = self.module
        return M.emb.lift(M.vector(v)) in self.ideal

    def contains(self, other: Submodule) -> bool:
        return all(g in self for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.module is other.module and self.contains(other) and other.contains(self)

    __hash__ = None

    def is_zero(self) -> bool:
        return all(self.module.is_zero_vector(g) for g in self.gens)

    def is_whole(self) -> bool:
        return all(b in self for b in self.module.basis())

    def canonical_gens(self) -> list[tuple]:
        """Reduced basis vectors that are nonzero in M."""
        M = self.module
        return [v for v in M.emb.vectors(self.ideal) if not M.is_zero_vector(v)]

    def scaled(self, gens) -> Submodule:
        """J*U for the ideal J generated by ``gens``."""
        R = self.module.ring
        elems = [R.element(a) for a in gens]
        return Submodule(self.module, tuple(tuple(a * c for c in v) for a in elems for v in self.gens))

    def __add__(self, other: Submodule) -> Submodule:
        return Submodule(self.module, self.gens + other.gens)

    def intersect(self, other: Submodule) -> Submodule:
        return self.module._from_ideal(intersect(self.ideal, other.ideal))

    def format(self) -> list[list[str]]:
        return [[c.format() for c in v] for v in self.canonical_gens()]


def submodule_member(v, U: Submodule) -> bool:
    return v in U


def _element(M: ModulePresentation, f) -> Polynomial:
    f = M.ring.element(f)
    if not M.ring.normal_form(f):
        raise InputError("colon by an element that is zero in the ring")
    return f


def module_quotient(U: Submodule, f) -> Submodule:
    """(U : f) = {v | f v in U}."""
    M = U.module
    f = _element(M, f)
    return M._from_ideal(colon(U.ideal, f.map_to(M.emb.E)))


def module_saturation(U: Submodule, f) -> Submodule:
    M = U.module
    f = _element(M, f)
    return M._from_ideal(saturate(U.ideal, f.map_to(M.emb.E)))


@dataclass(frozen=True)
class Torsion:
    submodule: Submodule
    zero_ring: bool
    colon_steps: int | None = None


def _product(R: RingPresentation, gens) -> Polynomial:
    return _fold(lambda a, b: a * b, gens, R.poly_ring.one)


def torsion_submodule(M: ModulePresentation, S) -> Torsion:
    """t_S(M) = (0 :_M f^inf) for f the product of the generators."""
    R = M.ring
    gens = _gens_of(R, S)
    a = ass_set(R, gens)
    if a.is_unit():
        return Torsion(M.whole(), True)
    f = _product(R, gens)
    zero = M.zero()
    T = module_saturation(zero, f)
    by_colon, steps = saturate_by_colon(zero.ideal, f.map_to(M.emb.E))
    if by_colon != T.ideal:
        raise InvariantViolation("torsion by elimination and by the colon chain disagree")
    aM = M.whole().scaled(a.gens)
    if not T.contains(aM):
        raise InvariantViolation("ass(S)*M is not inside the torsion submodule")
    return Torsion(T, False, steps)


@dataclass
class LocalizedModule:
    module: ModulePresentation | None  # None over the zero ring
    localization: object
    zero: bool

    def image(self, v) -> tuple:
        L = self.localization
        return tuple(c.map_to(L.ring) for c in v)

    def describe(self) -> dict:
        if self.module is None:
            return {"zero_module": True, "zero_ring": True}
        return {
            "zero_module": self.zero,
            "ring": self.localization.describe(),
            "relations": [[c.format() for c in r] for r in self.module.relations],
            "rank": self.module.rank,
        }


def localize_module(M: ModulePresentation, S) -> LocalizedModule:
    """S^-1 M with the same relation matrix read over the adjoined-inverse ring."""
    L = localize_presentation(M.ring, S)
    if L.zero_ring:
        return LocalizedModule(None, L, True)
    LR = L.as_ring()
    ML = ModulePresentation(LR, M.rank, [tuple(c.map_to(L.ring) for c in r) for r in M.relations])
    return LocalizedModule(ML, L, ML.is_zero_module())


def localization_kernel(M: ModulePresentation, S) -> Submodule:
    """Kernel of M -> S^-1 M by contracting the localized relation module."""
    loc = localize_module(M, S)
    if loc.module is None:
        return M.whole()
    ML = loc.module
    E = eliminate(ML.relation_ideal, loc.localization.inverse_vars)
    n = M.rank
    keep = E.ring
    G = E.groebner(elimination_order(n))
    vecs = []
    for g in G:
        if not _linear(g, n):
            continue
        parts = [dict() for _ in range(n)]
        for exp, c in g.terms.items():
            parts[exp[:n].index(1)][exp[n:]] = c
        sub = PolyRing(keep.field, keep.variables[n:])
        vecs.append(tuple(Polynomial(sub, d).map_to(M.ring.poly_ring) for d in parts))
    return M.submodule(vecs)


def exact_sequence_check(M: ModulePresentation, S) -> bool:
    """0 -> t_S(M) -> M -> f_S(M) -> 0: the torsion is exactly the kernel of M -> S^-1 M."""
    t = torsion_submodule(M, S).submodule
    return t == localization_kernel(M, S)


def quotient_first_comparison(M: ModulePresentation, S) -> bool:
    """S^-1 M and Sbar^-1 (M / aM) have identical canonical presentations."""
    R = M.ring
    gens = _gens_of(R, S)
    a = ass_set(R, gens)
    direct = localize_module(M, gens)
    if a.is_unit():
        return direct.zero
    Rbar = RingPresentation(R.field, R.variables, list(a.groebner()))
    rels = list(M.relations) + [tuple(g if i == k else R.poly_ring.zero for i in range(M.rank))
                                for g in a.gens for k in range(M.rank)]
    Mbar = ModulePresentation(Rbar, M.rank, rels)
    other = localize_module(Mbar, [g for g in gens])
    if direct.module is None or other.module is None:
        return direct.module is None and other.module is None
    if direct.localization.ring != other.localization.ring:
        return False
    same_ring = direct.localization.ideal == other.localization.ideal
    same_rel = direct.module.relation_ideal == other.module.relation_ideal
    return same_ring and same_rel and direct.zero == other.zero


# -- exactness under localization ------------------------------------------------


def _syzygies(P: PolyRing, ring_ideal: Ideal, n: int, relations, vectors) -> list[tuple]:
    """Generators of {c | sum c_j v_j = 0 in P^n / (relations + I P^n)}."""
    g = len(vectors)
    emb = _Embedding(P, n)
    ynames = emb.E.fresh_names("y", g)
    W = emb.E.extend(ynames)
    target = PolyRing(P.field, list(ynames) + list(P.variables))
    e = [W.gen(v) for v in emb.names]
    y = [W.gen(v) for v in ynames]
    sym = e + y
    gens = [yj - emb.lift(v).map_to(W) for yj, v in zip(y, vectors)]
    gens += [emb.lift(r).map_to(W) for r in relations]
    gens += [h.map_to(W) * s for h in ring_ideal.gens for s in sym]
    gens += [sym[i] * sym[k] for i in range(len(sym)) for k in range(i, len(sym))]
    E = eliminate(Ideal(W, gens), emb.names)
    E = Ideal(target, [h.map_to(target) for h in E.gens])
    out = []
    for h in E.groebner(elimination_order(g)):
        if not _linear(h, g):
            continue
        parts = [dict() for _ in range(g)]
        for exp, c in h.terms.items():
            parts[exp[:g].index(1)][exp[g:]] = c
        out.append(tuple(Polynomial(P, d) for d in parts))
    return out


def _lift(P: PolyRing, ring_ideal: Ideal, n: int, relations, gens, v) -> tuple:
    """Coefficients c with v = sum c_k gens_k modulo the relations."""
    g = len(gens)
    emb = _Embedding(P, n)
    znames = emb.E.fresh_names("z", g)
    W = PolyRing(P.field, list(emb.names) + list(znames) + list(P.variables))
    e = [W.gen(x) for x in emb.names]
    z = [W.gen(x) for x in znames]
    sym = e + z
    polys = [zk - emb.lift(w).map_to(W) for zk, w in zip(z, gens)]
    polys += [emb.lift(r).map_to(W) for r in relations]
    polys += [h.map_to(W) * s for h in ring_ideal.gens for s in sym]
    polys += [sym[i] * sym[k] for i in range(len(sym)) for k in range(i, len(sym))]
    # with the basis symbols eliminated first, the normal form is a linear form in z
    r = Ideal(W, polys).reduce(emb.lift(v).map_to(W), elimination_order(n))
    parts = [dict() for _ in range(g)]
    for exp, c in r.terms.items():
        if any(exp[:n]) or sum(exp[n:n + g]) != 1:
            raise InputError("M1 is not contained in M2")
        parts[exp[n:n + g].index(1)][exp[n + g:]] = c
    return tuple(Polynomial(P, d) for d in parts)


@dataclass(frozen=True)
class ExactnessReport:
    condition: bool
    direct: bool

    def as_pair(self):
        return (self.condition, self.direct)


def exactness_check(M: ModulePresentation, M1_gens, M2_gens, S) -> ExactnessReport:
    """Condition: (M1 ∩ aM2)/aM1 is S-torsion. Direct: S^-1 M1 -> S^-1 M2 is injective."""
    R = M.ring
    P = R.poly_ring
    gens = _gens_of(R, S)
    M1 = M.submodule(M1_gens)
    M2 = M.submodule(M2_gens)
    if not M2.contains(M1):
        raise InputError("M1 is not contained in M2")
    a = ass_set(R, gens)
    if a.is_unit():
        # both localizations vanish, so the map is trivially injective
        return ExactnessReport(True, True)
    f = _product(R, gens)
    aM1 = M1.scaled(a.gens)
    aM2 = M2.scaled(a.gens)
    meet = M1.intersect(aM2)
    condition = module_saturation(aM1, f).contains(meet)

    # S^-1 Mk = L ⊗ (R^gk / Syz_k); compare kernels after lifting M1's generators into M2
    g1, g2 = M1.gens, M2.gens
    if not g1:
        return ExactnessReport(condition, True)
    syz1 = _syzygies(P, R.ideal, M.rank, M.relations, g1)
    syz2 = _syzygies(P, R.ideal, M.rank, M.relations, g2)
    lifts = []
    for v in g1:
        lifts.append(_lift(P, R.ideal, M.rank, M.relations, g2, v))
    L = localize_presentation(R, gens)
    LP = L.ring

    def up(vec):
        return tuple(c.map_to(LP) for c in vec)

    kernel = _syzygies(LP, L.ideal, len(g2), [up(s) for s in syz2], [up(w) for w in lifts])
    free1 = ModulePresentation(L.as_ring(), len(g1), [up(s) for s in syz1])
    direct = all(free1.is_zero_vector(k) for k in kernel)
    if condition and not direct:
        raise InvariantViolation("torsion condition holds but the localized map is not injective")
    return ExactnessReport(condition, direct)
