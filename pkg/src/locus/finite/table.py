"""Finite commutative rings given by addition and multiplication tables."""
from __future__ import annotations

import itertools

import numpy as np

from ..errors import InputError
from ..kernel.fields import GF
from ..kernel.poly import PolyRing

DEFAULT_CAP = 64
HARD_CAP = 256


class RingAxiomError(InputError):
    def __init__(self, message, witness=None):
        super().__init__(message if witness is None else f"{message} at {witness}")
        self.witness = witness


class FiniteRingTable:
    """Elements are indices 0..n-1; ``labels`` name them for output."""

    def __init__(self, add, mul, zero=0, one=1, labels=None, cap=DEFAULT_CAP, validate=True):
        add = np.asarray(add, dtype=np.int64)
        mul = np.asarray(mul, dtype=np.int64)
        n = add.shape[0] if add.ndim == 2 else 0
        if add.shape != (n, n) or mul.shape != (n, n) or n == 0:
            raise RingAxiomError("tables must be square and of equal size")
        if n > min(cap, HARD_CAP):
            raise InputError(f"ring of order {n} exceeds the cap {min(cap, HARD_CAP)}")
        self.n = n
        self.add_t = add
        self.mul_t = mul
        self.zero = int(zero)
        self.one = int(one)
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise InputError("label count does not match ring order")
        if validate:
            self._validate()
        # python lists are much faster than numpy for scalar lookups
        self.add = add.tolist()
        self.mul = mul.tolist()
        self.neg = [int(np.where(add[a] == self.zero)[0][0]) for a in range(n)]

    def __repr__(self):
        return f"FiniteRingTable(order={self.n})"

    def _validate(self):
        n, A, M = self.n, self.add_t, self.mul_t
        if A.min() < 0 or A.max() >= n or M.min() < 0 or M.max() >= n:
            raise RingAxiomError("table entry out of range")
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise RingAxiomError("zero/one index out of range")
        idx = np.arange(n)
        for name, T in (("addition", A), ("multiplication", M)):
            bad = np.argwhere(T != T.T)
            if len(bad):
                raise RingAxiomError(f"{name} not commutative", tuple(int(v) for v in bad[0]))
            lhs = T[T[:, :, None], idx[None, None, :]]  # T[T[a,b], c]
            rhs = T[idx[:, None, None], T[None, :, :]]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                raise RingAxiomError(f"{name} not associative", tuple(int(v) for v in bad[0]))
        if not (A[self.zero] == idx).all():
            raise RingAxiomError("zero is not an additive identity")
        if not (M[self.one] == idx).all():
            raise RingAxiomError("one is not a multiplicative identity")
        if not (A == self.zero).any(axis=1).all():
            a = int(np.where(~(A == self.zero).any(axis=1))[0][0])
            raise RingAxiomError("missing additive inverse", (a,))
        # a*(b+c) = a*b + a*c
        lhs = M[idx[:, None, None], A[None, :, :]]
        rhs = A[M[:, :, None], M[:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            raise RingAxiomError("not distributive", tuple(int(v) for v in bad[0]))

    # -- element helpers ---------------------------------------------------
    def mask(self, elements) -> int:
        m = 0
        for e in elements:
            m |= 1 << e
        return m

    def members(self, mask: int) -> list[int]:
        return [i for i in range(self.n) if mask >> i & 1]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def units(self) -> int:
        one, m = self.one, 0
        for a in range(self.n):
            if one in self.mul[a]:
                m |= 1 << a
        return m

    def nilpotents(self) -> int:
        m = 0
        for a in range(self.n):
            x, seen = a, set()
            while x not in seen:
                if x == self.zero:
                    m |= 1 << a
                    break
                seen.add(x)
                x = self.mul[x][a]
        return m

    def idempotents(self) -> list[int]:
        return [a for a in range(self.n) if self.mul[a][a] == a]

    def additive_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.zero:
            x = self.add[x][a]
            k += 1
        return k

    def format_mask(self, mask: int) -> list[str]:
        return [self.labels[i] for i in self.members(mask)]

    def is_zero_ring(self) -> bool:
        return self.n == 1


# -- constructors ---------------------------------------------------------------


def cyclic(n: int, cap=DEFAULT_CAP) -> FiniteRingTable:
    if not isinstance(n, int) or n < 1:
        raise InputError(f"cyclic ring needs a positive order, got {n!r}")
    r = np.arange(n)
    add = (r[:, None] + r[None, :]) % n
    mul = (r[:, None] * r[None, :]) % n
    return FiniteRingTable(add, mul, 0, 1 % n, [str(i) for i in range(n)], cap=cap)


def _univariate(ring, coeffs):
    out = ring.zero
    for k, c in enumerate(coeffs):
        if c:
            out = out + ring.monomial((k,), c)
    return out


def gfpoly(p: int, f, var: str = "x", cap=DEFAULT_CAP) -> FiniteRingTable:
    """GF(p)[x]/(f) with elements indexed by base-p coefficient vectors."""
    K = GF(p)
    ring = PolyRing(K, [var])
    fpoly = ring(f) if isinstance(f, str) else f.map_to(ring)
    d = fpoly.degree_in(0)
    if d < 1:
        raise InputError("gfpoly needs a non-constant modulus")
    n = p**d
    if n > min(cap, HARD_CAP):
        raise InputError(f"ring of order {n} exceeds the cap {min(cap, HARD_CAP)}")
    lead_inv = K.inv(fpoly.terms[(d,)])
    fmon = [K.mul(fpoly.terms.get((k,), 0), lead_inv) for k in range(d + 1)]
    vecs = list(itertools.product(range(p), repeat=d))  # vecs[i][k] = coeff of x^k, little-endian index
    vecs = [tuple(reversed(v)) for v in vecs]
    index = {v: i for i, v in enumerate(vecs)}

    def reduce(c):
        c = list(c)
        for k in range(len(c) - 1, d - 1, -1):
            a = c[k]
            if a:
                for j in range(d + 1):
                    c[k - d + j] = (c[k - d + j] - a * fmon[j]) % p
        return tuple(c[:d])

    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(vecs):
        for j, b in enumerate(vecs):
            add[i, j] = index[tuple((x + y) % p for x, y in zip(a, b))]
            prod = [0] * (2 * d - 1)
            for s, x in enumerate(a):
                if x:
                    for t, y in enumerate(b):
                        prod[s + t] = (prod[s + t] + x * y) % p
            mul[i, j] = index[reduce(prod)]
    zero = index[(0,) * d]
    one = index[reduce([1] + [0] * (d - 1))]
    labels = [_univariate(ring, v).format() for v in vecs]
    T = FiniteRingTable(add, mul, zero, one, labels, cap=cap)
    T.poly_info = {"p": p, "modulus": fpoly, "ring": ring, "vectors": vecs, "index": index}
    return T


def product(rings, cap=DEFAULT_CAP) -> FiniteRingTable:
    rings = list(rings)
    if not rings:
        raise InputError("empty product")
    n = 1
    for R in rings:
        n *= R.n
    if n > min(cap, HARD_CAP):
        raise InputError(f"ring of order {n} exceeds the cap {min(cap, HARD_CAP)}")
    tuples = list(itertools.product(*[range(R.n) for R in rings]))
    index = {t: i for i, t in enumerate(tuples)}
    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(tuples):
        for j, b in enumerate(tuples):
            add[i, j] = index[tuple(R.add[x][y] for R, x, y in zip(rings, a, b))]
            mul[i, j] = index[tuple(R.mul[x][y] for R, x, y in zip(rings, a, b))]
    zero = index[tuple(R.zero for R in rings)]
    one = index[tuple(R.one for R in rings)]
    labels = ["(" + ",".join(R.labels[x] for R, x in zip(rings, t)) + ")" for t in tuples]
    T = FiniteRingTable(add, mul, zero, one, labels, cap=cap)
    T.factors = rings
    T.tuples = tuples
    return T


def zero_ring() -> FiniteRingTable:
    return FiniteRingTable([[0]], [[0]], 0, 0, ["0"])


def quotient(R: FiniteRingTable, ideal_mask: int) -> tuple[FiniteRingTable, list[int]]:
    """R/a together with the projection as an index map."""
    coset_of = [-1] * R.n
    reps = []
    ideal = R.members(ideal_mask)
    for r in range(R.n):
        if coset_of[r] >= 0:
            continue
        k = len(reps)
        reps.append(r)
        for a in ideal:
            coset_of[R.add[r][a]] = k
    add = [[coset_of[R.add[a][b]] for b in reps] for a in reps]
    mul = [[coset_of[R.mul[a][b]] for b in reps] for a in reps]
    labels = [R.labels[r] for r in reps]
    Q = FiniteRingTable(add, mul, coset_of[R.zero], coset_of[R.one], labels, cap=HARD_CAP, validate=False)
    return Q, coset_of


# -- isomorphism search ------------------------------------------------------------


def _signature(R: FiniteRingTable, a: int, units: int, nil: int):
    sq = R.mul[a][a]
    return (R.additive_order(a), bool(units >> a & 1), bool(nil >> a & 1), sq == a, R.additive_order(sq))


def _additive_generators(R: FiniteRingTable) -> list[int]:
    gens, span = [], 1 << R.zero
    order = sorted(range(R.n), key=lambda a: -R.additive_order(a))
    for a in order:
        if span >> a & 1:
            continue
        gens.append(a)
        # close span under adding every generator
        frontier = R.members(span)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = R.add[x][g]
                    if not span >> y & 1:
                        span |= 1 << y
                        nxt.append(y)
            frontier = nxt
        if span == R.full:
            break
    return gens


def find_isomorphism(R: FiniteRingTable, S: FiniteRingTable) -> list[int] | None:
    """A ring isomorphism R -> S as an index list, or None."""
    if R.n != S.n:
        return None
    uR, uS, nR, nS = R.units(), S.units(), R.nilpotents(), S.nilpotents()
    if bin(uR).count("1") != bin(uS).count("1") or bin(nR).count("1") != bin(nS).count("1"):
        return None
    sigR = [_signature(R, a, uR, nR) for a in range(R.n)]
    sigS = [_signature(S, a, uS, nS) for a in range(S.n)]
    if sorted(sigR) != sorted(sigS):
        return None
    gens = _additive_generators(R)
    cands = [[b for b in range(S.n) if sigS[b] == sigR[g]] for g in gens]

    def extend(images):
        phi = {R.zero: S.zero}
        frontier = [R.zero]
        while frontier:
            nxt = []
            for x in frontier:
                for g, h in zip(gens, images):
                    y, z = R.add[x][g], S.add[phi[x]][h]
                    if y in phi:
                        if phi[y] != z:
                            return None
                    else:
                        phi[y] = z
                        nxt.append(y)
            frontier = nxt
        if len(set(phi.values())) != R.n:
            return None
        if phi[R.one] != S.one:
            return None
        for a in range(R.n):
            for b in range(a, R.n):
                if phi[R.mul[a][b]] != S.mul[phi[a]][phi[b]]:
                    return None
        return [phi[a] for a in range(R.n)]

    for images in itertools.product(*cands):
        if len(set(images)) != len(images):
            continue
        phi = extend(images)
        if phi is not None:
            return phi
    return None


def is_isomorphism(R: FiniteRingTable, S: FiniteRingTable, phi) -> bool:
    if len(phi) != R.n or sorted(phi) != list(range(S.n)) or phi[R.one] != S.one:
        return False
    return all(
        phi[R.add[a][b]] == S.add[phi[a]][phi[b]] and phi[R.mul[a][b]] == S.mul[phi[a]][phi[b]]
        for a in range(R.n)
        for b in range(R.n)
    )
