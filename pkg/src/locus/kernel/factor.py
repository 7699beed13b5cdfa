"""Factorization support for the minimal-prime splitter.

Over GF(p) univariate polynomials are factored completely (square-free
decomposition, distinct-degree, then Cantor-Zassenhaus equal-degree
splitting). Over Q we only extract content, rational roots and decide
quadratics and cubics; whatever that leaves undecided, univariate or
multivariate, goes to sympy's exact factorizer. Multivariate inputs over
GF(p) get monomial-content extraction and a degree-one irreducibility test,
nothing more.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt

from .fields import RationalField
from .poly import Polynomial

# univariate polynomials: coefficient lists, lowest degree first, no trailing zeros


def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _add(a, b, K):
    n = max(len(a), len(b))
    out = [K.add(a[i] if i < len(a) else K.zero, b[i] if i < len(b) else K.zero) for i in range(n)]
    return _trim(out)


def _sub(a, b, K):
    return _add(a, [K.neg(c) for c in b], K)


def _mul(a, b, K):
    if not a or not b:
        return []
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = K.add(out[i + j], K.mul(x, y))
    return _trim(out)


def _divmod(a, b, K):
    a = list(a)
    if not b:
        raise ZeroDivisionError
    inv = K.inv(b[-1])
    q = [K.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = K.mul(a[-1], inv)
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] = K.sub(a[i + k], K.mul(c, y))
        _trim(a)
    return _trim(q), a


def _monic(a, K):
    if not a:
        return a
    inv = K.inv(a[-1])
    return [K.mul(c, inv) for c in a]


def _gcd(a, b, K):
    while b:
        a, b = b, _divmod(a, b, K)[1]
    return _monic(a, K)


def _deriv(a, K):
    return _trim([K.mul(K(i), a[i]) for i in range(1, len(a))])


def _powmod(base, e, mod, K):
    result = [K.one]
    base = _divmod(base, mod, K)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, K), mod, K)[1]
        base = _divmod(_mul(base, base, K), mod, K)[1]
        e >>= 1
    return result


# -- GF(p) -------------------------------------------------------------


def _squarefree_fp(f, K):
    """[(g, m)] with f = prod g^m, g square-free and pairwise coprime."""
    p = K.p
    out = []
    f = _monic(f, K)
    i = 1
    d = _deriv(f, K)
    if not d:
        # f(x) = g(x^p) = g(x)^p in characteristic p
        g = [f[k] for k in range(0, len(f), p)]
        return [(h, m * p) for h, m in _squarefree_fp(g, K)]
    c = _gcd(f, d, K)
    w = _divmod(f, c, K)[0]
    while len(w) > 1:
        y = _gcd(w, c, K)
        z = _divmod(w, y, K)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = _divmod(c, y, K)[0]
    if len(c) > 1:
        g = [c[k] for k in range(0, len(c), p)]
        out.extend((h, m * p) for h, m in _squarefree_fp(g, K))
    return out


def _distinct_degree(f, K):
    p = K.p
    out = []
    x = [K.zero, K.one]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, K)
        g = _gcd(f, _sub(h, x, K), K)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod(f, g, K)[0]
            h = _divmod(h, f, K)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree(f, d, K, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    p = K.p
    while True:
        a = _trim([K(rng.randrange(p)) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t, s = a, a
            for _ in range(d - 1):
                s = _divmod(_mul(s, s, K), f, K)[1]
                t = _add(t, s, K)
            b = t
        else:
            b = _sub(_powmod(a, (p**d - 1) // 2, f, K), [K.one], K)
        g = _gcd(f, b, K)
        if 1 < len(g) < len(f):
            q = _divmod(f, g, K)[0]
            return _equal_degree(g, d, K, rng) + _equal_degree(_monic(q, K), d, K, rng)


def factor_fp(f, K):
    """Complete factorization of a univariate polynomial over GF(p)."""
    rng = random.Random(0x10C05)
    out = []
    for g, m in _squarefree_fp(f, K):
        for h, d in _distinct_degree(g, K):
            for q in _equal_degree(h, d, K, rng):
                out.append((q, m))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


# -- Q -----------------------------------------------------------------


def _primitive_int(f):
    den = 1
    for c in f:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _divisors(n):
    n = abs(n)
    out = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.add(d)
            out.add(n // d)
    return sorted(out)


def _rational_root(ints):
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        return Fraction(0)
    for p in _divisors(a0):
        for q in _divisors(an):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * r**i for i, c in enumerate(ints)) == 0:
                    return r
    return None


def factor_q(f, K):
    """Best-effort factorization over Q.

    Returns ``[(g, m, irreducible)]``; ``irreducible`` is False for a factor
    we could not split but also could not prove irreducible.
    """
    out = []
    f = _monic(f, K)
    d = _deriv(f, K)
    c = _gcd(f, d, K)
    w = _divmod(f, c, K)[0]
    i = 1
    parts = []
    while len(w) > 1:
        y = _gcd(w, c, K)
        z = _divmod(w, y, K)[0]
        if len(z) > 1:
            parts.append((z, i))
        i += 1
        w = y
        c = _divmod(c, y, K)[0]
    for g, m in parts:
        while len(g) > 1:
            if len(g) == 2:
                out.append((g, m, True))
                break
            r = _rational_root(_primitive_int(g))
            if r is not None:
                lin = [K.neg(K(r)), K.one]
                out.append((lin, m, True))
                g = _divmod(g, lin, K)[0]
                continue
            deg = len(g) - 1
            if deg == 2:
                a = _primitive_int(g)
                disc = a[1] ** 2 - 4 * a[2] * a[0]
                # a rational root would have been found already
                out.append((g, m, not (disc >= 0 and isqrt(disc) ** 2 == disc)))
            else:
                out.append((g, m, deg == 3))
            break
    out.sort(key=lambda t: (len(t[0]), [str(c) for c in t[0]]))
    return out


def factor_univariate(f, K):
    if isinstance(K, RationalField):
        return factor_q(f, K)
    return [(g, m, True) for g, m in factor_fp(f, K)]


# -- multivariate wrappers ---------------------------------------------


def _to_univariate(f: Polynomial, i: int):
    K = f.ring.field
    deg = f.degree_in(i)
    coeffs = [K.zero] * (deg + 1)
    for e, c in f.terms.items():
        coeffs[e[i]] = c
    return coeffs


def _from_univariate(coeffs, ring, i):
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * ring.nvars
            e[i] = k
            terms[tuple(e)] = c
    return Polynomial(ring, terms)


def _monomial_gcd_exponent(f: Polynomial):
    exps = list(f.terms)
    return tuple(min(e[i] for e in exps) for i in range(f.ring.nvars))


def _degree_one_irreducible(f: Polynomial) -> bool:
    """f = a*v + b with gcd(a, b) = 1 provable from monomial structure."""
    for i in sorted(f.support_variables()):
        if f.degree_in(i) != 1:
            continue
        parts = f.coefficients_in(i)
        a, b = parts.get(1), parts.get(0)
        if a is None:
            continue
        if b is None or not b:
            if a.is_constant():
                return True
            continue
        if a.is_constant() or b.is_constant():
            return True
        if a.is_monomial() and not _divisible_by_any(b, a.support_variables()):
            return True
        if b.is_monomial() and not _divisible_by_any(a, b.support_variables()):
            return True
    return False


def _divisible_by_any(p: Polynomial, variables) -> bool:
    return any(all(e[v] > 0 for e in p.terms) for v in variables)


def _factor_over_q(f: Polynomial):
    """Complete factorization over Q; every factor returned is irreducible."""
    import sympy

    ring = f.ring
    gens = sympy.symbols([f"v{i}" for i in range(ring.nvars)])
    data = {e: sympy.Rational(c.numerator, c.denominator) for e, c in f.terms.items()}
    _, facs = sympy.Poly.from_dict(data, *gens, domain="QQ").factor_list()
    out = []
    for g, m in facs:
        terms = {tuple(e): Fraction(int(c.p), int(c.q)) for e, c in g.as_dict().items()}
        out.append((Polynomial(ring, terms).monic(), m, True))
    out.sort(key=lambda t: str(t[0]))
    return out


def factor_polynomial(f: Polynomial):
    """Split f into ``[(factor, multiplicity, known_irreducible)]`` (monic factors).

    Constants are dropped. Multivariate factors that are neither monomial
    content nor univariate are returned whole.
    """
    ring = f.ring
    if not f or f.is_constant():
        return []
    out = []
    mono = _monomial_gcd_exponent(f)
    if any(mono):
        for i, a in enumerate(mono):
            if a:
                out.append((ring.gen(i), a, True))
        f = Polynomial(ring, {tuple(x - y for x, y in zip(e, mono)): c for e, c in f.terms.items()})
    if f.is_constant():
        return out
    used = sorted(f.support_variables())
    rational = isinstance(ring.field, RationalField)
    if len(used) == 1:
        i = used[0]
        facs = factor_univariate(_to_univariate(f, i), ring.field)
        if rational and not all(irr for _, _, irr in facs):
            return out + _factor_over_q(f)
        return out + [(_from_univariate(g, ring, i), m, irr) for g, m, irr in facs]
    if _degree_one_irreducible(f):
        return out + [(f.monic(), 1, True)]
    if rational:
        return out + _factor_over_q(f)
    return out + [(f.monic(), 1, False)]


def is_irreducible(f: Polynomial) -> bool | None:
    """True if provably irreducible, False if provably reducible, None if unknown."""
    if not f or f.is_constant():
        return False
    facs = factor_polynomial(f)
    if len(facs) == 1 and facs[0][1] == 1:
        return True if facs[0][2] else None
    return False
