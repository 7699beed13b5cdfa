"""Buchberger's algorithm on raw term dictionaries.

Polynomials here are plain ``{exponent: coeff}`` dicts; the public wrappers
in :mod:`locus.kernel.ideal` translate to and from :class:`Polynomial`.
Pairs are processed by the normal selection strategy (smallest lcm first)
and pruned with Buchberger's product and chain criteria.
"""
import heapq

from .cancel import checkpoint


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def leading(f, key):
    e = max(f, key=key)
    return e, f[e]


def make_monic(f, K, key):
    e, c = leading(f, key)
    if c == K.one:
        return dict(f)
    inv = K.inv(c)
    return {m: K.mul(v, inv) for m, v in f.items()}


def _axpy(p, c, shift, g, K):
    """p -= c * x^shift * g, in place."""
    zero = K.zero
    for e, v in g.items():
        m = tuple(a + b for a, b in zip(e, shift))
        s = K.sub(p.get(m, zero), K.mul(c, v))
        if s:
            p[m] = s
        else:
            p.pop(m, None)


def normal_form(f, basis, K, key, full=True):
    """Remainder of ``f`` on division by the monic ``basis``.

    ``basis`` is a list of ``(lm, terms)`` pairs. With ``full=False`` only the
    leading term is reduced (top reduction), which is all Buchberger needs.
    """
    p = dict(f)
    r = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for glm, g in basis:
            if _divides(glm, lm):
                _axpy(p, c, _sub(lm, glm), g, K)
                break
        else:
            if not full:
                r.update(p)
                return r
            r[lm] = c
            del p[lm]
    return r


def _spoly(f, flm, g, glm, K):
    l = _lcm(flm, glm)
    p = {}
    sf = _sub(l, flm)
    for e, v in f.items():
        p[tuple(a + b for a, b in zip(e, sf))] = v
    _axpy(p, K.one, _sub(l, glm), g, K)
    return p


def groebner_basis(polys, K, key):
    """Reduced Groebner basis, monic, sorted by descending leading monomial."""
    G = []  # list of (lm, terms); entries may later be set to None when pruned
    pairs = []  # heap of (key(lcm), counter, i, j)
    live_pairs = set()
    counter = 0

    def add(h):
        nonlocal counter
        hlm = max(h, key=key)
        j = len(G)
        G.append((hlm, h))
        for i, entry in enumerate(G[:-1]):
            if entry is None:
                continue
            ilm = entry[0]
            if _coprime(ilm, hlm):
                continue  # product criterion
            l = _lcm(ilm, hlm)
            heapq.heappush(pairs, (key(l), counter, i, j))
            live_pairs.add((i, j))
            counter += 1

    for f in polys:
        if not f:
            continue
        h = normal_form(f, [g for g in G if g is not None], K, key)
        if h:
            h = make_monic(h, K, key)
            if len(h) == 1 and not any(next(iter(h))):
                return [{next(iter(h)): K.one}]
            add(h)

    while pairs:
        checkpoint()
        _, _, i, j = heapq.heappop(pairs)
        live_pairs.discard((i, j))
        ilm, f = G[i]
        jlm, g = G[j]
        l = _lcm(ilm, jlm)
        # chain criterion: some k with lm_k | lcm whose pairs with i and j are done
        skip = False
        for k, entry in enumerate(G):
            if k in (i, j) or entry is None:
                continue
            if _divides(entry[0], l):
                a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
                if a not in live_pairs and b not in live_pairs:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(f, ilm, g, jlm, K)
        h = normal_form(s, [e for e in G if e is not None], K, key)
        if h:
            h = make_monic(h, K, key)
            hlm = max(h, key=key)
            if not any(hlm):
                return [{hlm: K.one}]
            add(h)

    return _reduce(G, K, key)


def _reduce(G, K, key):
    elems = [e for e in G if e is not None]
    # minimal basis: drop elements whose lm is divisible by another's
    elems.sort(key=lambda t: key(t[0]))
    minimal = []
    for lm, g in elems:
        if not any(_divides(m, lm) for m, _ in minimal):
            minimal.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(minimal):
        others = [t for k, t in enumerate(minimal) if k != idx]
        tail = dict(g)
        c = tail.pop(lm)
        r = normal_form(tail, others, K, key)
        r[lm] = c
        out.append((lm, make_monic(r, K, key)))
    out.sort(key=lambda t: key(t[0]), reverse=True)
    return [g for _, g in out]


def is_constant_basis(G):
    return len(G) == 1 and all(not any(e) for e in G[0])
