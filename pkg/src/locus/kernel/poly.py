"""Sparse multivariate polynomials with exact coefficients.

A polynomial is an immutable mapping from exponent tuples to nonzero field
elements. Term order only matters for display and for Groebner computations,
so it is supplied by a :class:`MonomialOrder` at the point of use.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from ..errors import InputError
from .fields import QQ, PrimeField, RationalField

Exponent = tuple[int, ...]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """lex, grevlex, or a two-block elimination order.

    ``block`` with ``split=k`` compares the first k exponents by grevlex and
    breaks ties on the remaining ones by grevlex; any monomial involving the
    first block is larger than every monomial free of it.
    """

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise InputError(f"unknown monomial order {self.kind!r}")

    @cached_property
    def key(self):
        if self.kind == "lex":
            return tuple
        if self.kind == "grevlex":
            return _grevlex_key
        k = self.split
        return lambda e: (_grevlex_key(e[:k]), _grevlex_key(e[k:]))

    def __str__(self):
        return self.kind if self.kind != "block" else f"block({self.split})"


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elimination_order(k: int) -> MonomialOrder:
    return MonomialOrder("block", k)


class PolyRing:
    """k[x1..xn] over Q or GF(p)."""

    def __init__(self, field: RationalField | PrimeField, variables):
        variables = tuple(variables)
        for v in variables:
            if not isinstance(v, str) or not _IDENT.match(v):
                raise InputError(f"bad variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise InputError(f"duplicate variables in {variables}")
        self.field = field
        self.variables = variables
        self.nvars = len(variables)
        self.index = {v: i for i, v in enumerate(variables)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.variables == other.variables
        )

    def __hash__(self):
        return hash((self.field, self.variables))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.variables)}]"

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @property
    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, name_or_index) -> Polynomial:
        i = name_or_index if isinstance(name_or_index, int) else self.index[name_or_index]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> list[Polynomial]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exp: Exponent, coeff=1) -> Polynomial:
        c = self.field(coeff)
        return Polynomial(self, {tuple(exp): c} if c else {})

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.ring == self:
                return value
            return value.map_to(self)
        if isinstance(value, str):
            from .parse import parse_polynomial

            return parse_polynomial(value, self)
        return self.constant(value)

    def extend(self, names, front: bool = False) -> PolyRing:
        names = tuple(names)
        vs = names + self.variables if front else self.variables + names
        return PolyRing(self.field, vs)

    def fresh_names(self, base: str, count: int, taken=()) -> list[str]:
        """``count`` variable names starting with ``base`` not used in this ring."""
        used = set(self.variables) | set(taken)
        if count == 1 and base not in used:
            return [base]
        out, i = [], 1
        while len(out) < count:
            name = f"{base}{i}"
            if name not in used:
                out.append(name)
                used.add(name)
            i += 1
        return out

    def restrict(self, keep) -> PolyRing:
        keep = [v for v in self.variables if v in set(keep)]
        return PolyRing(self.field, keep)


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic protocol -------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int,)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.format()!r})"

    def __str__(self):
        return self.format()

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise InputError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring(other)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        K = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = K.add(out.get(e, K.zero), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        K = self.ring.field
        return Polynomial(self.ring, {e: K.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        K = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = K.add(out.get(e, K.zero), K.mul(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative exponent")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> Polynomial:
        K = self.ring.field
        c = K(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {e: K.mul(v, c) for e, v in self.terms.items()})

    def mul_monomial(self, exp: Exponent, c=None) -> Polynomial:
        K = self.ring.field
        out = {}
        for e, v in self.terms.items():
            out[tuple(a + b for a, b in zip(e, exp))] = v if c is None else K.mul(v, c)
        return Polynomial(self.ring, out)

    # -- inspection -----------------------------------------------------
    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = GREVLEX):
        if not self.terms:
            raise InputError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Exponent:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder = GREVLEX) -> Polynomial:
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var) -> int:
        i = var if isinstance(var, int) else self.ring.index[var]
        return max((e[i] for e in self.terms), default=-1)

    def support_variables(self) -> set[int]:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def variables_used(self) -> list[str]:
        return [self.ring.variables[i] for i in sorted(self.support_variables())]

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def coefficients_in(self, i: int) -> dict[int, Polynomial]:
        """Split as sum_k c_k * x_i^k with c_k free of x_i."""
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            parts.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: Polynomial(self.ring, t) for k, t in parts.items()}

    def derivative(self, i: int) -> Polynomial:
        K = self.ring.field
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = K.mul(c, K(e[i]))
                if d:
                    out[e[:i] + (e[i] - 1,) + e[i + 1:]] = d
        return Polynomial(self.ring, out)

    def evaluate(self, values: dict):
        """Substitute field values (by variable name) for every variable."""
        K = self.ring.field
        vals = [K(values[v]) for v in self.ring.variables]
        total = K.zero
        for e, c in self.terms.items():
            t = c
            for v, a in zip(vals, e):
                for _ in range(a):
                    t = K.mul(t, v)
            total = K.add(total, t)
        return total

    def substitute(self, i: int, value: Polynomial) -> Polynomial:
        """Replace variable i by a polynomial of the same ring."""
        out = self.ring.zero
        powers: dict[int, Polynomial] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value**k
            rest = Polynomial(self.ring, {e[:i] + (0,) + e[i + 1:]: c})
            out = out + rest * powers[k]
        return out

    def map_to(self, target: PolyRing) -> Polynomial:
        """Re-read this polynomial in a ring whose variables are a superset."""
        src = self.ring
        if target == src:
            return self
        try:
            pos = [target.index[v] for v in src.variables]
        except KeyError as exc:
            used = self.variables_used()
            missing = [v for v in used if v not in target.index]
            if missing:
                raise InputError(f"variables {missing} not in {target}") from exc
            pos = [target.index.get(v) for v in src.variables]
        K = target.field
        out = {}
        for e, c in self.terms.items():
            ne = [0] * target.nvars
            for p, a in zip(pos, e):
                if a:
                    ne[p] = a
            cc = K(c) if K != src.field else c
            if cc:
                out[tuple(ne)] = cc
        return Polynomial(target, out)

    # -- printing -------------------------------------------------------
    def format(self, order: MonomialOrder = GREVLEX) -> str:
        if not self.terms:
            return "0"
        K = self.ring.field
        names = self.ring.variables
        pieces = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(
                names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(e) if a
            )
            cs = K.format(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)


def as_ring(field, variables) -> PolyRing:
    return PolyRing(field if field is not None else QQ, variables)
