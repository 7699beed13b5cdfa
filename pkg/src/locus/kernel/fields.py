"""Exact coefficient fields: the rationals and prime fields GF(p)."""
from fractions import Fraction

from ..errors import InputError

MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """Q with arbitrary-precision ``Fraction`` coefficients."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise InputError(f"cannot coerce {value!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def format(self, c) -> str:
        return str(c)

    @property
    def tag(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime p < 2**31; elements are ints reduced into [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p >= MAX_PRIME or not is_prime(p):
            raise InputError(f"GF(p) needs a prime p < 2^31, got {p!r}")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def __call__(self, value) -> int:
        p = self.p
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise InputError(f"{value} has no image in GF({p})")
            return value.numerator * pow(value.denominator, -1, p) % p
        if isinstance(value, str):
            return self(Fraction(value))
        raise InputError(f"cannot coerce {value!r} into GF({p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def format(self, c) -> str:
        # centred representatives read better: GF(5) prints 4 as -1
        return str(c - self.p if c > self.p // 2 else c)

    @property
    def tag(self):
        return {"Fp": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag) -> RationalField | PrimeField:
    if tag in ("Q", "QQ"):
        return QQ
    if isinstance(tag, dict) and set(tag) == {"Fp"}:
        return PrimeField(tag["Fp"])
    raise InputError(f"unknown field tag {tag!r}")
