"""Exact coefficient rings: integers, rationals and prime fields.

Every Laurent-polynomial ring in this package is parametrized by one of
these scalar rings.  Elements are plain Python objects (int, Fraction,
or int residues in [0, p)); the ring object supplies the arithmetic so
that polynomial code never has to branch on the coefficient type.
"""

from fractions import Fraction
from functools import lru_cache


class IntegerRing:
    name = "ZZ"
    is_field = False

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        raise TypeError(f"cannot coerce {x!r} into ZZ")

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def inv_unit(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{a} is not a unit in ZZ")
        return a

    def divexact(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{a} is not divisible by {b} in ZZ")
        return q

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "ZZ"


class RationalField:
    name = "QQ"
    is_field = True

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def inv_unit(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not a unit in QQ")
        return Fraction(1) / a

    def divexact(self, a, b):
        return a / b

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"


class PrimeField:
    """F_p with residues stored as ints in [0, p).  Requires p < 2**61."""

    is_field = True

    def __init__(self, p):
        if p < 2 or p >= 1 << 61:
            raise ValueError(f"prime field characteristic out of range: {p}")
        for d in range(2, min(p, 1 << 20)):
            if d * d > p:
                break
            if p % d == 0:
                raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def is_unit(self, a):
        return a % self.p != 0

    def inv_unit(self, a):
        return pow(a, -1, self.p)

    def divexact(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def to_str(self, a):
        return str(a % self.p)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


ZZ = IntegerRing()
QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)
