"""Sparse exact Laurent polynomial arithmetic.

A ring here is ZZ/QQ/GF(p)[z_0^+-, ..., z_{n-1}^+-] optionally with some
variables declared torsion of order k (z_i^k = 1), which models integral
group rings of finitely generated abelian groups.  Terms are stored as a
map from exponent vectors to nonzero coefficients; torsion exponents are
kept in [0, k).  Values are immutable once built.
"""

from .scalars import ZZ, QQ, GF  # noqa: F401  (re-exported for callers)


class LaurentRing:
    """Descriptor for a Laurent/group-ring; builds and canonicalizes elements.

    torsion[i] == 0 means z_i is a free (honest Laurent) variable;
    torsion[i] == k >= 2 means z_i generates a Z/k factor.
    """

    def __init__(self, scalars, names, torsion=None):
        self.scalars = scalars
        self.names = tuple(names)
        self.nvars = len(self.names)
        if torsion is None:
            torsion = (0,) * self.nvars
        self.torsion = tuple(torsion)
        if len(self.torsion) != self.nvars:
            raise ValueError("torsion list does not match variable count")
        for k in self.torsion:
            if k != 0 and k < 2:
                raise ValueError(f"torsion order must be 0 or >= 2, got {k}")

    @property
    def is_torsion_free(self):
        return all(k == 0 for k in self.torsion)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentRing)
            and self.scalars == other.scalars
            and self.names == other.names
            and self.torsion == other.torsion
        )

    def __hash__(self):
        return hash((self.scalars.name, self.names, self.torsion))

    def __repr__(self):
        vs = ", ".join(
            n if k == 0 else f"{n}(order {k})"
            for n, k in zip(self.names, self.torsion)
        )
        return f"LaurentRing({self.scalars!r}; {vs})"

    def reduce_exps(self, exps):
        return tuple(
            e if k == 0 else e % k for e, k in zip(exps, self.torsion)
        )

    def from_terms(self, terms):
        sc = self.scalars
        canon = {}
        for exps, coeff in terms.items():
            if len(exps) != self.nvars:
                raise ValueError("exponent vector has wrong length")
            e = self.reduce_exps(exps)
            c = sc.add(canon.get(e, sc.coerce(0)), sc.coerce(coeff))
            if sc.is_zero(c):
                canon.pop(e, None)
            else:
                canon[e] = c
        return LaurentPoly(self, canon)

    def zero(self):
        return LaurentPoly(self, {})

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        return self.from_terms({(0,) * self.nvars: n})

    def monomial(self, exps, coeff=1):
        return self.from_terms({tuple(exps): coeff})

    def gen(self, i):
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(exps)

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def geom(self, exps, e):
        """Sum z^(0..e-1) of the monomial z = z^exps; for e < 0 the value
        -(z^e + ... + z^-1).  Satisfies geom(z, e) * (z - 1) = z^e - 1."""
        exps = tuple(exps)
        if e >= 0:
            rng = range(e)
            sign = 1
        else:
            rng = range(e, 0)
            sign = -1
        terms = {}
        for i in rng:
            key = self.reduce_exps(tuple(x * i for x in exps))
            terms[key] = terms.get(key, 0) + sign
        return self.from_terms(terms)


class LaurentPoly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        # `terms` is assumed canonical; use ring.from_terms to build safely.
        self.ring = ring
        self.terms = terms
        self._hash = None

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.ring.nvars: self.ring.scalars.coerce(1)}

    def is_monomial_unit(self):
        if len(self.terms) != 1:
            return False
        coeff = next(iter(self.terms.values()))
        return self.ring.scalars.is_unit(coeff)

    def constant_value(self):
        """Coefficient of the identity monomial (the whole value if constant)."""
        if not self.terms:
            return self.ring.scalars.coerce(0)
        if len(self.terms) == 1:
            (exps, coeff), = self.terms.items()
            if all(e == 0 for e in exps):
                return coeff
        raise ValueError(f"{self} is not a constant")

    def _check(self, other):
        if isinstance(other, int):
            return self.ring.from_int(other)
        if not isinstance(other, LaurentPoly) or other.ring != self.ring:
            raise TypeError(f"cannot combine {self!r} with {other!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        sc = self.ring.scalars
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = sc.add(terms.get(e, sc.coerce(0)), c)
            if sc.is_zero(s):
                terms.pop(e, None)
            else:
                terms[e] = s
        return LaurentPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        sc = self.ring.scalars
        return LaurentPoly(self.ring, {e: sc.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + self._check(other)

    def __mul__(self, other):
        other = self._check(other)
        ring = self.ring
        sc = ring.scalars
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = ring.reduce_exps(tuple(x + y for x, y in zip(e1, e2)))
                c = sc.add(terms.get(e, sc.coerce(0)), sc.mul(c1, c2))
                if sc.is_zero(c):
                    terms.pop(e, None)
                else:
                    terms[e] = c
        return LaurentPoly(ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def unit_inverse(self):
        """Inverse of a unit monomial c*z^e with c a scalar unit."""
        if len(self.terms) != 1:
            raise ZeroDivisionError(f"{self} is not a monomial unit")
        (exps, coeff), = self.terms.items()
        sc = self.ring.scalars
        return self.ring.monomial(
            tuple(-e for e in exps), sc.inv_unit(coeff)
        )

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        return sorted(self.terms.items())

    def var_degrees(self, i):
        """(min, max) exponent of variable i, or None if zero polynomial."""
        if not self.terms:
            return None
        exps = [e[i] for e in self.terms]
        return min(exps), max(exps)

    def evaluate(self, values):
        """Total evaluation at scalar values (one per variable)."""
        if len(values) != self.ring.nvars:
            raise ValueError("wrong number of values")
        sc = self.ring.scalars
        vals = [sc.coerce(x) for x in values]
        total = sc.coerce(0)
        for exps, coeff in self.terms.items():
            v = coeff
            for e, x in zip(exps, vals):
                base = x if e > 0 else sc.inv_unit(x) if e < 0 else None
                for _ in range(abs(e)):
                    v = sc.mul(v, base)
            total = sc.add(total, v)
        return total

    def __str__(self):
        return poly_to_str(self)

    def __repr__(self):
        return f"<{poly_to_str(self)}>"


def poly_to_str(p):
    """Canonical text form: terms sorted lexicographically by exponent
    vector, signed decimal coefficients, e.g. ``3*x^-1*y^2 - 1``."""
    if not p.terms:
        return "0"
    sc = p.ring.scalars
    pieces = []
    for exps, coeff in p.sorted_terms():
        body = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(p.ring.names, exps)
            if e != 0
        )
        cs = sc.to_str(coeff)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if body and cs == "1":
            text = body
        elif body:
            text = f"{cs}*{body}"
        else:
            text = cs
        if not pieces:
            pieces.append(f"-{text}" if neg else text)
        else:
            pieces.append(f"- {text}" if neg else f"+ {text}")
    return " ".join(pieces)


def change_scalars(p, new_scalars):
    """Map coefficients into another scalar ring (e.g. ZZ -> GF(3))."""
    ring = LaurentRing(new_scalars, p.ring.names, p.ring.torsion)
    return ring.from_terms(dict(p.terms))


def substitute_monomial(p, images, target):
    """Ring homomorphism sending variable i to the target monomial with
    exponent vector images[i].  For torsion source variables the image
    must have compatible order."""
    ring = p.ring
    if len(images) != ring.nvars:
        raise ValueError(
            f"expected {ring.nvars} image vectors, got {len(images)}"
        )
    images = [tuple(v) for v in images]
    for i, v in enumerate(images):
        if len(v) != target.nvars:
            raise ValueError(f"image vector {i} has wrong length")
        k = ring.torsion[i]
        if k:
            scaled = target.reduce_exps(tuple(k * x for x in v))
            if any(scaled):
                raise ValueError(
                    f"image of torsion variable {ring.names[i]} has incompatible order"
                )
    terms = {}
    for exps, coeff in p.terms.items():
        img = [0] * target.nvars
        for e, v in zip(exps, images):
            if e:
                for j, x in enumerate(v):
                    img[j] += e * x
        key = target.reduce_exps(tuple(img))
        terms[key] = terms.get(key, 0) + coeff
    out = {}
    sc = target.scalars
    for k2, c in terms.items():
        c2 = sc.coerce(c)
        if not sc.is_zero(c2):
            out[k2] = c2
    return LaurentPoly(target, out)


def divexact(a, b):
    """Exact division in a torsion-free Laurent ring; raises if b does not
    divide a.  Leading terms are taken in lexicographic order."""
    ring = a.ring
    if ring != b.ring:
        raise TypeError("operands live in different rings")
    if not ring.is_torsion_free:
        raise ValueError("exact division requires a torsion-free ring")
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return ring.zero()
    sc = ring.scalars
    bl = max(b.terms)
    blc = b.terms[bl]
    rem = dict(a.terms)
    quo = {}
    # If divisibility holds the loop runs once per quotient term.
    limit = 4 * (len(a.terms) + len(b.terms)) ** 2 + 64
    for _ in range(limit):
        if not rem:
            return LaurentPoly(ring, quo)
        al = max(rem)
        qe = tuple(x - y for x, y in zip(al, bl))
        qc = sc.divexact(rem[al], blc)
        quo[qe] = qc
        for be, bc in b.terms.items():
            e = tuple(x + y for x, y in zip(qe, be))
            c = sc.add(rem.get(e, sc.coerce(0)), sc.neg(sc.mul(qc, bc)))
            if sc.is_zero(c):
                rem.pop(e, None)
            else:
                rem[e] = c
    raise ArithmeticError(f"({a}) is not divisible by ({b})")


def eval_var_at_one(p, i):
    """Substitute z_i = 1 (stay in the same ring, variable kept with
    exponent 0)."""
    ring = p.ring
    terms = {}
    sc = ring.scalars
    for exps, coeff in p.terms.items():
        e = list(exps)
        e[i] = 0
        e = tuple(e)
        c = sc.add(terms.get(e, sc.coerce(0)), coeff)
        if sc.is_zero(c):
            terms.pop(e, None)
        else:
            terms[e] = c
    return LaurentPoly(ring, terms)


def divide_by_var_minus_one(p, i):
    """Quotient q with p = q*(z_i - 1) + p|_{z_i=1}, valid in any
    torsion-free Laurent ring.  Closed form: sum of coeff * geom(z_i, e)
    over the terms coeff * z^e of p."""
    ring = p.ring
    if ring.torsion[i]:
        raise ValueError("variable is torsion")
    sc = ring.scalars
    out = {}
    unit = [0] * ring.nvars
    unit[i] = 1
    for exps, coeff in p.terms.items():
        e = exps[i]
        if e == 0:
            continue
        base = list(exps)
        base[i] = 0
        rng = range(e) if e > 0 else range(e, 0)
        sign = 1 if e > 0 else -1
        for j in rng:
            key = list(base)
            key[i] = j
            key = tuple(key)
            c = sc.add(out.get(key, sc.coerce(0)),
                       sc.mul(coeff, sc.coerce(sign)))
            if sc.is_zero(c):
                out.pop(key, None)
            else:
                out[key] = c
    return LaurentPoly(ring, out)


def coefficient_of_var_power(p, i, d):
    """Coefficient of z_i^d, returned as a polynomial with z_i-exponent 0."""
    ring = p.ring
    terms = {}
    for exps, coeff in p.terms.items():
        if exps[i] == d:
            e = list(exps)
            e[i] = 0
            terms[tuple(e)] = coeff
    return LaurentPoly(ring, terms)


def normal_form_mod(p, m, c, var=0):
    """Normal form of p modulo the ideal (m, c) where m is monic in the
    single variable ``var`` and c >= 1 is an integer modulus.

    p is first multiplied by the least power of the variable clearing its
    negative exponents (a unit, so ideal membership is unchanged); the
    result is the remainder of division by m with coefficients reduced
    into [0, c).  The output is zero iff p lies in the ideal; this needs
    the constant term of m to be invertible mod c, which is checked.
    """
    ring = p.ring
    if m.ring != ring:
        raise TypeError("divisor lives in a different ring")
    if c < 1:
        raise ValueError(f"modulus must be >= 1, got {c}")
    if m.is_zero():
        raise ValueError("divisor is zero")
    for exps in m.terms:
        for j, e in enumerate(exps):
            if j != var and e != 0:
                raise ValueError("divisor must involve only the division variable")
            if j == var and e < 0:
                raise ValueError("divisor must be an ordinary polynomial")
    lo, deg = m.var_degrees(var)
    lead = coefficient_of_var_power(m, var, deg).constant_value()
    if lead != 1:
        raise ValueError("divisor is not monic")
    const = coefficient_of_var_power(m, var, 0).constant_value()
    from math import gcd
    if gcd(int(const), c) != 1:
        raise ValueError(
            "constant term of divisor is not invertible modulo the modulus"
        )
    dmin = p.var_degrees(var)
    if dmin is not None and dmin[0] < 0:
        shift = [0] * ring.nvars
        shift[var] = -dmin[0]
        p = p * ring.monomial(shift)
    # division by the monic divisor, top slice at a time
    while True:
        rng = p.var_degrees(var)
        if rng is None or rng[1] < deg:
            break
        d = rng[1]
        top = coefficient_of_var_power(p, var, d)
        shift = [0] * ring.nvars
        shift[var] = d - deg
        p = p - top * ring.monomial(shift) * m
    # coefficient reduction into [0, c)
    sc = ring.scalars
    terms = {}
    for exps, coeff in p.terms.items():
        r = int(coeff) % c
        if r:
            terms[exps] = sc.coerce(r)
    return LaurentPoly(ring, terms)


def gk_ring(k, scalars=ZZ):
    """Group ring of Z (+) Z/k with free variable t and torsion variable a."""
    if k < 2:
        raise ValueError(f"torsion order must be >= 2, got {k}")
    return LaurentRing(scalars, ("t", "a"), (0, k))


def gk_nu(ring, n):
    """nu_n = 1 + a + ... + a^(n-1) in a gk_ring."""
    return ring.geom((0, 1), n)


def gk_rho(ring):
    """rho = nu_k, the norm element of the torsion factor."""
    return gk_nu(ring, ring.torsion[1])
