"""Fox free derivatives and Jacobians under maps to abelian group rings.

A RingMap sends each group generator to a monomial of a Laurent/group
ring (the image of an abelianization-style homomorphism); derivatives
satisfy d(uv) = du + u.dv with dg/dg = 1 and dg^-1/dg = -g^-1.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class RingMap:
    """Monomial substitution map: generator j goes to ring monomial with
    exponent vector images[j]."""

    ring: object
    images: tuple   # one exponent tuple per group generator

    def __post_init__(self):
        for v in self.images:
            if len(v) != self.ring.nvars:
                raise ValueError("image exponent vector has wrong length")

    @property
    def ngens(self):
        return len(self.images)

    def exps_of_word(self, w):
        out = [0] * self.ring.nvars
        for g, e in w.letters:
            for i, x in enumerate(self.images[g]):
                out[i] += e * x
        return self.ring.reduce_exps(tuple(out))

    def image_of_word(self, w):
        return self.ring.monomial(self.exps_of_word(w))

    def kills(self, w):
        return not any(self.exps_of_word(w))


def fox_derivative(w, gen, phi):
    """d(w)/d(gen) pushed through phi."""
    ring = phi.ring
    result = ring.zero()
    prefix_exps = (0,) * ring.nvars
    for g, e in w.letters:
        if g == gen:
            result = result + ring.monomial(prefix_exps) * ring.geom(phi.images[g], e)
        prefix_exps = ring.reduce_exps(
            tuple(p + e * x for p, x in zip(prefix_exps, phi.images[g]))
        )
    return result


def fundamental_identity_check(w, phi):
    """Whether sum_j d(w)/d(g_j) * (phi(g_j) - 1) equals phi(w) - 1."""
    ring = phi.ring
    total = ring.zero()
    for j in range(phi.ngens):
        d = fox_derivative(w, j, phi)
        if not d.is_zero():
            total = total + d * (ring.monomial(phi.images[j]) - ring.one())
    return total == phi.image_of_word(w) - ring.one()


@dataclass
class ModulePresentation:
    """coker of the relation matrix acting on ring^ngens; rows are
    relations."""

    ring: object
    ngens: int
    rows: list
    generator_labels: tuple = ()

    def nrows(self):
        return len(self.rows)


def jacobian(P, phi):
    """Fox Jacobian of a presentation under phi; entry (i, j) is the
    phi-image of d(r_i)/d(g_j).  Every relator must die under phi."""
    if phi.ngens != P.ngens:
        raise ValueError("ring map does not match the presentation")
    for idx, r in enumerate(P.relators):
        if not phi.kills(r):
            raise ValueError(
                f"relator {idx} ({r.to_text(P.generator_names)}) "
                "is not killed by the coefficient map"
            )
    rows = [
        [fox_derivative(r, j, phi) for j in range(P.ngens)]
        for r in P.relators
    ]
    return ModulePresentation(phi.ring, P.ngens, rows, tuple(P.generator_names))
