"""Finitely presented groups, abelianization, and cyclic epimorphisms.

The exponent-sum matrix convention used across the package: rows are
relators, columns are generators.  Abelianizations come back in the
canonical form Z^rank (+) Z/d_1 (+) ... with d_1 | d_2 | ..., together
with the matrix of generator images in those coordinates.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd

from . import intmat
from .words import Word, parse_word


class PresentationError(ValueError):
    pass


class GroupPresentation:
    def __init__(self, generator_names, relators):
        names = tuple(generator_names)
        if len(set(names)) != len(names):
            raise PresentationError("generator names must be distinct")
        for n in names:
            if not n:
                raise PresentationError("generator names must be nonempty")
        self.generator_names = names
        self.relators = tuple(relators)
        for r in self.relators:
            if r.max_generator() >= len(names):
                raise PresentationError(
                    f"relator {r!r} uses a generator index out of range"
                )

    @property
    def ngens(self):
        return len(self.generator_names)

    def exponent_matrix(self):
        """Rows = relators, columns = generators."""
        return [r.exponent_sums(self.ngens) for r in self.relators]

    def with_relators(self, extra):
        return GroupPresentation(self.generator_names, self.relators + tuple(extra))

    def word(self, text):
        return parse_word(text, self.generator_names)

    def __repr__(self):
        rels = ", ".join(r.to_text(self.generator_names) for r in self.relators)
        return f"<{','.join(self.generator_names)} | {rels}>"

    def __eq__(self, other):
        return (
            isinstance(other, GroupPresentation)
            and self.generator_names == other.generator_names
            and self.relators == other.relators
        )


def presentation(gens, relator_texts):
    names = [g.strip() for g in gens.split(",")] if gens.strip() else []
    rels = [parse_word(t, names) for t in relator_texts]
    return GroupPresentation(names, rels)


@dataclass(frozen=True)
class AbelianStructure:
    """H in canonical coordinates Z^free_rank (+) Z/d_1 (+) ...; the
    generator_images matrix has one column per group generator, rows are
    first the free then the torsion coordinates."""

    free_rank: int
    torsion: tuple
    generator_images: tuple   # rows of ints, len == free_rank + len(torsion)

    @property
    def ncoords(self):
        return self.free_rank + len(self.torsion)

    def group_name(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def reduce_coords(self, coords):
        out = list(coords)
        for i, d in enumerate(self.torsion):
            out[self.free_rank + i] %= d
        return out

    def image_of_exponents(self, exps):
        """Canonical coordinates of a word given its exponent-sum vector."""
        rows = self.generator_images
        coords = [sum(row[j] * exps[j] for j in range(len(exps))) for row in rows]
        return self.reduce_coords(coords)

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion


def abelianize(P):
    """Cokernel of the relator exponent-sum matrix in canonical invariant
    factor form, via certified Smith normal form."""
    g = P.ngens
    E = P.exponent_matrix()
    M = intmat.transpose(E) if E else [[0] * 0 for _ in range(g)]
    if not E:
        M = [[] for _ in range(g)]
    snf = intmat.smith_normal_form(M)
    if not snf.verify(M):
        raise ArithmeticError("Smith normal form certification failed")
    diag = snf.diag + [0] * (g - len(snf.diag))
    free_idx = [i for i in range(g) if diag[i] == 0]
    tors_idx = [i for i in range(g) if diag[i] >= 2]
    torsion = tuple(diag[i] for i in tors_idx)
    rows = []
    for i in free_idx:
        rows.append(tuple(snf.U[i]))
    for i in tors_idx:
        d = diag[i]
        rows.append(tuple(x % d for x in snf.U[i]))
    return AbelianStructure(len(free_idx), torsion, tuple(rows))


def abelianization_with_transform(P):
    """Like abelianize but also returns the full unimodular coordinate
    matrix U and kept coordinate indices, for callers that need to push
    maps through the quotient (deck actions)."""
    g = P.ngens
    E = P.exponent_matrix()
    M = intmat.transpose(E) if E else [[] for _ in range(g)]
    snf = intmat.smith_normal_form(M)
    diag = snf.diag + [0] * (g - len(snf.diag))
    free_idx = [i for i in range(g) if diag[i] == 0]
    tors_idx = [i for i in range(g) if diag[i] >= 2]
    torsion = tuple(diag[i] for i in tors_idx)
    rows = [tuple(snf.U[i]) for i in free_idx]
    rows += [tuple(x % diag[i] for x in snf.U[i]) for i in tors_idx]
    ab = AbelianStructure(len(free_idx), torsion, tuple(rows))
    return ab, snf, free_idx + tors_idx


def epimorphisms_to_cyclic(P, ell, height=None):
    """All epimorphisms onto Z/ell (ell >= 2) or onto Z (ell == 0, up to
    sign, with |coefficients| <= height on the canonical free part).

    Each epimorphism is returned as the tuple of generator images.
    """
    ab = abelianize(P)
    g = P.ngens
    if ell < 0:
        raise ValueError("ell must be >= 0")
    if ell == 0:
        if height is None:
            raise ValueError("an enumeration height is required when ell == 0")
        out = []
        r = ab.free_rank
        if r == 0:
            return []
        for vec in product(range(-height, height + 1), repeat=r):
            if not any(vec):
                continue
            first = next(x for x in vec if x)
            if first < 0:
                continue
            if not intmat.primitive_vector(list(vec)):
                continue
            images = tuple(
                sum(vec[i] * ab.generator_images[i][j] for i in range(r))
                for j in range(g)
            )
            out.append(images)
        return sorted(out)
    out = set()
    coord_choices = []
    for i in range(ab.ncoords):
        if i < ab.free_rank:
            coord_choices.append(range(ell))
        else:
            d = ab.torsion[i - ab.free_rank]
            step = ell // gcd(d, ell)
            coord_choices.append(range(0, ell, step))
    for theta in product(*coord_choices):
        images = tuple(
            sum(theta[i] * ab.generator_images[i][j] for i in range(ab.ncoords)) % ell
            for j in range(g)
        )
        g0 = ell
        for v in images:
            g0 = gcd(g0, v)
        if g0 == 1:
            out.add(images)
    return sorted(out)


def parse_presentation_file(text):
    """Parse the presentation DSL: a ``gens: a,b,c`` line followed by
    ``rel: <word>`` lines; ``#`` starts a comment.  Errors carry line
    numbers."""
    names = None
    rel_texts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            if names is not None:
                raise PresentationError(f"line {lineno}: duplicate gens line")
            body = line[len("gens:"):].strip()
            names = [g.strip() for g in body.split(",")] if body else []
        elif line.startswith("rel:"):
            if names is None:
                raise PresentationError(f"line {lineno}: rel before gens")
            rel_texts.append((lineno, line[len("rel:"):].strip()))
        else:
            raise PresentationError(f"line {lineno}: expected 'gens:' or 'rel:'")
    if names is None:
        raise PresentationError("missing gens line")
    rels = []
    for lineno, t in rel_texts:
        try:
            rels.append(parse_word(t, names))
        except ValueError as e:
            raise PresentationError(f"line {lineno}: {e}") from e
    return GroupPresentation(names, rels)
