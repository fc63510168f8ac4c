"""Homology of abelian covers.

Infinite covers: the derived (Alexander-type) module of a presentation
is the Jacobian cokernel; the absolute first homology of the cover is
the kernel of the map sending a generator class to (image monomial - 1).
That kernel is presented explicitly by rewriting Jacobian rows against a
free basis built from generators that hit a basis of the deck group,
plus the Koszul syzygies between the elements z_i - 1.

Finite cyclic covers: Reidemeister-Schreier rewriting along the cyclic
coset space {0, ..., l-1} with a breadth-first (hence prefix-closed)
transversal, plus the deck action induced by conjugation.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from . import intmat
from .fox import ModulePresentation, RingMap, jacobian
from .laurent import (
    LaurentRing,
    divide_by_var_minus_one,
    eval_var_at_one,
)
from .presentations import GroupPresentation, abelianization_with_transform
from .words import Word

_DEFAULT_NAMES = ("x", "y", "z", "u", "v", "w")


def _target_names(beta):
    if beta == 1:
        return ("t",)
    if beta <= len(_DEFAULT_NAMES):
        return _DEFAULT_NAMES[:beta]
    return tuple(f"x{i+1}" for i in range(beta))


@dataclass
class CrowellData:
    """Presentation of the augmentation kernel H_1 of the induced cover."""

    module: ModulePresentation
    basis_gens: tuple        # generator indices whose images form a basis
    tietze_words: tuple      # words adjoined to realize a basis (may be empty)
    coordinate_change: tuple  # unimodular matrix applied to the deck group


def _koszul_coordinates(c, ring):
    """Express a cycle sum(c_i * (z_i - 1)) == 0 as a combination of the
    Koszul generators sigma_il = (z_l - 1) e_i - (z_i - 1) e_l."""
    beta = len(c)
    c = list(c)
    alpha = {}
    for i in range(beta):
        zi_minus_1 = ring.gen(i) - ring.one()
        for l in range(i + 1, beta):
            u = divide_by_var_minus_one(c[l], i)
            if not u.is_zero():
                rem = eval_var_at_one(c[l], i)
                zl_minus_1 = ring.gen(l) - ring.one()
                c[i] = c[i] + u * zl_minus_1
                c[l] = rem
                key = (i, l)
                alpha[key] = alpha.get(key, ring.zero()) - u
        if not c[i].is_zero():
            raise ArithmeticError("cycle did not reduce; row is not a syzygy")
    return alpha


def crowell_kernel_presentation(P, f_matrix, scalars, names=None):
    """Presentation of H_1 of the cover of the presented group induced by
    the epimorphism with integer image matrix f_matrix (one column per
    generator, one row per free deck coordinate).

    The module lives over the torsion-free Laurent ring in beta =
    len(f_matrix) variables over `scalars`.
    """
    beta = len(f_matrix)
    g = P.ngens
    if any(len(row) != g for row in f_matrix):
        raise ValueError("image matrix does not match the generator count")
    snf = intmat.smith_normal_form([list(r) for r in f_matrix])
    if snf.invariant_factors != [1] * beta:
        raise ValueError("the map is not onto the free deck group")
    if names is None:
        names = _target_names(beta)
    ring = LaurentRing(scalars, names)

    # pick generators mapping to a basis, extending the presentation if
    # no subset works
    cols = [tuple(f_matrix[i][j] for i in range(beta)) for j in range(g)]
    basis = None
    for combo in combinations(range(g), beta):
        B = [[cols[j][i] for j in combo] for i in range(beta)]
        if abs(intmat.det_int(B)) == 1:
            basis = combo
            break
    tietze_words = []
    work = P
    F = [list(row) for row in f_matrix]
    if basis is None:
        Ft = intmat.transpose(F)
        for i in range(beta):
            e = [0] * beta
            e[i] = 1
            sol = intmat.solve_int(Ft, e)
            if sol is None:
                raise ArithmeticError("onto map admits no integer section")
            word = Word(tuple((j, sol[j]) for j in range(g) if sol[j]))
            tietze_words.append(word)
        new_names = list(P.generator_names)
        rels = list(P.relators)
        for i, word in enumerate(tietze_words):
            idx = len(new_names)
            new_names.append(f"aux{i}")
            rels.append(Word(((idx, -1),)) * word)
        # image columns for the new generators
        for i, word in enumerate(tietze_words):
            col = [0] * beta
            for j, e in enumerate(word.exponent_sums(g)):
                for r in range(beta):
                    col[r] += e * f_matrix[r][j]
            for r in range(beta):
                F[r].append(col[r])
        work = GroupPresentation(new_names, rels)
        basis = tuple(range(g, g + beta))
        g = work.ngens

    # change deck coordinates so the basis generators hit the standard basis
    B = [[F[i][j] for j in basis] for i in range(beta)]
    Q = intmat.invert_unimodular(B)
    Fstd = intmat.matmul(Q, F)
    phi = RingMap(ring, tuple(tuple(Fstd[i][j] for i in range(beta)) for j in range(g)))

    jac = jacobian(work, phi)
    non_basis = [j for j in range(g) if j not in basis]

    # telescoped coefficients: m_j - 1 = sum_i A[i][j] * (z_i - 1)
    A = {}
    for j in non_basis:
        v = phi.images[j]
        prefix = [0] * beta
        for i in range(beta):
            coeff = ring.monomial(tuple(prefix)) * ring.geom(
                tuple(0 if r != i else 1 for r in range(beta)), v[i]
            )
            A[(i, j)] = coeff
            prefix[i] = v[i]

    pairs = list(combinations(range(beta), 2))
    labels = [f"s[{names[i]},{names[l]}]" for i, l in pairs]
    labels += [f"f[{work.generator_names[j]}]" for j in non_basis]
    cols_out = len(pairs) + len(non_basis)

    rows_out = []
    for row in jac.rows:
        rem = []
        for pos, i in enumerate(basis):
            c = row[i]
            for j in non_basis:
                if not row[j].is_zero() and not A[(pos, j)].is_zero():
                    c = c + row[j] * A[(pos, j)]
            rem.append(c)
        alpha = _koszul_coordinates(rem, ring)
        out = [alpha.get(p, ring.zero()) for p in pairs]
        out += [row[j] for j in non_basis]
        rows_out.append(out)

    # Koszul relations among the sigma generators (only when beta >= 3)
    for (i, l, s) in combinations(range(beta), 3):
        rel = [ring.zero()] * cols_out
        rel[pairs.index((i, l))] = ring.gen(s) - ring.one()
        rel[pairs.index((i, s))] = -(ring.gen(l) - ring.one())
        rel[pairs.index((l, s))] = ring.gen(i) - ring.one()
        rows_out.append(rel)

    module = ModulePresentation(ring, cols_out, rows_out, tuple(labels))
    return CrowellData(module, tuple(basis), tuple(tietze_words), tuple(map(tuple, Q)))


def infinite_cyclic_cover_homology(P, f_values, scalars):
    """(free rank, nontrivial invariant factors) of H_1 of the infinite
    cyclic cover attached to the epimorphism with generator images
    f_values, with coefficients in the field `scalars`."""
    from .polymat import cokernel_pid

    if not scalars.is_field:
        raise ValueError("coefficients must be a field")
    g = 0
    for v in f_values:
        g = gcd(g, v)
    if g != 1:
        raise ValueError("the map is not onto Z")
    data = crowell_kernel_presentation(P, [list(f_values)], scalars)
    module = data.module
    return cokernel_pid(module.rows, module.ngens, module.ring)


@dataclass
class CoverPresentation:
    presentation: GroupPresentation
    index: int
    deck_images: tuple        # Word in cover generators, per cover generator
    schreier_labels: tuple    # (coset, base generator name) per cover generator

    def schreier_generator_count(self):
        return self.presentation.ngens


def _emit(word, start, values, ell, edge_to_gen):
    """Rewrite a word lying in the kernel as a word in Schreier
    generators, starting at the given coset."""
    out = []
    c = start
    for g, e in word.letters:
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            if step == 1:
                gen = edge_to_gen[(c, g)]
                if gen is not None:
                    out.append((gen, 1))
                c = (c + values[g]) % ell
            else:
                c = (c - values[g]) % ell
                gen = edge_to_gen[(c, g)]
                if gen is not None:
                    out.append((gen, -1))
    if c != start:
        raise ArithmeticError("word does not lie in the kernel")
    return Word(tuple(out))


def rs_cover(P, f_values, ell):
    """Reidemeister-Schreier presentation of the kernel of the map onto
    Z/ell with the given generator images, together with the deck action
    of the canonical coset translation."""
    if ell < 2:
        raise ValueError("the cover index must be >= 2")
    values = [v % ell for v in f_values]
    if len(values) != P.ngens:
        raise ValueError("image list does not match the generator count")
    g0 = ell
    for v in values:
        g0 = gcd(g0, v)
    if g0 != 1:
        raise ValueError("the map is not onto Z/ell")

    # BFS transversal over moves +f(g_j); prefix-closed by construction
    parent = {0: None}
    order = [0]
    queue = [0]
    while queue:
        c = queue.pop(0)
        for j in range(P.ngens):
            nxt = (c + values[j]) % ell
            if nxt not in parent:
                parent[nxt] = (c, j)
                order.append(nxt)
                queue.append(nxt)
    if len(order) != ell:
        raise ArithmeticError("transversal construction failed")
    tree_edges = {parent[v] for v in parent if parent[v] is not None}

    edge_to_gen = {}
    names = []
    labels = []
    for v in range(ell):
        for j in range(P.ngens):
            if (v, j) in tree_edges:
                edge_to_gen[(v, j)] = None
            else:
                edge_to_gen[(v, j)] = len(names)
                names.append(f"c{v}_{P.generator_names[j]}")
                labels.append((v, P.generator_names[j]))

    relators = []
    for v in range(ell):
        for r in P.relators:
            relators.append(_emit(r, v, values, ell, edge_to_gen))
    cover = GroupPresentation(names, relators)

    # deck generator: a word tau with image 1 mod ell
    coeffs = _combination_for_one(values, ell)
    tau = Word(tuple((j, coeffs[j]) for j in range(P.ngens) if coeffs[j]))
    deck = []
    for idx, (v, j) in enumerate(
        (v, j) for v in range(ell) for j in range(P.ngens)
        if edge_to_gen[(v, j)] is not None
    ):
        w_v = _transversal_word(v, parent)
        w_u = _transversal_word((v + values[j]) % ell, parent)
        s_word = w_v * Word(((j, 1),)) * w_u.inverse()
        conj = tau * s_word * tau.inverse()
        deck.append(_emit(conj, 0, values, ell, edge_to_gen))
    return CoverPresentation(cover, ell, tuple(deck), tuple(labels))


def _transversal_word(v, parent):
    letters = []
    while parent[v] is not None:
        c, j = parent[v]
        letters.append((j, 1))
        v = c
    return Word(tuple(reversed(letters)))


def _combination_for_one(values, ell):
    """Integer coefficients c with sum c_j * values[j] == 1 (mod ell).

    Requires gcd(values, ell) == 1; then gcd(values) itself is a unit
    mod ell, so an iterated extended gcd plus one modular inversion
    suffices."""
    coeffs = [0] * len(values)
    g = 0
    for j, v in enumerate(values):
        if v == 0:
            continue
        if g == 0:
            g = v
            coeffs = [0] * len(values)
            coeffs[j] = 1
        else:
            s, t, g = _xgcd(g, v)
            coeffs = [s * c for c in coeffs]
            coeffs[j] += t
        if g == 1:
            break
    if g == 0 or gcd(g, ell) != 1:
        raise ArithmeticError("no combination equals 1 mod ell")
    inv = pow(g % ell, -1, ell)
    return [c * inv % ell for c in coeffs]


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return x0, y0, a


def cover_h1(C):
    """Abelianization of a cover presentation plus the induced deck
    action matrix in the canonical coordinates (free rows first)."""
    ab, snf, kept = abelianization_with_transform(C.presentation)
    g = C.presentation.ngens
    D = [[0] * g for _ in range(g)]
    for j, w in enumerate(C.deck_images):
        for i, e in enumerate(w.exponent_sums(g)):
            D[i][j] = e
    full = intmat.matmul(intmat.matmul(snf.U, D), snf.Uinv)
    rows = []
    for pos, i in enumerate(kept):
        row = [full[i][j] for j in kept]
        if pos >= ab.free_rank:
            d = ab.torsion[pos - ab.free_rank]
            row = [x % d for x in row]
        rows.append(tuple(row))
    return ab, tuple(rows)
