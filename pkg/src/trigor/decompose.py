"""Direct-sum structure: summand stripping, membership in add(C), isomorphism
testing, and Krull-Schmidt decomposition.

The workhorse is a pairing argument: for an indecomposable module X with
local endomorphism ring, X is a direct summand of Y exactly when some pair
(f, g) drawn from bases of Hom(X, Y) and Hom(Y, X) has g o f invertible.
This is exact over every field and needs no search beyond the finitely many
basis pairs, so summand stripping and add(C) membership are fully certified.

Isomorphism testing is exact in both directions over a finite field (the hom
space is searched exhaustively when small enough).  Over the rationals a
negative answer comes from randomized probing of the invertible locus; the
callers that need soundness only ever rely on positive answers, which carry
an explicit invertible witness.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Sequence, Tuple

from .linalg import Matrix, PrimeField
from .module import Module, Morphism, ModuleError, hom_basis, direct_sum

DEFAULT_EXHAUSTIVE_LIMIT = 4096
DEFAULT_RANDOM_TRIES = 64


@dataclass
class SummandSystem:
    """An internal direct-sum decomposition of a fixed module Y.

    parts[i] = (X, mono, epi) with epi_i o mono_i = id, epi_i o mono_j = 0,
    and sum_i mono_i o epi_i = id_Y.
    """

    total: Module
    parts: List[Tuple[Module, Morphism, Morphism]]

    def check(self) -> bool:
        idY = Morphism.identity(self.total)
        acc = Morphism.zero_map(self.total, self.total)
        for i, (X, mono, epi) in enumerate(self.parts):
            if not epi.compose(mono).sub(Morphism.identity(X)).is_zero():
                return False
            for j, (_, mono2, _) in enumerate(self.parts):
                if i != j and not self.parts[i][2].compose(mono2).is_zero():
                    return False
            acc = acc.add(mono.compose(epi))
        return acc.sub(idY).is_zero()


def _split_off(Y: Module, f: Morphism, u: Morphism) -> Tuple[Module, Morphism, Morphism]:
    """Given a section f: X -> Y and retraction u with u o f = id_X, return
    the complement (K, mono, epi) with mono o epi = id_Y - f o u."""
    K, incl = u.kernel()
    rest = Morphism.identity(Y).sub(f.compose(u))
    proj_mats = []
    for v in range(Y.algebra.n_vertices):
        sol = incl.mats[v].solve_matrix(rest.mats[v])
        if sol is None:
            raise ModuleError("splitting arithmetic failed")
        proj_mats.append(sol)
    return K, incl, Morphism(Y, K, proj_mats, validate=False)


def _invertible_pair(
    X: Module, Y: Module
) -> Optional[Tuple[Morphism, Morphism]]:
    """A pair (f: X -> Y, g: Y -> X) with g o f invertible, if one exists
    among basis pairs.  Complete when End(X) is local."""
    if X.is_zero():
        return None
    fs = hom_basis(X, Y)
    gs = hom_basis(Y, X)
    for f in fs:
        for g in gs:
            c = g.compose(f)
            if c.is_isomorphism():
                return f, g
    return None


def strip_summands(
    Y: Module, comps: Sequence[Module]
) -> Tuple[Module, Morphism, Morphism, List[Tuple[Module, Morphism, Morphism]]]:
    """Strip copies of the given indecomposables off Y as long as possible.

    Returns (N, mono_N, epi_N, stripped) where stripped lists
    (component, mono, epi) triples into/out of the original Y, and together
    with (N, mono_N, epi_N) they form a complete orthogonal system for Y.
    """
    stripped: List[Tuple[Module, Morphism, Morphism]] = []
    cur = Y
    mono_cur = Morphism.identity(Y)  # cur -> Y
    epi_cur = Morphism.identity(Y)  # Y -> cur
    while True:
        found = None
        for Ci in comps:
            pair = _invertible_pair(Ci, cur)
            if pair is not None:
                found = (Ci, pair)
                break
        if found is None:
            return cur, mono_cur, epi_cur, stripped
        Ci, (f, g) = found
        inv = g.compose(f).inverse()
        u = inv.compose(g)  # retraction cur -> Ci with u o f = id
        K, incl, proj = _split_off(cur, f, u)
        stripped.append(
            (Ci, mono_cur.compose(f), u.compose(epi_cur))
        )
        mono_cur = mono_cur.compose(incl)
        epi_cur = proj.compose(epi_cur)
        cur = K


def in_add(X: Module, comps: Sequence[Module]) -> bool:
    """Is X in add(comps)?  comps must be indecomposable."""
    N, _, _, _ = strip_summands(X, comps)
    return N.is_zero()


def add_witness(
    X: Module, comps: Sequence[Module]
) -> Optional[List[Tuple[Module, Morphism, Morphism]]]:
    """A complete orthogonal system exhibiting X as a sum of the given
    indecomposables, or None."""
    N, _, _, stripped = strip_summands(X, comps)
    if not N.is_zero():
        return None
    return stripped


# -- isomorphism testing ----------------------------------------------------------


def _fingerprint(M: Module) -> tuple:
    A = M.algebra
    return (
        M.dims,
        tuple(M.action[i].rank() for i in A.nonidem_indices),
    )


def _iso_from_combo(ms: List[Morphism], coeffs: Sequence) -> Optional[Morphism]:
    f = ms[0]
    acc = Morphism.zero_map(f.source, f.target)
    z = f.source.algebra.field.zero()
    for c, m in zip(coeffs, ms):
        if c != z:
            acc = acc.add(m.scaled(c))
    return acc if acc.is_isomorphism() else None


def find_isomorphism(
    M: Module,
    N: Module,
    seed: int = 0,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
    random_tries: int = DEFAULT_RANDOM_TRIES,
) -> Optional[Morphism]:
    """An invertible morphism M -> N, or None if none was found.

    Over a finite field the search is exhaustive (complete) whenever
    |F|^dim Hom(M, N) <= exhaustive_limit; otherwise and over the rationals
    the invertible locus is probed with basis elements, pairs, and seeded
    random combinations.  A returned morphism is always a certified witness.
    """
    if M.dims != N.dims:
        return None
    if M.total_dim == 0:
        return Morphism.zero_map(M, N)
    if _fingerprint(M) != _fingerprint(N):
        return None
    field = M.algebra.field
    ms = hom_basis(M, N)
    if not ms:
        return None
    h = len(ms)
    for m in ms:
        if m.is_isomorphism():
            return m
    if field.is_finite and field.p ** h <= exhaustive_limit:
        els = list(field.elements())
        for combo in itertools.product(els, repeat=h):
            got = _iso_from_combo(ms, combo)
            if got is not None:
                return got
        return None
    one = field.one()
    for i in range(h):
        for j in range(i + 1, h):
            for cj in (one, field.neg(one)):
                coeffs = [field.zero()] * h
                coeffs[i] = one
                coeffs[j] = cj
                got = _iso_from_combo(ms, coeffs)
                if got is not None:
                    return got
    rng = random.Random(f"iso:{seed}:{M.serial}:{N.serial}")
    for t in range(random_tries):
        span = 2 + t // 8
        coeffs = [field.parse(rng.randint(-span, span)) for _ in range(h)]
        got = _iso_from_combo(ms, coeffs)
        if got is not None:
            return got
    return None


def are_isomorphic(M: Module, N: Module, seed: int = 0) -> bool:
    return find_isomorphism(M, N, seed=seed) is not None


# -- Krull-Schmidt ------------------------------------------------------------------


def _split_by_idempotent(
    M: Module, e: Morphism
) -> List[Tuple[Module, Morphism, Morphism]]:
    """Split M = im(e) + ker(e) for an idempotent endomorphism e."""
    I, inclI, corI = e.image()
    K, inclK = e.kernel()
    rest = Morphism.identity(M).sub(e)
    projK_mats = []
    for v in range(M.algebra.n_vertices):
        sol = inclK.mats[v].solve_matrix(rest.mats[v])
        if sol is None:
            raise ModuleError("idempotent split failed")
        projK_mats.append(sol)
    projK = Morphism(M, K, projK_mats, validate=False)
    return [(I, inclI, corI), (K, inclK, projK)]


def _idempotent_from_endo(M: Module, phi: Morphism) -> Optional[Morphism]:
    """A nontrivial idempotent from a Fitting-stable power of phi, if the
    stable kernel and image are both nonzero."""
    n = M.total_dim
    psi = phi
    # square until the rank stabilizes; then ker and im are complementary
    prev = psi.total_rank()
    for _ in range(n.bit_length() + 2):
        psi = psi.compose(psi)
        r = psi.total_rank()
        if r == prev:
            break
        prev = r
    r = psi.total_rank()
    if r == 0 or r == n:
        return None
    # e = projection onto im(psi) along ker(psi)
    f = M.algebra.field
    mats = []
    for v in range(M.algebra.n_vertices):
        im = psi.mats[v].column_space_basis()
        ker = psi.mats[v].kernel_basis()
        Q = Matrix.hstack([im, ker])
        Qinv = Q.inverse()
        if Qinv is None:
            return None
        d = M.dims[v]
        sel = Matrix.zeros(f, d, d).to_lists()
        for k in range(im.ncols):
            sel[k][k] = f.one()
        mats.append(Q.mul(Matrix(f, d, d, sel)).mul(Qinv))
    e = Morphism(M, M, mats, validate=True)
    if not e.compose(e).sub(e).is_zero():
        return None
    return e


def _minpoly_idempotent(M: Module, phi: Morphism) -> Optional[Morphism]:
    """An idempotent from a coprime factor split of the minimal polynomial
    of phi, when that polynomial is reducible.  Rational field only; finite
    fields use the exhaustive path instead."""
    field = M.algebra.field
    if field.is_finite:
        return None
    import sympy

    # minimal polynomial via first linear dependence among powers
    powers = [Morphism.identity(M)]
    vecs = [powers[0].vec()]
    nmax = M.total_dim + 1
    coeffs = None
    for _ in range(1, nmax + 1):
        powers.append(powers[-1].compose(phi))
        vecs.append(powers[-1].vec())
        mat = Matrix.from_cols(field, vecs[:-1], nrows=len(vecs[0]))
        sol = mat.solve(vecs[-1])
        if sol is not None:
            coeffs = sol
            break
    if coeffs is None:
        return None
    x = sympy.Symbol("x")
    mk = lambda c: sympy.Rational(str(c))
    poly = sympy.Poly(
        [mk(field.one())] + [mk(field.neg(c)) for c in reversed(coeffs)], x
    )
    factors = poly.factor_list()[1]
    if len(factors) < 2:
        return None
    f1 = factors[0][0] ** factors[0][1]
    f2 = poly.exquo(f1)
    a, b, g = sympy.gcdex(f1.as_expr(), f2.as_expr(), x)
    gp = sympy.Poly(g, x)
    if gp.degree() != 0:
        return None
    af1 = sympy.Poly(sympy.expand(a * f1.as_expr() / gp.LC()), x)

    def evaluate(p: sympy.Poly) -> Morphism:
        acc = Morphism.zero_map(M, M)
        cl = p.all_coeffs()
        deg = len(cl) - 1
        while deg >= len(powers):
            powers.append(powers[-1].compose(phi))
        for i, c in enumerate(cl):
            k = deg - i
            cc = field.parse(str(sympy.Rational(c)))
            if cc != field.zero():
                acc = acc.add(powers[k].scaled(cc))
        return acc

    e = evaluate(af1)
    if e.is_zero() or e.sub(Morphism.identity(M)).is_zero():
        return None
    if not e.compose(e).sub(e).is_zero():
        return None
    return e


def _find_split(M: Module, seed: int, work_limit: int) -> Optional[Morphism]:
    """A nontrivial idempotent endomorphism of M, or None.

    None is a certificate of indecomposability when the endomorphism ring
    was searched exhaustively (small finite field) or is one-dimensional.
    """
    ends = hom_basis(M, M)
    h = len(ends)
    if h == 1:
        return None
    field = M.algebra.field
    for phi in ends:
        e = _idempotent_from_endo(M, phi)
        if e is not None:
            return e
    if field.is_finite and field.p ** h <= work_limit:
        els = list(field.elements())
        for combo in itertools.product(els, repeat=h):
            acc = Morphism.zero_map(M, M)
            for c, m in zip(combo, ends):
                if c != field.zero():
                    acc = acc.add(m.scaled(c))
            e = _idempotent_from_endo(M, acc)
            if e is not None:
                return e
        return None
    # products and sums of basis endomorphisms, then the minimal
    # polynomial route, then seeded random probing
    for i in range(h):
        for j in range(h):
            e = _idempotent_from_endo(M, ends[i].compose(ends[j]))
            if e is not None:
                return e
            if j > i:
                e = _idempotent_from_endo(M, ends[i].add(ends[j]))
                if e is not None:
                    return e
    for phi in ends:
        e = _minpoly_idempotent(M, phi)
        if e is not None:
            return e
    rng = random.Random(f"split:{seed}:{M.serial}")
    for t in range(DEFAULT_RANDOM_TRIES):
        span = 2 + t // 8
        coeffs = [field.parse(rng.randint(-span, span)) for _ in range(h)]
        acc = Morphism.zero_map(M, M)
        for c, m in zip(coeffs, ends):
            if c != field.zero():
                acc = acc.add(m.scaled(c))
        e = _idempotent_from_endo(M, acc)
        if e is not None:
            return e
        e = _minpoly_idempotent(M, acc)
        if e is not None:
            return e
    return None


def decompose(
    M: Module, seed: int = 0, work_limit: int = DEFAULT_EXHAUSTIVE_LIMIT
) -> List[Tuple[Module, Morphism, Morphism]]:
    """Indecomposable summands of M as a complete orthogonal system.

    Each entry is (summand, mono, epi) into/out of M.  Over a small finite
    field the leaves are certified indecomposable; over the rationals the
    probing strategy can in principle miss a split, in which case a leaf is
    merely unsplit (no such case appears at the bundled scales).
    """
    if M.is_zero():
        return []
    e = _find_split(M, seed, work_limit)
    if e is None:
        return [(M, Morphism.identity(M), Morphism.identity(M))]
    out: List[Tuple[Module, Morphism, Morphism]] = []
    for part, mono, epi in _split_by_idempotent(M, e):
        if part.is_zero():
            continue
        for leaf, m2, p2 in decompose(part, seed=seed, work_limit=work_limit):
            out.append((leaf, mono.compose(m2), p2.compose(epi)))
    return out


def indecomposable_summands(M: Module, seed: int = 0) -> List[Module]:
    return [x for x, _, _ in decompose(M, seed=seed)]
