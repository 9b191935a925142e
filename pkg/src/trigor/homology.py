"""Minimal projective resolutions and derived invariants.

Resolutions are built cover by cover and cached per module, extended lazily
to whatever stage a caller needs.  Ext dimensions come from hom-space
coordinates of the dualized differentials, Tor dimensions from tensoring the
resolution, both as plain ranks over the exact field.

Dimension conventions: the zero module has dimension -1 for every notion
measured here (it caps every maximum without contributing).  Searches are
window-limited: a return of None means "exceeds the bound", i.e. the true
value is at least bound + 1; it is never silently treated as infinity.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra
from .linalg import Matrix
from .module import (
    Module,
    Morphism,
    direct_sum,
    dual_module,
    hom_basis,
    hom_dim,
    morphism_coordinates,
    projective_cover,
    right_action_totals,
    simple_module,
)
from .tensor import TensorSpace


class ProjectiveResolution:
    """Minimal projective resolution, extended on demand.

    terms[i] = P_i, maps[0]: P_0 -> M, maps[i]: P_i -> P_{i-1}.
    syzygies[i] is ker(maps[i]) with its inclusion into P_i; syzygies[0] is
    the first syzygy of M.  Once a syzygy vanishes, later terms are zero.
    """

    def __init__(self, M: Module):
        self.module = M
        self.terms: List[Module] = []
        self.maps: List[Morphism] = []
        self.syzygies: List[Module] = []
        self.syz_incl: List[Morphism] = []
        self.finished_at: Optional[int] = None  # pd(M) once known

    def ensure(self, n: int):
        while len(self.terms) <= n:
            self._extend()

    def _extend(self):
        A = self.module.algebra
        if self.finished_at is not None and len(self.terms) > self.finished_at:
            Z = Module.zero(A)
            self.terms.append(Z)
            self.maps.append(Morphism.zero_map(Z, self.terms[-2]))
            self.syzygies.append(Z)
            self.syz_incl.append(Morphism.zero_map(Z, Z))
            return
        if not self.terms:
            below = self.module
            P, epi = projective_cover(below)
            self.terms.append(P)
            self.maps.append(epi)
        else:
            K = self.syzygies[-1]
            incl = self.syz_incl[-1]
            P, epi = projective_cover(K)
            self.terms.append(P)
            self.maps.append(incl.compose(epi))
        K, kincl = self.maps[-1].kernel()
        self.syzygies.append(K)
        self.syz_incl.append(kincl)
        if K.is_zero() and self.finished_at is None:
            if self.module.is_zero():
                self.finished_at = -1
            else:
                self.finished_at = len(self.terms) - 1

    def syzygy(self, i: int) -> Module:
        """Omega^i, with Omega^0 = M."""
        if i == 0:
            return self.module
        self.ensure(i - 1)
        return self.syzygies[i - 1]


def resolution(M: Module, n: int = 0) -> ProjectiveResolution:
    key = ("res", M.serial)
    res = M.algebra._cache.get(key)
    if res is None:
        res = ProjectiveResolution(M)
        M.algebra._cache[key] = res
    res.ensure(n)
    return res


def syzygy(M: Module, i: int) -> Module:
    return resolution(M).syzygy(i)


def pd_up_to(M: Module, bound: int) -> Optional[int]:
    """Projective dimension if <= bound, -1 for the zero module, else None."""
    if M.is_zero():
        return -1
    res = resolution(M, 0)
    for i in range(bound + 1):
        res.ensure(i)
        if res.finished_at is not None:
            return res.finished_at
    return None


def injective_dim_up_to(M: Module, bound: int) -> Optional[int]:
    return pd_up_to(dual_module(M), bound)


def gldim_up_to(algebra: Algebra, bound: int) -> Optional[int]:
    """Global dimension (= max pd of the simples) if <= bound, else None."""
    best = -1
    for v in range(algebra.n_vertices):
        d = pd_up_to(simple_module(algebra, v), bound)
        if d is None:
            return None
        best = max(best, d)
    return best


# -- Ext ---------------------------------------------------------------------


def _ext_differential_rank(M: Module, N: Module, i: int) -> int:
    """Rank of Hom(P_{i-1}, N) -> Hom(P_i, N), precomposition with d_i."""
    if i < 1:
        return 0
    res = resolution(M, i)
    Pprev, Pi = res.terms[i - 1], res.terms[i]
    if Pprev.is_zero() or Pi.is_zero():
        return 0
    d = res.maps[i]
    src_basis = hom_basis(Pprev, N)
    tgt_basis = hom_basis(Pi, N)
    if not src_basis or not tgt_basis:
        return 0
    cols = []
    for h in src_basis:
        coords = morphism_coordinates(h.compose(d), tgt_basis)
        if coords is None:
            raise RuntimeError("precomposition left the hom space")
        cols.append(coords)
    f = M.algebra.field
    return Matrix.from_cols(f, cols, nrows=len(tgt_basis)).rank()


def ext_dim(M: Module, N: Module, i: int) -> int:
    """dim Ext^i(M, N)."""
    if i < 0 or M.is_zero() or N.is_zero():
        return 0
    if i == 0:
        return hom_dim(M, N)
    key = ("ext", M.serial, N.serial, i)
    cached = M.algebra._cache.get(key)
    if cached is not None:
        return cached
    res = resolution(M, i)
    if res.finished_at is not None and i > res.finished_at:
        M.algebra._cache[key] = 0
        return 0
    Pi = res.terms[i]
    total = hom_dim(Pi, N)
    r_in = _ext_differential_rank(M, N, i)
    r_out = _ext_differential_rank(M, N, i + 1)
    val = total - r_in - r_out
    if val < 0:
        raise RuntimeError("negative cohomology dimension; rank bookkeeping broken")
    M.algebra._cache[key] = val
    return val


def ext_dims(M: Module, N: Module, lo: int, hi: int) -> List[int]:
    return [ext_dim(M, N, i) for i in range(lo, hi + 1)]


def ext_vanishes_through(M: Module, N: Module, bound: int, lo: int = 1) -> bool:
    """Ext^i(M, N) = 0 for lo <= i <= bound."""
    return all(ext_dim(M, N, i) == 0 for i in range(lo, bound + 1))


# -- Tor ---------------------------------------------------------------------


def _tensored_term(A: Algebra, Xop: Module, M: Module, j: int) -> TensorSpace:
    res = resolution(M, j)
    term = res.terms[j]
    key = ("torspace", Xop.serial, term.serial)
    sp = A._cache.get(key)
    if sp is None:
        rkey = ("racts", Xop.serial)
        ra = A._cache.get(rkey)
        if ra is None:
            ra = right_action_totals(Xop)
            A._cache[rkey] = ra
        xdim, racts = ra
        sp = TensorSpace(A, xdim, racts, term)
        A._cache[key] = sp
    return sp


def _tor_boundary_rank(A: Algebra, Xop: Module, M: Module, j: int) -> int:
    """Rank of X (x) d_j : X (x) P_j -> X (x) P_{j-1}, for j >= 1."""
    key = ("tormap", Xop.serial, M.serial, j)
    cached = A._cache.get(key)
    if cached is None:
        res = resolution(M, j)
        src = _tensored_term(A, Xop, M, j)
        tgt = _tensored_term(A, Xop, M, j - 1)
        cached = src.induced_from_module_map(tgt, res.maps[j]).rank()
        A._cache[key] = cached
    return cached


def tor_dim(Xop: Module, M: Module, i: int) -> int:
    """dim Tor_i(X, M) for X a right module given over the opposite algebra."""
    if i < 0 or Xop.is_zero() or M.is_zero():
        return 0
    A = M.algebra
    if Xop.algebra is not A.opposite():
        raise ValueError("right factor must live over the opposite algebra")
    key = ("tor", Xop.serial, M.serial, i)
    cached = A._cache.get(key)
    if cached is not None:
        return cached
    resolution(M, i + 1)
    mid = _tensored_term(A, Xop, M, i).dim
    r_out = _tor_boundary_rank(A, Xop, M, i + 1)
    r_in = _tor_boundary_rank(A, Xop, M, i) if i >= 1 else 0
    val = mid - r_in - r_out
    if val < 0:
        raise RuntimeError("negative homology dimension; rank bookkeeping broken")
    A._cache[key] = val
    return val


def tor_vanishes_through(Xop: Module, M: Module, bound: int, lo: int = 1) -> bool:
    return all(tor_dim(Xop, M, i) == 0 for i in range(lo, bound + 1))


# -- long-exact-sequence feasibility ----------------------------------------------


def exact_sequence_dims_feasible(dims: Sequence[int]) -> bool:
    """Can spaces of these dimensions sit in an exact sequence

        0 -> V_0 -> V_1 -> V_2 -> ...

    exact at every listed term (the sequence may continue past the window)?
    Equivalent to every forced outgoing rank being nonnegative.
    """
    carry = 0
    for d in dims:
        out = d - carry
        if out < 0:
            return False
        carry = out
    return True
