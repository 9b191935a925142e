"""Tensor products over an algebra, as explicit quotient spaces.

X (x)_A M is realized as the quotient of the plain k-tensor space of the
underlying vector spaces by the balancing relations (x.a) (x) m - x (x) (a.m),
one for every basis element a of the algebra, idempotents included.  The
idempotent relations implement the vertex matching, so no adapted bases are
needed on the way in.  The quotient projection and a section are kept, which
makes induced maps one conjugation each.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from .algebra import Algebra
from .linalg import Matrix, quotient_maps
from .module import Module, Morphism, total_action_matrix


def kron(A: Matrix, B: Matrix) -> Matrix:
    f = A.field
    rows = []
    for i in range(A.nrows):
        for k in range(B.nrows):
            row = []
            for j in range(A.ncols):
                a = A.rows[i][j]
                if a == f.zero():
                    row.extend([f.zero()] * B.ncols)
                else:
                    row.extend(f.mul(a, b) for b in B.rows[k])
            rows.append(row)
    return Matrix(f, A.nrows * B.nrows, A.ncols * B.ncols, rows)


class TensorSpace:
    """X (x)_A M for a right A-module X given by total action matrices.

    `right_act[i]` must be the total matrix of the right action of basis
    element i on X, for every i (the anti-representation property is the
    caller's responsibility; modules over the opposite algebra provide it).
    """

    def __init__(self, A: Algebra, xdim: int, right_act: Dict[int, Matrix], M: Module):
        self.algebra = A
        self.xdim = xdim
        self.right_act = right_act
        self.M = M
        f = A.field
        mdim = M.total_dim
        raw = xdim * mdim
        self.raw_dim = raw
        rel_cols = []
        ix = Matrix.identity(f, xdim)
        im = Matrix.identity(f, mdim)
        for i in range(A.dim):
            ra = right_act[i]
            la = total_action_matrix(M, i)
            # columns of R_a (x) 1 - 1 (x) L_a span the balancing relations
            # for basis element i
            rel_cols.append(kron(ra, im).sub(kron(ix, la)))
        if rel_cols:
            allrel = Matrix.hstack(rel_cols)
        else:
            allrel = Matrix.zeros(f, raw, 0)
        self.proj, self.sect = quotient_maps(allrel.column_space_basis())
        self.dim = self.proj.nrows

    def pure(self, xvec, mvec) -> list:
        """Class of the pure tensor x (x) m, in quotient coordinates."""
        f = self.algebra.field
        raw = [f.zero()] * self.raw_dim
        mdim = self.M.total_dim
        for i, xv in enumerate(xvec):
            if xv == f.zero():
                continue
            for j, mv in enumerate(mvec):
                if mv != f.zero():
                    raw[i * mdim + j] = f.add(raw[i * mdim + j], f.mul(xv, mv))
        return self.proj.apply(raw)

    def induced_from_module_map(self, other: "TensorSpace", g: Morphism) -> Matrix:
        """Matrix of id_X (x) g : self -> other, for g: self.M -> other.M
        (same X on both sides)."""
        if g.source is not self.M or g.target is not other.M:
            raise ValueError("module map does not match the tensor factors")
        f = self.algebra.field
        ix = Matrix.identity(f, self.xdim)
        raw_map = kron(ix, g.total_matrix())
        return other.proj.mul(raw_map).mul(self.sect)

    def induced_from_x_map(self, other: "TensorSpace", xmap: Matrix) -> Matrix:
        """Matrix of xmap (x) id_M : self -> other, for a right-module map
        X -> X' given as a total matrix (same M on both sides)."""
        f = self.algebra.field
        im = Matrix.identity(f, self.M.total_dim)
        raw_map = kron(xmap, im)
        return other.proj.mul(raw_map).mul(self.sect)
