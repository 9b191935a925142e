"""Bimodules between two based algebras and the functors they induce.

A bimodule here is a plain k-space carrying a left action of one algebra and
a commuting right action of another, both given as total matrices per basis
element.  From it we derive, in exact arithmetic:

  * the tensor functor  M1 |-> U (x)_A M1       (left modules over B),
  * the hom functor     M2 |-> Hom_B(U, M2)     (left modules over A),
  * the adjunction translations between maps U (x)_A M1 -> M2 and
    M1 -> Hom_B(U, M2).

Each functor value remembers the change of coordinates between its raw
construction space and the vertex-local module presentation, so induced maps
and adjoints stay exact and replayable.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .algebra import Algebra, AlgebraError
from .linalg import Matrix
from .module import (
    Module,
    ModuleError,
    Morphism,
    module_from_total_action,
    total_action_matrix,
)
from .tensor import TensorSpace, kron


class Bimodule:
    """A (B, A)-bimodule on k^n: left B-action, commuting right A-action."""

    def __init__(
        self,
        B: Algebra,
        A: Algebra,
        n: int,
        left: Dict[int, Matrix],
        right: Dict[int, Matrix],
        name: str = "U",
        validate: bool = True,
    ):
        if B.field is not A.field and B.field != A.field:
            raise AlgebraError("bimodule requires a common ground field")
        self.B = B
        self.A = A
        self.n = n
        self.left = dict(left)
        self.right = dict(right)
        self.name = name
        self.field = A.field
        self._tensor_cache: Dict[int, "TensorModule"] = {}
        self._hom_cache: Dict[int, "HomModule"] = {}
        if validate:
            self._validate()

    def _validate(self):
        f = self.field
        n = self.n
        idn = Matrix.identity(f, n)
        for i in range(self.B.dim):
            m = self.left.get(i)
            if m is None or m.nrows != n or m.ncols != n:
                raise AlgebraError(f"left action of basis element {i} missing or misshapen")
        for i in range(self.A.dim):
            m = self.right.get(i)
            if m is None or m.nrows != n or m.ncols != n:
                raise AlgebraError(f"right action of basis element {i} missing or misshapen")
        acc = Matrix.zeros(f, n, n)
        for w in range(self.B.n_vertices):
            acc = acc.add(self.left[w])
        if acc != idn:
            raise AlgebraError("left idempotent actions do not sum to the identity")
        acc = Matrix.zeros(f, n, n)
        for v in range(self.A.n_vertices):
            acc = acc.add(self.right[v])
        if acc != idn:
            raise AlgebraError("right idempotent actions do not sum to the identity")

        def combo(acts: Dict[int, Matrix], vec: list) -> Matrix:
            out = Matrix.zeros(f, n, n)
            for k, c in enumerate(vec):
                if c != f.zero():
                    out = out.add(acts[k].scaled(c))
            return out

        for i in range(self.B.dim):
            for j in range(self.B.dim):
                want = combo(self.left, self.B.product_vec(i, j))
                if self.left[i].mul(self.left[j]) != want:
                    raise AlgebraError("left action is not a representation")
        for i in range(self.A.dim):
            for j in range(self.A.dim):
                want = combo(self.right, self.A.product_vec(i, j))
                if self.right[j].mul(self.right[i]) != want:
                    raise AlgebraError("right action is not an anti-representation")
        for i in range(self.B.dim):
            for j in range(self.A.dim):
                if self.left[i].mul(self.right[j]) != self.right[j].mul(self.left[i]):
                    raise AlgebraError("left and right actions do not commute")

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def regular(R: Algebra, name: str = "") -> "Bimodule":
        """R as an (R, R)-bimodule by multiplication, in R's own basis."""
        f = R.field
        n = R.dim
        left, right = {}, {}
        for i in range(n):
            lcols, rcols = [], []
            for j in range(n):
                lcols.append(R.product_vec(i, j))
                rcols.append(R.product_vec(j, i))
            left[i] = Matrix.from_cols(f, lcols, nrows=n)
            right[i] = Matrix.from_cols(f, rcols, nrows=n)
        return Bimodule(R, R, n, left, right, name=name or R.name)

    @staticmethod
    def zero(B: Algebra, A: Algebra, name: str = "0") -> "Bimodule":
        f = A.field
        left = {i: Matrix.zeros(f, 0, 0) for i in range(B.dim)}
        right = {i: Matrix.zeros(f, 0, 0) for i in range(A.dim)}
        return Bimodule(B, A, 0, left, right, name=name, validate=False)

    @staticmethod
    def from_algebra_map(B: Algebra, A: Algebra, images: List[list], name: str = "") -> "Bimodule":
        """A as a (B, A)-bimodule through an algebra map B -> A.

        `images[i]` is the coefficient vector (over A's basis) of the image
        of B's basis element i.  The map must send B-idempotents to the
        matching A-idempotents (same vertex count) and preserve products.
        """
        if B.n_vertices != A.n_vertices:
            raise AlgebraError("algebra map constructor expects matching vertex sets")
        f = A.field
        n = A.dim
        reg = Bimodule.regular(A)

        def lmul_matrix(vec: list) -> Matrix:
            out = Matrix.zeros(f, n, n)
            for k, c in enumerate(vec):
                if c != f.zero():
                    out = out.add(reg.left[k].scaled(c))
            return out

        for i in range(B.dim):
            for j in range(B.dim):
                prod = B.product_vec(i, j)
                img = [f.zero()] * n
                for k, c in enumerate(prod):
                    if c != f.zero():
                        for l, d in enumerate(images[k]):
                            img[l] = f.add(img[l], f.mul(c, d))
                lhs = A.multiply(images[i], images[j])
                if lhs != img:
                    raise AlgebraError("images do not define an algebra map")
        left = {i: lmul_matrix(images[i]) for i in range(B.dim)}
        right = dict(reg.right)
        return Bimodule(B, A, n, left, right, name=name or f"{A.name} via map")

    # -- adapted basis ------------------------------------------------------------

    def adapted_basis(self) -> List[Tuple[int, int, list]]:
        """Basis vectors graded by (B-vertex, A-vertex), as raw coordinates.

        Concatenated over the (w, v) grid they form a basis of the whole
        space; an error means the actions were inconsistent."""
        out = []
        cols_total = 0
        for w in range(self.B.n_vertices):
            for v in range(self.A.n_vertices):
                piece = self.left[w].mul(self.right[v])
                basis = piece.column_space_basis()
                for j in range(basis.ncols):
                    out.append((w, v, basis.col(j)))
                cols_total += basis.ncols
        if cols_total != self.n:
            raise AlgebraError("graded pieces do not add up to the bimodule")
        return out

    # -- tensor functor -------------------------------------------------------------

    def tensor(self, M1: Module) -> "TensorModule":
        if M1.algebra is not self.A:
            raise ModuleError("tensor argument must be a module over the right-hand algebra")
        cached = self._tensor_cache.get(M1.serial)
        if cached is None:
            cached = TensorModule(self, M1)
            self._tensor_cache[M1.serial] = cached
        return cached

    def tensor_map(self, f: Morphism) -> Morphism:
        """U (x) f, between the cached tensor modules of source and target."""
        TS = self.tensor(f.source)
        TT = self.tensor(f.target)
        total = TS.space.induced_from_module_map(TT.space, f)
        vtotal = TT.to_vertex.mul(total).mul(TS.from_vertex)
        return _morphism_from_total(TS.module, TT.module, vtotal)

    # -- hom functor ------------------------------------------------------------------

    def hom(self, M2: Module) -> "HomModule":
        if M2.algebra is not self.B:
            raise ModuleError("hom argument must be a module over the left-hand algebra")
        cached = self._hom_cache.get(M2.serial)
        if cached is None:
            cached = HomModule(self, M2)
            self._hom_cache[M2.serial] = cached
        return cached

    def hom_map(self, g: Morphism) -> Morphism:
        """Hom_B(U, g), between the cached hom modules of source and target."""
        HS = self.hom(g.source)
        HT = self.hom(g.target)
        gt = g.total_matrix()
        cols = []
        for h in HS.hom_mats:
            coords = HT.coords_of_map(gt.mul(h))
            if coords is None:
                raise ModuleError("postcomposition left the hom space")
            cols.append(coords)
        total = Matrix.from_cols(self.field, cols, nrows=len(HT.hom_mats))
        vtotal = HT.to_vertex.mul(total).mul(HS.from_vertex)
        return _morphism_from_total(HS.module, HT.module, vtotal)

    # -- adjunction -----------------------------------------------------------------

    def adjoint_of_tensor_map(self, M1: Module, phi: Morphism) -> Morphism:
        """Translate phi: U (x) M1 -> M2 into M1 -> Hom_B(U, M2)."""
        TM = self.tensor(M1)
        if phi.source is not TM.module:
            raise ModuleError("map does not start at the tensor module of M1")
        M2 = phi.target
        HM = self.hom(M2)
        f = self.field
        phi_raw = phi.total_matrix().mul(TM.to_vertex)  # tensor coords -> M2 total
        mats: List[Matrix] = []
        for v in range(self.A.n_vertices):
            cols = []
            for c in range(M1.dims[v]):
                mvec = [f.zero()] * M1.total_dim
                mvec[M1.offsets[v] + c] = f.one()
                hcols = []
                for i in range(self.n):
                    uvec = [f.zero()] * self.n
                    uvec[i] = f.one()
                    t = TM.space.pure(uvec, mvec)
                    hcols.append(phi_raw.apply(t))
                hmat = Matrix.from_cols(f, hcols, nrows=M2.total_dim)
                coords = HM.coords_of_map(hmat)
                if coords is None:
                    raise ModuleError("adjoint escaped the hom space")
                stacked = HM.to_vertex.apply(coords)
                off = HM.module.offsets[v]
                cols.append(stacked[off: off + HM.module.dims[v]])
            mats.append(Matrix.from_cols(f, cols, nrows=HM.module.dims[v]))
        return Morphism(M1, HM.module, mats, validate=True)

    def tensor_map_of_adjoint(self, psi: Morphism, M2: Module) -> Morphism:
        """Translate psi: M1 -> Hom_B(U, M2) into U (x) M1 -> M2."""
        HM = self.hom(M2)
        if psi.target is not HM.module:
            raise ModuleError("map does not land in the hom module of M2")
        M1 = psi.source
        TM = self.tensor(M1)
        f = self.field
        # raw map on U_raw (x) M1_total, then factor through the quotient
        psi_total = HM.from_vertex.mul(psi.total_matrix())  # M1 tot -> hom coords
        cols = []
        for i in range(self.n):
            for j in range(M1.total_dim):
                mvec = [f.zero()] * M1.total_dim
                mvec[j] = f.one()
                hcoords = psi_total.apply(mvec)
                out = [f.zero()] * M2.total_dim
                for k, c in enumerate(hcoords):
                    if c != f.zero():
                        hcol = HM.hom_mats[k].col(i)
                        for r, x in enumerate(hcol):
                            if x != f.zero():
                                out[r] = f.add(out[r], f.mul(c, x))
                cols.append(out)
        raw = Matrix.from_cols(f, cols, nrows=M2.total_dim)
        total = raw.mul(TM.space.sect)
        vtotal = total.mul(TM.from_vertex)
        return _morphism_from_total(TM.module, M2, vtotal)


def _morphism_from_total(S: Module, T: Module, vtotal: Matrix) -> Morphism:
    """Cut a stacked-coordinates matrix into per-vertex blocks; the
    off-diagonal blocks must vanish."""
    f = S.algebra.field
    mats = []
    for v in range(S.algebra.n_vertices):
        ro, rd = T.offsets[v], T.dims[v]
        co, cd = S.offsets[v], S.dims[v]
        mats.append(
            vtotal.submatrix(range(ro, ro + rd), range(co, co + cd))
        )
    rebuilt = Matrix.block_diag(f, mats)
    if rebuilt != vtotal:
        raise ModuleError("induced map is not vertex-diagonal")
    return Morphism(S, T, mats, validate=False)


class TensorModule:
    """U (x)_A M1 as a left B-module, with its coordinate translations."""

    def __init__(self, bimodule: Bimodule, M1: Module):
        self.bimodule = bimodule
        self.source = M1
        B = bimodule.B
        f = bimodule.field
        self.space = TensorSpace(bimodule.A, bimodule.n, bimodule.right, M1)
        mdim = M1.total_dim
        idm = Matrix.identity(f, mdim)
        acts = {}
        for i in range(B.dim):
            raw = kron(bimodule.left[i], idm)
            acts[i] = self.space.proj.mul(raw).mul(self.space.sect)
        self.module, self.to_vertex, self.from_vertex = module_from_total_action(
            B, self.space.dim, acts, name=f"{bimodule.name}(x){M1.name}"
        )

    def pure_vertex_coords(self, uvec: list, mvec_total: list) -> list:
        """Stacked vertex coordinates of the class of u (x) m."""
        return self.to_vertex.apply(self.space.pure(uvec, mvec_total))


class HomModule:
    """Hom_B(U, M2) as a left A-module, with its coordinate translations."""

    def __init__(self, bimodule: Bimodule, M2: Module):
        self.bimodule = bimodule
        self.source = M2
        A = bimodule.A
        B = bimodule.B
        f = bimodule.field
        n = bimodule.n
        m2 = M2.total_dim
        # unknowns: h (m2 x n), equations h L(b) = act(b) h for all b
        nvars = m2 * n
        rows = []
        z = f.zero()
        for b in range(B.dim):
            L = bimodule.left[b]
            act = total_action_matrix(M2, b)
            for i in range(m2):
                for j in range(n):
                    row = [z] * nvars
                    for c in range(n):
                        val = L.rows[c][j]
                        if val != z:
                            row[i * n + c] = f.add(row[i * n + c], val)
                    for r in range(m2):
                        val = act.rows[i][r]
                        if val != z:
                            row[r * n + j] = f.sub(row[r * n + j], val)
                    if any(x != z for x in row):
                        rows.append(row)
        if rows:
            K = Matrix.from_rows(f, rows, ncols=nvars).kernel_basis()
        else:
            K = Matrix.identity(f, nvars)
        self.hom_mats: List[Matrix] = []
        for jcol in range(K.ncols):
            vec = K.col(jcol)
            mat = [[vec[i * n + j] for j in range(n)] for i in range(m2)]
            self.hom_mats.append(Matrix(f, m2, n, mat))
        k = len(self.hom_mats)
        self._flat = (
            Matrix.from_cols(f, [self._flatten(h) for h in self.hom_mats], nrows=nvars)
            if k
            else Matrix.zeros(f, nvars, 0)
        )
        acts = {}
        for a in range(A.dim):
            R = bimodule.right[a]
            cols = []
            for h in self.hom_mats:
                coords = self.coords_of_map(h.mul(R))
                if coords is None:
                    raise ModuleError("right action left the hom space")
                cols.append(coords)
            acts[a] = Matrix.from_cols(f, cols, nrows=k)
        self.module, self.to_vertex, self.from_vertex = module_from_total_action(
            A, k, acts, name=f"hom({bimodule.name},{M2.name})"
        )

    @staticmethod
    def _flatten(h: Matrix) -> list:
        out = []
        for row in h.rows:
            out.extend(row)
        return out

    def coords_of_map(self, hmat: Matrix) -> Optional[list]:
        if not self.hom_mats:
            return [] if hmat.is_zero() else None
        return self._flat.solve(self._flatten(hmat))
