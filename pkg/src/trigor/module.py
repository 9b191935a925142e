"""Modules over a based algebra and the surrounding abelian toolkit.

A module is stored vertex-locally: one dimension per vertex and one exact
matrix per non-idempotent basis element of the algebra, mapping the source
vertex block to the target vertex block.  Morphisms are per-vertex matrices.
Kernels, images, cokernels, radicals, tops, hom spaces, projective covers
and duals are all plain linear algebra over the chosen exact field, so every
result is certified by construction rather than approximated.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra, AlgebraError
from .linalg import Field, Matrix, quotient_maps

_module_serial = itertools.count()


class ModuleError(ValueError):
    pass


class Module:
    __slots__ = ("algebra", "dims", "action", "name", "serial", "offsets", "total_dim")

    def __init__(
        self,
        algebra: Algebra,
        dims: Sequence[int],
        action: Dict[int, Matrix],
        name: str = "",
        validate: bool = True,
    ):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.n_vertices:
            raise ModuleError("dimension vector length != number of vertices")
        self.action = dict(action)
        self.serial = next(_module_serial)
        self.name = name or f"M{self.serial}"
        offs = [0]
        for d in self.dims:
            offs.append(offs[-1] + d)
        self.offsets = tuple(offs)
        self.total_dim = offs[-1]
        if validate:
            self._validate()

    # -- basic access -------------------------------------------------------

    def act(self, i: int) -> Matrix:
        """Action matrix of the i-th (non-idempotent) basis element."""
        return self.action[i]

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def dim_at(self, v: int) -> int:
        return self.dims[v]

    def __repr__(self):
        return f"<Module {self.name} dims={self.dims} over {self.algebra.name}>"

    def _validate(self):
        A = self.algebra
        f = A.field
        for i in A.nonidem_indices:
            m = self.action.get(i)
            if m is None:
                raise ModuleError(f"missing action for basis element {A.basis[i].label}")
            if m.nrows != self.dims[A.tgt(i)] or m.ncols != self.dims[A.src(i)]:
                raise ModuleError(f"action of {A.basis[i].label} has wrong shape")
            if m.field is not f:
                raise ModuleError("action matrix over wrong field")
        for i in A.nonidem_indices:
            for j in A.nonidem_indices:
                if A.src(i) != A.tgt(j):
                    continue
                lhs = self.action[i].mul(self.action[j])
                rhs = Matrix.zeros(f, self.dims[A.tgt(i)], self.dims[A.src(j)])
                prod = A.product_vec(i, j)
                for k in A.nonidem_indices:
                    c = prod[k]
                    if c != f.zero():
                        rhs = rhs.add(self.action[k].scaled(c))
                if lhs != rhs:
                    raise ModuleError(
                        f"module law fails on {A.basis[i].label}*{A.basis[j].label}"
                    )

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(algebra: Algebra, name: str = "0") -> "Module":
        f = algebra.field
        action = {
            i: Matrix.zeros(f, 0, 0) for i in algebra.nonidem_indices
        }
        return Module(algebra, [0] * algebra.n_vertices, action, name=name, validate=False)

    @staticmethod
    def from_arrow_matrices(
        algebra: Algebra,
        dims: Sequence[int],
        arrow_mats: Dict[str, Matrix],
        name: str = "",
        validate: bool = True,
    ) -> "Module":
        """Build a module from matrices for the quiver arrows.

        Relations of the algebra are checked to hold; actions of longer basis
        paths are derived from the arrow matrices.
        """
        if algebra.arrows is None:
            raise ModuleError("algebra has no quiver presentation")
        f = algebra.field
        dims = tuple(int(d) for d in dims)
        acts_by_arrow: List[Matrix] = []
        for a in algebra.arrows:
            m = arrow_mats.get(a.label)
            if m is None:
                raise ModuleError(f"missing matrix for arrow {a.label}")
            if m.nrows != dims[a.tgt] or m.ncols != dims[a.src]:
                raise ModuleError(f"matrix for arrow {a.label} has wrong shape")
            acts_by_arrow.append(m)

        def path_act(path: Tuple[int, ...]) -> Matrix:
            src_v = algebra.arrows[path[0]].src
            out = Matrix.identity(f, dims[src_v])
            for a in path:
                out = acts_by_arrow[a].mul(out)
            return out

        if validate and algebra.relations:
            for terms in algebra.relations:
                first = terms[0][1]
                sv = algebra.arrows[first[0]].src
                tv = algebra.arrows[first[-1]].tgt
                acc = Matrix.zeros(f, dims[tv], dims[sv])
                for coeff, path in terms:
                    acc = acc.add(path_act(path).scaled(coeff))
                if not acc.is_zero():
                    raise ModuleError("arrow matrices do not satisfy the relations")
        action = {}
        for i in algebra.nonidem_indices:
            action[i] = path_act(algebra.path_reps[i])
        return Module(algebra, dims, action, name=name, validate=validate)

    def arrow_matrix(self, label: str) -> Matrix:
        A = self.algebra
        if A.arrows is None:
            raise ModuleError("algebra has no quiver presentation")
        for i in A.nonidem_indices:
            if A.path_reps is not None and len(A.path_reps[i]) == 1:
                if A.arrows[A.path_reps[i][0]].label == label:
                    return self.action[i]
        a = A.arrows[A.arrow_index[label]]
        return Matrix.zeros(A.field, self.dims[a.tgt], self.dims[a.src])


class Morphism:
    __slots__ = ("source", "target", "mats")

    def __init__(
        self,
        source: Module,
        target: Module,
        mats: Sequence[Matrix],
        validate: bool = True,
    ):
        if source.algebra is not target.algebra:
            raise ModuleError("morphism between modules over different algebras")
        self.source = source
        self.target = target
        self.mats = list(mats)
        if validate:
            self._validate()

    def _validate(self):
        A = self.source.algebra
        if len(self.mats) != A.n_vertices:
            raise ModuleError("one matrix per vertex required")
        for v in range(A.n_vertices):
            m = self.mats[v]
            if m.nrows != self.target.dims[v] or m.ncols != self.source.dims[v]:
                raise ModuleError(f"matrix at vertex {A.vertices[v]} has wrong shape")
        for i in A.nonidem_indices:
            s, t = A.src(i), A.tgt(i)
            lhs = self.mats[t].mul(self.source.action[i])
            rhs = self.target.action[i].mul(self.mats[s])
            if lhs != rhs:
                raise ModuleError(
                    f"map does not commute with action of {A.basis[i].label}"
                )

    # -- algebra of morphisms ------------------------------------------------

    @staticmethod
    def identity(M: Module) -> "Morphism":
        f = M.algebra.field
        return Morphism(M, M, [Matrix.identity(f, d) for d in M.dims], validate=False)

    @staticmethod
    def zero_map(M: Module, N: Module) -> "Morphism":
        f = M.algebra.field
        return Morphism(
            M, N, [Matrix.zeros(f, dn, dm) for dm, dn in zip(M.dims, N.dims)],
            validate=False,
        )

    def compose(self, other: "Morphism") -> "Morphism":
        """self o other."""
        if other.target is not self.source:
            raise ModuleError("composition mismatch")
        return Morphism(
            other.source,
            self.target,
            [a.mul(b) for a, b in zip(self.mats, other.mats)],
            validate=False,
        )

    def add(self, other: "Morphism") -> "Morphism":
        return Morphism(
            self.source, self.target,
            [a.add(b) for a, b in zip(self.mats, other.mats)], validate=False,
        )

    def sub(self, other: "Morphism") -> "Morphism":
        return Morphism(
            self.source, self.target,
            [a.sub(b) for a, b in zip(self.mats, other.mats)], validate=False,
        )

    def scaled(self, c) -> "Morphism":
        return Morphism(
            self.source, self.target, [m.scaled(c) for m in self.mats], validate=False,
        )

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.mats)

    def is_injective(self) -> bool:
        return all(m.rank() == m.ncols for m in self.mats)

    def is_surjective(self) -> bool:
        return all(m.rank() == m.nrows for m in self.mats)

    def is_isomorphism(self) -> bool:
        return all(m.nrows == m.ncols for m in self.mats) and self.is_injective()

    def inverse(self) -> "Morphism":
        invs = []
        for m in self.mats:
            inv = m.inverse()
            if inv is None:
                raise ModuleError("morphism is not invertible")
            invs.append(inv)
        return Morphism(self.target, self.source, invs, validate=False)

    def total_rank(self) -> int:
        return sum(m.rank() for m in self.mats)

    def total_matrix(self) -> Matrix:
        """One matrix on the stacked coordinate spaces (block diagonal)."""
        f = self.source.algebra.field
        return Matrix.block_diag(f, self.mats)

    def __repr__(self):
        return f"<Morphism {self.source.name} -> {self.target.name}>"

    # -- flattening for linear-algebra over Hom ---------------------------------

    def vec(self) -> list:
        out = []
        for m in self.mats:
            for row in m.rows:
                out.extend(row)
        return out

    @staticmethod
    def from_vec(M: Module, N: Module, vec: Sequence, validate: bool = False) -> "Morphism":
        f = M.algebra.field
        mats = []
        pos = 0
        for v in range(M.algebra.n_vertices):
            r, c = N.dims[v], M.dims[v]
            rows = [list(vec[pos + i * c: pos + (i + 1) * c]) for i in range(r)]
            pos += r * c
            mats.append(Matrix(f, r, c, rows))
        return Morphism(M, N, mats, validate=validate)

    # -- kernels and friends -----------------------------------------------------

    def kernel(self) -> Tuple[Module, "Morphism"]:
        """(K, inclusion K -> source)."""
        A = self.source.algebra
        incl_mats = [m.kernel_basis() for m in self.mats]
        return _submodule_from_inclusions(self.source, incl_mats, name_hint="ker")

    def image(self) -> Tuple[Module, "Morphism", "Morphism"]:
        """(I, inclusion I -> target, corestriction source -> I)."""
        A = self.source.algebra
        incl_mats = [m.column_space_basis() for m in self.mats]
        I, incl = _submodule_from_inclusions(self.target, incl_mats, name_hint="im")
        cor_mats = []
        for v in range(A.n_vertices):
            sol = incl.mats[v].solve_matrix(self.mats[v])
            if sol is None:
                raise ModuleError("image corestriction failed")
            cor_mats.append(sol)
        return I, incl, Morphism(self.source, I, cor_mats, validate=False)

    def cokernel(self) -> Tuple[Module, "Morphism"]:
        """(Q, projection target -> Q)."""
        A = self.source.algebra
        f = A.field
        projs, sects = [], []
        for v in range(A.n_vertices):
            p, s = quotient_maps(self.mats[v])
            projs.append(p)
            sects.append(s)
        dims = [p.nrows for p in projs]
        action = {}
        for i in A.nonidem_indices:
            s, t = A.src(i), A.tgt(i)
            action[i] = projs[t].mul(self.target.action[i]).mul(sects[s])
        Q = Module(A, dims, action, name=f"coker({self.target.name})", validate=False)
        return Q, Morphism(self.target, Q, projs, validate=False)


def _submodule_from_inclusions(
    M: Module, incl_mats: List[Matrix], name_hint: str = "sub"
) -> Tuple[Module, Morphism]:
    """Module structure on per-vertex column spans that are action-invariant."""
    A = M.algebra
    dims = [m.ncols for m in incl_mats]
    action = {}
    for i in A.nonidem_indices:
        s, t = A.src(i), A.tgt(i)
        moved = M.action[i].mul(incl_mats[s])
        sol = incl_mats[t].solve_matrix(moved)
        if sol is None:
            raise ModuleError("given columns do not span an invariant subspace")
        action[i] = sol
    S = Module(A, dims, action, name=f"{name_hint}({M.name})", validate=False)
    return S, Morphism(S, M, incl_mats, validate=False)


def submodule_spanned_by(M: Module, cols: List[Matrix]) -> Tuple[Module, Morphism]:
    """Smallest submodule containing the given per-vertex column spans.

    The spans are saturated under the algebra action before reducing to an
    independent basis, so the result is always a genuine submodule.
    """
    A = M.algebra
    f = A.field
    cur = [Matrix.hstack([c]) if c.ncols else c for c in cols]
    while True:
        ranks = [c.rank() for c in cur]
        nxt = [[c] for c in cur]
        for i in A.nonidem_indices:
            s, t = A.src(i), A.tgt(i)
            moved = M.action[i].mul(cur[s])
            if moved.ncols:
                nxt[t].append(moved)
        cur = [Matrix.hstack(parts).column_space_basis() for parts in nxt]
        if [c.rank() for c in cur] == ranks:
            break
    return _submodule_from_inclusions(M, cur)


# -- radical, top, socle ---------------------------------------------------------


def radical(M: Module) -> Tuple[Module, Morphism]:
    """(rad M, inclusion).  rad M is the radical of the algebra applied to M."""
    A = M.algebra
    f = A.field
    incl = []
    for v in range(A.n_vertices):
        parts = [Matrix.zeros(f, M.dims[v], 0)]
        for i in A.nonidem_indices:
            if A.tgt(i) == v:
                parts.append(M.action[i])
        incl.append(Matrix.hstack(parts).column_space_basis())
    return _submodule_from_inclusions(M, incl, name_hint="rad")


def top(M: Module) -> Tuple[Module, Morphism]:
    """(top M, projection M -> top M)."""
    _, incl = radical(M)
    return incl.cokernel()


def socle(M: Module) -> Tuple[Module, Morphism]:
    """(soc M, inclusion).  Elements killed by the radical."""
    A = M.algebra
    f = A.field
    incl = []
    for v in range(A.n_vertices):
        rows = [Matrix.zeros(f, 0, M.dims[v])]
        for i in A.nonidem_indices:
            if A.src(i) == v:
                rows.append(M.action[i])
        incl.append(Matrix.vstack(rows).kernel_basis())
    return _submodule_from_inclusions(M, incl, name_hint="soc")


# -- direct sums ------------------------------------------------------------------


def direct_sum(
    algebra: Algebra, modules: Sequence[Module], name: str = ""
) -> Tuple[Module, List[Morphism], List[Morphism]]:
    """(sum, injections, projections)."""
    f = algebra.field
    modules = list(modules)
    for m in modules:
        if m.algebra is not algebra:
            raise ModuleError("direct sum across different algebras")
    dims = [sum(m.dims[v] for m in modules) for v in range(algebra.n_vertices)]
    action = {}
    for i in algebra.nonidem_indices:
        action[i] = Matrix.block_diag(f, [m.action[i] for m in modules])
    if not name:
        name = "(" + "+".join(m.name for m in modules) + ")" if modules else "0"
    S = Module(algebra, dims, action, name=name, validate=False)
    injections, projections = [], []
    offsets = [0] * algebra.n_vertices
    for m in modules:
        inj, proj = [], []
        for v in range(algebra.n_vertices):
            o, d, D = offsets[v], m.dims[v], dims[v]
            im = Matrix.zeros(f, D, d).to_lists()
            pm = Matrix.zeros(f, d, D).to_lists()
            for k in range(d):
                im[o + k][k] = f.one()
                pm[k][o + k] = f.one()
            inj.append(Matrix(f, D, d, im))
            proj.append(Matrix(f, d, D, pm))
            offsets[v] += d
        injections.append(Morphism(m, S, inj, validate=False))
        projections.append(Morphism(S, m, proj, validate=False))
    return S, injections, projections


def power(M: Module, n: int) -> Module:
    return direct_sum(M.algebra, [M] * n, name=f"{M.name}^{n}")[0] if n else Module.zero(M.algebra)


# -- distinguished modules ---------------------------------------------------------


def simple_module(algebra: Algebra, v: int, name: str = "") -> Module:
    f = algebra.field
    dims = [1 if w == v else 0 for w in range(algebra.n_vertices)]
    action = {}
    for i in algebra.nonidem_indices:
        action[i] = Matrix.zeros(f, dims[algebra.tgt(i)], dims[algebra.src(i)])
    return Module(
        algebra, dims, action, name=name or f"S({algebra.vertices[v]})", validate=False
    )


def projective_indecomposable(algebra: Algebra, v: int, name: str = "") -> Module:
    """P_v = (algebra) e_v, with the left multiplication action."""
    key = ("proj_indec", v)
    cached = algebra._cache.get(key)
    if cached is not None:
        return cached
    f = algebra.field
    mine = algebra.basis_with_src(v)
    by_vertex: List[List[int]] = [[] for _ in range(algebra.n_vertices)]
    for i in mine:
        by_vertex[algebra.tgt(i)].append(i)
    pos = {}
    for w in range(algebra.n_vertices):
        for k, i in enumerate(by_vertex[w]):
            pos[i] = k
    dims = [len(by_vertex[w]) for w in range(algebra.n_vertices)]
    action = {}
    for b in algebra.nonidem_indices:
        s, t = algebra.src(b), algebra.tgt(b)
        m = Matrix.zeros(f, dims[t], dims[s]).to_lists()
        for j in by_vertex[s]:
            prod = algebra.product_vec(b, j)
            for k, c in enumerate(prod):
                if c != f.zero():
                    m[pos[k]][pos[j]] = c
        action[b] = Matrix(f, dims[t], dims[s], m)
    P = Module(
        algebra, dims, action, name=name or f"P({algebra.vertices[v]})", validate=False
    )
    algebra._cache[key] = P
    return P


def regular_module(algebra: Algebra) -> Module:
    key = ("regular",)
    cached = algebra._cache.get(key)
    if cached is None:
        mods = [projective_indecomposable(algebra, v) for v in range(algebra.n_vertices)]
        cached = direct_sum(algebra, mods, name=algebra.name)[0]
        algebra._cache[key] = cached
    return cached


def dual_module(M: Module, name: str = "") -> Module:
    """k-linear dual, a module over the opposite algebra."""
    opp = M.algebra.opposite()
    action = {i: M.action[i].transpose() for i in M.algebra.nonidem_indices}
    return Module(opp, M.dims, action, name=name or f"D({M.name})", validate=False)


def dual_morphism(f: Morphism) -> Morphism:
    """D(f): D(target) -> D(source) over the opposite algebra."""
    return Morphism(
        dual_module(f.target), dual_module(f.source),
        [m.transpose() for m in f.mats], validate=False,
    )


def injective_indecomposable(algebra: Algebra, v: int, name: str = "") -> Module:
    key = ("inj_indec", v)
    cached = algebra._cache.get(key)
    if cached is not None:
        return cached
    P = projective_indecomposable(algebra.opposite(), v)
    I = dual_module(P, name=name or f"I({algebra.vertices[v]})")
    if I.algebra is not algebra:
        raise ModuleError("opposite-of-opposite mismatch")
    algebra._cache[key] = I
    return I


# -- hom spaces ----------------------------------------------------------------


def hom_basis(M: Module, N: Module) -> List[Morphism]:
    """Deterministic basis of Hom(M, N), via the generator intertwining system."""
    A = M.algebra
    if N.algebra is not A:
        raise ModuleError("hom between modules over different algebras")
    key = ("hom", M.serial, N.serial)
    cached = A._cache.get(key)
    if cached is not None:
        return cached
    f = A.field
    nv = A.n_vertices
    var_off = [0] * nv
    pos = 0
    for v in range(nv):
        var_off[v] = pos
        pos += N.dims[v] * M.dims[v]
    nvars = pos
    rows: List[list] = []
    z = f.zero()
    for g in A.gen_indices:
        s, t = A.src(g), A.tgt(g)
        Mg, Ng = M.action[g], N.action[g]
        # equation: f_t @ Mg - Ng @ f_s = 0, entry (i, j)
        for i in range(N.dims[t]):
            for j in range(M.dims[s]):
                row = [z] * nvars
                for c in range(M.dims[t]):
                    val = Mg.rows[c][j]
                    if val != z:
                        row[var_off[t] + i * M.dims[t] + c] = f.add(
                            row[var_off[t] + i * M.dims[t] + c], val
                        )
                for r in range(N.dims[s]):
                    val = Ng.rows[i][r]
                    if val != z:
                        idx = var_off[s] + r * M.dims[s] + j
                        row[idx] = f.sub(row[idx], val)
                if any(x != z for x in row):
                    rows.append(row)
    if rows:
        K = Matrix.from_rows(f, rows, ncols=nvars).kernel_basis()
    else:
        K = Matrix.identity(f, nvars)
    basis = [Morphism.from_vec(M, N, K.col(j)) for j in range(K.ncols)]
    A._cache[key] = basis
    return basis


def hom_dim(M: Module, N: Module) -> int:
    return len(hom_basis(M, N))


def morphism_coordinates(f: Morphism, basis: List[Morphism]) -> Optional[list]:
    """Coordinates of f in a list of morphisms, or None if outside their span."""
    field = f.source.algebra.field
    if not basis:
        return [] if f.is_zero() else None
    cols = [b.vec() for b in basis]
    mat = Matrix.from_cols(field, cols, nrows=len(cols[0]))
    return mat.solve(f.vec())


# -- projective covers -------------------------------------------------------------


def element_action(M: Module, i: int, v: int, vec: list) -> Tuple[int, list]:
    """Apply basis element i to an element of the vertex-v block; i may be
    an idempotent.  Returns (vertex, coords)."""
    A = M.algebra
    if A.is_idempotent_index(i):
        if i == v:
            return v, list(vec)
        return i, [A.field.zero()] * M.dims[i]
    if A.src(i) != v:
        return A.tgt(i), [A.field.zero()] * M.dims[A.tgt(i)]
    return A.tgt(i), M.action[i].apply(vec)


def projective_cover(M: Module) -> Tuple[Module, Morphism]:
    """(P, epi P -> M) with P projective and the map a projective cover."""
    A = M.algebra
    f = A.field
    T, proj = top(M)
    # multiplicities: top is semisimple, its vertex dims count the simples
    summands: List[Module] = []
    lifts: List[Tuple[int, list]] = []  # (vertex, element of M at that vertex)
    for v in range(A.n_vertices):
        for c in range(T.dims[v]):
            target = [f.zero()] * T.dims[v]
            target[c] = f.one()
            x = proj.mats[v].solve(target)
            if x is None:
                raise ModuleError("top projection is not surjective")
            summands.append(projective_indecomposable(A, v))
            lifts.append((v, x))
    P, injs, _ = direct_sum(A, summands, name=f"P({M.name})")
    # map each P_v copy by sending the path basis element b (src v) to b * x
    mats = [Matrix.zeros(f, M.dims[w], P.dims[w]).to_lists() for w in range(A.n_vertices)]
    offsets = [0] * A.n_vertices
    for (v, x) in lifts:
        mine = A.basis_with_src(v)
        by_vertex: List[List[int]] = [[] for _ in range(A.n_vertices)]
        for i in mine:
            by_vertex[A.tgt(i)].append(i)
        for w in range(A.n_vertices):
            for k, i in enumerate(by_vertex[w]):
                _, img = element_action(M, i, v, x)
                col = offsets[w] + k
                for r, val in enumerate(img):
                    mats[w][r][col] = val
            offsets[w] += len(by_vertex[w])
    epi = Morphism(
        P, M, [Matrix(f, M.dims[w], P.dims[w], mats[w]) for w in range(A.n_vertices)],
        validate=True,
    )
    if not epi.is_surjective():
        raise ModuleError("projective cover construction failed to be surjective")
    return P, epi


def is_projective_module(M: Module) -> bool:
    if M.is_zero():
        return True
    P, epi = projective_cover(M)
    K, _ = epi.kernel()
    return K.is_zero()


def injective_envelope(M: Module) -> Tuple[Module, Morphism]:
    """(E, mono M -> E) with E injective and the map an injective envelope."""
    DM = dual_module(M)
    P, epi = projective_cover(DM)
    mono = dual_morphism(epi)
    # mono: D(DM) -> D(P); identify D(DM) with M (actions transpose twice)
    E = mono.target
    return E, Morphism(M, E, mono.mats, validate=False)


def is_injective_module(M: Module) -> bool:
    if M.is_zero():
        return True
    return is_projective_module(dual_module(M))


def total_action_matrix(M: Module, i: int) -> Matrix:
    """Action of any basis element (idempotents included) on the stacked
    coordinate space of M."""
    A = M.algebra
    f = A.field
    n = M.total_dim
    out = Matrix.zeros(f, n, n).to_lists()
    if A.is_idempotent_index(i):
        o = M.offsets[i]
        for k in range(M.dims[i]):
            out[o + k][o + k] = f.one()
        return Matrix(f, n, n, out)
    s, t = A.src(i), A.tgt(i)
    m = M.action[i]
    os_, ot = M.offsets[s], M.offsets[t]
    for r in range(m.nrows):
        for c in range(m.ncols):
            out[ot + r][os_ + c] = m.rows[r][c]
    return Matrix(f, n, n, out)


def right_action_totals(Xop: Module) -> Tuple[int, Dict[int, Matrix]]:
    """Total right-action matrices of a right module given as a left module
    over the opposite algebra.  Index i refers to the base algebra's basis."""
    acts = {}
    for i in range(Xop.algebra.dim):
        acts[i] = total_action_matrix(Xop, i)
    return Xop.total_dim, acts


def module_from_total_action(
    algebra: Algebra,
    n: int,
    total_act: Dict[int, Matrix],
    name: str = "",
    validate: bool = True,
) -> Tuple[Module, Matrix, Matrix]:
    """Vertex-local module from an action of every basis element on k^n.

    `total_act[i]` is the n x n matrix of basis element i, including the
    idempotents.  Returns (module, to_vertex, from_vertex) where to_vertex
    maps raw coordinates to the stacked per-vertex coordinates of the module
    and from_vertex is its inverse.
    """
    f = algebra.field
    blocks: List[Matrix] = []
    for v in range(algebra.n_vertices):
        ev = total_act[v]
        blocks.append(ev.column_space_basis())
    Q = Matrix.hstack(blocks) if blocks else Matrix.zeros(f, n, 0)
    if Q.nrows != n or Q.ncols != n:
        raise ModuleError("idempotent images do not exhaust the space")
    Qinv = Q.inverse()
    if Qinv is None:
        raise ModuleError("idempotent images do not decompose the space")
    dims = [b.ncols for b in blocks]
    offs = [0]
    for d in dims:
        offs.append(offs[-1] + d)
    action = {}
    for i in algebra.nonidem_indices:
        s, t = algebra.src(i), algebra.tgt(i)
        rows = [Qinv.rows[offs[t] + r] for r in range(dims[t])]
        proj_t = Matrix(f, dims[t], n, [list(r) for r in rows])
        action[i] = proj_t.mul(total_act[i]).mul(blocks[s])
        if validate:
            # the raw action must respect the vertex grading
            emb = Matrix.zeros(f, n, n).to_lists()
            for r in range(dims[t]):
                for c in range(dims[s]):
                    emb[offs[t] + r][offs[s] + c] = action[i].rows[r][c]
            if Q.mul(Matrix(f, n, n, emb)).mul(Qinv) != total_act[i]:
                raise ModuleError("total action does not respect the idempotent grading")
    M = Module(algebra, dims, action, name=name, validate=validate)
    return M, Qinv, Q
