"""Finite-dimensional based algebras: bound quiver algebras and friends.

An algebra here is given by a finite basis adapted to a complete set of
orthogonal primitive idempotents (the "vertices"): the first `len(vertices)`
basis elements are the idempotents themselves, every further basis element b
has a source and a target vertex with e_tgt * b = b = b * e_src, and the
non-idempotent part of the basis spans the Jacobson radical.  Bound quiver
algebras produce such a basis from path classes; triangular matrix rings glue
one together from the two diagonal algebras plus an adapted bimodule basis.
Everything downstream (hom spaces, covers, resolutions) consumes only this
presentation, so both sources are handled by the same machinery.

Paths are written in order of application: the tuple (a, b) means "first
traverse arrow a, then arrow b" and requires tgt(a) == src(b).  Relations in
a bound quiver must be linear combinations of parallel paths of a common
length >= 2; that covers admissible ideals with length-homogeneous
generators, which is all the bundled fixtures need.  Mixed-length relations
are rejected rather than risk a silently wrong basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import Field, Matrix


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class BasisElement:
    label: str
    src: int
    tgt: int


@dataclass(frozen=True)
class Arrow:
    label: str
    src: int
    tgt: int


_algebra_serial = itertools.count()


class Algebra:
    """A based finite-dimensional algebra over an exact field."""

    def __init__(
        self,
        field: Field,
        vertices: Sequence[str],
        basis: Sequence[BasisElement],
        mult: List[List[Optional[list]]],
        gen_indices: Sequence[int],
        name: str = "",
        arrows: Optional[Sequence[Arrow]] = None,
        relations: Optional[list] = None,
        path_reps: Optional[List[Tuple[int, ...]]] = None,
        validate: bool = True,
    ):
        self.field = field
        self.vertices = list(vertices)
        self.basis = list(basis)
        self.mult = mult
        self.gen_indices = tuple(gen_indices)
        self.name = name or f"algebra{next(_algebra_serial)}"
        self.arrows = list(arrows) if arrows is not None else None
        self.relations = relations
        self.path_reps = path_reps
        self.dim = len(self.basis)
        self.n_vertices = len(self.vertices)
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.basis_index = {b.label: i for i, b in enumerate(self.basis)}
        if len(self.basis_index) != self.dim:
            raise AlgebraError("duplicate basis labels")
        if self.arrows is not None:
            self.arrow_index = {a.label: i for i, a in enumerate(self.arrows)}
        self._cache: dict = {}
        self._opposite: Optional["Algebra"] = None
        if validate:
            self._validate()

    # -- structure access --------------------------------------------------

    def src(self, i: int) -> int:
        return self.basis[i].src

    def tgt(self, i: int) -> int:
        return self.basis[i].tgt

    def is_idempotent_index(self, i: int) -> bool:
        return i < self.n_vertices

    @property
    def nonidem_indices(self) -> range:
        return range(self.n_vertices, self.dim)

    def zero_vec(self) -> list:
        return [self.field.zero()] * self.dim

    def product_vec(self, i: int, j: int) -> list:
        """Coefficient vector of basis_i * basis_j."""
        f = self.field
        if self.is_idempotent_index(i):
            if self.is_idempotent_index(j):
                v = self.zero_vec()
                if i == j:
                    v[i] = f.one()
                return v
            v = self.zero_vec()
            if self.tgt(j) == i:
                v[j] = f.one()
            return v
        if self.is_idempotent_index(j):
            v = self.zero_vec()
            if self.src(i) == j:
                v[i] = f.one()
            return v
        entry = self.mult[i - self.n_vertices][j - self.n_vertices]
        if entry is None:
            return self.zero_vec()
        return list(entry)

    def multiply(self, a: Sequence, b: Sequence) -> list:
        """Product of two elements given as coefficient vectors."""
        f = self.field
        z = f.zero()
        out = self.zero_vec()
        for i, ca in enumerate(a):
            if ca == z:
                continue
            for j, cb in enumerate(b):
                if cb == z:
                    continue
                c = f.mul(ca, cb)
                for k, ck in enumerate(self.product_vec(i, j)):
                    if ck != z:
                        out[k] = f.add(out[k], f.mul(c, ck))
        return out

    def unit_vec(self) -> list:
        v = self.zero_vec()
        for i in range(self.n_vertices):
            v[i] = self.field.one()
        return v

    def basis_with_src(self, v: int) -> List[int]:
        return [i for i in range(self.dim) if self.src(i) == v]

    def basis_with_tgt(self, v: int) -> List[int]:
        return [i for i in range(self.dim) if self.tgt(i) == v]

    # -- validation ---------------------------------------------------------

    def _validate(self):
        f = self.field
        for v in range(self.n_vertices):
            b = self.basis[v]
            if b.src != v or b.tgt != v:
                raise AlgebraError(f"idempotent slot {v} has wrong source/target")
        for b in self.basis:
            if not (0 <= b.src < self.n_vertices and 0 <= b.tgt < self.n_vertices):
                raise AlgebraError(f"basis element {b.label}: bad vertex")
        n0 = self.n_vertices
        for i in self.nonidem_indices:
            for j in self.nonidem_indices:
                entry = self.mult[i - n0][j - n0]
                if self.src(i) != self.tgt(j):
                    if entry is not None and any(x != f.zero() for x in entry):
                        raise AlgebraError(
                            f"product {self.basis[i].label}*{self.basis[j].label} "
                            "nonzero despite vertex mismatch"
                        )
                    continue
                if entry is None:
                    continue
                if len(entry) != self.dim:
                    raise AlgebraError("multiplication table row of wrong length")
                for k, c in enumerate(entry):
                    if c == f.zero():
                        continue
                    if self.is_idempotent_index(k):
                        raise AlgebraError(
                            "product of radical elements has idempotent component"
                        )
                    if self.src(k) != self.src(j) or self.tgt(k) != self.tgt(i):
                        raise AlgebraError(
                            f"product {self.basis[i].label}*{self.basis[j].label} "
                            "not parallel to its factors"
                        )
        # associativity on all basis triples
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.product_vec(i, j)
                for k in range(self.dim):
                    left = self.multiply(ij, self._unit_basis(k))
                    right = self.multiply(self._unit_basis(i), self.product_vec(j, k))
                    if left != right:
                        raise AlgebraError(
                            f"associativity fails on ({self.basis[i].label},"
                            f"{self.basis[j].label},{self.basis[k].label})"
                        )
        self._validate_radical_nilpotent()
        self._validate_generators()

    def _unit_basis(self, i: int) -> list:
        v = self.zero_vec()
        v[i] = self.field.one()
        return v

    def _validate_radical_nilpotent(self):
        """The span of non-idempotent basis elements must be a nilpotent ideal."""
        f = self.field
        n0 = self.n_vertices
        r = self.dim - n0
        if r == 0:
            return
        # powers rad^k in radical coordinates; nilpotent iff ranks drop to 0
        cur = Matrix.identity(f, r)
        prev_rank = r
        for _ in range(r + 1):
            rows = []
            for i in range(cur.nrows):
                vec = [f.zero()] * self.dim
                for j in range(r):
                    vec[n0 + j] = cur.rows[i][j]
                for g in range(r):
                    prod = self.multiply(self._unit_basis(n0 + g), vec)
                    rows.append(prod[n0:])
            if not rows:
                return
            R, pivots = Matrix.from_rows(f, rows, ncols=r).rref()
            if not pivots:
                return
            if len(pivots) >= prev_rank:
                raise AlgebraError("radical span is not nilpotent")
            prev_rank = len(pivots)
            cur = Matrix.from_rows(f, [R.rows[i] for i in range(len(pivots))], ncols=r)
        raise AlgebraError("radical span is not nilpotent")

    def _validate_generators(self):
        """Generators plus idempotents must span the algebra multiplicatively."""
        f = self.field
        span_vecs = [self._unit_basis(i) for i in range(self.n_vertices)]
        span_vecs += [self._unit_basis(i) for i in self.gen_indices]
        mat = Matrix.from_rows(f, span_vecs, ncols=self.dim)
        rank = mat.rank()
        while True:
            new_rows = [list(r) for r in mat.rows]
            for g in self.gen_indices:
                for row in list(mat.rows):
                    new_rows.append(self.multiply(self._unit_basis(g), row))
            nxt = Matrix.from_rows(f, new_rows, ncols=self.dim)
            nrank = nxt.rank()
            if nrank == rank:
                break
            mat, rank = nxt, nrank
        if rank != self.dim:
            raise AlgebraError("declared generators do not generate the algebra")

    # -- opposite algebra ---------------------------------------------------

    def opposite(self) -> "Algebra":
        if self._opposite is not None:
            return self._opposite
        n0 = self.n_vertices
        basis = [
            BasisElement(b.label, b.tgt, b.src) for b in self.basis
        ]
        r = self.dim - n0
        mult = [[self.mult[j][i] for j in range(r)] for i in range(r)]
        arrows = None
        relations = None
        path_reps = None
        if self.arrows is not None:
            arrows = [Arrow(a.label, a.tgt, a.src) for a in self.arrows]
            path_reps = [tuple(reversed(p)) for p in self.path_reps]
            if self.relations is not None:
                relations = [
                    [(c, tuple(reversed(p))) for c, p in rel] for rel in self.relations
                ]
        opp = Algebra(
            self.field,
            self.vertices,
            basis,
            mult,
            self.gen_indices,
            name=self.name + "^op",
            arrows=arrows,
            relations=relations,
            path_reps=path_reps,
            validate=False,
        )
        opp._opposite = self
        self._opposite = opp
        return opp

    def __repr__(self):
        return f"<Algebra {self.name} dim={self.dim} over {self.field!r}>"

    # -- bound quiver constructor -------------------------------------------

    @staticmethod
    def from_quiver(
        field: Field,
        vertices: Sequence[str],
        arrows: Sequence[Tuple[str, str, str]],
        relations: Sequence[Sequence] = (),
        name: str = "",
        max_path_length: int = 64,
        max_paths_per_level: int = 200000,
    ) -> "Algebra":
        """Build kQ/I from a quiver and length-homogeneous admissible relations.

        `arrows`: triples (label, source vertex, target vertex).
        `relations`: each relation is a list of (coefficient, path) pairs where
        a path is a list of arrow labels in order of application.  All paths in
        one relation must be parallel and share a common length >= 2.
        """
        vlist = list(vertices)
        vindex = {v: i for i, v in enumerate(vlist)}
        if len(vindex) != len(vlist):
            raise AlgebraError("duplicate vertex labels")
        alist = []
        for label, s, t in arrows:
            if s not in vindex or t not in vindex:
                raise AlgebraError(f"arrow {label}: unknown vertex")
            alist.append(Arrow(label, vindex[s], vindex[t]))
        aindex = {a.label: i for i, a in enumerate(alist)}
        if len(aindex) != len(alist):
            raise AlgebraError("duplicate arrow labels")

        rels: List[List[Tuple[object, Tuple[int, ...]]]] = []
        for rel in relations:
            terms = []
            for coeff, path in rel:
                idx = tuple(aindex[l] for l in path)
                for a, b in zip(idx, idx[1:]):
                    if alist[a].tgt != alist[b].src:
                        raise AlgebraError(f"relation path {list(path)} is not composable")
                terms.append((field.parse(coeff), idx))
            if not terms:
                raise AlgebraError("empty relation")
            lens = {len(p) for _, p in terms}
            if len(lens) != 1:
                raise AlgebraError(
                    "relation mixes path lengths; only length-homogeneous "
                    "relations are supported"
                )
            if lens == {0} or lens == {1}:
                raise AlgebraError("relations must involve paths of length >= 2")
            sts = {(alist[p[0]].src, alist[p[-1]].tgt) for _, p in terms}
            if len(sts) != 1:
                raise AlgebraError("relation paths are not parallel")
            rels.append(terms)

        # level-by-level standard monomials and normal forms; the degree-l
        # piece of the ideal is spanned by translates u*rho*w of the
        # homogeneous generators, with u, w raw paths of complementary length
        normal: Dict[Tuple[int, ...], Dict[Tuple[int, ...], object]] = {}
        std_by_level: List[List[Tuple[int, ...]]] = []
        prev_raw = [(a,) for a in range(len(alist))]
        std_by_level.append(prev_raw)  # level 1: all arrows survive
        for p in prev_raw:
            normal[p] = {p: field.one()}
        raw_levels: Dict[int, List[Tuple[int, ...]]] = {1: prev_raw}
        level = 1
        while True:
            if not std_by_level[level - 1]:
                break
            level += 1
            if level > max_path_length:
                raise AlgebraError(
                    f"no finite basis within path length {max_path_length}; "
                    "is the ideal admissible?"
                )
            raw = []
            for p in raw_levels[level - 1]:
                last_tgt = alist[p[-1]].tgt
                for a in range(len(alist)):
                    if alist[a].src == last_tgt:
                        raw.append(p + (a,))
            if len(raw) > max_paths_per_level:
                raise AlgebraError("path explosion; refusing to continue")
            raw_levels[level] = raw
            if not raw:
                std_by_level.append([])
                break
            col_of = {p: c for c, p in enumerate(raw)}
            trans_rows = []
            for terms in rels:
                L = len(terms[0][1])
                if L > level:
                    continue
                rel_src = alist[terms[0][1][0]].src
                rel_tgt = alist[terms[0][1][-1]].tgt
                for i in range(0, level - L + 1):
                    j = level - L - i
                    if i == 0:
                        pres = [()]
                    else:
                        pres = [q for q in raw_levels[i] if alist[q[-1]].tgt == rel_src]
                    if j == 0:
                        sufs = [()]
                    else:
                        sufs = [q for q in raw_levels[j] if alist[q[0]].src == rel_tgt]
                    for u in pres:
                        for w in sufs:
                            row = [field.zero()] * len(raw)
                            for coeff, p in terms:
                                full = u + p + w
                                row[col_of[full]] = field.add(row[col_of[full]], coeff)
                            if any(x != field.zero() for x in row):
                                trans_rows.append(row)
            if trans_rows:
                mat = Matrix.from_rows(field, trans_rows, ncols=len(raw))
                R, pivots = mat.rref()
            else:
                R, pivots = Matrix.zeros(field, 0, len(raw)), ()
            pivset = set(pivots)
            std = [raw[c] for c in range(len(raw)) if c not in pivset]
            # normal forms at this level
            for c in range(len(raw)):
                p = raw[c]
                if c not in pivset:
                    normal[p] = {p: field.one()}
            for i, c in enumerate(pivots):
                p = raw[c]
                nf = {}
                for c2 in range(len(raw)):
                    if c2 in pivset:
                        continue
                    val = R.rows[i][c2]
                    if val != field.zero():
                        nf[raw[c2]] = field.neg(val)
                normal[p] = nf
            std_by_level.append(std)

        death_level = len(std_by_level)  # paths of this length are all zero
        basis_elems: List[BasisElement] = [
            BasisElement(v, i, i) for i, v in enumerate(vlist)
        ]
        path_reps: List[Tuple[int, ...]] = [() for _ in vlist]
        path_label = lambda p: "*".join(alist[a].label for a in p)
        for lev_paths in std_by_level:
            for p in lev_paths:
                basis_elems.append(
                    BasisElement(path_label(p), alist[p[0]].src, alist[p[-1]].tgt)
                )
                path_reps.append(p)

        n0 = len(vlist)
        dim = len(basis_elems)
        r = dim - n0
        index_of_path = {path_reps[n0 + i]: n0 + i for i in range(r)}

        def nf_vec(p: Tuple[int, ...]) -> Optional[list]:
            if len(p) >= death_level:
                return None
            nf = normal.get(p)
            if nf is None:
                return None
            vec = [field.zero()] * dim
            any_nz = False
            for q, c in nf.items():
                vec[index_of_path[q]] = c
                if c != field.zero():
                    any_nz = True
            return vec if any_nz else None

        mult: List[List[Optional[list]]] = [[None] * r for _ in range(r)]
        for i in range(r):
            pi = path_reps[n0 + i]
            for j in range(r):
                pj = path_reps[n0 + j]
                if basis_elems[n0 + i].src != basis_elems[n0 + j].tgt:
                    continue
                mult[i][j] = nf_vec(pj + pi)

        gen_indices = [n0 + i for i in range(r) if len(path_reps[n0 + i]) == 1]
        alg = Algebra(
            field,
            vlist,
            basis_elems,
            mult,
            gen_indices,
            name=name,
            arrows=alist,
            relations=rels,
            path_reps=path_reps,
            validate=True,
        )
        return alg
