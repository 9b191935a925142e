"""Exact dense linear algebra over Q and over prime fields GF(p).

Everything here is deterministic: row reduction always picks the first
nonzero entry in scan order as pivot, kernel bases are indexed by free
columns in increasing order, and solutions of underdetermined systems set
free variables to zero.  Degenerate shapes (0xN, Nx0) are legal and show up
constantly as zero modules, so no routine may assume positive dimensions.

Scalars are plain Python objects: `fractions.Fraction` over Q, ints in
range(p) over GF(p).  A `Field` instance mediates all arithmetic; matrices
over different fields never mix.  GF(2) matrices get a bit-packed fast path
inside the hot routines (multiplication and row reduction); the packed form
is an internal detail and never leaks through the API.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple


class Field:
    """Base class for exact scalar fields."""

    kind = "?"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def parse(self, s):
        """Parse a JSON-level scalar: int, or string like '3', '-1/2'."""
        raise NotImplementedError

    def to_str(self, a) -> str:
        return str(a)

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def elements(self):
        """Iterate all field elements (finite fields only)."""
        raise TypeError(f"field {self} is not finite")

    @property
    def is_finite(self) -> bool:
        return False


class RationalField(Field):
    kind = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, s):
        if isinstance(s, bool):
            raise ValueError(f"not a scalar: {s!r}")
        if isinstance(s, int):
            return Fraction(s)
        if isinstance(s, str):
            return Fraction(s.strip())
        raise ValueError(f"cannot parse scalar {s!r} over Q")

    def to_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    kind = "GF"

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n: int):
        return n % self.p

    def parse(self, s):
        if isinstance(s, bool):
            raise ValueError(f"not a scalar: {s!r}")
        if isinstance(s, int):
            return s % self.p
        if isinstance(s, str):
            f = Fraction(s.strip())
            num = f.numerator % self.p
            den = f.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"{s} has no image in GF({self.p})")
            return (num * pow(den, self.p - 2, self.p)) % self.p
        raise ValueError(f"cannot parse scalar {s!r} over GF({self.p})")

    def elements(self):
        return range(self.p)

    @property
    def is_finite(self) -> bool:
        return True

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()

_gf_cache: dict = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_to_json(field: Field):
    if field == QQ:
        return "Q"
    return {"GF": field.p}


def field_from_json(data) -> Field:
    if data == "Q" or data == "QQ":
        return QQ
    if isinstance(data, dict) and "GF" in data:
        return GF(int(data["GF"]))
    raise ValueError(f"unknown field spec {data!r}")


def _is_gf2(field: Field) -> bool:
    return isinstance(field, PrimeField) and field.p == 2


class Matrix:
    """Immutable dense matrix over an exact field.

    Rows are stored as lists; treat instances as frozen after creation.
    """

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows: List[list]):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rows(field: Field, rows: Sequence[Sequence], ncols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows:
            n = len(rows[0])
            if any(len(r) != n for r in rows):
                raise ValueError("ragged rows")
        else:
            n = 0 if ncols is None else ncols
        if ncols is not None and rows and n != ncols:
            raise ValueError(f"expected {ncols} columns, got {n}")
        conv = field.parse
        out = [[conv(x) if not _already_scalar(field, x) else x for x in r] for r in rows]
        return Matrix(field, len(out), n, out)

    @staticmethod
    def zeros(field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, nrows, ncols, [[z] * ncols for _ in range(nrows)])

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        rows = [[z] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = o
        return Matrix(field, n, n, rows)

    @staticmethod
    def column(field: Field, entries: Sequence) -> "Matrix":
        return Matrix(field, len(entries), 1, [[x] for x in entries])

    @staticmethod
    def from_cols(field: Field, cols: Sequence[Sequence], nrows: Optional[int] = None) -> "Matrix":
        conv = field.parse
        cols = [
            [x if _already_scalar(field, x) else conv(x) for x in c] for c in cols
        ]
        if cols:
            m = len(cols[0])
            if any(len(c) != m for c in cols):
                raise ValueError("ragged columns")
        else:
            m = 0 if nrows is None else nrows
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(m)]
        return Matrix(field, m, len(cols), rows)

    # -- basic access ------------------------------------------------------

    def get(self, i: int, j: int):
        return self.rows[i][j]

    def row(self, i: int) -> list:
        return list(self.rows[i])

    def col(self, j: int) -> list:
        return [self.rows[i][j] for i in range(self.nrows)]

    def to_lists(self) -> List[list]:
        return [list(r) for r in self.rows]

    def to_str_lists(self) -> List[List[str]]:
        f = self.field
        return [[f.to_str(x) for x in r] for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.to_str(x) for x in r) for r in self.rows)
        return f"Matrix({self.field!r} {self.nrows}x{self.ncols} [{body}])"

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(x == z for r in self.rows for x in r)

    def is_identity(self) -> bool:
        if self.nrows != self.ncols:
            return False
        z, o = self.field.zero(), self.field.one()
        return all(
            self.rows[i][j] == (o if i == j else z)
            for i in range(self.nrows)
            for j in range(self.ncols)
        )

    # -- arithmetic --------------------------------------------------------

    def _check_same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def add(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in add")
        f = self.field
        rows = [
            [f.add(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self.rows, other.rows)
        ]
        return Matrix(f, self.nrows, self.ncols, rows)

    def sub(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in sub")
        f = self.field
        rows = [
            [f.sub(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self.rows, other.rows)
        ]
        return Matrix(f, self.nrows, self.ncols, rows)

    def neg(self) -> "Matrix":
        f = self.field
        return Matrix(f, self.nrows, self.ncols, [[f.neg(x) for x in r] for r in self.rows])

    def scaled(self, c) -> "Matrix":
        f = self.field
        return Matrix(f, self.nrows, self.ncols, [[f.mul(c, x) for x in r] for r in self.rows])

    def mul(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch in mul: {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}"
            )
        f = self.field
        if _is_gf2(f) and self.ncols and other.ncols:
            bcols = other.ncols
            brows = [_pack_row(r) for r in other.rows]
            out = []
            for ra in self.rows:
                acc = 0
                for k, a in enumerate(ra):
                    if a:
                        acc ^= brows[k]
                out.append(_unpack_row(acc, bcols))
            return Matrix(f, self.nrows, bcols, out)
        z = f.zero()
        ocols = list(zip(*other.rows)) if other.rows else []
        rows = []
        for ra in self.rows:
            row = []
            for j in range(other.ncols):
                acc = z
                cj = ocols[j] if ocols else ()
                for a, b in zip(ra, cj):
                    if a != z:
                        acc = f.add(acc, f.mul(a, b))
                row.append(acc)
            rows.append(row)
        return Matrix(f, self.nrows, other.ncols, rows)

    def apply(self, vec: Sequence) -> list:
        """Matrix times column vector (a plain list)."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        f = self.field
        z = f.zero()
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, vec):
                if a != z and b != z:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    def transpose(self) -> "Matrix":
        rows = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return Matrix(self.field, self.ncols, self.nrows, rows)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        rows = [[self.rows[i][j] for j in col_idx] for i in row_idx]
        return Matrix(self.field, len(row_idx), len(col_idx), rows)

    @staticmethod
    def hstack(mats: Sequence["Matrix"]) -> "Matrix":
        mats = list(mats)
        if not mats:
            raise ValueError("hstack of nothing")
        m = mats[0].nrows
        f = mats[0].field
        if any(x.nrows != m or x.field != f for x in mats):
            raise ValueError("hstack: incompatible blocks")
        rows = [sum((x.rows[i] for x in mats), []) for i in range(m)]
        return Matrix(f, m, sum(x.ncols for x in mats), rows)

    @staticmethod
    def vstack(mats: Sequence["Matrix"]) -> "Matrix":
        mats = list(mats)
        if not mats:
            raise ValueError("vstack of nothing")
        n = mats[0].ncols
        f = mats[0].field
        if any(x.ncols != n or x.field != f for x in mats):
            raise ValueError("vstack: incompatible blocks")
        rows = []
        for x in mats:
            rows.extend(list(r) for r in x.rows)
        return Matrix(f, len(rows), n, rows)

    @staticmethod
    def block_diag(field: Field, mats: Sequence["Matrix"]) -> "Matrix":
        mats = list(mats)
        m = sum(x.nrows for x in mats)
        n = sum(x.ncols for x in mats)
        out = Matrix.zeros(field, m, n)
        r0 = c0 = 0
        for x in mats:
            if x.field != field:
                raise ValueError("block_diag: field mismatch")
            for i in range(x.nrows):
                out.rows[r0 + i][c0 : c0 + x.ncols] = list(x.rows[i])
            r0 += x.nrows
            c0 += x.ncols
        return out

    # -- elimination -------------------------------------------------------

    def rref(self, with_transform: bool = False):
        """Reduced row echelon form.

        Returns (R, pivots) or (R, pivots, T) with T @ self == R, T invertible.
        Pivot choice is the first nonzero entry per column scan, so the result
        is deterministic.
        """
        f = self.field
        if _is_gf2(f):
            return self._rref_gf2(with_transform)
        m, n = self.nrows, self.ncols
        R = [list(r) for r in self.rows]
        T = None
        if with_transform:
            T = [[f.zero()] * m for _ in range(m)]
            for i in range(m):
                T[i][i] = f.one()
        z = f.zero()
        pivots: List[int] = []
        r = 0
        for c in range(n):
            pr = None
            for i in range(r, m):
                if R[i][c] != z:
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                R[r], R[pr] = R[pr], R[r]
                if T is not None:
                    T[r], T[pr] = T[pr], T[r]
            inv = f.inv(R[r][c])
            if inv != f.one():
                R[r] = [f.mul(inv, x) for x in R[r]]
                if T is not None:
                    T[r] = [f.mul(inv, x) for x in T[r]]
            for i in range(m):
                if i != r and R[i][c] != z:
                    k = R[i][c]
                    Rr = R[r]
                    R[i] = [f.sub(x, f.mul(k, y)) for x, y in zip(R[i], Rr)]
                    if T is not None:
                        Tr = T[r]
                        T[i] = [f.sub(x, f.mul(k, y)) for x, y in zip(T[i], Tr)]
            pivots.append(c)
            r += 1
        Rm = Matrix(f, m, n, R)
        if with_transform:
            return Rm, tuple(pivots), Matrix(f, m, m, T)
        return Rm, tuple(pivots)

    def _rref_gf2(self, with_transform: bool):
        f = self.field
        m, n = self.nrows, self.ncols
        rows = [_pack_row(r) for r in self.rows]
        trows = [1 << i for i in range(m)] if with_transform else None
        pivots: List[int] = []
        r = 0
        for c in range(n):
            bit = 1 << c
            pr = None
            for i in range(r, m):
                if rows[i] & bit:
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                rows[r], rows[pr] = rows[pr], rows[r]
                if trows is not None:
                    trows[r], trows[pr] = trows[pr], trows[r]
            rr = rows[r]
            for i in range(m):
                if i != r and rows[i] & bit:
                    rows[i] ^= rr
                    if trows is not None:
                        trows[i] ^= trows[r]
            pivots.append(c)
            r += 1
        Rm = Matrix(f, m, n, [_unpack_row(x, n) for x in rows])
        if with_transform:
            T = Matrix(f, m, m, [_unpack_row(x, m) for x in trows])
            return Rm, tuple(pivots), T
        return Rm, tuple(pivots)

    def rank(self) -> int:
        _, pivots = self.rref()
        return len(pivots)

    def kernel_basis(self) -> "Matrix":
        """Basis of the right null space, as columns of an ncols x k matrix.

        One basis vector per free column, in increasing column order; the
        free coordinate is set to 1 and pivot coordinates are back-filled.
        """
        f = self.field
        R, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivset]
        z, o = f.zero(), f.one()
        cols = []
        for fc in free:
            v = [z] * self.ncols
            v[fc] = o
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(R.rows[i][fc])
            cols.append(v)
        return Matrix.from_cols(f, cols, nrows=self.ncols)

    def column_space_basis(self) -> "Matrix":
        """Independent columns of self spanning its column space."""
        _, pivots = self.rref()
        return self.submatrix(range(self.nrows), list(pivots))

    def solve(self, b: Sequence) -> Optional[list]:
        """One solution of self @ x = b (free variables zero), or None."""
        X = self.solve_matrix(Matrix.column(self.field, list(b)))
        if X is None:
            return None
        return [X.rows[i][0] for i in range(self.ncols)]

    def solve_matrix(self, B: "Matrix") -> Optional["Matrix"]:
        """Solve self @ X = B for X; None when inconsistent."""
        self._check_same_field(B)
        if B.nrows != self.nrows:
            raise ValueError("solve_matrix: row mismatch")
        f = self.field
        n = self.ncols
        aug = Matrix.hstack([self, B])
        R, pivots = aug.rref()
        if any(p >= n for p in pivots):
            return None
        z = f.zero()
        X = [[z] * B.ncols for _ in range(n)]
        for i, p in enumerate(pivots):
            X[p] = R.rows[i][n:]
        return Matrix(f, n, B.ncols, X)

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of non-square matrix")
        X = self.solve_matrix(Matrix.identity(self.field, self.nrows))
        if X is None or not self.mul(X).is_identity():
            raise ValueError("matrix is singular")
        return X

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows


def _already_scalar(field: Field, x) -> bool:
    if isinstance(field, PrimeField):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < field.p
    return isinstance(x, Fraction)


def _pack_row(row: Sequence[int]) -> int:
    acc = 0
    for j, x in enumerate(row):
        if x:
            acc |= 1 << j
    return acc


def _unpack_row(bits: int, n: int) -> List[int]:
    return [(bits >> j) & 1 for j in range(n)]


def quotient_maps(sub: Matrix) -> Tuple[Matrix, Matrix]:
    """Projection and section for the quotient k^n / colspace(sub).

    Returns (proj, sect) with proj: n -> q, sect: q -> n, proj @ sect = id,
    and ker(proj) = colspace(sub).  The section picks the non-pivot standard
    basis vectors, so quotient coordinates are a subset of the original ones.
    """
    f = sub.field
    n = sub.nrows
    R, pivots = sub.transpose().rref()
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    q = len(free)
    z, o = f.zero(), f.one()
    # proj(e_k): reduce e_k modulo the echelon rows of W, keep free coords.
    proj_rows = [[z] * n for _ in range(q)]
    for k in range(n):
        if k in pivset:
            i = pivots.index(k)
            for jf, c in enumerate(free):
                proj_rows[jf][k] = f.neg(R.rows[i][c])
        else:
            proj_rows[free.index(k)][k] = o
    proj = Matrix(f, q, n, proj_rows)
    sect_rows = [[z] * q for _ in range(n)]
    for jf, c in enumerate(free):
        sect_rows[c][jf] = o
    sect = Matrix(f, n, q, sect_rows)
    return proj, sect


def intersect_colspaces(A: Matrix, B: Matrix) -> Matrix:
    """Basis (as columns) of colspace(A) ∩ colspace(B)."""
    if A.nrows != B.nrows:
        raise ValueError("ambient dimension mismatch")
    joint = Matrix.hstack([A, B])
    K = joint.kernel_basis()
    cols = []
    for j in range(K.ncols):
        coef = [K.rows[i][j] for i in range(A.ncols)]
        cols.append(A.apply(coef) if A.ncols else [A.field.zero()] * A.nrows)
    M = Matrix.from_cols(A.field, cols, nrows=A.nrows)
    return M.column_space_basis()


def colspace_contains(A: Matrix, v: Sequence) -> bool:
    return A.solve(list(v)) is not None


def colspaces_equal(A: Matrix, B: Matrix) -> bool:
    if A.nrows != B.nrows:
        return False
    ra = A.rank()
    rb = B.rank()
    if ra != rb:
        return False
    return Matrix.hstack([A, B]).rank() == ra
