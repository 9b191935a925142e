import pytest

from trigor.algebra import Algebra, AlgebraError
from trigor.linalg import GF, QQ

F2 = GF(2)


def test_path_algebra_basis(A2):
    # two idempotents and one arrow
    assert A2.dim == 3
    assert [b.label for b in A2.basis] == ["1", "2", "a"]
    assert A2.n_vertices == 2
    assert A2.src(2) == 0 and A2.tgt(2) == 1
    assert list(A2.gen_indices) == [2]
    assert tuple(A2.path_reps[2]) == (0,)


def _unit(R, i):
    v = R.zero_vec()
    v[i] = R.field.one()
    return v


def test_truncated_polynomial_basis(DN):
    assert DN.dim == 2
    assert [b.label for b in DN.basis] == ["v", "x"]
    # x * x = 0 under the relation
    assert DN.product_vec(1, 1) == DN.zero_vec()


def test_multiplication_table_associativity(DN, A2):
    for R in (DN, A2):
        for i in range(R.dim):
            for j in range(R.dim):
                for k in range(R.dim):
                    left = R.multiply(R.product_vec(i, j), _unit(R, k))
                    right = R.multiply(_unit(R, i), R.product_vec(j, k))
                    assert left == right


def test_idempotent_decomposition(A2):
    one = A2.zero_vec()
    for v in range(A2.n_vertices):
        ev = A2.product_vec(v, v)
        one = [A2.field.add(a, b) for a, b in zip(one, ev)]
    for k in range(A2.dim):
        assert A2.multiply(one, _unit(A2, k)) == _unit(A2, k)
        assert A2.multiply(_unit(A2, k), one) == _unit(A2, k)


def test_three_step_relation():
    # a then b composes to zero
    A = Algebra.from_quiver(
        F2,
        ["1", "2", "3"],
        [("a", "1", "2"), ("b", "2", "3")],
        relations=[[(1, ["a", "b"])]],
        name="A3_rel",
    )
    assert A.dim == 5  # e1, e2, e3, a, b and no path ab
    labels = {b.label for b in A.basis}
    assert "a*b" not in labels and "b*a" not in labels


def test_commutative_square_relation():
    A = Algebra.from_quiver(
        QQ,
        ["1", "2", "3", "4"],
        [("a", "1", "2"), ("b", "1", "3"), ("c", "2", "4"), ("d", "3", "4")],
        relations=[[(1, ["a", "c"]), (-1, ["b", "d"])]],
    )
    # 4 vertices + 4 arrows + one surviving length-two path
    assert A.dim == 9


def test_relation_errors():
    with pytest.raises(AlgebraError):
        Algebra.from_quiver(F2, ["1", "1"], [])
    with pytest.raises(AlgebraError):
        Algebra.from_quiver(F2, ["1"], [("x", "1", "1")], relations=[[(1, ["x"])]])
    with pytest.raises(AlgebraError):
        Algebra.from_quiver(
            F2,
            ["1", "2"],
            [("a", "1", "2")],
            relations=[[(1, ["a", "a"])]],
        )


def test_nilpotency_window():
    # x^3 = 0 leaves basis v, x, x^2
    A = Algebra.from_quiver(
        F2, ["v"], [("x", "v", "v")], relations=[[(1, ["x", "x", "x"])]]
    )
    assert A.dim == 3
    sq = A.basis_index["x*x"]
    assert A.product_vec(1, 1) == _unit(A, sq)
    assert A.product_vec(1, sq) == A.zero_vec()


def test_opposite_algebra(A2, DN):
    for R in (A2, DN):
        op = R.opposite()
        assert op.dim == R.dim
        for i in range(R.dim):
            for j in range(R.dim):
                assert op.product_vec(i, j) == R.product_vec(j, i)
