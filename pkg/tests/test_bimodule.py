import pytest

from trigor.bimodule import Bimodule
from trigor.linalg import GF, Matrix
from trigor.module import (
    Morphism,
    hom_dim,
    projective_indecomposable,
    regular_module,
    simple_module,
)


def test_regular_bimodule_tensor_is_identity_on_dims(DN):
    U = Bimodule.regular(DN)
    for M in (regular_module(DN), simple_module(DN, 0)):
        T = U.tensor(M)
        assert T.module.dims == M.dims


def test_tensor_cache_is_shared(DN):
    U = Bimodule.regular(DN)
    M = simple_module(DN, 0)
    assert U.tensor(M) is U.tensor(M)


def test_tensor_right_exactness_dims(A2):
    # tensoring the regular bimodule against the projective cover sequence
    U = Bimodule.regular(A2)
    S1 = simple_module(A2, 0)
    P1 = projective_indecomposable(A2, 0)
    from trigor.module import hom_basis

    f = hom_basis(P1, S1)[0]
    Tf = U.tensor_map(f)
    assert Tf.is_surjective()
    assert Tf.source is U.tensor(P1).module
    assert Tf.target is U.tensor(S1).module


def test_tensor_functoriality(DN):
    U = Bimodule.regular(DN)
    R = regular_module(DN)
    S = simple_module(DN, 0)
    from trigor.module import hom_basis

    f = hom_basis(R, S)[0]
    idR = Morphism.identity(R)
    assert U.tensor_map(f.compose(idR)).mats[0] == U.tensor_map(f).mats[0]
    assert U.tensor_map(Morphism.zero_map(R, S)).is_zero()


def test_hom_module_dims(DN):
    U = Bimodule.regular(DN)
    R = regular_module(DN)
    H = U.hom(R)
    assert H.module.dims == R.dims


def test_adjunction_dimension_count(A2):
    # maps U (x) M1 -> M2 correspond to maps M1 -> Hom(U, M2)
    U = Bimodule.regular(A2)
    M1 = regular_module(A2)
    M2 = simple_module(A2, 1)
    left = hom_dim(U.tensor(M1).module, M2)
    right = hom_dim(M1, U.hom(M2).module)
    assert left == right


def test_bimodule_validation():
    F = GF(2)
    from trigor.fixtures import one_point, two_points

    K1 = one_point(2)
    K2 = two_points(2)
    # a one-dimensional space where the two idempotents of K2 act on the
    # right through the first vertex only
    U = Bimodule(
        K1,
        K2,
        1,
        left={0: Matrix.identity(F, 1)},
        right={0: Matrix.identity(F, 1), 1: Matrix.zeros(F, 1, 1)},
    )
    assert U.n == 1
    with pytest.raises(Exception):
        Bimodule(
            K1,
            K1,
            1,
            left={0: Matrix.zeros(F, 1, 1)},  # identity must act as identity
            right={0: Matrix.identity(F, 1)},
        )
