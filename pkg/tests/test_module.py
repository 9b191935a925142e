import pytest

from trigor.linalg import GF, Matrix
from trigor.module import (
    Module,
    ModuleError,
    Morphism,
    direct_sum,
    dual_module,
    hom_basis,
    hom_dim,
    injective_envelope,
    injective_indecomposable,
    is_injective_module,
    is_projective_module,
    power,
    projective_cover,
    projective_indecomposable,
    radical,
    regular_module,
    simple_module,
)


def test_simple_and_projective_dims(A2):
    assert simple_module(A2, 0).dims == (1, 0)
    assert projective_indecomposable(A2, 0).dims == (1, 1)
    assert projective_indecomposable(A2, 1).dims == (0, 1)
    assert injective_indecomposable(A2, 0).dims == (1, 0)
    assert injective_indecomposable(A2, 1).dims == (1, 1)
    assert regular_module(A2).dims == (1, 2)


def test_module_validation_rejects_bad_action(DN):
    bad = {1: Matrix.from_rows(DN.field, [[1, 0], [0, 1]])}
    with pytest.raises(ModuleError):
        Module(DN, [2], bad)  # x acting invertibly contradicts x*x = 0


def test_radical_top_socle(DN, A2):
    from trigor.module import socle, top

    R = regular_module(DN)
    rad, _ = radical(R)
    assert rad.dims == (1,)
    P1 = projective_indecomposable(A2, 0)
    assert top(P1)[0].dims == (1, 0)
    assert socle(P1)[0].dims == (0, 1)


def test_hom_dims(A2):
    S1 = simple_module(A2, 0)
    S2 = simple_module(A2, 1)
    P1 = projective_indecomposable(A2, 0)
    assert hom_dim(S1, S2) == 0
    assert hom_dim(P1, P1) == 1
    assert hom_dim(P1, S1) == 1
    assert hom_dim(S1, P1) == 0
    for f in hom_basis(P1, P1):
        f._validate()


def test_direct_sum_and_power(DN):
    S = simple_module(DN, 0)
    R = regular_module(DN)
    Y, injs, projs = direct_sum(DN, [S, R])
    assert Y.dims == (3,)
    assert len(injs) == len(projs) == 2
    for i, (u, p) in enumerate(zip(injs, projs)):
        round_trip = p.compose(u)
        assert round_trip.sub(Morphism.identity(u.source)).is_zero()
        other = projs[1 - i]
        assert other.compose(u).is_zero()
    assert power(S, 3).dims == (3,)


def test_projectivity_and_injectivity(DN, A2):
    assert is_projective_module(regular_module(DN))
    assert is_injective_module(regular_module(DN))  # self-injective
    S = simple_module(DN, 0)
    assert not is_projective_module(S)
    assert not is_injective_module(S)
    S1 = simple_module(A2, 0)
    assert not is_projective_module(S1)
    assert is_injective_module(S1)


def test_projective_cover_and_injective_envelope(DN):
    S = simple_module(DN, 0)
    P, f = projective_cover(S)
    assert P.dims == (2,) and f.is_surjective()
    E, g = injective_envelope(S)
    assert E.dims == (2,) and g.is_injective()


def test_dual_module_swaps_proj_inj(A2):
    P1 = projective_indecomposable(A2, 0)
    D = dual_module(P1)
    assert D.dims == (1, 1)
    assert is_injective_module(D)


def test_morphism_algebra(DN):
    R = regular_module(DN)
    S = simple_module(DN, 0)
    maps = hom_basis(R, S)
    assert len(maps) == 1
    f = maps[0]
    assert f.is_surjective() and not f.is_injective()
    z = Morphism.zero_map(R, S)
    assert f.add(z).mats[0] == f.mats[0]
    assert f.sub(f).is_zero()
    assert f.compose(Morphism.identity(R)).mats[0] == f.mats[0]
    K, incl = f.kernel()
    assert K.dims == (1,)
    assert f.compose(incl).is_zero()
    C, proj = f.cokernel()
    assert C.is_zero() and proj.is_surjective()
