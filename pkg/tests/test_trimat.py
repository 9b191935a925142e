import pytest

from trigor.decompose import are_isomorphic, indecomposable_summands
from trigor.homology import ext_dim, gldim_up_to, pd_up_to, syzygy
from trigor.module import (
    Module,
    direct_sum,
    injective_indecomposable,
    is_injective_module,
    is_projective_module,
    projective_indecomposable,
    regular_module,
    simple_module,
)
from trigor.relgor import is_w_tilting
from trigor.trimat import (
    TriangleError,
    add_membership_triple,
    build_T_theta,
    check_adjunctions,
    check_ext_isos,
    compatibility_report,
    dim_bounds_check,
    flat_to_triple,
    functor_h,
    functor_p,
    functor_r,
    gc_structure_check,
    global_bounds_check,
    is_injective_triple,
    is_projective_triple,
    sgc_pd,
    tensor_then_collapse_is_identity,
    triple_to_flat,
    wtilting_transfer_check,
)


def test_doubling_construction(tA, tR):
    assert tA.T.dim == 9
    assert tR.T.dim == 6
    assert tA.nA == 2 and tA.nB == 2
    assert tR.nA == 1 and tR.nB == 1


def test_regular_module_is_lift_of_corner_regulars(tA, tR):
    for ta in (tA, tR):
        regT = regular_module(ta.T)
        P = functor_p(ta, regular_module(ta.A), regular_module(ta.B))
        assert are_isomorphic(regT, P.flat())
        tri = flat_to_triple(ta, regT)
        assert are_isomorphic(tri.flat(), regT)


def test_triple_round_trip_preserves_structure(tR):
    regT = regular_module(tR.T)
    tri = flat_to_triple(tR, regT)
    again = triple_to_flat(tri)
    assert are_isomorphic(again, regT)


def test_corner_criteria_match_flat_projectivity(tA, tR):
    for ta in (tA, tR):
        for v in range(ta.T.n_vertices):
            for N in (
                projective_indecomposable(ta.T, v),
                injective_indecomposable(ta.T, v),
                simple_module(ta.T, v),
            ):
                tri = flat_to_triple(ta, N)
                assert is_projective_triple(tri).holds == is_projective_module(N)
                assert is_injective_triple(tri).holds == is_injective_module(N)


def test_glued_global_dimensions(tA, tR):
    assert gldim_up_to(tA.T, 8) == 2
    assert gldim_up_to(tR.T, 8) is None


def test_adjunction_cases(tA, tR):
    A2, DN = tA.A, tR.A
    S1a = simple_module(A2, 0)
    P1a = projective_indecomposable(A2, 0)
    regB = regular_module(A2)
    regT_A = regular_module(tA.T)
    for m1, m2 in [(S1a, simple_module(A2, 1)), (P1a, regB)]:
        for N in (flat_to_triple(tA, regT_A), flat_to_triple(tA, simple_module(tA.T, 2))):
            for case in check_adjunctions(tA, m1, m2, N):
                assert case.holds, (case.pair, m1.name, m2.name)
    assert tensor_then_collapse_is_identity(tA, P1a, S1a)
    assert tensor_then_collapse_is_identity(tR, regular_module(DN), simple_module(DN, 0))


def test_ext_transport_cases(tA, tR):
    regT_A = regular_module(tA.T)
    M = flat_to_triple(tA, simple_module(tA.T, 0))
    N = flat_to_triple(tA, regT_A)
    for case in check_ext_isos(tA, M, N, 2):
        assert case.holds is not False
    for case in check_ext_isos(
        tR,
        flat_to_triple(tR, simple_module(tR.T, 0)),
        flat_to_triple(tR, regular_module(tR.T)),
        2,
    ):
        assert case.holds is not False


def test_hereditary_lift_refutation(tA):
    A2 = tA.A
    P1a = projective_indecomposable(A2, 0)
    P2a = projective_indecomposable(A2, 1)
    I1 = simple_module(A2, 0)
    I2 = projective_indecomposable(A2, 0)
    regB = regular_module(A2)
    assert pd_up_to(I1, 8) == 1
    assert ext_dim(I1, regB, 1) == 1
    rep = wtilting_transfer_check(tA, [P1a, P2a], [I1, I2])
    assert rep.glued_status == "refuted"
    assert rep.ext_identity[0] == (1, 1, 1)
    assert not rep.violations
    comp = compatibility_report(tA, [P1a, P2a], [I1, I2])
    assert comp.verdict == "refuted"
    assert comp.second_witness == {"degree": 1, "dim": 1}


def test_self_injective_double_certifies(tR):
    regR = regular_module(tR.A)
    comp = compatibility_report(tR, [regR], [regR])
    assert comp.verdict == "compatible-certified"
    rep = wtilting_transfer_check(tR, [regR], [regR])
    assert rep.glued_status == "certified" and not rep.violations


def test_injective_pair_not_a_lift(tR):
    DN = tR.A
    regR = regular_module(DN)
    zR = Module.zero(DN)
    R2 = direct_sum(DN, [regR, regR])[0]
    I0 = functor_h(tR, zR, R2)
    I1t = functor_r(tR, regR, zR)
    assert is_injective_triple(I0).holds
    assert is_injective_triple(I1t).holds
    assert is_projective_module(I0.flat())
    assert pd_up_to(I1t.flat(), 8) == 1
    comps = indecomposable_summands(direct_sum(tR.T, [I0.flat(), I1t.flat()])[0])
    assert is_w_tilting(comps, 8).status == "certified"
    addrep = add_membership_triple(I1t, [regR], [regR])
    assert not addrep.phi_injective and not addrep.holds
    addrep0 = add_membership_triple(flat_to_triple(tR, I0.flat()), [regR], [regR])
    assert addrep0.holds and addrep0.comparison is not None


def test_structure_agreement(tR):
    DN = tR.A
    SR = simple_module(DN, 0)
    regR = regular_module(DN)
    zR = Module.zero(DN)
    t1 = functor_r(tR, SR, zR)
    srep = gc_structure_check(tR, t1, [regR], [regR])
    assert srep.flat_verdict.is_refuted and srep.corner_side is False
    assert srep.agreement is True
    K = flat_to_triple(tR, syzygy(t1.flat(), 1))
    srep2 = gc_structure_check(tR, K, [regR], [regR])
    assert srep2.flat_verdict.is_certified and srep2.corner_side is True
    assert srep2.agreement is True and srep2.addendum_applicable


def test_dimension_bounds(tR):
    DN = tR.A
    SR = simple_module(DN, 0)
    regR = regular_module(DN)
    zR = Module.zero(DN)
    t1 = functor_r(tR, SR, zR)
    sg = sgc_pd(tR, [regR], [SR, regR])
    assert sg.value == 0 and sg.exact
    db = dim_bounds_check(tR, t1, [regR], [regR], sg=0)
    assert db.glued_dim == 1 and db.sandwich_holds
    t2 = functor_r(tR, zR, SR)
    db2 = dim_bounds_check(tR, t2, [regR], [regR], sg=0)
    assert db2.zero_first_leg_equality is True
    K = flat_to_triple(tR, syzygy(t1.flat(), 1))
    triples = [t1, t2, K, flat_to_triple(tR, regular_module(tR.T)),
               functor_r(tR, regR, zR)]
    gb = global_bounds_check(tR, [regR], [regR], [SR, regR], [SR, regR], triples)
    assert gb.holds, gb.violations
    assert gb.glued_dim == 1 and gb.first_dim == 0 and gb.sg == 0


def test_collapse_construction(tTheta):
    assert tTheta.T.dim == 4
    K2 = tTheta.A
    comps1 = [projective_indecomposable(K2, 0), projective_indecomposable(K2, 1)]
    rep = compatibility_report(tTheta, comps1, [regular_module(tTheta.B)])
    assert rep.verdict == "compatible-certified"


def test_triangle_validation_errors(tR, tA):
    SR = simple_module(tR.A, 0)
    with pytest.raises(TriangleError):
        functor_p(tA, SR, simple_module(tA.B, 0))  # corner from the wrong algebra


def test_build_T_theta_requires_unital_image(tR):
    from trigor.fixtures import one_point, two_points

    with pytest.raises(TriangleError):
        build_T_theta(two_points(2), one_point(2), images=[[1], [1]])
