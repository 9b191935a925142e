"""Smoke run for the triangular layer against hand-checked values."""

from trigor.linalg import GF
from trigor.algebra import Algebra
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
from trigor.decompose import are_isomorphic, indecomposable_summands
from trigor.homology import ext_dim, gldim_up_to, pd_up_to, syzygy
from trigor.relgor import gc_pd, is_w_tilting
from trigor.trimat import (
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
    wtilting_transfer_check,
)

F = GF(2)
A2 = Algebra.from_quiver(F, ["1", "2"], [("a", "1", "2")], name="A2")
DN = Algebra.from_quiver(F, ["v"], [("x", "v", "v")], [[(1, ["x", "x"])]], name="dual")

tA = build_T_theta(A2)
tR = build_T_theta(DN)
assert tA.T.dim == 9, tA.T.dim
assert tR.T.dim == 6, tR.T.dim
print("construction ok:", tA.T.name, tR.T.name)

# regular module decomposes as the tensor-lift of the corner regulars
for ta in (tA, tR):
    regT = regular_module(ta.T)
    P = functor_p(ta, regular_module(ta.A), regular_module(ta.B))
    assert are_isomorphic(regT, P.flat()), ta.T.name
    tri = flat_to_triple(ta, regT)
    assert are_isomorphic(tri.flat(), regT)
print("regular decomposition + round trip ok")

# corner criteria agree with flat projectivity/injectivity
for ta in (tA, tR):
    nv = ta.T.n_vertices
    for v in range(nv):
        for N in (
            projective_indecomposable(ta.T, v),
            injective_indecomposable(ta.T, v),
            simple_module(ta.T, v),
        ):
            tri = flat_to_triple(ta, N)
            assert is_projective_triple(tri).holds == is_projective_module(N), N.name
            assert is_injective_triple(tri).holds == is_injective_module(N), N.name
print("corner projectivity/injectivity ok")

assert gldim_up_to(tA.T, 8) == 2
assert gldim_up_to(tR.T, 8) is None
print("global dimensions ok")

# adjunction dimension identities and collapse-of-lift
S1a = simple_module(A2, 0)
P1a = projective_indecomposable(A2, 0)
regB = regular_module(A2)
regT_A = regular_module(tA.T)
cases = []
for m1, m2 in [(S1a, simple_module(A2, 1)), (P1a, regB)]:
    for N in (flat_to_triple(tA, regT_A), flat_to_triple(tA, simple_module(tA.T, 2))):
        for case in check_adjunctions(tA, m1, m2, N):
            assert case.holds, (case, m1.name, m2.name, N.name)
            cases.append(case)
assert tensor_then_collapse_is_identity(tA, P1a, S1a)
assert tensor_then_collapse_is_identity(tR, regular_module(DN), simple_module(DN, 0))
print("adjunctions ok:", len(cases), "cases")

# Ext transport
M = flat_to_triple(tA, simple_module(tA.T, 0))
N = flat_to_triple(tA, regT_A)
for case in check_ext_isos(tA, M, N, 2):
    assert case.holds is not False, case
SR = simple_module(DN, 0)
for case in check_ext_isos(tR, flat_to_triple(tR, simple_module(tR.T, 0)),
                           flat_to_triple(tR, regular_module(tR.T)), 2):
    assert case.holds is not False, case
print("ext transport ok")

# the hereditary counterexample family: lifted module with a self-extension
P2a = projective_indecomposable(A2, 1)
I1 = simple_module(A2, 0)
I2 = projective_indecomposable(A2, 0)
assert pd_up_to(I1, 8) == 1
assert ext_dim(I1, regB, 1) == 1
rep = wtilting_transfer_check(tA, [P1a, P2a], [I1, I2])
assert rep.glued_status == "refuted", rep
assert rep.ext_identity[0] == (1, 1, 1), rep.ext_identity
assert not rep.violations, rep.violations
comp = compatibility_report(tA, [P1a, P2a], [I1, I2])
assert comp.verdict == "refuted", comp.verdict
assert comp.second_witness is not None and comp.second_witness["degree"] == 1
assert comp.second_witness["dim"] == 1
print("hereditary fixture ok:", comp.second_witness)

# doubled dual numbers: full compatibility, certified transfer
regR = regular_module(DN)
comp2 = compatibility_report(tR, [regR], [regR])
assert comp2.verdict == "compatible-certified", comp2.verdict
rep2 = wtilting_transfer_check(tR, [regR], [regR])
assert rep2.glued_status == "certified" and not rep2.violations
print("doubled fixture compatibility ok")

# injective pair splitting the doubled algebra, and the p-form refutation
zR = Module.zero(DN)
R2 = direct_sum(DN, [regR, regR])[0]
I0 = functor_h(tR, zR, R2)
I1t = functor_r(tR, regR, zR)
assert is_injective_triple(I0).holds
assert is_injective_triple(I1t).holds
assert is_projective_module(I0.flat())
assert pd_up_to(I1t.flat(), 8) == 1
comps45 = indecomposable_summands(direct_sum(tR.T, [I0.flat(), I1t.flat()])[0])
assert is_w_tilting(comps45, 8).status == "certified"
addrep = add_membership_triple(I1t, [regR], [regR])
assert not addrep.phi_injective and not addrep.holds
addrep0 = add_membership_triple(flat_to_triple(tR, I0.flat()), [regR], [regR])
assert addrep0.holds and addrep0.comparison is not None
print("injective pair fixture ok")

# structure agreement on the doubled algebra
t1 = functor_r(tR, SR, zR)
srep = gc_structure_check(tR, t1, [regR], [regR])
assert srep.flat_verdict.is_refuted and srep.corner_side is False
assert srep.agreement is True
K = flat_to_triple(tR, syzygy(t1.flat(), 1))
srep2 = gc_structure_check(tR, K, [regR], [regR])
assert srep2.flat_verdict.is_certified and srep2.corner_side is True
assert srep2.agreement is True and srep2.addendum_applicable
print("structure check ok")

# strong correction term and the dimension sandwich
sg = sgc_pd(tR, [regR], [SR, regR])
assert sg.value == 0 and sg.exact
db = dim_bounds_check(tR, t1, [regR], [regR], sg=0)
assert db.glued_dim == 1 and db.sandwich_holds, db
t2 = functor_r(tR, zR, SR)
db2 = dim_bounds_check(tR, t2, [regR], [regR], sg=0)
assert db2.zero_first_leg_equality is True, db2
triples = [t1, t2, K, flat_to_triple(tR, regular_module(tR.T)),
           functor_r(tR, regR, zR)]
gb = global_bounds_check(tR, [regR], [regR], [SR, regR], [SR, regR], triples)
assert gb.holds, gb.violations
assert gb.glued_dim == 1 and gb.first_dim == 0 and gb.sg == 0, gb
print("dimension bounds ok")

# algebra-map construction with distinct corners
K2 = Algebra.from_quiver(F, ["1", "2"], [], name="kxk")
K1 = Algebra.from_quiver(F, ["*"], [], name="k")
tTheta = build_T_theta(K2, K1, images=[[1], [0]])
assert tTheta.T.dim == 4
regK = regular_module(K2)
assert compatibility_report(tTheta, [projective_indecomposable(K2, 0),
                                     projective_indecomposable(K2, 1)],
                            [regular_module(K1)]).verdict == "compatible-certified"
print("algebra-map construction ok")

print("ALL TRIMAT SMOKE CHECKS PASSED")
