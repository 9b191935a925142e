import copy

from trigor.linalg import RationalField, PrimeField
from trigor.algebra import Algebra
from trigor.module import (
    Module, Morphism, simple_module, projective_indecomposable, regular_module,
    injective_indecomposable, direct_sum, hom_basis,
)
from trigor.relgor import (
    is_gc_projective, validate_certificate, is_w_tilting, gc_pd,
    gc_global_dim_over_simples, special_precover_check,
    minimal_left_approximation, is_left_approximation,
    sigma_self_orthogonal_through,
)

Q = RationalField()
F2 = PrimeField(2)

# dual numbers k[x]/(x^2)
dn = Algebra.from_quiver(Q, ["v"], [("x", "v", "v")], relations=[[(1, ["x", "x"])]], name="dn")
R = regular_module(dn)
S = simple_module(dn, 0)

v = is_gc_projective(S, [R])
print("S over dual numbers, C=R:", v.status)
assert v.status == "certified"
ok, reasons = validate_certificate(v.certificate)
print("validator:", ok, reasons)
assert ok

r = gc_pd(S, [R])
print("gcpd(S) =", r.value, "exact:", r.exact)
assert r.value == 0

v2 = is_gc_projective(R, [S])
print("R with C=S:", v2.status, v2.witness)
assert v2.status == "refuted" and v2.witness == "no_embedding"

ok_sig, wit = sigma_self_orthogonal_through([S], 4)
print("sigma self orth of S:", ok_sig, wit)
assert not ok_sig and wit["degree"] == 1

wt = is_w_tilting([R], bound=6)
print("R w-tilting over dual numbers:", wt.status)
assert wt.status == "certified"

g, per = gc_global_dim_over_simples(dn, [R], bound=6)
print("relative global dim over simples (C=R):", g)
assert g == 0

# A2 quiver 1 -> 2
A2 = Algebra.from_quiver(Q, ["1", "2"], [("a", "1", "2")], name="A2")
P1 = projective_indecomposable(A2, 0)
P2 = projective_indecomposable(A2, 1)
S1 = simple_module(A2, 0)
S2 = simple_module(A2, 1)

# C = S1 + P1 (the injectives over A2)
wt2 = is_w_tilting([S1, P1], bound=6)
print("C=S1+P1 w-tilting over A2:", wt2.status)
assert wt2.status == "certified"

f, Y, kept = minimal_left_approximation(regular_module(A2), [S1, P1])
print("approx of A2 regular: Y dims", Y.dims, "kept:", kept)
assert is_left_approximation(f, [S1, P1])
K, _ = f.kernel()
assert K.is_zero()

v3 = is_gc_projective(S1, [P1, P2], bound=6)
print("S1 with C=regular comps:", v3.status, v3.witness, v3.detail)
assert v3.status == "refuted" and v3.witness == "ext_nonzero"

r3 = gc_pd(S1, [P1, P2], bound=6)
print("gcpd(S1), C=regular:", r3.value)
assert r3.value == 1 and r3.exact

g2, _ = gc_global_dim_over_simples(A2, [P1, P2], bound=6)
print("relative global dim over A2 simples (C=regular):", g2)
assert g2 == 1

# special precover of S1 by its projective cover
tops = hom_basis(P1, S1)
fcov = tops[0]
rep = special_precover_check(fcov, [P1, P2], [P1, P2])
print("precover report:", rep.surjective, rep.factors_all, rep.kernel_orthogonal, rep.failures)
assert rep.is_special_precover and rep.surjective

# mutation rejection
vI = is_gc_projective(S, [R])
cert = vI.certificate
mut = copy.copy(cert)
mut.right_closure_index = None
ok_m, reasons_m = validate_certificate(mut)
print("mutated closure index rejected:", not ok_m, reasons_m[:2])
assert not ok_m

# in-place matrix tamper on a fresh certificate
vJ = is_gc_projective(S, [R])
st = vJ.certificate.right_stages[0]
m = st.f.mats[0]
m.rows[0][0] = Q.add(m.rows[0][0], Q.one())
ok_t, reasons_t = validate_certificate(vJ.certificate)
print("tampered stage map rejected:", not ok_t, reasons_t[:2])
assert not ok_t

# over F2 as well
dn2 = Algebra.from_quiver(F2, ["v"], [("x", "v", "v")], relations=[[(1, ["x", "x"])]], name="dn2")
S_2 = simple_module(dn2, 0)
R_2 = regular_module(dn2)
v4 = is_gc_projective(S_2, [R_2])
ok4, _ = validate_certificate(v4.certificate)
print("F2 dual numbers:", v4.status, "validated:", ok4)
assert v4.status == "certified" and ok4

print("relgor smoke OK")
