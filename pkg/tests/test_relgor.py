import pytest

from cert_mutations import MUTATIONS, _finite_cert, _periodic_cert
from trigor.fixtures import arrow_algebra, dual_numbers
from trigor.linalg import QQ
from trigor.algebra import Algebra
from trigor.module import (
    hom_basis,
    projective_indecomposable,
    regular_module,
    simple_module,
)
from trigor.relgor import (
    construct_special_precover,
    gc_global_dim_over_simples,
    gc_pd,
    is_gc_projective,
    is_left_approximation,
    is_w_tilting,
    minimal_left_approximation,
    sigma_self_orthogonal_through,
    special_precover_check,
    validate_certificate,
)


@pytest.fixture(scope="module")
def dnQ():
    return Algebra.from_quiver(
        QQ, ["v"], [("x", "v", "v")], relations=[[(1, ["x", "x"])]], name="dnQ"
    )


def test_simple_certifies_over_self_injective(dnQ):
    S = simple_module(dnQ, 0)
    R = regular_module(dnQ)
    v = is_gc_projective(S, [R])
    assert v.status == "certified"
    ok, reasons = validate_certificate(v.certificate)
    assert ok, reasons
    assert gc_pd(S, [R]).value == 0


def test_refutation_no_embedding(dnQ):
    S = simple_module(dnQ, 0)
    R = regular_module(dnQ)
    v = is_gc_projective(R, [S])
    assert v.status == "refuted" and v.witness == "no_embedding"


def test_sigma_self_orthogonality(dnQ):
    S = simple_module(dnQ, 0)
    ok, wit = sigma_self_orthogonal_through([S], 4)
    assert not ok and wit == {"degree": 1, "dim": 1}
    ok2, wit2 = sigma_self_orthogonal_through([regular_module(dnQ)], 6)
    assert ok2 and wit2 is None


def test_w_tilting_statuses(dnQ):
    assert is_w_tilting([regular_module(dnQ)], bound=6).status == "certified"
    A2 = arrow_algebra(2)
    injs = [simple_module(A2, 0), projective_indecomposable(A2, 0)]
    assert is_w_tilting(injs, bound=6).status == "certified"
    refuted = is_w_tilting([simple_module(dnQ, 0)], bound=6)
    assert refuted.status == "refuted"
    assert refuted.sigma_witness == {"degree": 1, "dim": 1}


def test_left_approximation(dnQ):
    A2 = arrow_algebra(2)
    injs = [simple_module(A2, 0), projective_indecomposable(A2, 0)]
    f, Y, kept = minimal_left_approximation(regular_module(A2), injs)
    assert is_left_approximation(f, injs)
    K, _ = f.kernel()
    assert K.is_zero()


def test_refutation_ext_nonzero():
    A2 = arrow_algebra(2)
    S1 = simple_module(A2, 0)
    comps = [projective_indecomposable(A2, 0), projective_indecomposable(A2, 1)]
    v = is_gc_projective(S1, comps, bound=6)
    assert v.status == "refuted" and v.witness == "ext_nonzero"
    r = gc_pd(S1, comps, bound=6)
    assert r.value == 1 and r.exact


def test_relative_global_dims(dnQ):
    g, _ = gc_global_dim_over_simples(dnQ, [regular_module(dnQ)], bound=6)
    assert g == 0
    A2 = arrow_algebra(2)
    comps = [projective_indecomposable(A2, 0), projective_indecomposable(A2, 1)]
    g2, _ = gc_global_dim_over_simples(A2, comps, bound=6)
    assert g2 == 1


def test_special_precover_by_projective_cover():
    A2 = arrow_algebra(2)
    P1 = projective_indecomposable(A2, 0)
    P2 = projective_indecomposable(A2, 1)
    S1 = simple_module(A2, 0)
    fcov = hom_basis(P1, S1)[0]
    rep = special_precover_check(fcov, [P1, P2], [P1, P2])
    assert rep.is_special_precover and rep.surjective


def test_constructed_precover(dnQ):
    S = simple_module(dnQ, 0)
    R = regular_module(dnQ)
    f = construct_special_precover(S, [R])
    assert f is not None and f.target is S and f.is_surjective()
    rep = special_precover_check(f, [R], [R])
    assert rep.is_special_precover
    # a certified module covers itself
    fid = construct_special_precover(R, [R])
    assert fid is not None and fid.source is R


def test_certificates_survive_field_change():
    for p in (2, 3):
        DN = dual_numbers(p)
        v = is_gc_projective(simple_module(DN, 0), [regular_module(DN)])
        assert v.status == "certified"
        ok, _ = validate_certificate(v.certificate)
        assert ok


def test_fresh_certificates_validate():
    for build in (_periodic_cert, _finite_cert):
        ok, reasons = validate_certificate(build())
        assert ok, reasons


@pytest.mark.parametrize("name,build,corrupt", MUTATIONS, ids=[m[0] for m in MUTATIONS])
def test_mutation_rejected(name, build, corrupt):
    cert = build()
    corrupt(cert)
    ok, reasons = validate_certificate(cert)
    assert not ok
    assert reasons, name
