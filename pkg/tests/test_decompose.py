from trigor.decompose import (
    add_witness,
    are_isomorphic,
    find_isomorphism,
    in_add,
    indecomposable_summands,
)
from trigor.module import (
    direct_sum,
    power,
    projective_indecomposable,
    regular_module,
    simple_module,
)


def test_regular_decomposition(A2, DN):
    comps = indecomposable_summands(regular_module(A2))
    assert sorted(m.dims for m in comps) == [(0, 1), (1, 1)]
    comps_dn = indecomposable_summands(regular_module(DN))
    assert [m.dims for m in comps_dn] == [(2,)]


def test_krull_schmidt_multiplicities(A2):
    P1 = projective_indecomposable(A2, 0)
    S1 = simple_module(A2, 0)
    X = direct_sum(A2, [P1, S1, P1])[0]
    comps = indecomposable_summands(X)
    assert sorted(m.dims for m in comps) == [(1, 0), (1, 1), (1, 1)]


def test_isomorphism_detection(A2, DN):
    P1 = projective_indecomposable(A2, 0)
    S1 = simple_module(A2, 0)
    assert are_isomorphic(P1, projective_indecomposable(A2, 0))
    assert not are_isomorphic(P1, S1)
    f = find_isomorphism(regular_module(DN), regular_module(DN))
    assert f is not None and f.is_isomorphism()
    # same dimension vector, non-isomorphic: R versus S + S
    SS = power(simple_module(DN, 0), 2)
    assert find_isomorphism(regular_module(DN), SS) is None


def test_add_membership(A2):
    P1 = projective_indecomposable(A2, 0)
    P2 = projective_indecomposable(A2, 1)
    S1 = simple_module(A2, 0)
    comps = [P1, P2]
    assert in_add(direct_sum(A2, [P1, P2, P2])[0], comps)
    assert not in_add(S1, comps)
    assert not in_add(direct_sum(A2, [P1, S1])[0], comps)
    found = add_witness(power(P2, 2), comps)
    assert found is not None


def test_zero_module_edge(DN):
    from trigor.module import Module

    Z = Module.zero(DN)
    assert indecomposable_summands(Z) == []
    assert in_add(Z, [regular_module(DN)])
