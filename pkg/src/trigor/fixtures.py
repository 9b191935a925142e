"""Built-in fixtures: the small standard algebras, their doubled triangular
algebras, and the named example scenarios reproducible from the command line.

Everything is memoized per field characteristic so that repeated use within
one process shares enumeration and resolution caches.  Example runners
return plain dictionaries (JSON-ready) whose "ok" entry states whether every
asserted conclusion held; all computed quantities appear next to the values
they are compared against.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .algebra import Algebra
from .decompose import indecomposable_summands
from .homology import ext_dim, gldim_up_to, pd_up_to, syzygy
from .linalg import GF
from .module import (
    direct_sum,
    injective_indecomposable,
    is_projective_module,
    projective_indecomposable,
    regular_module,
)
from .relgor import DEFAULT_STAGE_BOUND, is_w_tilting
from .trimat import (
    TriangleAlgebra,
    add_membership_triple,
    build_T_theta,
    compatibility_report,
    counterexample_AS_search,
    flat_to_triple,
    functor_h,
    functor_p,
    functor_r,
    glued_comps,
    is_injective_triple,
    is_projective_triple,
    tr_formula_check,
    wtilting_transfer_check,
    _zero_module,
)

_MEMO: Dict[tuple, object] = {}


def _memo(key: tuple, build):
    got = _MEMO.get(key)
    if got is None:
        got = build()
        _MEMO[key] = got
    return got


# -- standard algebras ------------------------------------------------------------


def arrow_algebra(p: int = 2) -> Algebra:
    """Path algebra of a single arrow between two vertices."""
    return _memo(
        ("A2", p),
        lambda: Algebra.from_quiver(GF(p), ["1", "2"], [("a", "1", "2")], name="A2"),
    )


def dual_numbers(p: int = 2) -> Algebra:
    """One loop squaring to zero: k[x]/(x^2), quasi-Frobenius."""
    return _memo(
        ("dual", p),
        lambda: Algebra.from_quiver(
            GF(p), ["v"], [("x", "v", "v")], [[(1, ["x", "x"])]], name="dual"
        ),
    )


def one_point(p: int = 2) -> Algebra:
    return _memo(
        ("k", p), lambda: Algebra.from_quiver(GF(p), ["*"], [], name="k")
    )


def two_points(p: int = 2) -> Algebra:
    return _memo(
        ("kxk", p),
        lambda: Algebra.from_quiver(GF(p), ["1", "2"], [], name="kxk"),
    )


def doubled_arrow(p: int = 2) -> TriangleAlgebra:
    """T of the arrow algebra against itself along the identity."""
    return _memo(("T(A2)", p), lambda: build_T_theta(arrow_algebra(p)))


def doubled_dual(p: int = 2) -> TriangleAlgebra:
    return _memo(("T(dual)", p), lambda: build_T_theta(dual_numbers(p)))


def collapse_two_points(p: int = 2) -> TriangleAlgebra:
    """Triangle algebra of the projection of k x k onto its first factor."""
    return _memo(
        ("T(kxk->k)", p),
        lambda: build_T_theta(two_points(p), one_point(p), images=[[1], [0]]),
    )


BUILTIN_ALGEBRAS = {
    "A2": arrow_algebra,
    "dual": dual_numbers,
    "k": one_point,
    "kxk": two_points,
}

BUILTIN_TRIANGLES = {
    "T(A2)": doubled_arrow,
    "T(dual)": doubled_dual,
    "T(kxk->k)": collapse_two_points,
}


# -- named example scenarios --------------------------------------------------------


def example_lift_not_w_tilting(p: int = 2, bound: int = DEFAULT_STAGE_BOUND) -> dict:
    """The lift of (regular; injectives) over the doubled arrow algebra is
    not w-tilting: the non-projective injective has a self-extension against
    the regular module, and it survives the lift as a degree-one witness."""
    A = arrow_algebra(p)
    ta = doubled_arrow(p)
    I1 = injective_indecomposable(A, 0)
    reg = regular_module(A)
    pd_i1 = pd_up_to(I1, bound)
    ext1 = ext_dim(I1, reg, 1)
    projs = [projective_indecomposable(A, v) for v in range(2)]
    injs = [injective_indecomposable(A, v) for v in range(2)]
    rep = wtilting_transfer_check(ta, projs, injs, bound)
    wt = is_w_tilting(glued_comps(ta, projs, injs), bound)
    witness = wt.sigma_witness or {}
    witness_degree = witness.get("degree")
    witness_dim = witness.get("dim")
    ok = (
        pd_i1 == 1
        and ext1 == 1
        and rep.glued_status == "refuted"
        and wt.status == "refuted"
        and witness_degree == 1
        and witness_dim == 1
        and not rep.violations
    )
    return {
        "id": "3.1",
        "field": f"GF({p})",
        "pd_of_nonprojective_injective": {"computed": pd_i1, "expected": 1},
        "ext1_against_regular": {"computed": ext1, "expected": 1},
        "lift_w_tilting_status": {"computed": rep.glued_status, "expected": "refuted"},
        "witness": {
            "degree": {"computed": witness_degree, "expected": 1},
            "self_extension_dim": {"computed": witness_dim, "expected": 1},
        },
        "ok": ok,
    }


def example_flat_collapse_transfer(p: int = 2, bound: int = 4) -> dict:
    """Doubling the dual numbers along the identity keeps the regular module
    w-tilting: the glue is free on both sides, so compatibility is automatic
    and the lifted family certifies."""
    R = dual_numbers(p)
    ta = doubled_dual(p)
    reg = regular_module(R)
    comp = compatibility_report(ta, [reg], [reg], bound)
    glued = glued_comps(ta, [reg], [reg])
    wt = is_w_tilting(glued, bound)
    ok = comp.verdict == "compatible-certified" and wt.status == "certified"
    return {
        "id": "3.8",
        "field": f"GF({p})",
        "bound": bound,
        "compatibility": {"computed": comp.verdict, "expected": "compatible-certified"},
        "lift_w_tilting_status": {"computed": wt.status, "expected": "certified"},
        "family": [m.name for m in glued],
        "ok": ok,
    }


def example_neither_projective_nor_injective(
    p: int = 2, bound: int = DEFAULT_STAGE_BOUND
) -> dict:
    """A certified w-tilting module over the doubled arrow algebra that is
    neither projective (its collapsed leg is not) nor injective (the mate of
    its glue map is not surjective); the glued global dimension is two."""
    A = arrow_algebra(p)
    ta = doubled_arrow(p)
    injs = [injective_indecomposable(A, v) for v in range(2)]
    glued = glued_comps(ta, injs, injs)
    wt = is_w_tilting(glued, bound)
    isum = direct_sum(A, injs)[0]
    C = functor_p(ta, isum, isum)
    proj_rep = is_projective_triple(C)
    inj_rep = is_injective_triple(C)
    gl = gldim_up_to(ta.T, bound)
    ok = (
        wt.status == "certified"
        and not proj_rep.holds
        and not proj_rep.cokernel_projective
        and not inj_rep.holds
        and not inj_rep.phi_adjoint_surjective
        and gl == 2
    )
    return {
        "id": "3.9",
        "field": f"GF({p})",
        "lift_w_tilting_status": {"computed": wt.status, "expected": "certified"},
        "projective": {"computed": proj_rep.holds, "expected": False},
        "collapsed_leg_projective": {
            "computed": proj_rep.cokernel_projective,
            "expected": False,
        },
        "injective": {"computed": inj_rep.holds, "expected": False},
        "glue_mate_surjective": {
            "computed": inj_rep.phi_adjoint_surjective,
            "expected": False,
        },
        "glued_global_dim": {"computed": gl, "expected": 2},
        "family": [m.name for m in glued],
        "ok": ok,
    }


def example_injective_pair_not_a_lift(
    p: int = 2, bound: int = DEFAULT_STAGE_BOUND
) -> dict:
    """Over the doubled dual numbers the two-term injective coresolution of
    the regular module gives a w-tilting module that is not of lifted form:
    the glue map of its second summand is not injective."""
    R = dual_numbers(p)
    ta = doubled_dual(p)
    reg = regular_module(R)
    z = _zero_module(R)
    reg2 = direct_sum(R, [reg, reg])[0]
    i_zero = functor_h(ta, z, reg2)
    i_one = functor_r(ta, reg, z)
    csum = direct_sum(ta.T, [i_zero.flat(), i_one.flat()])[0]
    comps = indecomposable_summands(csum)
    wt = is_w_tilting(comps, bound)
    rep1 = add_membership_triple(i_one, [reg], [reg])
    rep0 = add_membership_triple(flat_to_triple(ta, i_zero.flat()), [reg], [reg])
    ok = (
        is_injective_triple(i_zero).holds
        and is_projective_module(i_zero.flat())
        and is_injective_triple(i_one).holds
        and pd_up_to(i_one.flat(), bound) == 1
        and wt.status == "certified"
        and not rep1.phi_injective
        and not rep1.holds
        and rep0.holds
    )
    return {
        "id": "4.5",
        "field": f"GF({p})",
        "w_tilting_status": {"computed": wt.status, "expected": "certified"},
        "first_term_projective_and_injective": {
            "computed": is_projective_module(i_zero.flat())
            and is_injective_triple(i_zero).holds,
            "expected": True,
        },
        "second_term_pd": {"computed": pd_up_to(i_one.flat(), bound), "expected": 1},
        "second_term_glue_injective": {
            "computed": rep1.phi_injective,
            "expected": False,
        },
        "second_term_is_lift": {"computed": rep1.holds, "expected": False},
        "first_term_is_lift": {"computed": rep0.holds, "expected": True},
        "family": [m.name for m in comps],
        "ok": ok,
    }


def example_syzygy_criterion_fails(
    p: int = 2, cap: Tuple[int, int] = (2, 2), max_candidates: int = 500000
) -> dict:
    """Search the doubled arrow algebra for a module of projective dimension
    two whose corner dimensions are at most one and whose first syzygy has
    injective glue, then re-validate all four facts from scratch."""
    A = arrow_algebra(p)
    ta = doubled_arrow(p)
    w = counterexample_AS_search(A, cap, max_candidates=max_candidates, ta=ta)
    if w is None:
        return {
            "id": "5.AS",
            "field": f"GF({p})",
            "cap": list(cap),
            "found": False,
            "ok": False,
        }
    flat = w.module.flat()
    revalidated = {
        "glued_pd_is_two": pd_up_to(flat, 8) == 2,
        "first_leg_pd_at_most_one": (pd_up_to(w.module.m1, 8) or 0) <= 1,
        "collapsed_leg_pd_at_most_one": (pd_up_to(w.module.cokernel()[0], 8) or 0)
        <= 1,
        "syzygy_glue_injective": flat_to_triple(ta, syzygy(flat, 1)).phi.is_injective(),
    }
    formula = tr_formula_check(A, [regular_module(A)], cap, ta=ta)
    ok = all(revalidated.values()) and formula.holds is True
    return {
        "id": "5.AS",
        "field": f"GF({p})",
        "cap": list(cap),
        "found": True,
        "witness": w.module.name,
        "witness_dims": list(flat.dims),
        "search_values": {
            "glued_pd": w.glued_pd,
            "first_leg_pd": w.m1_pd,
            "collapsed_leg_pd": w.cokernel_pd,
            "syzygy_glue_injective": w.syzygy_phi_injective,
        },
        "revalidated": revalidated,
        "plus_one_formula": {
            "base_dim": formula.base_dim,
            "glued_dim": formula.glued_dim,
            "expected_glued": formula.expected,
            "jump_witness": formula.witness,
        },
        "ok": ok,
    }


BUILTIN_EXAMPLES = {
    "3.1": example_lift_not_w_tilting,
    "3.8": example_flat_collapse_transfer,
    "3.9": example_neither_projective_nor_injective,
    "4.5": example_injective_pair_not_a_lift,
    "5.AS": example_syzygy_criterion_fails,
}
