"""Brute-force enumeration of modules at tiny dimension caps, and the
exhaustive statement checks that run over those enumerations.

Enumeration is the ground truth for everything class-quantified: one
representative per isomorphism class within a per-vertex dimension cap, in a
deterministic order, over a finite field.  Raw candidates are generator
matrix tuples; candidates that fail the defining relations are discarded,
the survivors are bucketed by cheap isomorphism invariants and deduplicated
by the exact isomorphism test.  A work-limit guard refuses caps whose raw
candidate count would be unreasonable, reporting the estimate.

Triangular algebras are enumerated through their triples: one corner class
pair at a time, all structure maps in the finite hom space, deduplicated
through the flat realization.  This is complete: an isomorphism of flat
modules restricts to vertex blocks, so it is exactly a pair of corner
isomorphisms intertwining the structure maps.

`exhaustive_check` is the registry front end used by the verification
commands; each property id names a statement-shaped check over the full
enumeration and reports pass/fail/indefinite counts with a first witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import Algebra
from .decompose import find_isomorphism, indecomposable_summands
from .homology import tor_vanishes_through
from .linalg import Matrix
from .module import (
    Module,
    Morphism,
    hom_basis,
    hom_dim,
    is_injective_module,
    is_projective_module,
    regular_module,
    socle,
    top,
)
from .relgor import DEFAULT_STAGE_BOUND, gc_pd, is_gc_projective
from .trimat import (
    TriangleAlgebra,
    TriangleModule,
    check_adjunctions,
    check_ext_isos,
    functor_p,
    functor_r,
    gc_structure_check,
    glued_comps,
    global_bounds_check,
    is_injective_triple,
    is_projective_triple,
    tensor_then_collapse_is_identity,
    triple_to_flat,
    _zero_module,
)

DEFAULT_WORK_LIMIT = 200000
ISO_SEARCH_LIMIT = 1 << 14


class OracleError(ValueError):
    pass


class WorkLimitError(OracleError):
    def __init__(self, estimate: int, limit: int, what: str):
        self.estimate = estimate
        self.limit = limit
        super().__init__(
            f"{what} needs about {estimate} raw candidates, over the work "
            f"limit {limit}; raise the limit or shrink the cap"
        )


# -- isomorphism invariants ----------------------------------------------------------


def _invariant(M: Module) -> tuple:
    """Cheap complete-enough invariant for bucketing before the exact test."""
    key = ("oracle_inv", M.serial)
    got = M.algebra._cache.get(key)
    if got is None:
        got = (
            M.dims,
            tuple(M.action[i].rank() for i in M.algebra.nonidem_indices),
            top(M)[0].dims,
            socle(M)[0].dims,
            hom_dim(M, M),
        )
        M.algebra._cache[key] = got
    return got


def _dedup_insert(
    buckets: Dict[tuple, List[Module]], M: Module, seed: int = 0
) -> bool:
    """Insert M unless an isomorphic representative is already bucketed."""
    inv = _invariant(M)
    bucket = buckets.setdefault(inv, [])
    for rep in bucket:
        if find_isomorphism(M, rep, seed=seed, exhaustive_limit=ISO_SEARCH_LIMIT):
            return False
    bucket.append(M)
    return True


# -- base-algebra enumeration -----------------------------------------------------------


def _dims_vectors(cap: Sequence[int]) -> Iterable[Tuple[int, ...]]:
    return itertools.product(*(range(c + 1) for c in cap))


def _estimate_base(A: Algebra, cap: Sequence[int]) -> int:
    q = A.field.p
    total = 0
    for dims in _dims_vectors(cap):
        entries = 0
        for g in A.gen_indices:
            entries += dims[A.tgt(g)] * dims[A.src(g)]
        total += q**entries
    return total


def enumerate_modules(
    A: Algebra,
    cap: Sequence[int],
    max_candidates: int = DEFAULT_WORK_LIMIT,
) -> List[Module]:
    """One representative per isomorphism class within the per-vertex cap.

    Deterministic: dimension vectors in lexicographic order, generator
    matrices in coefficient order, first representative of each class kept.
    The zero module is the first entry.
    """
    cap = tuple(int(c) for c in cap)
    if len(cap) != A.n_vertices:
        raise OracleError("cap length does not match the vertex count")
    if not A.field.is_finite:
        raise OracleError("enumeration requires a finite field")
    if A.path_reps is None:
        raise OracleError("enumeration requires a path-presented algebra")
    key = ("enum", cap)
    got = A._cache.get(key)
    if got is not None:
        return got
    estimate = _estimate_base(A, cap)
    if estimate > max_candidates:
        raise WorkLimitError(estimate, max_candidates, f"enumerating {A.name} at cap {cap}")

    els = list(A.field.elements())
    f = A.field
    out: List[Module] = []
    buckets: Dict[tuple, List[Module]] = {}
    gens = list(A.gen_indices)
    arrow_of_gen = [A.path_reps[g][0] for g in gens]
    for dims in _dims_vectors(cap):
        shapes = [(dims[A.tgt(g)], dims[A.src(g)]) for g in gens]
        counts = [r * c for r, c in shapes]
        for flat_choice in itertools.product(els, repeat=sum(counts)):
            arrow_mats: Dict[int, Matrix] = {}
            pos = 0
            for (r, c), cnt, arr in zip(shapes, counts, arrow_of_gen):
                ents = flat_choice[pos: pos + cnt]
                pos += cnt
                arrow_mats[arr] = Matrix(
                    f, r, c, [list(ents[i * c: (i + 1) * c]) for i in range(r)]
                )
            action: Dict[int, Matrix] = {}
            for i in A.nonidem_indices:
                path = A.path_reps[i]
                mat = arrow_mats[path[0]]
                for a in path[1:]:
                    mat = arrow_mats[a].mul(mat)
                action[i] = mat
            M = Module(A, dims, action, name="", validate=False)
            try:
                M._validate()
            except Exception:
                continue
            if _dedup_insert(buckets, M):
                M.name = f"E{len(out)}({','.join(map(str, dims))})"
                out.append(M)
    A._cache[key] = out
    return out


# -- triangle enumeration ----------------------------------------------------------------


def enumerate_triangle_modules(
    ta: TriangleAlgebra,
    cap: Sequence[int],
    max_candidates: int = DEFAULT_WORK_LIMIT,
) -> List[TriangleModule]:
    """One triple per isomorphism class within the stacked per-vertex cap.

    Corner classes come from `enumerate_modules`; for each class pair every
    structure map in the hom space is realized and the flat modules are
    deduplicated, which is exact for triples.
    """
    cap = tuple(int(c) for c in cap)
    if len(cap) != ta.nA + ta.nB:
        raise OracleError("cap length does not match the vertex count")
    key = ("enum_tri", cap)
    got = ta._cache.get(key)
    if got is not None:
        return got
    mods_a = enumerate_modules(ta.A, cap[: ta.nA], max_candidates)
    mods_b = enumerate_modules(ta.B, cap[ta.nA:], max_candidates)
    q = ta.field.p
    estimate = 0
    for m1 in mods_a:
        TM = ta.U.tensor(m1)
        for m2 in mods_b:
            estimate += q ** hom_dim(TM.module, m2)
    if estimate > max_candidates:
        raise WorkLimitError(
            estimate, max_candidates, f"enumerating triples over {ta.T.name} at cap {cap}"
        )

    els = list(ta.field.elements())
    zero = ta.field.zero()
    out: List[TriangleModule] = []
    for m1 in mods_a:
        TM = ta.U.tensor(m1)
        for m2 in mods_b:
            hb = hom_basis(TM.module, m2)
            buckets: Dict[tuple, List[Module]] = {}
            kept = 0
            for coeffs in itertools.product(els, repeat=len(hb)):
                phi = Morphism.zero_map(TM.module, m2)
                for c, h in zip(coeffs, hb):
                    if c != zero:
                        phi = phi.add(h.scaled(c))
                tri = TriangleModule(ta, m1, m2, phi, validate=False)
                flat = triple_to_flat(tri, validate=False)
                if _dedup_insert(buckets, flat):
                    tri.name = f"({m1.name};{m2.name})@{kept}"
                    flat.name = tri.name
                    tri._flat = flat
                    out.append(tri)
                    kept += 1
    ta._cache[key] = out
    return out


# -- the exhaustive statement checks --------------------------------------------------------


@dataclass
class CheckOutcome:
    name: str
    cases: int
    failures: List[str] = dc_field(default_factory=list)
    indefinite: int = 0
    details: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "pass" if self.passed else "FAIL"
        extra = f", indefinite {self.indefinite}" if self.indefinite else ""
        msg = f"{self.name}: {state} ({self.cases} cases{extra})"
        if self.failures:
            msg += f"; first witness: {self.failures[0]}"
        return msg


def _corner_families(
    ta: TriangleAlgebra,
    C1comps: Optional[Sequence[Module]],
    C2comps: Optional[Sequence[Module]],
) -> Tuple[List[Module], List[Module]]:
    """Default relative families: the regular corner decompositions."""
    if C1comps is None:
        C1comps = indecomposable_summands(regular_module(ta.A))
    if C2comps is None:
        C2comps = indecomposable_summands(regular_module(ta.B))
    return list(C1comps), list(C2comps)


def check_projective_injective_agreement(
    ta: TriangleAlgebra,
    cap: Sequence[int],
    max_candidates: int = DEFAULT_WORK_LIMIT,
) -> CheckOutcome:
    """Corner-criteria projectivity and injectivity versus the flat tests."""
    failures: List[str] = []
    n = 0
    for tri in enumerate_triangle_modules(ta, cap, max_candidates):
        n += 1
        flat = tri.flat()
        if is_projective_triple(tri).holds != is_projective_module(flat):
            failures.append(f"{tri.name}: projectivity criteria disagree")
        if is_injective_triple(tri).holds != is_injective_module(flat):
            failures.append(f"{tri.name}: injectivity criteria disagree")
    return CheckOutcome("projective-injective-agreement", n, failures)


def check_ext_transport(
    ta: TriangleAlgebra,
    cap: Sequence[int],
    n_max: int = 3,
    max_candidates: int = DEFAULT_WORK_LIMIT,
) -> CheckOutcome:
    """The four Ext dimension transports on every enumerated pair."""
    triples = enumerate_triangle_modules(ta, cap, max_candidates)
    failures: List[str] = []
    skipped = 0
    n = 0
    for M in triples:
        for N in triples:
            for case in check_ext_isos(ta, M, N, n_max):
                n += 1
                if not case.hypothesis_holds:
                    skipped += 1
                elif case.holds is False:
                    failures.append(
                        f"{case.kind} deg {case.degree} on ({M.name},{N.name}): "
                        f"{case.lhs} != {case.rhs}"
                    )
    return CheckOutcome("ext-transport", n, failures, indefinite=skipped)


def check_adjunction_identities(
    ta: TriangleAlgebra,
    cap: Sequence[int],
    max_candidates: int = DEFAULT_WORK_LIMIT,
) -> CheckOutcome:
    """Hom dimension identities for the three adjoint pairs, plus the
    collapse-after-lift identity, on every corner pair against every triple."""
    mods_a = enumerate_modules(ta.A, cap[: ta.nA], max_candidates)
    mods_b = enumerate_modules(ta.B, cap[ta.nA:], max_candidates)
    triples = enumerate_triangle_modules(ta, cap, max_candidates)
    failures: List[str] = []
    n = 0
    for m1 in mods_a:
        for m2 in mods_b:
            if not tensor_then_collapse_is_identity(ta, m1, m2):
                failures.append(f"collapse of lift moved ({m1.name},{m2.name})")
            for N in triples:
                for case in check_adjunctions(ta, m1, m2, N):
                    n += 1
                    if not case.holds:
                        failures.append(
                            f"{case.pair} on ({m1.name},{m2.name}) vs {N.name}: "
                            f"{case.lhs} != {case.rhs[0]}+{case.rhs[1]}"
                        )
    return CheckOutcome("adjunctions", n, failures)


def check_add_membership(
    ta: TriangleAlgebra,
    cap: Sequence[int],
    C1comps: Optional[Sequence[Module]] = None,
    C2comps: Optional[Sequence[Module]] = None,
    max_candidates: int = DEFAULT_WORK_LIMIT,
) -> CheckOutcome:
    """Triple-criterion membership in add of the lifted family versus the
    flat-side summand test, on every enumerated triple."""
    from .decompose import in_add
    from .trimat import add_membership_triple

    C1comps, C2comps = _corner_families(ta, C1comps, C2comps)
    Tcomps = glued_comps(ta, C1comps, C2comps)
    failures: List[str] = []
    n = 0
    for tri in enumerate_triangle_modules(ta, cap, max_candidates):
        n += 1
        lhs = add_membership_triple(tri, C1comps, C2comps).holds
        rhs = in_add(tri.flat(), Tcomps)
        if lhs != rhs:
            failures.append(
                f"{tri.name}: triple criterion {lhs} but flat membership {rhs}"
            )
    return CheckOutcome("add-membership", n, failures)


def check_gc_structure(
    ta: TriangleAlgebra,
    cap: Sequence[int],
    bound: int = DEFAULT_STAGE_BOUND,
    C1comps: Optional[Sequence[Module]] = None,
    C2comps: Optional[Sequence[Module]] = None,
    max_candidates: int = DEFAULT_WORK_LIMIT,
) -> CheckOutcome:
    """Corner structure criteria versus the flat engine on every triple."""
    C1comps, C2comps = _corner_families(ta, C1comps, C2comps)
    failures: List[str] = []
    indefinite = 0
    n = 0
    for tri in enumerate_triangle_modules(ta, cap, max_candidates):
        n += 1
        rep = gc_structure_check(ta, tri, C1comps, C2comps, bound)
        if rep.flat_verdict.status == "inconclusive" or rep.corner_side is None:
            indefinite += 1
            continue
        if rep.agreement is False:
            failures.append(
                f"{tri.name}: flat {rep.flat_verdict.status} but corner side "
                f"{'holds' if rep.corner_side else 'fails'}"
            )
        if rep.addendum_agreement is False:
            failures.append(f"{tri.name}: second-leg agreement fails")
    return CheckOutcome("gc-structure", n, failures, indefinite=indefinite)


def check_lift_preservation(
    ta: TriangleAlgebra,
    cap: Sequence[int],
    bound: int = DEFAULT_STAGE_BOUND,
    C1comps: Optional[Sequence[Module]] = None,
    C2comps: Optional[Sequence[Module]] = None,
    max_candidates: int = DEFAULT_WORK_LIMIT,
    assume_converse: bool = True,
) -> CheckOutcome:
    """Tensor-lifting a pair of corner-certified modules must certify; the
    converse direction is asserted when the corner families are w-tilting."""
    C1comps, C2comps = _corner_families(ta, C1comps, C2comps)
    Tcomps = glued_comps(ta, C1comps, C2comps)
    mods_a = enumerate_modules(ta.A, cap[: ta.nA], max_candidates)
    mods_b = enumerate_modules(ta.B, cap[ta.nA:], max_candidates)
    failures: List[str] = []
    indefinite = 0
    n = 0
    for m1 in mods_a:
        v1 = is_gc_projective(m1, C1comps, bound)
        for m2 in mods_b:
            v2 = is_gc_projective(m2, C2comps, bound)
            n += 1
            lifted = functor_p(ta, m1, m2).flat()
            vt = is_gc_projective(lifted, Tcomps, bound)
            if "inconclusive" in (v1.status, v2.status, vt.status):
                indefinite += 1
                continue
            corner = v1.is_certified and v2.is_certified
            if corner and not vt.is_certified:
                failures.append(
                    f"lift of ({m1.name},{m2.name}) refuted despite certified corners"
                )
            if assume_converse and vt.is_certified and not corner:
                failures.append(
                    f"lift of ({m1.name},{m2.name}) certified despite refuted corner"
                )
    return CheckOutcome("lift-preservation", n, failures, indefinite=indefinite)


def check_leg_dimensions(
    ta: TriangleAlgebra,
    cap: Sequence[int],
    bound: int = DEFAULT_STAGE_BOUND,
    C1comps: Optional[Sequence[Module]] = None,
    C2comps: Optional[Sequence[Module]] = None,
    max_candidates: int = DEFAULT_WORK_LIMIT,
) -> CheckOutcome:
    """Relative dimension of the special shapes: a vanishing first leg
    carries the second-corner dimension; a tensor-lifted first leg carries
    the first-corner dimension when Tor vanishes (inequality otherwise)."""
    C1comps, C2comps = _corner_families(ta, C1comps, C2comps)
    Tcomps = glued_comps(ta, C1comps, C2comps)
    failures: List[str] = []
    indefinite = 0
    n = 0
    u_right = ta.u_as_right_module()
    zb = _zero_module(ta.B)
    for m2 in enumerate_modules(ta.B, cap[ta.nA:], max_candidates):
        n += 1
        tri = functor_r(ta, _zero_module(ta.A), m2)
        dt = gc_pd(tri.flat(), Tcomps, bound)
        d2 = gc_pd(m2, C2comps, bound)
        if dt.value is None or d2.value is None:
            indefinite += 1
        elif dt.value != d2.value:
            failures.append(f"(0;{m2.name}): {dt.value} != {d2.value}")
    for m1 in enumerate_modules(ta.A, cap[: ta.nA], max_candidates):
        n += 1
        tri = functor_p(ta, m1, zb)
        dt = gc_pd(tri.flat(), Tcomps, bound)
        d1 = gc_pd(m1, C1comps, bound)
        if dt.value is None or d1.value is None:
            indefinite += 1
        elif tor_vanishes_through(u_right, m1, bound):
            if dt.value != d1.value:
                failures.append(f"lift of {m1.name}: {dt.value} != {d1.value}")
        else:
            indefinite += 1
    return CheckOutcome("leg-dimensions", n, failures, indefinite=indefinite)


def check_dim_sandwich(
    ta: TriangleAlgebra,
    cap: Sequence[int],
    bound: int = DEFAULT_STAGE_BOUND,
    C1comps: Optional[Sequence[Module]] = None,
    C2comps: Optional[Sequence[Module]] = None,
    max_candidates: int = DEFAULT_WORK_LIMIT,
) -> CheckOutcome:
    """Per-module and global dimension sandwiches over the enumeration."""
    C1comps, C2comps = _corner_families(ta, C1comps, C2comps)
    mods_a = enumerate_modules(ta.A, cap[: ta.nA], max_candidates)
    mods_b = enumerate_modules(ta.B, cap[ta.nA:], max_candidates)
    triples = enumerate_triangle_modules(ta, cap, max_candidates)
    rep = global_bounds_check(ta, C1comps, C2comps, mods_a, mods_b, triples, bound)
    indefinite = sum(
        1 for _, r in rep.per_module if r.sandwich_holds is None
    )
    return CheckOutcome(
        "dim-sandwich",
        rep.modules_checked,
        list(rep.violations),
        indefinite=indefinite,
        details={
            "first_dim": rep.first_dim,
            "second_dim": rep.second_dim,
            "glued_dim": rep.glued_dim,
            "sg": rep.sg,
        },
    )


_REGISTRY = {
    "projective-injective-agreement": check_projective_injective_agreement,
    "ext-transport": check_ext_transport,
    "adjunctions": check_adjunction_identities,
    "add-membership": check_add_membership,
    "gc-structure": check_gc_structure,
    "lift-preservation": check_lift_preservation,
    "leg-dimensions": check_leg_dimensions,
    "dim-sandwich": check_dim_sandwich,
}


def exhaustive_check(
    property_id: str,
    ta: TriangleAlgebra,
    cap: Sequence[int],
    bound: int = DEFAULT_STAGE_BOUND,
    **kwargs,
) -> CheckOutcome:
    """Run a registered statement check over the full enumeration."""
    fn = _REGISTRY.get(property_id)
    if fn is None:
        known = ", ".join(sorted(_REGISTRY))
        raise OracleError(f"unknown property id {property_id!r}; known: {known}")
    if property_id in (
        "projective-injective-agreement",
        "ext-transport",
        "adjunctions",
        "add-membership",
    ):
        return fn(ta, cap, **kwargs)
    return fn(ta, cap, bound=bound, **kwargs)


def registered_properties() -> List[str]:
    return sorted(_REGISTRY)
