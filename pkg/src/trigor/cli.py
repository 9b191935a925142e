"""Command line front end: fixture documents, verification workflows,
reproduction of the built-in examples, and report emission.

Fixture documents are JSON: a field, named algebras (as bound quivers),
named bimodules (total action matrices per basis label), at most one
triangle assembled from those (or a built-in one), named modules (over an
algebra by arrow matrices, or in triple form over the triangle), and a task
list.  Matrices are row-major arrays of strings so exact scalars survive
serialization.  Parsing then serializing a document reproduces it.

Exit status is 0 exactly when no asserted conclusion failed; Inconclusive
outcomes are reported with a warning but do not fail, since bound-limited
procedures must be allowed to give up without flaking.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra
from .bimodule import Bimodule
from .decompose import indecomposable_summands
from .linalg import GF, QQ, Field, Matrix
from .homology import pd_up_to, syzygy
from .module import (
    Module,
    Morphism,
    injective_indecomposable,
    is_injective_module,
    is_projective_module,
    projective_indecomposable,
    regular_module,
    simple_module,
)
from .oracle import (
    OracleError,
    enumerate_modules,
    enumerate_triangle_modules,
    exhaustive_check,
)
from .relgor import (
    construct_special_precover,
    gc_pd,
    is_gc_projective,
    is_w_tilting,
    special_precover_check,
)
from .reports import (
    ReportDocument,
    TaskReport,
    digest_of,
    render_report_obj,
    verdict_payload,
)
from .fixtures import BUILTIN_ALGEBRAS, BUILTIN_EXAMPLES, BUILTIN_TRIANGLES
from .trimat import (
    TriangleAlgebra,
    TriangleError,
    TriangleModule,
    cm_free_check,
    compatibility_report,
    counterexample_AS_search,
    flat_to_triple,
    glued_comps,
    tr_formula_check,
    wtilting_transfer_check,
)

ENV_WORK_LIMIT = "TRIGOR_WORK_LIMIT"


def _default_work_limit() -> int:
    raw = os.environ.get(ENV_WORK_LIMIT)
    return int(raw) if raw else 200000


class FixtureError(ValueError):
    pass


# -- exact scalars and matrices ------------------------------------------------------


def _scalar(f: Field, s):
    try:
        return f.parse(s)
    except (ValueError, ZeroDivisionError) as e:
        raise FixtureError(f"bad scalar {s!r}: {e}") from None


def _matrix(f: Field, rows, nrows: int, ncols: int, what: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != nrows:
        raise FixtureError(f"{what}: expected {nrows} rows, got {rows!r}")
    out = []
    for r in rows:
        if not isinstance(r, list) or len(r) != ncols:
            raise FixtureError(f"{what}: expected rows of length {ncols}")
        out.append([_scalar(f, x) for x in r])
    return Matrix(f, nrows, ncols, out)


# -- fixture documents -----------------------------------------------------------------


@dataclass
class FixtureDocument:
    field_spec: object
    algebras: Dict[str, dict] = dc_field(default_factory=dict)
    bimodules: Dict[str, dict] = dc_field(default_factory=dict)
    triangle: Optional[dict] = None
    modules: Dict[str, dict] = dc_field(default_factory=dict)
    tasks: List[dict] = dc_field(default_factory=list)

    def to_obj(self) -> dict:
        out = {"field": self.field_spec}
        if self.algebras:
            out["algebras"] = self.algebras
        if self.bimodules:
            out["bimodules"] = self.bimodules
        if self.triangle is not None:
            out["triangle"] = self.triangle
        if self.modules:
            out["modules"] = self.modules
        out["tasks"] = self.tasks
        return out


def parse_fixture_document(obj: dict) -> FixtureDocument:
    if not isinstance(obj, dict):
        raise FixtureError("fixture document must be a JSON object")
    fs = obj.get("field", {"GF": 2})
    if fs != "Q" and not (
        isinstance(fs, dict) and set(fs) == {"GF"} and isinstance(fs["GF"], int)
    ):
        raise FixtureError(f'field must be "Q" or {{"GF": p}}, got {fs!r}')
    doc = FixtureDocument(field_spec=fs)
    for name, spec in (obj.get("algebras") or {}).items():
        if not isinstance(spec, dict) or "vertices" not in spec:
            raise FixtureError(f"algebra {name}: needs vertices")
        doc.algebras[name] = {
            "vertices": list(spec["vertices"]),
            "arrows": [list(a) for a in spec.get("arrows", [])],
            "relations": [
                [[term[0], list(term[1])] for term in rel]
                for rel in spec.get("relations", [])
            ],
        }
    for name, spec in (obj.get("bimodules") or {}).items():
        for k in ("left", "right", "dim", "left_action", "right_action"):
            if k not in spec:
                raise FixtureError(f"bimodule {name}: missing {k}")
        doc.bimodules[name] = {
            "left": spec["left"],
            "right": spec["right"],
            "dim": int(spec["dim"]),
            "left_action": {k: [list(r) for r in v] for k, v in spec["left_action"].items()},
            "right_action": {k: [list(r) for r in v] for k, v in spec["right_action"].items()},
        }
    tri = obj.get("triangle")
    if tri is not None:
        if "builtin" in tri:
            if tri["builtin"] not in BUILTIN_TRIANGLES:
                raise FixtureError(f"unknown builtin triangle {tri['builtin']!r}")
            doc.triangle = {"builtin": tri["builtin"]}
        else:
            for k in ("A", "B", "U"):
                if k not in tri:
                    raise FixtureError(f"triangle: missing {k}")
            doc.triangle = {"A": tri["A"], "B": tri["B"], "U": tri["U"]}
    for name, spec in (obj.get("modules") or {}).items():
        if "over" in spec:
            doc.modules[name] = {
                "over": spec["over"],
                "dims": [int(d) for d in spec["dims"]],
                "maps": {k: [list(r) for r in v] for k, v in spec.get("maps", {}).items()},
            }
        elif {"m1", "m2", "phi"} <= set(spec):
            doc.modules[name] = {
                "m1": spec["m1"],
                "m2": spec["m2"],
                "phi": [[list(r) for r in mat] for mat in spec["phi"]],
            }
        else:
            raise FixtureError(
                f"module {name}: needs either over/dims/maps or m1/m2/phi"
            )
    tasks = obj.get("tasks", [])
    if not isinstance(tasks, list):
        raise FixtureError("tasks must be a list")
    for t in tasks:
        if not isinstance(t, dict) or "op" not in t:
            raise FixtureError(f"task {t!r}: needs an op")
    doc.tasks = [dict(t) for t in tasks]
    return doc


def serialize_fixture_document(doc: FixtureDocument) -> dict:
    return doc.to_obj()


def load_fixture(path: str) -> FixtureDocument:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise FixtureError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None
    return parse_fixture_document(obj)


# -- realizing a document ------------------------------------------------------------------


@dataclass
class BuiltFixture:
    field: Field
    algebras: Dict[str, Algebra] = dc_field(default_factory=dict)
    bimodules: Dict[str, Bimodule] = dc_field(default_factory=dict)
    triangle: Optional[TriangleAlgebra] = None
    modules: Dict[str, object] = dc_field(default_factory=dict)

    def module(self, name: str) -> Module:
        got = self.modules.get(name)
        if got is None:
            raise FixtureError(f"unknown module {name!r}")
        return got.flat() if isinstance(got, TriangleModule) else got

    def family(self, names: Sequence[str]) -> List[Module]:
        return [self.module(n) for n in names]


def _arrow_module(A: Algebra, dims: Sequence[int], maps: Dict[str, list], name: str) -> Module:
    f = A.field
    dims = list(dims)
    if len(dims) != A.n_vertices:
        raise FixtureError(f"module {name}: dims length != vertex count")
    arrow_mats: Dict[int, Matrix] = {}
    for label, rows in maps.items():
        ai = (A.arrow_index or {}).get(label)
        if ai is None:
            raise FixtureError(f"module {name}: unknown arrow {label!r}")
        arr = A.arrows[ai]
        arrow_mats[ai] = _matrix(
            f, rows, dims[arr.tgt], dims[arr.src], f"module {name}, arrow {label}"
        )
    for ai, arr in enumerate(A.arrows or []):
        if ai not in arrow_mats:
            arrow_mats[ai] = Matrix.zeros(f, dims[arr.tgt], dims[arr.src])
    action: Dict[int, Matrix] = {}
    for i in A.nonidem_indices:
        path = A.path_reps[i]
        mat = arrow_mats[path[0]]
        for a in path[1:]:
            mat = arrow_mats[a].mul(mat)
        action[i] = mat
    try:
        return Module(A, dims, action, name=name, validate=True)
    except Exception as e:
        raise FixtureError(f"module {name}: {e}") from None


def build_fixture(doc: FixtureDocument, p_override: Optional[int] = None) -> BuiltFixture:
    if doc.field_spec == "Q":
        f: Field = QQ
        p = None
    else:
        p = p_override or doc.field_spec["GF"]
        f = GF(p)
    built = BuiltFixture(field=f)
    for name, spec in doc.algebras.items():
        arrows = [tuple(a) for a in spec["arrows"]]
        rels = [
            [(c, list(labels)) for c, labels in rel] for rel in spec["relations"]
        ]
        try:
            built.algebras[name] = Algebra.from_quiver(
                f, spec["vertices"], arrows, rels, name=name
            )
        except Exception as e:
            raise FixtureError(f"algebra {name}: {e}") from None
    for name, spec in doc.bimodules.items():
        B = built.algebras.get(spec["left"])
        A = built.algebras.get(spec["right"])
        if B is None or A is None:
            raise FixtureError(f"bimodule {name}: unknown side algebra")
        n = spec["dim"]

        def acts(raw: Dict[str, list], R: Algebra, side: str) -> Dict[int, Matrix]:
            out = {}
            for label, rows in raw.items():
                i = R.basis_index.get(label)
                if i is None:
                    raise FixtureError(f"bimodule {name}: unknown {side} label {label!r}")
                out[i] = _matrix(f, rows, n, n, f"bimodule {name}, {side} {label}")
            return out

        try:
            built.bimodules[name] = Bimodule(
                B, A, n, acts(spec["left_action"], B, "left"),
                acts(spec["right_action"], A, "right"), name=name,
            )
        except Exception as e:
            raise FixtureError(f"bimodule {name}: {e}") from None
    if doc.triangle is not None:
        if "builtin" in doc.triangle:
            if p is None:
                raise FixtureError("builtin triangles are defined over prime fields")
            built.triangle = BUILTIN_TRIANGLES[doc.triangle["builtin"]](p)
        else:
            A = built.algebras.get(doc.triangle["A"])
            B = built.algebras.get(doc.triangle["B"])
            U = built.bimodules.get(doc.triangle["U"])
            if A is None or B is None or U is None:
                raise FixtureError("triangle: unresolved reference")
            try:
                built.triangle = TriangleAlgebra(A, B, U)
            except Exception as e:
                raise FixtureError(f"triangle: {e}") from None
    for name, spec in doc.modules.items():
        if "over" in spec:
            A = built.algebras.get(spec["over"])
            if A is None and built.triangle is not None:
                A = {"T.A": built.triangle.A, "T.B": built.triangle.B}.get(spec["over"])
            if A is None:
                raise FixtureError(f"module {name}: unknown algebra {spec['over']!r}")
            built.modules[name] = _arrow_module(A, spec["dims"], spec["maps"], name)
        else:
            ta = built.triangle
            if ta is None:
                raise FixtureError(f"module {name}: triple form needs a triangle")
            m1 = built.modules.get(spec["m1"])
            m2 = built.modules.get(spec["m2"])
            if not isinstance(m1, Module) or not isinstance(m2, Module):
                raise FixtureError(f"module {name}: unresolved legs")
            TM = ta.U.tensor(m1).module
            mats = [
                _matrix(
                    built.field, rows, m2.dims[v], TM.dims[v],
                    f"module {name}, glue at vertex {v}",
                )
                for v, rows in enumerate(spec["phi"])
            ]
            try:
                phi = Morphism(TM, m2, mats, validate=True)
                built.modules[name] = TriangleModule(ta, m1, m2, phi, name=name)
            except Exception as e:
                raise FixtureError(f"module {name}: {e}") from None
    return built


# -- builtin object descriptors -----------------------------------------------------------


def _descriptor_module(A: Algebra, desc: str) -> Module:
    if desc == "reg":
        return regular_module(A)
    kind, _, idx = desc.partition(":")
    table = {
        "simple": simple_module,
        "proj": projective_indecomposable,
        "inj": injective_indecomposable,
    }
    if kind in table and idx.isdigit() and int(idx) < A.n_vertices:
        return table[kind](A, int(idx))
    raise FixtureError(
        f"bad module descriptor {desc!r}; use reg, simple:V, proj:V or inj:V"
    )


# -- theorem verification runners ------------------------------------------------------------

ORACLE_TOKENS = {
    "2.2": "projective-injective-agreement",
    "2.3": "ext-transport",
    "2.4": "add-membership",
    "4.3": "gc-structure",
    "5.1": "leg-dimensions",
    "5.3": "dim-sandwich",
}

THEOREM_TOKENS = sorted(ORACLE_TOKENS) + ["3.5", "3.6", "4.8", "4.9", "5.5", "tr-formula"]


def _regular_corners(ta: TriangleAlgebra) -> Tuple[List[Module], List[Module]]:
    return (
        indecomposable_summands(regular_module(ta.A)),
        indecomposable_summands(regular_module(ta.B)),
    )


def _run_theorem(
    token: str, ta: TriangleAlgebra, cap: Tuple[int, ...], bound: int, work_limit: int
) -> Tuple[str, dict, List[str]]:
    """Returns (status, data, warnings)."""
    warnings: List[str] = []
    if token in ORACLE_TOKENS:
        out = exhaustive_check(
            ORACLE_TOKENS[token], ta, cap, bound=bound, max_candidates=work_limit
        )
        data = {
            "property": out.name,
            "cases": out.cases,
            "mismatches": {"computed": len(out.failures), "expected": 0},
            "failures": out.failures[:10],
            "indefinite": out.indefinite,
        }
        if out.details:
            data["details"] = out.details
        status = "pass" if out.passed else "fail"
        if out.indefinite and out.passed:
            warnings.append(f"{out.indefinite} cases were indefinite at bound {bound}")
        return status, data, warnings

    C1, C2 = _regular_corners(ta)
    if token == "3.5":
        rep = compatibility_report(ta, C1, C2, bound)
        consistent = True
        if rep.first_witness or rep.second_witness:
            consistent = rep.verdict == "refuted"
        if rep.verdict == "compatible-certified":
            consistent = consistent and rep.first_witness is None and rep.second_witness is None
        data = {
            "verdict": rep.verdict,
            "first_family": rep.family_a,
            "second_family": rep.family_b,
            "witnesses": {
                "tensor_side": rep.first_witness,
                "extension_side": rep.second_witness,
            },
            "consistent": {"computed": consistent, "expected": True},
        }
        if rep.verdict == "inconclusive":
            return "inconclusive", data, ["compatibility undecided at this bound"]
        return ("pass" if consistent else "fail"), data, warnings
    if token == "3.6":
        rep = wtilting_transfer_check(ta, C1, C2, bound)
        data = {
            "first_status": rep.first_status,
            "second_status": rep.second_status,
            "glued_status": rep.glued_status,
            "compatibility": rep.compat_verdict,
            "self_extension_rows": [
                {"degree": n, "glued": g, "corner_sum": c}
                for n, g, c in rep.ext_identity
            ],
            "violations": {"computed": rep.violations, "expected": []},
        }
        if "inconclusive" in (rep.first_status, rep.second_status, rep.glued_status):
            warnings.append("some w-tilting status undecided at this bound")
        return ("pass" if rep.holds else "fail"), data, warnings
    if token == "4.8":
        mods_a = enumerate_modules(ta.A, cap[: ta.nA], work_limit)
        mods_b = enumerate_modules(ta.B, cap[ta.nA:], work_limit)
        triples = enumerate_triangle_modules(ta, cap, work_limit)
        rep = cm_free_check(
            ta, C1, C2, mods_a, mods_b, [M.flat() for M in triples], bound
        )
        data = {
            "compatibility": rep.compat_verdict,
            "first_side_free": rep.first.holds,
            "second_side_free": rep.second.holds,
            "glued_side_free": rep.glued.holds,
            "non_add_members": {
                "first": rep.first.witnesses,
                "second": rep.second.witnesses,
                "glued": rep.glued.witnesses,
            },
            "transfer": {"computed": rep.equivalence, "expected": True},
        }
        if rep.equivalence is None:
            return "inconclusive", data, ["verdicts undecided at this bound"]
        return ("pass" if rep.equivalence else "fail"), data, warnings
    if token == "4.9":
        Tcomps = glued_comps(ta, C1, C2)
        attempted = constructed = validated = 0
        failures: List[str] = []
        for M in enumerate_triangle_modules(ta, cap, work_limit):
            attempted += 1
            f = construct_special_precover(M.flat(), Tcomps, bound)
            if f is None:
                continue
            constructed += 1
            prep = special_precover_check(f, Tcomps, Tcomps)
            if prep.is_special_precover:
                validated += 1
            else:
                failures.append(f"{M.name}: {prep.failures[:2]}")
        data = {
            "family": [m.name for m in Tcomps],
            "attempted": attempted,
            "constructed": constructed,
            "validated": {"computed": validated, "expected": constructed},
            "failures": failures[:10],
        }
        if constructed < attempted:
            warnings.append(
                f"{attempted - constructed} modules had no certified syzygy cover"
            )
        return ("pass" if validated == constructed else "fail"), data, warnings
    if token == "5.5":
        out = exhaustive_check(
            "dim-sandwich", ta, cap, bound=bound, max_candidates=work_limit
        )
        d = out.details
        lower = max(d["first_dim"], d["second_dim"]) if None not in (
            d["first_dim"], d["second_dim"]
        ) else None
        upper = (
            max(d["first_dim"] + d["sg"] + 1, d["second_dim"])
            if None not in (d["first_dim"], d["second_dim"])
            else None
        )
        data = {
            "first_global_dim": d["first_dim"],
            "second_global_dim": d["second_dim"],
            "glued_global_dim": d["glued_dim"],
            "correction": d["sg"],
            "global_sandwich": {
                "lower": lower,
                "computed": d["glued_dim"],
                "upper": upper,
            },
            "violations": {"computed": out.failures, "expected": []},
        }
        if None in (lower, upper, d["glued_dim"]):
            return "inconclusive", data, ["a global dimension exceeded the window"]
        return ("pass" if out.passed else "fail"), data, warnings
    if token == "tr-formula":
        base_cap = cap[: ta.nA]
        rep = tr_formula_check(
            ta.A, indecomposable_summands(regular_module(ta.A)), tuple(base_cap),
            bound, work_limit, ta=ta,
        )
        data = {
            "base_dim": rep.base_dim,
            "glued_dim": {"computed": rep.glued_dim, "expected": rep.expected},
            "jump_witness": rep.witness,
            "modules_checked": rep.modules_checked,
        }
        if rep.holds is None:
            return "inconclusive", data, ["a dimension exceeded the window"]
        return ("pass" if rep.holds else "fail"), data, warnings
    raise FixtureError(f"unknown theorem token {token!r}")


# -- fixture task runner --------------------------------------------------------------------


def _expect_status(computed: str, expected: Optional[str]) -> Tuple[str, dict]:
    data = {"computed": computed}
    if expected is not None:
        data["expected"] = expected
        return ("pass" if computed == expected else "fail"), data
    if computed == "inconclusive":
        return "inconclusive", data
    return "pass", data


def run_tasks(
    built: BuiltFixture,
    tasks: List[dict],
    bound: int,
    work_limit: int,
    inputs_digest: str,
    flags: dict,
    task_filter: Optional[str] = None,
) -> ReportDocument:
    report = ReportDocument(inputs_digest=inputs_digest, flags=flags)
    for idx, task in enumerate(tasks):
        op = task["op"]
        tid = task.get("id") or f"{idx}:{op}"
        if task_filter and task_filter not in tid:
            continue
        t0 = time.time()
        warnings: List[str] = []
        try:
            status, data = _run_one_task(built, task, bound, work_limit, warnings)
        except (FixtureError, OracleError, TriangleError) as e:
            status, data = "fail", {"error": str(e)}
        report.tasks.append(
            TaskReport(tid, status, data, seconds=time.time() - t0, warnings=warnings)
        )
    return report


def _run_one_task(
    built: BuiltFixture, task: dict, bound: int, work_limit: int, warnings: List[str]
) -> Tuple[str, dict]:
    op = task["op"]
    bound = int(task.get("bound", bound))
    if op == "example":
        eid = task.get("id")
        if eid not in BUILTIN_EXAMPLES:
            raise FixtureError(f"unknown example id {eid!r}")
        rep = BUILTIN_EXAMPLES[eid]()
        return ("pass" if rep["ok"] else "fail"), rep
    if op in ("projective", "injective"):
        M = built.module(task["module"])
        val = (is_projective_module if op == "projective" else is_injective_module)(M)
        data = {"module": task["module"], "computed": val}
        if "expect" in task:
            data["expected"] = bool(task["expect"])
            return ("pass" if val == task["expect"] else "fail"), data
        return "pass", data
    if op == "gc-projective":
        M = built.module(task["module"])
        fam = built.family(task["family"])
        v = is_gc_projective(M, fam, bound)
        status, cmp = _expect_status(v.status, task.get("expect"))
        data = {"module": task["module"], "family": list(task["family"]),
                "verdict": verdict_payload(v), "status": cmp}
        if status == "inconclusive":
            warnings.append("membership undecided at this bound")
        return status, data
    if op == "gcpd":
        M = built.module(task["module"])
        fam = built.family(task["family"])
        r = gc_pd(M, fam, bound)
        data = {"module": task["module"], "family": list(task["family"]),
                "value": {"computed": r.value}, "exact": r.exact}
        if "expect" in task:
            data["value"]["expected"] = task["expect"]
            return ("pass" if r.value == task["expect"] else "fail"), data
        if r.value is None:
            warnings.append("dimension exceeded the window")
            return "inconclusive", data
        return "pass", data
    if op == "w-tilting":
        fam = built.family(task["family"])
        rep = is_w_tilting(fam, bound)
        status, cmp = _expect_status(rep.status, task.get("expect"))
        data = {"family": list(task["family"]), "status": cmp}
        if rep.sigma_witness:
            data["self_extension_witness"] = rep.sigma_witness
        if status == "inconclusive":
            warnings.append("w-tilting undecided at this bound")
        return status, data
    if op == "compatibility":
        ta = built.triangle
        if ta is None:
            raise FixtureError("compatibility task needs a triangle")
        rep = compatibility_report(
            ta, built.family(task["first_family"]), built.family(task["second_family"]),
            bound,
        )
        status, cmp = _expect_status(rep.verdict, task.get("expect"))
        data = {
            "verdict": cmp,
            "first_family": rep.family_a,
            "second_family": rep.family_b,
            "witnesses": {"tensor_side": rep.first_witness,
                          "extension_side": rep.second_witness},
        }
        if status == "inconclusive":
            warnings.append("compatibility undecided at this bound")
        return status, data
    if op == "verify":
        ta = built.triangle
        if ta is None:
            raise FixtureError("verify task needs a triangle")
        cap = tuple(int(c) for c in task["cap"])
        status, data, ws = _run_theorem(
            str(task.get("theorem", task.get("property"))), ta, cap, bound, work_limit
        )
        warnings.extend(ws)
        return status, data
    if op == "counterexample-search":
        ta = built.triangle
        if ta is None:
            raise FixtureError("counterexample-search task needs a triangle")
        cap = tuple(int(c) for c in task["cap"])
        w = counterexample_AS_search(ta.A, cap, max_candidates=work_limit, ta=ta)
        if w is None:
            return "fail", {"found": False, "cap": list(cap)}
        flat = w.module.flat()
        reval = {
            "glued_pd_is_two": pd_up_to(flat, bound) == 2,
            "first_leg_pd_at_most_one": (pd_up_to(w.module.m1, bound) or 0) <= 1,
            "collapsed_leg_pd_at_most_one": (pd_up_to(w.module.cokernel()[0], bound) or 0) <= 1,
            "syzygy_glue_injective": flat_to_triple(ta, syzygy(flat, 1)).phi.is_injective(),
        }
        data = {
            "found": True,
            "witness": w.module.name,
            "witness_dims": list(flat.dims),
            "revalidated": {"computed": reval, "expected": {k: True for k in reval}},
        }
        return ("pass" if all(reval.values()) else "fail"), data
    if op == "enumerate":
        over = task["over"]
        cap = tuple(int(c) for c in task["cap"])
        if over == "triangle":
            if built.triangle is None:
                raise FixtureError("enumerate over the triangle needs one")
            classes = enumerate_triangle_modules(built.triangle, cap, work_limit)
            listing = [{"name": M.name, "dims": list(M.flat().dims)} for M in classes]
        else:
            A = built.algebras.get(over)
            if A is None:
                raise FixtureError(f"unknown algebra {over!r}")
            classes = enumerate_modules(A, cap, work_limit)
            listing = [{"name": M.name, "dims": list(M.dims)} for M in classes]
        data = {"over": over, "cap": list(cap), "count": {"computed": len(listing)}}
        if "expect_count" in task:
            data["count"]["expected"] = task["expect_count"]
            if len(listing) != task["expect_count"]:
                data["classes"] = listing
                return "fail", data
        data["classes"] = listing
        return "pass", data
    raise FixtureError(f"unknown task op {op!r}")


# -- argument parsing and entry points -----------------------------------------------------------


def _add_common(sp: argparse.ArgumentParser):
    sp.add_argument("--bound", type=int, default=8, help="search window (default 8)")
    sp.add_argument("--seed", type=int, default=0,
                    help="seed for randomized isomorphism search over infinite fields")
    sp.add_argument("--work-limit", type=int, default=None,
                    help=f"raw candidate budget (default 200000 or ${ENV_WORK_LIMIT})")
    sp.add_argument("--report", help="write the JSON report to this path")
    sp.add_argument("--format", choices=("json", "text"), default="text",
                    help="stdout rendering")


def _emit(report: ReportDocument, args) -> int:
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report.to_json() + "\n")
    print(report.to_json() if args.format == "json" else report.to_text())
    for tid in report.inconclusive:
        print(f"warning: {tid} was inconclusive at this bound", file=sys.stderr)
    return 1 if report.failed else 0


def _flags(args, **extra) -> dict:
    out = {"bound": args.bound, "seed": args.seed,
           "work_limit": args.work_limit or _default_work_limit()}
    out.update(extra)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="trigor",
        description="exact verification workflows for triangular matrix algebras",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("run", help="run the tasks of a fixture document")
    sp.add_argument("fixture")
    sp.add_argument("--task-filter", help="only run tasks whose id contains this")
    sp.add_argument("--field-char", type=int, default=None,
                    help="override the fixture's prime (finite fields only)")
    _add_common(sp)

    sp = sub.add_parser("reproduce-example", help="rerun a built-in example")
    sp.add_argument("id", choices=sorted(BUILTIN_EXAMPLES))
    sp.add_argument("--field-char", type=int, default=2)
    _add_common(sp)

    sp = sub.add_parser("enumerate", help="list module classes under a cap")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--algebra", choices=sorted(BUILTIN_ALGEBRAS))
    g.add_argument("--triangle", choices=sorted(BUILTIN_TRIANGLES))
    sp.add_argument("--cap", type=int, nargs="+", required=True)
    sp.add_argument("--field-char", type=int, default=2)
    _add_common(sp)

    sp = sub.add_parser("gcpd", help="relative Gorenstein dimension of a module")
    sp.add_argument("--algebra", choices=sorted(BUILTIN_ALGEBRAS), required=True)
    sp.add_argument("--module", required=True,
                    help="descriptor: reg, simple:V, proj:V or inj:V")
    sp.add_argument("--family", nargs="+", required=True,
                    help="family of descriptors defining the comparison class")
    sp.add_argument("--field-char", type=int, default=2)
    sp.add_argument("--expect", type=int, default=None)
    _add_common(sp)

    sp = sub.add_parser("verify-theorem", help="exhaustively check one statement")
    sp.add_argument("theorem", choices=THEOREM_TOKENS)
    sp.add_argument("--triangle", choices=sorted(BUILTIN_TRIANGLES), default="T(dual)")
    sp.add_argument("--cap", type=int, nargs="+", default=None,
                    help="per-vertex cap (default all ones)")
    sp.add_argument("--field-char", type=int, default=2)
    _add_common(sp)

    sp = sub.add_parser("report", help="re-render a stored report")
    sp.add_argument("path")
    sp.add_argument("--format", choices=("json", "text"), default="text")

    args = ap.parse_args(argv)
    try:
        return _dispatch(args)
    except (FixtureError, OracleError, TriangleError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.cmd == "report":
        with open(args.path) as fh:
            print(render_report_obj(json.load(fh), args.format))
        return 0

    work_limit = args.work_limit or _default_work_limit()

    if args.cmd == "run":
        doc = load_fixture(args.fixture)
        digest = digest_of(serialize_fixture_document(doc))
        built = build_fixture(doc, p_override=args.field_char)
        flags = _flags(args, fixture=os.path.basename(args.fixture))
        report = run_tasks(built, doc.tasks, args.bound, work_limit,
                           digest, flags, args.task_filter)
        return _emit(report, args)

    if args.cmd == "reproduce-example":
        p = args.field_char
        t0 = time.time()
        rep = BUILTIN_EXAMPLES[args.id](p=p)
        report = ReportDocument(
            inputs_digest=digest_of({"example": args.id, "p": p}),
            flags=_flags(args, example=args.id, field_char=p),
        )
        report.tasks.append(TaskReport(
            f"example {args.id}", "pass" if rep["ok"] else "fail", rep,
            seconds=time.time() - t0,
        ))
        return _emit(report, args)

    if args.cmd == "enumerate":
        p = args.field_char
        t0 = time.time()
        if args.algebra:
            A = BUILTIN_ALGEBRAS[args.algebra](p)
            classes = enumerate_modules(A, tuple(args.cap), work_limit)
            listing = [{"name": M.name, "dims": list(M.dims)} for M in classes]
            over = args.algebra
        else:
            ta = BUILTIN_TRIANGLES[args.triangle](p)
            classes = enumerate_triangle_modules(ta, tuple(args.cap), work_limit)
            listing = [{"name": M.name, "dims": list(M.flat().dims)} for M in classes]
            over = args.triangle
        report = ReportDocument(
            inputs_digest=digest_of({"enumerate": over, "cap": args.cap, "p": p}),
            flags=_flags(args, over=over, cap=args.cap, field_char=p),
        )
        report.tasks.append(TaskReport(
            f"enumerate {over} cap {tuple(args.cap)}", "pass",
            {"count": len(listing), "classes": listing}, seconds=time.time() - t0,
        ))
        return _emit(report, args)

    if args.cmd == "gcpd":
        p = args.field_char
        A = BUILTIN_ALGEBRAS[args.algebra](p)
        M = _descriptor_module(A, args.module)
        fam = [_descriptor_module(A, d) for d in args.family]
        t0 = time.time()
        r = gc_pd(M, fam, args.bound)
        data = {"module": args.module, "family": list(args.family),
                "value": {"computed": r.value}, "exact": r.exact}
        status = "pass"
        warnings: List[str] = []
        if args.expect is not None:
            data["value"]["expected"] = args.expect
            status = "pass" if r.value == args.expect else "fail"
        elif r.value is None:
            status = "inconclusive"
            warnings.append("dimension exceeded the window")
        report = ReportDocument(
            inputs_digest=digest_of({"gcpd": [args.algebra, args.module, args.family], "p": p}),
            flags=_flags(args, field_char=p),
        )
        report.tasks.append(TaskReport(
            f"gcpd {args.module} over {args.algebra}", status, data,
            seconds=time.time() - t0, warnings=warnings,
        ))
        return _emit(report, args)

    if args.cmd == "verify-theorem":
        p = args.field_char
        ta = BUILTIN_TRIANGLES[args.triangle](p)
        cap = tuple(args.cap) if args.cap else (1,) * (ta.nA + ta.nB)
        if len(cap) != ta.nA + ta.nB:
            raise FixtureError(
                f"cap needs {ta.nA + ta.nB} entries for {args.triangle}"
            )
        t0 = time.time()
        status, data, warnings = _run_theorem(args.theorem, ta, cap, args.bound, work_limit)
        report = ReportDocument(
            inputs_digest=digest_of({"theorem": args.theorem, "triangle": args.triangle,
                                     "cap": list(cap), "p": p}),
            flags=_flags(args, triangle=args.triangle, cap=list(cap), field_char=p),
        )
        report.tasks.append(TaskReport(
            f"theorem {args.theorem} on {args.triangle} cap {cap}", status, data,
            seconds=time.time() - t0, warnings=warnings,
        ))
        return _emit(report, args)

    raise AssertionError(f"unhandled command {args.cmd}")


if __name__ == "__main__":
    sys.exit(main())
