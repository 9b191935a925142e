"""Report documents for verification runs.

A report is a list of task results: identifier, pass/fail/inconclusive
status, a data payload that always carries both sides of any compared
quantity, named families for family-relative claims, digests of certified
certificates, and wall-clock timings.  Rendering is JSON (machine) or
aligned text (human).  Digests are SHA-256 over a canonical JSON encoding,
so equal content yields equal digest independent of construction order.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import List

from .linalg import Matrix
from .module import Module, Morphism
from .relgor import GCCertificate, GCVerdict


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)


def digest_of(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()


def matrix_rows(m: Matrix) -> List[List[str]]:
    f = m.field
    return [[f.to_str(x) for x in row] for row in m.rows]


def module_content(M: Module) -> dict:
    return {
        "algebra": M.algebra.name,
        "dims": list(M.dims),
        "action": {
            str(i): matrix_rows(M.action[i]) for i in M.algebra.nonidem_indices
        },
    }


def morphism_content(f: Morphism) -> dict:
    return {
        "source": module_content(f.source),
        "target": module_content(f.target),
        "mats": [matrix_rows(m) for m in f.mats],
    }


def certificate_digest(cert: GCCertificate) -> str:
    """Content digest of a membership certificate.

    Covers the module, the family, and every stored map of both sides, so a
    re-validator can pin the exact object it checked.
    """
    left = cert.left
    payload = {
        "module": module_content(cert.module),
        "comps": [module_content(c) for c in cert.comps],
        "left": {
            "terms": [module_content(t) for t in left.terms],
            "maps": [[matrix_rows(m) for m in d.mats] for d in left.maps],
            "closure": list(left.closure_data),
            "ext_through": left.ext_checked_through,
        },
        "right": [
            {
                "map": [matrix_rows(m) for m in st.f.mats],
                "target_comps": list(st.comp_indices),
                "residual_dims": list(st.residual.dims),
            }
            for st in cert.right_stages
        ],
        "right_closure": [cert.right_closure_kind, cert.right_closure_index],
    }
    return digest_of(payload)


def verdict_payload(v: GCVerdict) -> dict:
    out = {"status": v.status}
    if v.witness is not None:
        out["witness"] = v.witness
        out["detail"] = dict(v.detail)
    if v.conditional:
        out["conditional"] = True
    if v.certificate is not None:
        out["certificate_digest"] = certificate_digest(v.certificate)
    return out


@dataclass
class TaskReport:
    task_id: str
    status: str  # "pass" | "fail" | "inconclusive"
    data: dict = field(default_factory=dict)
    seconds: float = 0.0
    warnings: List[str] = field(default_factory=list)

    def to_obj(self) -> dict:
        return {
            "task": self.task_id,
            "status": self.status,
            "seconds": round(self.seconds, 3),
            "data": self.data,
            "warnings": self.warnings,
        }


@dataclass
class ReportDocument:
    inputs_digest: str
    flags: dict = field(default_factory=dict)
    tasks: List[TaskReport] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(t.status == "fail" for t in self.tasks)

    @property
    def inconclusive(self) -> List[str]:
        return [t.task_id for t in self.tasks if t.status == "inconclusive"]

    def to_obj(self) -> dict:
        return {
            "inputs_digest": self.inputs_digest,
            "flags": self.flags,
            "tasks": [t.to_obj() for t in self.tasks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), indent=2, default=str)

    def to_text(self) -> str:
        lines = [f"inputs {self.inputs_digest[:16]}  flags {self.flags}"]
        for t in self.tasks:
            mark = {"pass": "PASS", "fail": "FAIL", "inconclusive": "INCONCLUSIVE"}[
                t.status
            ]
            lines.append(f"{t.task_id}: {mark} ({t.seconds:.2f} s)")
            lines.extend(_render_data(t.data, indent=2))
            for w in t.warnings:
                lines.append(f"  warning: {w}")
        return "\n".join(lines)


def render_report_obj(obj: dict, fmt: str) -> str:
    """Re-render a stored report object."""
    doc = ReportDocument(
        inputs_digest=obj.get("inputs_digest", ""), flags=obj.get("flags", {})
    )
    for t in obj.get("tasks", []):
        doc.tasks.append(
            TaskReport(
                task_id=t.get("task", "?"),
                status=t.get("status", "?"),
                data=t.get("data", {}),
                seconds=t.get("seconds", 0.0),
                warnings=t.get("warnings", []),
            )
        )
    return doc.to_json() if fmt == "json" else doc.to_text()


def _render_data(data, indent: int) -> List[str]:
    pad = " " * indent
    lines: List[str] = []
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, dict):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_data(v, indent + 2))
            elif isinstance(v, list) and v and isinstance(v[0], (dict, list)):
                lines.append(f"{pad}{k}:")
                for item in v:
                    lines.extend(_render_data(item, indent + 2))
            else:
                lines.append(f"{pad}{k}: {_short(v)}")
    else:
        lines.append(f"{pad}{_short(data)}")
    return lines


def _short(v) -> str:
    s = json.dumps(v, default=str) if isinstance(v, (list, dict)) else str(v)
    return s if len(s) <= 120 else s[:117] + "..."
