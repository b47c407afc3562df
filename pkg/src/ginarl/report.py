"""
Structured run reports.

One JSON document per CLI run, validated against REPORT_SCHEMA before it is
printed. Serialisation uses sorted keys and fixed indentation so identical
runs produce byte-identical output (wall-clock timing is opt-in).
"""
from __future__ import annotations

import json
from typing import Any, Mapping, Optional, Sequence

import jsonschema

from .gin import GinResult
from .lefschetz import AnalysisReport, ArlDirectResult, ArlProfileResult, PropertyResult
from .monomial_ideal import HilbertFunction, MonomialIdeal
from .profile import FProfile
from .ring import ExponentVector, VariableContext
from .validators import ComputationError

MODULE = "cli-io"

REPORT_VERSION = "1.0"

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ginarl run report",
    "type": "object",
    "required": ["version", "command", "inputs", "result", "witnesses", "certificate", "timing"],
    "additionalProperties": False,
    "properties": {
        "version": {"const": REPORT_VERSION},
        "command": {
            "enum": ["gin", "arl", "slp", "ssp", "hilbert", "froberg", "mainthm", "oracle-compare"]
        },
        "inputs": {
            "type": "object",
            "properties": {
                "ring": {"type": "array", "items": {"type": "string"}},
                "generators": {"type": "array", "items": {"type": "string"}},
                "metadata": {"type": "object", "additionalProperties": {"type": "string"}},
                "config": {"type": "object"},
                "n": {"type": "integer"},
                "degrees": {"type": "array", "items": {"type": "integer"}},
            },
        },
        "result": {"type": ["object", "null"]},
        "witnesses": {"type": "object"},
        "certificate": {
            "type": ["object", "null"],
            "required": ["strongly_stable", "trials_agreeing", "coefficient_bound", "seed"],
            "properties": {
                "strongly_stable": {"type": "boolean"},
                "trials_agreeing": {"type": "integer", "minimum": 2},
                "coefficient_bound": {"type": "integer"},
                "seed": {"type": "integer"},
            },
        },
        "timing": {
            "type": "object",
            "additionalProperties": {"type": ["integer", "number"]},
        },
        "notes": {"type": "array", "items": {"type": "string"}},
        "error": {
            "type": "object",
            "required": ["module", "message", "kind"],
            "properties": {
                "module": {"type": "string"},
                "message": {"type": "string"},
                "kind": {"type": "string"},
            },
        },
    },
}


# ── Serialisers ──────────────────────────────────────────────────


def monomial_str(ctx: VariableContext, exps: ExponentVector) -> str:
    return ctx.format_monomial(exps)


def tuple_list(alpha: Optional[Sequence[int]]) -> Optional[list[int]]:
    return None if alpha is None else [int(a) for a in alpha]


def ideal_doc(ideal: MonomialIdeal) -> dict[str, Any]:
    return {"ring": list(ideal.ctx.names), "generators": ideal.generator_strings()}


def certificate_doc(result: GinResult) -> dict[str, Any]:
    cert = result.certificate
    return {
        "strongly_stable": cert.strongly_stable,
        "trials_agreeing": cert.trials_agreeing,
        "coefficient_bound": cert.coefficient_bound,
        "seed": cert.seed,
    }


def hilbert_doc(h: HilbertFunction) -> list[int]:
    return h.as_list()


def arl_direct_doc(ctx: VariableContext, r: ArlDirectResult) -> dict[str, Any]:
    if r.holds:
        return {"holds": True}
    return {
        "holds": False,
        "generator": monomial_str(ctx, r.generator),
        "monomial": monomial_str(ctx, r.monomial),
    }


def arl_profile_doc(r: ArlProfileResult) -> dict[str, Any]:
    doc: dict[str, Any] = {"holds": r.holds}
    if not r.holds:
        doc.update(condition=r.condition, index=r.index, alpha=tuple_list(r.alpha), beta=tuple_list(r.beta))
    return doc


def property_doc(r: PropertyResult) -> dict[str, Any]:
    return {"holds": r.holds, "alpha": tuple_list(r.witness)}


def profile_doc(p: FProfile) -> dict[str, Any]:
    return {
        "f1": p.f1,
        "socle_degree": p.socle_degree,
        "j_set_sizes": {str(i): len(j) for i, j in sorted(p.j_sets.items())},
    }


def analysis_doc(report: AnalysisReport) -> dict[str, Any]:
    ctx = report.ideal.ctx
    return {
        "arl": report.arl,
        "arl_direct": arl_direct_doc(ctx, report.arl_direct),
        "arl_profile": arl_profile_doc(report.arl_profile),
        "slp": property_doc(report.slp),
        "ssp": property_doc(report.ssp),
        "condition1": [
            {"i": r.index, "holds": r.holds, "alpha": tuple_list(r.witness)} for r in report.condition1
        ],
        "condition2": [
            {"i": r.index, "holds": r.holds, "alpha": tuple_list(r.alpha), "beta": tuple_list(r.beta)}
            for r in report.condition2
        ],
        "ssp_restrictions": [
            {"i": r.index, "holds": r.holds, "alpha": tuple_list(r.witness)} for r in report.ssp_restrictions
        ],
    }


# ── Document assembly ────────────────────────────────────────────


def build_report(
    command: str,
    inputs: Mapping[str, Any],
    result: Optional[Mapping[str, Any]],
    witnesses: Optional[Mapping[str, Any]] = None,
    certificate: Optional[Mapping[str, Any]] = None,
    timing: Optional[Mapping[str, Any]] = None,
    notes: Optional[Sequence[str]] = None,
    error: Optional[Mapping[str, str]] = None,
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "version": REPORT_VERSION,
        "command": command,
        "inputs": dict(inputs),
        "result": dict(result) if result is not None else None,
        "witnesses": dict(witnesses or {}),
        "certificate": dict(certificate) if certificate is not None else None,
        "timing": dict(timing or {}),
    }
    if notes:
        doc["notes"] = list(notes)
    if error is not None:
        doc["error"] = dict(error)
    validate_report(doc)
    return doc


def validate_report(doc: Mapping[str, Any]) -> None:
    try:
        jsonschema.validate(instance=doc, schema=REPORT_SCHEMA)
    except jsonschema.ValidationError as e:
        raise ComputationError(f"Report does not match its schema: {e.message}", module=MODULE) from e


def render_report(doc: Mapping[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
