"""
JSON report documents (schema version "1").

Radii serialize as exact strings ("1/2", "inf"); spectra as lists of boxes
with "-inf"/"inf" sentinels; log-space floats with a fixed number of
significant digits. Keys are sorted so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
import math
from typing import Any

from pydantic import BaseModel, Field

from src.cech import CohomologyReport, OracleCheck
from src.core.config import config
from src.domains import Disc, LaurentModel, Radius, ReinhardtBoxDomain
from src.envelope import LogRegion, SteinCertificate
from src.lattice import LatticeBox, Spectrum, format_ext_int
from src.numeric import NumericCheck
from src.pairs import PairClass

SCHEMA_VERSION = "1"


class ReportDocument(BaseModel):
    """Top-level JSON document emitted by every command."""

    schema_version: str = SCHEMA_VERSION
    command: str
    input: str
    sections: dict[str, Any] = Field(default_factory=dict)
    passed: bool = True

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def log_float(value: float) -> float | str:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return float(f"{value:.{config.geometry.log_digits}g}")


def _plain(value: Any) -> Any:
    """JSON-safe numeric detail values with stable precision."""
    if isinstance(value, float):
        return log_float(value)
    if isinstance(value, list | tuple):
        return [_plain(v) for v in value]
    return value


def radius_json(radius: Radius) -> str:
    return str(radius)


def domain_json(domain: ReinhardtBoxDomain) -> dict[str, Any]:
    factors = []
    for factor in domain.factors:
        if isinstance(factor, Disc):
            factors.append({"kind": "disc", "outer": radius_json(factor.outer)})
        else:
            factors.append({"kind": "annulus", "inner": radius_json(factor.inner), "outer": radius_json(factor.outer)})
    return {"dsl": domain.dsl(), "display": str(domain), "factors": factors}


def box_json(box: LatticeBox) -> list[list[int | str]]:
    return [[_ext(lo), _ext(hi)] for lo, hi in box.intervals]


def _ext(value: int | float) -> int | str:
    return int(value) if not math.isinf(value) else format_ext_int(value)


def spectrum_json(spectrum: Spectrum) -> dict[str, Any]:
    return {"dimension": spectrum.dimension, "boxes": [box_json(b) for b in spectrum.boxes], "display": str(spectrum)}


def laurent_json(model: LaurentModel) -> dict[str, Any]:
    return {
        "spectrum": spectrum_json(model.spectrum),
        "convergence": domain_json(model.convergence),
        "pieces": [{"box": box_json(box), "convergence": domain_json(d)} for box, d in model.pieces()],
    }


def pair_json(pair: PairClass) -> dict[str, Any]:
    return {
        "inner": domain_json(pair.inner),
        "outer": domain_json(pair.outer),
        "tag": pair.tag.value,
        "witness_rule": pair.witness_rule.value,
        "complement": laurent_json(pair.complement) if pair.complement else None,
        "closure_of_restriction": (
            laurent_json(pair.closure_of_restriction) if pair.closure_of_restriction else None
        ),
        "intermediate": domain_json(pair.intermediate) if pair.intermediate else None,
        "factors": [{"tag": f.tag.value, "witness_rule": f.witness_rule.value} for f in pair.factors],
        "reason": pair.reason,
    }


def cohomology_json(report: CohomologyReport) -> dict[str, Any]:
    return {
        "bidegree": list(report.bidegree),
        "class": report.cohom_class.value,
        "cardinality": report.cardinality.value,
        "multiplicity": report.multiplicity,
        "pair_tags": [tag.value for tag in report.pair_tags],
        "reduced": laurent_json(report.reduced),
        "indiscrete": (
            {
                "numerator": laurent_json(report.indiscrete.numerator),
                "denominators": [laurent_json(m) for m in report.indiscrete.denominators],
            }
            if report.indiscrete
            else None
        ),
        "justification": [
            {"rule": e.rule_id.value, "anchor": e.anchor, "statement": e.statement} for e in report.justification
        ],
        "notes": list(report.notes),
        "informational": report.informational,
    }


def log_region_json(region: LogRegion) -> list[dict[str, Any]]:
    return [
        {"lo": [log_float(x) for x in box.lo], "hi": [log_float(x) for x in box.hi]} for box in region.boxes
    ]


def certificate_json(certificate: SteinCertificate) -> dict[str, Any]:
    hull = certificate.hull
    return {
        "is_stein": certificate.is_stein,
        "extension_point": [radius_json(r) for r in certificate.extension_point],
        "log_point": [log_float(x) for x in certificate.log_point],
        "envelope": domain_json(certificate.envelope) if certificate.envelope else None,
        "bounding_box": domain_json(certificate.bounding_box),
        "hull": {
            "is_box": hull.is_box(),
            "halfplanes": [
                {"normal": [log_float(a) for a in h.normal], "offset": log_float(h.offset)} for h in hull.halfplanes
            ],
            "directions": [[log_float(d) for d in direction] for direction in hull.directions],
        },
    }


def oracle_json(check: OracleCheck) -> dict[str, Any]:
    return {
        "window": check.window,
        "agrees": check.agrees,
        "engine_points": check.engine_points,
        "oracle_points": check.oracle_points,
        "only_in_engine": [list(p) for p in check.only_in_engine],
        "only_in_oracle": [list(p) for p in check.only_in_oracle],
    }


def numeric_json(check: NumericCheck) -> dict[str, Any]:
    return {"name": check.name, "passed": check.passed, "details": {k: _plain(v) for k, v in check.details.items()}}
