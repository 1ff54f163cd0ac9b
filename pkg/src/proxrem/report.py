"""JSON report documents for measured graphs.

Rationals are serialized as numerator/denominator pairs plus an advisory
6-significant-digit decimal rendering; parsing ignores the decimal, so a
document round-trips losslessly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .bounds import CheckResult
from .metrics import InvariantReport

TOOL_NAME = "proxrem"


def encode_rational(x: Fraction) -> dict[str, Any]:
    return {"num": x.numerator, "den": x.denominator, "decimal": f"{float(x):.6g}"}


def decode_rational(obj: dict[str, Any]) -> Fraction:
    return Fraction(obj["num"], obj["den"])


def _encode_optional_rational(x: Fraction | None) -> dict[str, Any] | None:
    return None if x is None else encode_rational(x)


def _decode_optional_rational(obj: dict[str, Any] | None) -> Fraction | None:
    return None if obj is None else decode_rational(obj)


@dataclass
class ReportDocument:
    """Everything the tool knows about one measured graph."""

    version: str
    graph_source: dict[str, Any]
    edge_count: int
    invariants: InvariantReport
    checks: list[CheckResult] = field(default_factory=list)
    construction_notes: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict[str, Any]:
        inv = self.invariants
        return {
            "tool": TOOL_NAME,
            "version": self.version,
            "graph": self.graph_source,
            "edge_count": self.edge_count,
            "invariants": {
                "order": inv.order,
                "total_distance": list(inv.total_distance),
                "eccentricity": list(inv.eccentricity),
                "proximity": encode_rational(inv.proximity),
                "remoteness": encode_rational(inv.remoteness),
                "diameter": inv.diameter,
                "radius": inv.radius,
                "median_vertices": list(inv.median_vertices),
                "margin_vertices": list(inv.margin_vertices),
                "center_vertices": list(inv.center_vertices),
                "average_distance": encode_rational(inv.average_distance),
                "min_degree": inv.min_degree,
            },
            "class_flags": {
                "triangle_free": inv.triangle_free,
                "c4_free": inv.c4_free,
            },
            "checks": [
                {
                    "id": c.bound_id,
                    "applicable": c.applicable,
                    "lhs": _encode_optional_rational(c.lhs),
                    "rhs": _encode_optional_rational(c.rhs),
                    "holds": c.holds,
                    "slack": _encode_optional_rational(c.slack),
                    "tight": c.tight,
                }
                for c in self.checks
            ],
            "construction_notes": list(self.construction_notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data: dict[str, Any]) -> "ReportDocument":
        inv = data["invariants"]
        flags = data.get("class_flags", {})
        report = InvariantReport(
            order=inv["order"],
            total_distance=tuple(inv["total_distance"]),
            eccentricity=tuple(inv["eccentricity"]),
            proximity=decode_rational(inv["proximity"]),
            remoteness=decode_rational(inv["remoteness"]),
            diameter=inv["diameter"],
            radius=inv["radius"],
            median_vertices=tuple(inv["median_vertices"]),
            margin_vertices=tuple(inv["margin_vertices"]),
            center_vertices=tuple(inv["center_vertices"]),
            average_distance=decode_rational(inv["average_distance"]),
            min_degree=inv["min_degree"],
            triangle_free=flags.get("triangle_free"),
            c4_free=flags.get("c4_free"),
        )
        checks = [
            CheckResult(
                bound_id=c["id"],
                applicable=c["applicable"],
                lhs=_decode_optional_rational(c["lhs"]),
                rhs=_decode_optional_rational(c["rhs"]),
                holds=c["holds"],
                slack=_decode_optional_rational(c["slack"]),
                tight=c["tight"],
            )
            for c in data.get("checks", [])
        ]
        return cls(
            version=data["version"],
            graph_source=data["graph"],
            edge_count=data["edge_count"],
            invariants=report,
            checks=checks,
            construction_notes=list(data.get("construction_notes", [])),
        )

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_json_dict(json.loads(text))


def render_table(doc: ReportDocument) -> str:
    """Aligned human-readable rendering of a report."""
    inv = doc.invariants

    def rat(x: Fraction) -> str:
        return f"{x} ({float(x):.6g})" if x.denominator != 1 else str(x)

    def vertex_set(vs: tuple[int, ...]) -> str:
        if len(vs) > 12:
            return "{" + ", ".join(map(str, vs[:12])) + f", ... {len(vs)} total}}"
        return "{" + ", ".join(map(str, vs)) + "}"

    rows = [
        ("graph", ", ".join(f"{k}={v}" for k, v in doc.graph_source.items())),
        ("order", str(inv.order)),
        ("edges", str(doc.edge_count)),
        ("min degree", str(inv.min_degree)),
        ("proximity", rat(inv.proximity)),
        ("remoteness", rat(inv.remoteness)),
        ("average distance", rat(inv.average_distance)),
        ("diameter", str(inv.diameter)),
        ("radius", str(inv.radius)),
        ("median vertices", vertex_set(inv.median_vertices)),
        ("margin vertices", vertex_set(inv.margin_vertices)),
        ("center vertices", vertex_set(inv.center_vertices)),
        ("triangle-free", str(inv.triangle_free)),
        ("C4-free", str(inv.c4_free)),
    ]
    width = max(len(label) for label, _ in rows)
    lines = [f"{label:<{width}}  {value}" for label, value in rows]
    if doc.checks:
        lines.append("")
        lines.append("bound checks:")
        for c in doc.checks:
            if not c.applicable:
                lines.append(f"  {c.bound_id:<14} not applicable")
                continue
            status = "TIGHT" if c.tight else ("holds" if c.holds else "VIOLATED")
            lines.append(
                f"  {c.bound_id:<14} {status}  lhs={c.lhs} rhs={c.rhs} slack={c.slack}"
            )
    for note in doc.construction_notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)
