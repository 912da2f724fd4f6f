"""
Rendering of command results as text, JSON or LaTeX
"""
import json
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Optional

import pandas as pd

from config import Config


@dataclass
class Report:
    """Structured result of one command; key order is fixed for byte-stable output"""

    command: str
    p: int
    field: str
    lam: str
    passed: bool
    results: Dict[str, Any] = dataclass_field(default_factory=dict)
    timing: Optional[float] = None

    def as_dict(self) -> Dict[str, Any]:
        out = {
            "command": self.command,
            "p": self.p,
            "field": self.field,
            "lambda": self.lam,
            "passed": self.passed,
            "results": self.results,
        }
        if self.timing is not None:
            out["timing_seconds"] = round(self.timing, 3)
        return out


def render(report: Report, fmt: str = None) -> str:
    fmt = fmt or Config.OUTPUT_FORMAT
    renderers = {"text": render_text, "json": render_json, "latex": render_latex}
    if fmt not in renderers:
        raise ValueError(f"Unsupported output format: {fmt}")
    return renderers[fmt](report)


def render_json(report: Report) -> str:
    return json.dumps(report.as_dict(), indent=2, ensure_ascii=False)


def parse_json(text: str) -> Report:
    data = json.loads(text)
    timing = data.get("timing_seconds")
    return Report(data["command"], data["p"], data["field"], data["lambda"], data["passed"], data["results"], timing)


# ----------------------------------------------------------------------
# Tables
# ----------------------------------------------------------------------
def checks_frame(reports: List[Dict[str, Any]]) -> pd.DataFrame:
    rows = [
        {"suite": r["subject"], "check": c["name"], "passed": c["passed"], "detail": c["detail"]}
        for r in reports
        for c in r["checks"]
    ]
    return pd.DataFrame(rows, columns=["suite", "check", "passed", "detail"])


def dimensions_frame(results: Dict[str, Any]) -> pd.DataFrame:
    rows = []
    for key in ("h1", "h1_star", "h2", "h2_star"):
        if key in results:
            group = results[key]
            rows.append({
                "group": group["name"],
                "dimension": group["dimension"],
                "expected": group.get("expected"),
                "kernel": group["kernel_dim"],
                "coboundaries": group["coboundary_dim"],
            })
    return pd.DataFrame(rows)


def grade_frame(grade_table: List[Dict[str, int]]) -> pd.DataFrame:
    return pd.DataFrame(grade_table, columns=["grade", "kernel_dim", "expected"])


def catalog_table(catalog: List[Dict[str, Any]], as_latex: bool = False) -> pd.DataFrame:
    name_key, bracket_key, base_key, p_key = ("latex_name", "bracket_latex", "base_latex", "p_latex") if as_latex else (
        "extension", "bracket_correction", "base_p_power", "p_correction")
    rows = []
    for entry in catalog:
        rows.append({
            "extension": f"${entry[name_key]}$" if as_latex else entry[name_key],
            "[g,h] correction": f"$({entry[bracket_key]})c$" if as_latex else f"({entry[bracket_key]})c",
            "base g^[p]": f"${entry[base_key]}$" if as_latex else entry[base_key],
            "g^[p] correction": f"$({entry[p_key]})c$" if as_latex else f"({entry[p_key]})c",
            "verified": entry.get("verified"),
        })
    return pd.DataFrame(rows)


# ----------------------------------------------------------------------
# Text
# ----------------------------------------------------------------------
def _mark(ok: bool) -> str:
    return "✓" if ok else "✗"


def _sections(results: Dict[str, Any]) -> Dict[str, Any]:
    """Lift the nested verify and extensions parts of a combined report to the top level"""
    merged = dict(results)
    for key in ("verify", "extensions"):
        if isinstance(results.get(key), dict):
            merged.update(results[key])
    return merged


def render_text(report: Report) -> str:
    lines = [
        f"{report.command} for p = {report.p} over {report.field}",
        f"lambda = ({report.lam})",
        "",
    ]
    results = _sections(report.results)

    if "checks" in results:
        frame = checks_frame(results["checks"])
        frame["passed"] = frame["passed"].map(_mark)
        lines.append(frame.to_string(index=False))
        lines.append("")

    if "h1" in results:
        lines.append(dimensions_frame(results).to_string(index=False))
        lines.append("")
        for key in ("h1", "h1_star", "h2", "h2_star"):
            group = results[key]
            lines.append(f"{group['name']} representatives:")
            lines.extend(f"  {rep}" for rep in group["representatives"])
        lines.append("")

    if "grade_table" in results:
        lines.append("dim ker d2 by grade:")
        lines.append(grade_frame(results["grade_table"]).to_string(index=False))
        lines.append("")

    if "named_bases" in results:
        for entry in results["named_bases"]:
            lines.append(f"{_mark(entry['passed'])} {entry['subject']}")
        lines.append("")

    if "catalog" in results:
        lines.append(catalog_table(results["catalog"]).to_string(index=False))
        witness = results.get("pfold_witness")
        if witness:
            lines.append(f"nonzero {report.p}-fold bracket in {witness['extension']}: "
                         f"{witness['sequence']} -> {witness['value']}")
        lines.append("")

    if "isomorphic" in results:
        if results["isomorphic"]:
            lines.append(f"✓ isomorphic, mu = {results['mu']}")
        else:
            lines.append("✗ not isomorphic")
        lines.append("")

    if report.timing is not None:
        lines.append(f"time: {report.timing:.3f}s")
    lines.append(f"{_mark(report.passed)} {'all checks passed' if report.passed else 'verification mismatch'}")
    return "\n".join(lines)


# ----------------------------------------------------------------------
# LaTeX
# ----------------------------------------------------------------------
def render_latex(report: Report) -> str:
    results = _sections(report.results)
    parts = [f"% {report.command}, p = {report.p}, {report.field}, lambda = ({report.lam})"]

    if "catalog" in results:
        frame = catalog_table(results["catalog"], as_latex=True).drop(columns=["verified"])
        frame.columns = ["Extension", "$[g,h]$", "$g^{[p]}$ in the base", "$g^{[p]}$"]
        parts.append(frame.to_latex(index=False, escape=False, column_format="llll"))
    if "h1" in results:
        parts.append(dimensions_frame(results).to_latex(index=False, escape=True))
    if "grade_table" in results:
        parts.append(grade_frame(results["grade_table"]).to_latex(index=False, escape=True))
    if "checks" in results:
        frame = checks_frame(results["checks"])
        frame["passed"] = frame["passed"].map(lambda ok: "pass" if ok else "FAIL")
        parts.append(frame.to_latex(index=False, escape=True))
    if "isomorphic" in results:
        parts.append(f"% mu = {results['mu']}" if results["isomorphic"] else "% not isomorphic")
    return "\n".join(parts)
