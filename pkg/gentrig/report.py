"""
report_v1 documents and CSV output.

Floats are written in their shortest round-trip form (repr), so identical
runs produce byte-identical files. Non-finite values become null (nan) or the
strings "inf"/"-inf".
"""

import csv
import io
import json
import logging
import math
from pathlib import Path
from typing import IO, Any, Iterable, Sequence

from . import __version__
from .config import EvalConfig
from .inequalities import get_case
from .scans import NOISE_TOL, STRICTNESS_TOL, GridSpec, ScanReport

logger = logging.getLogger(__name__)

SCHEMA = "report_v1"


def _number(value: float | None) -> float | str | None:
    if value is None or math.isnan(value):
        return None
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return float(value)


def _grid(grid: GridSpec | None) -> dict | None:
    if grid is None:
        return None
    return {
        "p_values": [_number(p) for p in grid.p_values],
        "x_count": grid.x_count,
        "x_spacing": grid.x_spacing,
        "x_margin_frac": _number(grid.x_margin_frac),
    }


def _point(argmin: tuple[float, float, str] | None) -> dict[str, Any] | None:
    if argmin is None:
        return None
    p, x, label = argmin
    return {"p": _number(p), "x": _number(x), "margin": label}


def case_section(report: ScanReport, include_records: bool = False) -> dict[str, Any]:
    """One case's part of a report_v1 document."""
    try:
        case = get_case(report.case_id)
        meta = {"description": case.description, "anchor": case.anchor, "kind": case.kind}
    except KeyError:
        meta = {"description": None, "anchor": None, "kind": None}

    argmin = _point(report.argmin)
    argmin_all = _point(report.argmin_all)

    section = {
        "case_id": report.case_id,
        **meta,
        "conjecture": report.conjecture,
        "verdict": report.verdict,
        "grid": _grid(report.grid),
        "evaluated": report.evaluated,
        "min_margin": _number(report.min_margin),
        "argmin": argmin,
        "min_margin_all": _number(report.min_margin_all),
        "argmin_all": argmin_all,
        "unresolved": report.unresolved,
        "violations": [
            {"p": _number(v.p), "x": _number(v.x), "margin": _number(v.margin), "label": v.label}
            for v in report.violations
        ],
        "monotone": [
            {
                "label": m.label,
                "p": _number(m.p),
                "x": _number(m.x),
                "direction": m.direction,
                "n": m.n,
                "positive": m.positive,
                "negative": m.negative,
                "flat": m.flat,
                "violations": [[_number(x), _number(d)] for x, d in m.violations],
                "observed_range": [_number(m.observed_min), _number(m.observed_max)],
                "claimed_range": None if m.claimed_range is None else [_number(b) for b in m.claimed_range],
                "range_ok": m.range_ok,
                "passed": m.passed,
            }
            for m in report.monotone
        ],
        "shapes": [
            {
                "label": s.label,
                "p": _number(s.p),
                "x": _number(s.x),
                "shape": s.shape,
                "n": s.n,
                "strict_share": _number(s.strict_share),
                "second_difference_range": [_number(s.min_second_difference), _number(s.max_second_difference)],
                "violations": [[_number(t), _number(d)] for t, d in s.violations],
                "passed": s.passed,
            }
            for s in report.shapes
        ],
        "limit_checks": [
            {
                "label": c.label,
                "p": _number(c.p),
                "end": c.end,
                "claimed": _number(c.claimed),
                "probes": [{"x": _number(x), "value": _number(v), "gap": _number(g)} for x, v, g in c.probes],
                "tol": _number(c.tol),
                "shrinking": c.shrinking,
                "order": _number(c.order),
                "passed": c.passed,
            }
            for c in report.limit_checks
        ],
    }
    if report.best_constant_probe:
        section["sharp_for"] = {repr(p): sharp for p, sharp in report.sharp_for.items()}
    if include_records:
        section["records"] = [
            {
                "label": r.label,
                "p": _number(r.p),
                "x": _number(r.x),
                "t": _number(r.t),
                "value": _number(r.value),
                "err_est": _number(r.err_est),
                "status": r.status,
            }
            for r in report.records
        ]
    return section


def report_document(
    reports: Sequence[ScanReport],
    cfg: EvalConfig,
    *,
    workers: int = 1,
    include_records: bool = False,
) -> dict[str, Any]:
    """
    Assemble a report_v1 document.

    Args:
        reports: Scan reports in output order
        cfg: Evaluation config, echoed in the document
        workers: Worker count, echoed in the document
        include_records: Add per-point records to each case section

    Returns:
        JSON-serializable dict
    """
    theorem = [r for r in reports if not r.conjecture and not r.best_constant_probe]
    return {
        "schema": SCHEMA,
        "tool": {"name": "gentrig", "version": __version__},
        "config": {
            "rel_tol": cfg.rel_tol,
            "abs_tol": cfg.abs_tol,
            "max_quad_levels": cfg.max_quad_levels,
            "max_iters": cfg.max_iters,
            "strictness_tol": STRICTNESS_TOL,
            "noise_tol": NOISE_TOL,
            "workers": workers,
        },
        "summary": {
            "cases": len(reports),
            "theorem_cases": len(theorem),
            "theorem_failures": sorted(r.case_id for r in theorem if not r.passed),
            "conjecture_counterexamples": sorted(r.case_id for r in reports if r.conjecture and not r.passed),
        },
        "cases": [case_section(r, include_records) for r in reports],
    }


def dumps(document: dict[str, Any]) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def write_report(document: dict[str, Any], path: str | Path) -> Path:
    """Write a report_v1 document as UTF-8 JSON; parent directories are created."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(document), encoding="utf-8")
    logger.info(f"Report written to {path}")
    return path


# ============================================================================
# CSV
# ============================================================================

def format_cell(value: Any) -> str:
    """Shortest round-trip text for floats, str() for everything else."""
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return repr(value)
    return str(value)


def write_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], out: IO[str] | str | Path | None = None) -> str:
    """
    Emit CSV with a header row and "\\n" line endings.

    Args:
        header: Column names
        rows: Row values (floats are written with repr)
        out: Open text stream, file path, or None to only return the text

    Returns:
        The CSV text
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])
    text = buffer.getvalue()

    if isinstance(out, (str, Path)):
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info(f"CSV written to {path}")
    elif out is not None:
        out.write(text)
    return text
