"""Machine-readable reports.

Exact values print as "num/den", binary64 values with 17 significant digits and
+∞ as "inf"; every estimate carries the name of the formula or oracle it came
from.
"""

import csv
import hashlib
import io
import json
import math
from fractions import Fraction
from typing import Any, Literal

from core.hardy import ConstantEstimate
from core.utils.rationals import Extended, format_rational

Emit = Literal["json", "csv"]


def format_float(value: float) -> str:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.17g}"


def format_value(value: Extended) -> str:
    return format_rational(value) if isinstance(value, Fraction) else format_float(float(value))


def estimate_entry(estimate: ConstantEstimate, source: str) -> dict[str, Any]:
    entry: dict[str, Any] = {
        "source": source,
        "kind": estimate.kind,
        "value": format_float(estimate.value),
    }
    if estimate.exact is not None:
        entry["exact"] = format_rational(estimate.exact)
    if estimate.notes:
        entry["notes"] = estimate.notes
    return entry


def bound_entry(value: Extended, source: str, kind: str) -> dict[str, Any]:
    entry: dict[str, Any] = {"source": source, "kind": kind, "value": format_value(value)}
    if isinstance(value, Fraction):
        entry["exact"] = format_rational(value)
    return entry


def sandwich_factor(estimate: float, lower: float) -> float:
    """max(lower/estimate, estimate/lower), with 1 when both vanish and ∞ when only one does."""
    if estimate == lower:
        return 1.0
    if estimate == 0 or lower == 0 or math.isinf(estimate) or math.isinf(lower):
        return math.inf
    return max(lower / estimate, estimate / lower)


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def to_jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return str(value)


def _flatten(value: Any, prefix: str, rows: list[tuple[str, Any]]) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten(item, f"{prefix}.{key}" if prefix else str(key), rows)
    elif isinstance(value, list):
        for index, item in enumerate(value):
            _flatten(item, f"{prefix}.{index}", rows)
    else:
        rows.append((prefix, value))


def render(report: dict[str, Any], emit: Emit = "json") -> str:
    payload = to_jsonable(report)
    if emit == "json":
        return json.dumps(payload, ensure_ascii=False, indent=2)
    rows: list[tuple[str, Any]] = []
    _flatten(payload, "", rows)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["field", "value"])
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")
