import csv
import io
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from polyaxial.exceptions import ToleranceFailure
from polyaxial.schemas import CheckRecord

logger = logging.getLogger(__name__)

CSV_FIELDS = ["check_id", "paper_ref", "lhs", "rhs", "tolerance", "pass"]


@dataclass
class Report:
    command: str
    records: List[CheckRecord]
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def failures(self) -> List[CheckRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.failures


def _json_safe(value):
    """Non-finite floats become null so the document stays strict JSON."""
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def record_rows(records: List[CheckRecord]) -> List[Dict[str, Any]]:
    return [r.model_dump(by_alias=True) for r in records]


def render_json(report: Report, generated_at: Optional[str] = None) -> str:
    # generated_at stays the first key so the timestamp sits alone on line 2
    doc = {
        "generated_at": generated_at or datetime.now(timezone.utc).isoformat(),
        "command": report.command,
        "records": record_rows(report.records),
    }
    doc.update(report.extras)
    return json.dumps(_json_safe(doc), indent=2, ensure_ascii=False) + "\n"


def render_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in record_rows(report.records):
        writer.writerow(_json_safe(row))
    return buffer.getvalue()


def write_report(report: Report, path: Optional[str] = None, fmt: str = "json") -> str:
    text = render_csv(report) if fmt == "csv" else render_json(report)
    if path is None:
        sys.stdout.write(text)
        return text
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as e:
        logger.error(f"Failed to write report {path}: {str(e)}")
        raise
    logger.info(f"Wrote {len(report.records)} records to {path} ({fmt})")
    return text


def require_pass(report: Report) -> None:
    failures = report.failures
    if failures:
        ids = ", ".join(r.check_id for r in failures[:5])
        raise ToleranceFailure(f"{len(failures)} of {len(report.records)} checks failed: {ids}")
