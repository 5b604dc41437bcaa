"""Suite runner, verdict report assembly, serialization, and digesting."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Any, Iterable

from .engine import SuiteParams, iter_verdicts
from .registry import active_ids, get_claim, registry
from .types import ClaimVerdict, Verdict

__all__ = ["VerificationReport", "run_suite", "report_digest",
           "report_to_json", "summary_table", "TOOL_VERSION"]

TOOL_VERSION = "0.1.0"


@dataclass
class VerificationReport:
    """Deterministic record of one claim-suite run."""

    suite: dict[str, Any]
    claims: list[dict[str, Any]]
    digest: str = ""
    generated_at: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "claims": self.claims,
            "digest": self.digest,
            "generated_at": self.generated_at,
        }


def _claim_block(claim_id: str, verdicts: Iterable[ClaimVerdict]
                 ) -> dict[str, Any]:
    claim = get_claim(claim_id)
    instances = [v.to_dict() for v in verdicts]
    counts = {"pass": 0, "fail": 0, "na": 0, "skipped": 0}
    key = {Verdict.PASS: "pass", Verdict.FAIL: "fail",
           Verdict.NOT_APPLICABLE: "na", Verdict.SKIPPED: "skipped"}
    for inst in instances:
        counts[key[Verdict(inst["verdict"])]] += 1
    return {
        "id": claim.id,
        "source": claim.source,
        "statement": claim.statement,
        "mode": claim.mode.value if claim.mode else None,
        "oracle": claim.oracle.value if claim.oracle else None,
        "counts": counts,
        "instances": instances,
    }


def run_suite(n_min: int = 3, n_max: int = 7,
              claim_filter: set[str] | None = None,
              params: SuiteParams | None = None) -> VerificationReport:
    """Evaluate every selected claim over its declared instance grid.

    The result is deterministic for equal parameters; the digest covers
    everything except the timestamp.
    """
    if params is None:
        params = SuiteParams(n_min=n_min, n_max=n_max)
    selected = [cid for cid in active_ids()
                if claim_filter is None or cid in claim_filter]
    claims = [_claim_block(cid, iter_verdicts(cid, params))
              for cid in selected]
    out_of_scope = [
        {"id": c.id, "source": c.source, "statement": c.statement,
         "status": c.status, "reason": c.reason}
        for c in registry() if c.status == "out-of-scope"]
    report = VerificationReport(
        suite={
            "params": params.to_dict(),
            "claim_filter": sorted(claim_filter) if claim_filter else None,
            "tool_version": TOOL_VERSION,
            "out_of_scope": out_of_scope,
        },
        claims=claims,
    )
    report.digest = report_digest(report)
    report.generated_at = datetime.now(timezone.utc).isoformat()
    return report


def report_digest(report: VerificationReport) -> str:
    """SHA-256 over the canonical JSON of everything but the timestamp."""
    payload = {"suite": report.suite, "claims": report.claims}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def report_to_json(report: VerificationReport, indent: int | None = 2) -> str:
    return json.dumps(report.to_dict(), indent=indent, sort_keys=True)


def summary_table(report: VerificationReport) -> str:
    """One row per claim: id, pass/fail/NA counts, headline."""
    lines = [f"{'claim':<6} {'pass':>5} {'fail':>5} {'n/a':>5}  source"]
    for block in report.claims:
        c = block["counts"]
        lines.append(f"{block['id']:<6} {c['pass']:>5} {c['fail']:>5} "
                     f"{c['na']:>5}  {block['source']}")
    for entry in report.suite["out_of_scope"]:
        lines.append(f"{entry['id']:<6} {'-':>5} {'-':>5} {'-':>5}  "
                     f"out of scope: {entry['reason']}")
    lines.append(f"digest {report.digest}")
    return "\n".join(lines)
