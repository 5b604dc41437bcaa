"""Machine-checked registry of published index formulas and bounds."""

from .engine import SuiteParams, claim_instances, evaluate_claim
from .registry import active_ids, get_claim, registry
from .report import (
    VerificationReport,
    report_digest,
    report_to_json,
    run_suite,
    summary_table,
)
from .types import Claim, ClaimVerdict, Mode, Oracle, Verdict

__all__ = [
    "Claim",
    "ClaimVerdict",
    "Mode",
    "Oracle",
    "Verdict",
    "SuiteParams",
    "VerificationReport",
    "active_ids",
    "claim_instances",
    "evaluate_claim",
    "get_claim",
    "registry",
    "report_digest",
    "report_to_json",
    "run_suite",
    "summary_table",
]
