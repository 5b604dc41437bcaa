"""Data model for the machine-checked claim registry."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from ..graphs import SimpleGraph, canonical_form, is_tree
from ..indices import IndexKind, compute_index


class Oracle(Enum):
    DIRECT_INDEX = "direct-index"
    EXTREMAL_OVER_TREES = "extremal-over-trees"
    EXTREMAL_OVER_SPINE_PERMUTATIONS = "extremal-over-spine-permutations"
    INEQUALITY_CHECK = "inequality-check"


class Mode(Enum):
    EQUALS = "equals"
    EQUALS_MAX = "equals-max"
    EQUALS_MIN = "equals-min"
    UPPER_BOUND = "upper-bound"
    UPPER_BOUND_STRICT = "upper-bound-strict"
    LOWER_BOUND_STRICT = "lower-bound-strict"
    ORDERING_ATTAINS_MAX = "ordering-attains-max"
    ORDERING_ATTAINS_MIN = "ordering-attains-min"


class Verdict(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class Claim:
    """One published formula/bound/ordering statement, bound to an oracle."""

    id: str
    source: str                      # where the statement sits in the source text
    statement: str                   # the formula, transcribed as printed
    mode: Mode | None
    oracle: Oracle | None
    applicability: str = ""
    status: str = "active"           # "active" | "out-of-scope"
    reason: str = ""                 # for out-of-scope entries
    interpretation_notes: str = ""


@dataclass(frozen=True)
class ClaimVerdict:
    """Outcome of evaluating one claim instance."""

    claim_id: str
    instance: dict[str, Any]
    expected: Any
    actual: Any
    verdict: Verdict
    witness: dict[str, Any] | None = None
    counterexample: list[Any] | None = None
    notes: str = ""

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "claim_id": self.claim_id,
            "params": self.instance,
            "expected": self.expected,
            "actual": self.actual,
            "verdict": self.verdict.value,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.notes:
            out["notes"] = self.notes
        return out


def witness_from_graph(t: SimpleGraph, kind: IndexKind) -> dict[str, Any]:
    """Serializable witness: the tree plus the index value it realizes."""
    out: dict[str, Any] = {
        "n": t.n,
        "edges": [list(e) for e in t.sorted_edges()],
        "index": kind.value,
        "value": int(compute_index(t, kind)),
    }
    if is_tree(t):
        out["canonical"] = canonical_form(t).decode("ascii")
    return out
