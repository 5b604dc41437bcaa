"""Claim registry, evaluators, report determinism, witness soundness."""

from __future__ import annotations

import json

import pytest

from treeirr import IndexKind, canonical_form, compute_index
from treeirr.claims import (
    SuiteParams,
    Verdict,
    active_ids,
    claim_instances,
    evaluate_claim,
    get_claim,
    registry,
    report_digest,
    report_to_json,
    run_suite,
)
from treeirr.claims.engine import iter_verdicts
from treeirr.errors import OutOfScopeClaimError, UnknownClaimError
from treeirr.families import build_star
from treeirr.graphs import graph_from_edge_list

PARAMS = SuiteParams(n_min=3, n_max=6)


def test_registry_shape():
    entries = registry()
    assert len(entries) == 29
    assert len(active_ids()) == 26
    assert [c.id for c in entries if c.status == "out-of-scope"] \
        == ["X1", "X2", "X3"]
    for c in entries:
        assert c.statement
        assert c.source
        if c.status == "out-of-scope":
            assert c.reason


def test_unknown_and_out_of_scope_claims():
    with pytest.raises(UnknownClaimError):
        get_claim("C99")
    with pytest.raises(OutOfScopeClaimError):
        evaluate_claim("X1", {}, PARAMS)


def test_c1_c3_pass_everywhere():
    for cid in ("C1", "C3"):
        for v in iter_verdicts(cid, PARAMS):
            assert v.verdict is Verdict.PASS, (cid, v.instance)


def test_c2_fails_with_star_witness():
    fails = [v for v in iter_verdicts("C2", PARAMS)
             if v.verdict is Verdict.FAIL]
    assert fails, "C2 must record failures for n >= 4"
    for v in fails:
        n = v.instance["n"]
        assert n >= 4
        assert v.actual == (n - 1) * (n - 2) ** 2
        w = v.witness
        g = graph_from_edge_list(w["n"], [tuple(e) for e in w["edges"]])
        assert canonical_form(g) == canonical_form(build_star(n))


def test_c23_fails_on_long_paths():
    vs = list(iter_verdicts("C23", SuiteParams(n_min=3, n_max=9)))
    # the lower bound overshoots the path value from n = 7 on
    fails = [v for v in vs if v.verdict is Verdict.FAIL]
    assert any(v.instance.get("n") == 9 for v in fails)


def test_every_fail_carries_witness_or_counterexample():
    for cid in active_ids():
        for v in iter_verdicts(cid, PARAMS):
            if v.verdict is Verdict.FAIL:
                assert v.witness is not None or v.counterexample is not None


def test_witness_reevaluation_matches_recorded_value():
    for cid in active_ids():
        for v in iter_verdicts(cid, PARAMS):
            w = v.witness
            if w is None or "index" not in w:
                continue
            g = graph_from_edge_list(w["n"], [tuple(e) for e in w["edges"]])
            kind = IndexKind.from_name(w["index"])
            assert compute_index(g, kind) == w["value"], (cid, v.instance)


def test_report_deterministic_digest():
    a = run_suite(params=PARAMS)
    b = run_suite(params=PARAMS)
    assert a.digest == b.digest
    assert a.digest == report_digest(a)
    # the digest must not depend on the timestamp
    a.generated_at = "someday"
    assert report_digest(a) == b.digest


def test_report_json_round_trip_and_filter():
    rep = run_suite(params=PARAMS, claim_filter={"C1", "C12"})
    data = json.loads(report_to_json(rep))
    assert [blk["id"] for blk in data["claims"]] == ["C1", "C12"]
    assert data["suite"]["claim_filter"] == ["C1", "C12"]
    assert {e["id"] for e in data["suite"]["out_of_scope"]} \
        == {"X1", "X2", "X3"}
    assert data["digest"] == rep.digest


def test_claim_instances_deterministic():
    for cid in ("C1", "C6", "C20"):
        assert list(claim_instances(cid, PARAMS)) \
            == list(claim_instances(cid, PARAMS))
