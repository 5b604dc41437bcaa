"""The claim catalog: 26 active entries plus 3 recorded as out of scope.

Each entry binds a published statement to an oracle and a comparison mode.
Statements are transcribed as printed; interpretation notes record every
clamp, constant discrepancy, or ambiguity handled by the evaluators.
"""

from __future__ import annotations

from .types import Claim, Mode, Oracle

__all__ = ["registry", "get_claim", "active_ids"]


_CLAIMS: list[Claim] = [
    Claim(
        id="C1",
        source="star irregularity lemma",
        statement="irr(S_n) = (n-2)(n-1)",
        mode=Mode.EQUALS, oracle=Oracle.DIRECT_INDEX,
        applicability="stars of order n >= 2",
    ),
    Claim(
        id="C2",
        source="tree sigma extremes lemma",
        statement="sigma_max over trees of order n = (n-1)(n-2) for n >= 3; "
                  "sigma_min = 0 for n = 2",
        mode=Mode.EQUALS_MAX, oracle=Oracle.EXTREMAL_OVER_TREES,
        applicability="all trees of a fixed order n",
        interpretation_notes="the stated maximum disagrees with the star value "
                             "(n-1)(n-2)^2 for n >= 4; expected FAIL there",
    ),
    Claim(
        id="C3",
        source="complete bipartite sigma theorem",
        statement="sigma(K_{m,n}) = mn(n-m)^2",
        mode=Mode.EQUALS, oracle=Oracle.DIRECT_INDEX,
        applicability="m >= 1, n >= 1",
    ),
    Claim(
        id="C4",
        source="double star sigma theorem",
        statement="sigma(S_{r,k}) = (k-1)^3 + k^2 + (r-1)^3 + r^2 - 2kr",
        mode=Mode.EQUALS, oracle=Oracle.DIRECT_INDEX,
        applicability="center degrees k >= 3, r >= 1 as stated",
    ),
    Claim(
        id="C5",
        source="sigma identity theorem",
        statement="sigma(G) = F(G) - 2*M2(G), and sigma(G) is even",
        mode=Mode.EQUALS, oracle=Oracle.DIRECT_INDEX,
        applicability="every simple graph",
    ),
    Claim(
        id="C6",
        source="caterpillar irregularity proposition",
        statement="irr = (d_n-1)^2 + (d_1-1)^2 + sum_int (d_i-1)(d_i-2) "
                  "+ sum |d_i - d_{i+1}| over spine degrees",
        mode=Mode.EQUALS, oracle=Oracle.DIRECT_INDEX,
        applicability="caterpillars with spine length >= 2",
        interpretation_notes="a singleton spine degenerates to a star, where "
                             "the two end terms double-count; excluded",
    ),
    Claim(
        id="C7",
        source="uniform caterpillar sigma proposition",
        statement="sigma(C(n,m)) = 2m^3 if n = 2; 2m^3 + m - 2 if n >= 2",
        mode=Mode.EQUALS, oracle=Oracle.DIRECT_INDEX,
        applicability="n spine vertices, m pendants on each",
        interpretation_notes="the branches overlap at n = 2 and disagree "
                             "there; both are registered as instances",
    ),
    Claim(
        id="C8",
        source="spine-ordering maximum theorem",
        statement="the ordering d_n > d_1 > ... > d_2 > d_{n-1} maximizes irr "
                  "over spine orderings",
        mode=Mode.ORDERING_ATTAINS_MAX,
        oracle=Oracle.EXTREMAL_OVER_SPINE_PERMUTATIONS,
        applicability="spine multisets of length >= 3",
        interpretation_notes="positions beyond the four anchored ones are not "
                             "pinned down for n > 4; read as the zigzag "
                             "(largest at one end, second largest at the "
                             "other, smallest pair just inside the ends)",
    ),
    Claim(
        id="C9",
        source="spine-ordering minimum hypothesis",
        statement="the ascending ordering minimizes irr over spine orderings",
        mode=Mode.ORDERING_ATTAINS_MIN,
        oracle=Oracle.EXTREMAL_OVER_SPINE_PERMUTATIONS,
        applicability="spine multisets of length >= 3",
    ),
    Claim(
        id="C10",
        source="three-spine irregularity proposition",
        statement="irr_max = (d1-1)^2+(d2-1)^2+(d3-1)(d3-2)(d1-d3)(d2-d3); "
                  "irr_min = (d1-1)^2+(d3-1)^2+(d2-1)(d2-2)+(d1-d3)",
        mode=Mode.EQUALS_MAX,
        oracle=Oracle.EXTREMAL_OVER_SPINE_PERMUTATIONS,
        applicability="three spine degrees, d1 >= d2 >= d3",
        interpretation_notes="the max branch vanishes whenever d2 = d3 via "
                             "the product term; transcribed verbatim",
    ),
    Claim(
        id="C11",
        source="order-4 first-Zagreb lemma",
        statement="irr(T) = M1^2 - 2*sqrt(M1) + sum|x_i - x_{i+1}| "
                  "- (d2+d3) - 1",
        mode=Mode.EQUALS, oracle=Oracle.EXTREMAL_OVER_TREES,
        applicability="trees of order 4, degrees non-increasing",
        interpretation_notes="x_i is never defined; evaluated with x := d "
                             "(interpretation i) and x := sorted ascending "
                             "(interpretation ii); the sum's out-of-range "
                             "final term is clamped; the proof-end max/min "
                             "forms are registered as sibling instances",
    ),
    Claim(
        id="C12",
        source="order-4 strict bound proposition",
        statement="irr(T) < 2*sqrt(Delta*M1(T)) + delta",
        mode=Mode.UPPER_BOUND_STRICT, oracle=Oracle.INEQUALITY_CHECK,
        applicability="trees of order 4",
    ),
    Claim(
        id="C13",
        source="order-4 non-decreasing lemma",
        statement="irr_max = d1^2+d2^2+sum|d_i-d_{i+2}|+d3^2+d4^2+d3+d4-6; "
                  "irr_min = d3^2+d4^2+sum|d_i-d_{i+2}|+|d1-d2|+d1^2+d2^2"
                  "+d1+d2-6",
        mode=Mode.EQUALS_MAX,
        oracle=Oracle.EXTREMAL_OVER_SPINE_PERMUTATIONS,
        applicability="four spine degrees, non-decreasing",
        interpretation_notes="the difference sum's out-of-range terms are "
                             "clamped to valid indices",
    ),
    Claim(
        id="C14",
        source="order-5/6 chain lemma",
        statement="irr = sum_i (d_i-1)(d_i-2) + sum_i |d_i-d_{i+1}| "
                  "+ (d_1-1)^2 + (d_n-1)^2 for n in {5, 6}",
        mode=Mode.EQUALS, oracle=Oracle.DIRECT_INDEX,
        applicability="non-increasing spine degrees, n in {5, 6}",
        interpretation_notes="the product sum runs over all i, double-"
                             "counting the end terms; transcribed verbatim; "
                             "difference sum clamped",
    ),
    Claim(
        id="C15",
        source="order-5 non-decreasing lemma",
        statement="irr = d1^2+d5^2+sum_{2..4}|d_i-d_{i+1}|"
                  "+sum_{2..4}(d_i+2)(d_i-1)-2, with proof-end max/min forms",
        mode=Mode.EQUALS,
        oracle=Oracle.EXTREMAL_OVER_SPINE_PERMUTATIONS,
        applicability="five spine degrees, non-decreasing",
    ),
    Claim(
        id="C16",
        source="order-6 non-decreasing lemma",
        statement="irr_max = d1^2+d6^2+sum|d_i-d_{i+1}|"
                  "+sum_{2..5}(d_i+2)(d_i-1)-2; irr_min = d1^2+d2^2"
                  "+sum|d_i-d_{i+1}|+sum_{3..6}(d_i+2)(d_i-1)-2",
        mode=Mode.EQUALS_MAX,
        oracle=Oracle.EXTREMAL_OVER_SPINE_PERMUTATIONS,
        applicability="six spine degrees, non-decreasing",
        interpretation_notes="difference sum clamped to valid indices",
    ),
    Claim(
        id="C17",
        source="main irregularity theorem",
        statement="irr(T) = d1^2+dn^2+sum_{2..n-1}d_i^2+sum_{2..n-1}d_i"
                  "+dn-d1-2n-2",
        mode=Mode.EQUALS, oracle=Oracle.EXTREMAL_OVER_TREES,
        applicability="non-decreasing degree sequence, n >= 3",
        interpretation_notes="the statement's constant -2n-2 differs from "
                             "the proof's -2(n-2)-2; both are registered "
                             "(variant=statement / variant=proof); evaluated "
                             "against the sorted-spine caterpillar and "
                             "against the full-tree extremal oracle",
    ),
    Claim(
        id="C18",
        source="three-spine sigma lemma",
        statement="sigma_max = sum_{2,3}(d_i+1)(d_i-1)^2+(d3-d1)^2+(d1-d2)^2; "
                  "sigma_min = sum_{1,3}(d_i+1)(d_i-1)^2+(d1-d3)^2+(d3-d2)^2",
        mode=Mode.EQUALS_MAX,
        oracle=Oracle.EXTREMAL_OVER_SPINE_PERMUTATIONS,
        applicability="three spine degrees, non-decreasing",
    ),
    Claim(
        id="C19",
        source="order-4 sigma lemma",
        statement="sigma_max = sum_{2,3}(d_i+1)(d_i-1)^2"
                  "+sum_{1,4}(d_i+2)(d_i-1)^2+sum(d_i-d_{i+2})^2+(d4-d1)^2; "
                  "sigma_min = sum_{1,4}(d_i+1)(d_i-1)^2+sum(d_i-d_{i+2})^2"
                  "+sum_{2,3}(d_i+2)(d_i-1)^2",
        mode=Mode.EQUALS_MAX,
        oracle=Oracle.EXTREMAL_OVER_SPINE_PERMUTATIONS,
        applicability="four spine degrees, non-decreasing",
        interpretation_notes="difference sum clamped to valid indices",
    ),
    Claim(
        id="C20",
        source="order-5 sigma hypothesis",
        statement="sigma(T) = sum_{1..3} d_i*d_{i+1}^2 + (d1-1)^3 + d4^3 "
                  "+ sum_{1..4}(d_i-d_{i+1})^2, with ten case polynomials",
        mode=Mode.EQUALS,
        oracle=Oracle.EXTREMAL_OVER_SPINE_PERMUTATIONS,
        applicability="five spine degrees, non-decreasing",
        interpretation_notes="the case polynomials carry unexplained additive "
                             "constants (+3, +14, +19, ...); transcribed "
                             "verbatim, FAILs permitted",
    ),
    Claim(
        id="C21",
        source="order-6 sigma hypothesis",
        statement="sigma(T) = sum_{1..n-2} d_i*d_{i+1}^2 + (d1-1)^3 "
                  "+ (d6-1)^3",
        mode=Mode.EQUALS,
        oracle=Oracle.EXTREMAL_OVER_SPINE_PERMUTATIONS,
        applicability="six spine degrees, non-decreasing",
    ),
    Claim(
        id="C22",
        source="sigma chain theorem",
        statement="sigma(T) = (dn-1)^3 + (d1-1)^3 + sum(d_i-d_{i+1})^2 "
                  "+ sum_{2..n-1}(d_i-1)^2(d_i-2)",
        mode=Mode.EQUALS, oracle=Oracle.EXTREMAL_OVER_TREES,
        applicability="non-increasing degree sequence, n >= 3",
        interpretation_notes="difference sum clamped; evaluated against the "
                             "sorted-spine caterpillar and against the "
                             "full-tree extremal oracle",
    ),
    Claim(
        id="C23",
        source="irregularity lower bound (cited)",
        statement="irr(G) > delta*(Delta-delta)^2*|V| / (Delta+1)",
        mode=Mode.LOWER_BOUND_STRICT, oracle=Oracle.INEQUALITY_CHECK,
        applicability="connected graphs; instantiated over trees",
    ),
    Claim(
        id="C24",
        source="total irregularity upper bound (cited)",
        statement="irr_T(G) <= (n^2/4) * irr(G)",
        mode=Mode.UPPER_BOUND, oracle=Oracle.INEQUALITY_CHECK,
        applicability="trees",
    ),
    Claim(
        id="C25",
        source="power-mean inequality lemma",
        statement="(sum d_i^p)^(1/p) <= (n-1)^(1-1/p) * sum d_i^(1/p)",
        mode=Mode.EQUALS, oracle=Oracle.INEQUALITY_CHECK,
        applicability="0 <= d_i <= n-1; stated for prime p, checked for "
                      "integer p >= 1 with primality recorded",
        interpretation_notes="the side condition's constant c is never "
                             "defined and is not modeled",
    ),
    Claim(
        id="C26",
        source="graphicality inequality proposition",
        statement="prefix inequalities: sum_{i<=k} d_i <= k(k-1) "
                  "+ sum_{i>k} min(k, d_i)",
        mode=Mode.EQUALS, oracle=Oracle.INEQUALITY_CHECK,
        applicability="tree degree sequences (graphic by construction)",
        interpretation_notes="the printed index bounds are inconsistent; "
                             "evaluated in the standard prefix form",
    ),
    Claim(
        id="X1",
        source="maximum-irregularity proposition over all graphs",
        statement="max irr over n-vertex graphs = n/4 - 1/2 (+1/(4n) odd)",
        mode=None, oracle=None, status="out-of-scope",
        reason="statement references a spectral radius and a mean degree "
               "that never appear in the displayed formula; ill-specified",
    ),
    Claim(
        id="X2",
        source="maximum edge-count result (cited)",
        statement="max edges = (n^2 + n + p^2 - 3p)/2 for n vertices, "
                  "p pendants",
        mode=None, oracle=None, status="out-of-scope",
        reason="concerns general graphs with pendant cliques, not trees",
    ),
    Claim(
        id="X3",
        source="maximal-sigma connected graph lemma",
        statement="the sigma-maximal connected graph with p pendants has "
                  "Delta = n - 1",
        mode=None, oracle=None, status="out-of-scope",
        reason="needs enumeration of all connected graphs with p pendant "
               "vertices, outside the tree-enumeration scope",
    ),
]

_BY_ID = {c.id: c for c in _CLAIMS}


def registry() -> list[Claim]:
    """All catalog entries in stable id order."""
    return list(_CLAIMS)


def get_claim(claim_id: str) -> Claim:
    from ..errors import UnknownClaimError
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise UnknownClaimError(f"no claim with id {claim_id!r}") from None


def active_ids() -> list[str]:
    return [c.id for c in _CLAIMS if c.status == "active"]
