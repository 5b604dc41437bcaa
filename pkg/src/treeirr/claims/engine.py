"""Instance grids and evaluators for every active claim, plus the suite runner."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Any, Callable, Iterator

from ..degseq import (
    DegreeSequence,
    all_tree_sequences,
    erdos_gallai_check,
    power_mean_inequality_check,
)
from ..errors import OutOfScopeClaimError
from ..extremal import (
    DEFAULT_ENUM_CAP,
    DEFAULT_SPINE_CAP,
    EnumerationMode,
    enumerate_trees,
    extremal_index,
    spine_is_valid,
    spine_permutation_extremal,
)
from ..families import (
    CaterpillarSpec,
    build_caterpillar,
    build_complete_bipartite,
    build_double_star,
    build_star,
    build_uniform_caterpillar,
)
from ..graphs import SimpleGraph, degrees, graph_from_edge_list
from ..indices import IndexKind, compute_all, compute_index
from . import formulas
from .registry import get_claim
from .types import ClaimVerdict, Verdict, witness_from_graph

__all__ = ["SuiteParams", "evaluate_claim", "claim_instances", "iter_verdicts"]


@dataclass(frozen=True)
class SuiteParams:
    """Knobs shared by the instance grids and evaluators."""

    n_min: int = 3
    n_max: int = 7
    enum_cap: int = DEFAULT_ENUM_CAP
    spine_cap: int = DEFAULT_SPINE_CAP
    witness_cap: int = 4
    grid_degree_max: int = 4   # largest spine degree in generated multisets

    def to_dict(self) -> dict[str, int]:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "enum_cap": self.enum_cap,
            "spine_cap": self.spine_cap,
            "witness_cap": self.witness_cap,
            "grid_degree_max": self.grid_degree_max,
        }


# ---------------------------------------------------------------------------
# shared oracles (cached: suites revisit the same sequences many times)

@lru_cache(maxsize=None)
def _iso_trees(n: int) -> tuple[SimpleGraph, ...]:
    if n == 1:
        return (SimpleGraph(1, frozenset()),)
    out: list[SimpleGraph] = []
    for seq in all_tree_sequences(n):
        out.extend(enumerate_trees(seq, EnumerationMode.UP_TO_ISO, cap=12))
    return tuple(out)


@lru_cache(maxsize=None)
def _tree_extremal(values: tuple[int, ...], kind: IndexKind):
    return extremal_index(DegreeSequence(values), kind, cap=12)


@lru_cache(maxsize=None)
def _spine_extremal(values: tuple[int, ...], kind: IndexKind):
    return spine_permutation_extremal(DegreeSequence(values), kind)


def _cat(ordering: tuple[int, ...]) -> SimpleGraph | None:
    if not spine_is_valid(ordering):
        return None
    return build_caterpillar(CaterpillarSpec(ordering))


def _has_valid_ordering(values: tuple[int, ...]) -> bool:
    # every ordering puts the k-2 interior slots on some values; valid iff
    # at most two entries are < 2
    return sum(1 for v in values if v < 2) <= 2


def _frac(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def _multisets(k: int, vmax: int) -> Iterator[tuple[int, ...]]:
    yield from combinations_with_replacement(range(1, vmax + 1), k)


def _passfail(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


def _verdict(claim_id: str, instance: dict, expected, actual, ok: bool,
             witness_graph: SimpleGraph | None = None,
             witness_kind: IndexKind | None = None,
             counterexample: list | None = None,
             notes: str = "") -> ClaimVerdict:
    witness = None
    if not ok and witness_graph is not None and witness_kind is not None:
        witness = witness_from_graph(witness_graph, witness_kind)
    if not ok and witness is None and counterexample is None:
        counterexample = [expected, actual]
    return ClaimVerdict(claim_id, instance, expected, actual,
                        _passfail(ok), witness, counterexample, notes)


def _na(claim_id: str, instance: dict, notes: str) -> ClaimVerdict:
    return ClaimVerdict(claim_id, instance, None, None,
                        Verdict.NOT_APPLICABLE, notes=notes)


# ---------------------------------------------------------------------------
# per-claim evaluators


def _eval_c1(inst, params):
    n = inst["n"]
    if n < 2:
        return _na("C1", inst, "stars need n >= 2")
    t = build_star(n)
    actual = int(compute_index(t, IndexKind.IRR))
    expected = formulas.star_irr(n)
    return _verdict("C1", inst, expected, actual, expected == actual,
                    t, IndexKind.IRR)


def _eval_c2(inst, params):
    n = inst["n"]
    if inst.get("branch") == "min":
        if n != 2:
            return _na("C2", inst, "the minimum branch is stated for n = 2")
        actual = min(int(compute_index(t, IndexKind.SIGMA))
                     for t in _iso_trees(2))
        return _verdict("C2", inst, 0, actual, actual == 0)
    if n < 3:
        return _na("C2", inst, "the maximum branch is stated for n >= 3")
    best, best_tree = None, None
    for t in _iso_trees(n):
        v = int(compute_index(t, IndexKind.SIGMA))
        if best is None or v > best:
            best, best_tree = v, t
    expected = formulas.tree_sigma_max(n)
    return _verdict("C2", inst, expected, best, expected == best,
                    best_tree, IndexKind.SIGMA)


def _eval_c3(inst, params):
    m, n = inst["m"], inst["n"]
    g = build_complete_bipartite(m, n)
    actual = int(compute_index(g, IndexKind.SIGMA))
    expected = formulas.kmn_sigma(m, n)
    return _verdict("C3", inst, expected, actual, expected == actual,
                    g, IndexKind.SIGMA)


def _eval_c4(inst, params):
    k, r = inst["k"], inst["r"]
    if k < 3 or r < 1:
        return _na("C4", inst, "stated for k >= 3, r >= 1")
    g = build_double_star(k, r)
    actual = int(compute_index(g, IndexKind.SIGMA))
    expected = formulas.double_star_sigma(k, r)
    return _verdict("C4", inst, expected, actual, expected == actual,
                    g, IndexKind.SIGMA)


def _eval_c5(inst, params):
    g = graph_from_edge_list(inst["n"], [tuple(e) for e in inst["edges"]])
    vals = compute_all(g)
    sigma = int(vals[IndexKind.SIGMA])
    expected = int(vals[IndexKind.FORGOTTEN]) - 2 * int(vals[IndexKind.M2])
    ok = sigma == expected and sigma % 2 == 0
    return _verdict("C5", inst, {"identity": expected, "parity": "even"},
                    sigma, ok, g, IndexKind.SIGMA)


def _eval_c6(inst, params):
    spine = tuple(inst["spine"])
    if len(spine) < 2 or not spine_is_valid(spine):
        return _na("C6", inst, "needs a valid spine of length >= 2")
    t = build_caterpillar(CaterpillarSpec(spine))
    actual = int(compute_index(t, IndexKind.IRR))
    expected = formulas.caterpillar_irr(spine)
    return _verdict("C6", inst, expected, actual, expected == actual,
                    t, IndexKind.IRR)


def _eval_c7(inst, params):
    k, m, branch = inst["k"], inst["m"], inst["branch"]
    if branch == "two-spine" and k != 2:
        return _na("C7", inst, "branch stated for n = 2")
    if k < 2:
        return _na("C7", inst, "branches stated for n >= 2")
    t = build_uniform_caterpillar(k, m)
    actual = int(compute_index(t, IndexKind.SIGMA))
    if branch == "two-spine":
        expected = formulas.uniform_caterpillar_sigma_two_spine(m)
    else:
        expected = formulas.uniform_caterpillar_sigma_general(m)
    return _verdict("C7", inst, expected, actual, expected == actual,
                    t, IndexKind.SIGMA)


def _ordering_claim(claim_id, inst, params, maximize: bool):
    values = tuple(inst["spine_multiset"])
    if len(values) < 3:
        return _na(claim_id, inst, "stated for n >= 3")
    if not _has_valid_ordering(values):
        return _na(claim_id, inst, "no valid spine ordering")
    res = _spine_extremal(values, IndexKind.IRR)
    if maximize:
        ordering, value, attains = (res.max_prescribed_ordering,
                                    res.max_prescribed_value,
                                    res.max_prescribed_attains)
        extreme, wgraph = res.max_value, _cat(res.max_orderings[0])
    else:
        ordering, value, attains = (res.min_prescribed_ordering,
                                    res.min_prescribed_value,
                                    res.min_prescribed_attains)
        extreme, wgraph = res.min_value, _cat(res.min_orderings[0])
    if value is None:
        return _na(claim_id, inst,
                   "prescribed ordering places a degree below 2 on an "
                   "interior spine position, so no such caterpillar exists")
    expected = {"ordering": list(ordering), "attains": True}
    actual = {"prescribed_value": value, "extreme": extreme}
    return _verdict(claim_id, inst, expected, actual, attains,
                    wgraph, IndexKind.IRR)


def _eval_c8(inst, params):
    return _ordering_claim("C8", inst, params, maximize=True)


def _eval_c9(inst, params):
    return _ordering_claim("C9", inst, params, maximize=False)


def _spine_formula_claim(claim_id, inst, params, kind, fmax, fmin,
                         presented="desc"):
    values = tuple(inst["multiset"])
    form = inst["form"]
    if not _has_valid_ordering(values):
        return _na(claim_id, inst, "no valid spine ordering")
    d = tuple(sorted(values, reverse=(presented == "desc")))
    res = _spine_extremal(values, kind)
    if form == "max":
        expected, actual = fmax(d), res.max_value
        wgraph = _cat(res.max_orderings[0])
    else:
        expected, actual = fmin(d), res.min_value
        wgraph = _cat(res.min_orderings[0])
    return _verdict(claim_id, inst, expected, actual, expected == actual,
                    wgraph, kind)


def _eval_c10(inst, params):
    return _spine_formula_claim("C10", inst, params, IndexKind.IRR,
                                formulas.three_spine_irr_max,
                                formulas.three_spine_irr_min,
                                presented="desc")


def _eval_c11(inst, params):
    values = tuple(inst["sequence"])
    form = inst["form"]
    seq = DegreeSequence(values)
    if seq.n != 4 or sum(values) != 6 or min(values) < 1:
        return _na("C11", inst, "stated for trees of order 4")
    res = _tree_extremal(values, IndexKind.IRR)
    d = tuple(sorted(values, reverse=True))
    if form in ("statement_i", "statement_ii"):
        x = d if form == "statement_i" else tuple(sorted(values))
        actual = res.max_value   # one isomorphism class per order-4 sequence
        ok = (res.min_value == res.max_value
              and formulas.order4_m1_sqrt_equals(d, x, actual))
        m1 = sum(v * v for v in d)
        s = sum(abs(x[i] - x[i + 1]) for i in range(len(x) - 1))
        expected = (f"M1^2 - 2*sqrt(M1) + {s} - {d[1] + d[2]} - 1 "
                    f"with M1 = {m1}")
        return _verdict("C11", inst, expected, actual, ok,
                        res.max_witness_graphs[0], IndexKind.IRR)
    if form == "proof_max":
        expected, actual = formulas.order4_irr_max_proof(d), res.max_value
        wgraph = res.max_witness_graphs[0]
    else:
        expected, actual = formulas.order4_irr_min_proof(d), res.min_value
        wgraph = res.min_witness_graphs[0]
    return _verdict("C11", inst, expected, actual, expected == actual,
                    wgraph, IndexKind.IRR)


def _eval_c12(inst, params):
    values = tuple(inst["sequence"])
    if len(values) != 4 or sum(values) != 6 or min(values) < 1:
        return _na("C12", inst, "stated for trees of order 4")
    res = _tree_extremal(values, IndexKind.IRR)
    t = res.max_witness_graphs[0]
    m1 = int(compute_index(t, IndexKind.M1))
    delta_max, delta_min = max(values), min(values)
    irr = res.max_value
    ok = formulas.order4_strict_bound_holds(irr, delta_max, m1, delta_min)
    expected = f"irr < 2*sqrt({delta_max}*{m1}) + {delta_min}"
    return _verdict("C12", inst, expected, irr, ok, t, IndexKind.IRR)


def _eval_c13(inst, params):
    return _spine_formula_claim("C13", inst, params, IndexKind.IRR,
                                formulas.alb4_max, formulas.alb4_min,
                                presented="asc")


def _eval_c14(inst, params):
    values = tuple(inst["multiset"])
    d = tuple(sorted(values, reverse=True))
    t = _cat(d)
    if t is None:
        return _na("C14", inst, "descending spine is not buildable")
    actual = int(compute_index(t, IndexKind.IRR))
    expected = formulas.five_six_chain_irr(d)
    return _verdict("C14", inst, expected, actual, expected == actual,
                    t, IndexKind.IRR)


def _eval_c15(inst, params):
    values = tuple(inst["multiset"])
    form = inst["form"]
    if form == "statement":
        d = tuple(sorted(values))
        t = _cat(d)
        if t is None:
            return _na("C15", inst, "ascending spine is not buildable")
        actual = int(compute_index(t, IndexKind.IRR))
        expected = formulas.alb5_statement(d)
        return _verdict("C15", inst, expected, actual, expected == actual,
                        t, IndexKind.IRR)
    if not _has_valid_ordering(values):
        return _na("C15", inst, "no valid spine ordering")
    d = tuple(sorted(values))
    res = _spine_extremal(values, IndexKind.IRR)
    if form == "proof_max":
        expected, actual = formulas.alb5_proof_max(d), res.max_value
        wgraph = _cat(res.max_orderings[0])
    else:
        expected, actual = formulas.alb5_proof_min(d), res.min_value
        wgraph = _cat(res.min_orderings[0])
    return _verdict("C15", inst, expected, actual, expected == actual,
                    wgraph, IndexKind.IRR)


def _eval_c16(inst, params):
    return _spine_formula_claim("C16", inst, params, IndexKind.IRR,
                                formulas.alb6_max, formulas.alb6_min,
                                presented="asc")


def _eval_c17(inst, params):
    variant = inst["variant"]
    proof = variant == "proof"
    if inst["interpretation"] == "spine":
        values = tuple(inst["multiset"])
        d = tuple(sorted(values))
        t = _cat(d)
        if t is None:
            return _na("C17", inst, "ascending spine is not buildable")
        actual = int(compute_index(t, IndexKind.IRR))
        expected = formulas.main_irr_closed_form(d, proof_constant=proof)
        return _verdict("C17", inst, expected, actual, expected == actual,
                        t, IndexKind.IRR)
    values = tuple(inst["sequence"])
    d = tuple(sorted(values))
    res = _tree_extremal(values, IndexKind.IRR)
    expected = formulas.main_irr_closed_form(d, proof_constant=proof)
    actual = {"min": res.min_value, "max": res.max_value}
    ok = expected == res.min_value == res.max_value
    return _verdict("C17", inst, expected, actual, ok,
                    res.max_witness_graphs[0], IndexKind.IRR)


def _eval_c18(inst, params):
    return _spine_formula_claim("C18", inst, params, IndexKind.SIGMA,
                                formulas.sigma3_max, formulas.sigma3_min,
                                presented="asc")


def _eval_c19(inst, params):
    return _spine_formula_claim("C19", inst, params, IndexKind.SIGMA,
                                formulas.sigma4_max, formulas.sigma4_min,
                                presented="asc")


def _eval_c20(inst, params):
    values = tuple(inst["multiset"])
    form = inst["form"]
    d = tuple(sorted(values))
    if form == "statement":
        t = _cat(d)
        if t is None:
            return _na("C20", inst, "ascending spine is not buildable")
        actual = int(compute_index(t, IndexKind.SIGMA))
        expected = formulas.sigma5_statement(d)
        return _verdict("C20", inst, expected, actual, expected == actual,
                        t, IndexKind.SIGMA)
    case = int(form.split("-", 1)[1])
    positions, poly = formulas.SIGMA5_CASES[case]
    ordering = tuple(d[p - 1] for p in positions)
    t = _cat(ordering)
    if t is None:
        return _na("C20", inst, f"case ordering {ordering} is not buildable")
    actual = int(compute_index(t, IndexKind.SIGMA))
    expected = poly(d)
    return _verdict("C20", inst, expected, actual, expected == actual,
                    t, IndexKind.SIGMA)


def _eval_c21(inst, params):
    values = tuple(inst["multiset"])
    d = tuple(sorted(values))
    t = _cat(d)
    if t is None:
        return _na("C21", inst, "ascending spine is not buildable")
    actual = int(compute_index(t, IndexKind.SIGMA))
    expected = formulas.sigma6_statement(d)
    return _verdict("C21", inst, expected, actual, expected == actual,
                    t, IndexKind.SIGMA)


def _eval_c22(inst, params):
    if inst["interpretation"] == "spine":
        values = tuple(inst["multiset"])
        d = tuple(sorted(values, reverse=True))
        t = _cat(d)
        if t is None:
            return _na("C22", inst, "descending spine is not buildable")
        actual = int(compute_index(t, IndexKind.SIGMA))
        expected = formulas.sigma_chain_closed_form(d)
        return _verdict("C22", inst, expected, actual, expected == actual,
                        t, IndexKind.SIGMA)
    values = tuple(inst["sequence"])
    d = tuple(sorted(values, reverse=True))
    res = _tree_extremal(values, IndexKind.SIGMA)
    expected = formulas.sigma_chain_closed_form(d)
    actual = {"min": res.min_value, "max": res.max_value}
    ok = expected == res.min_value == res.max_value
    return _verdict("C22", inst, expected, actual, ok,
                    res.max_witness_graphs[0], IndexKind.SIGMA)


def _eval_c23(inst, params):
    g = graph_from_edge_list(inst["n"], [tuple(e) for e in inst["edges"]])
    deg = degrees(g)
    delta_min, delta_max = min(deg), max(deg)
    bound = formulas.irr_lower_bound(delta_min, delta_max, g.n)
    irr = int(compute_index(g, IndexKind.IRR))
    ok = irr > bound
    return _verdict("C23", inst, {"strict_lower_bound": _frac(bound)},
                    irr, ok, g, IndexKind.IRR)


def _eval_c24(inst, params):
    g = graph_from_edge_list(inst["n"], [tuple(e) for e in inst["edges"]])
    irr = int(compute_index(g, IndexKind.IRR))
    irr_t = int(compute_index(g, IndexKind.IRR_TOTAL))
    bound = formulas.irr_total_upper_bound(g.n, irr)
    ok = irr_t <= bound
    return _verdict("C24", inst, {"upper_bound": _frac(bound)},
                    irr_t, ok, g, IndexKind.IRR_TOTAL)


def _eval_c25(inst, params):
    seq = DegreeSequence(tuple(inst["sequence"]))
    p = inst["p"]
    actual = power_mean_inequality_check(seq, p)
    return _verdict("C25", inst, True, actual, actual,
                    counterexample=None if actual else
                    [list(seq.values), p])


def _eval_c26(inst, params):
    seq = DegreeSequence(tuple(inst["sequence"]))
    actual = erdos_gallai_check(seq)
    return _verdict("C26", inst, True, actual, actual,
                    counterexample=None if actual else [list(seq.values)])


_EVALUATORS: dict[str, Callable[[dict, SuiteParams], ClaimVerdict]] = {
    "C1": _eval_c1, "C2": _eval_c2, "C3": _eval_c3, "C4": _eval_c4,
    "C5": _eval_c5, "C6": _eval_c6, "C7": _eval_c7, "C8": _eval_c8,
    "C9": _eval_c9, "C10": _eval_c10, "C11": _eval_c11, "C12": _eval_c12,
    "C13": _eval_c13, "C14": _eval_c14, "C15": _eval_c15, "C16": _eval_c16,
    "C17": _eval_c17, "C18": _eval_c18, "C19": _eval_c19, "C20": _eval_c20,
    "C21": _eval_c21, "C22": _eval_c22, "C23": _eval_c23, "C24": _eval_c24,
    "C25": _eval_c25, "C26": _eval_c26,
}


# ---------------------------------------------------------------------------
# instance grids


def _tree_instances(params: SuiteParams) -> Iterator[dict]:
    for n in range(max(2, params.n_min), params.n_max + 1):
        for t in _iso_trees(n):
            yield {"n": n, "edges": [list(e) for e in t.sorted_edges()]}


def _tree_sequence_values(params: SuiteParams) -> Iterator[tuple[int, ...]]:
    for n in range(max(2, params.n_min), params.n_max + 1):
        for seq in all_tree_sequences(n):
            yield seq.values


def _grid_c1(params):
    for n in range(max(2, params.n_min), params.n_max + 1):
        yield {"n": n}


def _grid_c2(params):
    if params.n_min <= 2 <= params.n_max:
        yield {"n": 2, "branch": "min"}
    for n in range(max(3, params.n_min), params.n_max + 1):
        yield {"n": n, "branch": "max"}


def _grid_c3(params):
    for n in range(1, params.n_max + 1):
        for m in range(1, n + 1):
            yield {"m": m, "n": n}


def _grid_c4(params):
    for k in range(3, params.n_max + 1):
        for r in range(1, k + 1):
            yield {"k": k, "r": r}


def _grid_c5(params):
    yield from _tree_instances(params)


def _grid_c6(params):
    vmax = min(params.grid_degree_max + 1, 5)
    for k in range(2, min(4, params.spine_cap) + 1):
        for spine in _spine_orderings(k, vmax):
            yield {"spine": list(spine)}


def _spine_orderings(k: int, vmax: int) -> Iterator[tuple[int, ...]]:
    def extend(prefix: list[int]):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        lo = 1 if len(prefix) in (0, k - 1) else 2
        for v in range(lo, vmax + 1):
            prefix.append(v)
            yield from extend(prefix)
            prefix.pop()
    yield from extend([])


def _grid_c7(params):
    for k in range(1, 5):
        for m in range(0, 5):
            if k == 2:
                yield {"k": k, "m": m, "branch": "two-spine"}
            yield {"k": k, "m": m, "branch": "general"}


def _grid_c8(params):
    for k in range(3, min(5, params.spine_cap) + 1):
        for values in _multisets(k, params.grid_degree_max):
            if _has_valid_ordering(values):
                yield {"spine_multiset": list(values)}


_grid_c9 = _grid_c8


def _grid_c10(params):
    for values in _multisets(3, params.grid_degree_max + 1):
        if _has_valid_ordering(values):
            for form in ("max", "min"):
                yield {"multiset": list(values), "form": form}


def _grid_c11(params):
    for values in ((1, 1, 1, 3), (1, 1, 2, 2)):
        for form in ("statement_i", "statement_ii", "proof_max", "proof_min"):
            yield {"sequence": list(values), "form": form}


def _grid_c12(params):
    for values in ((1, 1, 1, 3), (1, 1, 2, 2)):
        yield {"sequence": list(values)}


def _grid_c13(params):
    for values in _multisets(4, params.grid_degree_max + 1):
        if _has_valid_ordering(values):
            for form in ("max", "min"):
                yield {"multiset": list(values), "form": form}


def _grid_c14(params):
    for k in (5, 6):
        for values in _multisets(k, params.grid_degree_max):
            yield {"multiset": list(values), "n": k}


def _grid_c15(params):
    for values in _multisets(5, params.grid_degree_max):
        for form in ("statement", "proof_max", "proof_min"):
            yield {"multiset": list(values), "form": form}


def _grid_c16(params):
    for values in _multisets(6, params.grid_degree_max):
        if _has_valid_ordering(values):
            for form in ("max", "min"):
                yield {"multiset": list(values), "form": form}


def _grid_c17(params):
    for k in range(max(3, params.n_min), min(params.n_max, 6) + 1):
        for values in _multisets(k, params.grid_degree_max):
            for variant in ("statement", "proof"):
                yield {"multiset": list(values), "variant": variant,
                       "interpretation": "spine"}
    for values in _tree_sequence_values(params):
        if len(values) >= 3:
            for variant in ("statement", "proof"):
                yield {"sequence": list(values), "variant": variant,
                       "interpretation": "tree"}


def _grid_c18(params):
    for values in _multisets(3, params.grid_degree_max + 1):
        if _has_valid_ordering(values):
            for form in ("max", "min"):
                yield {"multiset": list(values), "form": form}


_grid_c19 = _grid_c13


def _grid_c20(params):
    for values in _multisets(5, params.grid_degree_max):
        yield {"multiset": list(values), "form": "statement"}
        for case in range(1, 11):
            yield {"multiset": list(values), "form": f"case-{case}"}


def _grid_c21(params):
    for values in _multisets(6, params.grid_degree_max):
        yield {"multiset": list(values)}


def _grid_c22(params):
    for k in range(max(3, params.n_min), min(params.n_max, 6) + 1):
        for values in _multisets(k, params.grid_degree_max):
            yield {"multiset": list(values), "interpretation": "spine"}
    for values in _tree_sequence_values(params):
        if len(values) >= 3:
            yield {"sequence": list(values), "interpretation": "tree"}


def _grid_c23(params):
    yield from _tree_instances(params)


_grid_c24 = _grid_c23


def _grid_c25(params):
    for values in _tree_sequence_values(params):
        for p in (1, 2, 3, 4, 5):
            yield {"sequence": list(values), "p": p,
                   "p_is_prime": p in (2, 3, 5)}


def _grid_c26(params):
    for values in _tree_sequence_values(params):
        yield {"sequence": list(values)}


_GRIDS: dict[str, Callable[[SuiteParams], Iterator[dict]]] = {
    "C1": _grid_c1, "C2": _grid_c2, "C3": _grid_c3, "C4": _grid_c4,
    "C5": _grid_c5, "C6": _grid_c6, "C7": _grid_c7, "C8": _grid_c8,
    "C9": _grid_c9, "C10": _grid_c10, "C11": _grid_c11, "C12": _grid_c12,
    "C13": _grid_c13, "C14": _grid_c14, "C15": _grid_c15, "C16": _grid_c16,
    "C17": _grid_c17, "C18": _grid_c18, "C19": _grid_c19, "C20": _grid_c20,
    "C21": _grid_c21, "C22": _grid_c22, "C23": _grid_c23, "C24": _grid_c24,
    "C25": _grid_c25, "C26": _grid_c26,
}


def claim_instances(claim_id: str, params: SuiteParams) -> list[dict]:
    """The declared parameter grid of one active claim."""
    claim = get_claim(claim_id)
    if claim.status != "active":
        raise OutOfScopeClaimError(f"claim {claim_id} is out of scope: "
                                   f"{claim.reason}")
    return list(_GRIDS[claim_id](params))


def evaluate_claim(claim_id: str, instance: dict[str, Any],
                   params: SuiteParams | None = None) -> ClaimVerdict:
    """Evaluate one claim on one parameter binding."""
    claim = get_claim(claim_id)
    if claim.status != "active":
        raise OutOfScopeClaimError(f"claim {claim_id} is out of scope: "
                                   f"{claim.reason}")
    return _EVALUATORS[claim_id](instance, params or SuiteParams())


def iter_verdicts(claim_id: str, params: SuiteParams
                  ) -> Iterator[ClaimVerdict]:
    for instance in claim_instances(claim_id, params):
        yield evaluate_claim(claim_id, instance, params)
