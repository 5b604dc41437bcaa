"""Exhaustive tree enumeration per degree sequence and extremal index search.

Labeled enumeration walks the distinct multiset permutations of the Prufer
code in which vertex i appears d_i - 1 times (degrees taken in the stored
ascending order).  Isomorphism-level enumeration deduplicates by canonical
form.  Extremal search can be partitioned by the first code symbol; partial
results merge associatively.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from math import factorial
from typing import Iterator

from .degseq import DegreeSequence, is_tree_realizable
from .errors import CapExceededError, NoValidSpecError, NotRealizableError
from .families import CaterpillarSpec, build_caterpillar
from .graphs import SimpleGraph, canonical_form, prufer_decode
from .indices import IndexKind, compute_index

__all__ = [
    "EnumerationMode",
    "ExtremalResult",
    "SpineExtremalResult",
    "count_labeled_trees",
    "enumerate_trees",
    "extremal_index",
    "merge_extremal",
    "spine_permutation_extremal",
    "prescribed_max_ordering",
    "prescribed_min_ordering",
    "DEFAULT_ENUM_CAP",
    "HARD_ENUM_CAP",
    "DEFAULT_SPINE_CAP",
]

DEFAULT_ENUM_CAP = 9
HARD_ENUM_CAP = 12
DEFAULT_SPINE_CAP = 8


class EnumerationMode(Enum):
    LABELED = "labeled"
    UP_TO_ISO = "iso"


@dataclass(frozen=True)
class ExtremalResult:
    """Exact index extremes over the trees realizing one degree sequence."""

    kind: IndexKind
    min_value: int
    max_value: int
    min_witnesses: tuple[bytes, ...]
    max_witnesses: tuple[bytes, ...]
    min_witness_graphs: tuple[SimpleGraph, ...]
    max_witness_graphs: tuple[SimpleGraph, ...]
    count_labeled: int
    count_iso: int
    witness_cap: int = 4


@dataclass(frozen=True)
class SpineExtremalResult:
    """Index extremes over all spine orderings of a caterpillar multiset."""

    kind: IndexKind
    min_value: int
    max_value: int
    min_orderings: tuple[tuple[int, ...], ...]
    max_orderings: tuple[tuple[int, ...], ...]
    min_witnesses: tuple[bytes, ...]
    max_witnesses: tuple[bytes, ...]
    count_valid: int
    max_prescribed_ordering: tuple[int, ...]
    max_prescribed_value: int | None   # None when the ordering is invalid
    max_prescribed_attains: bool
    min_prescribed_ordering: tuple[int, ...]
    min_prescribed_value: int | None
    min_prescribed_attains: bool


def count_labeled_trees(d: DegreeSequence) -> int:
    """(n-2)! / prod (d_i - 1)! for a realizable sequence."""
    if not is_tree_realizable(d):
        raise NotRealizableError(f"not a tree degree sequence: {d.values}")
    if d.n < 2:
        return 1
    out = factorial(d.n - 2)
    for v in d.values:
        out //= factorial(v - 1)
    return out


def _distinct_permutations(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All distinct permutations of a multiset, in lexicographic order."""
    seq = sorted(items)
    n = len(seq)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])


def _code_multiset(d: DegreeSequence) -> tuple[int, ...]:
    symbols: list[int] = []
    for vertex, deg in enumerate(d.values):
        symbols.extend([vertex] * (deg - 1))
    return tuple(symbols)


def _labeled_codes(d: DegreeSequence,
                   first_symbol: int | None = None) -> Iterator[tuple[int, ...]]:
    symbols = _code_multiset(d)
    if first_symbol is None:
        yield from _distinct_permutations(symbols)
        return
    rest = list(symbols)
    rest.remove(first_symbol)
    for tail in _distinct_permutations(tuple(rest)):
        yield (first_symbol,) + tail


def _check_caps(d: DegreeSequence, cap: int) -> None:
    if d.n > min(cap, HARD_ENUM_CAP):
        raise CapExceededError(
            f"order {d.n} exceeds enumeration cap {min(cap, HARD_ENUM_CAP)}")
    if not is_tree_realizable(d):
        raise NotRealizableError(f"not a tree degree sequence: {d.values}")


def enumerate_trees(d: DegreeSequence, mode: EnumerationMode,
                    cap: int = DEFAULT_ENUM_CAP) -> Iterator[SimpleGraph]:
    """Stream the trees realizing ``d``, labeled or up to isomorphism."""
    _check_caps(d, cap)
    if d.n == 1:
        yield SimpleGraph(1, frozenset())
        return
    seen: set[bytes] = set()
    for code in _labeled_codes(d):
        t = prufer_decode(code, d.n)
        if mode is EnumerationMode.LABELED:
            yield t
        else:
            form = canonical_form(t)
            if form not in seen:
                seen.add(form)
                yield t


@dataclass
class _Partial:
    kind: IndexKind
    witness_cap: int
    min_value: int | None = None
    max_value: int | None = None
    min_entries: list[tuple[bytes, SimpleGraph]] = field(default_factory=list)
    max_entries: list[tuple[bytes, SimpleGraph]] = field(default_factory=list)
    count_labeled: int = 0
    forms: set[bytes] = field(default_factory=set)

    def observe_labeled(self):
        self.count_labeled += 1

    def observe_class(self, form: bytes, t: SimpleGraph, value: int):
        if form in self.forms:
            return
        self.forms.add(form)
        if self.min_value is None or value < self.min_value:
            self.min_value = value
            self.min_entries = [(form, t)]
        elif value == self.min_value and len(self.min_entries) < self.witness_cap:
            self.min_entries.append((form, t))
        if self.max_value is None or value > self.max_value:
            self.max_value = value
            self.max_entries = [(form, t)]
        elif value == self.max_value and len(self.max_entries) < self.witness_cap:
            self.max_entries.append((form, t))


def merge_extremal(a: _Partial, b: _Partial) -> _Partial:
    """Associative, commutative merge of partial extremal states."""
    out = _Partial(a.kind, a.witness_cap)
    out.count_labeled = a.count_labeled + b.count_labeled
    out.forms = a.forms | b.forms
    for side in ("min", "max"):
        better = min if side == "min" else max
        va, vb = getattr(a, f"{side}_value"), getattr(b, f"{side}_value")
        if va is None and vb is None:
            continue
        if vb is None or (va is not None and va == better(va, vb)):
            value, entries = va, list(getattr(a, f"{side}_entries"))
            other_value, other = vb, getattr(b, f"{side}_entries")
        else:
            value, entries = vb, list(getattr(b, f"{side}_entries"))
            other_value, other = va, getattr(a, f"{side}_entries")
        if other_value == value:
            known = {f for f, _ in entries}
            for f, t in other:
                if f not in known and len(entries) < a.witness_cap:
                    entries.append((f, t))
                    known.add(f)
        setattr(out, f"{side}_value", value)
        setattr(out, f"{side}_entries", entries[:a.witness_cap])
    return out


def _scan_partition(d: DegreeSequence, kind: IndexKind, witness_cap: int,
                    first_symbol: int | None) -> _Partial:
    part = _Partial(kind, witness_cap)
    for code in _labeled_codes(d, first_symbol):
        t = prufer_decode(code, d.n)
        part.observe_labeled()
        form = canonical_form(t)
        if form not in part.forms:
            part.observe_class(form, t, int(compute_index(t, kind)))
    return part


def _scan_partition_args(args) -> _Partial:
    return _scan_partition(*args)


def extremal_index(d: DegreeSequence, kind: IndexKind,
                   witness_cap: int = 4, cap: int = DEFAULT_ENUM_CAP,
                   workers: int | None = None) -> ExtremalResult:
    """Exact min/max of an index over the trees realizing ``d``.

    With ``workers`` > 1 the labeled space is partitioned by the first code
    symbol and scanned in parallel; partials merge associatively.
    """
    _check_caps(d, cap)
    if workers is None:
        workers = int(os.environ.get("DEGSEQ_THREADS", "1") or 1)
    if d.n <= 2:
        t = SimpleGraph(1, frozenset()) if d.n == 1 else prufer_decode([], 2)
        value = int(compute_index(t, kind))
        form = canonical_form(t)
        return ExtremalResult(kind, value, value, (form,), (form,),
                              (t,), (t,), 1, 1, witness_cap)
    firsts = sorted(set(_code_multiset(d)))
    if workers > 1 and len(firsts) > 1:
        jobs = [(d, kind, witness_cap, f) for f in firsts]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_scan_partition_args, jobs))
        part = partials[0]
        for other in partials[1:]:
            part = merge_extremal(part, other)
    else:
        part = _scan_partition(d, kind, witness_cap, None)
    assert part.min_value is not None and part.max_value is not None
    return ExtremalResult(
        kind, part.min_value, part.max_value,
        tuple(f for f, _ in part.min_entries),
        tuple(f for f, _ in part.max_entries),
        tuple(t for _, t in part.min_entries),
        tuple(t for _, t in part.max_entries),
        part.count_labeled, len(part.forms), witness_cap)


def spine_is_valid(ordering: tuple[int, ...]) -> bool:
    """A spine ordering is buildable when every interior degree is >= 2."""
    return all(v >= 1 for v in ordering) and all(v >= 2 for v in ordering[1:-1])


def prescribed_max_ordering(values: tuple[int, ...]) -> tuple[int, ...]:
    """Zigzag ordering conjectured to maximize spine irregularity.

    From the values sorted descending v1 >= v2 >= ...: the largest goes to
    the last position, the second largest to the first, the two smallest to
    positions 2 and n-1, and the rest fill the interior left to right.
    """
    v = sorted(values, reverse=True)
    n = len(v)
    if n <= 2:
        return tuple(reversed(v))
    if n == 3:
        return (v[1], v[2], v[0])
    out = [0] * n
    out[0] = v[1]
    out[-1] = v[0]
    out[1] = v[n - 2]
    out[-2] = v[n - 1]
    out[2:n - 2] = v[2:n - 2]
    return tuple(out)


def prescribed_min_ordering(values: tuple[int, ...]) -> tuple[int, ...]:
    """Ascending ordering conjectured to minimize spine irregularity."""
    return tuple(sorted(values))


def spine_permutation_extremal(spine: DegreeSequence, kind: IndexKind,
                               cap: int = DEFAULT_SPINE_CAP,
                               witness_cap: int = 4) -> SpineExtremalResult:
    """Index extremes over all valid orderings of a spine-degree multiset."""
    if spine.n > cap:
        raise CapExceededError(f"spine length {spine.n} exceeds cap {cap}")
    values = spine.values
    min_value = max_value = None
    min_orderings: list[tuple[int, ...]] = []
    max_orderings: list[tuple[int, ...]] = []
    min_forms: list[bytes] = []
    max_forms: list[bytes] = []
    evaluated: dict[tuple[int, ...], int] = {}
    for ordering in _distinct_permutations(values):
        if not spine_is_valid(ordering):
            continue
        t = build_caterpillar(CaterpillarSpec(ordering))
        value = int(compute_index(t, kind))
        evaluated[ordering] = value
        form = canonical_form(t)
        if min_value is None or value < min_value:
            min_value, min_orderings, min_forms = value, [ordering], [form]
        elif value == min_value and len(min_orderings) < witness_cap:
            min_orderings.append(ordering)
            min_forms.append(form)
        if max_value is None or value > max_value:
            max_value, max_orderings, max_forms = value, [ordering], [form]
        elif value == max_value and len(max_orderings) < witness_cap:
            max_orderings.append(ordering)
            max_forms.append(form)
    if min_value is None or max_value is None:
        raise NoValidSpecError(
            f"no valid caterpillar spine ordering for {values}")

    def probe(ordering: tuple[int, ...]) -> int | None:
        if ordering in evaluated:
            return evaluated[ordering]
        if not spine_is_valid(ordering):
            return None
        return int(compute_index(
            build_caterpillar(CaterpillarSpec(ordering)), kind))

    hi_ord = prescribed_max_ordering(values)
    lo_ord = prescribed_min_ordering(values)
    hi_val = probe(hi_ord)
    lo_val = probe(lo_ord)
    return SpineExtremalResult(
        kind, min_value, max_value,
        tuple(min_orderings), tuple(max_orderings),
        tuple(min_forms), tuple(max_forms),
        len(evaluated),
        hi_ord, hi_val, hi_val == max_value,
        lo_ord, lo_val, lo_val == min_value)
