"""Degree sequences: normalization, realizability checks, and generation.

A sequence is stored as an ascending tuple regardless of how it was presented;
the orientation flag only records which way round callers want to read it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import count

from .errors import CapExceededError, DomainError, ParseError

__all__ = [
    "Orientation",
    "DegreeSequence",
    "is_tree_realizable",
    "erdos_gallai_check",
    "power_mean_inequality_check",
    "all_tree_sequences",
    "HARD_SEQUENCE_CAP",
]

HARD_SEQUENCE_CAP = 12


class Orientation(Enum):
    NON_INCREASING = "dec"
    NON_DECREASING = "inc"


@dataclass(frozen=True)
class DegreeSequence:
    """Multiset of degrees, stored ascending, with a presentation flag."""

    values: tuple[int, ...]
    orientation: Orientation = Orientation.NON_INCREASING

    def __post_init__(self):
        if len(self.values) < 1:
            raise ValueError("degree sequence must be nonempty")
        if any(v < 0 for v in self.values):
            raise ValueError("degrees must be nonnegative")
        object.__setattr__(self, "values", tuple(sorted(self.values)))

    @property
    def n(self) -> int:
        return len(self.values)

    def presented(self) -> tuple[int, ...]:
        """The values read according to the orientation flag."""
        if self.orientation is Orientation.NON_INCREASING:
            return tuple(reversed(self.values))
        return self.values

    @classmethod
    def parse(cls, text: str, orientation: Orientation = Orientation.NON_INCREASING
              ) -> "DegreeSequence":
        """Parse a comma-separated degree list, e.g. ``3,2,1,1,1``."""
        try:
            values = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ParseError(f"bad degree sequence {text!r}") from exc
        if not values:
            raise ParseError("empty degree sequence")
        return cls(values, orientation)


def is_tree_realizable(d: DegreeSequence) -> bool:
    """True iff some tree has exactly these degrees.

    The condition is n >= 2, all degrees >= 1, and sum = 2(n - 1); the
    one-vertex tree is the single sequence (0,).
    """
    if d.n == 1:
        return d.values == (0,)
    return all(v >= 1 for v in d.values) and sum(d.values) == 2 * (d.n - 1)


def erdos_gallai_check(d: DegreeSequence) -> bool:
    """True iff the sequence is graphic (realizable by some simple graph)."""
    desc = sorted(d.values, reverse=True)
    n = len(desc)
    if desc and desc[0] > n - 1:
        return False
    if sum(desc) % 2 != 0:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += desc[k - 1]
        tail = sum(min(k, desc[i]) for i in range(k, n))
        if prefix > k * (k - 1) + tail:
            return False
    return True


def _iroot(x: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer."""
    if x < 0:
        raise ValueError("negative radicand")
    if x in (0, 1) or k == 1:
        return x
    r = int(round(x ** (1.0 / k)))
    while r > 0 and r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def power_mean_inequality_check(d: DegreeSequence, p: int) -> bool:
    """Decide (sum d_i^p)^(1/p) <= (n-1)^(1-1/p) * sum d_i^(1/p) exactly.

    Both sides are raised to the p-th power and compared through integer
    interval bounds on the p-th roots, tightening the scale until the verdict
    separates (or both sides are exactly representable).
    """
    if p < 1:
        raise DomainError(f"exponent must be >= 1, got {p}")
    n = d.n
    if any(v > n - 1 for v in d.values):
        raise DomainError("degrees must satisfy d_i <= n - 1")
    lhs_p = sum(v ** p for v in d.values)          # LHS^p, exact
    factor = (n - 1) ** (p - 1) if n > 1 else 0    # (n-1)^(p-1), exact
    for m in (8, 16, 32, 64, 128, 200):
        scale = 10 ** m
        scale_p = scale ** p
        lo = hi = 0
        exact = True
        for v in d.values:
            r = _iroot(v * scale_p, p)
            lo += r
            if r ** p == v * scale_p:
                hi += r
            else:
                hi += r + 1
                exact = False
        # Compare lhs_p * scale_p against factor * (sum of roots * scale)^p.
        if exact:
            return lhs_p * scale_p <= factor * lo ** p
        if lhs_p * scale_p <= factor * lo ** p:
            return True
        if lhs_p * scale_p > factor * hi ** p:
            return False
    # Interval width below 10^-200 without separating: the two sides are
    # equal for every realistic input, and equality satisfies <=.
    return True


def all_tree_sequences(n: int, cap: int = HARD_SEQUENCE_CAP) -> list[DegreeSequence]:
    """All degree multisets of trees on ``n`` vertices, ascending, lex order."""
    if not (1 <= n <= cap):
        raise CapExceededError(f"order {n} outside [1, {cap}]")
    if n == 1:
        return [DegreeSequence((0,))]
    target = 2 * (n - 1)
    out: list[DegreeSequence] = []

    def extend(prefix: list[int], remaining: int, slots: int):
        if slots == 0:
            if remaining == 0:
                out.append(DegreeSequence(tuple(prefix)))
            return
        lo = prefix[-1] if prefix else 1
        for v in count(lo):
            # each later slot needs at least v, and no degree exceeds n - 1
            if v > n - 1 or v * slots > remaining:
                break
            prefix.append(v)
            extend(prefix, remaining - v, slots - 1)
            prefix.pop()

    extend([], target, n)
    return out
