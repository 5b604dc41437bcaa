"""Closed-form evaluators, transcribed exactly as printed in the source text.

Each function documents which way its degree tuple is ordered.  Summation
indices that would run past the end of a sequence are clamped to the valid
range; every clamp is flagged in the owning claim's interpretation notes.

Square roots never touch floating point: equality/inequality against an
expression ``A + B*sqrt(R)`` is decided by clearing the root in integer
arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "star_irr",
    "tree_sigma_max",
    "kmn_sigma",
    "double_star_sigma",
    "caterpillar_irr",
    "uniform_caterpillar_sigma_two_spine",
    "uniform_caterpillar_sigma_general",
    "three_spine_irr_max",
    "three_spine_irr_min",
    "order4_m1_sqrt_equals",
    "order4_irr_max_proof",
    "order4_irr_min_proof",
    "order4_strict_bound_holds",
    "alb4_max",
    "alb4_min",
    "five_six_chain_irr",
    "alb5_statement",
    "alb5_proof_max",
    "alb5_proof_min",
    "alb6_max",
    "alb6_min",
    "main_irr_closed_form",
    "sigma3_max",
    "sigma3_min",
    "sigma4_max",
    "sigma4_min",
    "sigma5_statement",
    "SIGMA5_CASES",
    "sigma6_statement",
    "sigma_chain_closed_form",
    "irr_lower_bound",
    "irr_total_upper_bound",
]


def star_irr(n: int) -> int:
    """irr(S_n) = (n-2)(n-1)."""
    return (n - 2) * (n - 1)


def tree_sigma_max(n: int) -> int:
    """Claimed maximum sigma over trees of order n: (n-1)(n-2)."""
    return (n - 1) * (n - 2)


def kmn_sigma(m: int, n: int) -> int:
    """sigma(K_{m,n}) = mn(n-m)^2."""
    return m * n * (n - m) ** 2


def double_star_sigma(k: int, r: int) -> int:
    """sigma(S_{r,k}) = (k-1)^3 + k^2 + (r-1)^3 + r^2 - 2kr."""
    return (k - 1) ** 3 + k ** 2 + (r - 1) ** 3 + r ** 2 - 2 * k * r


def caterpillar_irr(spine: tuple[int, ...]) -> int:
    """Caterpillar irregularity from spine degrees (d_1, ..., d_k), k >= 2:
    (d_k-1)^2 + (d_1-1)^2 + sum over interior of (d_i-1)(d_i-2) + sum |d_i - d_{i+1}|.
    """
    d = spine
    k = len(d)
    return ((d[-1] - 1) ** 2 + (d[0] - 1) ** 2
            + sum((d[i] - 1) * (d[i] - 2) for i in range(1, k - 1))
            + sum(abs(d[i] - d[i + 1]) for i in range(k - 1)))


def uniform_caterpillar_sigma_two_spine(m: int) -> int:
    """Uniform caterpillar sigma, two-spine branch: 2m^3."""
    return 2 * m ** 3


def uniform_caterpillar_sigma_general(m: int) -> int:
    """Uniform caterpillar sigma, general branch: 2m^3 + m - 2."""
    return 2 * m ** 3 + m - 2


def three_spine_irr_max(d: tuple[int, int, int]) -> int:
    """Three-spine maximum, d ordered d1 >= d2 >= d3:
    (d1-1)^2 + (d2-1)^2 + (d3-1)(d3-2)(d1-d3)(d2-d3).
    """
    d1, d2, d3 = d
    return ((d1 - 1) ** 2 + (d2 - 1) ** 2
            + (d3 - 1) * (d3 - 2) * (d1 - d3) * (d2 - d3))


def three_spine_irr_min(d: tuple[int, int, int]) -> int:
    """Three-spine minimum, d ordered d1 >= d2 >= d3:
    (d1-1)^2 + (d3-1)^2 + (d2-1)(d2-2) + (d1-d3).
    """
    d1, d2, d3 = d
    return (d1 - 1) ** 2 + (d3 - 1) ** 2 + (d2 - 1) * (d2 - 2) + (d1 - d3)


def order4_m1_sqrt_equals(d: tuple[int, int, int, int],
                          x: tuple[int, ...], irr: int) -> bool:
    """Decide irr == M1^2 - 2*sqrt(M1) + sum_{i<=3}|x_i - x_{i+1}| - (d2+d3) - 1.

    The index-4 term of the printed sum references x_5 and is clamped away.
    Equality holds iff t := M1^2 + S - (d2+d3) - 1 - irr equals 2*sqrt(M1),
    i.e. t >= 0 and t^2 == 4*M1.
    """
    m1 = sum(v * v for v in d)
    s = sum(abs(x[i] - x[i + 1]) for i in range(len(x) - 1))
    t = m1 ** 2 + s - (d[1] + d[2]) - 1 - irr
    return t >= 0 and t * t == 4 * m1


def order4_irr_max_proof(d: tuple[int, int, int, int]) -> int:
    """Order-4 maximum (proof-end form), d1 >= d2 >= d3 >= d4:
    sum (d_i-1)^2 + d1 + d2 - d3 - 3*d4 + 2.
    """
    return (sum((v - 1) ** 2 for v in d)
            + d[0] + d[1] - d[2] - 3 * d[3] + 2)


def order4_irr_min_proof(d: tuple[int, int, int, int]) -> int:
    """Order-4 minimum (proof-end form), d1 >= d2 >= d3 >= d4:
    sum (d_i-1)^2 + d1 - d2 - d3 - d4 + 2.
    """
    return sum((v - 1) ** 2 for v in d) + d[0] - d[1] - d[2] - d[3] + 2


def order4_strict_bound_holds(irr: int, delta_max: int, m1: int,
                              delta_min: int) -> bool:
    """Decide irr < 2*sqrt(Delta*M1) + delta by exact squared comparison."""
    lhs = irr - delta_min
    if lhs < 0:
        return True
    return lhs * lhs < 4 * delta_max * m1


def alb4_max(d: tuple[int, int, int, int]) -> int:
    """Order-4 non-decreasing maximum (d1 <= d2 <= d3 <= d4):
    d1^2 + d2^2 + sum_{i<=2}|d_i - d_{i+2}| + d3^2 + d4^2 + d3 + d4 - 6.

    The printed sum runs to i=3 and references d_5; clamped to i <= 2.
    """
    d1, d2, d3, d4 = d
    return (d1 ** 2 + d2 ** 2 + abs(d1 - d3) + abs(d2 - d4)
            + d3 ** 2 + d4 ** 2 + d3 + d4 - 6)


def alb4_min(d: tuple[int, int, int, int]) -> int:
    """Order-4 non-decreasing minimum:
    d3^2 + d4^2 + sum_{i<=2}|d_i - d_{i+2}| + |d1 - d2| + d1^2 + d2^2 + d1 + d2 - 6.
    """
    d1, d2, d3, d4 = d
    return (d3 ** 2 + d4 ** 2 + abs(d1 - d3) + abs(d2 - d4) + abs(d1 - d2)
            + d1 ** 2 + d2 ** 2 + d1 + d2 - 6)


def five_six_chain_irr(d: tuple[int, ...]) -> int:
    """Non-increasing chain form for n in {5, 6}:
    sum_i (d_i-1)(d_i-2) + sum_i |d_i - d_{i+1}| + (d_1-1)^2 + (d_n-1)^2.

    The printed difference sum runs to i=n and is clamped to i <= n-1.
    """
    n = len(d)
    return (sum((v - 1) * (v - 2) for v in d)
            + sum(abs(d[i] - d[i + 1]) for i in range(n - 1))
            + (d[0] - 1) ** 2 + (d[-1] - 1) ** 2)


def alb5_statement(d: tuple[int, int, int, int, int]) -> int:
    """Order-5 non-decreasing statement form (d5 >= ... >= d1):
    d1^2 + d5^2 + sum_{i=2}^{4}|d_i - d_{i+1}| + sum_{i=2}^{4}(d_i+2)(d_i-1) - 2.
    """
    return (d[0] ** 2 + d[4] ** 2
            + sum(abs(d[i - 1] - d[i]) for i in range(2, 5))
            + sum((d[i - 1] + 2) * (d[i - 1] - 1) for i in range(2, 5)) - 2)


def alb5_proof_max(d: tuple[int, int, int, int, int]) -> int:
    """Order-5 proof maximum:
    d3^2 + d5^2 - 2d1 - 2d2 + d3 + 2d4 + d5 + sum_{i in {1,2,4}}(d_i+2)(d_i-1) - 2.
    """
    d1, d2, d3, d4, d5 = d
    return (d3 ** 2 + d5 ** 2 - 2 * d1 - 2 * d2 + d3 + 2 * d4 + d5
            + sum((x + 2) * (x - 1) for x in (d1, d2, d4)) - 2)


def alb5_proof_min(d: tuple[int, int, int, int, int]) -> int:
    """Order-5 proof minimum:
    d2^2 + d4^2 + 2d5 + 2d3 - 2d1 - d2 - d4 + sum_{i in {1,3,5}}(d_i+2)(d_i-1) - 2.
    """
    d1, d2, d3, d4, d5 = d
    return (d2 ** 2 + d4 ** 2 + 2 * d5 + 2 * d3 - 2 * d1 - d2 - d4
            + sum((x + 2) * (x - 1) for x in (d1, d3, d5)) - 2)


def alb6_max(d: tuple[int, ...]) -> int:
    """Order-6 non-decreasing maximum:
    d1^2 + d6^2 + sum_{i<=5}|d_i - d_{i+1}| + sum_{i=2}^{5}(d_i+2)(d_i-1) - 2.

    The printed difference sum runs to i=6 and is clamped to i <= 5.
    """
    return (d[0] ** 2 + d[5] ** 2
            + sum(abs(d[i] - d[i + 1]) for i in range(5))
            + sum((d[i] + 2) * (d[i] - 1) for i in range(1, 5)) - 2)


def alb6_min(d: tuple[int, ...]) -> int:
    """Order-6 non-decreasing minimum:
    d1^2 + d2^2 + sum_{i<=5}|d_i - d_{i+1}| + sum_{i in {3..6}}(d_i+2)(d_i-1) - 2.
    """
    return (d[0] ** 2 + d[1] ** 2
            + sum(abs(d[i] - d[i + 1]) for i in range(5))
            + sum((d[i] + 2) * (d[i] - 1) for i in range(2, 6)) - 2)


def main_irr_closed_form(d: tuple[int, ...], proof_constant: bool = False) -> int:
    """General non-decreasing closed form (d_n >= ... >= d_1):
    d1^2 + dn^2 + sum_{2..n-1} d_i^2 + sum_{2..n-1} d_i + dn - d1 + C,
    with C = -2n - 2 as stated, or C = -2(n-2) - 2 as derived in the proof.
    """
    n = len(d)
    mid_sq = sum(v * v for v in d[1:-1])
    mid = sum(d[1:-1])
    c = -2 * (n - 2) - 2 if proof_constant else -2 * n - 2
    return d[0] ** 2 + d[-1] ** 2 + mid_sq + mid + d[-1] - d[0] + c


def sigma3_max(d: tuple[int, int, int]) -> int:
    """Three-spine sigma maximum (d3 >= d2 >= d1):
    sum_{i in {2,3}}(d_i+1)(d_i-1)^2 + (d3-d1)^2 + (d1-d2)^2.
    """
    d1, d2, d3 = d
    return (sum((x + 1) * (x - 1) ** 2 for x in (d2, d3))
            + (d3 - d1) ** 2 + (d1 - d2) ** 2)


def sigma3_min(d: tuple[int, int, int]) -> int:
    """Three-spine sigma minimum (d3 >= d2 >= d1):
    sum_{i in {1,3}}(d_i+1)(d_i-1)^2 + (d1-d3)^2 + (d3-d2)^2.
    """
    d1, d2, d3 = d
    return (sum((x + 1) * (x - 1) ** 2 for x in (d1, d3))
            + (d1 - d3) ** 2 + (d3 - d2) ** 2)


def sigma4_max(d: tuple[int, int, int, int]) -> int:
    """Order-4 sigma maximum (d4 >= ... >= d1):
    sum_{i in {2,3}}(d_i+1)(d_i-1)^2 + sum_{i in {1,4}}(d_i+2)(d_i-1)^2
    + sum_{i<=2}(d_i - d_{i+2})^2 + (d4-d1)^2.

    The printed difference sum runs to i=4 and is clamped to i <= 2.
    """
    d1, d2, d3, d4 = d
    return (sum((x + 1) * (x - 1) ** 2 for x in (d2, d3))
            + sum((x + 2) * (x - 1) ** 2 for x in (d1, d4))
            + (d1 - d3) ** 2 + (d2 - d4) ** 2 + (d4 - d1) ** 2)


def sigma4_min(d: tuple[int, int, int, int]) -> int:
    """Order-4 sigma minimum (d4 >= ... >= d1):
    sum_{i in {1,4}}(d_i+1)(d_i-1)^2 + sum_{i<=2}(d_i - d_{i+2})^2
    + sum_{i in {2,3}}(d_i+2)(d_i-1)^2.
    """
    d1, d2, d3, d4 = d
    return (sum((x + 1) * (x - 1) ** 2 for x in (d1, d4))
            + (d1 - d3) ** 2 + (d2 - d4) ** 2
            + sum((x + 2) * (x - 1) ** 2 for x in (d2, d3)))


def sigma5_statement(d: tuple[int, ...]) -> int:
    """Order-5 sigma statement (d5 >= ... >= d1):
    sum_{i=1}^{3} d_i * d_{i+1}^2 + (d1-1)^3 + d4^3 + sum_{i=1}^{4}(d_i - d_{i+1})^2.
    """
    return (sum(d[i] * d[i + 1] ** 2 for i in range(3))
            + (d[0] - 1) ** 3 + d[3] ** 3
            + sum((d[i] - d[i + 1]) ** 2 for i in range(4)))


def _s5_case1(d):
    d1, d2, d3, d4, d5 = d
    return 3 * d1 ** 3 - 2 * d1 ** 2 + 4 * d1 + d2 * d3 ** 2 + d4 ** 3 + 3


def _s5_case2(d):
    d1, d2, d3, d4, d5 = d
    return 2 * d1 ** 3 - 4 * d1 ** 2 + 3 * d1 + d1 * d2 ** 2 + d3 * d4 ** 2 + d2 ** 3 + 3


def _s5_case3(d):
    d1, d2, d3, d4, d5 = d
    return 2 * d1 ** 3 - 4 * d1 ** 2 + 3 * d1 + d1 * d2 ** 2 + d3 * d4 ** 2 + d3 ** 3 + 14


def _s5_case4(d):
    d1, d2, d3, d4, d5 = d
    return 2 * d1 ** 3 - 4 * d1 ** 2 + 3 * d1 + d1 * d2 ** 2 + d3 * d4 ** 2 + d3 ** 3 + 19


def _s5_case5(d):
    d1, d2, d3, d4, d5 = d
    return 3 * d1 ** 3 - d1 ** 2 + 4 * d1 + d2 * d3 ** 2 + d3 * d4 ** 2 + 14


def _s5_case6(d):
    d1, d2, d3, d4, d5 = d
    return 2 * d1 ** 3 - 5 * d1 ** 2 + 5 * d1 + d1 * d2 ** 2 + d3 ** 2 + d4 ** 3 + 10


def _s5_case7(d):
    d1, d2, d3, d4, d5 = d
    return 2 * d1 ** 3 - 5 * d1 ** 2 + 5 * d1 + d2 * d3 ** 2 + d2 ** 3 + d4 ** 3 + 21


def _s5_case8(d):
    d1, d2, d3, d4, d5 = d
    return 2 * d1 ** 3 - 4 * d1 ** 2 + 3 * d1 + d2 * d3 ** 2 + d3 * d4 ** 2 + d2 ** 3 + 22


def _s5_case9(d):
    d1, d2, d3, d4, d5 = d
    return 2 * d1 ** 3 - 4 * d1 ** 2 + 5 * d1 + d1 * d2 ** 2 + d2 * d3 ** 2 + d4 ** 3 + 8


def _s5_case10(d):
    d1, d2, d3, d4, d5 = d
    return 2 * d1 ** 3 - 5 * d1 ** 2 + 5 * d1 + d2 * d3 ** 2 + d2 ** 3 + d4 ** 3 + 24


# Order-5 sigma case table: spine ordering (as 1-based positions into the
# sorted sequence) paired with its printed polynomial.
SIGMA5_CASES: dict[int, tuple[tuple[int, ...], "callable"]] = {
    1: ((1, 2, 3, 4, 5), _s5_case1),
    2: ((1, 2, 3, 5, 4), _s5_case2),
    3: ((1, 2, 5, 3, 4), _s5_case3),
    4: ((1, 5, 2, 3, 4), _s5_case4),
    5: ((1, 3, 4, 5, 2), _s5_case5),
    6: ((5, 1, 2, 3, 4), _s5_case6),
    7: ((5, 1, 4, 2, 3), _s5_case7),
    8: ((1, 5, 2, 4, 3), _s5_case8),
    9: ((5, 4, 1, 3, 2), _s5_case9),
    10: ((5, 2, 4, 1, 3), _s5_case10),
}


def sigma6_statement(d: tuple[int, ...]) -> int:
    """Order-6 sigma statement (d6 >= ... >= d1):
    sum_{i=1}^{n-2} d_i * d_{i+1}^2 + (d1-1)^3 + (d6-1)^3.
    """
    n = len(d)
    return (sum(d[i] * d[i + 1] ** 2 for i in range(n - 2))
            + (d[0] - 1) ** 3 + (d[-1] - 1) ** 3)


def sigma_chain_closed_form(d: tuple[int, ...]) -> int:
    """General non-increasing sigma form (d1 >= ... >= dn):
    (dn-1)^3 + (d1-1)^3 + sum_{i<=n-1}(d_i - d_{i+1})^2
    + sum_{i=2}^{n-1}(d_i-1)^2 (d_i-2).

    The printed difference sum runs to i=n and is clamped to i <= n-1.
    """
    n = len(d)
    return ((d[-1] - 1) ** 3 + (d[0] - 1) ** 3
            + sum((d[i] - d[i + 1]) ** 2 for i in range(n - 1))
            + sum((d[i] - 1) ** 2 * (d[i] - 2) for i in range(1, n - 1)))


def irr_lower_bound(delta_min: int, delta_max: int, n: int) -> Fraction:
    """Claimed strict lower bound: delta*(Delta-delta)^2*|V| / (Delta+1)."""
    return Fraction(delta_min * (delta_max - delta_min) ** 2 * n,
                    delta_max + 1)


def irr_total_upper_bound(n: int, irr: int) -> Fraction:
    """Claimed upper bound on total irregularity: (n^2/4) * irr."""
    return Fraction(n * n, 4) * irr
