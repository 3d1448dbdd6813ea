"""Closed-form face counts, separation bounds, and combinatorial oracles.

Everything here is pure arithmetic on exact rationals and integers.
Binomials with out-of-range arguments evaluate to zero, which makes every
sum below self-truncating at exactly the intended ranges. Bounds stay
exact rationals and are never floored; comparisons against integer counts
are rational comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DivisibilityError

# Rational over-approximation of e, documented threshold base: e < 2.7183.
E_UPPER = Fraction(27183, 10000)


def binom(a: int, b: int) -> int:
    """C(a, b) with the zero convention outside 0 <= b <= a."""
    if b < 0 or b > a or a < 0:
        return 0
    return math.comb(a, b)


def fk_dual_cyclic(n: int, d: int, k: int) -> int:
    """Face count f_k of the dual cyclic polytope c*(n, d).

    Evaluates the two-sum maximal-count formula. For k >= ceil(d/2) the
    result provably collapses to C(n, d-k) (any d-k rows meet in a k-face),
    which is asserted as an internal consistency check.
    """
    if not (0 <= k <= d < n):
        raise ValueError(f"need 0 <= k <= d < n, got n={n} d={d} k={k}")
    half_up = -(-d // 2)
    total = 0
    for r in range(min(k, half_up), half_up):
        total += binom(n - d - 1 + r, r) * binom(r, k)
    for r in range(max(k, half_up), d + 1):
        total += binom(n - r - 1, d - r) * binom(r, k)
    if k >= half_up:
        if total != binom(n, d - k):
            raise AssertionError("two-sum formula disagrees with C(n, d-k)")
    return total


def dual_cyclic_f_vector(n: int, d: int) -> tuple[int, ...]:
    return tuple(fk_dual_cyclic(n, d, k) for k in range(d + 1))


def _check_pstar_params(n: int, d: int) -> int:
    """Validate the divisibility assumptions; returns the polygon size."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    half = d // 2
    if d % 2 == 0:
        if n % half != 0:
            raise DivisibilityError(
                f"floor(d/2) = {half} must be a divisor of n = {n} when d is even")
        m = n // half
    else:
        if (n - 1) % half != 0:
            raise DivisibilityError(
                f"floor(d/2) = {half} must be a divisor of n-1 = {n - 1} when d is odd")
        m = (n - 1) // half
    if m < 3:
        raise DivisibilityError(f"polygon size {m} < 3")
    return m


def fk_pstar(n: int, d: int, k: int) -> int:
    """Face count f_k of the paired-polygon construction P*(n, d).

    Even d: sum over the number r of coordinate pairs contributing two
    consecutive rows,

        sum_r C(d/2, r) C(d/2 - r, d-k-2r) (n/(d/2))^(d-k-r),

    with the zero-binomial convention trimming r to its valid range. Odd d
    recurses: f_k = f_{k-1} + f_k of the even base on (n-1, d-1), with
    f_0 from the vertex-count formula and f_d = 1. For odd d the counts
    include the unbounded faces of the pointed polyhedron.
    """
    if not (0 <= k <= d):
        raise ValueError(f"need 0 <= k <= d, got d={d} k={k}")
    m = _check_pstar_params(n, d)
    if d % 2 == 0:
        half = d // 2
        total = 0
        for r in range(max(0, half - k), half - k // 2 + 1):
            total += binom(half, r) * binom(half - r, d - k - 2 * r) * m ** (d - k - r)
        return total
    if k == d:
        return 1
    if k == 0:
        return m ** (d // 2)
    return fk_pstar(n - 1, d - 1, k - 1) + fk_pstar(n - 1, d - 1, k)


def pstar_f_vector(n: int, d: int) -> tuple[int, ...]:
    return tuple(fk_pstar(n, d, k) for k in range(d + 1))


def prism3_f_vector(n: int) -> tuple[int, ...]:
    """(2n-4, 3n-6, n, 1): the maximal d=3 counts, attained by the prism."""
    if n < 5:
        raise ValueError("prism formula needs n >= 5")
    return (2 * n - 4, 3 * n - 6, n, 1)


def polygon_f_vector(m: int) -> tuple[int, ...]:
    if m < 3:
        raise ValueError("polygon needs m >= 3")
    return (m, m, 1)


def leading_terms(n: int, d: int, k: int) -> tuple[Fraction, Fraction]:
    """Leading-term table entries (paired-polygon value, dual cyclic value).

    Case split on k against d/2, separately for even and odd d; the
    formulas are table lookups, exact at the given n, meaningful as leading
    terms when d is small against n.
    """
    if not (0 <= k <= d):
        raise ValueError(f"need 0 <= k <= d, got d={d} k={k}")
    if d % 2 == 0:
        half = d // 2
        g = Fraction(n, half)
        if k <= half:
            return (binom(half, k) * g ** half,
                    Fraction(binom(half, k) * binom(n - half - 1, half)))
        return (binom(half, d - k) * g ** (d - k),
                Fraction(binom(n - k - 1, d - k)))
    low = d // 2
    up = low + 1
    g = Fraction(n - 1, low)
    if k <= low:
        return ((binom(low, k) + binom(low, k + 1)) * g ** low,
                Fraction(binom(up, k) * binom(n - up - 1, low)))
    return (binom(low, d - k) * g ** (d - k),
            Fraction(binom(n - k - 1, d - k)))


def lemma41_bound(n: int, n_prime: int, d: int) -> Fraction:
    """Upper bound C(n,2) - C(n',2)/C(d,2) + n' on ridge counts.

    n' is the number of rows touching exactly two variables. Exact
    rational, not floored. Note the bound exceeds C(n,2) whenever
    C(n',2)/C(d,2) < n', i.e. for small n'; it is vacuous there.
    """
    if d < 4:
        raise ValueError("the ridge bound assumes d >= 4")
    if not (0 <= n_prime <= n):
        raise ValueError("need 0 <= n_prime <= n")
    return binom(n, 2) - Fraction(binom(n_prime, 2), binom(d, 2)) + n_prime


def two_variable_deficit(n_prime: int, d: int) -> Fraction:
    """D = C(n',2)/C(d,2) - n', the certified shortfall in ridge counts."""
    return Fraction(binom(n_prime, 2), binom(d, 2)) - n_prime


def thm42_bound(n: int, n_prime: int, d: int, k: int) -> Fraction:
    """f_k(c*(n,d)) - C(d-2,k) * D with the deficit D of two_variable_deficit.

    This is the bound the h-vector argument actually certifies. D can be
    negative for small n', in which case the bound is weaker than
    f_k(c*(n,d)) and carries no separation content; see
    thm42_bound_literal for the displayed variant with the opposite sign
    on n'.
    """
    if d < 4:
        raise ValueError("the separation bound assumes d >= 4")
    if k > d - 2:
        raise ValueError("the separation bound applies for k <= d-2")
    if not (0 <= n_prime <= n):
        raise ValueError("need 0 <= n_prime <= n")
    return fk_dual_cyclic(n, d, k) - binom(d - 2, k) * two_variable_deficit(n_prime, d)


def thm42_bound_literal(n: int, n_prime: int, d: int, k: int) -> Fraction:
    """The displayed variant f_k(c*) - C(d-2,k)*(C(n',2)/C(d,2) + n').

    Kept for reporting: its inner sign disagrees with the ridge bound and
    with the chain of inequalities that certifies thm42_bound.
    """
    if d < 4:
        raise ValueError("the separation bound assumes d >= 4")
    if k > d - 2:
        raise ValueError("the separation bound applies for k <= d-2")
    inner = Fraction(binom(n_prime, 2), binom(d, 2)) + n_prime
    return fk_dual_cyclic(n, d, k) - binom(d - 2, k) * inner


@dataclass(frozen=True)
class BoundReport:
    """One checked bound: exact formula value vs. an optional observed count."""
    quantity: str
    formula_value: Fraction
    oracle_value: int | None
    satisfied: bool
    note: str = ""


def ridge_bound_report(n: int, n_prime: int, d: int,
                       observed: int | None = None) -> BoundReport:
    """The ridge-count bound as a report row, checked against an observed count."""
    value = lemma41_bound(n, n_prime, d)
    satisfied = observed is None or Fraction(observed) <= value
    note = "vacuous: bound is at least C(n,2)" if value >= binom(n, 2) else ""
    return BoundReport("ridge_count_bound", value, observed, satisfied, note)


def separation_bound_reports(n: int, n_prime: int, d: int,
                             observed_f=None) -> list[BoundReport]:
    """Per-k separation bounds (proof-chain deficit) as report rows.

    observed_f, when given, supplies enumerated face counts indexed by k.
    """
    deficit = two_variable_deficit(n_prime, d)
    note = "vacuous for small n': deficit <= 0" if deficit <= 0 else ""
    reports = []
    for k in range(d - 1):
        value = thm42_bound(n, n_prime, d, k)
        observed = None if observed_f is None else observed_f[k]
        satisfied = observed is None or Fraction(observed) <= value
        reports.append(BoundReport(f"f_{k}_bound", value, observed, satisfied, note))
    return reports


@dataclass(frozen=True)
class RatioRow:
    """One row of the dual-cyclic-to-paired-polygon face-count ratio sweep."""
    n: int
    f_dual_cyclic: int
    f_pstar: int
    ratio: Fraction
    threshold: Fraction
    residue: Fraction
    within_envelope: bool


def ratio_report(d: int, n_list, k: int, envelope_slack: int = 8) -> list[RatioRow]:
    """Exact ratios f_k(c*)/f_k(P*) against the exponential threshold.

    The threshold is E_UPPER^floor(d/2) for k < ceil(d/2) and E_UPPER^(d-k)
    above, a rational over-approximation of the exponential envelope. The
    polynomial factor in front of the envelope is not pinned down, so the
    pass flag allows a documented slack multiplier (default 8) and the
    residue ratio/threshold records the observed polynomial content.
    """
    half_up = -(-d // 2)
    exponent = d // 2 if k < half_up else d - k
    threshold = E_UPPER ** exponent
    rows = []
    for n in n_list:
        fc = fk_dual_cyclic(n, d, k)
        fp = fk_pstar(n, d, k)
        ratio = Fraction(fc, fp)
        rows.append(RatioRow(n, fc, fp, ratio, threshold, ratio / threshold,
                             ratio <= envelope_slack * threshold))
    return rows


def gale_evenness_facet_count(n: int, d: int) -> int:
    """Count d-subsets of {1..n} satisfying the evenness condition.

    A subset is counted when every maximal run of its elements that is
    strictly between non-elements (touching neither 1 nor n) has even
    length. This is the standard combinatorial description of the cyclic
    polytope's facets, hence an independent oracle for the dual cyclic
    vertex count.
    """
    if not (0 < d < n):
        raise ValueError(f"need 0 < d < n, got n={n} d={d}")
    count = 0
    for subset in combinations(range(1, n + 1), d):
        runs: list[list[int]] = []
        for x in subset:
            if runs and runs[-1][-1] == x - 1:
                runs[-1].append(x)
            else:
                runs.append([x])
        if all(len(run) % 2 == 0 or run[0] == 1 or run[-1] == n for run in runs):
            count += 1
    return count
