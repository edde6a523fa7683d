"""Rank-4 ACM kernel classification on the quadric threefold and
generator-count heuristics for ideal sheaves.

Every indecomposable ACM bundle on the quadric threefold is a twisted
line bundle or a twist of the rank-2 spinor-type bundle, so a rank-4
ACM kernel is one of three shapes: E0(a)+O(b)+O(c), E0(a)+E0(b), or a
sum of four line bundles.  Matching a candidate against a section-count
table therefore pins the kernel down without any resolution computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Mapping

from .curves import DEFAULT_WINDOW, CurveClass, Window, full_ideal_table, ideal_h0, regularity
from .errors import NegativeKernelDimension, RangeTooLarge
from .hilbert import binom
from .sheaves import SheafExpr, line_bundle, spinor, zero_sheaf

CANDIDATE_CAP = 10_000
DEFAULT_TWIST_BOUNDS: tuple[int, int] = (-6, 3)
MATCH_WINDOW: Window = (0, 6)


def rank4_candidate_count(twist_lo: int, twist_hi: int) -> int:
    """Candidates over a twist range of width w: w*C(w+1,2) of shape
    E0+O+O, C(w+1,2) of shape E0+E0, and C(w+3,4) sums of four lines."""
    w = twist_hi - twist_lo + 1
    return w * binom(w + 1, 2) + binom(w + 1, 2) + binom(w + 3, 4)


@lru_cache(maxsize=8)
def _enumerate_cached(twist_lo: int, twist_hi: int) -> tuple[SheafExpr, ...]:
    twists = range(twist_lo, twist_hi + 1)
    out: list[SheafExpr] = []
    for a in twists:
        for b, c in combinations_with_replacement(twists, 2):
            out.append(spinor(a) + line_bundle(b) + line_bundle(c))
    for a, b in combinations_with_replacement(twists, 2):
        out.append(spinor(a) + spinor(b))
    for quad in combinations_with_replacement(twists, 4):
        expr = zero_sheaf()
        for t in quad:
            expr = expr + line_bundle(t)
        out.append(expr)
    return tuple(sorted(dict.fromkeys(out), key=SheafExpr.render))


def enumerate_rank4_candidates(
    twist_lo: int = DEFAULT_TWIST_BOUNDS[0],
    twist_hi: int = DEFAULT_TWIST_BOUNDS[1],
    cap: int = CANDIDATE_CAP,
) -> list[SheafExpr]:
    """All rank-4 candidate kernels with twists in [twist_lo, twist_hi]."""
    if twist_lo > twist_hi:
        raise ValueError("empty twist range")
    count = rank4_candidate_count(twist_lo, twist_hi)
    if count > cap:
        raise RangeTooLarge(count, cap)
    return list(_enumerate_cached(twist_lo, twist_hi))


def match_acm_kernel(
    target: Mapping[int, int],
    window: Window = MATCH_WINDOW,
    twist_lo: int = DEFAULT_TWIST_BOUNDS[0],
    twist_hi: int = DEFAULT_TWIST_BOUNDS[1],
    cap: int = CANDIDATE_CAP,
) -> list[SheafExpr]:
    """Candidates whose section counts agree with target on every window cell.

    The window must span at least 5 twists: fewer points cannot separate
    the cubic growth patterns of the three families.
    """
    lo, hi = window
    if hi - lo + 1 < 5:
        raise ValueError("matching window must span at least 5 twists")
    missing = [n for n in range(lo, hi + 1) if n not in target]
    if missing:
        raise ValueError(f"target lacks values at twists {missing}")
    candidates = enumerate_rank4_candidates(twist_lo, twist_hi, cap)
    return [
        cand
        for cand in candidates
        if all(cand.h0(n) == target[n] for n in range(lo, hi + 1))
    ]


def kernel_table_from_resolution(
    curve: CurveClass, middle: SheafExpr, window: Window = MATCH_WINDOW
) -> dict[int, int]:
    """Section counts of the kernel of middle ->> I_C, twist by twist.

    For an ACM curve the kernel has no middle cohomology, so its h0 is
    the plain difference h0(middle(n)) - h0(I_C(n)); a negative value
    means no surjection exists.
    """
    lo, hi = window
    out: dict[int, int] = {}
    for n in range(lo, hi + 1):
        value = middle.h0(n) - ideal_h0(curve, n)
        if value < 0:
            raise NegativeKernelDimension(n, value)
        out[n] = value
    return out


@dataclass(frozen=True)
class GeneratorEstimate:
    """Heuristic generator counts per degree for an ideal sheaf.

    New generators in degree k are counted as h0(I(k)) minus the span of
    degree k-1 sections times linear forms, ASSUMING that multiplication
    map is injective; the flag records the assumption.  Degrees run up
    to the certified regularity, past which no new generators appear.
    """

    counts: dict[int, int]
    regularity: int
    assumes_injective_multiplication: bool = field(default=True)


def generator_estimate(
    curve: CurveClass, window: Window = DEFAULT_WINDOW
) -> GeneratorEstimate:
    report = regularity(full_ideal_table(curve, window))
    if report.regularity is None:
        raise ValueError("window does not certify a regularity bound")
    linear = curve.ambient.h0(1)
    counts: dict[int, int] = {}
    for k in range(1, report.regularity + 1):
        current = ideal_h0(curve, k)
        span = ideal_h0(curve, k - 1) * linear
        fresh = current - min(span, current)
        if fresh:
            counts[k] = fresh
    return GeneratorEstimate(counts, report.regularity)


def etype_middle(curve: CurveClass, window: Window = DEFAULT_WINDOW) -> SheafExpr:
    """Middle term O(-k) per estimated generator of degree k."""
    estimate = generator_estimate(curve, window)
    expr = zero_sheaf(curve.ambient)
    for k in sorted(estimate.counts):
        expr = expr + line_bundle(-k, estimate.counts[k], curve.ambient)
    return expr


def etype_candidates(
    curve: CurveClass,
    match_window: Window = MATCH_WINDOW,
    twist_lo: int = DEFAULT_TWIST_BOUNDS[0],
    twist_hi: int = DEFAULT_TWIST_BOUNDS[1],
    middle: SheafExpr | None = None,
) -> tuple[SheafExpr, list[SheafExpr]]:
    """Middle term from generator estimates plus every classified kernel
    matching its section deficit.  A unique match yields the E-type
    resolution; callers decide how to treat ambiguity."""
    if middle is None:
        middle = etype_middle(curve)
    table = kernel_table_from_resolution(curve, middle, match_window)
    return middle, match_acm_kernel(table, match_window, twist_lo, twist_hi)
