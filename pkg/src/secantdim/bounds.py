"""Numerology for secant dimension statements on P^m x P^n in bidegree (1, d).

A *statement* S(m, n; 1, d; s; t) asserts that s generic tangent spaces plus
t generic V-slices of the Segre-Veronese cone span a subspace of the expected
dimension min{s(m+n+1) + t(m+1), (m+1) C(n+d, d)}.  T(m, n; 1, d; s) is the
t = 0 case, i.e. the statement that the s-th secant variety has the expected
dimension (all dimensions here are affine, for the cones).

This module holds the closed-form side: ambient and expected dimensions, the
sub/super/equiabundant trichotomy, the certified thresholds for d = 2, the
filling bounds for d >= 3, the unbalanced range, and the classical table of
defective Veronese double-point systems used for the m = 0 base cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class Statement:
    """S(m, n; 1, d; s; t): s tangent spaces and t V-slices in general position."""

    m: int
    n: int
    d: int
    s: int
    t: int = 0

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError("factor dimensions must be >= 0")
        if self.d < 1:
            raise ValueError("embedding degree must be >= 1")
        if self.s < 0 or self.t < 0:
            raise ValueError("point counts must be >= 0")

    @property
    def key(self) -> tuple[int, int, int, int, int]:
        return (self.m, self.n, self.d, self.s, self.t)


class Abundance(Enum):
    SUBABUNDANT = "sub"
    SUPERABUNDANT = "super"
    EQUIABUNDANT = "equi"


def ambient_dim(m: int, n: int, d: int) -> int:
    return (m + 1) * math.comb(n + d, d)


def span_count(st: Statement) -> int:
    """The naive row-count s(m+n+1) + t(m+1) before truncation."""
    return st.s * (st.m + st.n + 1) + st.t * (st.m + 1)


def expected_dim(st: Statement) -> int:
    return min(span_count(st), ambient_dim(st.m, st.n, st.d))


def classify(st: Statement) -> Abundance:
    lhs = span_count(st)
    rhs = ambient_dim(st.m, st.n, st.d)
    if lhs < rhs:
        return Abundance.SUBABUNDANT
    if lhs > rhs:
        return Abundance.SUPERABUNDANT
    return Abundance.EQUIABUNDANT


def is_subabundant(st: Statement) -> bool:
    """Inclusive: equiabundant statements count on both sides."""
    return span_count(st) <= ambient_dim(st.m, st.n, st.d)


def is_superabundant(st: Statement) -> bool:
    return span_count(st) >= ambient_dim(st.m, st.n, st.d)


def q_bound(m: int, n: int) -> int:
    """Largest s for which T(m, n; 1, 2; s) is subabundant."""
    return (m + 1) * math.comb(n + 2, 2) // (m + n + 1)


def s_under(m: int, n: int) -> int:
    """Certified subabundant threshold for d = 2: T(m, n; 1, 2; s) holds for
    all s <= s_under(m, n), provided m <= n + 2.  Clamped at 0 (for n = m - 2
    the formula vanishes exactly)."""
    k = n // 2
    if n % 2 == 0:
        val = (m + 1) * k - (m - 2) * (m + 1) // 2
    elif m % 2 == 1:
        val = (m + 1) * k - (m - 3) * (m + 1) // 2
    else:
        val = (m + 1) * k - ((m - 3) * (m + 1) + 1) // 2
    return max(val, 0)


def s_over(m: int, n: int) -> int:
    """Certified superabundant threshold for d = 2: T(m, n; 1, 2; s) holds for
    all s >= s_over(m, n), for m >= 1."""
    k = n // 2
    if n % 2 == 0:
        return (m + 1) * k + 1
    return (m + 1) * k + 3


def r_bound(m: int, n: int) -> int:
    """Threshold on n past which s_under(m, n) reaches the subabundant
    maximum q_bound(m, n).  Negative for m = 1, so the coincidence holds for
    every n there."""
    if m % 2 == 0 and n % 2 == 1:
        return m**3 - 2 * m
    return (m - 2) * (m + 1) ** 2 // 2


# (n, d) pairs whose minimal filling needs one extra point; the quadratic
# Veronese cases are handled separately via the d = 2 rule in
# ah_veronese_true.
FILLING_EXCEPTIONS = frozenset({(2, 4), (3, 4), (4, 3), (4, 4)})


def ell_h_bounds(m: int, n: int, d: int) -> tuple[int, int]:
    """(ell, h) for d >= 3: T(m, n; 1, d; s) is known for s <= ell(m, n, d)
    and for s >= h(n, d), where ell = floor(C(n+d,d)/(m+n+1)) and
    h = ceil(C(n+d,d)/(n+1)).  Callers must add 1 to h when (n, d) is in
    FILLING_EXCEPTIONS."""
    if d < 3:
        raise ValueError("ell/h bounds apply to d >= 3 only")
    c = math.comb(n + d, d)
    ell = c // (m + n + 1)
    h = -(-c // (n + 1))
    return ell, h


def unbalanced_range(m: int, n: int, d: int) -> tuple[int, int] | None:
    """Open interval (lo, hi) of defective s-values when (m, n; 1, d) is
    unbalanced, i.e. m > C(n+d, d) - d; None when balanced.

    In the unbalanced range the truncated expected dimension overshoots: the
    actual dimension is s (C(n+d,d) + m + 1 - s), reported by
    ``unbalanced_expected_dim``.
    """
    c = math.comb(n + d, d)
    if m <= c - d:
        return None
    lo = c - n
    hi = min(m + 1, c)
    if hi <= lo + 1:
        return None
    return lo, hi


def unbalanced_expected_dim(m: int, n: int, d: int, s: int) -> int:
    """Corrected affine dimension of the s-th secant cone in the unbalanced
    defective range."""
    c = math.comb(n + d, d)
    return s * (c + m + 1 - s)


# Veronese double-point systems (n, d, s) that fail to impose independent
# conditions, beyond the quadric rule: the classical quartic surface, quartic
# threefold, quartic fourfold, and cubic fourfold cases.
AH_EXCEPTIONS = frozenset({(2, 4, 5), (3, 4, 9), (4, 4, 14), (4, 3, 7)})


def ah_veronese_true(n: int, d: int, s: int) -> bool:
    """Whether s generic double points in P^n impose independent conditions
    on degree-d forms, equivalently whether T(0, n; 1, d; s) is true.

    The full answer for d >= 2: always, except s in [2, n] for d = 2 and the
    four sporadic cases in AH_EXCEPTIONS.
    """
    if d < 2:
        raise ValueError("double-point interpolation needs d >= 2")
    if s < 0:
        raise ValueError("negative point count")
    if d == 2 and 2 <= s <= n:
        return False
    return (n, d, s) not in AH_EXCEPTIONS


def min_filling_true(n: int, d: int) -> int:
    """Smallest s with s(n+1) >= C(n+d, d) and T(0, n; 1, d; s) true."""
    c = math.comb(n + d, d)
    s = -(-c // (n + 1))
    while not ah_veronese_true(n, d, s):
        s += 1
    return s
