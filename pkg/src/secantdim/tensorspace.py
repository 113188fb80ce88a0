"""Coordinate model of V (x) S_d(W) for the Segre-Veronese variety of
P(V) x P(W) = P^m x P^n embedded by O(1, d).

Conventions, fixed once for the whole package:

* V has basis e_0..e_m, W has basis f_0..f_n.
* S_d(W) is written in the monomial basis {f^mu : |mu| = d}, ordered by
  descending lexicographic order on exponent vectors (graded lex within the
  fixed degree d), so for n = 1, d = 2 the order is (2,0), (1,1), (0,2).
* A power v^d expands as sum_mu multinomial(d; mu) v^mu f^mu.
* Columns of every matrix are indexed by pairs (i, mu) flattened as
  i * len(basis) + index(mu), i.e. V-index major.

The affine tangent space to the cone over the variety at p = [u (x) v^d] is
spanned by the rows e_i (x) v^d (i = 0..m) and u (x) v^(d-1) f_j (j = 0..n);
``tangent_rows`` materializes exactly those m + n + 2 rows, of which at most
m + n + 1 are independent.

Two distinguished codimension-2 coordinate subspaces of W recur in the
certificates: span(f_0..f_{n-2}) and span(f_2..f_n).  Points can be
constrained to either (or both, or to the hyperplane span(f_1..f_n)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

import numpy as np

from .field import DenseMatrix, PrimeField, SeededRng


@dataclass(frozen=True)
class MonomialBasis:
    """Degree-d monomials in n+1 variables, descending lex order."""

    n: int
    d: int
    exponents: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.exponents)

    def index(self, mu: tuple[int, ...]) -> int:
        return self._index_map()[mu]

    @lru_cache(maxsize=None)
    def _index_map(self) -> dict[tuple[int, ...], int]:
        return {mu: i for i, mu in enumerate(self.exponents)}


def _exponents(nvars: int, d: int):
    if nvars == 1:
        yield (d,)
        return
    for e0 in range(d, -1, -1):
        for rest in _exponents(nvars - 1, d - e0):
            yield (e0,) + rest


@lru_cache(maxsize=None)
def monomial_basis(n: int, d: int) -> MonomialBasis:
    if n < 0 or d < 0:
        raise ValueError("monomial basis needs n >= 0 and d >= 0")
    return MonomialBasis(n, d, tuple(_exponents(n + 1, d)))


def multinomial(mu: Sequence[int]) -> int:
    total = 0
    out = 1
    for e in mu:
        total += e
        out *= math.comb(total, e)
    return out


def eval_power(v: Sequence[int], mu: Sequence[int], p: int) -> int:
    """Coefficient of f^mu in v^|mu|, i.e. multinomial(mu) * prod v_j^mu_j mod p."""
    if len(v) != len(mu):
        raise ValueError("vector and exponent lengths differ")
    c = multinomial(mu) % p
    for vj, e in zip(v, mu):
        if e:
            c = c * pow(int(vj) % p, e, p) % p
    return c


def power_row(v: Sequence[int], basis: MonomialBasis, p: int) -> np.ndarray:
    return np.array([eval_power(v, mu, p) for mu in basis.exponents], dtype=np.int64)


def column_count(m: int, n: int, d: int) -> int:
    return (m + 1) * len(monomial_basis(n, d))


class PointConstraint(Enum):
    """Coordinate-subspace constraint on the W-factor of a sample point."""

    GENERIC = "generic"
    ON_L = "on_L"                  # v in span(f_0 .. f_{n-2})
    ON_M = "on_M"                  # v in span(f_2 .. f_n)
    ON_L_AND_M = "on_L_and_M"      # v in span(f_2 .. f_{n-2})
    ON_HYPERSLICE = "on_hyperslice"  # v in span(f_1 .. f_n)

    def window(self, n: int) -> list[int]:
        """Indices of the W-coordinates the constraint leaves free."""
        if self is PointConstraint.GENERIC:
            idx = list(range(n + 1))
        elif self is PointConstraint.ON_L:
            idx = list(range(n - 1))
        elif self is PointConstraint.ON_M:
            idx = list(range(2, n + 1))
        elif self is PointConstraint.ON_L_AND_M:
            idx = list(range(2, n - 1))
        else:
            idx = list(range(1, n + 1))
        if not idx:
            raise ValueError(f"constraint {self.value} infeasible for n = {n}")
        return idx


def ul_indices(n: int) -> list[int]:
    """W-indices spanning the first codim-2 window span(f_0..f_{n-2})."""
    return list(range(n - 1))


def um_indices(n: int) -> list[int]:
    """W-indices spanning the second codim-2 window span(f_2..f_n)."""
    return list(range(2, n + 1))


@dataclass(frozen=True)
class Point:
    """A point [u (x) v^d] of the cone, stored as residue tuples."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self) -> None:
        if not any(self.u) or not any(self.v):
            raise ValueError("point factors must be nonzero")


def sample_point(rng: SeededRng, constraint: PointConstraint, m: int, n: int) -> Point:
    u = rng.nonzero_vector(m + 1)
    window = constraint.window(n)
    vals = rng.nonzero_vector(len(window))
    v = np.zeros(n + 1, dtype=np.int64)
    v[window] = vals
    return Point(tuple(int(x) for x in u), tuple(int(x) for x in v))


def sample_point_off_l(rng: SeededRng, m: int, n: int) -> Point:
    """Generic point that provably avoids P(V) x P(span(f_0..f_{n-2}))."""
    while True:
        pt = sample_point(rng, PointConstraint.GENERIC, m, n)
        if n == 0 or pt.v[n - 1] != 0 or pt.v[n] != 0:
            return pt


def tangent_rows(point: Point, m: int, n: int, d: int, field: PrimeField) -> DenseMatrix:
    """The m + n + 2 spanning rows of the affine tangent space at [u (x) v^d].

    Rows 0..m are e_i (x) v^d; rows m+1..m+n+1 are u (x) v^(d-1) f_j.  The
    coefficient of f^mu in v^(d-1) f_j is multinomial(d-1; mu - e_j) v^(mu - e_j).
    """
    if len(point.u) != m + 1 or len(point.v) != n + 1:
        raise ValueError("point has wrong factor lengths")
    if d < 1:
        raise ValueError("embedding degree must be >= 1")
    p = field.p
    basis = monomial_basis(n, d)
    nmon = len(basis)
    cols = (m + 1) * nmon
    arr = np.zeros((m + n + 2, cols), dtype=np.int64)

    vd = power_row(point.v, basis, p)
    for i in range(m + 1):
        arr[i, i * nmon:(i + 1) * nmon] = vd

    u = np.array(point.u, dtype=np.int64) % p
    lower = monomial_basis(n, d - 1)
    vlow = power_row(point.v, lower, p)
    for j in range(n + 1):
        mon = np.zeros(nmon, dtype=np.int64)
        for pos, nu in enumerate(lower.exponents):
            mu = nu[:j] + (nu[j] + 1,) + nu[j + 1:]
            mon[basis.index(mu)] = vlow[pos]
        arr[m + 1 + j] = np.kron(u, mon) % p
    return DenseMatrix(arr, field)


def y_rows(point: Point, m: int, n: int, d: int, field: PrimeField) -> DenseMatrix:
    """Rows spanning V (x) v^d, the V-slice through the point."""
    if len(point.u) != m + 1 or len(point.v) != n + 1:
        raise ValueError("point has wrong factor lengths")
    p = field.p
    basis = monomial_basis(n, d)
    nmon = len(basis)
    arr = np.zeros((m + 1, (m + 1) * nmon), dtype=np.int64)
    vd = power_row(point.v, basis, p)
    for i in range(m + 1):
        arr[i, i * nmon:(i + 1) * nmon] = vd
    return DenseMatrix(arr, field)


def subspace_rows(indices: Sequence[int], m: int, n: int, d: int,
                  field: PrimeField) -> DenseMatrix:
    """Unit rows spanning V (x) S_d(U) for U = span(f_i : i in indices).

    Row count is (m+1) * C(len(indices)-1+d, d); the rows are distinct unit
    vectors, so the block always has full row rank.
    """
    idx = sorted(set(int(i) for i in indices))
    if any(i < 0 or i > n for i in idx):
        raise ValueError("subspace indices outside 0..n")
    basis = monomial_basis(n, d)
    nmon = len(basis)
    cols = (m + 1) * nmon
    if not idx:
        return DenseMatrix(np.zeros((0, cols), dtype=np.int64), field)
    sub = monomial_basis(len(idx) - 1, d)
    arr = np.zeros(((m + 1) * len(sub), cols), dtype=np.int64)
    row = 0
    for i in range(m + 1):
        for smu in sub.exponents:
            mu = [0] * (n + 1)
            for pos, e in zip(idx, smu):
                mu[pos] = e
            arr[row, i * nmon + basis.index(tuple(mu))] = 1
            row += 1
    return DenseMatrix(arr, field)
