"""Rank certificates for secant dimension statements.

The basic oracle stacks tangent rows for s seeded generic points and V-slice
rows for t more, then measures the rank over F_p.  Rank is lower
semicontinuous, so measuring the expected dimension at one specialization
proves the statement; a shortfall is only evidence of deficiency and gets
cross-checked over a second prime before it is reported.

Four specialized configurations degenerate some points onto the two
codimension-2 windows of W and adjoin the full coordinate blocks
V (x) S_2(U) for the corresponding windows U.  Their expected ranks are the
exact counts that drive the two-step induction on n used by the prover:

* Q(m, n): both windows, m+1 tangents on each; expected full.
* R_under(m, n): first window, s_under(m,n)-(m+1) tangents on it, m+1 off it;
  expected full minus 1 exactly when m is even and n is odd.
* R_over(m, n): same shape with s_over(m,n)-(m+1) on the window; expected full.
* R2n(n): the m = 2, n odd variant with 3*floor(n/2)-1 tangents on the
  window and 3 off it; expected full.

``witness_Rmm`` checks one fully explicit configuration on P^m x P^m (no
randomness): u_i = e_i, v_0 = f_0, v_1 = f_1, v_i = i f_0 + f_1 + f_i, with
window span(f_2..f_m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import Statement, ambient_dim, expected_dim, s_over, s_under, span_count
from .field import (PRIMARY_PRIME, SECONDARY_PRIME, DenseMatrix, PrimeField,
                    SeededRng, derive_seed, rank, vstack)
from .tensorspace import (Point, PointConstraint, sample_point,
                          sample_point_off_l, subspace_rows, tangent_rows,
                          ul_indices, um_indices, y_rows)

OUTCOME_TRUE = "true"
OUTCOME_DEFICIENT = "deficient"

_DEFAULT_FIELD = PrimeField(PRIMARY_PRIME)


@dataclass(frozen=True)
class Verdict:
    rank: int
    expected: int
    trials: int
    outcome: str

    @property
    def defect(self) -> int:
        return self.expected - self.rank

    def as_dict(self) -> dict:
        return {"rank": self.rank, "expected": self.expected,
                "defect": self.defect, "outcome": self.outcome}


@dataclass(frozen=True)
class ConfigBlock:
    """One block of rows: a tangent space, a V-slice, or a coordinate block.

    role is one of "tangent", "y_span", "subspace_block".  For point blocks
    the constraint fixes the sampling window; off_l additionally rejects
    samples lying over the first codim-2 window.  For subspace blocks,
    indices lists the W-coordinates of the window.
    """

    role: str
    constraint: PointConstraint = PointConstraint.GENERIC
    off_l: bool = False
    indices: tuple[int, ...] = ()


@dataclass(frozen=True)
class Configuration:
    m: int
    n: int
    d: int
    blocks: tuple[ConfigBlock, ...]

    def column_count(self) -> int:
        return (self.m + 1) * math.comb(self.n + self.d, self.d)

    def realize(self, rng: SeededRng, field: PrimeField) -> DenseMatrix:
        mats = []
        for blk in self.blocks:
            if blk.role == "subspace_block":
                mats.append(subspace_rows(blk.indices, self.m, self.n, self.d, field))
            elif blk.role == "tangent":
                pt = self._sample(blk, rng)
                mats.append(tangent_rows(pt, self.m, self.n, self.d, field))
            elif blk.role == "y_span":
                pt = self._sample(blk, rng)
                mats.append(y_rows(pt, self.m, self.n, self.d, field))
            else:
                raise ValueError(f"unknown block role {blk.role!r}")
        out = vstack(mats)
        if out.cols != self.column_count():
            raise AssertionError("configuration blocks disagree on columns")
        return out

    def _sample(self, blk: ConfigBlock, rng: SeededRng) -> Point:
        if blk.off_l:
            return sample_point_off_l(rng, self.m, self.n)
        return sample_point(rng, blk.constraint, self.m, self.n)


def statement_config(st: Statement) -> Configuration:
    blocks = tuple(ConfigBlock("tangent") for _ in range(st.s))
    blocks += tuple(ConfigBlock("y_span") for _ in range(st.t))
    return Configuration(st.m, st.n, st.d, blocks)


def statement_matrix(st: Statement, rng: SeededRng, field: PrimeField) -> DenseMatrix:
    """The stacked generic-configuration matrix for one trial of a statement."""
    return statement_config(st).realize(rng, field)


def _measure(config: Configuration, expected: int, seed: int, trials: int,
             field: PrimeField, label: tuple) -> Verdict:
    """Evaluate a configuration up to `trials` times, stopping at success."""
    if trials < 1:
        raise ValueError("need at least one trial")
    best = -1
    for trial in range(trials):
        rng = SeededRng(derive_seed(seed, *label, trial), field)
        mat = config.realize(rng, field)
        r = rank(mat)
        if r > expected:
            raise ArithmeticError(
                f"rank {r} exceeds expected {expected}; semicontinuity violated")
        if r > best:
            best = r
        if r == expected:
            return Verdict(r, expected, trial + 1, OUTCOME_TRUE)
    return Verdict(best, expected, trials, OUTCOME_DEFICIENT)


def eval_statement(st: Statement, seed: int = 0, trials: int = 3,
                   field: PrimeField | None = None) -> Verdict:
    """Probabilistic-exact oracle for S(m, n; 1, d; s; t).

    A `true` outcome is a certificate.  A `deficient` outcome means every
    trial fell short of the expected dimension.
    """
    field = field or _DEFAULT_FIELD
    expected = expected_dim(st)
    if st.s == 0 and st.t == 0:
        return Verdict(0, 0, 1, OUTCOME_TRUE)
    config = statement_config(st)
    label = ("S",) + st.key
    verdict = _measure(config, expected, seed, trials, field, label)
    assert verdict.rank <= span_count(st)
    return verdict


def eval_statement_checked(st: Statement, seed: int = 0, trials: int = 3,
                           field: PrimeField | None = None,
                           cross_field: PrimeField | None = None,
                           max_reseeds: int = 3) -> Verdict:
    """Like eval_statement, but a deficient verdict must be reproduced with
    the same rank over a second prime.  On disagreement both measurements are
    redone with a re-derived seed; persistent disagreement raises."""
    field = field or _DEFAULT_FIELD
    if cross_field is None:
        alt = SECONDARY_PRIME if field.p != SECONDARY_PRIME else PRIMARY_PRIME
        cross_field = PrimeField(alt)
    attempt_seed = seed
    for attempt in range(max_reseeds + 1):
        v1 = eval_statement(st, attempt_seed, trials, field)
        if v1.outcome == OUTCOME_TRUE:
            return v1
        v2 = eval_statement(st, attempt_seed, trials, cross_field)
        if v2.rank == v1.rank:
            return v1
        attempt_seed = derive_seed(seed, "reseed", attempt + 1)
    raise ArithmeticError(
        f"rank disagreement between primes persists for {st}")


def q_config(m: int, n: int) -> Configuration:
    if n < 3:
        raise ValueError("Q certificate needs n >= 3 (disjoint windows)")
    if m < 1:
        raise ValueError("Q certificate needs m >= 1")
    blocks = (ConfigBlock("subspace_block", indices=tuple(ul_indices(n))),
              ConfigBlock("subspace_block", indices=tuple(um_indices(n))))
    blocks += tuple(ConfigBlock("tangent", PointConstraint.ON_L) for _ in range(m + 1))
    blocks += tuple(ConfigBlock("tangent", PointConstraint.ON_M) for _ in range(m + 1))
    return Configuration(m, n, 2, blocks)


def certify_Q(m: int, n: int, seed: int = 0, trials: int = 3,
              field: PrimeField | None = None) -> Verdict:
    """Both coordinate blocks plus m+1 tangents on each window span everything."""
    field = field or _DEFAULT_FIELD
    expected = ambient_dim(m, n, 2)
    return _measure(q_config(m, n), expected, seed, trials, field, ("Q", m, n))


def _r_config(m: int, n: int, s: int) -> Configuration:
    on_l = s - (m + 1)
    if on_l < 0:
        raise ValueError(f"certificate needs s >= m + 1, got s = {s}")
    blocks = (ConfigBlock("subspace_block", indices=tuple(ul_indices(n))),)
    blocks += tuple(ConfigBlock("tangent", PointConstraint.ON_L) for _ in range(on_l))
    blocks += tuple(ConfigBlock("tangent", off_l=True) for _ in range(m + 1))
    return Configuration(m, n, 2, blocks)


def r_under_expected(m: int, n: int) -> int:
    """Full space, short by exactly one when m is even and n is odd."""
    drop = 1 if (m % 2 == 0 and n % 2 == 1) else 0
    return ambient_dim(m, n, 2) - drop


def certify_R_under(m: int, n: int, seed: int = 0, trials: int = 3,
                    field: PrimeField | None = None) -> Verdict:
    """First window block, s_under(m,n)-(m+1) tangents on it, m+1 off it."""
    if not (1 <= m <= n):
        raise ValueError("R_under certificate needs 1 <= m <= n")
    field = field or _DEFAULT_FIELD
    config = _r_config(m, n, s_under(m, n))
    return _measure(config, r_under_expected(m, n), seed, trials, field,
                    ("Runder", m, n))


def certify_R_over(m: int, n: int, seed: int = 0, trials: int = 3,
                   field: PrimeField | None = None) -> Verdict:
    """Same shape at the superabundant threshold; expected full."""
    if m < 2 or n < 2:
        raise ValueError("R_over certificate needs m >= 2 and n >= 2")
    field = field or _DEFAULT_FIELD
    config = _r_config(m, n, s_over(m, n))
    return _measure(config, ambient_dim(m, n, 2), seed, trials, field,
                    ("Rover", m, n))


def certify_R2n(n: int, seed: int = 0, trials: int = 3,
                field: PrimeField | None = None) -> Verdict:
    """The m = 2, n odd configuration at s = 3*floor(n/2)+2; expected full."""
    if n < 3 or n % 2 == 0:
        raise ValueError("R2n certificate needs odd n >= 3")
    field = field or _DEFAULT_FIELD
    config = _r_config(2, n, 3 * (n // 2) + 2)
    return _measure(config, ambient_dim(2, n, 2), seed, trials, field, ("R2n", n))


def witness_Rmm(m: int, field: PrimeField | None = None) -> bool:
    """Deterministic spanning witness on P^m x P^m.

    Stacks V (x) S_2(span(f_2..f_m)) with the tangent spaces at the m+1
    explicit points (e_i, v_i), v_0 = f_0, v_1 = f_1, v_i = i f_0 + f_1 + f_i,
    and checks that they span all of V (x) S_2(W).  The small integer
    coefficients must be distinct and nonzero, hence the characteristic
    guard.
    """
    if m < 2:
        raise ValueError("witness needs m >= 2")
    field = field or _DEFAULT_FIELD
    if field.p <= m:
        raise ValueError("field characteristic must exceed m")
    n = m
    mats = [subspace_rows(tuple(range(2, m + 1)), m, n, 2, field)]
    for i in range(m + 1):
        u = tuple(1 if j == i else 0 for j in range(m + 1))
        v = [0] * (n + 1)
        if i == 0:
            v[0] = 1
        elif i == 1:
            v[1] = 1
        else:
            v[0] = i
            v[1] = 1
            v[i] = 1
        mats.append(tangent_rows(Point(u, tuple(v)), m, n, 2, field))
    return rank(vstack(mats)) == ambient_dim(m, n, 2)
