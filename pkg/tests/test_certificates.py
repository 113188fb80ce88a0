"""Statement evaluation and the named window certificates."""

import itertools
import math

import numpy as np
import pytest

from secantdim.bounds import Statement, ambient_dim, expected_dim, s_over, s_under
from secantdim.certificates import (Verdict, certify_Q, certify_R2n,
                                    certify_R_over, certify_R_under,
                                    eval_statement, eval_statement_checked,
                                    r_under_expected, witness_Rmm)
from secantdim.field import (PRIMARY_PRIME, SECONDARY_PRIME, DenseMatrix,
                             PrimeField, SeededRng, derive_seed, rank)

F = PrimeField(PRIMARY_PRIME)


def test_verdict_shape():
    v = Verdict(rank=29, expected=30, trials=3, outcome="deficient")
    assert v.defect == 1
    assert v.as_dict() == {"rank": 29, "expected": 30, "defect": 1,
                           "outcome": "deficient"}


def test_known_defective_triples():
    for (m, n, s), exp in (((2, 3, 5), 30), ((2, 5, 8), 63), ((4, 3, 6), 48)):
        v = eval_statement(Statement(m, n, 2, s, 0))
        assert v.expected == exp
        assert v.rank == exp - 1
        assert v.outcome == "deficient"


def test_known_true_statements():
    assert eval_statement(Statement(2, 3, 2, 4, 0)).as_dict() == {
        "rank": 24, "expected": 24, "defect": 0, "outcome": "true"}
    assert eval_statement(Statement(2, 3, 2, 6, 0)).outcome == "true"  # fills
    assert eval_statement(Statement(1, 1, 2, 2, 0)).rank == 6
    v = eval_statement(Statement(1, 2, 2, 1, 1))
    assert v.outcome == "true" and v.expected == 6


def test_empty_statement():
    v = eval_statement(Statement(3, 3, 2, 0, 0))
    assert v.rank == 0 and v.expected == 0 and v.outcome == "true"


def test_eval_reproducible():
    a = eval_statement(Statement(2, 4, 2, 5, 1), seed=9)
    b = eval_statement(Statement(2, 4, 2, 5, 1), seed=9)
    assert a == b


def test_rank_bounded_by_expected():
    rng = np.random.default_rng(4)
    for _ in range(15):
        m = int(rng.integers(0, 4))
        n = int(rng.integers(1, 5))
        s = int(rng.integers(0, 7))
        t = int(rng.integers(0, 3))
        v = eval_statement(Statement(m, n, 2, s, t), seed=int(rng.integers(1000)))
        assert 0 <= v.rank <= v.expected <= ambient_dim(m, n, 2)


def test_rank_monotone_in_s():
    prev = 0
    for s in range(1, 8):
        v = eval_statement(Statement(2, 3, 2, s, 0), seed=2)
        assert v.rank >= prev
        prev = v.rank
    assert prev == 30


def test_cross_prime_check():
    v = eval_statement_checked(Statement(2, 3, 2, 5, 0),
                               cross_field=PrimeField(SECONDARY_PRIME))
    assert v.rank == 29 and v.outcome == "deficient"
    w = eval_statement_checked(Statement(2, 3, 2, 4, 0))
    assert w.outcome == "true"


# -- independent Terracini oracle -------------------------------------------
#
# Builds the same matrix from the partial-derivative formula: the row for
# direction f_j at [u (x) v^d] has (i, mu) entry
#     u_i * multinomial(mu) * mu_j * v^(mu - e_j),
# which is d times the production row, so row spaces and ranks agree.  The
# monomial order here is ascending and re-sorted, on purpose.


def _oracle_monomials(n, d):
    out = [mu for mu in itertools.product(range(d + 1), repeat=n + 1)
           if sum(mu) == d]
    return sorted(out)


def _oracle_multinomial(mu):
    num = math.factorial(sum(mu))
    for e in mu:
        num //= math.factorial(e)
    return num


def _oracle_rank(m, n, d, s, t, seed):
    p = F.p
    mons = _oracle_monomials(n, d)
    cols = (m + 1) * len(mons)
    gen = np.random.default_rng(seed)
    rows = []

    def point():
        while True:
            u = gen.integers(0, p, size=m + 1)
            v = gen.integers(0, p, size=n + 1)
            if u.any() and v.any():
                return u.tolist(), v.tolist()

    def vpow(v, mu):
        out = 1
        for base, e in zip(v, mu):
            out = out * pow(base, e, p) % p
        return out

    for _ in range(s):
        u, v = point()
        for i in range(m + 1):
            row = [0] * cols
            for c, mu in enumerate(mons):
                row[i * len(mons) + c] = _oracle_multinomial(mu) * vpow(v, mu) % p
            rows.append(row)
        for j in range(n + 1):
            row = [0] * cols
            for c, mu in enumerate(mons):
                if mu[j] == 0:
                    continue
                shifted = list(mu)
                shifted[j] -= 1
                coeff = _oracle_multinomial(mu) * mu[j] * vpow(v, shifted)
                for i in range(m + 1):
                    row[i * len(mons) + c] = coeff * u[i] % p
            rows.append(row)
    for _ in range(t):
        u, v = point()
        for i in range(m + 1):
            row = [0] * cols
            for c, mu in enumerate(mons):
                row[i * len(mons) + c] = _oracle_multinomial(mu) * vpow(v, mu) % p
            rows.append(row)
    if not rows:
        return 0
    return rank(DenseMatrix(np.array(rows, dtype=np.int64), F))


def test_terracini_matrix_against_derivative_oracle():
    for m in range(0, 4):
        for n in range(1, 5):
            for s, t in ((1, 0), (2, 0), (3, 1), (5, 0), (6, 2)):
                st = Statement(m, n, 2, s, t)
                got = eval_statement(st, seed=21).rank
                want = max(_oracle_rank(m, n, 2, s, t, seed=1000 + 7 * s + t),
                           _oracle_rank(m, n, 2, s, t, seed=2000 + 7 * s + t))
                assert got == want, (m, n, s, t)


def test_oracle_covers_degree_three():
    st = Statement(1, 2, 3, 3, 0)
    assert eval_statement(st, seed=3).rank == _oracle_rank(1, 2, 3, 3, 0, seed=44)


# -- named certificates -------------------------------------------------------


def test_certify_q_small_grid():
    for m in (1, 2, 3):
        for n in (3, 4, 5):
            v = certify_Q(m, n)
            assert v.expected == ambient_dim(m, n, 2)
            assert v.outcome == "true", (m, n)
    with pytest.raises(ValueError):
        certify_Q(2, 2)


def test_r_under_expected_parity():
    assert r_under_expected(2, 3) == 30 - 1
    assert r_under_expected(2, 4) == 45
    assert r_under_expected(3, 3) == 40
    assert r_under_expected(4, 5) == 5 * 21 - 1


def test_certify_r_under():
    for m, n in ((1, 3), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4), (4, 5)):
        v = certify_R_under(m, n)
        assert v.expected == r_under_expected(m, n)
        assert v.outcome == "true", (m, n)
    with pytest.raises(ValueError):
        certify_R_under(4, 3)  # defined for 1 <= m <= n only


def test_certify_r_over():
    for m, n in ((3, 2), (3, 3), (2, 4), (4, 2), (2, 3)):
        v = certify_R_over(m, n)
        assert v.expected == ambient_dim(m, n, 2)
        assert v.outcome == "true", (m, n)


def test_certify_r2n():
    for n in (3, 5):
        v = certify_R2n(n)
        assert v.outcome == "true", n
    with pytest.raises(ValueError):
        certify_R2n(4)


def test_witness_deterministic_and_true():
    for m in (2, 3, 4, 5, 6):
        assert witness_Rmm(m, F) is True
    assert witness_Rmm(3, PrimeField(SECONDARY_PRIME)) is True
