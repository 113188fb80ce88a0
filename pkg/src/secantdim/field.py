"""Exact linear algebra over word-sized prime fields.

Every certificate in this package reduces to the rank (or the Pfaffian) of a
dense matrix over F_p for a large prime p.  Ranks over a random large prime
are a standard exact surrogate for generic complex ranks: the rank of any
specialization is at most the generic rank, so hitting the expected value is
a proof, while a shortfall is strong evidence that is cross-checked over a
second prime.

Entries are canonical residues in [0, p) held in int64 arrays.  The modulus
is capped so that a product of two residues, plus one more residue, still
fits in a signed 64-bit word; every elimination step below stays exact under
that bound.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

PRIMARY_PRIME = 2**31 - 1
SECONDARY_PRIME = 2**31 + 11

_MIN_MODULUS = 2**31 - 1
# Largest p with (p - 1)^2 + p < 2^63.
_MAX_MODULUS = 3_037_000_499


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3_215_031_751."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic engine for F_p with an odd prime p in [2^31 - 1, 3037000499]."""

    p: int = PRIMARY_PRIME

    def __post_init__(self) -> None:
        if not (_MIN_MODULUS <= self.p <= _MAX_MODULUS):
            raise ValueError(f"modulus {self.p} outside supported range "
                             f"[{_MIN_MODULUS}, {_MAX_MODULUS}]")
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def element(self, x: int) -> int:
        return x % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def matrix(self, entries) -> "DenseMatrix":
        return DenseMatrix(entries, self)


class DenseMatrix:
    """Dense matrix over a prime field, stored as an int64 array of residues."""

    __slots__ = ("field", "array")

    def __init__(self, entries, field: PrimeField):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {arr.shape}")
        self.field = field
        self.array = arr % field.p

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    def __repr__(self) -> str:
        return f"DenseMatrix({self.rows}x{self.cols} mod {self.field.p})"


def vstack(mats: Sequence[DenseMatrix]) -> DenseMatrix:
    """Stack matrices with equal column counts over the same field."""
    if not mats:
        raise ValueError("nothing to stack")
    field = mats[0].field
    for m in mats:
        if m.field.p != field.p:
            raise ValueError("field mismatch in stack")
        if m.cols != mats[0].cols:
            raise ValueError("column count mismatch in stack")
    return DenseMatrix(np.vstack([m.array for m in mats]), field)


def _rank_array(a: np.ndarray, p: int) -> int:
    a = np.array(a, dtype=np.int64) % p
    nrows, ncols = a.shape
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        hits = np.nonzero(a[r:, col])[0]
        if hits.size == 0:
            continue
        piv = r + int(hits[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, col]), p - 2, p)
        a[r] = a[r] * inv % p
        if r + 1 < nrows:
            factors = a[r + 1:, col]
            a[r + 1:] = (a[r + 1:] - factors[:, None] * a[r][None, :]) % p
        r += 1
    return r


def rank(m: DenseMatrix) -> int:
    return _rank_array(m.array, m.field.p)


def det(m: DenseMatrix) -> int:
    """Determinant by ordinary elimination with pivot-product bookkeeping."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    p = m.field.p
    a = np.array(m.array, dtype=np.int64) % p
    n = a.shape[0]
    result = 1
    for col in range(n):
        hits = np.nonzero(a[col:, col])[0]
        if hits.size == 0:
            return 0
        piv = col + int(hits[0])
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            result = -result % p
        pivot = int(a[col, col])
        result = result * pivot % p
        inv = pow(pivot, p - 2, p)
        a[col] = a[col] * inv % p
        if col + 1 < n:
            factors = a[col + 1:, col]
            a[col + 1:] = (a[col + 1:] - factors[:, None] * a[col][None, :]) % p
    return result % p


def pfaffian(m: DenseMatrix) -> int:
    """Pfaffian of a skew-symmetric matrix of even order.

    Skew elimination: repeatedly pivot on the (k, k+1) entry alpha and replace
    the trailing block D by D + (g r^T - r g^T) with g = column k below the
    pivot rows divided by alpha and r = row k+1 beyond the pivot columns.
    Pf([[0, a], [-a, 0]] in the leading corner) factors out as alpha, row or
    column swaps flip the sign.
    """
    p = m.field.p
    a = np.array(m.array, dtype=np.int64) % p
    n = a.shape[0]
    if n != a.shape[1]:
        raise ValueError("pfaffian of a non-square matrix")
    if n % 2 != 0:
        raise ValueError("pfaffian needs even order")
    if np.any((a + a.T) % p != 0):
        raise ValueError("matrix is not skew-symmetric mod p")
    result = 1
    for k in range(0, n, 2):
        hits = np.nonzero(a[k, k + 1:])[0]
        if hits.size == 0:
            return 0
        j = k + 1 + int(hits[0])
        if j != k + 1:
            a[[k + 1, j]] = a[[j, k + 1]]
            a[:, [k + 1, j]] = a[:, [j, k + 1]]
            result = -result % p
        alpha = int(a[k, k + 1])
        result = result * alpha % p
        if k + 2 < n:
            inv = pow(alpha, p - 2, p)
            g = a[k + 2:, k] * inv % p
            r = a[k + 1, k + 2:]
            update = (np.outer(g, r) % p - np.outer(r, g) % p)
            a[k + 2:, k + 2:] = (a[k + 2:, k + 2:] + update) % p
    return result % p


class SeededRng:
    """Deterministic stream of field elements.

    Wraps numpy's PCG64 generator, whose integer streams are stable across
    platforms for a fixed seed.
    """

    def __init__(self, seed: int, field: PrimeField):
        self.seed = seed
        self.field = field
        self._gen = np.random.Generator(np.random.PCG64(seed))

    def elements(self, count: int) -> np.ndarray:
        return self._gen.integers(0, self.field.p, size=count, dtype=np.int64)

    def nonzero_vector(self, length: int) -> np.ndarray:
        if length <= 0:
            raise ValueError("nonzero vector needs positive length")
        while True:
            v = self.elements(length)
            if np.any(v != 0):
                return v


def random_vector(rng: SeededRng, length: int) -> np.ndarray:
    """Uniform vector over F_p^length, conditioned on being nonzero."""
    return rng.nonzero_vector(length)


def random_matrix(rng: SeededRng, rows: int, cols: int) -> DenseMatrix:
    arr = rng.elements(rows * cols).reshape(rows, cols)
    return DenseMatrix(arr, rng.field)


def derive_seed(root: int, *parts: int | str) -> int:
    """Split a root seed into an independent 64-bit stream seed.

    The derivation hashes the decimal rendering of the root and each part,
    joined by '|', with BLAKE2b; it is documented here so that runs can be
    reproduced from the command-line seed alone.
    """
    text = "|".join(str(x) for x in (root, *parts))
    digest = hashlib.blake2b(text.encode("ascii"), digest_size=8).digest()
    return int.from_bytes(digest, "little")
