"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own algorithms: ranks and
determinants come from Fraction-based Gaussian elimination, permanents from
permutation expansion, and multiplication matrices from direct polynomial
shifts on standard monomial bases.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

import pytest

from triregion import (
    IntegerMatrix,
    Monomial,
    MonomialIdeal,
    X,
    Y,
    Z,
)

CORPUS_SEED = 20260811
CORPUS_SIZE = 500


def random_artinian_ideal(rng: random.Random) -> tuple[MonomialIdeal, int]:
    """A random Artinian ideal together with a region side length d <= 10."""
    d = rng.choice([2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 10])
    gens = [
        Monomial(rng.randint(1, d), 0, 0),
        Monomial(0, rng.randint(1, d), 0),
        Monomial(0, 0, rng.randint(1, d)),
    ]
    for _ in range(rng.randint(0, 4)):
        degree = rng.randint(2, max(2, d - 1))
        a = rng.randint(0, degree)
        b = rng.randint(0, degree - a)
        gens.append(Monomial(a, b, degree - a - b))
    return MonomialIdeal.from_generators(gens), d


@pytest.fixture(scope="session")
def corpus() -> list[tuple[MonomialIdeal, int]]:
    rng = random.Random(CORPUS_SEED)
    return [random_artinian_ideal(rng) for _ in range(CORPUS_SIZE)]


def fraction_rank(matrix: IntegerMatrix) -> int:
    """Rank over the rationals by plain Gaussian elimination on Fractions."""
    a = [[Fraction(v) for v in row] for row in matrix.entries]
    nrows, ncols = matrix.rows, matrix.cols
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][col]
        for i in range(nrows):
            if i != r and a[i][col]:
                f = a[i][col] / pv
                for j in range(col, ncols):
                    a[i][j] -= f * a[r][j]
        r += 1
    return r


def fraction_determinant(matrix: IntegerMatrix) -> Fraction:
    """Determinant by Fraction Gaussian elimination with partial pivoting."""
    n = matrix.rows
    a = [[Fraction(v) for v in row] for row in matrix.entries]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return det


def permutation_permanent(matrix: IntegerMatrix) -> int:
    """Permanent by full permutation expansion; only for tiny matrices."""
    n = matrix.rows
    total = 0
    for perm in permutations(range(n)):
        product = 1
        for i in range(n):
            product *= matrix.entries[i][perm[i]]
            if product == 0:
                break
        total += product
    return total


def multiplication_matrix(ideal: MonomialIdeal, d: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of multiplication by x+y+z from degree d-2 to degree d-1.

    Rows are indexed by the degree d-1 standard monomials and columns by
    the degree d-2 ones, both in descending revlex order.
    """
    source = ideal.standard_monomials(d - 2) if d >= 2 else []
    target = ideal.standard_monomials(d - 1)
    index = {m: i for i, m in enumerate(target)}
    rows = [[0] * len(source) for _ in target]
    for j, mu in enumerate(source):
        for v in (X, Y, Z):
            i = index.get(mu * v)
            if i is not None:
                rows[i][j] = 1
    return tuple(tuple(r) for r in rows)
