import random
from fractions import Fraction

import pytest

from hyperspec.linalg import (
    charpoly_interpolate,
    charpoly_matrix,
    det_bareiss,
    nullity_rational,
    rank_rational,
    snf_integer,
)
from hyperspec.poly import UniPoly

X = UniPoly.x()


def _matmul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_charpoly_small():
    assert charpoly_matrix([[0, 1], [1, 0]]) == X**2 - 1
    eye = [[int(i == j) for j in range(3)] for i in range(3)]
    assert charpoly_matrix(eye) == (X - 1) ** 3


def test_charpoly_random_4x4_against_determinants():
    rng = random.Random(4)
    m = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
    cp = charpoly_matrix(m)
    assert cp.degree == 4 and cp.lc == 1
    # oracle: det(t I - M) at five integer points, computed directly
    for t in (-2, -1, 0, 1, 2):
        shifted = [[(t if i == j else 0) - m[i][j] for j in range(4)] for i in range(4)]
        assert cp(t) == det_bareiss(shifted)


@pytest.mark.parametrize("n,seed", [(1, 0), (3, 1), (6, 2), (9, 3)])
def test_charpoly_matches_interpolation(n, seed):
    rng = random.Random(seed)
    m = [[Fraction(rng.randint(-7, 7), rng.choice([1, 2, 6])) for _ in range(n)] for _ in range(n)]
    assert charpoly_matrix(m) == charpoly_interpolate(m)


def test_charpoly_sparse_rows():
    rows = [{1: 1}, {0: 1}]
    assert charpoly_matrix(rows, 2) == X**2 - 1


def test_charpoly_empty():
    assert charpoly_matrix([], 0) == UniPoly([1])


def test_charpoly_constant_term_is_signed_det():
    rng = random.Random(11)
    for n in (2, 5, 12):
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert charpoly_matrix(m)(0) == (-1) ** n * det_bareiss(m)


def test_det_bareiss_singular_and_swap():
    assert det_bareiss([[1, 2], [2, 4]]) == 0
    assert det_bareiss([[0, 1], [1, 0]]) == -1


def test_nullity_examples():
    assert nullity_rational([[0] * 3 for _ in range(3)]) == 3
    assert nullity_rational([[int(i == j) for j in range(4)] for i in range(4)]) == 0
    assert nullity_rational([[1, 1], [1, 1]]) == 1
    assert nullity_rational([{0: 1, 2: Fraction(1, 2)}, {0: 2, 2: 1}], 3) == 2


def test_rank_matches_gaussian_oracle():
    rng = random.Random(7)
    for _ in range(20):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        base = [[rng.randint(-3, 3) for _ in range(c)] for _ in range(2)]
        m = [[rng.randint(-1, 1) * base[0][j] + rng.randint(-1, 1) * base[1][j] for j in range(c)] for _ in range(r)]
        assert rank_rational(m, c) == _fraction_rank(m)


def _fraction_rank(m):
    a = [[Fraction(v) for v in row] for row in m]
    rank = 0
    cols = len(a[0]) if a else 0
    for j in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][j] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][j]:
                f = a[i][j] / a[rank][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def _check_snf(b, res):
    m, n = len(b), len(b[0])
    d = _matmul(_matmul([list(r) for r in res.u], b), [list(r) for r in res.v])
    for i in range(m):
        for j in range(n):
            assert d[i][j] == (res.invariants[i] if i == j else 0)
    nz = [s for s in res.invariants if s]
    assert all(s > 0 for s in nz)
    assert all(b2 % a2 == 0 for a2, b2 in zip(nz, nz[1:]))
    assert res.rank == _fraction_rank(b)


def test_snf_examples():
    for b, want in [
        ([[1, 1, 1]], (1,)),
        ([[1, 1, 1, 0, 0], [0, 0, 1, 1, 1]], (1, 1)),
        ([[2, 0], [0, 4]], (2, 4)),
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], (2, 6, 12)),
    ]:
        res = snf_integer(b)
        assert res.invariants == want
        _check_snf(b, res)


def test_snf_random_witnesses():
    rng = random.Random(5)
    for _ in range(30):
        m, n = rng.randint(1, 5), rng.randint(1, 6)
        b = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        _check_snf(b, snf_integer(b))
