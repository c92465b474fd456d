from fractions import Fraction
from math import comb

import pytest

from hyperspec.hypergraph import SimpleGraph, degrees, gen_single_edge
from hyperspec.linalg import charpoly_matrix, det_bareiss
from hyperspec.macaulay import (
    SizeGuardError,
    build_basis,
    expected_degree,
    laplacian_row_stochastic_check,
    macaulay_matrices,
    macaulay_nullity_laplacian,
    tensor_charpoly,
    tensor_charpoly_full,
)
from hyperspec.multiplicity import multiplicity_of_largest_root
from hyperspec.poly import UniPoly
from hyperspec.tensor import (
    CubicalTensor,
    adjacency_tensor,
    diagonal_similarity,
    identity_tensor,
    laplacian_tensor,
    signless_laplacian_tensor,
)

from .conftest import SMALL

X = UniPoly.x()


def test_basis_sizes():
    b = build_basis(3, 3)
    assert (b.degree, len(b)) == (4, 15)
    b = build_basis(2, 2)
    assert (b.degree, len(b)) == (1, 2) and all(b.reduced)
    assert len(build_basis(5, 3)) == comb(10, 4) == 210


def test_basis_partition_rule():
    b = build_basis(4, 3)
    for mono, cls, red in zip(b.monomials, b.classes, b.reduced):
        assert sum(mono) == b.degree
        divisible = [i for i in range(1, 5) if mono[i - 1] >= 2]
        assert cls == min(divisible)
        assert red == (len(divisible) == 1)
    assert list(b.monomials) == sorted(b.monomials, reverse=True)
    assert len(set(b.monomials)) == len(b)


def test_basis_guard():
    with pytest.raises(SizeGuardError, match="C\\(18, 8\\)"):
        build_basis(9, 3)
    assert len(build_basis(9, 3, cap=10**6)) == comb(18, 8)


def test_identity_tensor_gives_identity_matrix():
    pair = macaulay_matrices(identity_tensor(3, 3))
    assert [dict(r) for r in pair.m] == [{j: 1} for j in range(15)]


def test_laplacian_rows_sum_to_zero(edge3):
    pair = macaulay_matrices(laplacian_tensor(edge3))
    assert all(sum(r.values()) == 0 for r in pair.m)


def test_order_two_is_the_matrix():
    a = adjacency_tensor(SimpleGraph.cycle(5).as_hypergraph())
    pair = macaulay_matrices(a)
    assert pair.m_sub == ()
    dense = pair.dense()
    for i in range(5):
        for j in range(5):
            assert dense[i][j] == a.entry((i + 1, j + 1))


def test_diagonal_aligns_with_partition(edge3, loose_path):
    for h in (edge3, loose_path):
        pair = macaulay_matrices(laplacian_tensor(h))
        deg = degrees(h)
        for j, cls in enumerate(pair.basis.classes):
            assert pair.m[j][j] == deg[cls - 1]


def test_charpoly_examples(edge3):
    edge = SimpleGraph.path(2).as_hypergraph()
    assert tensor_charpoly(adjacency_tensor(edge)) == X**2 - 1
    phi_l = tensor_charpoly(laplacian_tensor(edge3))
    assert phi_l.degree == 12 and phi_l.trailing_zeros() == 3
    phi_a = tensor_charpoly(adjacency_tensor(edge3))
    assert phi_a.degree == 12
    root = multiplicity_of_largest_root(phi_a)
    assert root.interval[0] <= 1 <= root.interval[1]
    assert root.multiplicity == 3


def test_charpoly_against_sympy_macaulay(edge3):
    sp = pytest.importorskip("sympy")
    from sympy.polys.multivariate_resultants import MacaulayResultant

    lam = sp.Symbol("l")
    xs = sp.symbols("x1:4")
    for tensor in (adjacency_tensor(edge3), laplacian_tensor(edge3), signless_laplacian_tensor(edge3)):
        polys = []
        for i in range(3):
            f = lam * xs[i] ** 2
            for (row, tail), v in tensor.data.items():
                if row == i + 1:
                    term = sp.Rational(v.numerator, v.denominator) * (2 if tail[0] != tail[1] else 1)
                    f -= term * xs[tail[0] - 1] * xs[tail[1] - 1]
            polys.append(sp.expand(f))
        mr = MacaulayResultant(polys, list(xs))
        m = mr.get_matrix()
        res = sp.cancel(m.det(method="berkowitz") / mr.get_submatrix(m).det(method="berkowitz"))
        ref = sp.Poly(res, lam).monic().all_coeffs()[::-1]
        ours = tensor_charpoly(tensor)
        assert [Fraction(int(sp.fraction(c)[0]), int(sp.fraction(c)[1])) for c in ref] == list(ours.coeffs)


def test_charpoly_invariant_under_diagonal_similarity(edge3):
    a = adjacency_tensor(edge3)
    b = diagonal_similarity(a, [1, 2, 3])
    assert b != a
    assert tensor_charpoly(b) == tensor_charpoly(a)
    lap = laplacian_tensor(edge3)
    assert tensor_charpoly(diagonal_similarity(lap, [Fraction(1, 2), 3, 5])) == tensor_charpoly(lap)


@pytest.mark.parametrize("name,h", SMALL)
@pytest.mark.parametrize("op", ["adj", "lap"])
def test_corpus_charpoly_structure(name, h, op):
    t = adjacency_tensor(h) if op == "adj" else laplacian_tensor(h)
    res = tensor_charpoly_full(t)
    assert res.poly.degree == expected_degree(h.n, h.k)
    assert res.charpoly_m == res.poly * res.charpoly_m_sub
    if h.k == 2:
        pair = macaulay_matrices(t)
        assert res.poly == charpoly_matrix(pair.m, pair.size)


@pytest.mark.parametrize("name", ["edge3", "complete4_3", "sunflower3_2_2", "graph_petersen", "loose_path3_2"])
def test_charpoly_constant_term_matches_bareiss(name):
    h = dict(SMALL)[name]
    for t in (adjacency_tensor(h), laplacian_tensor(h)):
        pair = macaulay_matrices(t)
        cm = charpoly_matrix(pair.m, pair.size)
        assert cm(0) == (-1) ** pair.size * det_bareiss(pair.m, pair.size)


def test_row_stochastic_check(edge3, loose_path, k4):
    for h, size in ((edge3, 15), (loose_path, 210), (k4, 56)):
        a = laplacian_row_stochastic_check(h)
        assert len(a) == size
        assert all(sum(r) == 1 and min(r) >= 0 for r in a)


def test_nullity_examples(edge3, loose_path, k4):
    assert macaulay_nullity_laplacian(edge3) == 3
    assert macaulay_nullity_laplacian(loose_path) == 9
    assert macaulay_nullity_laplacian(k4) == 1


def test_csv_golden(edge3):
    pair = macaulay_matrices(laplacian_tensor(edge3))
    with open("tests/golden/macaulay_laplacian_edge3.csv") as fh:
        assert pair.to_csv() == fh.read()
    header = pair.to_csv(sub=True).splitlines()[0]
    assert header == "monomial,x1^2*x2^2,x1^2*x3^2,x2^2*x3^2"


def test_rational_tensor_entries():
    t = CubicalTensor(3, 2, {(1, (1, 2)): Fraction(1, 3), (2, (1, 1)): Fraction(2, 7)})
    res = tensor_charpoly_full(t)
    assert res.poly.degree == expected_degree(2, 3)
    assert res.charpoly_m == res.poly * res.charpoly_m_sub
