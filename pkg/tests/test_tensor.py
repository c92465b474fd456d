from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperspec.hypergraph import gen_single_edge, is_connected, validate
from hyperspec.tensor import (
    CubicalTensor,
    adjacency_tensor,
    apply,
    degree_tensor,
    diagonal_similarity,
    identity_tensor,
    laplacian_tensor,
    load_dump,
    signless_laplacian_tensor,
    triple_product,
    weakly_irreducible,
    zero_tensor,
)

from .conftest import CORPUS

HALF = Fraction(1, 2)


def test_adjacency_single_edge(edge3):
    a = adjacency_tensor(edge3)
    entries = dict(a.items())
    assert len(entries) == 6
    assert set(entries.values()) == {HALF}
    assert a.nnz() == 6


def test_adjacency_edgeless_and_path(loose_path):
    assert adjacency_tensor(validate(3, 4, [])).nnz() == 0
    assert adjacency_tensor(loose_path).nnz() == 12


def test_laplacian_entries(edge3):
    lap = laplacian_tensor(edge3)
    slap = signless_laplacian_tensor(edge3)
    for v in (1, 2, 3):
        assert lap.entry((v, v, v)) == 1 == slap.entry((v, v, v))
    assert lap.entry((1, 2, 3)) == -HALF and lap.entry((3, 1, 2)) == -HALF
    assert slap.entry((2, 3, 1)) == HALF
    assert lap.entry((1, 1, 2)) == 0
    assert lap + slap == degree_tensor(edge3).scale(2)


def test_apply_examples(edge3):
    assert apply(adjacency_tensor(edge3), [1, 1, 1]) == [1, 1, 1]
    x = [Fraction(2), Fraction(-3), Fraction(1, 2)]
    assert apply(identity_tensor(3, 3), x) == [v**2 for v in x]
    assert apply(identity_tensor(4, 3), x) == [v**3 for v in x]


def test_apply_dimension_mismatch(edge3):
    with pytest.raises(ValueError):
        apply(adjacency_tensor(edge3), [1, 1])


@pytest.mark.parametrize("name,h", CORPUS)
def test_corpus_tensor_invariants(name, h):
    a = adjacency_tensor(h)
    lap = laplacian_tensor(h)
    assert apply(lap, [1] * h.n) == [0] * h.n
    assert weakly_irreducible(a) == is_connected(h)
    if h.n <= 9:
        assert a.is_symmetric() and lap.is_symmetric()


def test_weak_irreducibility():
    assert weakly_irreducible(adjacency_tensor(gen_single_edge(3)))
    assert not weakly_irreducible(adjacency_tensor(validate(3, 6, [[1, 2, 3], [4, 5, 6]])))
    assert not weakly_irreducible(zero_tensor(3, 2))


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=5, max_size=5),
    st.fractions(min_value=-4, max_value=4, max_denominator=3),
)
def test_apply_is_homogeneous(x, c):
    t = laplacian_tensor(validate(3, 5, [[1, 2, 3], [3, 4, 5]]))
    lhs = apply(t, [c * v for v in x])
    rhs = [c**2 * v for v in apply(t, x)]
    assert lhs == rhs


def test_apply_complex(edge3):
    import cmath

    z = cmath.exp(2j * cmath.pi / 3)
    out = apply(adjacency_tensor(edge3), [1, z, z * z])
    want = [z**3, z**2, z**1]  # x2 x3, x1 x3, x1 x2
    assert all(abs(a - b) < 1e-12 for a, b in zip(out, want))


def test_triple_product_identity_and_scalar(edge3):
    a = adjacency_tensor(edge3)
    assert triple_product([1, 1, 1], a, [1, 1, 1]) == a
    assert diagonal_similarity(a, [5, 5, 5]) == a


def test_triple_product_formula(edge3):
    a = laplacian_tensor(edge3)
    p, q = [2, 3, 5], [7, 11, 13]
    b = triple_product(p, a, q)
    for idx, v in a.items():
        w = p[idx[0] - 1] * v
        for j in idx[1:]:
            w *= q[j - 1]
        assert b.entry(idx) == w


def test_triple_product_rejects_zero(edge3):
    with pytest.raises(ValueError):
        triple_product([1, 0, 1], adjacency_tensor(edge3), [1, 1, 1])


def test_dump_roundtrip(loose_path):
    lap = laplacian_tensor(loose_path)
    text = lap.dump()
    assert load_dump(text, 3, 5) == lap
    assert text.splitlines()[0] == "1 1 1 1 1"


def test_dump_golden(edge3):
    with open("tests/golden/laplacian_edge3.tensor") as fh:
        assert laplacian_tensor(edge3).dump() == fh.read()


def test_rejects_floats():
    with pytest.raises(TypeError):
        CubicalTensor(3, 2, {(1, (1, 2)): 0.5})
