from fractions import Fraction

import pytest

from hyperspec import eigenvariety as ev
from hyperspec.corpus import extended_corpus, family_of
from hyperspec.hypergraph import SimpleGraph, cartesian, coalesce, gen_complete, gen_squid
from hyperspec.macaulay import SizeGuardError
from hyperspec.multiplicity import (
    am_family_oracle,
    am_rho_adjacency,
    am_zero_laplacian,
    composite_multiplicity,
    multiplicity_of_largest_root,
    verify_main_theorem,
)
from hyperspec.poly import UniPoly, count_real_roots
from hyperspec.spectral import perron
from hyperspec.tensor import adjacency_tensor

from .conftest import SMALL

X = UniPoly.x()


def test_largest_root_multiplicity_on_known_polys():
    f = (X - 2) ** 3 * (X + 5) ** 2 * (X**2 - 2)
    r = multiplicity_of_largest_root(f)
    assert r.multiplicity == 3 and r.interval[0] <= 2 <= r.interval[1]
    g = (X**2 - 3) ** 2 * (X - 1) ** 4
    r = multiplicity_of_largest_root(g)
    assert r.multiplicity == 2
    assert r.factor == X**2 - 3


def test_close_roots_are_separated():
    f = (X - 1) ** 2 * (X - 1 - Fraction(1, 10**9))
    assert multiplicity_of_largest_root(f).multiplicity == 1


def test_coarse_precision_still_isolates():
    f = (X - 1) ** 2 * (X - 1 - Fraction(1, 10**15))
    r = multiplicity_of_largest_root(f, precision=Fraction(1, 10**6))
    assert r.multiplicity == 1
    lo, hi = r.interval
    if lo == hi:
        assert f(lo) == 0 and lo > 1
    else:
        assert count_real_roots(X - 1, lo, hi) == 0
        assert count_real_roots(f, lo, hi) == 1


def test_am_examples(edge3, loose_path, k4):
    assert am_rho_adjacency(edge3) == am_zero_laplacian(edge3) == 3
    assert am_rho_adjacency(loose_path) == am_zero_laplacian(loose_path) == 9
    assert am_rho_adjacency(k4) == am_zero_laplacian(k4) == 1


def test_verify_single_edge(edge3):
    rep = verify_main_theorem(edge3)
    assert rep.values == {
        "am_rho": 3,
        "am_zero_laplacian": 3,
        "ev_cardinality": 3,
        "macaulay_nullity": 3,
        "phase_count": 3,
    }
    assert rep.all_equal and rep.skipped == []
    assert "timings" not in rep.to_json()


def test_verify_complete():
    rep = verify_main_theorem(gen_complete(5, 3))
    assert set(rep.values.values()) == {1}


def test_verify_skips_beyond_guard():
    rep = verify_main_theorem(gen_squid(3, 3))
    assert rep.skipped == ["am_rho", "am_zero_laplacian", "macaulay_nullity"]
    assert rep.ev_cardinality == rep.phase_count == 81
    assert rep.all_equal


def test_guard_error_from_am():
    with pytest.raises(SizeGuardError):
        am_rho_adjacency(gen_squid(3, 3))


@pytest.mark.parametrize(
    "fam,value",
    [
        (ev.Family("power", (3, "triangle")), 9),
        (ev.Family("cored", (3, 7, 3)), 27),
        (ev.Family("squid", (4, 2)), 4096),
    ],
)
def test_am_family_oracle(fam, value):
    assert am_family_oracle(fam) == value


def test_composite_multiplicity(edge3, loose_path):
    assert composite_multiplicity(edge3, edge3, "coalesce") == 9
    assert am_rho_adjacency(coalesce(edge3, 3, edge3, 1)) == 9
    assert composite_multiplicity(loose_path, edge3, "coalesce") == 27
    assert composite_multiplicity(edge3, edge3, "cartesian") == 27
    with pytest.raises(ValueError):
        composite_multiplicity(edge3, edge3, "join")


def test_cartesian_spectral_radius_adds(edge3, loose_path):
    r1 = perron(adjacency_tensor(edge3)).rho
    r2 = perron(adjacency_tensor(loose_path)).rho
    rho = perron(adjacency_tensor(cartesian(edge3, loose_path))).rho
    assert abs(rho - (r1 + r2)) < 1e-8


def test_graph_case_is_simple():
    for g in (SimpleGraph.path(4), SimpleGraph.cycle(5), SimpleGraph.star(4)):
        h = g.as_hypergraph()
        assert am_rho_adjacency(h) == 1 == am_zero_laplacian(h)


@pytest.mark.parametrize("name,h", SMALL)
def test_corpus_four_way(name, h):
    rep = verify_main_theorem(h)
    assert rep.all_equal, rep.values
    assert len(rep.values) == 5


EXTRA = [(name, h) for name, h in extended_corpus() if name in ("power3_triangle", "sunflower3_2_4")]


@pytest.mark.slow
@pytest.mark.parametrize("name,h", EXTRA)
def test_extended_four_way(name, h):
    rep = verify_main_theorem(h)
    assert rep.all_equal and rep.skipped == []
    assert rep.am_rho == am_family_oracle(family_of(name))
