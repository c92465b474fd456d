import pytest

from hyperspec.corpus import default_corpus
from hyperspec.hypergraph import gen_complete, gen_loose_path, gen_single_edge
from hyperspec.macaulay import basis_size


@pytest.fixture
def edge3():
    return gen_single_edge(3)


@pytest.fixture
def loose_path():
    return gen_loose_path(3, 2)


@pytest.fixture
def k4():
    return gen_complete(4, 3)


CORPUS = default_corpus()
SMALL = [(name, h) for name, h in CORPUS if basis_size(h.n, h.k) <= 220]


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
