"""Named instances used by ``hyperspec verify --corpus`` and the test suite."""

from __future__ import annotations

from .eigenvariety import Family, build_family
from .hypergraph import Hypergraph, SimpleGraph, cartesian, coalesce, gen_loose_path, gen_single_edge

GRAPHS = {
    "edge": SimpleGraph.path(2),
    "path4": SimpleGraph.path(4),
    "cycle5": SimpleGraph.cycle(5),
    "star4": SimpleGraph.star(4),
    "petersen": SimpleGraph.petersen(),
}

# (name, family or None, builder)
_DEFAULT = [
    ("edge3", Family("edge", (3,))),
    ("edge4", Family("edge", (4,))),
    ("loose_path3_2", Family("loose_path", (3, 2))),
    ("complete4_3", Family("complete", (4, 3))),
    ("complete5_3", Family("complete", (5, 3))),
    ("squid3_1", Family("squid", (3, 1))),
    ("squid3_2", Family("squid", (3, 2))),
    ("squid3_3", Family("squid", (3, 3))),
    ("sunflower3_1_2", Family("sunflower", (3, 1, 2))),
    ("sunflower3_2_2", Family("sunflower", (3, 2, 2))),
    ("sunflower3_2_3", Family("sunflower", (3, 2, 3))),
    ("power3_path3", Family("power", (3, "path", 3))),
    ("power3_path4", Family("power", (3, "path", 4))),
]

_EXTENDED = [
    ("power3_triangle", Family("power", (3, "triangle"))),
    ("sunflower3_2_4", Family("sunflower", (3, 2, 4))),
]


def _composites() -> list[tuple[str, Hypergraph]]:
    e3 = gen_single_edge(3)
    lp = gen_loose_path(3, 2)
    return [
        ("coalesce_edge3_edge3", coalesce(e3, 3, e3, 1)),
        ("coalesce_path_edge3", coalesce(lp, 5, e3, 1)),
        ("cartesian_edge3_edge3", cartesian(e3, e3)),
    ]


def default_corpus() -> list[tuple[str, Hypergraph]]:
    out = [(name, build_family(fam)) for name, fam in _DEFAULT]
    out += [(f"graph_{name}", g.as_hypergraph()) for name, g in GRAPHS.items()]
    out += _composites()
    return out


def extended_corpus() -> list[tuple[str, Hypergraph]]:
    """Default corpus plus instances whose charpoly takes minutes."""
    return default_corpus() + [(name, build_family(fam)) for name, fam in _EXTENDED]


def family_of(name: str) -> Family | None:
    for n, fam in _DEFAULT + _EXTENDED:
        if n == name:
            return fam
    return None
