"""k-uniform hypergraphs, the standard families, and binary constructions."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    pass


Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on vertices ``1..n``.

    Build instances through :func:`validate` (or the generators), which
    canonicalise the edge list: each edge ascending, edges lexicographic.
    """

    k: int
    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "edges": [list(e) for e in self.edges]}

    def summary(self) -> str:
        return f"k={self.k} n={self.n} m={self.m}"


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise HypergraphError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise HypergraphError(f"edge {e} has a vertex outside 1..{self.n}")
            key = frozenset(e)
            if key in seen:
                raise HypergraphError(f"duplicate edge {e}")
            seen.add(key)
        object.__setattr__(
            self, "edges", tuple(sorted(tuple(sorted(e)) for e in self.edges))
        )

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls(n, tuple((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls(n, tuple((i, i % n + 1) for i in range(1, n + 1)))

    @classmethod
    def star(cls, leaves: int) -> "SimpleGraph":
        return cls(leaves + 1, tuple((1, i) for i in range(2, leaves + 2)))

    @classmethod
    def petersen(cls) -> "SimpleGraph":
        outer = [(i, i % 5 + 1) for i in range(1, 6)]
        spokes = [(i, i + 5) for i in range(1, 6)]
        inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
        return cls(10, tuple(outer + spokes + inner))

    def as_hypergraph(self) -> Hypergraph:
        """The graph viewed as a 2-uniform hypergraph."""
        return validate(2, self.n, self.edges)


def validate(k: int, n: int, raw_edges: Iterable[Sequence[int]]) -> Hypergraph:
    if k < 2:
        raise HypergraphError(f"uniformity must be at least 2, got {k}")
    if n < 1:
        raise HypergraphError(f"vertex count must be positive, got {n}")
    edges = []
    seen = set()
    for pos, raw in enumerate(raw_edges):
        e = tuple(sorted(int(v) for v in raw))
        if len(e) != k or len(set(e)) != k:
            raise HypergraphError(
                f"edge #{pos} {list(raw)}: expected {k} distinct vertices, got {len(set(e))}"
            )
        for v in e:
            if not 1 <= v <= n:
                raise HypergraphError(f"edge #{pos} {list(raw)}: vertex {v} outside 1..{n}")
        if e in seen:
            raise HypergraphError(f"edge #{pos} {list(raw)}: duplicate edge")
        seen.add(e)
        edges.append(e)
    return Hypergraph(k, n, tuple(sorted(edges)))


def from_json(data: dict | str) -> Hypergraph:
    """Parse the ``{"k": .., "n": .., "edges": [[..], ..]}`` format."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise HypergraphError("top-level JSON value must be an object")
    for key in ("k", "n", "edges"):
        if key not in data:
            raise HypergraphError(f"missing key {key!r}")
    k, n, edges = data["k"], data["n"], data["edges"]
    if not isinstance(k, int) or not isinstance(n, int):
        raise HypergraphError("'k' and 'n' must be integers")
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise HypergraphError("'edges' must be a list of lists")
    for pos, e in enumerate(edges):
        if not all(isinstance(v, int) for v in e):
            raise HypergraphError(f"edge #{pos}: vertices must be integers")
    return validate(k, n, edges)


def is_connected(h: Hypergraph) -> bool:
    parent = list(range(h.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in h.edges:
        r = find(e[0])
        for v in e[1:]:
            rv = find(v)
            if rv != r:
                parent[rv] = r
    root = find(1)
    return all(find(v) == root for v in h.vertices)


def degrees(h: Hypergraph) -> list[int]:
    d = [0] * h.n
    for e in h.edges:
        for v in e:
            d[v - 1] += 1
    return d


def incidence_matrix(h: Hypergraph) -> list[list[int]]:
    """m x n 0/1 matrix, rows in canonical edge order."""
    rows = []
    for e in h.edges:
        row = [0] * h.n
        for v in e:
            row[v - 1] = 1
        rows.append(row)
    return rows


# -- families ---------------------------------------------------------------


def gen_single_edge(k: int) -> Hypergraph:
    return validate(k, k, [range(1, k + 1)])


def gen_complete(n: int, k: int) -> Hypergraph:
    if n < k:
        raise HypergraphError(f"complete hypergraph needs n >= k, got n={n}, k={k}")
    return validate(k, n, itertools.combinations(range(1, n + 1), k))


def gen_power(g: SimpleGraph, k: int) -> Hypergraph:
    """k-th power: each graph edge grows k-2 new vertices, numbered after
    ``g.n`` in canonical edge order."""
    if k < 3:
        raise HypergraphError(f"power hypergraph needs k >= 3, got {k}")
    nxt = g.n + 1
    edges = []
    for u, v in g.edges:
        extra = list(range(nxt, nxt + k - 2))
        nxt += k - 2
        edges.append([u, v, *extra])
    return validate(k, nxt - 1, edges)


def gen_loose_path(k: int, m: int) -> Hypergraph:
    """Loose path with m edges: consecutive edges share exactly one vertex."""
    if m < 1:
        raise HypergraphError("loose path needs at least one edge")
    edges = []
    start = 1
    for _ in range(m):
        edges.append(range(start, start + k))
        start += k - 1
    return validate(k, start, edges)


def gen_squid(k: int, t: int) -> Hypergraph:
    if not 1 <= t <= k:
        raise HypergraphError(f"squid S({k},{t}) needs 1 <= t <= k")
    edges = [list(range(1, k + 1))]
    nxt = k + 1
    for i in range(1, t + 1):
        edges.append([i, *range(nxt, nxt + k - 1)])
        nxt += k - 1
    return validate(k, nxt - 1, edges)


def gen_sunflower(k: int, s: int, p: int) -> Hypergraph:
    if not 1 <= s <= k - 1:
        raise HypergraphError(f"sunflower needs 1 <= s <= k-1, got s={s}")
    if p < 1:
        raise HypergraphError("sunflower needs at least one petal")
    seeds = list(range(1, s + 1))
    edges = []
    nxt = s + 1
    for _ in range(p):
        edges.append(seeds + list(range(nxt, nxt + k - s)))
        nxt += k - s
    return validate(k, nxt - 1, edges)


# -- binary constructions ---------------------------------------------------


def coalesce(h1: Hypergraph, v1: int, h2: Hypergraph, v2: int) -> Hypergraph:
    """Glue ``v1`` of ``h1`` to ``v2`` of ``h2``.

    ``h1`` keeps its labels (the merged vertex is ``v1``); the vertices of
    ``h2`` other than ``v2`` follow as ``h1.n + 1, ...`` in increasing order.
    """
    if h1.k != h2.k:
        raise HypergraphError(f"uniformity mismatch: {h1.k} vs {h2.k}")
    if h1.n < 2 or h2.n < 2:
        raise HypergraphError("coalescence needs nontrivial hypergraphs")
    if not 1 <= v1 <= h1.n:
        raise HypergraphError(f"vertex {v1} not in first hypergraph")
    if not 1 <= v2 <= h2.n:
        raise HypergraphError(f"vertex {v2} not in second hypergraph")
    relabel = {}
    nxt = h1.n + 1
    for v in h2.vertices:
        if v == v2:
            relabel[v] = v1
        else:
            relabel[v] = nxt
            nxt += 1
    edges = list(h1.edges) + [[relabel[v] for v in e] for e in h2.edges]
    return validate(h1.k, h1.n + h2.n - 1, edges)


def cartesian(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Cartesian product; vertex (i, j) gets label ``(i-1) * n2 + j``."""
    if h1.k != h2.k:
        raise HypergraphError(f"uniformity mismatch: {h1.k} vs {h2.k}")
    n2 = h2.n

    def lab(i, j):
        return (i - 1) * n2 + j

    edges = []
    for i in h1.vertices:
        for e in h2.edges:
            edges.append([lab(i, j) for j in e])
    for j in h2.vertices:
        for e in h1.edges:
            edges.append([lab(i, j) for i in e])
    return validate(h1.k, h1.n * h2.n, edges)


def trivial(k: int) -> Hypergraph:
    """One vertex, no edges."""
    return Hypergraph(k, 1, ())
