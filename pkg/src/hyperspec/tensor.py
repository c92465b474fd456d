"""Sparse cubical tensors with exact rational entries.

Every tensor handled here (A(H), L(H), Q(H), their diagonal similarities and
stochastic normalisations) is invariant under permutations of its last k-1
indices. Storage exploits that: one value per ``(i, sorted tail)`` key stands
for all arrangements of the tail, so a complete hypergraph costs C(n, k) * k
keys instead of C(n, k) * k!.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .hypergraph import Hypergraph, degrees

Key = tuple[int, tuple[int, ...]]


def tail_arrangements(tail: Sequence[int]) -> int:
    """Number of distinct orderings of a multiset of indices."""
    out = math.factorial(len(tail))
    for c in Counter(tail).values():
        out //= math.factorial(c)
    return out


@dataclass(frozen=True)
class CubicalTensor:
    """Order-k, dimension-n tensor, 1-indexed, zeros never stored.

    ``data[(i, tail)]`` is the value of every entry ``a[i, *perm(tail)]``;
    ``tail`` is a sorted (k-1)-tuple.
    """

    k: int
    n: int
    data: Mapping[Key, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, tail), v in self.data.items():
            tail = tuple(sorted(tail))
            if len(tail) != self.k - 1:
                raise ValueError(f"index ({i}, {tail}) has wrong order")
            if not 1 <= i <= self.n or any(not 1 <= t <= self.n for t in tail):
                raise ValueError(f"index ({i}, {tail}) outside 1..{self.n}")
            if not isinstance(v, (Fraction, int)):
                raise TypeError(f"entries must be exact rationals, got {type(v).__name__}")
            v = Fraction(v)
            if v:
                clean[(i, tail)] = v
        object.__setattr__(self, "data", clean)

    def entry(self, index: Sequence[int]) -> Fraction:
        return self.data.get((index[0], tuple(sorted(index[1:]))), Fraction(0))

    def items(self) -> Iterable[tuple[tuple[int, ...], Fraction]]:
        """Every nonzero entry with its full index, in canonical order."""
        for (i, tail), v in sorted(self.data.items()):
            for perm in sorted(set(_permutations(tail))):
                yield (i, *perm), v

    def nnz(self) -> int:
        return sum(tail_arrangements(t) for (_, t) in self.data)

    def row_sums(self) -> list[Fraction]:
        """``sum over i2..ik of a[i, i2, .., ik]`` for each i."""
        sums = [Fraction(0)] * self.n
        for (i, tail), v in self.data.items():
            sums[i - 1] += v * tail_arrangements(tail)
        return sums

    def is_symmetric(self) -> bool:
        for idx, v in self.items():
            for perm in set(_permutations(idx)):
                if self.entry(perm) != v:
                    return False
        return True

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self.data.values())

    def __add__(self, other: "CubicalTensor") -> "CubicalTensor":
        _check_shape(self, other)
        out = dict(self.data)
        for key, v in other.data.items():
            out[key] = out.get(key, Fraction(0)) + v
        return CubicalTensor(self.k, self.n, out)

    def __neg__(self) -> "CubicalTensor":
        return CubicalTensor(self.k, self.n, {key: -v for key, v in self.data.items()})

    def __sub__(self, other: "CubicalTensor") -> "CubicalTensor":
        return self + (-other)

    def scale(self, c) -> "CubicalTensor":
        c = Fraction(c)
        return CubicalTensor(self.k, self.n, {key: c * v for key, v in self.data.items()})

    def dump(self) -> str:
        """One ``i1 .. ik numerator denominator`` line per nonzero entry."""
        lines = []
        for idx, v in self.items():
            lines.append(" ".join(map(str, idx)) + f" {v.numerator} {v.denominator}")
        return "\n".join(lines) + ("\n" if lines else "")


def _permutations(t: Sequence[int]):
    import itertools

    return itertools.permutations(t)


def _check_shape(a: CubicalTensor, b: CubicalTensor) -> None:
    if (a.k, a.n) != (b.k, b.n):
        raise ValueError(f"shape mismatch: ({a.k},{a.n}) vs ({b.k},{b.n})")


def load_dump(text: str, k: int, n: int) -> CubicalTensor:
    data = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        parts = [int(x) for x in line.split()]
        idx, num, den = parts[:k], parts[k], parts[k + 1]
        key = (idx[0], tuple(sorted(idx[1:])))
        v = Fraction(num, den)
        if key in data and data[key] != v:
            raise ValueError(f"entry {idx} breaks tail symmetry")
        data[key] = v
    return CubicalTensor(k, n, data)


def identity_tensor(k: int, n: int) -> CubicalTensor:
    return CubicalTensor(k, n, {(i, (i,) * (k - 1)): Fraction(1) for i in range(1, n + 1)})


def zero_tensor(k: int, n: int) -> CubicalTensor:
    return CubicalTensor(k, n, {})


def adjacency_tensor(h: Hypergraph) -> CubicalTensor:
    w = Fraction(1, math.factorial(h.k - 1))
    data = {}
    for e in h.edges:
        for v in e:
            data[(v, tuple(u for u in e if u != v))] = w
    return CubicalTensor(h.k, h.n, data)


def degree_tensor(h: Hypergraph) -> CubicalTensor:
    return CubicalTensor(
        h.k, h.n, {(v, (v,) * (h.k - 1)): Fraction(d) for v, d in enumerate(degrees(h), 1)}
    )


def laplacian_tensor(h: Hypergraph) -> CubicalTensor:
    return degree_tensor(h) - adjacency_tensor(h)


def signless_laplacian_tensor(h: Hypergraph) -> CubicalTensor:
    return degree_tensor(h) + adjacency_tensor(h)


def hypergraph_tensor(h: Hypergraph, op: str) -> CubicalTensor:
    """``op`` is one of ``adj``, ``lap``, ``slap``."""
    if op in ("adj", "adjacency"):
        return adjacency_tensor(h)
    if op in ("lap", "laplacian"):
        return laplacian_tensor(h)
    if op in ("slap", "signless"):
        return signless_laplacian_tensor(h)
    raise ValueError(f"unknown operator {op!r}")


def apply(t: CubicalTensor, x: Sequence) -> list:
    """The vector ``T x^{k-1}``.

    Works for exact (int/Fraction) and floating/complex ``x``; the scalar type
    of the result follows ``x``.
    """
    if len(x) != t.n:
        raise ValueError(f"vector has length {len(x)}, tensor dimension is {t.n}")
    exact = all(isinstance(v, (int, Fraction)) for v in x)
    out = [Fraction(0) if exact else 0.0 for _ in range(t.n)]
    for (i, tail), v in t.data.items():
        prod = 1
        for j in tail:
            prod *= x[j - 1]
        coef = v * tail_arrangements(tail)
        out[i - 1] += (coef if exact else _numeric(coef)) * prod
    return out


def _numeric(c: Fraction):
    return c.numerator / c.denominator


def weakly_irreducible(t: CubicalTensor) -> bool:
    """Strong connectivity of the digraph with an arc i -> j whenever some
    nonzero entry has first index i and j among the others."""
    if t.n == 1:
        return True
    succ = [set() for _ in range(t.n + 1)]
    pred = [set() for _ in range(t.n + 1)]
    for (i, tail) in t.data:
        for j in tail:
            if j != i:
                succ[i].add(j)
                pred[j].add(i)

    def reach(adj):
        seen = {1}
        queue = deque([1])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == t.n

    return reach(succ) and reach(pred)


def _diag(values: Sequence, n: int) -> list[Fraction]:
    vals = [Fraction(v) for v in values]
    if len(vals) != n:
        raise ValueError(f"diagonal has length {len(vals)}, expected {n}")
    if any(v == 0 for v in vals):
        raise ValueError("diagonal scaling has a zero entry")
    return vals


def triple_product(p: Sequence, t: CubicalTensor, q: Sequence) -> CubicalTensor:
    """``(P T Q)[i1..ik] = p[i1] * t[i1..ik] * q[i2] * .. * q[ik]`` for
    diagonal P, Q given by their diagonals."""
    pv = _diag(p, t.n)
    qv = _diag(q, t.n)
    data = {}
    for (i, tail), v in t.data.items():
        w = pv[i - 1] * v
        for j in tail:
            w *= qv[j - 1]
        data[(i, tail)] = w
    return CubicalTensor(t.k, t.n, data)


def diagonal_similarity(t: CubicalTensor, d: Sequence) -> CubicalTensor:
    """``D^{-(k-1)} T D``."""
    dv = _diag(d, t.n)
    return triple_product([1 / v ** (t.k - 1) for v in dv], t, dv)
