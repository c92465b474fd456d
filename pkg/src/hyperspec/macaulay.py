"""Macaulay matrices for the tensor eigen-system and the characteristic
polynomial as a quotient of two matrix characteristic polynomials.

For a tensor T of order k and dimension n the system is
``lambda * x_i^(k-1) - (T x^(k-1))_i``, i = 1..n, all of degree k-1, so the
Macaulay degree is ``d = n(k-1) - n + 1``. The Macaulay matrix of that system
is ``lambda * I - M`` with M the Macaulay matrix of ``F_i = (T x^(k-1))_i``;
hence ``det(lambda I - M) / det(lambda I' - M')`` is the characteristic
polynomial of T.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .hypergraph import Hypergraph, degrees, is_connected
from .poly import ExactDivisionError, UniPoly, exact_div
from .tensor import CubicalTensor, laplacian_tensor, tail_arrangements

DEFAULT_GUARD = 1500

Monomial = tuple[int, ...]


class SizeGuardError(RuntimeError):
    """The monomial basis would exceed the configured cap."""

    def __init__(self, n: int, k: int, size: int, cap: int):
        self.n, self.k, self.size, self.cap = n, k, size, cap
        super().__init__(
            f"Macaulay basis for n={n}, k={k} has C({n * (k - 1)}, {n - 1}) = {size} "
            f"monomials, above the cap of {cap} (set HYPERSPEC_GUARD to raise it)"
        )


class ConstructionError(AssertionError):
    """A structural identity that must hold exactly did not."""


def guard_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("HYPERSPEC_GUARD")
    return int(env) if env else DEFAULT_GUARD


def macaulay_degree(n: int, k: int) -> int:
    return n * (k - 1) - n + 1


def basis_size(n: int, k: int) -> int:
    d = macaulay_degree(n, k)
    return math.comb(d + n - 1, n - 1)


def check_guard(n: int, k: int, cap: int | None = None) -> None:
    cap = guard_cap(cap)
    size = basis_size(n, k)
    if size > cap:
        raise SizeGuardError(n, k, size, cap)


def _monomials(n: int, d: int):
    """Exponent vectors of total degree d, lexicographically descending."""
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _monomials(n - 1, d - a):
            yield (a, *rest)


@dataclass(frozen=True)
class MonomialBasis:
    n: int
    k: int
    degree: int
    monomials: tuple[Monomial, ...]
    classes: tuple[int, ...]  # 1-based class label i of S_i
    reduced: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def index(self) -> dict[Monomial, int]:
        return {m: j for j, m in enumerate(self.monomials)}

    def label(self, j: int) -> str:
        parts = []
        for v, e in enumerate(self.monomials[j], 1):
            if e == 1:
                parts.append(f"x{v}")
            elif e > 1:
                parts.append(f"x{v}^{e}")
        return "*".join(parts) or "1"


def build_basis(n: int, k: int, cap: int | None = None) -> MonomialBasis:
    if n < 1 or k < 2:
        raise ValueError(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    check_guard(n, k, cap)
    d = macaulay_degree(n, k)
    mons = tuple(_monomials(n, d))
    classes = []
    reduced = []
    for a in mons:
        hits = [i for i, e in enumerate(a, 1) if e >= k - 1]
        classes.append(hits[0])
        reduced.append(len(hits) == 1)
    return MonomialBasis(n, k, d, mons, tuple(classes), tuple(reduced))


@dataclass(frozen=True)
class MacaulayPair:
    """M (all monomials) and M' (non-reduced monomials only), as sparse rows.

    Rows and columns of M share the ordering of ``basis``; ``sub_index`` lists
    the positions in that ordering kept in M'.
    """

    basis: MonomialBasis
    m: tuple[dict[int, Fraction], ...]
    m_sub: tuple[dict[int, Fraction], ...]
    sub_index: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.m)

    def dense(self, sub: bool = False) -> list[list[Fraction]]:
        rows = self.m_sub if sub else self.m
        width = len(rows)
        return [[row.get(j, Fraction(0)) for j in range(width)] for row in rows]

    def to_csv(self, sub: bool = False) -> str:
        idx = self.sub_index if sub else tuple(range(self.size))
        labels = [self.basis.label(j) for j in idx]
        lines = ["monomial," + ",".join(labels)]
        for lab, row in zip(labels, self.dense(sub)):
            lines.append(lab + "," + ",".join(_fmt(v) for v in row))
        return "\n".join(lines) + "\n"


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _polynomial_rows(t: CubicalTensor) -> list[list[tuple[Monomial, Fraction]]]:
    """Terms of F_i = (T x^(k-1))_i as (exponent vector, coefficient)."""
    rows: list[list[tuple[Monomial, Fraction]]] = [[] for _ in range(t.n)]
    for (i, tail), v in sorted(t.data.items()):
        e = [0] * t.n
        for j in tail:
            e[j - 1] += 1
        rows[i - 1].append((tuple(e), v * tail_arrangements(tail)))
    return rows


def macaulay_matrices(t: CubicalTensor, cap: int | None = None) -> MacaulayPair:
    basis = build_basis(t.n, t.k, cap)
    where = basis.index()
    terms = _polynomial_rows(t)
    km1 = t.k - 1
    rows = []
    for alpha, i in zip(basis.monomials, basis.classes):
        shift = list(alpha)
        shift[i - 1] -= km1
        row: dict[int, Fraction] = {}
        for e, c in terms[i - 1]:
            beta = tuple(s + x for s, x in zip(shift, e))
            col = where[beta]
            row[col] = row.get(col, Fraction(0)) + c
        rows.append({j: v for j, v in row.items() if v})
    keep = tuple(j for j, r in enumerate(basis.reduced) if not r)
    pos = {j: p for p, j in enumerate(keep)}
    sub = []
    for j in keep:
        sub.append({pos[c]: v for c, v in rows[j].items() if c in pos})
    return MacaulayPair(basis, tuple(rows), tuple(sub), keep)


def expected_degree(n: int, k: int) -> int:
    return n * (k - 1) ** (n - 1)


@dataclass(frozen=True)
class CharpolyResult:
    poly: UniPoly
    charpoly_m: UniPoly
    charpoly_m_sub: UniPoly
    basis_size: int


def tensor_charpoly_full(t: CubicalTensor, cap: int | None = None) -> CharpolyResult:
    pair = macaulay_matrices(t, cap)
    cm = linalg.charpoly_matrix(pair.m, pair.size)
    cms = linalg.charpoly_matrix(pair.m_sub, len(pair.m_sub))
    try:
        phi = exact_div(cm, cms)
    except ExactDivisionError as exc:
        raise ConstructionError(f"det(lI - M) not divisible by det(lI' - M'): {exc}") from exc
    want = expected_degree(t.n, t.k)
    if phi.degree != want:
        raise ConstructionError(f"characteristic polynomial has degree {phi.degree}, expected {want}")
    return CharpolyResult(phi, cm, cms, pair.size)


def tensor_charpoly(t: CubicalTensor, cap: int | None = None) -> UniPoly:
    """Characteristic polynomial of T as ``charpoly(M) / charpoly(M')``."""
    return tensor_charpoly_full(t, cap).poly


def laplacian_row_stochastic_check(h: Hypergraph, cap: int | None = None) -> list[list[Fraction]]:
    """Return ``I - M / Delta`` for the Laplacian Macaulay matrix M, after
    checking exactly that it is nonnegative with unit row sums."""
    if not is_connected(h):
        raise ValueError("hypergraph is not connected")
    pair = macaulay_matrices(laplacian_tensor(h), cap)
    delta = max(degrees(h))
    size = pair.size
    out = []
    for r, row in enumerate(pair.m):
        if sum(row.values(), Fraction(0)) != 0:
            raise ConstructionError(f"row {pair.basis.label(r)} of M does not sum to zero")
        dense = [-row.get(j, Fraction(0)) / delta for j in range(size)]
        dense[r] += 1
        if any(v < 0 for v in dense):
            raise ConstructionError(f"row {pair.basis.label(r)} of I - M/Delta has a negative entry")
        if sum(dense) != 1:
            raise ConstructionError(f"row {pair.basis.label(r)} of I - M/Delta does not sum to 1")
        out.append(dense)
    return out


def macaulay_nullity(t: CubicalTensor, cap: int | None = None) -> int:
    pair = macaulay_matrices(t, cap)
    return linalg.nullity_rational(pair.m, pair.size)


def macaulay_nullity_laplacian(h: Hypergraph, cap: int | None = None) -> int:
    if not is_connected(h):
        raise ValueError("hypergraph is not connected")
    return macaulay_nullity(laplacian_tensor(h), cap)
