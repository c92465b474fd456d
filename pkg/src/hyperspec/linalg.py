"""Exact linear algebra over Z and Q.

Matrices are passed as sequences of rows. A row may be a dense sequence or a
``{column: value}`` mapping (sparse); ``ncols`` must then be given where it
cannot be inferred. Values are ints or :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .poly import UniPoly

Row = Sequence | Mapping[int, object]


def _row_items(row: Row):
    if isinstance(row, Mapping):
        return row.items()
    return ((j, v) for j, v in enumerate(row) if v != 0)


def integerize(rows: Sequence[Row]) -> tuple[list[dict[int, int]], int]:
    """Scale a rational matrix by the lcm ``D`` of its denominators.

    Returns sparse integer rows and ``D``.
    """
    den = 1
    for row in rows:
        for _, v in _row_items(row):
            den = math.lcm(den, Fraction(v).denominator)
    out = []
    for row in rows:
        out.append({j: int(Fraction(v) * den) for j, v in _row_items(row) if v != 0})
    return out, den


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def _primes_below(limit: int):
    q = limit - 1 if limit % 2 == 0 else limit - 2
    while q > 2:
        if _is_prime(q):
            yield q
        q -= 2


def _hessenberg_charpoly_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Characteristic polynomial of ``a`` over GF(p), constant term first.

    Reduction to upper Hessenberg form by elementary similarities, then the
    standard Hessenberg recurrence for the leading principal minors.
    Requires ``n * p**2 < 2**63``.
    """
    n = a.shape[0]
    h = a % p
    for j in range(n - 2):
        col = h[j + 1 :, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            h[[piv, j + 1], :] = h[[j + 1, piv], :]
            h[:, [piv, j + 1]] = h[:, [j + 1, piv]]
        inv = pow(int(h[j + 1, j]), -1, p)
        u = (h[j + 2 :, j] * inv) % p
        if not u.any():
            continue
        # columns left of j are already zero below the subdiagonal
        block = h[j + 2 :, j:]
        block -= np.outer(u, h[j + 1, j:])
        block %= p
        h[:, j + 1] = (h[:, j + 1] + h[:, j + 2 :] @ u) % p

    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    prods = np.zeros(n + 1, dtype=np.int64)
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur = (cur - int(h[m - 1, m - 1]) * prev) % p
        if m > 1:
            # prods[i] holds h[i, i-1] * ... * h[m-1, m-2] for i = 1..m-1
            prods[m - 1] = 1
            prods[1:m] = (prods[1:m] * int(h[m - 1, m - 2])) % p
            c = (h[0 : m - 1, m - 1] * prods[1:m]) % p
            cur = (cur - c @ polys[0 : m - 1]) % p
        polys[m] = cur
    return polys[n]


def _coefficient_bound(rows: list[dict[int, int]]) -> int:
    """Bound on |coefficient| of det(xI - N): each principal minor is at most
    the product of the 1-norms of its rows (Hadamard)."""
    b = 1
    for row in rows:
        b *= 1 + sum(abs(v) for v in row.values())
    return b


def integer_charpoly(rows: list[dict[int, int]], n: int) -> list[int]:
    """Characteristic polynomial of an integer matrix via Hessenberg forms
    modulo word-size primes and Chinese remaindering. Exact: enough primes are
    taken to exceed twice the a-priori coefficient bound."""
    if n == 0:
        return [1]
    dense = np.zeros((n, n), dtype=object)
    for i, row in enumerate(rows):
        for j, v in row.items():
            dense[i, j] = v
    bound = 2 * _coefficient_bound(rows) + 1
    limit = math.isqrt((2**63 - 1) // (n + 1))
    limit = min(limit, 2**31)
    modulus = 1
    residues: list[int] | None = None
    for p in _primes_below(limit):
        a = np.array((dense % p).tolist(), dtype=np.int64).reshape(n, n)
        cp = [int(v) for v in _hessenberg_charpoly_mod(a, p)]
        if residues is None:
            residues = cp
        else:
            inv = pow(modulus % p, -1, p)
            residues = [
                x + modulus * (((r - x) * inv) % p) for x, r in zip(residues, cp)
            ]
        modulus *= p
        if modulus > bound:
            break
    half = modulus // 2
    return [x - modulus if x > half else x for x in residues]


def charpoly_matrix(rows: Sequence[Row], n: int | None = None) -> UniPoly:
    """``det(x I - M)`` for a square rational matrix, exactly."""
    if n is None:
        n = len(rows)
    if len(rows) != n:
        raise ValueError("matrix is not square")
    ints, den = integerize(rows)
    for row in ints:
        if row and max(row) >= n:
            raise ValueError("matrix is not square")
    cp = integer_charpoly(ints, n)
    # det(xI - N/D) = D^-n * det(D x I - N)
    return UniPoly([Fraction(c, den ** (n - i)) for i, c in enumerate(cp)])


def det_bareiss(rows: Sequence[Row], n: int | None = None) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    if n is None:
        n = len(rows)
    ints, den = integerize(rows)
    a = [[0] * n for _ in range(n)]
    for i, row in enumerate(ints):
        for j, v in row.items():
            a[i][j] = v
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    d = a[n - 1][n - 1] if n else 1
    return Fraction(sign * d, den**n)


def charpoly_interpolate(rows: Sequence[Row], n: int | None = None) -> UniPoly:
    """``det(x I - M)`` by evaluating Bareiss determinants at ``0..n`` and
    Lagrange interpolation. Slow; kept as an independent cross-check."""
    if n is None:
        n = len(rows)
    dense = [[Fraction(0)] * n for _ in range(n)]
    for i, row in enumerate(rows):
        for j, v in _row_items(row):
            dense[i][j] = Fraction(v)
    xs = list(range(n + 1))
    ys = []
    for t in xs:
        shifted = [[(t if i == j else 0) - dense[i][j] for j in range(n)] for i in range(n)]
        ys.append(det_bareiss(shifted, n))
    result = UniPoly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = UniPoly([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UniPoly([-xj, 1])
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


def rank_rational(rows: Sequence[Row], ncols: int | None = None) -> int:
    """Exact rank over Q by sparse integer elimination with content removal."""
    ints, _ = integerize(rows)
    pivots: dict[int, dict[int, int]] = {}
    for row in ints:
        r = dict(row)
        while r:
            lead = min(r)
            piv = pivots.get(lead)
            if piv is None:
                g = 0
                for v in r.values():
                    g = math.gcd(g, v)
                if g > 1:
                    r = {j: v // g for j, v in r.items()}
                pivots[lead] = r
                break
            a, b = piv[lead], r[lead]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {j: a * v for j, v in r.items()}
            for j, v in piv.items():
                w = new.get(j, 0) - b * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            g = 0
            for v in new.values():
                g = math.gcd(g, v)
            if g > 1:
                new = {j: v // g for j, v in new.items()}
            r = new
    return len(pivots)


def nullity_rational(rows: Sequence[Row], ncols: int | None = None) -> int:
    """Dimension of the right kernel of a rational matrix."""
    if ncols is None:
        if not rows:
            return 0
        first = rows[0]
        if isinstance(first, Mapping):
            raise ValueError("ncols is required for sparse rows")
        ncols = len(first)
    return ncols - rank_rational(rows, ncols)


@dataclass(frozen=True)
class SnfResult:
    """Smith form ``U @ B @ V == diag(invariants)`` (padded with zeros)."""

    invariants: tuple[int, ...]
    u: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(1 for s in self.invariants if s != 0)


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def snf_integer(b: Sequence[Sequence[int]], ncols: int | None = None) -> SnfResult:
    """Smith normal form of an integer matrix with unimodular witnesses.

    Pivots are chosen by smallest nonzero absolute value. ``invariants`` has
    ``min(rows, cols)`` entries, nonnegative, each dividing the next nonzero.
    """
    m = len(b)
    if ncols is None:
        ncols = len(b[0]) if m else 0
    n = ncols
    a = [list(map(int, row)) for row in b]
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        if q:
            ra, rs = a[dst], a[src]
            for j in range(n):
                ra[j] -= q * rs[j]
            ua, us = u[dst], u[src]
            for j in range(m):
                ua[j] -= q * us[j]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        if q:
            for row in a:
                row[dst] -= q * row[src]
            for row in v:
                row[dst] -= q * row[src]

    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: pivot must divide the whole trailing block
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    inv = tuple(a[i][i] for i in range(min(m, n)))
    return SnfResult(inv, tuple(map(tuple, u)), tuple(map(tuple, v)))
