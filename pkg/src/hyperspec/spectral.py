"""Perron data of nonnegative weakly irreducible tensors, and the stochastic
normalisation ``rho * B = U^-(k-1) T U``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .macaulay import macaulay_matrices
from .tensor import CubicalTensor, tail_arrangements, triple_product, weakly_irreducible


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class PerronData:
    rho: float
    u: tuple[float, ...]  # positive, max-norm 1
    iterations: int
    residual: float


class _NumericTensor:
    """Float view of a tensor for fast repeated ``T x^(k-1)``."""

    def __init__(self, t: CubicalTensor):
        keys = sorted(t.data)
        self.n = t.n
        self.k = t.k
        self.rows = np.array([i - 1 for i, _ in keys], dtype=np.intp)
        self.tails = np.array([[j - 1 for j in tail] for _, tail in keys], dtype=np.intp).reshape(
            len(keys), t.k - 1
        )
        self.coef = np.array([float(t.data[key] * tail_arrangements(key[1])) for key in keys])

    def apply(self, x: np.ndarray) -> np.ndarray:
        prod = x[self.tails].prod(axis=1) if len(self.coef) else np.zeros(0)
        return np.bincount(self.rows, weights=self.coef * prod, minlength=self.n)


def perron(t: CubicalTensor, tol: float = 1e-12, max_iter: int = 100_000) -> PerronData:
    """Spectral radius and positive eigenvector by power iteration on T + I.

    The shift makes the iteration converge on non-primitive instances;
    progress is measured by the spread of the Collatz-Wielandt ratios
    ``(T x^(k-1))_i / x_i^(k-1)``, which bracket rho.
    """
    if not t.is_nonnegative():
        raise ValueError("tensor has negative entries")
    if not t.data or not weakly_irreducible(t):
        raise ValueError("tensor is not weakly irreducible")
    nt = _NumericTensor(t)
    km1 = t.k - 1
    x = np.ones(t.n)
    for it in range(1, max_iter + 1):
        y = nt.apply(x)
        ratios = y / x**km1
        lo, hi = ratios.min(), ratios.max()
        if hi - lo <= tol * max(1.0, hi):
            rho = 0.5 * (lo + hi)
            resid = float(np.abs(y - rho * x**km1).max())
            return PerronData(float(rho), tuple(float(v) for v in x), it, resid)
        x = (y + x**km1) ** (1.0 / km1)
        x /= x.max()
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps (spread {hi - lo:.3e})")


def row_sum_bounds(t: CubicalTensor) -> tuple[float, float]:
    sums = t.row_sums()
    return float(min(sums)), float(max(sums))


def stochastic_normalize(t: CubicalTensor, data: PerronData, tol: float = 1e-10) -> CubicalTensor:
    """``B = (1/rho) U^-(k-1) T U`` with ``U = diag(u)``; checks that every row
    of B sums to 1 within ``tol``. Floats enter as exact dyadic rationals."""
    u = [Fraction(v) for v in data.u]
    b = triple_product([1 / v ** (t.k - 1) for v in u], t, u).scale(1 / Fraction(data.rho))
    worst = max(abs(float(s) - 1.0) for s in b.row_sums())
    if worst > tol:
        raise ValueError(f"row sums of the normalised tensor deviate from 1 by {worst:.3e}")
    return b


def stochastic_macaulay_check(b: CubicalTensor, tol: float = 1e-9, cap: int | None = None) -> bool:
    """Whether the Macaulay matrix of B is row-stochastic within ``tol``."""
    pair = macaulay_matrices(b, cap)
    for row in pair.m:
        if any(v < 0 for v in row.values()):
            return False
        if abs(float(sum(row.values(), Fraction(0))) - 1.0) > tol:
            return False
    return True
