"""Algebraic multiplicities of rho for A(H) and of 0 for L(H), and the
four-way comparison with the eigenvariety size and the Macaulay nullity."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import eigenvariety as ev
from .hypergraph import Hypergraph, HypergraphError, is_connected
from .macaulay import SizeGuardError, check_guard, macaulay_nullity_laplacian, tensor_charpoly
from .poly import UniPoly, count_real_roots, isolate_largest_real_root, squarefree_decompose
from .tensor import adjacency_tensor, laplacian_tensor

ROOT_PRECISION = Fraction(1, 10**12)


class AmbiguousRootError(ArithmeticError):
    pass


def _require_connected(h: Hypergraph) -> None:
    if not is_connected(h):
        raise HypergraphError("hypergraph is not connected")


def am_zero_laplacian(h: Hypergraph, cap: int | None = None) -> int:
    _require_connected(h)
    return tensor_charpoly(laplacian_tensor(h), cap).trailing_zeros()


@dataclass(frozen=True)
class RootMultiplicity:
    multiplicity: int
    interval: tuple[Fraction, Fraction]
    factor: UniPoly


def multiplicity_of_largest_root(f: UniPoly, precision=ROOT_PRECISION) -> RootMultiplicity:
    """Multiplicity of the largest real root of f, read off the square-free
    decomposition: the exponent of the one factor with a root in the
    isolating interval."""
    lo, hi = isolate_largest_real_root(f, precision)
    hits = []
    for p, m in squarefree_decompose(f):
        if lo == hi:
            inside = p(lo) == 0
        else:
            inside = count_real_roots(p, lo, hi) > 0
        if inside:
            hits.append((p, m))
    if len(hits) != 1:
        raise AmbiguousRootError(f"{len(hits)} square-free factors claim the root in ({lo}, {hi}]")
    p, m = hits[0]
    return RootMultiplicity(m, (lo, hi), p)


def am_rho_adjacency(h: Hypergraph, cap: int | None = None) -> int:
    _require_connected(h)
    return multiplicity_of_largest_root(tensor_charpoly(adjacency_tensor(h), cap)).multiplicity


@dataclass
class VerificationReport:
    summary: str
    k: int
    n: int
    m: int
    am_rho: int | None = None
    am_zero_laplacian: int | None = None
    ev_cardinality: int | None = None
    macaulay_nullity: int | None = None
    phase_count: int | None = None
    rho_interval: tuple[str, str] | None = None
    skipped: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def values(self) -> dict[str, int]:
        keys = ("am_rho", "am_zero_laplacian", "ev_cardinality", "macaulay_nullity", "phase_count")
        return {key: getattr(self, key) for key in keys if getattr(self, key) is not None}

    @property
    def all_equal(self) -> bool:
        return len(set(self.values.values())) == 1

    def to_json(self, timings: bool = False) -> dict:
        out = asdict(self)
        if not timings:
            out.pop("timings")
        out["all_equal"] = self.all_equal
        if self.rho_interval is None:
            out.pop("rho_interval")
        return out


def verify_main_theorem(
    h: Hypergraph, cap: int | None = None, enum_cap: int = ev.DEFAULT_ENUM_CAP
) -> VerificationReport:
    """Compute every quantity that fits the caps and compare them.

    Charpoly-based quantities are skipped (and listed) when the Macaulay
    basis exceeds the guard; phase enumeration when it exceeds ``enum_cap``.
    """
    _require_connected(h)
    rep = VerificationReport(h.summary(), h.k, h.n, h.m)

    def timed(name, fn):
        t0 = time.perf_counter()
        val = fn()
        rep.timings[name] = round(time.perf_counter() - t0, 4)
        return val

    rep.ev_cardinality = timed("ev_cardinality", lambda: ev.cardinality(h))
    try:
        rep.phase_count = timed("phase_count", lambda: len(ev.enumerate_phases(h, cap=enum_cap)))
    except ev.EnumerationCapError:
        rep.skipped.append("phase_count")
    try:
        check_guard(h.n, h.k, cap)
    except SizeGuardError:
        rep.skipped += ["am_rho", "am_zero_laplacian", "macaulay_nullity"]
        return rep
    rep.am_zero_laplacian = timed("am_zero_laplacian", lambda: am_zero_laplacian(h, cap))
    root = timed(
        "am_rho",
        lambda: multiplicity_of_largest_root(tensor_charpoly(adjacency_tensor(h), cap)),
    )
    rep.am_rho = root.multiplicity
    rep.rho_interval = (str(root.interval[0]), str(root.interval[1]))
    rep.macaulay_nullity = timed("macaulay_nullity", lambda: macaulay_nullity_laplacian(h, cap))
    return rep


def am_family_oracle(fam: ev.Family) -> int:
    """Closed-form am(rho, A(H)) = am(0, L(H)) for a named family."""
    return ev.family_oracle(fam)


def composite_multiplicity(h1: Hypergraph, h2: Hypergraph, op: str, cap: int | None = None) -> int:
    """Predicted am(rho) = am(0, L) of the coalescence or Cartesian product
    from data of the parts alone.

    Coalescence multiplies the parts' multiplicities (taken from their
    characteristic polynomials when within the guard, otherwise from their
    eigenvariety sizes); the Cartesian product uses the parts' Smith data.
    """
    _require_connected(h1)
    _require_connected(h2)
    if h1.k != h2.k:
        raise HypergraphError("uniformity mismatch")
    if op == "coalesce":
        parts = []
        for h in (h1, h2):
            try:
                parts.append(am_rho_adjacency(h, cap))
            except SizeGuardError:
                parts.append(ev.cardinality(h))
        return parts[0] * parts[1]
    if op == "cartesian":
        return ev.cartesian_formula(h1, h2)
    raise ValueError(f"unknown composite operation {op!r}")
