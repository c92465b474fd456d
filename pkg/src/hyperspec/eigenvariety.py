"""Eigenvarieties of A(H) at rho and of L(H) at 0, in phase coordinates.

A point is written ``x_v = u_v * zeta^(c_v)`` with ``zeta = exp(2 pi i / k)``
and u the Perron vector (adjacency) or the all-ones vector (Laplacian). The
phase vector ``c`` lives in Z_k^n; it gives an eigenvector exactly when every
edge sum of c vanishes mod k, which is the kernel of the incidence matrix over
Z_k. Shifting c by the all-ones vector does not change the projective point,
so representatives are pinned by ``c_1 = 0``.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from .hypergraph import (
    Hypergraph,
    HypergraphError,
    SimpleGraph,
    cartesian,
    coalesce,
    gen_complete,
    gen_loose_path,
    gen_power,
    gen_single_edge,
    gen_squid,
    gen_sunflower,
    incidence_matrix,
    is_connected,
)
from .linalg import SnfResult, snf_integer
from .tensor import apply, hypergraph_tensor

DEFAULT_ENUM_CAP = 10**7


class EnumerationCapError(RuntimeError):
    pass


@dataclass(frozen=True)
class EigenvarietyDescription:
    k: int
    n: int
    invariants: tuple[int, ...]  # mod-k invariant divisors d_1..d_r
    integer_invariants: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.invariants)

    @property
    def cardinality(self) -> int:
        return self.k ** (self.n - self.r - 1) * math.prod(self.invariants)

    @property
    def group(self) -> list[int]:
        """Cyclic orders of the abelian group the eigenvariety is isomorphic to."""
        return [d for d in self.invariants if d != 1] + [self.k] * (self.n - self.r - 1)

    def to_json(self, phases: Sequence[Sequence[int]] | None = None) -> dict:
        out = {
            "invariants": list(self.invariants),
            "r": self.r,
            "cardinality": self.cardinality,
            "group": self.group,
        }
        if phases is not None:
            out["phases"] = [list(c) for c in phases]
        return out


def _require_connected(h: Hypergraph) -> None:
    if not is_connected(h):
        raise HypergraphError("hypergraph is not connected")


def snf_mod_k(b: Sequence[Sequence[int]], k: int, ncols: int | None = None) -> tuple[tuple[int, ...], int]:
    """Invariant divisors over Z_k: ``gcd(s_i, k)`` over the integer invariants
    ``s_i``, dropping those equal to k (zero in Z_k)."""
    res = snf_integer(b, ncols)
    kept = tuple(g for g in (math.gcd(s, k) for s in res.invariants) if g != k)
    return kept, len(kept)


def describe(h: Hypergraph) -> EigenvarietyDescription:
    _require_connected(h)
    res = snf_integer(incidence_matrix(h), h.n)
    kept = tuple(g for g in (math.gcd(s, h.k) for s in res.invariants) if g != h.k)
    return EigenvarietyDescription(h.k, h.n, kept, res.invariants)


def cardinality(h: Hypergraph) -> int:
    """``k^(n-r-1) * prod(d_i)``: the size of both V_rho(A(H)) and V_0(L(H))."""
    return describe(h).cardinality


# -- phase vectors ----------------------------------------------------------


def edge_sums_vanish(h: Hypergraph, c: Sequence[int], target: int = 0) -> bool:
    return all(sum(c[v - 1] for v in e) % h.k == target % h.k for e in h.edges)


def _phase_defects(h: Hypergraph, c: Sequence[int], operator: str) -> list[int]:
    """For each incident pair (v, e) the exponent of zeta by which the edge
    term of the eigen-equation at v misses its target, reduced mod k.

    adjacency at rho: term prod_{w in e-v} x_w must equal the share
    ``u-part * zeta^((k-1) c_v)`` of rho x_v^(k-1);
    laplacian at 0: term must cancel the matching share of d_v x_v^(k-1);
    signless at 0: term must equal minus that share, i.e. offset k/2.
    """
    k = h.k
    if operator in ("adj", "adjacency", "lap", "laplacian"):
        offset = 0
    elif operator in ("slap", "signless"):
        if k % 2:
            raise ValueError("signless phases need even k")
        offset = k // 2
    else:
        raise ValueError(f"unknown operator {operator!r}")
    out = []
    for e in h.edges:
        for v in e:
            others = sum(c[w - 1] for w in e if w != v)
            out.append((others - (k - 1) * c[v - 1] - offset) % k)
    return out


def verify_phase(h: Hypergraph, c: Sequence[int], operator: str = "adj") -> bool:
    """Exact check that the phase vector c yields an eigenvector of the
    operator (adjacency at rho, Laplacian or signless Laplacian at 0)."""
    if len(c) != h.n:
        return False
    return not any(_phase_defects(h, c, operator))


def _brute_force(h: Hypergraph, target: int = 0) -> list[tuple[int, ...]]:
    k = h.k
    out = []
    for rest in itertools.product(range(k), repeat=h.n - 1):
        c = (0, *rest)
        if edge_sums_vanish(h, c, target):
            out.append(c)
    return out


def _diagonal_choices(h: Hypergraph, res: SnfResult, target: int = 0) -> list[list[int]] | None:
    """Solve ``B c = target (mod k)`` through the witnesses ``U B V = S``:
    ``S y = U t`` splits into scalar congruences ``s_i y_i = (U t)_i``.

    Returns, per coordinate of y, every admissible residue, or ``None`` when
    the system is inconsistent. Then ``c = V y``.
    """
    k = h.k
    m, n = len(h.edges), h.n
    rhs = [target * sum(res.u[i]) % k for i in range(m)]
    if any(rhs[i] for i in range(n, m)):
        return None
    choices = []
    for i in range(n):
        s = res.invariants[i] if i < len(res.invariants) else 0
        t = rhs[i] if i < m else 0
        g = math.gcd(s, k)
        if t % g:
            return None
        step = k // g
        base = 0 if step == 1 else (t // g) * pow(s // g, -1, step) % step
        choices.append([(base + j * step) % k for j in range(g)])
    return choices


def _phase_from(res: SnfResult, y: Sequence[int], k: int) -> tuple[int, ...]:
    n = len(y)
    c = [sum(res.v[a][b] * y[b] for b in range(n)) % k for a in range(n)]
    return tuple((x - c[0]) % k for x in c)


def _kernel_construction(h: Hypergraph, res: SnfResult) -> list[tuple[int, ...]]:
    choices = _diagonal_choices(h, res)
    return sorted({_phase_from(res, y, h.k) for y in itertools.product(*choices)})


def enumerate_phases(h: Hypergraph, method: str = "auto", cap: int = DEFAULT_ENUM_CAP) -> list[tuple[int, ...]]:
    """All phase vectors with c_1 = 0 whose edge sums vanish mod k, sorted.

    ``method`` is ``brute`` (search Z_k^(n-1)), ``kernel`` (build from the
    Smith form) or ``auto`` (brute force while k^n <= cap).
    """
    _require_connected(h)
    if method == "auto":
        method = "brute" if h.k**h.n <= cap else "kernel"
    if method == "brute":
        if h.k**h.n > cap:
            raise EnumerationCapError(f"brute force needs {h.k}^{h.n} states, cap is {cap}")
        return _brute_force(h)
    if method == "kernel":
        res = snf_integer(incidence_matrix(h), h.n)
        size = describe(h).cardinality
        if size > cap:
            raise EnumerationCapError(f"{size} phase vectors exceed the cap of {cap}")
        return _kernel_construction(h, res)
    raise ValueError(f"unknown method {method!r}")


def perron_or_ones(h: Hypergraph, operator: str, perron=None):
    if operator in ("adj", "adjacency"):
        if perron is None:
            from .spectral import perron as compute

            perron = compute(hypergraph_tensor(h, "adj"))
        return perron.rho, list(perron.u)
    return 0.0, [1.0] * h.n


def phase_to_eigenvector(h: Hypergraph, c: Sequence[int], operator: str = "adj", perron=None) -> tuple[list[complex], float]:
    """``x_v = u_v * exp(2 pi i c_v / k)`` and the residual
    ``max_v |(T x^(k-1))_v - lambda x_v^(k-1)|``."""
    lam, u = perron_or_ones(h, operator, perron)
    k = h.k
    x = [uv * cmath.exp(2j * math.pi * (cv % k) / k) if cv % k else complex(uv) for uv, cv in zip(u, c)]
    t = hypergraph_tensor(h, operator)
    tx = apply(t, x)
    resid = max(abs(tx[v] - lam * x[v] ** (k - 1)) for v in range(h.n))
    return x, resid


# -- closed forms -----------------------------------------------------------


@dataclass(frozen=True)
class Family:
    """A named hypergraph family with its parameters.

    ``edge(k)``, ``loose_path(k, m)``, ``hypertree(k, m)``,
    ``power(k, graph, size)`` with graph in path/cycle/star/triangle,
    ``complete(n, k)``, ``squid(k, t)``, ``sunflower(k, s, p)``,
    ``cored(k, n, m)``. ``hypertree`` and ``cored`` describe classes, so they
    have a closed form but no builder.
    """

    name: str
    params: tuple[int | str, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        return f"{self.name}({', '.join(map(str, self.params))})"


def _graph(kind: str, size: int) -> SimpleGraph:
    if kind == "path":
        return SimpleGraph.path(size)
    if kind == "cycle":
        return SimpleGraph.cycle(size)
    if kind == "star":
        return SimpleGraph.star(size)
    if kind == "triangle":
        return SimpleGraph.cycle(3)
    raise HypergraphError(f"unknown graph kind {kind!r}")


def build_family(fam: Family) -> Hypergraph:
    p = fam.params
    if fam.name == "edge":
        return gen_single_edge(int(p[0]))
    if fam.name == "loose_path":
        return gen_loose_path(int(p[0]), int(p[1]))
    if fam.name == "power":
        return gen_power(_graph(str(p[1]), int(p[2]) if len(p) > 2 else 3), int(p[0]))
    if fam.name == "complete":
        return gen_complete(int(p[0]), int(p[1]))
    if fam.name == "squid":
        return gen_squid(int(p[0]), int(p[1]))
    if fam.name == "sunflower":
        return gen_sunflower(int(p[0]), int(p[1]), int(p[2]))
    raise HypergraphError(f"no builder for family {fam.name!r}")


def family_oracle(fam: Family) -> int:
    p = fam.params
    name = fam.name
    if name == "edge":
        k = int(p[0])
        return k ** (k - 2)
    if name in ("loose_path", "hypertree"):
        k, m = int(p[0]), int(p[1])
        return k ** (m * (k - 2))
    if name == "power":
        k = int(p[0])
        g = _graph(str(p[1]), int(p[2]) if len(p) > 2 else 3)
        return k ** (g.n + len(g.edges) * (k - 3) - 1)
    if name == "complete":
        n, k = int(p[0]), int(p[1])
        if n <= k:
            raise HypergraphError("closed form for complete hypergraphs needs n > k")
        return 1
    if name == "cored":
        k, n, m = int(p[0]), int(p[1]), int(p[2])
        return k ** (n - m - 1)
    if name == "sunflower":
        k, s, pp = int(p[0]), int(p[1]), int(p[2])
        n = s + pp * (k - s)
        return k ** (n - pp - 1)
    if name == "squid":
        k, t = int(p[0]), int(p[1])
        return k ** ((t + 1) * (k - 2))
    raise HypergraphError(f"unknown family {name!r}")


def coalescence_formula(h1: Hypergraph, h2: Hypergraph) -> int:
    if h1.k != h2.k:
        raise HypergraphError("uniformity mismatch")
    if h1.n < 2 or h2.n < 2:
        raise HypergraphError("coalescence needs nontrivial hypergraphs")
    return cardinality(h1) * cardinality(h2)


def cartesian_formula(h1: Hypergraph, h2: Hypergraph) -> int:
    if h1.k != h2.k:
        raise HypergraphError("uniformity mismatch")
    k = h1.k
    a, b = describe(h1), describe(h2)
    f1, f2 = a.n - a.r, b.n - b.r
    out = k ** (f1 * f2 - 1)
    for d in a.invariants:
        for e in b.invariants:
            out *= math.gcd(d, e)
    for d in a.invariants:
        out *= d**f2
    for e in b.invariants:
        out *= e**f1
    return out


# -- signless Laplacian at zero ---------------------------------------------


@dataclass(frozen=True)
class SignlessZero:
    description: EigenvarietyDescription
    witness: tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return self.description.cardinality


def signless_zero(h: Hypergraph) -> SignlessZero | None:
    """Zero-eigenvectors of Q(H) in phase form: edge sums equal to k/2 mod k.

    Returns ``None`` when that system has no solution (always for odd k,
    since -1 is then not a power of zeta). The solution set is a coset of the
    homogeneous one, so it has the same count.
    """
    _require_connected(h)
    if h.k % 2:
        return None
    res = snf_integer(incidence_matrix(h), h.n)
    sols = _first_solution(h, res)
    if sols is None:
        return None
    if not verify_phase(h, sols, "slap"):
        raise AssertionError(f"constructed phase {sols} fails the signless eigen-equation")
    return SignlessZero(describe(h), sols)


def _first_solution(h: Hypergraph, res: SnfResult) -> tuple[int, ...] | None:
    choices = _diagonal_choices(h, res, h.k // 2)
    if choices is None:
        return None
    return _phase_from(res, [c[0] for c in choices], h.k)


def signless_phases(h: Hypergraph, cap: int = DEFAULT_ENUM_CAP) -> list[tuple[int, ...]]:
    """Brute-force list of signless phase vectors with c_1 = 0 (all edge sums
    k/2 mod k). Shifting by the all-ones vector preserves the edge sums."""
    _require_connected(h)
    if h.k % 2:
        return []
    if h.k**h.n > cap:
        raise EnumerationCapError(f"brute force needs {h.k}^{h.n} states, cap is {cap}")
    return _brute_force(h, h.k // 2)


def composite(h1: Hypergraph, h2: Hypergraph, op: str, v1: int = 1, v2: int = 1) -> Hypergraph:
    if op == "coalesce":
        return coalesce(h1, v1, h2, v2)
    if op == "cartesian":
        return cartesian(h1, h2)
    raise ValueError(f"unknown composite operation {op!r}")
