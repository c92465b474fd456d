"""Dense univariate polynomials over the rationals.

Coefficients are stored constant term first. Nothing in this module touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class NoRealRootError(ValueError):
    pass


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Immutable polynomial ``c[0] + c[1] x + ... + c[d] x^d`` over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __add__(self, other) -> "UniPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = other.degree
        lead = other.lc
        if len(rem) - 1 < dg:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - dg)
        b = other.coeffs
        for shift in range(len(rem) - 1 - dg, -1, -1):
            c = rem[shift + dg] / lead
            quot[shift] = c
            if c:
                for j in range(dg + 1):
                    rem[shift + j] -= c * b[j]
        return UniPoly(quot), UniPoly(rem[:dg])

    def __floordiv__(self, other) -> "UniPoly":
        return self.divmod(_coerce(other))[0]

    def __mod__(self, other) -> "UniPoly":
        return self.divmod(_coerce(other))[1]

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.lc
        return UniPoly([c / lead for c in self.coeffs])

    def scale_variable(self, s) -> "UniPoly":
        """Return ``p(s * x)``."""
        s = Fraction(s)
        return UniPoly([c * s**i for i, c in enumerate(self.coeffs)])

    def trailing_zeros(self) -> int:
        """Multiplicity of 0 as a root."""
        if self.is_zero():
            raise ValueError("zero polynomial has no finite root multiplicity")
        t = 0
        while self.coeffs[t] == 0:
            t += 1
        return t

    def sign_at(self, x: Fraction) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def sign_at_infinity(self, positive: bool = True) -> int:
        if self.is_zero():
            return 0
        s = 1 if self.lc > 0 else -1
        if not positive and self.degree % 2:
            s = -s
        return s


def _coerce(p) -> UniPoly:
    if isinstance(p, UniPoly):
        return p
    return UniPoly([p])


def _primitive_int(p: UniPoly) -> list[int]:
    """Integer coefficient list proportional to ``p`` with content 1 and positive lead."""
    from math import gcd, lcm

    den = 1
    for c in p.coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        return []
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def exact_div(f: UniPoly, g: UniPoly) -> UniPoly:
    """Quotient ``f / g``; raises :class:`ExactDivisionError` on a nonzero remainder."""
    q, r = f.divmod(g)
    if not r.is_zero():
        raise ExactDivisionError(
            f"division leaves a remainder of degree {r.degree} "
            f"(dividend degree {f.degree}, divisor degree {g.degree})"
        )
    return q


def _pseudo_rem_int(a: list[int], b: list[int]) -> list[int]:
    """Primitive part of the pseudo-remainder of integer polys ``a`` by ``b``."""
    from math import gcd

    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j in range(db + 1):
            r[shift + j] -= lr * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    g = 0
    for c in r:
        g = gcd(g, c)
    if g > 1:
        r = [c // g for c in r]
    return r


def gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd, computed over Z with primitive pseudo-remainders."""
    a = _primitive_int(f)
    b = _primitive_int(g)
    if not a:
        return g.monic()
    if not b:
        return f.monic()
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _pseudo_rem_int(a, b)
    return UniPoly(a).monic()


def squarefree_decompose(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic, pairwise coprime, square-free ``p_i`` with
    ``f = lc(f) * prod(p_i ** m_i)``. Constant factors are omitted."""
    if f.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    out: list[tuple[UniPoly, int]] = []
    if f.degree == 0:
        return out
    fp = f.derivative()
    a = gcd(f, fp)
    b = exact_div(f, a)
    c = exact_div(fp, a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.derivative()
        i += 1
    return out


def _positive_multiple(p: UniPoly) -> UniPoly:
    ints = _primitive_int(p)
    if p.lc < 0:
        ints = [-c for c in ints]
    return UniPoly(ints)


def sturm_sequence(f: UniPoly) -> list[UniPoly]:
    """Sturm chain of ``f`` with each member rescaled by a positive constant.

    Positive rescaling keeps sign variation counts intact while holding
    coefficient growth down to primitive-integer size.
    """
    seq = [_positive_multiple(f), _positive_multiple(f.derivative())]
    if seq[1].is_zero():
        return seq[:1]
    while True:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(_positive_multiple(-r))
    return seq


def _variations(values: Sequence[int]) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sign_variations_at(seq: Sequence[UniPoly], x: Fraction | None) -> int:
    """Sign variations of a Sturm chain at ``x`` (``None`` means +infinity)."""
    if x is None:
        return _variations([p.sign_at_infinity() for p in seq])
    return _variations([p.sign_at(x) for p in seq])


def cauchy_bound(f: UniPoly) -> Fraction:
    """Every complex root of ``f`` has modulus strictly below this value."""
    lead = abs(f.lc)
    return 1 + max((abs(c) / lead for c in f.coeffs[:-1]), default=Fraction(0))


def count_real_roots(f: UniPoly, lo: Fraction, hi: Fraction | None = None) -> int:
    """Distinct real roots of ``f`` in the half-open interval ``(lo, hi]``."""
    seq = sturm_sequence(f)
    return sign_variations_at(seq, lo) - sign_variations_at(seq, hi)


def isolate_largest_real_root(f: UniPoly, precision) -> tuple[Fraction, Fraction]:
    """Rational interval ``(lo, hi]`` of width at most ``precision`` holding
    exactly one real root of ``f``, namely the largest one.

    A degenerate interval ``lo == hi`` is returned when a bisection midpoint
    hits the root exactly.
    """
    if f.degree < 1:
        raise NoRealRootError("constant polynomial")
    sqf = f
    g = gcd(f, f.derivative())
    if g.degree > 0:
        sqf = exact_div(f, g)
    seq = sturm_sequence(sqf)
    precision = Fraction(precision)
    hi = cauchy_bound(sqf)
    lo = -hi
    v_hi = sign_variations_at(seq, hi)
    if sign_variations_at(seq, lo) - v_hi == 0:
        raise NoRealRootError(f"no real root: {f}")
    # Grow the window leftward from hi until it captures at least one root.
    width = Fraction(1)
    while True:
        cand = hi - width
        if cand <= lo:
            cand = lo
        v_cand = sign_variations_at(seq, cand)
        if v_cand - v_hi > 0:
            lo, v_lo = cand, v_cand
            break
        hi, v_hi = cand, v_cand
        width *= 2
    # Bisect, always keeping the right-most root, until the interval is
    # narrow enough and holds no other root.
    while hi - lo > precision or v_lo - v_hi > 1:
        mid = (lo + hi) / 2
        v_mid = sign_variations_at(seq, mid)
        if sqf(mid) == 0 and v_mid == v_hi:
            return mid, mid
        if v_mid - v_hi > 0:
            lo, v_lo = mid, v_mid
        else:
            hi, v_hi = mid, v_mid
    if sqf(hi) == 0:
        return hi, hi
    return lo, hi
