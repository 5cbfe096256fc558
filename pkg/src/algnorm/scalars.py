"""Exact Gaussian-rational scalars and magnitude values.

The coefficient field is Q(i): complex numbers whose real and imaginary
parts are arbitrary-precision rationals.  Every span, kernel and functional
computation stays in this field; floating point only ever appears in the
reported approximation of a magnitude, never in a decision.

Magnitude comparisons that tests rely on are routed through squared
magnitudes (`magnitude_squared`), which keeps them in exact rationals.
"""
from __future__ import annotations

import math

try:
    from gmpy2 import mpq, is_square, isqrt
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as mpq

    def is_square(n):
        n = int(n)
        if n < 0:
            return False
        r = math.isqrt(n)
        return r * r == n

    isqrt = math.isqrt

QZERO = mpq(0)
QONE = mpq(1)


def parse_rational(text: str) -> mpq:
    """Parse "p/q" (or "p") into an exact rational."""
    try:
        return mpq(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(q) -> str:
    """Render as "p/q", omitting the denominator when it is 1."""
    return str(mpq(q))


class GaussianRational:
    """A complex scalar with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = mpq(re)
        self.im = mpq(im)

    def __add__(self, other):
        z = GaussianRational.__new__(GaussianRational)
        z.re = self.re + other.re
        z.im = self.im + other.im
        return z

    def __sub__(self, other):
        z = GaussianRational.__new__(GaussianRational)
        z.re = self.re - other.re
        z.im = self.im - other.im
        return z

    def __mul__(self, other):
        z = GaussianRational.__new__(GaussianRational)
        z.re = self.re * other.re - self.im * other.im
        z.im = self.re * other.im + self.im * other.re
        return z

    def __neg__(self):
        z = GaussianRational.__new__(GaussianRational)
        z.re = -self.re
        z.im = -self.im
        return z

    def __truediv__(self, other):
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        z = GaussianRational.__new__(GaussianRational)
        z.re = (self.re * other.re + self.im * other.im) / d
        z.im = (self.im * other.re - self.re * other.im) / d
        return z

    def conjugate(self):
        z = GaussianRational.__new__(GaussianRational)
        z.re = self.re
        z.im = -self.im
        return z

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, GaussianRational)
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return f"gr({format_rational(self.re)!r})"
        return f"gr({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, obj) -> "GaussianRational":
        if not isinstance(obj, dict) or set(obj) - {"re", "im"}:
            raise ValueError(f"bad scalar object: {obj!r}")
        return cls(parse_rational(obj.get("re", "0")), parse_rational(obj.get("im", "0")))


def gr(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, rationals or "p/q" strings."""
    if isinstance(re, str):
        re = parse_rational(re)
    if isinstance(im, str):
        im = parse_rational(im)
    return GaussianRational(re, im)


GR_ZERO = GaussianRational(0, 0)
GR_ONE = GaussianRational(1, 0)
GR_I = GaussianRational(0, 1)


def magnitude_squared(z: GaussianRational):
    """|z|^2 = re^2 + im^2, exactly.

    All exact magnitude comparisons go through this: for nonnegative
    quantities, m1 <= m2 iff m1^2 <= m2^2.
    """
    return z.re * z.re + z.im * z.im


def exact_sqrt(q) -> "mpq | None":
    """Exact rational square root of q, or None when q is not a perfect square."""
    if q < 0:
        return None
    if q == 0:
        return QZERO
    num, den = q.numerator, q.denominator
    if is_square(num) and is_square(den):
        return mpq(isqrt(num), isqrt(den))
    return None


# Relative error budget for reported float approximations.  float(mpq) and
# math.sqrt are each correctly rounded, so 2^-48 is a comfortable cover.
_REL = 2.0 ** -48
_TINY = 5e-324


def approx_sqrt(q) -> tuple[float, float]:
    """Float sqrt of a nonnegative rational plus an absolute error bound."""
    if q == 0:
        return 0.0, 0.0
    a = math.sqrt(float(q))
    return a, abs(a) * _REL + _TINY


class Magnitude:
    """A nonnegative magnitude: optional exact value, float approximation, bound.

    `exact` is the exact rational value when one is known; `exact_sq` is the
    exact square when *that* is known (e.g. |z| for a genuinely complex z, or
    an l2 norm).  `approx` always holds a float with absolute error <= `bound`.
    The derived fields are computed lazily so the exact arithmetic path stays
    in pure rational operations.
    """

    __slots__ = ("exact", "_sq", "_approx", "_bound", "_pending")

    def __init__(self, exact, sq=None, approx=None, bound=None):
        self.exact = exact
        self._sq = sq
        self._approx = approx
        self._bound = bound
        self._pending = None

    @classmethod
    def from_pending(cls, exact_part, ms_list) -> "Magnitude":
        """exact_part + sum of sqrt(ms) terms, floats deferred until needed."""
        m = cls(None)
        m._pending = (exact_part, ms_list)
        return m

    @property
    def exact_sq(self):
        if self._sq is None and self.exact is not None:
            self._sq = self.exact * self.exact
        return self._sq

    @property
    def approx(self) -> float:
        if self._approx is None:
            if self.exact is not None:
                self._approx = float(self.exact)
                self._bound = abs(self._approx) * _REL + _TINY
            elif self._sq is not None:
                self._approx, self._bound = approx_sqrt(self._sq)
            elif self._pending is not None:
                exact_part, ms_list = self._pending
                approx, bound = float(exact_part), 0.0
                for ms in ms_list:
                    av, bv = approx_sqrt(ms)
                    approx += av
                    bound += bv
                self._approx = approx
                self._bound = bound + abs(approx) * _REL * (len(ms_list) + 1) + _TINY
            else:
                raise ValueError("magnitude with no backing at all")
        return self._approx

    @property
    def bound(self) -> float:
        if self._bound is None:
            self.approx
        return self._bound

    @classmethod
    def from_exact(cls, q) -> "Magnitude":
        q = mpq(q)
        if q < 0:
            raise ValueError("magnitudes are nonnegative")
        return cls(q)

    @classmethod
    def from_square(cls, sq) -> "Magnitude":
        """The magnitude sqrt(sq), keeping the exact square as backing."""
        sq = mpq(sq)
        if sq < 0:
            raise ValueError("squared magnitudes are nonnegative")
        return cls(None, sq)

    @classmethod
    def from_approx(cls, approx: float, bound: float) -> "Magnitude":
        return cls(None, None, approx, bound)

    @classmethod
    def zero(cls) -> "Magnitude":
        return cls(QZERO, QZERO, 0.0, 0.0)

    def resolved(self) -> "Magnitude":
        """Populate `exact` via the squared-magnitude oracle when possible."""
        if self.exact is None and self._sq is not None:
            r = exact_sqrt(self._sq)
            if r is not None:
                return Magnitude(r, self._sq)
        return self

    def is_zero(self) -> bool:
        if self.exact is not None:
            return self.exact == 0
        if self._sq is not None:
            return self._sq == 0
        if self._pending is not None:
            exact_part, ms_list = self._pending
            return exact_part == 0 and not any(ms_list)
        return False

    def definitely_positive(self) -> bool:
        """True only when the value is provably > 0."""
        if self.exact is not None:
            return self.exact > 0
        if self._sq is not None:
            return self._sq > 0
        if self._pending is not None:
            exact_part, ms_list = self._pending
            return exact_part > 0 or any(ms > 0 for ms in ms_list)
        return self.approx > self.bound

    def _parts(self):
        """(exact part, tuple of squared radical terms), or None if float-only."""
        if self.exact is not None:
            return self.exact, ()
        if self._sq is not None:
            return QZERO, (self._sq,)
        return self._pending

    def __add__(self, other: "Magnitude") -> "Magnitude":
        if self.exact is not None and other.exact is not None:
            return Magnitude(self.exact + other.exact)
        ps, po = self._parts(), other._parts()
        if ps is not None and po is not None:
            ex = ps[0] + po[0]
            ms = tuple(m for m in ps[1] + po[1] if m != 0)
            if not ms:
                return Magnitude(ex)
            if ex == 0 and len(ms) == 1:
                return Magnitude(None, ms[0])
            return Magnitude.from_pending(ex, ms)
        a = self.approx + other.approx
        b = self.bound + other.bound + abs(a) * _REL + _TINY
        return Magnitude(None, None, a, b)

    def __mul__(self, other: "Magnitude") -> "Magnitude":
        if self.exact is not None and other.exact is not None:
            return Magnitude(self.exact * other.exact)
        if self.exact_sq is not None and other.exact_sq is not None:
            return Magnitude(None, self.exact_sq * other.exact_sq)
        a = self.approx * other.approx
        b = (
            abs(self.approx) * other.bound
            + abs(other.approx) * self.bound
            + self.bound * other.bound
            + abs(a) * _REL
            + _TINY
        )
        return Magnitude(None, None, a, b)

    def scale(self, q) -> "Magnitude":
        """Multiply by a nonnegative exact rational."""
        q = mpq(q)
        if q < 0:
            raise ValueError("scale factor must be nonnegative")
        return self * Magnitude.from_exact(q)

    def compare_exact(self, other: "Magnitude") -> "int | None":
        """-1/0/1 when the comparison is exactly decidable, else None."""
        if self.exact is not None and other.exact is not None:
            d = self.exact - other.exact
        elif self.exact_sq is not None and other.exact_sq is not None:
            # both values nonnegative, so comparing squares is faithful
            d = self.exact_sq - other.exact_sq
        else:
            return None
        return -1 if d < 0 else (1 if d > 0 else 0)

    def le(self, other: "Magnitude", tol: float = 0.0) -> bool:
        """self <= other; exact when decidable, else approximate within tol."""
        c = self.compare_exact(other)
        if c is not None:
            return c <= 0
        return self.approx <= other.approx + self.bound + other.bound + tol

    def __str__(self):
        if self.exact is not None:
            return format_rational(self.exact)
        return repr(self.approx)

    def __repr__(self):
        if self.exact is not None:
            return f"Magnitude({format_rational(self.exact)})"
        if self._sq is not None:
            return f"Magnitude(sqrt({format_rational(self._sq)}))"
        return f"Magnitude(~{self.approx!r})"

    def to_json(self) -> dict:
        out = {"approx": self.approx, "bound": self.bound}
        if self.exact is not None:
            out["exact"] = format_rational(self.exact)
        elif self._sq is not None:
            out["exact_sq"] = format_rational(self._sq)
        return out


def magnitude(z: GaussianRational) -> Magnitude:
    """|z|.  Exact when z is real or purely imaginary, else approximated
    (with its exact square retained for squared comparisons)."""
    if z.im == 0:
        return Magnitude.from_exact(abs(z.re))
    if z.re == 0:
        return Magnitude.from_exact(abs(z.im))
    return Magnitude.from_square(magnitude_squared(z))


def magnitude_resolved(z: GaussianRational) -> Magnitude:
    """|z| with the squared-magnitude oracle applied, so that scalars like
    3/5 + 4/5 i come out exactly 1."""
    return magnitude(z).resolved()


def abs_add_dominates(u: GaussianRational, v: GaussianRational, w: GaussianRational) -> bool:
    """Decide |u| <= |v| + |w| exactly, by squaring twice.

    |u|^2 <= (|v|+|w|)^2  iff  |u|^2 - |v|^2 - |w|^2 <= 2|v||w|, and the
    remaining single square root falls to one more squaring.
    """
    t = magnitude_squared(u) - magnitude_squared(v) - magnitude_squared(w)
    if t <= 0:
        return True
    return t * t <= 4 * magnitude_squared(v) * magnitude_squared(w)


def triangle_holds(z: GaussianRational, w: GaussianRational) -> bool:
    """Exact check of |z + w| <= |z| + |w|."""
    return abs_add_dominates(z + w, z, w)


def abs_sum_dominates(total: GaussianRational, terms) -> bool:
    """Certify |total| <= sum of |t| for t in terms, where total == sum(terms).

    Chains the exact two-term decision through the partial sums, so no
    irrational sum is ever materialized.
    """
    partial = GR_ZERO
    for t in terms:
        if not abs_add_dominates(partial + t, partial, t):
            return False
        partial = partial + t
    return total == partial
