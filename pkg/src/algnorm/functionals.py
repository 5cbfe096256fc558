"""Discontinuous linear functionals vanishing on the square subalgebra.

The construction enumerates the basis directions independent of A^2 as an
increasing sequence L = l_1, l_2, ... of canonical basis indices, then
assigns functional values by table:

  phi       : value m on l_m, 0 on A^2, 1 on leftover basis directions
  phi_n     : L is split into infinitely many infinite pieces by the 2-adic
              pairing m = 2^(n-1) (2j-1); within piece n the value is j
              (with the piece's first member sent to 0), members of other
              pieces get 1, A^2 gets 0, leftovers get 1

Values are integers embedded into the Gaussian rationals, and evaluation is
the linear extension over the canonical residual modulo A^2, which makes
A^2 a subset of ker(phi) exact by construction.

The only leftover basis direction in the built-in families is the adjoined
coordinate of a trivial extension, which is deliberately kept out of L.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import EmptyComplement, IndexOutOfRange
from .scalars import GaussianRational, Magnitude, magnitude_resolved
from .algebra import AlgebraSpec, Element, TrivialExtension, basis_vector, \
    index_bound
from .span import Codimension, FiniteDimSpan, codimension, square_span


# ---------------------------------------------------------------------------
# 2-adic partition of positions into pieces
# ---------------------------------------------------------------------------

def partition_position(m: int):
    """Split position m >= 1 as m = 2^(n-1) (2j-1); returns (piece n, slot j)."""
    if m < 1:
        raise ValueError("positions start at 1")
    t = (m & -m).bit_length() - 1
    return t + 1, ((m >> t) + 1) // 2


def piece_position(n: int, j: int) -> int:
    """Inverse of partition_position: the position of slot j of piece n."""
    if n < 1 or j < 1:
        raise ValueError("piece and slot start at 1")
    return (2 * j - 1) << (n - 1)


@dataclass(frozen=True)
class PartitionScheme:
    """The fixed 2-adic pairing between positions and (piece, slot) pairs."""

    name: str = "2-adic"

    @staticmethod
    def split(m: int):
        return partition_position(m)

    @staticmethod
    def join(n: int, j: int) -> int:
        return piece_position(n, j)


# ---------------------------------------------------------------------------
# Enumerating the independent directions
# ---------------------------------------------------------------------------

def leftover_indices(spec: AlgebraSpec) -> frozenset:
    """Basis indices outside both A^2 and the enumeration L.

    Only the adjoined coordinate(s) of trivial extensions land here; they get
    functional value 1 rather than a position in L.
    """
    if isinstance(spec, TrivialExtension):
        inner = leftover_indices(spec.inner)
        return frozenset({TrivialExtension.ADJOINED_INDEX} | {k + 1 for k in inner})
    return frozenset()


class ComplementEnumeration:
    """The increasing enumeration l_1 < l_2 < ... of basis indices that are
    independent modulo A^2 (canonical basis vectors of norm one).

    Backed by the computed span: for sequence families positions come from
    index-set counting; for finite-dimensional families from the non-pivot
    coordinates of the reduced span.
    """

    def __init__(self, spec: AlgebraSpec, span, codim: Codimension):
        self.spec = spec
        self.span = span
        self.codim = codim
        self.index_bound = index_bound(spec)
        self.leftovers = leftover_indices(spec)
        if isinstance(span, FiniteDimSpan):
            members = [k for k in span.non_pivot_indices() if k not in self.leftovers]
            self._members = tuple(members)
            self.finite = True
        elif self.index_bound is not None:
            member = span.span_indices.member
            self._members = tuple(
                k for k in range(1, self.index_bound + 1)
                if not member(k) and k not in self.leftovers)
            self.finite = True
        elif not span.span_indices.complement_is_infinite():
            members = [k for k in span.span_indices.complement_members()
                       if k not in self.leftovers]
            self._members = tuple(sorted(members))
            self.finite = True
        else:
            self._members = None
            self.finite = False

    def __len__(self):
        if not self.finite:
            raise ValueError("enumeration is infinite")
        return len(self._members)

    def is_empty(self) -> bool:
        return self.finite and not self._members

    def _count_upto(self, k: int) -> int:
        span_count = self.span.span_indices.count_upto(k)
        left = sum(1 for l in self.leftovers if l <= k)
        return max(k, 0) - span_count - left

    def position_of_index(self, k: int) -> Optional[int]:
        """Position m with l_m = k, or None when k is not enumerated."""
        if self._members is not None:
            try:
                return self._members.index(k) + 1
            except ValueError:
                return None
        if k in self.leftovers or self.span.span_indices.member(k):
            return None
        bound = self.index_bound
        if k < 1 or (bound is not None and k > bound):
            return None
        return self._count_upto(k)

    def index_at(self, m: int) -> int:
        """The basis index l_m."""
        if m < 1:
            raise IndexOutOfRange("positions start at 1")
        if self._members is not None:
            if m > len(self._members):
                raise IndexOutOfRange(
                    f"enumeration has only {len(self._members)} members")
            return self._members[m - 1]
        lo, hi = 0, 1
        while self._count_upto(hi) < m:
            hi *= 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self._count_upto(mid) >= m:
                hi = mid
            else:
                lo = mid
        return hi

    def members(self, limit: int) -> list:
        n = min(limit, len(self._members)) if self.finite else limit
        return [self.index_at(m) for m in range(1, n + 1)]


def enumerate_complement(spec: AlgebraSpec) -> ComplementEnumeration:
    """Enumerate the independent directions; raises EmptyComplement when
    A^2 already spans all of A."""
    codim = codimension(spec)
    if codim.is_finite and codim.value == 0:
        raise EmptyComplement("A^2 = A: no independent direction to enumerate")
    return ComplementEnumeration(spec, square_span(spec), codim)


# ---------------------------------------------------------------------------
# The functionals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FunctionalSpec:
    """An evaluable functional built from an enumeration.

    kind "theorem" is the single functional phi; kind "corollary" is phi_n
    for the given piece.  Both vanish on A^2 identically.
    """

    kind: str  # "theorem" | "corollary"
    enum: ComplementEnumeration
    piece: Optional[int] = None
    scheme: PartitionScheme = PartitionScheme()

    def __post_init__(self):
        if self.kind not in ("theorem", "corollary"):
            raise ValueError(f"unknown functional kind {self.kind!r}")
        if (self.kind == "corollary") != (self.piece is not None):
            raise ValueError("piece is set exactly for corollary functionals")
        if self.piece is not None and self.piece < 1:
            raise ValueError("pieces start at 1")
        object.__setattr__(self, "_value_cache", {})
        span = self.enum.span
        fast = None
        if not isinstance(span, FiniteDimSpan) and span.extra_rows is None:
            fast = span.span_indices.member
        object.__setattr__(self, "_span_member", fast)

    def basis_value(self, k: int) -> int:
        """The integer table value at canonical basis index k."""
        cache = self._value_cache
        v = cache.get(k)
        if v is None:
            v = self._basis_value(k)
            cache[k] = v
        return v

    def _basis_value(self, k: int) -> int:
        pos = self.enum.position_of_index(k)
        if pos is None:
            if isinstance(self.enum.span, FiniteDimSpan):
                # pivots are handled by residual reduction; leftovers get 1
                return 0 if k in self.enum.span.space.rows else 1
            return 0 if self.enum.span.span_indices.member(k) else 1
        if self.kind == "theorem":
            return pos
        n, j = partition_position(pos)
        if n == self.piece:
            return 0 if j == 1 else j
        return 1

    def eval(self, a: Element) -> GaussianRational:
        bound = self.enum.index_bound
        if bound is not None:
            for k in a.coeffs:
                if k > bound:
                    raise IndexOutOfRange(f"index {k} outside 1..{bound}")
        total = GaussianRational(0)
        basis_value = self.basis_value
        member = self._span_member
        if member is not None:
            # index-span families: the residual is just the off-span support
            for k, z in a.coeffs.items():
                if not member(k):
                    v = basis_value(k)
                    if v:
                        total = GaussianRational(total.re + z.re * v,
                                                 total.im + z.im * v)
            return total
        residual = self.enum.span.reduce(a)
        for k, z in residual.coeffs.items():
            v = basis_value(k)
            if v:
                total = GaussianRational(total.re + z.re * v, total.im + z.im * v)
        return total

    def describe(self) -> str:
        if self.kind == "theorem":
            return "phi (position-valued on L, 0 on A^2, 1 on leftovers)"
        return f"phi_{self.piece} (slot-valued on piece {self.piece} of L)"

    def label(self) -> str:
        return "theorem" if self.kind == "theorem" else f"corollary:{self.piece}"


def theorem_phi(spec: AlgebraSpec) -> FunctionalSpec:
    return FunctionalSpec("theorem", enumerate_complement(spec))


def corollary_phi_n(spec: AlgebraSpec, n: int) -> FunctionalSpec:
    return FunctionalSpec("corollary", enumerate_complement(spec), piece=n)


def eval_phi(f: FunctionalSpec, a: Element) -> GaussianRational:
    """Linear extension of the table over the canonical residual modulo A^2."""
    return f.eval(a)


def piece_member_index(f: FunctionalSpec, j: int) -> int:
    """For phi_n, the basis index of slot j of its own piece."""
    if f.kind != "corollary":
        raise ValueError("piece members only exist for corollary functionals")
    return f.enum.index_at(piece_position(f.piece, j))


# ---------------------------------------------------------------------------
# Discontinuity certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessPoint:
    index: int       # canonical basis index
    phi_value: int
    base_norm: str   # exact norm of the witness, always "1" here

    def to_json(self):
        return {"index": self.index, "phi_value": self.phi_value,
                "base_norm": self.base_norm}


@dataclass(frozen=True)
class Certificate:
    """Either an unbounded witness family (norm-one members with functional
    values growing without bound) or the exact supremum of |phi| over the
    canonical basis, which bounds the operator norm under the l1 base norm."""

    kind: str  # "unbounded" | "bounded"
    base: str
    witnesses: Optional[tuple] = None
    sup: Optional[Magnitude] = None

    def to_json(self):
        if self.kind == "unbounded":
            return {"kind": "unbounded", "base": self.base,
                    "witnesses": [w.to_json() for w in self.witnesses]}
        return {"kind": "bounded", "base": self.base, "sup": str(self.sup)}


_WITNESS_PREFIX = 10


def is_discontinuous_certificate(f: FunctionalSpec, base: str = "l1",
                                 prefix: int = _WITNESS_PREFIX) -> Certificate:
    """Unbounded witness family when the enumeration is infinite, else the
    exact basis supremum of |phi|."""
    enum = f.enum
    if not enum.finite:
        witnesses = []
        if f.kind == "theorem":
            for m in range(1, prefix + 1):
                witnesses.append(WitnessPoint(enum.index_at(m), m, "1"))
        else:
            for j in range(2, prefix + 2):
                idx = enum.index_at(piece_position(f.piece, j))
                witnesses.append(WitnessPoint(idx, j, "1"))
        return Certificate("unbounded", base, witnesses=tuple(witnesses))
    sup = Magnitude.zero()
    span = enum.span
    if isinstance(span, FiniteDimSpan):
        for k in range(1, span.dim + 1):
            val = magnitude_resolved(f.eval(basis_vector(k)))
            if not val.le(sup):
                sup = val
        return Certificate("bounded", base, sup=sup)
    best = 0
    for m in range(1, len(enum) + 1):
        best = max(best, f.basis_value(enum.index_at(m)))
    if enum.leftovers or _has_cross_or_leftover_ones(f):
        best = max(best, 1)
    return Certificate("bounded", base, sup=Magnitude.from_exact(best))


def _has_cross_or_leftover_ones(f: FunctionalSpec) -> bool:
    # a finite enumeration still produces 1-values for cross-piece members
    if f.kind != "corollary":
        return False
    for m in range(1, len(f.enum) + 1):
        if partition_position(m)[0] != f.piece:
            return True
    return False
