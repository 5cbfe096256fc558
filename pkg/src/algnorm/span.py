"""The square subalgebra A^2 as an explicit span: basis, codimension, membership.

A^2 = span{ab : a, b in A}.  For finite-dimensional families the span is the
exact row reduction of all d^2 basis products; for the sequence families it
is an index set, characterized analytically and cross-checked against a
brute-force truncation oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InfiniteCodimension, InternalInconsistency
from .scalars import GR_ONE, GaussianRational
from .algebra import (AlgebraSpec, Element, FiniteList, IndexSet,
                      MaskedPointwise, StructureConstants, TrivialExtension,
                      TruncatedPolyIdeal, ZeroProduct, basis_vector, index_bound,
                      multiply)


# ---------------------------------------------------------------------------
# Exact row reduction
# ---------------------------------------------------------------------------

class RowSpace:
    """An incrementally maintained reduced row-echelon span over Q(i).

    Rows are sparse coefficient dicts, normalized so the pivot (first nonzero
    coordinate) has coefficient 1, and fully reduced against one another.
    Pivoting is by first nonzero coordinate; over exact scalars no magnitude
    heuristics are needed.
    """

    def __init__(self):
        self.rows = {}  # pivot column -> row dict

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residual of vec after eliminating all pivots; vec is not mutated."""
        v = dict(vec)
        for p in sorted(set(v) & set(self.rows)):
            c = v.get(p)
            if c is None or c.is_zero():
                v.pop(p, None)
                continue
            row = self.rows[p]
            for col, rc in row.items():
                s = v.get(col)
                t = (s - c * rc) if s is not None else -(c * rc)
                if t.is_zero():
                    v.pop(col, None)
                else:
                    v[col] = t
        return {k: c for k, c in v.items() if not c.is_zero()}

    def add(self, vec: dict) -> bool:
        """Insert vec into the span; returns True when the rank grew."""
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r)
        inv = GaussianRational(1) / r[p]
        new_row = {k: c * inv for k, c in r.items()}
        # keep existing rows reduced against the new pivot
        for q, row in self.rows.items():
            c = row.get(p)
            if c is None:
                continue
            for col, rc in new_row.items():
                s = row.get(col)
                t = (s - c * rc) if s is not None else -(c * rc)
                if t.is_zero():
                    row.pop(col, None)
                else:
                    row[col] = t
        self.rows[p] = new_row
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def snapshot(self):
        """Deterministic list of rows as sorted item tuples, for comparisons."""
        return [
            tuple(sorted(self.rows[p].items()))
            for p in self.pivots()
        ]


def solve_linear(equations, nvars: int) -> Optional[list]:
    """Solve a list of (coeff dict, rhs) equations exactly.

    Returns one solution (free variables set to 0) or None when inconsistent.
    """
    aug = nvars + 1
    space = RowSpace()
    for coeffs, rhs in equations:
        vec = {k: v for k, v in coeffs.items() if not v.is_zero()}
        if not rhs.is_zero():
            vec[aug] = rhs
        space.add(vec)
    if aug in space.rows:
        return None
    sol = [GaussianRational(0) for _ in range(nvars)]
    for p, row in space.rows.items():
        val = row.get(aug)
        if val is not None:
            sol[p - 1] = val
    return sol


# ---------------------------------------------------------------------------
# Codimension and span descriptions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Codimension:
    kind: str  # "finite" | "countably_infinite"
    value: Optional[int] = None

    @classmethod
    def finite(cls, k: int) -> "Codimension":
        return cls("finite", k)

    @classmethod
    def infinite(cls) -> "Codimension":
        return cls("countably_infinite")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def __str__(self):
        return str(self.value) if self.is_finite else "infinite"

    def to_json(self):
        return {"kind": self.kind, "value": self.value}


@dataclass
class FiniteDimSpan:
    """Row-reduced description of A^2 for a finite-dimensional algebra."""

    dim: int
    space: RowSpace

    @property
    def rank(self) -> int:
        return self.space.rank

    def contains(self, a: Element) -> bool:
        return self.space.contains(a.coeffs)

    def reduce(self, a: Element) -> Element:
        e = Element.__new__(Element)
        e.coeffs = self.space.reduce(a.coeffs)
        return e

    def non_pivot_indices(self):
        piv = set(self.space.rows)
        return [k for k in range(1, self.dim + 1) if k not in piv]


@dataclass
class SequenceSpan:
    """A^2 as an index span for the sequence families.

    extra_rows carries a finite reduced set for families mixing an index
    span with combinations; none of the built-in families needs it.
    """

    span_indices: IndexSet
    extra_rows: Optional[RowSpace] = None

    def contains(self, a: Element) -> bool:
        return self.reduce(a).is_zero()

    def reduce(self, a: Element) -> Element:
        member = self.span_indices.member
        residual = {k: v for k, v in a.coeffs.items() if not member(k)}
        if residual and self.extra_rows is not None:
            residual = self.extra_rows.reduce(residual)
        e = Element.__new__(Element)
        e.coeffs = residual
        return e


SquareSpan = "FiniteDimSpan | SequenceSpan"


def brute_force_square_span(spec: AlgebraSpec, T: int) -> RowSpace:
    """Row-reduce all pairwise products of the first T basis elements.

    The independent oracle behind every analytic span characterization.
    """
    bound = index_bound(spec)
    hi = min(T, bound) if bound is not None else T
    space = RowSpace()
    basis = [basis_vector(k) for k in range(1, hi + 1)]
    for a in basis:
        for b in basis:
            p = multiply(spec, a, b)
            if not p.is_zero():
                space.add(p.coeffs)
    return space


def _analytic_span_indices(spec: AlgebraSpec) -> IndexSet:
    if isinstance(spec, MaskedPointwise):
        return spec.mask
    if isinstance(spec, ZeroProduct):
        return FiniteList(())
    if isinstance(spec, TruncatedPolyIdeal):
        lo = spec.index_of_degree(2 * spec.n)
        return FiniteList(tuple(range(lo, spec.dim + 1)))
    if isinstance(spec, TrivialExtension):
        return _analytic_span_indices(spec.inner).shift(1)
    raise TypeError(f"{spec!r} has no index-span characterization")


def _cross_check_sequence_span(spec: AlgebraSpec, span_indices: IndexSet, T: int):
    """Compare the analytic span against the truncation oracle, exactly."""
    bound = index_bound(spec)
    hi = min(T, bound) if bound is not None else T
    oracle = brute_force_square_span(spec, hi)
    expected = sorted(k for k in range(1, hi + 1) if span_indices.member(k))
    if oracle.pivots() != expected:
        raise InternalInconsistency(
            f"analytic span disagrees with brute force at T={hi}: "
            f"pivots {oracle.pivots()} vs {expected}"
        )
    for p in expected:
        if oracle.rows[p] != {p: GR_ONE}:
            raise InternalInconsistency(
                f"brute-force span at T={hi} is not an index span (row at {p})"
            )


def square_span(spec: AlgebraSpec, cross_check_T: int = 50):
    """Compute A^2 as an explicit span description."""
    if isinstance(spec, StructureConstants):
        space = brute_force_square_span(spec, spec.dim)
        return FiniteDimSpan(spec.dim, space)
    if isinstance(spec, TrivialExtension) and index_bound(spec) is not None:
        inner = square_span(spec.inner, cross_check_T)
        space = RowSpace()
        for row in inner.space.rows.values():
            space.add({k + 1: v for k, v in row.items()})
        return FiniteDimSpan(index_bound(spec), space)
    span_indices = _analytic_span_indices(spec)
    if cross_check_T:
        _cross_check_sequence_span(spec, span_indices, cross_check_T)
    return SequenceSpan(span_indices)


def codimension(spec: AlgebraSpec) -> Codimension:
    """dim(A / A^2), exactly: a finite natural or certified countably infinite."""
    if isinstance(spec, StructureConstants):
        return Codimension.finite(spec.dim - square_span(spec).rank)
    if isinstance(spec, MaskedPointwise):
        if spec.mask.complement_is_infinite():
            return Codimension.infinite()
        return Codimension.finite(_complement_size(spec.mask))
    if isinstance(spec, ZeroProduct):
        return Codimension.infinite()
    if isinstance(spec, TruncatedPolyIdeal):
        return Codimension.finite(spec.n)
    if isinstance(spec, TrivialExtension):
        inner = codimension(spec.inner)
        if inner.is_finite:
            return Codimension.finite(inner.value + 1)
        return Codimension.infinite()
    raise TypeError(f"unknown algebra family {spec!r}")


def _complement_size(s: IndexSet) -> int:
    size = s.complement_size()
    if size is None:
        raise InfiniteCodimension("index-set complement is infinite")
    return size


def complement_indices(spec: AlgebraSpec, span) -> list:
    """Basis indices whose vectors are independent modulo A^2, increasing."""
    if isinstance(span, FiniteDimSpan):
        return span.non_pivot_indices()
    bound = index_bound(spec)
    member = span.span_indices.member
    if bound is not None:
        return [k for k in range(1, bound + 1) if not member(k)]
    return sorted(span.span_indices.complement_members())


def quotient_basis(spec: AlgebraSpec) -> list:
    """Canonical-basis representatives whose classes form a basis of A/A^2."""
    codim = codimension(spec)
    if not codim.is_finite:
        raise InfiniteCodimension("A^2 has countably infinite codimension")
    span = square_span(spec)
    reps = [basis_vector(k) for k in complement_indices(spec, span)]
    if len(reps) != codim.value:
        raise InternalInconsistency(
            f"quotient basis size {len(reps)} != codimension {codim.value}"
        )
    return reps


def contains(span, a: Element) -> bool:
    """Exact membership of a in the computed A^2 span."""
    return span.contains(a)


# ---------------------------------------------------------------------------
# Identity detection and the unital / square-closure check
# ---------------------------------------------------------------------------

def _identity_equations(spec: StructureConstants, side: str):
    d = spec.dim
    eqs = {}
    for (i, j), terms in spec.products.items():
        for m, c in terms:
            if side == "right":
                # e_j * e = e_j: sum_i x_i (e_j e_i) = e_j; here (i, j) is (j', i')
                key = (i, m)
                var = j
            else:
                key = (j, m)
                var = i
            coeffs = eqs.setdefault(key, {})
            coeffs[var] = coeffs.get(var, GaussianRational(0)) + c
    equations = []
    for j in range(1, d + 1):
        for m in range(1, d + 1):
            coeffs = eqs.get((j, m), {})
            rhs = GR_ONE if j == m else GaussianRational(0)
            equations.append((coeffs, rhs))
    return equations


def _verify_identity(spec: StructureConstants, e: Element, side: str) -> bool:
    for j in range(1, spec.dim + 1):
        ej = basis_vector(j)
        prod = multiply(spec, e, ej) if side == "left" else multiply(spec, ej, e)
        if prod != ej:
            return False
    return True


def find_identity(spec: AlgebraSpec):
    """An identity element and its side, or None.

    StructureConstants solves the exact linear systems; the sequence families
    have no identity for structural reasons: a masked-pointwise or zero
    product can never reproduce coordinates off the mask, the truncated
    polynomial family raises every degree, and a trivial extension kills the
    adjoined coordinate of every product.
    """
    if isinstance(spec, StructureConstants):
        left = solve_linear(_identity_equations(spec, "left"), spec.dim)
        right = solve_linear(_identity_equations(spec, "right"), spec.dim)
        lelem = Element({k + 1: v for k, v in enumerate(left)}) if left is not None else None
        relem = Element({k + 1: v for k, v in enumerate(right)}) if right is not None else None
        if lelem is not None and not _verify_identity(spec, lelem, "left"):
            raise InternalInconsistency("left identity candidate fails verification")
        if relem is not None and not _verify_identity(spec, relem, "right"):
            raise InternalInconsistency("right identity candidate fails verification")
        if lelem is not None and relem is not None:
            if lelem != relem:
                raise InternalInconsistency("distinct left and right identities")
            return lelem, "two_sided"
        if lelem is not None:
            return lelem, "left"
        if relem is not None:
            return relem, "right"
        return None
    return None


@dataclass(frozen=True)
class PropositionReport:
    """Outcome of the unital => A = A^2 check.

    status: "pass" (identity found, codimension 0), "converse_fails" (A = A^2
    yet no one-sided identity), "not_applicable", or "internal_inconsistency".
    """

    status: str
    codim: Codimension
    identity_side: Optional[str] = None
    detail: str = ""

    def to_json(self):
        return {
            "status": self.status,
            "codimension": self.codim.to_json(),
            "identity_side": self.identity_side,
            "detail": self.detail,
        }


def check_proposition(spec: AlgebraSpec) -> PropositionReport:
    codim = codimension(spec)
    ident = find_identity(spec)
    if ident is not None:
        elem, side = ident
        if codim.is_finite and codim.value == 0:
            return PropositionReport("pass", codim, side,
                                     "unital, and A^2 spans all of A")
        return PropositionReport(
            "internal_inconsistency", codim, side,
            "an identity exists yet A^2 has nonzero codimension",
        )
    if codim.is_finite and codim.value == 0:
        return PropositionReport(
            "converse_fails", codim, None,
            "A = A^2 yet the algebra has no one-sided identity "
            "(bounded approximate identities are not decidable here)",
        )
    return PropositionReport("not_applicable", codim, None,
                             "no identity and A^2 is a proper subspace")
