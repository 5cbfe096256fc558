"""Base norms, the constructed norms p = base + |phi|, and inequivalence witnesses.

The l1 base norm is the default: on it every canonical witness value is an
exact rational, and the constructed-norm arithmetic (p of the k-th witness
equals 1 + k) comes out exactly.  l2 and sup are provided for the
verification suite's generality.

Equivalence of two norms is never decided affirmatively by sampling; the
module only certifies inequivalence, by exhibiting norm-one witness families
with unbounded ratios.
"""
from __future__ import annotations

import io
import csv
from dataclasses import dataclass
from typing import Optional

from .errors import BoundedFunctional, FiniteCodimension, FlagError
from .scalars import (QZERO, Magnitude, exact_sqrt, format_rational,
                      magnitude_squared)
from .algebra import AlgebraSpec, Element, basis_vector
from .span import codimension
from .functionals import (FunctionalSpec, corollary_phi_n,
                          is_discontinuous_certificate, piece_position)

L1 = "l1"
L2 = "l2"
SUP = "sup"
BASE_NORMS = (L1, L2, SUP)


def check_base(base: str) -> str:
    if base not in BASE_NORMS:
        raise FlagError(f"unknown base norm {base!r}; expected one of {BASE_NORMS}")
    return base


@dataclass(frozen=True)
class NormSpec:
    """base norm alone, or p(a) = base(a) + |phi(a)| when a functional is set."""

    base: str
    functional: Optional[FunctionalSpec] = None

    def __post_init__(self):
        check_base(self.base)

    def label(self) -> str:
        if self.functional is None:
            return self.base
        return f"{self.base}+|{self.functional.label()}|"


def scalar_abs(z):
    """(exact |z| or None, squared magnitude), via the squared oracle."""
    re, im = z.re, z.im
    if im == 0:
        return (re if re >= 0 else -re), None
    if re == 0:
        return (im if im >= 0 else -im), None
    ms = re * re + im * im
    return exact_sqrt(ms), ms


def base_magnitude(base: str, a: Element) -> Magnitude:
    """The base norm of a, exact whenever the coordinate magnitudes are."""
    if base == L1:
        exact_total = QZERO
        inexact = None
        for z in a.coeffs.values():
            v, ms = scalar_abs(z)
            if v is not None:
                exact_total = exact_total + v
            elif inexact is None:
                inexact = [ms]
            else:
                inexact.append(ms)
        if inexact is None:
            return Magnitude(exact_total)
        if len(inexact) == 1 and exact_total == 0:
            return Magnitude(None, inexact[0])
        return Magnitude.from_pending(exact_total, tuple(inexact))
    if base == SUP:
        best = QZERO
        for z in a.coeffs.values():
            ms = magnitude_squared(z)
            if ms > best:
                best = ms
        return Magnitude(exact_sqrt(best), best)
    if base == L2:
        sq = QZERO
        for z in a.coeffs.values():
            sq = sq + magnitude_squared(z)
        return Magnitude(exact_sqrt(sq), sq)
    raise FlagError(f"unknown base norm {base!r}")


def eval_norm(spec: NormSpec, a: Element) -> Magnitude:
    """p(a) = base(a) + |phi(a)| (the |phi| term absent for bare base norms)."""
    value = base_magnitude(spec.base, a)
    if spec.functional is not None:
        phi = spec.functional.eval(a)
        if not (phi.re == 0 and phi.im == 0):
            v, ms = scalar_abs(phi)
            value = value + Magnitude(v, ms)
    return value


# ---------------------------------------------------------------------------
# Witness reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessRow:
    k: int
    witness_index: int   # canonical basis index of the witness element
    p_m: object          # exact rational
    p_n: object
    ratio: object        # exact rational lower bound on p_m / p_n

    def to_json(self):
        return {
            "k": self.k,
            "witness_index": self.witness_index,
            "p_m": format_rational(self.p_m),
            "p_n": format_rational(self.p_n),
            "ratio": format_rational(self.ratio),
        }


@dataclass(frozen=True)
class WitnessReport:
    """Rows of exact norm values on canonical witnesses, with their ratios.

    The ratios grow without bound in k, which certifies that no constant C
    can give p_m <= C * p_n.
    """

    m: Optional[int]      # piece index of the growing norm (None: theorem phi)
    n: Optional[int]      # piece index of the bounded norm (None: base norm)
    base: str
    left_label: str
    right_label: str
    rows: tuple

    def to_json(self):
        return {
            "m": self.m,
            "n": self.n,
            "base": self.base,
            "left": self.left_label,
            "right": self.right_label,
            "rows": [r.to_json() for r in self.rows],
            "unbounded": True,
        }

    def to_csv(self) -> str:
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["k", "witness_index", "p_m", "p_n", "ratio"])
        for r in self.rows:
            w.writerow([r.k, r.witness_index, format_rational(r.p_m),
                        format_rational(r.p_n), format_rational(r.ratio)])
        return out.getvalue()


def _exact_norm(spec: NormSpec, a: Element):
    value = eval_norm(spec, a)
    if value.exact is None:
        raise FlagError("witness construction requires an exact norm value")
    return value.exact


def inequivalence_witness(spec: AlgebraSpec, m: int, n: int, k_max: int,
                          base: str = L1) -> WitnessReport:
    """Witnesses separating p_m from p_n: slot-k members of piece m.

    Under the l1 base, p_m of the k-th witness is exactly 1 + k while p_n is
    exactly 2 (members of a foreign piece take functional value 1), so the
    ratio (1+k)/2 grows without bound.
    """
    check_base(base)
    if m == n or m < 1 or n < 1:
        raise FlagError("need two distinct piece indices m, n >= 1")
    if k_max < 2:
        raise FlagError("k_max must be >= 2")
    if codimension(spec).is_finite:
        raise FiniteCodimension(
            "the construction needs A^2 of infinite codimension")
    phi_m = corollary_phi_n(spec, m)
    phi_n = FunctionalSpec("corollary", phi_m.enum, piece=n)
    norm_m = NormSpec(base, phi_m)
    norm_n = NormSpec(base, phi_n)
    rows = []
    for k in range(2, k_max + 1):
        idx = phi_m.enum.index_at(piece_position(m, k))
        witness = basis_vector(idx)
        vm = _exact_norm(norm_m, witness)
        vn = _exact_norm(norm_n, witness)
        rows.append(WitnessRow(k, idx, vm, vn, vm / vn))
    return WitnessReport(m, n, base, f"p_{m}", f"p_{n}", tuple(rows))


def base_vs_p_witness(spec: AlgebraSpec, f: FunctionalSpec, k_max: int,
                      base: str = L1) -> WitnessReport:
    """Witnesses separating p = base + |phi| from the base norm itself.

    Raises BoundedFunctional when the discontinuity certificate is bounded
    (then p is equivalent to the base norm and no witness family exists).
    """
    check_base(base)
    if k_max < 2:
        raise FlagError("k_max must be >= 2")
    cert = is_discontinuous_certificate(f, base)
    if cert.kind != "unbounded":
        raise BoundedFunctional(
            f"|phi| is bounded on the basis (sup = {cert.sup}); "
            "p is equivalent to the base norm")
    norm_p = NormSpec(base, f)
    norm_base = NormSpec(base)
    rows = []
    for k in range(2, k_max + 1):
        if f.kind == "theorem":
            idx = f.enum.index_at(k)
        else:
            idx = f.enum.index_at(piece_position(f.piece, k))
        witness = basis_vector(idx)
        vp = _exact_norm(norm_p, witness)
        vb = _exact_norm(norm_base, witness)
        rows.append(WitnessRow(k, idx, vp, vb, vp / vb))
    return WitnessReport(None, None, base, f"p[{f.label()}]", base, tuple(rows))


# ---------------------------------------------------------------------------
# Finite families of norms: observed dominations, candidate extremes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairObservation:
    left: str
    right: str
    pointwise_le: bool   # left(x) <= right(x) for every sampled x
    max_ratio: str       # largest observed left(x)/right(x)
    exact_relation: Optional[str] = None

    def to_json(self):
        out = {
            "left": self.left,
            "right": self.right,
            "pointwise_le": self.pointwise_le,
            "max_ratio": self.max_ratio,
        }
        if self.exact_relation:
            out["exact_relation"] = self.exact_relation
        return out


@dataclass(frozen=True)
class ChainReport:
    """Sampled domination structure of a finite family of norms.

    Heuristic by construction: observations are over the provided sample,
    except for pairs with a known analytic relation (a bare base norm is
    pointwise below any p built on it), which are reported exactly.
    """

    labels: tuple
    pairs: tuple
    candidate_max: Optional[str]
    candidate_min: Optional[str]

    def to_json(self):
        return {
            "heuristic": "sampled, not proven",
            "norms": list(self.labels),
            "pairs": [p.to_json() for p in self.pairs],
            "candidate_max": self.candidate_max,
            "candidate_min": self.candidate_min,
        }


def finite_chain_extremes(norms: list, sample: list) -> ChainReport:
    if not norms:
        raise FlagError("need at least one norm")
    labels = tuple(s.label() for s in norms)
    values = []
    for x in sample:
        values.append([eval_norm(s, x) for s in norms])
    pairs = []
    pointwise = {}
    for i, si in enumerate(norms):
        for j, sj in enumerate(norms):
            if i == j:
                continue
            le_all = True
            best_ratio = None
            for row in values:
                vi, vj = row[i], row[j]
                if not vi.le(vj):
                    le_all = False
                if vj.approx > 0 or (vj.exact is not None and vj.exact > 0):
                    if vi.exact is not None and vj.exact is not None and vj.exact > 0:
                        r = vi.exact / vj.exact
                        key = float(r)
                        disp = format_rational(r)
                    elif vj.approx > 0:
                        key = vi.approx / vj.approx
                        disp = repr(key)
                    else:
                        continue
                    if best_ratio is None or key > best_ratio[0]:
                        best_ratio = (key, disp)
            exact = None
            if (si.functional is not None and sj.functional is None
                    and si.base == sj.base):
                exact = f"{labels[j]}(a) <= {labels[i]}(a) for all a (additive |phi| term)"
            if (sj.functional is not None and si.functional is None
                    and si.base == sj.base):
                exact = f"{labels[i]}(a) <= {labels[j]}(a) for all a (additive |phi| term)"
                le_all = True
            pairs.append(PairObservation(
                labels[i], labels[j], le_all,
                best_ratio[1] if best_ratio else "0", exact))
            pointwise[(i, j)] = le_all
    candidate_max = None
    candidate_min = None
    for i in range(len(norms)):
        if all(pointwise.get((j, i), True) for j in range(len(norms)) if j != i):
            candidate_max = labels[i]
            break
    for i in range(len(norms)):
        if all(pointwise.get((i, j), True) for j in range(len(norms)) if j != i):
            candidate_min = labels[i]
            break
    return ChainReport(labels, tuple(pairs), candidate_max, candidate_min)
