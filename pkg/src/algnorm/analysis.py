"""One-call structural analysis of an algebra: span, codimension, identities."""
from __future__ import annotations

from .errors import EmptyComplement, InternalInconsistency
from .algebra import (AlgebraSpec, basis_label, family_name, index_bound,
                      validate)
from .span import (FiniteDimSpan, check_proposition, codimension,
                   find_identity, quotient_basis, square_span)
from .functionals import is_discontinuous_certificate, theorem_phi
from .norms import L1


def analyze_algebra(spec: AlgebraSpec, run_validation: bool = True) -> dict:
    """Dimension, A^2 description, codimension, quotient basis, identity
    detection, the unital check, and the codimension-iff-unbounded verdict."""
    out = {"family": family_name(spec)}
    if run_validation:
        v = validate(spec)
        out["validation"] = v.to_json()
    bound = index_bound(spec)
    out["dimension"] = bound if bound is not None else "infinite"
    span = square_span(spec)
    if isinstance(span, FiniteDimSpan):
        out["square_span"] = {"kind": "finite_dim", "rank": span.rank,
                              "pivot_indices": span.pivots() if hasattr(span, "pivots") else sorted(span.space.rows)}
    else:
        out["square_span"] = {"kind": "index_span",
                              "indices": span.span_indices.describe()}
    codim = codimension(spec)
    out["codimension"] = str(codim)
    if codim.is_finite:
        reps = quotient_basis(spec)
        out["quotient_basis"] = [basis_label(spec, e.support()[0]) for e in reps]
    else:
        out["quotient_basis"] = None
    ident = find_identity(spec)
    if ident is not None:
        elem, side = ident
        out["identity"] = {
            "side": side,
            "element": {str(k): v.to_json() for k, v in sorted(elem.coeffs.items())},
        }
    else:
        out["identity"] = None
    out["unital_square_check"] = check_proposition(spec).to_json()
    try:
        f = theorem_phi(spec)
        cert = is_discontinuous_certificate(f, L1)
        dsap = cert.kind == "unbounded"
        out["dsap"] = {"verdict": dsap, "certificate": cert.to_json()}
    except EmptyComplement:
        dsap = False
        out["dsap"] = {"verdict": False,
                       "certificate": {"kind": "empty_complement",
                                       "note": "A^2 = A: every functional vanishing on A^2 is zero"}}
    if dsap != (not codim.is_finite):
        raise InternalInconsistency(
            f"codimension {codim} disagrees with certificate verdict {dsap}")
    return out
