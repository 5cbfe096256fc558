"""Built-in catalogue of example algebras with their expected analysis results.

Computable entries self-test on first listing: the recorded expectations are
recomputed through the span engine and a mismatch raises immediately.  Two
entries (the little-l2 sequence algebra and the disc algebra) have no finite
representation and return documentation instead of a computation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import InternalInconsistency, UnknownEntry
from .scalars import GR_ONE
from .algebra import (AlgebraSpec, All, Evens, MaskedPointwise,
                      StructureConstants, TrivialExtension, TruncatedPolyIdeal,
                      ZeroProduct, basis_label)
from .span import Codimension, codimension
from .analysis import analyze_algebra
from .norms import inequivalence_witness
from .functionals import corollary_phi_n


# ---------------------------------------------------------------------------
# Structure-constant fixtures
# ---------------------------------------------------------------------------

def truncated_power_algebra(k: int) -> StructureConstants:
    """C[x]/(x^k) over the Gaussian rationals: basis 1, x, ..., x^(k-1)."""
    table = tuple(
        (i, j, i + j - 1, GR_ONE)
        for i in range(1, k + 1)
        for j in range(1, k + 1)
        if i + j - 1 <= k
    )
    return StructureConstants(k, table)


def mat2_algebra() -> StructureConstants:
    """The full 2x2 matrix algebra on the matrix-unit basis E11 E12 E21 E22."""
    units = {1: (1, 1), 2: (1, 2), 3: (2, 1), 4: (2, 2)}
    rev = {v: k for k, v in units.items()}
    table = []
    for i, (a, b) in units.items():
        for j, (c, d) in units.items():
            if b == c:
                table.append((i, j, rev[(a, d)], GR_ONE))
    return StructureConstants(4, tuple(table))


# ---------------------------------------------------------------------------
# Entries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GalleryEntry:
    id: str
    summary: str
    symbolic: bool = False
    build: Optional[Callable] = None           # params -> AlgebraSpec
    expected_codim: Optional[Callable] = None  # params -> Codimension
    expected_dsap: Optional[Callable] = None   # params -> bool
    params_doc: str = ""
    notes: tuple = ()
    doc: str = ""


def _poly_params(params: dict):
    n = int(params.get("n", 3))
    N = int(params.get("N", 4 * n))
    return n, N


_ENTRIES = [
    GalleryEntry(
        id="ex-c00",
        summary="finitely supported sequences, full pointwise product (c00)",
        build=lambda p: MaskedPointwise(All()),
        expected_codim=lambda p: Codimension.finite(0),
        expected_dsap=lambda p: False,
        notes=(
            "A^2 = A although the algebra has no one-sided identity and no "
            "bounded approximate identity: square-closure does not force "
            "unitality.",
        ),
    ),
    GalleryEntry(
        id="ex-masked-evens",
        summary="pointwise product surviving only on even indices",
        build=lambda p: MaskedPointwise(Evens()),
        expected_codim=lambda p: Codimension.infinite(),
        expected_dsap=lambda p: True,
        notes=(
            "the odd directions are annihilated by every product, giving "
            "countably infinite codimension and the full norm family.",
        ),
    ),
    GalleryEntry(
        id="ex-zero-product",
        summary="sequence space with all products zero",
        build=lambda p: ZeroProduct(),
        expected_codim=lambda p: Codimension.infinite(),
        expected_dsap=lambda p: True,
    ),
    GalleryEntry(
        id="ex3-trivial-extension",
        summary="trivial extension of c00: (a, alpha)(b, beta) = (ab, 0)",
        build=lambda p: TrivialExtension(MaskedPointwise(All())),
        expected_codim=lambda p: Codimension.finite(1),
        expected_dsap=lambda p: False,
        notes=(
            "(A x C)^2 = A^2 x {0}; with a square-closed inner algebra the "
            "codimension is exactly 1 (the adjoined direction), so the "
            "infinite inequivalent-norm construction does not apply here; "
            "an infinite norm family on this extension needs a different "
            "argument than the one this package mechanizes.",
        ),
    ),
    GalleryEntry(
        id="ex3b-trivial-extension-zero",
        summary="trivial extension of the zero-product algebra",
        build=lambda p: TrivialExtension(ZeroProduct()),
        expected_codim=lambda p: Codimension.infinite(),
        expected_dsap=lambda p: True,
        notes=(
            "with a zero-product inner algebra the extension keeps infinite "
            "codimension, connecting the trivial extension to the "
            "inequivalent-norm family.",
        ),
    ),
    GalleryEntry(
        id="ex4-poly-ideal",
        summary="polynomials with vanishing derivatives: x^n F[x], truncated at degree N",
        build=lambda p: TruncatedPolyIdeal(*_poly_params(p)),
        expected_codim=lambda p: Codimension.finite(_poly_params(p)[0]),
        expected_dsap=lambda p: False,
        params_doc="--n lowest degree (default 3), --N truncation (default 4n)",
        notes=(
            "A^2 = x^n A: the quotient classes are x^n, ..., x^(2n-1); the "
            "monomials 1, x, ..., x^(n-1) sometimes quoted as a quotient "
            "basis lie outside the algebra itself.",
        ),
    ),
    GalleryEntry(
        id="ex1-l2",
        summary="little-l2 sequences with pointwise product (documentation only)",
        symbolic=True,
        doc=(
            "The pointwise square of the l2 sequence algebra is the l1 "
            "sequence space, which has infinite codimension in l2, so the "
            "inequivalent-norm construction applies to it.  Its elements are "
            "not finitely supported, so this entry is documentation: no "
            "finite computation represents the algebra faithfully."
        ),
        notes=("expected codimension: infinite (not computed at desk scale)",),
    ),
    GalleryEntry(
        id="ex2-disc-algebra",
        summary="the disc algebra (documentation only)",
        symbolic=True,
        doc=(
            "The disc algebra is unital, hence equal to its own square, and "
            "still carries infinitely many inequivalent algebra norms: "
            "infinite codimension of A^2 is sufficient for an infinite norm "
            "family but not necessary.  Analytic function algebras have no "
            "finite coefficient representation, so this entry is "
            "documentation only."
        ),
        notes=("expected codimension: 0 (unital), yet infinitely many norms exist",),
    ),
    GalleryEntry(
        id="ex-cx2",
        summary="C[x]/(x^2) by structure constants (unital)",
        build=lambda p: truncated_power_algebra(2),
        expected_codim=lambda p: Codimension.finite(0),
        expected_dsap=lambda p: False,
    ),
    GalleryEntry(
        id="ex-cx3",
        summary="C[x]/(x^3) by structure constants (unital)",
        build=lambda p: truncated_power_algebra(3),
        expected_codim=lambda p: Codimension.finite(0),
        expected_dsap=lambda p: False,
    ),
    GalleryEntry(
        id="ex-cx4",
        summary="C[x]/(x^4) by structure constants (unital)",
        build=lambda p: truncated_power_algebra(4),
        expected_codim=lambda p: Codimension.finite(0),
        expected_dsap=lambda p: False,
    ),
    GalleryEntry(
        id="ex-mat2",
        summary="full 2x2 matrix algebra by structure constants (unital)",
        build=lambda p: mat2_algebra(),
        expected_codim=lambda p: Codimension.finite(0),
        expected_dsap=lambda p: False,
    ),
]

_BY_ID = {e.id: e for e in _ENTRIES}
_SELF_TESTED = False


def _self_test():
    """Expected values must reproduce under the span engine."""
    global _SELF_TESTED
    if _SELF_TESTED:
        return
    for entry in _ENTRIES:
        if entry.symbolic:
            continue
        spec = entry.build({})
        got = codimension(spec)
        want = entry.expected_codim({})
        if got != want:
            raise InternalInconsistency(
                f"gallery entry {entry.id}: codimension {got} != expected {want}")
    _SELF_TESTED = True


def list_entries() -> list:
    _self_test()
    return list(_ENTRIES)


def get_entry(entry_id: str) -> GalleryEntry:
    """Look up by id; a unique id prefix works too (ex4 -> ex4-poly-ideal)."""
    _self_test()
    entry = _BY_ID.get(entry_id)
    if entry is None:
        matches = [e for i, e in _BY_ID.items() if i.startswith(entry_id)]
        if len(matches) == 1:
            return matches[0]
        detail = ("ambiguous prefix" if matches else "no gallery entry")
        raise UnknownEntry(f"{detail} {entry_id!r}; "
                           f"known: {', '.join(sorted(_BY_ID))}")
    return entry


_WITNESS_PIECES = 5
_WITNESS_K = 10


def _witness_matrix(spec: AlgebraSpec) -> dict:
    """Pairwise inequivalence summary: ratio of p_m to p_n at the k=10 witness."""
    out = {}
    for m in range(1, _WITNESS_PIECES + 1):
        row = {}
        for n in range(1, _WITNESS_PIECES + 1):
            if m == n:
                row[str(n)] = "-"
            else:
                rep = inequivalence_witness(spec, m, n, _WITNESS_K)
                last = rep.rows[-1]
                row[str(n)] = f"{last.ratio} at k={last.k}"
        out[str(m)] = row
    return out


def run_entry(entry_id: str, params: Optional[dict] = None) -> dict:
    """Full analysis of one entry, compared against its recorded expectations."""
    entry = get_entry(entry_id)
    params = params or {}
    if entry.symbolic:
        return {
            "id": entry.id,
            "symbolic": True,
            "summary": entry.summary,
            "doc": entry.doc,
            "notes": list(entry.notes),
        }
    spec = entry.build(params)
    report = analyze_algebra(spec)
    expected_codim = entry.expected_codim(params)
    expected_dsap = entry.expected_dsap(params)
    matches = (
        str(expected_codim) == report["codimension"]
        and expected_dsap == report["dsap"]["verdict"]
    )
    out = {
        "id": entry.id,
        "symbolic": False,
        "summary": entry.summary,
        "analysis": report,
        "expected": {
            "codimension": str(expected_codim),
            "dsap": expected_dsap,
        },
        "match": matches,
        "notes": list(entry.notes),
    }
    if not matches:
        raise InternalInconsistency(
            f"gallery entry {entry.id}: analysis disagrees with expectations: "
            f"{out['expected']} vs codim {report['codimension']}, "
            f"dsap {report['dsap']['verdict']}")
    if not codimension(spec).is_finite:
        out["pairwise_witness_matrix"] = _witness_matrix(spec)
        # a sample functional value table for the first corollary functional
        phi1 = corollary_phi_n(spec, 1)
        out["sample_phi_1"] = {
            basis_label(spec, phi1.enum.index_at(m)): phi1.basis_value(
                phi1.enum.index_at(m))
            for m in range(1, 9)
        }
    return out
