"""algnorm: exact computation of square subalgebras A^2, their codimension,
discontinuous functionals vanishing on A^2, and the inequivalent algebra
norms p(a) = ||a|| + |phi(a)| built from them, with a property-based
verification harness over exact Gaussian-rational arithmetic."""

from .scalars import (GaussianRational, Magnitude, gr, magnitude,
                      magnitude_squared, parse_rational, format_rational)
from .algebra import (All, ComplementOfFiniteList, Element, Evens, FiniteList,
                      MaskedPointwise, Odds, Residue, StructureConstants,
                      TrivialExtension, TruncatedPolyIdeal, ZeroProduct,
                      basis_vector, canonical_basis_element, element, multiply,
                      spec_from_json, spec_to_json, validate)
from .span import (Codimension, check_proposition, codimension, contains,
                   find_identity, quotient_basis, square_span)
from .functionals import (FunctionalSpec, corollary_phi_n, enumerate_complement,
                          eval_phi, is_discontinuous_certificate,
                          partition_position, piece_position, theorem_phi)
from .norms import (L1, L2, SUP, NormSpec, base_vs_p_witness, eval_norm,
                    finite_chain_extremes, inequivalence_witness)
from .verify import (SamplerConfig, check_kernel_condition, check_norm_axioms,
                     check_submultiplicative, check_theorem_equivalence,
                     run_suite)
from .analysis import analyze_algebra
from .gallery import list_entries, run_entry

__version__ = "0.1.0"
