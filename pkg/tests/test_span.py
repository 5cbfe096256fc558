import pytest
from hypothesis import given

from algnorm.errors import InfiniteCodimension
from algnorm.scalars import gr
from algnorm.algebra import (All, ComplementOfFiniteList, Evens,
                             MaskedPointwise, Odds, StructureConstants,
                             TrivialExtension, TruncatedPolyIdeal, ZeroProduct,
                             basis_vector, element, multiply)
from algnorm.span import (Codimension, RowSpace, brute_force_square_span,
                          check_proposition, codimension, contains,
                          find_identity, quotient_basis, solve_linear,
                          square_span)
from algnorm.gallery import mat2_algebra, truncated_power_algebra

from conftest import elements


# ---------------------------------------------------------------------------
# row reduction engine
# ---------------------------------------------------------------------------

def test_rowspace_reduces_and_ranks():
    space = RowSpace()
    assert space.add({1: gr(1), 2: gr(1)})
    assert space.add({2: gr(1), 3: gr(1)})
    assert not space.add({1: gr(1), 3: gr(1), 2: gr(2)})  # dependent
    assert space.rank == 2 and space.pivots() == [1, 2]
    assert space.contains({1: gr(2), 2: gr(2)})
    assert not space.contains({3: gr(1)})
    # rows stay fully reduced: the pivot-1 row has no pivot-2 component
    assert 2 not in space.rows[1]


def test_solve_linear():
    # x + y = 3, x - y = 1  ->  x = 2, y = 1
    eqs = [({1: gr(1), 2: gr(1)}, gr(3)), ({1: gr(1), 2: gr(-1)}, gr(1))]
    sol = solve_linear(eqs, 2)
    assert sol == [gr(2), gr(1)]
    # inconsistent
    eqs.append(({1: gr(1), 2: gr(1)}, gr(0)))
    assert solve_linear(eqs, 2) is None


# ---------------------------------------------------------------------------
# analytic spans against the brute-force oracle
# ---------------------------------------------------------------------------

SEQUENCE_FAMILIES = [
    MaskedPointwise(All()),
    MaskedPointwise(Evens()),
    MaskedPointwise(Odds()),
    MaskedPointwise(ComplementOfFiniteList((1, 2, 3))),
    ZeroProduct(),
    TruncatedPolyIdeal(3, 12),
    TrivialExtension(MaskedPointwise(All())),
    TrivialExtension(ZeroProduct()),
    TrivialExtension(MaskedPointwise(Evens())),
]


@pytest.mark.parametrize("T", [10, 25, 50])
@pytest.mark.parametrize("spec", SEQUENCE_FAMILIES, ids=str)
def test_analytic_span_equals_brute_force(spec, T):
    span = square_span(spec, cross_check_T=0)
    oracle = brute_force_square_span(spec, T)
    hi = T if not isinstance(spec, TruncatedPolyIdeal) else spec.dim
    expected = sorted(k for k in range(1, min(T, hi) + 1)
                      if span.span_indices.member(k))
    assert oracle.pivots() == expected
    for p in expected:
        assert oracle.rows[p] == {p: gr(1)}


def test_square_span_examples():
    assert square_span(MaskedPointwise(Evens())).span_indices == Evens()
    assert square_span(ZeroProduct()).span_indices.size() == 0
    # lowest square degree is 2n = 6: indices 4..10 for degrees 6..12
    s = square_span(TruncatedPolyIdeal(3, 12))
    assert [k for k in range(1, 11) if s.span_indices.member(k)] == list(range(4, 11))


def test_contains_examples():
    s = square_span(MaskedPointwise(Evens()))
    assert contains(s, basis_vector(4))
    assert not contains(s, element({3: 1, 4: 1}))
    assert contains(square_span(ZeroProduct()), element({}))


@pytest.mark.parametrize("spec", SEQUENCE_FAMILIES + [truncated_power_algebra(3), mat2_algebra()], ids=str)
@given(a=elements(max_index=9, max_size=3), b=elements(max_index=9, max_size=3))
def test_products_always_land_in_span(spec, a, b):
    from algnorm.algebra import index_bound
    bound = index_bound(spec)
    if bound is not None:
        a = element({k: v for k, v in a.coeffs.items() if k <= bound})
        b = element({k: v for k, v in b.coeffs.items() if k <= bound})
    span = square_span(spec, cross_check_T=0)
    assert contains(span, multiply(spec, a, b))


# ---------------------------------------------------------------------------
# codimension
# ---------------------------------------------------------------------------

def test_codimension_examples():
    assert codimension(TruncatedPolyIdeal(3, 12)) == Codimension.finite(3)
    assert codimension(MaskedPointwise(All())) == Codimension.finite(0)
    assert codimension(MaskedPointwise(Odds())) == Codimension.infinite()
    assert codimension(ZeroProduct()) == Codimension.infinite()
    assert codimension(MaskedPointwise(ComplementOfFiniteList((1, 2)))) == Codimension.finite(2)


def test_trivial_extension_codimension_is_inner_plus_one():
    for inner, expect in [
        (MaskedPointwise(All()), 1),
        (MaskedPointwise(ComplementOfFiniteList((1, 2, 3))), 4),
        (truncated_power_algebra(3), 1),
    ]:
        got = codimension(TrivialExtension(inner))
        assert got == Codimension.finite(expect)
    assert codimension(TrivialExtension(ZeroProduct())) == Codimension.infinite()


def test_finite_dim_codimension_is_dim_minus_rank():
    for spec in (truncated_power_algebra(2), truncated_power_algebra(4), mat2_algebra()):
        span = square_span(spec)
        codim = codimension(spec)
        assert codim.value == span.dim - span.rank
        assert len(quotient_basis(spec)) == codim.value


def test_quotient_basis_examples():
    reps = quotient_basis(TruncatedPolyIdeal(3, 12))
    assert reps == [basis_vector(1), basis_vector(2), basis_vector(3)]  # x^3 x^4 x^5
    assert quotient_basis(MaskedPointwise(All())) == []
    reps = quotient_basis(MaskedPointwise(ComplementOfFiniteList((1, 2))))
    assert reps == [basis_vector(1), basis_vector(2)]
    reps = quotient_basis(TrivialExtension(MaskedPointwise(All())))
    assert reps == [basis_vector(1)]  # the adjoined direction
    with pytest.raises(InfiniteCodimension):
        quotient_basis(ZeroProduct())


def test_quotient_basis_representatives_outside_span():
    for spec in SEQUENCE_FAMILIES:
        codim = codimension(spec)
        if not codim.is_finite:
            continue
        span = square_span(spec, cross_check_T=0)
        for rep in quotient_basis(spec):
            assert not contains(span, rep)


# ---------------------------------------------------------------------------
# identity detection and the square-closure check
# ---------------------------------------------------------------------------

def test_find_identity_truncated_power():
    e, side = find_identity(truncated_power_algebra(3))
    assert side == "two_sided" and e == basis_vector(1)


def test_find_identity_mat2():
    e, side = find_identity(mat2_algebra())
    assert side == "two_sided"
    assert e == element({1: 1, 4: 1})  # E11 + E22


def test_find_identity_one_sided():
    # e1 e1 = e1, e1 e2 = e2: e1 is a left identity, nothing is a right one
    A = StructureConstants(2, ((1, 1, 1, gr(1)), (1, 2, 2, gr(1))))
    e, side = find_identity(A)
    assert side == "left" and e == basis_vector(1)


def test_no_identity_for_sequence_families():
    assert find_identity(MaskedPointwise(All())) is None
    assert find_identity(ZeroProduct()) is None
    assert find_identity(TruncatedPolyIdeal(2, 6)) is None
    assert find_identity(TrivialExtension(MaskedPointwise(All()))) is None


def test_check_proposition_cases():
    assert check_proposition(truncated_power_algebra(3)).status == "pass"
    r = check_proposition(MaskedPointwise(All()))
    assert r.status == "converse_fails"
    assert check_proposition(ZeroProduct()).status == "not_applicable"
    assert check_proposition(mat2_algebra()).status == "pass"


def test_nonzero_codim_structure_constants_span_reduction():
    # e1 e1 = e1 + e2: the span is one line not aligned to any coordinate
    A = StructureConstants(2, ((1, 1, 1, gr(1)), (1, 1, 2, gr(1))))
    span = square_span(A)
    assert span.rank == 1
    assert codimension(A) == Codimension.finite(1)
    assert contains(span, element({1: 1, 2: 1}))
    assert not contains(span, basis_vector(1))
    assert len(quotient_basis(A)) == 1
