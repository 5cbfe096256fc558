import pytest
from hypothesis import given
import hypothesis.strategies as st

from algnorm.errors import (IndexOutOfRange, MalformedTable, NotAssociative,
                            ParseError)
from algnorm.scalars import gr
from algnorm.algebra import (All, ComplementOfFiniteList, Element, Evens,
                             FiniteList, MaskedPointwise, Odds, Residue,
                             Shifted, StructureConstants, TrivialExtension,
                             TruncatedPolyIdeal, ZeroProduct, basis_vector,
                             canonical_basis_element, element, index_bound,
                             index_set_from_json, multiply, spec_from_json,
                             spec_to_json, validate)

from conftest import elements, scalars


# ---------------------------------------------------------------------------
# index sets
# ---------------------------------------------------------------------------

INDEX_SETS = [
    All(),
    Evens(),
    Odds(),
    Residue(3, 1),
    Residue(3, 0),
    Residue(1, 0),
    FiniteList((2, 5, 9)),
    ComplementOfFiniteList((1, 4)),
    Shifted(Evens(), 1),
    Shifted(ComplementOfFiniteList((2,)), 3),
]


@pytest.mark.parametrize("s", INDEX_SETS, ids=lambda s: s.describe())
def test_count_matches_membership(s):
    for k in range(0, 60):
        assert s.count_upto(k) == sum(1 for i in range(1, k + 1) if s.member(i))


@pytest.mark.parametrize("s", INDEX_SETS, ids=lambda s: s.describe())
def test_nth_inverts_count(s):
    members = [i for i in range(1, 200) if s.member(i)][:12]
    for m, k in enumerate(members, start=1):
        assert s.nth(m) == k
        assert s.count_upto(k) == m


def test_complement_bookkeeping():
    assert All().complement_size() == 0
    assert ComplementOfFiniteList((3, 1)).complement_members() == (1, 3)
    assert Evens().complement_is_infinite()
    assert not All().complement_is_infinite()
    assert Residue(1, 0).complement_size() == 0
    s = Shifted(ComplementOfFiniteList((2,)), 3)
    assert s.complement_members() == (1, 2, 3, 5)
    with pytest.raises(ValueError):
        Evens().complement_members()


def test_shift_normalization():
    assert Odds().shift(1) == Evens()
    assert All().shift(2) == ComplementOfFiniteList((1, 2))
    assert FiniteList((1, 3)).shift(2) == FiniteList((3, 5))
    assert ComplementOfFiniteList((2,)).shift(1) == ComplementOfFiniteList((1, 3))
    s = Evens().shift(1)  # odds >= 3: no simpler form
    assert isinstance(s, Shifted)
    assert [k for k in range(1, 10) if s.member(k)] == [3, 5, 7, 9]
    assert s.shift(1) == Evens().shift(2)


@pytest.mark.parametrize("s", INDEX_SETS, ids=lambda s: s.describe())
def test_index_set_json_round_trip(s):
    assert index_set_from_json(s.to_json()) == s


def test_bad_index_sets():
    with pytest.raises(ParseError):
        Residue(2, 2)
    with pytest.raises(ParseError):
        FiniteList((0,))
    with pytest.raises(ParseError):
        index_set_from_json({"kind": "galaxy"})


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

def test_element_drops_zeros_and_validates():
    e = element({1: 0, 2: gr(1, -1)})
    assert e.support() == (2,)
    with pytest.raises(IndexOutOfRange):
        element({0: 1})


@given(elements(), elements())
def test_element_addition_matches_coordinates(a, b):
    s = a + b
    for k in set(a.coeffs) | set(b.coeffs):
        assert s.get(k) == a.get(k) + b.get(k)
    assert (s - b) == a


def test_element_json_round_trip():
    e = element({3: gr("1/2", "2/3"), 7: gr(-1)})
    assert Element.from_json(e.to_json()) == e
    with pytest.raises(ParseError):
        Element.from_json({"wrong": {}})


# ---------------------------------------------------------------------------
# multiplication per family
# ---------------------------------------------------------------------------

def test_masked_pointwise_product():
    A = MaskedPointwise(Evens())
    a = element({2: 1, 3: 1})
    assert multiply(A, a, a) == element({2: 1})  # e3*e3 is masked away


def test_trivial_extension_kills_adjoined():
    A = TrivialExtension(MaskedPointwise(All()))
    a = element({1: gr(5)})      # (0, 5)
    b = element({1: gr(-2, 1)})  # (0, -2+i)
    assert multiply(A, a, b).is_zero()
    c = element({1: 1, 2: 1})    # (e1, 1)
    assert multiply(A, c, c) == element({2: 1})


def test_truncated_poly_products():
    A = TruncatedPolyIdeal(2, 5)
    x2, x3 = basis_vector(1), basis_vector(2)
    assert multiply(A, x2, x3) == basis_vector(4)   # x^5
    assert multiply(A, x3, x3).is_zero()            # degree 6 dropped
    assert A.degree_of_index(4) == 5 and A.index_of_degree(2) == 1


def test_structure_constants_product():
    # C[x]/(x^3): e_i e_j = e_(i+j-1) when in range
    table = tuple((i, j, i + j - 1, gr(1)) for i in (1, 2, 3) for j in (1, 2, 3)
                  if i + j - 1 <= 3)
    A = StructureConstants(3, table)
    assert multiply(A, basis_vector(2), basis_vector(2)) == basis_vector(3)
    assert multiply(A, basis_vector(3), basis_vector(2)).is_zero()
    with pytest.raises(IndexOutOfRange):
        multiply(A, basis_vector(4), basis_vector(1))


def test_zero_product():
    A = ZeroProduct()
    assert multiply(A, element({1: 1, 5: gr(2, 3)}), element({1: 1})).is_zero()


@pytest.mark.parametrize("spec", [
    MaskedPointwise(Evens()),
    MaskedPointwise(All()),
    ZeroProduct(),
    TruncatedPolyIdeal(2, 9),
    TrivialExtension(MaskedPointwise(Odds())),
], ids=lambda s: type(s).__name__)
@given(a=elements(max_index=8, max_size=3), b=elements(max_index=8, max_size=3),
       c=elements(max_index=8, max_size=3), z=scalars)
def test_bilinearity_and_associativity(spec, a, b, c, z):
    left = multiply(spec, a + c, b)
    assert left == multiply(spec, a, b) + multiply(spec, c, b)
    right = multiply(spec, a, b + c)
    assert right == multiply(spec, a, b) + multiply(spec, a, c)
    assert multiply(spec, a.scale(z), b) == multiply(spec, a, b).scale(z)
    assert multiply(spec, multiply(spec, a, b), c) == multiply(spec, a, multiply(spec, b, c))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def test_validate_accepts_truncated_power_table():
    table = tuple((i, j, i + j - 1, gr(1)) for i in (1, 2, 3) for j in (1, 2, 3)
                  if i + j - 1 <= 3)
    report = validate(StructureConstants(3, table))
    assert report.ok and report.mode == "exhaustive" and report.checks == 27


def test_validate_rejects_nonassociative_table():
    # e1 e1 = e2, e1 e2 = e1, e2 e1 = 0: (e1 e1) e1 = 0 but e1 (e1 e1) = e1
    A = StructureConstants(2, ((1, 1, 2, gr(1)), (1, 2, 1, gr(1))))
    with pytest.raises(NotAssociative) as exc:
        validate(A)
    assert exc.value.witness == (1, 1, 1)


def test_validate_zero_product_trivially_ok():
    assert validate(ZeroProduct(), triples=64).ok


def test_malformed_tables():
    with pytest.raises(MalformedTable):
        StructureConstants(2, ((1, 1, 3, gr(1)),))  # target out of range
    with pytest.raises(MalformedTable):
        StructureConstants(2, ((1, 1, 2, gr(1)), (1, 1, 2, gr(2))))  # duplicate
    with pytest.raises(MalformedTable):
        StructureConstants(0, ())


def test_canonical_basis_element():
    A = TruncatedPolyIdeal(2, 5)
    assert canonical_basis_element(A, 1) == basis_vector(1)
    assert canonical_basis_element(MaskedPointwise(All()), 5) == basis_vector(5)
    with pytest.raises(IndexOutOfRange):
        canonical_basis_element(StructureConstants(3, ()), 4)


def test_truncation_parameter_guard():
    with pytest.raises(ParseError):
        TruncatedPolyIdeal(3, 5)  # N < 2n leaves no square at all


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("spec", [
    MaskedPointwise(Residue(3, 2)),
    ZeroProduct(),
    TruncatedPolyIdeal(2, 6),
    TrivialExtension(TrivialExtension(ZeroProduct())),
    StructureConstants(2, ((1, 1, 1, gr("1/2", "1/3")),)),
], ids=lambda s: type(s).__name__)
def test_spec_json_round_trip(spec):
    assert spec_from_json(spec_to_json(spec)) == spec


def test_spec_from_json_errors():
    with pytest.raises(ParseError):
        spec_from_json({"family": "octonions"})
    with pytest.raises(ParseError):
        spec_from_json(["not", "an", "object"])
    with pytest.raises(ParseError):
        spec_from_json({"family": "truncated_poly_ideal", "n": 3, "N": 4})


def test_index_bound():
    assert index_bound(ZeroProduct()) is None
    assert index_bound(TruncatedPolyIdeal(3, 12)) == 10
    assert index_bound(TrivialExtension(StructureConstants(3, ()))) == 4
    assert index_bound(TrivialExtension(ZeroProduct())) is None
