import pytest

from algnorm.errors import UnknownEntry
from algnorm.algebra import TruncatedPolyIdeal
from algnorm.span import Codimension, codimension
from algnorm.gallery import (get_entry, list_entries, mat2_algebra, run_entry,
                             truncated_power_algebra)


def test_gallery_has_required_entries():
    entries = list_entries()
    ids = {e.id for e in entries}
    assert {"ex-c00", "ex-masked-evens", "ex-zero-product",
            "ex3-trivial-extension", "ex4-poly-ideal",
            "ex1-l2", "ex2-disc-algebra"} <= ids
    assert len(entries) >= 7
    assert sum(1 for e in entries if e.symbolic) == 2


def test_expected_values_reproduce():
    for entry in list_entries():
        if entry.symbolic:
            continue
        assert codimension(entry.build({})) == entry.expected_codim({})


def test_poly_ideal_codimension_sweep():
    # codimension equals the lowest-degree parameter across the sweep
    for n in (1, 2, 3, 5):
        spec = TruncatedPolyIdeal(n, 4 * n)
        assert codimension(spec) == Codimension.finite(n)
        report = run_entry("ex4-poly-ideal", {"n": n, "N": 4 * n})
        assert report["analysis"]["codimension"] == str(n)
        assert report["match"]


def test_run_entry_poly_quotient():
    report = run_entry("ex4-poly-ideal", {"n": 2, "N": 8})
    assert report["analysis"]["codimension"] == "2"
    assert report["analysis"]["quotient_basis"] == ["x^2", "x^3"]


def test_run_entry_c00():
    report = run_entry("ex-c00")
    assert report["analysis"]["codimension"] == "0"
    assert report["analysis"]["identity"] is None
    assert report["analysis"]["unital_square_check"]["status"] == "converse_fails"


def test_run_entry_zero_product_has_witness_matrix():
    report = run_entry("ex-zero-product")
    assert report["analysis"]["dsap"]["verdict"] is True
    matrix = report["pairwise_witness_matrix"]
    assert len(matrix) == 5
    assert matrix["1"]["2"].startswith("11/2")
    assert matrix["3"]["3"] == "-"


def test_run_entry_symbolic():
    report = run_entry("ex1-l2")
    assert report["symbolic"] and "l1" in report["doc"]
    report = run_entry("ex2-disc-algebra")
    assert report["symbolic"] and "unital" in report["doc"]


def test_run_entry_trivial_extension_note():
    report = run_entry("ex3-trivial-extension")
    assert report["analysis"]["codimension"] == "1"
    assert report["analysis"]["quotient_basis"] == ["u"]
    assert any("codimension is exactly 1" in n for n in report["notes"])


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        run_entry("ex-unicorn")
    with pytest.raises(UnknownEntry):
        get_entry("ex")  # ambiguous prefix


def test_prefix_lookup():
    assert get_entry("ex4").id == "ex4-poly-ideal"
    assert get_entry("ex1").id == "ex1-l2"


def test_unital_fixtures():
    for k in (2, 3, 4):
        assert codimension(truncated_power_algebra(k)) == Codimension.finite(0)
    assert codimension(mat2_algebra()) == Codimension.finite(0)
