"""Bound formulas, vertex classification, and the report."""

from fractions import Fraction

import pytest

import zforce as zf
from zforce.bounds import (
    TYPE_PROBABILITIES,
    bounds_report,
    classify_vertex,
    conjecture_third_holds,
    lower_girth_degree,
    upper_cubic_trianglefree,
    upper_degree_ratio,
    upper_degree_refined,
    upper_degree_refined_additive,
    upper_exception_free,
    upper_noncomplete,
    upper_regular_girth5,
)
from zforce.ratmath import (
    girth5_regular_factor,
    harmonic,
    log2_overestimate,
    subcubic_girth5_value,
    subcubic_size_ok,
)


def test_degree_ratio_values():
    assert upper_degree_ratio(4, 3) == 3
    assert upper_degree_ratio(10, 3) == Fraction(15, 2)
    assert upper_degree_ratio(6, 2) == 4
    with pytest.raises(ValueError):
        upper_degree_ratio(5, 1)


def test_degree_refined_values():
    assert upper_degree_refined(6, 2) == 2  # cycles are extremal
    assert upper_degree_refined(8, 4) == 6
    assert upper_degree_refined(4, 3) == 3


def test_degree_refined_additive_is_display_only():
    # the additive variant undercuts true values on the extremal graphs,
    # which is why it never enters verification
    assert upper_degree_refined_additive(4, 3) == Fraction(5, 2)  # K4 has Z=3
    assert upper_degree_refined_additive(6, 3) == Fraction(7, 2)  # K33 has Z=4
    assert upper_degree_refined(4, 3) == 3
    assert upper_degree_refined(6, 3) == 4


def test_noncomplete_values():
    assert upper_noncomplete(10, 3) == Fraction(20, 3)
    assert upper_noncomplete(6, 3) == 4


def test_girth_degree_lower_values():
    assert lower_girth_degree(5, 3) == 5
    assert lower_girth_degree(6, 3) == 6
    assert lower_girth_degree(5, 2) == 2
    with pytest.raises(ValueError):
        lower_girth_degree(2, 3)


def test_harmonic_values():
    assert harmonic(1) == 1
    assert harmonic(3) == Fraction(11, 6)
    assert harmonic(5) == Fraction(137, 60)


def test_regular_factor_values():
    assert girth5_regular_factor(3) == Fraction(81, 140)
    assert girth5_regular_factor(4) == Fraction(2048, 3315)
    assert girth5_regular_factor(5) == Fraction(15625, 24024)
    assert girth5_regular_factor(2) == Fraction(8, 15)


def test_regular_factor_below_refined_ratio():
    for r in range(4, 51):
        assert girth5_regular_factor(r) < Fraction(r - 2, r - 1)
    assert girth5_regular_factor(3) > Fraction(1, 2)  # r=3 goes the other way


def test_log2_overestimate_certified():
    import math
    for n in (3, 5, 6, 7, 10, 100, 1000, 12345):
        lg = log2_overestimate(n)
        assert 0 <= float(lg) - math.log2(n) < 1e-9
    for k in range(1, 12):
        assert log2_overestimate(1 << k) == k


def test_log2_overestimate_exact_direction_at_low_precision():
    # at 16 fractional bits the certificate is checkable with plain ints
    for n in (3, 5, 10, 42, 63):
        lg = log2_overestimate(n, frac_bits=16)
        assert n ** lg.denominator <= 2 ** lg.numerator


def test_subcubic_value_examples():
    import math
    assert subcubic_girth5_value(4) == Fraction(4) - Fraction(2, 27)
    v = float(subcubic_girth5_value(10))
    assert abs(v - (5 - 10 / (24 * math.log2(10) + 6) + 2)) < 1e-6
    # powers of two evaluate exactly
    assert subcubic_girth5_value(16) == Fraction(10) - Fraction(8, 51)


def test_subcubic_size_check_matches_value():
    for n in (4, 7, 10, 16, 25, 30):
        v = subcubic_girth5_value(n)
        for size in range(0, n + 1):
            # the dyadic overestimate is far tighter than the gap between
            # an integer and the irrational bound, so both tests agree
            assert subcubic_size_ok(n, size) == (size <= v)


def test_conjecture_predicate():
    assert conjecture_third_holds(10, 5)
    assert conjecture_third_holds(4, 3)
    assert not conjecture_third_holds(10, 6)


# -- vertex types -------------------------------------------------------------


def test_probabilities_pairwise_distinct():
    assert len(set(TYPE_PROBABILITIES.values())) == 7


def test_petersen_vertices_all_type_one():
    g = zf.generate("petersen")
    for u in range(10):
        t = classify_vertex(g, u)
        assert t.index == 1 and t.probability == Fraction(81, 140)


def test_cube_vertices_all_type_seven():
    q3 = zf.Graph.from_edges(8, [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5),
                                 (2, 3), (2, 6), (3, 7), (4, 5), (4, 6),
                                 (5, 7), (6, 7)])
    counts = zf.classify_counts(q3)
    assert counts == {1: 0, 2: 0, 3: 0, 4: 0, 5: 0, 6: 0, 7: 8}
    assert upper_cubic_trianglefree(q3).value == zf.expected_size(q3)


def test_type_four_and_six_witnesses():
    # twin-pattern gadget pair: vertex 0 sees one triple-shared and one
    # double-shared second neighbor (type 6); others realize types 1, 4
    def gadget(base):
        u, a, b, c, w, s1, s3 = range(base, base + 7)
        return [(u, a), (u, b), (u, c), (w, a), (w, b), (w, c),
                (s1, a), (s1, b), (s3, c)]
    g = zf.Graph.from_edges(14, gadget(0) + gadget(7) + [(5, 13), (6, 12), (6, 13)])
    assert g.is_regular() == 3 and zf.girth(g) == 4
    assert classify_vertex(g, 0).index == 6
    assert classify_vertex(g, 0).probability == Fraction(269, 420)
    counts = zf.classify_counts(g)
    assert counts[6] == 8 and counts[4] == 4 and counts[1] == 2
    # the worked identity for type 4
    assert TYPE_PROBABILITIES[4] == 1 - Fraction(3, 4) + Fraction(1, 5) + Fraction(2, 7) - Fraction(1, 8)


def test_k33_vertex_rejected():
    g = zf.complete_bipartite(3, 3)
    with pytest.raises(ValueError, match="outside the seven"):
        classify_vertex(g, 0)


def test_triangle_vertex_rejected():
    with pytest.raises(ValueError):
        classify_vertex(zf.complete(4), 0)


# -- graph-level entries ------------------------------------------------------


def test_exception_free_entry():
    pet = upper_exception_free(zf.generate("petersen"))
    assert pet.applicable and pet.value == 5
    k33 = upper_exception_free(zf.complete_bipartite(3, 3))
    assert not k33.applicable and "balanced_bipartite" in k33.reason
    g1 = upper_exception_free(zf.g1())
    assert not g1.applicable


def test_regular_girth5_entry():
    pet = upper_regular_girth5(zf.generate("petersen"))
    assert pet.applicable and pet.value == Fraction(81, 14)
    c7 = upper_regular_girth5(zf.cycle(7))
    assert c7.applicable and c7.value == Fraction(56, 15)
    k4 = upper_regular_girth5(zf.complete(4))
    assert not k4.applicable
    path = upper_regular_girth5(zf.path(4))
    assert not path.applicable  # not regular


def test_cubic_trianglefree_entry(cubic_tf_corpus):
    k33 = upper_cubic_trianglefree(zf.complete_bipartite(3, 3))
    assert not k33.applicable
    pet = upper_cubic_trianglefree(zf.generate("petersen"))
    assert pet.applicable and pet.value == Fraction(81, 14)
    for g in cubic_tf_corpus[:10]:
        entry = upper_cubic_trianglefree(g)
        assert entry.applicable
        assert entry.value == zf.expected_size(g)


def test_report_invariants_on_named(named_graphs):
    for name, g in named_graphs.items():
        if g.n > 12:
            continue
        report = bounds_report(g, with_exact=True)
        assert report.violations == (), name
        assert report.conjecture_flags == (), name


def test_report_sandwich_on_corpus(random_corpus):
    for g in random_corpus[:120]:
        report = bounds_report(g, with_exact=True)
        assert report.violations == ()


def test_report_json_shape():
    payload = bounds_report(zf.cycle(5), with_exact=True).to_json_dict()
    assert payload["stats"]["girth"] == 5
    assert payload["exact"]["value"] == 2
    names = {e["name"] for e in payload["entries"]}
    assert {"degree_ratio", "degree_refined", "exception_free",
            "regular_girth5", "girth_degree", "third_plus_two"} <= names
    forest = bounds_report(zf.path(3)).to_json_dict()
    assert forest["stats"]["girth"] == "inf"


def test_report_identity_regular_equals_expectation(cubic_g5_corpus):
    for g in cubic_g5_corpus[:8]:
        report = bounds_report(g)
        entry = {e.name: e for e in report.entries}["regular_girth5"]
        assert entry.value == zf.expected_size(g)
