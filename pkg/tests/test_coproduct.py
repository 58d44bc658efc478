"""Tests for the coproduct, its morphisms and the quotient sphere."""
import pytest

from braidpy.core.braided import BraidedElement
from braidpy.core.coproduct import (
    COUNIT_MAP,
    DELTA_MAP,
    SUQ2_LEGS,
    MorphismTable,
    check_coassoc,
    check_hom_relations,
    check_quotient_sphere,
    closed_form,
    coassoc_checks,
    delta,
    fixedpoint_kernel_dim,
    hom_relation_checks,
    j,
    morphism_checks,
    quotient_sphere_checks,
    right_coaction,
)
from braidpy.core.report import run_checks
from braidpy.core.scalar import Q
from braidpy.core.suq2 import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, Suq2Element

w = Suq2Element.word


def assert_all_pass(checks, suite="test"):
    records = run_checks(checks, suite)
    failures = [(r.check_id, r.witness) for r in records if not r.passed]
    assert not failures


def test_delta_on_generators():
    """Test the images of alpha and gamma."""
    assert delta(ALPHA) == j(1, ALPHA) * j(2, ALPHA) - (j(1, GAMMA_STAR) * j(2, GAMMA)).scale(Q)
    assert delta(GAMMA) == j(1, GAMMA) * j(2, ALPHA) + j(1, ALPHA_STAR) * j(2, GAMMA)
    assert delta(Suq2Element.one()) == BraidedElement.one(SUQ2_LEGS)


def test_delta_star_images():
    """Test that the images of alpha* and gamma* are the stars of the images."""
    assert delta(ALPHA_STAR) == delta(ALPHA).star()
    assert delta(GAMMA_STAR) == delta(GAMMA).star()


def test_delta_is_multiplicative_on_words():
    """Test Delta on a product that needs normal ordering."""
    x, y = w("a", "g*"), w("g", "a*")
    assert delta(x * y) == delta(x) * delta(y)


def test_hom_relation_checks_pass():
    """Test the relation and sampled product checks."""
    assert_all_pass(hom_relation_checks(sample_pairs=10, max_size=2))


def test_coassociativity():
    """Test coassociativity on small monomials."""
    assert_all_pass(coassoc_checks(1))
    assert len(coassoc_checks(0)) == 1
    d = delta(w("a", "g"))
    assert d.map_legs([DELTA_MAP, None]) == d.map_legs([None, DELTA_MAP])


def test_counit_and_circle_morphisms():
    """Test counit, circle equivariance and the right coaction on small monomials."""
    assert_all_pass(morphism_checks(2))
    x = w("a", "g*", "g")
    assert delta(x).map_legs([None, COUNIT_MAP]).to_element() == x
    assert delta(x).map_legs([COUNIT_MAP, None]).to_element() == x


def test_right_coaction_weights():
    """Test the weight decomposition of the right coaction."""
    assert right_coaction(ALPHA) == [(ALPHA, 1)]
    assert right_coaction(GAMMA) == [(GAMMA, 1)]
    assert right_coaction(ALPHA + GAMMA_STAR) == [(GAMMA_STAR, -1), (ALPHA, 1)]


def test_morphism_table_degrees():
    """Test that generator images must have the generator degrees."""
    with pytest.raises(ValueError):
        MorphismTable(alpha=j(1, GAMMA), gamma=j(1, GAMMA))


def test_closed_forms():
    """Test the closed forms of the quotient sphere basis."""
    c = w("g*", "g")
    assert closed_form(0, 0) == 1
    assert closed_form(1, 1) == c
    assert closed_form(0, 1) == Suq2Element.basis(1, 0, 1)
    assert closed_form(1, 0) == Suq2Element.basis(-1, 1, 0)


def test_quotient_sphere_checks():
    """Test the relations and closed forms of the quotient sphere."""
    assert_all_pass(quotient_sphere_checks(max_kl=2))


def test_fixed_points_are_scalars():
    """Test that only scalars are fixed by the coaction at a sample q."""
    assert fixedpoint_kernel_dim(3, 0.3 + 0.4j) == 1


def test_record_helpers():
    """Test the helpers that run check lists directly."""
    records = check_coassoc(1)
    assert len(records) == 5
    assert all(r.passed and r.suite == "coassoc" for r in records)
    for records, suite in ((check_hom_relations(), "relations"), (check_quotient_sphere(), "quotient")):
        assert records
        assert all(r.passed and r.suite == suite for r in records)
