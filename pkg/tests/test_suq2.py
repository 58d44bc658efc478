"""Tests for the normal-form algebra of SU_q(2)."""
from itertools import product

import pytest

from braidpy.core.report import run_checks
from braidpy.core.scalar import Q, QB, S2, VARSIGMA
from braidpy.core.suq2 import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    Suq2Element,
    Suq2Monomial,
    cond_expect,
    counit,
    monomials,
    random_monomial_triples,
    reordering_residuals,
    suq2_checks,
)

w = Suq2Element.word


@pytest.fixture
def small_basis():
    """Basis elements with |n|+k+l <= 2."""
    return [Suq2Element({m: 1}) for m in monomials(2)]


def test_defining_relations():
    """Test the relations of alpha and gamma in normal form."""
    assert w("a*", "a") + w("g*", "g") == 1
    assert w("a", "a*") + w("g*", "g").scale(VARSIGMA) == 1
    assert w("a", "g") == w("g", "a").scale(QB)
    assert w("a", "g*") == w("g*", "a").scale(Q)
    assert w("g", "g*") == w("g*", "g")


def test_alpha_powers():
    """Test products of powers of alpha and alpha*."""
    c = w("g*", "g")
    assert w("a*", "a") == 1 - c
    assert w("a", "a*") == 1 - c.scale(VARSIGMA)
    expected = (1 - c.scale(VARSIGMA)) * (1 - c.scale(VARSIGMA ** 2))
    assert w("a", "a", "a*", "a*") == expected


def test_alpha_commutes_past_c():
    """Test alpha c = vs c alpha."""
    c = w("g*", "g")
    assert ALPHA * c == (c * ALPHA).scale(VARSIGMA)


def test_star_of_generators():
    """Test the involution on generators and monomials."""
    assert ALPHA.star() == ALPHA_STAR
    assert GAMMA.star() == GAMMA_STAR
    assert Suq2Element.basis(1, 1, 0).star() == w("g*", "a*")


def test_star_antimultiplicative(small_basis):
    """Test (xy)* = y* x* and x** = x on small monomials."""
    for x, y in product(small_basis, repeat=2):
        assert (x * y).star() == y.star() * x.star()
    for x in small_basis:
        assert x.star().star() == x


def test_associativity():
    """Test associativity on all triples of small monomials."""
    basis = [Suq2Element({m: 1}) for m in monomials(1)]
    for x, y, z in product(basis, repeat=3):
        assert (x * y) * z == x * (y * z)


def test_monomial_properties():
    """Test degree, weight and size of a[n,k,l]."""
    m = Suq2Monomial(-2, 1, 3)
    assert m.degree == -2
    assert m.weight == -4
    assert m.size == 6
    assert m.letters() == ("a*", "a*", "g", "g*", "g*", "g*")
    assert Suq2Element.basis(0, 2, 1).degree == 1


def test_grading_is_multiplicative(small_basis):
    """Test that degrees add under products."""
    for x, y in product(small_basis, repeat=2):
        z = x * y
        if z:
            assert z.degrees() == [x.degree + y.degree]


def test_conditional_expectation():
    """Test the projection onto weight zero."""
    assert cond_expect(ALPHA) == 0
    assert cond_expect(w("a", "g*")) == w("a", "g*")
    assert cond_expect(ALPHA + w("g*", "g")) == w("g*", "g")


def test_counit():
    """Test the counit on generators and products."""
    assert counit(ALPHA) == 1
    assert counit(GAMMA) == 0
    assert counit(w("a", "a*")) == 1
    assert counit(w("a", "a").scale(S2) + GAMMA_STAR) == S2


def test_monomials_enumeration():
    """Test the enumeration of small basis monomials."""
    assert monomials(0) == [Suq2Monomial(0, 0, 0)]
    assert len(monomials(1)) == 5
    assert len(set(monomials(3))) == len(monomials(3))


def test_text_round_trip():
    """Test that the printed form parses back."""
    x = w("a", "a*").scale(S2) + w("g*", "a").scale(-Q)
    assert Suq2Element.parse(str(x)) == x
    assert Suq2Element.parse("{q}*a[1,0,1] + {-1}*a[0,0,0]") == w("a", "g*").scale(Q) - 1
    assert Suq2Element.parse("0") == 0


def test_parse_errors():
    """Test rejection of malformed element text."""
    with pytest.raises(ValueError):
        Suq2Element.parse("{q}*a[1,0]")
    with pytest.raises(ValueError):
        Suq2Element.parse("{q}*a[1,0,1] {1}*a[0,0,0]")


def test_invalid_construction():
    """Test invalid words and basis elements."""
    with pytest.raises(ValueError):
        w("b")
    with pytest.raises(ValueError):
        Suq2Element.basis(0, -1, 0)


def test_grade_component():
    """Test the projection onto one degree."""
    x = ALPHA + w("a", "g") + w("g*", "g") + GAMMA_STAR
    assert x.grade_component(0) == ALPHA + w("g*", "g")
    assert x.grade_component(1) == w("a", "g")
    assert x.grade_component(-1) == GAMMA_STAR
    assert x.grade_component(3) == 0


def test_sampled_associativity_and_star():
    """Test associativity and the star on seeded random triples of size up to 4."""
    triples = random_monomial_triples(30, 4)
    assert triples == random_monomial_triples(30, 4)
    assert all(m.size <= 4 for triple in triples for m in triple)
    for triple in triples:
        x, y, z = (Suq2Element({m: 1}) for m in triple)
        assert (x * y) * z == x * (y * z)
        assert (x * y).star() == y.star() * x.star()
        if x * y:
            assert (x * y).weights() == [triple[0].weight + triple[1].weight]


def test_generator_reorderings():
    """Test g a* a g* = a* a g g* and vs a* g g* a = g g* a* a."""
    assert all(r == 0 for r in reordering_residuals().values())
    assert w("g", "a*", "a", "g*") == w("a*", "a", "g", "g*")
    assert w("a*", "g", "g*", "a").scale(VARSIGMA) == w("g", "g*", "a*", "a")


def test_cond_expect_is_module_map(small_basis):
    """Test E(xy) = x E(y) for x of weight zero."""
    invariant = [x for x in small_basis if x.weights() == [0]] + [w("a", "a*") + w("g", "g*").scale(Q)]
    for x, y in product(invariant, small_basis):
        assert cond_expect(x * y) == x * cond_expect(y)
        assert cond_expect(y * x) == cond_expect(y) * x


def test_suq2_property_checks():
    """Test the property checks and their identifiers."""
    records = run_checks(suq2_checks(sample_triples=20), "relations")
    assert [r.check_id for r in records][:3] == ["associativity-exhaustive", "associativity-sampled", "star-exhaustive"]
    assert len(records) == 9
    assert all(r.passed for r in records), [(r.check_id, r.witness) for r in records if not r.passed]
