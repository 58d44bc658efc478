"""Tests for the truncated numeric representation."""
import numpy as np
import pytest

from braidpy.core import repmat
from braidpy.core.braided import BraidedElement
from braidpy.core.coproduct import SUQ2_LEGS, delta, j
from braidpy.core.repmat import AlgMatrix, build_V
from braidpy.core.scalar import Q, S2, VARSIGMA
from braidpy.core.suq2 import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, Suq2Element
from braidpy.utils.numrep import (
    Window,
    WindowError,
    adjoint_residual,
    braided_product_residual,
    commutant_dim,
    homomorphism_residual,
    letter_count,
    nine_range_rank,
    pi_relation_residuals,
    product_residual,
    rep_element,
    residual,
    theta,
)

w = Suq2Element.word


@pytest.fixture(scope="module")
def window():
    """Default window at q = 0.3+0.4i."""
    return Window(10, 8, 0.3 + 0.4j)


def test_window_indexing():
    """Test the basis layout and the interior."""
    win = Window(4, 2, 0.5)
    assert win.dim == 25
    assert win.index(0, -2) == 0
    assert win.index(1, 0) == 7
    assert len(win.interior(1)) == 4 * 3
    with pytest.raises(WindowError):
        win.index(5, 0)
    with pytest.raises(WindowError):
        win.interior(3)


def test_window_validation():
    """Test rejection of bad windows."""
    with pytest.raises(ValueError):
        Window(10, 8, 1.2)
    with pytest.raises(ValueError):
        Window(-1, 8, 0.5)
    assert Window(3, 3, 0.5) == Window(3, 3, 0.5 + 0j)


def test_defining_relations(window):
    """Test the relations of SU_q(2) on the interior of the window."""
    for name, value in pi_relation_residuals(window).items():
        assert value < 1e-12, name


def test_star_and_products(window):
    """Test pi(x*) = pi(x)^dagger and pi(xy) = pi(x) pi(y)."""
    for x in (ALPHA, GAMMA, w("a", "g*"), build_V().entry(0, 0)):
        assert adjoint_residual(x, window) < 1e-12
    assert homomorphism_residual(w("a", "a"), w("a*", "g"), window) < 1e-12
    assert homomorphism_residual(GAMMA_STAR, ALPHA, window) < 1e-12


def test_middle_entry_eigenvalues():
    """Test pi(v[0,0]) e_(n,k) = (1 - s2*vs^n) e_(n,k)."""
    win = Window(6, 4, 0.5)
    image = rep_element(build_V().entry(0, 0), win) @ win.basis(3, 1)
    expected = (1 - S2.eval(0.5) * VARSIGMA.eval(0.5) ** 3) * win.basis(3, 1)
    assert np.allclose(image, expected)


def test_theta():
    """Test the twist operator."""
    win = Window(2, 2, 0.3 + 0.4j)
    assert np.abs(theta(win, 0).toarray() - np.eye(win.dim)).max() < 1e-15
    zeta_bar = (0.3 - 0.4j) / (0.3 + 0.4j)
    assert theta(win, 1)[win.index(1, 2), win.index(1, 2)] == pytest.approx(zeta_bar ** 2)


def test_product_residual(window):
    """Test a product of entries of V against its normal form."""
    v = build_V()
    assert product_residual([[v.entry(-1, 0), v.entry(-1, 1)]], Suq2Element.basis(1, 0, 3, S2), window) < 1e-9
    assert product_residual([[ALPHA], [GAMMA]], ALPHA + GAMMA, window) < 1e-12
    assert product_residual([[ALPHA]], GAMMA, window) > 0.1


def test_braided_products():
    """Test the twisted tensor product representation."""
    win = Window(5, 5, 0.5 + 0.2j)
    terms = [(j(1, GAMMA), j(2, GAMMA_STAR)), (j(2, GAMMA), j(1, ALPHA))]
    expected = BraidedElement.pure(SUQ2_LEGS, GAMMA, GAMMA_STAR) + j(2, GAMMA) * j(1, ALPHA)
    assert braided_product_residual(terms, expected, win) < 1e-12
    coproduct_terms = [(j(1, ALPHA), j(2, ALPHA)), (j(1, GAMMA_STAR), j(2, GAMMA.scale(-Q)))]
    assert braided_product_residual(coproduct_terms, delta(ALPHA), win) < 1e-12


def test_residual(window):
    """Test the residual of equal and different elements."""
    x = w("a", "a*")
    assert residual(x, 1 - w("g*", "g").scale(VARSIGMA), window) < 1e-12
    assert residual(x, 1, window) > 0.01
    assert residual(delta(GAMMA), delta(GAMMA), window) == 0.0


def test_nine_range_rank(window):
    """Test that the entries of V map e_(2,0) onto a nine-dimensional space."""
    rank, singular = nine_range_rank(window)
    assert rank == 9
    assert len(singular) == 9
    assert singular[-1] > 1e-6 * singular[0]


def test_nine_range_rank_window_too_small():
    """Test that a small window is rejected."""
    with pytest.raises(WindowError):
        nine_range_rank(Window(3, 3, 0.5))


def test_operators_agree_across_windows():
    """Test that a larger window reproduces the operators on the interior of a smaller one."""
    q0 = 0.3 + 0.4j
    small, large = Window(6, 4, q0), Window(10, 8, q0)
    rows = [large.index(n, k) for n in range(small.levels + 1) for k in range(-small.window, small.window + 1)]
    others = sorted(set(range(large.dim)) - set(rows))
    v = build_V()
    elements = [x for row in v.entries for x in row] + [w("a", "a", "g*", "g*"), Suq2Element.basis(-4, 0, 0, S2)]
    for x in elements:
        letters = letter_count(x)
        inner = small.interior(letters)
        shared = [rows[i] for i in inner]
        before = rep_element(x, small).tocsc()[:, inner].toarray()
        after = rep_element(x, large).tocsc()[:, shared].toarray()
        assert np.abs(after[rows, :] - before).max() < 1e-14
        assert np.abs(after[others, :]).max() == 0


def test_residuals_stable_across_windows():
    """Test that residuals of true identities stay at round-off as the window grows."""
    q0 = 0.3 + 0.4j
    v = build_V()
    for win in (Window(6, 4, q0), Window(10, 8, q0)):
        assert product_residual([[v.entry(-1, 0), v.entry(-1, 1)]], Suq2Element.basis(1, 0, 3, S2), win) < 1e-9
        assert product_residual([[v.entry(1, 1), v.entry(1, 1)]], Suq2Element.basis(-4, 0, 0), win) < 1e-9
        for x in (v.entry(0, 0), v.entry(-1, 1), w("a", "g*", "g")):
            assert adjoint_residual(x, win) < 1e-12
        assert max(pi_relation_residuals(win).values()) < 1e-12


@pytest.mark.parametrize("q0", [0.3 + 0.4j, 0.5])
def test_commutant_matches_symbolic(q0):
    """Test that the operator and coefficient computations of the commutant of V agree."""
    assert commutant_dim(Window(10, 8, q0)) == repmat.commutant_dim(q0) == 1


def test_commutant_of_diagonal_matrix():
    """Test a reducible matrix, whose commutant holds the diagonal matrices."""
    m = AlgMatrix([[ALPHA, 0, 0], [0, ALPHA_STAR, 0], [0, 0, 1]])
    assert commutant_dim(Window(6, 4, 0.5), m) == repmat.commutant_dim(0.5, m) == 3


def test_commutant_window_too_small():
    """Test that a window without interior is rejected."""
    with pytest.raises(WindowError):
        commutant_dim(Window(1, 1, 0.5))
