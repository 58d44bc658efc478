"""Tests for matrices over SU_q(2) and the representation V."""
import pytest

from braidpy.core.report import run_checks
from braidpy.core.repmat import (
    LABELS,
    V_DEGREES,
    V_GRAM,
    W_GRAM,
    AlgMatrix,
    V_from_W,
    big_entry,
    big_index,
    build_bigV,
    build_V,
    build_W,
    commutant_dim,
    decompose_tensor_square,
    degree_check,
    fundamental_u,
    printed_tensor_square,
    printed_W,
    rep_check,
    row_identity_checks,
    scalar_matrix,
    star_structure_checks,
    tensor_square,
    unitary_check,
)
from braidpy.core.scalar import Q, S2, ZETA
from braidpy.core.suq2 import Suq2Element


@pytest.fixture(scope="module")
def v():
    """The representation V."""
    return build_V()


def failures(checks):
    return [(r.check_id, r.witness) for r in run_checks(checks) if not r.passed]


def test_alg_matrix_shape_errors():
    """Test shape validation."""
    one = Suq2Element.one()
    with pytest.raises(ValueError):
        AlgMatrix([[one, one], [one]])
    with pytest.raises(ValueError):
        AlgMatrix([[one, one]]) * AlgMatrix([[one, one]])
    with pytest.raises(ValueError):
        AlgMatrix([[one]], row_labels=(0, 1))


def test_scalar_matrix_identity():
    """Test scalar matrices and the identity test."""
    assert scalar_matrix([[1, 0], [0, 1]]).is_identity()
    assert not scalar_matrix([[1, 1], [0, 1]]).is_identity()


def test_fundamental_representation():
    """Test unitarity and the corepresentation identity of u."""
    u = fundamental_u()
    assert not failures(unitary_check(u, "u"))
    assert not failures(rep_check(u, "u"))
    assert degree_check(u) is None


def test_tensor_square_pipeline():
    """Test the tensor square against its printed form and its decomposition."""
    t = tensor_square()
    assert t == printed_tensor_square()
    assert degree_check(t) is None
    parts = decompose_tensor_square(t)
    assert parts["trivial"] == 1
    assert not any(parts["off_block"])


def test_w_pipeline():
    """Test W from the tensor square against the printed W and its unitarity."""
    w = build_W()
    assert w == printed_W()
    assert w.sigma_weights == (0, 1, 0)
    assert not failures(unitary_check(w, "W", W_GRAM))


def test_v_from_w(v):
    """Test that the diagonal conjugation of W gives V."""
    assert V_from_W(build_W()) == v
    with pytest.raises(ValueError):
        V_from_W(v)


def test_v_unitary_for_weighted_inner_product(v):
    """Test V G^-1 V* = G^-1 and V* G V = G with G = diag(vs, s2, 1)."""
    assert not failures(unitary_check(v, "V", V_GRAM))


def test_v_not_unitary_for_standard_inner_product(v):
    """Test that V fails plain unitarity."""
    assert failures(unitary_check(v, "V"))


def test_v_corepresentation(v):
    """Test Delta(v_ik) = sum_j j1(v_ij) j2(v_jk)."""
    assert not failures(rep_check(v, "V"))


def test_v_degrees(v):
    """Test the degrees of the entries of V."""
    assert degree_check(v) is None
    assert v.degree_matrix() == V_DEGREES
    assert v.row_labels == LABELS


def test_big_entries(v):
    """Test sample entries of the 9x9 matrix."""
    assert big_index(-1, -1) == 0
    assert big_index(1, 1) == 8
    assert big_entry(v, (-1, -1), (0, 1)) == Suq2Element.basis(1, 0, 3, S2)
    assert big_entry(v, (-1, -1), (1, 1)) == Suq2Element.basis(0, 0, 4, ZETA ** 2 * Q ** 2)
    assert big_entry(v, (1, 1), (1, 1)) == Suq2Element.basis(-4, 0, 0)
    big = build_bigV(v)
    assert big.rows == big.cols == 9
    assert big.entry((-1, -1), (0, 1)) == big_entry(v, (-1, -1), (0, 1))


def test_row_identities(v):
    """Test the invariant and covariant rows of the 9x9 matrix."""
    checks = row_identity_checks(v)
    assert len(checks) == 36
    assert not failures(checks)


def test_star_structure(v):
    """Test the adjoints of the entries of V and its middle column."""
    assert not failures(star_structure_checks(v))


def test_commutant_is_trivial(v):
    """Test that only scalars commute with V at a sample q."""
    assert commutant_dim(0.5, v) == 1
