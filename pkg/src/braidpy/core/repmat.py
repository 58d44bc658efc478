"""Matrices over SU_q(2): u, its braided tensor square, W, V and the 9x9 matrix of products of V."""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from braidpy.core.braided import BraidedElement
from braidpy.core.coproduct import SUQ2_LEGS, delta
from braidpy.core.report import Check, ReportRecord, first_failure, residual_witness, run_checks
from braidpy.core.scalar import ONE, Q, QB, S2, VARSIGMA, ZETA, Number, Scalar, zeta_power
from braidpy.core.suq2 import Suq2Element, cond_expect
from braidpy.utils.linalg import coefficient_matrix, kernel_dimension

logger = logging.getLogger(__name__)

LABELS = (-1, 0, 1)


def w(*letters: str) -> Suq2Element:
    return Suq2Element.word(*letters)


class AlgMatrix:
    """A matrix with Suq2Element entries indexed by row and column labels.

    Carrier degrees satisfy deg(entry(i, j)) = row_degree(i) - col_degree(j)
    on nonzero entries. When ``sigma_weights`` is set the stored entry
    (i, j) stands for sigma^(w_i - w_j) times itself, with sigma = sqrt(1+q*qb).
    """

    def __init__(
        self,
        entries: Sequence[Sequence[Suq2Element]],
        row_labels: Optional[Sequence] = None,
        col_labels: Optional[Sequence] = None,
        row_degrees: Optional[Sequence[int]] = None,
        col_degrees: Optional[Sequence[int]] = None,
        sigma_weights: Optional[Sequence[int]] = None,
    ):
        """
        Initialize an algebra-valued matrix.

        Args:
            entries: Rows of entries
            row_labels: Row labels (default 0..rows-1)
            col_labels: Column labels (default 0..cols-1)
            row_degrees: Carrier degrees of the rows
            col_degrees: Carrier degrees of the columns (default row_degrees)
            sigma_weights: Exponents of the hidden sigma rescaling

        Raises:
            ValueError: If the shape is inconsistent
        """
        self.entries = [[Suq2Element.coerce(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("All rows must have the same length")
        self.row_labels = tuple(row_labels) if row_labels is not None else tuple(range(self.rows))
        self.col_labels = tuple(col_labels) if col_labels is not None else tuple(range(self.cols))
        if len(self.row_labels) != self.rows or len(self.col_labels) != self.cols:
            raise ValueError("Label count does not match the shape")
        self.row_degrees = tuple(row_degrees) if row_degrees is not None else None
        if col_degrees is None and row_degrees is not None and self.rows == self.cols:
            col_degrees = row_degrees
        self.col_degrees = tuple(col_degrees) if col_degrees is not None else None
        self.sigma_weights = tuple(sigma_weights) if sigma_weights is not None else None
        self._row_index = {label: i for i, label in enumerate(self.row_labels)}
        self._col_index = {label: i for i, label in enumerate(self.col_labels)}

    def entry(self, row, col) -> Suq2Element:
        """Entry by labels."""
        return self.entries[self._row_index[row]][self._col_index[col]]

    def __getitem__(self, key) -> Suq2Element:
        return self.entry(*key)

    def __mul__(self, other: "AlgMatrix") -> "AlgMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        entries = []
        for i in range(self.rows):
            row = []
            for k in range(other.cols):
                total = Suq2Element()
                for jdx in range(self.cols):
                    if self.entries[i][jdx] and other.entries[jdx][k]:
                        total = total + self.entries[i][jdx] * other.entries[jdx][k]
                row.append(total)
            entries.append(row)
        return AlgMatrix(entries, self.row_labels, other.col_labels)

    def star(self) -> "AlgMatrix":
        """Conjugate transpose: (M*)_ij = (M_ji)*."""
        entries = [[self.entries[i][jdx].star() for i in range(self.rows)] for jdx in range(self.cols)]
        return AlgMatrix(entries, self.col_labels, self.row_labels)

    def conjugate(self, left: Sequence[Number], right: Sequence[Number]) -> "AlgMatrix":
        """diag(left) * M * diag(right)."""
        entries = [
            [self.entries[i][jdx].scale(Scalar.coerce(left[i]) * Scalar.coerce(right[jdx])) for jdx in range(self.cols)]
            for i in range(self.rows)
        ]
        return AlgMatrix(entries, self.row_labels, self.col_labels, self.row_degrees, self.col_degrees)

    def relabel(self, labels: Sequence, degrees: Optional[Sequence[int]] = None, sigma_weights=None) -> "AlgMatrix":
        return AlgMatrix(self.entries, labels, labels, degrees, degrees, sigma_weights)

    def is_identity(self) -> bool:
        return all(
            self.entries[i][jdx] == (1 if i == jdx else 0)
            for i in range(self.rows)
            for jdx in range(self.cols)
        )

    def degree_matrix(self) -> List[List[Optional[int]]]:
        """Degree of every homogeneous nonzero entry, None for zero entries."""
        return [[x.degree for x in row] for row in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgMatrix):
            return NotImplemented
        return self.entries == other.entries and self.row_labels == other.row_labels

    def __str__(self) -> str:
        return "\n".join(
            f"[{self.row_labels[i]}] " + " | ".join(str(x) for x in row)
            for i, row in enumerate(self.entries)
        )


def scalar_matrix(rows: Sequence[Sequence[Number]]) -> AlgMatrix:
    return AlgMatrix([[Suq2Element.scalar(x) for x in row] for row in rows])


# The fundamental representation and its tensor square


def fundamental_u() -> AlgMatrix:
    """u = [[alpha, -q gamma*], [gamma, alpha*]]."""
    return AlgMatrix(
        [[w("a"), w("g*").scale(-Q)], [w("g"), w("a*")]],
        row_degrees=(0, 1),
    )


def tensor_square() -> AlgMatrix:
    """
    The braided tensor square of u as a 4x4 matrix.

    The first factor is u [x] I and the second I [x] u with its off-diagonal
    entries twisted by the degree of the first tensor factor.
    """
    a, a_s, g, g_s = w("a"), w("a*"), w("g"), w("g*")
    zero = Suq2Element()
    first = AlgMatrix(
        [
            [a, zero, g_s.scale(-Q), zero],
            [zero, a, zero, g_s.scale(-Q)],
            [g, zero, a_s, zero],
            [zero, g, zero, a_s],
        ]
    )
    second = AlgMatrix(
        [
            [a, g_s.scale(-QB), zero, zero],
            [g.scale(ZETA), a_s, zero, zero],
            [zero, zero, a, g_s.scale(-Q)],
            [zero, zero, g, a_s],
        ]
    )
    product = first * second
    return AlgMatrix(product.entries, row_degrees=(0, 1, 1, 2))


def printed_tensor_square() -> AlgMatrix:
    """The tensor square written entry by entry as generator words."""
    return AlgMatrix(
        [
            [w("a", "a"), w("a", "g*").scale(-QB), w("a", "g*").scale(-1), w("g*", "g*").scale(Q ** 2)],
            [w("g", "a").scale(Q), w("a", "a*"), w("g*", "g").scale(-Q), w("g*", "a*").scale(-Q)],
            [w("g", "a"), w("g", "g*").scale(-QB), w("a*", "a"), w("g*", "a*").scale(-1)],
            [w("g", "g").scale(ZETA), w("g", "a*"), w("a*", "g"), w("a*", "a*")],
        ],
        row_degrees=(0, 1, 1, 2),
    )


INVARIANT_VECTOR = (0, 1, -QB, 0)

# Basis change of the tensor square: rows of the left matrix and columns of the right one.
_LEFT = ((1, 0, 0, 0), (0, QB, 1, 0), (0, 0, 0, 1))
_RIGHT = ((1, 0, 0, 0), (0, Q, 1, 0), (0, 0, 0, 1))
_TRIVIAL_LEFT = (0, S2.inverse(), -Q * S2.inverse(), 0)
_TRIVIAL_RIGHT = (0, 1, -QB, 0)


def _sandwich(t: AlgMatrix, left: Sequence[Number], right: Sequence[Number]) -> Suq2Element:
    total = Suq2Element()
    for i in range(4):
        for k in range(4):
            coeff = Scalar.coerce(left[i]) * Scalar.coerce(right[k])
            if coeff and t.entries[i][k]:
                total = total + t.entries[i][k].scale(coeff)
    return total


def decompose_tensor_square(t: Optional[AlgMatrix] = None) -> Dict[str, object]:
    """
    Split the tensor square into the trivial summand and the 3x3 block.

    Returns:
        Dict with "trivial" (the 1x1 entry), "off_block" (entries that must
        vanish) and "block" (the stored form of W)
    """
    t = t or tensor_square()
    trivial = _sandwich(t, _TRIVIAL_LEFT, _TRIVIAL_RIGHT)
    off_block = [_sandwich(t, _TRIVIAL_LEFT, col) for col in _RIGHT]
    off_block += [_sandwich(t, row, _TRIVIAL_RIGHT) for row in _LEFT]
    scale = (ONE, S2.inverse(), ONE)
    block = [[_sandwich(t, row, col).scale(scale[i]) for col in _RIGHT] for i, row in enumerate(_LEFT)]
    return {"trivial": trivial, "off_block": off_block, "block": block}


def build_W() -> AlgMatrix:  # noqa: N802
    """
    W from the basis change of the tensor square.

    The stored entries carry sigma_weights (0, 1, 0): the true entry (i, j)
    is sigma^(w_i - w_j) times the stored one, so only s2 powers appear.
    """
    block = decompose_tensor_square()["block"]
    return AlgMatrix(block, row_degrees=(0, 1, 2), sigma_weights=(0, 1, 0))


def printed_W() -> AlgMatrix:  # noqa: N802
    """W as written entry by entry, in the stored sigma-free form."""
    return AlgMatrix(
        [
            [w("a", "a"), w("a", "g*").scale(-S2), w("g*", "g*").scale(Q ** 2)],
            [w("g", "a"), Suq2Element.one() - w("g*", "g").scale(S2), w("g*", "a*").scale(-1)],
            [w("g", "g").scale(ZETA), w("a*", "g").scale(S2), w("a*", "a*")],
        ],
        row_degrees=(0, 1, 2),
        sigma_weights=(0, 1, 0),
    )


def V_from_W(w_matrix: AlgMatrix) -> AlgMatrix:  # noqa: N802
    """V = diag(1/q, 1/sigma, -1) W diag(q, sigma, -1), computed on the stored sigma-free form."""
    if w_matrix.sigma_weights != (0, 1, 0):
        raise ValueError("Expected W in stored form with sigma weights (0, 1, 0)")
    v = w_matrix.conjugate((Q.inverse(), 1, -1), (Q, 1, -1))
    return AlgMatrix(v.entries, LABELS, LABELS, LABELS)


def build_V() -> AlgMatrix:  # noqa: N802
    """The three-dimensional representation V, written entry by entry, labels -1, 0, 1."""
    return AlgMatrix(
        [
            [w("a", "a"), w("g*", "a").scale(-S2), w("g*", "g*").scale(-Q)],
            [w("a", "g").scale(ZETA), Suq2Element.one() - w("g*", "g").scale(S2), w("g*", "a*")],
            [w("g", "g").scale(-Q * ZETA), w("a*", "g").scale(-S2), w("a*", "a*")],
        ],
        LABELS,
        LABELS,
        LABELS,
    )


V_DEGREES = [[0, -1, -2], [1, 0, -1], [2, 1, 0]]


# Checks on matrices


def unitary_check(m: AlgMatrix, name: str = "M", gram: Optional[Sequence[Number]] = None) -> List[Check]:
    """
    Unitarity of M for the diagonal inner product ``gram`` on its carrier.

    With G = diag(gram) the identities are M G^-1 M* = G^-1 and M* G M = G
    entrywise; the default G = I gives M M* = M* M = I.
    """
    g = [Scalar.coerce(x) for x in (gram or [1] * m.rows)]
    g_inv = [x.inverse() for x in g]
    cache: Dict[str, AlgMatrix] = {}

    def product(side: str) -> AlgMatrix:
        if side not in cache:
            if side == "right":
                cache[side] = m.conjugate([1] * m.rows, g_inv) * m.star()
            else:
                cache[side] = m.star().conjugate([1] * m.rows, g) * m
        return cache[side]

    checks = []
    for side, diagonal in (("right", g_inv), ("left", g)):
        for i in range(m.rows):
            for k in range(m.rows):
                checks.append(
                    Check(
                        f"{name}-unitary-{side} ({m.row_labels[i]},{m.row_labels[k]})",
                        "representations: unitarity",
                        lambda side=side, diagonal=diagonal, i=i, k=k: residual_witness(
                            product(side).entries[i][k], diagonal[i] if i == k else 0
                        ),
                    )
                )
    return checks


# Inner products making the stored forms unitary: |q|^2, s2, 1 for V and 1, s2, 1 for W.
V_GRAM = (VARSIGMA, S2, ONE)
W_GRAM = (ONE, S2, ONE)


def _rep_witness(m: AlgMatrix, i: int, k: int) -> Optional[str]:
    expected = BraidedElement(SUQ2_LEGS)
    for jdx in range(m.cols):
        if m.entries[i][jdx] and m.entries[jdx][k]:
            expected = expected + BraidedElement.pure(SUQ2_LEGS, m.entries[i][jdx], m.entries[jdx][k])
    return residual_witness(delta(m.entries[i][k]), expected)


def rep_check(m: AlgMatrix, name: str = "M") -> List[Check]:
    """Delta(M_ik) = sum_j j1(M_ij) j2(M_jk) for every entry."""
    if m.rows != m.cols:
        raise ValueError("rep_check needs a square matrix")
    return [
        Check(
            f"{name}-corep ({m.row_labels[i]},{m.col_labels[k]})",
            "representations: corepresentation identity",
            lambda i=i, k=k: _rep_witness(m, i, k),
        )
        for i in range(m.rows)
        for k in range(m.cols)
    ]


def degree_check(m: AlgMatrix) -> Optional[str]:
    """Witness of the first entry whose degree disagrees with the carrier degrees."""
    if m.row_degrees is None or m.col_degrees is None:
        raise ValueError("Matrix has no carrier degrees")
    for i in range(m.rows):
        for k in range(m.cols):
            x = m.entries[i][k]
            expected = m.row_degrees[i] - m.col_degrees[k]
            if x and x.degrees() != [expected]:
                return f"entry ({m.row_labels[i]},{m.col_labels[k]}) has degrees {x.degrees()}, expected {expected}"
    return None


def matrix_witness(left: AlgMatrix, right: AlgMatrix) -> Optional[str]:
    """First differing entry of two equally shaped matrices."""
    for i in range(left.rows):
        for k in range(left.cols):
            witness = residual_witness(left.entries[i][k], right.entries[i][k])
            if witness:
                return f"entry ({left.row_labels[i]},{left.col_labels[k]}) {witness}"
    return None


# The 9x9 matrix


BIG_LABELS = tuple((k, l) for k in LABELS for l in LABELS)  # noqa: E741


def big_index(k: int, l: int) -> int:  # noqa: E741
    """Position of (k, l) in the standard order."""
    return 3 * (k + 1) + (l + 1)


def big_entry(v: AlgMatrix, row: Tuple[int, int], col: Tuple[int, int]) -> Suq2Element:
    """zeta^(r(p-l)) v_{k,r} v_{l,p} for row (k, l) and column (r, p)."""
    (k, l), (r, p) = row, col  # noqa: E741
    return (v.entry(k, r) * v.entry(l, p)).scale(zeta_power(r * (p - l)))


def build_bigV(v: Optional[AlgMatrix] = None) -> AlgMatrix:  # noqa: N802
    """The 9x9 matrix of twisted products of entries of V."""
    v = v or build_V()
    entries = [[big_entry(v, row, col) for col in BIG_LABELS] for row in BIG_LABELS]
    return AlgMatrix(entries, BIG_LABELS, BIG_LABELS)


ROW_CONSTANTS = {
    "A": S2,
    "B": -VARSIGMA,
    "C": -VARSIGMA * S2,
    "D": 1 - VARSIGMA ** 2,
    "E": S2,
    "F": VARSIGMA,
    "G": -VARSIGMA * S2,
}


def _row(values: Dict[Tuple[int, int], Scalar]) -> List[Scalar]:
    row = [Scalar(0)] * 9
    for (k, l), value in values.items():  # noqa: E741
        row[big_index(k, l)] = Scalar.coerce(value)
    return row


P0_ROW = _row({(-1, 1): 1, (0, 0): S2, (1, -1): VARSIGMA})

PI_ROWS = {
    -1: _row({(-1, 0): ROW_CONSTANTS["A"], (0, -1): ROW_CONSTANTS["C"]}),
    0: _row({(-1, 1): ROW_CONSTANTS["B"], (0, 0): ROW_CONSTANTS["D"], (1, -1): ROW_CONSTANTS["F"]}),
    1: _row({(0, 1): ROW_CONSTANTS["E"], (1, 0): ROW_CONSTANTS["G"]}),
}


def row_times(row: Sequence[Scalar], big: AlgMatrix, col: int) -> Suq2Element:
    total = Suq2Element()
    for idx, coeff in enumerate(row):
        if coeff:
            total = total + big.entries[idx][col].scale(coeff)
    return total


def expected_pi_component(v: AlgMatrix, i: int, col: int) -> Suq2Element:
    """Component col of sum_k v_{i,k} (row of P_k)."""
    total = Suq2Element()
    for k in LABELS:
        coeff = PI_ROWS[k][col]
        if coeff:
            total = total + v.entry(i, k).scale(coeff)
    return total


def row_identity_checks(v: Optional[AlgMatrix] = None) -> List[Check]:
    """The P0 row is fixed by the 9x9 matrix and each P_i row transforms like row i of V."""
    v = v or build_V()
    big = build_bigV(v)
    checks = []
    for col, label in enumerate(BIG_LABELS):
        checks.append(
            Check(
                f"P0-row component {label}",
                "sphere: invariant quadratic combination",
                lambda col=col: residual_witness(row_times(P0_ROW, big, col), Suq2Element.scalar(P0_ROW[col])),
            )
        )
    for i in LABELS:
        for col, label in enumerate(BIG_LABELS):
            checks.append(
                Check(
                    f"P{i}-row component {label}",
                    "sphere: covariant quadratic combinations",
                    lambda i=i, col=col: residual_witness(
                        row_times(PI_ROWS[i], big, col), expected_pi_component(v, i, col)
                    ),
                )
            )
    return checks


def row_identities() -> List[ReportRecord]:
    """Run the row identities of the 9x9 matrix."""
    return run_checks(row_identity_checks(), "big-v")


def star_structure_checks(v: Optional[AlgMatrix] = None) -> List[Check]:
    """Adjoints of the entries of V and the weight of its middle column."""
    v = v or build_V()
    expected = [
        ((-1, -1), (1, 1), ONE),
        ((-1, 0), (1, 0), ONE),
        ((0, 0), (0, 0), ONE),
        ((0, -1), (0, 1), ZETA.conj()),
        ((1, -1), (-1, 1), ZETA.conj() ** 2),
    ]
    checks = [
        Check(
            f"V-star {src}",
            "representations: adjoints of V",
            lambda src=src, dst=dst, c=c: residual_witness(v.entry(*src).star(), v.entry(*dst).scale(c)),
        )
        for src, dst, c in expected
    ]
    checks.append(
        Check(
            "V-middle-column-weight",
            "quotient sphere: middle column of V",
            lambda: first_failure(
                LABELS, lambda i: residual_witness(cond_expect(v.entry(i, 0)), v.entry(i, 0))
            ),
        )
    )
    return checks


def commutant_dim(q0: complex, v: Optional[AlgMatrix] = None) -> int:
    """
    Dimension of the scalar 3x3 matrices commuting with V at q = q0.

    Unknowns are the entries X_ab; the equation for (i, j) is
    sum_k X_ik v_kj - v_ik X_kj = 0, read coefficientwise in the a[n,k,l] basis.
    """
    v = v or build_V()
    n = v.rows
    columns = []
    for a in range(n):
        for b in range(n):
            column: Dict = {}
            for i in range(n):
                for jdx in range(n):
                    if a == i:
                        for m, c in v.entries[b][jdx].terms.items():
                            column[(i, jdx, m)] = column.get((i, jdx, m), 0) + c.eval(q0)
                    if b == jdx:
                        for m, c in v.entries[i][a].terms.items():
                            column[(i, jdx, m)] = column.get((i, jdx, m), 0) - c.eval(q0)
            columns.append(column)
    matrix, _ = coefficient_matrix(columns)
    dimension = kernel_dimension(matrix)
    logger.debug("commutant of V at q=%s: %d", q0, dimension)
    return dimension
