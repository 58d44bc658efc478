"""
Numeric representation of SU_q(2) on a truncated window of l2(Z+ x Z).

Basis vectors e_{n,k} with 0 <= n <= levels and |k| <= window sit at index
n*(2*window+1) + (k+window). A polynomial with at most L generator letters
acts exactly on e_{n,k} whenever n + L <= levels and |k| + L <= window, so
every comparison below is restricted to that interior.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from scipy.sparse import coo_matrix, csr_matrix, diags, identity, kron

from braidpy.core.braided import BraidedElement
from braidpy.core.repmat import AlgMatrix, build_V
from braidpy.core.scalar import Q, QB, VARSIGMA, Number, Scalar
from braidpy.core.suq2 import Suq2Element, Suq2Monomial
from braidpy.utils.linalg import numerical_rank

logger = logging.getLogger(__name__)

RANK_RTOL = 1e-6


class WindowError(ValueError):
    """The window is too small for the exactness of a requested computation."""


class Window:
    """Truncation of l2(Z+ x Z) at a sample value of q."""

    def __init__(self, levels: int, window: int, q0: complex):
        """
        Initialize a window.

        Args:
            levels: Largest level index n
            window: Largest |k|
            q0: Sample value of q, 0 < |q0| < 1

        Raises:
            ValueError: If the bounds are negative or q0 is outside the punctured unit disc
        """
        if levels < 0 or window < 0:
            raise ValueError(f"Window bounds must be nonnegative, got levels={levels}, window={window}")
        q0 = complex(q0)
        if not 0 < abs(q0) < 1:
            raise ValueError(f"q must satisfy 0 < |q| < 1, got {q0}")
        self.levels = levels
        self.window = window
        self.q0 = q0
        self.width = 2 * window + 1
        self.dim = (levels + 1) * self.width

    def index(self, n: int, k: int) -> int:
        if not (0 <= n <= self.levels and abs(k) <= self.window):
            raise WindowError(f"e_({n},{k}) lies outside the window")
        return n * self.width + (k + self.window)

    def basis(self, n: int, k: int) -> np.ndarray:
        vector = np.zeros(self.dim, dtype=complex)
        vector[self.index(n, k)] = 1
        return vector

    def interior(self, letters: int) -> List[int]:
        """Indices of the basis vectors on which words of ``letters`` letters act exactly."""
        if letters > min(self.levels, self.window):
            raise WindowError(f"Window (levels={self.levels}, window={self.window}) too small for {letters} letters")
        return [
            self.index(n, k)
            for n in range(self.levels - letters + 1)
            for k in range(-(self.window - letters), self.window - letters + 1)
        ]

    def _key(self):
        return (self.levels, self.window, self.q0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Window) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"Window(levels={self.levels}, window={self.window}, q0={self.q0})"


@lru_cache(maxsize=64)
def generator_operators(window: Window) -> Dict[str, csr_matrix]:
    """
    Sparse matrices of alpha, alpha*, gamma and gamma*.

    pi(a) e_{n,k} = sqrt(1-|q|^2n) e_{n-1,k}, pi(a*) e_{n,k} = sqrt(1-|q|^(2n+2)) e_{n+1,k},
    pi(g) e_{n,k} = qb^n e_{n,k+1}, pi(g*) e_{n,k} = q^n e_{n,k-1}.
    """
    q0, qb0 = window.q0, window.q0.conjugate()
    modulus = abs(q0) ** 2
    entries: Dict[str, Tuple[list, list, list]] = {name: ([], [], []) for name in ("a", "a*", "g", "g*")}

    def put(name: str, value: complex, target: Tuple[int, int], source: Tuple[int, int]):
        n, k = target
        if 0 <= n <= window.levels and abs(k) <= window.window and value != 0:
            data, rows, cols = entries[name]
            data.append(value)
            rows.append(window.index(*target))
            cols.append(window.index(*source))

    for n in range(window.levels + 1):
        for k in range(-window.window, window.window + 1):
            put("a", np.sqrt(1 - modulus ** n), (n - 1, k), (n, k))
            put("a*", np.sqrt(1 - modulus ** (n + 1)), (n + 1, k), (n, k))
            put("g", qb0 ** n, (n, k + 1), (n, k))
            put("g*", q0 ** n, (n, k - 1), (n, k))
    shape = (window.dim, window.dim)
    return {
        name: coo_matrix((data, (rows, cols)), shape=shape, dtype=complex).tocsr()
        for name, (data, rows, cols) in entries.items()
    }


def _monomial_operator(monomial: Suq2Monomial, window: Window) -> csr_matrix:
    return word_operator(monomial.letters(), window)


def rep_element(x: Suq2Element, window: Window, lam0: float = 0.0, rho0: float = 0.0) -> csr_matrix:
    """
    Truncated operator of pi(x).

    Args:
        x: Element of the polynomial algebra
        window: Truncation and sample value of q
        lam0: Value substituted for lam in the coefficients
        rho0: Value substituted for rho in the coefficients

    Returns:
        Sparse (dim x dim) matrix
    """
    result = csr_matrix((window.dim, window.dim), dtype=complex)
    # fixed order keeps the floating point sums reproducible
    for monomial, coeff in x.sorted_terms():
        result = result + coeff.eval(window.q0, lam0, rho0) * _monomial_operator(monomial, window)
    return result


def theta(window: Window, power: int = 1) -> csr_matrix:
    """diag(zeta_bar^(k*power)) implementing the twist of the second leg."""
    zeta_bar = window.q0.conjugate() / window.q0
    values = [zeta_bar ** (k * power) for n in range(window.levels + 1) for k in range(-window.window, window.window + 1)]
    return diags(values, format="csr", dtype=complex)


def rep_braided(x: BraidedElement, window: Window, lam0: float = 0.0, rho0: float = 0.0) -> csr_matrix:
    """
    Operator of an element of the two-leg product on the tensor square of the window.

    j1(a) acts as pi(a) [x] 1 and j2(b) as theta^deg(b) [x] pi(b), which
    realises the exchange rule between the legs.
    """
    if len(x.legs) != 2 or any(leg is not Suq2Element for leg in x.legs):
        raise ValueError("rep_braided needs an element of suq2 [x] suq2")
    dim = window.dim ** 2
    result = csr_matrix((dim, dim), dtype=complex)
    for (left, right), coeff in x.sorted_terms():
        first = _monomial_operator(left, window) @ theta(window, right.degree)
        second = _monomial_operator(right, window)
        result = result + coeff.eval(window.q0, lam0, rho0) * kron(first, second, format="csr")
    return result


def letter_count(x: Union[Suq2Element, BraidedElement]) -> int:
    """Largest number of generator letters in a monomial on any leg."""
    if isinstance(x, BraidedElement):
        return max((m.size for key in x.terms for m in key), default=0)
    return max((m.size for m in x.terms), default=0)


def _interior_columns(x, window: Window, letters: int) -> List[int]:
    inner = window.interior(letters)
    if isinstance(x, BraidedElement):
        return [i * window.dim + j for i in inner for j in inner]
    return inner


def residual(
    lhs: Union[Suq2Element, BraidedElement],
    rhs: Union[Suq2Element, BraidedElement, int],
    window: Window,
    lam0: float = 0.0,
    rho0: float = 0.0,
) -> float:
    """
    Largest entry of pi(lhs) - pi(rhs) on the interior columns of the window.

    Raises:
        WindowError: If the window is too small for the letters involved
    """
    difference = lhs - rhs
    letters = letter_count(lhs) if isinstance(rhs, int) else max(letter_count(lhs), letter_count(rhs))
    columns = _interior_columns(lhs, window, letters)
    if isinstance(difference, BraidedElement):
        operator = rep_braided(difference, window, lam0, rho0)
    else:
        operator = rep_element(difference, window, lam0, rho0)
    block = operator.tocsc()[:, columns]
    return float(abs(block).max()) if block.nnz else 0.0


def nine_range_rank(
    window: Window, entries: Optional[List[Suq2Element]] = None, base: Tuple[int, int] = (2, 0)
) -> Tuple[int, List[float]]:
    """
    Rank of the vectors pi(v_ij) e_base.

    Args:
        window: Needs levels >= 6 and window >= 4 for the default base vector
        entries: Elements to apply (default: the nine entries of V)
        base: Index (n, k) of the base vector

    Returns:
        Tuple of (numerical rank, singular values)

    Raises:
        WindowError: If the images are not computed exactly
    """
    if entries is None:
        v = build_V()
        entries = [x for row in v.entries for x in row]
    letters = max(letter_count(x) for x in entries)
    n, k = base
    if n + letters > window.levels or abs(k) + letters > window.window:
        raise WindowError(
            f"Window (levels={window.levels}, window={window.window}) too small for "
            f"{letters} letters from e_({n},{k})"
        )
    vector = window.basis(n, k)
    matrix = np.column_stack([rep_element(x, window) @ vector for x in entries])
    rank, singular = numerical_rank(matrix, rtol=RANK_RTOL)
    logger.debug("range rank at q=%s: %d, singular values %s", window.q0, rank, singular)
    return rank, singular


def commutant_dim(window: Window, v: Optional[AlgMatrix] = None) -> int:
    """
    Dimension of the scalar matrices X with X V = V X, read off the operators pi(v_ij).

    The coefficient of X_ab in (X V - V X)_ij is delta_ai pi(v_bj) - delta_bj pi(v_ia);
    each operator is taken on the interior columns of the window and flattened.

    Raises:
        WindowError: If the window is too small for the entries of V
    """
    v = v or build_V()
    n = v.rows
    inner = window.interior(max(letter_count(x) for row in v.entries for x in row))
    blocks = [[rep_element(x, window).tocsc()[:, inner].toarray().ravel() for x in row] for row in v.entries]
    zero = np.zeros_like(blocks[0][0])
    columns = []
    for a in range(n):
        for b in range(n):
            pieces = []
            for i in range(n):
                for jdx in range(n):
                    piece = zero
                    if a == i:
                        piece = piece + blocks[b][jdx]
                    if b == jdx:
                        piece = piece - blocks[i][a]
                    pieces.append(piece)
            columns.append(np.concatenate(pieces))
    rank, singular = numerical_rank(np.column_stack(columns), rtol=RANK_RTOL)
    logger.debug("numeric commutant of V at q=%s: %d, singular values %s", window.q0, n * n - rank, singular)
    return n * n - rank


def adjoint_residual(x: Suq2Element, window: Window) -> float:
    """pi(x*) against the conjugate transpose of pi(x), on interior rows and columns."""
    inner = window.interior(letter_count(x))
    left = rep_element(x.star(), window).tocsc()[:, inner].tocsr()[inner, :]
    right = rep_element(x, window).conj().T.tocsc()[:, inner].tocsr()[inner, :]
    difference = left - right
    return float(abs(difference).max()) if difference.nnz else 0.0


def homomorphism_residual(x: Suq2Element, y: Suq2Element, window: Window) -> float:
    """pi(x y) against pi(x) pi(y) on the interior columns."""
    letters = letter_count(x) + letter_count(y)
    columns = window.interior(letters)
    difference = (rep_element(x * y, window) - rep_element(x, window) @ rep_element(y, window)).tocsc()[:, columns]
    return float(abs(difference).max()) if difference.nnz else 0.0


def word_operator(letters, window: Window) -> csr_matrix:
    """Product of the generator matrices along a word, without normal ordering."""
    ops = generator_operators(window)
    result = identity(window.dim, dtype=complex, format="csr")
    for letter in letters:
        result = result @ ops[letter]
    return result


def _combination(terms, window: Window) -> csr_matrix:
    result = csr_matrix((window.dim, window.dim), dtype=complex)
    for coeff, letters in terms:
        result = result + Scalar.coerce(coeff).eval(window.q0) * word_operator(letters, window)
    return result


PI_RELATIONS: Dict[str, Tuple[List[Tuple[Number, Tuple[str, ...]]], List[Tuple[Number, Tuple[str, ...]]]]] = {
    "a*a + g*g = 1": ([(1, ("a*", "a")), (1, ("g*", "g"))], [(1, ())]),
    "aa* + vs g*g = 1": ([(1, ("a", "a*")), (VARSIGMA, ("g*", "g"))], [(1, ())]),
    "ag = qb ga": ([(1, ("a", "g"))], [(QB, ("g", "a"))]),
    "ag* = q g*a": ([(1, ("a", "g*"))], [(Q, ("g*", "a"))]),
    "gg* = g*g": ([(1, ("g", "g*"))], [(1, ("g*", "g"))]),
}


def pi_relation_residuals(window: Window) -> Dict[str, float]:
    """Residuals of the defining relations under pi, composed letter by letter on the interior."""
    columns = window.interior(2)
    found = {}
    for name, (lhs, rhs) in PI_RELATIONS.items():
        difference = (_combination(lhs, window) - _combination(rhs, window)).tocsc()[:, columns]
        found[name] = float(abs(difference).max()) if difference.nnz else 0.0
    return found


def product_residual(terms: List[List[Suq2Element]], expected: Suq2Element, window: Window) -> float:
    """
    sum over terms of pi(x1) pi(x2) ... against pi(expected).

    The operators are multiplied numerically, so the normal form of the
    products is checked independently of the symbolic engine.
    """
    letters = max([sum(letter_count(x) for x in factors) for factors in terms] + [letter_count(expected)])
    columns = window.interior(letters)
    operator = csr_matrix((window.dim, window.dim), dtype=complex)
    for factors in terms:
        term = identity(window.dim, dtype=complex, format="csr")
        for x in factors:
            term = term @ rep_element(x, window)
        operator = operator + term
    difference = (operator - rep_element(expected, window)).tocsc()[:, columns]
    return float(abs(difference).max()) if difference.nnz else 0.0


def braided_product_residual(
    terms: List[Tuple[BraidedElement, BraidedElement]], expected: BraidedElement, window: Window
) -> float:
    """sum of rep(x) rep(y) over the pairs against rep(expected), on the tensor square."""
    letters = max(
        [letter_count(x) + letter_count(y) for x, y in terms] + [letter_count(expected)]
    )
    columns = _interior_columns(expected, window, letters)
    dim = window.dim ** 2
    operator = csr_matrix((dim, dim), dtype=complex)
    for x, y in terms:
        operator = operator + rep_braided(x, window) @ rep_braided(y, window)
    difference = (operator - rep_braided(expected, window)).tocsc()[:, columns]
    return float(abs(difference).max()) if difference.nnz else 0.0
