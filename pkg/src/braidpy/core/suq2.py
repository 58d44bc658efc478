"""Polynomial *-algebra of SU_q(2) in the normal-form basis a[n,k,l]."""
import random
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from braidpy.core.algebra import AlgebraElement
from braidpy.core.report import Check, first_failure, residual_witness
from braidpy.core.scalar import ONE, Q, QB, VARSIGMA, Scalar


class Suq2Monomial(NamedTuple):
    """a[n,k,l] = alpha^n gamma^k gamma*^l, with alpha^n read as alpha*^(-n) for n < 0."""

    n: int
    k: int
    l: int  # noqa: E741

    @property
    def degree(self) -> int:
        return self.k - self.l

    @property
    def weight(self) -> int:
        """Weight under the right circle coaction."""
        return self.n + self.k - self.l

    @property
    def size(self) -> int:
        return abs(self.n) + self.k + self.l

    def letters(self) -> Tuple[str, ...]:
        """The normal-order generator word of the monomial."""
        alpha = ("a",) * self.n if self.n >= 0 else ("a*",) * (-self.n)
        return alpha + ("g",) * self.k + ("g*",) * self.l


UNIT = Suq2Monomial(0, 0, 0)


@lru_cache(maxsize=None)
def _alpha_product(n1: int, n2: int) -> Tuple[Tuple[int, int, Scalar], ...]:
    """Normal form of alpha^n1 * alpha^n2 as terms (n, j, coeff) meaning coeff * a[n,0,0] * c^j.

    Here c = gamma* gamma and c^j sits to the right of the alpha power.
    """
    if n1 == 0 or n2 == 0 or (n1 > 0) == (n2 > 0):
        return ((n1 + n2, 0, ONE),)

    # polynomial in c as {j: coeff}
    def product(factors: Iterable[Scalar]) -> Dict[int, Scalar]:
        poly = {0: ONE}
        for factor in factors:
            nxt: Dict[int, Scalar] = {}
            for j, coeff in poly.items():
                nxt[j] = nxt.get(j, 0) + coeff
                nxt[j + 1] = nxt.get(j + 1, 0) - coeff * factor
            poly = nxt
        return poly

    if n1 > 0:
        m = -n2
        if n1 >= m:
            # alpha^(n1-m) * prod_{j=1..m} (1 - vs^j c)
            poly = product(VARSIGMA ** j for j in range(1, m + 1))
            return tuple((n1 - m, j, c) for j, c in sorted(poly.items()) if c)
        # prod_{j=1..n1} (1 - vs^j c) * alpha*^s, then c^j alpha*^s = vs^(js) alpha*^s c^j
        s = m - n1
        poly = product(VARSIGMA ** j for j in range(1, n1 + 1))
        return tuple((-s, j, c * VARSIGMA ** (j * s)) for j, c in sorted(poly.items()) if c)

    m = -n1
    if m >= n2:
        # alpha*^(m-n2) * prod_{j=0..n2-1} (1 - vs^-j c)
        poly = product(VARSIGMA ** (-j) for j in range(n2))
        return tuple((-(m - n2), j, c) for j, c in sorted(poly.items()) if c)
    s = n2 - m
    poly = product(VARSIGMA ** (-j) for j in range(m))
    return tuple((s, j, c * VARSIGMA ** (-j * s)) for j, c in sorted(poly.items()) if c)


@lru_cache(maxsize=None)
def _multiply(left: Suq2Monomial, right: Suq2Monomial) -> Dict[Suq2Monomial, Scalar]:
    n1, k1, l1 = left
    n2, k2, l2 = right
    # gamma^k1 gamma*^l1 moved right past the alpha part of the right factor
    phase = QB ** (-k1 * n2) * Q ** (-l1 * n2)
    result: Dict[Suq2Monomial, Scalar] = {}
    for n, j, coeff in _alpha_product(n1, n2):
        monomial = Suq2Monomial(n, k1 + k2 + j, l1 + l2 + j)
        result[monomial] = result.get(monomial, 0) + phase * coeff
    return {m: c for m, c in result.items() if c}


@lru_cache(maxsize=None)
def _star(monomial: Suq2Monomial) -> Dict[Suq2Monomial, Scalar]:
    n, k, l = monomial  # noqa: E741
    # (alpha^n gamma^k gamma*^l)* = gamma^l gamma*^k alpha^(-n)
    return _multiply(Suq2Monomial(0, l, k), Suq2Monomial(-n, 0, 0))


class Suq2Element(AlgebraElement):
    """Element of the polynomial algebra of SU_q(2)."""

    __slots__ = ()

    MONOMIAL_PATTERN = r"a\[(?P<n>-?\d+),(?P<k>\d+),(?P<l>\d+)\]"

    @classmethod
    def unit_monomial(cls) -> Suq2Monomial:
        return UNIT

    @classmethod
    def multiply_monomials(cls, left, right):
        return _multiply(left, right)

    @classmethod
    def star_monomial(cls, monomial):
        return _star(monomial)

    @classmethod
    def degree_of(cls, monomial) -> int:
        return monomial.degree

    @classmethod
    def format_monomial(cls, monomial) -> str:
        return f"a[{monomial.n},{monomial.k},{monomial.l}]"

    @classmethod
    def monomial_from_match(cls, match) -> Suq2Monomial:
        return Suq2Monomial(int(match.group("n")), int(match.group("k")), int(match.group("l")))

    @classmethod
    def sort_key(cls, monomial):
        return (monomial.size, monomial)

    @classmethod
    def basis(cls, n: int, k: int, l: int, coeff=1) -> "Suq2Element":  # noqa: E741
        """coeff * a[n,k,l]."""
        if k < 0 or l < 0:
            raise ValueError("Powers of gamma and gamma* must be nonnegative")
        return cls({Suq2Monomial(n, k, l): coeff})

    @classmethod
    def word(cls, *letters: str) -> "Suq2Element":
        """
        Normal form of a product of generators.

        Args:
            letters: Any of "a", "a*", "g", "g*"

        Returns:
            The product, left to right
        """
        result = cls.one()
        for letter in letters:
            try:
                result = result * GENERATORS[letter]
            except KeyError:
                raise ValueError(f"Unknown generator {letter!r}") from None
        return result

    def weights(self) -> List[int]:
        return sorted({m.weight for m in self.terms})


ALPHA = Suq2Element.basis(1, 0, 0)
ALPHA_STAR = Suq2Element.basis(-1, 0, 0)
GAMMA = Suq2Element.basis(0, 1, 0)
GAMMA_STAR = Suq2Element.basis(0, 0, 1)

GENERATORS = {"a": ALPHA, "a*": ALPHA_STAR, "g": GAMMA, "g*": GAMMA_STAR}


def cond_expect(x: Suq2Element) -> Suq2Element:
    """Projection onto the fixed points of the right circle coaction (the weight-0 terms)."""
    return Suq2Element({m: c for m, c in x.terms.items() if m.weight == 0})


def counit(x: Suq2Element) -> Scalar:
    """The character alpha -> 1, gamma -> 0."""
    total = Scalar(0)
    for monomial, coeff in x.terms.items():
        if monomial.k == 0 and monomial.l == 0:
            total = total + coeff
    return total


def monomials(max_size: int) -> List[Suq2Monomial]:
    """All basis monomials with |n|+k+l <= max_size, in a fixed order."""
    found = []
    for size in range(max_size + 1):
        for n in range(-size, size + 1):
            rest = size - abs(n)
            for k in range(rest + 1):
                found.append(Suq2Monomial(n, k, rest - k))
    return found


# Properties of the algebra

SUQ2_SAMPLE_SEED = 20240917


def random_monomial_triples(count: int, max_size: int, seed: int = SUQ2_SAMPLE_SEED):
    pool = monomials(max_size)
    rng = random.Random(seed)
    return [tuple(rng.choice(pool) for _ in range(3)) for _ in range(count)]


def _basis(items: Iterable[Suq2Monomial]) -> List[Suq2Element]:
    return [Suq2Element({m: 1}) for m in items]


def _associative(triple) -> Optional[str]:
    x, y, z = _basis(triple)
    return residual_witness((x * y) * z, x * (y * z))


def _star_antimultiplicative(pair) -> Optional[str]:
    x, y = _basis(pair)
    return residual_witness(x.star().star(), x) or residual_witness((x * y).star(), y.star() * x.star())


def _grading_additive(pair) -> Optional[str]:
    x, y = _basis(pair)
    z = x * y
    degree, weight = pair[0].degree + pair[1].degree, pair[0].weight + pair[1].weight
    if z.degrees() not in ([], [degree]):
        return f"degrees {z.degrees()}, expected {degree}"
    if z.weights() not in ([], [weight]):
        return f"weights {z.weights()}, expected {weight}"
    return None


def _cond_expect_module(pair) -> Optional[str]:
    x, y = _basis(pair)
    return residual_witness(cond_expect(x * y), x * cond_expect(y))


def reordering_residuals() -> Dict[str, Suq2Element]:
    """Two reorderings of four generators that follow from the defining relations."""
    w = Suq2Element.word
    return {
        "g a* a g* = a* a g g*": w("g", "a*", "a", "g*") - w("a*", "a", "g", "g*"),
        "vs a* g g* a = g g* a* a": w("a*", "g", "g*", "a").scale(VARSIGMA) - w("g", "g*", "a*", "a"),
    }


def suq2_checks(sample_triples: int = 200) -> List[Check]:
    """Associativity, star, grading and conditional expectation on small and sampled monomials."""
    pairs = list(product(monomials(2), repeat=2))
    triples = list(product(monomials(2), repeat=3))
    sampled = random_monomial_triples(sample_triples, 4)
    sampled_pairs = [triple[:2] for triple in sampled]
    invariant = [pair for pair in pairs + sampled_pairs if pair[0].weight == 0]
    checks = [
        Check("associativity-exhaustive", "suq2: associativity", lambda: first_failure(triples, _associative)),
        Check("associativity-sampled", "suq2: associativity", lambda: first_failure(sampled, _associative)),
        Check("star-exhaustive", "suq2: star", lambda: first_failure(pairs, _star_antimultiplicative)),
        Check("star-sampled", "suq2: star", lambda: first_failure(sampled_pairs, _star_antimultiplicative)),
        Check("grading-exhaustive", "suq2: grading", lambda: first_failure(pairs, _grading_additive)),
        Check("grading-sampled", "suq2: grading", lambda: first_failure(sampled_pairs, _grading_additive)),
        Check(
            "cond-expect-module",
            "suq2: conditional expectation",
            lambda: first_failure(invariant, _cond_expect_module),
        ),
    ]
    checks += [
        Check(f"reorder {name}", "suq2: generator reorderings", lambda r=residual: residual_witness(r, 0))
        for name, residual in reordering_residuals().items()
    ]
    return checks
