"""Laurent polynomials on the circle and the quotient morphism pi from SU_q(2)."""
from braidpy.core.algebra import AlgebraElement
from braidpy.core.braided import BraidedElement
from braidpy.core.scalar import ONE
from braidpy.core.suq2 import Suq2Element


class CircleElement(AlgebraElement):
    """Element of C(T) spanned by z^m; every element has degree 0."""

    __slots__ = ()

    MONOMIAL_PATTERN = r"z\^(?P<m>-?\d+)"

    @classmethod
    def unit_monomial(cls) -> int:
        return 0

    @classmethod
    def multiply_monomials(cls, left: int, right: int):
        return {left + right: ONE}

    @classmethod
    def star_monomial(cls, monomial: int):
        return {-monomial: ONE}

    @classmethod
    def degree_of(cls, monomial: int) -> int:
        return 0

    @classmethod
    def format_monomial(cls, monomial: int) -> str:
        return f"z^{monomial}"

    @classmethod
    def monomial_from_match(cls, match) -> int:
        return int(match.group("m"))

    @classmethod
    def z(cls, power: int = 1) -> "CircleElement":
        return cls({power: 1})


CIRCLE_LEGS = (CircleElement, CircleElement)


def pi(x: Suq2Element) -> CircleElement:
    """pi(alpha) = z, pi(gamma) = 0."""
    terms = {}
    for monomial, coeff in x.terms.items():
        if monomial.k == 0 and monomial.l == 0:
            terms[monomial.n] = terms.get(monomial.n, 0) + coeff
    return CircleElement(terms)


def delta_T(x: CircleElement) -> BraidedElement:
    """Coproduct of C(T): z^m -> j1(z^m) j2(z^m)."""
    return BraidedElement(CIRCLE_LEGS, {(m, m): c for m, c in x.terms.items()})
