"""Sparse elements of graded *-algebras with a monomial normal-form basis."""
import re
from typing import Callable, Dict, Hashable, List, Optional, Tuple, TypeVar

from braidpy.core.scalar import Number, Scalar

E = TypeVar("E", bound="AlgebraElement")

_SEPARATOR = re.compile(r"\s*\+\s*")


class AlgebraElement:
    """A finite linear combination of normal-form monomials.

    Subclasses describe one algebra by implementing the monomial hooks:
    ``unit_monomial``, ``multiply_monomials``, ``star_monomial``,
    ``degree_of`` and ``format_monomial``, plus ``MONOMIAL_PATTERN`` and
    ``monomial_from_match`` for parsing. Everything else (linear
    structure, products, involution, grading, text form) is shared.
    """

    __slots__ = ("terms",)

    MONOMIAL_PATTERN = ""

    def __init__(self, terms: Optional[Dict[Hashable, Number]] = None):
        cleaned = {}
        for monomial, coeff in (terms or {}).items():
            coeff = Scalar.coerce(coeff)
            if coeff:
                cleaned[monomial] = coeff
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # Monomial hooks

    @classmethod
    def unit_monomial(cls) -> Hashable:
        raise NotImplementedError

    @classmethod
    def multiply_monomials(cls, left: Hashable, right: Hashable) -> Dict[Hashable, Scalar]:
        raise NotImplementedError

    @classmethod
    def star_monomial(cls, monomial: Hashable) -> Dict[Hashable, Scalar]:
        raise NotImplementedError

    @classmethod
    def degree_of(cls, monomial: Hashable) -> int:
        raise NotImplementedError

    @classmethod
    def format_monomial(cls, monomial: Hashable) -> str:
        raise NotImplementedError

    @classmethod
    def monomial_from_match(cls, match: "re.Match") -> Hashable:
        raise NotImplementedError

    @classmethod
    def sort_key(cls, monomial: Hashable):
        return monomial

    # Constructors

    @classmethod
    def zero(cls: type) -> E:
        return cls()

    @classmethod
    def one(cls: type) -> E:
        return cls({cls.unit_monomial(): 1})

    @classmethod
    def monomial(cls: type, monomial: Hashable, coeff: Number = 1) -> E:
        return cls({monomial: coeff})

    @classmethod
    def scalar(cls: type, coeff: Number) -> E:
        return cls({cls.unit_monomial(): coeff})

    @classmethod
    def coerce(cls: type, value) -> E:
        """Promote a Scalar or int to a multiple of the unit."""
        if isinstance(value, cls):
            return value
        if isinstance(value, (Scalar, int)):
            return cls.scalar(value)
        raise TypeError(f"Cannot use {type(value).__name__} as {cls.__name__}")

    # Linear structure

    def _combine(self: E, other: E, sign: int) -> E:
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + (coeff if sign > 0 else -coeff)
        return type(self)(terms)

    def __add__(self: E, other) -> E:
        try:
            other = type(self).coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self: E, other) -> E:
        try:
            other = type(self).coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self: E, other) -> E:
        return type(self).coerce(other) - self

    def __neg__(self: E) -> E:
        return type(self)({m: -c for m, c in self.terms.items()})

    def scale(self: E, coeff: Number) -> E:
        coeff = Scalar.coerce(coeff)
        return type(self)({m: c * coeff for m, c in self.terms.items()})

    def map_coefficients(self: E, func: Callable[[Scalar], Scalar]) -> E:
        return type(self)({m: func(c) for m, c in self.terms.items()})

    # Products

    def __mul__(self: E, other) -> E:
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        terms: Dict[Hashable, Scalar] = {}
        for left, lc in self.terms.items():
            for right, rc in other.terms.items():
                coeff = lc * rc
                for monomial, c in type(self).multiply_monomials(left, right).items():
                    terms[monomial] = terms.get(monomial, 0) + coeff * c
        return type(self)(terms)

    def __rmul__(self: E, other) -> E:
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self: E, exponent: int) -> E:
        if exponent < 0:
            raise ValueError("Negative powers are not defined")
        result = type(self).one()
        for _ in range(exponent):
            result = result * self
        return result

    def star(self: E) -> E:
        """Antilinear involution; coefficients are conjugated."""
        terms: Dict[Hashable, Scalar] = {}
        for monomial, coeff in self.terms.items():
            conj = coeff.conj()
            for image, c in type(self).star_monomial(monomial).items():
                terms[image] = terms.get(image, 0) + conj * c
        return type(self)(terms)

    # Grading

    def grade_component(self: E, degree: int) -> E:
        """The sum of the terms of the given degree."""
        return type(self)(
            {m: c for m, c in self.terms.items() if type(self).degree_of(m) == degree}
        )

    def degrees(self) -> List[int]:
        return sorted({type(self).degree_of(m) for m in self.terms})

    @property
    def degree(self) -> Optional[int]:
        """Degree of a homogeneous element, None otherwise (and for zero)."""
        found = self.degrees()
        return found[0] if len(found) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def scalar_part(self) -> Scalar:
        """Coefficient of the unit monomial."""
        return self.terms.get(type(self).unit_monomial(), Scalar(0))

    def coefficient(self, monomial: Hashable) -> Scalar:
        return self.terms.get(monomial, Scalar(0))

    def sorted_terms(self) -> List[Tuple[Hashable, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: type(self).sort_key(item[0]))

    # Comparison

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (Scalar, int)):
            other = type(self).scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self.terms.items())))

    # Text form

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{{{coeff}}}*{type(self).format_monomial(monomial)}"
            for monomial, coeff in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

    @classmethod
    def parse(cls: type, text: str) -> E:
        """
        Parse the text form ``{coeff}*monomial + {coeff}*monomial ...``.

        Raises:
            ValueError: If the text does not match the format
        """
        text = text.strip()
        if text == "0":
            return cls()
        term = re.compile(r"\{(?P<coeff>[^{}]*)\}\*(?P<monomial>" + cls.MONOMIAL_PATTERN + ")")
        terms: Dict[Hashable, Scalar] = {}
        position = 0
        while True:
            match = term.match(text, position)
            if match is None:
                raise ValueError(f"Cannot parse {cls.__name__} at {text[position:]!r}")
            monomial = cls.monomial_from_match(match)
            coeff = Scalar.parse(match.group("coeff"))
            terms[monomial] = terms.get(monomial, 0) + coeff
            position = match.end()
            if position == len(text):
                break
            separator = _SEPARATOR.match(text, position)
            if separator is None or separator.end() == position:
                raise ValueError(f"Expected '+' in {cls.__name__} text at {text[position:]!r}")
            position = separator.end()
        return cls(terms)

