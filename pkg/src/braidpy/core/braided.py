"""N-leg zeta-twisted braided tensor products of graded algebras."""
from itertools import product
from typing import Callable, Dict, Hashable, List, NamedTuple, Optional, Sequence, Tuple, Union

from braidpy.core.algebra import AlgebraElement
from braidpy.core.scalar import ZETA_BAR, Number, Scalar

Legs = Tuple[type, ...]
LegTerm = Tuple[Hashable, ...]


class LegMap(NamedTuple):
    """A degree-preserving morphism applied to one leg.

    ``func`` receives a single-monomial element of the source algebra and
    returns a BraidedElement over ``legs``, an AlgebraElement (one leg) or a
    Scalar (no legs).
    """

    func: Callable
    legs: Legs
    name: str = ""


def _expand(factors: List[Dict[Hashable, Scalar]]) -> List[Tuple[LegTerm, Scalar]]:
    """Cartesian product of per-leg normal forms."""
    expanded = []
    for combo in product(*(f.items() for f in factors)):
        coeff = Scalar(1)
        for _, c in combo:
            coeff = coeff * c
        expanded.append((tuple(m for m, _ in combo), coeff))
    return expanded


class BraidedElement:
    """Element of A_1 [x]_zeta ... [x]_zeta A_N in canonical leg order j1 j2 ... jN.

    Homogeneous elements on legs s < t obey
    j_t(b) j_s(a) = zeta_bar^(deg a * deg b) j_s(a) j_t(b).
    """

    __slots__ = ("legs", "terms")

    def __init__(self, legs: Sequence[type], terms: Optional[Dict[LegTerm, Number]] = None):
        legs = tuple(legs)
        cleaned = {}
        for key, coeff in (terms or {}).items():
            if len(key) != len(legs):
                raise ValueError(f"Term {key!r} does not match {len(legs)} legs")
            coeff = Scalar.coerce(coeff)
            if coeff:
                cleaned[tuple(key)] = coeff
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("BraidedElement is immutable")

    # Constructors

    @classmethod
    def scalar(cls, legs: Sequence[type], coeff: Number) -> "BraidedElement":
        return cls(legs, {tuple(leg.unit_monomial() for leg in legs): coeff})

    @classmethod
    def one(cls, legs: Sequence[type]) -> "BraidedElement":
        return cls.scalar(legs, 1)

    @classmethod
    def pure(cls, legs: Sequence[type], *elements: AlgebraElement) -> "BraidedElement":
        """j1(x1) j2(x2) ... jN(xN); already in canonical order, so no twist."""
        legs = tuple(legs)
        if len(elements) != len(legs):
            raise ValueError(f"Expected {len(legs)} leg elements, got {len(elements)}")
        for leg, element in zip(legs, elements):
            if not isinstance(element, leg):
                raise ValueError(f"Expected {leg.__name__}, got {type(element).__name__}")
        return cls(legs, dict(_expand([e.terms for e in elements])))

    @classmethod
    def embed(cls, legs: Sequence[type], leg: int, element: AlgebraElement) -> "BraidedElement":
        """j_leg(element) with leg counted from 1."""
        legs = tuple(legs)
        if not 1 <= leg <= len(legs):
            raise ValueError(f"Leg {leg} out of range for {len(legs)} legs")
        elements = [cls_.one() for cls_ in legs]
        elements[leg - 1] = element
        return cls.pure(legs, *elements)

    @classmethod
    def coerce(cls, value: Union["BraidedElement", AlgebraElement, Scalar, int]) -> "BraidedElement":
        """View an algebra element as one leg and a scalar as no legs."""
        if isinstance(value, BraidedElement):
            return value
        if isinstance(value, AlgebraElement):
            return cls((type(value),), {(m,): c for m, c in value.terms.items()})
        if isinstance(value, (Scalar, int)):
            return cls.scalar((), value)
        raise TypeError(f"Cannot use {type(value).__name__} as BraidedElement")

    # Linear structure

    def _check_legs(self, other: "BraidedElement"):
        if self.legs != other.legs:
            raise ValueError(
                "Leg signature mismatch: "
                f"{[leg.__name__ for leg in self.legs]} vs {[leg.__name__ for leg in other.legs]}"
            )

    def _as_same(self, other) -> "BraidedElement":
        if isinstance(other, (Scalar, int)):
            return BraidedElement.scalar(self.legs, other)
        if not isinstance(other, BraidedElement):
            raise TypeError(f"Cannot combine BraidedElement with {type(other).__name__}")
        self._check_legs(other)
        return other

    def __add__(self, other) -> "BraidedElement":
        other = self._as_same(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return BraidedElement(self.legs, terms)

    __radd__ = __add__

    def __neg__(self) -> "BraidedElement":
        return BraidedElement(self.legs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "BraidedElement":
        return self + (-self._as_same(other))

    def __rsub__(self, other) -> "BraidedElement":
        return self._as_same(other) - self

    def scale(self, coeff: Number) -> "BraidedElement":
        coeff = Scalar.coerce(coeff)
        return BraidedElement(self.legs, {k: c * coeff for k, c in self.terms.items()})

    # Products

    def _leg_degrees(self, key: LegTerm) -> List[int]:
        return [leg.degree_of(m) for leg, m in zip(self.legs, key)]

    def __mul__(self, other) -> "BraidedElement":
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        if not isinstance(other, BraidedElement):
            return NotImplemented
        self._check_legs(other)
        terms: Dict[LegTerm, Scalar] = {}
        for left, lc in self.terms.items():
            left_degrees = self._leg_degrees(left)
            for right, rc in other.terms.items():
                right_degrees = self._leg_degrees(right)
                # every right factor on leg t passes the left factors on legs s > t
                exponent = sum(
                    right_degrees[t] * left_degrees[s]
                    for t in range(len(self.legs))
                    for s in range(t + 1, len(self.legs))
                )
                coeff = lc * rc * ZETA_BAR ** exponent
                factors = [
                    leg.multiply_monomials(a, b) for leg, a, b in zip(self.legs, left, right)
                ]
                for key, c in _expand(factors):
                    terms[key] = terms.get(key, 0) + coeff * c
        return BraidedElement(self.legs, terms)

    def __rmul__(self, other) -> "BraidedElement":
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "BraidedElement":
        if exponent < 0:
            raise ValueError("Negative powers are not defined")
        result = BraidedElement.one(self.legs)
        for _ in range(exponent):
            result = result * self
        return result

    def star(self) -> "BraidedElement":
        """Reverse the legs, star each entry and restore canonical order."""
        terms: Dict[LegTerm, Scalar] = {}
        count = len(self.legs)
        for key, coeff in self.terms.items():
            degrees = self._leg_degrees(key)
            exponent = sum(degrees[s] * degrees[t] for s in range(count) for t in range(s + 1, count))
            base = coeff.conj() * ZETA_BAR ** exponent
            factors = [leg.star_monomial(m) for leg, m in zip(self.legs, key)]
            for image, c in _expand(factors):
                terms[image] = terms.get(image, 0) + base * c
        return BraidedElement(self.legs, terms)

    # Gradings and leg maps

    def leg_project(self, leg: int, degree: int) -> "BraidedElement":
        """Keep the terms whose monomial on leg ``leg`` (from 1) has the given degree."""
        if not 1 <= leg <= len(self.legs):
            raise ValueError(f"Leg {leg} out of range for {len(self.legs)} legs")
        cls_ = self.legs[leg - 1]
        return BraidedElement(
            self.legs,
            {k: c for k, c in self.terms.items() if cls_.degree_of(k[leg - 1]) == degree},
        )

    def leg_degrees(self, leg: int) -> List[int]:
        cls_ = self.legs[leg - 1]
        return sorted({cls_.degree_of(k[leg - 1]) for k in self.terms})

    def degrees(self) -> List[int]:
        return sorted({sum(self._leg_degrees(k)) for k in self.terms})

    def juxtapose(self, other: "BraidedElement") -> "BraidedElement":
        """j_{1..N}(self) j_{N+1..N+M}(other); the legs of other follow, so no twist."""
        terms: Dict[LegTerm, Scalar] = {}
        for left, lc in self.terms.items():
            for right, rc in other.terms.items():
                terms[left + right] = terms.get(left + right, 0) + lc * rc
        return BraidedElement(self.legs + other.legs, terms)

    def map_legs(self, maps: Sequence[Optional[LegMap]]) -> "BraidedElement":
        """
        Apply one morphism per leg; None keeps the leg unchanged.

        Args:
            maps: One entry per leg

        Returns:
            Element over the concatenated target legs

        Raises:
            ValueError: If a map changes the degree of a monomial
        """
        if len(maps) != len(self.legs):
            raise ValueError(f"Expected {len(self.legs)} leg maps, got {len(maps)}")
        target: Legs = ()
        for leg, leg_map in zip(self.legs, maps):
            target += (leg,) if leg_map is None else tuple(leg_map.legs)

        images: Dict[Tuple[int, Hashable], BraidedElement] = {}

        def image(index: int, monomial: Hashable) -> BraidedElement:
            cache_key = (index, monomial)
            if cache_key not in images:
                leg, leg_map = self.legs[index], maps[index]
                if leg_map is None:
                    images[cache_key] = BraidedElement((leg,), {(monomial,): 1})
                else:
                    value = BraidedElement.coerce(leg_map.func(leg.monomial(monomial)))
                    if value.legs != tuple(leg_map.legs):
                        raise ValueError(f"Leg map {leg_map.name or leg_map.func} returned wrong legs")
                    expected = leg.degree_of(monomial)
                    if value and value.degrees() != [expected]:
                        raise ValueError(
                            f"Leg map {leg_map.name or leg_map.func} changes the degree of "
                            f"{leg.format_monomial(monomial)}"
                        )
                    images[cache_key] = value
            return images[cache_key]

        result = BraidedElement(target)
        for key, coeff in self.terms.items():
            piece = BraidedElement.scalar((), coeff)
            for index, monomial in enumerate(key):
                piece = piece.juxtapose(image(index, monomial))
                if not piece:
                    break
            if piece:
                result = result + piece
        return result

    def to_element(self) -> Union[AlgebraElement, Scalar]:
        """Unwrap a one-leg element to its algebra, or a no-leg element to a Scalar."""
        if not self.legs:
            return self.terms.get((), Scalar(0))
        if len(self.legs) != 1:
            raise ValueError("Only one-leg elements can be unwrapped")
        return self.legs[0]({k[0]: c for k, c in self.terms.items()})

    # Comparison and text

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (Scalar, int)):
            other = BraidedElement.scalar(self.legs, other)
        if not isinstance(other, BraidedElement):
            return NotImplemented
        return self.legs == other.legs and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.legs, frozenset(self.terms.items())))

    def sorted_terms(self) -> List[Tuple[LegTerm, Scalar]]:
        return sorted(
            self.terms.items(),
            key=lambda item: tuple(leg.sort_key(m) for leg, m in zip(self.legs, item[0])),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key, coeff in self.sorted_terms():
            legs = "*".join(
                f"j{i}({leg.format_monomial(m)})" for i, (leg, m) in enumerate(zip(self.legs, key), 1)
            )
            pieces.append(f"{{{coeff}}}*{legs}" if legs else f"{{{coeff}}}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"BraidedElement({str(self)!r})"
