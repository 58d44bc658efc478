"""Podles spheres with formal parameters lam, rho and the braided action of SU_q(2) on them."""
import logging
import random
from functools import lru_cache
from itertools import product
from typing import Dict, List, NamedTuple, Optional, Tuple

from braidpy.core.algebra import AlgebraElement
from braidpy.core.braided import BraidedElement, LegMap
from braidpy.core.coproduct import DELTA_MAP
from braidpy.core.repmat import LABELS, V_GRAM, build_V
from braidpy.core.report import Check, ReportRecord, first_failure, residual_witness, run_checks
from braidpy.core.scalar import LAM, ONE, RHO, S2, VARSIGMA, Scalar
from braidpy.core.suq2 import Suq2Element, Suq2Monomial

logger = logging.getLogger(__name__)

SPHERE_SAMPLE_SEED = 20240918


class SphereMonomial(NamedTuple):
    """e0^b e-1^a e1^c; at most one of a and c is nonzero."""

    b: int
    a: int
    c: int

    @property
    def degree(self) -> int:
        return self.c - self.a

    @property
    def size(self) -> int:
        return self.a + self.b + self.c

    def letters(self) -> Tuple[int, ...]:
        return (0,) * self.b + (-1,) * self.a + (1,) * self.c


SPHERE_UNIT = SphereMonomial(0, 0, 0)

_INV_VS = VARSIGMA.inverse()
_INV_S2 = S2.inverse()

# Rewrite rules for the four out-of-order pairs of generators.
REWRITE_RULES: Dict[Tuple[int, int], Tuple[Tuple[Tuple[int, ...], Scalar], ...]] = {
    (-1, 0): (((0, -1), VARSIGMA), ((-1,), LAM * _INV_S2)),
    (1, 0): (((0, 1), _INV_VS), ((1,), -LAM * _INV_VS * _INV_S2)),
    (1, -1): (((), RHO * _INV_S2), ((0,), LAM * _INV_VS * _INV_S2), ((0, 0), -_INV_VS)),
    (-1, 1): (((), RHO * _INV_S2), ((0,), -LAM * _INV_S2), ((0, 0), -VARSIGMA)),
}


@lru_cache(maxsize=None)
def normal_form(word: Tuple[int, ...]) -> Dict[SphereMonomial, Scalar]:
    """
    Normal form of a word in the generators, each letter one of -1, 0, 1.

    The leftmost out-of-order pair is rewritten first; every rule either moves
    e0 to the left or shortens the word, so the recursion terminates.
    """
    for i in range(len(word) - 1):
        rule = REWRITE_RULES.get((word[i], word[i + 1]))
        if rule is None:
            continue
        result: Dict[SphereMonomial, Scalar] = {}
        for replacement, coeff in rule:
            for monomial, c in normal_form(word[:i] + replacement + word[i + 2:]).items():
                result[monomial] = result.get(monomial, 0) + coeff * c
        return {m: c for m, c in result.items() if c}
    b = word.count(0)
    return {SphereMonomial(b, word.count(-1), word.count(1)): ONE}


class SphereElement(AlgebraElement):
    """Element of the sphere algebra generated by e-1, e0, e1."""

    __slots__ = ()

    MONOMIAL_PATTERN = r"E\[0\]\^(?P<b>\d+)\*E\[-1\]\^(?P<a>\d+)\*E\[1\]\^(?P<c>\d+)"

    @classmethod
    def unit_monomial(cls) -> SphereMonomial:
        return SPHERE_UNIT

    @classmethod
    def multiply_monomials(cls, left, right):
        return normal_form(left.letters() + right.letters())

    @classmethod
    def star_monomial(cls, monomial):
        # e_i* = e_-i and the order of the letters reverses
        return normal_form(tuple(-x for x in reversed(monomial.letters())))

    @classmethod
    def degree_of(cls, monomial) -> int:
        return monomial.degree

    @classmethod
    def format_monomial(cls, monomial) -> str:
        return f"E[0]^{monomial.b}*E[-1]^{monomial.a}*E[1]^{monomial.c}"

    @classmethod
    def monomial_from_match(cls, match) -> SphereMonomial:
        b, a, c = (int(match.group(name)) for name in ("b", "a", "c"))
        if a and c:
            raise ValueError("A sphere monomial cannot contain both E[-1] and E[1]")
        return SphereMonomial(b, a, c)

    @classmethod
    def sort_key(cls, monomial):
        return (monomial.size, monomial)

    @classmethod
    def generator(cls, i: int) -> "SphereElement":
        """e_i for i in -1, 0, 1."""
        if i not in LABELS:
            raise ValueError(f"No sphere generator e_{i}")
        return cls(normal_form((i,)))

    @classmethod
    def word(cls, *letters: int) -> "SphereElement":
        return cls(normal_form(tuple(letters)))


E_MINUS = SphereElement.generator(-1)
E_ZERO = SphereElement.generator(0)
E_PLUS = SphereElement.generator(1)

SPHERE_LEGS = (Suq2Element, SphereElement)


def sphere_monomials(max_size: int) -> List[SphereMonomial]:
    """All normal monomials with a+b+c <= max_size."""
    found = []
    for size in range(max_size + 1):
        for b in range(size + 1):
            rest = size - b
            found.append(SphereMonomial(b, rest, 0))
            if rest:
                found.append(SphereMonomial(b, 0, rest))
    return found


def relation_residuals(e_m, e_0, e_p, one, lam, rho) -> Dict[str, object]:
    """
    Left-hand minus right-hand sides of the four defining relations.

    Works in any algebra whose elements support +, -, * and ``scale``, so the
    same relations are checked on the generators, on their images under the
    action and on the quotient sphere inside SU_q(2).
    """
    return {
        "rho-relation": e_m * e_p + (e_0 * e_0).scale(S2) + (e_p * e_m).scale(VARSIGMA) - one.scale(rho),
        "lam-relation-minus": (e_m * e_0).scale(S2) - (e_0 * e_m).scale(VARSIGMA * S2) - e_m.scale(lam),
        "lam-relation-zero": (e_p * e_m - e_m * e_p).scale(VARSIGMA)
        + (e_0 * e_0).scale(1 - VARSIGMA ** 2)
        - e_0.scale(lam),
        "lam-relation-plus": (e_0 * e_p).scale(S2) - (e_p * e_0).scale(VARSIGMA * S2) - e_p.scale(lam),
    }


# The braided action


@lru_cache(maxsize=None)
def _generator_image(i: int) -> BraidedElement:
    v = build_V()
    result = BraidedElement(SPHERE_LEGS)
    for k in LABELS:
        result = result + BraidedElement.pure(SPHERE_LEGS, v.entry(i, k), SphereElement.generator(k))
    return result


@lru_cache(maxsize=None)
def _gamma_monomial(monomial: SphereMonomial) -> BraidedElement:
    result = BraidedElement.one(SPHERE_LEGS)
    for letter in monomial.letters():
        result = result * _generator_image(letter)
    return result


def gamma(x: SphereElement) -> BraidedElement:
    """Gamma(e_i) = sum_k j1(v_ik) j2(e_k), extended multiplicatively along normal words."""
    result = BraidedElement(SPHERE_LEGS)
    for monomial, coeff in x.terms.items():
        result = result + _gamma_monomial(monomial).scale(coeff)
    return result


GAMMA_MAP = LegMap(gamma, SPHERE_LEGS, "Gamma")


def rescaled_constants() -> Dict[str, Scalar]:
    """
    Parameters of the rescaled presentation E1 = e-1/s2, E0 = e0/sqrt(vs), E-1 = e1/s2.

    The relations are multiplied through by powers of sqrt(vs), so E0 enters
    only as e0 with E0^2 = e0^2/vs. This gives rho' = rho/(vs*s2).
    ``sqrt_vs_lambda_prime`` is sqrt(vs) times the rescaled lam.
    """
    return {"rho_prime": RHO * _INV_VS * _INV_S2, "sqrt_vs_lambda_prime": LAM * _INV_S2}


def rescaled_residuals(e_m=E_MINUS, e_0=E_ZERO, e_p=E_PLUS) -> Dict[str, SphereElement]:
    """Residuals of the rescaled relations in the generators E1, E0, E-1."""
    constants = rescaled_constants()
    rho_prime, lam_hat = constants["rho_prime"], constants["sqrt_vs_lambda_prime"]
    # big_0 is sqrt(vs)*E0
    big_1, big_0, big_m = e_m.scale(_INV_S2), e_0, e_p.scale(_INV_S2)
    one = SphereElement.one()
    return {
        "rescaled-rho": (big_m * big_1 + (big_1 * big_m).scale(_INV_VS)).scale(S2)
        + (big_0 * big_0).scale(_INV_VS)
        - one.scale(rho_prime),
        "rescaled-lam-one": big_1 * big_0 - (big_0 * big_1).scale(VARSIGMA) - big_1.scale(lam_hat),
        "rescaled-lam-zero": (big_m * big_1 - big_1 * big_m).scale(S2)
        + (big_0 * big_0).scale((1 - VARSIGMA) * _INV_VS)
        - big_0.scale(lam_hat * _INV_VS),
        "rescaled-lam-minus-one": big_0 * big_m - (big_m * big_0).scale(VARSIGMA) - big_m.scale(lam_hat),
    }


def _unitary_expansion(i: int) -> Optional[str]:
    v = build_V()
    g = dict(zip(LABELS, V_GRAM))
    total = BraidedElement(SPHERE_LEGS)
    for k in LABELS:
        weight = g[k] * g[i].inverse()
        total = total + BraidedElement.embed(SPHERE_LEGS, 1, v.entry(k, i).star().scale(weight)) * gamma(
            SphereElement.generator(k)
        )
    return residual_witness(total, BraidedElement.embed(SPHERE_LEGS, 2, SphereElement.generator(i)))


def _coassociativity(i: int) -> Optional[str]:
    image = gamma(SphereElement.generator(i))
    return residual_witness(image.map_legs([None, GAMMA_MAP]), image.map_legs([DELTA_MAP, None]))


def _gamma_star(monomial: SphereMonomial) -> Optional[str]:
    x = SphereElement({monomial: 1})
    return residual_witness(gamma(x.star()), gamma(x).star())


def _gamma_multiplicative(pair) -> Optional[str]:
    x, y = (SphereElement({m: 1}) for m in pair)
    return residual_witness(gamma(x * y), gamma(x) * gamma(y))


def sphere_action_checks() -> List[Check]:
    """The action Gamma: images of the relations, star, coassociativity, density and rescaling."""
    images = {i: gamma(SphereElement.generator(i)) for i in LABELS}
    one = BraidedElement.one(SPHERE_LEGS)
    checks = []
    for name, residual in relation_residuals(images[-1], images[0], images[1], one, LAM, RHO).items():
        checks.append(
            Check(f"image {name}", "sphere action: images satisfy the relations", lambda r=residual: residual_witness(r, 0))
        )
    for i in LABELS:
        checks.append(
            Check(
                f"image-star P{i}",
                "sphere action: star of the generator images",
                lambda i=i: residual_witness(images[i].star(), images[-i]),
            )
        )
        checks.append(
            Check(
                f"image-degree P{i}",
                "sphere action: degree of the generator images",
                lambda i=i: None if images[i].degrees() == [i] else f"degrees {images[i].degrees()}",
            )
        )
        checks.append(
            Check(f"coassociativity e{i}", "sphere action: coaction coassociativity", lambda i=i: _coassociativity(i))
        )
        checks.append(
            Check(f"unitary-expansion e{i}", "sphere action: density identity", lambda i=i: _unitary_expansion(i))
        )
    small = sphere_monomials(2)
    checks.append(
        Check("gamma-star", "sphere action: star compatibility", lambda: first_failure(small, _gamma_star))
    )
    pairs = list(product(sphere_monomials(1), small))
    checks.append(
        Check(
            "gamma-multiplicative",
            "sphere action: homomorphism on basis products",
            lambda: first_failure(pairs, _gamma_multiplicative),
        )
    )
    for name, residual in rescaled_residuals().items():
        checks.append(
            Check(name, "sphere action: rescaled presentation", lambda r=residual: residual_witness(r, 0))
        )
    return checks


def verify_sphere_action() -> List[ReportRecord]:
    """Verify the braided action on the sphere with formal lam and rho."""
    return run_checks(sphere_action_checks(), "sphere-action")


# The quotient sphere inside SU_q(2)


def quotient_parameters() -> Tuple[Scalar, Scalar]:
    """
    (rho_q, lam_q) of the sphere generated by the middle column of V.

    Raises:
        ValueError: If the combinations are not multiples of 1 and v[-1,0]
    """
    v = build_V()
    e_m, e_0, e_p = (v.entry(i, 0) for i in LABELS)
    first = e_m * e_p + (e_0 * e_0).scale(S2) + (e_p * e_m).scale(VARSIGMA)
    rho_q = first.scalar_part()
    if first != Suq2Element.scalar(rho_q):
        raise ValueError(f"Quadratic combination is not a multiple of 1: {first}")
    second = (e_m * e_0).scale(S2) - (e_0 * e_m).scale(VARSIGMA * S2)
    # e-1 = v[-1,0] = -(s2/q) a[1,0,1]
    key = Suq2Monomial(1, 0, 1)
    lam_q = second.coefficient(key) / e_m.coefficient(key)
    if second != e_m.scale(lam_q):
        raise ValueError(f"Commutator is not a multiple of v[-1,0]: {second}")
    logger.debug("quotient sphere parameters rho=%s lam=%s", rho_q, lam_q)
    return rho_q, lam_q


def quotient_checks() -> List[Check]:
    """The middle column of V satisfies all four relations at the quotient parameters."""
    v = build_V()
    column = [v.entry(i, 0) for i in LABELS]

    def run(name: str) -> Optional[str]:
        rho_q, lam_q = quotient_parameters()
        residuals = relation_residuals(*column, Suq2Element.one(), lam_q, rho_q)
        return residual_witness(residuals[name], 0)

    names = ["rho-relation", "lam-relation-minus", "lam-relation-zero", "lam-relation-plus"]
    checks = [Check(f"middle-column {name}", "quotient sphere: middle column of V", lambda n=name: run(n)) for name in names]
    checks.append(
        Check(
            "middle-column-degrees",
            "quotient sphere: middle column of V",
            lambda: first_failure(
                LABELS, lambda i: None if column[i + 1].degrees() == [i] else f"degrees {column[i + 1].degrees()}"
            ),
        )
    )
    return checks


# Properties of the sphere algebra


def _associative(triple) -> Optional[str]:
    x, y, z = (SphereElement({m: 1}) for m in triple)
    return residual_witness((x * y) * z, x * (y * z))


def _star_antimultiplicative(pair) -> Optional[str]:
    x, y = (SphereElement({m: 1}) for m in pair)
    witness = residual_witness(x.star().star(), x)
    return witness or residual_witness((x * y).star(), y.star() * x.star())


def _degree_additive(pair) -> Optional[str]:
    x, y = (SphereElement({m: 1}) for m in pair)
    product_degrees = (x * y).degrees()
    expected = pair[0].degree + pair[1].degree
    if product_degrees not in ([], [expected]):
        return f"degrees {product_degrees}, expected {expected}"
    return None


def random_monomial_triples(count: int, max_size: int, seed: int = SPHERE_SAMPLE_SEED):
    pool = sphere_monomials(max_size)
    rng = random.Random(seed)
    return [tuple(rng.choice(pool) for _ in range(3)) for _ in range(count)]


def sphere_checks(sample_triples: int = 200) -> List[Check]:
    """Defining relations, associativity, star and grading of the sphere algebra."""
    one = SphereElement.one()
    checks = [
        Check(f"generators {name}", "sphere: defining relations", lambda r=residual: residual_witness(r, 0))
        for name, residual in relation_residuals(E_MINUS, E_ZERO, E_PLUS, one, LAM, RHO).items()
    ]
    small = sphere_monomials(2)
    triples = list(product(small, repeat=3))
    sampled = random_monomial_triples(sample_triples, 4)
    pairs = list(product(small, repeat=2))
    checks += [
        Check("associativity-exhaustive", "sphere: associativity", lambda: first_failure(triples, _associative)),
        Check("associativity-sampled", "sphere: associativity", lambda: first_failure(sampled, _associative)),
        Check("star-involutive", "sphere: star", lambda: first_failure(pairs, _star_antimultiplicative)),
        Check("degree-additive", "sphere: grading", lambda: first_failure(pairs, _degree_additive)),
        Check(
            "generator-star",
            "sphere: star",
            lambda: first_failure(
                LABELS,
                lambda i: residual_witness(SphereElement.generator(i).star(), SphereElement.generator(-i)),
            ),
        ),
    ]
    return checks


def check_sphere() -> List[ReportRecord]:
    return run_checks(sphere_checks(), "sphere")
