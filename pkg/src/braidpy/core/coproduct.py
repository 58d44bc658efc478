"""Coproduct of braided SU_q(2), its counit and circle morphisms, and the quotient sphere."""
import logging
import random
from typing import Dict, List, Optional, Tuple

from braidpy.core.braided import BraidedElement, LegMap
from braidpy.core.circle import CIRCLE_LEGS, CircleElement, delta_T, pi
from braidpy.core.report import Check, ReportRecord, first_failure, residual_witness, run_checks
from braidpy.core.scalar import Q, QB, VARSIGMA, Scalar
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
)
from braidpy.utils.linalg import coefficient_matrix, kernel_dimension

logger = logging.getLogger(__name__)

SUQ2_LEGS = (Suq2Element, Suq2Element)

HOM_SAMPLE_SEED = 20240917


def j(leg: int, x: Suq2Element, legs=SUQ2_LEGS) -> BraidedElement:
    """Shorthand for j_leg(x) in the two-leg product."""
    return BraidedElement.embed(legs, leg, x)


class MorphismTable:
    """Images of alpha and gamma; the images of alpha* and gamma* are induced by star."""

    def __init__(self, alpha: BraidedElement, gamma: BraidedElement):
        """
        Initialize a morphism table.

        Args:
            alpha: Image of alpha, homogeneous of degree 0
            gamma: Image of gamma, homogeneous of degree 1

        Raises:
            ValueError: If an image has the wrong degree
        """
        for name, image, degree in (("alpha", alpha, 0), ("gamma", gamma, 1)):
            if image.degrees() not in ([degree], []):
                raise ValueError(f"Image of {name} must be homogeneous of degree {degree}")
        self.legs = alpha.legs
        self.images = {"a": alpha, "a*": alpha.star(), "g": gamma, "g*": gamma.star()}
        self._cache: Dict[Suq2Monomial, BraidedElement] = {}

    def _monomial(self, monomial: Suq2Monomial) -> BraidedElement:
        cached = self._cache.get(monomial)
        if cached is not None:
            return cached
        n, k, l = monomial  # noqa: E741
        if monomial == (0, 0, 0):
            image = BraidedElement.one(self.legs)
        elif l:
            image = self._monomial(Suq2Monomial(n, k, l - 1)) * self.images["g*"]
        elif k:
            image = self._monomial(Suq2Monomial(n, k - 1, 0)) * self.images["g"]
        elif n > 0:
            image = self._monomial(Suq2Monomial(n - 1, 0, 0)) * self.images["a"]
        else:
            image = self._monomial(Suq2Monomial(n + 1, 0, 0)) * self.images["a*"]
        self._cache[monomial] = image
        return image

    def apply(self, x: Suq2Element) -> BraidedElement:
        """Extend the generator images multiplicatively along normal-order words."""
        result = BraidedElement(self.legs)
        for monomial, coeff in x.terms.items():
            result = result + self._monomial(monomial).scale(coeff)
        return result


COPRODUCT = MorphismTable(
    alpha=j(1, ALPHA) * j(2, ALPHA) - j(1, GAMMA_STAR) * j(2, GAMMA) * Q,
    gamma=j(1, GAMMA) * j(2, ALPHA) + j(1, ALPHA_STAR) * j(2, GAMMA),
)


def delta(x: Suq2Element) -> BraidedElement:
    """Coproduct Delta: suq2 -> suq2 [x]_zeta suq2."""
    return COPRODUCT.apply(x)


def right_coaction_element(x: Suq2Element) -> BraidedElement:
    """sigma = (id [x] pi) o Delta as an element of suq2 [x] C(T)."""
    return delta(x).map_legs([None, PI_MAP])


DELTA_MAP = LegMap(delta, SUQ2_LEGS, "Delta")
COUNIT_MAP = LegMap(counit, (), "counit")
PI_MAP = LegMap(pi, (CircleElement,), "pi")
EXPECT_MAP = LegMap(cond_expect, (Suq2Element,), "E")
SIGMA_MAP = LegMap(right_coaction_element, (Suq2Element, CircleElement), "sigma")
DELTA_T_MAP = LegMap(delta_T, CIRCLE_LEGS, "Delta_T")


def right_coaction(x: Suq2Element) -> List[Tuple[Suq2Element, int]]:
    """
    Weight decomposition of x under the right circle coaction.

    Returns:
        Pairs (component, weight) with sigma(x) = sum component [x] z^weight
    """
    components: Dict[int, Dict[Suq2Monomial, Scalar]] = {}
    for (monomial, power), coeff in right_coaction_element(x).terms.items():
        bucket = components.setdefault(power, {})
        bucket[monomial] = bucket.get(monomial, 0) + coeff
    return [(Suq2Element(terms), w) for w, terms in sorted(components.items())]


# Checks


def _relation_checks() -> List[Check]:
    a, g = delta(ALPHA), delta(GAMMA)
    a_star, g_star = a.star(), g.star()
    one = BraidedElement.one(SUQ2_LEGS)
    relations = [
        ("delta-unitarity-left", lambda: residual_witness(a_star * a + g_star * g, one)),
        (
            "delta-unitarity-right",
            lambda: residual_witness(a * a_star + g_star * g * VARSIGMA, one),
        ),
        ("delta-alpha-gamma", lambda: residual_witness(a * g, g * a * QB)),
        ("delta-gamma-normal", lambda: residual_witness(g * g_star, g_star * g)),
        ("delta-alpha-gamma-star", lambda: residual_witness(a * g_star, g_star * a * Q)),
    ]
    return [Check(name, "coproduct: defining relations", run) for name, run in relations]


def random_monomial_pairs(count: int, max_size: int, seed: int = HOM_SAMPLE_SEED):
    """Deterministic sample of monomial pairs with |n|+k+l <= max_size."""
    pool = monomials(max_size)
    rng = random.Random(seed)
    return [(rng.choice(pool), rng.choice(pool)) for _ in range(count)]


def _multiplicative(pair) -> Optional[str]:
    x, y = (Suq2Element({m: 1}) for m in pair)
    return residual_witness(delta(x * y), delta(x) * delta(y))


def hom_relation_checks(sample_pairs: int = 100, max_size: int = 3) -> List[Check]:
    """Checks that Delta respects the defining relations and products."""
    checks = _relation_checks()
    pairs = random_monomial_pairs(sample_pairs, max_size)
    checks.append(
        Check(
            "delta-multiplicative",
            "coproduct: homomorphism on basis products",
            lambda: first_failure(pairs, _multiplicative),
        )
    )
    checks.append(
        Check(
            "delta-unit",
            "coproduct: unital",
            lambda: residual_witness(delta(Suq2Element.one()), BraidedElement.one(SUQ2_LEGS)),
        )
    )
    return checks


def check_hom_relations() -> List[ReportRecord]:
    """Delta is a unital *-homomorphism: relations and sampled products."""
    return run_checks(hom_relation_checks(), "relations")


def _coassoc_witness(monomial: Suq2Monomial):
    d = delta(Suq2Element({monomial: 1}))
    return residual_witness(d.map_legs([DELTA_MAP, None]), d.map_legs([None, DELTA_MAP]))


def coassoc_checks(max_size: int) -> List[Check]:
    """One coassociativity check per basis monomial with |n|+k+l <= max_size."""
    return [
        Check(
            f"coassoc {Suq2Element.format_monomial(m)}",
            "coproduct: coassociativity",
            lambda m=m: _coassoc_witness(m),
        )
        for m in monomials(max_size)
    ]


def check_coassoc(max_size: int) -> List[ReportRecord]:
    """(Delta [x] id) o Delta = (id [x] Delta) o Delta on all small monomials."""
    return run_checks(coassoc_checks(max_size), "coassoc")


def _counit_left(m):
    x = Suq2Element({m: 1})
    return residual_witness(delta(x).map_legs([None, COUNIT_MAP]).to_element(), x)


def _counit_right(m):
    x = Suq2Element({m: 1})
    return residual_witness(delta(x).map_legs([COUNIT_MAP, None]).to_element(), x)


def _equivariance(m):
    x = Suq2Element({m: 1})
    return residual_witness(delta(x).map_legs([PI_MAP, PI_MAP]), delta_T(pi(x)))


def _delta_star(m):
    x = Suq2Element({m: 1})
    return residual_witness(delta(x.star()), delta(x).star())


def _coaction_weight(m):
    x = Suq2Element({m: 1})
    expected = BraidedElement.pure((Suq2Element, CircleElement), x, CircleElement.z(m.weight))
    return residual_witness(right_coaction_element(x), expected)


def _expectation(m):
    x = Suq2Element({m: 1})
    fixed = sum((c for c, w in right_coaction(x) if w == 0), Suq2Element())
    witness = residual_witness(cond_expect(x), fixed)
    if witness is None:
        witness = residual_witness(delta(x).map_legs([None, EXPECT_MAP]), delta(cond_expect(x)))
    return witness


def _coaction_coassoc(x):
    s = right_coaction_element(x)
    return residual_witness(s.map_legs([SIGMA_MAP, None]), s.map_legs([None, DELTA_T_MAP]))


def morphism_checks(max_size: int) -> List[Check]:
    """Counit, circle quotient, star compatibility and right coaction checks."""
    basis = monomials(max_size)
    generators = [ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR]
    families = [
        ("counit-left", "coproduct: (id [x] counit) o Delta = id", _counit_left),
        ("counit-right", "coproduct: (counit [x] id) o Delta = id", _counit_right),
        ("circle-equivariance", "circle: (pi [x] pi) o Delta = Delta_T o pi", _equivariance),
        ("delta-star", "coproduct: star compatibility", _delta_star),
        ("right-coaction", "circle: right coaction weights", _coaction_weight),
        ("conditional-expectation", "circle: conditional expectation", _expectation),
    ]
    checks = [
        Check(name, source, lambda check=check: first_failure(basis, check))
        for name, source, check in families
    ]
    checks.append(
        Check(
            "right-coaction-coassoc",
            "circle: (sigma [x] id) o sigma = (id [x] Delta_T) o sigma",
            lambda: first_failure(generators, _coaction_coassoc),
        )
    )
    return checks


# Quotient sphere

A = Suq2Element.basis(0, 1, 1)
B = Suq2Element.basis(1, 0, 1)


def closed_form(k: int, l: int) -> Suq2Element:  # noqa: E741
    """Expression of a[l-k,k,l] through alpha gamma*, gamma alpha* and gamma* gamma."""
    c = Suq2Element.word("g*", "g")
    if l >= k:
        m = l - k
        return (Suq2Element.word("a", "g*") ** m * c ** k).scale(Q ** (m * (m - 1) // 2))
    m = k - l
    return (Suq2Element.word("g", "a*") ** m * c ** l).scale(QB ** (-(m * (m + 1) // 2)))


def _weight_zero_second_leg(x: Suq2Element) -> Optional[str]:
    bad = [key for key in delta(x).terms if key[1].weight != 0]
    if bad:
        return f"second leg of weight {bad[0][1].weight} in {Suq2Element.format_monomial(bad[0][1])}"
    return None


def quotient_sphere_checks(max_kl: int = 4) -> List[Check]:
    """Relations of the quotient sphere generators and closed forms of its basis."""
    source = "quotient sphere: relations"
    checks = [
        Check("relation B*B", source, lambda: residual_witness(B.star() * B, A - A * A)),
        Check(
            "relation BB*",
            source,
            lambda: residual_witness(B * B.star(), A * VARSIGMA - A * A * VARSIGMA ** 2),
        ),
        Check("relation BA", source, lambda: residual_witness(B * A, A * B * VARSIGMA)),
        Check("relation A*", source, lambda: residual_witness(A.star(), A)),
    ]
    for k in range(max_kl + 1):
        for l in range(max_kl + 1):  # noqa: E741
            checks.append(
                Check(
                    f"closed-form a[{l - k},{k},{l}]",
                    "quotient sphere: basis closed forms",
                    lambda k=k, l=l: residual_witness(Suq2Element.basis(l - k, k, l), closed_form(k, l)),
                )
            )
    for name, x in (("A", A), ("B", B)):
        checks.append(
            Check(
                f"coaction-restriction {name}",
                "quotient sphere: Delta lands in suq2 [x] sphere",
                lambda x=x: _weight_zero_second_leg(x),
            )
        )
    return checks


def check_quotient_sphere() -> List[ReportRecord]:
    """Relations, closed forms and coaction restriction of the quotient sphere."""
    return run_checks(quotient_sphere_checks(), "quotient")


def fixedpoint_kernel_dim(max_kl: int, q0: complex) -> int:
    """
    Dimension of {x in span a[l-k,k,l], k+l <= max_kl : Delta(x) = j2(x)} at q = q0.

    Args:
        max_kl: Bound on k + l
        q0: Sample value of q, 0 < |q0| < 1

    Returns:
        Numeric kernel dimension (1 when only scalars are fixed)
    """
    columns = []
    for total in range(max_kl + 1):
        for k in range(total + 1):
            x = Suq2Element.basis(total - 2 * k, k, total - k)
            residual = delta(x) - j(2, x)
            columns.append({key: c.eval(q0) for key, c in residual.terms.items()})
    matrix, _ = coefficient_matrix(columns)
    dimension = kernel_dimension(matrix)
    logger.debug("fixed-point kernel at q=%s, max_kl=%d: %d", q0, max_kl, dimension)
    return dimension
