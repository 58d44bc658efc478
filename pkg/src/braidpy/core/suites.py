"""Verification suites: configuration, registry and runner."""
import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Union

from braidpy.core import coproduct, repmat, sphere
from braidpy.core.braided import BraidedElement
from braidpy.core.report import Check, SkipCheck, SuiteReport, residual_witness, run_checks
from braidpy.core.scalar import LAM, RHO, S2, VARSIGMA, ZETA_BAR, Scalar, zeta_power
from braidpy.core.suq2 import Suq2Element, monomials, suq2_checks
from braidpy.utils import numrep
from braidpy.utils.oracles import load_coproducts, load_products

logger = logging.getLogger(__name__)

NUMERIC_TOLERANCE = 1e-9
BRAIDED_SAMPLE_SEED = 20240919

DEFAULT_Q_SAMPLES = (0.3 + 0.4j, 0.5, -0.25, 0.1 + 0.7j)
DEFAULT_LAMBDA_SAMPLES = (0.0, 1.0, 2.5)
DEFAULT_RHO_SAMPLES = (0.0, 1.0, 2.5)

OUTPUT_FORMATS = ("text", "json")


class ConfigError(ValueError):
    """Invalid verification settings."""


@dataclass
class SuiteConfig:
    """Settings of a verification run.

    Attributes:
        suites: Suite ids to run, in any order; "all" selects every suite
        max_size: Bound on |n|+k+l for exhaustive monomial checks
        q_samples: Sample values of q for numeric checks, 0 < |q| < 1
        lambda_samples: Sample values of lam
        rho_samples: Sample values of rho
        levels: Highest n of the numeric window
        window: Largest |k| of the numeric window
        output_format: "text" or "json"
        oracle_dir: Directory with the oracle tables (None: packaged data)
        jobs: Worker threads per suite
        timings: Record wall times
    """

    suites: List[str] = field(default_factory=lambda: ["all"])
    max_size: int = 3
    q_samples: List[complex] = field(default_factory=lambda: list(DEFAULT_Q_SAMPLES))
    lambda_samples: List[float] = field(default_factory=lambda: list(DEFAULT_LAMBDA_SAMPLES))
    rho_samples: List[float] = field(default_factory=lambda: list(DEFAULT_RHO_SAMPLES))
    levels: int = 10
    window: int = 8
    output_format: str = "text"
    oracle_dir: Optional[Union[str, Path]] = None
    jobs: int = 1
    timings: bool = False

    def validate(self) -> "SuiteConfig":
        """
        Check bounds, suite ids and q samples.

        Returns:
            self, for chaining

        Raises:
            ConfigError: On the first invalid setting
        """
        if not self.suites:
            raise ConfigError("No suite selected")
        unknown = [s for s in self.suites if s != "all" and s not in SUITES]
        if unknown:
            raise ConfigError(f"Unknown suite(s): {', '.join(unknown)}. Choose from: {', '.join(SUITE_IDS)}, all")
        if self.max_size < 0:
            raise ConfigError(f"max_size must not be negative, got {self.max_size}")
        for name in ("levels", "window", "jobs"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if not self.q_samples:
            raise ConfigError("At least one q sample is required")
        for q0 in self.q_samples:
            if not 0 < abs(q0) < 1:
                raise ConfigError(f"q sample {q0} is outside the punctured unit disc")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"Unknown output format {self.output_format!r}")
        return self

    def selected(self) -> List[str]:
        """Selected suite ids in registry order, each once."""
        if "all" in self.suites:
            return list(SUITE_IDS)
        return [s for s in SUITE_IDS if s in self.suites]


def _window(config: SuiteConfig, q0: complex) -> numrep.Window:
    return numrep.Window(config.levels, config.window, q0)


def _numeric(compute: Callable[[], float]) -> Callable[[], Optional[str]]:
    """Wrap a residual computation as a check body with the numeric tolerance."""

    def run() -> Optional[str]:
        try:
            value = compute()
        except numrep.WindowError as e:
            raise SkipCheck(str(e)) from None
        if value < NUMERIC_TOLERANCE:
            return None
        return f"residual {value:.3e} exceeds {NUMERIC_TOLERANCE:.0e}"

    return run


# Symbolic suites


def _exchange_witness(pair) -> Optional[str]:
    a, b = (Suq2Element({m: 1}) for m in pair)
    lhs = coproduct.j(2, b) * coproduct.j(1, a)
    rhs = (coproduct.j(1, a) * coproduct.j(2, b)).scale(ZETA_BAR ** (a.degree * b.degree))
    return residual_witness(lhs, rhs)


def _three_leg_witness(triple) -> Optional[str]:
    x, y, z = triple
    return residual_witness((x * y) * z, x * (y * z))


def _three_leg_samples(count: int, max_size: int) -> List[tuple]:
    legs = (Suq2Element,) * 3
    pool = monomials(max_size)
    rng = random.Random(BRAIDED_SAMPLE_SEED)

    def draw() -> BraidedElement:
        return BraidedElement(legs, {tuple(rng.choice(pool) for _ in legs): 1})

    return [(draw(), draw(), draw()) for _ in range(count)]


def braided_checks(max_size: int) -> List[Check]:
    """Exchange law between the legs and re-association of three-leg products."""
    pairs = list(product(monomials(min(max_size, 2)), repeat=2))
    triples = _three_leg_samples(30, min(max_size, 2))
    return [
        Check(
            "braided-exchange",
            "braided tensor product: exchange law",
            lambda: next((f"{p}: {w}" for p in pairs for w in [_exchange_witness(p)] if w), None),
        ),
        Check(
            "braided-three-leg-associativity",
            "braided tensor product: associativity",
            lambda: next((w for t in triples for w in [_three_leg_witness(t)] if w), None),
        ),
    ]


def relations_suite(config: SuiteConfig) -> List[Check]:
    return (
        suq2_checks()
        + coproduct.hom_relation_checks(max_size=config.max_size)
        + coproduct.morphism_checks(config.max_size)
        + braided_checks(config.max_size)
    )


def coassoc_suite(config: SuiteConfig) -> List[Check]:
    return coproduct.coassoc_checks(config.max_size)


def _product_witness(v: repmat.AlgMatrix, oracle) -> Optional[str]:
    return residual_witness(repmat.big_entry(v, oracle.row, oracle.col), oracle.value)


def products_suite(config: SuiteConfig) -> List[Check]:
    """Every entry of the 9x9 matrix against the product table."""
    v = repmat.build_V()
    return [
        Check(oracle.tag, "products of entries of V", lambda o=oracle: _product_witness(v, o))
        for oracle in load_products(config.oracle_dir)
    ]


def _coproduct_witness(v: repmat.AlgMatrix, oracle) -> Optional[str]:
    witness = residual_witness(oracle.element, v.entry(*oracle.entry))
    if witness:
        return f"element differs from V{list(oracle.entry)}: {witness}"
    expansion = BraidedElement(coproduct.SUQ2_LEGS)
    for left, right in oracle.expansion:
        expansion = expansion + BraidedElement.pure(coproduct.SUQ2_LEGS, left, right)
    return residual_witness(coproduct.delta(oracle.element), expansion)


def coproducts_suite(config: SuiteConfig) -> List[Check]:
    """Delta of the entries of V against the coproduct table."""
    v = repmat.build_V()
    return [
        Check(oracle.tag, "coproducts of entries of V", lambda o=oracle: _coproduct_witness(v, o))
        for oracle in load_coproducts(config.oracle_dir)
    ]


def v_rep_suite(config: SuiteConfig) -> List[Check]:
    """u, its tensor square, W and V: pipeline, unitarity and corepresentation identities."""
    u, t, w, v = repmat.fundamental_u(), repmat.tensor_square(), repmat.build_W(), repmat.build_V()
    source = "representations: construction of V"

    def invariant_vector() -> Optional[str]:
        # t applied to the invariant vector reproduces it
        for i in range(4):
            total = Suq2Element()
            for k, c in enumerate(repmat.INVARIANT_VECTOR):
                if c:
                    total = total + t.entries[i][k].scale(c)
            witness = residual_witness(total, Suq2Element.scalar(repmat.INVARIANT_VECTOR[i]))
            if witness:
                return f"component {i}: {witness}"
        return None

    def trivial_summand() -> Optional[str]:
        parts = repmat.decompose_tensor_square(t)
        witness = residual_witness(parts["trivial"], Suq2Element.one())
        if witness:
            return f"trivial summand: {witness}"
        nonzero = [x for x in parts["off_block"] if x]
        return f"off-block entry {nonzero[0]}" if nonzero else None

    checks = [
        Check("tensor-square-printed", source, lambda: repmat.matrix_witness(t, repmat.printed_tensor_square())),
        Check("tensor-square-invariant-vector", source, invariant_vector),
        Check("tensor-square-trivial-summand", source, trivial_summand),
        Check("W-printed", source, lambda: repmat.matrix_witness(w, repmat.printed_W())),
        Check("V-from-W", source, lambda: repmat.matrix_witness(repmat.V_from_W(w), v)),
    ]
    checks += repmat.unitary_check(u, "u")
    checks += repmat.rep_check(u, "u")
    checks += repmat.unitary_check(t, "T")
    checks += repmat.unitary_check(w, "W", repmat.W_GRAM)
    checks += repmat.unitary_check(v, "V", repmat.V_GRAM)
    checks += repmat.rep_check(v, "V")
    return checks


def degrees_suite(config: SuiteConfig) -> List[Check]:
    source = "representations: degrees of the entries"
    matrices = {
        "u": repmat.fundamental_u(),
        "T": repmat.tensor_square(),
        "W": repmat.build_W(),
        "V": repmat.build_V(),
    }
    checks = [
        Check(f"{name}-degrees", source, lambda m=m: repmat.degree_check(m)) for name, m in matrices.items()
    ]
    checks.append(
        Check(
            "V-degree-matrix",
            source,
            lambda: None
            if matrices["V"].degree_matrix() == repmat.V_DEGREES
            else f"degrees {matrices['V'].degree_matrix()}",
        )
    )
    return checks


def big_v_suite(config: SuiteConfig) -> List[Check]:
    return repmat.row_identity_checks()


def quotient_suite(config: SuiteConfig) -> List[Check]:
    def parameters() -> Optional[str]:
        rho_q, lam_q = sphere.quotient_parameters()
        return residual_witness(rho_q, S2) or residual_witness(lam_q, 1 - VARSIGMA ** 2)

    return (
        coproduct.quotient_sphere_checks()
        + [Check("quotient-parameters", "quotient sphere: parameters", parameters)]
        + sphere.quotient_checks()
        + repmat.star_structure_checks()
    )


def sphere_suite(config: SuiteConfig) -> List[Check]:
    return sphere.sphere_checks()


def sphere_action_suite(config: SuiteConfig) -> List[Check]:
    return sphere.sphere_action_checks()


# Numeric suites


def _rank_witness(config: SuiteConfig, q0: complex) -> Optional[str]:
    try:
        rank, singular = numrep.nine_range_rank(_window(config, q0))
    except numrep.WindowError as e:
        raise SkipCheck(str(e)) from None
    if rank != 9:
        return f"rank {rank}, singular values {singular}"
    return None


def _dimension_witness(compute: Callable[[], int]) -> Callable[[], Optional[str]]:
    def run() -> Optional[str]:
        dimension = compute()
        return None if dimension == 1 else f"dimension {dimension}"

    return run


def _numeric_commutant(config: SuiteConfig, q0: complex) -> int:
    try:
        return numrep.commutant_dim(_window(config, q0))
    except numrep.WindowError as e:
        raise SkipCheck(str(e)) from None


def rank_suite(config: SuiteConfig) -> List[Check]:
    """Range rank, commutant and fixed points of the coaction at each q sample."""
    checks = []
    for q0 in config.q_samples:
        checks += [
            Check(f"nine-range-rank q={q0}", "numeric: range of V", lambda q0=q0: _rank_witness(config, q0)),
            Check(
                f"commutant-dim q={q0}",
                "numeric: irreducibility of V",
                _dimension_witness(lambda q0=q0: repmat.commutant_dim(q0)),
            ),
            Check(
                f"commutant-dim-numeric q={q0}",
                "numeric: irreducibility of V",
                _dimension_witness(lambda q0=q0: _numeric_commutant(config, q0)),
            ),
            Check(
                f"fixedpoint-kernel-dim q={q0}",
                "numeric: fixed points of the coaction",
                _dimension_witness(lambda q0=q0: coproduct.fixedpoint_kernel_dim(3, q0)),
            ),
        ]
    return checks


def _unitarity_residual(v: repmat.AlgMatrix, window: numrep.Window) -> float:
    g = [Scalar.coerce(x) for x in repmat.V_GRAM]
    worst = 0.0
    labels = repmat.LABELS
    for a, i in enumerate(labels):
        for b, k in enumerate(labels):
            delta = Suq2Element.scalar(g[a].inverse()) if a == b else Suq2Element()
            right = [[v.entry(i, j).scale(g[c].inverse()), v.entry(k, j).star()] for c, j in enumerate(labels)]
            worst = max(worst, numrep.product_residual(right, delta, window))
            delta = Suq2Element.scalar(g[a]) if a == b else Suq2Element()
            left = [[v.entry(j, i).star().scale(g[c]), v.entry(j, k)] for c, j in enumerate(labels)]
            worst = max(worst, numrep.product_residual(left, delta, window))
    return worst


def _products_residual(v: repmat.AlgMatrix, oracles, window: numrep.Window) -> float:
    worst = 0.0
    for oracle in oracles:
        (k, l), (r, p) = oracle.row, oracle.col  # noqa: E741
        factors = [v.entry(k, r).scale(zeta_power(r * (p - l))), v.entry(l, p)]
        worst = max(worst, numrep.product_residual([factors], oracle.value, window))
    return worst


def _coproducts_residual(oracles, window: numrep.Window) -> float:
    worst = 0.0
    for oracle in oracles:
        terms = [(coproduct.j(1, a), coproduct.j(2, b)) for a, b in oracle.expansion]
        worst = max(worst, numrep.braided_product_residual(terms, coproduct.delta(oracle.element), window))
    return worst


def _quotient_residual(v: repmat.AlgMatrix, window: numrep.Window) -> float:
    rho_q, lam_q = sphere.quotient_parameters()
    e_m, e_0, e_p = (v.entry(i, 0) for i in repmat.LABELS)
    one = Suq2Element.one()
    residuals = [
        numrep.product_residual([[e_m, e_p], [e_0.scale(S2), e_0], [e_p.scale(VARSIGMA), e_m]], one.scale(rho_q), window),
        numrep.product_residual(
            [[e_m.scale(S2), e_0], [e_0.scale(-VARSIGMA * S2), e_m]], e_m.scale(lam_q), window
        ),
        numrep.product_residual(
            [[e_p.scale(VARSIGMA), e_m], [e_m.scale(-VARSIGMA), e_p], [e_0.scale(1 - VARSIGMA ** 2), e_0]],
            e_0.scale(lam_q),
            window,
        ),
        numrep.product_residual(
            [[e_0.scale(S2), e_p], [e_p.scale(-VARSIGMA * S2), e_0]], e_p.scale(lam_q), window
        ),
    ]
    return max(residuals)


def _homomorphism_residual(window: numrep.Window, max_size: int) -> float:
    pool = [Suq2Element({m: 1}) for m in monomials(min(max_size, 2))]
    return max(numrep.homomorphism_residual(x, y, window) for x, y in product(pool, repeat=2))


@lru_cache(maxsize=None)
def _image_relation_residuals() -> Dict[str, BraidedElement]:
    images = {i: sphere.gamma(sphere.SphereElement.generator(i)) for i in repmat.LABELS}
    one = BraidedElement.one(sphere.SPHERE_LEGS)
    return sphere.relation_residuals(images[-1], images[0], images[1], one, LAM, RHO)


def _coefficient_residual(q0: complex, lam0: float, rho0: float) -> float:
    worst = 0.0
    for residual in _image_relation_residuals().values():
        for coeff in residual.terms.values():
            worst = max(worst, abs(coeff.eval(q0, lam0, rho0)))
    return worst


def numeric_suite(config: SuiteConfig) -> List[Check]:
    """Symbolic identities re-checked on the truncated representation at each q sample."""
    v = repmat.build_V()
    products_table = load_products(config.oracle_dir)
    coproducts_table = load_coproducts(config.oracle_dir)
    entries = [x for row in v.entries for x in row]
    checks = []
    for q0 in config.q_samples:
        window = _window(config, q0)
        families: Dict[str, Callable[[], float]] = {
            "pi-relations": lambda window=window: max(numrep.pi_relation_residuals(window).values()),
            "homomorphism": lambda window=window: _homomorphism_residual(window, config.max_size),
            "adjoint": lambda window=window: max(numrep.adjoint_residual(x, window) for x in entries),
            "products": lambda window=window: _products_residual(v, products_table, window),
            "coproducts": lambda window=window: _coproducts_residual(coproducts_table, window),
            "V-unitarity": lambda window=window: _unitarity_residual(v, window),
            "quotient-relations": lambda window=window: _quotient_residual(v, window),
        }
        for name, compute in families.items():
            checks.append(Check(f"numeric {name} q={q0}", f"numeric: {name}", _numeric(compute)))
        for lam0, rho0 in product(config.lambda_samples, config.rho_samples):
            checks.append(
                Check(
                    f"numeric sphere-images q={q0} lam={lam0} rho={rho0}",
                    "numeric: sphere action relations",
                    _numeric(lambda q0=q0, lam0=lam0, rho0=rho0: _coefficient_residual(q0, lam0, rho0)),
                )
            )
    return checks


SUITES: Dict[str, Callable[[SuiteConfig], List[Check]]] = {
    "relations": relations_suite,
    "coassoc": coassoc_suite,
    "products": products_suite,
    "coproducts": coproducts_suite,
    "v-rep": v_rep_suite,
    "degrees": degrees_suite,
    "big-v": big_v_suite,
    "quotient": quotient_suite,
    "sphere": sphere_suite,
    "sphere-action": sphere_action_suite,
    "rank": rank_suite,
    "numeric-crosscheck": numeric_suite,
}

SUITE_IDS: Sequence[str] = tuple(SUITES)


def run(config: SuiteConfig) -> List[SuiteReport]:
    """
    Run the selected suites in registry order.

    Args:
        config: Validated settings

    Returns:
        One SuiteReport per selected suite

    Raises:
        ConfigError: If the settings are invalid
        ValueError: If an oracle table cannot be read
    """
    config.validate()
    reports = []
    for name in config.selected():
        logger.debug("Suite %s: building checks", name)
        checks = SUITES[name](config)
        records = run_checks(checks, name, config.jobs, config.timings)
        report = SuiteReport(name, records)
        logger.debug("Suite %s: %d passed, %d failed, %d skipped", name, report.passed, report.failed, report.skipped)
        reports.append(report)
    return reports


def derived_constants() -> Dict[str, object]:
    """
    Constants derived by the engine and the conventions it uses.

    Returns:
        Dict of printable values for the ``report`` command
    """
    rho_q, lam_q = sphere.quotient_parameters()
    rescaled = sphere.rescaled_constants()
    discrepancies = [
        f"{o.tag}: printed {o.printed}, derived {o.value} ({o.note})" for o in load_products() if o.printed is not None
    ]
    discrepancies += [
        "quotient sphere: B*B = A - A^2 holds with A = g*g; the printed A^2 - A^4 refers to |g|",
        "V and W are unitary for the inner products diag(vs, s2, 1) and diag(1, s2, 1), not the standard one",
        "pi(v[0,0]) has eigenvalue 1 - s2*vs^n on e_(n,k)",
    ]
    return {
        "quotient_rho": str(rho_q),
        "quotient_lambda": str(lam_q),
        "rho_prime": str(rescaled["rho_prime"]),
        "sqrt_vs_lambda_prime": str(rescaled["sqrt_vs_lambda_prime"]),
        "exchange_orientation": "j_t(b) j_s(a) = zeta_bar^(deg a * deg b) j_s(a) j_t(b) for s < t",
        "degree_convention": "deg entry(i, j) = row_degree(i) - col_degree(j); V carries degrees -1, 0, 1",
        "discrepancies": discrepancies,
    }
