"""Exact coefficient ring: integer polynomials in q, qb, lam, rho over q^a qb^b (1+q*qb)^c."""
from functools import lru_cache
from typing import Dict, Tuple, Union

from sympy import Symbol, fraction, together
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

RING, _q, _qb, _lam, _rho = ring("q,qb,lam,rho", ZZ)
_S2 = 1 + _q * _qb

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_SYMBOLS = {name: Symbol(name) for name in ("q", "qb", "lam", "rho")}
_ALIASES = {
    "s2": 1 + _SYMBOLS["q"] * _SYMBOLS["qb"],
    "vs": _SYMBOLS["q"] * _SYMBOLS["qb"],
    "zeta": _SYMBOLS["q"] / _SYMBOLS["qb"],
    "zetab": _SYMBOLS["qb"] / _SYMBOLS["q"],
}
_VARIABLES = ("q", "qb", "lam", "rho")

Number = Union[int, "Scalar"]


@lru_cache(maxsize=None)
def _s2_power(k: int):
    return _S2 ** k


def _shift(poly, dq: int, dqb: int):
    """Multiply (or exactly divide, for negative shifts) by q^dq * qb^dqb."""
    if not dq and not dqb:
        return poly
    return RING.from_dict(
        {(m[0] + dq, m[1] + dqb, m[2], m[3]): c for m, c in poly.items()}
    )


def _strip_s2(poly) -> Tuple[object, int]:
    """Divide out as many factors of 1+q*qb as possible."""
    count = 0
    while poly:
        quotient, remainder = poly.div(_S2)
        if remainder:
            break
        poly = quotient
        count += 1
    return poly, count


class Scalar:
    """An exact fraction num / (q^dq * qb^dqb * s2^ds2) with s2 = 1 + q*qb.

    Instances are immutable and always stored in canonical form: the
    numerator shares no factor q, qb or s2 with a nontrivial denominator.
    """

    __slots__ = ("num", "dq", "dqb", "ds2")

    def __init__(self, num=0, dq: int = 0, dqb: int = 0, ds2: int = 0):
        """
        Initialize a scalar.

        Args:
            num: Numerator (integer or polynomial of RING)
            dq: Power of q in the denominator
            dqb: Power of qb in the denominator
            ds2: Power of 1+q*qb in the denominator

        Raises:
            ValueError: If a denominator exponent is negative
        """
        if min(dq, dqb, ds2) < 0:
            raise ValueError("Denominator exponents must be nonnegative")
        poly = RING(num) if isinstance(num, int) else num

        if not poly:
            dq = dqb = ds2 = 0
        else:
            if dq:
                k = min(dq, min(m[0] for m in poly.monoms()))
                poly, dq = _shift(poly, -k, 0), dq - k
            if dqb:
                k = min(dqb, min(m[1] for m in poly.monoms()))
                poly, dqb = _shift(poly, 0, -k), dqb - k
            while ds2:
                quotient, remainder = poly.div(_S2)
                if remainder:
                    break
                poly, ds2 = quotient, ds2 - 1

        object.__setattr__(self, "num", poly)
        object.__setattr__(self, "dq", dq)
        object.__setattr__(self, "dqb", dqb)
        object.__setattr__(self, "ds2", ds2)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def monomial(
        cls, coeff: int = 1, q: int = 0, qb: int = 0, s2: int = 0, lam: int = 0, rho: int = 0
    ) -> "Scalar":
        """
        Build coeff * q^q * qb^qb * s2^s2 * lam^lam * rho^rho.

        The exponents of q, qb and s2 may be negative.
        """
        if lam < 0 or rho < 0:
            raise ValueError("lam and rho exponents must be nonnegative")
        poly = RING.from_dict({(max(q, 0), max(qb, 0), lam, rho): coeff})
        poly = poly * _s2_power(max(s2, 0))
        return cls(poly, max(-q, 0), max(-qb, 0), max(-s2, 0))

    @staticmethod
    def coerce(value: Number) -> "Scalar":
        """Promote an int to a Scalar."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, int):
            return Scalar(value)
        raise TypeError(f"Cannot use {type(value).__name__} as a Scalar")

    # Ring operations

    def _key(self):
        return (self.num, self.dq, self.dqb, self.ds2)

    def __add__(self, other: Number) -> "Scalar":
        if not isinstance(other, (Scalar, int)):
            return NotImplemented
        other = Scalar.coerce(other)
        if not other.num:
            return self
        if not self.num:
            return other
        dq = max(self.dq, other.dq)
        dqb = max(self.dqb, other.dqb)
        ds2 = max(self.ds2, other.ds2)
        left = _shift(self.num, dq - self.dq, dqb - self.dqb) * _s2_power(ds2 - self.ds2)
        right = _shift(other.num, dq - other.dq, dqb - other.dqb) * _s2_power(ds2 - other.ds2)
        return Scalar(left + right, dq, dqb, ds2)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.num, self.dq, self.dqb, self.ds2)

    def __sub__(self, other: Number) -> "Scalar":
        if not isinstance(other, (Scalar, int)):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: Number) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other: Number) -> "Scalar":
        if not isinstance(other, (Scalar, int)):
            return NotImplemented
        other = Scalar.coerce(other)
        return Scalar(
            self.num * other.num,
            self.dq + other.dq,
            self.dqb + other.dqb,
            self.ds2 + other.ds2,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Scalar(
            self.num ** exponent,
            self.dq * exponent,
            self.dqb * exponent,
            self.ds2 * exponent,
        )

    def inverse(self) -> "Scalar":
        """
        Invert a unit of the ring.

        Returns:
            The multiplicative inverse

        Raises:
            ZeroDivisionError: If the scalar is zero
            ValueError: If the numerator is not +-q^a*qb^b*s2^c
        """
        if not self.num:
            raise ZeroDivisionError("Division by the zero Scalar")
        core, power = _strip_s2(self.num)
        terms = core.items()
        if len(terms) != 1:
            raise ValueError(f"{self} is not invertible over q, qb and s2")
        (monom, coeff), = terms
        if monom[2] or monom[3] or coeff not in (1, -1):
            raise ValueError(f"{self} is not invertible over q, qb and s2")
        numerator = RING.from_dict({(self.dq, self.dqb, 0, 0): int(coeff)})
        return Scalar(numerator * _s2_power(self.ds2), monom[0], monom[1], power)

    @property
    def is_unit(self) -> bool:
        """True when the scalar can be inverted inside the ring."""
        try:
            self.inverse()
        except (ValueError, ZeroDivisionError):
            return False
        return True

    def __truediv__(self, other: Number) -> "Scalar":
        if not isinstance(other, (Scalar, int)):
            return NotImplemented
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def conj(self) -> "Scalar":
        """Complex conjugation: swaps q and qb, fixes lam and rho."""
        swapped = RING.from_dict({(m[1], m[0], m[2], m[3]): c for m, c in self.num.items()})
        return Scalar(swapped, self.dqb, self.dq, self.ds2)

    def eval(self, q0: complex, lam0: float = 0.0, rho0: float = 0.0) -> complex:
        """
        Evaluate at a numeric point.

        Args:
            q0: Value of q, with 0 < |q0| < 1
            lam0: Value of lam
            rho0: Value of rho

        Returns:
            The complex value

        Raises:
            ValueError: If q0 is outside the punctured unit disc
        """
        q0 = complex(q0)
        if not 0 < abs(q0) < 1:
            raise ValueError(f"q must satisfy 0 < |q| < 1, got {q0}")
        qb0 = q0.conjugate()
        total = 0j
        for (a, b, c, d), coeff in sorted(self.num.items()):
            total += int(coeff) * q0 ** a * qb0 ** b * lam0 ** c * rho0 ** d
        denominator = q0 ** self.dq * qb0 ** self.dqb * (1 + q0 * qb0) ** self.ds2
        return total / denominator

    # Comparison and hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash((frozenset(self.num.items()), self.dq, self.dqb, self.ds2))

    def __bool__(self) -> bool:
        return bool(self.num)

    # Text form

    def is_constant(self) -> bool:
        """True when the scalar is an integer."""
        return not self.dq and not self.dqb and not self.ds2 and self.num.is_ground

    def numerator_terms(self) -> Dict[Tuple[int, int, int, int], int]:
        """Exponent vectors (q, qb, lam, rho) mapped to integer coefficients."""
        return {m: int(c) for m, c in self.num.items()}

    def __str__(self) -> str:
        if not self.num:
            return "0"
        monoms = sorted(self.num.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)
        pieces = []
        for monom, coeff in monoms:
            factors = [
                name if exp == 1 else f"{name}^{exp}"
                for name, exp in zip(_VARIABLES, monom)
                if exp
            ]
            coeff = int(coeff)
            if not factors:
                text = str(coeff)
            elif coeff == 1:
                text = "*".join(factors)
            elif coeff == -1:
                text = "-" + "*".join(factors)
            else:
                text = f"{coeff}*" + "*".join(factors)
            if not pieces:
                pieces.append(text)
            elif text.startswith("-"):
                pieces.append(" - " + text[1:])
            else:
                pieces.append(" + " + text)
        numerator = "".join(pieces)

        denominator = [
            name if exp == 1 else f"{name}^{exp}"
            for name, exp in (("q", self.dq), ("qb", self.dqb), ("s2", self.ds2))
            if exp
        ]
        if not denominator:
            return numerator
        if len(monoms) > 1:
            numerator = f"({numerator})"
        if len(denominator) > 1:
            return f"{numerator}/({'*'.join(denominator)})"
        return f"{numerator}/{denominator[0]}"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    @staticmethod
    def parse(text: str) -> "Scalar":
        """
        Parse the text form of a scalar.

        Besides q, qb, lam and rho the names s2 (1+q*qb), vs (q*qb),
        zeta (q/qb) and zetab (qb/q) are accepted.

        Raises:
            ValueError: If the text is not a valid scalar
        """
        return _parse(text.strip())


@lru_cache(maxsize=4096)
def _parse(text: str) -> Scalar:
    if not text:
        raise ValueError("Empty scalar text")
    local_dict = dict(_SYMBOLS)
    local_dict.update(_ALIASES)
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS)
    except Exception as e:  # tokenizer errors are not SyntaxError subclasses
        raise ValueError(f"Invalid scalar {text!r}: {e}") from e

    unknown = {str(s) for s in getattr(expr, "free_symbols", set())} - set(_VARIABLES)
    if unknown:
        raise ValueError(f"Unknown symbols in scalar {text!r}: {sorted(unknown)}")

    numerator_expr, denominator_expr = fraction(together(expr))
    try:
        numerator = RING.from_expr(numerator_expr)
        denominator = RING.from_expr(denominator_expr)
    except (ValueError, TypeError) as e:
        raise ValueError(f"Scalar {text!r} is not a polynomial fraction: {e}") from e

    denominator, ds2 = _strip_s2(denominator)
    terms = denominator.items()
    if len(terms) != 1:
        raise ValueError(f"Denominator of {text!r} is not a monomial in q, qb and s2")
    (monom, coeff), = terms
    if monom[2] or monom[3]:
        raise ValueError(f"Denominator of {text!r} may not contain lam or rho")
    coeff = int(coeff)
    if any(int(c) % coeff for c in numerator.values()):
        raise ValueError(f"Scalar {text!r} has a non-integral coefficient")
    numerator = RING.from_dict({m: int(c) // coeff for m, c in numerator.items()})
    return Scalar(numerator, monom[0], monom[1], ds2)


ZERO = Scalar(0)
ONE = Scalar(1)
Q = Scalar.monomial(q=1)
QB = Scalar.monomial(qb=1)
LAM = Scalar.monomial(lam=1)
RHO = Scalar.monomial(rho=1)
S2 = Scalar.monomial(s2=1)
VARSIGMA = Scalar.monomial(q=1, qb=1)
ZETA = Scalar.monomial(q=1, qb=-1)
ZETA_BAR = Scalar.monomial(q=-1, qb=1)


def zeta_power(n: int) -> Scalar:
    """zeta^n = q^n / qb^n."""
    return Scalar.monomial(q=n, qb=-n)
