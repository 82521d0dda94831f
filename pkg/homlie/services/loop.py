"""Laurent polynomials and the loop algebra sl2 ⊗ F[t, t^-1] on a finite degree window."""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

from ..errors import ParseError, WindowError
from .catalog import SL2_NAMES, sl2_involution
from .linalg import Matrix, RationalLike, format_rational, parse_rational, to_scalar
from .verify import Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaurentPoly:
    """Σ c_d t^d, stored as sorted (degree, coefficient) pairs without zeros."""
    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, coefficients: Mapping[int, RationalLike]) -> "LaurentPoly":
        cleaned = {int(d): to_scalar(c) for d, c in coefficients.items()}
        return cls(tuple(sorted((d, c) for d, c in cleaned.items() if c != 0)))

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "LaurentPoly":
        return cls.from_mapping({degree: coefficient})

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(d for d, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, degree: int) -> Fraction:
        return dict(self.terms).get(degree, Fraction(0))

    def max_abs_degree(self) -> int:
        return max((abs(d) for d in self.degrees), default=0)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: Dict[int, Fraction] = dict(self.terms)
        for d, c in other.terms:
            out[d] = out.get(d, Fraction(0)) + c
        return LaurentPoly.from_mapping(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: Dict[int, Fraction] = {}
        for (d1, c1), (d2, c2) in product(self.terms, other.terms):
            out[d1 + d2] = out.get(d1 + d2, Fraction(0)) + c1 * c2
        return LaurentPoly.from_mapping(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for d, c in self.terms:
            coefficient = format_rational(abs(c))
            if d == 0:
                body = coefficient
            else:
                power = "t" if d == 1 else f"t^{d}"
                body = power if abs(c) == 1 else f"{coefficient}{power}"
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


_TERM_RE = re.compile(r"^(?P<coef>\d+(?:/\d+)?)?\*?(?P<t>t(?:\^(?P<exp>~?\d+))?)?$")


def parse_laurent(text: str) -> LaurentPoly:
    """Parses strings such as "1 + 2t^2 - t^-3" or "3/2*t^-1"."""
    source = text.replace(" ", "").replace("^-", "^~")
    if not source:
        raise ParseError("empty Laurent polynomial", path="phi")
    if source[0] not in "+-":
        source = "+" + source
    coefficients: Dict[int, Fraction] = {}
    for sign, body in re.findall(r"([+-])([^+-]*)", source):
        match = _TERM_RE.match(body)
        if not body or match is None or not (match.group("coef") or match.group("t")):
            raise ParseError(f"cannot parse term '{sign}{body.replace('~', '-')}' in '{text}'", path="phi")
        coefficient = parse_rational(match.group("coef") or "1", path="phi")
        if sign == "-":
            coefficient = -coefficient
        degree = 0
        if match.group("t"):
            exp = match.group("exp")
            degree = 1 if exp is None else int(exp.replace("~", "-"))
        coefficients[degree] = coefficients.get(degree, Fraction(0)) + coefficient
    return LaurentPoly.from_mapping(coefficients)


@dataclass(frozen=True)
class LoopElement:
    """Σ c (b ⊗ t^m) over sl2 basis indices b and degrees m, without zero terms."""
    terms: Tuple[Tuple[Tuple[int, int], Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, coefficients: Mapping[Tuple[int, int], RationalLike]) -> "LoopElement":
        cleaned = {key: to_scalar(c) for key, c in coefficients.items()}
        return cls(tuple(sorted((k, c) for k, c in cleaned.items() if c != 0)))

    @classmethod
    def tensor(cls, vector: Sequence[RationalLike], poly: LaurentPoly) -> "LoopElement":
        """x ⊗ Φ for x in sl2 given by coordinates."""
        out = {}
        for b, x in enumerate(vector):
            for d, c in poly.terms:
                out[(b, d)] = to_scalar(x) * c
        return cls.from_mapping(out)

    @classmethod
    def basis(cls, b: int, degree: int) -> "LoopElement":
        return cls.from_mapping({(b, degree): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({d for (_, d), _ in self.terms}))

    def __sub__(self, other: "LoopElement") -> "LoopElement":
        out: Dict[Tuple[int, int], Fraction] = dict(self.terms)
        for k, c in other.terms:
            out[k] = out.get(k, Fraction(0)) - c
        return LoopElement.from_mapping(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)}·{SL2_NAMES[b]}⊗t^{d}" for (b, d), c in self.terms)


def loop_bracket(u: LoopElement, v: LoopElement) -> LoopElement:
    """[x ⊗ t^m, y ⊗ t^n] = [x, y] ⊗ t^(m+n), extended bilinearly."""
    table = sl2_involution().table
    out: Dict[Tuple[int, int], Fraction] = {}
    for ((a, m), c1), ((b, n), c2) in product(u.terms, v.terms):
        for target, coefficient in enumerate(table[a][b]):
            if coefficient:
                key = (target, m + n)
                out[key] = out.get(key, Fraction(0)) + c1 * c2 * coefficient
    return LoopElement.from_mapping(out)


def apply_sl2(matrix: Matrix, u: LoopElement) -> LoopElement:
    """(A ⊗ id)(u) for a 3 x 3 matrix A on sl2."""
    out: Dict[Tuple[int, int], Fraction] = {}
    for (b, d), c in u.terms:
        for target, coefficient in enumerate(matrix.column(b)):
            if coefficient:
                out[(target, d)] = out.get((target, d), Fraction(0)) + c * coefficient
    return LoopElement.from_mapping(out)


@dataclass(frozen=True)
class LoopCentroidCandidate:
    """γ(b ⊗ t^n) = A(b) ⊗ Φ(t) t^n."""
    matrix: Matrix
    phi: LaurentPoly

    def __call__(self, u: LoopElement) -> LoopElement:
        out: Dict[Tuple[int, int], Fraction] = {}
        for (b, n), c in apply_sl2(self.matrix, u).terms:
            for d, p in self.phi.terms:
                out[(b, n + d)] = out.get((b, n + d), Fraction(0)) + c * p
        return LoopElement.from_mapping(out)


def window_pairs(window: int, phi: LaurentPoly) -> Iterator[Tuple[int, int]]:
    """(m, n) with |m|, |n| <= N and every |n + d|, |m + n + d| <= N for d in the support of Φ."""
    for m, n in product(range(-window, window + 1), repeat=2):
        if all(abs(n + d) <= window and abs(m + n + d) <= window for d in phi.degrees):
            yield m, n


def _label(a: int, m: int, b: int, n: int) -> str:
    return f"({SL2_NAMES[a]}⊗t^{m}, {SL2_NAMES[b]}⊗t^{n})"


def verify_loop_centroid(k: int, phi: LaurentPoly, window: int, twist_power: Optional[int] = None) -> Verdict:
    """Checks that α̌^(k+1) ⊗ Φ is a centroid element of ad_k on the degree window |deg| <= N.

    `twist_power` replaces k + 1 in the candidate; any other value should be rejected.
    """
    if phi.is_zero():
        needed = 1
    else:
        needed = phi.max_abs_degree() + 1
    if window < needed:
        raise WindowError(f"window {window} is too small for phi = {phi}; need at least {needed}")
    power = k + 1 if twist_power is None else twist_power
    alpha = sl2_involution().alpha
    gamma = LoopCentroidCandidate(alpha.power(power), phi)
    outer = alpha.power(k + 1)
    verdict = Verdict("loop-centroid")
    verdict.details.update(k=k, phi=str(phi), window=window, twist_power=power)

    checked, failures = 0, []
    for a, b in product(range(3), repeat=2):
        for m, n in window_pairs(window, phi):
            u, v = LoopElement.basis(a, m), LoopElement.basis(b, n)
            lhs = gamma(loop_bracket(u, v))
            rhs = loop_bracket(apply_sl2(outer, u), gamma(v))
            checked += 1
            if not (lhs - rhs).is_zero():
                failures.append(_label(a, m, b, n))
    twist_checked, twist_failures = 0, []
    for b, n in product(range(3), range(-window, window + 1)):
        if any(abs(n + d) > window for d in phi.degrees):
            continue
        u = LoopElement.basis(b, n)
        twist_checked += 1
        if not (gamma(apply_sl2(alpha, u)) - apply_sl2(alpha, gamma(u))).is_zero():
            twist_failures.append(f"{SL2_NAMES[b]}⊗t^{n}")

    logger.debug(f"loop window {window}: {checked} bracket pairs, {twist_checked} twist checks")
    if failures:
        verdict.details["first_failure"] = failures[0]
    verdict.hypothesis(
        "centroid condition on the window", not failures,
        f"{checked} pairs" if not failures else f"{len(failures)} of {checked} pairs fail, first at {failures[0]}",
    )
    verdict.hypothesis(
        "commutes with the twist", not twist_failures,
        f"{twist_checked} elements" if not twist_failures else f"fails at {twist_failures[0]}",
    )
    return verdict
