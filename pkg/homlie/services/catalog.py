"""Built-in Hom-Lie algebras."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Tuple

from ..errors import HypothesisError, ParseError
from .algebra import HomLieAlgebra, require_accepted
from .linalg import Matrix, RationalLike, parse_rational, to_scalar

logger = logging.getLogger(__name__)

SL2_NAMES = ("e", "f", "h")
# [e, f] = h, [e, h] = -2e, [f, h] = 2f
SL2_BRACKETS = {(0, 1): (0, 0, 1), (0, 2): (-2, 0, 0), (1, 2): (0, 2, 0)}
SL2_INVOLUTION = Matrix.from_rows([[-1, 0, 0], [0, -1, 0], [0, 0, 1]])


def _nonzero(name: str, value: RationalLike) -> Fraction:
    value = to_scalar(value)
    if value == 0:
        raise HypothesisError(f"parameter {name} must be nonzero", [f"{name} = 0"])
    return value


def _accepted(L: HomLieAlgebra, what: str) -> HomLieAlgebra:
    require_accepted(L, what)
    return L


def heisenberg(lam: RationalLike) -> HomLieAlgebra:
    """[e1, e2] = e3 with α(e1) = λe1 + e2, α(e2) = λe2, α(e3) = λ²e3."""
    lam = _nonzero("lambda", lam)
    alpha = Matrix.from_rows([[lam, 0, 0], [1, lam, 0], [0, 0, lam * lam]])
    return _accepted(HomLieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1)}, alpha), "heisenberg")


def example314(a: RationalLike, b: RationalLike, lam: RationalLike, mu: RationalLike) -> HomLieAlgebra:
    """[x, y] = y with α(x) = x + ay + bz, α(y) = λy, α(z) = μz."""
    a, b = to_scalar(a), to_scalar(b)
    lam, mu = _nonzero("lambda", lam), _nonzero("mu", mu)
    alpha = Matrix.from_rows([[1, 0, 0], [a, lam, 0], [b, 0, mu]])
    L = HomLieAlgebra.from_brackets(3, {(0, 1): (0, 1, 0)}, alpha, ("x", "y", "z"))
    return _accepted(L, "example314")


def abelian(n: int) -> HomLieAlgebra:
    if n < 1:
        raise HypothesisError("abelian algebra needs a positive dimension", [f"n = {n}"])
    return HomLieAlgebra.from_brackets(n, {}, Matrix.identity(n))


def sl2() -> HomLieAlgebra:
    return _accepted(HomLieAlgebra.from_brackets(3, SL2_BRACKETS, Matrix.identity(3), SL2_NAMES), "sl2")


def sl2_involution() -> HomLieAlgebra:
    """sl2 twisted by e -> -e, f -> -f, h -> h."""
    return _accepted(HomLieAlgebra.from_brackets(3, SL2_BRACKETS, SL2_INVOLUTION, SL2_NAMES), "sl2_involution")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: Callable[..., HomLieAlgebra]
    params: Tuple[str, ...]
    defaults: Mapping[str, str]
    description: str


CATALOG: Dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in (
        CatalogEntry("heisenberg", heisenberg, ("lambda",), {"lambda": "1"},
                     "3-dim Heisenberg algebra, [e1,e2] = e3, lower-triangular twist"),
        CatalogEntry("example314", example314, ("a", "b", "lambda", "mu"),
                     {"a": "0", "b": "0", "lambda": "1", "mu": "1"},
                     "[x,y] = y with twist x -> x + ay + bz, y -> lambda y, z -> mu z"),
        CatalogEntry("abelian", abelian, ("n",), {"n": "2"}, "zero bracket, identity twist"),
        CatalogEntry("sl2", sl2, (), {}, "sl2 with the identity twist"),
        CatalogEntry("sl2_involution", sl2_involution, (), {}, "sl2 with the twist e -> -e, f -> -f, h -> h"),
    )
}


def build(name: str, params: Optional[Mapping[str, str]] = None) -> HomLieAlgebra:
    """Builds a catalog algebra from string parameters; missing ones take their defaults."""
    entry = CATALOG.get(name)
    if entry is None:
        raise ParseError(f"unknown catalog algebra '{name}' (known: {', '.join(sorted(CATALOG))})", path="name")
    params = dict(params or {})
    unknown = sorted(set(params) - set(entry.params))
    if unknown:
        raise ParseError(f"unknown parameter(s) for {name}: {', '.join(unknown)}", path=f"params.{unknown[0]}")
    values = []
    for p in entry.params:
        text = params.get(p, entry.defaults[p])
        if p == "n":
            if not text.isdigit():
                raise ParseError(f"parameter n must be a positive integer, got '{text}'", path="params.n")
            values.append(int(text))
        else:
            values.append(parse_rational(text, path=f"params.{p}"))
    logger.info(f"Building catalog algebra {name} with {dict(zip(entry.params, map(str, values)))}")
    return entry.builder(*values)
