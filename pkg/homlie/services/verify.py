"""Verifiers for structural statements about map spaces.

A verifier never answers "false". It returns a Verdict whose status is confirmed,
hypotheses-failed or inconclusive-over-Q, with every check it ran recorded as an
(ok, message) pair. Any violation of a guaranteed conclusion is a ConsistencyError.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple

from ..errors import ConsistencyError, HypothesisError
from .algebra import (
    HomLieAlgebra, center, derived, is_ideal, is_perfect, require_accepted, simplicity_falsifier,
)
from .linalg import Matrix, nullspace, solve, vec_is_zero
from .maps import (
    BilinearMap, LinearMapLV, bider_s_failures, bracket_map, central_subspace, centroid_from_biderivation,
    centroid_hypotheses, com_failures, solve_bider_s, solve_cent, solve_com, space_of_induced_biderivations,
)
from .representation import Representation, adjoint, annihilated, hom_space, kernel_is_submodule

logger = logging.getLogger(__name__)


class VerdictStatus(str, Enum):
    CONFIRMED = "confirmed"
    HYPOTHESES_FAILED = "hypotheses-failed"
    INCONCLUSIVE = "inconclusive-over-Q"


@dataclass
class Verdict:
    name: str
    status: VerdictStatus = VerdictStatus.CONFIRMED
    checks: Dict[str, Tuple[bool, str]] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def confirmed(self) -> bool:
        return self.status is VerdictStatus.CONFIRMED

    def check(self, name: str, ok: bool, message: str = "") -> bool:
        self.checks[name] = (ok, message or ("OK" if ok else "failed"))
        return ok

    def hypothesis(self, name: str, ok: bool, message: str = "") -> bool:
        """Records a hypothesis; a failed one marks the verdict hypotheses-failed."""
        self.check(name, ok, message)
        if not ok:
            logger.warning(f"{self.name}: hypothesis failed: {name}")
            self.status = VerdictStatus.HYPOTHESES_FAILED
        return ok


def _require_invertible_alpha(L: HomLieAlgebra, what: str):
    if not L.validation.alpha_invertible:
        raise HypothesisError(f"{what} needs an invertible twist", ["alpha is not invertible"])


# --- Centroid-induced biderivations ---
_CENTROID_HYPOTHESES = (
    ("algebra is not perfect", "perfect"),
    ("alpha is not surjective", "alpha is surjective"),
    ("beta is not invertible", "beta is invertible"),
    ("Z_V(L) is nonzero", "Z_V(L) is zero"),
)


def verify_thm36(L: HomLieAlgebra, V: Representation) -> Verdict:
    """Every skew biderivation into V is β^-1 γ([-, -]) for a centroid element γ."""
    require_accepted(L)
    verdict = Verdict("thm36")
    failed = centroid_hypotheses(L, V)
    for failure, name in _CENTROID_HYPOTHESES:
        verdict.hypothesis(name, failure not in failed)
    space = solve_bider_s(L, V)
    verdict.details["bider_s_dim"] = space.dim
    if not verdict.confirmed:
        return verdict
    for t, delta in enumerate(space.basis):
        centroid_from_biderivation(delta, L, V)
        verdict.check(f"basis element {t + 1} is centroid-induced", True)
    verdict.details["cent_dim"] = solve_cent(L, V).dim
    return verdict


def verify_thm37(L: HomLieAlgebra, k: int, trials: int = 8, seed: int = 0) -> Verdict:
    """Skew biderivations of ad_k on a centerless perfect algebra, and the simple case."""
    require_accepted(L)
    _require_invertible_alpha(L, "verify_thm37")
    verdict = Verdict("thm37")
    verdict.hypothesis("centerless", center(L).is_zero())
    verdict.hypothesis("perfect", is_perfect(L))
    V = adjoint(L, k)
    space = solve_bider_s(L, V)
    verdict.details["bider_s_dim"] = space.dim
    if not verdict.confirmed:
        return verdict
    for delta in space.basis:
        centroid_from_biderivation(delta, L, V)
    verdict.check("every basis element is alpha^-1 of a centroid element on brackets", True, f"{space.dim} checked")

    falsifier = simplicity_falsifier(L, trials, seed)
    verdict.check("simplicity falsifier", not falsifier.not_simple, falsifier.reason)
    if falsifier.not_simple:
        return verdict
    expected = bracket_map(L).compose(L.alpha_power(k))
    spans = space.dim == 1 and space.contains(expected)
    verdict.details["simple_form"] = spans
    if not spans:
        verdict.check("space is spanned by alpha^k of the bracket", False, f"dimension {space.dim} over Q")
        verdict.status = VerdictStatus.INCONCLUSIVE
        return verdict
    verdict.check("space is spanned by alpha^k of the bracket", True)
    return verdict


# --- Centroid versus commuting maps ---
def verify_thm43(L: HomLieAlgebra, V: Representation) -> Verdict:
    """Cent(L, V) = Com(L, V) when α is surjective, β invertible and Z_V(L') = 0."""
    require_accepted(L)
    verdict = Verdict("thm43")
    cent = solve_cent(L, V)
    com = solve_com(L, V)
    verdict.details.update(cent_dim=cent.dim, com_dim=com.dim)
    if not cent.is_subspace_of(com):
        raise ConsistencyError("a centroid element is not a commuting map")
    verdict.check("Cent is contained in Com", True)
    verdict.hypothesis("alpha is surjective", L.validation.alpha_surjective)
    verdict.hypothesis("beta is invertible", V.beta_invertible)
    verdict.hypothesis("Z_V(L') is zero", annihilated(V, derived(L)).is_zero())
    equal = cent.same_space(com)
    verdict.details["equal"] = equal
    if not verdict.confirmed:
        return verdict
    if not equal:
        raise ConsistencyError("Cent and Com differ although the hypotheses hold")
    verdict.check("Cent = Com", True, f"dim {cent.dim}")
    return verdict


@dataclass(frozen=True)
class Decomposition:
    gamma: LinearMapLV
    mu: LinearMapLV


def decompose_commuting(f: LinearMapLV, L: HomLieAlgebra, k: int) -> Decomposition:
    """f = γ + μ with γ in Cent(L, ad_k) and μ central."""
    require_accepted(L)
    _require_invertible_alpha(L, "decompose_commuting")
    V = adjoint(L, k)
    failed = com_failures(L, V, f, random_checks=0)
    if failed:
        raise HypothesisError("map is not commuting", failed)
    cent = solve_cent(L, V)
    # target values γ([e_i, e_j]) = [α^(k+1)(e_i), f(e_j)]
    pairs = [(i, j) for i in range(L.dim) for j in range(L.dim)]
    target = []
    columns: List[List] = [[] for _ in range(cent.dim)]
    for i, j in pairs:
        target.extend(V.alpha_actions[i].apply(f.value(j)))
        for t, g in enumerate(cent.basis):
            columns[t].extend(g.apply(L.bracket_basis(i, j)))
    if cent.dim:
        system = Matrix.from_columns(columns, rows=len(target))
    else:
        system = Matrix.zeros(len(target), 0)
    c = solve(system, target)
    if c is None:
        raise HypothesisError("the biderivation induced by f is not centroid-induced",
                              ["no centroid element matches [alpha^(k+1)(x), f(y)] on brackets"])
    gamma = LinearMapLV.from_coordinates(L.dim, L.dim, cent.coordinates.combine(c))
    mu = f - gamma
    ccom = central_subspace(solve_com(L, V))
    if not ccom.contains(mu):
        raise ConsistencyError("f - gamma is not a central commuting map")
    return Decomposition(gamma, mu)


def verify_prop47(L: HomLieAlgebra, k: int) -> Verdict:
    """Com(L, ad_k) = Cent(L, ad_k) + CCom(L, ad_k) when skew biderivations come from the centroid."""
    require_accepted(L)
    _require_invertible_alpha(L, "verify_prop47")
    verdict = Verdict("prop47")
    V = adjoint(L, k)
    bider = solve_bider_s(L, V)
    cent = solve_cent(L, V)
    induced = space_of_induced_biderivations(L, V)
    verdict.hypothesis("every skew biderivation is centroid-induced", bider.is_subspace_of(induced),
                       f"Bider_s dim {bider.dim}, induced dim {induced.dim}")
    com = solve_com(L, V)
    verdict.details.update(com_dim=com.dim, cent_dim=cent.dim)
    if not verdict.confirmed:
        return verdict
    ccom = central_subspace(com)
    for t, f in enumerate(com.basis):
        parts = decompose_commuting(f, L, k)
        verdict.check(f"basis element {t + 1} decomposes", cent.contains(parts.gamma) and ccom.contains(parts.mu))
    return verdict


# --- Module homomorphisms ---
def schur_check(L: HomLieAlgebra, k: int, s: int, trials: int = 8, seed: int = 0) -> Verdict:
    """hom_space(ad_k, ad_(k+s)) is spanned by α^(s+1) on a simple algebra."""
    require_accepted(L)
    _require_invertible_alpha(L, "schur_check")
    verdict = Verdict("schur")
    falsifier = simplicity_falsifier(L, trials, seed)
    message = falsifier.reason
    if falsifier.witness is not None:
        message += f" (ideal of dimension {falsifier.witness.dim})"
    verdict.hypothesis("simplicity falsifier passed", not falsifier.not_simple, message)
    space = hom_space(adjoint(L, k), adjoint(L, k + s))
    verdict.details["hom_dim"] = space.dim
    for f in space.basis:
        if not kernel_is_submodule(space.domain, f):
            raise ConsistencyError("kernel of a module map is not a submodule")
        # alpha is invertible here, so a submodule of ad_k is an ideal
        if not is_ideal(L, nullspace(f)):
            raise ConsistencyError(f"kernel of a module map out of ad_{k} is not an ideal")
    verdict.check("kernels of module maps are ideals", True, f"hom space of dimension {space.dim}")
    if not verdict.confirmed:
        return verdict
    expected = L.alpha_power(s + 1)
    if not space.contains(expected):
        raise ConsistencyError(f"alpha^{s + 1} is not a module homomorphism")
    if space.dim != 1:
        verdict.check("space is spanned by alpha^(s+1)", False, f"dimension {space.dim} over Q")
        verdict.status = VerdictStatus.INCONCLUSIVE
        return verdict
    verdict.check("space is spanned by alpha^(s+1)", True)
    return verdict


# --- Special biderivations from forms ---
@dataclass
class SpecialFormResult:
    delta: BilinearMap
    member: bool
    failures: List[str] = field(default_factory=list)


def special_from_form(L: HomLieAlgebra, omega: Matrix, z0: Sequence, k: int = 0) -> SpecialFormResult:
    """δ(x, y) = ω(x, y) z0 for a skew form ω vanishing on L' and a central z0."""
    require_accepted(L)
    n = L.dim
    if (omega.rows, omega.cols) != (n, n):
        raise HypothesisError("form has the wrong shape", [f"omega must be {n}x{n}"])
    Z = center(L)
    D = derived(L)
    failed = []
    if Z.is_zero():
        failed.append("center is zero")
    if n - D.dim < 2:
        failed.append("codimension of L' is below 2")
    if omega.is_zero():
        failed.append("omega is zero")
    if not (omega + omega.transpose()).is_zero():
        failed.append("omega is not skew")
    if any(not vec_is_zero(omega.apply(b)) for b in D.vectors):
        failed.append("omega does not vanish on L'")
    if vec_is_zero(z0) or not Z.contains(z0):
        failed.append("z0 is not a nonzero central element")
    if failed:
        raise HypothesisError("cannot build a special biderivation from the form", failed)
    delta = BilinearMap.from_function(n, n, lambda i, j: tuple(omega[i, j] * a for a in z0))
    failures = bider_s_failures(L, adjoint(L, k), delta)
    if failures:
        logger.warning(f"form-induced map is not a skew biderivation: {', '.join(failures)}")
    return SpecialFormResult(delta, not failures, failures)
