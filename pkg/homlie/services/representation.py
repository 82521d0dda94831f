"""Representations (V, ρ, β) of a Hom-Lie algebra.

ρ is stored by its values on the basis, rho[i] = ρ(e_i), each a d x d matrix.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from ..errors import (
    ConsistencyError, DimensionMismatchError, HypothesisError, NotASubmoduleError, ValidationError,
)
from .algebra import HomLieAlgebra, basis_pairs, projection_matrices
from .linalg import (
    Matrix, SubspaceBasis, Vector, matrix_of_linear_map, nullspace,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representation:
    algebra: HomLieAlgebra
    dim_v: int
    rho: Tuple[Matrix, ...]
    beta: Matrix

    def __post_init__(self):
        d = self.dim_v
        if len(self.rho) != self.algebra.dim:
            raise DimensionMismatchError(f"expected {self.algebra.dim} action matrices, got {len(self.rho)}")
        for i, m in enumerate(self.rho):
            if (m.rows, m.cols) != (d, d):
                raise DimensionMismatchError(f"rho[{i}] must be {d}x{d}, got {m.rows}x{m.cols}")
        if (self.beta.rows, self.beta.cols) != (d, d):
            raise DimensionMismatchError(f"beta must be {d}x{d}, got {self.beta.rows}x{self.beta.cols}")

    def action(self, x: Sequence) -> Matrix:
        """ρ(x) for an arbitrary element x of L."""
        if len(x) != self.algebra.dim:
            raise DimensionMismatchError(f"element of length {len(x)} in an algebra of dimension {self.algebra.dim}")
        out = Matrix.zeros(self.dim_v, self.dim_v)
        for c, m in zip(x, self.rho):
            if c:
                out = out + m.scale(c)
        return out

    def act(self, x: Sequence, v: Sequence) -> Vector:
        return self.action(x).apply(v)

    @cached_property
    def alpha_actions(self) -> Tuple[Matrix, ...]:
        """ρ(α(e_i)) for each basis index."""
        return tuple(self.action(self.algebra.alpha_image(i)) for i in range(self.algebra.dim))

    @cached_property
    def beta_inverse(self) -> Matrix:
        if not self.beta.is_invertible():
            raise HypothesisError("beta^-1 requested", ["beta is not invertible"])
        return self.beta.inverse()

    @property
    def beta_invertible(self) -> bool:
        return self.beta.is_invertible()

    @cached_property
    def validation(self) -> "RepValidationReport":
        return _compute_rep_validation(self)


@dataclass
class RepValidationReport:
    twist_failures: List[Tuple[int, Matrix]] = field(default_factory=list)
    bracket_failures: List[Tuple[Tuple[int, int], Matrix]] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return not self.twist_failures and not self.bracket_failures

    def status(self) -> Dict[str, Tuple[bool, str]]:
        tw, br = self.twist_failures, self.bracket_failures
        return {
            "beta intertwines the action": (not tw, "OK" if not tw else f"{len(tw)} failing basis element(s)"),
            "bracket acts by the twisted commutator": (not br, "OK" if not br else f"{len(br)} failing pair(s)"),
        }


def _compute_rep_validation(V: Representation) -> RepValidationReport:
    L = V.algebra
    report = RepValidationReport()
    for i in range(L.dim):
        residual = V.beta @ V.rho[i] - V.alpha_actions[i] @ V.beta
        if not residual.is_zero():
            report.twist_failures.append((i, residual))
    for (i, j) in basis_pairs(L.dim):
        residual = (
            V.action(L.bracket_basis(i, j)) @ V.beta
            - V.alpha_actions[i] @ V.rho[j]
            + V.alpha_actions[j] @ V.rho[i]
        )
        if not residual.is_zero():
            report.bracket_failures.append(((i, j), residual))
    if not report.accepted:
        logger.warning(
            f"Module rejected: {len(report.twist_failures)} twist and "
            f"{len(report.bracket_failures)} bracket failure(s)"
        )
    return report


def validate_rep(V: Representation) -> RepValidationReport:
    return V.validation


def require_accepted_rep(V: Representation):
    if not V.validation.accepted:
        raise ValidationError("module is not a representation of its algebra", V.validation)


# --- Constructions ---
def adjoint(L: HomLieAlgebra, k: int) -> Representation:
    """ad_k: ρ(x)(y) = [α^k(x), y], β = α."""
    power = L.alpha_power(k)
    rho = tuple(L.ad_matrix(power.column(i)) for i in range(L.dim))
    return Representation(L, L.dim, rho, L.alpha)


def twist_rep(V: Representation, k: int) -> Representation:
    """ρ_k = ρ∘α^k with the same β."""
    if k < 0:
        raise HypothesisError("twist_rep needs a nonnegative power", [f"k = {k}"])
    power = V.algebra.alpha_power(k)
    rho = tuple(V.action(power.column(i)) for i in range(V.algebra.dim))
    return Representation(V.algebra, V.dim_v, rho, V.beta)


def annihilated(V: Representation, S: SubspaceBasis) -> SubspaceBasis:
    """Z_V(S) = {v : s v = 0 for s in S}."""
    if S.ambient_dim != V.algebra.dim:
        raise DimensionMismatchError(f"subspace of F^{S.ambient_dim} in an algebra of dimension {V.algebra.dim}")
    if S.is_zero():
        return SubspaceBasis.full(V.dim_v)
    return nullspace(Matrix.vstack([V.action(s) for s in S.vectors], V.dim_v))


def is_submodule(V: Representation, W: SubspaceBasis) -> bool:
    if W.ambient_dim != V.dim_v:
        raise DimensionMismatchError(f"subspace of F^{W.ambient_dim} in a module of dimension {V.dim_v}")
    for w in W.vectors:
        if not W.contains(V.beta.apply(w)):
            return False
        if not all(W.contains(m.apply(w)) for m in V.rho):
            return False
    return True


@dataclass(frozen=True)
class ModuleQuotient:
    module: Representation
    projection: Matrix
    section: Matrix
    submodule: SubspaceBasis

    def project(self, v: Sequence) -> Vector:
        return self.projection.apply(v)


def quotient_module(V: Representation, W: SubspaceBasis) -> ModuleQuotient:
    if not is_submodule(V, W):
        raise NotASubmoduleError("subspace is not invariant under beta and the action")
    projection, section, _ = projection_matrices(W)
    m = projection.rows
    rho = tuple(projection @ r @ section for r in V.rho)
    beta = projection @ V.beta @ section
    Q = Representation(V.algebra, m, rho, beta)
    if V.validation.accepted and not Q.validation.accepted:
        raise ConsistencyError("quotient of an accepted module failed validation")
    logger.info(f"Quotient module: dimension {V.dim_v} -> {m}")
    return ModuleQuotient(Q, projection, section, W)


# --- Homomorphisms ---
@dataclass(frozen=True)
class ModuleHomSpace:
    domain: Representation
    codomain: Representation
    space: SubspaceBasis  # flattened d2 x d1 matrices, row-major

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> List[Matrix]:
        return [_unflatten(v, self.codomain.dim_v, self.domain.dim_v) for v in self.space.vectors]

    def contains(self, f: Matrix) -> bool:
        return self.space.contains(f.entries)


def _unflatten(v: Sequence, rows: int, cols: int) -> Matrix:
    return Matrix(rows, cols, tuple(v))


def hom_space(V1: Representation, V2: Representation) -> ModuleHomSpace:
    """All f with β2 f = f β1 and f ρ1(e_i) = ρ2(α(e_i)) f."""
    if V1.algebra != V2.algebra:
        raise HypothesisError("hom_space needs modules over one algebra", ["algebras differ"])
    require_accepted_rep(V1)
    require_accepted_rep(V2)
    d1, d2 = V1.dim_v, V2.dim_v
    L = V1.algebra

    def residual(flat: Vector) -> Vector:
        f = _unflatten(flat, d2, d1)
        parts = [(V2.beta @ f - f @ V1.beta).entries]
        for i in range(L.dim):
            parts.append((f @ V1.rho[i] - V2.alpha_actions[i] @ f).entries)
        return tuple(a for part in parts for a in part)

    rows = d2 * d1 * (1 + L.dim)
    system = matrix_of_linear_map(residual, d2 * d1, rows)
    logger.debug(f"hom_space: {d2 * d1} unknowns, {rows} constraint rows")
    return ModuleHomSpace(V1, V2, nullspace(system))


def is_module_hom(V1: Representation, V2: Representation, f: Matrix) -> bool:
    if (f.rows, f.cols) != (V2.dim_v, V1.dim_v):
        raise DimensionMismatchError(f"map must be {V2.dim_v}x{V1.dim_v}")
    if not (V2.beta @ f - f @ V1.beta).is_zero():
        return False
    return all((f @ V1.rho[i] - V2.alpha_actions[i] @ f).is_zero() for i in range(V1.algebra.dim))


def alpha_power_morphism(L: HomLieAlgebra, k: int, s: int) -> Matrix:
    """α^(s+1) as a module map ad_k -> ad_(k+s)."""
    f = L.alpha_power(s + 1)
    if not is_module_hom(adjoint(L, k), adjoint(L, k + s), f):
        raise ConsistencyError(f"alpha^{s + 1} is not a module map ad_{k} -> ad_{k + s}")
    return f


def kernel_is_submodule(V: Representation, f: Matrix) -> bool:
    """ker f is a submodule of V for every module map f out of V."""
    return is_submodule(V, nullspace(f))
