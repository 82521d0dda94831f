"""Hom-Lie algebras given by structure constants and a twist matrix.

Brackets are stored only for basis pairs i < j; [e_j, e_i] = -[e_i, e_j] and
[e_i, e_i] = 0 are definitional. The twist α is an n x n matrix whose column j holds
the coordinates of α(e_j).
"""
import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..errors import ConsistencyError, DimensionMismatchError, HypothesisError, NotAnIdealError, ValidationError
from .linalg import (
    Matrix, SubspaceBasis, Vector, ZERO, linear_combination, nullspace, random_vector,
    to_vector, unit_vector, vec_is_zero, vec_sub,
)

logger = logging.getLogger(__name__)

OVERLINE = "̄"


def basis_pairs(n: int) -> List[Tuple[int, int]]:
    """All pairs i < j in lexicographic order."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def default_basis_names(n: int) -> Tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(n))


@dataclass(frozen=True)
class HomLieAlgebra:
    dim: int
    basis_names: Tuple[str, ...]
    structure: Tuple[Vector, ...]  # [e_i, e_j] for the pairs of basis_pairs(dim)
    alpha: Matrix

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise DimensionMismatchError("algebra dimension must be non-negative")
        if len(self.basis_names) != n:
            raise DimensionMismatchError(f"{len(self.basis_names)} basis names for dimension {n}")
        if len(self.structure) != n * (n - 1) // 2:
            raise DimensionMismatchError(f"expected {n * (n - 1) // 2} bracket vectors, got {len(self.structure)}")
        for v in self.structure:
            if len(v) != n:
                raise DimensionMismatchError(f"bracket vector of length {len(v)} in dimension {n}")
        if (self.alpha.rows, self.alpha.cols) != (n, n):
            raise DimensionMismatchError(f"alpha must be {n}x{n}, got {self.alpha.rows}x{self.alpha.cols}")

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[Tuple[int, int], Sequence],
        alpha: Matrix,
        basis_names: Optional[Sequence[str]] = None,
    ) -> "HomLieAlgebra":
        """Builds an algebra from a 0-based {(i, j): [e_i, e_j]} map with i < j. Omitted pairs are zero."""
        for (i, j) in brackets:
            if not (0 <= i < j < dim):
                raise DimensionMismatchError(f"bracket pair ({i}, {j}) is not a pair i < j below {dim}")
        structure = tuple(
            to_vector(brackets[(i, j)]) if (i, j) in brackets else (ZERO,) * dim
            for (i, j) in basis_pairs(dim)
        )
        names = tuple(basis_names) if basis_names is not None else default_basis_names(dim)
        return cls(dim, names, structure, alpha)

    # --- Brackets ---
    @cached_property
    def table(self) -> Tuple[Tuple[Vector, ...], ...]:
        """Full n x n table of basis brackets."""
        n = self.dim
        zero = (ZERO,) * n
        rows = [[zero] * n for _ in range(n)]
        for (i, j), v in zip(basis_pairs(n), self.structure):
            rows[i][j] = v
            rows[j][i] = tuple(-a for a in v)
        return tuple(tuple(r) for r in rows)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatchError(f"bracket arguments must have length {n}")
        out = [ZERO] * n
        table = self.table
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                c = xi * yj
                for a, t in enumerate(table[i][j]):
                    if t:
                        out[a] += c * t
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def ad_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> [x, y]."""
        columns = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        if not columns:
            return Matrix.zeros(0, 0)
        return Matrix.from_columns(columns, rows=self.dim)

    # --- Twist ---
    def apply_alpha(self, x: Sequence) -> Vector:
        return self.alpha.apply(x)

    def alpha_image(self, i: int) -> Vector:
        return self.alpha.column(i)

    def alpha_power(self, k: int) -> Matrix:
        """α^k; negative k needs α invertible."""
        if k < 0 and not self.alpha.is_invertible():
            raise HypothesisError(f"alpha^{k} requested", ["alpha is not invertible"])
        return self.alpha.power(k)

    @property
    def is_abelian(self) -> bool:
        return all(vec_is_zero(v) for v in self.structure)

    @cached_property
    def validation(self) -> "ValidationReport":
        return _compute_validation(self)


# --- Validation ---
@dataclass
class ValidationReport:
    hom_jacobi_failures: List[Tuple[Tuple[int, int, int], Vector]] = field(default_factory=list)
    multiplicativity_failures: List[Tuple[Tuple[int, int], Vector]] = field(default_factory=list)
    alpha_invertible: bool = False
    alpha_surjective: bool = False
    skew_ok: bool = True

    @property
    def accepted(self) -> bool:
        return not self.hom_jacobi_failures and not self.multiplicativity_failures

    def status(self) -> Dict[str, Tuple[bool, str]]:
        """Check results in the (ok, message) shape used by the reports."""
        jacobi = self.hom_jacobi_failures
        mult = self.multiplicativity_failures
        return {
            "skew-symmetry": (True, "structural"),
            "Hom-Jacobi": (not jacobi, "OK" if not jacobi else f"{len(jacobi)} failing triple(s)"),
            "multiplicativity": (not mult, "OK" if not mult else f"{len(mult)} failing pair(s)"),
        }


def _compute_validation(L: HomLieAlgebra) -> ValidationReport:
    n = L.dim
    report = ValidationReport()
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                residual = [ZERO] * n
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    term = L.bracket(L.alpha_image(a), L.bracket_basis(b, c))
                    residual = [r + t for r, t in zip(residual, term)]
                if not vec_is_zero(residual):
                    report.hom_jacobi_failures.append(((i, j, k), tuple(residual)))
    for (i, j) in basis_pairs(n):
        residual = vec_sub(L.apply_alpha(L.bracket_basis(i, j)), L.bracket(L.alpha_image(i), L.alpha_image(j)))
        if not vec_is_zero(residual):
            report.multiplicativity_failures.append(((i, j), residual))
    rank = L.alpha.rank()
    report.alpha_surjective = rank == n
    report.alpha_invertible = rank == n
    if not report.accepted:
        logger.warning(
            f"Algebra rejected: {len(report.hom_jacobi_failures)} Hom-Jacobi and "
            f"{len(report.multiplicativity_failures)} multiplicativity failure(s)"
        )
    return report


def validate(L: HomLieAlgebra) -> ValidationReport:
    return L.validation


def require_accepted(L: HomLieAlgebra, what: str = "algebra"):
    report = L.validation
    if not report.accepted:
        raise ValidationError(f"{what} is not a multiplicative Hom-Lie algebra", report)


# --- Subspaces ---
def _stack_or_empty(matrices: List[Matrix], cols: int) -> Matrix:
    return Matrix.vstack(matrices, cols) if matrices else Matrix.zeros(0, cols)


def center(L: HomLieAlgebra) -> SubspaceBasis:
    """Z(L) = {z : [z, L] = 0}."""
    matrices = [L.ad_matrix(L.basis_vector(j)) for j in range(L.dim)]
    return nullspace(_stack_or_empty(matrices, L.dim))


def derived(L: HomLieAlgebra) -> SubspaceBasis:
    """L' = span of all [e_i, e_j]."""
    return SubspaceBasis.span(L.dim, L.structure)


def annihilator(L: HomLieAlgebra, S: SubspaceBasis) -> SubspaceBasis:
    """Centralizer {x : [s, x] = 0 for s in S}."""
    if S.ambient_dim != L.dim:
        raise DimensionMismatchError(f"subspace of F^{S.ambient_dim} in an algebra of dimension {L.dim}")
    matrices = [L.ad_matrix(s) for s in S.vectors]
    return nullspace(_stack_or_empty(matrices, L.dim))


def is_perfect(L: HomLieAlgebra) -> bool:
    return derived(L).is_full()


def is_centerless(L: HomLieAlgebra) -> bool:
    return center(L).is_zero()


def is_ideal(L: HomLieAlgebra, S: SubspaceBasis) -> bool:
    if S.ambient_dim != L.dim:
        raise DimensionMismatchError(f"subspace of F^{S.ambient_dim} in an algebra of dimension {L.dim}")
    for s in S.vectors:
        if not S.contains(L.apply_alpha(s)):
            return False
        for i in range(L.dim):
            if not S.contains(L.bracket(L.basis_vector(i), s)):
                return False
    return True


@dataclass(frozen=True)
class QuotientData:
    quotient: HomLieAlgebra
    projection: Matrix  # old dim -> new dim
    section: Matrix  # new dim -> old dim
    ideal: SubspaceBasis

    def project(self, x: Sequence) -> Vector:
        return self.projection.apply(x)

    def lift(self, x: Sequence) -> Vector:
        return self.section.apply(x)


def projection_matrices(S: SubspaceBasis) -> Tuple[Matrix, Matrix, List[int]]:
    """Projection onto F^n / S in non-pivot coordinates, and its unit-vector section."""
    n = S.ambient_dim
    complement = S.complement_indices()
    m = len(complement)
    columns = []
    for j in range(n):
        reduced = S.reduce(unit_vector(n, j))
        columns.append(tuple(reduced[c] for c in complement))
    projection = Matrix.from_columns(columns, rows=m) if columns else Matrix.zeros(m, 0)
    section_columns = [unit_vector(n, c) for c in complement]
    section = Matrix.from_columns(section_columns, rows=n) if section_columns else Matrix.zeros(n, 0)
    return projection, section, complement


def quotient(L: HomLieAlgebra, I: SubspaceBasis) -> QuotientData:
    """L / I with the non-pivot coordinates of I as quotient basis."""
    if not is_ideal(L, I):
        raise NotAnIdealError("subspace is not an ideal (closed under brackets with L and under alpha)")
    projection, section, complement = projection_matrices(I)
    m = len(complement)
    brackets = {}
    for t, u in basis_pairs(m):
        value = projection.apply(L.bracket_basis(complement[t], complement[u]))
        if not vec_is_zero(value):
            brackets[(t, u)] = value
    alpha_columns = [projection.apply(L.alpha_image(c)) for c in complement]
    alpha = Matrix.from_columns(alpha_columns, rows=m) if alpha_columns else Matrix.zeros(0, 0)
    names = [L.basis_names[c] + OVERLINE for c in complement]
    Q = HomLieAlgebra.from_brackets(m, brackets, alpha, names)
    if L.validation.accepted and not Q.validation.accepted:
        raise ConsistencyError("quotient of an accepted algebra failed validation")
    logger.info(f"Quotient: dimension {L.dim} -> {m} (ideal of dimension {I.dim})")
    return QuotientData(Q, projection, section, I)


@dataclass(frozen=True)
class SubalgebraData:
    subalgebra: HomLieAlgebra
    inclusion: Matrix  # new dim -> old dim
    space: SubspaceBasis

    def include(self, x: Sequence) -> Vector:
        return self.inclusion.apply(x)


def subalgebra(L: HomLieAlgebra, S: SubspaceBasis) -> SubalgebraData:
    """Inherited Hom-Lie structure on an α-invariant, bracket-closed S, in S's canonical basis."""
    if S.ambient_dim != L.dim:
        raise DimensionMismatchError(f"subspace of F^{S.ambient_dim} in an algebra of dimension {L.dim}")
    failed = []
    if not all(S.contains(L.apply_alpha(s)) for s in S.vectors):
        failed.append("subspace is not alpha-invariant")
    for t, u in basis_pairs(S.dim):
        if not S.contains(L.bracket(S.vectors[t], S.vectors[u])):
            failed.append("subspace is not closed under the bracket")
            break
    if failed:
        raise HypothesisError("cannot form the subalgebra", failed)
    m = S.dim
    brackets = {}
    for t, u in basis_pairs(m):
        value = S.coordinates(L.bracket(S.vectors[t], S.vectors[u]))
        if not vec_is_zero(value):
            brackets[(t, u)] = value
    alpha_columns = [S.coordinates(L.apply_alpha(s)) for s in S.vectors]
    alpha = Matrix.from_columns(alpha_columns, rows=m) if alpha_columns else Matrix.zeros(0, 0)
    names = []
    for t, v in enumerate(S.vectors):
        support = [i for i, a in enumerate(v) if a]
        names.append(L.basis_names[support[0]] if len(support) == 1 and v[support[0]] == 1 else f"w{t + 1}")
    sub = HomLieAlgebra.from_brackets(m, brackets, alpha, names)
    inclusion = Matrix.from_columns(list(S.vectors), rows=L.dim) if m else Matrix.zeros(L.dim, 0)
    return SubalgebraData(sub, inclusion, S)


# --- Ideals and simplicity ---
def generated_ideal(L: HomLieAlgebra, x: Sequence) -> SubspaceBasis:
    """Smallest α-invariant ideal containing x."""
    if len(x) != L.dim:
        raise DimensionMismatchError(f"vector of length {len(x)} in an algebra of dimension {L.dim}")
    space = SubspaceBasis.span(L.dim, [x])
    while True:
        candidates = list(space.vectors)
        for w in space.vectors:
            candidates.append(L.apply_alpha(w))
            candidates.extend(L.bracket(L.basis_vector(i), w) for i in range(L.dim))
        grown = SubspaceBasis.span(L.dim, candidates)
        if grown.dim == space.dim:
            return space
        space = grown


@dataclass
class FalsifierResult:
    not_simple: bool
    reason: str
    witness: Optional[SubspaceBasis] = None


def simplicity_falsifier(L: HomLieAlgebra, trials: int = 8, seed: int = 0) -> FalsifierResult:
    """Looks for a proper nonzero ideal. Finding none is not a proof of simplicity."""
    n = L.dim

    def proper(S: SubspaceBasis) -> bool:
        return 0 < S.dim < n

    if L.is_abelian:
        # any alpha-invariant subspace is an ideal; there may be none
        lines = (generated_ideal(L, L.basis_vector(i)) for i in range(n))
        return FalsifierResult(True, "abelian", next((I for I in lines if proper(I)), None))

    Z = center(L)
    if proper(Z) and is_ideal(L, Z):
        return FalsifierResult(True, "center is a proper ideal", Z)
    D = derived(L)
    if proper(D) and is_ideal(L, D):
        return FalsifierResult(True, "derived subalgebra is a proper ideal", D)
    rng = random.Random(seed)
    candidates = [L.basis_vector(i) for i in range(n)]
    candidates += [random_vector(rng, n) for _ in range(trials)]
    for v in candidates:
        if vec_is_zero(v):
            continue
        ideal = generated_ideal(L, v)
        if proper(ideal):
            return FalsifierResult(True, "generated ideal is proper", ideal)
    return FalsifierResult(False, "no counterexample found")


def element(L: HomLieAlgebra, coefficients: Sequence) -> Vector:
    """Σ c_i e_i as a coordinate vector."""
    return linear_combination(to_vector(coefficients), [L.basis_vector(i) for i in range(L.dim)], L.dim)
