"""Reduction algorithms for skew biderivations and commuting maps.

Skew biderivations are reduced along the center sequence L, L/Z(L), ... and, on a
centerless level that is not perfect, by restriction to the derived subalgebra.
Commuting maps are reduced along the module sequence V, V/Z_V(L'), ...

Lifting through a step is solved as one joint linear system in the unknown map on the
upper level and the coefficients of its image in the lower level's basis. The kernel
of that system (zero coefficients) is the central, respectively special, part.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..errors import ConsistencyError, HypothesisError
from .algebra import (
    HomLieAlgebra, QuotientData, SubalgebraData, basis_pairs, center, derived, is_perfect, quotient,
    require_accepted, subalgebra,
)
from .linalg import (
    SubspaceBasis, Vector, ZERO, kernel_within, matrix_of_linear_map, nullspace, solve, vec_sub,
)
from .maps import (
    BilinearMap, LinearMapLV, MapKind, MapSpace, bider_s_failures, bider_s_system, central_subspace,
    com_system, skew_unknowns, solve_bider_s, solve_cent, solve_central_bider_s_direct,
    solve_central_com_direct, solve_com, space_of_induced_biderivations, special_subspace,
)
from .representation import ModuleQuotient, Representation, adjoint, annihilated, quotient_module

logger = logging.getLogger(__name__)


# --- Sequences ---
@dataclass
class CenterLevel:
    algebra: HomLieAlgebra
    step: Optional[QuotientData] = None  # quotient from the previous level


@dataclass
class CenterSequence:
    levels: List[CenterLevel]
    terminated: bool

    @property
    def dims(self) -> List[int]:
        return [level.algebra.dim for level in self.levels]


def center_sequence(L: HomLieAlgebra, max_levels: Optional[int] = None) -> CenterSequence:
    """L, L/Z(L), ... until the center vanishes or max_levels quotients were taken."""
    require_accepted(L)
    limit = L.dim if max_levels is None else max_levels
    levels = [CenterLevel(L)]
    current = L
    while len(levels) <= limit:
        Z = center(current)
        if Z.is_zero():
            return CenterSequence(levels, True)
        if not current.validation.alpha_surjective:
            raise HypothesisError(f"center sequence stops at level {len(levels) - 1}", ["alpha is not surjective"])
        q = quotient(current, Z)
        logger.info(f"Center sequence level {len(levels)}: dimension {q.quotient.dim}")
        levels.append(CenterLevel(q.quotient, q))
        current = q.quotient
    return CenterSequence(levels, center(current).is_zero())


@dataclass
class ModuleLevel:
    module: Representation
    step: Optional[ModuleQuotient] = None


@dataclass
class ModuleSequence:
    levels: List[ModuleLevel]
    terminated: bool

    @property
    def dims(self) -> List[int]:
        return [level.module.dim_v for level in self.levels]


def com_sequence(L: HomLieAlgebra, V: Representation, max_levels: Optional[int] = None) -> ModuleSequence:
    """V, V/Z_V(L'), ... until the annihilator of L' vanishes."""
    require_accepted(L)
    if not L.validation.alpha_surjective:
        raise HypothesisError("module sequence needs L' to be an ideal", ["alpha is not surjective"])
    D = derived(L)
    limit = V.dim_v if max_levels is None else max_levels
    levels = [ModuleLevel(V)]
    current = V
    while len(levels) <= limit:
        Z = annihilated(current, D)
        if Z.is_zero():
            return ModuleSequence(levels, True)
        mq = quotient_module(current, Z)
        logger.info(f"Module sequence level {len(levels)}: dimension {mq.module.dim_v}")
        levels.append(ModuleLevel(mq.module, mq))
        current = mq.module
    return ModuleSequence(levels, annihilated(current, D).is_zero())


# --- Maps between levels ---
def _pushdown_values(delta: BilinearMap, q: QuotientData) -> BilinearMap:
    m = q.quotient.dim
    return BilinearMap.from_function(
        m, m, lambda s, t: q.project(delta.evaluate(q.section.column(s), q.section.column(t)))
    )


def pushdown_bider(delta: BilinearMap, q: QuotientData, k: int = 0) -> BilinearMap:
    """δ̄(x̄, ȳ) = the class of δ(x, y), through the quotient's section."""
    reduced = _pushdown_values(delta, q)
    failed = bider_s_failures(q.quotient, adjoint(q.quotient, k), reduced)
    if failed:
        raise ConsistencyError(f"pushed-down map is not a skew biderivation: {', '.join(failed)}")
    return reduced


@dataclass
class LiftResult:
    particular: Optional[BilinearMap]
    kernel: MapSpace

    @property
    def liftable(self) -> bool:
        return self.particular is not None


def lift_bider(reduced: BilinearMap, q: QuotientData, L: HomLieAlgebra, k: int) -> LiftResult:
    """All δ in Bider_s(L, ad_k) whose pushdown is the given map: one particular lift plus the kernel."""
    V = adjoint(L, k)
    n = L.dim
    unknowns = skew_unknowns(L, V)
    residual = bider_s_system(L, V)

    def func(coords: Vector) -> Vector:
        pushed = _pushdown_values(BilinearMap.from_skew_coordinates(n, n, coords), q)
        return tuple(residual(coords)) + pushed.skew_coordinates()

    out_dim = len(func((ZERO,) * unknowns))
    system = matrix_of_linear_map(func, unknowns, out_dim)
    target = (ZERO,) * (out_dim - len(reduced.skew_coordinates())) + reduced.skew_coordinates()
    kernel = MapSpace(MapKind.CBIDER_S, V, nullspace(system))
    if kernel.coordinates != central_subspace(solve_bider_s(L, V)).coordinates:
        raise ConsistencyError("kernel of the lift differs from the central skew biderivations")
    solution = solve(system, target)
    if solution is None:
        logger.info("Quotient biderivation does not lift")
        return LiftResult(None, kernel)
    return LiftResult(BilinearMap.from_skew_coordinates(n, n, solution), kernel)


def _restriction_values(delta: BilinearMap, sub: SubalgebraData) -> BilinearMap:
    """δ on L' x L' in the subalgebra's basis, values still in L."""
    m = sub.subalgebra.dim
    return BilinearMap.from_function(
        m, delta.d, lambda s, t: delta.evaluate(sub.space.vectors[s], sub.space.vectors[t])
    )


def _restriction_hypotheses(L: HomLieAlgebra) -> List[str]:
    failed = []
    if not center(L).is_zero():
        failed.append("algebra has a nonzero center")
    if not L.validation.alpha_invertible:
        failed.append("alpha is not invertible")
    return failed


def restrict_bider(delta: BilinearMap, L: HomLieAlgebra, k: int = 0) -> Tuple[SubalgebraData, BilinearMap]:
    """The restriction of δ to L' x L', as a skew biderivation of (L', ad_k)."""
    failed = _restriction_hypotheses(L)
    if failed:
        raise HypothesisError("cannot restrict to the derived subalgebra", failed)
    sub = subalgebra(L, derived(L))
    values = _restriction_values(delta, sub)
    m = sub.subalgebra.dim
    if not all(sub.space.contains(values.value(s, t)) for s in range(m) for t in range(m)):
        raise ConsistencyError("restricted biderivation leaves the derived subalgebra")
    restricted = BilinearMap.from_function(m, m, lambda s, t: sub.space.coordinates(values.value(s, t)))
    failed = bider_s_failures(sub.subalgebra, adjoint(sub.subalgebra, k), restricted)
    if failed:
        raise ConsistencyError(f"restriction is not a skew biderivation of L': {', '.join(failed)}")
    return sub, restricted


# --- Joint lifting systems ---
@dataclass
class JointSolution:
    space: SubspaceBasis  # all upper-level maps whose image lies in the span of the targets
    kernel: SubspaceBasis  # those with zero image
    lifted_dim: int


def _joint_solve(unknowns: int, residual: Callable[[Vector], Sequence], image: Callable[[Vector], Sequence],
                 targets: List[Vector]) -> JointSolution:
    """Solves residual(x) = 0 and image(x) = Σ c_t targets[t] for (x, c)."""
    count = len(targets)

    def func(z: Vector) -> Vector:
        x, c = z[:unknowns], z[unknowns:]
        value = tuple(image(x))
        for coefficient, t in zip(c, targets):
            if coefficient:
                value = vec_sub(value, tuple(coefficient * a for a in t))
        return tuple(residual(x)) + value

    out_dim = len(func((ZERO,) * (unknowns + count)))
    solutions = nullspace(matrix_of_linear_map(func, unknowns + count, out_dim))
    space = SubspaceBasis.span(unknowns, [v[:unknowns] for v in solutions.vectors])
    with_zero_image = kernel_within(solutions, lambda v: v[unknowns:], count)
    kernel = SubspaceBasis.span(unknowns, [v[:unknowns] for v in with_zero_image.vectors])
    lifted = SubspaceBasis.span(count, [v[unknowns:] for v in solutions.vectors])
    logger.debug(f"joint lift: {unknowns}+{count} unknowns, {out_dim} rows, kernel {kernel.dim}, lifted {lifted.dim}")
    return JointSolution(space, kernel, lifted.dim)


# --- Reduction results ---
@dataclass
class ReductionResult:
    space: MapSpace
    trace: List[Dict[str, Any]] = field(default_factory=list)
    stalled: bool = False
    matches_direct: bool = True


def _step(level: int, move: str, L: HomLieAlgebra, space_dim: int, kernel_dim: Optional[int] = None,
          lifted_dim: Optional[int] = None, **extra) -> Dict[str, Any]:
    step = {
        "level": level,
        "move": move,
        "dims": {"algebra": L.dim, "space": space_dim},
        "kernel_dim": kernel_dim,
        "lifted_dim": lifted_dim,
    }
    step.update(extra)
    return step


class _BiderReducer:
    def __init__(self, k: int, max_levels: int):
        self.k = k
        self.max_levels = max_levels
        self.trace: List[Dict[str, Any]] = []
        self.stalled = False

    def reduce(self, L: HomLieAlgebra, level: int) -> MapSpace:
        V = adjoint(L, self.k)
        if L.dim < 2:
            space = MapSpace(MapKind.BIDER_S, V, SubspaceBasis.zero(skew_unknowns(L, V)))
            self.trace.append(_step(level, "trivial", L, 0))
            return space
        if level >= self.max_levels:
            return self._stall(L, V, level, "level limit reached")
        if not center(L).is_zero():
            if not L.validation.alpha_surjective:
                return self._stall(L, V, level, "alpha is not surjective")
            return self._quotient_center(L, V, level)
        if not L.validation.alpha_invertible:
            return self._stall(L, V, level, "alpha is not invertible")
        if is_perfect(L):
            space = space_of_induced_biderivations(L, V)
            self.trace.append(_step(level, "centroid", L, space.dim))
            return space
        return self._restrict_derived(L, V, level)

    def _stall(self, L: HomLieAlgebra, V: Representation, level: int, reason: str) -> MapSpace:
        logger.warning(f"Reduction stalls at level {level}: {reason}; using the direct solver")
        self.stalled = True
        space = solve_bider_s(L, V)
        self.trace.append(_step(level, "stall", L, space.dim, reason=reason))
        return space

    def _quotient_center(self, L: HomLieAlgebra, V: Representation, level: int) -> MapSpace:
        q = quotient(L, center(L))
        lower = self.reduce(q.quotient, level + 1)
        n = L.dim
        joint = _joint_solve(
            skew_unknowns(L, V),
            bider_s_system(L, V),
            lambda x: _pushdown_values(BilinearMap.from_skew_coordinates(n, n, x), q).skew_coordinates(),
            list(lower.coordinates.vectors),
        )
        central = solve_central_bider_s_direct(L, V)
        if joint.kernel != central.coordinates:
            raise ConsistencyError("kernel of the pushdown differs from the central skew biderivations")
        space = MapSpace(MapKind.BIDER_S, V, joint.space)
        self.trace.append(_step(level, "quotient-center", L, space.dim, joint.kernel.dim, joint.lifted_dim))
        logger.info(f"Level {level}: central part {joint.kernel.dim}, lifted {joint.lifted_dim} of {lower.dim}")
        return space

    def _restrict_derived(self, L: HomLieAlgebra, V: Representation, level: int) -> MapSpace:
        sub = subalgebra(L, derived(L))
        lower = self.reduce(sub.subalgebra, level + 1)
        n, m = L.dim, sub.subalgebra.dim
        # lower-level maps pushed into L coordinates through the inclusion
        targets = []
        for delta in lower.basis:
            included = BilinearMap.from_function(m, n, lambda s, t: sub.include(delta.value(s, t)))
            targets.append(included.skew_coordinates())
        joint = _joint_solve(
            skew_unknowns(L, V),
            bider_s_system(L, V),
            lambda x: _restriction_values(BilinearMap.from_skew_coordinates(n, n, x), sub).skew_coordinates(),
            targets,
        )
        space = MapSpace(MapKind.BIDER_S, V, joint.space)
        special = special_subspace(space)
        if joint.kernel != special.coordinates:
            raise ConsistencyError("kernel of the restriction differs from the special skew biderivations")
        self.trace.append(_step(level, "restrict-derived", L, space.dim, joint.kernel.dim, joint.lifted_dim))
        return space


def reduce_bider_s(L: HomLieAlgebra, k: int = 0, max_levels: Optional[int] = None) -> ReductionResult:
    """Bider_s(L, ad_k) assembled level by level, checked against the direct solver."""
    require_accepted(L)
    reducer = _BiderReducer(k, L.dim if max_levels is None else max_levels)
    space = reducer.reduce(L, 0)
    direct = solve_bider_s(L, adjoint(L, k))
    matches = space.same_space(direct)
    if not matches and not reducer.stalled:
        raise ConsistencyError("reduced skew biderivations differ from the direct solution")
    return ReductionResult(space, reducer.trace, reducer.stalled, matches)


class _ComReducer:
    def __init__(self, L: HomLieAlgebra, max_levels: int):
        self.L = L
        self.derived = derived(L)
        self.max_levels = max_levels
        self.trace: List[Dict[str, Any]] = []
        self.stalled = False

    def _step(self, level: int, move: str, V: Representation, space_dim: int, **extra) -> Dict[str, Any]:
        step = _step(level, move, self.L, space_dim, **extra)
        step["dims"]["module"] = V.dim_v
        return step

    def reduce(self, V: Representation, level: int) -> MapSpace:
        L = self.L
        Z = annihilated(V, self.derived)
        if Z.is_zero():
            if V.beta_invertible and L.validation.alpha_surjective:
                cent = solve_cent(L, V)
                space = MapSpace(MapKind.COM, V, cent.coordinates)
                self.trace.append(self._step(level, "centroid", V, space.dim))
                return space
            return self._stall(V, level, "beta is not invertible" if L.validation.alpha_surjective
                               else "alpha is not surjective")
        if level >= self.max_levels:
            return self._stall(V, level, "level limit reached")
        if not L.validation.alpha_surjective:
            return self._stall(V, level, "alpha is not surjective")
        mq = quotient_module(V, Z)
        lower = self.reduce(mq.module, level + 1)
        n, d, e = L.dim, V.dim_v, mq.module.dim_v

        def image(x: Vector) -> Vector:
            f = LinearMapLV.from_coordinates(n, d, x)
            return LinearMapLV(mq.projection @ f.matrix).coordinates()

        joint = _joint_solve(n * d, com_system(L, V), image, list(lower.coordinates.vectors))
        space = MapSpace(MapKind.COM, V, joint.space)
        ccom = solve_central_com_direct(L, V)
        scom = special_subspace(space)
        expected = ccom.coordinates + scom.coordinates
        kernel_law = joint.kernel == expected
        if not kernel_law:
            logger.error(f"Level {level}: pushdown kernel has dim {joint.kernel.dim}, CCom + SCom has dim {expected.dim}")
            raise ConsistencyError("kernel of the pushdown differs from the central plus special commuting maps")
        self.trace.append(self._step(level, "quotient-annihilator", V, space.dim, kernel_dim=joint.kernel.dim,
                                     lifted_dim=joint.lifted_dim, kernel_law=kernel_law))
        return space

    def _stall(self, V: Representation, level: int, reason: str) -> MapSpace:
        logger.warning(f"Commuting-map reduction stalls at level {level}: {reason}; using the direct solver")
        self.stalled = True
        space = solve_com(self.L, V)
        self.trace.append(self._step(level, "stall", V, space.dim, reason=reason))
        return space


def reduce_com(L: HomLieAlgebra, V: Representation, max_levels: Optional[int] = None) -> ReductionResult:
    """Com(L, V) assembled along the module sequence, checked against the direct solver."""
    require_accepted(L)
    reducer = _ComReducer(L, V.dim_v if max_levels is None else max_levels)
    space = reducer.reduce(V, 0)
    direct = solve_com(L, V)
    matches = space.same_space(direct)
    if not matches and not reducer.stalled:
        raise ConsistencyError("reduced commuting maps differ from the direct solution")
    return ReductionResult(space, reducer.trace, reducer.stalled, matches)


def pushdown_com(f: LinearMapLV, mq: ModuleQuotient) -> LinearMapLV:
    """f̄ = the class of f, as a map into the quotient module."""
    return LinearMapLV(mq.projection @ f.matrix)


def com_pushdown_kernel(L: HomLieAlgebra, V: Representation) -> Tuple[SubspaceBasis, SubspaceBasis]:
    """(kernel of f -> f̄ on Com(L, V), CCom + SCom) as subspaces of map coordinates."""
    com = solve_com(L, V)
    Z = annihilated(V, derived(L))
    mq = quotient_module(V, Z)
    out_dim = L.dim * mq.module.dim_v
    kernel = kernel_within(
        com.coordinates, lambda x: pushdown_com(com.map_from_coordinates(x), mq).coordinates(), out_dim
    )
    return kernel, central_subspace(com).coordinates + special_subspace(com).coordinates


def bider_pushdown_kernel(L: HomLieAlgebra, k: int = 0) -> Tuple[SubspaceBasis, SubspaceBasis]:
    """(kernel of δ -> δ̄ on Bider_s(L, ad_k), CBider_s(L, ad_k))."""
    V = adjoint(L, k)
    space = solve_bider_s(L, V)
    q = quotient(L, center(L))
    out_dim = len(basis_pairs(q.quotient.dim)) * q.quotient.dim
    kernel = kernel_within(
        space.coordinates, lambda x: _pushdown_values(space.map_from_coordinates(x), q).skew_coordinates(), out_dim
    )
    return kernel, central_subspace(space).coordinates


def restriction_kernel(L: HomLieAlgebra, k: int = 0) -> Tuple[SubspaceBasis, SubspaceBasis]:
    """(kernel of the restriction to L' x L' on Bider_s(L, ad_k), SBider_s(L, ad_k))."""
    failed = _restriction_hypotheses(L)
    if failed:
        raise HypothesisError("cannot restrict to the derived subalgebra", failed)
    V = adjoint(L, k)
    space = solve_bider_s(L, V)
    sub = subalgebra(L, derived(L))
    out_dim = len(basis_pairs(sub.subalgebra.dim)) * L.dim
    kernel = kernel_within(
        space.coordinates,
        lambda x: _restriction_values(space.map_from_coordinates(x), sub).skew_coordinates(),
        out_dim,
    )
    return kernel, special_subspace(space).coordinates
