"""Spaces of biderivations, centroids, commuting maps and derivations.

Every space is the canonical nullspace of a linear system in the coordinates of the
unknown map. Coordinate layouts:

* skew bilinear maps: pairs (i, j) with i < j in lexicographic order, then the module
  coordinate;
* arbitrary bilinear maps: ordered pairs (i, j) row-major, then the module coordinate;
* linear maps L -> V: the basis index i, then the module coordinate.
"""
import logging
import random
from dataclasses import dataclass
from enum import Enum
from itertools import chain
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..errors import ConsistencyError, DimensionMismatchError, HypothesisError
from .algebra import HomLieAlgebra, basis_pairs, derived, is_perfect, require_accepted
from .linalg import (
    Matrix, SubspaceBasis, Vector, ZERO, kernel_within, matrix_of_linear_map, nullspace,
    random_vector, solve, vec_add, vec_is_zero, vec_scale, vec_sub,
)
from .representation import Representation, adjoint, annihilated, require_accepted_rep

logger = logging.getLogger(__name__)

Residual = Tuple[str, Vector]


class MapKind(str, Enum):
    BIDER = "bider"
    BIDER_S = "bider_s"
    CENT = "cent"
    COM = "com"
    CBIDER_S = "cbider_s"
    SBIDER_S = "sbider_s"
    CCOM = "ccom"
    SCOM = "scom"
    DER = "der"

    @property
    def bilinear(self) -> bool:
        return self in (MapKind.BIDER, MapKind.BIDER_S, MapKind.CBIDER_S, MapKind.SBIDER_S)

    @property
    def skew(self) -> bool:
        return self.bilinear and self is not MapKind.BIDER


# --- Map values ---
@dataclass(frozen=True)
class BilinearMap:
    """δ : L x L -> V, values[i][j] = δ(e_i, e_j)."""
    n: int
    d: int
    values: Tuple[Tuple[Vector, ...], ...]

    @classmethod
    def from_function(cls, n: int, d: int, fn: Callable[[int, int], Sequence]) -> "BilinearMap":
        values = tuple(tuple(tuple(fn(i, j)) for j in range(n)) for i in range(n))
        for row in values:
            for v in row:
                if len(v) != d:
                    raise DimensionMismatchError(f"bilinear map value of length {len(v)}, expected {d}")
        return cls(n, d, values)

    @classmethod
    def zero(cls, n: int, d: int) -> "BilinearMap":
        return cls.from_function(n, d, lambda i, j: (ZERO,) * d)

    @classmethod
    def from_skew_coordinates(cls, n: int, d: int, coords: Sequence) -> "BilinearMap":
        pairs = basis_pairs(n)
        if len(coords) != len(pairs) * d:
            raise DimensionMismatchError(f"expected {len(pairs) * d} skew coordinates, got {len(coords)}")
        rows = [[(ZERO,) * d for _ in range(n)] for _ in range(n)]
        for p, (i, j) in enumerate(pairs):
            v = tuple(coords[p * d:(p + 1) * d])
            rows[i][j] = v
            rows[j][i] = tuple(-a for a in v)
        return cls(n, d, tuple(tuple(r) for r in rows))

    @classmethod
    def from_full_coordinates(cls, n: int, d: int, coords: Sequence) -> "BilinearMap":
        if len(coords) != n * n * d:
            raise DimensionMismatchError(f"expected {n * n * d} coordinates, got {len(coords)}")
        return cls.from_function(n, d, lambda i, j: coords[(i * n + j) * d:(i * n + j + 1) * d])

    def skew_coordinates(self) -> Vector:
        return tuple(a for (i, j) in basis_pairs(self.n) for a in self.values[i][j])

    def full_coordinates(self) -> Vector:
        return tuple(a for row in self.values for v in row for a in v)

    def value(self, i: int, j: int) -> Vector:
        return self.values[i][j]

    def evaluate(self, x: Sequence, y: Sequence) -> Vector:
        if len(x) != self.n or len(y) != self.n:
            raise DimensionMismatchError(f"bilinear map arguments must have length {self.n}")
        out = [ZERO] * self.d
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for a, t in enumerate(self.values[i][j]):
                    if t:
                        out[a] += c * t
        return tuple(out)

    def is_skew(self) -> bool:
        return all(
            vec_is_zero(vec_add(self.values[i][j], self.values[j][i]))
            for i in range(self.n) for j in range(i, self.n)
        )

    def is_zero(self) -> bool:
        return all(vec_is_zero(v) for row in self.values for v in row)

    def tensor(self) -> List[List[List]]:
        """t[a][i][j] with δ(e_i, e_j) = Σ_a t[a][i][j] v_a."""
        return [[[self.values[i][j][a] for j in range(self.n)] for i in range(self.n)] for a in range(self.d)]

    def compose(self, m: Matrix) -> "BilinearMap":
        """(x, y) -> m δ(x, y)."""
        return BilinearMap.from_function(self.n, m.rows, lambda i, j: m.apply(self.values[i][j]))

    def __add__(self, other: "BilinearMap") -> "BilinearMap":
        return BilinearMap.from_function(self.n, self.d, lambda i, j: vec_add(self.values[i][j], other.values[i][j]))

    def __sub__(self, other: "BilinearMap") -> "BilinearMap":
        return BilinearMap.from_function(self.n, self.d, lambda i, j: vec_sub(self.values[i][j], other.values[i][j]))

    def scale(self, s) -> "BilinearMap":
        return BilinearMap.from_function(self.n, self.d, lambda i, j: vec_scale(self.values[i][j], s))


@dataclass(frozen=True)
class LinearMapLV:
    """f : L -> V as a d x n matrix whose column i is f(e_i)."""
    matrix: Matrix

    @property
    def n(self) -> int:
        return self.matrix.cols

    @property
    def d(self) -> int:
        return self.matrix.rows

    @classmethod
    def from_coordinates(cls, n: int, d: int, coords: Sequence) -> "LinearMapLV":
        if len(coords) != n * d:
            raise DimensionMismatchError(f"expected {n * d} coordinates, got {len(coords)}")
        return cls(Matrix(d, n, tuple(coords[i * d + a] for a in range(d) for i in range(n))))

    def coordinates(self) -> Vector:
        return tuple(a for i in range(self.n) for a in self.matrix.column(i))

    def value(self, i: int) -> Vector:
        return self.matrix.column(i)

    def apply(self, x: Sequence) -> Vector:
        return self.matrix.apply(x)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __sub__(self, other: "LinearMapLV") -> "LinearMapLV":
        return LinearMapLV(self.matrix - other.matrix)

    def __add__(self, other: "LinearMapLV") -> "LinearMapLV":
        return LinearMapLV(self.matrix + other.matrix)


def bracket_map(L: HomLieAlgebra) -> BilinearMap:
    """The bracket as a bilinear map L x L -> L."""
    return BilinearMap(L.dim, L.dim, L.table)


# --- Map spaces ---
@dataclass(frozen=True)
class MapSpace:
    kind: MapKind
    module: Representation
    coordinates: SubspaceBasis

    @property
    def algebra(self) -> HomLieAlgebra:
        return self.module.algebra

    @property
    def dim(self) -> int:
        return self.coordinates.dim

    @property
    def basis(self) -> List:
        return [self.map_from_coordinates(v) for v in self.coordinates.vectors]

    def map_from_coordinates(self, coords: Sequence):
        n, d = self.algebra.dim, self.module.dim_v
        if self.kind is MapKind.BIDER:
            return BilinearMap.from_full_coordinates(n, d, coords)
        if self.kind.skew:
            return BilinearMap.from_skew_coordinates(n, d, coords)
        return LinearMapLV.from_coordinates(n, d, coords)

    def coordinates_of(self, m) -> Vector:
        if self.kind is MapKind.BIDER:
            return m.full_coordinates()
        if self.kind.skew:
            if not m.is_skew():
                raise DimensionMismatchError("a skew-symmetric space cannot hold a non-skew map")
            return m.skew_coordinates()
        return m.coordinates()

    def contains(self, m) -> bool:
        try:
            return self.coordinates.contains(self.coordinates_of(m))
        except DimensionMismatchError:
            return False

    def same_space(self, other: "MapSpace") -> bool:
        return self.coordinates == other.coordinates

    def is_subspace_of(self, other: "MapSpace") -> bool:
        return self.coordinates.is_subspace_of(other.coordinates)

    def derive(self, kind: MapKind, coordinates: SubspaceBasis) -> "MapSpace":
        return MapSpace(kind, self.module, coordinates)


def skew_unknowns(L: HomLieAlgebra, V: Representation) -> int:
    return len(basis_pairs(L.dim)) * V.dim_v


def linear_unknowns(L: HomLieAlgebra, V: Representation) -> int:
    return L.dim * V.dim_v


# --- Residuals ---
def basis_label(L: HomLieAlgebra, *indices: int) -> str:
    return "(" + ",".join(L.basis_names[i] for i in indices) + ")"


def twist_residuals_bilinear(L: HomLieAlgebra, V: Representation, delta: BilinearMap,
                             pairs: Iterable[Tuple[int, int]]) -> Iterator[Residual]:
    """β δ(x, y) - δ(α(x), α(y))."""
    for i, j in pairs:
        yield (
            f"twist at {basis_label(L, i, j)}",
            vec_sub(V.beta.apply(delta.value(i, j)), delta.evaluate(L.alpha_image(i), L.alpha_image(j))),
        )


def left_derivation_residuals(L: HomLieAlgebra, V: Representation, delta: BilinearMap) -> Iterator[Residual]:
    """δ(α(z), [x, y]) - α(x)δ(z, y) + α(y)δ(z, x) for x < y and all z."""
    acts = V.alpha_actions
    for x, y in basis_pairs(L.dim):
        bracket = L.bracket_basis(x, y)
        for z in range(L.dim):
            lhs = delta.evaluate(L.alpha_image(z), bracket)
            rhs = vec_sub(acts[x].apply(delta.value(z, y)), acts[y].apply(delta.value(z, x)))
            yield f"left derivation at {basis_label(L, x, y, z)}", vec_sub(lhs, rhs)


def right_derivation_residuals(L: HomLieAlgebra, V: Representation, delta: BilinearMap) -> Iterator[Residual]:
    """δ([x, y], α(z)) - α(x)δ(y, z) + α(y)δ(x, z) for x < y and all z."""
    acts = V.alpha_actions
    for x, y in basis_pairs(L.dim):
        bracket = L.bracket_basis(x, y)
        for z in range(L.dim):
            lhs = delta.evaluate(bracket, L.alpha_image(z))
            rhs = vec_sub(acts[x].apply(delta.value(y, z)), acts[y].apply(delta.value(x, z)))
            yield f"right derivation at {basis_label(L, x, y, z)}", vec_sub(lhs, rhs)


def twist_residuals_linear(L: HomLieAlgebra, V: Representation, f: LinearMapLV) -> Iterator[Residual]:
    """β f(e_i) - f(α(e_i))."""
    for i in range(L.dim):
        yield f"twist at {basis_label(L, i)}", vec_sub(V.beta.apply(f.value(i)), f.apply(L.alpha_image(i)))


def centroid_residuals(L: HomLieAlgebra, V: Representation, f: LinearMapLV) -> Iterator[Residual]:
    """f([x, y]) - α(x)f(y) over all ordered basis pairs."""
    acts = V.alpha_actions
    for i in range(L.dim):
        for j in range(L.dim):
            yield (
                f"centroid at {basis_label(L, i, j)}",
                vec_sub(f.apply(L.bracket_basis(i, j)), acts[i].apply(f.value(j))),
            )


def commuting_residuals(L: HomLieAlgebra, V: Representation, f: LinearMapLV) -> Iterator[Residual]:
    """Polarized α(x)f(y) + α(y)f(x) for i <= j."""
    acts = V.alpha_actions
    for i in range(L.dim):
        for j in range(i, L.dim):
            yield (
                f"commuting at {basis_label(L, i, j)}",
                vec_add(acts[i].apply(f.value(j)), acts[j].apply(f.value(i))),
            )


def derivation_residuals(L: HomLieAlgebra, V: Representation, f: LinearMapLV) -> Iterator[Residual]:
    """D([x, y]) - x D(y) + y D(x) for x < y."""
    for i, j in basis_pairs(L.dim):
        yield (
            f"derivation at {basis_label(L, i, j)}",
            vec_add(vec_sub(f.apply(L.bracket_basis(i, j)), V.rho[i].apply(f.value(j))), V.rho[j].apply(f.value(i))),
        )


def _failures(residuals: Iterable[Residual]) -> List[str]:
    return [label for label, r in residuals if not vec_is_zero(r)]


def bider_s_failures(L: HomLieAlgebra, V: Representation, delta: BilinearMap, with_left: bool = False) -> List[str]:
    failed = [] if delta.is_skew() else ["skew-symmetry"]
    failed += _failures(twist_residuals_bilinear(L, V, delta, basis_pairs(L.dim)))
    failed += _failures(right_derivation_residuals(L, V, delta))
    if with_left:
        failed += _failures(left_derivation_residuals(L, V, delta))
    return failed


def bider_failures(L: HomLieAlgebra, V: Representation, delta: BilinearMap) -> List[str]:
    all_pairs = [(i, j) for i in range(L.dim) for j in range(L.dim)]
    failed = _failures(twist_residuals_bilinear(L, V, delta, all_pairs))
    failed += _failures(left_derivation_residuals(L, V, delta))
    failed += _failures(right_derivation_residuals(L, V, delta))
    return failed


def cent_failures(L: HomLieAlgebra, V: Representation, f: LinearMapLV) -> List[str]:
    return _failures(centroid_residuals(L, V, f)) + _failures(twist_residuals_linear(L, V, f))


def com_failures(L: HomLieAlgebra, V: Representation, f: LinearMapLV, random_checks: int = 20, seed: int = 0) -> List[str]:
    """Polarized constraints plus the quadratic condition α(x)f(x) = 0 at seeded random x."""
    failed = _failures(commuting_residuals(L, V, f)) + _failures(twist_residuals_linear(L, V, f))
    rng = random.Random(seed)
    for t in range(random_checks):
        x = random_vector(rng, L.dim)
        if not vec_is_zero(V.act(L.apply_alpha(x), f.apply(x))):
            failed.append(f"quadratic condition at random sample {t}")
    return failed


def der_failures(L: HomLieAlgebra, V: Representation, f: LinearMapLV) -> List[str]:
    return _failures(derivation_residuals(L, V, f)) + _failures(twist_residuals_linear(L, V, f))


# --- Solvers ---
def _flatten(residuals: Iterable[Residual]) -> Vector:
    return tuple(a for _, r in residuals for a in r)


def _check_inputs(L: HomLieAlgebra, V: Representation):
    if V.algebra != L:
        raise HypothesisError("module is defined over a different algebra", ["algebra mismatch"])
    require_accepted(L)
    require_accepted_rep(V)


def _solve(kind: MapKind, V: Representation, unknowns: int, build, residuals) -> MapSpace:
    L = V.algebra

    def func(coords: Vector) -> Vector:
        return _flatten(residuals(build(coords)))

    out_dim = len(func((ZERO,) * unknowns))
    system = matrix_of_linear_map(func, unknowns, out_dim)
    space = nullspace(system)
    logger.debug(f"solve {kind.value}: {unknowns} unknowns, {out_dim} constraint rows, nullity {space.dim}")
    return MapSpace(kind, V, space)


def _bider_s_residuals(L: HomLieAlgebra, V: Representation, delta: BilinearMap) -> Iterator[Residual]:
    yield from twist_residuals_bilinear(L, V, delta, basis_pairs(L.dim))
    yield from right_derivation_residuals(L, V, delta)


def solve_bider_s(L: HomLieAlgebra, V: Representation, debug_checks: bool = False) -> MapSpace:
    """Skew-symmetric biderivations L x L -> V."""
    _check_inputs(L, V)
    n, d = L.dim, V.dim_v
    space = _solve(MapKind.BIDER_S, V, skew_unknowns(L, V), lambda c: BilinearMap.from_skew_coordinates(n, d, c),
                   lambda delta: _bider_s_residuals(L, V, delta))
    if debug_checks:
        for delta in space.basis:
            failed = bider_s_failures(L, V, delta, with_left=True)
            if failed:
                raise ConsistencyError(f"skew biderivation basis element fails: {', '.join(failed)}")
    return space


def solve_bider(L: HomLieAlgebra, V: Representation) -> MapSpace:
    """All biderivations, skew or not."""
    _check_inputs(L, V)
    n, d = L.dim, V.dim_v
    all_pairs = [(i, j) for i in range(n) for j in range(n)]

    def residuals(delta: BilinearMap):
        yield from twist_residuals_bilinear(L, V, delta, all_pairs)
        yield from left_derivation_residuals(L, V, delta)
        yield from right_derivation_residuals(L, V, delta)

    return _solve(MapKind.BIDER, V, n * n * d, lambda c: BilinearMap.from_full_coordinates(n, d, c), residuals)


def _linear_solve(kind: MapKind, L: HomLieAlgebra, V: Representation, residual_fns) -> MapSpace:
    _check_inputs(L, V)
    n, d = L.dim, V.dim_v

    def residuals(f: LinearMapLV):
        for fn in residual_fns:
            yield from fn(L, V, f)

    return _solve(kind, V, n * d, lambda c: LinearMapLV.from_coordinates(n, d, c), residuals)


def solve_cent(L: HomLieAlgebra, V: Representation) -> MapSpace:
    return _linear_solve(MapKind.CENT, L, V, (centroid_residuals, twist_residuals_linear))


def solve_com(L: HomLieAlgebra, V: Representation) -> MapSpace:
    return _linear_solve(MapKind.COM, L, V, (commuting_residuals, twist_residuals_linear))


def bider_s_system(L: HomLieAlgebra, V: Representation) -> Callable[[Vector], Vector]:
    """Skew-biderivation residuals as a linear function of skew coordinates."""
    n, d = L.dim, V.dim_v
    return lambda coords: _flatten(_bider_s_residuals(L, V, BilinearMap.from_skew_coordinates(n, d, coords)))


def com_system(L: HomLieAlgebra, V: Representation) -> Callable[[Vector], Vector]:
    """Commuting-map residuals as a linear function of map coordinates."""
    n, d = L.dim, V.dim_v

    def func(coords: Vector) -> Vector:
        f = LinearMapLV.from_coordinates(n, d, coords)
        return _flatten(chain(commuting_residuals(L, V, f), twist_residuals_linear(L, V, f)))

    return func


def solve_derivations(L: HomLieAlgebra, k: int) -> MapSpace:
    """α^k-derivations: D∘α = α∘D and D[x, y] = [α^k(x), D(y)] - [α^k(y), D(x)]."""
    return _linear_solve(MapKind.DER, L, adjoint(L, k), (derivation_residuals, twist_residuals_linear))


def inner_derivation(L: HomLieAlgebra, z: Sequence, k: int) -> LinearMapLV:
    """x -> [z, α^k(x)]; an α^(k+1)-derivation whenever α(z) = z."""
    D = LinearMapLV(L.ad_matrix(z) @ L.alpha_power(k))
    if tuple(L.apply_alpha(z)) == tuple(z):
        failed = der_failures(L, adjoint(L, k + 1), D)
        if failed:
            raise ConsistencyError(f"inner derivation of a fixed element is not a derivation: {', '.join(failed)}")
    return D


# --- Central and special subspaces ---
def _bilinear_values(space: MapSpace, coords: Vector) -> List[Vector]:
    delta = space.map_from_coordinates(coords)
    n = space.algebra.dim
    return [delta.value(i, j) for i in range(n) for j in range(n)]


def _linear_values(space: MapSpace, coords: Vector) -> List[Vector]:
    f = space.map_from_coordinates(coords)
    return [f.value(i) for i in range(space.algebra.dim)]


def _restrict_values(space: MapSpace, kind: MapKind, target: SubspaceBasis,
                     vanish_on: Optional[SubspaceBasis] = None) -> MapSpace:
    equations = target.equations()
    values = _bilinear_values if space.kind.bilinear else _linear_values

    def func(coords: Vector) -> Vector:
        out = [a for v in values(space, coords) for a in equations.apply(v)]
        if vanish_on is not None:
            m = space.map_from_coordinates(coords)
            if space.kind.bilinear:
                for s, t in basis_pairs(vanish_on.dim):
                    out.extend(m.evaluate(vanish_on.vectors[s], vanish_on.vectors[t]))
            else:
                for b in vanish_on.vectors:
                    out.extend(m.apply(b))
        return tuple(out)

    out_dim = len(func((ZERO,) * space.coordinates.ambient_dim))
    return space.derive(kind, kernel_within(space.coordinates, func, out_dim))


_CENTRAL = {MapKind.BIDER_S: MapKind.CBIDER_S, MapKind.COM: MapKind.CCOM}
_SPECIAL = {MapKind.BIDER_S: MapKind.SBIDER_S, MapKind.COM: MapKind.SCOM}


def central_subspace(space: MapSpace) -> MapSpace:
    """Maps whose values lie in Z_V(L)."""
    if space.kind not in _CENTRAL:
        raise HypothesisError(f"central subspace of a {space.kind.value} space", ["kind must be bider_s or com"])
    L, V = space.algebra, space.module
    return _restrict_values(space, _CENTRAL[space.kind], annihilated(V, SubspaceBasis.full(L.dim)))


def special_subspace(space: MapSpace) -> MapSpace:
    """Maps with values in Z_V(L') that vanish on L' (on L' x L' for bilinear maps)."""
    if space.kind not in _SPECIAL:
        raise HypothesisError(f"special subspace of a {space.kind.value} space", ["kind must be bider_s or com"])
    L, V = space.algebra, space.module
    D = derived(L)
    return _restrict_values(space, _SPECIAL[space.kind], annihilated(V, D), vanish_on=D)


def solve_central_bider_s_direct(L: HomLieAlgebra, V: Representation) -> MapSpace:
    """Skew maps with the twist condition, δ(L, L') = 0 and values in Z_V(L)."""
    _check_inputs(L, V)
    n, d = L.dim, V.dim_v
    pairs = basis_pairs(n)
    equations = annihilated(V, SubspaceBasis.full(n)).equations()
    D = derived(L)

    def residuals(delta: BilinearMap):
        yield from twist_residuals_bilinear(L, V, delta, pairs)
        for i in range(n):
            for b in D.vectors:
                yield "vanishing on L'", delta.evaluate(L.basis_vector(i), b)
        for i, j in pairs:
            yield "central value", equations.apply(delta.value(i, j))

    return _solve(MapKind.CBIDER_S, V, skew_unknowns(L, V),
                  lambda c: BilinearMap.from_skew_coordinates(n, d, c), residuals)


def solve_central_com_direct(L: HomLieAlgebra, V: Representation) -> MapSpace:
    """Linear maps into Z_V(L) with β∘f = f∘α."""
    equations = annihilated(V, SubspaceBasis.full(L.dim)).equations()

    def central_values(L_: HomLieAlgebra, V_: Representation, f: LinearMapLV) -> Iterator[Residual]:
        for i in range(L_.dim):
            yield "central value", equations.apply(f.value(i))

    return _linear_solve(MapKind.CCOM, L, V, (central_values, twist_residuals_linear))


# --- Constructions between centroids and biderivations ---
def induced_biderivation(gamma: LinearMapLV, L: HomLieAlgebra, V: Representation) -> BilinearMap:
    """δ(x, y) = β^-1 γ([x, y])."""
    if not V.beta_invertible:
        raise HypothesisError("cannot induce a biderivation", ["beta is not invertible"])
    failed = cent_failures(L, V, gamma)
    if failed:
        raise HypothesisError("map is not in the centroid", failed)
    inverse = V.beta_inverse
    delta = BilinearMap.from_function(L.dim, V.dim_v, lambda i, j: inverse.apply(gamma.apply(L.bracket_basis(i, j))))
    failed = bider_s_failures(L, V, delta)
    if failed:
        raise ConsistencyError(f"centroid-induced map is not a skew biderivation: {', '.join(failed)}")
    return delta


def centroid_hypotheses(L: HomLieAlgebra, V: Representation) -> List[str]:
    """Unmet conditions for every skew biderivation to come from the centroid."""
    failed = []
    if not is_perfect(L):
        failed.append("algebra is not perfect")
    if not L.validation.alpha_surjective:
        failed.append("alpha is not surjective")
    if not V.beta_invertible:
        failed.append("beta is not invertible")
    if not annihilated(V, SubspaceBasis.full(L.dim)).is_zero():
        failed.append("Z_V(L) is nonzero")
    return failed


def centroid_from_biderivation(delta: BilinearMap, L: HomLieAlgebra, V: Representation) -> LinearMapLV:
    """γ with γ([x, y]) = β δ(x, y), defined through L = L'."""
    failed = centroid_hypotheses(L, V)
    failed += [f"not a skew biderivation: {f}" for f in bider_s_failures(L, V, delta)]
    if failed:
        raise HypothesisError("cannot build a centroid element", failed)
    n, d = L.dim, V.dim_v
    pairs = basis_pairs(n)
    brackets = Matrix.from_columns([L.bracket_basis(i, j) for i, j in pairs], rows=n)
    columns = []
    for k in range(n):
        c = solve(brackets, L.basis_vector(k))
        if c is None:
            raise ConsistencyError(f"{L.basis_names[k]} is not a sum of brackets in a perfect algebra")
        value = (ZERO,) * d
        for coefficient, (i, j) in zip(c, pairs):
            if coefficient:
                value = vec_add(value, vec_scale(V.beta.apply(delta.value(i, j)), coefficient))
        columns.append(value)
    gamma = LinearMapLV(Matrix.from_columns(columns, rows=d))
    failed = cent_failures(L, V, gamma)
    if failed:
        raise ConsistencyError(f"constructed map is not in the centroid: {', '.join(failed)}")
    inverse = V.beta_inverse
    for i, j in pairs:
        if inverse.apply(gamma.apply(L.bracket_basis(i, j))) != delta.value(i, j):
            raise ConsistencyError(f"biderivation is not induced by the constructed centroid at {basis_label(L, i, j)}")
    return gamma


def space_of_induced_biderivations(L: HomLieAlgebra, V: Representation) -> MapSpace:
    """{β^-1 γ([-, -]) : γ in Cent(L, V)} as a bider_s space."""
    cent = solve_cent(L, V)
    vectors = [induced_biderivation(g, L, V).skew_coordinates() for g in cent.basis]
    return MapSpace(MapKind.BIDER_S, V, SubspaceBasis.span(skew_unknowns(L, V), vectors))
