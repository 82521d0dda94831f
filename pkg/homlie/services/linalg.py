"""Exact rational linear algebra.

Scalars are `fractions.Fraction` (always in lowest terms, positive denominator).
Vectors are tuples of Fractions. `Matrix` is an immutable dense row-major matrix and
`SubspaceBasis` holds a subspace through its canonical reduced row-echelon basis, so two
subspaces are equal exactly when their `SubspaceBasis` values compare equal.
"""
import logging
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from ..errors import DimensionMismatchError, HypothesisError, ParseError

logger = logging.getLogger(__name__)

Scalar = Fraction
Vector = Tuple[Fraction, ...]
RationalLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


# --- Scalars ---
def parse_rational(text: str, path: str = "") -> Fraction:
    """Parses "p" or "p/q" (optional leading '-'). Decimal notation is rejected."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ParseError(f"expected a rational string 'p' or 'p/q', got {text!r}", path)
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise ParseError(f"zero denominator in {text!r}", path)
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: RationalLike) -> str:
    q = to_scalar(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def to_scalar(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


# --- Vectors ---
def to_vector(values: Iterable[RationalLike]) -> Vector:
    return tuple(to_scalar(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def _check_same_length(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths differ: {len(u)} != {len(v)}")


def vec_add(u: Vector, v: Vector) -> Vector:
    _check_same_length(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    _check_same_length(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(v: Vector, s: RationalLike) -> Vector:
    s = to_scalar(s)
    return tuple(a * s for a in v)


def vec_is_zero(v: Iterable[Fraction]) -> bool:
    return all(a == 0 for a in v)


def dot(u: Vector, v: Vector) -> Fraction:
    _check_same_length(u, v)
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def linear_combination(coefficients: Sequence[Fraction], vectors: Sequence[Vector], n: int) -> Vector:
    if len(coefficients) != len(vectors):
        raise DimensionMismatchError("coefficient count does not match vector count")
    out = [ZERO] * n
    for c, v in zip(coefficients, vectors):
        if c == 0:
            continue
        if len(v) != n:
            raise DimensionMismatchError(f"expected vectors of length {n}, got {len(v)}")
        for i, a in enumerate(v):
            if a:
                out[i] += c * a
    return tuple(out)


def random_vector(rng: random.Random, n: int, bound: int = 3) -> Vector:
    """Small-integer pseudo-random vector; deterministic for a seeded `rng`."""
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))


# --- Matrices ---
@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix of Fractions stored row-major."""
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # Construction
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: Optional[int] = None) -> "Matrix":
        rows = list(rows)
        if cols is None:
            if not rows:
                raise DimensionMismatchError("column count is required for a matrix without rows")
            cols = len(rows[0])
        entries: List[Fraction] = []
        for r, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionMismatchError(f"row {r} has {len(row)} entries, expected {cols}")
            entries.extend(to_scalar(x) for x in row)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: Optional[int] = None) -> "Matrix":
        columns = list(columns)
        if rows is None:
            if not columns:
                raise DimensionMismatchError("row count is required for a matrix without columns")
            rows = len(columns[0])
        for c, column in enumerate(columns):
            if len(column) != rows:
                raise DimensionMismatchError(f"column {c} has {len(column)} entries, expected {rows}")
        entries = tuple(to_scalar(columns[j][i]) for i in range(rows) for j in range(len(columns)))
        return cls(rows, len(columns), entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @staticmethod
    def vstack(matrices: Sequence["Matrix"], cols: int) -> "Matrix":
        entries: List[Fraction] = []
        rows = 0
        for m in matrices:
            if m.cols != cols:
                raise DimensionMismatchError(f"cannot stack a matrix with {m.cols} columns onto {cols}")
            entries.extend(m.entries)
            rows += m.rows
        return Matrix(rows, cols, tuple(entries))

    # Access
    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return vec_is_zero(self.entries)

    # Arithmetic
    def _check_shape(self, other: "Matrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, s: RationalLike) -> "Matrix":
        s = to_scalar(s)
        return Matrix(self.rows, self.cols, tuple(a * s for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = [ZERO] * (self.rows * other.cols)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self.entries[i * self.cols + k]
                if not a:
                    continue
                base = k * other.cols
                for j in range(other.cols):
                    b = other.entries[base + j]
                    if b:
                        out[i * other.cols + j] += a * b
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError(f"cannot apply a {self.rows}x{self.cols} matrix to a vector of length {len(v)}")
        out = [ZERO] * self.rows
        for j, x in enumerate(v):
            if not x:
                continue
            for i in range(self.rows):
                a = self.entries[i * self.cols + j]
                if a:
                    out[i] += a * x
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def rank(self) -> int:
        return len(rref(self)[1])

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    def is_surjective(self) -> bool:
        return self.rank() == self.rows

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatchError("only square matrices can be inverted")
        n = self.rows
        augmented = Matrix.from_rows(
            [list(self.row(i)) + list(unit_vector(n, i)) for i in range(n)], cols=2 * n
        )
        reduced, pivots = rref(augmented)
        if pivots[:n] != list(range(n)):
            raise HypothesisError("matrix is singular")
        return Matrix.from_rows([reduced.row(i)[n:] for i in range(n)], cols=n)

    def power(self, k: int) -> "Matrix":
        """k-th power; negative k requires an invertible matrix."""
        if not self.is_square:
            raise DimensionMismatchError("only square matrices have powers")
        base = self if k >= 0 else self.inverse()
        result = Matrix.identity(self.rows)
        for _ in range(abs(k)):
            result = result @ base
        return result


# --- Echelon forms ---
def rref(m: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row-echelon form and its pivot columns."""
    a = m.to_rows()
    pivots: List[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        if pv != 1:
            a[r] = [x / pv for x in a[r]]
        pivot_row = a[r]
        for i in range(m.rows):
            f = a[i][c]
            if i != r and f != 0:
                a[i] = [x - f * y if y else x for x, y in zip(a[i], pivot_row)]
        pivots.append(c)
        r += 1
    return Matrix.from_rows(a, cols=m.cols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix) -> "SubspaceBasis":
    """Canonical basis of {v : m v = 0}."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced[r, free]
        basis.append(tuple(v))
    logger.debug(f"nullspace: {m.rows}x{m.cols} system, rank {len(pivots)}, nullity {len(basis)}")
    return SubspaceBasis.span(m.cols, basis)


def solve(m: Matrix, b: Sequence[RationalLike]) -> Optional[Vector]:
    """One solution of m x = b with free variables set to zero, or None if inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatchError(f"right-hand side has length {len(b)}, expected {m.rows}")
    augmented = Matrix.from_rows(
        [list(m.row(i)) + [to_scalar(b[i])] for i in range(m.rows)], cols=m.cols + 1
    )
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced[r, m.cols]
    return tuple(x)


def matrix_of_linear_map(func: Callable[[Vector], Sequence[Fraction]], in_dim: int, out_dim: int) -> Matrix:
    """Matrix whose column t is func(e_t)."""
    columns = []
    for t in range(in_dim):
        image = tuple(func(unit_vector(in_dim, t)))
        if len(image) != out_dim:
            raise DimensionMismatchError(f"linear map produced {len(image)} coordinates, expected {out_dim}")
        columns.append(image)
    if not columns:
        return Matrix.zeros(out_dim, 0)
    return Matrix.from_columns(columns, rows=out_dim)


# --- Subspaces ---
@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of F^ambient_dim held by its reduced row-echelon basis."""
    ambient_dim: int
    vectors: Tuple[Vector, ...]

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence[RationalLike]]) -> "SubspaceBasis":
        rows = [to_vector(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"vector of length {len(v)} in a space of dimension {ambient_dim}")
        if not rows:
            return cls(ambient_dim, ())
        reduced, pivots = rref(Matrix.from_rows(rows, cols=ambient_dim))
        return cls(ambient_dim, tuple(reduced.row(i) for i in range(len(pivots))))

    @classmethod
    def zero(cls, n: int) -> "SubspaceBasis":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "SubspaceBasis":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def pivots(self) -> List[int]:
        return [next(i for i, a in enumerate(v) if a != 0) for v in self.vectors]

    def is_zero(self) -> bool:
        return not self.vectors

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def as_matrix(self) -> Matrix:
        """Basis vectors as rows."""
        return Matrix(self.dim, self.ambient_dim, tuple(a for v in self.vectors for a in v))

    def complement_indices(self) -> List[int]:
        """Coordinates that are not pivots; their unit vectors span a complement."""
        pivot_set = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in pivot_set]

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Normal form of v modulo the subspace (pivot coordinates cleared)."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} in a space of dimension {self.ambient_dim}")
        w = list(v)
        for row, p in zip(self.vectors, self.pivots):
            c = w[p]
            if c:
                w = [x - c * y if y else x for x, y in zip(w, row)]
        return tuple(w)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return vec_is_zero(self.reduce(v))

    def coordinates(self, v: Sequence[Fraction]) -> Vector:
        """Coefficients of v in this basis. v must lie in the subspace."""
        if not self.contains(v):
            raise DimensionMismatchError("vector does not lie in the subspace")
        return tuple(v[p] for p in self.pivots)

    def combine(self, coefficients: Sequence[Fraction]) -> Vector:
        return linear_combination(coefficients, self.vectors, self.ambient_dim)

    def equations(self) -> Matrix:
        """A matrix whose nullspace is exactly this subspace."""
        normals = nullspace(self.as_matrix())
        return normals.as_matrix()

    def is_subspace_of(self, other: "SubspaceBasis") -> bool:
        _check_ambient(self, other)
        return all(other.contains(v) for v in self.vectors)

    def intersect(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return subspace_intersect(self, other)

    def __add__(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return subspace_sum(self, other)


def _check_ambient(a: SubspaceBasis, b: SubspaceBasis):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(f"ambient dimensions differ: {a.ambient_dim} != {b.ambient_dim}")


def subspace_intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    _check_ambient(a, b)
    stacked = Matrix.vstack([a.equations(), b.equations()], a.ambient_dim)
    return nullspace(stacked)


def subspace_sum(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    _check_ambient(a, b)
    return SubspaceBasis.span(a.ambient_dim, a.vectors + b.vectors)


def subspace_contains(a: SubspaceBasis, v: Sequence[Fraction]) -> bool:
    return a.contains(v)


def kernel_within(space: SubspaceBasis, func: Callable[[Vector], Sequence[Fraction]], out_dim: int) -> SubspaceBasis:
    """{v in space : func(v) = 0} for a linear func, in canonical form."""
    if space.is_zero():
        return space
    columns = [tuple(func(v)) for v in space.vectors]
    for image in columns:
        if len(image) != out_dim:
            raise DimensionMismatchError(f"linear map produced {len(image)} coordinates, expected {out_dim}")
    coefficients = nullspace(Matrix.from_columns(columns, rows=out_dim))
    return SubspaceBasis.span(space.ambient_dim, [space.combine(c) for c in coefficients.vectors])


def image_of(space: SubspaceBasis, func: Callable[[Vector], Sequence[Fraction]], out_dim: int) -> SubspaceBasis:
    return SubspaceBasis.span(out_dim, [tuple(func(v)) for v in space.vectors])
