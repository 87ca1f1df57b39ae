"""Shifted Hankel matrices and three independent exact determinant engines.

A matrix built from ``HankelSpec(family, shift, size)`` has entries
a_{shift+i+j}; because every family is zero at negative indices, a negative
shift produces a triangle of zeros in the upper left corner.  Determinants
are computed by

* cofactor expansion (small sizes only; the independent oracle),
* fraction-free elimination (the workhorse; every interior division exact),
* iterated condensation (fails soft when an interior minor vanishes, which
  backward shifts make common).

Engines never approximate: any disagreement between them is a bug and is
raised loudly by :func:`cross_check`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

from .errors import (
    CondensationUnavailable,
    DimensionTooLarge,
    EngineDisagreement,
    IdentityViolation,
    NonExactDivision,
)
from .ring import Poly, Series
from .sequences import SequenceFamily

COFACTOR = "cofactor"
BAREISS = "bareiss"
CONDENSATION = "condensation"
AUTO = "auto"

ENGINES = (COFACTOR, BAREISS, CONDENSATION)

#: Cofactor expansion is the cross-check oracle, not a production engine.
COFACTOR_LIMIT = 8


@dataclass(frozen=True)
class HankelSpec:
    """A determinant request: family, diagonal shift (may be negative), size."""

    family: SequenceFamily
    shift: int
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("size must be >= 0")


class Matrix:
    """Immutable square grid of Poly entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Poly]]) -> None:
        grid = tuple(tuple(row) for row in rows)
        for row in grid:
            if len(row) != len(grid):
                raise ValueError("matrix must be square")
        self.rows = grid

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    @property
    def all_constant(self) -> bool:
        return all(e.is_constant for row in self.rows for e in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"Matrix({self.n}x{self.n}: {body})"


@dataclass(frozen=True)
class DetResult:
    """Exact determinant value plus which engine produced it."""

    value: Poly
    engine: str
    spec: HankelSpec


def build(spec: HankelSpec) -> Matrix:
    """Materialize the Hankel matrix (a_{shift+i+j})_{i,j=0..size-1}."""
    family, shift, n = spec.family, spec.shift, spec.size
    band = [family.term(shift + s) for s in range(max(0, 2 * n - 1))]
    return Matrix([[band[i + j] for j in range(n)] for i in range(n)])


def det_cofactor(matrix: Matrix) -> Poly:
    """Laplace expansion along the first rows, memoized on column subsets.

    Guarded to 8x8: the subset table has 2^n entries and this engine exists
    only to cross-check the others.
    """
    n = matrix.n
    if n > COFACTOR_LIMIT:
        raise DimensionTooLarge(f"cofactor expansion guarded to {COFACTOR_LIMIT}x{COFACTOR_LIMIT}, got {n}")
    if n == 0:
        return Poly.const(1)
    cache: dict[tuple[int, ...], Poly] = {}

    def expand(cols: tuple[int, ...]) -> Poly:
        row = n - len(cols)
        if len(cols) == 1:
            return matrix.entry(row, cols[0])
        cached = cache.get(cols)
        if cached is not None:
            return cached
        acc = Poly()
        for pos, col in enumerate(cols):
            pivot = matrix.entry(row, col)
            if pivot.is_zero:
                continue
            sub = expand(cols[:pos] + cols[pos + 1:])
            prod = pivot * sub
            acc = acc - prod if pos & 1 else acc + prod
        cache[cols] = acc
        return acc

    return expand(tuple(range(n)))


T = TypeVar("T")


def _eliminate(grid: list[list[T]], one: T, zero: T,
               exact_div: Callable[[T, T], T]) -> T:
    """Fraction-free elimination over any exact ring; returns the determinant."""
    n = len(grid)
    sign = 1
    prev = one
    for k in range(n - 1):
        if grid[k][k] == zero:
            for r in range(k + 1, n):
                if grid[r][k] != zero:
                    grid[k], grid[r] = grid[r], grid[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = grid[k][k]
        for i in range(k + 1, n):
            row_i, lead = grid[i], grid[i][k]
            row_k = grid[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(pivot * row_i[j] - lead * row_k[j], prev)
        prev = pivot
    result = grid[-1][-1]
    return result if sign == 1 else -result


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise NonExactDivision(f"{a} is not divisible by {b}")
    return q


def _bareiss_int(matrix: Matrix) -> Poly:
    grid = [[e.constant for e in row] for row in matrix.rows]
    return Poly.const(_eliminate(grid, 1, 0, _int_exact_div))


def _bareiss_poly(matrix: Matrix) -> Poly:
    grid = [list(row) for row in matrix.rows]
    return _eliminate(grid, Poly.const(1), Poly(), lambda a, b: a.exact_div(b))


def det_bareiss(matrix: Matrix) -> Poly:
    """Exact determinant by fraction-free elimination.

    All-constant matrices take a pure-int path; the generic path runs the
    identical algorithm over Poly, and the two are tested bit-identical.
    """
    if matrix.n == 0:
        return Poly.const(1)
    if matrix.all_constant:
        return _bareiss_int(matrix)
    return _bareiss_poly(matrix)


def det_condensation(matrix: Matrix) -> Poly | None:
    """Exact determinant by iterated condensation, or None when blocked.

    Each layer entry is a contiguous minor of the original matrix, computed
    as a 2x2 determinant of the previous layer divided by the interior of
    the layer before that.  A zero interior minor makes the exact division
    impossible; that is reported as unavailability, never as an error.
    """
    n = matrix.n
    if n == 0:
        return Poly.const(1)
    one = Poly.const(1)
    prev = [[one] * (n + 1) for _ in range(n + 1)]
    cur = [list(row) for row in matrix.rows]
    while len(cur) > 1:
        m = len(cur) - 1
        nxt = []
        for i in range(m):
            row = []
            for j in range(m):
                divisor = prev[i + 1][j + 1]
                if divisor.is_zero:
                    return None
                num = cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j]
                row.append(num.exact_div(divisor))
            nxt.append(row)
        prev, cur = cur, nxt
    return cur[0][0]


def det(spec: HankelSpec, engine: str = AUTO) -> DetResult:
    """Determinant of the matrix a spec denotes.

    The default dispatch prefers condensation and falls back to elimination
    when a zero interior minor blocks it; naming one of the engines forces
    that engine (condensation then raises if unavailable).
    """
    matrix = build(spec)
    if engine == AUTO:
        value = det_condensation(matrix)
        if value is not None:
            return DetResult(value, CONDENSATION, spec)
        return DetResult(det_bareiss(matrix), BAREISS, spec)
    if engine == BAREISS:
        return DetResult(det_bareiss(matrix), BAREISS, spec)
    if engine == COFACTOR:
        return DetResult(det_cofactor(matrix), COFACTOR, spec)
    if engine == CONDENSATION:
        value = det_condensation(matrix)
        if value is None:
            raise CondensationUnavailable(f"zero interior minor while condensing {spec}")
        return DetResult(value, CONDENSATION, spec)
    raise ValueError(f"unknown engine {engine!r}")


def cross_check(spec: HankelSpec) -> DetResult:
    """Run every applicable engine on one spec and insist on exact agreement."""
    matrix = build(spec)
    results: dict[str, Poly] = {BAREISS: det_bareiss(matrix)}
    if spec.size <= COFACTOR_LIMIT:
        results[COFACTOR] = det_cofactor(matrix)
    cond = det_condensation(matrix)
    if cond is not None:
        results[CONDENSATION] = cond
    if len(set(results.values())) > 1:
        shown = {name: str(value) for name, value in results.items()}
        raise EngineDisagreement(f"engines disagree on {spec}: {shown}", results)
    engine = CONDENSATION if cond is not None else BAREISS
    return DetResult(results[engine], engine, spec)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = a.n
    rows = []
    for i in range(n):
        row = []
        for k in range(n):
            acc = Poly()
            for j in range(n):
                x = a.entry(i, j)
                if not x.is_zero:
                    acc = acc + x * b.entry(j, k)
            row.append(acc)
        rows.append(row)
    return Matrix(rows)


def backshift_toeplitz_product(a: Series, b: Series, n: int) -> Matrix:
    """Multiply the full backward-shift matrix of ``a`` by the mirrored band
    matrix of ``b`` and check the result against their product series.

    With zero extension for negative indices, (a(i+j-n)) * (b(n-j-k)) must
    equal the lower triangular Toeplitz matrix (c(i-k)) with c = a*b.  The
    product matrix is returned; a mismatch means the zero-extension
    bookkeeping is broken somewhere and raises IdentityViolation.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    c = a * b
    if c.order < n + 1:
        raise ValueError("both series must be computed to order >= n+1")

    def coeff(series: Series, i: int) -> Poly:
        return series[i] if 0 <= i < series.order else Poly()

    lhs = Matrix([[coeff(a, i + j - n) for j in range(n + 1)] for i in range(n + 1)])
    rhs = Matrix([[coeff(b, n - j - k) for k in range(n + 1)] for j in range(n + 1)])
    product = _matmul(lhs, rhs)
    toeplitz = Matrix([[coeff(c, i - k) if i >= k else Poly() for k in range(n + 1)]
                       for i in range(n + 1)])
    if product != toeplitz:
        raise IdentityViolation("shift/band product is not the Toeplitz matrix of a*b")
    return product
