"""Closed-form values for shifted Hankel determinants.

The forward-shift Catalan determinant has the product formula implemented
by :func:`forward_catalan_det`, valid at negative arguments as well, where
it predicts the backward-shift determinants.  The Narayana analogue has no
known product formula; it is pinned down by a three-term recursion
(:func:`narayana_forward_det_recursive`) and, independently, by an actual
determinant (:func:`narayana_forward_det`).  Keeping both routes alive is
deliberate: they cross-validate each other in the test suite.

Predictions returned by :func:`predict_backward` never evaluate the
determinant they predict; that independence is what makes the verification
grids meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import hankel
from .errors import NonIntegerResult, UnsupportedFamily, ZeroDivisorEncountered
from .ring import Poly, sign_choose2
from .sequences import (
    Catalan,
    CentralBinomial,
    MNumbers,
    NarayanaB,
    NarayanaC,
    SequenceFamily,
    narayana_polynomial,
)


def forward_catalan_det(m: int, n: int) -> int:
    """Product formula prod_{1<=i<=j<=m-1} (2n+i+j)/(i+j) as an exact int.

    Empty product (hence 1) for m <= 1.  n may be negative; the product is
    evaluated over rationals and asserted integral, which it always is at
    integer arguments.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    acc = Fraction(1)
    for i in range(1, m):
        for j in range(i, m):
            acc *= Fraction(2 * n + i + j, i + j)
    if acc.denominator != 1:
        raise NonIntegerResult(f"forward_catalan_det({m}, {n}) evaluated to {acc}")
    return int(acc)


def reflection_check(m: int, n: int) -> bool:
    """Does the value at -n equal the signed value at n-m-1?

    Checks forward_catalan_det(m+1, -n) == (-1)^C(m+1,2) *
    forward_catalan_det(m+1, n-m-1); requires n >= m+1 >= 2.
    """
    if m < 1 or n < m + 1:
        raise ValueError("requires m >= 1 and n >= m+1")
    return forward_catalan_det(m + 1, -n) == (
        sign_choose2(m + 1) * forward_catalan_det(m + 1, n - m - 1)
    )


def narayana_forward_det(m: int, n: int) -> Poly:
    """Forward-shift Hankel determinant of the Narayana polynomials.

    This is the designated bridge for t-polynomial predictions: it computes
    a genuine determinant, but always of a forward shift, never of the
    backward matrix a prediction will be compared against.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be >= 0")
    return hankel.det(hankel.HankelSpec(NarayanaC(), m, n)).value


def narayana_forward_det_recursive(m: int, n: int) -> Poly:
    """Same values as :func:`narayana_forward_det`, from the condensation
    recursion instead of a matrix.

    Column 0 is all ones, column 1 holds the Narayana polynomials, and
    column n at row m needs rows up to m + 2(n-1) of the earlier columns,
    so the table is a wedge whose extent is known up front.  Every division
    is exact and every divisor nonzero; a vanishing divisor would falsify
    the nonvanishing of these determinants and is raised, never masked.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be >= 0")
    if n == 0:
        return Poly.const(1)
    top = m + 2 * (n - 1)
    col_before = {r: Poly.const(1) for r in range(top + 3)}
    col = {r: narayana_polynomial(r) for r in range(top + 3)}
    for c in range(2, n + 1):
        limit = m + 2 * (n - c)
        nxt: dict[int, Poly] = {}
        for r in range(limit + 1):
            divisor = col_before[r + 2]
            if divisor.is_zero:
                raise ZeroDivisorEncountered(
                    f"table entry (m={r + 2}, n={c - 2}) vanished; "
                    "the recursion requires it nonzero"
                )
            numerator = col[r] * col[r + 2] - col[r + 1] ** 2
            nxt[r] = numerator.exact_div(divisor)
        col_before, col = col, nxt
    return col[m]


@dataclass(frozen=True)
class Prediction:
    """A closed-form determinant value, tagged with the spec it predicts."""

    spec: hankel.HankelSpec
    value: Poly
    source: str


def predict_backward(family: SequenceFamily, m: int, n: int) -> Prediction:
    """Closed-form value of the size-n backward determinant at shift -m.

    Shape shared by all supported families: 1 at n=0, then m zeros, then a
    signed, scaled copy of the forward-shift value at n-m-1.  The t-families
    scale by t^(n-m-1) (type B additionally by 2^(n-m-1)) and use the
    recursion route, so no backward determinant is ever consulted.
    """
    if m < 1:
        raise ValueError("backward shift magnitude m must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    spec = hankel.HankelSpec(family, -m, n)
    source = f"backshift closed form [{family.label}]"
    if n == 0:
        return Prediction(spec, Poly.const(1), source)
    if n <= m:
        return Prediction(spec, Poly(), source)
    r = n - m - 1
    sign = sign_choose2(m + 1)
    if isinstance(family, (Catalan, MNumbers)):
        value = Poly.const(sign * forward_catalan_det(m + 1, r))
    elif isinstance(family, CentralBinomial):
        value = Poly.const(sign * 2 ** r * forward_catalan_det(m + 1, r))
    elif isinstance(family, NarayanaC):
        value = Poly.monomial(r, sign) * narayana_forward_det_recursive(m + 1, r)
    elif isinstance(family, NarayanaB):
        value = Poly.monomial(r, sign * 2 ** r) * narayana_forward_det_recursive(m + 1, r)
    else:
        raise UnsupportedFamily(
            f"no proven backward closed form for {family.label}; "
            "convolution powers are covered by the conjecture checks instead"
        )
    return Prediction(spec, value, source)
