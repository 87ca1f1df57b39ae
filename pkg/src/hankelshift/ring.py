"""Exact scalar, polynomial and truncated power-series arithmetic.

Scalars are plain Python ints (arbitrary precision), rationals are
``fractions.Fraction`` (always lowest terms, positive denominator),
polynomials are dense integer-coefficient polynomials in ``t``, and series
are truncated formal power series in ``x`` whose coefficients are
polynomials.  Nothing in this module ever rounds: a division either
succeeds exactly or raises :class:`~hankelshift.errors.NonExactDivision`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import NonExactDivision, NonUnitConstantTerm

# Aliases documenting intent; Python ints/Fractions already satisfy the
# exactness invariants (no overflow, lowest terms, positive denominator).
ExactInt = int
Rational = Fraction

#: Default truncation length for generating series.
DEFAULT_SERIES_ORDER = 64


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the combinatorial out-of-range convention.

    Returns 0 for ``k < 0`` and for ``k > n >= 0``.  A negative upper index
    uses the generalized definition n(n-1)...(n-k+1)/k!, so for example
    ``binomial(-1, k) == (-1)**k``.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** (k & 1) * math.comb(k - n - 1, k)


def choose2_parity(n: int) -> int:
    """Parity of C(n, 2), which is even exactly when n is 0 or 1 mod 4."""
    return 0 if n % 4 in (0, 1) else 1


def sign_choose2(n: int) -> int:
    """(-1)**C(n, 2), computed from n mod 4 instead of the exponent itself."""
    return -1 if choose2_parity(n) else 1


class _MinusInfinity:
    """Degree of the zero polynomial: compares below every integer."""

    __slots__ = ()

    def __lt__(self, other):
        return other is not MINUS_INFINITY

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is MINUS_INFINITY

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-infinity"


#: Singleton degree of the zero polynomial; never a number.
MINUS_INFINITY = _MinusInfinity()


class Poly:
    """Dense polynomial in ``t`` over the integers.

    Coefficients are stored ascending by degree with no trailing zeros, so
    equal polynomials have identical coefficient tuples; the empty tuple is
    the zero polynomial.  Instances are immutable and hashable, and constant
    polynomials compare and hash equal to the corresponding int.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Poly:
        """The polynomial ``coeff * t**degree``."""
        if degree < 0:
            raise ValueError("degree must be >= 0")
        if coeff == 0:
            return cls()
        return cls((0,) * degree + (coeff,))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def constant(self) -> int:
        """Coefficient of t^0 (the whole value for constant polynomials)."""
        return self.coeffs[0] if self.coeffs else 0

    @property
    def degree(self):
        """Degree as an int, or the MINUS_INFINITY sentinel for zero."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly((other,))
        return None

    def __add__(self, other) -> Poly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> Poly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> Poly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> Poly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly()
        if len(a) == 1 and len(b) == 1:
            return Poly((a[0] * b[0],))
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other: Poly) -> Poly:
        """Quotient q with q * other == self; raises if no such q exists."""
        if not isinstance(other, Poly):
            other = Poly._coerce(other)
        if other is None or other.is_zero:
            raise NonExactDivision("division by the zero polynomial")
        if self.is_zero:
            return Poly()
        if len(self.coeffs) < len(other.coeffs):
            raise NonExactDivision(f"({self}) is not divisible by ({other})")
        rem = list(self.coeffs)
        blen = len(other.coeffs)
        lead = other.coeffs[-1]
        qlen = len(rem) - blen + 1
        quot = [0] * qlen
        for i in reversed(range(qlen)):
            c = rem[i + blen - 1]
            if c % lead:
                raise NonExactDivision(f"({self}) is not divisible by ({other})")
            q = c // lead
            quot[i] = q
            if q:
                for j, bc in enumerate(other.coeffs):
                    rem[i + j] -= q * bc
        if any(rem):
            raise NonExactDivision(f"({self}) is not divisible by ({other})")
        return Poly(quot)

    def __call__(self, x: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.is_constant and self.constant == other
        return NotImplemented

    def __hash__(self) -> int:
        # Constant polynomials hash like the underlying int so that the
        # int-equality above stays consistent with hashing.
        if self.is_constant:
            return hash(self.constant)
        return hash(self.coeffs)

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        """Canonical string: ascending degree, explicit '*', e.g. 1+3*t+t^2."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            a = abs(c)
            if d == 0:
                body = str(a)
            else:
                var = "t" if d == 1 else f"t^{d}"
                body = var if a == 1 else f"{a}*{var}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"

    _TERM = re.compile(r"([+-]?)(?:(\d+)\*?)?(t(?:\^(\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> Poly:
        """Inverse of str(): accepts the canonical form, ignoring spaces."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            sign, num, var, exp = m.groups()
            if num is None and var is None:
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            c = int(num) if num is not None else 1
            if sign == "-":
                c = -c
            d = 0 if var is None else (1 if exp is None else int(exp))
            coeffs[d] = coeffs.get(d, 0) + c
            pos = m.end()
        out = [0] * (max(coeffs) + 1)
        for d, c in coeffs.items():
            out[d] = c
        return cls(out)


class Series:
    """Formal power series in ``x`` truncated to a fixed order.

    ``coeffs[n]`` is the :class:`Poly` coefficient of x^n for
    0 <= n < order; every slot is stored explicitly (possibly zero).
    Binary operations truncate the result to the shorter operand, so a
    result is trustworthy exactly up to its own order.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Poly, ...]

    def __init__(self, coeffs: Iterable[Poly | int], order: int | None = None) -> None:
        cs = [c if isinstance(c, Poly) else Poly.const(c) for c in coeffs]
        if order is not None:
            if order < 1:
                raise ValueError("series order must be >= 1")
            cs = cs[:order]
            cs.extend(Poly() for _ in range(order - len(cs)))
        if not cs:
            raise ValueError("a series needs at least one coefficient")
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int = DEFAULT_SERIES_ORDER) -> Series:
        return cls([1], order=order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def constant_term(self) -> Poly:
        return self.coeffs[0]

    def __getitem__(self, n: int) -> Poly:
        if not 0 <= n < len(self.coeffs):
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[:order])

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Series) -> Series:
        n = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    def __sub__(self, other: Series) -> Series:
        n = min(self.order, other.order)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(n)])

    def __mul__(self, other: Series) -> Series:
        n = min(self.order, other.order)
        out = [Poly() for _ in range(n)]
        for i in range(n):
            a = self.coeffs[i]
            if a.is_zero:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return Series(out)

    def scale(self, factor: Poly | int) -> Series:
        """Multiply every coefficient by a fixed polynomial or integer."""
        return Series([c * factor for c in self.coeffs])

    def mul_x(self) -> Series:
        """Multiply by x, keeping the truncation order."""
        return Series((Poly(),) + self.coeffs[:-1])

    def reciprocal(self) -> Series:
        """Series b with self * b == 1 up to the truncation order.

        Requires the constant term to be the unit polynomial +1 or -1.
        """
        c0 = self.coeffs[0]
        if c0.coeffs not in ((1,), (-1,)):
            raise NonUnitConstantTerm(f"constant term {c0} is not a unit")
        inv0 = c0  # +-1 is its own inverse
        out = [inv0]
        for n in range(1, self.order):
            acc = Poly()
            for i in range(1, n + 1):
                a = self.coeffs[i]
                if not a.is_zero:
                    acc = acc + a * out[n - i]
            out.append(-(inv0 * acc))
        return Series(out)

    def pow(self, k: int) -> Series:
        """k-th power by repeated exact multiplication, k >= 1."""
        if k < 1:
            raise ValueError("exponent must be >= 1")
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    __pow__ = pow

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            cs = str(c)
            if n == 0:
                parts.append(cs)
                continue
            var = "x" if n == 1 else f"x^{n}"
            if cs == "1":
                body = var
            elif cs == "-1":
                body = f"-{var}"
            elif len(c.coeffs) == 1:
                body = f"{cs}*{var}"
            else:
                body = f"({cs})*{var}"
            parts.append(body)
        shown = " + ".join(parts) if parts else "0"
        return f"{shown} + O(x^{self.order})"

    def __repr__(self) -> str:
        return f"Series(order={self.order}, {self})"
