"""Machine verification of determinant claims over explicit finite grids.

Each claim pairs a closed-form (or cross-determinant) expectation with an
actually computed Hankel determinant, cell by cell.  Expected and actual
values never share a code path: expectations come from
:mod:`hankelshift.closed_forms` or from determinants of *different* specs
when the claim itself relates two determinants.

Proven claims (ids ``t1``, ``t6``, ``t7``, ``t9``, ``t8``) must pass on any
grid; a failing cell there is a bug.  The conjectured claims (``c10``,
``c11``, ``c12``, ``patterns``) are range checks only, and their reports say
so explicitly: agreement over a finite grid proves nothing beyond it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import closed_forms, hankel
from .errors import IdentityViolation, NonIntegerResult
from .ring import Poly, choose2_parity, sign_choose2
from .sequences import (
    Catalan,
    CentralBinomial,
    ConvCatalan,
    MNumbers,
    NarayanaB,
    NarayanaC,
)

THEOREM_CLAIMS = ("t1", "t6", "t7", "t8", "t9")
CONJECTURE_CLAIMS = ("c10", "c11", "c12", "patterns")
ALL_CLAIMS = THEOREM_CLAIMS + CONJECTURE_CLAIMS

CLAIM_SUMMARIES = {
    "t1": "backward Catalan determinants equal the reflected product formula",
    "t6": "backward M-number determinants are b-independent and equal the Catalan ones",
    "t7": "backward central-binomial determinants carry an extra factor 2^(n-m-1)",
    "t8": "backward Narayana determinants equal signed t-power times forward values",
    "t9": "backward type-B Narayana determinants scale the same way by (2t)^(n-m-1)",
    "c10": "backward convolution-power determinants mirror forward ones (conjecture)",
    "c11": "diagonal convolution-power determinants are unit/zero periodic (conjecture)",
    "c12": "near-diagonal convolution-power determinants grow like (n+1)^m (conjecture)",
    "patterns": "order-k convolution determinants at shift 0 follow modular patterns (conjecture)",
}

_PATTERN_ORDERS = (3, 4, 5, 6, 7)


@dataclass(frozen=True)
class GridRange:
    """Explicit finite parameter grid; every bound is echoed in the report."""

    m_min: int = 0
    m_max: int = 0
    n_max: int = 0
    k_list: tuple[int, ...] = ()
    b_list: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "m_min": self.m_min,
            "m_max": self.m_max,
            "n_max": self.n_max,
            "k_list": list(self.k_list),
            "b_list": list(self.b_list),
        }

    @classmethod
    def from_dict(cls, data: dict) -> GridRange:
        return cls(
            m_min=data["m_min"],
            m_max=data["m_max"],
            n_max=data["n_max"],
            k_list=tuple(data["k_list"]),
            b_list=tuple(data["b_list"]),
        )


_PARAM_ORDER = ("k", "b", "m", "n")


def _params(k: int | None = None, b: int | None = None,
            m: int | None = None, n: int | None = None) -> tuple[tuple[str, int], ...]:
    pairs = []
    for name, value in zip(_PARAM_ORDER, (k, b, m, n)):
        if value is not None:
            pairs.append((name, value))
    return tuple(pairs)


@dataclass(frozen=True)
class Cell:
    """One grid point: expectation against computed determinant."""

    params: tuple[tuple[str, int], ...]
    expected: Poly
    actual: Poly

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def param(self, name: str) -> int | None:
        return dict(self.params).get(name)

    def sort_key(self) -> tuple[int, int, int, int]:
        d = dict(self.params)
        return tuple(d.get(name, 0) for name in _PARAM_ORDER)

    def to_dict(self) -> dict:
        return {
            "params": dict(self.params),
            "expected": str(self.expected),
            "actual": str(self.actual),
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Cell:
        params = tuple(
            (name, data["params"][name])
            for name in _PARAM_ORDER
            if name in data["params"]
        )
        return cls(params, Poly.parse(data["expected"]), Poly.parse(data["actual"]))


@dataclass(frozen=True)
class Report:
    """Outcome of checking one claim over one grid."""

    claim_id: str
    range: GridRange
    cells: tuple[Cell, ...]

    @property
    def all_pass(self) -> bool:
        return all(cell.passed for cell in self.cells)

    @property
    def counterexamples(self) -> tuple[Cell, ...]:
        return tuple(cell for cell in self.cells if not cell.passed)

    @property
    def is_theorem(self) -> bool:
        return self.claim_id in THEOREM_CLAIMS

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "range": self.range.to_dict(),
            "cells": [cell.to_dict() for cell in self.cells],
            "all_pass": self.all_pass,
            "counterexamples": [cell.to_dict() for cell in self.counterexamples],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> Report:
        return cls(
            claim_id=data["claim_id"],
            range=GridRange.from_dict(data["range"]),
            cells=tuple(Cell.from_dict(c) for c in data["cells"]),
        )

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def render_text(self) -> str:
        g = self.range
        verdict = "PASS" if self.all_pass else "FAIL"
        lines = [f"claim {self.claim_id}: {verdict} ({len(self.cells)} cells)"]
        summary = CLAIM_SUMMARIES.get(self.claim_id)
        if summary:
            lines.append(f"claim: {summary}")
        bounds = [f"m in [{g.m_min}, {g.m_max}]", f"n <= {g.n_max}"]
        if g.k_list:
            bounds.append(f"k in {list(g.k_list)}")
        if g.b_list:
            bounds.append(f"b in {list(g.b_list)}")
        lines.append("range: " + ", ".join(bounds))
        if not self.is_theorem:
            lines.append(
                "note: conjecture checked over the stated finite range only; "
                "agreement here is evidence, not proof."
            )
        if self.counterexamples:
            lines.append(f"counterexamples ({len(self.counterexamples)}):")
            for cell in self.counterexamples:
                shown = ", ".join(f"{k}={v}" for k, v in cell.params)
                lines.append(f"  {shown}: expected {cell.expected}, got {cell.actual}")
        else:
            lines.append("counterexamples: none")
        return "\n".join(lines)


def _report(claim_id: str, grid: GridRange, cells: list[Cell]) -> Report:
    # Deterministic cell order regardless of how the grid was walked.
    cells = sorted(cells, key=Cell.sort_key)
    return Report(claim_id, grid, tuple(cells))


def default_range(claim_id: str) -> GridRange:
    """Grid each claim is checked over when no range is given."""
    if claim_id == "t1":
        return GridRange(m_min=1, m_max=5, n_max=25)
    if claim_id == "t6":
        return GridRange(m_min=1, m_max=4, n_max=15, b_list=(-2, -1, 0, 1, 2, 3))
    if claim_id == "t7":
        return GridRange(m_min=1, m_max=4, n_max=15)
    if claim_id in ("t8", "t9"):
        return GridRange(m_min=1, m_max=3, n_max=10)
    if claim_id in ("c10", "c11", "c12"):
        return GridRange(m_min=0, m_max=3, n_max=15, k_list=(1, 2, 3, 4))
    if claim_id == "patterns":
        return GridRange(m_min=0, m_max=0, n_max=21, k_list=_PATTERN_ORDERS)
    raise ValueError(f"unknown claim {claim_id!r}")


def _theorem_families(claim_id: str, grid: GridRange):
    """(b-or-None, family) pairs a theorem grid ranges over."""
    if claim_id == "t1":
        return [(None, Catalan())]
    if claim_id == "t6":
        b_values = grid.b_list or default_range("t6").b_list
        return [(b, MNumbers(b)) for b in b_values]
    if claim_id == "t7":
        return [(None, CentralBinomial())]
    if claim_id == "t8":
        return [(None, NarayanaC())]
    if claim_id == "t9":
        return [(None, NarayanaB())]
    raise ValueError(f"unknown theorem claim {claim_id!r}")


def verify_theorem(claim_id: str, grid: GridRange | None = None) -> Report:
    """Check one proven backward-shift claim on a grid of (m, n) cells.

    For the numeric families the piecewise prediction must also agree with
    the reflected product formula evaluated directly at -n; the two are one
    identity, so a mismatch is an internal bug and raised, not reported.
    """
    if claim_id not in THEOREM_CLAIMS:
        raise ValueError(f"unknown theorem claim {claim_id!r}")
    grid = grid if grid is not None else default_range(claim_id)
    cells: list[Cell] = []
    for b, family in _theorem_families(claim_id, grid):
        for m in range(max(grid.m_min, 1), grid.m_max + 1):
            for n in range(grid.n_max + 1):
                prediction = closed_forms.predict_backward(family, m, n)
                if claim_id in ("t1", "t6"):
                    reflected = Poly.const(closed_forms.forward_catalan_det(m + 1, -n))
                    if reflected != prediction.value:
                        raise IdentityViolation(
                            f"reflection and signed-forward forms disagree at m={m}, n={n}"
                        )
                actual = hankel.det(prediction.spec).value
                cells.append(Cell(_params(b=b, m=m, n=n), prediction.value, actual))
    return _report(claim_id, grid, cells)


def _det_value(family, shift: int, size: int) -> Poly:
    return hankel.det(hankel.HankelSpec(family, shift, size)).value


def verify_conjecture10(grid: GridRange | None = None) -> Report:
    """Backward vs forward convolution-power determinants.

    For each requested k both parities are checked; cell parameter ``k`` is
    the actual convolution order (2k for the even arm, 2k-1 for the odd
    one).  Expected values are determinants of different specs, as the
    claim itself relates two determinants; there is no closed form here.
    """
    grid = grid if grid is not None else default_range("c10")
    cells: list[Cell] = []
    for k in grid.k_list:
        # (order, lhs shift at m=0, size below which the det vanishes,
        #  sign exponent argument, rhs shift), both parities of the order.
        arms = (
            (2 * k, 1 - k, k, k, lambda m, k=k: 1 - k + m),
            (2 * k - 1, 2 - k, k - 1, k - 1, lambda m, k=k: m + 1 - k),
        )
        for order, base, bound_off, sign_off, rhs_shift_of in arms:
            family = ConvCatalan(order)
            for m in range(max(grid.m_min, 0), grid.m_max + 1):
                bound = m + bound_off          # zero below this size
                sign = sign_choose2(m + sign_off)
                rhs_shift = rhs_shift_of(m)
                for n in range(grid.n_max + 1):
                    actual = _det_value(family, base - m, n)
                    if n == 0:
                        expected = Poly.const(1)
                    elif n < bound:
                        expected = Poly()
                    else:
                        expected = sign * _det_value(family, rhs_shift, n - bound)
                    cells.append(Cell(_params(k=order, m=m, n=n), expected, actual))
    return _report("c10", grid, cells)


def verify_conjecture11(grid: GridRange | None = None) -> Report:
    """Unit/zero periodicity of the fully backward diagonal determinants."""
    grid = grid if grid is not None else default_range("c11")
    cells: list[Cell] = []
    for k in grid.k_list:
        even_family = ConvCatalan(2 * k)
        for a in range(grid.n_max + 1):
            if a % k == 0:
                q = a // k
                expected = Poly.const(-1 if (choose2_parity(k) * q) & 1 else 1)
            else:
                expected = Poly()
            actual = _det_value(even_family, 1 - k, a)
            cells.append(Cell(_params(k=2 * k, m=0, n=a), expected, actual))

        step = 2 * k - 1
        odd_family = ConvCatalan(step)
        for a in range(grid.n_max + 1):
            if a % step == 0:
                q = a // step
                expected = Poly.const(-1 if ((k - 1) * q) & 1 else 1)
            elif a % step == k - 1:
                q = (a - (k - 1)) // step
                parity = ((k - 1) * q + choose2_parity(k - 1)) & 1
                expected = Poly.const(-1 if parity else 1)
            else:
                expected = Poly()
            actual = _det_value(odd_family, 2 - k, a)
            cells.append(Cell(_params(k=step, m=0, n=a), expected, actual))
    return _report("c11", grid, cells)


def verify_conjecture12(grid: GridRange | None = None) -> Report:
    """Near-diagonal determinants against signed powers (n+1)^m, 0 <= m <= k.

    At k=1 the even arm literally reproduces the two classical forward
    identities (constant 1 at m=0 and n+1 at m=1), so those consistency
    cells ride along in every default run.
    """
    grid = grid if grid is not None else default_range("c12")
    cells: list[Cell] = []
    for k in grid.k_list:
        for m in range(max(grid.m_min, 0), min(k, grid.m_max) + 1):
            even_family = ConvCatalan(2 * k)
            q = 0
            while k * q <= grid.n_max:
                a = k * q
                sign = -1 if (choose2_parity(k) * q) & 1 else 1
                expected = Poly.const(sign * (q + 1) ** m)
                actual = _det_value(even_family, m + 1 - k, a)
                cells.append(Cell(_params(k=2 * k, m=m, n=a), expected, actual))
                q += 1

            step = 2 * k - 1
            odd_family = ConvCatalan(step)
            q = 0
            while step * q + k - 1 <= grid.n_max:
                a = step * q + k - 1
                parity = (choose2_parity(k - 1) + (k - 1) * q) & 1
                sign = -1 if parity else 1
                expected = Poly.const(sign * step ** m * (q + 1) ** m)
                actual = _det_value(odd_family, m + 2 - k, a)
                cells.append(Cell(_params(k=step, m=m, n=a), expected, actual))
                q += 1
    return _report("c12", grid, cells)


def _pattern_expected(k: int, a: int) -> int:
    """Value the shift-0 determinant of order k should take at size a.

    The rational constants (3/2, 7/6) are multiplied out over Fraction and
    asserted integral, mirroring the product-formula strategy.
    """
    if k == 3:
        q, r = divmod(a, 3)
        value = Fraction(0) if r == 2 else Fraction((-1) ** (q & 1))
    elif k == 4:
        q, r = divmod(a, 2)
        value = Fraction((-1) ** (q & 1) * (q + 1))
    elif k == 5:
        q, r = divmod(a, 5)
        value = (
            Fraction(1),
            Fraction(1),
            Fraction(-5 * (q + 1)),
            Fraction(0),
            Fraction(5 * (q + 1)),
        )[r]
    elif k == 6:
        q, r = divmod(a, 3)
        sign = (-1) ** (q & 1)
        if r == 2:
            value = -sign * Fraction(3, 2) * (1 + q) * (2 + q) * (3 + 2 * q)
        else:
            value = Fraction(sign * (q + 1) ** 2)
    elif k == 7:
        q, r = divmod(a, 7)
        sign = (-1) ** (q & 1)
        if r in (0, 1):
            value = Fraction(sign)
        elif r == 2:
            value = sign * Fraction(7, 6) * (1 + q) * (-12 + 49 * q + 98 * q * q)
        elif r == 3:
            value = Fraction(-sign * 49 * (q + 1) ** 2)
        elif r == 4:
            value = Fraction(0)
        elif r == 5:
            value = Fraction(sign * 49 * (q + 1) ** 2)
        else:
            value = sign * Fraction(7, 6) * (1 + q) * (282 + 343 * q + 98 * q * q)
    else:
        raise ValueError(f"no modular pattern recorded for k={k}")
    if value.denominator != 1:
        raise NonIntegerResult(f"pattern value for k={k}, size {a} is {value}")
    return int(value)


def verify_modular_patterns(k: int, n_max: int = 21) -> Report:
    """Check the recorded residue-class formulas for one convolution order."""
    if k not in _PATTERN_ORDERS:
        raise ValueError(f"k must be in {_PATTERN_ORDERS}")
    family = ConvCatalan(k)
    cells = [
        Cell(
            _params(k=k, m=0, n=a),
            Poly.const(_pattern_expected(k, a)),
            _det_value(family, 0, a),
        )
        for a in range(n_max + 1)
    ]
    grid = GridRange(m_min=0, m_max=0, n_max=n_max, k_list=(k,))
    return _report("patterns", grid, cells)


def verify_claim(claim_id: str, grid: GridRange | None = None) -> Report:
    """Run any claim by id, with its default grid unless one is given."""
    if claim_id in THEOREM_CLAIMS:
        return verify_theorem(claim_id, grid)
    if claim_id == "c10":
        return verify_conjecture10(grid)
    if claim_id == "c11":
        return verify_conjecture11(grid)
    if claim_id == "c12":
        return verify_conjecture12(grid)
    if claim_id == "patterns":
        grid = grid if grid is not None else default_range("patterns")
        cells: list[Cell] = []
        for k in grid.k_list:
            cells.extend(verify_modular_patterns(k, grid.n_max).cells)
        return _report("patterns", grid, cells)
    raise ValueError(f"unknown claim {claim_id!r}")
