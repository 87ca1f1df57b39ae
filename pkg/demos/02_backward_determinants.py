"""Backward-shifted Hankel matrices and the three determinant engines.

A negative shift slides the sequence off the top-left corner of the
matrix, leaving a triangle of zeros.  Those zeros routinely break the
condensation engine (it needs nonzero interior minors), which is exactly
why the package keeps three independent engines and cross-checks them.
"""

from hankelshift import (
    Catalan,
    HankelSpec,
    NarayanaC,
    build,
    cross_check,
    det,
    det_bareiss,
    det_cofactor,
    det_condensation,
)

spec = HankelSpec(Catalan(), -3, 4)
matrix = build(spec)
print(f"matrix for {spec.family.label}, shift {spec.shift}, size {spec.size}:")
for row in matrix.rows:
    print("   ", "  ".join(f"{str(e):>3}" for e in row))

print()
print("the three engines on that matrix:")
print(f"  cofactor expansion : {det_cofactor(matrix)}")
print(f"  fraction-free elim : {det_bareiss(matrix)}")
cond = det_condensation(matrix)
print(f"  condensation       : {'unavailable (zero interior minor)' if cond is None else cond}")

print()
print("the dispatcher prefers condensation and falls back to elimination:")
for shift in (2, 0, -1, -3):
    result = det(HankelSpec(Catalan(), shift, 6))
    print(f"  shift {shift:>2}: det = {str(result.value):>6}   engine = {result.engine}")

print()
print("whole backward rows, reproducing the known determinant tables:")
for shift in (-1, -2, -3):
    row = [str(det(HankelSpec(Catalan(), shift, n)).value) for n in range(10)]
    print(f"  shift {shift}: {', '.join(row)}")

print()
print("polynomial entries work the same way (Narayana family, shift -1):")
for n in range(6):
    print(f"  n={n}: {det(HankelSpec(NarayanaC(), -1, n)).value}")

print()
print("cross_check runs every applicable engine and insists they agree:")
result = cross_check(HankelSpec(NarayanaC(), -2, 5))
print(f"  agreed value: {result.value} (reported engine: {result.engine})")
