"""Generating-function identities, verified coefficientwise.

Square roots never appear: each identity involving one is replaced by the
polynomial functional equation it satisfies, and checked exactly on
truncated series.  The reciprocal of a generating series is interesting in
its own right: its coefficients show up as near-backward determinants.
"""

from hankelshift import (
    Catalan,
    CentralBinomial,
    MNumbers,
    NarayanaB,
    NarayanaC,
    Poly,
    Series,
)

ORDER = 32
one = Series.one(ORDER)
t = Poly((0, 1))

cat = Catalan().series(ORDER)
print(f"catalan series:        {Catalan().series(7)}")
print(f"functional equation C = 1 + x*C^2 holds: {cat == one + (cat * cat).mul_x()}")
square = cat * cat
print(f"C^2 shifts the coefficients: {[square[n].constant for n in range(8)]}")
rec = cat.reciprocal()
print(f"1/C = 1 - x*C holds:   {rec == one - cat.mul_x()}")
print(f"1/C coefficients:      {[rec[n].constant for n in range(8)]}")

print()
cb = CentralBinomial().series(ORDER)
check = Series([Poly.const(1), Poly.const(-4)], order=ORDER) * (cb * cb)
print(f"(1 - 4x) * B^2 = 1 holds: {check == one}")

print()
for b in (0, 1, 2):
    mb = MNumbers(b).series(ORDER)
    holds = mb * (one - cat.scale(b).mul_x()) == cat
    print(f"M_{b} * (1 - {b}*x*C) = C holds: {holds}")

print()
nar = NarayanaC().series(ORDER)
eqn = nar == one + nar.scale(Poly((1, -1))).mul_x() + (nar * nar).scale(t).mul_x()
print(f"narayana equation C = 1 + (1-t)x*C + t*x*C^2 holds: {eqn}")
head = Series([Poly.const(1), Poly((-1, 1))], order=ORDER)
print(f"its reciprocal is 1 + (t-1)x - t*x*C: {nar.reciprocal() == head - nar.scale(t).mul_x()}")

narb = NarayanaB().series(ORDER)
relation = narb * (head - nar.scale(Poly((0, 2))).mul_x()) == one
print(f"type B relation B(t,x) * (1 + (t-1)x - 2t*x*C) = 1 holds: {relation}")

print()
print("powers of C carry the convolution coefficients:")
for k in (2, 3, 4):
    powk = cat.pow(k)
    print(f"  C^{k}: {[powk[n].constant for n in range(7)]}")
