"""Tour of the sequence families.

Every family is doubly infinite: indices below zero give 0, which is what
makes Hankel matrices with negative shift meaningful at all.  Integer
families produce constant polynomials; the two Narayana families produce
genuine polynomials in t that specialize to the integer families at t=1.
"""

from hankelshift import (
    Catalan,
    CentralBinomial,
    ConvCatalan,
    MNumbers,
    NarayanaB,
    NarayanaC,
)

families = [
    Catalan(),
    CentralBinomial(),
    MNumbers(1),
    MNumbers(2),
    ConvCatalan(3),
    NarayanaC(),
    NarayanaB(),
]

print("terms a_n for n = -2 .. 6 (note the zero extension on the left):")
for family in families:
    terms = ", ".join(str(family.term(n)) for n in range(-2, 7))
    print(f"  {family.label:>20}: {terms}")

print()
print("M-numbers interpolate between known sequences:")
print("  b=0 gives the Catalan numbers, b=1 their shift, b=2 binom(2n+1, n)")
for b in (0, 1, 2):
    values = ", ".join(str(MNumbers(b).term(n)) for n in range(7))
    print(f"  b={b}: {values}")

print()
print("Narayana polynomials evaluated at t=1 collapse to Catalan numbers:")
for n in range(6):
    poly = NarayanaC().term(n)
    print(f"  n={n}: {str(poly):>28}  ->  {poly(1)}")

print()
print("generating series (truncated):")
print(f"  catalan:    {Catalan().series(7)}")
print(f"  narayana-c: {NarayanaC().series(5)}")
