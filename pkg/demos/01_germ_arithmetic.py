# Germ arithmetic: exact rational functions of w ordered by eventual
# dominance.  Run with: python demos/01_germ_arithmetic.py

from fractions import Fraction

from hyperq import (
    OMEGA,
    Germ,
    classify,
    compare,
    diagonal,
    eventually_threshold,
    parse_family,
    parse_germ,
    shadow,
    valuation,
)

w = OMEGA

print("== the field of definable hyperrationals ==")
g = parse_germ("(2*w^2+3)/(w^2-w)")
print("g          =", g)
print("g - 2      =", g - 2, "   (a positive infinitesimal)")
print("shadow(g)  =", shadow(g))
print("class(g)   =", classify(g).value)
print("val(g)     =", valuation(g))

print()
print("== canonical forms make equality structural ==")
print("(w^2-1)/(w+1) + 1 =", parse_germ("(w^2-1)/(w+1) + 1"))
print("w * (1/w)         =", w * (Germ.constant(1) / w))

print()
print("== ordering is the eventual one ==")
million = Germ.constant(10 ** 6)
print("w > 10^6      :", compare(w, million) > 0)
print("1/w > 0       :", compare(1 / w, Germ.constant(0)) > 0)
print("g > 2         :", compare(g, Germ.constant(2)) > 0)

print()
print("== eventual-sign thresholds are sound, not minimal ==")
h = (w - 100) * (w - 2)
n0 = eventually_threshold(h)
print("h  = (w-100)*(w-2), threshold =", n0)
print("signs at", n0, "and beyond:", [h.evaluate(n) > 0 for n in (n0, n0 + 1, n0 + 50)])
print("sign at 50 (between the roots):", h.evaluate(50) > 0)

print()
print("== families and the diagonal ==")
family = parse_family("k/(k+1) + 1/w")
print("family member at k=3 :", family.at_k(3))
d = diagonal(family)
print("diagonal (k := w)    :", d)
print("its shadow           :", shadow(d))

print()
print("== shadows can be any rational, or +/-inf ==")
for text in ("1/w", "w", "-w^2", "(6*w+1)/(2*w)"):
    print(f"shadow({text:12s}) = {shadow(parse_germ(text))}")
