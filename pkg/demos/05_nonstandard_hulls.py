# Nonstandard hulls: finite points modulo infinitesimal proximity,
# with the shadow of the distance as the metric.
# Run with: python demos/05_nonstandard_hulls.py

from fractions import Fraction

from hyperq import hull as H
from hyperq.germ import OMEGA, Germ, parse_family, parse_germ

w = OMEGA

print("== the hull of the rationals collapses monads ==")
p = H.hull_point(H.RATIONALS, Germ.constant(1) - 1 / w)
q = H.hull_point(H.RATIONALS, Germ.constant(1))
print("point of 1 - 1/w:", p, "   equals point of 1:", p == q)
try:
    H.hull_point(H.RATIONALS, w)
except Exception as exc:
    print("w is rejected:", exc)

print()
print("== distances are exact shadows ==")
a = H.hull_point(H.RATIONALS, Germ.constant(2) - 1 / w)
b = H.hull_point(H.RATIONALS, Germ.constant(Fraction(1, 2)))
print("dist(2 - 1/w, 1/2) =", H.hull_dist(a, b))

print()
print("== the discrete naturals keep their nonstandard points ==")
m = H.hull_point(H.NATURALS, w)
n = H.hull_point(H.NATURALS, w + 1)
print("point of w:", m, "  dist to w+1:", H.hull_dist(m, n))
print("w approachable:", H.approachable(H.NATURALS, w))
print("5 approachable:", H.approachable(H.NATURALS, Germ.constant(5)))

print()
print("== limits of declared Cauchy families via the diagonal ==")
for text, start in (("k/(k+1)", 0), ("1/3", 0), ("1/k", 1)):
    seq = H.HullSequence(H.RATIONALS, parse_family(text), H.Modulus(1, 1), start=start)
    limit = H.hull_limit(seq)
    print(f"limit of {text:8s} -> {limit}")

print()
print("== vector hulls canonicalise componentwise ==")
v = H.normed_hull(3, (parse_germ("(2*w+1)/w"), Germ.constant(Fraction(1, 2)), 3 / w ** 2))
print("hull of ((2w+1)/w, 1/2, 3/w^2) =", v)
u1 = (Germ.constant(1) + 1 / w, 1 / w)
u2 = (Germ.constant(2), Germ.constant(3) - 1 / w)
s = H.normed_hull(2, H.vec_add(u1, u2))
print("additivity:", s.canonical ==
      H.vec_add(H.normed_hull(2, u1).canonical, H.normed_hull(2, u2).canonical))
