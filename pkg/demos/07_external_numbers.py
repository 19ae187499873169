# Neutrices and external numbers: centres plus convex error groups,
# under Minkowski arithmetic.  Run with: python demos/07_external_numbers.py

from hyperq import extnum as X
from hyperq.germ import OMEGA, Germ

w = OMEGA

print("== neutrices are valuation grades in this field ==")
print("M0 (monad)  contains 1/w :", X.M0.contains(1 / w))
print("M0          contains 1/2 :", X.M0.contains(Germ.constant(1) / 2))
print("G0 (galaxy) contains 1/2 :", X.G0.contains(Germ.constant(1) / 2))
print("M0 + M0 =", X.neutrix_add(X.M0, X.M0).label())
print("w * M0  =", X.neutrix_scale(w, X.M0).label(), " (infinitesimals times w fill the limited germs)")
print("M0 * G0 =", X.neutrix_mul(X.M0, X.G0).label())

print()
print("== canonical forms absorb what the neutrix swallows ==")
for text in ("3 + 1/w + M0", "w + 5 + G0", "1/2 + 1/w^3 + N(-2)"):
    print(f"{text:22s} -> {X.parse_ext(text)}")

print()
print("== Minkowski arithmetic ==")
print("(3 + M0) + (4 + M0)   =", X.extnum_add(X.parse_ext("3 + M0"), X.parse_ext("4 + M0")))
print("(w + G0) + (-w + M0)  =", X.extnum_add(X.parse_ext("w + G0"), X.parse_ext("-w + M0")))
print("(3 + M0) * (2 + M0)   =", X.extnum_mul(X.parse_ext("3 + M0"), X.parse_ext("2 + M0")))
print("M0 * M0               =", X.extnum_mul(X.parse_ext("M0"), X.parse_ext("M0")))

print()
print("== order: separated or overlapping ==")
pairs = (
    ("3 + M0", "4 + M0"),
    ("3 + M0", "3 + G0"),
    ("1/w + N(-2)", "2/w + N(-2)"),
)
for left, right in pairs:
    verdict = X.extnum_order(X.parse_ext(left), X.parse_ext(right))
    print(f"{left:14s} vs {right:14s}: {verdict}")

print()
print("== products contain every representative product ==")
x, y = X.parse_ext("3 + M0"), X.parse_ext("2 + M0")
product = X.extnum_mul(x, y)
samples = [1 / w, -2 / w ** 2, Germ.constant(1) / (w + 3)]
ok = all(
    product.contains((x.center + u) * (y.center + v)) for u in samples for v in samples
)
print("sampled containment in", product, ":", ok)
print("(distributivity is deliberately not claimed for external numbers)")
