# The finite-model oracle: principal ultrafilters, the ultrapower
# quotient and Los's theorem checked by enumeration.
# Run with: python demos/03_finite_ultrapower_oracle.py

from hyperq import finmodel as F

print("== a principal ultrafilter on a three-point index ==")
index = F.FinIndex((0, 1, 2), 1)
uf = F.build_ultrafilter(index)
print("members:", sorted(sorted(s) for s in uf.members))

print()
print("== the ultrapower of a tiny membership structure ==")
# carrier: 0 and 1, where 1 plays the set {0}
base = F.Structure((0, 1), frozenset({(0, 1)}))
up = F.ultrapower_quotient(base, index)
print("functions:", len(up.functions), " classes:", len(up.classes))
print("(0,1,0) ~ (1,1,0):", up.class_of[(0, 1, 0)] == up.class_of[(1, 1, 0)])
print("quotient membership pairs:", sorted(up.quotient.membership))
print("classes vs value at w mismatches:", F.check_at_w(up))

print()
print("== Los's theorem on one formula ==")
report = F.los_check(up, F.In("x", "y"), {"x": (0, 0, 0), "y": (1, 0, 1)})
print("pointwise truth set:", sorted(report.pointwise_truth_set))
print("large (contains w):", report.pointwise_large)
print("truth in the quotient:", report.quotient_truth)
print("two sides agree:", report.agree)

print()
print("== subset coding preserves the boolean operations ==")
xs, ys = frozenset({0}), frozenset({0, 1})
print("checks:", F.psi_setop_check(up, xs, ys))

print()
print("== the exhaustive sweeps ==")
los = F.los_sweep(max_index=2, max_carrier=2, max_depth=2)
print(f"los sweep:  {los.instances} instances, {los.checks} checks, "
      f"{len(los.mismatches)} mismatches")
psi = F.psi_sweep(max_index=3, max_carrier=3)
print(f"psi sweep:  {psi.instances} instances, {psi.checks} checks, "
      f"{len(psi.mismatches)} mismatches")
