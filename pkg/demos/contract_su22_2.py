"""Build su(2,2|2), project the supercharges, contract, and walk the checklist."""

from galsca.builder import build_su22n_with_report
from galsca.contraction import contract_with_report, galilean_target, standard_weights, verify_target
from galsca.core import Gen, bracket, compare_tables, compute_center
from galsca.projection import projected_su22n

alg, rep = build_su22n_with_report(2)
print(f"su(2,2|2): {alg.dims[0]} even + {alg.dims[1]} odd generators, "
      f"{rep.violations} Jacobi violations")
print("calibrated signs:", {k: str(v) for k, v in rep.point.items()})
print("[P0, K0] =", bracket(alg, Gen("P", (0,)), Gen("K_conf", (0,))))
print("{Q11, Q11} =", bracket(alg, Gen("Q", (1, 1)), Gen("Q", (1, 1))))

projected, split, _ = projected_su22n(2)
print(f"\nu(2) split: dim H = {split.dim_h}, dim K = {split.dim_k} (A counted in K)")

w = standard_weights(2)
print("weights:", {k: str(v) for k, v in w.weights})
gal, crep = contract_with_report(projected, w)
print(f"contracted: {len(crep.surviving)} entries survive, {len(crep.vanished)} vanish, "
      f"{crep.jacobi_violations} Jacobi violations")
print("[H, F1] =", bracket(gal, Gen("H"), Gen("F", (1,))))
print("{Qt+11, Qt+11} =", bracket(gal, Gen("Qt+", (1, 1)), Gen("Qt+", (1, 1))))

print()
for item in verify_target(gal, 2):
    print(f"({item.key}) {'pass' if item.passed else 'FAIL'}  {item.label}")

# the bosonic relations as printed differ in a handful of signs
bos = gal.restrict([g for g in gal.basis if g in set(galilean_target().basis)])
print("\nentries differing from the printed bosonic relations:")
for d in compare_tables(bos, galilean_target("printed")):
    print(f"  [{d.left}, {d.right}]: {d.a_value}  (printed: {d.b_value})")

print("\ncenter dimension:", len(compute_center(gal)))
