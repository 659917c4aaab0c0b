"""
The Kodaira-Thurston nilmanifold, computed from its Lie algebra (0,0,0,12).

The manifold is the quotient of H_3 x R by a lattice; its real cohomology is
the Chevalley-Eilenberg cohomology of the Lie algebra, so everything below is
finite exact linear algebra.

Run:  python demos/kodaira_thurston.py
"""

from aspherical import (betti, class_of, cup, e, find_symplectic, parse_algebra, poincare_check, power,
                        structure_report)
from aspherical.cohomology import cohomology_basis
from aspherical.symplectic import cup_length_two

L = parse_algebra("(0,0,0,12)", name="KT")
print("algebra", L.tuple_notation(), "dimension", L.dim)

rep = structure_report(L)
print("nilpotent of class", rep.nilpotency_class, "| unimodular", rep.unimodular,
      "| completely solvable", rep.completely_solvable.value)

b = betti(L)
print("Betti numbers", b, "| Euler characteristic", sum((-1) ** k * x for k, x in enumerate(b)))
print("Poincare duality with nondegenerate pairing:", poincare_check(L))

print("\nH^2 is spanned by")
for r in cohomology_basis(L, 2):
    print("   ", r)

# e^1 ^ e^2 = d e^4 is exact, so the product of [e^1] and [e^2] vanishes
x, y = class_of(L, e(4, 1)), class_of(L, e(4, 2))
print("\n[e1] u [e2] is zero:", cup(L, x, y).is_zero)
print("[e1] u [e3] is zero:", cup(L, x, class_of(L, e(4, 3))).is_zero)

s = find_symplectic(L)
print("\ninvariant symplectic form:", s.verdict.value, "via", s.method.value)
print("    omega       =", s.witness)
print("    omega ^ 2   =", power(s.witness, 2))
print("    aspherical note (pi_2 = 0 from complete solvability):", s.aspherical_note)
print("degree-2 cup length (model-level upper bound for nu):", cup_length_two(L))
