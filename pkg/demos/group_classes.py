"""
Betti-number evidence for the classes A (symplectically aspherical
realisations with pi_2 = 0) and B (realisations with pi_2 != 0).

Run:  python demos/group_classes.py
"""

from aspherical import parse_algebra
from aspherical.classifier import (Membership, chain_report, classify, kunneth, memberships_from_evidence,
                                   product_criteria, profile_from_algebra, surface_profile, torus_profile)


def show(ev):
    print(ev.source)
    for v in ev.verdicts:
        print(f"    {v.criterion:16s} {v.verdict:14s} {v.part:5s} {v.justification}")
    for n in ev.notes:
        print("    note:", n)


# a solvmanifold with b1 = 2 < b3 = 4
fls = parse_algebra("(0,0,-13-25,14-26,-15,16)", name="FLS")
show(classify(profile_from_algebra(fls, symplectic=True, lattice_asserted=True)))

# tori
for m in (4, 6):
    show(classify(torus_profile(m)))

# products
p, q = surface_profile(2), torus_profile(4)
print()
show(product_criteria(p, q))

# inclusion chains
ev6 = classify(torus_profile(6))
rep = chain_report(memberships_from_evidence(ev6, 6) + [Membership("A", 8, True, "Z^8")])
print("\nchain report")
for m in rep["recorded"]:
    print("    recorded", m)
for m in rep["implied"]:
    print("    implied ", m)
print("    violations:", rep["violations"] or "none")
