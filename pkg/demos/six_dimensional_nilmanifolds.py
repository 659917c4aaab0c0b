"""
Six-dimensional nilpotent Lie algebras: which carry invariant symplectic forms,
and do the symplectic ones satisfy

    2 - 2 b1 + 2 b2 - b3 = 0      (Euler characteristic plus duality)
    2 + 2 b2 > 3 b1               (equivalently b1 < b3)?

The list is the shipped six_nilpotent.alg; read the header of that file
before drawing conclusions from the counts.

Run:  python demos/six_dimensional_nilmanifolds.py
"""

from aspherical import Verdict, betti, find_symplectic
from aspherical.catalog import read_catalog, shipped_catalog_path

rows = []
for entry in read_catalog(shipped_catalog_path("six_nilpotent.alg")):
    L = entry.algebra()
    b = betti(L)
    sym = find_symplectic(L).verdict is Verdict.SYMPLECTIC
    rows.append((entry.name, entry.tuple_text, b, sym))

print(f"{'name':7s} {'algebra':28s} {'b1':>3s} {'b2':>3s} {'b3':>3s}  symplectic  euler  ineq")
for name, text, b, sym in rows:
    euler = 2 - 2 * b[1] + 2 * b[2] - b[3]
    ineq = 2 + 2 * b[2] > 3 * b[1]
    print(f"{name:7s} {text:28s} {b[1]:3d} {b[2]:3d} {b[3]:3d}  {'yes' if sym else 'no':10s}  {euler:5d}  {ineq}")

symp = [r for r in rows if r[3]]
print(f"\n{len(symp)} of {len(rows)} carry an invariant symplectic form")
print("identity and inequality hold on all of them:",
      all(2 - 2 * b[1] + 2 * b[2] - b[3] == 0 and 2 + 2 * b[2] > 3 * b[1] for _, _, b, _ in symp))
# the inequality is not automatic: it can fail without a symplectic form
fails = [r[0] for r in rows if not r[3] and not 2 + 2 * r[2][2] > 3 * r[2][1]]
print("non-symplectic entries violating the inequality:", fails or "none")
