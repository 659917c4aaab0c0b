"""
Structure constants of the solvable group of 6x6 matrices

    [[e^t, 0,      x e^t, 0,       0, y1],
     [0,   e^-t,   0,     x e^-t,  0, y2],
     [0,   0,      e^t,   0,       0, z1],
     [0,   0,      0,     e^-t,    0, z2],
     [0,   0,      0,     0,       1, t ],
     [0,   0,      0,     0,       0, 1 ]]

The Lie algebra is spanned by the partial derivatives at the identity,
ordered (t, x, y1, y2, z1, z2) -> (e1, ..., e6).  Brackets are matrix
commutators, expanded back in that basis, and printed in the tuple notation
d e^k = -sum c^k_ij e^ij used by the catalog.

Run:  python demos/derive_fls_structure_constants.py
"""

import sympy as sp

from aspherical import parse_algebra, betti, structure_report

t, x, y1, y2, z1, z2 = params = sp.symbols("t x y1 y2 z1 z2")
E = sp.exp
g = sp.Matrix([
    [E(t), 0, x * E(t), 0, 0, y1],
    [0, E(-t), 0, x * E(-t), 0, y2],
    [0, 0, E(t), 0, 0, z1],
    [0, 0, 0, E(-t), 0, z2],
    [0, 0, 0, 0, 1, t],
    [0, 0, 0, 0, 0, 1],
])
at_identity = {p: 0 for p in params}
assert g.subs(at_identity) == sp.eye(6)

gens = [g.diff(p).subs(at_identity) for p in params]

# closure under products of two group elements: the family is a group
h = g.subs({p: sp.Symbol(str(p) + "_") for p in params}, simultaneous=True)
prod = sp.simplify(g * h)
assert prod[4, 5] == t + sp.Symbol("t_")

# solve [X_i, X_j] = sum_k c^k_ij X_k
cvars = sp.symbols("c1:7")
n = len(gens)
structure = {}
for i in range(n):
    for j in range(i + 1, n):
        comm = gens[i] * gens[j] - gens[j] * gens[i]
        combo = sum((c * X for c, X in zip(cvars, gens)), sp.zeros(6, 6))
        sol = sp.solve(list(comm - combo), cvars, dict=True)
        assert sol, f"bracket [{i + 1},{j + 1}] leaves the span"
        coeffs = [sol[0].get(c, 0) for c in cvars]
        for k, c in enumerate(coeffs, start=1):
            if c:
                structure[(i + 1, j + 1, k)] = c

for (i, j, k), c in sorted(structure.items()):
    print(f"[e{i}, e{j}] has coefficient {c} on e{k}")

slots = []
for k in range(1, n + 1):
    terms = [(-c, i, j) for (i, j, kk), c in sorted(structure.items()) if kk == k]
    if not terms:
        slots.append("0")
        continue
    text = ""
    for c, i, j in terms:
        text += ("+" if c > 0 else "-") + ("" if abs(c) == 1 else f"{abs(c)}*") + f"{i}{j}"
    slots.append(text.lstrip("+"))
tup = "(" + ",".join(slots) + ")"
print("tuple notation:", tup)

L = parse_algebra(tup)
rep = structure_report(L)
print("betti:", betti(L))
print("nilpotent:", rep.nilpotent, " solvable:", rep.solvable, " unimodular:", rep.unimodular,
      " completely solvable:", rep.completely_solvable.value)
