"""Random nilpotent algebras (iterated central extensions) and Jacobi-breaking mutations."""

import random
from fractions import Fraction

from .exterior import Form, basis
from .lie import LieAlgebra, check_jacobi, direct_sum
from .symplectic import closed_two_forms


def random_nilpotent(dim, rng, density=0.5, coeffs=(-2, -1, 1, 2)):
    """Nilpotent algebra built one generator at a time.

    d e^{k+1} is a random closed 2-form of the algebra spanned by e^1..e^k,
    so d^2 = 0 holds by construction and the table is filtered.
    """
    diffs = []
    for k in range(dim):
        form = Form.zero(k, 2)
        if k >= 2:
            sub = LieAlgebra.from_differentials(k, [Form(k, 2, d.terms) for d in diffs], check=False)
            for c in closed_two_forms(sub):
                if rng.random() < density:
                    form = form + c * rng.choice(coeffs)
        diffs.append(form)
    diffs = [Form(dim, 2, d.terms) for d in diffs]
    return LieAlgebra.from_differentials(dim, diffs, check=False)


def mutate(L, rng, tries=200):
    """Copy of L with one extra term in some d e^k that breaks the Jacobi identity, or None."""
    n = L.dim
    pairs = basis(n, 2)
    for _ in range(tries):
        k = rng.randint(1, n)
        i, j = rng.choice(pairs)
        c = Fraction(rng.choice((-1, 1, 2)))
        diffs = [L.d_generator(t) for t in range(1, n + 1)]
        diffs[k - 1] = diffs[k - 1] + Form(n, 2, {(i, j): c})
        M = LieAlgebra.from_differentials(n, diffs, check=False)
        if check_jacobi(M):
            return M
    return None


def random_pair_sum(algebras, rng, max_dim=10):
    """Direct sum of two randomly chosen algebras with total dimension <= max_dim."""
    while True:
        g, h = rng.choice(algebras), rng.choice(algebras)
        if g.dim + h.dim <= max_dim:
            return g, h, direct_sum(g, h)


def seeded(seed):
    return random.Random(seed)
