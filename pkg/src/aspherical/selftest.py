"""Internal property suites run by ``aspherical selftest``."""

from .catalog import read_catalog, shipped_catalog_path
from .cohomology import betti, convolve, poincare_check
from .generators import mutate, random_nilpotent, random_pair_sum, seeded
from .lie import d_squared_defects, is_unimodular, structure_report


def _algebras():
    out = []
    for fname in ("catalog.alg", "six_nilpotent.alg"):
        for e in read_catalog(shipped_catalog_path(fname)):
            out.append(e.algebra())
    return out


def run_selftest(out, seed=2024, n_random=40):
    rng = seeded(seed)
    failures = []
    algs = _algebras()

    randoms = [random_nilpotent(rng.randint(2, 7), rng) for _ in range(n_random)]
    for L in algs + randoms:
        if d_squared_defects(L):
            failures.append(f"d^2 != 0 on {L}")
    detected = 0
    for L in randoms:
        if L.dim < 3:
            continue
        M = mutate(L, rng)
        if M is not None:
            detected += 1
            if not d_squared_defects(M):
                failures.append(f"Jacobi violation not seen by d^2 on {M}")
    out.write(f"d^2 = 0 on {len(algs) + len(randoms)} algebras, {detected} mutants detected\n")

    dual = 0
    for L in algs + randoms:
        if structure_report(L).nilpotent or is_unimodular(L):
            b = betti(L)
            if b != b[::-1] or not poincare_check(L):
                failures.append(f"Poincare duality fails on {L}")
            dual += 1
    out.write(f"Poincare duality on {dual} unimodular algebras\n")

    pool = [L for L in algs if L.dim <= 6]
    for _ in range(20):
        g, h, s = random_pair_sum(pool, rng, max_dim=10)
        if betti(s) != convolve(betti(g), betti(h)):
            failures.append(f"Kunneth fails on {g} + {h}")
    out.write("Kunneth on 20 random direct sums\n")

    for f in failures:
        out.write(f"FAIL: {f}\n")
    out.write("selftest " + ("passed" if not failures else f"failed ({len(failures)})") + "\n")
    return 0 if not failures else 1
