"""
Acceptance criteria 1-11.  Each test prints one PASS/FAIL line (visible with
or without -s) and then asserts.  Run on its own with

    pytest tests/test_acceptance.py -v
or
    python tests/test_acceptance.py
"""

import random
import subprocess
import sys
import time
from math import comb

import pytest

from aspherical import (Verdict, abelian, betti, ce_differential, check_jacobi, class_of, cup, cup_length_two,
                        direct_sum, find_symplectic, parse_algebra, poincare_check, power, structure_report)
from aspherical.catalog import read_catalog, shipped_catalog_path
from aspherical.classifier import (B_MEMBER, EULER_RELATION, HOLDS, INEQUALITY_26, FIRES, NOT_A4, GroupProfile,
                                   b3_product, classify, kunneth, product_criteria, profile_from_algebra,
                                   surface_profile, torus_profile)
from aspherical.cohomology import convolve, euler_characteristic, from_coordinates
from aspherical.exterior import Form, basis, top_coefficient
from aspherical.generators import mutate, random_nilpotent
from aspherical.lie import d_squared_defects

import oracle

_printer = None


@pytest.fixture(autouse=True)
def _grab_capsys(capsys):
    global _printer
    _printer = capsys
    yield


def report(n, ok, detail, seconds=None):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}" + (f"  [{seconds:.2f} s]" if seconds is not None else "")
    if _printer is not None:
        with _printer.disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


def entries(fname):
    return read_catalog(shipped_catalog_path(fname))


def all_entries():
    return entries("catalog.alg") + entries("six_nilpotent.alg")


def test_criterion_01_d_squared_iff_jacobi():
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    ok = True
    algs = []
    for _ in range(200):
        L = random_nilpotent(rng.randint(1, 8), rng)
        algs.append(L)
        ok &= check_jacobi(L) == [] and d_squared_defects(L) == []
    mutants = 0
    while mutants < 50:
        L = rng.choice([a for a in algs if a.dim >= 3])
        M = mutate(L, rng)
        if M is None:
            continue
        mutants += 1
        ok &= bool(check_jacobi(M)) and bool(d_squared_defects(M))
    dt = time.perf_counter() - t0
    report(1, ok and dt < 30, f"200 random nilpotent tables d^2 = 0, {mutants} mutants detected", dt)


def test_criterion_02_abelian_baseline():
    t0 = time.perf_counter()
    ok = True
    for n in (2, 4, 6, 8):
        L = abelian(n)
        ok &= betti(L) == [comb(n, k) for k in range(n + 1)]
        r = find_symplectic(L)
        ok &= r.verdict is Verdict.SYMPLECTIC and not ce_differential(L, r.witness)
        ok &= top_coefficient(power(r.witness, n // 2)) != 0
        ok &= cup_length_two(L) == n // 2
    dt = time.perf_counter() - t0
    report(2, ok and dt < 5, "R^n, n = 2,4,6,8: binomial Betti, verified witness, cup length n/2", dt)


def test_criterion_03_oracle_equivalence():
    t0 = time.perf_counter()
    bad = []
    count = 0
    for e in all_entries():
        L = e.algebra()
        if L.dim > 6:
            continue
        count += 1
        if betti(L) != oracle.betti(L):
            bad.append(f"{e.name} betti")
        mine = find_symplectic(L).verdict is Verdict.SYMPLECTIC
        if mine != oracle.symplectic_verdict(L):
            bad.append(f"{e.name} verdict")
    dt = time.perf_counter() - t0
    report(3, not bad, f"{count} catalog entries of dim <= 6 agree with the oracle" + (f"; mismatches {bad}" if bad else ""), dt)


def test_criterion_04_kodaira_thurston():
    t0 = time.perf_counter()
    L = parse_algebra("(0,0,0,12)")
    b = betti(L)
    ok = b == oracle.betti(L) == [1, 3, 4, 3, 1]
    ok &= find_symplectic(L).verdict is Verdict.SYMPLECTIC
    ok &= poincare_check(L) and euler_characteristic(b) == 0
    dt = time.perf_counter() - t0
    report(4, ok and dt < 1, f"(0,0,0,12): betti {tuple(b)}, SYMPLECTIC, duality, chi = 0", dt)


def test_criterion_05_four_dimensional_nilmanifolds():
    t0 = time.perf_counter()
    four = [e for e in entries("catalog.alg") if e.algebra().dim == 4]
    algs = {e.name: e.algebra() for e in four}
    nil = {k: L for k, L in algs.items() if structure_report(L).nilpotent}
    ok = len(nil) == 4
    for name, L in nil.items():
        r = find_symplectic(L)
        ok &= r.verdict is Verdict.SYMPLECTIC and r.aspherical_note
    dt = time.perf_counter() - t0
    report(5, ok and dt < 1, f"4-dim nilpotent entries {sorted(nil)} all SYMPLECTIC with aspherical note", dt)


def test_criterion_06_six_dimensional_identities():
    t0 = time.perf_counter()
    checked = 0
    bad = []
    for e in all_entries():
        L = e.algebra()
        if L.dim != 6:
            continue
        rep = structure_report(L)
        if not rep.nilpotent or find_symplectic(L, report=rep).verdict is not Verdict.SYMPLECTIC:
            continue
        checked += 1
        b = betti(L)
        if 2 - 2 * b[1] + 2 * b[2] - b[3] != 0 or not 2 + 2 * b[2] > 3 * b[1]:
            bad.append(e.name)
        ev = classify(profile_from_algebra(L, report=rep, symplectic=True, lattice_asserted=e.lattice_asserted))
        if ev.get(EULER_RELATION).verdict != HOLDS or ev.get(INEQUALITY_26).verdict != FIRES:
            bad.append(e.name + " (report)")
    dt = time.perf_counter() - t0
    ok = not bad and checked >= 5 and dt < 10
    report(6, ok, f"{checked} symplectic 6-dim nilpotent entries: 2-2b1+2b2-b3 = 0 and 2+2b2 > 3b1"
           + (f"; failures {bad}" if bad else ""), dt)


def test_criterion_07_fls():
    t0 = time.perf_counter()
    (e,) = [x for x in entries("catalog.alg") if x.name == "fls"]
    L = e.algebra()
    r = structure_report(L)
    b = betti(L)
    ev = classify(profile_from_algebra(L, report=r, symplectic=True, lattice_asserted=True))
    ok = r.solvable and r.unimodular and not r.nilpotent and b[1] == 2 and b[3] == 4
    ok &= ev.fired(B_MEMBER) and ev.fired(NOT_A4)
    dt = time.perf_counter() - t0
    report(7, ok and dt < 2, f"FLS: solvable, unimodular, not nilpotent, b1={b[1]} < b3={b[3]}, B_MEMBER fires", dt)


def test_criterion_08_kunneth_and_duality():
    t0 = time.perf_counter()
    rng = random.Random(808)
    pool = [e.algebra() for e in all_entries()]
    ok = True
    pairs = 0
    dual = 0
    while pairs < 100:
        g, h = rng.choice(pool), rng.choice(pool)
        if g.dim + h.dim > 10:
            continue
        pairs += 1
        s = direct_sum(g, h)
        bs = betti(s)
        ok &= bs == convolve(betti(g), betti(h))
        for L, b in ((g, betti(g)), (h, betti(h)), (s, bs)):
            if structure_report(L).nilpotent:
                dual += 1
                ok &= b == b[::-1]
    dt = time.perf_counter() - t0
    report(8, ok and dt < 60, f"{pairs} direct sums match convolution; duality on {dual} nilpotent algebras", dt)


def _random_exact(L, rng, k):
    if k == 0:
        return Form.zero(L.dim, 1)
    f = Form(L.dim, k - 1, {I: rng.randint(-3, 3) for I in basis(L.dim, k - 1) if rng.random() < 0.5})
    return ce_differential(L, f)


def test_criterion_09_cup_contract():
    t0 = time.perf_counter()
    rng = random.Random(909)
    ok = True
    n_entries = 0
    for e in all_entries():
        L = e.algebra()
        if L.dim > 6 or L.dim < 2:
            continue
        n_entries += 1
        b = betti(L)
        degrees = [(p, q) for p in range(1, L.dim) for q in range(1, L.dim) if p + q <= L.dim and b[p] and b[q]]
        for _ in range(100):
            p, q = rng.choice(degrees)
            x = from_coordinates(L, p, [rng.randint(-3, 3) for _ in range(b[p])])
            y = from_coordinates(L, q, [rng.randint(-3, 3) for _ in range(b[q])])
            xy = cup(L, x, y)
            ok &= xy == cup(L, y, x) * (-1) ** (p * q)
            x2 = class_of(L, x.representative + _random_exact(L, rng, p))
            y2 = class_of(L, y.representative + _random_exact(L, rng, q))
            ok &= cup(L, x2, y2).coordinates == xy.coordinates
    dt = time.perf_counter() - t0
    report(9, ok, f"graded commutativity and representative independence, 100 pairs x {n_entries} entries", dt)


def test_criterion_10_classifier_table():
    sa = lambda b: GroupProfile(tuple(b), None, {"sa_asserted": True}, str(b))
    rows = []
    # (i): necessary condition b1 >= b3 for A_4; (ii): b1 < b3 => B
    ev = classify(sa((1, 3, 4, 3, 1)))
    rows.append(("(i) passes", ev.get(NOT_A4).verdict != FIRES and ev.get(B_MEMBER).verdict != FIRES))
    ev = classify(sa((1, 2, 3, 4)))
    rows.append(("(i)/(ii) fire", ev.fired(NOT_A4) and ev.get(B_MEMBER).part == "(ii)" and ev.fired(B_MEMBER)))
    # (iii): Betti numbers of a manifold with pi_3 = 0
    ev = classify(GroupProfile((1, 1, 0, 2), None, {"manifold_betti": True, "pi3_trivial_asserted": True}))
    rows.append(("(iii)", ev.fired(B_MEMBER) and ev.get(B_MEMBER).part == "(iii)"))

    def parts(p, q):
        return {v.part for v in product_criteria(p, q).verdicts if v.verdict == FIRES}

    rows.append(("(iv)", parts(sa((1, 0, 0, 1)), sa((1, 0, 0, 0))) == {"(iv)"}))
    rows.append(("(v)", parts(sa((1, 0, 2, 0)), sa((1, 1, 0, 0))) == {"(v)"}))
    p, z4 = surface_profile(2), torus_profile(4)
    rows.append(("(vi)", "(vi)" in parts(p, z4) and classify(kunneth(p, z4)).fired(B_MEMBER)))
    rng = random.Random(10)
    ok_b3 = True
    for _ in range(100):
        P = sa([1] + [rng.randint(0, 9) for _ in range(4)])
        Q = sa([1] + [rng.randint(0, 9) for _ in range(4)])
        term = Q.betti[3] + P.betti[1] * Q.betti[2] + P.betti[2] * Q.betti[1] + P.betti[3]
        ok_b3 &= b3_product(P, Q) == term == kunneth(P, Q).betti[3]
    rows.append(("b3 formula", ok_b3))
    failed = [name for name, ok in rows if not ok]
    report(10, not failed, "criteria (i)-(vi) and the b3 product formula" + (f"; failed {failed}" if failed else ""))


def test_criterion_11_reproducibility():
    cmd = [sys.executable, "-m", "aspherical.cli", "check", "catalog.alg", "--format", "machine"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    ok = a.returncode == b.returncode == 0 and a.stdout == b.stdout and a.stdout
    report(11, bool(ok), f"two runs of check produce byte-identical machine output ({len(a.stdout)} bytes)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
