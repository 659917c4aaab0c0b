"""
Invariant symplectic forms: closed 2-forms, the Pfaffian polynomial of the
closed-form family, witness construction, degree-2 cup length, H^2
decomposability and integral rescaling.
"""

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, lcm

from .cohomology import basis_classes, betti, class_of, coordinates, cohomology_basis, cup
from .exterior import Form, basis, dim_lambda, power, top_coefficient, wedge_sign
from .lie import Solvability, ce_differential, structure_report
from .linalg import det_bareiss, kernel, rank
from . import cohomology

DEFAULT_THRESHOLD = 12


class Verdict(enum.Enum):
    SYMPLECTIC = "SYMPLECTIC"
    NOT_SYMPLECTIC = "NOT_SYMPLECTIC"
    UNKNOWN = "UNKNOWN"


class Method(enum.Enum):
    SYMBOLIC_EXPANSION = "SYMBOLIC_EXPANSION"
    POINT_SEARCH = "POINT_SEARCH"


@dataclass(frozen=True)
class PfaffianPolynomial:
    """Coefficient of e^{1..n} in (sum_i l_i sigma_i)^(n/2) as {exponent tuple: Fraction}."""

    nvars: int
    degree: int
    expansion: dict

    def is_zero(self):
        return not self.expansion

    def __call__(self, point):
        total = Fraction(0)
        for exps, c in self.expansion.items():
            term = c
            for x, k in zip(point, exps):
                if k:
                    term *= Fraction(x) ** k
            total += term
        return total

    def substitute(self, var, value):
        """Fix variable ``var`` to ``value``; the variable keeps exponent 0."""
        out = {}
        value = Fraction(value)
        for exps, c in self.expansion.items():
            k = exps[var]
            v = c * value ** k if k else c
            if not v:
                continue
            key = exps[:var] + (0,) + exps[var + 1:]
            w = out.get(key, 0) + v
            if w:
                out[key] = w
            else:
                out.pop(key, None)
        return PfaffianPolynomial(self.nvars, self.degree, out)


@dataclass(frozen=True)
class SymplecticReport:
    verdict: Verdict
    witness: Form | None = None
    top_power: Form | None = None
    method: Method | None = None
    aspherical_note: bool = False
    n_closed: int = 0
    reason: str | None = None
    pfaffian: PfaffianPolynomial | None = None


def closed_two_forms(L):
    """Echelon-canonical basis of ker(d: Lambda^2 -> Lambda^3)."""
    n = L.dim
    if n < 2:
        return []
    imgs = cohomology._images(L, 2)
    rows = [{} for _ in range(dim_lambda(n, 3))]
    for j, col in enumerate(imgs):
        for i, v in col.items():
            rows[i][j] = v
    ker = kernel([r for r in rows if r], dim_lambda(n, 2))
    nb = dim_lambda(n, 2)
    return [Form.from_vector(n, 2, [v.get(i, 0) for i in range(nb)]) for v in ker]


def _poly_forms_power(gens, q, keep=None):
    """Expand (sum_i l_i g_i)^q as {mask: {exponent: coeff}}.

    ``keep`` restricts the final product to one mask (the top monomial).
    """
    m = len(gens)
    lin = {}
    for i, g in enumerate(gens):
        exps = tuple(1 if t == i else 0 for t in range(m))
        for mask, c in g.mask_items():
            lin.setdefault(mask, {})[exps] = c
    cur = lin
    for step in range(q - 1):
        last = step == q - 2
        nxt = {}
        for ma, pa in cur.items():
            for mb, pb in lin.items():
                if keep is not None and last and (ma | mb) != keep:
                    continue
                s = wedge_sign(ma, mb)
                if not s:
                    continue
                target = nxt.setdefault(ma | mb, {})
                for ea, ca in pa.items():
                    for eb, cb in pb.items():
                        ex = tuple(x + y for x, y in zip(ea, eb))
                        v = target.get(ex, 0) + s * ca * cb
                        if v:
                            target[ex] = v
                        else:
                            target.pop(ex, None)
        cur = {mk: p for mk, p in nxt.items() if p}
    return cur


def pfaffian_polynomial(L, forms=None):
    n = L.dim
    if n % 2:
        raise ValueError("odd dimension")
    if forms is None:
        forms = closed_two_forms(L)
    p = n // 2
    top = (1 << n) - 1
    if not forms:
        return PfaffianPolynomial(0, p, {})
    if p == 0:
        return PfaffianPolynomial(len(forms), 0, {(0,) * len(forms): Fraction(1)})
    expanded = _poly_forms_power(forms, p, keep=top)
    return PfaffianPolynomial(len(forms), p, dict(expanded.get(top, {})))


def _desingularize(poly):
    """Integer point where a nonzero polynomial does not vanish.

    Variables are fixed one at a time, trying 0, 1, -1, 2, -2, ...; each value
    is accepted only if the specialised polynomial stays nonzero, which some
    value among degree + 1 candidates always achieves.
    """
    point = []
    cur = poly
    order = [0]
    for r in range(1, poly.degree + 2):
        order += [r, -r]
    for var in range(poly.nvars):
        for v in order:
            nxt = cur.substitute(var, v)
            if not nxt.is_zero():
                cur = nxt
                point.append(v)
                break
        else:
            raise AssertionError("desingularization failed on a nonzero polynomial")
    return point


def _combine(forms, point, n, degree=2):
    out = Form.zero(n, degree)
    for c, f in zip(point, forms):
        if c:
            out = out + f * c
    return out


def _nondegenerate(omega):
    n = omega.n
    mat = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in omega.terms.items():
        mat[i - 1][j - 1] = c
        mat[j - 1][i - 1] = -c
    return det_bareiss(mat) != 0


def _point_search(forms, n, max_trials, seed=0):
    m = len(forms)
    rng = random.Random(seed)
    radius = 1
    trials = 0
    while trials < max_trials:
        for _ in range(min(32, max_trials - trials)):
            pt = [rng.randint(-radius, radius) for _ in range(m)]
            trials += 1
            omega = _combine(forms, pt, n)
            if omega and _nondegenerate(omega):
                return omega
        radius *= 2
    return None


def find_symplectic(L, threshold=DEFAULT_THRESHOLD, max_trials=4096, report=None):
    """Decide whether some closed invariant 2-form has nonzero top power.

    SYMPLECTIC always comes with a witness whose closedness and top power are
    re-verified here; NOT_SYMPLECTIC is only issued from the full expansion.
    Odd dimensions give NOT_SYMPLECTIC with reason ODD_DIMENSION.
    """
    n = L.dim
    if report is None:
        report = structure_report(L)
    note = report.completely_solvable is Solvability.CERTIFIED_YES
    if n % 2:
        return SymplecticReport(Verdict.NOT_SYMPLECTIC, reason="ODD_DIMENSION")
    forms = closed_two_forms(L)
    m = len(forms)
    if n == 0:
        one = Form(0, 0, {(): 1})
        return SymplecticReport(Verdict.SYMPLECTIC, Form.zero(0, 2), one, Method.SYMBOLIC_EXPANSION, note, m)
    if m <= threshold:
        pf = pfaffian_polynomial(L, forms)
        if pf.is_zero():
            return SymplecticReport(Verdict.NOT_SYMPLECTIC, method=Method.SYMBOLIC_EXPANSION, n_closed=m,
                                    reason="PFAFFIAN_IDENTICALLY_ZERO", pfaffian=pf)
        omega = _combine(forms, _desingularize(pf), n)
        method = Method.SYMBOLIC_EXPANSION
    else:
        pf = None
        budget = min(max_trials, (n // 2 + 1) ** m)
        omega = _point_search(forms, n, budget)
        method = Method.POINT_SEARCH
        if omega is None:
            return SymplecticReport(Verdict.UNKNOWN, method=method, n_closed=m, reason="POINT_SEARCH_EXHAUSTED")
    top = power(omega, n // 2)
    if ce_differential(L, omega) or not top_coefficient(top):
        raise AssertionError("witness failed verification")
    return SymplecticReport(Verdict.SYMPLECTIC, omega, top, method, note, m, pfaffian=pf)


def _class_power_nonzero(L, reps, q, seed=0, trials=24):
    n = L.dim
    if 2 * q > n:
        return False
    rng = random.Random(seed + q)
    for t in range(trials):
        radius = 1 << (t // 8)
        pt = [rng.randint(-radius, radius) for _ in reps]
        omega = _combine(reps, pt, n)
        if omega and any(coordinates(L, power(omega, q))):
            return True
    expanded = _poly_forms_power(reps, q)
    # collect, per exponent vector, the 2q-form multiplying that monomial
    by_exp = {}
    for mask, pol in expanded.items():
        for ex, c in pol.items():
            by_exp.setdefault(ex, {})[mask] = c
    for ex, terms in by_exp.items():
        if any(coordinates(L, Form._raw(n, 2 * q, terms))):
            return True
    return False


def cup_length_two(L):
    """Largest q such that [a]^q != 0 for some class a in H^2 (0 if H^2 = 0)."""
    reps = cohomology_basis(L, 2)
    if not reps:
        return 0
    for q in range(L.dim // 2, 0, -1):
        if _class_power_nonzero(L, reps, q):
            return q
    return 0


def is_h2_decomposable(L):
    """True iff cup products of degree-1 classes span H^2."""
    h1 = basis_classes(L, 1)
    b2 = len(cohomology_basis(L, 2))
    vecs = []
    for i, x in enumerate(h1):
        for y in h1[i + 1:]:
            co = cup(L, x, y).coordinates
            vecs.append({k: v for k, v in enumerate(co) if v})
    return rank(vecs) == b2


def integralize(a):
    """(N a, N) with N the lcm of the coefficient denominators."""
    n = 1
    for c in a.terms.values():
        n = lcm(n, c.denominator)
    return a * n, n
