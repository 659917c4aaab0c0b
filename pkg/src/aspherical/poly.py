"""
Univariate polynomials over Q as coefficient lists (lowest degree first),
with Sturm-sequence real root counting.
"""

from fractions import Fraction

from .linalg import det_bareiss


def trim(p):
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(trim(p)) - 1


def sub(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_poly(p, q):
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    r = list(p)
    lq = q[-1]
    while len(r) >= len(q) and r:
        shift = len(r) - len(q)
        c = r[-1] / lq
        quot[shift] = c
        for i, b in enumerate(q):
            r[i + shift] -= c * b
        r = trim(r)
    return trim(quot), r


def deriv(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def monic(p):
    p = trim(p)
    return [c / p[-1] for c in p] if p else p


def gcd_poly(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sturm_sequence(p):
    p = trim(p)
    seq = [p, deriv(p)]
    while seq[-1]:
        r = divmod_poly(seq[-2], seq[-1])[1]
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _sign_changes(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_distinct_real_roots(p):
    """Number of distinct real roots, by sign changes of the Sturm chain at -inf and +inf."""
    p = trim(p)
    if len(p) <= 1:
        return 0
    seq = sturm_sequence(p)
    at_pos = [1 if s[-1] > 0 else -1 for s in seq]
    at_neg = [(1 if s[-1] > 0 else -1) * (-1 if (len(s) - 1) % 2 else 1) for s in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def count_real_roots(p):
    """Number of real roots counted with multiplicity."""
    p = trim(p)
    if len(p) <= 1:
        return 0
    g = gcd_poly(p, deriv(p))
    # roots of g are the repeated roots of p, each with multiplicity one less
    return count_distinct_real_roots(p) + count_real_roots(g)


def all_roots_real(p):
    return count_real_roots(p) == degree(p)


def interpolate(xs, ys):
    """Coefficients of the unique polynomial of degree < len(xs) through the points."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    # Newton divided differences
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        out = mul(out, [Fraction(-xs[i]), Fraction(1)]) if out else []
        out = _add_const(out, coef[i])
    return trim(out)


def _add_const(p, c):
    p = list(p) or [Fraction(0)]
    p[0] += c
    return p


def charpoly(matrix):
    """det(t I - M) by Bareiss determinants at t = 0..n and interpolation."""
    n = len(matrix)
    xs = list(range(n + 1))
    ys = []
    for t in xs:
        a = [[(t if i == j else 0) - Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
        ys.append(det_bareiss(a))
    return interpolate(xs, ys)
