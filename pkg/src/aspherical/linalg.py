"""
Exact linear algebra over Q.

Vectors are sparse dicts ``{column: value}``.  Elimination is fraction-free:
rows are scaled to primitive integer vectors and combined by
``r <- p*r - a*s`` followed by division by the row content, so entries stay
small integers until the final reduced echelon form is normalised.  Pivots are
always the leftmost nonzero column, which makes every result deterministic.
"""

from fractions import Fraction
from math import gcd, lcm


def _primitive(vec):
    """Scale a sparse rational vector to a primitive integer vector (leading entry > 0)."""
    if not vec:
        return {}
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    ivec = {}
    g = 0
    for k, c in vec.items():
        v = int(c * den)
        if v:
            ivec[k] = v
            g = gcd(g, v)
    if ivec[min(ivec)] < 0:
        g = -g
    if g != 1:
        ivec = {k: v // g for k, v in ivec.items()}
    return ivec


def _combine(p, r, a, s):
    """Primitive part of p*r - a*s for integer sparse vectors."""
    out = {k: p * v for k, v in r.items()}
    for k, v in s.items():
        w = out.get(k, 0) - a * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    if not out:
        return out
    g = 0
    for v in out.values():
        g = gcd(g, v)
        if g == 1:
            break
    if out[min(out)] < 0:
        g = -g
    if g != 1:
        out = {k: v // g for k, v in out.items()}
    return out


class Echelon:
    """Incremental row echelon form of a row space (integer pivot rows)."""

    def __init__(self):
        self.rows = {}  # pivot column -> primitive integer row, leading at pivot

    def reduce(self, vec):
        """Eliminate every pivot column from vec (integer sparse)."""
        v = _primitive(vec)
        while v:
            # only leading-column reduction is needed for insertion
            lc = min(v)
            s = self.rows.get(lc)
            if s is None:
                return v
            v = _combine(s[lc], v, v[lc], s)
        return v

    def add(self, vec):
        """Insert vec; return True if it increased the rank."""
        v = self.reduce(vec)
        if not v:
            return False
        self.rows[min(v)] = v
        return True

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def contains(self, vec):
        return not self.reduce(vec)

    def rref(self):
        """Reduced echelon basis: list of (pivot, Fraction row) with unit pivots."""
        piv = sorted(self.rows)
        red = {}
        for c in reversed(piv):
            r = self.rows[c]
            for c2 in piv:
                if c2 > c and c2 in r:
                    s = red[c2]
                    # s is integer-valued with pivot s[c2]
                    r = _combine(s[c2], r, r[c2], s)
            red[c] = r
        out = []
        for c in piv:
            r = red[c]
            p = r[c]
            out.append((c, {k: Fraction(v, p) for k, v in r.items()}))
        return out


def echelon(vectors):
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech


def rank(vectors):
    return echelon(vectors).rank


def rref(vectors):
    return echelon(vectors).rref()


def reduce_full(vec, rref_rows):
    """Remainder of vec after clearing all pivot columns of a reduced basis."""
    v = {k: Fraction(c) for k, c in vec.items() if c}
    for c, row in rref_rows:
        a = v.get(c)
        if a:
            for k, x in row.items():
                w = v.get(k, 0) - a * x
                if w:
                    v[k] = w
                else:
                    v.pop(k, None)
    return v


def kernel(rows, ncols):
    """Basis of {x : A x = 0} for A given by sparse rows, one vector per free column.

    Vector for free column f has x_f = 1, zero at other free columns; the
    basis is ordered by f, which is the echelon-canonical choice.
    """
    red = rref(rows)
    pivots = {c for c, _ in red}
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        x = {f: Fraction(1)}
        for c, row in red:
            a = row.get(f)
            if a:
                x[c] = -a
        basis.append(x)
    return basis


class RatMatrix:
    """Dense rational matrix; elimination goes through the sparse routines above."""

    def __init__(self, rows, cols, entries=None):
        self.nrows = rows
        self.ncols = cols
        if entries is None:
            entries = [[Fraction(0)] * cols for _ in range(rows)]
        else:
            entries = [[Fraction(x) for x in row] for row in entries]
            if len(entries) != rows or any(len(r) != cols for r in entries):
                raise ValueError("entry grid does not match shape")
        self.entries = entries

    @classmethod
    def from_columns(cls, nrows, columns):
        m = cls(nrows, len(columns))
        for j, col in enumerate(columns):
            for i, v in col.items():
                m.entries[i][j] = Fraction(v)
        return m

    def sparse_rows(self):
        return [{j: v for j, v in enumerate(row) if v} for row in self.entries]

    def sparse_columns(self):
        cols = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                if v:
                    cols[j][i] = v
        return cols

    def transpose(self):
        return RatMatrix(self.ncols, self.nrows, [list(c) for c in zip(*self.entries)] if self.nrows else [[]] * self.ncols)

    def rank(self):
        return rank(self.sparse_rows())

    def kernel(self):
        return [[x.get(j, Fraction(0)) for j in range(self.ncols)] for x in kernel(self.sparse_rows(), self.ncols)]

    def rref(self):
        return rref(self.sparse_rows())

    def is_zero(self):
        return not any(any(row) for row in self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.entries == other.entries and self.ncols == other.ncols

    def __repr__(self):
        return f"RatMatrix({self.nrows}x{self.ncols}, rank={self.rank()})"


def det_bareiss(mat):
    """Determinant of a square matrix of Fractions/ints by Bareiss elimination."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    den = 1
    for row in mat:
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
    a = [[int(Fraction(x) * den) for x in row] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], den ** n)
