"""
Exact exterior algebra on the dual of an n-dimensional Lie algebra.

Forms are sparse maps from strictly increasing index tuples (1-based) to
Fractions.  Internally a key is a bitmask, bit ``i-1`` standing for ``e^i``.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb


class DimensionMismatch(ValueError):
    pass


def basis(n, k):
    """All C(n, k) increasing k-subsets of 1..n, lexicographic."""
    if k < 0 or k > n:
        return []
    return list(combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def mask_to_tuple(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def tuple_to_mask(idx):
    mask = 0
    for i in idx:
        mask |= 1 << (i - 1)
    return mask


def wedge_sign(a, b):
    """Sign of e^A ^ e^B -> e^(A|B) for disjoint masks (0 if they meet)."""
    if a & b:
        return 0
    # count pairs (i in A, j in B) with i > j
    swaps = 0
    while b:
        low = b & -b
        swaps += bin(a & ~((low << 1) - 1)).count("1")
        b ^= low
    return -1 if swaps & 1 else 1


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class Form:
    """Homogeneous element of Lambda^k g*, immutable and canonical (no zero terms)."""

    __slots__ = ("n", "degree", "_terms", "_hash")

    def __init__(self, n, degree, terms=None):
        if degree < 0:
            raise ValueError("negative degree")
        self.n = n
        self.degree = degree
        clean = {}
        top = 1 << n
        for key, c in (terms or {}).items():
            if not isinstance(key, int):
                key = tuple(key)
                if list(key) != sorted(set(key)):
                    raise ValueError(f"index set {key} is not strictly increasing")
                if key and (key[0] < 1 or key[-1] > n):
                    raise ValueError(f"index set {key} out of range 1..{n}")
                key = tuple_to_mask(key)
            if key >= top or bin(key).count("1") != degree:
                raise ValueError(f"term {mask_to_tuple(key)} does not fit degree {degree} in dim {n}")
            c = _frac(c)
            if c:
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, degree, terms):
        # trusted constructor: keys are valid masks, no zero values
        obj = cls.__new__(cls)
        obj.n = n
        obj.degree = degree
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n, degree):
        return cls._raw(n, degree, {})

    @classmethod
    def monomial(cls, n, indices, coeff=1):
        indices = tuple(indices)
        return cls(n, len(indices), {indices: coeff})

    @classmethod
    def from_vector(cls, n, degree, vec):
        """Inverse of :meth:`to_vector` in the lexicographic basis."""
        keys = basis(n, degree)
        if len(vec) != len(keys):
            raise DimensionMismatch(f"vector of length {len(vec)} for C({n},{degree})={len(keys)}")
        return cls._raw(n, degree, {tuple_to_mask(k): _frac(c) for k, c in zip(keys, vec) if c})

    def to_vector(self):
        return [self._terms.get(tuple_to_mask(k), Fraction(0)) for k in basis(self.n, self.degree)]

    @property
    def terms(self):
        return {mask_to_tuple(m): c for m, c in sorted(self._terms.items(), key=lambda t: mask_to_tuple(t[0]))}

    def mask_items(self):
        return self._terms.items()

    def coeff(self, indices):
        return self._terms.get(tuple_to_mask(indices), Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Form):
            return self.n == other.n and self.degree == other.degree and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.degree, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"ambient dimensions {self.n} and {other.n}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        if self.degree != other.degree:
            if not other:
                return self
            if not self:
                return other
            raise ValueError("cannot add forms of different degree")
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Form._raw(self.n, self.degree, out)

    __radd__ = __add__

    def __neg__(self):
        return Form._raw(self.n, self.degree, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Form):
            return wedge(self, scalar)
        s = _frac(scalar)
        if not s:
            return Form.zero(self.n, self.degree)
        return Form._raw(self.n, self.degree, {m: c * s for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __repr__(self):
        if not self._terms:
            return f"Form(n={self.n}, degree={self.degree}, 0)"
        parts = []
        for idx, c in self.terms.items():
            name = "e" + "".join(map(str, idx)) if all(i < 10 for i in idx) else "e" + str(idx)
            if not idx:
                name = "1"
            parts.append(f"{c}*{name}")
        return " + ".join(parts)


def e(n, *indices):
    """Shorthand for the monomial e^{i1} ^ ... ^ e^{ik} in dimension n."""
    return Form.monomial(n, sorted(indices), 1 if list(indices) == sorted(indices) else _perm_sign(indices))


def _perm_sign(seq):
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def wedge(a, b):
    if a.n != b.n:
        raise DimensionMismatch(f"ambient dimensions {a.n} and {b.n}")
    n = a.n
    deg = a.degree + b.degree
    if deg > n:
        return Form.zero(n, deg)
    out = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            s = wedge_sign(ma, mb)
            if s:
                m = ma | mb
                v = out.get(m, 0) + (ca * cb if s > 0 else -ca * cb)
                if v:
                    out[m] = v
                else:
                    del out[m]
    return Form._raw(n, deg, out)


def power(a, m):
    """m-fold wedge power (the unit 0-form for m = 0); zero when m * degree exceeds n."""
    if m < 0:
        raise ValueError("power needs a nonnegative exponent")
    if m == 0:
        return Form._raw(a.n, 0, {0: Fraction(1)})
    out = a
    for _ in range(m - 1):
        if not out:
            return Form.zero(a.n, a.degree * m)
        out = wedge(out, a)
    return out


def top_coefficient(a):
    """Coefficient of e^{1...n} (a must be of top degree or zero)."""
    return a._terms.get((1 << a.n) - 1, Fraction(0))


def standard_symplectic(n):
    """e^{12} + e^{34} + ... on R^n, n even."""
    if n % 2:
        raise ValueError("odd dimension")
    return Form(n, 2, {(2 * i + 1, 2 * i + 2): 1 for i in range(n // 2)})


def dim_lambda(n, k):
    return comb(n, k) if 0 <= k <= n else 0
