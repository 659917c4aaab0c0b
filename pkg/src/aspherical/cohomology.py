"""
Cohomology of the Chevalley-Eilenberg complex over Q: Betti numbers,
canonical representative cocycles, class coordinates and cup products.

Representatives in degree k are chosen as follows: take the reduced echelon
basis of the coboundaries B^k (lexicographic pivots), reduce a basis of the
cocycles Z^k modulo it, and keep the reduced echelon basis of what remains.
Coordinates of a cocycle are read off at the pivots of that complement.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import DimensionMismatch, Form, basis, dim_lambda, tuple_to_mask, wedge
from .lie import _d_monomial, ce_differential, is_unimodular
from .linalg import RatMatrix, kernel, rank, reduce_full, rref


class NotClosedError(ValueError):
    pass


class NotApplicable(ValueError):
    pass


def _index(n, k):
    return {tuple_to_mask(idx): pos for pos, idx in enumerate(basis(n, k))}


def _images(L, k):
    """d of each basis monomial of degree k, as sparse vectors in degree k+1 coordinates."""
    n = L.dim
    if k < 0 or k >= n:
        return [{} for _ in basis(n, k)]
    target = _index(n, k + 1)
    out = []
    for idx in basis(n, k):
        img = _d_monomial(L, tuple_to_mask(idx))
        out.append({target[m]: c for m, c in img.items()})
    return out


def differential_matrix(L, k):
    """Matrix of d: Lambda^k -> Lambda^{k+1}; columns indexed by basis(n, k)."""
    n = L.dim
    return RatMatrix.from_columns(dim_lambda(n, k + 1), _images(L, k))


def _cache(L):
    c = getattr(L, "_cohom", None)
    if c is None:
        c = L._cohom = {}
    return c


def differential_rank(L, k):
    cache = _cache(L)
    key = ("rank", k)
    if key not in cache:
        cache[key] = rank(_images(L, k)) if 0 <= k < L.dim else 0
    return cache[key]


def betti(L):
    n = L.dim
    return [dim_lambda(n, k) - differential_rank(L, k) - differential_rank(L, k - 1) for k in range(n + 1)]


def euler_characteristic(b):
    return sum((-1) ** k * x for k, x in enumerate(b))


@dataclass
class _Degree:
    coboundary_rref: list
    rep_rref: list
    reps: list


def _degree_data(L, k):
    cache = _cache(L)
    key = ("deg", k)
    if key in cache:
        return cache[key]
    n = L.dim
    if k < 0 or k > n:
        data = _Degree([], [], [])
    else:
        b_rref = rref(_images(L, k - 1)) if k > 0 else []
        imgs = _images(L, k)
        rows = [{} for _ in range(dim_lambda(n, k + 1))]
        for j, col in enumerate(imgs):
            for i, v in col.items():
                rows[i][j] = v
        z = kernel([r for r in rows if r], dim_lambda(n, k))
        reduced = [reduce_full(v, b_rref) for v in z]
        rep_rref = rref([v for v in reduced if v])
        reps = [Form.from_vector(n, k, [row.get(i, 0) for i in range(dim_lambda(n, k))]) for _, row in rep_rref]
        data = _Degree(b_rref, rep_rref, reps)
    cache[key] = data
    return data


def cohomology_basis(L, k):
    """Canonical representative cocycles of H^k."""
    return list(_degree_data(L, k).reps)


class CohomologyClass:
    """A class in H^k with a representative cocycle and canonical coordinates."""

    __slots__ = ("algebra", "degree", "representative", "coordinates")

    def __init__(self, algebra, degree, representative, coordinates):
        self.algebra = algebra
        self.degree = degree
        self.representative = representative
        self.coordinates = tuple(coordinates)

    @property
    def is_zero(self):
        return not any(self.coordinates)

    def __eq__(self, other):
        if isinstance(other, CohomologyClass):
            return self.degree == other.degree and self.coordinates == other.coordinates
        if other == 0:
            return self.is_zero
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, self.coordinates))

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("classes of different degree")
        return CohomologyClass(self.algebra, self.degree, self.representative + other.representative,
                               [a + b for a, b in zip(self.coordinates, other.coordinates)])

    def __neg__(self):
        return CohomologyClass(self.algebra, self.degree, -self.representative, [-a for a in self.coordinates])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, CohomologyClass):
            return cup(self.algebra, self, scalar)
        s = Fraction(scalar)
        return CohomologyClass(self.algebra, self.degree, self.representative * s, [a * s for a in self.coordinates])

    __rmul__ = __mul__

    def __repr__(self):
        return f"CohomologyClass(degree={self.degree}, coordinates={[str(c) for c in self.coordinates]})"


def coordinates(L, a):
    """Coordinates of a closed form in the canonical basis of H^k (no closedness check)."""
    n = L.dim
    k = a.degree
    data = _degree_data(L, k)
    if k > n:
        return ()
    index = _index(n, k)
    vec = {index[m]: c for m, c in a.mask_items()}
    r = reduce_full(vec, data.coboundary_rref)
    coords = [r.get(p, Fraction(0)) for p, _ in data.rep_rref]
    for c, (_, row) in zip(coords, data.rep_rref):
        if c:
            for i, x in row.items():
                w = r.get(i, 0) - c * x
                if w:
                    r[i] = w
                else:
                    r.pop(i, None)
    if r:
        raise NotClosedError("form is not a cocycle")
    return tuple(coords)


def class_of(L, a):
    """Cohomology class of a closed form; raises NotClosedError when d a != 0.

    An exact form gives the zero class (``is_zero`` is True).
    """
    if a.n != L.dim:
        raise DimensionMismatch(f"form in dim {a.n}, algebra of dim {L.dim}")
    if a.degree > L.dim:
        return CohomologyClass(L, a.degree, a, ())
    if ce_differential(L, a):
        raise NotClosedError("form is not closed")
    return CohomologyClass(L, a.degree, a, coordinates(L, a))


def basis_classes(L, k):
    reps = cohomology_basis(L, k)
    out = []
    for i, r in enumerate(reps):
        co = [Fraction(0)] * len(reps)
        co[i] = Fraction(1)
        out.append(CohomologyClass(L, k, r, co))
    return out


def from_coordinates(L, k, coords):
    reps = cohomology_basis(L, k)
    if len(coords) != len(reps):
        raise ValueError(f"H^{k} has dimension {len(reps)}")
    rep = Form.zero(L.dim, k)
    for c, r in zip(coords, reps):
        if c:
            rep = rep + r * c
    return CohomologyClass(L, k, rep, [Fraction(c) for c in coords])


def cup(L, x, y):
    """Cup product, computed on representatives; degree beyond n gives the zero class."""
    deg = x.degree + y.degree
    if deg > L.dim:
        return CohomologyClass(L, deg, Form.zero(L.dim, deg), ())
    prod = wedge(x.representative, y.representative)
    return CohomologyClass(L, deg, prod, coordinates(L, prod))


@dataclass
class CohomologyRing:
    algebra: object
    betti: list
    bases: list
    cup_table: dict = field(default_factory=dict)

    def product(self, p, i, q, j):
        """Coordinates of (basis_p[i]) u (basis_q[j]) in H^{p+q}."""
        return self.cup_table[(p, q)][i][j]


def cohomology_ring(L, max_degree=None):
    """Betti numbers, bases and cup-product structure constants up to total degree max_degree."""
    n = L.dim
    top = n if max_degree is None else min(max_degree, n)
    b = betti(L)
    bases = [cohomology_basis(L, k) for k in range(n + 1)]
    classes = [basis_classes(L, k) for k in range(n + 1)]
    table = {}
    for p in range(1, top + 1):
        for q in range(1, top + 1 - p):
            table[(p, q)] = [[cup(L, x, y).coordinates for y in classes[q]] for x in classes[p]]
    return CohomologyRing(L, b, bases, table)


def pairing_matrix(L, k):
    """Matrix of H^k x H^{n-k} -> H^n (requires b_n = 1)."""
    n = L.dim
    left = basis_classes(L, k)
    right = basis_classes(L, n - k)
    return [[cup(L, x, y).coordinates[0] for y in right] for x in left]


def poincare_check(L):
    """Betti symmetry plus nondegeneracy of the cup pairing into H^n.

    Raises NotApplicable for non-unimodular algebras.
    """
    if not is_unimodular(L):
        raise NotApplicable("algebra is not unimodular")
    n = L.dim
    b = betti(L)
    if b[n] != 1:
        return False
    if any(b[k] != b[n - k] for k in range(n + 1)):
        return False
    for k in range(n // 2 + 1):
        m = pairing_matrix(L, k)
        if rank([{j: v for j, v in enumerate(row) if v} for row in m]) != b[k]:
            return False
    return True


def convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out
