"""
Lie algebras given by structure constants, their structural predicates and the
Chevalley-Eilenberg differential.

Sign convention: the tuple notation ``(0,0,12)`` lists ``d e^k`` literally, and
brackets are recovered by ``c^k_ij = -(coefficient of e^i^e^j in d e^k)``, so
that ``d e^k = -sum_{i<j} c^k_ij e^i ^ e^j``.  With this convention ``d`` is the
dual of the bracket, ``d alpha(x, y) = -alpha([x, y])``.
"""

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from . import poly
from .exterior import DimensionMismatch, Form, basis, mask_to_tuple, tuple_to_mask, wedge_sign
from .linalg import Echelon, RatMatrix


class ParseError(ValueError):
    def __init__(self, msg, line=1, col=1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


class JacobiError(ValueError):
    pass


class LieAlgebra:
    """n-dimensional Lie algebra over Q with basis e_1..e_n (1-based)."""

    def __init__(self, dim, brackets=None, name=None, check=True):
        self.dim = dim
        self.name = name
        # structure constants c[(i, j)] = {k: c^k_ij}, i < j
        self._c = {}
        for (i, j), val in (brackets or {}).items():
            if isinstance(val, Form):
                if val.degree != 1 or val.n != dim:
                    raise ValueError(f"bracket [e{i},e{j}] must be a degree-1 form in dim {dim}")
                vec = {idx[0]: c for idx, c in val.terms.items()}
            else:
                vec = {k: Fraction(c) for k, c in dict(val).items() if c}
            if not (1 <= i <= dim and 1 <= j <= dim) or any(not 1 <= k <= dim for k in vec):
                raise ValueError(f"index out of range in bracket [e{i},e{j}]")
            if i == j:
                if vec:
                    raise ValueError(f"[e{i},e{i}] must vanish")
                continue
            if i > j:
                i, j = j, i
                vec = {k: -c for k, c in vec.items()}
            if vec:
                self._c[(i, j)] = vec
        self._d1 = []
        for k in range(1, dim + 1):
            terms = {(i, j): -v[k] for (i, j), v in self._c.items() if k in v}
            self._d1.append(Form(dim, 2, terms))
        self._dcache = {}
        if check:
            bad = check_jacobi(self)
            if bad:
                raise JacobiError(f"Jacobi identity fails on triples {bad[:5]}")

    @classmethod
    def from_differentials(cls, dim, diffs, name=None, check=True):
        """Build from the list (d e^1, ..., d e^n) of degree-2 forms."""
        if len(diffs) != dim:
            raise ValueError("need one differential per generator")
        brackets = {}
        for k, form in enumerate(diffs, start=1):
            if form.n != dim or (form and form.degree != 2):
                raise ValueError(f"d e^{k} must be a 2-form in dimension {dim}")
            for (i, j), c in form.terms.items():
                brackets.setdefault((i, j), {})[k] = -c
        return cls(dim, brackets, name=name, check=check)

    @property
    def brackets(self):
        """{(i, j): [e_i, e_j] as a degree-1 form} for i < j with nonzero bracket."""
        return {ij: Form(self.dim, 1, {(k,): c for k, c in v.items()}) for ij, v in sorted(self._c.items())}

    def structure_constant(self, i, j, k):
        if i == j:
            return Fraction(0)
        if i < j:
            return self._c.get((i, j), {}).get(k, Fraction(0))
        return -self._c.get((j, i), {}).get(k, Fraction(0))

    def bracket(self, u, v):
        """Bracket of vectors given as sparse dicts {index: coeff}."""
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                if i == j:
                    continue
                if i < j:
                    vec, s = self._c.get((i, j)), 1
                else:
                    vec, s = self._c.get((j, i)), -1
                if not vec:
                    continue
                for k, c in vec.items():
                    w = out.get(k, 0) + s * a * b * c
                    if w:
                        out[k] = w
                    else:
                        out.pop(k, None)
        return out

    def d_generator(self, k):
        return self._d1[k - 1]

    def tuple_notation(self):
        parts = []
        for form in self._d1:
            if not form:
                parts.append("0")
                continue
            s = ""
            for (i, j), c in form.terms.items():
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                pair = f"{i}{j}" if self.dim <= 9 else f"({i},{j})"
                coef = "" if mag == 1 else f"{mag}*"
                s += f"{sign}{coef}{pair}"
            parts.append(s.lstrip("+"))
        return "(" + ",".join(parts) + ")"

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self._c == other._c

    def __hash__(self):
        return hash((self.dim, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self._c.items()))))

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"LieAlgebra({label}{self.tuple_notation()})"


def abelian(n):
    return LieAlgebra(n, {}, name=f"R^{n}")


def direct_sum(g, h, name=None):
    """Block-diagonal brackets; generators of h are shifted by g.dim."""
    s = g.dim
    br = {ij: dict(v) for ij, v in g._c.items()}
    for (i, j), v in h._c.items():
        br[(i + s, j + s)] = {k + s: c for k, c in v.items()}
    if name is None and g.name and h.name:
        name = f"{g.name}+{h.name}"
    return LieAlgebra(g.dim + h.dim, br, name=name, check=False)


def relabel(L, perm):
    """Algebra with e_i renamed to e_{perm[i-1]}."""
    br = {}
    for (i, j), v in L._c.items():
        br[(perm[i - 1], perm[j - 1])] = {perm[k - 1]: c for k, c in v.items()}
    return LieAlgebra(L.dim, br, name=L.name, check=False)


# -- parsing -----------------------------------------------------------------

_TERM = re.compile(
    r"\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\s*[·*]\s*)?(?:\(\s*(\d+)\s*,\s*(\d+)\s*\)|(\d)(\d))\s*"
)


def parse_algebra(text, name=None, line=1, col=1, check=True):
    """Parse ``(t_1,...,t_n)`` where t_k lists d e^k.

    A term is ``[+|-][c*]ij`` with single-digit i, j, or ``[+|-][c*](i,j)``;
    ``c`` is an integer or fraction and ``*`` may also be written ``·``.
    A reversed pair ``ji`` is read as ``-ij``.
    """
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("algebra must be written as (t1,...,tn)", line, col + lead)
    body = s[1:-1]
    # split on commas not inside parentheses
    slots, depth, start = [], 0, 0
    for pos, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parenthesis", line, col + lead + 1 + pos)
        elif ch == "," and depth == 0:
            slots.append((start, body[start:pos]))
            start = pos + 1
    if depth:
        raise ParseError("unbalanced parenthesis", line, col + lead + len(s) - 1)
    slots.append((start, body[start:]))
    if len(slots) == 1 and not slots[0][1].strip():
        slots = []
    n = len(slots)
    diffs = []
    for k, (off, slot) in enumerate(slots, start=1):
        where = col + lead + 1 + off
        diffs.append(_parse_slot(slot, n, k, line, where))
    try:
        return LieAlgebra.from_differentials(n, diffs, name=name, check=check)
    except JacobiError as exc:
        raise ParseError(str(exc), line, col + lead) from None


def _parse_slot(slot, n, k, line, col):
    txt = slot.strip()
    if not txt:
        raise ParseError(f"empty entry for d e^{k}", line, col)
    if txt == "0":
        return Form.zero(n, 2)
    terms = {}
    pos = 0
    first = True
    while pos < len(slot):
        if not slot[pos:].strip():
            break
        m = _TERM.match(slot, pos)
        if not m or m.end() == pos:
            raise ParseError(f"malformed term in entry {k}: {slot[pos:].strip()!r}", line, col + pos)
        if not first and not m.group(1):
            raise ParseError(f"terms must be joined by + or - in entry {k}", line, col + pos)
        sign = -1 if m.group(1) == "-" else 1
        try:
            c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        except ZeroDivisionError:
            raise ParseError("zero denominator", line, col + pos) from None
        if m.group(3):
            i, j = int(m.group(3)), int(m.group(4))
        else:
            if n >= 10:
                raise ParseError("dimension >= 10 requires the (i,j) term syntax", line, col + pos)
            i, j = int(m.group(5)), int(m.group(6))
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"index out of range 1..{n} in entry {k}", line, col + pos)
        if i == j:
            raise ParseError(f"repeated index e{i}^e{i} in entry {k}", line, col + pos)
        if i > j:
            i, j, sign = j, i, -sign
        if (i, j) in terms:
            raise ParseError(f"pair {i}{j} appears twice in entry {k}", line, col + pos)
        terms[(i, j)] = sign * c
        pos = m.end()
        first = False
    return Form(n, 2, terms)


# -- Jacobi and the differential -----------------------------------------------

def check_jacobi(L):
    """Triples i<j<k on which the Jacobi identity fails."""
    bad = []
    n = L.dim
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                ei, ej, ek = {i: 1}, {j: 1}, {k: 1}
                total = {}
                for a, b, c in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
                    for idx, v in L.bracket(L.bracket(a, b), c).items():
                        total[idx] = total.get(idx, 0) + v
                if any(total.values()):
                    bad.append((i, j, k))
    return bad


def _d_monomial(L, mask):
    cached = L._dcache.get(mask)
    if cached is not None:
        return cached
    out = {}
    idx = mask_to_tuple(mask)
    for s, i in enumerate(idx):
        rest = mask & ~(1 << (i - 1))
        sgn = -1 if s % 2 else 1
        for m2, c in L._d1[i - 1].mask_items():
            w = wedge_sign(m2, rest)
            if w:
                key = m2 | rest
                v = out.get(key, 0) + sgn * w * c
                if v:
                    out[key] = v
                else:
                    del out[key]
    L._dcache[mask] = out
    return out


def ce_differential(L, a):
    """Chevalley-Eilenberg differential, extended from generators as a graded derivation."""
    if a.n != L.dim:
        raise DimensionMismatch(f"form in dim {a.n}, algebra of dim {L.dim}")
    out = {}
    for mask, c in a.mask_items():
        for key, v in _d_monomial(L, mask).items():
            w = out.get(key, 0) + c * v
            if w:
                out[key] = w
            else:
                del out[key]
    return Form._raw(L.dim, a.degree + 1, out if a.degree + 1 <= L.dim else {})


def d_squared_defects(L):
    """Basis monomials (all degrees) on which d(d x) != 0."""
    bad = []
    for k in range(L.dim + 1):
        for idx in basis(L.dim, k):
            x = Form.monomial(L.dim, idx)
            if ce_differential(L, ce_differential(L, x)):
                bad.append(idx)
    return bad


# -- adjoint and structure ---------------------------------------------------------

def ad(L, v):
    """Matrix of W -> [v, W]; column j holds the coordinates of [v, e_j]."""
    if isinstance(v, Form):
        if v.degree != 1:
            raise ValueError("ad needs a degree-1 element")
        vec = {idx[0]: c for idx, c in v.terms.items()}
    else:
        vec = dict(v)
    n = L.dim
    cols = [L.bracket(vec, {j: 1}) for j in range(1, n + 1)]
    return RatMatrix.from_columns(n, [{k - 1: c for k, c in col.items()} for col in cols])


class Solvability(enum.Enum):
    CERTIFIED_YES = "CERTIFIED_YES"
    NECESSARY_CONDITIONS_PASS = "NECESSARY_CONDITIONS_PASS"
    NO = "NO"


@dataclass(frozen=True)
class StructureReport:
    jacobi_ok: bool
    nilpotent: bool
    nilpotency_class: int | None
    solvable: bool
    derived_length: int | None
    completely_solvable: Solvability
    unimodular: bool
    lower_central_dims: tuple
    derived_dims: tuple
    nonreal_witness: tuple | None = None


def _span(vectors):
    ech = Echelon()
    for v in vectors:
        if v:
            ech.add({k - 1: c for k, c in v.items()})
    return [{c + 1: x for c, x in row.items()} for _, row in ech.rref()]


def lower_central_series(L):
    """Dimensions of g = g^1 > g^2 = [g, g] > ... until it stabilises."""
    cur = [{i: Fraction(1)} for i in range(1, L.dim + 1)]
    cur = _span(cur)
    dims = [len(cur)]
    while cur:
        nxt = _span([L.bracket({i: 1}, y) for i in range(1, L.dim + 1) for y in cur])
        if len(nxt) == len(cur):
            break
        cur = nxt
        dims.append(len(cur))
    return dims


def derived_series(L):
    cur = _span([{i: Fraction(1)} for i in range(1, L.dim + 1)])
    dims = [len(cur)]
    while cur:
        nxt = _span([L.bracket(x, y) for a, x in enumerate(cur) for y in cur[a + 1:]])
        if len(nxt) == len(cur):
            break
        cur = nxt
        dims.append(len(cur))
    return dims


def is_unimodular(L):
    return all(sum(L.structure_constant(i, j, j) for j in range(1, L.dim + 1)) == 0 for i in range(1, L.dim + 1))


def sample_elements(n):
    """Deterministic sample {e_i} u {e_1 + ... + e_m}."""
    out = [{i: Fraction(1)} for i in range(1, n + 1)]
    out += [{i: Fraction(1) for i in range(1, m + 1)} for m in range(2, n + 1)]
    return out


def ad_charpoly(L, v):
    return poly.charpoly(ad(L, v).entries)


def structure_report(L):
    lcs = lower_central_series(L)
    der = derived_series(L)
    nilpotent = lcs[-1] == 0
    solvable = der[-1] == 0
    jac = not check_jacobi(L)
    nonreal = None
    if nilpotent:
        cs = Solvability.CERTIFIED_YES
    elif not solvable:
        cs = Solvability.NO
    else:
        cs = Solvability.CERTIFIED_YES
        for v in sample_elements(L.dim):
            if not poly.all_roots_real(ad_charpoly(L, v)):
                cs = Solvability.NO
                nonreal = tuple(sorted(v))
                break
        # Over C a solvable ad(g) is simultaneously triangular (Lie), so the
        # eigenvalues of ad X are w(X) for linear weights w.  Real spectra on
        # every basis element e_i force every weight to be real-valued, which
        # certifies complete solvability.
    return StructureReport(
        jacobi_ok=jac,
        nilpotent=nilpotent,
        nilpotency_class=len(lcs) - 1 if nilpotent else None,
        solvable=solvable,
        derived_length=len(der) - 1 if solvable else None,
        completely_solvable=cs,
        unimodular=is_unimodular(L),
        lower_central_dims=tuple(lcs),
        derived_dims=tuple(der),
        nonreal_witness=nonreal,
    )
