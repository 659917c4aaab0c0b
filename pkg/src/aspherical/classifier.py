"""
Betti-number criteria for the classes A (pi_2 = 0 realisations) and B
(pi_2 != 0 realisations) of symplectically aspherical groups.

Every verdict is tagged with what it licenses: NECESSARY (a failed necessary
condition rules membership out), SUFFICIENT (membership follows) or
CONSISTENCY (an identity the data must satisfy).  Hypotheses the tool cannot
check, such as "a uniform lattice exists" or "pi is symplectically aspherical",
are explicit flags and are quoted in the justification.
"""

from dataclasses import dataclass, field, replace
from math import comb

from .cohomology import betti as _betti, convolve
from .lie import Solvability

A2N_MEMBER = "A2n_MEMBER"
B_MEMBER = "B_MEMBER"
NOT_A4 = "NOT_A4"
DIM_BOUND = "DIM_BOUND"
EULER_RELATION = "EULER_RELATION"
INEQUALITY_26 = "INEQUALITY_26"
RANK4_CRITERION = "RANK4_CRITERION"
NU_BOUND = "NU_BOUND"
CRITERIA = (A2N_MEMBER, B_MEMBER, NOT_A4, DIM_BOUND, EULER_RELATION, INEQUALITY_26, RANK4_CRITERION, NU_BOUND)

FIRES = "FIRES"
DOES_NOT_FIRE = "DOES_NOT_FIRE"
HOLDS = "HOLDS"
FAILS = "FAILS"
NOT_EVALUABLE = "NOT_EVALUABLE"

NECESSARY = "NECESSARY"
SUFFICIENT = "SUFFICIENT"
CONSISTENCY = "CONSISTENCY"

OPEN_PROBLEMS = {
    "Z4_IN_B4": "open: is Z^4 in B_4 (is A_4 n B_4 nonempty)?",
    "Z_ODD": "open: is Z^(2n+1) symplectically aspherical for n > 1?",
    "B_SUBSET_A": "open: is B contained in A?",
}


@dataclass(frozen=True)
class GroupProfile:
    """Rational Betti data of a group plus asserted or derived structural flags.

    ``betti`` is (b_0, b_1, ...).  ``flags`` keys in use: nilpotent,
    torsion_free, type_R_asserted, lattice_asserted, completely_solvable
    (a Solvability value), orientable_model, c_symplectic, sa_asserted,
    pi3_trivial_asserted, abelian.
    """

    betti: tuple
    dim_model: int | None = None
    flags: dict = field(default_factory=dict)
    source: str = ""
    cup_length_two: int | None = None

    def b(self, k):
        return self.betti[k] if 0 <= k < len(self.betti) else None

    @property
    def complete(self):
        """Betti vector covers the whole cohomological dimension of an aspherical model."""
        return self.dim_model is not None and len(self.betti) == self.dim_model + 1

    def b_ext(self, k):
        """b_k, reading 0 above the model dimension when the vector is complete."""
        if k >= len(self.betti) and self.complete:
            return 0
        return self.b(k)

    def flag(self, key, default=False):
        return self.flags.get(key, default)


@dataclass(frozen=True)
class Verdict:
    criterion: str
    verdict: str
    kind: str
    justification: str
    part: str = ""


@dataclass
class ClassEvidence:
    source: str
    verdicts: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def get(self, criterion):
        for v in self.verdicts:
            if v.criterion == criterion:
                return v
        return None

    def fired(self, criterion):
        v = self.get(criterion)
        return v is not None and v.verdict in (FIRES, HOLDS)

    def add(self, *args, **kw):
        self.verdicts.append(Verdict(*args, **kw))


def profile_from_algebra(L, report=None, symplectic=None, lattice_asserted=False, source=None, cup_length=None):
    """GroupProfile of a nilmanifold/solvmanifold model with Lie algebra L."""
    from .lie import structure_report

    if report is None:
        report = structure_report(L)
    flags = {
        "nilpotent": report.nilpotent,
        "torsion_free": report.nilpotent,
        "completely_solvable": report.completely_solvable,
        "orientable_model": report.unimodular,
        "lattice_asserted": bool(lattice_asserted),
    }
    if symplectic is not None:
        flags["c_symplectic"] = symplectic
    if report.nilpotent and not any(L._c):
        flags["abelian"] = True
    return GroupProfile(tuple(_betti(L)), L.dim, flags, source or (L.name or L.tuple_notation()), cup_length)


def torus_profile(m, source=None):
    return GroupProfile(tuple(comb(m, k) for k in range(m + 1)), m,
                        {"nilpotent": True, "torsion_free": True, "abelian": True, "lattice_asserted": True,
                         "completely_solvable": Solvability.CERTIFIED_YES, "orientable_model": True,
                         "c_symplectic": m % 2 == 0, "sa_asserted": m % 2 == 0 and m > 0},
                        source or f"Z^{m}", m // 2)


def surface_profile(g, source=None):
    return GroupProfile((1, 2 * g, 1), 2, {"orientable_model": True, "c_symplectic": True, "sa_asserted": g >= 1,
                                           "torsion_free": True},
                        source or f"surface group, genus {g}", 1)


def is_symplectically_aspherical(p):
    """Asserted, or derived from a completely solvable symplectic lattice model."""
    if p.flag("sa_asserted"):
        return True
    return _a2n_hypotheses(p)


def _a2n_hypotheses(p):
    return (p.flag("completely_solvable", None) is Solvability.CERTIFIED_YES and p.flag("lattice_asserted")
            and p.flag("c_symplectic") and p.dim_model is not None and p.dim_model % 2 == 0)


def _is_z4(p):
    return p.flag("abelian") and tuple(p.betti) == (1, 4, 6, 4, 1)


def classify(p):
    ev = ClassEvidence(p.source)
    b1, b2, b3 = p.b_ext(1), p.b_ext(2), p.b_ext(3)
    sa = is_symplectically_aspherical(p)
    hyp = "pi asserted symplectically aspherical" if p.flag("sa_asserted") else (
        "pi symplectically aspherical via completely solvable lattice model" if sa
        else "conditional on pi being symplectically aspherical")

    # (i) contrapositive and (ii)
    if b1 is None or b3 is None:
        ev.add(NOT_A4, NOT_EVALUABLE, NECESSARY, f"needs b1 and b3, have {len(p.betti)} Betti numbers", "(i)")
        ev.add(B_MEMBER, NOT_EVALUABLE, SUFFICIENT, "needs b1 and b3", "(ii)")
    else:
        lt = b1 < b3
        ev.add(NOT_A4, FIRES if lt else DOES_NOT_FIRE, NECESSARY,
               f"A_4 requires b1 >= b3; b1={b1}, b3={b3}", "(i)")
        if p.flag("manifold_betti"):
            # Betti numbers of a manifold M, not of pi: only (iii) applies
            if not p.flag("pi3_trivial_asserted"):
                ev.add(B_MEMBER, NOT_EVALUABLE, SUFFICIENT, "manifold Betti data needs pi_3(M) = 0 asserted", "(iii)")
            else:
                ev.add(B_MEMBER, FIRES if lt else DOES_NOT_FIRE, SUFFICIENT,
                       f"pi_3(M) = 0 asserted, b1(M)={b1} {'<' if lt else '>='} b3(M)={b3}", "(iii)")
        elif lt:
            ev.add(B_MEMBER, FIRES, SUFFICIENT, f"b1={b1} < b3={b3}, so pi in B_4 ({hyp})", "(ii)")
        else:
            ev.add(B_MEMBER, DOES_NOT_FIRE, SUFFICIENT, f"b1={b1} >= b3={b3}", "(ii)")

    # dimension bound: [omega]^j is pulled back from H^{2j}(pi), so b_{2j} > 0 for j <= n
    top_k = (len(p.betti) - 1) // 2 + (1 if p.complete else 0)
    zero_even = [k for k in range(1, top_k + 1) if p.b_ext(2 * k) == 0]
    if zero_even:
        k0 = zero_even[0]
        ev.add(DIM_BOUND, FIRES, NECESSARY,
               f"b_{2 * k0}=0: a closed symplectically aspherical model of dimension 2n needs "
               f"H^(2j)(pi) != 0 for all j <= n, hence n <= {k0 - 1} (stated form: n <= {k0})")
        dim_bound = k0 - 1
    else:
        known = (len(p.betti) - 1) // 2
        ev.add(DIM_BOUND, DOES_NOT_FIRE, NECESSARY, f"b_2..b_{2 * known} all nonzero")
        dim_bound = None

    # nu bound from the dimension bound and the degree-2 cup length of the model
    bounds = [x for x in (dim_bound, p.cup_length_two) if x is not None]
    if bounds:
        parts = []
        if dim_bound is not None:
            parts.append(f"dimension bound {dim_bound}")
        if p.cup_length_two is not None:
            parts.append(f"degree-2 cup length {p.cup_length_two} (upper bound at the model level)")
        ev.add(NU_BOUND, FIRES, NECESSARY, f"nu(pi) <= {min(bounds)} from " + " and ".join(parts))
    else:
        ev.add(NU_BOUND, NOT_EVALUABLE, NECESSARY, "no dimension bound or cup length available")

    # Euler relation for nilmanifold/solvmanifold models of dimension 2n
    dm = p.dim_model
    model = p.flag("nilpotent") or p.flag("lattice_asserted")
    if model and dm is not None and len(p.betti) == dm + 1:
        chi = sum((-1) ** k * x for k, x in enumerate(p.betti))
        ok = chi == 0
        just = f"sum (-1)^k b_k = {chi}"
        if dm == 6:
            six = 2 - 2 * b1 + 2 * b2 - b3
            ok = ok and six == 0
            just += f"; 2 - 2b1 + 2b2 - b3 = {six}"
        ev.add(EULER_RELATION, HOLDS if ok else FAILS, CONSISTENCY, just)
    else:
        ev.add(EULER_RELATION, NOT_EVALUABLE, CONSISTENCY, "needs a full Betti vector of a nil/solvmanifold model")

    if b1 is None or b2 is None:
        ev.add(INEQUALITY_26, NOT_EVALUABLE, SUFFICIENT, "needs b1 and b2")
    else:
        lhs, rhs = 2 + 2 * b2, 3 * b1
        kind = SUFFICIENT if dm == 6 else CONSISTENCY
        ev.add(INEQUALITY_26, FIRES if lhs > rhs else DOES_NOT_FIRE, kind,
               f"2 + 2b2 = {lhs} {'>' if lhs > rhs else '<='} 3b1 = {rhs}"
               + ("; with the Euler relation this is b1 < b3" if dm == 6 else ""))

    # a uniform lattice in a completely solvable group with a c-symplectic quotient lies in A_{2n}
    if _a2n_hypotheses(p):
        ev.add(A2N_MEMBER, FIRES, SUFFICIENT,
               f"completely solvable (certified), lattice asserted, c-symplectic model: pi in A_{dm}")
    else:
        missing = [name for name, ok in (
            ("completely solvable certified", p.flag("completely_solvable", None) is Solvability.CERTIFIED_YES),
            ("lattice asserted", p.flag("lattice_asserted")),
            ("c-symplectic model", p.flag("c_symplectic")),
            ("even model dimension", dm is not None and dm % 2 == 0)) if not ok]
        ev.add(A2N_MEMBER, DOES_NOT_FIRE, SUFFICIENT, "missing: " + ", ".join(missing))

    # torsion-free nilpotent of rank 4 with H^4 = Z realises A_4
    if p.flag("nilpotent") and p.flag("torsion_free"):
        if dm is None:
            ev.add(RANK4_CRITERION, NOT_EVALUABLE, SUFFICIENT, "rank unknown")
        else:
            b4 = p.b_ext(4)
            ok = dm == 4 and p.flag("orientable_model") and b4 == 1
            ev.add(RANK4_CRITERION, FIRES if ok else DOES_NOT_FIRE, SUFFICIENT,
                   f"rank {dm}, orientable={bool(p.flag('orientable_model'))}, b4={b4}"
                   + ("; realisable in A_4" if ok else ""))
    else:
        ev.add(RANK4_CRITERION, NOT_EVALUABLE, SUFFICIENT, "needs a torsion-free nilpotent profile")

    if p.flag("abelian"):
        m = p.b(1)
        if m == 4:
            ev.notes.append(OPEN_PROBLEMS["Z4_IN_B4"])
        if m is not None and m % 2 == 1 and m > 3:
            ev.notes.append(OPEN_PROBLEMS["Z_ODD"])
    return ev


def kunneth(p, q):
    """Profile of the product group: convolved Betti numbers, conjoined flags."""
    flags = {}
    for key in ("nilpotent", "torsion_free", "type_R_asserted", "lattice_asserted", "orientable_model",
                "abelian", "c_symplectic", "sa_asserted"):
        flags[key] = bool(p.flag(key) and q.flag(key))
    cs_p, cs_q = p.flag("completely_solvable", None), q.flag("completely_solvable", None)
    if cs_p is Solvability.NO or cs_q is Solvability.NO:
        flags["completely_solvable"] = Solvability.NO
    elif cs_p is Solvability.CERTIFIED_YES and cs_q is Solvability.CERTIFIED_YES:
        flags["completely_solvable"] = Solvability.CERTIFIED_YES
    elif cs_p is not None and cs_q is not None:
        flags["completely_solvable"] = Solvability.NECESSARY_CONDITIONS_PASS
    dim = p.dim_model + q.dim_model if p.dim_model is not None and q.dim_model is not None else None
    cl = p.cup_length_two + q.cup_length_two if p.cup_length_two is not None and q.cup_length_two is not None else None
    return GroupProfile(tuple(convolve(p.betti, q.betti)), dim, flags, f"{p.source} x {q.source}", cl)


def b3_product(p, q):
    """b_3 of a product, term by term: b3(q) + b1(p)b2(q) + b2(p)b1(q) + b3(p)."""
    return q.b_ext(3) + p.b_ext(1) * q.b_ext(2) + p.b_ext(2) * q.b_ext(1) + p.b_ext(3)


def product_criteria(p, q):
    ev = ClassEvidence(f"{p.source} x {q.source}")
    if not (is_symplectically_aspherical(p) and is_symplectically_aspherical(q)):
        ev.add(B_MEMBER, NOT_EVALUABLE, SUFFICIENT, "both factors must be symplectically aspherical (asserted)")
        return ev
    if any(x.b_ext(k) is None for x in (p, q) for k in (1, 2, 3)):
        ev.add(B_MEMBER, NOT_EVALUABLE, SUFFICIENT, "needs b1, b2, b3 of both factors")
        return ev
    fired = []
    if max(p.b_ext(3), q.b_ext(3)) >= 1:
        fired.append(("(iv)", f"max(b3)={max(p.b_ext(3), q.b_ext(3))} >= 1"))
    if max(p.b_ext(2), q.b_ext(2)) >= 2 and max(p.b_ext(1), q.b_ext(1)) >= 1:
        fired.append(("(v)", f"max(b2)={max(p.b_ext(2), q.b_ext(2))} >= 2 and max(b1)={max(p.b_ext(1), q.b_ext(1))} >= 1"))
    if _is_z4(p) or _is_z4(q):
        fired.append(("(vi)", "one factor is Z^4"))
    prod = kunneth(p, q)
    pb1, pb3 = prod.b_ext(1), b3_product(p, q)
    if pb3 != prod.b_ext(3):
        raise AssertionError("b3 expansion disagrees with the convolution")
    consistent = pb1 < pb3
    for part, why in fired:
        ev.add(B_MEMBER, FIRES, SUFFICIENT,
               f"{why}; product b1={pb1}, b3={pb3} ({'b1 < b3' if consistent else 'INCONSISTENT: b1 >= b3'})", part)
    if not fired:
        ev.add(B_MEMBER, DOES_NOT_FIRE, SUFFICIENT, f"no product criterion applies; product b1={pb1}, b3={pb3}")
    if fired and not consistent:
        ev.notes.append("inconsistency: a product criterion fired but b1 >= b3 on the product")
    return ev


@dataclass(frozen=True)
class Membership:
    cls: str  # "A" or "B"
    dim: int
    member: bool = True
    source: str = ""


def chain_report(memberships):
    """Propagate recorded memberships along the inclusion chains and flag contradictions.

    A_{2n+2} in A_{2n} for 2n >= 6, A_6 in A_4 u B_4, B_{2n+2} in B_{2n} for 2n >= 4.
    """
    recorded = {(m.cls, m.dim): m for m in memberships}
    implied = []
    violations = []
    seen = set()
    for m in memberships:
        if not m.member:
            continue
        if m.cls == "A":
            for d in range(m.dim - 2, 5, -2):
                if ("A", d) not in seen:
                    seen.add(("A", d))
                    implied.append(Membership("A", d, True, f"from A_{m.dim}"))
            if m.dim >= 6 and ("A4uB4", 4) not in seen:
                seen.add(("A4uB4", 4))
                implied.append(Membership("A4uB4", 4, True, f"from A_{m.dim}"))
        elif m.cls == "B":
            for d in range(m.dim - 2, 3, -2):
                if ("B", d) not in seen:
                    seen.add(("B", d))
                    implied.append(Membership("B", d, True, f"from B_{m.dim}"))
    for imp in implied:
        rec = recorded.get((imp.cls, imp.dim))
        if rec is not None and not rec.member:
            violations.append(f"{imp.cls}_{imp.dim} recorded as non-member but implied {imp.source}")
    if recorded.get(("A", 4)) and recorded.get(("B", 4)):
        a4, b4 = recorded[("A", 4)], recorded[("B", 4)]
        if not a4.member and not b4.member:
            for imp in implied:
                if imp.cls == "A4uB4":
                    violations.append(f"A_4 and B_4 both excluded but A_4 u B_4 implied {imp.source}")
    return {"recorded": list(memberships), "implied": implied, "violations": violations}


def memberships_from_evidence(ev, dim):
    """Memberships licensed by one ClassEvidence at model dimension ``dim``."""
    out = []
    if ev.fired(A2N_MEMBER):
        out.append(Membership("A", dim, True, ev.source))
    v = ev.get(B_MEMBER)
    if v is not None and v.verdict == FIRES and v.part == "(ii)":
        out.append(Membership("B", 4, True, ev.source))
    v = ev.get(RANK4_CRITERION)
    if v is not None and v.verdict == FIRES:
        out.append(Membership("A", 4, True, ev.source))
    if ev.fired(NOT_A4):
        out.append(Membership("A", 4, False, ev.source))
    return out
