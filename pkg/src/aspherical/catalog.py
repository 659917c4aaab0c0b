"""
Catalog files of Lie algebras and batch checking.

Line grammar::

    name: (t_1,...,t_n) [; key=value ...]      # comment

``key`` is one of ``lattice`` (true/false), ``source`` / ``note`` (free text,
optionally double-quoted), or an expectation: ``betti`` (comma separated),
``symplectic`` (yes/no), ``nilpotent`` (yes/no), ``unimodular`` (yes/no),
``b_member`` (yes/no).  Expectations require a ``source`` note.
"""

import json
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .classifier import B_MEMBER, CRITERIA, FIRES, HOLDS, classify, profile_from_algebra
from .cohomology import betti as compute_betti
from .lie import ParseError, check_jacobi, parse_algebra, structure_report
from .symplectic import DEFAULT_THRESHOLD, Verdict, cup_length_two, find_symplectic, is_h2_decomposable

EXPECT_KEYS = {"betti", "symplectic", "nilpotent", "unimodular", "b_member"}
INFO_KEYS = {"lattice", "source", "note"}
_NAME = re.compile(r"\s*([A-Za-z0-9_.+^\-]+)\s*:")
_OPT = re.compile(r'\s*;\s*([A-Za-z_]+)\s*=\s*(?:"([^"]*)"|([^;#]*))')
_BOOL = {"yes": True, "true": True, "1": True, "no": False, "false": False, "0": False}


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    name: str
    tuple_text: str
    line: int
    assertions: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)

    @property
    def lattice_asserted(self):
        return bool(self.assertions.get("lattice", False))

    def algebra(self, check=True):
        return parse_algebra(self.tuple_text, name=self.name, line=self.line, check=check)


def _bool(value, line, key):
    v = value.strip().lower()
    if v not in _BOOL:
        raise CatalogError(f"line {line}: {key} must be yes/no, got {value!r}")
    return _BOOL[v]


def _close_paren(text, start):
    depth = 0
    for pos in range(start, len(text)):
        if text[pos] == "(":
            depth += 1
        elif text[pos] == ")":
            depth -= 1
            if depth == 0:
                return pos
    return -1


def parse_catalog(data):
    """Entries in file order; raises CatalogError / ParseError with line numbers."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    entries = []
    names = {}
    for lineno, raw in enumerate(data.splitlines(), start=1):
        text = raw
        if not text.strip() or text.lstrip().startswith("#"):
            continue
        m = _NAME.match(text)
        if not m:
            raise CatalogError(f"line {lineno}: expected 'name: (t1,...,tn)'")
        name = m.group(1)
        start = text.find("(", m.end())
        if start < 0 or text[m.end():start].strip():
            raise CatalogError(f"line {lineno}: missing algebra tuple after '{name}:'")
        end = _close_paren(text, start)
        if end < 0:
            raise ParseError("unbalanced parenthesis", lineno, start + 1)
        tup = text[start:end + 1]
        rest = text[end + 1:]
        assertions, expected = {}, {}
        pos = 0
        while pos < len(rest):
            tail = rest[pos:]
            if not tail.strip() or tail.lstrip().startswith("#"):
                break
            om = _OPT.match(rest, pos)
            if not om:
                raise CatalogError(f"line {lineno}, column {end + 2 + pos}: expected '; key=value'")
            key = om.group(1).lower()
            value = om.group(2) if om.group(2) is not None else om.group(3).strip()
            pos = om.end()
            if key == "lattice":
                assertions["lattice"] = _bool(value, lineno, key)
            elif key in ("source", "note"):
                assertions[key] = value
            elif key == "betti":
                try:
                    expected["betti"] = [int(x) for x in value.split(",")]
                except ValueError:
                    raise CatalogError(f"line {lineno}: betti must be comma-separated integers") from None
            elif key in EXPECT_KEYS:
                expected[key] = _bool(value, lineno, key)
            else:
                raise CatalogError(f"line {lineno}: unknown key {key!r}")
        if expected and "source" not in assertions:
            raise CatalogError(f"line {lineno}: expected values for {name!r} need a source note")
        if name in names:
            raise CatalogError(f"duplicate entry name {name!r} on lines {names[name]} and {lineno}")
        names[name] = lineno
        # grammar check of the tuple; the Jacobi gate runs at check time
        parse_algebra(tup, name=name, line=lineno, col=start + 1, check=False)
        entries.append(CatalogEntry(name, tup, lineno, assertions, expected))
    return entries


def shipped_catalog_path(name="catalog.alg"):
    return resources.files("aspherical") / "data" / name


def read_catalog(path):
    p = Path(path)
    if not p.exists():
        shipped = shipped_catalog_path(p.name)
        if shipped.is_file():
            return parse_catalog(shipped.read_bytes())
        raise FileNotFoundError(path)
    return parse_catalog(p.read_bytes())


@dataclass
class EntryResult:
    name: str
    algebra: str
    dim: int
    error: str | None = None
    structure: object = None
    betti: list | None = None
    symplectic: object = None
    evidence: object = None
    cup_length_two: int | None = None
    h2_decomposable: bool | None = None
    mismatches: list = field(default_factory=list)
    seconds: float = 0.0


def check_entry(entry, threshold=DEFAULT_THRESHOLD):
    t0 = time.perf_counter()
    try:
        L = entry.algebra(check=False)
    except ParseError as exc:
        return EntryResult(entry.name, entry.tuple_text, 0, error=str(exc))
    res = EntryResult(entry.name, L.tuple_notation(), L.dim)
    bad = check_jacobi(L)
    if bad:
        res.error = f"Jacobi identity fails on {len(bad)} triple(s), first {bad[0]}"
        res.seconds = time.perf_counter() - t0
        return res
    rep = structure_report(L)
    res.structure = rep
    res.betti = compute_betti(L)
    res.symplectic = find_symplectic(L, threshold=threshold, report=rep)
    res.cup_length_two = cup_length_two(L)
    res.h2_decomposable = is_h2_decomposable(L)
    sym = {Verdict.SYMPLECTIC: True, Verdict.NOT_SYMPLECTIC: False}.get(res.symplectic.verdict)
    if L.dim % 2:
        sym = False
    prof = profile_from_algebra(L, report=rep, symplectic=sym, lattice_asserted=entry.lattice_asserted,
                                source=entry.name, cup_length=res.cup_length_two)
    res.evidence = classify(prof)
    exp = entry.expected
    if "betti" in exp and exp["betti"] != res.betti:
        res.mismatches.append(f"betti expected {exp['betti']}, got {res.betti}")
    if "symplectic" in exp and exp["symplectic"] != (res.symplectic.verdict is Verdict.SYMPLECTIC):
        res.mismatches.append(f"symplectic expected {exp['symplectic']}, got {res.symplectic.verdict.value}")
    if "nilpotent" in exp and exp["nilpotent"] != rep.nilpotent:
        res.mismatches.append(f"nilpotent expected {exp['nilpotent']}, got {rep.nilpotent}")
    if "unimodular" in exp and exp["unimodular"] != rep.unimodular:
        res.mismatches.append(f"unimodular expected {exp['unimodular']}, got {rep.unimodular}")
    if "b_member" in exp and exp["b_member"] != res.evidence.fired(B_MEMBER):
        res.mismatches.append(f"b_member expected {exp['b_member']}, got {res.evidence.fired(B_MEMBER)}")
    res.seconds = time.perf_counter() - t0
    return res


@dataclass
class Report:
    entries: list
    summary: dict

    @property
    def ok(self):
        return not self.summary["mismatches"] and not self.summary["errors"]


def _check_args(args):
    return check_entry(*args)


def run_catalog(entries, threshold=DEFAULT_THRESHOLD, jobs=1):
    """Check every entry; one failing entry never aborts the batch. Output keeps input order."""
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_args, [(e, threshold) for e in entries]))
    else:
        results = [check_entry(e, threshold) for e in entries]
    fired = {c: 0 for c in CRITERIA}
    for r in results:
        if r.evidence is not None:
            for v in r.evidence.verdicts:
                if v.verdict in (FIRES, HOLDS):
                    fired[v.criterion] += 1
    summary = {
        "entries": len(results),
        "errors": sum(1 for r in results if r.error),
        "mismatches": sum(len(r.mismatches) for r in results),
        "symplectic": sum(1 for r in results if r.symplectic and r.symplectic.verdict is Verdict.SYMPLECTIC),
        "fired": fired,
    }
    return Report(results, summary)


# -- output ------------------------------------------------------------------------

def form_to_json(form):
    if form is None:
        return None
    return {"".join(map(str, k)) if form.n <= 9 else ",".join(map(str, k)): str(c) for k, c in form.terms.items()}


def entry_record(r, witness=True, timing=False):
    rec = {"name": r.name, "algebra": r.algebra, "dim": r.dim, "error": r.error}
    if r.structure is not None:
        s = r.structure
        sym = r.symplectic
        rec.update({
            "jacobi_ok": s.jacobi_ok,
            "nilpotent": s.nilpotent,
            "nilpotency_class": s.nilpotency_class,
            "solvable": s.solvable,
            "derived_length": s.derived_length,
            "completely_solvable": s.completely_solvable.value,
            "unimodular": s.unimodular,
            "betti": r.betti,
            "symplectic": sym.verdict.value,
            "symplectic_method": sym.method.value if sym.method else None,
            "symplectic_reason": sym.reason,
            "aspherical_note": sym.aspherical_note,
            "cup_length_two": r.cup_length_two,
            "h2_decomposable": r.h2_decomposable,
            "criteria": {v.criterion: v.verdict for v in r.evidence.verdicts},
            "notes": list(r.evidence.notes),
        })
        if witness:
            rec["witness"] = form_to_json(sym.witness)
    rec["mismatches"] = list(r.mismatches)
    if timing:
        rec["seconds"] = round(r.seconds, 6)
    return rec


def format_machine(report, witness=True, timing=False):
    lines = [json.dumps(entry_record(r, witness, timing), sort_keys=True, separators=(",", ":"))
             for r in report.entries]
    lines.append(json.dumps({"summary": report.summary}, sort_keys=True, separators=(",", ":")))
    return "\n".join(lines) + "\n"


def _fmt_form(form):
    if form is None:
        return "-"
    parts = []
    for idx, c in form.terms.items():
        name = "e" + "".join(map(str, idx))
        if c == 1:
            parts.append(f"+{name}")
        elif c == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{'+' if c > 0 else '-'}{abs(c)}{name}")
    return "".join(parts).lstrip("+") or "0"


def format_text(report, witness=False, timing=False):
    out = []
    for r in report.entries:
        out.append(f"== {r.name}  {r.algebra}")
        if r.error:
            out.append(f"   ERROR: {r.error}")
            continue
        s = r.structure
        kind = "nilpotent (class %d)" % s.nilpotency_class if s.nilpotent else (
            "solvable" if s.solvable else "not solvable")
        out.append(f"   dim {r.dim}, {kind}, unimodular={s.unimodular}, "
                   f"completely solvable={s.completely_solvable.value}")
        out.append(f"   betti {tuple(r.betti)}")
        sym = r.symplectic
        line = f"   {sym.verdict.value}"
        if sym.method:
            line += f" [{sym.method.value}]"
        if sym.reason:
            line += f" ({sym.reason})"
        if sym.aspherical_note:
            line += ", aspherical_note: completely solvable, pi_2 = 0"
        out.append(line)
        if witness and sym.witness is not None:
            out.append(f"   witness {_fmt_form(sym.witness)}")
        out.append(f"   cup length (degree 2) {r.cup_length_two}, H^2 decomposable={r.h2_decomposable}")
        for v in r.evidence.verdicts:
            out.append(f"   {v.criterion:16s} {v.verdict:14s} {v.part:5s} {v.justification}")
        for note in r.evidence.notes:
            out.append(f"   note: {note}")
        for m in r.mismatches:
            out.append(f"   MISMATCH: {m}")
        if timing:
            out.append(f"   {r.seconds:.3f}s")
    s = report.summary
    out.append(f"-- {s['entries']} entries, {s['symplectic']} symplectic, "
               f"{s['errors']} errors, {s['mismatches']} mismatches")
    return "\n".join(out) + "\n"
