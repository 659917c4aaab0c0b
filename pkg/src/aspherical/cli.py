"""Command line: ``aspherical {check,betti,symplectic,classify,product,selftest}``.

Exit status: 0 all checks pass, 1 expectation mismatch or failing entry,
2 input or usage error.
"""

import argparse
import json
import sys

from .catalog import CatalogError, check_entry, format_machine, format_text, read_catalog, run_catalog
from .classifier import classify, kunneth, product_criteria, profile_from_algebra
from .lie import ParseError
from .symplectic import DEFAULT_THRESHOLD, Verdict

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="aspherical", description="Cohomology and symplectic checks for Lie algebra catalogs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, entry=True):
        sp.add_argument("file")
        if entry:
            sp.add_argument("--entry", action="append", help="restrict to named entries (repeatable)")
        sp.add_argument("--format", choices=("text", "machine"), default="text")
        sp.add_argument("--threshold", type=int, default=DEFAULT_THRESHOLD,
                        help="max closed 2-forms for full Pfaffian expansion (default 12)")
        sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("check", help="full report per entry")
    common(sp)
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--timing", action="store_true", help="include per-entry seconds (breaks byte reproducibility)")
    sp = sub.add_parser("betti", help="Betti numbers")
    common(sp)
    sp = sub.add_parser("symplectic", help="invariant symplectic form verdicts")
    common(sp)
    sp.add_argument("--witness", action="store_true")
    sp = sub.add_parser("classify", help="class A / B evidence")
    common(sp)
    sp = sub.add_parser("product", help="Kunneth profile and product criteria for two entries")
    sp.add_argument("file")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--format", choices=("text", "machine"), default="text")
    sp.add_argument("--threshold", type=int, default=DEFAULT_THRESHOLD)
    sub.add_parser("selftest", help="run the d^2 = 0, duality and Kunneth property suites")
    return p


def _select(entries, names):
    if not names:
        return entries
    by_name = {e.name: e for e in entries}
    missing = [n for n in names if n not in by_name]
    if missing:
        raise CatalogError(f"no entry named {', '.join(missing)}")
    return [by_name[n] for n in names]


def _dump(rec):
    return json.dumps(rec, sort_keys=True, separators=(",", ":"))


def _cmd_report(args, out):
    entries = _select(read_catalog(args.file), args.entry)
    report = run_catalog(entries, threshold=args.threshold, jobs=args.jobs)
    cmd = args.command
    if cmd == "check":
        if args.format == "machine":
            out.write(format_machine(report, witness=True, timing=args.timing))
        else:
            out.write(format_text(report, witness=args.witness, timing=args.timing))
    else:
        for r in report.entries:
            if r.error:
                rec = {"name": r.name, "error": r.error}
            elif cmd == "betti":
                rec = {"name": r.name, "betti": r.betti}
            elif cmd == "symplectic":
                rec = {"name": r.name, "symplectic": r.symplectic.verdict.value,
                       "aspherical_note": r.symplectic.aspherical_note}
                if args.witness and r.symplectic.witness is not None:
                    rec["witness"] = {"".join(map(str, k)): str(c) for k, c in r.symplectic.witness.terms.items()}
            else:
                rec = {"name": r.name, "criteria": {v.criterion: v.verdict for v in r.evidence.verdicts}}
            rec["mismatches"] = r.mismatches
            if args.format == "machine":
                out.write(_dump(rec) + "\n")
            else:
                body = ", ".join(f"{k}={v}" for k, v in rec.items() if k not in ("name", "mismatches"))
                out.write(f"{rec['name']}: {body}\n")
                if cmd == "classify" and not r.error:
                    for v in r.evidence.verdicts:
                        out.write(f"    {v.criterion:16s} {v.verdict:14s} {v.part:5s} {v.justification}\n")
                for m in r.mismatches:
                    out.write(f"    MISMATCH: {m}\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _profile(entry, threshold):
    res = check_entry(entry, threshold)
    if res.error:
        raise CatalogError(f"{entry.name}: {res.error}")
    L = entry.algebra()
    sym = res.symplectic.verdict is Verdict.SYMPLECTIC
    return profile_from_algebra(L, report=res.structure, symplectic=sym, lattice_asserted=entry.lattice_asserted,
                                source=entry.name, cup_length=res.cup_length_two)


def _cmd_product(args, out):
    entries = {e.name: e for e in read_catalog(args.file)}
    for n in (args.a, args.b):
        if n not in entries:
            raise CatalogError(f"no entry named {n}")
    p, q = _profile(entries[args.a], args.threshold), _profile(entries[args.b], args.threshold)
    prod = kunneth(p, q)
    crit = product_criteria(p, q)
    ev = classify(prod)
    if args.format == "machine":
        out.write(_dump({"product": prod.source, "betti": list(prod.betti), "dim_model": prod.dim_model,
                         "product_criteria": [[v.part, v.verdict] for v in crit.verdicts],
                         "criteria": {v.criterion: v.verdict for v in ev.verdicts}}) + "\n")
    else:
        out.write(f"{prod.source}: betti {tuple(prod.betti)}, dim {prod.dim_model}\n")
        for v in crit.verdicts:
            out.write(f"    product {v.part:5s} {v.verdict:14s} {v.justification}\n")
        for v in ev.verdicts:
            out.write(f"    {v.criterion:16s} {v.verdict:14s} {v.part:5s} {v.justification}\n")
    return EXIT_OK


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "selftest":
            from .selftest import run_selftest
            return run_selftest(out)
        if args.command == "product":
            return _cmd_product(args, out)
        return _cmd_report(args, out)
    except (CatalogError, ParseError, FileNotFoundError, UnicodeDecodeError) as exc:
        print(f"aspherical: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
