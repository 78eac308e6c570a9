"""Command-line front end.

Exit codes: 0 ok/pass, 1 usage or input error, 2 bound-violation finding,
3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import (
    MonomialClassSpec,
    conjecture_bound,
    delsarte_bound,
    monomial_class_count,
    monomial_class_enumerate,
    symmetric_family_bound,
)
from .errors import FamilyFormatError, ParameterError, ResourceLimitError
from .family import (
    DistanceSet,
    QaryFamily,
    contains_half,
    distance_set,
    is_hamming_symmetric,
    qary_distance_set,
)
from .familyio import read_family
from .polymethod import build_certificate
from .search import (
    CONJECTURE_HEADER,
    DEFAULT_NODE_BUDGET,
    conjecture_explorer,
    exhaustive_family_sweep,
    format_survey_table,
    max_family,
    sharpness_survey,
    sweep_family_count,
)

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_RESOURCE = 0, 1, 2, 3

FORMAT_HELP = """\
family file format:
  lines starting with '#' are comments; blank lines are ignored
  first line:  n <integer>
  optional:    q <integer>   (alphabet size, default 2)
  then one word per line, a length-n string over 0..q-1;
  for q = 2, character i (1-indexed) is 1 iff element i is in the set
"""

BANNER = "!" * 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def _distances_arg(text: str) -> list[int]:
    text = text.strip().strip("{}")
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _workers(args) -> int:
    if args.deterministic:
        return 1
    return max(1, args.threads)


# ---------------------------------------------------------------- commands

def cmd_check(args) -> int:
    fam = read_family(args.family)
    n = fam.n
    qary = isinstance(fam, QaryFamily)
    ds = qary_distance_set(fam) if qary else distance_set(fam)
    s = len(ds)
    sym = is_hamming_symmetric(ds)
    half = contains_half(ds)
    print(f"n: {n}")
    if qary:
        print(f"q: {fam.q}")
    print(f"size: {len(fam)}")
    print(f"distance_set: {ds}")
    print(f"s: {s}")
    print(f"hamming_symmetric: {'yes' if sym else 'no'}")
    print(f"half_in_D: {'yes' if half else 'no'}")

    if s == 0:
        bound = symmetric_family_bound(n, 0, False)
        rule = "empty distance set (at most one member)"
    elif qary:
        bound = delsarte_bound(n, s, fam.q)
        rule = f"Delsarte bound with s = |D| = {s}"
    elif sym:
        bound = symmetric_family_bound(n, s, half)
        rule = f"Hamming symmetric bound ({'odd' if half else 'even'} case), s = |D| = {s}"
    else:
        bound = delsarte_bound(n, s, 2)
        rule = f"family is NOT Hamming symmetric; binary Delsarte bound with s = {s}"
    print(f"bound: {bound.value} [{bound.formula_id}] {rule}")
    ok = len(fam) <= bound.value
    print(f"result: {'PASS' if ok else 'FAIL'}")
    status = EXIT_OK if ok else EXIT_VIOLATION
    if not ok and (sym or qary):
        print(BANNER)
        print("COUNTEREXAMPLE: family exceeds a proven bound")
        print(BANNER)

    if qary and sym and s > 0:
        cb = conjecture_bound(n, s, fam.q, half)
        cok = len(fam) <= cb.value
        print(f"conjecture_bound: {cb.value} [{cb.formula_id}] {'consistent' if cok else 'VIOLATED'}")
        if not cok:
            print(BANNER)
            print("CONJECTURE COUNTEREXAMPLE: symmetric q-ary family exceeds the conjectured bound")
            print(BANNER)
            status = EXIT_VIOLATION
    return status


def cmd_bound(args) -> int:
    if args.conjecture:
        q = 2 if args.q is None else args.q
        res = conjecture_bound(args.n, args.s, q, args.half)
    elif args.q is not None:
        if args.half:
            raise ParameterError("--half applies to the symmetric or conjectured bound, not Delsarte")
        res = delsarte_bound(args.n, args.s, args.q)
    else:
        res = symmetric_family_bound(args.n, args.s, args.half)
    print(res.value)
    print(f"formula: {res.formula_id} (n={res.n}, s={res.s}, q={res.q}, half={'yes' if res.half_in else 'no'})")
    return EXIT_OK


def cmd_certify(args) -> int:
    fam = read_family(args.family)
    if isinstance(fam, QaryFamily):
        raise ParameterError("certificates exist only for binary families (q = 2)")
    cert = build_certificate(fam)
    text = cert.to_text()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"verdict: {cert.verdict}")
        print(f"certificate written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK if cert.valid else EXIT_VIOLATION


def _emit_reports(reports, args, header=None):
    if args.json:
        print(json.dumps([r.record() for r in reports], indent=2))
    else:
        sys.stdout.write(format_survey_table(reports, header))


def cmd_search(args) -> int:
    allowed = DistanceSet(args.n, frozenset(args.distances))
    rep = max_family(args.n, allowed, args.q, args.budget, args.time_limit)
    if args.json:
        print(json.dumps(rep.record(), indent=2))
    else:
        sys.stdout.write(format_survey_table([rep]))
        print("family:")
        for w in rep.words():
            print(f"  {w}")
    if rep.slack < 0:
        print(BANNER)
        print("COUNTEREXAMPLE: searched family exceeds its applicable bound")
        print(BANNER)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_survey(args) -> int:
    reports = sharpness_survey(args.n, args.q, args.budget, args.time_limit, _workers(args))
    _emit_reports(reports, args)
    bad = [r for r in reports if r.realized_symmetric and r.slack < 0]
    if bad:
        print(BANNER)
        for r in bad:
            print(f"COUNTEREXAMPLE: D={r.realized} size {r.size} > bound {r.bound.value}")
        print(BANNER)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_conjecture(args) -> int:
    rows = conjecture_explorer(args.n_max, args.q, args.budget, args.time_limit, _workers(args))
    _emit_reports(rows, args, header=CONJECTURE_HEADER)
    bad = [r for r in rows if r.counterexample]
    if not args.json:
        summary = {}
        for r in rows:
            key = r.verdict.split("(")[0]
            summary[key] = summary.get(key, 0) + 1
        print("summary: " + ", ".join(f"{k} {v}" for k, v in sorted(summary.items())))
    if bad:
        print(BANNER)
        for r in bad:
            print(f"COUNTEREXAMPLE ({r.verdict}): n={r.n} q={r.q} D={r.realized} size {r.size}")
        print(BANNER)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_counts(args) -> int:
    n, s = args.n, args.s
    ok = True
    for parity, label in (("even", "Q"), ("odd", "R")):
        spec = MonomialClassSpec(n, s, parity, True)
        formula = monomial_class_count(spec)
        enumerated = len(monomial_class_enumerate(spec))
        match = formula == enumerated
        ok &= match
        print(f"{label}({n},{s}): formula {formula}, enumeration {enumerated}, {'MATCH' if match else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_sweep(args) -> int:
    violations = exhaustive_family_sweep(args.n)
    print(f"{sweep_family_count(args.n)} families checked, {len(violations)} violations")
    for v in violations:
        print(f"  {v.kind}: D={v.distances} size {v.size} > {v.bound}")
    return EXIT_OK if not violations else EXIT_VIOLATION


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hamsym",
        description="Bounds, certificates and searches for Hamming symmetric families.",
        epilog=FORMAT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def search_flags(p):
        p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET, help="branch node limit")
        p.add_argument("--time-limit", type=float, default=None, help="optional wall-clock limit (s)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def parallel_flags(p):
        p.add_argument("--threads", type=int, default=1,
                       help="worker processes for independent survey rows")
        p.add_argument("--deterministic", action="store_true", help="force sequential search")

    p = sub.add_parser("check", help="distance set, symmetry and applicable bound of a family file",
                       epilog=FORMAT_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("family")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bound", help="evaluate a bound formula exactly")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--half", action="store_true", help="n/2 is among the distances")
    p.add_argument("--q", type=int, default=None, help="alphabet size; alone selects the Delsarte bound")
    p.add_argument("--conjecture", action="store_true", help="use the conjectured q-ary bound")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("certify", help="linear-independence certificate for a binary family",
                       epilog=FORMAT_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("family")
    p.add_argument("--out", default=None, help="write the certificate here instead of stdout")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("search", help="maximum family with distances in a prescribed set")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-D", "--distances", type=_distances_arg, required=True, help="e.g. 1,2,3")
    p.add_argument("-q", "--q", type=int, default=2)
    search_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("survey", help="maximum families for every symmetric distance set")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-q", "--q", type=int, default=2)
    search_flags(p)
    parallel_flags(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("conjecture", help="explore the q-ary conjecture for n = 1..n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("-q", "--q", type=int, default=3)
    search_flags(p)
    parallel_flags(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("counts", help="monomial class sizes: closed form vs enumeration")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("sweep", help="brute-force check of every family on [n], n <= 4")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except FamilyFormatError as exc:
        print(f"{args.family}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ParameterError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
