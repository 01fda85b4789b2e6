"""Command-line front end.

Exit codes: 0 success, 1 negative mathematical result (axiom failure, not
isomorphic, search mismatch), 2 invalid input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable

from .classify import automorphism_group, count_classes, family, witness_isomorphism
from .classify.bruteforce import DEFAULT_BUDGET as BRUTE_BUDGET
from .constructions import group_algebra, matched_pair_search, t_quantum_group, taft, verify_matched_pair
from .constructions.search import DEFAULT_BUDGET as SEARCH_BUDGET
from .errors import BudgetExceeded, InvalidParameters, NotIsomorphic
from .exactmath import FieldSpec, PrimeField, make_field, roots_of_unity
from .hopfcore import verify_hopf

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class Output:
    """Collects text and writes it to stdout or --out in one piece."""

    def __init__(self):
        self.buf = io.StringIO()

    def line(self, text: str = "") -> None:
        self.buf.write(text + "\n")

    def json(self, obj) -> None:
        self.buf.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")

    def csv(self, header: list[str], rows: list[list]) -> None:
        w = csv.writer(self.buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _require(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise InvalidParameters(f"missing required option(s): {', '.join(missing)}")


def _field(args):
    return make_field(FieldSpec.parse(args.field))


def _fmt(F, x) -> str:
    return F.format_element(x)


def _report_rows(report) -> list[list]:
    rows = []
    for c in report.checks:
        d = c.to_dict()
        rows.append([d["name"], d["passed"], d["checked"], " ".join(map(str, d.get("witness") or [])), d.get("lhs", ""), d.get("rhs", "")])
    return rows


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify(args, out: Output) -> int:
    F = _field(args)
    if args.algebra == "taft":
        _require(args, "m")
        H = taft(F, args.m)
        desc = {"algebra": "taft", "m": args.m, "q": _fmt(F, H.presentation.q)}
    elif args.algebra == "group":
        _require(args, "n")
        H = group_algebra(F, args.n)
        desc = {"algebra": "group", "n": args.n}
    else:
        _require(args, "m", "n", "t")
        fam = family(args.m, args.n, F)
        fam.check_exponent(args.t)
        H = t_quantum_group(F, args.m, fam.q, args.n, fam.omega(args.t))
        desc = {"algebra": "tqg", "m": args.m, "n": args.n, "t": args.t, "q": _fmt(F, fam.q), "omega": _fmt(F, fam.omega(args.t))}
    report = verify_hopf(H)
    if args.format == "json":
        out.json({**desc, "field": str(F.spec), "dim": H.dim, **report.to_dict()})
    elif args.format == "csv":
        out.csv(["family", "passed", "checked", "witness", "lhs", "rhs"], _report_rows(report))
    else:
        params = " ".join(f"{k}={v}" for k, v in desc.items() if k != "algebra")
        out.line(f"{desc['algebra']} {params} over {F.spec}: dim {H.dim}")
        out.line(report.summary())
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_matched_pairs(args, out: Output) -> int:
    _require(args, "m", "n")
    F = _field(args)
    fam = family(args.m, args.n, F)
    roots = roots_of_unity(F, args.n)
    pairs = [(t, fam.pair(t)) for t in range(fam.nu)]
    reports = [(t, verify_matched_pair(mp)) for t, mp in pairs]
    status = all(r.passed for _, r in reports)
    search = None
    if args.search:
        budget = args.budget if args.budget is not None else SEARCH_BUDGET
        found = matched_pair_search(F, args.m, fam.q, args.n, budget=budget)
        matched = sum(1 for mp in found if any(mp.same_actions(std) for _, std in pairs))
        search = {"found": len(found), "matching_standard": matched, "expected": fam.nu}
        status = status and matched == len(found) == fam.nu
    data = {
        "m": args.m,
        "n": args.n,
        "field": str(F.spec),
        "nu": fam.nu,
        "omegas": [_fmt(F, w) for w in roots.elements],
        "pairs": [{"t": t, "omega": _fmt(F, fam.omega(t)), **r.to_dict()} for t, r in reports],
    }
    if search is not None:
        data["search"] = search
    if args.format == "json":
        out.json(data)
    elif args.format == "csv":
        rows = [[t, _fmt(F, fam.omega(t)), c.name, c.passed] for t, r in reports for c in r.checks]
        out.csv(["t", "omega", "family", "passed"], rows)
    else:
        out.line(f"matched pairs for m={args.m} n={args.n} over {F.spec}: nu = {fam.nu}")
        out.line("omega = xi^t: " + ", ".join(data["omegas"]))
        for t, r in reports:
            verdict = "pass" if r.passed else "FAIL"
            failing = ", ".join(c.name for c in r.failures())
            out.line(f"  t={t} omega={_fmt(F, fam.omega(t))}: mp1-mp4 and module/coalgebra checks {verdict}{' (' + failing + ')' if failing else ''}")
        if search is not None:
            out.line(f"search found {search['matching_standard']}/{search['expected']} expected pairs ({search['found']} survivors)")
    return EXIT_OK if status else EXIT_NEGATIVE


def cmd_classify(args, out: Output) -> int:
    _require(args, "m", "n")
    F = _field(args)
    report = count_classes(args.m, args.n, F)
    data = report.to_dict()
    if args.format == "json":
        out.json(data)
    elif args.format == "csv":
        rows = []
        for t, row in enumerate(report.pairwise):
            for t2, iso in enumerate(row):
                rows.append([report.m, report.n, report.field, report.nu, report.d, report.count, t, t2, iso])
        out.csv(["m", "n", "field", "nu", "d", "count", "t", "t2", "isomorphic"], rows)
    else:
        fac = " * ".join(f"{p}^{e}" for p, e in report.factorization) or "1"
        out.line(f"m={report.m} n={report.n} field={report.field}")
        out.line(f"nu={report.nu} d={report.d} nu/d factorization: {fac}")
        out.line(f"count={report.count}")
        out.line("representatives: " + " ".join(str(r) for r in report.representatives))
        out.line("pairwise (row t, column t'; 1 = isomorphic):")
        for t, row in enumerate(report.pairwise):
            out.line(f"  t={t}: " + " ".join("1" if x else "0" for x in row))
        for a in report.aut:
            elems = " ".join(f"({l},{s})" for l, s in a.elements)
            out.line(f"S^t for t={a.t}: order {a.order}: {elems}")
    return EXIT_OK


def cmd_iso(args, out: Output) -> int:
    _require(args, "m", "n", "t", "t2")
    F = _field(args)
    try:
        w = witness_isomorphism(args.t, args.t2, args.m, args.n, F)
    except NotIsomorphic:
        if args.format == "json":
            out.json({"t": args.t, "t2": args.t2, "isomorphic": False})
        elif args.format == "csv":
            out.csv(["t", "t2", "isomorphic"], [[args.t, args.t2, False]])
        else:
            out.line(f"t={args.t} t2={args.t2}: not isomorphic")
        return EXIT_NEGATIVE
    verified = w.verified
    data = {
        "t": w.t,
        "t2": w.t2,
        "isomorphic": True,
        "l": w.l,
        "s": w.s,
        "gamma": _fmt(F, w.gamma),
        "bezout": w.bezout.to_dict(),
        "inverse": {"l": w.inverse_params[0], "s": w.inverse_params[1]},
        "verified": verified,
    }
    if args.format == "json":
        out.json(data)
    elif args.format == "csv":
        bz = w.bezout
        out.csv(
            ["t", "t2", "l", "s", "tau", "mu", "tau1", "tau2", "alpha", "beta", "inverse_l", "inverse_s", "verified"],
            [[w.t, w.t2, w.l, w.s, bz.tau, bz.mu, bz.tau1, bz.tau2, bz.alpha, bz.beta, *w.inverse_params, verified]],
        )
    else:
        bz = w.bezout
        out.line(f"t={w.t} t2={w.t2}: isomorphic with (l, s) = ({w.l}, {w.s}), gamma = {data['gamma']}")
        out.line(f"bezout: tau={bz.tau} mu={bz.mu} tau1={bz.tau1} tau2={bz.tau2} alpha={bz.alpha} beta={bz.beta}")
        out.line(f"inverse data: (l, s) = ({w.inverse_params[0]}, {w.inverse_params[1]})")
        out.line("verified mutually inverse" if verified else "verification FAILED")
    return EXIT_OK if verified else EXIT_NEGATIVE


def cmd_aut(args, out: Output) -> int:
    _require(args, "m", "n", "t")
    F = _field(args)
    brute = isinstance(F, PrimeField)
    budget = args.budget if args.budget is not None else BRUTE_BUDGET
    g = automorphism_group(args.t, args.m, args.n, F, verify=True, brute_force=brute, budget=budget)
    ok = bool(g.group_axioms and g.morphisms_verified and g.composition_law)
    if brute:
        ok = ok and g.brute_force_count == g.expected_brute_force
    data = {
        **g.to_dict(),
        "group_axioms": g.group_axioms,
        "morphisms_verified": g.morphisms_verified,
        "composition_law": g.composition_law,
        "brute_force_count": g.brute_force_count,
        "expected_brute_force": g.expected_brute_force,
        "note": g.field_star_note,
    }
    if args.format == "json":
        out.json(data)
    elif args.format == "csv":
        out.csv(["t", "l", "s"], [[g.t, l, s] for l, s in g.elements])
    else:
        out.line(f"S^t for t={g.t} (m={g.m}, n={g.n}, {F.spec}): order {g.order}")
        for l, s in g.elements:
            out.line(f"  ({l}, {s})")
        out.line(f"group law: {'verified' if g.group_axioms else 'FAILED'}")
        out.line(f"automorphisms and matrix composition: {'verified' if g.morphisms_verified and g.composition_law else 'FAILED'}")
        if brute:
            out.line(
                f"brute-force automorphisms: {g.brute_force_count}, expected (p-1)*|S^t| = {g.expected_brute_force}"
            )
        out.line(g.field_star_note)
    return EXIT_OK if ok else EXIT_NEGATIVE


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="gf:13", help="gf:<p> or cyc:<M> (default gf:13)")
    common.add_argument("--m", type=int, help="Taft order m")
    common.add_argument("--n", type=int, help="cyclic group order n")
    common.add_argument("--t", type=int, help="exponent t, omega = xi^t")
    common.add_argument("--t2", type=int, help="second exponent t'")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--budget", type=int, help="candidate budget for searches")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="hopftaft", description="Hopf algebras built from Taft algebras and cyclic groups")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("verify", parents=[common], help="build an algebra and check every Hopf axiom")
    p.add_argument("algebra", choices=("taft", "group", "tqg"))
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("matched-pairs", parents=[common], help="list and verify the standard matched pairs")
    p.add_argument("--search", action="store_true", help="also run the exhaustive search (prime fields only)")
    p.set_defaults(func=cmd_matched_pairs)
    p = sub.add_parser("classify", parents=[common], help="count isomorphism classes")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("iso", parents=[common], help="decide and witness T^(xi^t) ~ T^(xi^t2)")
    p.set_defaults(func=cmd_iso)
    p = sub.add_parser("aut", parents=[common], help="automorphism group data for T^(xi^t)")
    p.set_defaults(func=cmd_aut)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is not None and args.budget < 1:
        parser.error("--budget must be positive")
    out = Output()
    func: Callable = args.func
    try:
        code = func(args, out)
    except InvalidParameters as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    text = out.buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
