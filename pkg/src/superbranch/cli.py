"""Command line interface.

Exit status: 0 on success (or when every check passes), 1 when a
verification check fails, 2 on usage errors and rejected inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .branching import branch_type1, branch_type2, gt_count, iter_gt_patterns, kac_branch, poly_branch
from .classify import classify_type1, classify_type2, vanishing_pairs
from .oracle import Report, howe_check, module_dim, verify_branch
from .partitions import dual_weight, parse_partition
from .sweep import sweep_branch, sweep_dual, sweep_howe
from .weights import ClassicalWeight, SuperWeight, WeightError, format_weight, is_dominant, parse_weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# options whose values may start with '-'
_VALUE_OPTIONS = ("--weight", "--partition")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _glue_values(argv: list[str]) -> list[str]:
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def _fmt(w) -> str:
    if isinstance(w, ClassicalWeight):
        return format_weight(SuperWeight(w.parts)) if w.d else "|"
    return format_weight(w)


def _emit(args, payload, human: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def cmd_classify(args) -> int:
    w = parse_weight(args.weight)
    payload = {"weight": _fmt(w), "m": w.m, "n": w.n, "dominant": is_dominant(w)}
    lines = [f"weight    {_fmt(w)}  (m={w.m}, n={w.n})", f"dominant  {'yes' if is_dominant(w) else 'no'}"]
    if w.n:
        pairs = vanishing_pairs(w)
        c1, c2 = classify_type1(w), classify_type2(w)
        payload.update(
            typical=not pairs,
            vanishing_pairs=[list(p) for p in pairs],
            type1={"verdict": str(c1.verdict), "mu": c1.mu, "witnesses": list(c1.witnesses)},
            type2={"verdict": str(c2.verdict), "k": c2.k, "witnesses": list(c2.witnesses)},
        )
        lines += [
            f"typical   {'yes' if not pairs else 'no'}" + (f"  (vanishing pairs {pairs})" if pairs else ""),
            f"type 1    {c1}",
            f"type 2    {c2}",
        ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_branch(args) -> int:
    w = parse_weight(args.weight)
    fn = {"type1": branch_type1, "type2": branch_type2, "kac": kac_branch}[args.kind]
    out = [_fmt(b) for b in fn(w)]
    _emit(args, out, "\n".join(out))
    return EXIT_OK


def cmd_dual(args) -> int:
    w = parse_weight(args.weight)
    du = dual_weight(w)
    _emit(args, {"weight": _fmt(w), "dual": _fmt(du)}, _fmt(du))
    return EXIT_OK


def cmd_gt(args) -> int:
    w = parse_weight(args.weight)
    if not args.emit:
        count = gt_count(w)
        _emit(args, {"weight": _fmt(w), "count": count}, str(count))
        return EXIT_OK
    if args.json:
        # stream the array so patterns are never all held in memory
        sys.stdout.write("[")
        for k, chain in enumerate(iter_gt_patterns(w)):
            sys.stdout.write(("," if k else "") + json.dumps([_fmt(x) for x in chain]))
        sys.stdout.write("]\n")
    else:
        for chain in iter_gt_patterns(w):
            print("  ".join(_fmt(x) for x in chain))
    return EXIT_OK


def cmd_dim(args) -> int:
    w = parse_weight(args.weight)
    d = module_dim(w)
    _emit(args, {"weight": _fmt(w), "dim": d}, str(d))
    return EXIT_OK


def cmd_poly_branch(args) -> int:
    p = parse_partition(args.partition)
    rows = poly_branch(p, args.m, args.n)
    payload = [{"partition": str(q), "weight": _fmt(nw)} for q, nw in rows]
    _emit(args, payload, "\n".join(f"({q})  {_fmt(nw)}" for q, nw in rows))
    return EXIT_OK


def _report_out(args, report: Report, summary_only: bool = True) -> int:
    failures = [r for r in report.records if not r["pass"]]
    if args.json:
        payload = {
            "title": report.title,
            "pass": report.passed,
            "checked": len(report.records),
            "failures": failures,
        }
        if not summary_only:
            payload["records"] = report.records
        print(json.dumps(payload, sort_keys=True))
    else:
        if summary_only:
            print(f"{report.title}: {len(report.records)} checks, {len(failures)} failed")
            for r in failures:
                print(f"  FAIL {r['claim']}: {r['lhs']} != {r['rhs']}")
        else:
            for r in report.records:
                print(f"{'PASS' if r['pass'] else 'FAIL'}  {r['claim']}: {r['lhs']} vs {r['rhs']}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.weight is not None:
        if args.kind not in ("type1", "type2", "kac"):
            raise WeightError("--weight needs --kind type1, type2 or kac")
        return _report_out(args, verify_branch(parse_weight(args.weight), args.kind), summary_only=False)
    if args.kind == "branch":
        report = sweep_branch(args.max_m, args.max_n, args.max_entry)
    elif args.kind == "dual":
        report = sweep_dual(args.max_m, args.max_n, args.max_entry)
    elif args.kind == "howe":
        report = sweep_howe(args.max_d, args.max_m, args.max_n, args.max_degree)
    else:
        raise WeightError(f"sweep kind {args.kind!r} needs --weight")
    return _report_out(args, report)


def cmd_howe(args) -> int:
    return _report_out(args, howe_check(args.d, args.m, args.n, args.max_degree), summary_only=False)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superbranch", description="Unitary gl(m|n) branching rules with exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine readable output")
        p.set_defaults(func=func)
        return p

    weight_help = 'weight "l1,...,lm|w1,...,wn"; entries are integers or a/b'
    p = add("classify", cmd_classify, "typicality and unitarity verdicts")
    p.add_argument("--weight", required=True, help=weight_help)
    p = add("branch", cmd_branch, "branching to gl(m|n-1)")
    p.add_argument("--kind", choices=("type1", "type2", "kac"), default="type1")
    p.add_argument("--weight", required=True, help=weight_help)
    p = add("dual", cmd_dual, "highest weight of the dual module")
    p.add_argument("--weight", required=True, help=weight_help)
    p = add("gt", cmd_gt, "Gelfand-Tsetlin pattern count")
    p.add_argument("--weight", required=True, help=weight_help)
    p.add_argument("--emit", action="store_true", help="list the patterns")
    p = add("dim", cmd_dim, "dimension of the simple module")
    p.add_argument("--weight", required=True, help=weight_help)
    p = add("poly-branch", cmd_poly_branch, "branching of a polynomial module")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", required=True, help='"p1,p2,..." (empty string for the empty partition)')
    p = add("verify", cmd_verify, "oracle checks, single weight or exhaustive sweep")
    p.add_argument("--kind", choices=("branch", "dual", "howe", "type1", "type2", "kac"), required=True)
    p.add_argument("--weight", help="check one weight (with --kind type1|type2|kac)")
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--max-entry", type=int, default=2)
    p.add_argument("--max-d", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=6)
    p = add("howe", cmd_howe, "graded Howe duality check")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    return parser


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("max_m", "max_n", "max_entry", "max_d", "max_degree", "m", "n", "d"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            print(f"superbranch: error: --{name.replace('_', '-')} must be non-negative", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except WeightError as exc:
        print(f"superbranch {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
