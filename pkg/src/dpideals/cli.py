"""Command line front end.

    dpideals gens --mu 3,1
    dpideals betti --hook 2 1 --format m2
    dpideals verify --hook 1 2 --format json

Exit status: 0 on success, 1 when a verification check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ideals, oracle, series
from .partitions import Hook, NotAPartition, Partition, as_hook, hook_to_partition, make_partition
from .polyring import monomial_str, render

SUBCOMMANDS = ("gens", "poincare", "betti", "hilbert", "reg", "dual", "verify", "identities")
HOOK_ONLY = {"poincare", "betti", "hilbert", "reg", "dual"}


class UsageError(Exception):
    pass


def dump(obj) -> str:
    return json.dumps(obj) + "\n"


def parse_shape(args) -> tuple[Partition, Hook | None]:
    if args.hook is not None and args.mu is not None:
        raise UsageError("give either --hook or --mu, not both")
    if args.hook is not None:
        a, b = args.hook
        h = Hook(a, b)
        return hook_to_partition(h), h
    if args.mu is not None:
        try:
            parts = [int(x) for x in args.mu.replace(" ", "").split(",") if x != ""]
        except ValueError:
            raise UsageError(f"cannot read partition {args.mu!r}") from None
        p = make_partition(parts)
        return p, as_hook(p)
    raise UsageError("a shape is required: --hook A B or --mu 3,1,...")


def _need_hook(cmd: str, p: Partition, h: Hook | None) -> Hook:
    if h is None:
        raise UsageError(f"{cmd}: closed forms require a hook partition (a+1, 1^b); {p} is not a hook")
    return h


def cmd_gens(args, p, h) -> tuple[str, int]:
    if h is not None:
        split = ideals.hook_split(h)
        J = [monomial_str(g) for g in split.monomial_part.gens]
        E = [render(e) for e in split.symmetric_part]
        if args.format == "json":
            return dump({"partition": list(p.parts), "hook": [h.a, h.b],
                         "monomial_part": J, "symmetric_part": E}), 0
        lines = [f"mu = {p} = ({h.a}|{h.b}), n = {h.n}",
                 f"J: {len(J)} squarefree monomials of degree {h.b + 1}",
                 "  (" + ", ".join(J) + ")",
                 f"E: {len(E)} elementary symmetric polynomials"]
        lines += [f"  e_{i}: {e}" for i, e in enumerate(E, start=1)]
        return "\n".join(lines) + "\n", 0
    gens = [render(g) for g in ideals.tanisaki_generators(p)]
    if args.format == "json":
        return dump({"partition": list(p.parts), "hook": None, "generators": gens}), 0
    return f"mu = {p}, {len(gens)} generators\n" + "".join(f"  {g}\n" for g in gens), 0


def cmd_poincare(args, p, h) -> tuple[str, int]:
    P = series.poincare_hook(h)
    if args.format == "json":
        terms = [[i, j, v] for (i, j), v in sorted(P.coeffs.items())]
        return dump({"hook": [h.a, h.b], "poincare": terms}), 0
    return f"{P}\n", 0


def cmd_betti(args, p, h) -> tuple[str, int]:
    table = series.betti_table(series.poincare_hook(h))
    if args.format == "json":
        return dump(table.as_dict()), 0
    return table.render(args.format), 0


def cmd_hilbert(args, p, h) -> tuple[str, int]:
    hs = series.hilbert_hook(h)
    if args.format == "json":
        return dump({"hook": [h.a, h.b], "hilbert": hs.coeffs, "dimension": hs(1)}), 0
    return f"{hs.render('q')}\n", 0


def cmd_reg(args, p, h) -> tuple[str, int]:
    formula = series.regularity_hook(h)
    table = series.regularity_from_table(series.betti_table(series.poincare_hook(h)))
    if args.format == "json":
        return dump({"hook": [h.a, h.b], "formula": formula, "table": table}), 0
    return f"b(b+1)/2 = {formula}\nfrom Betti table: {table}\n", 0


def cmd_dual(args, p, h) -> tuple[str, int]:
    J = ideals.hook_split(h).monomial_part
    dual = ideals.alexander_dual(J)
    gens = [monomial_str(g) for g in dual.gens]
    if args.format == "json":
        return dump({"hook": [h.a, h.b], "ideal": [monomial_str(g) for g in J.gens], "dual": gens}), 0
    return (f"J = all squarefree monomials of degree {h.b + 1} in {h.n} variables\n"
            f"dual: {len(gens)} generators\n  (" + ", ".join(gens) + ")\n"), 0


def cmd_verify(args, p, h) -> tuple[str, int]:
    if args.dimension_only or h is None:
        if h is None and not args.dimension_only:
            raise UsageError(f"verify: {p} is not a hook; use --dimension-only")
        check = oracle.verify_dimension(p, args.max_degree)
        if args.format == "json":
            return dump({"partition": list(p.parts), "checks": [check.as_dict()]}), int(not check.passed)
        status = "PASS" if check.passed else "FAIL"
        return f"[{status}] {check.name}: expected {check.expected}, got {check.got}\n", int(not check.passed)
    report = oracle.verify_hook(h, args.max_degree)
    code = 0 if report.passed else 1
    if args.format == "json":
        return dump(report.as_dict()), code
    return report.render() + "\n", code


def cmd_identities(args, p, h) -> tuple[str, int]:
    cauchy = {n: series.cauchy_identity_check(n) for n in range(args.cauchy_max + 1)}
    binom = {(n, b): series.hockey_stick_check(n, b)
             for n in range(1, args.binomial_max + 1) for b in range(n)}
    ok = all(cauchy.values()) and all(binom.values())
    if args.format == "json":
        out = {"cauchy": [[n, v] for n, v in cauchy.items()],
               "binomial": [[n, b, v] for (n, b), v in binom.items()], "pass": ok}
        return dump(out), int(not ok)
    bad_c = [n for n, v in cauchy.items() if not v]
    bad_b = [k for k, v in binom.items() if not v]
    lines = [f"cauchy t-binomial identity, n = 0..{args.cauchy_max}: "
             + ("ok" if not bad_c else f"FAILS at {bad_c}"),
             f"sum_i C(b+i,b) = C(n,b+1), n = 1..{args.binomial_max}: "
             + ("ok" if not bad_b else f"FAILS at {bad_b}")]
    return "\n".join(lines) + "\n", int(not ok)


HANDLERS = {
    "gens": cmd_gens, "poincare": cmd_poincare, "betti": cmd_betti, "hilbert": cmd_hilbert,
    "reg": cmd_reg, "dual": cmd_dual, "verify": cmd_verify, "identities": cmd_identities,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dpideals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        if name != "identities":
            sp.add_argument("--hook", nargs=2, type=int, metavar=("A", "B"), help="hook (A|B) = (A+1, 1^B)")
            sp.add_argument("--mu", help="partition as comma separated parts, e.g. 3,1")
        formats = ["text", "json", "m2"] if name == "betti" else ["text", "json"]
        sp.add_argument("--format", choices=formats, default="m2" if name == "betti" else "text")
        if name == "verify":
            sp.add_argument("--max-degree", type=int, default=None,
                            help="truncation degree (default b(b+1)/2 + 2)")
            sp.add_argument("--dimension-only", action="store_true",
                            help="only compare dim R/I_mu with the multinomial coefficient")
        if name == "identities":
            sp.add_argument("--cauchy-max", type=int, default=12)
            sp.add_argument("--binomial-max", type=int, default=20)
    return parser


def run(argv=None) -> tuple[str, int]:
    args = build_parser().parse_args(argv)
    p = h = None
    if args.command != "identities":
        p, h = parse_shape(args)
        if args.command in HOOK_ONLY:
            h = _need_hook(args.command, p, h)
    return HANDLERS[args.command](args, p, h)


def main(argv=None) -> int:
    try:
        text, code = run(argv)
    except (UsageError, NotAPartition) as exc:
        print(f"dpideals: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
