"""Command-line front end: ``jordan-ladder {chain,verify,compare,params}``."""
import argparse
import json
import logging
import sys

from .algebra import NAMED_MODELS, custom_model, model_by_name
from .chain import ChainError, ChainVerificationError, solve_chain
from .fixtures import FixtureError, compare_to_paper, demonstrate_typos, fixture_for
from .serialize import chain_to_json, chain_to_latex, chain_to_text
from .verify import verify_model

MODELS = sorted(NAMED_MODELS) + ["custom"]


def _model(args):
    if args.model == "custom":
        if not args.f:
            raise SystemExit("error: --model custom needs --f, e.g. --f '2:b,5:c5'")
        return custom_model(args.f)
    if args.f:
        raise SystemExit("error: --f is only valid with --model custom")
    return model_by_name(args.model)


def _nonneg(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("n must be >= 0")
    return n


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_chain(args):
    model = _model(args)
    try:
        chain = solve_chain(model, args.n)
    except ChainVerificationError as exc:
        for f in exc.failures:
            print(f"FAIL {f}", file=sys.stderr)
        return 1
    except ChainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        cites = []
        try:
            cites = sorted({ln.citation for ln in fixture_for(model.name, args.n).lines})
        except FixtureError:
            pass
        text = chain_to_json(chain, cites if model.name != "custom" else [])
    elif args.format == "latex":
        text = chain_to_latex(chain)
    else:
        text = chain_to_text(chain)
    _emit(text, args.output)
    return 0


def cmd_verify(args):
    model = _model(args)
    checks = verify_model(model, args.depth, trials=args.trials, pairing_degree=args.pairing_degree,
                          seed=args.seed)
    failed = [c for c in checks if not c.ok]
    if args.format == "json":
        doc = {"model": model.name, "depth": args.depth, "passed": not failed,
               "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]}
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [c.line() for c in checks]
        lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
        _emit("\n".join(lines) + "\n", args.output)
    return 1 if failed else 0


def cmd_compare(args):
    model = _model(args)
    try:
        fixture = fixture_for(model.name, args.n)
    except FixtureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        chain = solve_chain(model, args.n)
    except ChainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    report = compare_to_paper(chain, fixture)
    demos = demonstrate_typos(chain, fixture)
    unproven = [e.citation for e in report.entries if e.status == "known-typo-candidate" and not demos.get(e.citation)]
    if args.format == "json":
        doc = {"model": model.name, "n": args.n, "ok": report.ok and not unproven,
               "counts": report.counts(),
               "entries": [{"m": e.m, "i": e.i, "j": e.j, "status": e.status, "citation": e.citation,
                            "printed": None if e.printed is None else str(e.printed),
                            "solved": str(e.solved), "note": e.note,
                            "printed_breaks": [str(f) for f in demos.get(e.citation, [])]}
                           for e in report.entries]}
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        out = [f"{model.name} n={args.n} against {fixture.source}"]
        for e in report.entries:
            if e.status == "exact-match" and not args.all:
                continue
            out.append(f"{e.status:22s} m={e.m} ({e.i},{e.j}) {e.citation}")
            if e.status != "exact-match":
                out.append(f"    printed: {e.printed}")
                out.append(f"    solved:  {e.solved}")
                if e.note:
                    out.append(f"    note:    {e.note}")
                for f in demos.get(e.citation, [])[:2]:
                    out.append(f"    printed value breaks {f[0]} at {f[1]}: {f[2]}")
        counts = ", ".join(f"{k}: {v}" for k, v in sorted(report.counts().items()))
        out.append(f"summary: {counts}")
        _emit("\n".join(out) + "\n", args.output)
    return 0 if report.ok and not unproven else 1


def cmd_params(args):
    import sympy

    w1, w2, g = (sympy.nsimplify(sympy.sympify(x)) for x in (args.omega1, args.omega2, args.g))
    s = w1 ** 2 + w2 ** 2
    if s == 0:
        print("error: omega1 and omega2 are both zero", file=sys.stderr)
        return 2
    two_a = sympy.sqrt(s / 2)
    a = sympy.simplify(two_a / 2)
    b = sympy.simplify(g / (8 * a))
    required = sympy.simplify(-(w1 ** 2 - w2 ** 2) / 2)
    valid = sympy.simplify(g - required) == 0
    doc = {"a": str(a), "b": str(b), "a_numeric": float(a), "b_numeric": float(b),
           "g_required": str(required), "valid": bool(valid)}
    if args.format == "json":
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        _emit(f"a = {a} ~ {float(a):.12g}\nb = {b} ~ {float(b):.12g}\n"
              f"g required = {required}; given g {'satisfies' if valid else 'violates'} the condition\n",
              args.output)
    return 0 if valid else 1


def build_parser():
    p = argparse.ArgumentParser(prog="jordan-ladder",
                                description="Exact Jordan chains for the complex anharmonic oscillator family")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n=True, formats=("text", "json")):
        sp.add_argument("--model", choices=MODELS, default="quartic")
        sp.add_argument("--f", help="custom F as power:coeff list, e.g. '2:b,5:c5'")
        if n:
            sp.add_argument("--n", type=_nonneg, required=True)
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("-o", "--output")

    sp = sub.add_parser("chain", help="solve and print a verified chain")
    common(sp, formats=("text", "json", "latex"))
    sp.set_defaults(func=cmd_chain)

    sp = sub.add_parser("verify", help="run the invariant suites")
    common(sp, n=False)
    sp.add_argument("--depth", type=_nonneg, default=2, help="solve chains for n = 0..depth")
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--pairing-degree", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("compare", help="diff a chain against the printed table")
    common(sp)
    sp.add_argument("--all", action="store_true", help="also list exact matches")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("params", help="a, b from the oscillator frequencies and coupling")
    sp.add_argument("--omega1", required=True)
    sp.add_argument("--omega2", required=True)
    sp.add_argument("--g", required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_params)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
