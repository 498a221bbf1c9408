"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bicross, ffun
from .action import act
from .bicross import HElement
from .coaction import coact
from .core import GradedTensor, SuperPoly, UnknownGeneratorError
from .parse import ParseError, parse
from .uenv import UEnvElement, u_antipode, u_coproduct

SUITES = ("f", "u", "action", "coaction", "compat", "hopf", "classical", "jets")
ORACLES = ("coproduct", "action", "antipode", "factorization")

KIND_NAMES = {SuperPoly: "F", UEnvElement: "U", HElement: "H", GradedTensor: "tensor"}


class UsageError(ValueError):
    pass


def _element(text, kind=None):
    v = parse(text, kind)
    if not isinstance(v, (SuperPoly, UEnvElement, HElement, GradedTensor)):
        v = SuperPoly.const(v)
    return v


def render(value, fmt):
    if fmt == "json":
        out = {"kind": KIND_NAMES[type(value)], "terms": value.to_json()}
        if isinstance(value, GradedTensor):
            out["legs"] = [s.name for s in value.spaces]
        return json.dumps(out, sort_keys=True)
    if fmt == "latex":
        return value.to_latex()
    return str(value)


def cmd_normalize(args):
    return _element(args.expr)


def cmd_coproduct(args):
    x = _element(args.expr)
    if isinstance(x, SuperPoly):
        return ffun.coproduct(x)
    if isinstance(x, UEnvElement):
        return u_coproduct(x)
    if isinstance(x, HElement):
        return bicross.h_coproduct(x)
    raise UsageError("coproduct needs an F, U or H element")


def cmd_antipode(args):
    x = _element(args.expr)
    if isinstance(x, SuperPoly):
        return ffun.antipode(x)
    if isinstance(x, UEnvElement):
        return u_antipode(x)
    if isinstance(x, HElement):
        return bicross.h_antipode(x)
    raise UsageError("antipode needs an F, U or H element")


def cmd_act(args):
    return act(_element(args.u_expr, "u"), _element(args.f_expr, "f"))


def cmd_coact(args):
    return coact(_element(args.u_expr, "u"))


def cmd_hmul(args):
    return _element(args.left, "h") * _element(args.right, "h")


def run_suite(name, args):
    from . import action, coaction, jets, uenv

    k, m, s = args.max_index, args.samples, args.seed
    if name == "f":
        return [ffun.verify_f_hopf(k, m, s)]
    if name == "u":
        return [uenv.verify_u(m, s)]
    if name == "action":
        return [action.verify_module_algebra(k, m, s)]
    if name == "coaction":
        return [coaction.verify_comodule(3, m, s)]
    if name == "compat":
        return [bicross.verify_compatibility(k, m, s)]
    if name == "hopf":
        return [bicross.verify_h_hopf(k, m, s)]
    if name == "classical":
        return [bicross.verify_classical(4, k)]
    if name == "jets":
        return [jets.verify_lemmas(k), jets.verify_antipode_coherence(k)]
    raise UsageError(f"unknown suite {name!r}")


def emit_reports(reports, fmt):
    if fmt == "json":
        print(json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2))
    else:
        print("\n\n".join(r.to_text() for r in reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_verify(args):
    if args.max_index < 2 or args.max_index > ffun.MAX_INDEX:
        raise UsageError(f"--max-index must be in 2..{ffun.MAX_INDEX}")
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for name in names:
        reports.extend(run_suite(name, args))
    return emit_reports(reports, args.format)


def cmd_oracle(args):
    from .jets import verify_oracles

    if args.max_index < 2 or args.max_index > 10:
        raise UsageError("--max-index must be in 2..10 for the jet oracles")
    checks = ORACLES if args.check == "all" else (args.check,)
    return emit_reports([verify_oracles(args.max_index, checks)], args.format)


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "latex"), default=argparse.SUPPRESS,
                     help="output format (default text)")
    p = argparse.ArgumentParser(prog="supercm", parents=[fmt],
                                description="Exact computations in the super "
                                            "Connes-Moscovici Hopf algebra.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *positionals):
        sp = sub.add_parser(name, parents=[fmt], help=help_)
        for pos, h in positionals:
            sp.add_argument(pos, help=h)
        sp.set_defaults(fn=fn)
        return sp

    add("normalize", cmd_normalize, "print an expression in canonical form",
        ("expr", "expression"))
    add("coproduct", cmd_coproduct, "coproduct of an F, U or H element", ("expr", "expression"))
    add("antipode", cmd_antipode, "antipode of an F, U or H element", ("expr", "expression"))
    add("act", cmd_act, "left action u |> f", ("u_expr", "U element"), ("f_expr", "F element"))
    add("coact", cmd_coact, "right coaction of F on a U element", ("u_expr", "U element"))
    add("hmul", cmd_hmul, "product in H", ("left", "H element"), ("right", "H element"))

    sp = add("verify", cmd_verify, "run verification suites")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--max-index", type=int, default=6)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=42)

    sp = add("oracle", cmd_oracle, "compare closed forms against jet computations")
    sp.add_argument("--check", choices=ORACLES + ("all",), default="all")
    sp.add_argument("--max-index", type=int, default=6)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        result = args.fn(args)
    except (ParseError, UsageError, UnknownGeneratorError, ffun.IndexBoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if isinstance(result, int):
        return result
    print(render(result, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
