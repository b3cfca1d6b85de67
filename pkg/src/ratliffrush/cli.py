"""Command-line front end.

Exit codes: 0 success, 2 parse/usage error, 3 ideal not m-primary,
4 closure refused because the ideal is bad.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .boxes import box_ideal
from .closure import axis_stabilize, is_very_good, oracle_closure, rr_closure
from .errors import BadIdeal, DimensionMismatch, NotMPrimary
from .freiman import freiman_check
from .goodness import classify
from .monomial import MonomialIdeal, colon_ideal, ideal_power, mprimary_profile
from .parsing import IdealSpec, ParseError, format_ideal, format_monomial, parse_ideal

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_PRIMARY = 3
EXIT_BAD = 4

COMMANDS = ("classify", "closure", "stabilize", "box-ideal", "power", "colon", "oracle", "freiman", "very-good")


def ideal_json(I: MonomialIdeal, variables) -> dict:
    return {"vars": list(variables), "generators": [list(g) for g in I.gens]}


class _Out:
    """Collects a text rendering and a JSON payload side by side."""

    def __init__(self, variables):
        self.vars = variables
        self.lines: list = []
        self.data: dict = {}

    def ideal(self, key: str, I: MonomialIdeal, label: str | None = None):
        self.data[key] = ideal_json(I, self.vars)
        self.lines.append(f"{label or key}: {format_ideal(I, self.vars)}")

    def mono(self, m) -> str:
        return format_monomial(m, self.vars)

    def value(self, key: str, v, text: str | None = None):
        self.data[key] = v
        self.lines.append(f"{key}: {v if text is None else text}")


def _added(out: _Out, I: MonomialIdeal, J: MonomialIdeal):
    extra = [g for g in J.gens if g not in set(I.gens)]
    out.value("added", [list(g) for g in extra], ", ".join(out.mono(g) for g in extra) or "(none)")


def _cmd_classify(I, args, out):
    r = classify(I)
    out.value("verdict", r.verdict.value)
    out.value("rule", r.rule.value)
    out.value("d", list(r.profile.d))
    out.value("k_bounds", list(r.k_bounds))
    if r.witness is not None:
        w = r.witness
        out.data["witness"] = {"monomial": list(w.monomial), "power": w.power, "box_sum": w.box_sum}
        out.lines.append(f"witness: {out.mono(w.monomial)} at power {w.power}, max box sum {w.box_sum}")


def _cmd_closure(I, args, out):
    R = rr_closure(I, check=not args.skip_classify, threads=args.threads)
    out.ideal("closure", R)
    _added(out, I, R)


def _cmd_stabilize(I, args, out):
    axes = range(I.n) if args.axis is None else [_axis_index(args.axis, out.vars)]
    if not args.skip_classify:
        r = classify(I)
        if not r.good:
            raise BadIdeal(r)
    res = []
    for i in axes:
        a = axis_stabilize(I, i, check=False)
        res.append(
            {
                "axis": out.vars[i],
                "q": a.q,
                "ideal": ideal_json(a.ideal, out.vars),
                "new": [[list(g) for g in F] for F in a.trace[1:]],
            }
        )
        out.lines.append(f"axis {out.vars[i]}: q = {a.q}")
        for t, F in enumerate(a.trace[1:], start=1):
            out.lines.append(f"  F_{t}: {', '.join(out.mono(g) for g in F) or '(empty)'}")
        out.lines.append(f"  ideal: {format_ideal(a.ideal, out.vars)}")
    out.data["axes"] = res


def _cmd_box_ideal(I, args, out):
    a = tuple(int(x) for x in args.box.split(","))
    if len(a) != I.n:
        raise DimensionMismatch(I.n, len(a))
    if any(x < 0 for x in a):
        raise ValueError("box coordinates must be nonnegative")
    out.value("box", list(a))
    out.ideal("box_ideal", box_ideal(I, a))


def _cmd_power(I, args, out):
    P = ideal_power(I, args.exp)
    out.value("exponent", args.exp)
    out.ideal("power", P)
    out.value("size", len(P))


def _cmd_colon(I, args, out):
    spec = parse_ideal(args.by)
    if set(spec.variables) - set(out.vars):
        raise ParseError(f"unknown variable in --by: {sorted(set(spec.variables) - set(out.vars))}", 1, 1)
    J = IdealSpec(tuple(out.vars), spec.generators).to_ideal()
    out.ideal("divisor", J)
    out.ideal("colon", colon_ideal(I, J))


def _cmd_oracle(I, args, out):
    mprimary_profile(I)
    rep = oracle_closure(I, args.kmax, args.window, threads=args.threads)
    out.value("k_max", rep.k_max)
    out.value("window", rep.window)
    counts = rep.counts
    out.value("counts", counts, ", ".join(f"k={k}: {c}" for k, c in enumerate(counts)))
    out.ideal("union", rep.union)
    _added(out, I, rep.union)
    out.value("stabilized", rep.stabilized)


def _cmd_freiman(I, args, out):
    r = freiman_check(I)
    for key in ("equigenerated", "degree", "n", "g1", "g2", "bound", "mprimary", "very_good"):
        out.value(key, getattr(r, key))
    out.value("verdict", r.verdict.value)


def _cmd_very_good(I, args, out):
    out.value("very_good", is_very_good(I))


_HANDLERS = {
    "classify": _cmd_classify,
    "closure": _cmd_closure,
    "stabilize": _cmd_stabilize,
    "box-ideal": _cmd_box_ideal,
    "power": _cmd_power,
    "colon": _cmd_colon,
    "oracle": _cmd_oracle,
    "freiman": _cmd_freiman,
    "very-good": _cmd_very_good,
}


def _axis_index(axis: str, variables) -> int:
    if axis in variables:
        return list(variables).index(axis)
    try:
        i = int(axis)
    except ValueError:
        raise ParseError(f"unknown axis {axis!r}", 1, 1) from None
    if not 0 <= i < len(variables):
        raise ParseError(f"axis {i} out of range", 1, 1)
    return i


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ratliffrush", description="Powers, goodness and Ratliff-Rush closure of monomial ideals.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("ideal", nargs="?", help="ideal text; omit or '-' to read stdin")
        s.add_argument("-f", "--file", help="read the ideal from a file")
        s.add_argument("--format", choices=("text", "json"), default="text")
        s.add_argument("--threads", type=int, default=1)
        if name in ("closure", "stabilize"):
            s.add_argument("--skip-classify", action="store_true", help="UNSOUND: skip the goodness gate")
        if name == "stabilize":
            s.add_argument("--axis", help="variable name or 0-based index (default: all)")
        if name == "box-ideal":
            s.add_argument("--box", required=True, help="comma-separated box coordinates, e.g. 1,0,0")
        if name == "power":
            s.add_argument("--exp", type=int, required=True)
        if name == "colon":
            s.add_argument("--by", required=True, help="divisor ideal (a monomial is a principal ideal)")
        if name == "oracle":
            s.add_argument("--kmax", type=int, default=15)
            s.add_argument("--window", type=int, default=2)
    return p


def _read_input(args) -> str:
    if args.file:
        with open(args.file) as fh:
            return fh.read()
    if args.ideal is None or args.ideal == "-":
        return sys.stdin.read()
    return args.ideal


def _emit(args, payload: dict, lines: list) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "power" and args.exp < 0:
        parser.error("--exp must be nonnegative")
    if args.command == "oracle" and (args.kmax < 1 or args.window < 1):
        parser.error("--kmax and --window must be positive")
    try:
        spec = parse_ideal(_read_input(args))
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    I = spec.to_ideal()
    out = _Out(spec.variables)
    payload = {"command": args.command, "version": __version__, "input": ideal_json(I, spec.variables)}
    try:
        _HANDLERS[args.command](I, args, out)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (DimensionMismatch, ValueError) as e:
        if isinstance(e, NotMPrimary):
            print(f"error: ideal is not m-primary (no pure power of {spec.variables[e.variable]})", file=sys.stderr)
            payload["error"] = {"kind": "not-m-primary", "variable": spec.variables[e.variable]}
            code = EXIT_NOT_PRIMARY
        elif isinstance(e, BadIdeal):
            w = e.report.witness
            print(
                f"error: ideal is bad; witness {format_monomial(w.monomial, spec.variables)} "
                f"at power {w.power} lies only in boxes with coordinate sum <= {w.box_sum}",
                file=sys.stderr,
            )
            print("hint: the closure formula needs a good ideal; try `ratliffrush oracle`", file=sys.stderr)
            payload["error"] = {
                "kind": "bad-ideal",
                "witness": {"monomial": list(w.monomial), "power": w.power, "box_sum": w.box_sum},
            }
            code = EXIT_BAD
        else:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_PARSE
        if args.format == "json":
            _emit(args, payload, [])
        return code
    payload["result"] = out.data
    _emit(args, payload, out.lines)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
