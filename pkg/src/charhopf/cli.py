"""Command line interface: ``charhopf <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 invalid presentation, 3 failed check.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import ConfigError, load_config
from .expr import ExpressionError, format_element, parse_expression
from .presentation import PresentationError, validate
from .presets import PresetError, load_preset
from .rewrite import ALL, confluence_selftest, dimension, enumerate_pbw, normal_form
from .scalars import INFINITE
from .superletters import SuperElement, expand_superelement
from .verify import OracleConfig, OracleError, hopf_ideal_check, oracle_dimension, top_degree
from .words import enumerate_lyndon, format_word, parse_word, shirshov

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", help="preset as name:params, e.g. uq_sl2:3")
    common.add_argument("--config", help="JSON configuration file")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = _Parser(prog="charhopf", description="PBW bases and normal forms for character Hopf algebras")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lyndon", parents=[common], help="list Lyndon words")
    p.add_argument("--theta", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)

    p = sub.add_parser("shirshov", parents=[common], help="Shirshov decomposition of a word")
    p.add_argument("word")

    for name, hlp in (("expand", "expand an expression into letters and group elements"),
                      ("reduce", "normal form of an expression")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("expression")

    sub.add_parser("dim", parents=[common], help="dimension from the PBW basis")
    p = sub.add_parser("basis", parents=[common], help="list PBW monomials")
    p.add_argument("--max-degree", type=int)
    sub.add_parser("hopf-check", parents=[common], help="check that the ideal is a Hopf ideal")
    p = sub.add_parser("oracle-dim", parents=[common], help="dimensions by brute-force row reduction")
    p.add_argument("--max-degree", type=int)
    p = sub.add_parser("confluence", parents=[common], help="randomised confluence self-test")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    sub.add_parser("validate", parents=[common], help="validate the presentation data")
    return ap


def _presentation(args):
    if bool(args.preset) == bool(args.config):
        raise UsageError("give exactly one of --preset and --config")
    if args.preset:
        return load_preset(args.preset)
    return load_config(args.config)


def _emit(args, text, data):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _require_valid(args, p):
    rep = validate(p)
    if not rep.ok:
        _emit(args, str(rep), rep.to_json())
        return False
    return True


def _dim_text(n):
    return "inf" if n == INFINITE else str(n)


def _run(args) -> int:
    cmd = args.command
    if cmd == "lyndon":
        if args.theta < 1 or args.max_len < 0:
            raise UsageError("need --theta >= 1 and --max-len >= 0")
        words = [format_word(w) for w in enumerate_lyndon(args.theta, args.max_len)]
        _emit(args, ", ".join(words), words)
        return EXIT_OK
    if cmd == "shirshov":
        w = parse_word(args.word)
        v, u = shirshov(w)
        _emit(args, f"({format_word(v)}, {format_word(u)})", [format_word(v), format_word(u)])
        return EXIT_OK

    p = _presentation(args)
    if cmd == "validate":
        rep = validate(p)
        _emit(args, str(rep), rep.to_json())
        return EXIT_OK if rep.ok else EXIT_INVALID
    if cmd == "hopf-check":
        rep = hopf_ideal_check(p)
        _emit(args, str(rep), rep.to_json())
        return EXIT_OK if rep.ok else EXIT_CHECK
    if not _require_valid(args, p):
        return EXIT_INVALID

    if cmd in ("expand", "reduce"):
        e = parse_expression(args.expression, p.grading, p.Lset)
        out = expand_superelement(e) if cmd == "expand" else normal_form(e, p)
        text = format_element(out)
        _emit(args, text, {"result": text})
    elif cmd == "dim":
        n = dimension(p)
        _emit(args, _dim_text(n), {"dimension": _dim_text(n)})
    elif cmd == "basis":
        deg = ALL if args.max_degree is None else args.max_degree
        if deg == ALL and not p.is_finite():
            raise UsageError("infinite basis: give --max-degree")
        mons = enumerate_pbw(p, deg)
        lines = [format_element(SuperElement.superword(p.grading, m.superword(), 1, m.group)) for m in mons]
        _emit(args, "\n".join(lines), lines)
    elif cmd == "oracle-dim":
        if args.max_degree is None:
            top = top_degree(p)
            if top == INFINITE:
                raise UsageError("infinite presentation: give --max-degree")
            cfg = OracleConfig(max_zdeg=top)
        else:
            cfg = OracleConfig(max_zdeg=args.max_degree)
        res = oracle_dimension(p, cfg)
        text = "\n".join(f"degree {i}: {d}" for i, d in enumerate(res.per_degree))
        text += f"\ntotal: {res.total}"
        _emit(args, text, res.to_json())
    elif cmd == "confluence":
        rep = confluence_selftest(p, args.trials, args.max_degree, args.seed)
        text = (f"{rep.trials} trials: {len(rep.mismatches)} mismatches, "
                f"{len(rep.not_idempotent)} not idempotent, {len(rep.not_normal)} not normal")
        _emit(args, text, rep.to_json())
        return EXIT_OK if rep.ok else EXIT_CHECK
    return EXIT_OK


def main(argv=None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _run(args)
    except (UsageError, PresetError, ConfigError, ExpressionError, OracleError, ValueError) as exc:
        if isinstance(exc, PresentationError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
