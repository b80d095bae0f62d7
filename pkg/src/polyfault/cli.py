"""polyfault command line: count, enumerate, construct, analyze, series, verify, render.

Exit codes: 0 on success, 1 when a check fails (invalid tiling, failed
verification, extension search exhausted), 2 on bad arguments.  Errors are
written to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import series
from .enumeration import count, iter_tilings
from .faults import analysis_json
from .generative import NoExtensionFound, construct_faultfree, construct_min_crossing
from .grid import Rect, TilingError, tiling_from_json
from .verify import run_verify


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


def _fail(code: int, error: str, message: str, **extra) -> int:
    print(_dump({"error": error, "message": message, **extra}), file=sys.stderr)
    return code


def _read_tiling(path: str):
    text = sys.stdin.read() if path == "-" else open(path).read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"input is not JSON: {err}") from None
    return tiling_from_json(doc)


def _rect(args) -> Rect:
    return Rect(args.rows, args.cols)


def cmd_count(args) -> int:
    if args.domino:
        kind = "all_domino"
    else:
        kind = "faultfree_tromino" if args.faultfree else "all_tromino"
    print(_dump(count(_rect(args), kind, args.method).to_json()))
    return 0


def cmd_enumerate(args) -> int:
    mode = "faultfree" if args.faultfree else "all"
    for k, t in enumerate(iter_tilings(_rect(args), mode)):
        if args.limit is not None and k >= args.limit:
            break
        print(t.dumps())
    return 0


def cmd_construct(args) -> int:
    build = construct_min_crossing if args.min_crossing else construct_faultfree
    print(build(args.rows, args.cols).dumps())
    return 0


def cmd_analyze(args) -> int:
    t = _read_tiling(args.input)
    print(_dump({"rows": t.rows, "cols": t.cols, **analysis_json(t)}))
    return 0


def cmd_series(args) -> int:
    value, kind = series.family_value(args.family, args.t)
    print(_dump({"family": args.family, "t": args.t, "value": str(value), "kind": kind}))
    return 0


def cmd_verify(args) -> int:
    report = run_verify(args.suite)
    if args.figures:
        from .generative import basis_catalog
        from .render import save_figure

        os.makedirs(args.figures, exist_ok=True)
        for (i, j), t in sorted(basis_catalog().items()):
            save_figure(t, os.path.join(args.figures, f"basis_{i}x{j}.svg"))
    print(_dump(report.to_json()))
    if not report.ok:
        names = [c.name for c in report.failures()]
        return _fail(1, "VerificationFailed", f"{len(names)} check(s) failed", failed=names)
    return 0


def cmd_render(args) -> int:
    from .render import ascii_art, render_svg, save_figure

    t = _read_tiling(args.input)
    if args.output:
        if args.format == "ascii":
            with open(args.output, "w") as fh:
                fh.write(ascii_art(t))
        else:
            save_figure(t, args.output)
        return 0
    sys.stdout.write(ascii_art(t) if args.format == "ascii" else render_svg(t))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polyfault", description="L-tromino tilings, fault lines and counting.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def dims(sp):
        sp.add_argument("--rows", type=int, required=True)
        sp.add_argument("--cols", type=int, required=True)

    c = sub.add_parser("count", help="count tilings of a rectangle")
    dims(c)
    which = c.add_mutually_exclusive_group()
    which.add_argument("--faultfree", action="store_true")
    which.add_argument("--domino", action="store_true", help="count domino tilings instead")
    c.add_argument("--method", choices=("dp", "enumerate"), default="dp")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", help="list tilings in canonical order, one JSON per line")
    dims(e)
    e.add_argument("--faultfree", action="store_true")
    e.add_argument("--limit", type=int)
    e.set_defaults(func=cmd_enumerate)

    k = sub.add_parser("construct", help="build one faultfree tiling")
    dims(k)
    k.add_argument("--min-crossing", action="store_true", help="also keep both crossing numbers <= 2")
    k.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="crossings and fault lines of a tiling")
    a.add_argument("--input", required=True, help="tiling JSON file or - for stdin")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("series", help="closed forms and generating-function values")
    s.add_argument("--family", required=True, choices=series.FAMILIES)
    s.add_argument("--t", type=int, required=True)
    s.set_defaults(func=cmd_series)

    v = sub.add_parser("verify", help="run the self-check suite")
    v.add_argument("--suite", choices=("quick", "full"), default="quick")
    v.add_argument("--figures", metavar="DIR", help="also write SVG pictures of the basis tilings")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="draw a tiling")
    r.add_argument("--input", required=True, help="tiling JSON file or - for stdin")
    r.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    r.add_argument("--output", help="write to this file instead of stdout")
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "limit", None) is not None and args.limit < 0:
            raise UsageError("--limit must be non-negative")
        return args.func(args)
    except UsageError as err:
        return _fail(2, "UsageError", str(err))
    except TilingError as err:
        return _fail(1, "InvalidTiling", str(err), kind=err.kind)
    except NoExtensionFound as err:
        return _fail(1, "NoExtensionFound", str(err))
    except (ValueError, KeyError, TypeError) as err:
        return _fail(2, type(err).__name__, str(err))
    except OSError as err:
        return _fail(2, "IOError", str(err))


run = main

if __name__ == "__main__":
    sys.exit(main())
