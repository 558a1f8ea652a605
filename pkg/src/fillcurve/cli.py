"""Command-line interface.

Subcommands: check, construct, symmetric, orbits, census, sample. All
output is deterministic for fixed (command, arguments, seed): JSON is
emitted with sorted keys, randomized paths derive per-task sub-seeds from
(seed, task index) with SplitMix64, and worker counts never change results.

Exit codes: 0 = verdict delivered (including "singular" and sampling
counts), 1 = usage or parse error, 2 = precondition violation, 3 = a size
guard or scan budget refused the request, 4 = internal error.

The environment variable FILLCURVE_GUARD_OVERRIDE=1 lifts the size guards
(equivalent to --allow-large).
"""

import argparse
import json
import os
import sys

from . import __version__
from .binform import BinForm
from .curve import (
    Curve,
    build_curve,
    scan_report,
    smoothness_report,
    verify_space_filling,
)
from .binform import has_rational_point
from .construct import construct_partner, symmetric_form
from .errors import (
    BudgetExceeded,
    FillcurveError,
    InternalError,
    PreconditionViolated,
    TooLarge,
)
from .field import canonical_field
from .orbits import census, orbit_decomposition, sample_stats
from .binform import enumerate_gq
from .rng import RngState

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_GUARD = 3
EXIT_INTERNAL = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; the CLI contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _dump(obj, out_path=None):
    text = json.dumps(obj, sort_keys=True, indent=1)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _parse_form(q: int, s: str) -> BinForm:
    field = canonical_field(q)
    return BinForm.from_string(field, q + 1, s)


def _guards_lifted(args) -> bool:
    env = os.environ.get("FILLCURVE_GUARD_OVERRIDE", "0").strip()
    return bool(getattr(args, "allow_large", False)) or env not in ("", "0")


def cmd_check(args) -> int:
    f = _parse_form(args.q, args.f)
    g = _parse_form(args.q, args.g)
    curve = build_curve(f, g)
    if args.oracle:
        report = scan_report(f, g, budget=args.scan_budget)
    else:
        report = smoothness_report(f, g, RngState(args.seed))
    out = {
        "q": args.q,
        "f": f.to_string(),
        "g": g.to_string(),
        "f_has_rational_point": False,
        "g_has_rational_point": False,
        "space_filling": verify_space_filling(curve),
    }
    out.update(report.to_json_dict())
    _dump(out, args.out)
    return EXIT_OK


def cmd_construct(args) -> int:
    f = _parse_form(args.q, args.f)
    g, trace = construct_partner(f, RngState(args.seed))
    out = {
        "q": args.q,
        "f": f.to_string(),
        "g": g.to_string(),
        "method": "quadratic_avoidance" if trace else "lex_search",
    }
    if trace is not None:
        out["trace"] = trace.to_json_dict()
    _dump(out, args.out)
    return EXIT_OK


def cmd_symmetric(args) -> int:
    f = symmetric_form(args.q, args.variant, args.index)
    _dump(
        {
            "q": args.q,
            "variant": args.variant,
            "index": args.index,
            "f": f.to_string(),
        },
        args.out,
    )
    return EXIT_OK


def cmd_orbits(args) -> int:
    forms = enumerate_gq(args.q, allow_large=_guards_lifted(args))
    table = orbit_decomposition(forms, args.q)
    out = {
        "schema_version": 1,
        "library_version": __version__,
        "q": args.q,
        "gq_size": table.total,
        "orbit_count": len(table.orbits),
        "orbits": [
            {"size": o.size, "representative": o.representative.to_string()}
            for o in table.orbits
        ],
    }
    _dump(out, args.out)
    return EXIT_OK


def cmd_census(args) -> int:
    result = census(args.q, jobs=args.jobs, allow_large=_guards_lifted(args))
    if args.format == "csv":
        if not args.out:
            raise _UsageError("--format csv requires --out")
        result.write_csv(args.out)
        summary = result.to_json_dict()
        del summary["smooth_matrix"]
        print(json.dumps(summary, sort_keys=True, indent=1))
    else:
        if args.out:
            result.write_json(args.out)
        print(json.dumps(result.to_json_dict(), sort_keys=True, indent=1))
    return EXIT_OK


def cmd_sample(args) -> int:
    count, n = sample_stats(args.q, args.n, args.seed, jobs=args.jobs)
    out = {"q": args.q, "n": n, "seed": args.seed, "smooth": count}
    _dump(out, args.out)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fillcurve", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"fillcurve {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, q=True, seed=False, jobs=False, out=True, allow_large=False):
        if q:
            sp.add_argument("--q", type=int, required=True, help="field order")
        if seed:
            sp.add_argument("--seed", type=int, default=0, help="64-bit seed")
        if jobs:
            sp.add_argument("--jobs", type=int, default=1, help="worker count")
        if out:
            sp.add_argument("--out", default=None, help="also write JSON/CSV here")
        if allow_large:
            sp.add_argument(
                "--allow-large", action="store_true", help="lift size guards"
            )

    sp = sub.add_parser("check", help="decide smoothness of C_{f,g}")
    add_common(sp, seed=True)
    sp.add_argument("--f", required=True, help="f coefficients, e.g. 1,0,2,0,1")
    sp.add_argument("--g", required=True, help="g coefficients")
    sp.add_argument(
        "--oracle", action="store_true", help="use the brute-force scan oracle"
    )
    sp.add_argument("--scan-budget", type=int, default=10**7)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("construct", help="build g with C_{f,g} smooth (odd q)")
    add_common(sp, seed=True)
    sp.add_argument("--f", required=True)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("symmetric", help="a diagonal form f with C_{f,f} smooth")
    add_common(sp)
    sp.add_argument("--variant", type=int, default=0, help="0..3")
    sp.add_argument("--index", type=int, default=0, help="which lambda")
    sp.set_defaults(func=cmd_symmetric)

    sp = sub.add_parser("orbits", help="SL2 orbit decomposition of G_q")
    add_common(sp, allow_large=True)
    sp.set_defaults(func=cmd_orbits)

    sp = sub.add_parser("census", help="exhaustive smooth-pair census")
    add_common(sp, jobs=True, allow_large=True)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("sample", help="random-pair smoothness statistics")
    add_common(sp, seed=True, jobs=True)
    sp.add_argument("--n", type=int, required=True, help="sample count")
    sp.set_defaults(func=cmd_sample)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionViolated as e:
        print(f"precondition violated: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (TooLarge, BudgetExceeded) as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_GUARD
    except InternalError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except FillcurveError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def entry():  # console-script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
