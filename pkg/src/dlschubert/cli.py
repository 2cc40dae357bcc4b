"""Command line interface.

Subcommands: betapoly (print a member of the polynomial family),
dlclass (Deligne-Lusztig class with optional Schubert expansion),
verify (consistency suites), cache (on-disk cache management).

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 structurally valid but inadmissible parameters.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import betapoly, dlclass, perm, poly, verify
from .cache import ENV_CACHE_DIR, PolynomialCache

FAMILY = "double-beta"


class CLIError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _parse_w(text: str) -> perm.Permutation:
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    elif s.startswith("[") or s.endswith("]"):
        raise CLIError(2, f"unbalanced brackets in permutation: {text!r}")
    parts = [p.strip() for p in s.split(",")] if s.strip() else []
    if not parts or any(not p for p in parts):
        raise CLIError(2, f"cannot parse permutation: {text!r}")
    try:
        word = [int(p) for p in parts]
    except ValueError:
        raise CLIError(2, f"cannot parse permutation: {text!r}") from None
    try:
        return perm.check_permutation(word)
    except ValueError as exc:
        raise CLIError(3, str(exc)) from None


def _resolve_n(w: perm.Permutation, n: int | None) -> tuple[perm.Permutation, int]:
    if n is None:
        n = len(w)
    if n < len(w):
        raise CLIError(3, f"n={n} is smaller than the permutation size {len(w)}")
    return perm.embed(w, n), n


def _cache_store(args) -> PolynomialCache | None:
    directory = getattr(args, "cache_dir", None) or os.environ.get(ENV_CACHE_DIR)
    return PolynomialCache(directory) if directory else None


def _family_polynomial(w: perm.Permutation, n: int, store: PolynomialCache | None):
    if store is None:
        return betapoly.double_beta_polynomial(w, n)
    hit = store.get(FAMILY, w, n)
    if hit is not None:
        betapoly.prime_cache(w, n, hit)
        return hit
    value = betapoly.double_beta_polynomial(w, n)
    store.put(FAMILY, w, n, value)
    return value


def cmd_betapoly(args) -> int:
    w, n = _resolve_n(_parse_w(args.w), args.n)
    p = _family_polynomial(w, n, _cache_store(args))
    if args.single:
        p = p.set_y_zero()
    if args.beta != "formal":
        p = p.specialize_beta(int(args.beta))
    if args.format == "json":
        print(json.dumps(poly.to_json_terms(p), sort_keys=True, indent=2))
    else:
        print(poly.render(p, args.format))
    return 0


def cmd_dlclass(args) -> int:
    w, n = _resolve_n(_parse_w(args.w), args.n)
    theory = args.theory.upper()
    store = _cache_store(args)
    if store is not None:
        _family_polynomial(perm.compose(w, perm.longest_element(n)), n, store)
    query = dlclass.DLQuery(w, n, args.q, theory)
    result = dlclass.dl_class(query, strict=args.strict)
    kim = dlclass.kim_convention(result) if args.kim else None
    if args.format == "json":
        data = result.to_json()
        if kim is not None:
            data["kim"] = kim.to_json()
        print(json.dumps(data, sort_keys=True, indent=2))
        return 0
    fmt = args.format
    lines = [result.element.render(fmt)]
    if args.expand:
        rendered = result.expansion.render(fmt)
        if rendered:
            lines.append(rendered)
    if kim is not None:
        lines.append(f"kim: {kim.render(fmt)}")
    print("\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    results = verify.run_suites([args.suite], n=args.n, qs=args.q)
    failures = [r for r in results if not r.passed]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "checks": [
                        {
                            "name": r.name,
                            "passed": r.passed,
                            "detail": r.detail,
                            "warnings": r.warnings,
                        }
                        for r in results
                    ],
                    "failures": len(failures),
                },
                sort_keys=True,
                indent=2,
            )
        )
    else:
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'} {r.name}"
            if r.detail:
                line += f": {r.detail}"
            print(line)
            for wmsg in r.warnings:
                print(f"WARN {r.name}: {wmsg}")
        print(f"summary: {len(results)} checks, {len(failures)} failures")
    return 1 if failures else 0


def cmd_cache(args) -> int:
    store = _cache_store(args)
    if store is None:
        raise CLIError(3, f"no cache directory; pass --cache-dir or set {ENV_CACHE_DIR}")
    if args.action == "clear":
        removed = store.clear()
        print(f"removed {removed} cache entries")
        return 0
    raise CLIError(2, f"unknown cache action {args.action!r}")


def _qs_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse q list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty q list")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlschubert",
        description="Deligne-Lusztig classes and double beta-polynomials "
        "for the GL_n flag variety.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pb = sub.add_parser("betapoly", help="print a double beta-polynomial")
    pb.add_argument("--w", required=True, help='permutation, e.g. "[3,1,2]"')
    pb.add_argument("--n", type=int, default=None)
    mode = pb.add_mutually_exclusive_group()
    mode.add_argument("--double", action="store_true", help="keep both alphabets (default)")
    mode.add_argument("--single", action="store_true", help="set all y to 0")
    pb.add_argument("--beta", choices=("formal", "0", "-1", "1"), default="formal")
    pb.add_argument("--format", choices=("plain", "latex", "json"), default="plain")
    pb.add_argument("--cache-dir", default=None)
    pb.set_defaults(func=cmd_betapoly)

    pd = sub.add_parser("dlclass", help="Deligne-Lusztig class of w over F_q")
    pd.add_argument("--w", required=True)
    pd.add_argument("--n", type=int, default=None)
    pd.add_argument("--q", type=int, required=True)
    pd.add_argument("--theory", choices=("ck", "ch", "k0"), default="ck")
    pd.add_argument("--expand", action="store_true", help="print the Schubert expansion")
    pd.add_argument("--kim", action="store_true",
                    help="also print the class under x_i -> -x_{n+1-i} (CH only)")
    pd.add_argument("--strict", action="store_true",
                    help="reject q that is not a prime power")
    pd.add_argument("--format", choices=("plain", "latex", "json"), default="plain")
    pd.add_argument("--cache-dir", default=None)
    pd.set_defaults(func=cmd_dlclass)

    pv = sub.add_parser("verify", help="run consistency suites")
    pv.add_argument(
        "suite",
        choices=("braid", "specialize", "fgl", "pointcount", "stability", "all"),
    )
    pv.add_argument("--n", type=int, default=4)
    pv.add_argument("--q", type=_qs_list, default=verify.DEFAULT_QS,
                    help="comma separated, e.g. 2,3,5")
    pv.add_argument("--format", choices=("plain", "json"), default="plain")
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("cache", help="manage the on-disk polynomial cache")
    pc.add_argument("action", choices=("clear",))
    pc.add_argument("--cache-dir", default=None)
    pc.set_defaults(func=cmd_cache)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
