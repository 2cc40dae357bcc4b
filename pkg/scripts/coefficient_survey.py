#!/usr/bin/env python3
"""Survey the Schubert-expansion coefficients of Deligne-Lusztig classes.

Computes the Chow-theory expansions of the classes of all X(w) closures
for w in S_n over a range of field sizes and reports, per (n, q):

  * whether any expansion coefficient is negative (empirically they all
    look nonnegative, which this script probes rather than assumes),
  * the largest coefficient seen and where it occurs,
  * the average support size of an expansion.

Example:
    python3 scripts/coefficient_survey.py --n-max 4 --qs 2 3 5
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from dlschubert import dlclass, perm


@dataclass(frozen=True)
class SurveyConfig:
    n_min: int
    n_max: int
    qs: tuple[int, ...]


def parse_args(argv: list[str]) -> SurveyConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=4, help="n=5 works but is slow")
    ap.add_argument("--qs", type=int, nargs="+", default=[2, 3, 5])
    ns = ap.parse_args(argv)
    if ns.n_min < 1 or ns.n_max < ns.n_min:
        ap.error("need 1 <= n-min <= n-max")
    return SurveyConfig(ns.n_min, ns.n_max, tuple(ns.qs))


def survey(n: int, q: int) -> dict:
    negatives = []
    biggest = (0, None, None)
    support = 0
    classes = 0
    for w in perm.all_permutations(n):
        coeffs = dlclass.dl_class_ch(w, n, q).expansion.coefficients
        classes += 1
        support += len(coeffs)
        for v, scalar in coeffs.items():
            c = scalar.get(0, 0)
            if c < 0:
                negatives.append((w, v, c))
            if abs(c) > biggest[0]:
                biggest = (abs(c), w, v)
    return {
        "classes": classes,
        "avg_support": support / classes,
        "negatives": negatives,
        "biggest": biggest,
    }


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(sys.argv[1:] if argv is None else argv)
    saw_negative = False
    for n in range(cfg.n_min, cfg.n_max + 1):
        for q in cfg.qs:
            t0 = time.perf_counter()
            stats = survey(n, q)
            dt = time.perf_counter() - t0
            big, w, v = stats["biggest"]
            print(
                f"n={n} q={q}: {stats['classes']} classes, "
                f"avg support {stats['avg_support']:.2f}, "
                f"max coefficient {big} at "
                f"(w={perm.format_permutation(w)}, v={perm.format_permutation(v)}) "
                f"[{dt:.2f}s]"
            )
            for w, v, c in stats["negatives"]:
                saw_negative = True
                print(
                    f"  NEGATIVE: coefficient {c} on {perm.format_permutation(v)} "
                    f"in the class of {perm.format_permutation(w)}"
                )
    if saw_negative:
        print("negative coefficients found; the empirical pattern breaks here")
        return 1
    print("no negative coefficients in the surveyed range")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
