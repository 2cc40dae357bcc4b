"""Self-contained verification suites behind the CLI `verify` command.

Each suite returns a list of CheckResult; a check compares the engine
against an independent route (pipe dream enumeration, closed-form
counting, iterated group-law sums, alternative reduced words).  Soft
observations that are not correctness contracts (empirical coefficient
positivity) are reported as warnings in the detail field and never fail
a check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import betapoly, dlclass, fgl, perm
from .flagring import FlagRingElement, schubert_expand, staircase_monomials
from .poly import BetaPolynomial

DEFAULT_QS = (2, 3, 5)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    warnings: list[str] = field(default_factory=list)


def braid_suite(n: int = 4) -> list[CheckResult]:
    """Every reduced word of w0.w must drive the top polynomial down to
    the same beta-polynomial for w."""
    out = []
    w0 = perm.longest_element(n)
    for w in perm.all_permutations(n):
        expected = betapoly.double_beta_polynomial(w, n)
        ok = True
        detail = ""
        for word in sorted(perm.all_reduced_words(perm.compose(w0, w))):
            acc = betapoly.top_beta_polynomial(n)
            for i in word:
                acc = betapoly.divided_difference(i, acc)
            if acc != expected:
                ok = False
                detail = f"word {word} disagrees"
                break
        out.append(CheckResult(f"braid/n{n}/w={perm.format_permutation(w)}", ok, detail))
    return out


def specialize_suite(n: int = 4) -> list[CheckResult]:
    """beta = 0, y = 0 must reproduce the pipe-dream enumeration, and
    every beta-polynomial must be graded homogeneous of degree
    length(w) with lowest x,y-degree equal to length(w)."""
    out = []
    for w in perm.all_permutations(n):
        h = betapoly.double_beta_polynomial(w, n)
        single = h.specialize_beta(0).negate_y().set_y_zero()
        oracle = betapoly.pipe_dream_oracle(w)
        out.append(
            CheckResult(
                f"specialize/n{n}/w={perm.format_permutation(w)}",
                single == oracle,
                "" if single == oracle else "pipe dream oracle disagrees",
            )
        )
        lw = perm.length(w)
        graded_ok = h.graded_degree() == lw and h.min_xy_degree() == lw
        out.append(
            CheckResult(
                f"grading/n{n}/w={perm.format_permutation(w)}",
                graded_ok,
                "" if graded_ok else f"graded degree {h.graded_degree()}, "
                f"lowest {h.min_xy_degree()}, expected {lw}",
            )
        )
    return out


def fgl_suite(n: int = 4, rng_seed: int = 20240811) -> list[CheckResult]:
    out = []
    rng = random.Random(rng_seed)
    for m in range(2, n + 1):
        gens = [FlagRingElement.x_gen(m, i) for i in range(1, m + 1)]
        mons = [
            mon for mon in staircase_monomials(m) if sum(mon) > 0
        ]
        elements = list(gens)
        for mon in mons:
            elements.append(FlagRingElement(m, {(mon, 0): 1}))
        for _ in range(20):
            terms = {}
            for mon in mons:
                if rng.random() < 0.5:
                    terms[(mon, rng.randrange(0, 3))] = rng.randint(-5, 5)
            elements.append(FlagRingElement(m, terms))
        bad = None
        for a in elements:
            if not fgl.fgl_add(fgl.fgl_inverse(a), a).is_zero:
                bad = a
                break
        out.append(
            CheckResult(
                f"fgl/inverse-identity/n{m}",
                bad is None,
                "" if bad is None else f"failed on {bad!r}",
            )
        )
    x = BetaPolynomial.x(1)
    ok = True
    detail = ""
    for m in range(1, 9):
        iterated = BetaPolynomial.zero()
        for _ in range(m):
            iterated = fgl.fgl_add(iterated, x)
        if fgl.n_times(m, x) != iterated:
            ok, detail = False, f"m={m} closed form disagrees with iteration"
            break
    out.append(CheckResult("fgl/multiplication-closed-form", ok, detail))
    return out


def pointcount_suite(ns=(2, 3), qs=DEFAULT_QS) -> list[CheckResult]:
    """Chow class of the identity must have point coefficient equal to
    the number of rational flags, the q-factorial."""
    out = []
    for n in ns:
        for q in qs:
            res = dlclass.dl_class_ch(perm.identity(n), n, q)
            got = res.expansion.coefficients.get(perm.longest_element(n), {})
            got_val = got.get(0, 0)
            want = dlclass.flag_count_oracle(n, q)
            # empirical observation, not a contract: beta=0 expansion
            # coefficients of DL classes look nonnegative; log only
            warn = []
            for w in perm.all_permutations(n):
                coeffs = dlclass.dl_class_ch(w, n, q).expansion.coefficients
                for v, scalar in coeffs.items():
                    if any(c < 0 for c in scalar.values()):
                        warn.append(
                            f"negative coefficient at "
                            f"{perm.format_permutation(v)} in the class of "
                            f"{perm.format_permutation(w)}"
                        )
            out.append(
                CheckResult(
                    f"pointcount/n{n}/q{q}",
                    got_val == want,
                    "" if got_val == want else f"expected {want}, got {got_val}",
                    warnings=warn,
                )
            )
    return out


def stability_suite() -> list[CheckResult]:
    """Embedding w with fixed points must not change its polynomial."""
    out = []
    for small, big in ((2, 3), (3, 4)):
        ok = True
        detail = ""
        for w in perm.all_permutations(small):
            a = betapoly.double_beta_polynomial(w, small)
            b = betapoly.double_beta_polynomial(perm.embed(w, big), big)
            if a != b:
                ok, detail = False, f"w={perm.format_permutation(w)}"
                break
        out.append(CheckResult(f"stability/S{small}-in-S{big}", ok, detail))
    return out


SUITES = {
    "braid": lambda n, qs: braid_suite(min(n, 4)),
    "specialize": lambda n, qs: specialize_suite(min(n, 4)),
    "fgl": lambda n, qs: fgl_suite(min(n, 4)),
    "pointcount": lambda n, qs: pointcount_suite(range(2, min(n, 3) + 1), qs),
    "stability": lambda n, qs: stability_suite(),
}


def run_suites(names, n: int = 4, qs=DEFAULT_QS) -> list[CheckResult]:
    if "all" in names:
        names = list(SUITES)
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; pick from {sorted(SUITES)} or 'all'")
        results.extend(SUITES[name](n, tuple(qs)))
    return results
