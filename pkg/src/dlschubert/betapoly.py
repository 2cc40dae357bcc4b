"""Double beta-polynomials via divided differences.

The family is generated from the top polynomial

    prod_{i+j <= n} (x_i + y_j + beta*x_i*y_j)

by the operators

    phi_i f = ((1 + beta*x_{i+1}) f - (1 + beta*x_i) (s_i f)) / (x_i - x_{i+1})

applied along descents: the polynomial of w.s_i is phi_i applied to the
polynomial of w whenever length(w.s_i) < length(w).  The operators
satisfy the braid relations, so the result does not depend on the
chosen reduced path down from the longest element.

Specializations (classical families):
  * beta = 0 and y -> -y gives the double Schubert polynomial of w;
  * beta = -1 gives the double Grothendieck polynomial of w.

Note the sign convention: this engine's parameter is the negative of
the connective-K-theory parameter, i.e. geometric class formulas
consume ``double_beta_polynomial(...).flip_beta_sign()``.  Flipping
here keeps the generating product and the operator weights sign-free.

Every value is graded homogeneous of degree length(w) under
deg x = deg y = 1, deg beta = -1.
"""

from __future__ import annotations

import functools
import itertools

from . import perm
from .perm import Permutation
from .poly import BetaPolynomial


@functools.lru_cache(maxsize=None)
def top_beta_polynomial(n: int) -> BetaPolynomial:
    """Polynomial of the longest element of S_n:
    prod over i + j <= n of (x_i + y_j + beta x_i y_j)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    b = BetaPolynomial.beta()
    out = BetaPolynomial.one()
    for i in range(1, n):
        xi = BetaPolynomial.x(i)
        for j in range(1, n - i + 1):
            yj = BetaPolynomial.y(j)
            out = out * (xi + yj + b * xi * yj)
    return out


def divided_difference(i: int, p: BetaPolynomial) -> BetaPolynomial:
    """phi_i p; lowers graded degree by one.  The division is exact for
    every polynomial (the numerator is antisymmetric-like in x_i,
    x_{i+1} by construction); constants map to -beta times themselves.
    """
    if i < 1:
        raise ValueError("variable indices are 1-based")
    b = BetaPolynomial.beta()
    xi = BetaPolynomial.x(i)
    xi1 = BetaPolynomial.x(i + 1)
    numerator = (1 + b * xi1) * p - (1 + b * xi) * p.swap_x(i)
    return numerator.exact_divide_by_difference(i)


# per-process family cache; values are immutable, concurrent duplicate
# insertion is harmless
_FAMILY: dict[tuple[int, Permutation], BetaPolynomial] = {}


def _resolve(w, n: int | None) -> tuple[Permutation, int]:
    w = perm.check_permutation(w)
    if n is None:
        n = len(w)
    if n < len(w):
        raise ValueError(f"w has {len(w)} entries but n={n}")
    return perm.embed(w, n), n


def double_beta_polynomial(w, n: int | None = None) -> BetaPolynomial:
    """The double beta-polynomial of w in S_n (n defaults to len(w);
    larger n embeds w with fixed points, which by stability yields the
    same polynomial)."""
    w, n = _resolve(w, n)
    cached = _FAMILY.get((n, w))
    if cached is not None:
        return cached
    if w == perm.longest_element(n):
        value = top_beta_polynomial(n)
    else:
        i = perm.right_ascents(w)[0]
        value = divided_difference(i, double_beta_polynomial(perm.times_s(w, i), n))
    _FAMILY[(n, w)] = value
    return value


def clear_cache() -> None:
    _FAMILY.clear()


def prime_cache(w, n: int | None, value: BetaPolynomial) -> None:
    """Install a precomputed family member (e.g. loaded from disk)."""
    w, n = _resolve(w, n)
    _FAMILY[(n, w)] = value


def double_schubert(w, n: int | None = None) -> BetaPolynomial:
    """Double Schubert polynomial: beta = 0 with y negated."""
    return double_beta_polynomial(w, n).specialize_beta(0).negate_y()


def double_grothendieck(w, n: int | None = None) -> BetaPolynomial:
    """Double Grothendieck polynomial: beta = -1."""
    return double_beta_polynomial(w, n).specialize_beta(-1)


# -- pipe dream oracle ---------------------------------------------------


def reduced_pipe_dreams(w) -> list[frozenset[tuple[int, int]]]:
    """All reduced pipe dreams (RC-graphs) of w: cross sets D inside the
    staircase {(i, j) : i + j <= n} such that reading s_{i+j-1} along
    rows top to bottom, right to left, gives a reduced word for w."""
    w = perm.check_permutation(w)
    n = len(w)
    cells = [
        (i, j)
        for i in range(1, n)
        for j in range(n - i, 0, -1)  # row-major, right to left
    ]
    lw = perm.length(w)
    dreams = []
    for combo in itertools.combinations(range(len(cells)), lw):
        word = [cells[k][0] + cells[k][1] - 1 for k in combo]
        if perm.word_to_permutation(word, n) == w:
            # the word has length(w) letters, so hitting w means reduced
            dreams.append(frozenset(cells[k] for k in combo))
    return dreams


def pipe_dream_oracle(w) -> BetaPolynomial:
    """Single Schubert polynomial of w by direct enumeration of reduced
    pipe dreams: sum over dreams of prod x_i^(crosses in row i).

    Independent of the divided-difference recursion; intended as a test
    oracle for n <= 5.
    """
    w = perm.check_permutation(w)
    acc = BetaPolynomial.zero()
    for dream in reduced_pipe_dreams(w):
        exps: dict[int, int] = {}
        for (i, _) in dream:
            exps[i] = exps.get(i, 0) + 1
        mono = BetaPolynomial.one()
        for i, e in exps.items():
            mono = mono * BetaPolynomial.x(i) ** e
        acc = acc + mono
    return acc
