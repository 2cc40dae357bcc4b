"""The connective K-theory ring of the full flag variety on n subspaces,
presented as ZZ[beta][x1..xn] modulo (e_1(x), ..., e_n(x)).

Normal forms live on the staircase basis: the n! monomials x^a with
a_k <= k-1.  Reduction rewrites x_k^k using the relation
h_k(x_k, ..., x_n) = 0 (complete homogeneous of degree k); these
relations generate the same ideal as the e_i and their leading terms
x_k^k are pairwise coprime, so the rewriting is confluent and the
result is independent of rewrite order.  The relations are homogeneous
in x, hence normal forms preserve the x-degree and the beta-grading.

Schubert classes are indexed so that length(w) = codimension.  The
class of w is the normal form of the beta-sign-flipped double beta
polynomial of w with all y set to 0; expansion in this basis is an
exact linear solve, block triangular by degree with unimodular
diagonal blocks.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import perm, poly
from .poly import BetaPolynomial

# ZZ[beta] scalar: {beta_exponent: coefficient}, zero values dropped
BetaScalar = dict[int, int]


class SingularTransitionError(ArithmeticError):
    """Schubert-class transition matrix failed to be unimodular."""


@functools.lru_cache(maxsize=None)
def staircase_monomials(n: int) -> tuple[tuple[int, ...], ...]:
    """All n! exponent tuples a with a_k <= k-1 (1-based k)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return tuple(itertools.product(*[range(k + 1) for k in range(n)]))


def is_staircase(exps: tuple[int, ...]) -> bool:
    return all(e <= k for k, e in enumerate(exps))


@functools.lru_cache(maxsize=None)
def _h_exponents(n: int, v: int) -> tuple[tuple[int, ...], ...]:
    """Degree-v monomials of h_v(x_v, .., x_n) except the leading x_v^v,
    as length-n exponent tuples."""
    out = []
    lead = tuple(v if k == v - 1 else 0 for k in range(n))
    for combo in itertools.combinations_with_replacement(range(v - 1, n), v):
        exps = [0] * n
        for idx in combo:
            exps[idx] += 1
        t = tuple(exps)
        if t != lead:
            out.append(t)
    return tuple(out)


_REDUCE_MEMO: dict[tuple[int, tuple[int, ...]], dict[tuple[int, ...], int]] = {}


def _reduce_exps(n: int, exps: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Normal form of the monomial x^exps as {staircase exps: coeff}."""
    key = (n, exps)
    got = _REDUCE_MEMO.get(key)
    if got is not None:
        return got
    out: dict[tuple[int, ...], int] = {}
    pending: dict[tuple[int, ...], int] = {exps: 1}
    while pending:
        m, c = pending.popitem()
        hit = _REDUCE_MEMO.get((n, m))
        if hit is not None:
            for sm, sc in hit.items():
                nc = out.get(sm, 0) + c * sc
                if nc:
                    out[sm] = nc
                else:
                    out.pop(sm, None)
            continue
        viol = next((k for k, e in enumerate(m) if e > k), None)
        if viol is None:
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
            continue
        v = viol + 1
        base = list(m)
        base[viol] -= v
        for hm in _h_exponents(n, v):
            nm = tuple(b + h for b, h in zip(base, hm))
            nc = pending.get(nm, 0) - c
            if nc:
                pending[nm] = nc
            else:
                pending.pop(nm, None)
    _REDUCE_MEMO[key] = out
    return out


TermKey = tuple[tuple[int, ...], int]  # (exponents of length n, beta exponent)


class FlagRingElement:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[TermKey, int] | None = None):
        self.n = n
        self._terms = {m: c for m, c in (terms or {}).items() if c}

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "FlagRingElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "FlagRingElement":
        return cls(n, {((0,) * n, 0): 1})

    @classmethod
    def from_int(cls, n: int, c: int) -> "FlagRingElement":
        return cls(n, {((0,) * n, 0): c})

    @classmethod
    def x_gen(cls, n: int, i: int) -> "FlagRingElement":
        """The generator x_i, reduced to normal form."""
        if not 1 <= i <= n:
            raise ValueError(f"x{i} is not a generator for n={n}")
        exps = tuple(1 if k == i - 1 else 0 for k in range(n))
        out: dict[TermKey, int] = {}
        for sm, c in _reduce_exps(n, exps).items():
            out[(sm, 0)] = c
        return cls(n, out)

    @classmethod
    def beta(cls, n: int) -> "FlagRingElement":
        return cls(n, {((0,) * n, 1): 1})

    @classmethod
    def from_scalar(cls, n: int, scalar: BetaScalar) -> "FlagRingElement":
        return cls(n, {((0,) * n, be): c for be, c in scalar.items()})

    # -- ring structure --------------------------------------------------

    def _check(self, other: "FlagRingElement"):
        if self.n != other.n:
            raise ValueError(f"ring size mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, int):
            other = FlagRingElement.from_int(self.n, other)
        if not isinstance(other, FlagRingElement):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return FlagRingElement(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return FlagRingElement(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = FlagRingElement.from_int(self.n, other)
        if not isinstance(other, FlagRingElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return FlagRingElement.zero(self.n)
            return FlagRingElement(
                self.n, {m: c * other for m, c in self._terms.items()}
            )
        if not isinstance(other, FlagRingElement):
            return NotImplemented
        self._check(other)
        n = self.n
        out: dict[TermKey, int] = {}
        for (ea, ba), ca in self._terms.items():
            for (eb, bb), cb in other._terms.items():
                prod = tuple(p + q for p, q in zip(ea, eb))
                be = ba + bb
                cc = ca * cb
                for sm, sc in _reduce_exps(n, prod).items():
                    key = (sm, be)
                    nc = out.get(key, 0) + cc * sc
                    if nc:
                        out[key] = nc
                    else:
                        out.pop(key, None)
        return FlagRingElement(n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = FlagRingElement.one(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = FlagRingElement.from_int(self.n, other)
        if not isinstance(other, FlagRingElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"FlagRingElement(n={self.n}, {self.render()!r})"

    # -- inspection -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> dict[TermKey, int]:
        return dict(self._terms)

    def coefficient(self, exps: Iterable[int], beta: int = 0) -> int:
        return self._terms.get((tuple(exps), beta), 0)

    def constant_scalar(self) -> BetaScalar:
        """The ZZ[beta] coefficient of the monomial 1."""
        z = (0,) * self.n
        return {be: c for (m, be), c in self._terms.items() if m == z}

    def beta_component(self, k: int) -> "FlagRingElement":
        return FlagRingElement(
            self.n, {m: c for m, c in self._terms.items() if m[1] == k}
        )

    def max_x_degree(self) -> int:
        return max((sum(m) for (m, _) in self._terms), default=0)

    # -- specializations ---------------------------------------------------

    def specialize_beta(self, value: int) -> "FlagRingElement":
        out: dict[TermKey, int] = {}
        for (m, be), c in self._terms.items():
            key = (m, 0)
            nc = out.get(key, 0) + c * value**be
            if nc:
                out[key] = nc
            else:
                out.pop(key, None)
        return FlagRingElement(self.n, out)

    def to_polynomial(self) -> BetaPolynomial:
        """The staircase representative as a free polynomial."""
        out = {}
        for (m, be), c in self._terms.items():
            out[(poly._strip(m), (), be)] = c
        return BetaPolynomial(out)

    # generic ring hooks (see BetaPolynomial.substitute)
    def ring_zero(self):
        return FlagRingElement.zero(self.n)

    def ring_one(self):
        return FlagRingElement.one(self.n)

    def ring_beta(self):
        return FlagRingElement.beta(self.n)

    # -- rendering / JSON ---------------------------------------------------

    def _sorted_entries(self):
        def key(item):
            (m, be), _ = item
            return (sum(m), tuple(-e for e in m), be)

        return [
            (m, (), be, c)
            for (m, be), c in sorted(self._terms.items(), key=key)
        ]

    def render(self, fmt: str = "plain") -> str:
        return poly.format_terms(self._sorted_entries(), fmt)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": "staircase",
            "terms": [
                {"beta": be, "x": list(m), "coeff": str(c)}
                for m, _, be, c in self._sorted_entries()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FlagRingElement":
        n = int(data["n"])
        if data.get("basis", "staircase") != "staircase":
            raise ValueError(f"unknown basis: {data.get('basis')!r}")
        out: dict[TermKey, int] = {}
        for t in data["terms"]:
            exps = tuple(int(e) for e in t["x"])
            if len(exps) != n:
                exps = exps + (0,) * (n - len(exps))
            key = (exps, int(t["beta"]))
            out[key] = out.get(key, 0) + int(t["coeff"])
        return cls(n, out)


def normal_form(p: BetaPolynomial, n: int) -> FlagRingElement:
    """Image of a y-free polynomial in the quotient ring.

    Raises ValueError if p mentions any y variable or any x_i with
    i > n.
    """
    if p.max_y_index():
        raise ValueError("polynomial mentions y variables; substitute them first")
    if p.max_x_index() > n:
        raise ValueError(
            f"polynomial mentions x{p.max_x_index()} but the ring has n={n}"
        )
    out: dict[TermKey, int] = {}
    for (xe, _, be), c in p.terms().items():
        exps = xe + (0,) * (n - len(xe))
        for sm, sc in _reduce_exps(n, exps).items():
            key = (sm, be)
            nc = out.get(key, 0) + c * sc
            if nc:
                out[key] = nc
            else:
                out.pop(key, None)
    return FlagRingElement(n, out)


# -- Schubert classes and expansion ------------------------------------


@functools.lru_cache(maxsize=None)
def schubert_class(w: perm.Permutation, n: int | None = None) -> FlagRingElement:
    """Class of the codimension-length(w) Schubert variety Omega_w:
    normal form of the beta-sign-flipped double beta polynomial with
    y -> 0."""
    from . import betapoly  # deferred: betapoly does not import this module

    if n is None:
        n = len(w)
    h = betapoly.double_beta_polynomial(w, n)
    return normal_form(h.flip_beta_sign().set_y_zero(), n)


def _invert_unimodular(mat: list[list[int]]) -> list[list[Fraction]]:
    k = len(mat)
    aug = [
        [Fraction(mat[r][c]) for c in range(k)]
        + [Fraction(1 if r == c else 0) for c in range(k)]
        for r in range(k)
    ]
    det = Fraction(1)
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col]), None)
        if piv is None:
            raise SingularTransitionError("transition matrix is singular")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
            det = -det
        det *= aug[col][col]
        scale = aug[col][col]
        aug[col] = [v / scale for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    if det not in (1, -1):
        raise SingularTransitionError(
            f"transition matrix has determinant {det}, expected a unit"
        )
    return [row[k:] for row in aug]


@functools.lru_cache(maxsize=None)
def _transition_blocks(n: int):
    """Per codimension l: (perms of length l, staircase monomials of
    degree l, inverse transition matrix).  Entry (mon, w) of the forward
    matrix is the integer coefficient of x^mon in schubert_class(w);
    gradedness puts it at beta exponent 0."""
    by_len: dict[int, list[perm.Permutation]] = {}
    for w in perm.all_permutations(n):
        by_len.setdefault(perm.length(w), []).append(w)
    by_deg: dict[int, list[tuple[int, ...]]] = {}
    for m in staircase_monomials(n):
        by_deg.setdefault(sum(m), []).append(m)
    blocks = {}
    for l, ws in sorted(by_len.items()):
        ws = sorted(ws)
        mons = sorted(by_deg.get(l, []))
        if len(ws) != len(mons):
            raise SingularTransitionError(
                f"degree {l}: {len(mons)} monomials vs {len(ws)} classes"
            )
        mat = [
            [schubert_class(w, n).coefficient(mon, 0) for w in ws]
            for mon in mons
        ]
        blocks[l] = (ws, mons, _invert_unimodular(mat))
    return blocks


@dataclass
class SchubertExpansion:
    """Coordinates of a ring element in the Schubert-class basis.

    coefficients maps a permutation to its ZZ[beta] coefficient
    {beta_exponent: int}; permutations with zero coefficient are absent.
    """

    n: int
    coefficients: dict[perm.Permutation, BetaScalar]

    def reconstruct(self) -> FlagRingElement:
        acc = FlagRingElement.zero(self.n)
        for w, scalar in self.coefficients.items():
            acc = acc + FlagRingElement.from_scalar(self.n, scalar) * schubert_class(w, self.n)
        return acc

    def specialize_beta(self, value: int) -> "SchubertExpansion":
        out: dict[perm.Permutation, BetaScalar] = {}
        for w, scalar in self.coefficients.items():
            v = sum(c * value**be for be, c in scalar.items())
            if v:
                out[w] = {0: v}
        return SchubertExpansion(self.n, out)

    def _sorted_items(self):
        return sorted(
            self.coefficients.items(), key=lambda kv: (perm.length(kv[0]), kv[0])
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {
                    "w": perm.format_permutation(w),
                    "coeff": [
                        {"beta": be, "value": str(c)}
                        for be, c in sorted(scalar.items())
                    ],
                }
                for w, scalar in self._sorted_items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SchubertExpansion":
        coeffs: dict[perm.Permutation, BetaScalar] = {}
        for t in data["terms"]:
            w = perm.parse_permutation(t["w"])
            scalar = {int(e["beta"]): int(e["value"]) for e in t["coeff"]}
            scalar = {be: c for be, c in scalar.items() if c}
            if scalar:
                coeffs[w] = scalar
        return cls(int(data["n"]), coeffs)

    def render(self, fmt: str = "plain") -> str:
        lines = []
        for w, scalar in self._sorted_items():
            s = poly.format_terms(
                [((), (), be, c) for be, c in sorted(scalar.items())], fmt
            )
            lines.append(f"{perm.format_permutation(w)}: {s}")
        return "\n".join(lines)


def schubert_expand(a: FlagRingElement) -> SchubertExpansion:
    """Exact coordinates of a in the Schubert-class basis.

    Processes codimension blocks in increasing order; classes of length
    > d never touch degree-d monomials, so after subtracting the lower
    blocks the degree-l slice determines the length-l coefficients.
    """
    n = a.n
    blocks = _transition_blocks(n)
    residual = a
    coeffs: dict[perm.Permutation, BetaScalar] = {}
    for l in sorted(blocks):
        ws, mons, inv = blocks[l]
        rhs: list[BetaScalar] = []
        for mon in mons:
            rhs.append(
                {be: c for (m, be), c in residual._terms.items() if m == mon}
            )
        for row, w in enumerate(ws):
            acc: dict[int, Fraction] = {}
            for col, scalar in enumerate(rhs):
                f = inv[row][col]
                if f:
                    for be, c in scalar.items():
                        acc[be] = acc.get(be, Fraction(0)) + f * c
            scalar_out: BetaScalar = {}
            for be, v in acc.items():
                if v:
                    if v.denominator != 1:
                        raise SingularTransitionError(
                            f"non-integer coefficient {v} for {w}"
                        )
                    scalar_out[be] = int(v)
            if scalar_out:
                coeffs[w] = scalar_out
                residual = residual - (
                    FlagRingElement.from_scalar(n, scalar_out)
                    * schubert_class(w, n)
                )
    if not residual.is_zero:
        raise SingularTransitionError("expansion left a nonzero residual")
    return SchubertExpansion(n, coeffs)


def point_coefficient(a: FlagRingElement) -> BetaScalar:
    """Coefficient of the point class (the longest element) in the
    Schubert expansion of a."""
    return dict(
        schubert_expand(a).coefficients.get(perm.longest_element(a.n), {})
    )
