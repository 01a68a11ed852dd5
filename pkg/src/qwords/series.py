"""Noncommutative polynomials with QPoly coefficients: q-shuffle and
q-infiltration products.

An NcPoly is a finitely supported map from words to polynomials in q.  The
q-shuffle is computed by the two-term recursion peeling last letters (with a
global memo on prefix pairs); the q-infiltration family adds a merge term
whose exponent is controlled by an alpha rule.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable

from .qpoly import QPoly
from .words import Alphabet, qbinom


class NcPoly:
    """Finitely supported map word -> QPoly; immutable after construction."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[str, QPoly] | None = None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    clean[w] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("NcPoly is immutable")

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls()

    @classmethod
    def word(cls, w: str, coeff: QPoly | None = None) -> "NcPoly":
        return cls({w: coeff if coeff is not None else QPoly.one()})

    def coefficient(self, w: str) -> QPoly:
        return self.terms.get(w, QPoly.zero())

    def support(self) -> list[str]:
        """Support words in shortlex order (symbol code-point order)."""
        return sorted(self.terms, key=lambda w: (len(w), w))

    def is_zero(self) -> bool:
        return not self.terms

    def max_word_length(self):
        return max((len(w) for w in self.terms), default=None)

    def restrict_length(self, predicate) -> "NcPoly":
        return NcPoly({w: c for w, c in self.terms.items() if predicate(len(w))})

    def __add__(self, other: "NcPoly") -> "NcPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, QPoly.zero()) + c
        return NcPoly(out)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, QPoly.zero()) - c
        return NcPoly(out)

    def scale(self, coeff: QPoly) -> "NcPoly":
        return NcPoly({w: c * coeff for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, NcPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"{w} : {self.terms[w]}" for w in self.support())

    def __repr__(self) -> str:
        body = " + ".join(f"({self.terms[w]})*{w!r}" for w in self.support())
        return f"NcPoly({body or '0'})"


# -- q-shuffle --------------------------------------------------------------


@lru_cache(maxsize=None)
def _qshuffle_terms(u: str, v: str) -> tuple[tuple[str, QPoly], ...]:
    if not v:
        return ((u, QPoly.one()),)
    if not u:
        return ((v, QPoly.one()),)
    a, b = u[-1], v[-1]
    out: dict[str, QPoly] = {}
    for w, c in _qshuffle_terms(u[:-1], v):
        key = w + a
        out[key] = out.get(key, QPoly.zero()) + c.shift(len(v))
    for w, c in _qshuffle_terms(u, v[:-1]):
        key = w + b
        out[key] = out.get(key, QPoly.zero()) + c
    return tuple(out.items())


def qshuffle(u: str, v: str) -> NcPoly:
    """q-shuffle of two words: interleavings weighted by q^inversions."""
    return NcPoly(dict(_qshuffle_terms(u, v)))


def qshuffle_series(s: NcPoly, t: NcPoly) -> NcPoly:
    """Bilinear extension of the q-shuffle to finitely supported series."""
    result = NcPoly.zero()
    for u, cu in s.terms.items():
        for v, cv in t.terms.items():
            result = result + qshuffle(u, v).scale(cu * cv)
    return result


def qshuffle_oracle(u: str, v: str) -> NcPoly:
    """Independent combinatorial q-shuffle: for each way of cutting u into
    |v|+1 blocks around the letters of v, the exponent weights block i by i."""
    n = len(v)
    out: dict[str, QPoly] = {}
    for cuts in itertools.combinations_with_replacement(range(len(u) + 1), n):
        blocks = []
        prev = 0
        for c in cuts:
            blocks.append(u[prev:c])
            prev = c
        blocks.append(u[prev:])
        word = "".join(b + a for b, a in zip(blocks, v)) + blocks[-1]
        exponent = sum(i * len(blocks[i]) for i in range(1, n + 1))
        out[word] = out.get(word, QPoly.zero()) + QPoly.monomial(exponent)
    return NcPoly(out)


def qshuffle_inversion_oracle(u: str, v: str) -> NcPoly:
    """Second independent q-shuffle oracle: sum over merge permutations of
    q^inv(pi) times the permuted word."""
    n = len(u) + len(v)
    letters = u + v
    out: dict[str, QPoly] = {}
    # choose the target slots of the letters of u; slots of v fill the rest
    for slots_u in itertools.combinations(range(n), len(u)):
        slots_v = [i for i in range(n) if i not in slots_u]
        placement = [None] * n
        for src, dst in enumerate(slots_u):
            placement[dst] = src
        for src, dst in enumerate(slots_v):
            placement[dst] = len(u) + src
        inv = sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if placement[i] > placement[j]
        )
        word = "".join(letters[k] for k in placement)
        out[word] = out.get(word, QPoly.zero()) + QPoly.monomial(inv)
    return NcPoly(out)


def shuffle_coefficient_vs_qbinom(u: str, w: str, truncation: int):
    """(sum over short words x of the coefficient of w in x shuffled with u,
    qbinom(w, u)); the two components are equal.

    Only words x with |x| = |w| - |u| can contribute, so the truncation must
    be at least |w|.
    """
    if truncation < len(w):
        raise ValueError("truncation must be at least |w|")
    alphabet = Alphabet.from_words(u, w)
    left = QPoly.zero()
    if len(w) >= len(u):
        for x in alphabet.words_of_length(len(w) - len(u)):
            left = left + qshuffle(x, u).coefficient(w)
    return left, qbinom(w, u)


# -- q-infiltration ---------------------------------------------------------

AlphaFn = Callable[[str, str], int]


def alpha_rule(kind: str | AlphaFn) -> AlphaFn:
    """Resolve an alpha rule: 'one', 'suffix' (length of the second
    argument), or a custom callable on non-empty word pairs."""
    if callable(kind):
        return kind
    if kind == "one":
        return lambda ua, vb: 1
    if kind == "suffix":
        return lambda ua, vb: len(vb)
    raise ValueError(f"unknown alpha rule {kind!r}")


def qinfiltrate(u: str, v: str, alpha: str | AlphaFn = "suffix") -> NcPoly:
    """q-infiltration of two words: shuffle terms plus merge terms whose
    exponent is q^alpha(ua, vb) when the peeled letters coincide."""
    fn = alpha_rule(alpha)
    memo: dict[tuple[str, str], dict[str, QPoly]] = {}

    def rec(x: str, y: str) -> dict[str, QPoly]:
        if not y:
            return {x: QPoly.one()}
        if not x:
            return {y: QPoly.one()}
        key = (x, y)
        if key in memo:
            return memo[key]
        a, b = x[-1], y[-1]
        out: dict[str, QPoly] = {}
        for w, c in rec(x[:-1], y).items():
            out[w + a] = out.get(w + a, QPoly.zero()) + c.shift(len(y))
        for w, c in rec(x, y[:-1]).items():
            out[w + b] = out.get(w + b, QPoly.zero()) + c
        if a == b:
            e = fn(x, y)
            for w, c in rec(x[:-1], y[:-1]).items():
                out[w + a] = out.get(w + a, QPoly.zero()) + c.shift(e)
        memo[key] = out
        return out

    return NcPoly(rec(u, v))


def qinfiltrate_series(s: NcPoly, t: NcPoly, alpha: str | AlphaFn = "suffix") -> NcPoly:
    """Bilinear extension of the q-infiltration to finitely supported series."""
    result = NcPoly.zero()
    for u, cu in s.terms.items():
        for v, cv in t.terms.items():
            result = result + qinfiltrate(u, v, alpha).scale(cu * cv)
    return result


def infiltration_shuffle_decomposition(
    u: str, v: str, alpha: str | AlphaFn = "suffix"
) -> tuple[NcPoly, NcPoly]:
    """Split the q-infiltration into its top-length part and the remainder.

    The part supported on words of length |u|+|v| equals the q-shuffle; the
    remainder is supported on strictly shorter words and vanishes exactly
    when u and v are over disjoint alphabets.
    """
    inf = qinfiltrate(u, v, alpha)
    total = len(u) + len(v)
    top = inf.restrict_length(lambda n: n == total)
    remainder = inf.restrict_length(lambda n: n < total)
    return top, remainder


def diagonal_coefficient(u: str, v: str, order: str = "uv") -> QPoly:
    """Coefficient of u in the suffix-alpha q-infiltration of (u, v) or (v, u).

    order 'uv' gives q^(|v|(|v|+1)/2) * qbinom(u, v); order 'vu' gives the
    reversal-adjusted variant.  Requires |u| >= |v|.
    """
    if len(u) < len(v):
        raise ValueError("need |u| >= |v|")
    if order == "uv":
        return qinfiltrate(u, v, "suffix").coefficient(u)
    if order == "vu":
        return qinfiltrate(v, u, "suffix").coefficient(u)
    raise ValueError(f"unknown order {order!r}")
