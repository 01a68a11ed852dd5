"""Words over finite alphabets and q-binomial coefficients of words.

Words are plain Python strings; an Alphabet carries the symbol ordering
used for shortlex enumeration and validation.  Alongside the production
dynamic-programming evaluation of the q-binomial, this module provides the
brute-force occurrence oracle and the classical identities (Vandermonde
splitting, multi-factor splitting, reversal, the subword-chain identity,
sum identities, and reconstruction from letter polynomials).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import AlphabetError, ReconstructionError
from .qpoly import QPoly, gauss_binomial


@dataclass(frozen=True)
class Alphabet:
    """Finite ordered set of single-character symbols."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise AlphabetError("alphabet must be non-empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise AlphabetError("alphabet symbols must be distinct")
        if any(len(s) != 1 for s in self.symbols):
            raise AlphabetError("alphabet symbols must be single characters")

    @classmethod
    def from_words(cls, *words: str) -> "Alphabet":
        """Alphabet of all symbols occurring in the words, in code-point order."""
        symbols = sorted(set("".join(words)))
        if not symbols:
            symbols = ["0"]
        return cls(tuple(symbols))

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.symbols

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def validate(self, word: str) -> str:
        bad = set(word) - set(self.symbols)
        if bad:
            raise AlphabetError(f"symbols {sorted(bad)} not in alphabet {self.symbols}")
        return word

    def words_of_length(self, n: int):
        """All words of length n in lexicographic (hence shortlex) order."""
        for tup in itertools.product(self.symbols, repeat=n):
            yield "".join(tup)

    def words_up_to(self, n: int):
        """All words of length <= n in shortlex order."""
        for k in range(n + 1):
            yield from self.words_of_length(k)

    def shortlex_key(self, word: str):
        return (len(word), tuple(self.symbols.index(a) for a in word))


def qbinom(u: str, v: str) -> QPoly:
    """q-binomial coefficient of words by dynamic programming.

    Processes u left to right maintaining the value for every prefix of v;
    zero iff v is not a subword of u; evaluation at 1 is the classical count.
    """
    k = len(v)
    table = [QPoly.one()] + [QPoly.zero()] * k
    for a in u:
        new = [QPoly.one()]
        for j in range(1, k + 1):
            t = table[j].shift(j)
            if v[j - 1] == a:
                t = t + table[j - 1]
            new.append(t)
        table = new
    return table[k]


def subword_count(u: str, v: str) -> int:
    """Classical binomial coefficient of words (integer DP, independent path)."""
    k = len(v)
    row = [1] + [0] * k
    for a in u:
        for j in range(k, 0, -1):
            if v[j - 1] == a:
                row[j] += row[j - 1]
    return row[k]


def occurrences(u: str, v: str):
    """All strictly increasing position tuples extracting v from u."""
    for positions in itertools.combinations(range(len(u)), len(v)):
        if all(u[i] == a for i, a in zip(positions, v)):
            yield positions


def qbinom_oracle(u: str, v: str) -> QPoly:
    """Brute-force q-binomial: sum q^(weighted gap sizes) over all occurrences.

    Each occurrence contributes q to the power of the total number of
    non-occurrence letters to the right of each selected position.
    Exponential in |u|; intended as an independent test oracle.
    """
    result = QPoly.zero()
    n = len(u)
    for positions in occurrences(u, v):
        chosen = set(positions)
        exponent = sum(
            sum(1 for j in range(i + 1, n) if j not in chosen) for i in positions
        )
        result = result + QPoly.monomial(exponent)
    return result


def vandermonde_split(x: str, y: str, u: str) -> QPoly:
    """Right-hand side of the q-Vandermonde identity for words.

    Sums over factorizations u = u1 u2 the product of the q-binomials at the
    two halves with the correcting power q^(|u1|(|y|-|u2|)); equals
    qbinom(x + y, u).
    """
    result = QPoly.zero()
    for split in range(len(u) + 1):
        u1, u2 = u[:split], u[split:]
        left = qbinom(x, u1)
        if left.is_zero():
            continue
        right = qbinom(y, u2)
        if right.is_zero():
            continue
        exponent = len(u1) * (len(y) - len(u2))
        result = result + (left * right).shift(exponent)
    return result


def multi_split(xs: list[str], u: str) -> QPoly:
    """k-fold factorization sum; equals qbinom("".join(xs), u)."""
    if len(xs) < 2:
        raise ValueError("need at least two factors")
    result = QPoly.zero()
    k = len(xs)
    suffix_len = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix_len[i] = suffix_len[i + 1] + len(xs[i])
    for cuts in itertools.combinations_with_replacement(range(len(u) + 1), k - 1):
        parts = []
        prev = 0
        for c in cuts:
            parts.append(u[prev:c])
            prev = c
        parts.append(u[prev:])
        term = QPoly.one()
        for xi, ui in zip(xs, parts):
            term = term * qbinom(xi, ui)
            if term.is_zero():
                break
        if term.is_zero():
            continue
        exponent = 0
        rest = len(u)
        for i in range(k - 1):
            rest -= len(parts[i])
            exponent += len(parts[i]) * (suffix_len[i + 1] - rest)
        result = result + term.shift(exponent)
    return result


def reversal_identity_check(u: str, v: str) -> tuple[QPoly, QPoly]:
    """(qbinom(u, v), reversal-adjusted qbinom of the reversed words).

    The second component is q^(|v|(|u|-|v|)) times the reversed-word
    q-binomial evaluated at 1/q, realized as coefficient reversal; the two
    components are equal.
    """
    direct = qbinom(u, v)
    if len(v) > len(u):
        return direct, qbinom(u[::-1], v[::-1])
    top = len(v) * (len(u) - len(v))
    return direct, qbinom(u[::-1], v[::-1]).reversed_up_to(top)


def mmsss_identity(u: str, x: str, k: int, alphabet: Alphabet | None = None):
    """Both sides of the subword-chain identity through words of length k.

    Left: gauss(|u|-|x|, k-|x|) * qbinom(u, x).  Right: the sum over all
    words t of length k of qbinom(u, t) * qbinom(t, x).  Requires
    |u| >= k >= |x|.
    """
    if not len(u) >= k >= len(x):
        raise ValueError("need |u| >= k >= |x|")
    if alphabet is None:
        alphabet = Alphabet.from_words(u, x)
    left = gauss_binomial(len(u) - len(x), k - len(x)) * qbinom(u, x)
    right = QPoly.zero()
    for t in alphabet.words_of_length(k):
        outer = qbinom(u, t)
        if outer.is_zero():
            continue
        right = right + outer * qbinom(t, x)
    return left, right


def sum_over_subwords(u: str, n: int) -> QPoly:
    """Sum of qbinom(u, v) over all words v of length n; equals gauss(|u|, n).

    Computed by enumerating position choices directly, so it is independent
    of the ambient alphabet.
    """
    result = QPoly.zero()
    length = len(u)
    for positions in itertools.combinations(range(length), n):
        chosen = set(positions)
        exponent = sum(
            sum(1 for j in range(i + 1, length) if j not in chosen) for i in positions
        )
        result = result + QPoly.monomial(exponent)
    return result


def sum_over_superwords(v: str, n: int, alphabet: Alphabet) -> QPoly:
    """Sum of qbinom(u, v) over all words u of length n over the alphabet.

    Equals (#A)^(n-|v|) * gauss(n, |v|).
    """
    alphabet.validate(v)
    result = QPoly.zero()
    for u in alphabet.words_of_length(n):
        result = result + qbinom(u, v)
    return result


def letter_polynomials(u: str, alphabet: Alphabet | None = None) -> dict[str, QPoly]:
    """qbinom(u, a) for each letter a; the exponents are the positions of a
    counted from the right starting at 0."""
    if alphabet is None:
        alphabet = Alphabet.from_words(u)
    return {a: qbinom(u, a) for a in alphabet}


def reconstruct(polys: dict[str, QPoly], alphabet: Alphabet | None = None) -> str:
    """Invert letter_polynomials: recover the unique word from its letter
    q-binomials.

    Each polynomial must have 0/1 coefficients; the exponents of the
    polynomial for letter a are the positions of a counted from the right.
    """
    if alphabet is None:
        alphabet = Alphabet(tuple(sorted(polys))) if polys else Alphabet(("0",))
    total = 0
    for a, poly in polys.items():
        if a not in alphabet:
            raise AlphabetError(f"letter {a!r} not in alphabet")
        for c in poly.coeffs:
            if c not in (0, 1):
                raise ReconstructionError(f"coefficient {c} > 1 in polynomial for {a!r}")
        total += poly(1)
    letters: list[str | None] = [None] * total
    for a, poly in polys.items():
        for e, c in enumerate(poly.coeffs):
            if c:
                pos = total - 1 - e
                if pos < 0:
                    raise ReconstructionError(f"exponent {e} out of range for {a!r}")
                if letters[pos] is not None:
                    raise ReconstructionError(f"position {pos} claimed twice")
                letters[pos] = a
    if any(l is None for l in letters):
        raise ReconstructionError("some positions are unclaimed")
    return "".join(letters)  # type: ignore[arg-type]


@lru_cache(maxsize=4096)
def factors(u: str) -> tuple[str, ...]:
    """All contiguous factors of u, deduplicated and shortlex-sorted."""
    seen = {""}
    for i in range(len(u)):
        for j in range(i + 1, len(u) + 1):
            seen.add(u[i:j])
    return tuple(sorted(seen, key=lambda w: (len(w), w)))


def subwords(u: str) -> set[str]:
    """All distinct (scattered) subwords of u, including the empty word."""
    out = {""}
    for a in u:
        out |= {w + a for w in out}
    return out
