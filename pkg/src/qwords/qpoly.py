"""Exact univariate polynomials in q and the finite residue rings F_p[q]/<M>.

QPoly is an immutable dense polynomial with unbounded integer coefficients;
it carries the Gaussian binomials and the text serialization used by the CLI.
ResidueRing/ResiduePoly provide arithmetic modulo a prime p and a modulus
polynomial M, together with the index/period analysis of powers.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParseError

_INF = math.inf


class QPoly:
    """Polynomial in q with integer coefficients, ascending by exponent.

    Instances are immutable; the coefficient tuple never has a trailing zero
    and the zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "QPoly":
        return _ONE

    @classmethod
    def q(cls) -> "QPoly":
        return _Q

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPoly":
        if coefficient == 0:
            return _ZERO
        return cls([0] * exponent + [coefficient])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self):
        """Largest power of q dividing the polynomial; inf for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return _INF

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return QPoly(out)

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if ci:
                for j, cj in enumerate(b):
                    out[i + j] += ci * cj
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = _ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k."""
        if not self.coeffs:
            return _ZERO
        return QPoly((0,) * k + self.coeffs)

    def reversed_up_to(self, top: int) -> "QPoly":
        """Coefficient reversal q^top * P(1/q); requires deg(P) <= top."""
        if self.degree is not None and self.degree > top:
            raise ValueError("degree exceeds reversal bound")
        out = [0] * (top + 1)
        for i, c in enumerate(self.coeffs):
            out[top - i] = c
        return QPoly(out)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- text format -------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            parts.append(_format_term(c, e, first=not parts))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Parse the term-joined text format; accepts whitespace and any term order."""
        compact = re.sub(r"\s+", "", text)
        if compact in ("", "0"):
            if compact == "":
                raise ParseError("empty polynomial text")
            return _ZERO
        if compact[0] not in "+-":
            compact = "+" + compact
        coeffs: dict[int, int] = {}
        pos = 0
        for m in re.finditer(r"([+-])((?:\d+\*?)?)(q(?:\^(\d+))?|)", compact):
            if m.start() != pos or m.group(0) in ("+", "-"):
                raise ParseError(f"bad polynomial text: {text!r}")
            pos = m.end()
            sign = -1 if m.group(1) == "-" else 1
            num, qpart, exp = m.group(2), m.group(3), m.group(4)
            c = int(num.rstrip("*")) if num else 1
            if qpart:
                e = int(exp) if exp is not None else 1
            else:
                e = 0
                if not num:
                    raise ParseError(f"bad polynomial text: {text!r}")
            coeffs[e] = coeffs.get(e, 0) + sign * c
        if pos != len(compact):
            raise ParseError(f"bad polynomial text: {text!r}")
        out = [0] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            out[e] = c
        return cls(out)


def _format_term(c: int, e: int, first: bool) -> str:
    sign = "" if first and c > 0 else ("+" if c > 0 else "-")
    c = abs(c)
    if e == 0:
        return f"{sign}{c}"
    base = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return f"{sign}{base}"
    return f"{sign}{c}*{base}"


_ZERO = QPoly.__new__(QPoly)
object.__setattr__(_ZERO, "coeffs", ())
_ONE = QPoly.__new__(QPoly)
object.__setattr__(_ONE, "coeffs", (1,))
_Q = QPoly.__new__(QPoly)
object.__setattr__(_Q, "coeffs", (0, 1))


@lru_cache(maxsize=None)
def gauss_binomial(m: int, r: int) -> QPoly:
    """Gaussian binomial via the q-Pascal recurrence; zero when r > m."""
    if r < 0 or m < 0:
        raise ValueError("negative argument")
    if r > m:
        return QPoly.zero()
    row = [QPoly.one()] + [QPoly.zero()] * r
    for _ in range(m):
        new = [QPoly.one()]
        for j in range(1, r + 1):
            new.append(row[j].shift(j) + row[j - 1])
        row = new
    return row[r]


def valuation(p) -> float | int:
    """Valuation of a QPoly or ResiduePoly (inf for zero)."""
    return p.valuation()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ResiduePoly:
    """Element of F_p[q]/<M>, stored as exactly deg(M) coefficients mod p."""

    ring: "ResidueRing"
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ring.degree:
            raise ValueError("coefficient vector length must equal deg(M)")
        if any(not 0 <= c < self.ring.p for c in self.coeffs):
            raise ValueError("coefficients must be reduced mod p")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return _INF

    def to_qpoly(self) -> QPoly:
        return QPoly(self.coeffs)

    def __add__(self, other: "ResiduePoly") -> "ResiduePoly":
        p = self.ring.p
        return ResiduePoly(
            self.ring, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "ResiduePoly") -> "ResiduePoly":
        return self.ring.reduce(self.to_qpoly() * other.to_qpoly())

    def __pow__(self, n: int) -> "ResiduePoly":
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        return str(self.to_qpoly())


@dataclass(frozen=True)
class IndexPeriod:
    """Minimal (index, period) with x^index == x^(index+period)."""

    index: int
    period: int


class ResidueRing:
    """The finite ring F_p[q]/<M> of order p^deg(M), p prime."""

    def __init__(self, p: int, modulus: QPoly):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        reduced = QPoly([c % p for c in modulus.coeffs])
        if reduced.is_zero() or reduced.degree < 1:
            raise ValueError("modulus must have degree >= 1 mod p")
        self.p = p
        self.modulus = reduced
        self.degree = reduced.degree
        self.zero = ResiduePoly(self, (0,) * self.degree)
        one = [0] * self.degree
        one[0] = 1
        self.one = ResiduePoly(self, tuple(one))
        self._qpowers: list[ResiduePoly] = [self.one]
        self._q_index_period: IndexPeriod | None = None

    def __eq__(self, other):
        return (
            isinstance(other, ResidueRing)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"ResidueRing(p={self.p}, modulus={self.modulus})"

    @property
    def order(self) -> int:
        return self.p ** self.degree

    def element(self, coeffs) -> ResiduePoly:
        coeffs = [c % self.p for c in coeffs]
        coeffs += [0] * (self.degree - len(coeffs))
        return ResiduePoly(self, tuple(coeffs))

    def reduce(self, poly: QPoly) -> ResiduePoly:
        """Reduce an integer polynomial mod p, then take the remainder mod M."""
        _, r = self.divmod(poly)
        return self.element(r.coeffs)

    def divmod(self, poly: QPoly) -> tuple[QPoly, QPoly]:
        """Euclidean division of (poly mod p) by M in F_p[q]."""
        p = self.p
        rem = [c % p for c in poly.coeffs]
        mod = self.modulus.coeffs
        d = self.degree
        lead_inv = pow(mod[-1], -1, p)
        quot = [0] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] % p
            if c:
                factor = (c * lead_inv) % p
                quot[i - d] = factor
                for j, mc in enumerate(mod):
                    rem[i - d + j] = (rem[i - d + j] - factor * mc) % p
        return QPoly(quot), QPoly([c % p for c in rem[:d]])

    def qpow(self, n: int) -> ResiduePoly:
        """q^n in the ring, cached."""
        q = self.element((0, 1)) if self.degree > 1 else self.reduce(QPoly.q())
        while len(self._qpowers) <= n:
            self._qpowers.append(self._qpowers[-1] * q)
        return self._qpowers[n]

    def elements(self):
        """All p^d elements, in lexicographic coefficient order."""

        def rec(prefix, k):
            if k == self.degree:
                yield ResiduePoly(self, tuple(prefix))
                return
            for c in range(self.p):
                yield from rec(prefix + [c], k + 1)

        yield from rec([], 0)

    def index_period(self, x: ResiduePoly) -> IndexPeriod:
        """Minimal (i, k) with x^i = x^(i+k), by power iteration with a seen-map."""
        seen: dict[ResiduePoly, int] = {}
        power = self.one
        n = 0
        while power not in seen:
            seen[power] = n
            power = power * x
            n += 1
        i = seen[power]
        return IndexPeriod(index=i, period=n - i)

    def is_unit(self, x: ResiduePoly) -> bool:
        return self.index_period(x).index == 0

    def q_index_period(self) -> IndexPeriod:
        if self._q_index_period is None:
            self._q_index_period = self.index_period(self.qpow(1))
        return self._q_index_period

    def is_power_of_q_minus_one(self):
        """Whether M = a(q-1)^d for a unit a; returns (flag, a, d).

        Determined by repeated exact division by (q-1) over F_p.
        """
        p = self.p
        poly = list(self.modulus.coeffs)
        d = 0
        # divide by (q - 1) while the remainder (= value at q=1) is zero
        while len(poly) > 1:
            if sum(poly) % p != 0:
                return (False, None, None)
            # synthetic division by (q - 1)
            out = [0] * (len(poly) - 1)
            carry = 0
            for i in range(len(poly) - 1, 0, -1):
                carry = (carry + poly[i]) % p
                out[i - 1] = carry
            poly = out
            d += 1
        a = poly[0] % p
        if a == 0 or d < 1:
            return (False, None, None)
        return (True, a, d)
