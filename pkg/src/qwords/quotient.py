"""Binomial equivalence modulo a polynomial and its coarsest refining
congruence, with enumeration of the finite quotient monoid.

Two words are related when their q-binomials at every non-empty factor of a
fixed word u agree in F_p[q]/<M>, the powers of q at their lengths agree,
and either the lengths are equal or both words satisfy the valuation
saturation condition.  The quotient is explored breadth-first in shortlex
order; the per-word state (residues at all factors of u plus the length) is
updated incrementally one letter at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .qpoly import QPoly, ResiduePoly, ResidueRing
from .words import Alphabet, factors, qbinom


@dataclass(frozen=True)
class CongruenceSpec:
    """Parameters (u, ring, alphabet) of the congruence."""

    u: str
    ring: ResidueRing
    alphabet: Alphabet

    def __post_init__(self):
        if not self.u:
            raise ValueError("u must be non-empty")
        self.alphabet.validate(self.u)

    @property
    def nonempty_factors(self) -> tuple[str, ...]:
        return factors(self.u)[1:]

    @property
    def saturation_factors(self) -> tuple[str, ...]:
        """Factors v (including the empty word) such that av is a factor of u
        for some letter a; these drive the saturation condition."""
        fac = set(factors(self.u))
        return tuple(v for v in factors(self.u) if any(a + v in fac for a in self.alphabet))


def _canon_length(n: int, ring: ResidueRing) -> int:
    """Canonical exponent with q^n == q^canon(n) in the ring."""
    ip = ring.q_index_period()
    if n < ip.index:
        return n
    return ip.index + (n - ip.index) % ip.period


def _is_saturated(residues: dict[str, ResiduePoly], n: int, spec: CongruenceSpec) -> bool:
    """Saturation from the residue tuple and length alone.

    If the residue's valuation is below val(M) it is the true valuation of
    the q-binomial; otherwise the true valuation is at least val(M) (or the
    q-binomial is zero), and the condition reduces to n >= |v|.
    """
    val_m = spec.ring.modulus.valuation()
    for v in spec.saturation_factors:
        if n < len(v):
            continue  # q-binomial is zero, condition vacuous
        if v:
            rv = residues[v].valuation()
        else:
            rv = 0  # qbinom(w, epsilon) = 1
        if rv < val_m and rv + n - len(v) < val_m:
            return False
    return True


def class_key(w: str, spec: CongruenceSpec):
    """Hashable invariant characterizing the congruence class of w."""
    spec.alphabet.validate(w)
    residues = {f: spec.ring.reduce(qbinom(w, f)) for f in spec.nonempty_factors}
    return _key_from_state(residues, len(w), spec)


def _key_from_state(residues: dict[str, ResiduePoly], n: int, spec: CongruenceSpec):
    res = tuple(residues[f].coeffs for f in spec.nonempty_factors)
    if _is_saturated(residues, n, spec):
        return (res, ("sat", _canon_length(n, spec.ring)))
    return (res, ("len", n))


def related(w1: str, w2: str, spec: CongruenceSpec) -> bool:
    """Direct evaluation of the congruence definition, used as a test oracle.

    Valuations are taken on the q-binomials with coefficients reduced mod p
    (before reduction mod M), exactly as in the defining conditions.
    """
    ring = spec.ring
    p = ring.p
    for f in spec.nonempty_factors:
        if ring.reduce(qbinom(w1, f)) != ring.reduce(qbinom(w2, f)):
            return False
    if ring.qpow(len(w1)) != ring.qpow(len(w2)):
        return False
    if len(w1) == len(w2):
        return True
    val_m = ring.modulus.valuation()
    for w in (w1, w2):
        for v in spec.saturation_factors:
            mod_p = QPoly([c % p for c in qbinom(w, v).coeffs])
            if mod_p.valuation() + len(w) - len(v) < val_m:
                return False
    return True


def binomially_equivalent(w1: str, w2: str, spec: CongruenceSpec) -> bool:
    """The plain (u, M)-binomial equivalence, without the congruence refinements."""
    ring = spec.ring
    return all(
        ring.reduce(qbinom(w1, f)) == ring.reduce(qbinom(w2, f))
        for f in spec.nonempty_factors
    )


@dataclass
class QuotientMonoid:
    """Finite quotient of the free monoid by the coarsest refining congruence."""

    spec: CongruenceSpec
    representatives: list[str]
    transitions: list[dict[str, int]]
    identity: int = 0
    _table: list[list[int]] | None = field(default=None, repr=False)
    _keys: list = field(default_factory=list, repr=False)
    _residues: list[dict[str, ResiduePoly]] = field(default_factory=list, repr=False)

    def __len__(self) -> int:
        return len(self.representatives)

    def class_of(self, w: str) -> int:
        state = self.identity
        for a in self.spec.alphabet.validate(w):
            state = self.transitions[state][a]
        return state

    def residues_of(self, index: int) -> dict[str, ResiduePoly]:
        return dict(self._residues[index])

    @property
    def table(self) -> list[list[int]]:
        """Dense multiplication table, built on first use."""
        if self._table is None:
            n = len(self)
            table = []
            for i in range(n):
                row = []
                for j in range(n):
                    state = i
                    for a in self.representatives[j]:
                        state = self.transitions[state][a]
                    row.append(state)
                table.append(row)
            self._table = table
        return self._table

    def is_group(self) -> bool:
        """True iff every row and column of the table is a permutation."""
        n = len(self)
        table = self.table
        return all(len(set(row)) == n for row in table) and all(
            len({table[i][j] for i in range(n)}) == n for j in range(n)
        )

    def element_orders(self) -> dict[int, int]:
        """Order of each element; requires the quotient to be a group."""
        if not self.is_group():
            raise ValueError("element orders are defined only for groups")
        table = self.table
        orders = {}
        for i in range(len(self)):
            power, order = table[self.identity][i], 1
            while power != self.identity:
                power = table[power][i]
                order += 1
            orders[i] = order
        return orders

    def exponent_check(self) -> bool:
        """Every element's order divides per(q) * p^|u| (q must be a unit)."""
        ring = self.spec.ring
        ip = ring.q_index_period()
        if ip.index != 0:
            raise ValueError("q is not a unit in the ring")
        bound = ip.period * ring.p ** len(self.spec.u)
        return all(bound % order == 0 for order in self.element_orders().values())


def enumerate_quotient(spec: CongruenceSpec, max_length: int | None = None) -> QuotientMonoid:
    """Breadth-first enumeration of the congruence classes in shortlex order.

    The first word reaching a class key is its shortlex-least representative.
    The frontier is capped defensively; the congruence guarantees far earlier
    stabilization at desk scale.
    """
    ring = spec.ring
    if max_length is None:
        ip = ring.q_index_period()
        max_length = (
            int(ring.modulus.valuation())
            + len(spec.u)
            + ip.period * ring.p ** len(spec.u)
            + 2
        )
    all_factors = factors(spec.u)
    # parent links for the incremental one-letter update of each residue
    updates = [
        (f, f[:-1], f[-1], len(f)) for f in all_factors if f
    ]

    def step(residues: dict[str, ResiduePoly], a: str) -> dict[str, ResiduePoly]:
        new = {"": ring.one}
        for f, parent, last, flen in updates:
            value = residues[f] * ring.qpow(flen)
            if last == a:
                value = value + residues[parent]
            new[f] = value
        return new

    init = {f: (ring.one if f == "" else ring.zero) for f in all_factors}
    reps: list[str] = []
    keys: list = []
    residue_states: list[dict[str, ResiduePoly]] = []
    transitions: list[dict[str, int]] = []
    index_of: dict = {}

    def add_class(word: str, residues: dict[str, ResiduePoly], key) -> int:
        idx = len(reps)
        index_of[key] = idx
        reps.append(word)
        keys.append(key)
        residue_states.append(residues)
        transitions.append({})
        return idx

    add_class("", init, _key_from_state(init, 0, spec))
    frontier = [0]
    while frontier:
        nxt = []
        for idx in frontier:
            word = reps[idx]
            residues = residue_states[idx]
            for a in spec.alphabet:
                new_res = step(residues, a)
                key = _key_from_state(new_res, len(word) + 1, spec)
                target = index_of.get(key)
                if target is None:
                    if len(word) + 1 > max_length:
                        raise RuntimeError(
                            "class enumeration did not stabilize below the length cap"
                        )
                    target = add_class(word + a, new_res, key)
                    nxt.append(target)
                transitions[idx][a] = target
        frontier = nxt
    return QuotientMonoid(
        spec=spec,
        representatives=reps,
        transitions=transitions,
        _keys=keys,
        _residues=residue_states,
    )
