"""Languages defined by a q-binomial residue, their DFAs, minimization, and
the decomposition of classical mod-p binomial languages.

The DFA for such a language has the congruence classes as states; Moore
partition refinement then yields the minimal automaton, which for moduli of
the form a(q-1)^d is a permutation automaton recognizing a p-group language.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .qpoly import QPoly, ResiduePoly, ResidueRing
from .quotient import CongruenceSpec, enumerate_quotient
from .words import Alphabet, qbinom


@dataclass(frozen=True)
class LanguageSpec:
    """The language of words whose q-binomial at v has a fixed residue."""

    v: str
    ring: ResidueRing
    target: ResiduePoly
    alphabet: Alphabet

    def __post_init__(self):
        self.alphabet.validate(self.v)
        if self.target.ring != self.ring:
            raise ValueError("target residue must live in the spec's ring")


def membership(w: str, spec: LanguageSpec) -> bool:
    """Whether reduce(qbinom(w, v)) equals the target residue."""
    spec.alphabet.validate(w)
    return spec.ring.reduce(qbinom(w, spec.v)) == spec.target


@dataclass(frozen=True)
class Dfa:
    """Complete DFA over an alphabet; states are 0..n-1."""

    alphabet: Alphabet
    transitions: tuple[dict[str, int], ...]
    initial: int
    finals: frozenset[int]

    @property
    def states(self) -> range:
        return range(len(self.transitions))

    def step(self, state: int, a: str) -> int:
        return self.transitions[state][a]

    def accepts(self, w: str) -> bool:
        state = self.initial
        for a in self.alphabet.validate(w):
            state = self.transitions[state][a]
        return state in self.finals

    def trim(self) -> "Dfa":
        """Restrict to states reachable from the initial state."""
        order = _bfs_order(self)
        if len(order) == len(self.transitions):
            return self
        return _renumber(self, order)

    def reach_words(self) -> list[str]:
        """Shortlex-least word reaching each state (trimmed DFA)."""
        words: dict[int, str] = {self.initial: ""}
        queue = deque([self.initial])
        while queue:
            s = queue.popleft()
            for a in self.alphabet:
                t = self.transitions[s][a]
                if t not in words:
                    words[t] = words[s] + a
                    queue.append(t)
        return [words[s] for s in self.states]

    def to_dot(self) -> str:
        lines = ["digraph dfa {", "  rankdir=LR;", '  __start [shape=point, label=""];']
        for s in self.states:
            shape = "doublecircle" if s in self.finals else "circle"
            lines.append(f'  {s} [shape={shape}, label="{s}"];')
        lines.append(f"  __start -> {self.initial};")
        for s in self.states:
            for a in self.alphabet:
                lines.append(f'  {s} -> {self.transitions[s][a]} [label="{a}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "alphabet": list(self.alphabet),
            "states": len(self.transitions),
            "initial": self.initial,
            "finals": sorted(self.finals),
            "transitions": [
                [s, a, self.transitions[s][a]] for s in self.states for a in self.alphabet
            ],
        }
        return json.dumps(data, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Dfa":
        data = json.loads(text)
        alphabet = Alphabet(tuple(data["alphabet"]))
        transitions: list[dict[str, int]] = [{} for _ in range(data["states"])]
        for s, a, t in data["transitions"]:
            transitions[s][a] = t
        return cls(
            alphabet=alphabet,
            transitions=tuple(transitions),
            initial=data["initial"],
            finals=frozenset(data["finals"]),
        )


def _bfs_order(dfa: Dfa) -> list[int]:
    order = [dfa.initial]
    seen = {dfa.initial}
    queue = deque(order)
    while queue:
        s = queue.popleft()
        for a in dfa.alphabet:
            t = dfa.transitions[s][a]
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def _renumber(dfa: Dfa, order: list[int]) -> Dfa:
    index = {old: new for new, old in enumerate(order)}
    transitions = tuple(
        {a: index[dfa.transitions[old][a]] for a in dfa.alphabet} for old in order
    )
    return Dfa(
        alphabet=dfa.alphabet,
        transitions=transitions,
        initial=index[dfa.initial],
        finals=frozenset(index[s] for s in dfa.finals if s in index),
    )


def build_dfa(spec: LanguageSpec) -> Dfa:
    """DFA whose states are the congruence classes for u = v."""
    return build_dfa_for_residues(spec.v, spec.ring, [spec.target], spec.alphabet)


def build_dfa_for_residues(
    v: str, ring: ResidueRing, targets, alphabet: Alphabet
) -> Dfa:
    """DFA accepting words whose q-binomial at v reduces to any given residue."""
    monoid = enumerate_quotient(CongruenceSpec(u=v, ring=ring, alphabet=alphabet))
    target_set = set(targets)
    finals = frozenset(
        i for i in range(len(monoid)) if monoid.residues_of(i)[v] in target_set
    )
    return Dfa(
        alphabet=alphabet,
        transitions=tuple(dict(t) for t in monoid.transitions),
        initial=monoid.identity,
        finals=finals,
    )


def minimize(dfa: Dfa) -> Dfa:
    """Minimal DFA via Moore partition refinement, canonically numbered by
    BFS order from the initial state."""
    dfa = dfa.trim()
    n = len(dfa.transitions)
    block = [1 if s in dfa.finals else 0 for s in range(n)]
    while True:
        signatures = [
            (block[s], tuple(block[dfa.transitions[s][a]] for a in dfa.alphabet))
            for s in range(n)
        ]
        mapping: dict = {}
        new_block = []
        for sig in signatures:
            if sig not in mapping:
                mapping[sig] = len(mapping)
            new_block.append(mapping[sig])
        if new_block == block:
            break
        block = new_block
    count = len(set(block))
    transitions: list[dict[str, int]] = [{} for _ in range(count)]
    for s in range(n):
        for a in dfa.alphabet:
            transitions[block[s]][a] = block[dfa.transitions[s][a]]
    merged = Dfa(
        alphabet=dfa.alphabet,
        transitions=tuple(transitions),
        initial=block[dfa.initial],
        finals=frozenset(block[s] for s in dfa.finals),
    )
    return _renumber(merged, _bfs_order(merged))


def is_permutation_automaton(dfa: Dfa) -> bool:
    """Every letter acts as a bijection on the reachable states."""
    dfa = dfa.trim()
    n = len(dfa.transitions)
    return all(
        len({dfa.transitions[s][a] for s in range(n)}) == n for a in dfa.alphabet
    )


def transition_group_order(dfa: Dfa) -> int:
    """Order of the group generated by the letter permutations (permutation
    automata only); closure under composition."""
    dfa = dfa.trim()
    if not is_permutation_automaton(dfa):
        raise ValueError("not a permutation automaton")
    n = len(dfa.transitions)
    identity = tuple(range(n))
    generators = [
        tuple(dfa.transitions[s][a] for s in range(n)) for a in dfa.alphabet
    ]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for perm in frontier:
            for g in generators:
                composed = tuple(g[perm[s]] for s in range(n))
                if composed not in seen:
                    seen.add(composed)
                    nxt.append(composed)
        frontier = nxt
    return len(seen)


@dataclass(frozen=True)
class Decomposition:
    """Residue parts whose union realizes a classical mod-p binomial language."""

    v: str
    r: int
    p: int
    d: int
    ring: ResidueRing
    parts: tuple[ResiduePoly, ...]


def eilenberg_decompose(v: str, r: int, p: int, d: int, a: int = 1) -> Decomposition:
    """All residues R of degree < d with R(1) = r mod p, for M = a(q-1)^d.

    The languages with those targets partition the classical language of
    words whose subword count at v is r mod p.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if not 0 <= r < p:
        raise ValueError("r must satisfy 0 <= r < p")
    modulus = a * QPoly([-1, 1]) ** d
    ring = ResidueRing(p, modulus)
    parts = tuple(
        x for x in ring.elements() if sum(x.coeffs) % p == r % p
    )
    return Decomposition(v=v, r=r, p=p, d=d, ring=ring, parts=parts)


def dfa_quotient_check(big: Dfa, small: Dfa, mapping: dict[int, int]) -> bool:
    """Whether the mapping is a DFA quotient morphism.

    Must commute with every transition, send initial to initial, and make
    finality of a big state agree with finality of its image.
    """
    if set(mapping) != set(big.states):
        return False
    if mapping[big.initial] != small.initial:
        return False
    for s in big.states:
        if (mapping[s] in small.finals) != (s in big.finals):
            return False
        for a in big.alphabet:
            if mapping[big.transitions[s][a]] != small.transitions[mapping[s]][a]:
                return False
    return True


def quotient_mapping(big: Dfa, small: Dfa) -> dict[int, int]:
    """State mapping obtained by running both automata in parallel from the
    initial states (both must be trimmed and over the same alphabet)."""
    mapping = {big.initial: small.initial}
    queue = deque([(big.initial, small.initial)])
    while queue:
        b, s = queue.popleft()
        for a in big.alphabet:
            nb, ns = big.transitions[b][a], small.transitions[s][a]
            if nb not in mapping:
                mapping[nb] = ns
                queue.append((nb, ns))
            elif mapping[nb] != ns:
                raise ValueError("no well-defined quotient mapping exists")
    return mapping
