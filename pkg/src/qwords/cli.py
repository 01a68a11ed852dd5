"""Command-line interface.

Subcommands cover the q-binomial of words, Gaussian binomials, shuffle and
infiltration products, congruence class enumeration, language automata
(with DOT/JSON/figure output), the mod-p language decomposition, word
reconstruction, and the built-in identity check suites.
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys

from .errors import QwordsError
from .langs import (
    LanguageSpec,
    build_dfa,
    eilenberg_decompose,
    minimize,
)
from .qpoly import QPoly, ResidueRing, gauss_binomial
from .quotient import CongruenceSpec, class_key, enumerate_quotient, related
from .series import qinfiltrate, qshuffle, qshuffle_series
from .words import Alphabet, mmsss_identity, qbinom, reconstruct, vandermonde_split


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwords",
        description="q-binomial coefficients of words and p-group language automata",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qbin", help="q-binomial coefficient of two words")
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("gauss", help="Gaussian binomial of two integers")
    p.add_argument("m", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("shuffle", help="q-shuffle of two words")
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("infiltrate", help="q-infiltration of two words")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--alpha", choices=["one", "suffix"], default="suffix")

    p = sub.add_parser("classes", help="enumerate congruence classes")
    p.add_argument("--u", required=True)
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--mod", required=True)
    p.add_argument("--alphabet")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true")
    group.add_argument("--list", action="store_true")
    group.add_argument("--table", action="store_true")

    p = sub.add_parser("automaton", help="DFA of a q-binomial residue language")
    p.add_argument("--v", required=True)
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--mod", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--alphabet")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--dot")
    p.add_argument("--json")
    p.add_argument("--fig")

    p = sub.add_parser("decompose", help="residue parts of a classical mod-p language")
    p.add_argument("--v", required=True)
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--r", required=True, type=int)
    p.add_argument("--d", required=True, type=int)

    p = sub.add_parser("reconstruct", help="rebuild a word from letter polynomials")
    p.add_argument("assignments", nargs="+", metavar="LETTER=POLY")

    p = sub.add_parser("check", help="run a built-in identity suite")
    p.add_argument(
        "suite",
        choices=["vandermonde", "mmsss", "shuffle-assoc", "reciprocity", "key-soundness"],
    )

    return parser


def _alphabet(explicit: str | None, *words: str) -> Alphabet:
    if explicit:
        return Alphabet(tuple(explicit))
    return Alphabet.from_words(*words)


def _ring(p: int, mod_text: str) -> ResidueRing:
    return ResidueRing(p, QPoly.parse(mod_text))


def cmd_qbin(args) -> int:
    print(qbinom(args.u, args.v))
    return 0


def cmd_gauss(args) -> int:
    print(gauss_binomial(args.m, args.r))
    return 0


def cmd_shuffle(args) -> int:
    print(qshuffle(args.u, args.v))
    return 0


def cmd_infiltrate(args) -> int:
    print(qinfiltrate(args.u, args.v, args.alpha))
    return 0


def cmd_classes(args) -> int:
    spec = CongruenceSpec(
        u=args.u, ring=_ring(args.p, args.mod), alphabet=_alphabet(args.alphabet, args.u)
    )
    monoid = enumerate_quotient(spec)
    if args.count:
        print(len(monoid))
        return 0
    if args.table:
        import json as _json

        data = {
            "classes": monoid.representatives,
            "table": monoid.table,
        }
        print(_json.dumps(data, indent=2))
        return 0
    for i, rep in enumerate(monoid.representatives):
        residues = monoid.residues_of(i)
        parts = ", ".join(f"{f}:{residues[f]}" for f in spec.nonempty_factors)
        print(f'{i}\t"{rep}"\t{parts}')
    return 0


def cmd_automaton(args) -> int:
    ring = _ring(args.p, args.mod)
    alphabet = _alphabet(args.alphabet, args.v)
    spec = LanguageSpec(
        v=args.v, ring=ring, target=ring.reduce(QPoly.parse(args.r)), alphabet=alphabet
    )
    dfa = build_dfa(spec)
    if args.minimize:
        dfa = minimize(dfa)
    wrote = False
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dfa.to_dot())
        wrote = True
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(dfa.to_json())
        wrote = True
    if args.fig:
        from .viz import render_dfa

        render_dfa(dfa, args.fig, title=f"L(v={args.v}, R={args.r}, M={args.mod})")
        wrote = True
    if not wrote:
        print(dfa.to_json(), end="")
    return 0


def cmd_decompose(args) -> int:
    decomposition = eilenberg_decompose(args.v, args.r, args.p, args.d)
    for part in decomposition.parts:
        print(part)
    return 0


def cmd_reconstruct(args) -> int:
    polys = {}
    for item in args.assignments:
        letter, _, text = item.partition("=")
        if len(letter) != 1 or not text:
            raise QwordsError(f"expected LETTER=POLY, got {item!r}")
        polys[letter] = QPoly.parse(text)
    print(reconstruct(polys))
    return 0


def _check_vandermonde() -> str | None:
    rng = random.Random(11)
    for _ in range(100):
        x = "".join(rng.choice("01") for _ in range(rng.randrange(0, 7)))
        y = "".join(rng.choice("01") for _ in range(rng.randrange(0, 7)))
        u = "".join(rng.choice("01") for _ in range(rng.randrange(0, 5)))
        if vandermonde_split(x, y, u) != qbinom(x + y, u):
            return f"x={x!r} y={y!r} u={u!r}"
    return None


def _check_mmsss() -> str | None:
    alphabet = Alphabet(("0", "1"))
    for n in range(0, 6):
        for u in alphabet.words_of_length(n):
            for xlen in range(0, 3):
                for x in alphabet.words_of_length(xlen):
                    for k in range(xlen, n + 1):
                        left, right = mmsss_identity(u, x, k, alphabet)
                        if left != right:
                            return f"u={u!r} x={x!r} k={k}"
    return None


def _check_shuffle_assoc() -> str | None:
    alphabet = Alphabet(("0", "1"))
    for total in range(0, 7):
        for la in range(total + 1):
            for lb in range(total - la + 1):
                lc = total - la - lb
                for x in alphabet.words_of_length(la):
                    for y in alphabet.words_of_length(lb):
                        for z in alphabet.words_of_length(lc):
                            left = qshuffle_series(qshuffle(x, y), _single(z))
                            right = qshuffle_series(_single(x), qshuffle(y, z))
                            if left != right:
                                return f"x={x!r} y={y!r} z={z!r}"
    return None


def _single(w: str):
    from .series import NcPoly

    return NcPoly.word(w)


def _check_reciprocity() -> str | None:
    alphabet = Alphabet(("0", "1"))
    for lu in range(0, 4):
        for lv in range(0, 4):
            for u in alphabet.words_of_length(lu):
                for v in alphabet.words_of_length(lv):
                    top = lu * lv
                    forward = qshuffle(u, v)
                    backward = qshuffle(v, u)
                    for w in forward.support():
                        if forward.coefficient(w) != backward.coefficient(w).reversed_up_to(top):
                            return f"u={u!r} v={v!r} w={w!r}"
    return None


def _check_key_soundness() -> str | None:
    ring = ResidueRing(2, QPoly.parse("q^2+1"))
    spec = CongruenceSpec(u="01", ring=ring, alphabet=Alphabet(("0", "1")))
    words = ["".join(t) for n in range(0, 5) for t in itertools.product("01", repeat=n)]
    keys = {w: class_key(w, spec) for w in words}
    for w1 in words:
        for w2 in words:
            if (keys[w1] == keys[w2]) != related(w1, w2, spec):
                return f"w1={w1!r} w2={w2!r}"
    return None


_SUITES = {
    "vandermonde": _check_vandermonde,
    "mmsss": _check_mmsss,
    "shuffle-assoc": _check_shuffle_assoc,
    "reciprocity": _check_reciprocity,
    "key-soundness": _check_key_soundness,
}


def cmd_check(args) -> int:
    counterexample = _SUITES[args.suite]()
    if counterexample is None:
        print(f"{args.suite}: pass")
        return 0
    print(f"{args.suite}: FAIL ({counterexample})")
    return 1


_COMMANDS = {
    "qbin": cmd_qbin,
    "gauss": cmd_gauss,
    "shuffle": cmd_shuffle,
    "infiltrate": cmd_infiltrate,
    "classes": cmd_classes,
    "automaton": cmd_automaton,
    "decompose": cmd_decompose,
    "reconstruct": cmd_reconstruct,
    "check": cmd_check,
}


def run(argv: list[str]) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (QwordsError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
