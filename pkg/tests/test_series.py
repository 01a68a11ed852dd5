import itertools
import random
from math import comb

import pytest

from qwords.qpoly import QPoly
from qwords.series import (
    NcPoly,
    alpha_rule,
    diagonal_coefficient,
    infiltration_shuffle_decomposition,
    qinfiltrate,
    qinfiltrate_series,
    qshuffle,
    qshuffle_inversion_oracle,
    qshuffle_oracle,
    qshuffle_series,
    shuffle_coefficient_vs_qbinom,
)
from qwords.words import Alphabet, qbinom

P = QPoly.parse
BINARY = Alphabet(("0", "1"))


def binary_words(max_len):
    return ["".join(t) for n in range(max_len + 1) for t in itertools.product("01", repeat=n)]


class TestNcPoly:
    def test_display(self):
        s = NcPoly({"0100": P("q+1"), "0010": P("q^3+q^2")})
        assert str(s) == "0010 : q^3+q^2\n0100 : q+1"
        assert str(NcPoly.zero()) == "0"

    def test_zero_coefficients_dropped(self):
        assert NcPoly({"01": QPoly.zero()}) == NcPoly.zero()

    def test_linear_structure(self):
        s = NcPoly.word("01", P("q"))
        t = NcPoly.word("10")
        assert (s + t) - t == s
        assert s.scale(P("q+1")) == NcPoly.word("01", P("q^2+q"))


class TestQShuffle:
    def test_example_single_letter(self):
        assert str(qshuffle("010", "0")) == "0010 : q^3+q^2\n0100 : q+1"

    def test_example_two_letters(self):
        expected = "00010 : q^6+q^5+q^4\n00100 : q^4+2*q^3+q^2\n01000 : q^2+q+1"
        assert str(qshuffle("010", "00")) == expected

    def test_empty_word_is_identity(self):
        for w in ["", "0", "0110"]:
            assert qshuffle(w, "") == NcPoly.word(w)
            assert qshuffle("", w) == NcPoly.word(w)

    def test_matches_block_oracle(self):
        for u in binary_words(4):
            for v in binary_words(3):
                assert qshuffle(u, v) == qshuffle_oracle(u, v)

    def test_matches_inversion_oracle(self):
        rng = random.Random(43)
        for _ in range(100):
            u = "".join(rng.choice("012") for _ in range(rng.randrange(5)))
            v = "".join(rng.choice("012") for _ in range(rng.randrange(4)))
            assert qshuffle(u, v) == qshuffle_inversion_oracle(u, v)

    def test_classical_degeneration(self):
        # at q = 1 the total coefficient mass is the interleaving count
        rng = random.Random(47)
        for _ in range(60):
            u = "".join(rng.choice("01") for _ in range(rng.randrange(6)))
            v = "".join(rng.choice("01") for _ in range(rng.randrange(5)))
            s = qshuffle(u, v)
            total = sum(s.coefficient(w)(1) for w in s.support())
            assert total == comb(len(u) + len(v), len(u))

    def test_associativity_small(self):
        for x in binary_words(2):
            for y in binary_words(2):
                for z in binary_words(2):
                    left = qshuffle_series(qshuffle(x, y), NcPoly.word(z))
                    right = qshuffle_series(NcPoly.word(x), qshuffle(y, z))
                    assert left == right

    def test_reciprocity(self):
        for u in binary_words(3):
            for v in binary_words(3):
                top = len(u) * len(v)
                forward = qshuffle(u, v)
                backward = qshuffle(v, u)
                assert set(forward.support()) == set(backward.support())
                for w in forward.support():
                    assert forward.coefficient(w) == backward.coefficient(w).reversed_up_to(top)

    def test_coefficient_bridge_to_qbinom(self):
        for u, w in [("0", "010"), ("01", "0100110"), ("010", "010"), ("10", "0")]:
            left, right = shuffle_coefficient_vs_qbinom(u, w, truncation=len(w))
            assert left == right == qbinom(w, u)

    def test_series_bilinearity(self):
        s = NcPoly.word("0", P("q")) + NcPoly.word("1")
        t = NcPoly.word("01")
        expected = qshuffle("0", "01").scale(P("q")) + qshuffle("1", "01")
        assert qshuffle_series(s, t) == expected


class TestQInfiltration:
    def test_example_suffix_rule(self):
        expected = "010 : q^3+q\n0010 : q^3+q^2\n0100 : q+1"
        assert str(qinfiltrate("010", "0", "suffix")) == expected

    def test_example_constant_one_rule(self):
        # both built-in rules agree on this pair
        assert qinfiltrate("010", "0", "one") == qinfiltrate("010", "0", "suffix")

    def test_example_overlapping_pair(self):
        inf = qinfiltrate("01", "10", "suffix")
        assert inf.coefficient("010") == P("q")
        assert inf.coefficient("101") == P("q^4")
        assert inf.coefficient("0110") == P("q+1")
        assert inf.coefficient("1001") == P("q^4+q^3")
        assert inf.coefficient("0101") == P("q^2")
        assert inf.coefficient("1010") == P("q^2")

    def test_empty_word_is_identity(self):
        for w in ["", "0", "0110"]:
            assert qinfiltrate(w, "") == NcPoly.word(w)
            assert qinfiltrate("", w) == NcPoly.word(w)

    def test_alpha_rule_resolution(self):
        assert alpha_rule("one")("010", "0") == 1
        assert alpha_rule("suffix")("010", "01") == 2
        fn = alpha_rule(lambda x, y: 7)
        assert fn("0", "0") == 7
        with pytest.raises(ValueError):
            alpha_rule("unknown")

    def test_not_associative_suffix(self):
        left = qinfiltrate_series(qinfiltrate("0", "0", "suffix"), NcPoly.word("01"), "suffix")
        right = qinfiltrate_series(NcPoly.word("0"), qinfiltrate("0", "01", "suffix"), "suffix")
        diff = left - right
        assert diff.support() == ["010"]
        assert diff.coefficient("010") == P("q^4") - P("q^5")

    def test_not_associative_constant_one(self):
        left = qinfiltrate_series(qinfiltrate("0", "0", "one"), NcPoly.word("01"), "one")
        right = qinfiltrate_series(NcPoly.word("0"), qinfiltrate("0", "01", "one"), "one")
        diff = left - right
        assert diff.coefficient("010") == P("q^4") - P("q^3")
        assert not diff.is_zero()

    def test_decomposition_top_part_is_shuffle(self):
        for u in binary_words(3):
            for v in binary_words(3):
                for rule in ("one", "suffix"):
                    top, remainder = infiltration_shuffle_decomposition(u, v, rule)
                    assert top == qshuffle(u, v)
                    assert all(len(w) < len(u) + len(v) for w in remainder.support())

    def test_decomposition_remainder_examples(self):
        top, remainder = infiltration_shuffle_decomposition("01", "2", "suffix")
        assert remainder.is_zero()  # disjoint alphabets leave no merge terms
        top, remainder = infiltration_shuffle_decomposition("010", "0", "suffix")
        assert remainder == NcPoly.word("010", P("q^3+q"))
        top, remainder = infiltration_shuffle_decomposition("0", "0", "suffix")
        assert remainder == NcPoly.word("0", P("q"))

    def test_decomposition_remainder_vanishes_iff_disjoint(self):
        for u in binary_words(3):
            for v in ["", "2", "22", "232", "1", "01"]:
                _, remainder = infiltration_shuffle_decomposition(u, v, "suffix")
                disjoint = not (set(u) & set(v))
                assert remainder.is_zero() == disjoint


class TestDiagonal:
    def test_forward_formula(self):
        for u in binary_words(5):
            for v in binary_words(len(u)):
                k = len(v)
                expected = qbinom(u, v).shift(k * (k + 1) // 2)
                assert diagonal_coefficient(u, v, "uv") == expected

    def test_reversed_formula(self):
        for u in binary_words(5):
            for v in binary_words(len(u)):
                k = len(v)
                poly = qbinom(u, v)
                if poly.is_zero():
                    expected = QPoly.zero()
                else:
                    top = k * (len(u) - k)
                    expected = poly.reversed_up_to(top).shift(k * (k + 1) // 2)
                assert diagonal_coefficient(u, v, "vu") == expected

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            diagonal_coefficient("0", "01")
        with pytest.raises(ValueError):
            diagonal_coefficient("01", "0", order="xy")
