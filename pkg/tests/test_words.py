import random

import pytest

from qwords.errors import AlphabetError, ReconstructionError
from qwords.qpoly import QPoly, gauss_binomial
from qwords.words import (
    Alphabet,
    factors,
    letter_polynomials,
    mmsss_identity,
    multi_split,
    qbinom,
    qbinom_oracle,
    reconstruct,
    reversal_identity_check,
    subword_count,
    subwords,
    sum_over_subwords,
    sum_over_superwords,
    vandermonde_split,
)

P = QPoly.parse
BINARY = Alphabet(("0", "1"))


def random_word(rng, alphabet, max_len):
    return "".join(rng.choice(alphabet) for _ in range(rng.randrange(max_len + 1)))


class TestAlphabet:
    def test_validation(self):
        BINARY.validate("0101")
        with pytest.raises(AlphabetError):
            BINARY.validate("012")

    def test_constructor_rejects_bad_symbols(self):
        with pytest.raises(AlphabetError):
            Alphabet(())
        with pytest.raises(AlphabetError):
            Alphabet(("0", "0"))
        with pytest.raises(AlphabetError):
            Alphabet(("ab",))

    def test_from_words(self):
        assert Alphabet.from_words("cab", "bd").symbols == ("a", "b", "c", "d")

    def test_shortlex_enumeration(self):
        assert list(BINARY.words_up_to(2)) == ["", "0", "1", "00", "01", "10", "11"]


class TestQbinom:
    def test_binary_example(self):
        assert qbinom("0100110", "011") == P("q^10+q^9+q^6+q^4+q^3")

    def test_ternary_letter_example(self):
        assert qbinom("01001201021", "0") == P("q^10+q^8+q^7+q^4+q^2")

    def test_repeated_coefficient_example(self):
        assert qbinom("0110011", "01") == P("q^10+q^9+q^6+q^5+q^3+2*q^2+q")

    def test_product_example(self):
        product = qbinom("01010", "010") * qbinom("01010", "1")
        assert product == P("q^9+2*q^7+2*q^5+2*q^3+q")

    def test_extremes(self):
        assert qbinom("0101", "0101") == QPoly.one()
        assert qbinom("0101", "") == QPoly.one()
        assert qbinom("", "0") == QPoly.zero()
        assert qbinom("111", "0") == QPoly.zero()

    def test_unary_words_give_gaussian_binomials(self):
        for n in range(9):
            for k in range(n + 2):
                assert qbinom("a" * n, "a" * k) == gauss_binomial(n, k)

    def test_matches_occurrence_oracle(self):
        rng = random.Random(13)
        for _ in range(300):
            u = random_word(rng, "012", 8)
            v = random_word(rng, "012", 4)
            assert qbinom(u, v) == qbinom_oracle(u, v)

    def test_zero_characterization(self):
        # qbinom(u, v) = 0 exactly when v is not a subword of u
        for u in BINARY.words_up_to(6):
            subs = subwords(u)
            for v in BINARY.words_up_to(4):
                assert qbinom(u, v).is_zero() == (v not in subs)

    def test_evaluation_at_one_counts_subwords(self):
        rng = random.Random(17)
        for _ in range(200):
            u = random_word(rng, "01", 10)
            v = random_word(rng, "01", 5)
            assert qbinom(u, v)(1) == subword_count(u, v)

    def test_degree_bound_and_nonnegative_coefficients(self):
        rng = random.Random(19)
        for _ in range(200):
            u = random_word(rng, "012", 9)
            v = random_word(rng, "012", 5)
            poly = qbinom(u, v)
            assert all(c >= 0 for c in poly.coeffs)
            if not poly.is_zero():
                assert poly.degree <= len(v) * (len(u) - len(v))


class TestVandermonde:
    def test_small_example(self):
        assert vandermonde_split("01", "0110", "010") == qbinom("010110", "010")

    def test_random_instances(self):
        rng = random.Random(23)
        for _ in range(200):
            x = random_word(rng, "01", 6)
            y = random_word(rng, "01", 6)
            u = random_word(rng, "01", 5)
            assert vandermonde_split(x, y, u) == qbinom(x + y, u)

    def test_multi_split_random_instances(self):
        rng = random.Random(29)
        for _ in range(120):
            k = rng.randrange(2, 5)
            xs = [random_word(rng, "01", 4) for _ in range(k)]
            u = random_word(rng, "01", 4)
            assert multi_split(xs, u) == qbinom("".join(xs), u)

    def test_multi_split_needs_two_factors(self):
        with pytest.raises(ValueError):
            multi_split(["01"], "0")


class TestReversal:
    def test_example(self):
        direct, adjusted = reversal_identity_check("01101", "01")
        assert direct == adjusted == qbinom("01101", "01")

    def test_random_instances(self):
        rng = random.Random(31)
        for _ in range(200):
            u = random_word(rng, "012", 8)
            v = random_word(rng, "012", 4)
            direct, adjusted = reversal_identity_check(u, v)
            assert direct == adjusted


class TestChainIdentity:
    def test_exhaustive_small(self):
        for n in range(6):
            for u in BINARY.words_of_length(n):
                for xlen in range(3):
                    for x in BINARY.words_of_length(xlen):
                        for k in range(xlen, n + 1):
                            left, right = mmsss_identity(u, x, k, BINARY)
                            assert left == right

    def test_ternary_spot_checks(self):
        alphabet = Alphabet(("0", "1", "2"))
        rng = random.Random(37)
        for _ in range(40):
            u = random_word(rng, "012", 6)
            x = random_word(rng, "012", min(2, len(u)))
            k = rng.randrange(len(x), len(u) + 1)
            left, right = mmsss_identity(u, x, k, alphabet)
            assert left == right

    def test_rejects_bad_lengths(self):
        with pytest.raises(ValueError):
            mmsss_identity("01", "010", 3)


class TestSumIdentities:
    def test_sum_over_subwords_is_gaussian(self):
        for u in ["", "0", "0100110", "01021", "aabab"]:
            for n in range(len(u) + 1):
                assert sum_over_subwords(u, n) == gauss_binomial(len(u), n)

    def test_sum_over_superwords_example(self):
        total = sum_over_superwords("01", 5, BINARY)
        assert total == QPoly([8, 8, 16, 16, 16, 8, 8])
        assert total == 8 * gauss_binomial(5, 2)

    def test_sum_over_superwords_scaling(self):
        alphabet = Alphabet(("0", "1", "2"))
        for v in ["", "0", "12", "010"]:
            for n in range(len(v), 6):
                expected = (3 ** (n - len(v))) * gauss_binomial(n, len(v))
                assert sum_over_superwords(v, n, alphabet) == expected


class TestReconstruction:
    def test_example(self):
        polys = {"0": P("q^3+1"), "1": P("q^2+q")}
        assert reconstruct(polys) == "0110"

    def test_letter_polynomials_round_trip(self):
        rng = random.Random(41)
        alphabet = Alphabet(("0", "1", "2"))
        for _ in range(200):
            u = random_word(rng, "012", 8)
            assert reconstruct(letter_polynomials(u, alphabet), alphabet) == u

    def test_long_mixed_word(self):
        u = "01001201021"
        assert reconstruct(letter_polynomials(u)) == u

    def test_empty(self):
        assert reconstruct({}) == ""

    def test_rejects_large_coefficient(self):
        with pytest.raises(ReconstructionError):
            reconstruct({"0": P("2*q")})

    def test_rejects_position_clash(self):
        with pytest.raises(ReconstructionError):
            reconstruct({"0": P("1"), "1": P("1")})

    def test_rejects_gap(self):
        with pytest.raises(ReconstructionError):
            reconstruct({"0": P("q^2+1")})


class TestFactors:
    def test_example(self):
        assert factors("010") == ("", "0", "1", "01", "10", "010")

    def test_subwords_example(self):
        assert subwords("010") == {"", "0", "1", "00", "01", "10", "010"}
