"""q-binomial coefficients of words, q-shuffle/infiltration products, and
the congruence machinery recognizing p-group languages."""

from .errors import AlphabetError, ParseError, QwordsError, ReconstructionError
from .langs import (
    Decomposition,
    Dfa,
    LanguageSpec,
    build_dfa,
    build_dfa_for_residues,
    dfa_quotient_check,
    eilenberg_decompose,
    is_permutation_automaton,
    membership,
    minimize,
    quotient_mapping,
    transition_group_order,
)
from .qpoly import (
    IndexPeriod,
    QPoly,
    ResiduePoly,
    ResidueRing,
    gauss_binomial,
    valuation,
)
from .quotient import (
    CongruenceSpec,
    QuotientMonoid,
    binomially_equivalent,
    class_key,
    enumerate_quotient,
    related,
)
from .series import (
    NcPoly,
    diagonal_coefficient,
    infiltration_shuffle_decomposition,
    qinfiltrate,
    qinfiltrate_series,
    qshuffle,
    qshuffle_series,
)
from .words import (
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

__all__ = [name for name in dir() if not name.startswith("_")]
