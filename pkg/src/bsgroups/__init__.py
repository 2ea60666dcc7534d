"""Exact computation in Baumslag-Solitar groups BS(m,n).

BS(m,n) = < a, t | t^-1 a^m t = a^n >.  The package solves the word problem
through Britton normal forms, computes lower-central-series weights for the
solvable groups BS(1,n) through their affine representation over Z[1/n],
does arithmetic in the free-product quotient Z * Z_d with its free
commutator basis, certifies non-membership in lower central series terms
by finite nilpotent quotients, classifies residual properties of every
BS(m,n), and constructs britton-verified commutator witnesses.
"""

from .affine import (
    AffineElem,
    Weight,
    ZnElement,
    canonical_word,
    gamma_quot_image,
    lcs_weight,
    to_affine,
    zn_add,
    zn_canon,
)
from .britton import (
    AbImage,
    BrittonNF,
    BSParams,
    abelianize,
    nf_equal,
    nf_invert,
    nf_multiply,
    normalize,
)
from .classify import (
    ChainReport,
    ClassReport,
    canonical_form,
    classify,
    free_subgroup_probe,
    prop5_chain,
    r_generators,
)
from .errors import (
    BsError,
    DomainError,
    ExponentCapExceeded,
    ParseError,
    VerificationError,
    WordSizeExceeded,
)
from .finquot import (
    Certificate,
    GammaChain,
    SearchBudget,
    Semidirect,
    Wreath,
    build_semidirect,
    build_wreath,
    certify_not_in_gamma,
    fq_eval,
    fq_gamma_series,
    quotient_family,
)
from .freeprod import (
    BasisWord,
    CentralSplit,
    FreeProdWord,
    fp_normalize,
    fp_rewrite_basis,
    lift_basis,
    split_central,
)
from .witness import (
    MembershipWitness,
    OmegaStabilityReport,
    gamma_membership_witness,
    lemma2_witness,
    omega_stability_check,
)
from .words import (
    Commutator,
    Conjugate,
    Gen,
    Power,
    Product,
    Word,
    eval_expr,
    exp_sums,
    free_reduce,
    gamma_weight_lower_bound,
    parse_expr,
    parse_word,
    pretty_print,
)

__version__ = "0.1.0"

__all__ = [
    "AbImage",
    "AffineElem",
    "BasisWord",
    "BrittonNF",
    "BSParams",
    "BsError",
    "Certificate",
    "ChainReport",
    "ClassReport",
    "CentralSplit",
    "Commutator",
    "Conjugate",
    "DomainError",
    "ExponentCapExceeded",
    "FreeProdWord",
    "GammaChain",
    "Gen",
    "MembershipWitness",
    "OmegaStabilityReport",
    "ParseError",
    "Power",
    "Product",
    "SearchBudget",
    "Semidirect",
    "VerificationError",
    "Weight",
    "Word",
    "WordSizeExceeded",
    "Wreath",
    "ZnElement",
    "abelianize",
    "build_semidirect",
    "build_wreath",
    "canonical_form",
    "canonical_word",
    "certify_not_in_gamma",
    "classify",
    "eval_expr",
    "exp_sums",
    "fp_normalize",
    "fp_rewrite_basis",
    "fq_eval",
    "fq_gamma_series",
    "free_reduce",
    "free_subgroup_probe",
    "gamma_membership_witness",
    "gamma_quot_image",
    "gamma_weight_lower_bound",
    "lcs_weight",
    "lemma2_witness",
    "lift_basis",
    "nf_equal",
    "nf_invert",
    "nf_multiply",
    "normalize",
    "omega_stability_check",
    "parse_expr",
    "parse_word",
    "pretty_print",
    "prop5_chain",
    "quotient_family",
    "r_generators",
    "split_central",
    "to_affine",
    "zn_add",
    "zn_canon",
]
