"""Double beta-polynomials, Schubert calculus in connective K-theory,
and fundamental classes of Deligne-Lusztig variety closures for GL_n.
"""

from .betapoly import (
    divided_difference,
    double_beta_polynomial,
    double_grothendieck,
    double_schubert,
    pipe_dream_oracle,
    top_beta_polynomial,
)
from .dlclass import (
    DLQuery,
    DLResult,
    dl_class,
    dl_class_ch,
    dl_class_ck,
    dl_class_k0,
    flag_count_oracle,
    kim_convention,
    kim_transform,
)
from .fgl import fgl_add, fgl_inverse, n_times
from .flagring import (
    FlagRingElement,
    SchubertExpansion,
    normal_form,
    point_coefficient,
    schubert_class,
    schubert_expand,
    staircase_monomials,
)
from .perm import (
    Permutation,
    all_reduced_words,
    bruhat_leq,
    compose,
    convention_translate,
    format_permutation,
    identity,
    inverse,
    length,
    longest_element,
    parse_permutation,
    rank_function,
    reduced_word,
)
from .poly import BetaPolynomial, ExactDivisionError

__version__ = "0.1.0"

__all__ = [
    "BetaPolynomial",
    "DLQuery",
    "DLResult",
    "ExactDivisionError",
    "FlagRingElement",
    "Permutation",
    "SchubertExpansion",
    "all_reduced_words",
    "bruhat_leq",
    "compose",
    "convention_translate",
    "divided_difference",
    "dl_class",
    "dl_class_ch",
    "dl_class_ck",
    "dl_class_k0",
    "double_beta_polynomial",
    "double_grothendieck",
    "double_schubert",
    "fgl_add",
    "fgl_inverse",
    "flag_count_oracle",
    "format_permutation",
    "identity",
    "inverse",
    "kim_convention",
    "kim_transform",
    "length",
    "longest_element",
    "n_times",
    "normal_form",
    "parse_permutation",
    "pipe_dream_oracle",
    "point_coefficient",
    "rank_function",
    "reduced_word",
    "schubert_class",
    "schubert_expand",
    "staircase_monomials",
    "top_beta_polynomial",
    "__version__",
]
