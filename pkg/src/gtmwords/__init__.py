"""Generalized Thue-Morse words: exact factor languages, dihedral symmetry,
palindromic richness and closed-form complexity, all in exact integer
arithmetic."""

from .closedform import (
    Branch,
    ComplexityFormulaResult,
    CrossValidation,
    cross_validate,
    formula_complexity,
    formula_delta,
)
from .dihedral import (
    GroupElement,
    Kind,
    all_elements,
    antimorphism,
    antimorphisms,
    conjugate_antimorphism,
    identity,
    involutive_antimorphisms,
    morphism,
)
from .language import (
    BispecialRecord,
    Extensions,
    FactorLanguage,
    LanguageLevel,
    NotAFactorError,
    SecondDifference,
    ancestors,
    bilateral_order,
    bispecials,
    complexity,
    extensions,
    get_language,
    language_level,
    reset_languages,
    second_difference_identity_check,
)
from .palcomplexity import (
    PalindromeTable,
    fixing_antimorphisms,
    is_theta_palindrome,
    palindrome_table,
    palindromic_complexity,
    palindromic_extensions,
)
from .richness import (
    ClosureCheck,
    InjectivityCheck,
    RichnessReport,
    RichnessRow,
    TelescopeCheck,
    closure_check,
    injectivity_check,
    richness_defect,
    richness_report,
    telescoped_identity_check,
)
from .verify import CheckResult, expected_short_bispecial, run_property_suite
from .wordgen import (
    EMPTY_WORD,
    Params,
    Word,
    digit_sum,
    fixed_point_prefix,
    gtm_letter,
    gtm_prefix,
    substitution_apply,
    substitution_image,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "BispecialRecord",
    "CheckResult",
    "ClosureCheck",
    "ComplexityFormulaResult",
    "CrossValidation",
    "EMPTY_WORD",
    "Extensions",
    "FactorLanguage",
    "GroupElement",
    "InjectivityCheck",
    "Kind",
    "LanguageLevel",
    "NotAFactorError",
    "PalindromeTable",
    "Params",
    "RichnessReport",
    "RichnessRow",
    "SecondDifference",
    "TelescopeCheck",
    "Word",
    "all_elements",
    "ancestors",
    "antimorphism",
    "antimorphisms",
    "bilateral_order",
    "bispecials",
    "closure_check",
    "complexity",
    "conjugate_antimorphism",
    "cross_validate",
    "digit_sum",
    "expected_short_bispecial",
    "extensions",
    "fixed_point_prefix",
    "fixing_antimorphisms",
    "formula_complexity",
    "formula_delta",
    "get_language",
    "gtm_letter",
    "gtm_prefix",
    "identity",
    "injectivity_check",
    "involutive_antimorphisms",
    "is_theta_palindrome",
    "language_level",
    "morphism",
    "palindrome_table",
    "palindromic_complexity",
    "palindromic_extensions",
    "reset_languages",
    "richness_defect",
    "richness_report",
    "run_property_suite",
    "second_difference_identity_check",
    "substitution_apply",
    "substitution_image",
    "telescoped_identity_check",
]
