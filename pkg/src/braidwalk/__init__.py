"""Exact braid-group calculus: Burau matrices, signature invariants via the
Meyer cocycle, random walks on braid and symplectic groups, and the braid
classification behind Lissajous toric knots."""

from .braid import BraidWord, closure_components, concat, conjugate, inverse, parse_word, format_word, permutation, writhe
from .burau import (
    alexander_at_minus1,
    alexander_poly,
    burau_eval,
    burau_generator,
    burau_generator_minus1,
    burau_matrix,
    burau_minus1,
    intersection_form,
    is_form_preserving,
    radical_vector,
    symplectic_image,
    symplectic_quotient,
)
from .laurent import LaurentPoly
from .lissajous import (
    LissajousClass,
    LissajousParams,
    bezout_a,
    braid_from_parametrization,
    classify,
    lambda_seq,
    lissajous_braid,
    percentage_table,
    power_signature,
    sample_polyline,
)
from .meyer import (
    MeyerInput,
    SignatureResult,
    check_big_entries,
    gg_signature,
    is_hyperbolic,
    meyer_cocycle,
    meyer_space,
    power_signatures,
    quasipositive_invariants,
    seifert_matrix,
    seifert_signature_oracle,
)
from .walks import (
    FiniteWalkResult,
    FpMatrix,
    GenMeasure,
    WalkDistribution,
    finite_walk_tv,
    hitting_probability,
    hitting_series,
    monte_carlo_hitting,
    psp_order,
    reduce_mod_p,
    sp_order,
    step_distribution,
    zero_density,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "FiniteWalkResult",
    "FpMatrix",
    "GenMeasure",
    "LaurentPoly",
    "LissajousClass",
    "LissajousParams",
    "MeyerInput",
    "SignatureResult",
    "WalkDistribution",
    "alexander_at_minus1",
    "alexander_poly",
    "bezout_a",
    "braid_from_parametrization",
    "burau_eval",
    "burau_generator",
    "burau_generator_minus1",
    "burau_matrix",
    "burau_minus1",
    "check_big_entries",
    "classify",
    "closure_components",
    "concat",
    "conjugate",
    "finite_walk_tv",
    "format_word",
    "gg_signature",
    "hitting_probability",
    "hitting_series",
    "intersection_form",
    "inverse",
    "is_form_preserving",
    "is_hyperbolic",
    "lambda_seq",
    "lissajous_braid",
    "meyer_cocycle",
    "meyer_space",
    "monte_carlo_hitting",
    "parse_word",
    "percentage_table",
    "permutation",
    "power_signature",
    "power_signatures",
    "psp_order",
    "quasipositive_invariants",
    "radical_vector",
    "reduce_mod_p",
    "sample_polyline",
    "seifert_matrix",
    "seifert_signature_oracle",
    "sp_order",
    "step_distribution",
    "symplectic_image",
    "symplectic_quotient",
    "writhe",
    "zero_density",
    "__version__",
]
