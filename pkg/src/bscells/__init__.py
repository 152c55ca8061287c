"""Exact cell decompositions of double Bott-Samelson varieties.

Core objects: finite-type Cartan data, Weyl group arithmetic, shuffled
subexpressions with their cell invariants, an SL(n, Q) matrix model with
chart sections and exact chart-coordinate extraction, generalized-minor
functions, and the monomial change of coordinates for positive masks.
"""

from .cartan import (
    CartanData,
    CartanError,
    RootVector,
    Weight,
    cartan_from_label,
    cartan_from_matrix,
    fundamental_weight,
    positive_roots,
    r_alpha,
    reflect_weight,
    simple_root_as_weight,
)
from .minors import (
    FullSections,
    NotInCell,
    PsiFamily,
    cell_test_psi,
    cor47_coords,
    delta_lambda,
    g_matrices,
    gen_minor,
    psi_family,
    psi_split,
)
from .monomial import (
    MonomialMatrix,
    interval_words,
    l_matrix,
    m_exponent,
    monomial_matrix,
    prop414_closed_form,
    verify_monomial,
)
from .mpoly import MPoly, PolyMatrix, parse_poly
from .shuffles import (
    CellProfile,
    NotInMonoidInterval,
    SetupError,
    ShuffleSetup,
    Subexpression,
    enumerate_subexpressions,
    positive_from_w,
    sigma_word,
    wy_convert,
)
from .slgroup import (
    ChartPoint,
    DecompositionUndefined,
    FactorizationFailed,
    SLModel,
    SLPoint,
    SLPolyMat,
)
from .weyl import IntervalTooLarge, WeylElement, WeylGroup

__version__ = "0.1.0"

__all__ = [
    "CartanData",
    "CartanError",
    "CellProfile",
    "ChartPoint",
    "DecompositionUndefined",
    "FactorizationFailed",
    "FullSections",
    "IntervalTooLarge",
    "MPoly",
    "MonomialMatrix",
    "NotInCell",
    "NotInMonoidInterval",
    "PolyMatrix",
    "PsiFamily",
    "RootVector",
    "SLModel",
    "SLPoint",
    "SLPolyMat",
    "SetupError",
    "ShuffleSetup",
    "Subexpression",
    "Weight",
    "WeylElement",
    "WeylGroup",
    "cartan_from_label",
    "cartan_from_matrix",
    "cell_test_psi",
    "cor47_coords",
    "delta_lambda",
    "enumerate_subexpressions",
    "fundamental_weight",
    "g_matrices",
    "gen_minor",
    "interval_words",
    "l_matrix",
    "m_exponent",
    "monomial_matrix",
    "parse_poly",
    "positive_from_w",
    "positive_roots",
    "prop414_closed_form",
    "psi_family",
    "psi_split",
    "r_alpha",
    "reflect_weight",
    "sigma_word",
    "simple_root_as_weight",
    "verify_monomial",
    "wy_convert",
]
