"""Exact Brasselet numbers and Euler obstructions on affine toric varieties from Newton polygons."""

__version__ = "0.1.0"

from .errors import ToricError  # noqa: E402
from .invariants import (  # noqa: E402
    EulerTable,
    InvariantReport,
    brasselet_ci,
    brasselet_ci_prepolar,
    brasselet_hypersurface,
    bruce_roberts,
    euler_obstruction_of_function,
    euler_obstruction_origin,
    family_constancy_report,
    gsv_index,
    milnor_number,
    morse_number,
)
from .newton import (  # noqa: E402
    CompleteIntersectionData,
    LatticePolynomial,
    ToricVarietyData,
    face_invariant_data,
    newton_preserving_check,
    nondegeneracy_heuristic,
)
from .parsing import format_terms, parse_polynomial, parse_terms  # noqa: E402
from .toric_surface import (  # noqa: E402
    hj_expansion,
    semigroup_generators,
    surface_variety,
)
from .volume import VolumeConvention, mixed_volume, normalized_volume  # noqa: E402

__all__ = [
    "__version__",
    "ToricError",
    "EulerTable",
    "InvariantReport",
    "brasselet_ci",
    "brasselet_ci_prepolar",
    "brasselet_hypersurface",
    "bruce_roberts",
    "euler_obstruction_of_function",
    "euler_obstruction_origin",
    "family_constancy_report",
    "gsv_index",
    "milnor_number",
    "morse_number",
    "CompleteIntersectionData",
    "LatticePolynomial",
    "ToricVarietyData",
    "face_invariant_data",
    "newton_preserving_check",
    "nondegeneracy_heuristic",
    "format_terms",
    "parse_polynomial",
    "parse_terms",
    "hj_expansion",
    "semigroup_generators",
    "surface_variety",
    "VolumeConvention",
    "mixed_volume",
    "normalized_volume",
]
