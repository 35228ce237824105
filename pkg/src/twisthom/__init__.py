"""Twisted simplicial structures and exact twisted homology.

Builds path simplicial sets of ordered simplicial complexes and finite
categories, equips them with vertexwise twisted structures, and verifies
the resulting identities (Delta and simplicial identities, d^2 = 0, cone
contractibility, Mayer-Vietoris exactness, fibre-bundle local triviality)
with exact integer arithmetic.
"""

from .abelian import (
    AbelianEndomorphism,
    FgAbelianGroup,
    GroupSummary,
    IntegerMatrix,
    SmithDecomposition,
    cokernel_summary,
    endomorphisms_commute,
    is_automorphism,
    is_valid_endomorphism,
    smith_normal_form,
    solve_in_lattice,
)
from .chains import (
    ChainComplex,
    ChainHomotopy,
    ChainMap,
    cone_null_homotopy,
    mayer_vietoris_check,
    slice_chains,
    twisted_group_chains,
    twisted_product_chains,
    verify_boundary_squared,
    verify_cone_face_relations,
    verify_null_homotopy,
)
from .groups import FiniteGroupTable
from .groupwords import (
    TwistedFreeConstruction,
    Word,
    abelianize,
    abelianized_structure,
    check_simplicial_identities,
)
from .products import (
    monotone_decomposition,
    twisted_product,
    twisted_smash,
    untwisting_iso,
    verify_bundle_local_triviality,
)
from .spaces import (
    FiniteCategory,
    OrderedComplex,
    SimplicialSlice,
    full_simplex,
    intersection,
    nerve_slice,
    standard_simplex_slice,
    union,
    validate_category,
    validate_complex,
    validate_slice,
)
from .twist import (
    NonSingularityCertificate,
    TwistedAbelianStructure,
    TwistedFiniteGroupStructure,
    TwistedSliceStructure,
    identity_twist,
    induced_simplex_twist,
    is_nonsingular,
    regular_extension,
    restrict,
    validate_twist,
)

__all__ = [
    "AbelianEndomorphism",
    "ChainComplex",
    "ChainHomotopy",
    "ChainMap",
    "FgAbelianGroup",
    "FiniteCategory",
    "FiniteGroupTable",
    "GroupSummary",
    "IntegerMatrix",
    "NonSingularityCertificate",
    "OrderedComplex",
    "SimplicialSlice",
    "SmithDecomposition",
    "TwistedAbelianStructure",
    "TwistedFiniteGroupStructure",
    "TwistedFreeConstruction",
    "TwistedSliceStructure",
    "Word",
    "abelianize",
    "abelianized_structure",
    "check_simplicial_identities",
    "cokernel_summary",
    "cone_null_homotopy",
    "endomorphisms_commute",
    "full_simplex",
    "identity_twist",
    "induced_simplex_twist",
    "intersection",
    "is_automorphism",
    "is_nonsingular",
    "is_valid_endomorphism",
    "mayer_vietoris_check",
    "monotone_decomposition",
    "nerve_slice",
    "regular_extension",
    "restrict",
    "slice_chains",
    "smith_normal_form",
    "solve_in_lattice",
    "standard_simplex_slice",
    "twisted_group_chains",
    "twisted_product",
    "twisted_product_chains",
    "twisted_smash",
    "union",
    "untwisting_iso",
    "validate_category",
    "validate_complex",
    "validate_slice",
    "validate_twist",
    "verify_boundary_squared",
    "verify_bundle_local_triviality",
    "verify_cone_face_relations",
    "verify_null_homotopy",
]
