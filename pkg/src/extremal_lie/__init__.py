"""Exact computations for Lie algebras generated by extremal elements.

Universal sandwich algebras L_r and their associative companions R_r,
Chevalley algebras of all types with extremality / bilinear-form / radical
machinery, the two- and three-generator classification, minimal extremal
generation certificates, and root-group identity checks -- all over the
rationals or GF(p) with p an odd prime, all in exact arithmetic.
"""

from .scalars import (
    QQ,
    GF,
    CharacteristicTwoUnsupported,
    Field,
    NotPrime,
    Scalar,
    field_create,
    sqrt,
)
from .freelie import (
    FreeLieElement,
    LyndonWord,
    bracket,
    generator,
    lyndon_basis,
    monomial,
)
from .nilquot import (
    AssocDims,
    GradedQuotient,
    assoc_dims_via_embedding,
    check_subalgebra_embedding,
    free_nilpotent_quotient,
    sandwich_algebra,
    spanning_set_check_4gen,
)
from .liealg import (
    AlgebraElement,
    BilinearForm,
    LieAlgebra,
    Subspace,
    center,
    derived_series,
    direct_sum,
    direct_sum_orthogonality_check,
    extremal_form,
    fourth_power_check,
    ideal_generated,
    is_extremal,
    killing_form,
    lower_central_series,
    phi_spectrum_check,
    quotient_algebra,
    radical_of_form,
    sandwich_span_check,
    solvable_radical,
    structural_subspaces,
    subalgebra_generated,
)
from .rootdata import (
    CONVENTION_VERSION,
    ChevalleyConstants,
    InvalidRank,
    RootSystem,
    chevalley_constants,
    root_system,
)
from .chevalley import (
    Automorphism,
    ChevalleyAlgebra,
    chevalley_algebra,
    dimension_lower_bound,
    exp_automorphism,
    extremal_spanning_set,
    long_root_extremality_check,
    mingen_certify,
    mingen_generators,
    minimal_generator_count,
    natural_representation,
    root_exponential,
    short_root_decomposition_check,
    simple_plus_lowest_generation_check,
    verify_generation,
)
from .smallgen import (
    NormalizationTrace,
    TriangleParams,
    build_M,
    exp_transform_params,
    normalize,
    scale_params,
    sl3_example,
    two_gen_classify,
    verify_3gen_structure,
)
from .rootgroups import (
    RootGroupElement,
    chain_nonexistence_probe,
    projective_line_check,
    strongcomm_check,
    verify_abstract_root_properties,
)

__version__ = "1.0.0"
