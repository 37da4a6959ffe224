"""Exact computational algebra for monomial Hopf superalgebras,
Harish-Chandra pairs over G_a^k x D, their representation categories, and
smoothness of super-commutative presentations."""

from .fields import (
    Field,
    FieldElement,
    FunctionField,
    GF,
    QQ,
    QuadraticField,
)
from .chargroup import Character, GroupDescriptor, LieFunctional, Subgroup, subgroup_kernel
from .hopfcore import (
    MonomialHopfSuperalgebra,
    build_algebra,
    coradical,
    find_grouplikes,
    find_primitives,
    find_skew_primitives,
    group_algebra,
    validate_gx,
    verify_hopf_axioms,
)
from .hcp import (
    GXData,
    HarishChandraPair,
    SubPair,
    abelian_normal_form,
    center_even,
    check_normal,
    check_pair,
    classify_iso,
    is_nilpotent,
    nilpotency_conditions,
    normal_chain,
    quotient_pair,
    splitting_counterexample,
    super_diagonalizable,
    unipotent_radical_trivial,
)
from .dgxrep import (
    IndecompLabel,
    Supercomodule,
    decompose,
    dual_pairing,
    ext1,
    socle,
    standard_object,
)
from .smoothcheck import (
    SuperAlgebraPresentation,
    compute_gr,
    hochschild_ealpha,
    hopf_smooth_reduction,
    is_regular,
    is_smooth,
)

__version__ = "0.1.0"
