"""graycal: finite scaled simplicial sets, Gray products and their certificates."""

__version__ = "0.1.0"

from .simplicial import (
    FiniteSimplicialSet,
    MonotoneMap,
    ProductComplex,
    PushoutComplex,
    Simplex,
    boundary_delta,
    collapse_edge,
    delta,
    disjoint_union,
    empty_complex,
    enumerate_simplices,
    horn,
    nondeg,
    opposite,
    point,
    product,
    pushout,
    quotient_horn,
    quotient_simplex,
    standard_object,
    subcomplex,
    validate_complex,
)
from .maps import SSetMap, count_maps, enumerate_maps, identity_sset_map
from .canonical import canonical_serialization, digest, isomorphic
from .scaled import (
    ScaledMap,
    ScaledSet,
    core,
    is_scaled_map,
    opposite_scaled,
    saturate,
    scale_flat,
    scale_sharp,
)
from .invertibility import EdgeVerdict, check_invertible, replay_witness
from .homs import HomComplex, hom_complex
from .anodyne import (
    AnodyneCertificate,
    CertStep,
    GeneratorInstance,
    check_extension,
    generators_up_to,
    is_bicategory_up_to,
    verify_certificate,
)
from .filtrations import (
    case_B_pushouts,
    certify_lemma1,
    certify_lemma2,
    filtration_case_A,
    filtration_case_A_transposed,
    filtration_case_C,
)
from .twocat import (
    NormalOplaxFunctor,
    TwoCategory,
    compose_oplax,
    enumerate_oplax_functors,
    identity_oplax,
    validate_oplax,
    validate_two_category,
)
from .nerves import NerveComplex, duskin_nerve, oplax_nerve, oplax_scaling
from .gray import (
    check_associativity,
    check_colimit_distribution,
    check_duality,
    fun_gray,
    gray,
)
from .universal import (
    OplaxVerdict,
    TriangleClasses,
    WitnessReport,
    build_theorem_witness,
    classify_oplax_functor,
    triangle_classes,
)
