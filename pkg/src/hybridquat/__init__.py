"""Exact arithmetic for hybrid numbers, quaternions and hybrid quaternions,
with a Horadam sequence engine, Binet evaluators over Q(sqrt(D)), and a
mechanical identity auditor."""

from .audit import (
    AUDIT_SEQUENCES,
    CATALOG,
    DEFAULT_SPAN,
    FirstFailure,
    IdentityReport,
    audit_all,
    check_binet,
    check_cassini,
    check_conjugate_relations,
    check_fibonacci_relations,
    check_lucas_relations,
    reports_to_json,
)
from .errors import (
    DivisionByZero,
    HybridQuatError,
    MixedDiscriminant,
    NegativeIndexWithZeroQ,
    RationalRoots,
    RepeatedRoot,
)
from .hybrid import (
    EPS,
    HH,
    HI,
    ONE,
    Hybrid,
    hybrid_character,
    hybrid_conj,
    hybrid_mul,
)
from .hybrid_quaternion import (
    CANONICAL_PAIRS,
    COLUMN_NAMES,
    HYBRID_UNITS,
    QUAT_UNITS,
    HybridQuaternion,
    ScalarVectorForm,
    hq_cross,
    hq_dot,
    hq_mul,
    mul_via_scalar_vector,
    parse_hybrid_quaternion,
    scalar_vector_form,
)
from .quaternion import (
    I,
    J,
    K,
    QONE,
    Quaternion,
    quat_conj,
    quat_mul,
    quat_norm_sq,
)
from .scalars import (
    QuadExt,
    Rational,
    make_quad_roots,
    parse_scalar,
    quad_inv,
    quad_mul,
)
from .sequences import (
    FERMAT,
    FIBONACCI,
    JACOBSTHAL,
    JACOBSTHAL_LUCAS,
    LUCAS,
    MERSENNE,
    PELL,
    PELL_LUCAS,
    REGISTRY,
    BinetData,
    HoradamParams,
    SequenceId,
    binet_data,
    binet_hybrid,
    binet_hybrid_quaternion,
    binet_quaternion,
    binet_scalar,
    generalized_fibonacci,
    generalized_lucas,
    horadam,
    lift_hybrid,
    lift_hybrid_quaternion,
    lift_quaternion,
    window,
)

__version__ = "0.1.0"

__all__ = [
    "AUDIT_SEQUENCES",
    "CANONICAL_PAIRS",
    "CATALOG",
    "COLUMN_NAMES",
    "DEFAULT_SPAN",
    "DivisionByZero",
    "EPS",
    "FERMAT",
    "FIBONACCI",
    "FirstFailure",
    "HH",
    "HI",
    "HYBRID_UNITS",
    "Hybrid",
    "HybridQuatError",
    "HybridQuaternion",
    "HoradamParams",
    "I",
    "IdentityReport",
    "J",
    "JACOBSTHAL",
    "JACOBSTHAL_LUCAS",
    "K",
    "LUCAS",
    "MERSENNE",
    "MixedDiscriminant",
    "NegativeIndexWithZeroQ",
    "ONE",
    "PELL",
    "PELL_LUCAS",
    "QONE",
    "QUAT_UNITS",
    "QuadExt",
    "Quaternion",
    "REGISTRY",
    "Rational",
    "RationalRoots",
    "RepeatedRoot",
    "BinetData",
    "ScalarVectorForm",
    "SequenceId",
    "audit_all",
    "binet_data",
    "binet_hybrid",
    "binet_hybrid_quaternion",
    "binet_quaternion",
    "binet_scalar",
    "check_binet",
    "check_cassini",
    "check_conjugate_relations",
    "check_fibonacci_relations",
    "check_lucas_relations",
    "generalized_fibonacci",
    "generalized_lucas",
    "horadam",
    "hq_cross",
    "hq_dot",
    "hq_mul",
    "hybrid_character",
    "hybrid_conj",
    "hybrid_mul",
    "lift_hybrid",
    "lift_hybrid_quaternion",
    "lift_quaternion",
    "make_quad_roots",
    "mul_via_scalar_vector",
    "parse_hybrid_quaternion",
    "parse_scalar",
    "quad_inv",
    "quad_mul",
    "quat_conj",
    "quat_mul",
    "quat_norm_sq",
    "reports_to_json",
    "scalar_vector_form",
    "window",
]
