"""Exact verification and construction of Z2-graded binary-ternary algebras."""

from .errors import (
    BadArity,
    ConflictError,
    ConstraintViolation,
    DimensionMismatch,
    DomainError,
    EvennessViolation,
    HomlyError,
    MapsDoNotCommute,
    MissingOperation,
    NoConstructionPath,
    NonIdentityTwist,
    NotEndomorphism,
    NotHomLie,
    NotHomogeneous,
    ParseError,
    PoleError,
    UnknownEntry,
    ValidationError,
)
from .field import (
    Polynomial,
    RationalFunction,
    Scalar,
    ScalarDomain,
    format_polynomial,
    format_scalar,
    parse_scalar,
    polynomial_gcd,
    scalar_add,
    scalar_div,
    scalar_eval,
    scalar_mul,
)
from .superspace import (
    LinearMap,
    SuperBasis,
    format_vector,
    is_zero_vector,
    parity_of,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
)
from .tensorops import (
    Algebra,
    BinaryOp,
    TernaryOp,
    binary_from_entries,
    eval2,
    eval3,
    evaluate_algebra,
    lift_algebra,
    op_equal,
    outer2,
    outer3,
    ternary_from_entries,
)
from .reports import CrossCheckReport, IdentityId, Report, TableDiff, Violation
from .axioms import (
    PROFILES,
    check_hly,
    check_hlts,
    check_hom_assoc,
    check_hom_jacobi,
    check_hom_lie,
    check_lie,
    check_ly,
    check_nambu,
    check_skew2,
    check_skew3,
    check_sts,
    cyclic_core_residual,
    identity_residual,
    is_endomorphism,
    is_multiplicative,
    super_jacobian,
)
from .constructions import (
    derived2,
    derived3,
    derived_bt,
    hly_from_homlie,
    ly_from_malcev,
    sts_from_alg,
    supercommutator,
    yau_twist,
)
from .catalog import CatalogEntry, Parameter, cross_check, instantiate, list_entries
from .document import (
    algebra_from_document,
    algebra_to_document,
    load_algebra,
    save_algebra,
)

__version__ = "0.1.0"
