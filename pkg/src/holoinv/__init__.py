"""Certified bounds for the squeezing function s_D, the Fridman invariant
e_D, and their quotient m_D = s_D/e_D on model domains.

The package computes exact values where closed forms exist (disk, ball,
polydisk, homogeneous products, the squeezing function of the punctured
disk), certified lower/upper bounds elsewhere (annuli, the Fridman
invariant of the punctured disk, balanced convex domains at the origin),
and every bound carries certificates naming the map, inclusion, or theorem
it rests on.  A FastAPI service wraps the library; the bundled CLI is a
thin client for it.
"""

__version__ = "0.1.0"

from .domains import (
    DimensionMismatchError,
    Domain,
    DomainError,
    Gauge,
    RadiusValue,
    UnsupportedDomainError,
    annulus,
    as_point,
    balanced_convex,
    circumradius_bound,
    contains,
    ellipsoid,
    ellipsoid_gauge,
    euclidean_gauge,
    gauge_eval,
    inradius_bound,
    named_factor,
    polydisk,
    product,
    punctured_disk,
    radius_convert,
    radius_convert_inverse,
    sample_triangle_inequality,
    sup_gauge,
    unit_ball,
    unit_disk,
)
from .metrics import (
    SlitClearanceResult,
    kobayashi_balanced_origin,
    kobayashi_ball_membership,
    kobayashi_punctured_disk,
    kobayashi_punctured_disk_oracle,
    poincare_distance,
    slit_clearance,
    slit_h,
)
from .certificates import (
    CheckResult,
    MapWitness,
    OriginEqualityReport,
    check_injectivity,
    golden_section_min,
    inclusion_witness,
    linear_scaling_witness,
    min_abs_on_circle,
    mobius_disk_witness,
    origin_equality_witness,
    schwarz_property_check,
    slit_disk_riemann_map,
    squeezing_lower_from_map,
    verify_fridman_certificate,
)
from .invariants import (
    BoundInterval,
    Certificate,
    InvariantViolationError,
    PolydiskConstants,
    UnsupportedBoundWarning,
    fridman_value,
    homogeneous_constant,
    kubota_rho,
    load_constants,
    polydisk_constants,
    product_constant,
    quotient_bounds,
    squeezing_value,
)
from .stability import (
    AnnulusQuotientReport,
    ExhaustionSequence,
    SweepRow,
    TrajectoryPoint,
    annulus_quotient_report,
    convergence_assert,
    e_lower_trajectory,
    s_lower_trajectory,
    slit_sweep,
)
from .parsing import ParseError, parse_domain, parse_point

__all__ = [
    "__version__",
    # domains
    "Domain",
    "Gauge",
    "RadiusValue",
    "DomainError",
    "UnsupportedDomainError",
    "DimensionMismatchError",
    "unit_disk",
    "unit_ball",
    "polydisk",
    "punctured_disk",
    "annulus",
    "balanced_convex",
    "ellipsoid",
    "product",
    "named_factor",
    "euclidean_gauge",
    "sup_gauge",
    "ellipsoid_gauge",
    "gauge_eval",
    "contains",
    "as_point",
    "inradius_bound",
    "circumradius_bound",
    "radius_convert",
    "radius_convert_inverse",
    "sample_triangle_inequality",
    # metrics
    "poincare_distance",
    "kobayashi_punctured_disk",
    "kobayashi_punctured_disk_oracle",
    "kobayashi_balanced_origin",
    "kobayashi_ball_membership",
    "SlitClearanceResult",
    "slit_clearance",
    "slit_h",
    # certificates
    "MapWitness",
    "CheckResult",
    "OriginEqualityReport",
    "mobius_disk_witness",
    "linear_scaling_witness",
    "inclusion_witness",
    "slit_disk_riemann_map",
    "check_injectivity",
    "verify_fridman_certificate",
    "squeezing_lower_from_map",
    "schwarz_property_check",
    "origin_equality_witness",
    "min_abs_on_circle",
    "golden_section_min",
    # invariants
    "BoundInterval",
    "Certificate",
    "InvariantViolationError",
    "UnsupportedBoundWarning",
    "PolydiskConstants",
    "squeezing_value",
    "fridman_value",
    "quotient_bounds",
    "product_constant",
    "polydisk_constants",
    "homogeneous_constant",
    "kubota_rho",
    "load_constants",
    # stability
    "ExhaustionSequence",
    "TrajectoryPoint",
    "SweepRow",
    "AnnulusQuotientReport",
    "s_lower_trajectory",
    "e_lower_trajectory",
    "convergence_assert",
    "annulus_quotient_report",
    "slit_sweep",
    # parsing
    "ParseError",
    "parse_domain",
    "parse_point",
]
