"""Invariant distances on the model domains.

Everything here is expressed through tanh of the distance, which is the
quantity the invariants consume.  Three independent routes are implemented
and cross-checked in the test suite:

* the Poincare distance on the unit disk,

      p(a, b) = artanh |a - b| / |1 - conj(a) b|,

* the Kobayashi distance on the punctured disk, in closed form

      tanh k(a, z) = sqrt( (t^2 + (log|z| - log a)^2)
                         / (t^2 + (log|z| + log a)^2) ),   t = Arg z,

  for 0 < a < 1 and Arg z taken in (-pi, pi], and independently through the
  exponential covering of the punctured disk by the left half-plane,

* the gauge identity tanh k_D(0, z) = l_D(z) on bounded balanced convex
  domains, which turns distances from the origin into gauge evaluations.

The closed form for the punctured disk descends from the half-plane distance

      tanh p(w1, w2) = |w1 - w2| / |w1 + conj(w2)|

through the covering map w -> exp(w): lifting a to log a and z to
log|z| + i Arg z, the principal branch already realises the minimum over the
deck transformations w -> w + 2 pi i k, so no minimisation is needed.  The
oracle below performs that minimisation anyway over |k| <= lift_range and is
kept deliberately independent as a cross-check.

Finally, slit_clearance packages the distance from a point of the radial
slit (-1, 0] to the positive-axis point a inside the slit disk: writing
A = -log a and parametrising the slit lift by x > 0,

      h(x) = ((x - A)^2 + pi^2) / ((x + A)^2 + pi^2)

is minimised at x* = sqrt(A^2 + pi^2), giving the certified clearance
radius artanh sqrt(h(x*)) around a inside the slit disk, together with the
weaker closed-form bound sqrt(h(x*)) >= pi^2 / (4 A x* + pi^2) > e^{-2A}.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .domains import (
    Domain,
    DomainError,
    RadiusValue,
    UnsupportedDomainError,
    as_point,
    contains,
    gauge_eval,
)


def poincare_distance(a: complex, b: complex) -> float:
    """Hyperbolic distance on the unit disk."""
    a, b = complex(a), complex(b)
    if abs(a) >= 1.0 or abs(b) >= 1.0:
        raise DomainError(f"points must lie in the unit disk, got {a}, {b}")
    num = abs(a - b)
    den = abs(1.0 - a.conjugate() * b)
    return math.atanh(num / den)


def _check_punctured_args(a: float, z: complex) -> tuple[float, complex]:
    a = float(a)
    z = complex(z)
    if not 0.0 < a < 1.0:
        raise DomainError(f"base point must be real in (0,1), got {a}")
    if not 0.0 < abs(z) < 1.0:
        raise DomainError(f"point must lie in the punctured disk, got {z}")
    return a, z


def kobayashi_punctured_disk(a: float, z: complex) -> float:
    """tanh of the Kobayashi distance k(a, z) on the punctured disk."""
    a, z = _check_punctured_args(a, z)
    theta = cmath.phase(z)  # Arg z in (-pi, pi]
    u = math.log(abs(z))
    la = math.log(a)
    num = theta * theta + (u - la) ** 2
    den = theta * theta + (u + la) ** 2
    return math.sqrt(num / den)


def kobayashi_punctured_disk_oracle(a: float, z: complex, lift_range: int = 20) -> float:
    """Same distance through the covering exp: {Re w < 0} -> punctured disk.

    Lifts both points to the left half-plane and minimises the half-plane
    distance over the deck transformations w -> w + 2 pi i k with
    |k| <= lift_range.  Slower than the closed form; used to validate it.
    """
    a, z = _check_punctured_args(a, z)
    if lift_range < 0:
        raise DomainError(f"lift range must be nonnegative, got {lift_range}")
    wa = complex(math.log(a), 0.0)
    wz = cmath.log(z)
    best = math.inf
    for k in range(-lift_range, lift_range + 1):
        w = wz + complex(0.0, 2.0 * math.pi * k)
        t = abs(wa - w) / abs(wa + w.conjugate())
        best = min(best, t)
    return best


def kobayashi_balanced_origin(domain: Domain, z) -> float:
    """tanh k_D(0, z) = l_D(z) on a bounded balanced convex domain."""
    if not (domain.is_balanced and domain.is_convex and domain.is_geometric):
        raise UnsupportedDomainError(
            f"origin distance needs a balanced convex domain, got {domain.spec()}"
        )
    pt = as_point(z, domain.dim)
    if not contains(domain, pt):
        raise DomainError(f"point {pt!r} lies outside {domain.spec()}")
    return gauge_eval(domain, pt)


def kobayashi_ball_membership(domain: Domain, center, r: RadiusValue, z) -> bool:
    """Is z inside the Kobayashi ball of radius r about the center?

    Supported exactly where a distance formula exists: balanced convex
    domains with the center at the origin, and the punctured disk with a
    real center in (0,1).
    """
    pt = as_point(z, domain.dim)
    if domain.kind == "punctured-disk":
        c = as_point(center, 1)[0]
        if c.imag != 0.0:
            raise UnsupportedDomainError(
                "punctured-disk ball membership needs a real center in (0,1)"
            )
        return kobayashi_punctured_disk(c.real, pt[0]) < r.tanh_value
    c = as_point(center, domain.dim)
    if any(ci != 0 for ci in c):
        raise UnsupportedDomainError(
            f"ball membership on {domain.spec()} is only computable from the origin"
        )
    return kobayashi_balanced_origin(domain, pt) < r.tanh_value


@dataclass(frozen=True)
class SlitClearanceResult:
    """Certified clearance around a on the positive axis of the slit disk.

    a            base point, 0 < a < 1
    log_scale    A = -log a
    x_star       minimiser sqrt(A^2 + pi^2) of h on (0, inf)
    min_h        h(x_star), the squared tanh-clearance
    tanh_clearance       sqrt(min_h)
    simple_lower_bound   pi^2 / (4 A x_star + pi^2), a closed-form minorant
                         of min_h that still dominates e^{-2A}
    """

    a: float
    log_scale: float
    x_star: float
    min_h: float
    tanh_clearance: float
    simple_lower_bound: float


def slit_h(a: float, x: float) -> float:
    """h(x) = ((x-A)^2 + pi^2) / ((x+A)^2 + pi^2) with A = -log a."""
    A = -math.log(a)
    pi2 = math.pi * math.pi
    return ((x - A) ** 2 + pi2) / ((x + A) ** 2 + pi2)


def slit_clearance(a: float) -> SlitClearanceResult:
    """Minimise h over the slit lift and package the certified clearance."""
    a = float(a)
    if not 0.0 < a < 1.0:
        raise DomainError(f"base point must lie in (0,1), got {a}")
    A = -math.log(a)
    pi2 = math.pi * math.pi
    x_star = math.sqrt(A * A + pi2)
    min_h = ((x_star - A) ** 2 + pi2) / ((x_star + A) ** 2 + pi2)
    simple = pi2 / (4.0 * A * x_star + pi2)
    return SlitClearanceResult(
        a=a,
        log_scale=A,
        x_star=x_star,
        min_h=min_h,
        tanh_clearance=math.sqrt(min_h),
        simple_lower_bound=simple,
    )
