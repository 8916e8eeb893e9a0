"""Certified intervals for the squeezing function, the Fridman invariant,
and their quotient.

Every returned value is a BoundInterval: a lower and upper bound in [0,1],
an exactness flag, and a chain of certificates saying where the bounds come
from.  The certificate kinds are deliberately coarse:

  ClosedForm        a formula valid on the whole domain variant
  MapWitness        an explicit injective map realising a lower bound
  ContainmentCheck  a verified inclusion of balls or images
  Monotonicity      a distance comparison through a domain inclusion
  ProductFormula    the inverse-square combination rule for products
  TheoremCitation   a named general fact (origin equality, homogeneity,
                    the quotient never exceeding one)

Exact values are produced where the literature pins the invariant down
(disk, ball, polydisk, homogeneous products, the squeezing function of the
punctured disk); everywhere else the interval is honest about the gap, and
unsupported queries degrade to [absent, 1] plus a warning rather than a
guess.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Any, Iterable, NamedTuple

from .certificates import (
    mobius_disk_witness,
    linear_scaling_witness,
    squeezing_lower_from_map,
    CIRCLE_GRID,
    CIRCLE_REFINE_TOL,
)
from .domains import (
    Domain,
    DomainError,
    Point,
    as_point,
    circumradius_bound,
    contains,
    inradius_bound,
)
from .metrics import slit_clearance

BOUND_SLACK = 1e-12

CERTIFICATE_KINDS = (
    "ClosedForm",
    "MapWitness",
    "ContainmentCheck",
    "Monotonicity",
    "ProductFormula",
    "TheoremCitation",
)


class InvariantViolationError(RuntimeError):
    """An internal consistency check failed; this signals a library bug."""


class UnsupportedBoundWarning(UserWarning):
    """Emitted when a query degrades to the trivial interval [absent, 1]."""


@dataclass(frozen=True)
class Certificate:
    """One reason backing a bound.  detail is free-form but JSON-friendly."""

    kind: str
    detail: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in CERTIFICATE_KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")


@dataclass(frozen=True)
class BoundInterval:
    """Lower/upper bounds in [0,1] with supporting certificates.

    exact means lower == upper and the common value is known to be the
    invariant, not merely an enclosure.
    """

    lower: float | None
    upper: float | None
    exact: bool = False
    certificates: tuple[Certificate, ...] = ()

    def __post_init__(self):
        for name, v in (("lower", self.lower), ("upper", self.upper)):
            if v is not None and not -BOUND_SLACK <= v <= 1.0 + BOUND_SLACK:
                raise InvariantViolationError(f"{name} bound {v} escapes [0,1]")
        if self.lower is not None and self.upper is not None:
            if self.lower > self.upper + BOUND_SLACK:
                raise InvariantViolationError(
                    f"crossed interval: lower {self.lower} > upper {self.upper}"
                )
        if self.exact:
            if self.lower is None or self.lower != self.upper:
                raise InvariantViolationError(
                    f"exact interval must have equal endpoints, got "
                    f"[{self.lower}, {self.upper}]"
                )

    @classmethod
    def exact_value(cls, value: float, *certs: Certificate) -> "BoundInterval":
        return cls(lower=value, upper=value, exact=True, certificates=tuple(certs))

    @classmethod
    def of_bounds(
        cls, lower: float | None, upper: float | None, *certs: Certificate
    ) -> "BoundInterval":
        return cls(lower=lower, upper=upper, exact=False, certificates=tuple(certs))

    @property
    def width(self) -> float | None:
        if self.lower is None or self.upper is None:
            return None
        return self.upper - self.lower


def _trivial(domain: Domain, what: str) -> BoundInterval:
    warnings.warn(
        f"no {what} bound implemented for {domain.spec()}; returning [absent, 1]",
        UnsupportedBoundWarning,
        stacklevel=3,
    )
    return BoundInterval.of_bounds(None, 1.0)


def _checked_point(domain: Domain, z) -> Point | None:
    if not domain.is_geometric:
        return None
    pt = as_point(z, domain.dim)
    if not contains(domain, pt):
        raise DomainError(f"point {pt!r} lies outside {domain.spec()}")
    return pt


def _is_origin(pt: Point | None) -> bool:
    return pt is not None and all(c == 0 for c in pt)


def homogeneous_constant(domain: Domain) -> float | None:
    """The constant value of the squeezing function, when homogeneity and a
    closed form pin it down; None otherwise."""
    if domain.kind in ("disk", "ball"):
        return 1.0
    if domain.kind == "polydisk":
        return polydisk_constants(domain.dim).rho
    if domain.kind == "named":
        return domain.rho
    if domain.kind == "product":
        parts = [homogeneous_constant(f) for f in domain.factors]
        if any(p is None for p in parts):
            return None
        return product_constant([p for p in parts if p is not None])
    return None


def _homogeneity_certs(domain: Domain, pt: Point | None, rho: float) -> list[Certificate]:
    certs: list[Certificate] = []
    if domain.kind in ("disk", "ball"):
        certs.append(
            Certificate(
                "ClosedForm",
                {"statement": "automorphisms act transitively; value 1 everywhere"},
            )
        )
    elif domain.kind == "polydisk":
        certs.append(
            Certificate(
                "ClosedForm",
                {"statement": "n^(-1/2) on the n-dimensional polydisk", "n": domain.dim},
            )
        )
    elif domain.kind == "named":
        certs.append(
            Certificate(
                "ClosedForm",
                {"source": "user-supplied constant", "name": domain.name, "value": rho},
            )
        )
    else:
        certs.append(
            Certificate(
                "ProductFormula",
                {
                    "statement": "rho = (sum rho_i^-2)^(-1/2) over the factors",
                    "factor_constants": [homogeneous_constant(f) for f in domain.factors],
                },
            )
        )
    if pt is None or not _is_origin(pt):
        certs.append(
            Certificate(
                "TheoremCitation",
                {
                    "statement": "homogeneous domain: an automorphism moves the "
                    "base point to the origin, so the value is the origin value"
                },
            )
        )
    return certs


def squeezing_value(domain: Domain, z) -> BoundInterval:
    """Best available enclosure of the squeezing function at z."""
    pt = _checked_point(domain, z)

    rho = homogeneous_constant(domain)
    if rho is not None:
        return BoundInterval.exact_value(rho, *_homogeneity_certs(domain, pt, rho))

    if domain.kind == "punctured-disk":
        assert pt is not None
        a = abs(pt[0])
        return BoundInterval.exact_value(
            a,
            Certificate("ClosedForm", {"formula": "s(z) = |z| on the punctured disk"}),
        )

    if domain.kind == "annulus":
        assert pt is not None
        z0 = pt[0]
        witness = mobius_disk_witness(z0)
        lb = squeezing_lower_from_map(domain, z0, witness)
        return BoundInterval.of_bounds(
            lb,
            1.0,
            Certificate(
                "MapWitness",
                {
                    "witness": witness.describe(),
                    "statement": "image omits a closed disk behind the Moebius "
                    "image of the inner circle",
                    "grid": CIRCLE_GRID,
                    "refine_tol": CIRCLE_REFINE_TOL,
                    "value": lb,
                },
            ),
        )

    if domain.is_balanced and domain.is_convex and _is_origin(pt):
        circ = circumradius_bound(domain)
        inr = inradius_bound(domain)
        if circ is not None and inr is not None:
            radius_sup, exact_circ = circ
            witness = linear_scaling_witness(1.0 / radius_sup, domain.dim)
            lb = squeezing_lower_from_map(domain, pt, witness)
            return BoundInterval.of_bounds(
                lb,
                1.0,
                Certificate(
                    "ContainmentCheck",
                    {
                        "statement": "inradius(D)/circumradius(D) after scaling "
                        "the domain into the unit ball",
                        "inradius": inr,
                        "circumradius": radius_sup,
                        "circumradius_exact": exact_circ,
                        "witness": witness.describe(),
                    },
                ),
            )

    return _trivial(domain, "squeezing")


def fridman_value(domain: Domain, z) -> BoundInterval:
    """Best available enclosure of the Fridman invariant (tanh form) at z."""
    pt = _checked_point(domain, z)

    if domain.kind in ("disk", "ball"):
        return BoundInterval.exact_value(
            1.0,
            Certificate(
                "ClosedForm",
                {
                    "statement": "Kobayashi balls are the whole domain in the "
                    "limit; the identity witness already exhausts it"
                },
            ),
        )

    rho = homogeneous_constant(domain)
    if rho is not None:
        certs = _homogeneity_certs(domain, pt, rho)
        certs.append(
            Certificate(
                "TheoremCitation",
                {
                    "statement": "squeezing and Fridman invariants agree at the "
                    "origin of a bounded balanced convex domain"
                },
            )
        )
        return BoundInterval.exact_value(rho, *certs)

    if domain.kind in ("punctured-disk", "annulus"):
        assert pt is not None
        a = abs(pt[0])
        if domain.kind == "annulus":
            assert domain.inner_radius is not None
        clearance = slit_clearance(a)
        certs = [
            Certificate(
                "ContainmentCheck",
                {
                    "statement": "Kobayashi ball of tanh-radius <= clearance "
                    "avoids the radial slit, hence lies in the image of the "
                    "Riemann map of the slit domain",
                    "A": clearance.log_scale,
                    "x_star": clearance.x_star,
                    "min_h": clearance.min_h,
                    "tanh_clearance": clearance.tanh_clearance,
                    "simple_lower_bound": clearance.simple_lower_bound,
                    "note": "the exact value is not known; the upper bound 1 is trivial",
                },
            )
        ]
        if pt[0] != a:
            certs.append(
                Certificate(
                    "TheoremCitation",
                    {"statement": "rotation invariance reduces to a real base point", "rotation_arg": math.atan2(pt[0].imag, pt[0].real)},
                )
            )
        if domain.kind == "annulus":
            certs.insert(
                0,
                Certificate(
                    "Monotonicity",
                    {
                        "statement": "the annulus sits inside the punctured disk, "
                        "so its Kobayashi distance dominates; the slit annulus "
                        "is simply connected and supplies the witness"
                    },
                ),
            )
        return BoundInterval.of_bounds(clearance.tanh_clearance, 1.0, *certs)

    if domain.is_balanced and domain.is_convex and _is_origin(pt):
        s = squeezing_value(domain, z)
        if s.lower is not None and s.certificates:
            certs = (
                Certificate(
                    "TheoremCitation",
                    {"statement": "the Fridman invariant dominates the squeezing function"},
                ),
            ) + s.certificates
            return BoundInterval.of_bounds(s.lower, 1.0, *certs)

    return _trivial(domain, "Fridman")


def quotient_bounds(domain: Domain, z) -> BoundInterval:
    """Enclosure of the quotient m = s/e, never exceeding one."""
    pt = _checked_point(domain, z)

    balanced_convex = domain.is_balanced and domain.is_convex
    if balanced_convex and (_is_origin(pt) or domain.is_homogeneous):
        certs = [
            Certificate(
                "TheoremCitation",
                {
                    "statement": "squeezing and Fridman invariants agree at the "
                    "origin of a bounded balanced convex domain, so the quotient is 1"
                },
            )
        ]
        if not _is_origin(pt):
            certs.append(
                Certificate(
                    "TheoremCitation",
                    {"statement": "homogeneity transports the origin value everywhere"},
                )
            )
        return BoundInterval.exact_value(1.0, *certs)

    if domain.kind == "named":
        return BoundInterval.exact_value(
            1.0,
            Certificate(
                "TheoremCitation",
                {
                    "statement": "named factors are taken to be homogeneous with "
                    "a common squeezing/Fridman constant"
                },
            ),
        )

    s = squeezing_value(domain, z)
    e = fridman_value(domain, z)
    lower = None
    if s.lower is not None and e.upper is not None and e.upper > 0.0:
        lower = s.lower / e.upper
    upper = None
    capped = False
    if s.upper is not None and e.lower is not None and e.lower > 0.0:
        upper = s.upper / e.lower
        if upper > 1.0:
            upper, capped = 1.0, True
    elif s.upper is not None:
        upper, capped = 1.0, True

    certs = [
        Certificate(
            "TheoremCitation",
            {
                "statement": "the squeezing function never exceeds the Fridman "
                "invariant, so the quotient lies in (0, 1]",
                "division": "lower = s.lower/e.upper, upper = s.upper/e.lower",
                "capped_at_one": capped,
            },
        )
    ]
    certs.extend(s.certificates)
    certs.extend(e.certificates)
    exact = s.exact and e.exact and lower is not None and lower == upper
    if exact:
        return BoundInterval.exact_value(lower, *certs)  # type: ignore[arg-type]
    return BoundInterval.of_bounds(lower, upper, *certs)


def product_constant(rhos: Iterable[float]) -> float:
    """Combine factor constants: rho = (sum rho_i^-2)^(-1/2).

    A single factor passes through unchanged; the combined value never
    exceeds the smallest input.
    """
    values = [float(r) for r in rhos]
    if not values:
        raise DomainError("product constant needs at least one factor")
    for r in values:
        if not 0.0 < r <= 1.0:
            raise DomainError(f"factor constants must lie in (0,1], got {r}")
    if len(values) == 1:
        return values[0]
    if all(r == values[0] for r in values):
        # keep rho / sqrt(m) exact instead of round-tripping through r^-2
        return values[0] / math.sqrt(len(values))
    return sum(r ** -2.0 for r in values) ** -0.5


class PolydiskConstants(NamedTuple):
    rho: float
    h_const: float
    degenerate: bool


def polydisk_constants(n: int) -> PolydiskConstants:
    """(rho, h) for the n-dimensional polydisk.

    rho = n^(-1/2) and h = 2 / log((sqrt n + 1)/(sqrt n - 1)); the pair
    satisfies h = 1/artanh(rho).  n = 1 is the disk: rho = 1 and the
    degenerate h = 0 convention of radius_convert.
    """
    if int(n) != n or n < 1:
        raise DomainError(f"polydisk dimension must be a positive integer, got {n}")
    n = int(n)
    if n == 1:
        return PolydiskConstants(rho=1.0, h_const=0.0, degenerate=True)
    s = math.sqrt(n)
    return PolydiskConstants(
        rho=n ** -0.5,
        h_const=2.0 / math.log((s + 1.0) / (s - 1.0)),
        degenerate=False,
    )


def kubota_rho(domain: Domain, sample_points: Iterable | None = None) -> BoundInterval:
    """Supremum of the squeezing function over the domain.

    Homogeneous domains: the squeezing function is constant, so the sup is
    exact.  Otherwise a sample set must be supplied and the result is the
    best certified lower bound found, paired with the trivial upper bound 1.
    """
    rho = homogeneous_constant(domain)
    if rho is not None:
        return BoundInterval.exact_value(
            rho,
            Certificate(
                "TheoremCitation",
                {"statement": "squeezing is constant on a homogeneous domain"},
            ),
            *_homogeneity_certs(domain, None, rho),
        )
    if sample_points is None:
        raise DomainError(
            f"{domain.spec()} is not homogeneous; supply sample points for the sup"
        )
    best = None
    count = 0
    for z in sample_points:
        count += 1
        s = squeezing_value(domain, z)
        if s.lower is not None and (best is None or s.lower > best):
            best = s.lower
    if count == 0:
        raise DomainError("empty sample set")
    return BoundInterval.of_bounds(
        best,
        1.0,
        Certificate(
            "ContainmentCheck",
            {
                "statement": "sup of certified pointwise lower bounds over the samples",
                "samples": count,
            },
        ),
    )


RESERVED_NAMES = frozenset(
    {"disk", "ball", "polydisk", "punctured-disk", "annulus", "ellipsoid", "product"}
)


def load_constants(text: str) -> dict[str, float]:
    """Parse a constants table: one 'name value' pair per line.

    Blank lines and '#' comments are ignored.  Values must lie in (0,1];
    names must not shadow the built-in domain keywords.
    """
    table: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DomainError(
                f"constants line {lineno}: expected 'name value', got {raw!r}"
            )
        name, value = parts
        if name in RESERVED_NAMES:
            raise DomainError(
                f"constants line {lineno}: {name!r} shadows a built-in domain"
            )
        if name in table:
            raise DomainError(
                f"constants line {lineno}: duplicate name {name!r}"
            )
        try:
            rho = float(value)
        except ValueError:
            raise DomainError(
                f"constants line {lineno}: {value!r} is not a number"
            ) from None
        if not 0.0 < rho <= 1.0:
            raise DomainError(
                f"constants line {lineno}: constant must lie in (0,1], got {rho}"
            )
        table[name] = rho
    return table
