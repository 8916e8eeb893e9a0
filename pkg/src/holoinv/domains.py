"""Model domains and their Minkowski gauges.

A balanced domain D (closed under multiplication by unimodular-or-smaller
scalars) is the unit sublevel set of its gauge

    l_D(z) = inf{ t > 0 : z/t in D },

so membership, distances from the origin, and scaling arguments all reduce
to gauge evaluations.  This module holds the domain descriptors used by the
rest of the library, gauge evaluation (closed form where available, bisection
for implicit gauges such as complex ellipsoids), membership tests, and the
conversion between the two radius representations r and tanh(r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

Point = tuple[complex, ...]

GAUGE_BISECTION_TOL = 1e-12
GAUGE_BISECTION_MAX_ITER = 200


class DomainError(ValueError):
    """A numeric argument lies outside the domain of the operation."""


class UnsupportedDomainError(DomainError):
    """The requested operation is not defined for this domain variant."""


class DimensionMismatchError(DomainError):
    """Point dimension does not match the domain dimension."""


def as_point(z, dim: int | None = None) -> Point:
    """Coerce a scalar or sequence of numbers to a tuple of complex.

    Raises DimensionMismatchError when ``dim`` is given and does not match.
    """
    if isinstance(z, (int, float, complex)):
        pt: Point = (complex(z),)
    else:
        pt = tuple(complex(c) for c in z)
    if dim is not None and len(pt) != dim:
        raise DimensionMismatchError(
            f"expected a point of dimension {dim}, got dimension {len(pt)}"
        )
    for c in pt:
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise DomainError(f"non-finite coordinate in point {pt!r}")
    return pt


@dataclass(frozen=True)
class Gauge:
    """Evaluator for the Minkowski function of a balanced domain.

    ``evaluate`` must be absolutely homogeneous (evaluate(lam*z) =
    |lam|*evaluate(z)) and vanish only at the origin for bounded domains.
    ``exponents`` is set for complex-ellipsoid gauges and enables the
    certified inradius/circumradius bounds used by map certificates.
    """

    evaluate: Callable[[Point], float]
    dim: int
    label: str = "gauge"
    exponents: tuple[float, ...] | None = None

    def __call__(self, z) -> float:
        return self.evaluate(as_point(z, self.dim))


def euclidean_gauge(dim: int) -> Gauge:
    def evaluate(z: Point) -> float:
        return math.sqrt(sum((c.real * c.real + c.imag * c.imag) for c in z))

    return Gauge(evaluate=evaluate, dim=dim, label=f"euclidean:{dim}")


def sup_gauge(dim: int) -> Gauge:
    def evaluate(z: Point) -> float:
        return max(abs(c) for c in z)

    return Gauge(evaluate=evaluate, dim=dim, label=f"sup:{dim}")


def ellipsoid_gauge(exponents: Sequence[float]) -> Gauge:
    """Gauge of the complex ellipsoid { sum |z_i|^(2 p_i) < 1 }.

    The gauge value t solves sum |z_i/t|^(2 p_i) = 1; except on coordinate
    axes there is no closed form, so t is found by bisection on the defining
    equation (absolute tolerance 1e-12, at most 200 iterations).  Exponents
    below 1/2 are rejected: that is the convexity threshold, and convexity of
    the sublevel set is what downstream distance formulas rely on.  Convexity
    itself is not proved here; see sample_triangle_inequality.
    """
    p = tuple(float(e) for e in exponents)
    if not p:
        raise DomainError("ellipsoid gauge needs at least one exponent")
    if any(e < 0.5 for e in p):
        raise DomainError(f"ellipsoid exponents must be >= 1/2, got {p}")
    n = len(p)
    # At t = max|z_i| the defining sum is >= 1; at t = n^(1/(2 p_min)) max|z_i|
    # every term is <= 1/n, so the root is bracketed.
    upper_factor = n ** (1.0 / (2.0 * min(p)))

    def residual(z: Point, t: float) -> float:
        return sum(abs(c / t) ** (2.0 * e) for c, e in zip(z, p)) - 1.0

    def evaluate(z: Point) -> float:
        m = max(abs(c) for c in z)
        if m == 0.0:
            return 0.0
        lo, hi = m, m * upper_factor
        t = 0.5 * (lo + hi)
        for _ in range(GAUGE_BISECTION_MAX_ITER):
            t = 0.5 * (lo + hi)
            r = residual(z, t)
            if abs(r) <= GAUGE_BISECTION_TOL:
                return t
            if r > 0.0:
                lo = t
            else:
                hi = t
        return t

    label = "ellipsoid:" + ",".join(f"{e:g}" for e in p)
    return Gauge(evaluate=evaluate, dim=n, label=label, exponents=p)


def sample_triangle_inequality(
    gauge: Gauge, samples: int = 1000, seed: int = 0, tol: float = 1e-10
) -> list[tuple[Point, Point]]:
    """Sample pairs and report triangle-inequality violations of the gauge.

    Returns the offending pairs (empty list means no violation found).  This
    is the library's stand-in for a convexity proof.
    """
    import numpy as np

    rng = np.random.default_rng(seed)
    bad: list[tuple[Point, Point]] = []
    for _ in range(samples):
        x = tuple(complex(a, b) for a, b in rng.uniform(-1, 1, size=(gauge.dim, 2)))
        y = tuple(complex(a, b) for a, b in rng.uniform(-1, 1, size=(gauge.dim, 2)))
        s = tuple(a + b for a, b in zip(x, y))
        if gauge.evaluate(s) > gauge.evaluate(x) + gauge.evaluate(y) + tol:
            bad.append((x, y))
    return bad


@dataclass(frozen=True)
class Domain:
    """Tagged descriptor of a supported domain.

    Variants: disk, ball, polydisk, punctured-disk, annulus, balanced-convex
    (arbitrary gauge), product, and named (a user-supplied homogeneous factor
    known only through its squeezing constant, loaded from a constants file).
    """

    kind: str
    dim: int
    inner_radius: float | None = None
    gauge: Gauge | None = None
    factors: tuple["Domain", ...] = ()
    name: str | None = None
    rho: float | None = None

    @property
    def is_balanced(self) -> bool:
        if self.kind in ("disk", "ball", "polydisk", "balanced-convex"):
            return True
        if self.kind == "product":
            return all(f.is_balanced for f in self.factors)
        return False

    @property
    def is_convex(self) -> bool:
        # balanced-convex gauges are accepted as convex; sample_triangle_inequality
        # is the supported way to challenge that assumption.
        return self.is_balanced

    @property
    def is_homogeneous(self) -> bool:
        if self.kind in ("disk", "ball", "polydisk", "named"):
            return True
        if self.kind == "product":
            return all(f.is_homogeneous for f in self.factors)
        return False

    @property
    def is_geometric(self) -> bool:
        """True when membership can actually be tested (no named factors)."""
        if self.kind == "named":
            return False
        if self.kind == "product":
            return all(f.is_geometric for f in self.factors)
        return True

    def spec(self) -> str:
        if self.kind == "disk":
            return "disk"
        if self.kind == "ball":
            return f"ball:{self.dim}"
        if self.kind == "polydisk":
            return f"polydisk:{self.dim}"
        if self.kind == "punctured-disk":
            return "punctured-disk"
        if self.kind == "annulus":
            return f"annulus:{self.inner_radius:g}"
        if self.kind == "balanced-convex":
            g = self.gauge
            if g is not None and g.exponents is not None:
                return "ellipsoid:" + ",".join(f"{e:g}" for e in g.exponents)
            return f"balanced-convex:{self.dim}"
        if self.kind == "product":
            return "product(" + ",".join(f.spec() for f in self.factors) + ")"
        return self.name or "named"

    def __str__(self) -> str:
        return self.spec()


def unit_disk() -> Domain:
    return Domain(kind="disk", dim=1)


def unit_ball(dim: int) -> Domain:
    if dim < 1:
        raise DomainError(f"ball dimension must be positive, got {dim}")
    return Domain(kind="ball", dim=dim)


def polydisk(dim: int) -> Domain:
    if dim < 1:
        raise DomainError(f"polydisk dimension must be positive, got {dim}")
    return Domain(kind="polydisk", dim=dim)


def punctured_disk() -> Domain:
    return Domain(kind="punctured-disk", dim=1)


def annulus(inner_radius: float) -> Domain:
    r = float(inner_radius)
    if not 0.0 < r < 1.0:
        raise DomainError(f"annulus inner radius must lie in (0,1), got {r}")
    return Domain(kind="annulus", dim=1, inner_radius=r)


def balanced_convex(gauge: Gauge) -> Domain:
    return Domain(kind="balanced-convex", dim=gauge.dim, gauge=gauge)


def ellipsoid(exponents: Sequence[float]) -> Domain:
    return balanced_convex(ellipsoid_gauge(exponents))


def product(*factors: Domain) -> Domain:
    if not factors:
        raise DomainError("product needs at least one factor")
    return Domain(
        kind="product", dim=sum(f.dim for f in factors), factors=tuple(factors)
    )


def named_factor(name: str, rho: float) -> Domain:
    """Homogeneous factor known only through its squeezing constant.

    Geometry (membership, gauge) is unavailable; the factor participates in
    the product-constant combinator only.  dim is recorded as 0 = unknown.
    """
    if not 0.0 < rho <= 1.0:
        raise DomainError(f"constant for {name!r} must lie in (0,1], got {rho}")
    return Domain(kind="named", dim=0, name=name, rho=float(rho))


def _split_point(domain: Domain, z: Point) -> list[tuple[Domain, Point]]:
    parts: list[tuple[Domain, Point]] = []
    i = 0
    for f in domain.factors:
        parts.append((f, z[i : i + f.dim]))
        i += f.dim
    return parts


def gauge_eval(domain: Domain, z) -> float:
    """Minkowski function l_D(z) of a balanced domain.

    Polydisk: max of coordinate moduli.  Ball: Euclidean norm.  Products of
    balanced factors: max of the factor gauges.  Non-balanced variants
    (punctured disk, annulus) have no gauge and raise.
    """
    if not domain.is_balanced:
        raise UnsupportedDomainError(
            f"{domain.spec()} is not balanced; it has no Minkowski gauge"
        )
    pt = as_point(z, domain.dim)
    if domain.kind == "disk":
        return abs(pt[0])
    if domain.kind == "ball":
        return math.sqrt(sum(c.real * c.real + c.imag * c.imag for c in pt))
    if domain.kind == "polydisk":
        return max(abs(c) for c in pt)
    if domain.kind == "balanced-convex":
        assert domain.gauge is not None
        return domain.gauge.evaluate(pt)
    # product of balanced factors
    return max(gauge_eval(f, sub) for f, sub in _split_point(domain, pt))


def contains(domain: Domain, z) -> bool:
    """Exact membership test per variant."""
    if not domain.is_geometric:
        raise UnsupportedDomainError(
            f"{domain.spec()} has no computable membership test"
        )
    pt = as_point(z, domain.dim)
    if domain.kind == "punctured-disk":
        return 0.0 < abs(pt[0]) < 1.0
    if domain.kind == "annulus":
        assert domain.inner_radius is not None
        return domain.inner_radius < abs(pt[0]) < 1.0
    if domain.kind == "product":
        return all(contains(f, sub) for f, sub in _split_point(domain, pt))
    return gauge_eval(domain, pt) < 1.0


def inradius_bound(domain: Domain) -> float | None:
    """Certified lower bound on the largest t with t*B inside the domain.

    Exact (= 1) for disk, ball, and polydisk.  For a complex ellipsoid with
    minimal exponent p < 1 the certified value is n^(-(1-p)/(2p)) from the
    power-mean inequality; for p >= 1 the unit ball itself fits.  None when
    no certified bound is available (opaque gauges).
    """
    if domain.kind in ("disk", "ball", "polydisk"):
        return 1.0
    if domain.kind == "balanced-convex":
        g = domain.gauge
        if g is None or g.exponents is None:
            return None
        pmin = min(g.exponents)
        n = len(g.exponents)
        if pmin >= 1.0:
            return 1.0
        return n ** (-(1.0 - pmin) / (2.0 * pmin))
    if domain.kind == "product":
        vals = [inradius_bound(f) for f in domain.factors]
        if any(v is None for v in vals):
            return None
        return min(vals)  # type: ignore[arg-type]
    return None


def circumradius_bound(domain: Domain) -> tuple[float, bool] | None:
    """(upper bound on sup of the Euclidean norm over the domain, exactness).

    Exact for disk (1), ball (1), polydisk (sqrt n) and their products.
    For ellipsoids the bound counts coordinates: every |z_i| < 1, and the
    coordinates with exponent <= 1 jointly contribute at most 1.
    """
    if domain.kind in ("disk", "ball"):
        return 1.0, True
    if domain.kind == "polydisk":
        return math.sqrt(domain.dim), True
    if domain.kind == "balanced-convex":
        g = domain.gauge
        if g is None or g.exponents is None:
            return None
        k = sum(1 for e in g.exponents if e > 1.0)
        sq = k + (1.0 if k < len(g.exponents) else 0.0)
        return math.sqrt(sq), False
    if domain.kind == "product":
        parts = [circumradius_bound(f) for f in domain.factors]
        if any(p is None for p in parts):
            return None
        sq = sum(v * v for v, _ in parts)  # type: ignore[misc]
        return math.sqrt(sq), all(ex for _, ex in parts)  # type: ignore[misc]
    return None


@dataclass(frozen=True)
class RadiusValue:
    """A radius in dual representation: hyperbolic r and tanh(r).

    Both are stored so repeated conversions never accumulate error.
    """

    hyperbolic: float
    tanh_value: float

    def __post_init__(self):
        if self.hyperbolic < 0.0:
            raise DomainError(f"radius must be nonnegative, got {self.hyperbolic}")
        if not 0.0 <= self.tanh_value < 1.0:
            raise DomainError(f"tanh radius must lie in [0,1), got {self.tanh_value}")
        if abs(math.tanh(self.hyperbolic) - self.tanh_value) > 1e-12:
            raise DomainError(
                f"inconsistent radius pair: tanh({self.hyperbolic}) != {self.tanh_value}"
            )

    @classmethod
    def from_hyperbolic(cls, r: float) -> "RadiusValue":
        return cls(hyperbolic=r, tanh_value=math.tanh(r))

    @classmethod
    def from_tanh(cls, t: float) -> "RadiusValue":
        if not 0.0 <= t < 1.0:
            raise DomainError(f"tanh radius must lie in [0,1), got {t}")
        return cls(hyperbolic=math.atanh(t), tanh_value=t)


def radius_convert(e: float) -> float:
    """h = 1/artanh(e) for e in (0,1); e = 1 maps to h = 0 by convention.

    h is the reciprocal-artanh companion of a tanh-type invariant value; the
    degenerate h = 0 marks a full-domain (e = 1) case.
    """
    if e == 1.0:
        return 0.0
    if not 0.0 < e < 1.0:
        raise DomainError(f"expected a value in (0,1], got {e}")
    return 1.0 / math.atanh(e)


def radius_convert_inverse(h: float) -> float:
    """Inverse of radius_convert: e = tanh(1/h), with h = 0 mapping to 1."""
    if h == 0.0:
        return 1.0
    if h < 0.0:
        raise DomainError(f"expected a nonnegative value, got {h}")
    return math.tanh(1.0 / h)
