"""Map witnesses and the checks that turn them into certified bounds.

A lower bound for the squeezing function or the Fridman invariant is only as
good as the holomorphic map that realises it.  This module represents such
maps as MapWitness records (family, parameters, forward/inverse callables)
and provides:

* factories for the four witness families: disk automorphisms
  phi_z0(w) = (w - z0)/(1 - conj(z0) w), linear scalings, inclusions, and
  the Riemann map of the slit disk;

* verify_fridman_certificate, deciding whether the Kobayashi ball of a given
  radius is contained in the witness image - exactly where an exact
  criterion exists (slit clearance on the punctured disk, gauge-versus-norm
  comparison on balanced convex domains), by boundary sampling otherwise;

* squeezing_lower_from_map, extracting the certified squeezing lower bound
  from an injective witness vanishing at the base point; on an annulus this
  is the minimum modulus of the automorphism over the inner boundary circle,
  located by a 4096-point grid scan plus golden-section refinement;

* schwarz_property_check, the sampling check that a normalised map between
  balanced domains contracts sublevel sets of the gauges, l(f(z)) <= l(z)
  on gauge balls;

* origin_equality_witness, an end-to-end construction showing, for a
  concrete polydisk or ball, that the squeezing and Fridman values at the
  origin pin each other down to any requested epsilon.

The Riemann map of the slit disk Omega = disk minus the radial slit (-1, 0]
is built as a recorded chain of elementary steps (square root, rotation,
Cayley-type fractional linear maps, squaring); the final rotation makes the
chain send the real diameter to the real axis, so the Moebius normalisation
constant c with f(0) = a is real and can be found by bisection.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .domains import (
    Domain,
    DomainError,
    Point,
    RadiusValue,
    UnsupportedDomainError,
    as_point,
    circumradius_bound,
    contains,
    gauge_eval,
    inradius_bound,
)
from .metrics import slit_clearance

CIRCLE_GRID = 4096
CIRCLE_REFINE_TOL = 1e-10
INJECTIVITY_FLOOR = 1e-12
SCHWARZ_SLACK = 1e-10

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a certificate check.

    mode is "certified" when the decision follows from an exact criterion
    and "sampled" when only finitely many points were inspected.  A failed
    check always carries a concrete counterexample in detail.
    """

    ok: bool
    mode: str
    detail: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class MapWitness:
    """A holomorphic map presented as evidence for a bound.

    family is one of MobiusDisk, LinearScaling, Inclusion, SlitDiskRiemann.
    forward and inverse act on point tuples.  image_contains, when present,
    is an exact membership test for the image (used by sampling fallbacks).
    injectivity_checked is flipped by check_injectivity; it records that the
    map passed a pairwise sampling test, not a proof.
    """

    family: str
    params: dict[str, Any]
    forward: Callable[[Point], Point]
    dim: int = 1
    inverse: Callable[[Point], Point] | None = None
    image_contains: Callable[[Point], bool] | None = None
    injectivity_checked: bool = False

    def describe(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()) if k != "chain")
        return f"{self.family}({args})"


def apply_witness(witness: MapWitness, z) -> Point:
    return witness.forward(as_point(z, witness.dim))


def mobius_disk_witness(z0: complex) -> MapWitness:
    """Disk automorphism phi_z0 sending z0 to 0."""
    z0 = complex(z0)
    if abs(z0) >= 1.0:
        raise DomainError(f"Moebius parameter must lie in the unit disk, got {z0}")
    c = z0.conjugate()

    def forward(z: Point) -> Point:
        w = z[0]
        return ((w - z0) / (1.0 - c * w),)

    def inverse(z: Point) -> Point:
        w = z[0]
        return ((w + z0) / (1.0 + c * w),)

    return MapWitness(
        family="MobiusDisk",
        params={"z0": z0},
        forward=forward,
        dim=1,
        inverse=inverse,
        image_contains=lambda z: abs(z[0]) < 1.0,
    )


def linear_scaling_witness(factor: float, dim: int) -> MapWitness:
    f = float(factor)
    if f <= 0.0:
        raise DomainError(f"scaling factor must be positive, got {f}")

    def forward(z: Point) -> Point:
        return tuple(f * c for c in z)

    def inverse(z: Point) -> Point:
        return tuple(c / f for c in z)

    return MapWitness(
        family="LinearScaling",
        params={"factor": f, "dim": dim},
        forward=forward,
        dim=dim,
        inverse=inverse,
    )


def inclusion_witness(dim: int) -> MapWitness:
    def identity(z: Point) -> Point:
        return z

    return MapWitness(
        family="Inclusion",
        params={"dim": dim},
        forward=identity,
        dim=dim,
        inverse=identity,
    )


# --- Riemann map of the slit disk ------------------------------------------

_SLIT_CHAIN = (
    "w1 = sqrt(z)            principal branch, slit disk -> right half-disk",
    "w2 = i w1               right half-disk -> upper half-disk",
    "w3 = (1 + w2)/(1 - w2)  upper half-disk -> first quadrant",
    "w4 = w3^2               first quadrant -> upper half-plane",
    "w5 = (w4 - i)/(w4 + i)  upper half-plane -> unit disk",
    "w6 = i w5               rotation fixing the disk, making the chain real on (0,1)",
)


def _slit_to_disk(z: complex) -> complex:
    w1 = cmath.sqrt(z)
    w2 = 1j * w1
    w3 = (1.0 + w2) / (1.0 - w2)
    w4 = w3 * w3
    w5 = (w4 - 1j) / (w4 + 1j)
    return 1j * w5


def _disk_to_slit(w: complex) -> complex:
    w5 = -1j * w
    w4 = 1j * (1.0 + w5) / (1.0 - w5)
    w3 = cmath.sqrt(w4)
    w2 = (w3 - 1.0) / (w3 + 1.0)
    w1 = -1j * w2
    return w1 * w1


def _slit_normalization(a: float) -> float:
    """Real c with (chain inverse)(c) = a, by bisection on (-1, 1).

    The chain maps the real diameter of the disk onto (0,1) decreasingly,
    so the target is bracketed once a is strictly inside (0,1).
    """
    lo, hi = -1.0 + 1e-13, 1.0 - 1e-13

    def g(c: float) -> float:
        return _disk_to_slit(complex(c, 0.0)).real

    if not (g(lo) > a > g(hi)):
        raise DomainError(f"normalisation constant not bracketed for a = {a}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g(mid) > a:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _on_slit(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0


def slit_disk_riemann_map(a: float) -> MapWitness:
    """Biholomorphism of the unit disk onto the slit disk with f(0) = a.

    Composes the recorded elementary chain with the disk automorphism
    w -> (w + c)/(1 + c w) for the real constant c solving f(0) = a.
    """
    a = float(a)
    if not 0.0 < a < 1.0:
        raise DomainError(f"normalisation point must lie in (0,1), got {a}")
    c = _slit_normalization(a)

    def forward(z: Point) -> Point:
        w = z[0]
        return (_disk_to_slit((w + c) / (1.0 + c * w)),)

    def inverse(z: Point) -> Point:
        v = _slit_to_disk(z[0])
        return ((v - c) / (1.0 - c * v),)

    return MapWitness(
        family="SlitDiskRiemann",
        params={"a": a, "c": c, "chain": _SLIT_CHAIN},
        forward=forward,
        dim=1,
        inverse=inverse,
        image_contains=lambda z: abs(z[0]) < 1.0 and not _on_slit(z[0]),
    )


# --- sampling utilities ------------------------------------------------------


def _sample_disk_coords(rng: np.random.Generator, count: int, radius: float) -> np.ndarray:
    """count complex samples uniform in the disk of the given radius."""
    out = np.empty(count, dtype=complex)
    have = 0
    while have < count:
        need = count - have
        re = rng.uniform(-radius, radius, size=2 * need)
        im = rng.uniform(-radius, radius, size=2 * need)
        pts = re + 1j * im
        pts = pts[np.abs(pts) < radius][:need]
        out[have : have + pts.size] = pts
        have += pts.size
    return out


def _sample_in_gauge_ball(
    domain: Domain, r: float, count: int, rng: np.random.Generator
) -> np.ndarray:
    """count points of the domain with gauge < r, as an array (count, dim).

    Candidates are drawn from the polydisk of radius r, which contains the
    sublevel set for every supported balanced variant, and filtered by the
    exact gauge.
    """
    dim = domain.dim
    if domain.kind in ("disk", "polydisk"):
        cols = [_sample_disk_coords(rng, count, r) for _ in range(dim)]
        return np.stack(cols, axis=1)
    out = np.empty((count, dim), dtype=complex)
    have = 0
    while have < count:
        need = count - have
        batch = np.stack(
            [_sample_disk_coords(rng, 2 * need, r) for _ in range(dim)], axis=1
        )
        if domain.kind == "ball":
            keep = batch[np.linalg.norm(batch, axis=1) < r][:need]
        else:
            mask = np.fromiter(
                (gauge_eval(domain, tuple(row)) < r for row in batch),
                dtype=bool,
                count=batch.shape[0],
            )
            keep = batch[mask][:need]
        out[have : have + keep.shape[0]] = keep
        have += keep.shape[0]
    return out


def check_injectivity(
    witness: MapWitness, samples: int = 10_000, seed: int = 0
) -> bool:
    """Pairwise sampling test |f(x) - f(y)| >= 1e-12 |x - y| on the polydisk.

    Sets witness.injectivity_checked on success.  A sampling test, not a
    proof: it can only ever refute injectivity.
    """
    rng = np.random.default_rng(seed)
    dim = witness.dim
    xs = np.stack([_sample_disk_coords(rng, samples, 0.999) for _ in range(dim)], axis=1)
    ys = np.stack([_sample_disk_coords(rng, samples, 0.999) for _ in range(dim)], axis=1)
    for x, y in zip(xs, ys):
        px, py = tuple(x), tuple(y)
        sep = math.sqrt(sum(abs(u - v) ** 2 for u, v in zip(px, py)))
        if sep == 0.0:
            continue
        fx, fy = witness.forward(px), witness.forward(py)
        img = math.sqrt(sum(abs(u - v) ** 2 for u, v in zip(fx, fy)))
        if img < INJECTIVITY_FLOOR * sep:
            return False
    witness.injectivity_checked = True
    return True


# --- circle minimisation -----------------------------------------------------


def golden_section_min(
    f: Callable[[float], float], a: float, b: float, tol: float = CIRCLE_REFINE_TOL
) -> float:
    """Abscissa of the minimum of a unimodal f on [a, b]."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def min_abs_on_circle(
    f: Callable[[complex], complex],
    radius: float,
    grid: int = CIRCLE_GRID,
    tol: float = CIRCLE_REFINE_TOL,
) -> float:
    """min |f| over the circle of the given radius.

    Grid scan (default 4096 points) followed by golden-section refinement of
    the best bracket to tolerance tol in the angle.
    """
    if radius == 0.0:
        return abs(f(0.0))
    step = 2.0 * math.pi / grid
    best_k, best_v = 0, math.inf
    for k in range(grid):
        v = abs(f(radius * cmath.exp(1j * (k * step))))
        if v < best_v:
            best_k, best_v = k, v
    g = lambda th: abs(f(radius * cmath.exp(1j * th)))
    th = golden_section_min(g, (best_k - 1) * step, (best_k + 1) * step, tol)
    return min(best_v, g(th))


# --- certificate checks ------------------------------------------------------


def _polydisk_extremal(domain: Domain) -> Point | None:
    """A boundary-direction u with gauge(u) = 1 and |u| = circumradius, when known."""
    if domain.kind in ("disk", "ball"):
        return (1.0 + 0.0j,) + (0.0j,) * (domain.dim - 1)
    if domain.kind == "polydisk":
        return (1.0 + 0.0j,) * domain.dim
    if domain.kind == "product":
        parts = []
        for f in domain.factors:
            u = _polydisk_extremal(f)
            if u is None:
                return None
            parts.extend(u)
        return tuple(parts)
    return None


def verify_fridman_certificate(
    domain: Domain,
    z,
    witness: MapWitness,
    r: RadiusValue,
    samples: int = 2000,
    seed: int = 0,
) -> CheckResult:
    """Is the Kobayashi ball of radius r about z inside the witness image?

    Punctured disk with a slit-disk witness: exact slit-clearance criterion,
    tanh r <= clearance.  Balanced convex domain at the origin with a scaling
    or inclusion witness into the ball: exact gauge comparison
    tanh r <= c / circumradius, with an explicit counterexample point when an
    exact circumradius direction is known and the criterion fails.  When the
    circumradius bound is not exact the failure side falls back to boundary
    sampling, so the outcome is certified-false (counterexample found) or
    sampled-true.
    """
    t = r.tanh_value
    if domain.kind == "punctured-disk" and witness.family == "SlitDiskRiemann":
        a = witness.params["a"]
        base = as_point(z, 1)[0]
        if abs(base - a) > 1e-9:
            raise DomainError(
                f"witness is normalised at {a}, not at the requested point {base}"
            )
        clearance = slit_clearance(a)
        ok = t <= clearance.tanh_clearance
        return CheckResult(
            ok=ok,
            mode="certified",
            detail={
                "criterion": "tanh r <= clearance of the radial slit",
                "threshold": clearance.tanh_clearance,
                "tanh_r": t,
                "margin": clearance.tanh_clearance - t,
            },
        )

    if domain.is_balanced and witness.family in ("LinearScaling", "Inclusion"):
        pt = as_point(z, domain.dim)
        if any(c != 0 for c in pt):
            raise UnsupportedDomainError(
                "balanced-domain certificates are only exact at the origin"
            )
        c = float(witness.params.get("factor", 1.0))
        bound = circumradius_bound(domain)
        if bound is None:
            raise UnsupportedDomainError(
                f"no certified circumradius for {domain.spec()}"
            )
        radius_sup, exact = bound
        threshold = c / radius_sup
        detail: dict[str, Any] = {
            "criterion": "tanh r * circumradius <= scaling factor",
            "threshold": threshold,
            "tanh_r": t,
            "circumradius": radius_sup,
            "circumradius_exact": exact,
        }
        if t <= threshold:
            return CheckResult(ok=True, mode="certified", detail=detail)
        if exact:
            u = _polydisk_extremal(domain)
            if u is not None:
                # a domain point inside the Kobayashi ball but outside c*B
                tau = 0.5 * (threshold + t)
                bad = tuple(tau * ci for ci in u)
                detail["counterexample"] = bad
                detail["counterexample_norm"] = tau * radius_sup
                return CheckResult(ok=False, mode="certified", detail=detail)
            return CheckResult(ok=False, mode="certified", detail=detail)
        # inexact circumradius: look for a real counterexample by sampling
        rng = np.random.default_rng(seed)
        pts = _sample_in_gauge_ball(domain, t, samples, rng)
        norms = np.linalg.norm(pts, axis=1)
        worst = int(np.argmax(norms))
        if norms[worst] >= c:
            detail["counterexample"] = tuple(pts[worst])
            detail["counterexample_norm"] = float(norms[worst])
            return CheckResult(ok=False, mode="certified", detail=detail)
        detail["samples"] = samples
        detail["seed"] = seed
        detail["max_norm_seen"] = float(norms[worst])
        return CheckResult(ok=True, mode="sampled", detail=detail)

    if witness.image_contains is not None and domain.is_balanced:
        # generic fallback: sample the gauge sphere of radius tanh r
        rng = np.random.default_rng(seed)
        pts = _sample_in_gauge_ball(domain, 1.0, samples, rng)
        checked = 0
        for row in pts:
            p = tuple(row)
            g = gauge_eval(domain, p)
            if g == 0.0:
                continue
            q = tuple(ci * (t * (1.0 - 1e-9) / g) for ci in p)
            checked += 1
            if not witness.image_contains(q):
                return CheckResult(
                    ok=False,
                    mode="certified",
                    detail={"counterexample": q, "criterion": "image membership"},
                )
        return CheckResult(
            ok=True,
            mode="sampled",
            detail={"samples": checked, "seed": seed, "criterion": "image membership"},
        )

    raise UnsupportedDomainError(
        f"no certificate criterion for {witness.family} on {domain.spec()}"
    )


def squeezing_lower_from_map(domain: Domain, z, witness: MapWitness) -> float:
    """Certified squeezing lower bound from an injective witness with f(z) = 0.

    Disk: any automorphism gives the full disk, bound 1.  Annulus (and the
    punctured disk as the degenerate inner radius 0): the omitted inner
    region sits behind the Moebius image of the inner circle, so the bound
    is min |phi_z0| over that circle.  Balanced convex domains at the
    origin: a scaling into the unit ball keeps the scaled inradius.
    """
    pt = as_point(z, domain.dim)
    image_base = witness.forward(pt)
    if math.sqrt(sum(abs(c) ** 2 for c in image_base)) > 1e-9:
        raise DomainError("witness does not send the base point to the origin")

    if domain.kind == "disk" and witness.family in ("MobiusDisk", "Inclusion", "LinearScaling"):
        # automorphism image is the full disk
        if witness.family == "LinearScaling" and witness.params["factor"] != 1.0:
            return float(witness.params["factor"])
        return 1.0

    if domain.kind in ("annulus", "punctured-disk") and witness.family == "MobiusDisk":
        z0 = pt[0]
        inner = domain.inner_radius if domain.kind == "annulus" else 0.0
        assert inner is not None
        if not inner < abs(z0) < 1.0:
            raise DomainError(f"base point {z0} outside {domain.spec()}")
        phi = lambda w: witness.forward((w,))[0]
        return min_abs_on_circle(phi, inner)

    if domain.is_balanced and witness.family in ("LinearScaling", "Inclusion"):
        if any(c != 0 for c in pt):
            raise UnsupportedDomainError(
                "balanced-domain squeezing witnesses are only certified at the origin"
            )
        c = float(witness.params.get("factor", 1.0))
        bound = circumradius_bound(domain)
        if bound is None:
            raise UnsupportedDomainError(
                f"no certified circumradius for {domain.spec()}"
            )
        radius_sup, _ = bound
        if c * radius_sup > 1.0 + 1e-12:
            raise DomainError(
                f"scaling by {c} does not map {domain.spec()} into the unit ball"
            )
        inradius = inradius_bound(domain)
        if inradius is None:
            raise UnsupportedDomainError(f"no certified inradius for {domain.spec()}")
        return c * inradius

    raise UnsupportedDomainError(
        f"no squeezing criterion for {witness.family} on {domain.spec()}"
    )


def schwarz_property_check(
    witness: MapWitness,
    d1: Domain,
    d2: Domain,
    r: float,
    samples: int = 10_000,
    seed: int = 0,
) -> CheckResult:
    """Sampling check that l_{D2}(f(z)) < r whenever l_{D1}(z) < r.

    Requires f(0) = 0.  A violation beyond slack 1e-10 fails the check and
    is returned as a counterexample.
    """
    if not (d1.is_balanced and d2.is_balanced):
        raise UnsupportedDomainError("both domains must be balanced")
    if not 0.0 < r <= 1.0:
        raise DomainError(f"radius must lie in (0,1], got {r}")
    origin = (0.0j,) * d1.dim
    f0 = witness.forward(origin)
    if math.sqrt(sum(abs(c) ** 2 for c in f0)) > 1e-12:
        raise DomainError("map does not fix the origin")
    rng = np.random.default_rng(seed)
    pts = _sample_in_gauge_ball(d1, r, samples, rng)
    worst = 0.0
    for row in pts:
        p = tuple(row)
        image = witness.forward(p)
        g = gauge_eval(d2, image)
        if g > worst:
            worst = g
        if g >= r + SCHWARZ_SLACK:
            return CheckResult(
                ok=False,
                mode="sampled",
                detail={
                    "counterexample": p,
                    "image": image,
                    "image_gauge": g,
                    "radius": r,
                },
            )
    return CheckResult(
        ok=True,
        mode="sampled",
        detail={"samples": samples, "seed": seed, "radius": r, "max_image_gauge": worst},
    )


@dataclass(frozen=True)
class OriginEqualityReport:
    """Record of the two-sided pinch at the origin of a ball or polydisk.

    The known common value rho of the squeezing function and Fridman
    invariant at the origin is re-derived from explicit witnesses up to the
    requested epsilon: an inclusion witness certifies the Fridman radius
    tanh r = (1 - eps) rho, the linear contraction z -> tanh(r) z is sampled
    for gauge homogeneity, and a scaling witness recovers the squeezing
    bound.  passed means every step held.
    """

    domain: str
    constant: float
    epsilon: float
    tanh_r: float
    squeezing_bound: float
    linear_map_residual: float
    fridman_check: CheckResult
    sharpness_check: CheckResult | None
    steps: tuple[tuple[str, bool], ...]
    passed: bool


def origin_equality_witness(
    domain: Domain, epsilon: float, samples: int = 2000, seed: int = 0
) -> OriginEqualityReport:
    """Pin the common origin value of s and e on a disk, ball, or polydisk."""
    if epsilon <= 0.0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    if domain.kind not in ("disk", "ball", "polydisk"):
        raise UnsupportedDomainError(
            f"origin equality witness supports disk, ball, polydisk; got {domain.spec()}"
        )
    n = domain.dim
    rho = 1.0 if domain.kind in ("disk", "ball") else n ** -0.5
    radius_sup, _ = circumradius_bound(domain)  # type: ignore[misc]

    steps: list[tuple[str, bool]] = []
    t = (1.0 - epsilon) * rho
    r = RadiusValue.from_tanh(t)

    # Fridman side: the inclusion of the unit ball certifies radius t.
    incl = inclusion_witness(n)
    fr = verify_fridman_certificate(domain, (0.0j,) * n, incl, r)
    steps.append((f"inclusion witness certifies tanh r = (1-eps) rho = {t:.12g}", fr.ok))

    # Sharpness: the same witness must refuse any radius beyond rho.
    sharp: CheckResult | None = None
    t_hi = (1.0 + epsilon) * rho
    if t_hi < 1.0:
        sharp = verify_fridman_certificate(
            domain, (0.0j,) * n, incl, RadiusValue.from_tanh(t_hi)
        )
        steps.append(
            (f"inclusion witness refuses tanh r = (1+eps) rho = {t_hi:.12g}", not sharp.ok)
        )
    else:
        steps.append(("upper bound 1 is definitional; sharpness step skipped", True))

    # The linear contraction z -> t z: gauge homogeneity sampled on the domain.
    rng = np.random.default_rng(seed)
    pts = _sample_in_gauge_ball(domain, 1.0, samples, rng)
    residual = 0.0
    inside = True
    for row in pts:
        p = tuple(row)
        g = gauge_eval(domain, p)
        gp = gauge_eval(domain, tuple(t * c for c in p))
        residual = max(residual, abs(gp - t * g))
        if gp >= t:
            inside = False
    steps.append((f"gauge homogeneity of z -> t z, residual {residual:.3g}", residual <= 1e-12))
    steps.append(("contraction image inside the Kobayashi ball of radius r", inside))

    # Squeezing side: scale the domain into the unit ball.
    squeeze = linear_scaling_witness(1.0 / radius_sup, n)
    s_lb = squeezing_lower_from_map(domain, (0.0j,) * n, squeeze)
    steps.append((f"scaling witness gives squeezing lower bound {s_lb:.12g}", s_lb >= (1.0 - epsilon) * rho))

    steps.append((f"witnessed Fridman radius within 2 eps of rho = {rho:.12g}", abs(t - rho) <= 2.0 * epsilon))
    steps.append((f"witnessed squeezing bound within 2 eps of rho = {rho:.12g}", abs(s_lb - rho) <= 2.0 * epsilon))

    passed = all(ok for _, ok in steps)
    return OriginEqualityReport(
        domain=domain.spec(),
        constant=rho,
        epsilon=epsilon,
        tanh_r=t,
        squeezing_bound=s_lb,
        linear_map_residual=residual,
        fridman_check=fr,
        sharpness_check=sharp,
        steps=tuple(steps),
        passed=passed,
    )
