"""Map witnesses and the checks built on them.

Covers the slit-complement Riemann map (construction, round trip, image,
injectivity), certified Kobayashi-ball containment, squeezing lower
bounds from maps, the distance-decreasing sampling check, and the
two-sided pinch report at the origin.

The normalisation constants c(a) pinned below were recomputed by an
independent bisection on the raw conformal chain before being frozen.
"""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holoinv import (
    DomainError,
    RadiusValue,
    UnsupportedDomainError,
    MapWitness,
    annulus,
    check_injectivity,
    ellipsoid,
    golden_section_min,
    inclusion_witness,
    linear_scaling_witness,
    min_abs_on_circle,
    mobius_disk_witness,
    origin_equality_witness,
    polydisk,
    punctured_disk,
    schwarz_property_check,
    slit_clearance,
    slit_disk_riemann_map,
    squeezing_lower_from_map,
    unit_ball,
    unit_disk,
    verify_fridman_certificate,
)

E_PI = math.exp(-math.pi)
SQRT2 = math.sqrt(2.0)

# independently recomputed normalisation constants for the slit map
C_PINS = {
    0.1: 0.1745854691204474,
    E_PI: 0.3941778496330066,
    0.5: -0.47759225007251727,
    0.9: -0.8998681562060709,
}


def _disk_samples(rng, count, radius=0.995):
    out = []
    while len(out) < count:
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(z) < radius:
            out.append(z)
    return out


def _dist_to_slit(w, left=-1.0):
    """Euclidean distance from w to the segment [left, 0] on the real axis."""
    x, y = w.real, w.imag
    if left <= x <= 0.0:
        return abs(y)
    return min(abs(w), abs(w - left))


# ------------------------------------------------------------ slit map


@pytest.mark.parametrize("a", sorted(C_PINS))
def test_slit_map_normalisation_constant(a):
    witness = slit_disk_riemann_map(a)
    c = witness.params["c"]
    assert isinstance(c, float)  # real by the symmetry of the chain
    assert c == pytest.approx(C_PINS[a], abs=1e-12)
    # the defining property: the origin goes to the base point
    image = witness.forward((0.0,))[0]
    assert abs(image - a) < 1e-12


def test_slit_map_round_trip():
    witness = slit_disk_riemann_map(0.2)
    rng = np.random.default_rng(13)
    for z in _disk_samples(rng, 1000):
        w = witness.forward((z,))[0]
        back = witness.inverse((w,))[0]
        assert abs(back - z) < 1e-10


def test_slit_map_image_avoids_the_slit():
    witness = slit_disk_riemann_map(0.2)
    rng = np.random.default_rng(29)
    eps_grid = [10.0 ** -k for k in range(1, 7)]
    for z in _disk_samples(rng, 10_000):
        w = witness.forward((z,))[0]
        assert abs(w) < 1.0
        for eps in eps_grid:
            assert _dist_to_slit(w, left=-1.0 + eps) > 0.0


def test_slit_map_is_injective_on_samples():
    witness = slit_disk_riemann_map(0.2)
    assert check_injectivity(witness, samples=10_000, seed=0)
    assert witness.injectivity_checked


def test_slit_map_describes_its_chain():
    witness = slit_disk_riemann_map(0.5)
    assert witness.family == "SlitDiskRiemann"
    assert witness.params["a"] == 0.5
    assert len(witness.params["chain"]) >= 4  # composite of elementary steps
    text = witness.describe()
    assert "SlitDiskRiemann" in text


def test_slit_map_validation():
    for bad in (0.0, 1.0, -0.3):
        with pytest.raises(DomainError):
            slit_disk_riemann_map(bad)


# ---------------------------------------------------- circle minimisation


def test_min_abs_on_circle_matches_moebius_closed_form():
    # min over |w| = r of |(w - z0)/(1 - z0 w)| is (z0 - r)/(1 - z0 r)
    for z0 in (0.2, 0.5, 0.8):
        phi = lambda w: (w - z0) / (1.0 - z0 * w)
        for r in (0.01, 0.05, 0.1):
            expected = (z0 - r) / (1.0 - z0 * r)
            assert min_abs_on_circle(phi, r) == pytest.approx(expected, abs=1e-9)


def test_min_abs_on_circle_degenerate_radius():
    phi = lambda w: (w - 0.2) / (1.0 - 0.2 * w)
    assert min_abs_on_circle(phi, 0.0) == pytest.approx(0.2, abs=1e-15)


def test_golden_section_min():
    x = golden_section_min(lambda t: (t - 1.3) ** 2, 0.0, 2.0, tol=1e-12)
    assert x == pytest.approx(1.3, abs=1e-8)


# ------------------------------------------------- containment certificates


def test_fridman_certificate_flips_at_the_clearance():
    a = E_PI
    witness = slit_disk_riemann_map(a)
    threshold = slit_clearance(a).tanh_clearance  # sqrt(2) - 1
    ok = verify_fridman_certificate(
        punctured_disk(), a, witness, RadiusValue.from_tanh(0.41)
    )
    assert ok and ok.mode == "certified"
    bad = verify_fridman_certificate(
        punctured_disk(), a, witness, RadiusValue.from_tanh(0.42)
    )
    assert not bad and bad.mode == "certified"
    assert 0.41 < threshold < 0.42


def test_fridman_certificate_polydisk_inclusion():
    d = polydisk(2)
    witness = inclusion_witness(2)
    # circumradius sqrt(2): the inclusion certifies exactly up to 1/sqrt(2)
    at = verify_fridman_certificate(d, (0, 0), witness, RadiusValue.from_tanh(1 / SQRT2))
    assert at and at.mode == "certified"
    over = verify_fridman_certificate(
        d, (0, 0), witness, RadiusValue.from_tanh(1 / SQRT2 + 1e-6)
    )
    assert not over
    # the refusal names a concrete point of the ball that escapes
    cx = over.detail["counterexample"]
    assert max(abs(c) for c in cx) < 1.0  # it lies in the polydisk
    assert math.sqrt(sum(abs(c) ** 2 for c in cx)) >= 1.0 - 1e-12


def test_fridman_certificate_ball_scaling():
    d = unit_ball(2)
    witness = linear_scaling_witness(1.0, 2)
    ok = verify_fridman_certificate(d, (0, 0), witness, RadiusValue.from_tanh(0.999999))
    assert ok and ok.mode == "certified"


def test_fridman_certificate_samples_when_radius_is_inexact():
    # the circumradius upper bound sqrt(2) for this ellipsoid is not tight:
    # below c/R_up the containment is certified outright, between c/R_up and
    # the true threshold only a sampling verdict is available
    d = ellipsoid((0.5, 2.0))
    witness = linear_scaling_witness(1.0 / SQRT2, 2)
    below = verify_fridman_certificate(d, (0, 0), witness, RadiusValue.from_tanh(0.45))
    assert below and below.mode == "certified"
    between = verify_fridman_certificate(
        d, (0, 0), witness, RadiusValue.from_tanh(0.6), seed=7
    )
    assert between and between.mode == "sampled"
    assert between.detail["seed"] == 7
    assert between.detail["samples"] > 0


def test_fridman_certificate_validation():
    witness = slit_disk_riemann_map(0.3)
    with pytest.raises(DomainError):
        # witness is anchored at 0.3, not at 0.5
        verify_fridman_certificate(
            punctured_disk(), 0.5, witness, RadiusValue.from_tanh(0.1)
        )
    with pytest.raises(UnsupportedDomainError):
        verify_fridman_certificate(
            annulus(0.1), 0.5, mobius_disk_witness(0.5), RadiusValue.from_tanh(0.1)
        )


# ------------------------------------------------- squeezing lower bounds


def test_squeezing_lower_disk_automorphism():
    assert squeezing_lower_from_map(unit_disk(), 0.3, mobius_disk_witness(0.3)) == 1.0


def test_squeezing_lower_annulus_pin():
    bound = squeezing_lower_from_map(annulus(0.01), 0.2, mobius_disk_witness(0.2))
    assert bound == pytest.approx(0.1903807615230461, abs=1e-9)


def test_squeezing_lower_punctured_disk_is_the_modulus():
    bound = squeezing_lower_from_map(punctured_disk(), 0.2, mobius_disk_witness(0.2))
    assert bound == pytest.approx(0.2, abs=1e-12)


def test_squeezing_lower_improves_as_the_hole_shrinks():
    radii = [0.1, 0.05, 0.01, 0.001]
    bounds = [
        squeezing_lower_from_map(annulus(r), 0.2, mobius_disk_witness(0.2))
        for r in radii
    ]
    expected = [(0.2 - r) / (1.0 - 0.2 * r) for r in radii]
    for got, want in zip(bounds, expected):
        assert got == pytest.approx(want, abs=1e-9)
    assert all(b2 >= b1 for b1, b2 in zip(bounds, bounds[1:]))


def test_squeezing_lower_balanced_scaling():
    bound = squeezing_lower_from_map(
        polydisk(2), (0, 0), linear_scaling_witness(1.0 / SQRT2, 2)
    )
    assert bound == pytest.approx(1.0 / SQRT2, abs=1e-15)


def test_squeezing_lower_validation():
    with pytest.raises(DomainError):
        # the witness must send the base point to the origin
        squeezing_lower_from_map(annulus(0.01), 0.2, mobius_disk_witness(0.3))
    with pytest.raises(UnsupportedDomainError):
        # origin-fixing, but not a family any criterion knows how to certify
        unknown = MapWitness(family="Custom", params={}, forward=lambda p: p, dim=2)
        squeezing_lower_from_map(polydisk(2), (0, 0), unknown)
    with pytest.raises(DomainError):
        # scaling by 1.2 does not land inside the unit ball
        squeezing_lower_from_map(polydisk(2), (0, 0), linear_scaling_witness(1.2, 2))


# ------------------------------------------------ distance-decreasing check


def _witness(fn, dim, family="Custom"):
    return MapWitness(family=family, params={}, forward=fn, dim=dim)


def test_schwarz_check_passes_for_gauge_shrinking_maps():
    d2 = polydisk(2)
    maps = [
        inclusion_witness(2),
        _witness(lambda p: (p[1], p[0]), 2, family="Swap"),
        _witness(lambda p: (p[0] ** 2, p[1] ** 3), 2, family="Powers"),
        linear_scaling_witness(0.5, 2),
    ]
    for witness in maps:
        for r in (0.1, 0.5, 0.9):
            result = schwarz_property_check(witness, d2, d2, r, samples=2000, seed=1)
            assert result, (witness.family, r, result.detail)


def test_schwarz_check_finds_a_counterexample():
    # z -> (z1 + z2, 0) roughly doubles the sup gauge
    bad = _witness(lambda p: (p[0] + p[1], 0j), 2, family="Sum")
    result = schwarz_property_check(bad, polydisk(2), polydisk(2), 0.5, samples=2000, seed=1)
    assert not result
    z = result.detail["counterexample"]
    assert max(abs(c) for c in z) < 0.5
    assert abs(z[0] + z[1]) >= 0.5


def test_schwarz_check_requires_origin_fixed():
    shifted = _witness(lambda p: (p[0] + 0.1,), 1, family="Shift")
    with pytest.raises(DomainError):
        schwarz_property_check(shifted, unit_disk(), unit_disk(), 0.5)


def test_schwarz_check_records_the_seed():
    result = schwarz_property_check(
        inclusion_witness(1), unit_disk(), unit_disk(), 0.3, samples=100, seed=42
    )
    assert result.detail["seed"] == 42


# ------------------------------------------------------ origin equality


@pytest.mark.parametrize("domain", [unit_disk(), unit_ball(3), polydisk(2), polydisk(3)],
                         ids=["disk", "ball3", "polydisk2", "polydisk3"])
def test_origin_equality_report_passes(domain):
    report = origin_equality_witness(domain, epsilon=1e-3)
    assert report.passed
    rho = 1.0 if domain.kind in ("disk", "ball") else domain.dim ** -0.5
    assert report.constant == pytest.approx(rho, abs=1e-15)
    assert abs(report.tanh_r - rho) <= 2e-3
    assert abs(report.squeezing_bound - rho) <= 2e-3
    assert report.linear_map_residual <= 1e-12
    assert report.fridman_check.ok
    assert len(report.steps) >= 3


def test_origin_equality_sharpness_on_the_polydisk():
    report = origin_equality_witness(polydisk(2), epsilon=1e-3)
    # pushing past the constant must be refused: that is the sharpness half
    assert report.sharpness_check is not None
    assert not report.sharpness_check.ok


def test_origin_equality_ball_constants_are_exactly_one():
    report = origin_equality_witness(unit_ball(3), epsilon=1e-3)
    assert report.constant == 1.0
    assert report.squeezing_bound == 1.0


def test_origin_equality_unsupported_domains():
    with pytest.raises(UnsupportedDomainError):
        origin_equality_witness(punctured_disk(), epsilon=1e-3)
    with pytest.raises(UnsupportedDomainError):
        origin_equality_witness(ellipsoid((0.5, 2.0)), epsilon=1e-3)


# ----------------------------------------------------- property sampling


@settings(max_examples=60, deadline=None)
@given(
    st.floats(min_value=-0.85, max_value=0.85),
    st.floats(min_value=-0.85, max_value=0.85),
    st.floats(min_value=-0.9, max_value=0.9),
    st.floats(min_value=-0.9, max_value=0.9),
)
def test_mobius_witness_round_trip(ar, ai, zr, zi):
    z0 = complex(ar, ai)
    z = complex(zr, zi)
    if abs(z0) > 0.9 or abs(z) > 0.95:
        return
    witness = mobius_disk_witness(z0)
    w = witness.forward((z,))[0]
    assert abs(w) < 1.0
    back = witness.inverse((w,))[0]
    assert abs(back - z) < 1e-10
    # the defining normalisation
    assert abs(witness.forward((z0,))[0]) < 1e-12


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.02, max_value=0.9), st.floats(min_value=-1.0, max_value=1.0))
def test_slit_map_stays_inside_the_disk(a, t):
    witness = slit_disk_riemann_map(a)
    z = cmath.rect(0.93, math.pi * t)
    w = witness.forward((z,))[0]
    assert abs(w) < 1.0
    assert _dist_to_slit(w) > 0.0
