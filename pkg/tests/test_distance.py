"""Distance landscapes: angles, valley geometry, deceptive and robust terms."""

import numpy as np
import pytest

from gpdbench import (
    ROBUST_MINIMIZER,
    ROBUST_STABLE_RANGE,
    angle_to_reference,
    compose,
    deceptive_g,
    deceptive_term,
    max_first_orthant_angle,
    normalized_angle,
    radial_profile,
    robust_g,
    robust_term,
    valley_center,
    valley_radius,
)

DIAG3 = np.ones(3) / np.sqrt(3.0)


def test_angle_examples():
    assert angle_to_reference(np.array([1.0, 0.0]), np.array([1.0, 1.0])) == pytest.approx(np.pi / 4)
    # arccos turns one ulp of cosine noise into ~1e-8 of angle near zero
    assert angle_to_reference(np.array([2.0, 2.0]), np.array([1.0, 1.0])) == pytest.approx(0.0, abs=1e-7)
    assert angle_to_reference(DIAG3, np.array([1.0, 0.0, 0.0])) == pytest.approx(np.arccos(1 / np.sqrt(3)))


def test_angle_rejects_zero_vectors():
    with pytest.raises(ValueError):
        angle_to_reference(np.zeros(2), np.ones(2))
    with pytest.raises(ValueError):
        angle_to_reference(np.ones(2), np.zeros(2))


def test_max_first_orthant_angle():
    # widest angle inside the orthant is to the axis of the smallest component
    assert max_first_orthant_angle(np.ones(3)) == pytest.approx(np.arccos(1 / np.sqrt(3)))
    assert max_first_orthant_angle(np.array([1.0, 1.0])) == pytest.approx(np.pi / 4)
    assert max_first_orthant_angle(np.array([3.0, 4.0])) == pytest.approx(np.arccos(0.6))


def test_normalized_angle_examples():
    assert normalized_angle(np.array([1.0, 0.0]), np.array([1.0, 1.0])) == pytest.approx(1.0)
    assert normalized_angle(np.array([0.5, 0.5]), np.array([1.0, 1.0])) == pytest.approx(0.0, abs=1e-7)
    assert normalized_angle(DIAG3, np.array([1.0, 0.0, 0.0])) == pytest.approx(0.6081734479693927, abs=1e-12)


def test_normalized_angle_range():
    rng = np.random.default_rng(10)
    f = rng.uniform(0.0, 1.0, size=(500, 4)) + 1e-9
    d = np.array([1.0, 0.5, 2.0, 1.0])
    phi = normalized_angle(f, d)
    assert phi.shape == (500,)
    assert np.all(phi >= 0.0) and np.all(phi <= 1.0)


def test_valley_center_values():
    assert valley_center(1.0, 1) == 0.5  # sin(0) exactly
    assert valley_center(0.0, 1) == pytest.approx(0.5, abs=1e-12)
    assert valley_center(0.5, 1) == pytest.approx(0.544504183632599, abs=1e-12)


def test_valley_center_bounds():
    phi = np.linspace(0.0, 1.0, 2001)
    for i in (1, 2, 5, 20):
        v = valley_center(phi, i)
        assert np.all(v >= 1 / 12 - 1e-12) and np.all(v <= 11 / 12 + 1e-12)


def test_valley_radius_values():
    assert valley_radius(0.0, 1) == 0.04  # cos(0) exactly
    assert valley_radius(0.5, 1) == pytest.approx(0.01, abs=1e-12)
    assert valley_radius(0.25, 1) == pytest.approx(0.025, abs=1e-12)


def test_valley_radius_bounds_and_oscillation():
    phi = np.linspace(0.0, 1.0, 4001)
    for k in (1, 2, 3):
        r = valley_radius(phi, k)
        assert np.all(r >= 0.01 - 1e-12) and np.all(r <= 0.04 + 1e-12)
        interior = (r[1:-1] < r[:-2]) & (r[1:-1] < r[2:])
        assert int(interior.sum()) == k  # k narrow-valley dips across the sweep


def test_deceptive_term_shape():
    v, r = 0.5, 0.02
    assert deceptive_term(v, v, r) == 0.0  # exact zero at the valley center
    np.testing.assert_allclose(deceptive_term(v - r, v, r), 10.0, atol=1e-12)
    np.testing.assert_allclose(deceptive_term(v + r, v, r), 10.0, atol=1e-12)
    np.testing.assert_allclose(deceptive_term(0.0, v, r), 5.0, rtol=1e-12)
    np.testing.assert_allclose(deceptive_term(1.0, v, r), 5.0, rtol=1e-12)


def test_deceptive_term_branch_continuity():
    for v in (0.2, 0.5, 0.9):
        for r in (0.01, 0.04):
            for edge in (v - r, v + r):
                lo = deceptive_term(np.nextafter(edge, 0.0), v, r)
                hi = deceptive_term(np.nextafter(edge, 1.0), v, r)
                assert abs(lo - hi) <= 1e-9


def test_deceptive_term_deceptive_slope():
    # walking downhill from either box edge leads away from the true valley
    v, r = 0.6, 0.02
    x_left = np.linspace(0.0, v - r, 200)
    assert np.all(np.diff(deceptive_term(x_left, v, r)) > 0.0)
    x_right = np.linspace(v + r, 1.0, 200)
    assert np.all(np.diff(deceptive_term(x_right, v, r)) < 0.0)


def test_deceptive_g_examples():
    phi = 1.0
    v = valley_center(phi, np.array([1.0, 2.0, 3.0]))
    assert deceptive_g(v, phi, 1) == 0.0
    single = deceptive_g(np.array([0.0]), 1.0, 1)
    np.testing.assert_allclose(single, 5.0, rtol=1e-12)


def test_deceptive_g_additivity_and_bounds():
    rng = np.random.default_rng(11)
    x = rng.uniform(0.0, 1.0, size=(200, 6))
    phi = rng.uniform(0.0, 1.0, size=200)
    g = deceptive_g(x, phi, 2)
    assert g.shape == (200,)
    assert np.all(g >= 0.0) and np.all(g <= 10.0 * 6)
    # per-variable sum with the 1-based valley index of each column
    r = valley_radius(phi, 2)
    total = sum(deceptive_term(x[:, i], valley_center(phi, i + 1), r)
                for i in range(6))
    np.testing.assert_allclose(g, total, rtol=1e-12)


def test_robust_term_values():
    assert robust_term(ROBUST_MINIMIZER) == pytest.approx(1.8968670167707202e-4, rel=1e-12)
    assert robust_term(0.2) == pytest.approx(0.13088386701582255, rel=1e-12)
    assert robust_term(ROBUST_MINIMIZER) > 0.0


def test_robust_minimizer_is_the_grid_argmin():
    x = np.linspace(0.0, 1.0, 1000001)
    z = robust_term(x)
    am = x[np.argmin(z)]
    assert abs(am - ROBUST_MINIMIZER) <= 1e-6
    # the pinned point is off-grid, so it must undercut every grid value
    assert robust_term(ROBUST_MINIMIZER) <= np.min(z)


def test_robust_stable_range_is_flat():
    lo, hi = ROBUST_STABLE_RANGE
    x = np.linspace(lo, hi, 2001)
    z = robust_term(x)
    # the plateau varies gently; the sharp valley region does not
    assert np.max(z) - np.min(z) <= 0.15
    assert np.max(np.abs(np.diff(z))) <= 1e-3


def test_robust_g_sums_terms():
    x = np.array([0.2, 0.6, 0.35])
    np.testing.assert_allclose(robust_g(x), robust_term(x).sum(), rtol=1e-12)


def test_radial_profile_kinds():
    assert radial_profile(0.0, 0.5, "deceptive", "multiplicative") == 1.0
    assert radial_profile(2.0, 0.5, "robust", "multiplicative") == 3.0
    assert radial_profile(2.0, 0.5, "robust", "additive") == 2.0
    assert radial_profile(0.0, 1.0, "convex_concave", "multiplicative") == pytest.approx(1.0)
    assert radial_profile(0.0, 0.0, "convex_concave", "multiplicative") == pytest.approx(0.5)
    assert radial_profile(0.0, 1 / 6, "disconnected", "multiplicative") == pytest.approx(1.0, abs=1e-12)
    assert radial_profile(0.0, 0.0, "disconnected", "multiplicative") == pytest.approx(1.1)


def test_radial_profile_guard_rails():
    # tiny negative numerical crumbs are floored, real negatives rejected
    assert radial_profile(-1e-9, 0.5, "deceptive", "multiplicative") >= 1.0
    with pytest.raises(ValueError, match="-1e-3 floor"):
        radial_profile(-0.01, 0.5, "deceptive", "multiplicative")
    with pytest.raises(ValueError, match="kind"):
        radial_profile(0.0, 0.5, "nope", "multiplicative")


def test_compose():
    f_p = np.array([0.6, 0.8])
    np.testing.assert_allclose(compose(f_p, 2.0, "multiplicative"), [1.2, 1.6])
    np.testing.assert_allclose(compose(f_p, 2.0, "additive"), [2.6, 2.8])
    batch = np.tile(f_p, (3, 1))
    out = compose(batch, np.array([1.0, 2.0, 3.0]), "multiplicative")
    np.testing.assert_allclose(out[2], [1.8, 2.4])
    with pytest.raises(ValueError, match="composition"):
        compose(f_p, 2.0, "nope")


def test_front_scaling_dominates_interior():
    # any positive auxiliary value pushes points weakly outward, never inward
    rng = np.random.default_rng(12)
    f_p = rng.uniform(0.05, 1.0, size=(100, 3))
    for kind in ("deceptive", "robust"):
        for comp in ("multiplicative", "additive"):
            front = compose(f_p, radial_profile(0.0, 0.3, kind, comp), comp)
            lifted = compose(f_p, radial_profile(0.7, 0.3, kind, comp), comp)
            assert np.all(front <= lifted + 1e-12)
