"""Quadrature engine: smooth, periodic, endpoint-singular, Fresnel."""

import cmath
import math

import pytest

from besselfourier import (
    ConvergenceError,
    DomainError,
    QuadratureSpec,
    fresnel_F,
    integrate,
    integrate_fourier_coefficient,
    integrate_periodic,
    left_endpoint,
    right_endpoint,
)
from besselfourier.errors import IntegrandError
from besselfourier.orders import principal_power
from besselfourier.quadrature import GAUSS_POINTS, oscillation_levels

from oracles import fresnel_maclaurin, graded_mesh_one_minus_cos


class TestSmoothRule:
    def test_sine(self):
        res = integrate(lambda x: math.sin(x), 0.0, math.pi)
        assert res.converged
        assert abs(res.value - 2.0) < 1e-13

    def test_polynomial_exactness(self):
        # one panel of the n-point rule integrates degree 2n-1 exactly
        deg = 2 * GAUSS_POINTS - 1
        res = integrate(lambda x: (2 * x - 1) ** deg + x, 0.0, 1.0)
        assert abs(res.value - 0.5) <= 1e-13

    def test_oscillatory(self):
        z = 30.0
        spec = QuadratureSpec(min_levels=oscillation_levels(z))
        res = integrate(lambda x: cmath.exp(1j * z * math.cos(x)), 0.0, math.pi, spec)
        assert res.converged
        # pi * J0(30), from an independent 41-point half-order recurrence
        # is overkill here; the magnitude bound plus self-consistency at a
        # doubled budget is what this guards
        spec2 = QuadratureSpec(rel_tol=1e-13, min_levels=oscillation_levels(z) + 1)
        res2 = integrate(lambda x: cmath.exp(1j * z * math.cos(x)), 0.0, math.pi, spec2)
        assert abs(res.value - res2.value) < 1e-11

    def test_interval_validation(self):
        with pytest.raises(DomainError):
            integrate(lambda x: x, 1.0, 1.0)
        with pytest.raises(DomainError):
            integrate(lambda x: x, 2.0, 1.0)

    def test_nan_rejected(self):
        with pytest.raises(IntegrandError):
            integrate(lambda x: float("nan"), 0.0, 1.0)


class TestPeriodicRule:
    def test_unit_circle_orthogonality(self):
        res = integrate_periodic(lambda t: cmath.exp(1j * t))
        assert res.converged
        assert abs(res.value) < 1e-14

    def test_fourier_coefficients(self):
        assert abs(integrate_fourier_coefficient(lambda t: cmath.exp(-1j * t), 1) - 2 * math.pi) < 1e-12
        assert abs(integrate_fourier_coefficient(lambda t: 1.0, 3)) < 1e-12

    def test_never_samples_zero_or_endpoints(self):
        seen = []

        def f(t):
            seen.append(t)
            return math.cos(t)

        integrate_periodic(f)
        assert all(t != 0.0 and abs(t) != math.pi for t in seen)

    def test_singular_annotation_falls_back_to_endpoint_rule(self):
        # declared singularity routes away from the trapezoid; closed form
        # of integral(-pi,pi) (pi - t)^(-0.3) dt checks the result
        spec = QuadratureSpec(singularity=right_endpoint(-0.3))
        got = integrate_fourier_coefficient(lambda t, s: s**-0.3, 0, spec)
        exact = (2 * math.pi) ** 0.7 / 0.7
        assert abs(got - exact) < 1e-10 * exact


class TestSingularEndpoints:
    def test_power_singularities(self):
        for sigma in (-0.49, -0.25, -0.1 + 0.3j):
            spec = QuadratureSpec(singularity=left_endpoint(sigma))
            res = integrate(
                lambda x, s, e=sigma: principal_power(s, e), 0.0, 1.0, spec
            )
            exact = 1.0 / (sigma + 1.0)
            assert res.converged
            assert abs(res.value - exact) <= 1e-11 * abs(exact)

    def test_one_minus_cos_power_against_brute_force(self):
        ref = graded_mesh_one_minus_cos()
        spec = QuadratureSpec(singularity=left_endpoint(-0.8))
        res = integrate(
            lambda x, s: principal_power(math.sin(0.5 * s), -0.8)
            * principal_power(2.0, -0.4),
            0.0,
            math.pi,
            spec,
        )
        assert res.converged
        assert abs(res.value - ref) <= 1e-11 * abs(ref)

    def test_right_endpoint_mirrored(self):
        ref = graded_mesh_one_minus_cos()
        spec = QuadratureSpec(singularity=right_endpoint(-0.8))
        res = integrate(
            lambda x, s: principal_power(math.sin(0.5 * s), -0.8)
            * principal_power(2.0, -0.4),
            0.0,
            math.pi,
            spec,
        )
        assert abs(res.value - ref) <= 1e-11 * abs(ref)

    def test_endpoint_never_evaluated(self):
        hit = []

        def f(x, s):
            hit.append(s)
            return s**-0.4

        integrate(f, 0.0, 1.0, QuadratureSpec(singularity=left_endpoint(-0.4)))
        assert min(hit) > 0.0

    def test_nonintegrable_exponent_rejected(self):
        with pytest.raises(DomainError):
            left_endpoint(-1.0)

    def test_err_estimate_contract(self):
        spec = QuadratureSpec(singularity=left_endpoint(-0.3))
        res = integrate(lambda x, s: s**-0.3, 0.0, 1.0, spec)
        assert res.converged
        assert res.err_estimate <= max(spec.rel_tol * abs(res.value), spec.abs_tol)

    def test_convergence_improves_with_levels(self):
        # starve the budget, then relax it: the estimate must shrink or
        # the flag must flip to converged
        f = lambda x, s: s**-0.45 * math.cos(8.0 * x)
        tight = integrate(
            f, 0.0, 1.0, QuadratureSpec(singularity=left_endpoint(-0.45), max_levels=2, min_levels=2)
        )
        loose = integrate(
            f, 0.0, 1.0, QuadratureSpec(singularity=left_endpoint(-0.45), max_levels=9)
        )
        assert loose.converged or loose.err_estimate < tight.err_estimate
        assert not tight.converged or loose.converged


class TestFresnel:
    def test_zero(self):
        assert fresnel_F(2, 0) == 0
        assert fresnel_F(0.7, 0) == 0

    def test_classical_point(self):
        ref = fresnel_maclaurin(1.0)
        assert abs(fresnel_F(2, 1.0) - ref) < 1e-12

    def test_complex_endpoint(self):
        w = 0.8 + 0.4j
        ref = fresnel_maclaurin(w)
        assert abs(fresnel_F(2, w) - ref) <= 1e-12 * max(1.0, abs(ref))

    def test_fractional_lambda_runs(self):
        v = fresnel_F(0.5, 1.0)
        assert cmath.isfinite(v)

    def test_lambda_validation(self):
        with pytest.raises(DomainError):
            fresnel_F(0.0, 1.0)

    def test_finite_endpoint_only(self):
        with pytest.raises(DomainError):
            fresnel_F(2.0, float("inf"))


class TestSpecValidation:
    def test_positive_tolerances(self):
        with pytest.raises(ValueError):
            QuadratureSpec(rel_tol=0.0)
        with pytest.raises(ValueError):
            QuadratureSpec(max_levels=0)

    def test_nonconvergence_reported_not_raised(self):
        spec = QuadratureSpec(
            singularity=left_endpoint(-0.49), max_levels=1, min_levels=1, rel_tol=1e-15
        )
        res = integrate(lambda x, s: s**-0.49, 0.0, 1.0, spec)
        assert not res.converged

    def test_nonconvergence_escalates_in_wrappers(self):
        spec = QuadratureSpec(max_levels=1, min_levels=1, rel_tol=1e-15, abs_tol=1e-18)
        with pytest.raises(ConvergenceError):
            fresnel_F(2, 1.0, spec)
