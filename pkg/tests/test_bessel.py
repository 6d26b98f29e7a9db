"""Bessel J and I: series oracle, integral routes, kernel identities."""

import cmath
import math

import pytest

from besselfourier import (
    ConvergenceError,
    DomainError,
    QuadratureSpec,
    bessel_i_connection,
    bessel_i_integral,
    bessel_j_classical,
    bessel_j_integral,
    bessel_j_series,
    evaluate_j,
    frakJ_fourier_coefficient,
    fresnel_F,
    integrate,
    kernel_frakJ,
    left_endpoint,
    right_endpoint,
    spherical_j,
)
from besselfourier.orders import i_power, principal_power

from oracles import bessel_j_half_order


class TestSeries:
    def test_at_zero(self):
        assert bessel_j_series(0, 0) == 1
        assert bessel_j_series(3, 0) == 0
        assert bessel_j_series(0.7, 0) == 0
        with pytest.raises(DomainError):
            bessel_j_series(-0.3, 0)

    def test_half_order_closed_form(self):
        for z in (0.4, 1.7, 3.0, 2 + 1j):
            ref = bessel_j_half_order(0, z)
            assert abs(bessel_j_series(0.5, z) - ref) <= 1e-14 * max(1.0, abs(ref))

    def test_higher_half_orders(self):
        for n in (1, 2, 4):
            for z in (1.5, 2 - 0.7j):
                ref = bessel_j_half_order(n, z)
                got = bessel_j_series(n + 0.5, z)
                assert abs(got - ref) <= 1e-12 * max(1.0, abs(ref))

    def test_negative_integer_symmetry(self):
        assert abs(bessel_j_series(-3, 2.5) + bessel_j_series(3, 2.5)) < 1e-16
        assert abs(bessel_j_series(-2, 1 + 1j) - bessel_j_series(2, 1 + 1j)) < 1e-16

    def test_diagnostics(self):
        value, ev = bessel_j_series(0.5, 1.7, full_output=True)
        assert ev.converged
        assert ev.terms_used < 40
        assert value == ev.value


class TestIntegralRoute:
    def test_matches_series_on_grid(self):
        for nu in (0, 0.3, 0.5, 1, 2.5, 1.7 + 0.5j, -0.3):
            for z in (0.5, 1, 2 + 1j, 5 * cmath.exp(0.25j * math.pi), 10):
                s = bessel_j_series(nu, z)
                i = bessel_j_integral(nu, z)
                assert abs(i - s) <= 1e-8 * max(1.0, abs(s)), (nu, z)

    def test_integer_collapse(self):
        for n in range(7):
            for z in (1, 2 + 1j):
                a = bessel_j_series(n, z)
                b = bessel_j_integral(n, z)
                c = bessel_j_classical(n, z)
                assert abs(a - b) <= 1e-10
                assert abs(b - c) <= 1e-10
                assert abs(a - c) <= 1e-10

    def test_classical_negative_order(self):
        assert abs(bessel_j_classical(-2, 3.0) - bessel_j_series(2, 3.0)) < 1e-12
        assert abs(bessel_j_classical(-1, 1.0) + bessel_j_series(1, 1.0)) < 1e-12

    def test_preconditions(self):
        with pytest.raises(DomainError):
            bessel_j_integral(-0.6, 1.0)
        with pytest.raises(DomainError):
            bessel_j_integral(0.5, -2.0)  # cut
        with pytest.raises(ConvergenceError):
            bessel_j_integral(0.5, 60.0)  # oscillation cap

    def test_analytic_continuation_below_zero(self):
        # Re nu in (-1/2, 0) has a genuinely singular kernel factor
        s = bessel_j_series(-0.3, 1.0)
        i = bessel_j_integral(-0.3, 1.0)
        assert abs(i - s) < 1e-10

    def test_lower_left_quadrant_branch(self):
        # arg z < -pi/2: the kernel's fractional power must follow the
        # continued phase arg(z) - pi/2, not the wrapped principal
        # argument of -i z; regression for a silent branch jump there
        for nu in (0.4, 0.64 - 0.99j, 2.3 + 0.5j):
            for z in (-3 - 2j, 5 * cmath.exp(-2.7j)):
                s = bessel_j_series(nu, z)
                i = bessel_j_integral(nu, z)
                assert abs(i - s) <= 1e-9 * max(1.0, abs(s)), (nu, z)

    def test_dispatcher(self):
        ev = evaluate_j(0.5, 1.7, "integral")
        assert ev.method == "integral_fourier"
        assert abs(ev.value - bessel_j_half_order(0, 1.7)) < 1e-10
        with pytest.raises(DomainError):
            evaluate_j(0.5, 1.0, "classical")
        with pytest.raises(DomainError):
            evaluate_j(0.5, 1.0, "nope")


class TestModifiedBessel:
    def test_at_zero(self):
        assert bessel_i_integral(0, 0) == 1

    def test_integer_orders(self):
        for m in range(5):
            for z in (0.5, 1.3):
                a = bessel_i_integral(m, z)
                b = bessel_i_connection(m, z)
                assert abs(a - b) <= 1e-12

    def test_fractional_order(self):
        for mu, z in ((0.5, 2.0), (1.3, 0.7), (0.5, 1j)):
            a = bessel_i_integral(mu, z)
            b = bessel_i_connection(mu, z)
            assert abs(a - b) <= 1e-10 * max(1.0, abs(b)), (mu, z)

    def test_phase_restriction(self):
        with pytest.raises(DomainError):
            bessel_i_integral(0.5, -1.0)  # ph z = pi > pi/2


class TestSphericalBessel:
    def test_j0(self):
        assert abs(spherical_j(0, 1.0) - math.sin(1.0)) < 1e-15
        assert spherical_j(0, 0) == 1
        assert spherical_j(2, 0) == 0

    def test_j2(self):
        got = spherical_j(2, 1.5)
        ref = math.sqrt(math.pi / 3.0) * bessel_j_half_order(2, 1.5)
        assert abs(got - ref) < 1e-13


class TestKernel:
    def test_order_zero(self):
        z, th = 1.3, 0.8
        got = kernel_frakJ(0, z, th)
        assert abs(got - cmath.exp(1j * z * math.cos(th)) / (2 * math.pi)) < 1e-15

    def test_reflection_symmetry(self):
        nu, z, th = 0.7, 1 + 1j, 1.1
        lhs = kernel_frakJ(nu, z, -th)
        rhs = cmath.exp(-2j * nu * (th - math.pi)) * kernel_frakJ(nu, z, th)
        assert abs(lhs - rhs) < 1e-14

    def test_fourier_coefficients_are_bessel_values(self):
        for ell in (0, 1, 2):
            c = frakJ_fourier_coefficient(0.5, 1.0, ell)
            ref = bessel_j_series(0.5 + ell, 1.0)
            assert abs((-1j) ** ell * c - ref) < 1e-9, ell

    def test_fresnel_form_consistency(self):
        # the kernel rewritten through the Fresnel-type integral
        nu, z, th = 0.5, 1.0, 2.0
        direct = kernel_frakJ(nu, z, th)
        lam = 1.0 / nu
        arg = principal_power(2.0 * z * (1.0 - math.cos(th)) / math.pi, nu)
        pref = (
            math.pi ** (nu - 1.0)
            / (2.0 ** (nu + 1.0) * math.gamma(nu + 1.0))
            * cmath.exp(1j * nu * (th - math.pi))
            * cmath.exp(1j * z * math.cos(th))
        )
        via_fresnel = pref * fresnel_F(lam, arg)
        assert abs(direct - via_fresnel) < 1e-9

    def test_vanishing_moments(self):
        # z-independent moment integrals of the order-shift remainder are
        # null for nonnegative Fourier index
        nu, j = 1.5, 1
        expo = nu - j
        for ell in (0, 1, 2):

            def half(sg):
                def f(th):
                    hs = abs(math.sin(0.5 * th))
                    fac = principal_power(2.0, expo) * principal_power(hs, 2 * expo)
                    return cmath.exp(1j * nu * (th - math.pi * sg)) * fac * cmath.exp(1j * ell * th)

                return f

            left = integrate(
                half(-1), -math.pi, 0.0, QuadratureSpec(singularity=right_endpoint(expo))
            )
            right = integrate(
                half(+1), 0.0, math.pi, QuadratureSpec(singularity=left_endpoint(expo))
            )
            assert left.converged and right.converged
            assert abs(left.value + right.value) < 1e-9, ell

    def test_i_power_convention(self):
        assert abs(i_power(2) - (-1)) < 1e-15
        assert abs(i_power(0.5) - cmath.exp(0.25j * math.pi)) < 1e-15
