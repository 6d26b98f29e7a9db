"""Bessel functions of the first kind for complex order.

Two independent routes are kept side by side on purpose:

* the ascending power series (the oracle), summed with a term ratio so no
  gamma evaluation happens inside the loop;
* Fourier-type trigonometric integrals whose kernel carries a regularized
  incomplete gamma factor.  For integer order the factor is 1 and the
  classical cosine-transform integrals fall out; for non-integer order the
  Tricomi-factored integrand exposes the algebraic endpoint factor
  (1 +- cos theta)**frac to the double-exponential rule.

The integral route lives on the slit plane for non-integer order; points
on (-inf, 0] are rejected rather than silently picking a side of the cut.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Union

from .errors import ConvergenceError, DomainError
from .gammafn import reciprocal_gamma, tricomi_gamma_star, tricomi_evaluator
from .orders import (
    ComplexOrder,
    as_order,
    i_power,
    power_of_minus_iz,
    principal_power,
    sign,
)
from .quadrature import (
    QuadratureResult,
    QuadratureSpec,
    integrate,
    integrate_periodic,
    left_endpoint,
    oscillation_levels,
    require_converged,
    right_endpoint,
)
from .summation import SeriesEvaluation, sum_adaptive

# Beyond this |z| the plain trigonometric rules would need Filon-type
# handling; refuse rather than return something quietly wrong.
OSCILLATION_CAP = 50.0

_SERIES_TOL = 1e-16


@dataclass(frozen=True)
class BesselEval:
    """A Bessel evaluation together with how it was produced."""

    order: ComplexOrder
    argument: complex
    value: complex
    method: str  # "series" | "integral_fourier" | "integral_classical"
    diagnostics: Union[SeriesEvaluation, QuadratureResult, None] = None


def _check_oscillation(z: complex):
    if abs(z) > OSCILLATION_CAP:
        raise ConvergenceError(
            f"|z| = {abs(z):.3g} exceeds the supported oscillation range "
            f"({OSCILLATION_CAP:g}) of the trigonometric rules"
        )


def _reject_cut(z: complex, what: str):
    if z.imag == 0.0 and z.real <= 0.0:
        raise DomainError(f"{what} needs z off (-inf, 0] for non-integer order")


def _series_z0(order: ComplexOrder) -> complex:
    if order.is_integer:
        return 1.0 + 0j if order.int_part == 0 else 0j
    if order.nu.real > 0:
        return 0j
    raise DomainError(f"J_nu(0) is unbounded for Re nu < 0, nu = {order.nu!r}")


def bessel_j_series(
    nu: complex, z: complex, tol: float = _SERIES_TOL, full_output: bool = False
):
    """J_nu(z) by the ascending power series (principal branch of (z/2)**nu).

    Negative integer orders go through J_{-n} = (-1)**n J_n, which is the
    value the series itself converges to once the leading reciprocal-gamma
    zeros are skipped.
    """
    order = as_order(nu)
    z = complex(z)
    if order.is_integer and order.int_part < 0:
        n = -order.int_part
        flip = -1.0 if n % 2 else 1.0
        out = bessel_j_series(n, z, tol, full_output)
        if full_output:
            return flip * out[0], out[1]
        return flip * out
    if z == 0:
        value = _series_z0(order)
        ev = SeriesEvaluation(value, 1, 0.0, True)
        return (value, ev) if full_output else value
    nu_c = order.nu
    q = -0.25 * z * z

    def terms():
        t = principal_power(0.5 * z, nu_c) * reciprocal_gamma(nu_c + 1.0)
        k = 0
        while True:
            yield t
            k += 1
            t = t * q / (k * (nu_c + k))

    ev = sum_adaptive(
        terms(), rel_tol=tol, consecutive=3, min_terms=max(4, int(abs(z) / 2) + 2)
    )
    if not ev.converged:
        raise ConvergenceError(f"J series did not converge for nu={nu!r}, z={z!r}")
    return (ev.value, ev) if full_output else ev.value


def bessel_j_classical(
    n: int, z: complex, spec: Optional[QuadratureSpec] = None, full_output: bool = False
):
    """Integer-order J_n(z) by the classical cosine-transform integral."""
    n = int(n)
    z = complex(z)
    if n < 0:
        flip = -1.0 if n % 2 else 1.0
        out = bessel_j_classical(-n, z, spec, full_output)
        if full_output:
            return flip * out[0], out[1]
        return flip * out
    _check_oscillation(z)
    spec = spec or QuadratureSpec(min_levels=oscillation_levels(abs(z)))
    coef = (-1j) ** n / math.pi

    def f(theta: float) -> complex:
        return cmath.exp(1j * z * math.cos(theta)) * math.cos(n * theta)

    res = require_converged(integrate(f, 0.0, math.pi, spec), "classical J integral")
    value = coef * res.value
    return (value, res) if full_output else value


def bessel_j_integral(
    mu: complex, z: complex, spec: Optional[QuadratureSpec] = None,
    full_output: bool = False,
):
    """J_mu(z) by the cosine-form Fourier-type integral on (0, pi).

    The kernel is exp(-i z cos theta) P(frac, -i z (1 + cos theta))
    cos(mu theta) with frac the complex fractional part of mu; the Tricomi
    factorization turns the incomplete-gamma factor into
    (-i z)**frac (1 + cos theta)**frac gammastar(...), and the algebraic
    endpoint factor at theta = pi is handed to the double-exponential rule
    through the exact endpoint distance.  Needs Re mu > -1/2.
    """
    order = as_order(mu)
    z = complex(z)
    if order.nu.real <= -0.5:
        raise DomainError(f"integral representation needs Re mu > -1/2, got {mu!r}")
    if z == 0:
        value = _series_z0(order)
        return (value, None) if full_output else value
    _check_oscillation(z)
    if order.is_integer:
        n = order.int_part
        spec = spec or QuadratureSpec(min_levels=oscillation_levels(abs(z)))
        coef = (1j) ** n / math.pi

        def f_int(theta: float) -> complex:
            return cmath.exp(-1j * z * math.cos(theta)) * math.cos(n * theta)

        res = require_converged(
            integrate(f_int, 0.0, math.pi, spec), "J cosine-form integral"
        )
        value = coef * res.value
        return (value, res) if full_output else value

    _reject_cut(z, "the Fourier-type J integral")
    frac = order.frac_part
    mu_c = order.nu
    coef = i_power(mu_c) / math.pi * power_of_minus_iz(z, frac)
    two_pow = principal_power(2.0, frac)
    gstar = tricomi_evaluator(frac, 2.0 * abs(z) + 1.0)
    base = spec or QuadratureSpec()
    run_spec = QuadratureSpec(
        base.rel_tol,
        base.abs_tol,
        base.max_levels,
        right_endpoint(frac),
        max(base.min_levels, oscillation_levels(abs(z))),
    )

    def f(theta: float, s: float) -> complex:
        # theta = pi - s; 1 + cos theta = 2 sin^2(s/2), built from s so the
        # algebraic factor keeps full relative accuracy at the endpoint
        half_sin = math.sin(0.5 * s)
        g = 2.0 * half_sin * half_sin
        gpow = two_pow * principal_power(half_sin, 2.0 * frac)
        return (
            cmath.exp(-1j * z * (g - 1.0))
            * gpow
            * gstar(-1j * z * g)
            * cmath.cos(mu_c * theta)
        )

    res = require_converged(
        integrate(f, 0.0, math.pi, run_spec), "Fourier-type J integral"
    )
    value = coef * res.value
    return (value, res) if full_output else value


def bessel_i_integral(
    mu: complex, z: complex, spec: Optional[QuadratureSpec] = None,
    full_output: bool = False,
):
    """Modified Bessel I_mu(z) by the same cosine-form integral.

    Valid for Re mu > -1/2 and -pi <= ph z <= pi/2 (the phase window under
    which I_mu(z) = (-i)**mu J_mu(iz) connects the two functions).
    """
    order = as_order(mu)
    z = complex(z)
    if order.nu.real <= -0.5:
        raise DomainError(f"integral representation needs Re mu > -1/2, got {mu!r}")
    if z != 0 and cmath.phase(z) > math.pi / 2.0 + 1e-15:
        raise DomainError(f"need -pi <= ph z <= pi/2, got ph z = {cmath.phase(z):.6g}")
    if z == 0:
        value = _series_z0(order)
        return (value, None) if full_output else value
    _check_oscillation(z)
    if order.is_integer:
        n = order.int_part
        spec = spec or QuadratureSpec(min_levels=oscillation_levels(abs(z)))

        def f_int(theta: float) -> complex:
            return cmath.exp(z * math.cos(theta)) * math.cos(n * theta)

        res = require_converged(
            integrate(f_int, 0.0, math.pi, spec), "I cosine-form integral"
        )
        value = res.value / math.pi
        return (value, res) if full_output else value

    frac = order.frac_part
    mu_c = order.nu
    coef = principal_power(z, frac) / math.pi
    two_pow = principal_power(2.0, frac)
    gstar = tricomi_evaluator(frac, 2.0 * abs(z) + 1.0)
    base = spec or QuadratureSpec()
    run_spec = QuadratureSpec(
        base.rel_tol,
        base.abs_tol,
        base.max_levels,
        right_endpoint(frac),
        max(base.min_levels, oscillation_levels(abs(z))),
    )

    def f(theta: float, s: float) -> complex:
        half_sin = math.sin(0.5 * s)
        g = 2.0 * half_sin * half_sin
        gpow = two_pow * principal_power(half_sin, 2.0 * frac)
        return (
            cmath.exp(z * (g - 1.0)) * gpow * gstar(z * g) * cmath.cos(mu_c * theta)
        )

    res = require_converged(
        integrate(f, 0.0, math.pi, run_spec), "Fourier-type I integral"
    )
    value = coef * res.value
    return (value, res) if full_output else value


def bessel_i_connection(nu: complex, z: complex) -> complex:
    """I_nu(z) = (-i)**nu J_nu(iz) with the series as the working route."""
    nu = complex(nu)
    z = complex(z)
    return i_power(-nu) * bessel_j_series(nu, 1j * z)


def spherical_j(ell: int, w: complex) -> complex:
    """Spherical Bessel j_ell(w) = sqrt(pi/(2w)) J_{ell+1/2}(w)."""
    ell = int(ell)
    if ell < 0:
        raise DomainError("spherical order must be a nonnegative integer")
    w = complex(w)
    if w == 0:
        return 1.0 + 0j if ell == 0 else 0j
    return cmath.sqrt(math.pi / (2.0 * w)) * bessel_j_series(ell + 0.5, w)


def kernel_frakJ(nu, z: complex, theta: float) -> complex:
    """The 2*pi-periodic kernel whose Fourier coefficients are i**l J_{nu+l}(z).

    (i**nu / 2 pi) exp(i nu (theta - pi sgn theta)) exp(i z cos theta)
    P(frac, -i z (1 - cos theta)), with the fractional power inside P on
    the branch that is continuous in z across the whole slit plane.  For
    integer order this collapses to ((-i)**n / 2 pi) exp(i z cos theta)
    exp(i n theta) away from theta = 0.
    """
    order = as_order(nu)
    z = complex(z)
    theta = float(theta)
    if order.nu.real <= -0.5:
        raise DomainError(f"kernel needs Re nu > -1/2, got {nu!r}")
    half_sin = math.sin(0.5 * theta)
    g = 2.0 * half_sin * half_sin  # 1 - cos theta
    phase = (
        i_power(order.nu)
        / (2.0 * math.pi)
        * cmath.exp(1j * order.nu * (theta - math.pi * sign(theta)))
        * cmath.exp(1j * z * (1.0 - g))
    )
    if order.is_integer:
        return phase
    frac = order.frac_part
    p_factor = (
        power_of_minus_iz(z, frac)
        * principal_power(g, frac)
        * tricomi_gamma_star(frac, -1j * z * g)
    )
    return phase * p_factor


def frakJ_fourier_coefficient(
    nu, z: complex, ell: int, spec: Optional[QuadratureSpec] = None
) -> complex:
    """Fourier coefficient integral(-pi, pi) of the kernel times exp(i l theta).

    Integer orders have an analytic periodic kernel and use the trapezoid
    rule.  Non-integer orders are split at theta = 0, where the
    (1 - cos theta)**frac factor lives, and each half runs through the
    double-exponential rule; theta = 0 is exactly representable, so the
    factor needs no distance argument here.
    """
    order = as_order(nu)
    z = complex(z)
    ell = int(ell)
    if order.nu.real <= -0.5:
        raise DomainError(f"kernel needs Re nu > -1/2, got {nu!r}")
    _check_oscillation(z)
    base = spec or QuadratureSpec()
    if order.is_integer:
        n0 = 32
        target = 8.0 * (abs(ell) + abs(z) + 4.0)
        while n0 < target:
            n0 *= 2

        def g_per(theta: float) -> complex:
            return kernel_frakJ(order, z, theta) * cmath.exp(1j * ell * theta)

        res = require_converged(
            integrate_periodic(g_per, base, n_start=n0), "kernel Fourier coefficient"
        )
        return res.value

    _reject_cut(z, "the kernel Fourier coefficient")
    frac = order.frac_part
    nu_c = order.nu
    coef = i_power(nu_c) / (2.0 * math.pi) * power_of_minus_iz(z, frac)
    two_pow = principal_power(2.0, frac)
    gstar = tricomi_evaluator(frac, 2.0 * abs(z) + 1.0)
    min_lv = max(base.min_levels, oscillation_levels(abs(z)))

    def make_half(sgn_theta: int):
        branch = cmath.exp(-1j * nu_c * math.pi * sgn_theta)

        def f(theta: float) -> complex:
            half_sin = math.sin(0.5 * theta)
            g = 2.0 * half_sin * half_sin
            gpow = two_pow * principal_power(abs(half_sin), 2.0 * frac)
            return (
                branch
                * cmath.exp(1j * (nu_c + ell) * theta)
                * cmath.exp(1j * z * (1.0 - g))
                * gpow
                * gstar(-1j * z * g)
            )

        return f

    spec_r = QuadratureSpec(
        base.rel_tol, base.abs_tol, base.max_levels, left_endpoint(frac), min_lv
    )
    spec_l = QuadratureSpec(
        base.rel_tol, base.abs_tol, base.max_levels, right_endpoint(frac), min_lv
    )
    res_l = integrate(make_half(-1), -math.pi, 0.0, spec_l)
    res_r = integrate(make_half(+1), 0.0, math.pi, spec_r)
    require_converged(res_l, "kernel Fourier coefficient")
    require_converged(res_r, "kernel Fourier coefficient")
    return coef * (res_l.value + res_r.value)


_J_METHODS = ("series", "integral", "classical")


def evaluate_j(nu: complex, z: complex, method: str = "series") -> BesselEval:
    """Method dispatcher carrying diagnostics, used by the command line."""
    order = as_order(nu)
    z = complex(z)
    if method == "series":
        value, ev = bessel_j_series(order, z, full_output=True)
        return BesselEval(order, z, value, "series", ev)
    if method == "integral":
        value, res = bessel_j_integral(order, z, full_output=True)
        return BesselEval(order, z, value, "integral_fourier", res)
    if method == "classical":
        if not order.is_integer:
            raise DomainError(
                f"the classical integral needs an integer order, got {nu!r}"
            )
        value, res = bessel_j_classical(order.int_part, z, full_output=True)
        return BesselEval(order, z, value, "integral_classical", res)
    raise DomainError(f"unknown J method {method!r}; choose from {_J_METHODS}")
