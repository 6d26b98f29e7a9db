"""Gegenbauer (ultraspherical) polynomials.

The three-term recurrence is exact arithmetic in the degree and serves as
the oracle; the two trigonometric integral representations (the classical
one over (0, pi) with the (sin eta)**(2 nu - 1) weight, and the circular-arc
forms with a (cos u - cos t)**(nu - 1) endpoint factor) are the subjects
under test.  Both arc variants have algebraically singular endpoints, so
each integral is split at its midpoint and the halves go through the
double-exponential rule with the factor evaluated from the exact endpoint
distance.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError
from .gammafn import gamma_fn, reciprocal_gamma
from .orders import principal_power
from .quadrature import (
    QuadratureSpec,
    integrate,
    left_endpoint,
    require_converged,
    right_endpoint,
)

# Arc representations degrade within ~1e-6 of u = 0 or pi, where the
# 1/(sin u)**(2 nu - 1) prefactor and the collapsing interval fight.
_U_EDGE = 1e-6


def gegenbauer_recurrence(ell: int, nu: complex, x: complex) -> complex:
    """C_ell^nu(x) by the standard three-term recurrence."""
    ell = int(ell)
    if ell < 0:
        raise DomainError("degree must be a nonnegative integer")
    nu = complex(nu)
    x = complex(x)
    if ell == 0:
        return 1.0 + 0j
    prev = 1.0 + 0j
    cur = 2.0 * nu * x
    for k in range(2, ell + 1):
        prev, cur = cur, (2.0 * x * (k + nu - 1.0) * cur - (k + 2.0 * nu - 2.0) * prev) / k
    return cur


def chebyshev_t(ell: int, x: complex) -> complex:
    """Chebyshev polynomial of the first kind.

    Kept as its own recurrence: T_ell is the nu -> 0 limit of the
    Gegenbauer family, and taking that limit numerically is
    ill-conditioned.
    """
    ell = int(ell)
    if ell < 0:
        raise DomainError("degree must be a nonnegative integer")
    x = complex(x)
    if ell == 0:
        return 1.0 + 0j
    prev = 1.0 + 0j
    cur = x
    for _ in range(ell - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def h_norm(ell: int, nu: complex) -> complex:
    """Orthogonality normalization of C_ell^nu under (1-x^2)**(nu-1/2)."""
    ell = int(ell)
    if ell < 0:
        raise DomainError("degree must be a nonnegative integer")
    nu = complex(nu)
    if ell + nu == 0:
        raise DomainError(f"h_norm undefined at ell + nu = 0 (ell={ell}, nu={nu!r})")
    num = principal_power(2.0, 1.0 - 2.0 * nu) * math.pi * gamma_fn(ell + 2.0 * nu)
    return num * reciprocal_gamma(nu) ** 2 / ((ell + nu) * math.factorial(ell))


def _check_integral_order(nu: complex) -> complex:
    nu = complex(nu)
    if nu.real <= 0:
        raise DomainError(f"integral representations need Re nu > 0, got {nu!r}")
    return nu


def _check_u(u: float) -> float:
    u = float(u)
    if not _U_EDGE < u < math.pi - _U_EDGE:
        raise DomainError(f"u must lie in ({_U_EDGE}, pi - {_U_EDGE}), got {u!r}")
    return u


def gegenbauer_integral_vilenkin(
    ell: int, nu: complex, u: float, spec: QuadratureSpec | None = None
) -> complex:
    """C_ell^nu(cos u) from the (x + i sqrt(1-x^2) cos eta)**ell average.

    The (sin eta)**(2 nu - 1) weight is singular at both ends of (0, pi)
    when Re nu < 1/2; the interval splits at pi/2.
    """
    ell = int(ell)
    nu = _check_integral_order(nu)
    u = _check_u(u)
    spec = spec or QuadratureSpec()
    cu = math.cos(u)
    isu = 1j * math.sin(u)
    expo = 2.0 * nu - 1.0

    def weighted(base_cos: float, s: float) -> complex:
        return (cu + isu * base_cos) ** ell * principal_power(math.sin(s), expo)

    half = math.pi / 2.0
    spec_l = QuadratureSpec(
        spec.rel_tol, spec.abs_tol, spec.max_levels, left_endpoint(expo), spec.min_levels
    )
    spec_r = QuadratureSpec(
        spec.rel_tol, spec.abs_tol, spec.max_levels, right_endpoint(expo), spec.min_levels
    )
    # eta = s on the left half, eta = pi - s on the right half
    res_l = integrate(lambda eta, s: weighted(math.cos(s), s), 0.0, half, spec_l)
    res_r = integrate(lambda eta, s: weighted(-math.cos(s), s), half, math.pi, spec_r)
    require_converged(res_l, "gegenbauer weight integral")
    require_converged(res_r, "gegenbauer weight integral")
    pref = (ell + nu) * h_norm(ell, nu) / math.pi
    return pref * (res_l.value + res_r.value)


def gegenbauer_integral_arc(
    ell: int,
    nu: complex,
    u: float,
    variant: str = "outer",
    spec: QuadratureSpec | None = None,
) -> complex:
    """C_ell^nu(cos u) from a circular-arc Fourier-type integral.

    variant "outer" integrates exp(i(ell+nu)t) (cos u - cos t)**(nu-1)
    over (u, 2 pi - u); variant "inner" integrates
    exp(i(ell+nu)t) (cos t - cos u)**(nu-1) over (-u, u).  Both cosine
    differences vanish linearly at the interval ends and are rebuilt from
    the endpoint distance as 2 sin(u + s/2) sin(s/2).
    """
    ell = int(ell)
    nu = _check_integral_order(nu)
    u = _check_u(u)
    if variant not in ("outer", "inner"):
        raise DomainError(f"unknown variant {variant!r}")
    spec = spec or QuadratureSpec()
    mu = ell + nu
    expo = nu - 1.0
    # outer: |cos u - cos(u + s)| = 2 sin(u + s/2) sin(s/2), s from either end
    # inner: |cos(u - s) - cos u| = 2 sin(u - s/2) sin(s/2)
    lobe = 1.0 if variant == "outer" else -1.0

    def factor(s: float) -> complex:
        return principal_power(
            2.0 * math.sin(u + lobe * 0.5 * s) * math.sin(0.5 * s), expo
        )

    spec_l = QuadratureSpec(
        spec.rel_tol, spec.abs_tol, spec.max_levels, left_endpoint(expo), spec.min_levels
    )
    spec_r = QuadratureSpec(
        spec.rel_tol, spec.abs_tol, spec.max_levels, right_endpoint(expo), spec.min_levels
    )

    def integrand(t: float, s: float) -> complex:
        return cmath.exp(1j * mu * t) * factor(s)

    if variant == "outer":
        res_l = integrate(integrand, u, math.pi, spec_l)
        res_r = integrate(integrand, math.pi, 2.0 * math.pi - u, spec_r)
        branch = cmath.exp(-1j * math.pi * nu)
    else:
        res_l = integrate(integrand, -u, 0.0, spec_l)
        res_r = integrate(integrand, 0.0, u, spec_r)
        branch = 1.0 + 0j
    require_converged(res_l, "gegenbauer arc integral")
    require_converged(res_r, "gegenbauer arc integral")
    pref = (
        (ell + nu)
        * h_norm(ell, nu)
        / math.pi
        * principal_power(2.0, nu - 1.0)
        * branch
        * principal_power(math.sin(u), 1.0 - 2.0 * nu)
    )
    return pref * (res_l.value + res_r.value)
