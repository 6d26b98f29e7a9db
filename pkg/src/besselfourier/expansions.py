"""Trigonometric reconstructions and Bessel-series expansions.

Inverting the Fourier relation between the kernel and i**l J_{nu+l}(z)
gives, for integer and half-integer base order, classical expansions in a
unified form: the Jacobi-Anger plane wave, the error function as a sum of
modified Bessel functions of half-odd order, the order-1/2 lower
incomplete gamma, and Fresnel's integral as a Chebyshev-weighted sum of
spherical Bessel functions.

All sums truncate adaptively: the Bessel factors decay factorially in the
summation index for fixed argument, so three consecutive terms below
1e-16 of the running sum end the summation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .bessel import bessel_j_series, frakJ_fourier_coefficient, spherical_j
from .errors import ConvergenceError, DomainError, UnsupportedError
from .gegenbauer import chebyshev_t
from .orders import i_power, sign
from .summation import sum_adaptive

_TERM_TOL = 1e-16
_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class ExpansionResult:
    """Adaptive partial sum of a Bessel-coefficient expansion."""

    value: complex
    terms_used: int
    tail_bound: float
    partial: bool = False

    def __complex__(self) -> complex:
        return self.value


def _summed(terms, min_terms: int = 2, what: str = "expansion") -> tuple[complex, int, float]:
    ev = sum_adaptive(terms, rel_tol=_TERM_TOL, consecutive=3, min_terms=min_terms)
    if not ev.converged:
        raise ConvergenceError(f"{what} did not converge")
    return ev.value, ev.terms_used, ev.last_term


def erf_maclaurin(w: complex, tol: float = 1e-17) -> complex:
    """erf by its Maclaurin series, the reference the Bessel routes answer to.

    (2/sqrt(pi)) sum_k (-1)^k w^(2k+1) / (k! (2k+1)); fine for the
    moderate |w| this package works at.
    """
    w = complex(w)

    def terms():
        t = w
        k = 0
        while True:
            yield t
            k += 1
            t = t * (-(w * w)) / k * (2 * k - 1) / (2 * k + 1)

    ev = sum_adaptive(terms(), rel_tol=tol, consecutive=3, min_terms=max(2, int(abs(w) ** 2)))
    if not ev.converged:
        raise ConvergenceError("erf Maclaurin series did not converge")
    return 2.0 / _SQRT_PI * ev.value


def modified_i(nu: complex, z: complex) -> complex:
    """I_nu(z) through the rotation I_nu(z) = (-i)**nu J_nu(iz).

    Keeps the power series as the single series oracle behind every
    modified-Bessel coefficient in this module.
    """
    nu = complex(nu)
    z = complex(z)
    return i_power(-nu) * bessel_j_series(nu, 1j * z)


def jacobi_anger(z: complex, theta: float, n_terms: int | None = None) -> ExpansionResult:
    """Plane wave exp(i z cos theta) as J_0 + 2 sum_l i**l J_l(z) cos(l theta)."""
    z = complex(z)
    theta = float(theta)
    if n_terms is not None and n_terms < 1:
        raise DomainError("n_terms must be >= 1")

    if n_terms is None:
        total = bessel_j_series(0, z)
        small = 0
        last = abs(total)
        ell = 0
        while True:
            ell += 1
            jl = bessel_j_series(ell, z)
            term = 2.0 * (1j**ell) * jl * math.cos(ell * theta)
            total += term
            last = 2.0 * abs(jl)
            if abs(jl) < 1e-16 and ell > abs(z):
                small += 1
                if small >= 2:
                    return ExpansionResult(total, ell + 1, last)
            else:
                small = 0
            if ell > 4000:
                raise ConvergenceError("Jacobi-Anger sum did not converge")
    total = bessel_j_series(0, z)
    last = abs(total)
    for ell in range(1, n_terms):
        jl = bessel_j_series(ell, z)
        total += 2.0 * (1j**ell) * jl * math.cos(ell * theta)
        last = 2.0 * abs(jl)
    return ExpansionResult(total, n_terms, last)


def _check_w_phase(w: complex):
    if w == 0:
        return
    ph = cmath.phase(w)
    if not (-math.pi / 2.0 < ph <= math.pi / 2.0 + 1e-15):
        raise DomainError(f"need -pi/2 < ph w <= pi/2, got ph w = {ph:.6g}")


def erf_bessel_general(w: complex, phi: float) -> ExpansionResult:
    """erf(w sin phi) = 2 e^{w^2 cos(2 phi)/2} sum_l (-1)^l I_{l+1/2}(w^2/2) sin((2l+1) phi)."""
    w = complex(w)
    phi = float(phi)
    _check_w_phase(w)
    w2h = 0.5 * w * w
    front = 2.0 * cmath.exp(w2h * math.cos(2.0 * phi))

    def terms():
        ell = 0
        while True:
            yield (-1.0) ** ell * modified_i(ell + 0.5, w2h) * math.sin(
                (2 * ell + 1) * phi
            )
            ell += 1

    value, used, last = _summed(terms(), what="erf expansion")
    return ExpansionResult(front * value, used, abs(front) * last)


def erf_bessel_sum(w: complex) -> ExpansionResult:
    """erf(w) = 2 e^{-w^2/2} sum_l I_{l+1/2}(w^2/2)."""
    w = complex(w)
    _check_w_phase(w)
    w2h = 0.5 * w * w
    front = 2.0 * cmath.exp(-w2h)

    def terms():
        ell = 0
        while True:
            yield modified_i(ell + 0.5, w2h)
            ell += 1

    value, used, last = _summed(terms(), what="erf expansion")
    return ExpansionResult(front * value, used, abs(front) * last)


def erf_bessel_alternating(w: complex) -> ExpansionResult:
    """erf(w) = sqrt(2) sum_l (-1)^l [I_{2l+1/2}(w^2) - I_{2l+3/2}(w^2)]."""
    w = complex(w)
    _check_w_phase(w)
    w2 = w * w

    def terms():
        ell = 0
        while True:
            yield (-1.0) ** ell * (
                modified_i(2 * ell + 0.5, w2) - modified_i(2 * ell + 1.5, w2)
            )
            ell += 1

    value, used, last = _summed(terms(), what="erf expansion")
    return ExpansionResult(math.sqrt(2.0) * value, used, math.sqrt(2.0) * last)


def incgamma_half_expansion(
    z: complex, theta: float, n: int = 0, allow_partial: bool = False
) -> ExpansionResult:
    """Order-1/2 lower incomplete gamma at -i z (1 - cos theta) as a sine sum.

    gamma(1/2, -i z (1 - cos theta)) = 2 sqrt(pi) i**n sgn(theta)
    e^{-i pi/4} e^{-i z cos theta} sum_{l >= -n} c_l sin((l + n + 1/2) theta)
    with c_l = i**l J_{n + l + 1/2}(z) for l >= 0.  Only n = 0 closes the
    coefficient set; for n >= 1 the negative-index coefficients have no
    closed form here, so the l >= 0 partial sum is returned only on
    request, flagged partial.
    """
    z = complex(z)
    theta = float(theta)
    n = int(n)
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    if n >= 1 and not allow_partial:
        raise UnsupportedError(
            "full reconstruction needs the negative-index coefficients, "
            "which are only available for n = 0"
        )
    base = n + 0.5
    front = (
        2.0
        * _SQRT_PI
        * (1j**n)
        * sign(theta)
        * cmath.exp(-0.25j * math.pi)
        * cmath.exp(-1j * z * math.cos(theta))
    )

    def terms():
        ell = 0
        while True:
            yield (
                (1j**ell)
                * bessel_j_series(base + ell, z)
                * math.sin((ell + n + 0.5) * theta)
            )
            ell += 1

    value, used, last = _summed(terms(), what="incomplete-gamma expansion")
    return ExpansionResult(front * value, used, abs(front) * last, partial=n >= 1)


def erfgamma_sine_form(w: complex, phi: float) -> ExpansionResult:
    """gamma(1/2, w^2 sin^2 phi) as the odd sine sum in modified Bessels.

    Equals sqrt(pi) erf(w sin phi) for positive arguments; the sgn(phi)
    factor keeps the right-hand side even in phi like the left.
    """
    w = complex(w)
    phi = float(phi)
    _check_w_phase(w)
    w2h = 0.5 * w * w
    front = 2.0 * _SQRT_PI * sign(phi) * cmath.exp(w2h * math.cos(2.0 * phi))

    def terms():
        ell = 0
        while True:
            yield (-1.0) ** ell * modified_i(ell + 0.5, w2h) * math.sin(
                (2 * ell + 1) * phi
            )
            ell += 1

    if phi == 0.0:
        return ExpansionResult(0j, 1, 0.0)
    value, used, last = _summed(terms(), what="incomplete-gamma expansion")
    return ExpansionResult(front * value, used, abs(front) * last)


def fresnel_bessel(a: float, w: complex) -> ExpansionResult:
    """Fresnel integral F_2(a w) as a Chebyshev-weighted spherical-Bessel sum.

    F_2(a w) = w e^{i (pi/4) w^2 (2 a^2 - 1)} sum_l (-i)**l T_{2l+1}(a)
    j_l(pi w^2 / 4), for a in [0, 1] (a = cos((theta - pi)/2) with theta
    in [0, pi]) and w != 0.
    """
    a = float(a)
    w = complex(w)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"a must lie in [0, 1], got {a!r}")
    if w == 0:
        raise DomainError("w must be nonzero")
    arg = 0.25 * math.pi * w * w
    front = w * cmath.exp(0.25j * math.pi * w * w * (2.0 * a * a - 1.0))

    def terms():
        ell = 0
        while True:
            yield (-1j) ** ell * chebyshev_t(2 * ell + 1, a) * spherical_j(ell, arg)
            ell += 1

    if a == 0.0:
        return ExpansionResult(0j, 1, 0.0)
    value, used, last = _summed(terms(), what="Fresnel expansion")
    return ExpansionResult(front * value, used, abs(front) * last)


def inv3_reconstruction(
    n: int, z: complex, theta: float, allow_partial: bool = False
) -> ExpansionResult:
    """Reconstruct (-i)**n e^{i z cos theta} from kernel Fourier coefficients.

    (-i)**n e^{i z cos theta} = c_{-n} + 2 sum_{l >= -n+1} c_l cos((l+n) theta)
    with c_l = i**l J_{n+l}(z) for l >= 0.  The self-paired coefficient
    c_{-n} comes from quadrature of the kernel; the interior coefficients
    -n+1 <= l <= -1 exist in closed form only for n <= 1, so n >= 2 is a
    flagged partial reconstruction (or an error unless requested).
    """
    n = int(n)
    z = complex(z)
    theta = float(theta)
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    if n >= 2 and not allow_partial:
        raise UnsupportedError(
            "interior coefficients -n+1 <= l <= -1 have no closed form; "
            "only n <= 1 reconstructs fully"
        )
    if n == 0:
        res = jacobi_anger(z, theta)
        return ExpansionResult(res.value, res.terms_used, res.tail_bound)
    head = frakJ_fourier_coefficient(n, z, -n)

    def terms():
        ell = 0
        while True:
            yield (
                2.0
                * (1j**ell)
                * bessel_j_series(n + ell, z)
                * math.cos((ell + n) * theta)
            )
            ell += 1

    value, used, last = _summed(terms(), what="plane-wave reconstruction")
    return ExpansionResult(head + value, used + 1, last, partial=n >= 2)
