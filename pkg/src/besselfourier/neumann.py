"""Neumann series of Bessel functions and their closed-form integrals.

A series sum_n a_n J_{nu+n}(z) with absolutely summable coefficients has
an integral representation whose kernel is the same incomplete-gamma
kernel used for a single Bessel function and whose density is simply the
analytic function A(zeta) = sum_n a_n zeta**n of the coefficients,
evaluated on the unit circle at zeta = exp(i(theta - pi/2)).

A CoefficientSequence therefore carries *both* the term generator and the
closed-form A; the two must be Fourier-consistent, and that contract is
what the built-in sequences (delta, geometric, Lommel, Kelvin) are tested
against.  Direct truncated summation with the series oracle for J is the
reference route; the full-range integral, and an equivalent half-range
cosine form whose density is summed adaptively from the raw coefficients,
are the representations under test.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .bessel import OSCILLATION_CAP, bessel_j_series, kernel_frakJ
from .errors import ConvergenceError, DivergenceError, DomainError
from .gammafn import tricomi_evaluator
from .orders import (
    ComplexOrder,
    as_order,
    i_power,
    power_of_minus_iz,
    principal_power,
)
from .quadrature import (
    QuadratureSpec,
    integrate,
    integrate_periodic,
    left_endpoint,
    oscillation_levels,
    require_converged,
    right_endpoint,
)
from .summation import sum_adaptive
from .expansions import ExpansionResult

_TERM_TOL = 1e-14


@dataclass(frozen=True)
class CoefficientSequence:
    """A Neumann coefficient sequence and its analytic circle function.

    ``term(n)`` generates a_n; ``a_on_circle(zeta)`` evaluates
    A(zeta) = sum_n a_n zeta**n for |zeta| = 1; ``abs_sum_bound`` is a
    finite bound on sum |a_n| certifying absolute summability.  Both
    callables must be safe for concurrent calls.
    """

    name: str
    term: Callable[[int], complex]
    a_on_circle: Callable[[complex], complex]
    abs_sum_bound: float

    def fourier_coefficient(self, n: int) -> complex:
        """a_n recovered from A by (1/2 pi) integral A(e^{i t}) e^{-i n t} dt.

        The consistency contract between the two fields; used by tests and
        by nothing else.
        """
        res = integrate_periodic(
            lambda t: self.a_on_circle(cmath.exp(1j * t)) * cmath.exp(-1j * n * t)
        )
        require_converged(res, "coefficient consistency integral")
        return res.value / (2.0 * math.pi)


@dataclass(frozen=True)
class NeumannKernelParams:
    """Order and argument for the kernel: Re nu > -1/2, z off (-inf, 0]
    unless the order is a nonnegative integer."""

    order: ComplexOrder
    z: complex

    @classmethod
    def create(cls, nu: complex, z: complex) -> "NeumannKernelParams":
        order = as_order(nu)
        z = complex(z)
        if order.nu.real <= -0.5:
            raise DomainError(f"need Re nu > -1/2, got {nu!r}")
        if order.is_integer and order.int_part < 0:
            raise DomainError(f"integer orders must be nonnegative, got {nu!r}")
        if not order.is_integer and z.imag == 0.0 and z.real <= 0.0:
            raise DomainError(
                f"z = {z!r} lies on the cut (-inf, 0]; allowed only for "
                "nonnegative integer orders"
            )
        return cls(order, z)


# ---------------------------------------------------------------------------
# built-in sequences
# ---------------------------------------------------------------------------


def delta_sequence() -> CoefficientSequence:
    """a_0 = 1 and nothing else; the series collapses to J_nu(z)."""
    return CoefficientSequence(
        name="delta",
        term=lambda n: 1.0 + 0j if n == 0 else 0j,
        a_on_circle=lambda zeta: 1.0 + 0j,
        abs_sum_bound=1.0,
    )


def geometric_sequence(rho: complex) -> CoefficientSequence:
    """a_n = rho**n with |rho| < 1; A(zeta) = 1/(1 - rho zeta)."""
    rho = complex(rho)
    if abs(rho) >= 1.0:
        raise DomainError(f"geometric ratio must satisfy |rho| < 1, got {rho!r}")
    return CoefficientSequence(
        name=f"geometric:{rho}",
        term=lambda n: rho**n,
        a_on_circle=lambda zeta: 1.0 / (1.0 - rho * zeta),
        abs_sum_bound=1.0 / (1.0 - abs(rho)),
    )


def lommel_sequence(w: complex, z: complex) -> CoefficientSequence:
    """Coefficients of (w/z)**(-nu) U_nu(w, z): a_{2k} = (-1)^k (w/z)^{2k}.

    A(zeta) = 1/(1 + (w/z)^2 zeta^2), converging for |w/z| < 1.
    """
    w = complex(w)
    z = complex(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    ratio = w / z
    if abs(ratio) >= 1.0:
        raise DomainError(f"need |w/z| < 1, got |w/z| = {abs(ratio):.6g}")
    r2 = ratio * ratio

    def term(n: int) -> complex:
        if n % 2:
            return 0j
        k = n // 2
        return (-1.0) ** k * r2**k

    return CoefficientSequence(
        name=f"lommel:{w},{z}",
        term=term,
        a_on_circle=lambda zeta: 1.0 / (1.0 + r2 * zeta * zeta),
        abs_sum_bound=1.0 / (1.0 - abs(ratio) ** 2),
    )


def kelvin_sequence(x: float) -> CoefficientSequence:
    """Coefficients a_k = x^k e^{i k pi/4} / (2^{k/2} k!) of the Kelvin series.

    A(zeta) = exp(x zeta e^{i pi/4} / sqrt 2), entire, so any real x works.
    """
    x = float(x)
    if x < 0:
        raise DomainError("x must be nonnegative")
    c = cmath.exp(0.25j * math.pi) / math.sqrt(2.0)

    def term(n: int) -> complex:
        return (x * c) ** n / math.factorial(n) if n < 170 else 0j

    return CoefficientSequence(
        name=f"kelvin:{x}",
        term=term,
        a_on_circle=lambda zeta: cmath.exp(x * c * zeta),
        abs_sum_bound=math.exp(x / math.sqrt(2.0)),
    )


def sequence_from_name(text: str) -> CoefficientSequence:
    """Parse a registry name: delta | geometric:rho | lommel:w,z | kelvin:x.

    Values are real, or complex written as (re,im).  The Lommel and Kelvin
    forms also accept a leading order value for symmetry with the function
    signatures; the coefficients themselves do not depend on it.
    """
    head, _, rest = text.partition(":")
    head = head.strip().lower()

    def split_args(text_args: str) -> list[str]:
        # commas inside (re,im) groups do not separate arguments
        parts, depth, cur = [], 0, []
        for ch in text_args:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "," and depth == 0:
                parts.append("".join(cur))
                cur = []
            else:
                cur.append(ch)
        parts.append("".join(cur))
        return parts

    def parse(v: str) -> complex:
        v = v.strip()
        if v.startswith("(") and v.endswith(")"):
            re_s, _, im_s = v[1:-1].partition(",")
            return complex(float(re_s), float(im_s or 0.0))
        return complex(float(v))

    args = [parse(v) for v in split_args(rest)] if rest else []
    if head == "delta":
        return delta_sequence()
    if head == "geometric":
        if len(args) != 1:
            raise DomainError("geometric takes one ratio, e.g. geometric:0.6")
        return geometric_sequence(args[0])
    if head == "lommel":
        if len(args) == 3:
            args = args[1:]
        if len(args) != 2:
            raise DomainError("lommel takes w,z (optionally nu,w,z)")
        return lommel_sequence(args[0], args[1])
    if head == "kelvin":
        if len(args) == 2:
            args = args[1:]
        if len(args) != 1:
            raise DomainError("kelvin takes x (optionally nu,x)")
        if args[0].imag:
            raise DomainError("kelvin x must be real")
        return kelvin_sequence(args[0].real)
    raise DomainError(f"unknown sequence {text!r}")


# ---------------------------------------------------------------------------
# evaluation routes
# ---------------------------------------------------------------------------


def _divergence_sentinel(n: int, a_abs: float, z_abs: float, re_nu: float) -> float:
    # n-th root of |a_n (z/2)^(nu+n) / Gamma(nu+n+1)|, the root test of the
    # convergence disk; Stirling via lgamma is plenty for a sentinel.
    if a_abs == 0.0 or z_abs == 0.0:
        return 0.0
    logt = (
        math.log(a_abs)
        + (re_nu + n) * math.log(0.5 * z_abs)
        - math.lgamma(max(re_nu + n + 1.0, 1e-3))
    )
    return math.exp(logt / n)


def neumann_direct(
    params: NeumannKernelParams,
    coeffs: CoefficientSequence,
    tol: float = _TERM_TOL,
) -> ExpansionResult:
    """Truncated summation of sum_n a_n J_{nu+n}(z) with the series oracle.

    Growing terms past n = 50, or a root-test estimate settling above 1,
    raise DivergenceError instead of returning a runaway partial sum.
    """
    nu = params.order.nu
    z = params.z
    total = 0j
    small = 0
    last = 0.0
    growth = 0
    sentinel: list[float] = []
    n = 0
    while n < 10_000:
        a_n = complex(coeffs.term(n))
        term = a_n * bessel_j_series(nu + n, z) if a_n != 0 else 0j
        total += term
        mag = abs(term)
        if n > 50:
            sentinel.append(_divergence_sentinel(n, abs(a_n), abs(z), nu.real))
            if len(sentinel) > 10:
                sentinel.pop(0)
                if min(sentinel) > 1.0:
                    raise DivergenceError(
                        f"root-test estimate exceeds 1 near n = {n}; series diverges"
                    )
            growth = growth + 1 if mag > last > 0 else 0
            if growth >= 10:
                raise DivergenceError(f"terms keep growing past n = {n}")
        last = mag
        if mag == 0.0 or (total != 0 and mag <= tol * abs(total)):
            small += 1
            if small >= 3 and n >= 4:
                return ExpansionResult(total, n + 1, mag)
        else:
            small = 0
        n += 1
    raise ConvergenceError("Neumann series did not settle within 10000 terms")


def neumann_kernel_K(params: NeumannKernelParams, theta: float) -> complex:
    """The Neumann kernel, 2*pi times the J-coefficient kernel."""
    return 2.0 * math.pi * kernel_frakJ(params.order, params.z, theta)


def _require_summable(coeffs: CoefficientSequence):
    # the closed-form integral stands on absolute summability; a finite
    # bound is the caller's certificate of it
    if not (math.isfinite(coeffs.abs_sum_bound) and coeffs.abs_sum_bound >= 0):
        raise DomainError(
            f"sequence {coeffs.name!r} carries no finite absolute-sum bound"
        )


def neumann_integral(
    params: NeumannKernelParams,
    coeffs: CoefficientSequence,
    spec: Optional[QuadratureSpec] = None,
) -> complex:
    """Closed-form integral: (1/2 pi) integral(-pi, pi) K(theta) A(e^{i(theta-pi/2)}).

    Integer orders have an analytic periodic integrand (trapezoid rule);
    non-integer orders split at theta = 0 where the (1 - cos)**frac factor
    sits, each half handled by the double-exponential rule.
    """
    _require_summable(coeffs)
    order = params.order
    z = params.z
    if abs(z) > OSCILLATION_CAP:
        raise ConvergenceError(f"|z| = {abs(z):.3g} exceeds the oscillation range")
    base = spec or QuadratureSpec()
    rot = cmath.exp(-0.5j * math.pi)

    if order.is_integer:
        n0 = 32
        target = 8.0 * (abs(z) + 4.0)
        while n0 < target:
            n0 *= 2

        def f_per(theta: float) -> complex:
            return kernel_frakJ(order, z, theta) * coeffs.a_on_circle(
                cmath.exp(1j * theta) * rot
            )

        res = require_converged(
            integrate_periodic(f_per, base, n_start=n0), "Neumann integral"
        )
        return res.value

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
                * cmath.exp(1j * nu_c * theta)
                * cmath.exp(1j * z * (1.0 - g))
                * gpow
                * gstar(-1j * z * g)
                * coeffs.a_on_circle(cmath.exp(1j * theta) * rot)
            )

        return f

    spec_l = QuadratureSpec(
        base.rel_tol, base.abs_tol, base.max_levels, right_endpoint(frac), min_lv
    )
    spec_r = QuadratureSpec(
        base.rel_tol, base.abs_tol, base.max_levels, left_endpoint(frac), min_lv
    )
    res_l = integrate(make_half(-1), -math.pi, 0.0, spec_l)
    res_r = integrate(make_half(+1), 0.0, math.pi, spec_r)
    require_converged(res_l, "Neumann integral")
    require_converged(res_r, "Neumann integral")
    return coef * (res_l.value + res_r.value)


def neumann_integral_halfrange(
    params: NeumannKernelParams,
    coeffs: CoefficientSequence,
    spec: Optional[QuadratureSpec] = None,
) -> complex:
    """The equivalent half-range cosine form on (0, pi).

    (1/pi) integral e^{-i z cos theta} P(frac, -i z (1 + cos theta))
    D(theta) dtheta with density D(theta) = sum_n i**(n+nu) a_n
    cos((n+nu) theta), summed adaptively from the raw coefficients.  This
    route deliberately never touches a_on_circle, making it independent
    from the full-range integral down to the coefficient source.
    """
    _require_summable(coeffs)
    order = params.order
    z = params.z
    if abs(z) > OSCILLATION_CAP:
        raise ConvergenceError(f"|z| = {abs(z):.3g} exceeds the oscillation range")
    base = spec or QuadratureSpec()
    nu_c = order.nu
    i_nu = i_power(nu_c)

    # i**(n+nu) a_n, extended on demand and shared across nodes
    weighted: list[complex] = []

    def weighted_coeff(n: int) -> complex:
        while len(weighted) <= n:
            k = len(weighted)
            weighted.append((1j**k) * i_nu * complex(coeffs.term(k)))
        return weighted[n]

    def density(theta: float) -> complex:
        rot = cmath.exp(1j * theta)
        p = cmath.exp(1j * nu_c * theta)
        q = 1.0 / p

        def terms():
            nonlocal p, q
            n = 0
            while True:
                yield weighted_coeff(n) * 0.5 * (p + q)
                n += 1
                p *= rot
                q /= rot

        ev = sum_adaptive(terms(), rel_tol=1e-16, consecutive=3, min_terms=4)
        if not ev.converged:
            raise ConvergenceError("half-range density sum did not converge")
        return ev.value

    if order.is_integer:
        spec_run = QuadratureSpec(
            base.rel_tol,
            base.abs_tol,
            base.max_levels,
            None,
            max(base.min_levels, oscillation_levels(abs(z))),
        )

        def f_int(theta: float) -> complex:
            return cmath.exp(-1j * z * math.cos(theta)) * density(theta)

        res = require_converged(
            integrate(f_int, 0.0, math.pi, spec_run), "half-range Neumann integral"
        )
        return res.value / math.pi

    frac = order.frac_part
    coef = power_of_minus_iz(z, frac) / math.pi
    two_pow = principal_power(2.0, frac)
    gstar = tricomi_evaluator(frac, 2.0 * abs(z) + 1.0)
    spec_run = QuadratureSpec(
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
            cmath.exp(-1j * z * (g - 1.0)) * gpow * gstar(-1j * z * g) * density(theta)
        )

    res = require_converged(
        integrate(f, 0.0, math.pi, spec_run), "half-range Neumann integral"
    )
    return coef * res.value


# ---------------------------------------------------------------------------
# Lommel functions of two variables
# ---------------------------------------------------------------------------


def lommel_u(nu: complex, w: complex, z: complex, method: str = "series") -> complex:
    """Bivariate Lommel U_nu(w, z), by Neumann series or its closed integral.

    Series: sum_n (-1)^n (w/z)^(nu+2n) J_{nu+2n}(z), |w/z| < 1.  The
    integral route folds the rational density into a cosine difference and
    additionally needs Re nu > -1/2 and z off the cut for fractional nu.
    """
    nu = complex(nu)
    w = complex(w)
    z = complex(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    ratio = w / z
    if abs(ratio) >= 1.0:
        raise DomainError(f"need |w/z| < 1, got |w/z| = {abs(ratio):.6g}")
    if w == 0:
        if nu.real > 0:
            return 0j
        raise DomainError("w = 0 needs Re nu > 0")
    if method == "series":
        pref = principal_power(ratio, nu)
        r2 = ratio * ratio

        def terms():
            t = pref
            n = 0
            while True:
                yield t * bessel_j_series(nu + 2 * n, z)
                n += 1
                t *= -r2

        ev = sum_adaptive(terms(), rel_tol=1e-16, consecutive=3, min_terms=4)
        if not ev.converged:
            raise ConvergenceError("Lommel series did not converge")
        return ev.value
    if method != "integral":
        raise DomainError(f"unknown Lommel method {method!r}")

    params = NeumannKernelParams.create(nu, z)  # validates order and cut
    order = params.order
    if abs(z) > OSCILLATION_CAP:
        raise ConvergenceError(f"|z| = {abs(z):.3g} exceeds the oscillation range")
    r2 = ratio * ratio
    pref = principal_power(ratio, nu) * i_power(nu) / math.pi

    def rational(theta: float) -> complex:
        num = cmath.cos(nu * theta) - r2 * cmath.cos((nu - 2.0) * theta)
        den = 1.0 - 2.0 * r2 * cmath.cos(2.0 * theta) + r2 * r2
        return num / den

    if order.is_integer:
        spec_run = QuadratureSpec(min_levels=oscillation_levels(abs(z)))

        def f_int(theta: float) -> complex:
            return cmath.exp(-1j * z * math.cos(theta)) * rational(theta)

        res = require_converged(
            integrate(f_int, 0.0, math.pi, spec_run), "Lommel integral"
        )
        return pref * res.value

    frac = order.frac_part
    pref = pref * power_of_minus_iz(z, frac)
    two_pow = principal_power(2.0, frac)
    gstar = tricomi_evaluator(frac, 2.0 * abs(z) + 1.0)
    spec_run = QuadratureSpec(
        singularity=right_endpoint(frac), min_levels=oscillation_levels(abs(z))
    )

    def f(theta: float, s: float) -> complex:
        half_sin = math.sin(0.5 * s)
        g = 2.0 * half_sin * half_sin
        gpow = two_pow * principal_power(half_sin, 2.0 * frac)
        return (
            cmath.exp(-1j * z * (g - 1.0)) * gpow * gstar(-1j * z * g) * rational(theta)
        )

    res = require_converged(integrate(f, 0.0, math.pi, spec_run), "Lommel integral")
    return pref * res.value


def lommel_v(nu: complex, w: complex, z: complex, method: str = "series") -> complex:
    """V_nu(w, z) = cos(w/2 + z^2/(2w) + nu pi/2) + U_{2-nu}(w, z).

    The integral route for the U term needs Re(2 - nu) > -1/2, i.e.
    Re nu < 5/2.
    """
    nu = complex(nu)
    w = complex(w)
    z = complex(z)
    if w == 0:
        raise DomainError("w must be nonzero")
    head = cmath.cos(0.5 * w + z * z / (2.0 * w) + 0.5 * math.pi * nu)
    return head + lommel_u(2.0 - nu, w, z, method)


# ---------------------------------------------------------------------------
# Kelvin functions
# ---------------------------------------------------------------------------

_KELVIN_METHODS = ("connection", "neumann_series", "integral", "classical_integer")


def kelvin_ber_bei(nu: complex, x: float, method: str = "connection") -> complex:
    """ber_nu(x) + i bei_nu(x) for x >= 0, by any of four routes.

    connection: e^{i pi nu} J_nu(x e^{-i pi/4}) (series oracle);
    neumann_series: the expansion in J_{nu+k}(x) with factorially decaying
    coefficients; integral: the closed form from the Neumann kernel, valid
    for Re nu > -1/2; classical_integer: the sin/cos-cosh/sinh integrals,
    integer nu only.  All report the same argument convention: the
    integral and classical forms natively live at sqrt(2)-scaled argument
    and are rescaled internally.
    """
    nu = complex(nu)
    x = float(x)
    if x < 0:
        raise DomainError("x must be nonnegative")
    if method not in _KELVIN_METHODS:
        raise DomainError(f"unknown Kelvin method {method!r}; choose {_KELVIN_METHODS}")
    if x == 0:
        order = as_order(nu)
        if order.is_integer and order.int_part == 0:
            return 1.0 + 0j
        if nu.real > 0:
            return 0j
        raise DomainError("x = 0 needs nu = 0 or Re nu > 0")

    if method == "connection":
        return cmath.exp(1j * math.pi * nu) * bessel_j_series(
            nu, x * cmath.exp(-0.25j * math.pi)
        )

    if method == "neumann_series":
        front = cmath.exp(0.75j * math.pi * nu)
        c = cmath.exp(0.25j * math.pi) / math.sqrt(2.0)

        def terms():
            t = 1.0 + 0j
            k = 0
            while True:
                yield t * bessel_j_series(nu + k, x)
                k += 1
                t = t * x * c / k

        ev = sum_adaptive(terms(), rel_tol=1e-16, consecutive=3, min_terms=4)
        if not ev.converged:
            raise ConvergenceError("Kelvin series did not converge")
        return front * ev.value

    order = as_order(nu)
    y = x / math.sqrt(2.0)

    if method == "classical_integer":
        if not order.is_integer or order.int_part < 0:
            raise DomainError("classical_integer needs a nonnegative integer order")
        n = order.int_part
        spec_run = QuadratureSpec(min_levels=oscillation_levels(y))

        def f_cl(t: float) -> complex:
            s = y * math.sin(t)
            return complex(
                math.cos(s - n * t) * math.cosh(s), math.sin(s - n * t) * math.sinh(s)
            )

        res = require_converged(
            integrate(f_cl, 0.0, math.pi, spec_run), "Kelvin classical integral"
        )
        return (-1.0) ** n / math.pi * res.value

    # integral route
    if order.nu.real <= -0.5:
        raise DomainError(f"integral route needs Re nu > -1/2, got {nu!r}")
    c = cmath.exp(0.25j * math.pi)
    front = cmath.exp(1.25j * math.pi * nu) / math.pi
    cbar = c.conjugate()

    def trig(theta: float) -> complex:
        return cmath.cos(nu * theta - cbar * y * math.sin(theta))

    if order.is_integer:
        spec_run = QuadratureSpec(min_levels=oscillation_levels(x))

        def f_int(theta: float) -> complex:
            return cmath.exp(-c * y * math.cos(theta)) * trig(theta)

        res = require_converged(
            integrate(f_int, 0.0, math.pi, spec_run), "Kelvin integral"
        )
        return front * res.value

    frac = order.frac_part
    front = front * power_of_minus_iz(x, frac)
    two_pow = principal_power(2.0, frac)
    gstar = tricomi_evaluator(frac, 2.0 * x + 1.0)
    spec_run = QuadratureSpec(
        singularity=right_endpoint(frac), min_levels=oscillation_levels(x)
    )

    def f(theta: float, s: float) -> complex:
        half_sin = math.sin(0.5 * s)
        g = 2.0 * half_sin * half_sin
        gpow = two_pow * principal_power(half_sin, 2.0 * frac)
        # e^{-c y cos theta} with cos theta = g - 1
        return (
            cmath.exp(-c * y * (g - 1.0)) * gpow * gstar(-1j * x * g) * trig(theta)
        )

    res = require_converged(integrate(f, 0.0, math.pi, spec_run), "Kelvin integral")
    return front * res.value


_SEQUENCE_METHODS = ("direct", "integral", "halfrange")


def evaluate_neumann(
    nu: complex, z: complex, coeffs: CoefficientSequence, method: str = "direct"
):
    """Dispatcher for the three Neumann routes, for the command line."""
    params = NeumannKernelParams.create(nu, z)
    if method == "direct":
        return neumann_direct(params, coeffs)
    if method == "integral":
        return neumann_integral(params, coeffs)
    if method == "halfrange":
        return neumann_integral_halfrange(params, coeffs)
    raise DomainError(f"unknown method {method!r}; choose from {_SEQUENCE_METHODS}")
