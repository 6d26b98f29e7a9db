"""Complex-valued quadrature on finite intervals.

Three rules cover everything the integral representations need:

* composite Gauss-Legendre with panel doubling, for integrands analytic on
  the closed interval;
* tanh-sinh (double-exponential) refinement, for an algebraic singularity
  or non-analytic behaviour at a declared endpoint;
* the equispaced trapezoid rule for smooth 2*pi-periodic integrands, where
  it is spectrally accurate.  Its grid is midpoint-offset, so theta = 0
  and theta = +-pi are never sampled.

Error estimates are differences of consecutive refinement levels; a result
is converged once two successive levels agree within tolerance.

Singular endpoints are never evaluated.  When a singularity is declared,
the integrand may take a second positional argument: the exact distance to
the singular endpoint, computed inside the double-exponential transform
before the node position is rounded.  Factors such as
``(1 + cos(theta))**sigma`` near ``theta = pi`` lose all relative accuracy
if recomputed from the rounded node; from the distance they are exact.
"""

from __future__ import annotations

import cmath
import inspect
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import ConvergenceError, DomainError, IntegrandError

_HALF_PI = math.pi / 2.0

# tanh-sinh stopping: a side of the node sweep ends after this many
# consecutive negligible contributions (guards oscillatory zeros).
_TAIL_RUN = 3


@dataclass(frozen=True)
class Singularity:
    """Algebraic endpoint annotation: integrand ~ (distance)**exponent."""

    side: str  # "left" | "right"
    exponent: complex

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        if complex(self.exponent).real <= -1.0:
            raise DomainError(
                f"endpoint exponent {self.exponent!r} is not integrable"
            )


def left_endpoint(exponent: complex) -> Singularity:
    return Singularity("left", complex(exponent))


def right_endpoint(exponent: complex) -> Singularity:
    return Singularity("right", complex(exponent))


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budget for one integration.

    ``min_levels`` forces that many refinements before convergence may be
    declared, which is how oscillatory integrands are kept from agreeing
    by aliasing on coarse grids.
    """

    rel_tol: float = 1e-11
    abs_tol: float = 1e-14
    max_levels: int = 10
    singularity: Optional[Singularity] = None
    min_levels: int = 2

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_levels < 1:
            raise ValueError("max_levels must be >= 1")


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    err_estimate: float
    nodes_used: int
    converged: bool


def _tolerance(spec: QuadratureSpec, value: complex) -> float:
    return max(spec.rel_tol * abs(value), spec.abs_tol)


def _check_finite(v: complex, x: float) -> complex:
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise IntegrandError(f"integrand returned {v!r} at x = {x!r}")
    return v


def _wrap_integrand(f: Callable) -> Callable[[float, float], complex]:
    """Accept f(x) or f(x, dist_to_singular_endpoint)."""
    try:
        sig = inspect.signature(f)
    except (TypeError, ValueError):
        return lambda x, s: complex(f(x, s))
    positional = [
        p
        for p in sig.parameters.values()
        if p.kind in (p.POSITIONAL_ONLY, p.POSITIONAL_OR_KEYWORD)
    ]
    if len(positional) >= 2 or any(
        p.kind == p.VAR_POSITIONAL for p in sig.parameters.values()
    ):
        return lambda x, s: complex(f(x, s))
    return lambda x, s: complex(f(x))


# --------------------------------------------------------------------------
# Gauss-Legendre composite rule
# --------------------------------------------------------------------------


def _gauss_legendre_rule(n: int):
    """Nodes/weights on [-1, 1] by Newton iteration on the recurrence."""
    nodes = []
    weights = []
    for k in range(1, n // 2 + 1):
        x = math.cos(math.pi * (k - 0.25) / (n + 0.5))
        for _ in range(100):
            p0, p1 = 1.0, x
            for j in range(2, n + 1):
                p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
            dp = n * (x * p1 - p0) / (x * x - 1.0)
            dx = p1 / dp
            x -= dx
            if abs(dx) < 1e-16:
                break
        p0, p1 = 1.0, x
        for j in range(2, n + 1):
            p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        w = 2.0 / ((1.0 - x * x) * dp * dp)
        nodes.extend([-x, x])
        weights.extend([w, w])
    if n % 2:
        x = 0.0
        p0, p1 = 1.0, x
        for j in range(2, n + 1):
            p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        nodes.append(0.0)
        weights.append(2.0 / (dp * dp))
    order = sorted(range(len(nodes)), key=lambda i: nodes[i])
    return [nodes[i] for i in order], [weights[i] for i in order]


GAUSS_POINTS = 16
_GL_NODES, _GL_WEIGHTS = _gauss_legendre_rule(GAUSS_POINTS)


def _gauss_panels(f, a: float, b: float, panels: int) -> complex:
    total = 0j
    width = (b - a) / panels
    for p in range(panels):
        mid = a + (p + 0.5) * width
        half = 0.5 * width
        for x, w in zip(_GL_NODES, _GL_WEIGHTS):
            xx = mid + half * x
            total += w * _check_finite(complex(f(xx)), xx)
    return total * 0.5 * width


def _integrate_gauss(f, a: float, b: float, spec: QuadratureSpec) -> QuadratureResult:
    prev = None
    value = 0j
    err = math.inf
    nodes = 0
    panels = 1
    for level in range(spec.max_levels + 1):
        value = _gauss_panels(f, a, b, panels)
        nodes += panels * GAUSS_POINTS
        if prev is not None:
            err = abs(value - prev)
            if level >= spec.min_levels and err <= _tolerance(spec, value):
                return QuadratureResult(value, err, nodes, True)
        prev = value
        panels *= 2
    return QuadratureResult(value, err, nodes, False)


# --------------------------------------------------------------------------
# tanh-sinh rule
# --------------------------------------------------------------------------


def _de_point(t: float):
    """Transform data at parameter t > 0.

    Returns (near, far, weight): the distances from the transformed node to
    the nearby endpoint and to the far endpoint, as fractions of the full
    interval, plus the local quadrature weight (without the h factor).
    near underflows to exactly 0.0 once the node is closer to the endpoint
    than doubles can express; callers stop the sweep there.
    """
    u = _HALF_PI * math.sinh(t)
    two_u = 2.0 * u
    near = 0.0 if two_u > 708.0 else 2.0 / (1.0 + math.exp(two_u))
    far = 2.0 - near
    if u > 350.0:
        sech2 = 4.0 * math.exp(-two_u)
    else:
        c = math.cosh(u)
        sech2 = 1.0 / (c * c)
    weight = _HALF_PI * math.cosh(t) * sech2
    return near, far, weight


def _integrate_tanh_sinh(
    f, a: float, b: float, spec: QuadratureSpec
) -> QuadratureResult:
    call = _wrap_integrand(f)
    sing_right = spec.singularity.side == "right"
    scale = 0.5 * (b - a)
    nodes = 0

    def node_eval(near_b: bool, near: float, far: float) -> complex:
        # The position is always built from the endpoint the node is close
        # to, so the tiny offset survives; s is the distance to the
        # declared singular endpoint.
        if near_b:
            d_b = scale * near
            d_a = scale * far
            x = b - d_b
        else:
            d_a = scale * near
            d_b = scale * far
            x = a + d_a
        s = d_b if sing_right else d_a
        return _check_finite(call(x, s), x)

    def sweep(h: float, odd_only: bool) -> complex:
        # Raw sum of w * f over the multiples of h handled by this pass;
        # the caller applies the scale * h factor.
        nonlocal nodes
        total = 0j
        running = 0.0
        if not odd_only:
            total += _de_point(0.0)[2] * node_eval(True, 1.0, 1.0)
            nodes += 1
            running = abs(total)
        k = 1
        step = 2 if odd_only else 1
        run_pos = 0
        run_neg = 0
        while True:
            t = k * h
            near, far, w = _de_point(t)
            if near == 0.0:
                break
            contrib_pos = w * node_eval(True, near, far)
            contrib_neg = w * node_eval(False, near, far)
            total += contrib_pos + contrib_neg
            nodes += 2
            running = max(running, abs(total))
            # Negligible once the h-weighted contribution is far below both
            # tolerance targets; three in a row guards oscillatory zeros.
            cut = 0.02 * max(
                spec.abs_tol / (scale * h), spec.rel_tol * running
            )
            run_pos = run_pos + 1 if abs(contrib_pos) <= cut else 0
            run_neg = run_neg + 1 if abs(contrib_neg) <= cut else 0
            if run_pos >= _TAIL_RUN and run_neg >= _TAIL_RUN and t >= 2.0:
                break
            if t > 7.5:
                break
            k += step
        return total

    h = 1.0
    total = sweep(h, odd_only=False)
    value = scale * h * total
    prev = value
    err = math.inf
    for level in range(1, spec.max_levels + 1):
        h *= 0.5
        total = total + sweep(h, odd_only=True)
        value = scale * h * total
        err = abs(value - prev)
        if level >= spec.min_levels and err <= _tolerance(spec, value):
            return QuadratureResult(value, err, nodes, True)
        prev = value
    return QuadratureResult(value, err, nodes, False)


# --------------------------------------------------------------------------
# public operations
# --------------------------------------------------------------------------


def integrate(
    f, a: float, b: float, spec: Optional[QuadratureSpec] = None
) -> QuadratureResult:
    """Integrate f over (a, b).

    Smooth integrands go through the composite Gauss-Legendre rule; a
    declared endpoint singularity routes through tanh-sinh with nodes
    clustering at that endpoint, never touching it.
    """
    spec = spec or QuadratureSpec()
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"need finite a < b, got a={a!r}, b={b!r}")
    if spec.singularity is None:
        return _integrate_gauss(f, a, b, spec)
    return _integrate_tanh_sinh(f, a, b, spec)


def integrate_periodic(
    f, spec: Optional[QuadratureSpec] = None, n_start: int = 16
) -> QuadratureResult:
    """Trapezoid rule for a smooth 2*pi-periodic f over (-pi, pi].

    Spectrally accurate; the midpoint-offset grid never contains theta = 0
    or the endpoints.  Doubling stops when two successive grids agree.
    """
    spec = spec or QuadratureSpec()
    n = 16
    while n < n_start:
        n *= 2
    prev = None
    value = 0j
    err = math.inf
    nodes = 0
    for _ in range(spec.max_levels + 1):
        step = 2.0 * math.pi / n
        acc = 0j
        for j in range(n):
            theta = -math.pi + (j + 0.5) * step
            acc += _check_finite(complex(f(theta)), theta)
        value = acc * step
        nodes += n
        if prev is not None:
            err = abs(value - prev)
            if err <= _tolerance(spec, value):
                return QuadratureResult(value, err, nodes, True)
        prev = value
        n *= 2
    return QuadratureResult(value, err, nodes, False)


def integrate_fourier_coefficient(
    f, ell: int, spec: Optional[QuadratureSpec] = None, n_start: int = 0
) -> complex:
    """Fourier coefficient integral(-pi, pi) f(theta) exp(i ell theta) dtheta.

    Smooth periodic integrands use the trapezoid rule; a declared endpoint
    singularity falls back on :func:`integrate` over (-pi, pi).
    """
    spec = spec or QuadratureSpec()
    ell = int(ell)

    if spec.singularity is not None:
        call = _wrap_integrand(f)

        def g_sing(theta: float, s: float) -> complex:
            return call(theta, s) * cmath.exp(1j * ell * theta)

        res = integrate(g_sing, -math.pi, math.pi, spec)
        require_converged(res, "fourier coefficient")
        return res.value

    def g(theta: float) -> complex:
        return complex(f(theta)) * cmath.exp(1j * ell * theta)

    n0 = n_start or max(32, 1 << (4 * abs(ell)).bit_length())
    res = integrate_periodic(g, spec, n_start=min(n0, 4096))
    require_converged(res, "fourier coefficient")
    return res.value


def fresnel_F(lam: float, w: complex, spec: Optional[QuadratureSpec] = None) -> complex:
    """Fresnel-type integral of exp(i*(pi/2)*s**lam) from 0 to w.

    The path is the straight segment; for lam = 2 and real w the real and
    imaginary parts are the classical Fresnel C(w) and S(w).
    """
    lam = float(lam)
    if lam <= 0:
        raise DomainError("lambda must be positive")
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DomainError("only finite endpoints are supported")
    if w == 0:
        return 0j
    spec = spec or QuadratureSpec()
    if spec.singularity is None:
        # t**lam is not analytic at 0 for fractional lam; tanh-sinh copes
        # with that endpoint whether or not it is actually singular.
        spec = QuadratureSpec(
            rel_tol=spec.rel_tol,
            abs_tol=spec.abs_tol,
            max_levels=spec.max_levels,
            singularity=left_endpoint(0.0),
            min_levels=spec.min_levels,
        )
    wl = w**lam if lam == int(lam) else cmath.exp(lam * cmath.log(w))

    def integrand(_t: float, s: float) -> complex:
        return cmath.exp(1j * _HALF_PI * (s**lam) * wl)

    res = integrate(integrand, 0.0, 1.0, spec)
    require_converged(res, "fresnel integral")
    return w * res.value


def require_converged(result: QuadratureResult, what: str = "integral") -> QuadratureResult:
    """Raise ConvergenceError when a quadrature result is not converged."""
    if not result.converged:
        raise ConvergenceError(
            f"{what} did not converge: err_estimate={result.err_estimate:.3g} "
            f"after {result.nodes_used} nodes"
        )
    return result


def oscillation_levels(z_magnitude: float) -> int:
    """Minimum refinement levels for integrands oscillating like exp(i z cos)."""
    if z_magnitude <= 4.0:
        return 2
    return 2 + max(1, math.ceil(math.log2(z_magnitude / 2.0)))
