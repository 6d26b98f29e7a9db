"""Order decomposition and branch conventions.

Every kernel in this package depends on a complex order ``nu`` through two
pieces: the integer part of ``Re nu`` (floor for nonnegative real part,
ceiling for negative) and the remaining complex fractional part.  Integer
orders must produce an *exactly* zero fractional part, because the
regularized incomplete gamma factor collapses to 1 only in that case and
the integral representations then reduce to the classical trigonometric
integrals.  The decomposition therefore snaps near-integers to integers
instead of letting rounding fuzz pick the kernel branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError

# Orders within this distance of an integer are treated as that integer.
INTEGER_TOL = 1e-13


@dataclass(frozen=True)
class ComplexOrder:
    """A complex order split into integer part and complex fractional part.

    Invariants: ``nu == int_part + frac_part`` exactly,
    ``-1 < Re(frac_part) < 1``, and ``frac_part == 0`` with ``is_integer``
    set when ``nu`` is an integer to within :data:`INTEGER_TOL`.
    """

    nu: complex
    int_part: int
    frac_part: complex
    is_integer: bool = False


def decompose_order(nu: complex) -> ComplexOrder:
    """Split ``nu`` into integer part of ``Re nu`` and fractional remainder.

    The integer part is ``floor(Re nu)`` for ``Re nu >= 0`` and
    ``ceil(Re nu)`` for ``Re nu < 0``, so the fractional part keeps the
    sign of the real part and carries the whole imaginary part.
    """
    nu = complex(nu)
    if not (math.isfinite(nu.real) and math.isfinite(nu.imag)):
        raise DomainError(f"order must be finite, got {nu!r}")
    nearest = round(nu.real)
    if abs(nu.imag) <= INTEGER_TOL and abs(nu.real - nearest) <= INTEGER_TOL:
        return ComplexOrder(
            nu=complex(nearest),
            int_part=int(nearest),
            frac_part=0j,
            is_integer=True,
        )
    k = math.floor(nu.real) if nu.real >= 0 else math.ceil(nu.real)
    return ComplexOrder(nu=nu, int_part=int(k), frac_part=nu - k)


def as_order(nu) -> ComplexOrder:
    """Pass a ComplexOrder through, decompose anything else."""
    if isinstance(nu, ComplexOrder):
        return nu
    return decompose_order(nu)


def principal_power(z: complex, s: complex) -> complex:
    """``z**s`` on the principal branch, argument in (-pi, pi].

    ``0**s`` is 0 for ``Re s > 0`` and a domain error otherwise; ``s`` of 0
    or 1 returns exactly 1 or ``z``.
    """
    z = complex(z)
    s = complex(s)
    if z == 0:
        if s.real > 0:
            return 0j
        raise DomainError("0 cannot be raised to a power with Re <= 0")
    if s == 0:
        return 1.0 + 0j
    if s == 1:
        return z
    return cmath.exp(s * cmath.log(z))


def i_power(s: complex) -> complex:
    """i**s on the principal branch, exp(i*pi*s/2)."""
    return cmath.exp(0.5j * math.pi * complex(s))


def power_of_minus_iz(z: complex, s: complex) -> complex:
    """(-i z)**s with the phase of -i z taken as arg(z) - pi/2.

    For arg z <= -pi/2 this is NOT the principal power of the product:
    the product's principal argument wraps, while the kernels of the
    integral representations are analytic continuations in z from the
    positive axis and need the unwrapped phase.  Equivalent to
    exp(-i pi s / 2) * z**s with z on its principal branch, so the value
    is continuous on the whole slit plane.
    """
    return i_power(-s) * principal_power(z, s)


def sign(theta: float) -> int:
    """Sign function with sign(0) = 0.

    The kernels only meet theta = 0 on a measure-zero set and all
    quadrature grids avoid it, so any finite convention works; 0 keeps the
    function odd.
    """
    if theta > 0:
        return 1
    if theta < 0:
        return -1
    return 0
