"""Gamma family: complete, Tricomi form, regularized, recurrence shift."""

import cmath
import math
import random

import pytest

from besselfourier import (
    PoleError,
    P_recurrence_shift,
    gamma_fn,
    lower_incomplete_gamma,
    reciprocal_gamma,
    regularized_P,
    tricomi_evaluator,
    tricomi_gamma_star,
    tricomi_gamma_star_series,
)
from besselfourier.errors import RangeError

from oracles import GAMMA_REFERENCE, GAMMA_STAR_HALF_ONE, erf_maclaurin

SQRT_PI = math.sqrt(math.pi)


class TestCompleteGamma:
    def test_classical_values(self):
        assert abs(gamma_fn(1) - 1) < 1e-15
        assert abs(gamma_fn(5) - 24) < 1e-13
        assert abs(gamma_fn(0.5) - SQRT_PI) < 1e-15

    def test_twelve_digits_on_disk(self):
        for z, ref in GAMMA_REFERENCE.items():
            assert abs(gamma_fn(z) - ref) <= 1e-12 * abs(ref), z

    def test_poles(self):
        for z in (0, -1, -2, -7):
            with pytest.raises(PoleError):
                gamma_fn(z)

    def test_reciprocal_is_zero_at_poles(self):
        assert reciprocal_gamma(0) == 0
        assert reciprocal_gamma(-3) == 0
        assert abs(reciprocal_gamma(4.5) - 1 / gamma_fn(4.5)) < 1e-16


class TestTricomiGammaStar:
    def test_order_zero_is_one(self):
        for w in (1.0, 2 + 1j):
            assert abs(tricomi_gamma_star(0, w) - 1) < 1e-14

    def test_at_w_zero(self):
        for nu in (0.3, 1.5, -0.4 + 0.2j):
            assert abs(tricomi_gamma_star(nu, 0) - reciprocal_gamma(nu + 1)) < 1e-15

    def test_order_one_telescopes(self):
        for w in (0.7, 3.0, 1 - 2j):
            expect = (1 - cmath.exp(-w)) / w
            assert abs(tricomi_gamma_star(1, w) - expect) < 1e-14 * abs(expect)

    def test_frozen_high_precision_value(self):
        assert abs(tricomi_gamma_star(0.5, 1.0) - GAMMA_STAR_HALF_ONE) < 1e-14

    def test_series_diagnostics(self):
        ev = tricomi_gamma_star_series(0.5, 2.0)
        assert ev.converged and ev.terms_used >= 2
        assert ev.last_term <= 1e-13 * abs(ev.value)

    def test_entire_across_poles(self):
        # smooth on small circles around nu = 0 and nu = -1
        for center in (0.0, -1.0):
            values = []
            for k in range(16):
                nu = center + 0.05 * cmath.exp(2j * math.pi * k / 16)
                values.append(tricomi_gamma_star(nu, 1.5 + 0.5j))
            mags = [abs(v) for v in values]
            assert max(mags) < 20.0
            steps = [abs(values[k] - values[k - 1]) for k in range(1, 16)]
            assert max(steps) < 0.2

    def test_integer_negative_order_closed_form(self):
        # gammastar(-m, w) = w**m
        for m, w in ((1, 0.8 + 0.3j), (2, 2.0)):
            assert abs(tricomi_gamma_star(-m, w) - w**m) < 1e-13 * max(1, abs(w) ** m)

    def test_overflow_guard(self):
        with pytest.raises(RangeError):
            tricomi_gamma_star(0.5, 800.0)

    def test_cancellation_free_routes(self):
        # same function from the series region and the continued fraction
        # region must agree where the regions meet
        for nu in (0.3, -0.3, 0.7 + 0.5j):
            for w in (-12j, 12j, -9.0, 5 - 10j):
                ev = tricomi_evaluator(nu, 30.0)
                assert abs(ev(w) - tricomi_gamma_star(nu, w)) <= 1e-12 * max(
                    1.0, abs(tricomi_gamma_star(nu, w))
                )


class TestRegularizedP:
    def test_order_zero_structural(self):
        for w in (0.0, 1.0, -2 + 1j):
            assert regularized_P(0, w) == 1

    def test_half_order_is_erf(self):
        for x in (0.5, 1.0, 2.0):
            assert abs(regularized_P(0.5, x * x) - erf_maclaurin(x)) < 1e-13

    def test_zero_argument(self):
        for nu in (0.4, 2.0, 1 + 1j):
            assert regularized_P(nu, 0) == 0

    def test_integer_orders_elementary(self):
        # P(m, w) = 1 - e^{-w} sum_{j<m} w^j/j!
        for m in (1, 2, 3):
            for w in (0.7, 2.5, 1 + 1j):
                partial = sum(w**j / math.factorial(j) for j in range(m))
                expect = 1.0 - cmath.exp(-w) * partial
                assert abs(regularized_P(m, w) - expect) < 1e-13 * max(1, abs(expect))


class TestLowerIncompleteGamma:
    def test_order_one(self):
        for w in (0.5, 2.0, 1 - 1j):
            expect = 1 - cmath.exp(-w)
            assert abs(lower_incomplete_gamma(1, w) - expect) < 1e-14

    def test_half_at_one(self):
        expect = SQRT_PI * erf_maclaurin(1.0)
        assert abs(lower_incomplete_gamma(0.5, 1.0) - expect) < 1e-13

    def test_vanishes_at_zero(self):
        assert lower_incomplete_gamma(2, 0) == 0

    def test_pole_propagates(self):
        with pytest.raises(PoleError):
            lower_incomplete_gamma(-1, 1.0)


class TestRecurrenceShift:
    def test_known_step(self):
        # P(0, 1) - e^{-1}/Gamma(1) = 1 - e^{-1} = P(1, 1)
        got = P_recurrence_shift(1, 1.0, 1)
        assert abs(got - (1 - math.exp(-1))) < 1e-14

    def test_examples(self):
        for nu, w, k in ((1.5, 2.0, 1), (2.7, 1 + 1j, 2)):
            direct = regularized_P(nu, w)
            shifted = P_recurrence_shift(nu, w, k)
            assert abs(shifted - direct) <= 1e-12 * max(1.0, abs(direct))

    def test_random_identity(self):
        rng = random.Random(42)
        for _ in range(200):
            nu = complex(rng.uniform(1.0, 5.0), rng.uniform(-1.0, 1.0))
            w = cmath.rect(rng.uniform(0.1, 10.0), rng.uniform(-math.pi + 0.2, math.pi - 0.2))
            k = int(nu.real)
            direct = regularized_P(nu, w)
            shifted = P_recurrence_shift(nu, w, k)
            assert abs(shifted - direct) <= 1e-10 * max(1.0, abs(direct))

    def test_k_validation(self):
        with pytest.raises(ValueError):
            P_recurrence_shift(1.5, 1.0, 0)


class TestDiagnosticsRecord:
    def test_eval_variant_reports_route_and_tail(self):
        from besselfourier import regularized_P_eval

        rec = regularized_P_eval(0.5, 2.0)
        assert rec.method == "series"
        assert abs(rec.value - regularized_P(0.5, 2.0)) < 1e-15
        assert 0 <= rec.tail_bound <= 1e-13 * abs(rec.value)

    def test_structural_one_has_no_tail(self):
        from besselfourier import regularized_P_eval

        rec = regularized_P_eval(0, 3.0 + 1j)
        assert rec.value == 1 and rec.tail_bound == 0.0
