"""Adaptive summation shared by the power-series evaluators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_MAX_TERMS = 10_000


@dataclass(frozen=True)
class SeriesEvaluation:
    """Outcome of an adaptive series summation."""

    value: complex
    terms_used: int
    last_term: float
    converged: bool


def sum_adaptive(
    terms: Iterable[complex],
    rel_tol: float = 1e-16,
    consecutive: int = 3,
    max_terms: int = DEFAULT_MAX_TERMS,
    min_terms: int = 1,
) -> SeriesEvaluation:
    """Sum ``terms`` until `consecutive` successive terms are negligible.

    A term is negligible when it is exactly zero or at most
    ``rel_tol * |partial sum|`` with a nonzero partial sum.  No stopping is
    considered before ``min_terms`` terms, which callers use to push the
    check past the hump of series whose terms first grow.
    """
    total = 0j
    small = 0
    last = 0.0
    n = 0
    it: Iterator[complex] = iter(terms)
    for t in it:
        n += 1
        total += t
        last = abs(t)
        if n >= min_terms and (
            last == 0.0 or (total != 0 and last <= rel_tol * abs(total))
        ):
            small += 1
            if small >= consecutive:
                return SeriesEvaluation(total, n, last, True)
        else:
            small = 0
        if n >= max_terms:
            break
    return SeriesEvaluation(total, n, last, False)
