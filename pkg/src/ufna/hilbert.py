"""Rational Hilbert series of kQ and of A from the transfer matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .exactla import (
    IntPoly,
    poly_add,
    poly_exact_div,
    poly_gcd,
    poly_mul,
    poly_shift,
    poly_trim,
    polymat_resolvent,
)
from .language import normal_words
from .presentation import Presentation
from .quiver import Quiver, cycle_period, growth_class


@dataclass(frozen=True)
class RationalSeries:
    """numerator / denominator with denominator(0) = 1, in lowest terms."""

    numerator: IntPoly
    denominator: IntPoly

    @classmethod
    def reduced(cls, num: IntPoly, den: IntPoly) -> "RationalSeries":
        num, den = poly_trim(num), poly_trim(den)
        if not den or den[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")
        if not num:
            return cls((), (1,))
        g = poly_gcd(num, den)
        num, den = poly_exact_div(num, g), poly_exact_div(den, g)
        if den[0] < 0:
            num, den = tuple(-c for c in num), tuple(-c for c in den)
        if den[0] != 1:
            raise ValueError(f"denominator constant term {den[0]} is not a unit")
        return cls(num, den)

    def expand(self, N: int) -> List[int]:
        return expand(self, N)


def expand(s: RationalSeries, N: int) -> List[int]:
    """Coefficients of t^0..t^N via the recurrence given by the denominator."""
    den = s.denominator
    if not den or den[0] != 1:
        raise ValueError("expansion needs denominator(0) = 1")
    out: List[int] = []
    for n in range(N + 1):
        c = s.numerator[n] if n < len(s.numerator) else 0
        for k in range(1, min(n, len(den) - 1) + 1):
            c -= den[k] * out[n - k]
        out.append(c)
    return out


def hilbert_quiver(q: Quiver) -> RationalSeries:
    """Σ_n (#paths of length n) tⁿ = 1ᵀ adj(I - tM) 1 / det(I - tM)."""
    adj_sum, det = polymat_resolvent(q.adjacency)
    return RationalSeries.reduced(adj_sum, det)


def hilbert_algebra(p: Presentation, q: Quiver) -> RationalSeries:
    """H_A(t) = Σ_{n<d} dim A_n tⁿ + t^d · H_kQ(t)."""
    hq = hilbert_quiver(q)
    head = poly_trim(len(normal_words(n, p)) for n in range(q.d))
    num = poly_add(poly_mul(head, hq.denominator), poly_shift(hq.numerator, q.d))
    return RationalSeries.reduced(num, hq.denominator)


def _lag_difference(seq: List[int], lag: int) -> List[int]:
    return [seq[i + lag] - seq[i] for i in range(len(seq) - lag)]


def growth_consistent(q: Quiver, series: RationalSeries) -> bool:
    """Does the coefficient sequence behave as the cycle structure predicts?

    Path counts are eventually regular once n exceeds d + |V|; comparisons
    are made with lag equal to the common cycle period so that periodic
    fluctuations cancel.

    - FiniteDimensional: all coefficients vanish from degree d + |V| on.
    - Polynomial(k): the k-fold lagged difference is eventually zero while
      the (k-1)-fold one is not (degree exactly k-1).
    - Exponential: a(n + lag) > a(n) > 0 throughout the tail window, and
      the |V|-fold lagged difference does not vanish there (a polynomial
      class has degree below |V|, so this rules out polynomial tails).
    """
    g = growth_class(q)
    lag = cycle_period(q)
    start = q.d + len(q.vertices)
    if g.kind == "FiniteDimensional":
        coeffs = expand(series, start + 4)
        return all(c == 0 for c in coeffs[start:])
    if g.kind == "Polynomial":
        k = g.degree
        coeffs = expand(series, start + (k + 3) * lag)
        tail = coeffs[start:]
        for _ in range(k - 1):
            tail = _lag_difference(tail, lag)
        top = _lag_difference(tail, lag)
        return any(tail) and all(x == top[0] for x in top) and top[0] == 0
    width = len(q.vertices)
    coeffs = expand(series, start + (width + 4) * lag)
    tail = coeffs[start:]
    if not all(tail[i + lag] > tail[i] > 0 for i in range(len(tail) - lag)):
        return False
    for _ in range(width):
        tail = _lag_difference(tail, lag)
    return any(tail)
