"""Normalized invariant estimates built from integer count series.

Counts (splitting numbers a_q, F-surjective numbers b_q or certified
bounds on them) are normalized by q^delta with delta = dim R (the residue
field is a prime field, so log_p[k:k^p] = 0).  Limits are never claimed:
a lim sup is estimated by the maximum over a tail window, reported next
to the spread of that window.  Certified intervals are available for the
Veronese family, where the deviation of every class count from q^2/n is
at most q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import InsufficientData
from .veronese import (
    VeroneseModule,
    canonical_class,
    decompose,
    lower_bound,
    upper_bound,
)


@dataclass(frozen=True)
class SeriesPoint:
    e: int
    q: int
    count: int


@dataclass(frozen=True)
class InvariantSeries:
    p: int
    points: tuple[SeriesPoint, ...]
    delta: int
    bounded: bool = True

    def __post_init__(self):
        es = [pt.e for pt in self.points]
        if es != sorted(es):
            raise ValueError("series points must be sorted by e")
        for pt in self.points:
            if pt.q != self.p**pt.e:
                raise ValueError(f"q={pt.q} is not {self.p}^{pt.e}")
            if pt.count < 0:
                raise ValueError("counts must be nonnegative")
            # a surjection from a rank q^delta module onto M^b forces b <= q^delta
            if self.bounded and pt.count > pt.q**self.delta:
                raise ValueError(f"count {pt.count} exceeds q^{self.delta} at e={pt.e}")

    @classmethod
    def from_counts(cls, p: int, counts: Iterable[tuple[int, int]], delta: int, bounded: bool = True):
        return cls(p, tuple(SeriesPoint(e, p**e, c) for e, c in counts), delta, bounded)

    def normalized(self) -> list[Fraction]:
        return [Fraction(pt.count, pt.q**self.delta) for pt in self.points]

    def renormalized(self, delta: int) -> "InvariantSeries":
        return InvariantSeries(self.p, self.points, delta, bounded=False)


@dataclass(frozen=True)
class Estimate:
    value: Fraction
    window: int
    cauchy_gap: Fraction
    lower: Fraction | None = None
    upper: Fraction | None = None

    def __post_init__(self):
        if self.lower is not None and self.lower > self.value:
            raise ValueError("certified lower bound exceeds the estimate")
        if self.upper is not None and self.upper < self.value:
            raise ValueError("certified upper bound is below the estimate")

    @property
    def certified(self) -> bool:
        return self.lower is not None and self.upper is not None


def limsup_estimate(S: InvariantSeries, window: int = 3) -> Estimate:
    if window < 1:
        raise ValueError("window must be at least 1")
    if len(S.points) < window:
        raise InsufficientData(f"need {window} points, series has {len(S.points)}")
    tail = S.normalized()[-window:]
    return Estimate(max(tail), window, max(tail) - min(tail))


@dataclass(frozen=True)
class GrowthOrder:
    order: Fraction | None  # rounded when within 0.1 of an integer
    slope: float | None
    residual: float | None
    ratio: Estimate

    @property
    def integral(self) -> bool:
        return self.order is not None and self.order.denominator == 1


def growth_order(S: InvariantSeries, window: int = 3, tail: int = 5) -> GrowthOrder:
    """Growth exponent of the counts and the ratio renormalized at that exponent.

    The exponent is the least-squares slope of log_p(count) against e over
    the last ``tail`` positive points.  The ratio uses the rounded slope,
    which is the smallest i at which count/q^i stays finite and nonzero.
    """
    pts = [pt for pt in S.points if pt.count > 0]
    if not pts:
        zero = Estimate(Fraction(0), window, Fraction(0))
        return GrowthOrder(None, None, None, zero)
    if len(pts) < 3:
        raise InsufficientData("growth order needs at least 3 points with positive counts")
    pts = pts[-tail:]
    xs = [pt.e for pt in pts]
    ys = [math.log(pt.count, S.p) for pt in pts]
    xbar, ybar = sum(xs) / len(xs), sum(ys) / len(ys)
    slope = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / sum((x - xbar) ** 2 for x in xs)
    nearest = round(slope)
    residual = abs(slope - nearest)
    order = Fraction(nearest) if residual <= 0.1 else Fraction(slope).limit_denominator(1000)
    ratio = limsup_estimate(S.renormalized(nearest), window)
    return GrowthOrder(order, slope, residual, ratio)


def regular_family_series(d: int, i: int, p: int, e_range: Iterable[int]) -> InvariantSeries:
    """F-surjective numbers of S_i = k[[x_1..x_i]] as a module over S_d.

    Any surjection F^e_* S_i -> S_i^b is S_i-linear and F^e_* S_i is free of
    rank q^i over S_i, so b_q = q^i; normalization is by dim S_d = d.
    """
    if not 0 <= i <= d:
        raise ValueError("need 0 <= i <= d")
    return InvariantSeries.from_counts(p, ((e, p ** (e * i)) for e in e_range), d)


# -- Veronese family --------------------------------------------------------

def veronese_splitting_series(n: int, p: int, e_range: Iterable[int]) -> InvariantSeries:
    V = VeroneseModule(n, 0, p)
    return InvariantSeries.from_counts(p, ((e, decompose(V, e).mult[0]) for e in e_range), 2)


def veronese_dual_series(n: int, l: int, p: int, e_range: Iterable[int]) -> tuple[InvariantSeries, InvariantSeries]:
    """Certified lower and upper series for the F-surjective numbers of I_l."""
    V = VeroneseModule(n, l, p)
    lo, hi = [], []
    for e in e_range:
        mult = decompose(V, e).mult
        lo.append((e, lower_bound(mult, l)))
        hi.append((e, upper_bound(mult, l)))
    return InvariantSeries.from_counts(p, lo, 2), InvariantSeries.from_counts(p, hi, 2)


def veronese_slack(l: int, q: int) -> tuple[Fraction, Fraction]:
    """How far lower/q^2 may sit above, and upper/q^2 below, the common limit.

    Each class count is q^2/n + d_i with |d_i| <= q; the lower bound uses
    classes with total weight (l+2)/2 and the upper bound the same weight,
    plus at most 1 lost to the floor.
    """
    w = Fraction(l + 2, 2)
    return w / q, w / q + Fraction(1, q * q)


def veronese_estimate(n: int, l: int, p: int, e_range: Iterable[int], window: int = 3) -> Estimate:
    """lim sup of b_q/q^2 for I_l with a certified enclosure.

    The value comes from the certified lower series.  The interval is the
    intersection over the window of the per-level enclosures of the common
    limit of lower/q^2 and upper/q^2, which sandwiches the true lim sup.
    """
    lo_series, hi_series = veronese_dual_series(n, l, p, list(e_range))
    est = limsup_estimate(lo_series, window)
    lows, highs = [], []
    for a, b in zip(lo_series.points[-window:], hi_series.points[-window:]):
        down, up = veronese_slack(l, a.q)
        lows.append(Fraction(a.count, a.q**2) - down)
        highs.append(Fraction(b.count, b.q**2) + up)
    return Estimate(est.value, window, est.cauchy_gap, max(lows), min(highs))


# -- classification ---------------------------------------------------------

class Verdict(str, Enum):
    YES = "certified-yes"
    NO = "certified-no"
    UNDETERMINED = "undetermined"


@dataclass
class Classification:
    regular: Verdict
    strongly_f_regular: Verdict
    f_rational: Verdict
    gorenstein: Verdict
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "regular": self.regular.value,
            "strongly_f_regular": self.strongly_f_regular.value,
            "f_rational": self.f_rational.value,
            "gorenstein": self.gorenstein.value,
            "notes": list(self.notes),
        }


def _positivity(est: Estimate) -> Verdict:
    if not est.certified:
        return Verdict.UNDETERMINED
    if est.lower > 0:
        return Verdict.YES
    if est.upper <= 0:
        return Verdict.NO
    return Verdict.UNDETERMINED


def classify(s_r: Estimate, s_omega: Estimate, epsilon: Fraction = Fraction(1, 10**6)) -> Classification:
    """Singularity flags from estimates of s(R) and s(omega_R).

    Only certified intervals produce yes/no answers.
    """
    notes = []
    if not (s_r.certified and s_omega.certified):
        notes.append("estimates without certified bounds cannot certify any flag")

    if any(est.certified and est.lower >= 1 for est in (s_r, s_omega)):
        notes.append("s(R) = 1 or s(omega) = 1: regular")
        return Classification(Verdict.YES, Verdict.YES, Verdict.YES, Verdict.YES, notes)
    regular = Verdict.UNDETERMINED
    # regular iff s(R) = 1 iff s(omega) = 1, so either one certified below 1 decides it
    if any(est.certified and est.upper < 1 for est in (s_r, s_omega)):
        regular = Verdict.NO

    sfr = _positivity(s_r)
    frat = _positivity(s_omega)

    gor = Verdict.UNDETERMINED
    if frat is Verdict.YES and s_r.certified:
        same = s_r.lower == s_omega.lower and s_r.upper == s_omega.upper
        gap_lo, gap_hi = s_r.lower - s_omega.upper, s_r.upper - s_omega.lower
        if same or (-epsilon <= gap_lo and gap_hi <= epsilon):
            gor = Verdict.YES
            notes.append("s(R) and s(omega) agree with s(omega) > 0: Gorenstein")
        elif s_r.upper < s_omega.lower or s_omega.upper < s_r.lower:
            gor = Verdict.NO
            notes.append("s(R) and s(omega) separated with s(omega) > 0: not Gorenstein")
    elif frat is not Verdict.YES:
        notes.append("Gorenstein test needs s(omega) > 0")
    return Classification(regular, sfr, frat, gor, notes)


def classify_veronese(n: int, p: int, e_range: Iterable[int], window: int = 3,
                      epsilon: Fraction = Fraction(1, 10**6)) -> tuple[Classification, Estimate, Estimate]:
    e_range = list(e_range)
    s_r = veronese_estimate(n, 0, p, e_range, window)
    s_omega = veronese_estimate(n, canonical_class(n), p, e_range, window)
    return classify(s_r, s_omega, epsilon), s_r, s_omega


def classify_regular(d: int, p: int, e_range: Iterable[int], window: int = 3) -> tuple[Classification, Estimate, Estimate]:
    """The regular ring S_d: a_q = b_q = q^d exactly, and omega = S_d."""
    est = limsup_estimate(regular_family_series(d, d, p, e_range), window)
    exact = Estimate(est.value, est.window, est.cauchy_gap, est.value, est.value)
    return classify(exact, exact), exact, exact
