"""Hyperbolic-group pipelines: truncated weight distributions and reports."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

from .entropy import SubadditivityReport, subadditivity_report
from .errors import ConvergenceError, DomainError, NormalizationError
from .halfint import HalfInt, HalfIntLike
from .probability import (
    ProbabilityVector,
    SeriesKind,
    enumerate_weights,
    interleave_split,
)
from .specfun import Su11Args, bargmann_b, c_function, l_function

#: Adaptive truncation: stop once terms fall below this ...
TERM_FLOOR = 1e-14
#: ... and this many consecutive terms were non-increasing.
TAIL_RUN = 10
#: Hard cap on the number of evaluated terms.
MAX_TERMS = 10**5


@dataclass(frozen=True)
class TruncatedDistribution:
    """Finite prefix of an infinite probability sequence.

    `values` follow the series' canonical weight order; `captured_mass`
    is their sum and `tail_bound` bounds the discarded mass (discrete
    series only; report-only constructions carry tail_bound = nan).
    """

    values: tuple[float, ...]
    captured_mass: float
    tail_bound: float
    truncation: int

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        if not values:
            raise DomainError("a truncated distribution needs at least one value")
        if any(v < 0.0 for v in values):
            raise DomainError("probabilities must be nonnegative")
        if self.truncation != len(values):
            raise DomainError("truncation must equal the number of stored values")
        if abs(math.fsum(values) - self.captured_mass) > 1e-12:
            raise DomainError("captured_mass must equal the sum of the values")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def to_probability_vector(self) -> ProbabilityVector:
        """Renormalize the stored prefix to total mass 1."""
        if self.captured_mass <= 0.0:
            raise NormalizationError("no probability mass captured")
        scale = 1.0 / self.captured_mass
        return ProbabilityVector(tuple(v * scale for v in self.values))


def discrete_series_distribution(
    k: int,
    m: HalfIntLike,
    t: float,
    eps: float = 1e-8,
    truncation: Optional[int] = None,
) -> TruncatedDistribution:
    """Squared boost elements |b^j_{m'm}(t)|^2 over the positive weight ladder.

    Terms follow m' = k/2, k/2+1, ... and are extended adaptively until
    the current term drops below 1e-14, ten consecutive terms were
    non-increasing, and at least 1 - eps of the mass is captured.  Pass
    `truncation` to force a fixed number of terms instead.
    """
    k = int(k)
    if k < 1:
        raise DomainError("k must be a positive integer")
    if not 0.0 < eps <= 1e-6:
        raise DomainError("eps must lie in (0, 1e-6]")
    m = HalfInt.coerce(m)
    values: list[float] = []
    streak = 0
    previous = math.inf

    def term(index: int) -> float:
        args = Su11Args(
            series=SeriesKind.DISCRETE_POSITIVE,
            m_prime=HalfInt(k + 2 * index),
            m=m,
            t=float(t),
            k=k,
        )
        return abs(bargmann_b(args)) ** 2

    if truncation is not None:
        if truncation < 1:
            raise DomainError("truncation must be at least 1")
        values = [term(i) for i in range(truncation)]
    else:
        for i in range(MAX_TERMS):
            value = term(i)
            values.append(value)
            streak = streak + 1 if value <= previous else 1
            previous = value
            if (
                value < TERM_FLOOR
                and streak >= TAIL_RUN
                and math.fsum(values) >= 1.0 - eps
            ):
                break
        else:
            raise ConvergenceError(
                f"distribution did not stabilize within {MAX_TERMS} terms"
            )
    captured = math.fsum(values)
    return TruncatedDistribution(
        values=tuple(values),
        captured_mass=captured,
        tail_bound=max(0.0, 1.0 - captured),
        truncation=len(values),
    )


def su11_subadditivity(d: TruncatedDistribution) -> SubadditivityReport:
    """Shannon subadditivity of the pair/parity split of a weight ladder.

    The stored prefix is renormalized, split into consecutive pairs, and
    reported; requires captured mass within 1e-6 of 1.
    """
    if d.captured_mass < 1.0 - 1e-6:
        raise NormalizationError(
            f"captured mass {d.captured_mass!r} is too far below 1"
        )
    table = interleave_split(d.to_probability_vector())
    report = subadditivity_report(table)
    return replace(report, raw_mass=d.captured_mass)


def _report_from_values(values: list[float]) -> tuple[SubadditivityReport, float]:
    raw_mass = math.fsum(values)
    if raw_mass <= 0.0:
        raise NormalizationError("all computed weights vanished")
    vector = ProbabilityVector(tuple(v / raw_mass for v in values))
    report = subadditivity_report(interleave_split(vector))
    return report, raw_mass


def mixed_series_report(args: Su11Args, truncation: int) -> SubadditivityReport:
    """Report over |c|^2 on the discrete ladder, renormalized; report-only.

    The raw (pre-renormalization) mass is attached as `raw_mass`; no
    normalization is asserted for the mixed basis.
    """
    if truncation < 1:
        raise DomainError("truncation must be at least 1")
    weights = enumerate_weights(
        SeriesKind.DISCRETE_POSITIVE, HalfInt(-args.k), truncation
    )
    values = [
        abs(c_function(replace(args, m_prime=w))) ** 2 for w in weights
    ]
    report, raw_mass = _report_from_values(values)
    return replace(report, report_only=True, raw_mass=raw_mass)


def continuous_series_report(args: Su11Args, truncation: int) -> SubadditivityReport:
    """Report over |l|^2 on an alternating integer or half-odd ladder.

    As `mixed_series_report`: renormalized, report-only, raw mass attached.
    """
    if truncation < 1:
        raise DomainError("truncation must be at least 1")
    if args.is_discrete:
        raise DomainError("continuous_series_report needs a continuous series")
    weights = enumerate_weights(args.series, None, truncation)
    values = [
        abs(l_function(replace(args, m_prime=w))) ** 2 for w in weights
    ]
    report, raw_mass = _report_from_values(values)
    return replace(report, report_only=True, raw_mass=raw_mass)
