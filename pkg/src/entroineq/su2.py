"""Rotation-group pipelines: squared d-columns, splits, inequality sweeps."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .entropy import (
    SubadditivityReport,
    subadditivity_report,
    tsallis_subadditivity_report,
)
from .errors import DomainError
from .halfint import HalfInt, HalfIntLike
from .probability import ProbabilityVector, bipartite_split
from .specfun import _weight_triple, _wigner_dispatch


def column_distribution(j: HalfIntLike, m: HalfIntLike, theta: float) -> ProbabilityVector:
    """Probabilities |d^j_{m'm}(theta)|^2 over m' = -j..j ascending."""
    two_j, _, two_m = _weight_triple(j, m, m)
    theta = float(theta)
    values = []
    for two_mp in range(-two_j, two_j + 1, 2):
        d = _wigner_dispatch(two_j, two_mp, two_m, theta)
        values.append(d * d)
    return ProbabilityVector(tuple(values))


def su2_subadditivity(j: HalfIntLike, m: HalfIntLike, theta: float) -> SubadditivityReport:
    """Shannon subadditivity report for the split column distribution."""
    return subadditivity_report(bipartite_split(column_distribution(j, m, theta)))


def su2_tsallis_subadditivity(
    j: HalfIntLike, m: HalfIntLike, theta: float, q: float
) -> SubadditivityReport:
    """Tsallis analog of `su2_subadditivity` (asserted only for q > 1)."""
    return tsallis_subadditivity_report(
        bipartite_split(column_distribution(j, m, theta)), q
    )


def _closed_forms_three_half(theta: float) -> tuple[float, ...]:
    # ascending m' = -3/2..3/2 for the m = 3/2 column
    cos_t = math.cos(theta)
    sin_half_sq = math.sin(theta / 2.0) ** 2
    p1 = (cos_t + 1.0) ** 3 / 8.0
    p2 = 3.0 * sin_half_sq * (sin_half_sq - 1.0) ** 2
    # (cos t - 1) enters squared; the odd power in circulation is a typo
    p3 = 3.0 * (cos_t - 1.0) ** 2 * (cos_t + 1.0) / 8.0
    p4 = -((cos_t - 1.0) ** 3) / 8.0
    return (p4, p3, p2, p1)


def _closed_forms_two(theta: float) -> tuple[float, ...]:
    # ascending m' = -2..2 for the m = 2 column
    cos_t = math.cos(theta)
    cos_half_sq = math.cos(theta / 2.0) ** 2
    sin_half_sq = math.sin(theta / 2.0) ** 2
    t1 = (cos_t + 1.0) ** 4 / 16.0
    t2 = 4.0 * cos_half_sq**3 * (1.0 - cos_half_sq)
    t3 = 3.0 * math.sin(theta) ** 4 / 8.0
    t4 = 4.0 * sin_half_sq**3 * (1.0 - sin_half_sq)
    t5 = (cos_t - 1.0) ** 4 / 16.0
    return (t5, t4, t3, t2, t1)


def closed_form_check(j: HalfIntLike, theta: float) -> float:
    """Max deviation of the edge-column distribution from its closed forms.

    Available for j = 3/2 (m = 3/2) and j = 2 (m = 2).
    """
    doubled = HalfInt.coerce(j).doubled
    if doubled == 3:
        expected = _closed_forms_three_half(float(theta))
    elif doubled == 4:
        expected = _closed_forms_two(float(theta))
    else:
        raise DomainError("closed forms are available for j = 3/2 and j = 2 only")
    computed = column_distribution(j, j, theta)
    return max(abs(a - b) for a, b in zip(computed, expected))


@dataclass(frozen=True)
class Su2Sweep:
    """A fixed-column inequality sweep over a rotation-angle grid."""

    j: HalfInt
    m: HalfInt
    theta_grid: tuple[float, ...]
    q: Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "j", HalfInt.coerce(self.j))
        object.__setattr__(self, "m", HalfInt.coerce(self.m))
        grid = tuple(float(t) for t in self.theta_grid)
        if not grid:
            raise DomainError("the sweep grid must hold at least one angle")
        object.__setattr__(self, "theta_grid", grid)


def sweep(config: Su2Sweep) -> list[tuple[float, SubadditivityReport]]:
    """Evaluate the inequality report at every grid angle, in grid order."""
    if config.q is None:
        return [
            (theta, su2_subadditivity(config.j, config.m, theta))
            for theta in config.theta_grid
        ]
    return [
        (theta, su2_tsallis_subadditivity(config.j, config.m, theta, config.q))
        for theta in config.theta_grid
    ]
