"""Shannon, Tsallis, and Renyi entropies with subadditivity reports.

All entropies are in nats and use the 0*ln(0) = 0 convention, which makes
them exactly invariant under zero padding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import DimensionError, DomainError
from .probability import JointTable, ProbabilityVector, marginals

Distribution = Union[ProbabilityVector, Iterable[float]]


def _values(p: Distribution) -> tuple[float, ...]:
    if isinstance(p, ProbabilityVector):
        return p.components
    return tuple(float(v) for v in p)


def _plogp_sum(values: Iterable[float]) -> float:
    return math.fsum(v * math.log(v) for v in values if v > 0.0)


def _power_sum(values: Iterable[float], q: float) -> float:
    return math.fsum(v**q for v in values if v > 0.0)


def check_q(q: float) -> float:
    """Validate a deformation parameter: q > 0 and q != 1."""
    q = float(q)
    if not q > 0.0 or q == 1.0:
        raise DomainError(f"q must be positive and different from 1, got {q!r}")
    return q


def shannon(p: Distribution) -> float:
    """H = -sum p_k ln p_k."""
    return -_plogp_sum(_values(p))


def joint_shannon(t: JointTable) -> float:
    """Shannon entropy of a joint table (entropy of the flattened entries)."""
    return -_plogp_sum(t.entries)


def tsallis(p: Distribution, q: float) -> float:
    """S_q = (sum p_k^q - 1) / (1 - q)."""
    q = check_q(q)
    return (_power_sum(_values(p), q) - 1.0) / (1.0 - q)


def renyi(p: Distribution, q: float) -> float:
    """S_q = ln(sum p_k^q) / (1 - q).  Computed for reporting only."""
    q = check_q(q)
    return math.log(_power_sum(_values(p), q)) / (1.0 - q)


@dataclass(frozen=True)
class SubadditivityReport:
    """Joint and marginal entropies of a 2-D table plus their slack.

    slack = h_first + h_second - h_joint.  It is nonnegative for Shannon
    entropy and for Tsallis entropy with q > 1; Renyi and Tsallis with
    q < 1 reports carry no sign contract (`report_only`).
    """

    h_joint: float
    h_first: float
    h_second: float
    slack: float
    kind: str
    q: Optional[float] = None
    report_only: bool = False
    raw_mass: Optional[float] = None

    def holds(self, tol: float = 1e-12) -> bool:
        return self.slack >= -tol


def subadditivity_report(t: JointTable) -> SubadditivityReport:
    """Shannon entropies of a 2-D table and its marginals."""
    if t.ndim != 2:
        raise DimensionError("subadditivity_report() needs a 2-D table")
    first, second = marginals(t)
    h_joint = joint_shannon(t)
    h_first = shannon(first)
    h_second = shannon(second)
    return SubadditivityReport(
        h_joint=h_joint,
        h_first=h_first,
        h_second=h_second,
        slack=h_first + h_second - h_joint,
        kind="shannon",
    )


def tsallis_subadditivity_report(t: JointTable, q: float) -> SubadditivityReport:
    """Tsallis entropies of a 2-D table and its marginals.

    The slack is only guaranteed nonnegative for q > 1; for 0 < q < 1 the
    report is flagged `report_only`.
    """
    q = check_q(q)
    if t.ndim != 2:
        raise DimensionError("tsallis_subadditivity_report() needs a 2-D table")
    first, second = marginals(t)
    h_joint = tsallis(t.entries, q)
    h_first = tsallis(first, q)
    h_second = tsallis(second, q)
    return SubadditivityReport(
        h_joint=h_joint,
        h_first=h_first,
        h_second=h_second,
        slack=h_first + h_second - h_joint,
        kind="tsallis",
        q=q,
        report_only=q < 1.0,
    )


def tsallis_power_sums(t: JointTable, q: float) -> tuple[float, float, float]:
    """Raw power sums (marginal 1, marginal 2, joint) behind a Tsallis report.

    Note: for q > 1 the power sums satisfy sum1 + sum2 - 1 <= joint (the
    reverse of the entropy-level inequality), since x -> x^q flips
    direction under the 1/(1-q) factor.
    """
    q = check_q(q)
    if t.ndim != 2:
        raise DimensionError("tsallis_power_sums() needs a 2-D table")
    first, second = marginals(t)
    return (
        _power_sum(first.components, q),
        _power_sum(second.components, q),
        _power_sum(t.entries, q),
    )
