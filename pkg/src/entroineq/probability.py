"""Probability vectors, joint tables, and invertible index mappings.

A flat probability vector can be relabelled as a 2-D (or 3-D) table of
"subsystem" indices; the relabelling is invertible and manufactures the
joint/marginal structure that entropic inequalities need.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .errors import DimensionError, DomainError
from .halfint import HalfInt, HalfIntLike

#: Components in [-NEGATIVE_CLAMP, 0) are clamped to zero at construction;
#: anything more negative is rejected.  Absorbs special-function noise.
NEGATIVE_CLAMP = 1e-12

#: Allowed deviation of a total probability mass from 1.
SUM_TOLERANCE = 1e-9

VectorLike = Union["ProbabilityVector", Sequence[float], np.ndarray]


def _clean(values: Iterable[float], clamp: float = NEGATIVE_CLAMP) -> tuple[float, ...]:
    out = []
    for v in values:
        v = float(v)
        if not math.isfinite(v):
            raise DomainError(f"non-finite probability {v!r}")
        if v < -clamp:
            raise DomainError(f"negative probability {v!r}")
        out.append(v if v > 0.0 else 0.0)
    return tuple(out)


@dataclass(frozen=True)
class ProbabilityVector:
    """Finite nonnegative vector summing to 1 within `tolerance`."""

    components: tuple[float, ...]
    tolerance: float = SUM_TOLERANCE

    def __post_init__(self) -> None:
        comps = _clean(self.components)
        if not comps:
            raise DimensionError("a probability vector needs at least one component")
        total = math.fsum(comps)
        if abs(total - 1.0) > self.tolerance:
            raise DomainError(f"components sum to {total!r}, not 1")
        object.__setattr__(self, "components", comps)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[float]:
        return iter(self.components)

    def __getitem__(self, index: int) -> float:
        return self.components[index]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.components)


@dataclass(frozen=True)
class JointTable:
    """2-D or 3-D nonnegative table with total mass 1, stored row-major."""

    dims: tuple[int, ...]
    entries: tuple[float, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(n) for n in self.dims)
        if len(dims) not in (2, 3):
            raise DimensionError("joint tables are 2-D or 3-D")
        if any(n < 1 for n in dims):
            raise DimensionError(f"invalid dims {dims}")
        entries = _clean(self.entries)
        if len(entries) != math.prod(dims):
            raise DimensionError(
                f"{len(entries)} entries do not fill dims {dims}"
            )
        total = math.fsum(entries)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise DomainError(f"entries sum to {total!r}, not 1")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "entries", entries)

    @staticmethod
    def from_array(array: np.ndarray) -> "JointTable":
        a = np.asarray(array, dtype=float)
        return JointTable(a.shape, tuple(a.reshape(-1)))

    @property
    def ndim(self) -> int:
        return len(self.dims)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.entries).reshape(self.dims)


@dataclass(frozen=True)
class BistochasticMatrix:
    """Square nonnegative matrix whose rows and columns all sum to 1."""

    n: int
    entries: tuple[float, ...]

    def __post_init__(self) -> None:
        n = int(self.n)
        if n < 1:
            raise DimensionError(f"invalid size {n}")
        entries = _clean(self.entries)
        if len(entries) != n * n:
            raise DimensionError(f"{len(entries)} entries do not fill {n}x{n}")
        grid = np.asarray(entries).reshape(n, n)
        for axis, name in ((0, "column"), (1, "row")):
            sums = grid.sum(axis=axis)
            worst = float(np.max(np.abs(sums - 1.0)))
            if worst > SUM_TOLERANCE:
                raise DomainError(f"a {name} sum deviates from 1 by {worst!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", entries)

    @staticmethod
    def from_array(array: np.ndarray) -> "BistochasticMatrix":
        a = np.asarray(array, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionError(f"expected a square matrix, got shape {a.shape}")
        return BistochasticMatrix(a.shape[0], tuple(a.reshape(-1)))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.entries).reshape(self.n, self.n)

    def column(self, k: int) -> ProbabilityVector:
        return ProbabilityVector(tuple(self.as_array()[:, k]))

    def row(self, i: int) -> ProbabilityVector:
        return ProbabilityVector(tuple(self.as_array()[i, :]))


class SeriesKind(str, enum.Enum):
    """Weight-lattice orderings for infinite (and mirrored finite) series."""

    DISCRETE_POSITIVE = "discrete_positive"
    DISCRETE_NEGATIVE = "discrete_negative"
    CONTINUOUS_INTEGER = "continuous_integer"
    CONTINUOUS_HALF_INTEGER = "continuous_half_integer"


def _components(p: VectorLike) -> list[float]:
    if isinstance(p, ProbabilityVector):
        return list(p.components)
    return [float(v) for v in p]


def bipartite_split(p: ProbabilityVector) -> JointTable:
    """Relabel a flat vector as a 2 x ceil(N/2) table.

    Row 1 holds the first ceil(N/2) components, row 2 the remainder; a
    single zero is appended when N is odd.
    """
    values = _components(p)
    n = len(values)
    if n < 2:
        raise DimensionError("need at least two components to split")
    cols = (n + 1) // 2
    values += [0.0] * (2 * cols - n)
    return JointTable((2, cols), tuple(values))


def general_reshape(p: ProbabilityVector, n1: int, n2: int) -> JointTable:
    """Row-major fill of an N1 x N2 table; unused cells are zero."""
    values = _components(p)
    if n1 < 1 or n2 < 1:
        raise DimensionError(f"invalid table shape ({n1}, {n2})")
    if n1 * n2 < len(values):
        raise DimensionError(
            f"cannot place {len(values)} components into a {n1}x{n2} table"
        )
    values += [0.0] * (n1 * n2 - len(values))
    return JointTable((n1, n2), tuple(values))


def tripartite_reshape(p: ProbabilityVector, n1: int, n2: int, n3: int) -> JointTable:
    """Row-major fill of an N1 x N2 x N3 table; unused cells are zero."""
    values = _components(p)
    if n1 < 1 or n2 < 1 or n3 < 1:
        raise DimensionError(f"invalid table shape ({n1}, {n2}, {n3})")
    if n1 * n2 * n3 < len(values):
        raise DimensionError(
            f"cannot place {len(values)} components into a {n1}x{n2}x{n3} table"
        )
    values += [0.0] * (n1 * n2 * n3 - len(values))
    return JointTable((n1, n2, n3), tuple(values))


def interleave_split(p: VectorLike) -> JointTable:
    """Relabel a flat vector as a ceil(N/2) x 2 table of consecutive pairs.

    Row k is (p_{2k-1}, p_{2k}); the column marginal is the pair of
    odd-index and even-index sums, the row marginal the pair sums.
    """
    values = _components(p)
    if not values:
        raise DimensionError("cannot split an empty vector")
    if len(values) % 2:
        values.append(0.0)
    return JointTable((len(values) // 2, 2), tuple(values))


def enumerate_weights(
    kind: SeriesKind,
    j_or_s: HalfIntLike | None = None,
    count: int = 1,
) -> tuple[HalfInt, ...]:
    """First `count` weight labels in a series' canonical order.

    Discrete series enumerate from the edge weight (-j upward, or j
    downward); continuous series alternate around 0 or +-1/2.
    """
    kind = SeriesKind(kind)
    if count < 1:
        raise DimensionError("count must be at least 1")
    if kind is SeriesKind.DISCRETE_POSITIVE:
        start = -HalfInt.coerce(j_or_s).doubled
        return tuple(HalfInt(start + 2 * i) for i in range(count))
    if kind is SeriesKind.DISCRETE_NEGATIVE:
        start = HalfInt.coerce(j_or_s).doubled
        return tuple(HalfInt(start - 2 * i) for i in range(count))
    if kind is SeriesKind.CONTINUOUS_INTEGER:
        # 0, 1, -1, 2, -2, ...
        out = []
        for i in range(1, count + 1):
            magnitude = i // 2
            sign = 1 if i % 2 == 0 else -1
            out.append(HalfInt(2 * sign * magnitude))
        return tuple(out)
    # -1/2, 1/2, -3/2, 3/2, ...
    out = []
    for i in range(1, count + 1):
        magnitude = 2 * ((i + 1) // 2) - 1
        sign = 1 if i % 2 == 0 else -1
        out.append(HalfInt(sign * magnitude))
    return tuple(out)


def marginals(t: JointTable) -> tuple[ProbabilityVector, ProbabilityVector]:
    """Both marginals of a 2-D table.

    The first marginal sums out the row index (length N2), the second
    sums out the column index (length N1).
    """
    if t.ndim != 2:
        raise DimensionError("marginals() needs a 2-D table; use marginal_pair()")
    grid = t.as_array()
    first = ProbabilityVector(tuple(grid.sum(axis=0)))
    second = ProbabilityVector(tuple(grid.sum(axis=1)))
    return first, second


def marginal_pair(t: JointTable, keep: tuple[int, int]) -> JointTable:
    """Sum a 3-D table down to the two axes in `keep` (order preserved)."""
    if t.ndim != 3:
        raise DimensionError("marginal_pair() needs a 3-D table")
    a, b = keep
    if sorted((a, b)) not in ([0, 1], [0, 2], [1, 2]):
        raise DimensionError(f"invalid axis pair {keep}")
    dropped = ({0, 1, 2} - {a, b}).pop()
    grid = t.as_array().sum(axis=dropped)
    if a > b:
        grid = grid.T
    return JointTable.from_array(grid)
