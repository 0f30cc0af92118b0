"""Pareto frontiers of pentagon regions and unions over parameter sweeps.

A :class:`Frontier` samples the Pareto boundary of a (union of) rate
region(s) on a uniform ``r1`` grid: for each grid point, the largest
achievable ``r2``.  Besides the uniform samples it records the exact
right-hand endpoint ``(reach, reach_r2)`` of the swept set, since region
corners rarely fall on the grid.

``sweep_gaussian`` unions one of the four Gaussian region families over a
parameter grid.  The four-parameter family is additionally sampled along
its two boundary faces (``beta = 0`` with the dirty-paper-optimal bin
coefficient, and ``beta = 1`` with no binning) at the fine one-parameter
resolution: those faces reproduce the two special-case families exactly,
so the sampled union contains the sampled special-case frontiers to
floating-point accuracy rather than to grid resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .gaussian import (
    ChannelParams,
    _region_g_arrays,
    _region_g_suc_values,
    dpc_lambda_star,
    eta_coefficients,
    PentagonRegion,
)

__all__ = [
    "DEFAULT_R1_STEP",
    "LAMBDA_SPAN",
    "EmptyRegionError",
    "EmptyUnionError",
    "GridMismatchError",
    "Frontier",
    "AxisGrid",
    "SweepGrid",
    "default_grid",
    "pentagon_frontier",
    "union_frontier",
    "sweep_gaussian",
    "inclusion_gap",
    "convexity_defect",
    "time_sharing_hull",
]

#: Default spacing of the r1 sampling grid, bits.
DEFAULT_R1_STEP = 0.005

#: The bin-coefficient grids span [0, LAMBDA_SPAN * eta2] (unit-W scale);
#: the dirty-paper optimum sits at s*eta2/(s+1) < eta2, and the rate terms
#: decay beyond it.
LAMBDA_SPAN = 3.0

REGION_FAMILIES = ("g", "g_suc", "g_sp1", "g_sp2")


class EmptyRegionError(ValueError):
    """The region is infeasible; it has no frontier."""


class EmptyUnionError(ValueError):
    """Every region of the union is infeasible."""


class GridMismatchError(ValueError):
    """Frontiers sampled on different r1 grids cannot be compared."""


@dataclass(frozen=True)
class Frontier:
    """Sampled Pareto boundary: max r2 per r1, plus the exact endpoint.

    ``r2[k]`` is the value at ``r1 = k * step``; samples stop at the last
    grid point not beyond ``reach``, the exact largest achievable r1.
    """

    step: float
    r2: np.ndarray
    reach: float
    reach_r2: float
    label: str = ""

    @property
    def r1(self) -> np.ndarray:
        return np.arange(self.r2.size) * self.step

    def value_at(self, r1: float) -> float:
        """Frontier sample at the last grid point <= r1."""
        k = int(math.floor(r1 / self.step + 1e-9))
        if k < 0 or k >= self.r2.size:
            raise ValueError(f"r1={r1!r} outside the sampled range")
        return float(self.r2[k])


@dataclass(frozen=True)
class AxisGrid:
    """Inclusive range and point count of one swept parameter.

    ``hi=None`` asks for the automatic upper end (used by the bin
    coefficients, whose natural span depends on the channel).  A count of
    one collapses the axis to ``lo``.
    """

    lo: float
    hi: float | None
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.hi is not None and self.hi < self.lo:
            raise ValueError("need hi >= lo")

    def points(self, auto_hi: float | None = None) -> np.ndarray:
        hi = self.hi if self.hi is not None else auto_hi
        if hi is None:
            raise ValueError("axis needs an upper end")
        if self.count == 1:
            return np.array([self.lo])
        return np.linspace(self.lo, hi, self.count)


@dataclass(frozen=True)
class SweepGrid:
    """Grids for the four coding parameters.

    ``edge_alpha`` is the fine alpha grid used for the boundary faces of
    the four-parameter sweep; it should match the resolution of the
    one-parameter sweeps it is compared against.
    """

    alpha: AxisGrid
    beta: AxisGrid
    lambda1: AxisGrid
    lambda2: AxisGrid
    edge_alpha: AxisGrid


def default_grid(which: str = "g") -> SweepGrid:
    """Default grids: 41 points per axis for the four-parameter sweep,
    201 for one- and two-parameter sweeps."""
    if which not in REGION_FAMILIES:
        raise ValueError(f"unknown region family {which!r}")
    fine = AxisGrid(0.0, 1.0, 201)
    if which == "g":
        coarse = AxisGrid(0.0, 1.0, 41)
        lam = AxisGrid(0.0, None, 41)
        return SweepGrid(coarse, coarse, lam, lam, fine)
    return SweepGrid(fine, fine, AxisGrid(0.0, None, 1), AxisGrid(0.0, None, 1), fine)


class _UnionAccumulator:
    """Collects pentagon bound arrays and reduces them to one frontier."""

    def __init__(self):
        self._r1 = []
        self._r2 = []
        self._sum = []

    def add(self, r1_max, r2_max, sum_max, feasible=None) -> None:
        r1_max = np.atleast_1d(np.asarray(r1_max, dtype=float)).ravel()
        r2_max = np.atleast_1d(np.asarray(r2_max, dtype=float)).ravel()
        sum_max = np.atleast_1d(np.asarray(sum_max, dtype=float)).ravel()
        if feasible is not None:
            keep = np.atleast_1d(np.asarray(feasible, dtype=bool)).ravel()
            r1_max, r2_max, sum_max = r1_max[keep], r2_max[keep], sum_max[keep]
        if r1_max.size:
            self._r1.append(r1_max)
            self._r2.append(r2_max)
            self._sum.append(sum_max)

    def frontier(self, step: float, label: str) -> Frontier:
        if not self._r1:
            raise EmptyUnionError("no feasible region in the union")
        a = np.concatenate(self._r1)
        b = np.concatenate(self._r2)
        c = np.concatenate(self._sum)
        return _union_arrays(a, b, c, step, label)


def _union_arrays(a, b, c, step: float, label: str) -> Frontier:
    """Frontier of the union of pentagons {r1<=a, r2<=b, r1+r2<=c}.

    A pentagon reaches r1 = min(a, c) (beyond that, even r2 = 0 violates
    the sum bound), and at r1 <= reach its boundary is min(b, c - r1).
    """
    reach_each = np.minimum(a, c)
    reach = float(reach_each.max())
    n_samples = int(math.floor(reach / step + 1e-9)) + 1
    grid = np.arange(n_samples) * step
    best = np.full(n_samples, -np.inf)
    chunk = max(1, 4_000_000 // max(n_samples, 1))
    for start in range(0, a.size, chunk):
        sl = slice(start, start + chunk)
        vals = np.minimum(b[sl, None], c[sl, None] - grid[None, :])
        vals = np.where(grid[None, :] <= reach_each[sl, None] + 1e-15, vals, -np.inf)
        np.maximum(best, vals.max(axis=0), out=best)
    best = np.maximum(best, 0.0)
    at_end = reach_each >= reach - 1e-12
    reach_r2 = float(
        np.max(np.maximum(np.minimum(b[at_end], c[at_end] - reach), 0.0))
    )
    return Frontier(step, best, reach, reach_r2, label)


def pentagon_frontier(
    region: PentagonRegion, step: float = DEFAULT_R1_STEP, label: str = ""
) -> Frontier:
    """Pareto frontier of a single pentagon on a uniform r1 grid."""
    if not region.feasible:
        raise EmptyRegionError("infeasible region has no frontier")
    return _union_arrays(
        np.array([region.r1_max]),
        np.array([region.r2_max]),
        np.array([region.sum_max]),
        step,
        label,
    )


def union_frontier(
    regions, step: float = DEFAULT_R1_STEP, label: str = "union"
) -> Frontier:
    """Pointwise-max frontier of several pentagons on a shared grid.

    Order-independent and idempotent; infeasible members are ignored, and
    an all-infeasible list raises :class:`EmptyUnionError`.
    """
    acc = _UnionAccumulator()
    for region in regions:
        if region.feasible:
            acc.add(region.r1_max, region.r2_max, region.sum_max)
    return acc.frontier(step, label)


def _sweep_binned_pair(
    ch: ChannelParams, grid: SweepGrid, acc: _UnionAccumulator
) -> None:
    """Union of the four-parameter binned-pair family over the grid.

    The bin-coefficient grids are built in the unit-variance-W scale,
    spanning [0, LAMBDA_SPAN * eta2(alpha)] and always containing the exact
    dirty-paper optimum of each stream, then converted to the stored
    E{W^2}=p1 scale.  The two boundary faces are added at ``edge_alpha``
    resolution (see module docstring).
    """
    p1, p2 = ch.p1, ch.p2
    rp1 = math.sqrt(p1)

    def to_stored(lam_unit: np.ndarray) -> np.ndarray:
        if rp1 == 0.0:
            return np.zeros(1)
        return np.unique(lam_unit / rp1)

    for alpha in grid.alpha.points():
        _, eta2 = eta_coefficients(ch, float(alpha))
        lam_hi = LAMBDA_SPAN * eta2
        for beta in grid.beta.points():
            s_u = alpha * beta * p2
            s_v = alpha * (1.0 - beta) * p2
            lam1_unit = np.append(grid.lambda1.points(lam_hi), s_u * eta2 / (s_u + 1.0))
            lam2_unit = np.append(grid.lambda2.points(lam_hi), s_v * eta2 / (s_v + 1.0))
            lam1 = to_stored(np.unique(lam1_unit))
            lam2 = to_stored(np.unique(lam2_unit))
            mesh1, mesh2 = np.meshgrid(lam1, lam2, indexing="ij")
            acc.add(
                *_region_g_arrays(
                    ch, float(alpha), float(beta), mesh1.ravel(), mesh2.ravel()
                )
            )

    for alpha in grid.edge_alpha.points():
        alpha = float(alpha)
        lam2_unit, _ = dpc_lambda_star(ch, alpha, 0.0)
        lam2 = lam2_unit / rp1 if rp1 > 0.0 else 0.0
        acc.add(*_region_g_arrays(ch, alpha, 0.0, np.array([0.0]), np.array([lam2])))
        acc.add(*_region_g_arrays(ch, alpha, 1.0, np.array([0.0]), np.array([0.0])))


def sweep_gaussian(
    ch: ChannelParams,
    grid: SweepGrid,
    which: str,
    r1_step: float = DEFAULT_R1_STEP,
) -> Frontier:
    """Frontier of the union of one Gaussian region family over a grid.

    ``which`` selects the family: ``g`` (binned pair, four parameters),
    ``g_suc`` (successive decoding over alpha and beta), ``g_sp1`` /
    ``g_sp2`` (its beta = 0 / beta = 1 one-parameter slices).  Raises
    :class:`EmptyUnionError` when no grid tuple is feasible.
    """
    if which not in REGION_FAMILIES:
        raise ValueError(f"unknown region family {which!r}")
    acc = _UnionAccumulator()
    if which == "g":
        _sweep_binned_pair(ch, grid, acc)
    else:
        if which == "g_sp1":
            alphas, betas = grid.alpha.points(), np.array([0.0])
        elif which == "g_sp2":
            alphas, betas = grid.alpha.points(), np.array([1.0])
        else:
            alphas, betas = grid.alpha.points(), grid.beta.points()
        mesh_a, mesh_b = np.meshgrid(alphas, betas, indexing="ij")
        r1, r2 = _region_g_suc_values(ch, mesh_a.ravel(), mesh_b.ravel())
        acc.add(r1, r2, r1 + r2)
    return acc.frontier(r1_step, which)


def inclusion_gap(inner: Frontier, outer: Frontier) -> float:
    """Largest amount (bits) by which ``inner`` pokes above ``outer``.

    0 means inner is contained in outer at the sampled resolution.  Both
    frontiers must share the r1 grid step; where inner extends beyond
    outer's samples, outer is treated as 0.
    """
    if abs(inner.step - outer.step) > 1e-12:
        raise GridMismatchError(
            f"steps differ: {inner.step!r} vs {outer.step!r}"
        )
    n = inner.r2.size
    outer_vals = np.zeros(n)
    m = min(n, outer.r2.size)
    outer_vals[:m] = outer.r2[:m]
    gap = float(np.max(inner.r2 - outer_vals))
    return gap if gap > 0.0 else 0.0


def convexity_defect(f: Frontier) -> float:
    """Largest height of a chord midpoint above the frontier, bits.

    Checked over all sample pairs with an on-grid midpoint; a positive
    value certifies that the region under the frontier is not convex.
    """
    r2 = f.r2
    if r2.size < 3:
        raise ValueError("need at least 3 samples")
    worst = 0.0
    for d in range(1, (r2.size - 1) // 2 + 1):
        mid_excess = 0.5 * (r2[: r2.size - 2 * d] + r2[2 * d :]) - r2[d : r2.size - d]
        worst = max(worst, float(mid_excess.max()))
    return worst if worst > 0.0 else 0.0


def time_sharing_hull(f: Frontier) -> Frontier:
    """Upper concave envelope of a frontier (time-sharing closure).

    Replaces ``r2`` with the smallest concave majorant through the sampled
    points and the exact endpoint; the down-closed region under the result
    is the convex hull of the one under the input.
    """
    xs, ys = f.r1, f.r2
    if f.reach > xs[-1] + 1e-12:
        xs = np.append(xs, f.reach)
        ys = np.append(ys, f.reach_r2)
    hull_x: list[float] = []
    hull_y: list[float] = []
    for x, y in zip(xs, ys):
        hull_x.append(float(x))
        hull_y.append(float(y))
        while len(hull_x) >= 3:
            x0, x1, x2 = hull_x[-3:]
            y0, y1, y2 = hull_y[-3:]
            # drop the middle point if it lies on or below the chord
            if (y1 - y0) * (x2 - x1) <= (y2 - y1) * (x1 - x0) + 1e-15:
                del hull_x[-2], hull_y[-2]
            else:
                break
    new_r2 = np.interp(f.r1, hull_x, hull_y)
    new_r2 = np.maximum(new_r2, f.r2)
    reach_r2 = max(f.reach_r2, float(np.interp(f.reach, hull_x, hull_y)))
    return replace(f, r2=new_r2, reach_r2=reach_r2)
