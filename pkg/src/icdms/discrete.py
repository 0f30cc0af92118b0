"""Exact finite-alphabet evaluation of the discrete-memoryless rate regions.

The channel is an interference channel with degraded message sets: two
sender/receiver pairs share a memoryless channel ``p(y1, y2 | x1, x2)`` and
sender 2 knows sender 1's message ahead of time.  Rate regions are
evaluated for a *fixed* input distribution given in one of two factored
families (axis names in parentheses)::

    FULL: p(q) p(w,x1|q) p(u,ut|w,q) p(v,vt|w,q) p(x2|ut,vt,w,q)
    STAR: p(q) p(w,x1|q) p(u|q)      p(v,vt|w,q) p(x2|u,vt,w,q)

``q`` is the time-sharing variable, ``w`` rides with sender 1's input
``x1``, and ``u``/``v`` (with their channel-input companions ``ut``/``vt``)
are the auxiliaries carrying sender 2's two message parts.  In the STAR
family ``u`` is independent of everything else given ``q`` and has no
``ut`` companion.

Everything is computed by materializing the dense joint probability table
and summing; no optimization over distributions is attempted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "FULL",
    "STAR",
    "FULL_AXES",
    "STAR_AXES",
    "CELL_CAP",
    "NORM_TOL",
    "DISCRETE_FEAS_TOL",
    "NormalizationError",
    "CapExceededError",
    "AxisError",
    "AlphabetSpec",
    "FactoredDistribution",
    "JointPmf",
    "DiscreteRegion",
    "assemble_joint",
    "conditional_mi",
    "region_full",
    "region_sim",
    "region_suc",
    "random_full",
    "random_star",
    "distribution_from_dict",
    "distribution_to_dict",
]

FULL = "full"
STAR = "star"

FULL_AXES = ("q", "w", "x1", "u", "ut", "v", "vt", "x2", "y1", "y2")
STAR_AXES = ("q", "w", "x1", "u", "v", "vt", "x2", "y1", "y2")

#: Default cap on the number of cells of the materialized joint table.
CELL_CAP = 10_000_000

#: Tolerance for conditional slices summing to one.
NORM_TOL = 1e-12

#: Slack allowed on constraint residuals when flagging feasibility.
DISCRETE_FEAS_TOL = 1e-12


class NormalizationError(ValueError):
    """A factor table has a conditional slice that does not sum to one."""

    def __init__(self, factor: str, index: tuple, total: float):
        self.factor = factor
        self.index = index
        self.total = total
        super().__init__(
            f"factor {factor!r}, slice {index}: mass sums to {total!r}, not 1"
        )


class CapExceededError(ValueError):
    """The joint table would exceed the configured cell cap."""


class AxisError(ValueError):
    """Unknown or overlapping variable names in a mutual-information query."""


@dataclass(frozen=True)
class AlphabetSpec:
    """Alphabet sizes for every variable.  ``ut`` is unused by STAR."""

    q: int = 1
    w: int = 2
    x1: int = 2
    u: int = 2
    ut: int = 2
    v: int = 2
    vt: int = 2
    x2: int = 2
    y1: int = 2
    y2: int = 2

    def __post_init__(self):
        for name in FULL_AXES:
            size = getattr(self, name)
            if not isinstance(size, int) or size < 1:
                raise ValueError(f"alphabet size {name} must be a positive int")

    def size(self, axis: str) -> int:
        return getattr(self, axis)

    def cells(self, family: str) -> int:
        axes = FULL_AXES if family == FULL else STAR_AXES
        return math.prod(self.size(a) for a in axes)


def _check_conditional(name: str, table: np.ndarray, cond_ndim: int) -> None:
    """Validate non-negativity and per-slice normalization of a factor.

    ``cond_ndim`` leading axes are conditioning axes; the table must sum to
    one over the remaining axes for every conditioning index.
    """
    if np.any(table < 0.0) or not np.all(np.isfinite(table)):
        raise NormalizationError(name, (), float(np.min(table)))
    sums = table.sum(axis=tuple(range(cond_ndim, table.ndim)))
    bad = np.argwhere(np.abs(sums - 1.0) > NORM_TOL)
    if bad.size:
        index = tuple(int(i) for i in bad[0])
        raise NormalizationError(name, index, float(sums[tuple(bad[0])]))


@dataclass(frozen=True)
class FactoredDistribution:
    """Factor tables of one distribution from the FULL or STAR family.

    Axis orders (conditioning axes first):

    ==========  ======================  =========================
    factor      FULL shape              STAR shape
    ==========  ======================  =========================
    p_q         (q,)                    (q,)
    p_wx1       (q, w, x1)              (q, w, x1)
    p_uut       (q, w, u, ut)           --
    p_u         --                      (q, u)
    p_vvt       (q, w, v, vt)           (q, w, v, vt)
    p_x2        (q, w, ut, vt, x2)      (q, w, u, vt, x2)
    channel     (x1, x2, y1, y2)        (x1, x2, y1, y2)
    ==========  ======================  =========================
    """

    family: str
    p_q: np.ndarray
    p_wx1: np.ndarray
    p_vvt: np.ndarray
    p_x2: np.ndarray
    channel: np.ndarray
    p_uut: np.ndarray | None = None
    p_u: np.ndarray | None = None

    def __post_init__(self):
        if self.family not in (FULL, STAR):
            raise ValueError(f"unknown family {self.family!r}")
        for name in ("p_q", "p_wx1", "p_vvt", "p_x2", "channel", "p_uut", "p_u"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, np.asarray(value, dtype=float))
        if self.family == FULL and (self.p_uut is None or self.p_u is not None):
            raise ValueError("FULL family needs p_uut and no p_u")
        if self.family == STAR and (self.p_u is None or self.p_uut is not None):
            raise ValueError("STAR family needs p_u and no p_uut")
        self.validate()

    def validate(self) -> None:
        _check_conditional("p_q", self.p_q, 0)
        _check_conditional("p_wx1", self.p_wx1, 1)
        if self.family == FULL:
            _check_conditional("p_uut", self.p_uut, 2)
        else:
            _check_conditional("p_u", self.p_u, 1)
        _check_conditional("p_vvt", self.p_vvt, 2)
        _check_conditional("p_x2", self.p_x2, 4)
        _check_conditional("channel", self.channel, 2)

    @property
    def axes(self) -> tuple[str, ...]:
        return FULL_AXES if self.family == FULL else STAR_AXES

    def sizes(self) -> dict[str, int]:
        out = {
            "q": self.p_q.shape[0],
            "w": self.p_wx1.shape[1],
            "x1": self.p_wx1.shape[2],
            "v": self.p_vvt.shape[2],
            "vt": self.p_vvt.shape[3],
            "x2": self.p_x2.shape[4],
            "y1": self.channel.shape[2],
            "y2": self.channel.shape[3],
        }
        if self.family == FULL:
            out["u"] = self.p_uut.shape[2]
            out["ut"] = self.p_uut.shape[3]
        else:
            out["u"] = self.p_u.shape[1]
        return out


@dataclass(frozen=True)
class JointPmf:
    """Dense joint probability table with named axes."""

    table: np.ndarray
    axes: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", np.asarray(self.table, dtype=float))
        if self.table.ndim != len(self.axes):
            raise ValueError("table rank does not match axis labels")
        total = float(self.table.sum())
        if np.any(self.table < 0.0) or abs(total - 1.0) > NORM_TOL:
            raise ValueError(f"joint table mass is {total!r}, not 1")

    def marginal(self, names: tuple[str, ...]) -> np.ndarray:
        keep = set(names)
        drop = tuple(k for k, a in enumerate(self.axes) if a not in keep)
        out = self.table.sum(axis=drop)
        order = tuple(a for a in self.axes if a in keep)
        if order != tuple(names):
            out = np.moveaxis(out, [order.index(n) for n in names], range(len(names)))
        return out


def assemble_joint(fd: FactoredDistribution, cell_cap: int = CELL_CAP) -> JointPmf:
    """Materialize the joint table of a factored distribution.

    Raises :class:`CapExceededError` when the joint would exceed
    ``cell_cap`` cells, and :class:`NormalizationError` (via validation at
    construction) if any factor slice is off-mass.
    """
    sizes = fd.sizes()
    n_cells = math.prod(sizes[a] for a in fd.axes)
    if n_cells > cell_cap:
        raise CapExceededError(
            f"joint table needs {n_cells} cells, cap is {cell_cap}"
        )
    if fd.family == FULL:
        table = np.einsum(
            "q,qwa,qwut,qwvs,qwtsx,axyz->qwautvsxyz",
            fd.p_q,
            fd.p_wx1,
            fd.p_uut,
            fd.p_vvt,
            fd.p_x2,
            fd.channel,
            optimize=True,
        )
        return JointPmf(table, FULL_AXES)
    table = np.einsum(
        "q,qwa,qu,qwvs,qwusx,axyz->qwauvsxyz",
        fd.p_q,
        fd.p_wx1,
        fd.p_u,
        fd.p_vvt,
        fd.p_x2,
        fd.channel,
        optimize=True,
    )
    return JointPmf(table, STAR_AXES)


def conditional_mi(j: JointPmf, left, right, given=()) -> float:
    """Exact conditional mutual information I(left; right | given) in bits.

    The three variable sets must be disjoint subsets of the joint's axes.
    Cells with zero mass contribute zero (0 log 0 = 0); tiny negative
    rounding residue is clamped to 0.
    """
    left, right, given = tuple(left), tuple(right), tuple(given)
    index = {name: k for k, name in enumerate(j.axes)}
    for group in (left, right, given):
        for name in group:
            if name not in index:
                raise AxisError(f"unknown variable {name!r}")
    all_names = left + right + given
    if len(set(all_names)) != len(all_names):
        raise AxisError("left/right/given sets must be disjoint")

    keep = set(all_names)
    drop = tuple(k for k, a in enumerate(j.axes) if a not in keep)
    p_lrg = j.table.sum(axis=drop, keepdims=True) if drop else j.table
    l_ax = tuple(index[n] for n in left)
    r_ax = tuple(index[n] for n in right)
    p_rg = p_lrg.sum(axis=l_ax, keepdims=True)
    p_lg = p_lrg.sum(axis=r_ax, keepdims=True)
    p_g = p_rg.sum(axis=r_ax, keepdims=True)

    mask = p_lrg > 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        num = np.log2(np.where(mask, p_lrg * p_g, 1.0))
        den = np.log2(np.where(mask, p_lg * p_rg, 1.0))
    value = float(np.sum(p_lrg * (num - den), where=mask))
    return value if value > 0.0 else 0.0


@dataclass(frozen=True)
class DiscreteRegion:
    """Rate bounds (bits) and constraint residuals of one region evaluation.

    ``sum_bound`` is ``None`` for the successive-decoding region, which has
    no sum inequality.  ``constraints`` maps residual names to values;
    residuals are reported even when negative, and ``feasible`` reflects
    the active constraint set only.
    """

    scheme: str
    r1_bound: float
    r2_bound: float
    sum_bound: float | None
    constraints: dict[str, float] = field(default_factory=dict)
    feasible: bool = True


def _require_family(fd: FactoredDistribution, family: str) -> None:
    if fd.family != family:
        raise ValueError(f"distribution must be in the {family.upper()} family")


def region_full(fd: FactoredDistribution) -> DiscreteRegion:
    """Rate bounds for the FULL family: both streams bin-coded, joint decoding.

    Bounds: R1 <= I(W; Y1,U | Q); R2 <= I(U,V; Y2 | Q) - I(U;W|Q) - I(V;W|Q);
    R1 + R2 <= I(U,W; Y1|Q) + I(V; Y2,U|Q) - I(U;W|Q) - I(V;W|Q).  The four
    constraints keep the two bin rates and both message-part rates
    non-negative.
    """
    _require_family(fd, FULL)
    j = assemble_joint(fd)

    def mi(left, right, given=("q",)):
        return conditional_mi(j, left, right, given)

    i_uw = mi(("u",), ("w",))
    i_vw = mi(("v",), ("w",))
    i_uw_y1 = mi(("u", "w"), ("y1",))
    i_v_y2u = mi(("v",), ("y2", "u"))
    r1 = mi(("w",), ("y1", "u"))
    r2 = mi(("u", "v"), ("y2",)) - i_uw - i_vw
    rsum = i_uw_y1 + i_v_y2u - i_uw - i_vw
    constraints = {
        "u_at_y1": i_uw_y1 - i_uw,
        "u_at_y2": mi(("u",), ("y2", "v")) - i_uw,
        "v_at_y2": i_v_y2u - i_vw,
        "r2_total": r2,
    }
    feasible = all(v >= -DISCRETE_FEAS_TOL for v in constraints.values())
    return DiscreteRegion(FULL, r1, r2, rsum, constraints, feasible)


def region_sim(fd: FactoredDistribution, paper_literal: bool = False) -> DiscreteRegion:
    """Rate bounds for the STAR family with simultaneous decoding.

    Bounds: R1 <= I(W; Y1 | U,Q); R2 <= I(U,V; Y2|Q) - I(V;W|Q);
    R1 + R2 <= I(W,U; Y1|Q) + I(V; Y2 | U,Q) - I(V;W|Q).

    The sign constraint on the bin rate is evaluated against receiver 2's
    output by default (the reading the rate derivation needs); with
    ``paper_literal=True`` the as-printed receiver-1 form decides
    feasibility instead.  Both residuals are always reported.
    """
    _require_family(fd, STAR)
    j = assemble_joint(fd)

    def mi(left, right, given=("q",)):
        return conditional_mi(j, left, right, given)

    i_vw = mi(("v",), ("w",))
    i_v_y2 = mi(("v",), ("y2",), ("u", "q"))
    r1 = mi(("w",), ("y1",), ("u", "q"))
    r2 = mi(("u", "v"), ("y2",)) - i_vw
    rsum = mi(("w", "u"), ("y1",)) + i_v_y2 - i_vw
    constraints = {
        "v_margin_y2": i_v_y2 - i_vw,
        "v_margin_y1": mi(("v",), ("y1",), ("u", "q")) - i_vw,
    }
    active = "v_margin_y1" if paper_literal else "v_margin_y2"
    feasible = constraints[active] >= -DISCRETE_FEAS_TOL
    return DiscreteRegion("sim", r1, r2, rsum, constraints, feasible)


def region_suc(fd: FactoredDistribution, paper_literal: bool = False) -> DiscreteRegion:
    """Rate bounds for the STAR family with successive decoding.

    Both receivers decode the ``u`` stream first, so its rate is capped by
    the weaker link: R2 <= min{I(U;Y1|Q), I(U;Y2|Q)} + I(V;Y2|U,Q) -
    I(V;W|Q), with R1 <= I(W;Y1|U,Q) and no sum bound.  The constraint
    handling matches :func:`region_sim`.
    """
    _require_family(fd, STAR)
    j = assemble_joint(fd)

    def mi(left, right, given=("q",)):
        return conditional_mi(j, left, right, given)

    i_vw = mi(("v",), ("w",))
    i_v_y2 = mi(("v",), ("y2",), ("u", "q"))
    r1 = mi(("w",), ("y1",), ("u", "q"))
    r2 = min(mi(("u",), ("y1",)), mi(("u",), ("y2",))) + i_v_y2 - i_vw
    constraints = {
        "v_margin_y2": i_v_y2 - i_vw,
        "v_margin_y1": mi(("v",), ("y1",), ("u", "q")) - i_vw,
    }
    active = "v_margin_y1" if paper_literal else "v_margin_y2"
    feasible = constraints[active] >= -DISCRETE_FEAS_TOL
    return DiscreteRegion("suc", r1, r2, None, constraints, feasible)


def _random_conditional(rng: np.random.Generator, shape: tuple[int, ...], cond_ndim: int) -> np.ndarray:
    """Strictly positive random conditional table, normalized per slice."""
    table = rng.random(shape) + 0.05
    sums = table.sum(axis=tuple(range(cond_ndim, len(shape))), keepdims=True)
    return table / sums


def random_full(sizes: AlphabetSpec, rng: np.random.Generator) -> FactoredDistribution:
    """Random strictly positive FULL-family distribution (seeded by ``rng``)."""
    return FactoredDistribution(
        family=FULL,
        p_q=_random_conditional(rng, (sizes.q,), 0),
        p_wx1=_random_conditional(rng, (sizes.q, sizes.w, sizes.x1), 1),
        p_uut=_random_conditional(rng, (sizes.q, sizes.w, sizes.u, sizes.ut), 2),
        p_vvt=_random_conditional(rng, (sizes.q, sizes.w, sizes.v, sizes.vt), 2),
        p_x2=_random_conditional(
            rng, (sizes.q, sizes.w, sizes.ut, sizes.vt, sizes.x2), 4
        ),
        channel=_random_conditional(
            rng, (sizes.x1, sizes.x2, sizes.y1, sizes.y2), 2
        ),
    )


def random_star(sizes: AlphabetSpec, rng: np.random.Generator) -> FactoredDistribution:
    """Random strictly positive STAR-family distribution (seeded by ``rng``).

    Pinning ``sizes.u = 1`` (or ``sizes.v = sizes.vt = 1``) specializes the
    successive-decoding region to its two single-stream special cases.
    """
    return FactoredDistribution(
        family=STAR,
        p_q=_random_conditional(rng, (sizes.q,), 0),
        p_wx1=_random_conditional(rng, (sizes.q, sizes.w, sizes.x1), 1),
        p_u=_random_conditional(rng, (sizes.q, sizes.u), 1),
        p_vvt=_random_conditional(rng, (sizes.q, sizes.w, sizes.v, sizes.vt), 2),
        p_x2=_random_conditional(
            rng, (sizes.q, sizes.w, sizes.u, sizes.vt, sizes.x2), 4
        ),
        channel=_random_conditional(
            rng, (sizes.x1, sizes.x2, sizes.y1, sizes.y2), 2
        ),
    )


_FACTOR_KEYS = {
    FULL: ("q", "w_x1", "u_ut", "v_vt", "x2", "channel"),
    STAR: ("q", "w_x1", "u", "v_vt", "x2", "channel"),
}


def distribution_from_dict(doc: dict) -> FactoredDistribution:
    """Build a :class:`FactoredDistribution` from its JSON document form.

    Schema: ``{"family": "full"|"star", "factors": {...}}`` with factor
    keys ``q``, ``w_x1``, ``u_ut`` (FULL) or ``u`` (STAR), ``v_vt``,
    ``x2``, ``channel`` holding nested arrays in the axis orders documented
    on :class:`FactoredDistribution`.
    """
    if not isinstance(doc, dict):
        raise ValueError("distribution document must be a JSON object")
    family = doc.get("family")
    if family not in (FULL, STAR):
        raise ValueError(f"family must be 'full' or 'star', got {family!r}")
    factors = doc.get("factors")
    if not isinstance(factors, dict):
        raise ValueError("missing 'factors' object")
    missing = [k for k in _FACTOR_KEYS[family] if k not in factors]
    if missing:
        raise ValueError(f"missing factor tables: {', '.join(missing)}")

    def arr(key: str) -> np.ndarray:
        return np.asarray(factors[key], dtype=float)

    common = dict(
        p_q=arr("q"),
        p_wx1=arr("w_x1"),
        p_vvt=arr("v_vt"),
        p_x2=arr("x2"),
        channel=arr("channel"),
    )
    if family == FULL:
        return FactoredDistribution(family=FULL, p_uut=arr("u_ut"), **common)
    return FactoredDistribution(family=STAR, p_u=arr("u"), **common)


def distribution_to_dict(fd: FactoredDistribution) -> dict:
    """Inverse of :func:`distribution_from_dict`."""
    factors = {
        "q": fd.p_q.tolist(),
        "w_x1": fd.p_wx1.tolist(),
        "v_vt": fd.p_vvt.tolist(),
        "x2": fd.p_x2.tolist(),
        "channel": fd.channel.tolist(),
    }
    if fd.family == FULL:
        factors["u_ut"] = fd.p_uut.tolist()
    else:
        factors["u"] = fd.p_u.tolist()
    return {"family": fd.family, "factors": factors}
