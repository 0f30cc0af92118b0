"""Closed-form rate-region machinery for the standard-form Gaussian
interference channel with degraded message sets.

Standard form::

    Y1 = X1 + sqrt(c21) * X2 + Z1
    Y2 = X2 + sqrt(c12) * X1 + Z2

with unit-variance AWGN ``Z1``, ``Z2``, average transmit powers ``p1``,
``p2``, and normalized cross gains ``c21`` (sender 2 -> receiver 1) and
``c12`` (sender 1 -> receiver 2).  Sender 2 knows sender 1's message ahead
of time, so it splits its signal three ways::

    X2 = Ut + Vt + sqrt((1 - alpha) * p2) * W

where ``W`` carries sender 1's codeword (cooperation by superposition) and
``Ut`` / ``Vt`` are two private streams with powers ``alpha * beta * p2``
and ``alpha * (1 - beta) * p2``.  Both private streams are bin-coded
against the known codeword through the auxiliaries::

    U = Ut + lambda1 * W        V = Vt + lambda2 * W

``region_g`` evaluates the pentagon achieved by one such coding choice
from the covariance matrices of ``(W, U, Y1)`` and ``(U, V, Y2)``.
``region_g_suc`` is the closed-form successive-decoding family (no binning
of the ``U`` stream), with ``region_g_sp1`` / ``region_g_sp2`` its
``beta = 0`` / ``beta = 1`` special cases.  ``dpc_lambda_star`` gives the
interference-cancelling bin coefficient (the dirty-paper optimum) and its
rate gain.

Conventions
-----------
* All rates and entropies are in bits: ``_gamma(x) = log2(x) / 2`` and
  ``XI = log2(2 pi e) / 2``.
* The covariance matrices use the ``E{W^2} = p1`` normalization, so the
  ``lambda1`` / ``lambda2`` stored in :class:`GaussianCoding` multiply a
  ``W`` of variance ``p1``.  ``dpc_lambda_star`` instead reports the
  coefficient against a unit-variance ``W`` (the successive-decoding
  construction is stated that way); the two scales differ by ``sqrt(p1)``.
* Zero-power limits (``p1 == 0``, or a private stream with zero power and
  zero lambda) are evaluated exactly with the degenerate variable dropped.
  A *positive* lambda on a zero-power stream makes the bin rate diverge:
  such points are degenerate and yield an infeasible region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "XI",
    "FEAS_TOL",
    "DET_REL_TOL",
    "DegenerateError",
    "ChannelParams",
    "GaussianCoding",
    "EntropyTerms",
    "MiTerms",
    "PentagonRegion",
    "eta_coefficients",
    "build_covariances",
    "entropy_terms",
    "mi_terms",
    "region_g",
    "region_g_suc",
    "region_g_sp1",
    "region_g_sp2",
    "dpc_lambda_star",
    "dpc_gain_objective",
]

#: Differential entropy of a unit Gaussian, bits: log2(2*pi*e)/2.
XI = 0.5 * math.log2(2.0 * math.pi * math.e)

#: Slack allowed on feasibility residuals and non-negativity checks, bits.
FEAS_TOL = 1e-9

#: A covariance block is singular when det <= DET_REL_TOL * prod(diagonal).
DET_REL_TOL = 1e-12


class DegenerateError(ValueError):
    """A required covariance block is singular, or a bin rate diverges.

    Raised by :func:`entropy_terms` / :func:`mi_terms` to signal that the
    parameter point cannot be evaluated by the determinant formulas and
    must be skipped.
    """

    def __init__(self, term: str, message: str | None = None):
        self.term = term
        super().__init__(message or f"degenerate evaluation at {term}")


def _gamma(x):
    """log2(x)/2, elementwise; the half-log that all rate formulas use."""
    return 0.5 * np.log2(x)


@dataclass(frozen=True)
class ChannelParams:
    """Powers and normalized link gains of the standard-form channel."""

    p1: float
    p2: float
    c12: float
    c21: float

    def __post_init__(self):
        for name in ("p1", "p2", "c12", "c21"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value < 0.0:
                raise ValueError(f"{name} must be finite and >= 0, got {value!r}")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class GaussianCoding:
    """One coding choice: power splits and bin coefficients.

    ``alpha`` is the fraction of sender 2's power spent on its own two
    streams (the rest cooperates), ``beta`` splits the private power
    between the two streams, and ``lambda1`` / ``lambda2`` are the bin
    coefficients of the two streams against ``W`` (``E{W^2} = p1`` scale).
    For the successive-decoding family only ``(alpha, beta)`` matter and
    ``lambda2`` plays the role of the single bin coefficient.
    """

    alpha: float
    beta: float
    lambda1: float = 0.0
    lambda2: float = 0.0

    def __post_init__(self):
        for name in ("alpha", "beta"):
            value = float(getattr(self, name))
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
            object.__setattr__(self, name, value)
        for name in ("lambda1", "lambda2"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value < 0.0:
                raise ValueError(f"{name} must be finite and >= 0, got {value!r}")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class EntropyTerms:
    """The twelve differential entropies (bits) plus shared amplitudes."""

    h_a: float  # h(W)
    h_b: float  # h(U, Y1)
    h_c: float  # h(W, U, Y1)
    h_d: float  # h(U, V)
    h_e: float  # h(Y2)
    h_f: float  # h(U, V, Y2)
    h_g: float  # h(W, U)
    h_h: float  # h(Y1)
    h_i: float  # h(V)
    h_j: float  # h(U, Y2)
    h_k: float  # h(U)
    h_l: float  # h(V, Y2)
    eta1: float
    eta2: float
    xi: float = XI


@dataclass(frozen=True)
class MiTerms:
    """The seven mutual-information combinations (bits)."""

    i1: float  # I(W; Y1, U)
    i2: float  # I(U, V; Y2)
    i3: float  # I(U; W)
    i4: float  # I(V; W)
    i5: float  # I(U, W; Y1)
    i6: float  # I(V; Y2, U)
    i7: float  # I(U; Y2, V)


@dataclass(frozen=True)
class PentagonRegion:
    """A rate region {R1 <= r1_max, R2 <= r2_max, R1 + R2 <= sum_max}.

    ``sum_max`` may be slack or binding; membership is the conjunction of
    the three inequalities over non-negative rate pairs.
    """

    r1_max: float
    r2_max: float
    sum_max: float
    feasible: bool = True

    def contains(self, r1: float, r2: float, tol: float = FEAS_TOL) -> bool:
        if not self.feasible or r1 < -tol or r2 < -tol:
            return False
        return (
            r1 <= self.r1_max + tol
            and r2 <= self.r2_max + tol
            and r1 + r2 <= self.sum_max + tol
        )


def eta_coefficients(ch: ChannelParams, alpha: float) -> tuple[float, float]:
    """Composite signal amplitudes seen by the two receivers.

    ``eta1 = sqrt(p1) + sqrt(c21 * (1-alpha) * p2)`` is the amplitude of
    sender 1's codeword at receiver 1 (direct path plus cooperation);
    ``eta2 = sqrt((1-alpha) * p2) + sqrt(c12 * p1)`` is its amplitude at
    receiver 2, where it acts as known interference.
    """
    abar = 1.0 - alpha
    eta1 = math.sqrt(ch.p1) + math.sqrt(ch.c21 * abar * ch.p2)
    eta2 = math.sqrt(abar * ch.p2) + math.sqrt(ch.c12 * ch.p1)
    return eta1, eta2


def build_covariances(
    ch: ChannelParams, cp: GaussianCoding
) -> tuple[np.ndarray, np.ndarray]:
    """Covariance matrices of (W, U, Y1) and (U, V, Y2), E{W^2} = p1 scale.

    Degenerate inputs (zero powers) yield singular matrices; downstream
    operations decide how to handle them.
    """
    p1, p2 = ch.p1, ch.p2
    a, b = cp.alpha, cp.beta
    l1, l2 = cp.lambda1, cp.lambda2
    eta1, eta2 = eta_coefficients(ch, a)
    rp1 = math.sqrt(p1)
    s_u = a * b * p2
    s_v = a * (1.0 - b) * p2

    mu12 = l1 * p1
    mu13 = eta1 * rp1
    mu22 = s_u + l1 * l1 * p1
    mu23 = l1 * eta1 * rp1 + math.sqrt(ch.c21) * s_u
    mu33 = eta1 * eta1 + ch.c21 * a * p2 + 1.0
    sigma_wuy1 = np.array(
        [[p1, mu12, mu13], [mu12, mu22, mu23], [mu13, mu23, mu33]]
    )

    nu12 = l1 * l2 * p1
    nu13 = s_u + l1 * eta2 * rp1
    nu22 = s_v + l2 * l2 * p1
    nu23 = s_v + l2 * eta2 * rp1
    nu33 = a * p2 + eta2 * eta2 + 1.0
    sigma_uvy2 = np.array(
        [[mu22, nu12, nu13], [nu12, nu22, nu23], [nu13, nu23, nu33]]
    )
    return sigma_wuy1, sigma_uvy2


def _det2(m) -> float:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def _det3(m) -> float:
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def _block_entropy(matrix: np.ndarray, rows: tuple[int, ...], term: str) -> float:
    """k*XI + log2(det)/2 for the sub-block on ``rows``; Degenerate if singular."""
    sub = matrix[np.ix_(rows, rows)]
    k = len(rows)
    if k == 1:
        det = sub[0, 0]
    elif k == 2:
        det = _det2(sub)
    else:
        det = _det3(sub)
    diag_prod = float(np.prod(np.diag(sub)))
    if det <= DET_REL_TOL * diag_prod or det <= 0.0:
        raise DegenerateError(term)
    return k * XI + 0.5 * math.log2(det)


def entropy_terms(ch: ChannelParams, cp: GaussianCoding) -> EntropyTerms:
    """The twelve differential entropies entering the region formulas.

    ``h_j`` and ``h_l`` are the (U, Y2) and (V, Y2) blocks of the second
    covariance matrix, which is what I6 = I(V; Y2, U) and I7 = I(U; Y2, V)
    require.

    Raises :class:`DegenerateError` when a required determinant falls at or
    below the singularity tolerance, which signals that the parameter point
    must be skipped.
    """
    mu, nu = build_covariances(ch, cp)
    eta1, eta2 = eta_coefficients(ch, cp.alpha)
    return EntropyTerms(
        h_a=_block_entropy(mu, (0,), "h_a"),
        h_b=_block_entropy(mu, (1, 2), "h_b"),
        h_c=_block_entropy(mu, (0, 1, 2), "h_c"),
        h_d=_block_entropy(nu, (0, 1), "h_d"),
        h_e=_block_entropy(nu, (2,), "h_e"),
        h_f=_block_entropy(nu, (0, 1, 2), "h_f"),
        h_g=_block_entropy(mu, (0, 1), "h_g"),
        h_h=_block_entropy(mu, (2,), "h_h"),
        h_i=_block_entropy(nu, (1,), "h_i"),
        h_j=_block_entropy(nu, (0, 2), "h_j"),
        h_k=_block_entropy(nu, (0,), "h_k"),
        h_l=_block_entropy(nu, (1, 2), "h_l"),
        eta1=eta1,
        eta2=eta2,
    )


def _check_divergent(ch: ChannelParams, cp: GaussianCoding) -> None:
    """Reject a positive bin coefficient on a zero-power stream."""
    s_u = cp.alpha * cp.beta * ch.p2
    s_v = cp.alpha * (1.0 - cp.beta) * ch.p2
    if cp.lambda1 > 0.0 and s_u == 0.0:
        raise DegenerateError("i3", "lambda1 > 0 with zero U-stream power")
    if cp.lambda2 > 0.0 and s_v == 0.0:
        raise DegenerateError("i4", "lambda2 > 0 with zero V-stream power")


def mi_terms(ch: ChannelParams, cp: GaussianCoding) -> MiTerms:
    """The seven mutual-information combinations, from the entropy terms.

    ``i3`` and ``i4`` come from their closed forms, with the convention
    that a zero bin coefficient gives exactly 0 bits.
    """
    _check_divergent(ch, cp)
    h = entropy_terms(ch, cp)
    s_u = cp.alpha * cp.beta * ch.p2
    s_v = cp.alpha * (1.0 - cp.beta) * ch.p2
    i3 = 0.0 if cp.lambda1 == 0.0 else 0.5 * math.log2(
        1.0 + cp.lambda1 ** 2 * ch.p1 / s_u
    )
    i4 = 0.0 if cp.lambda2 == 0.0 else 0.5 * math.log2(
        1.0 + cp.lambda2 ** 2 * ch.p1 / s_v
    )
    return MiTerms(
        i1=h.h_a + h.h_b - h.h_c,
        i2=h.h_d + h.h_e - h.h_f,
        i3=i3,
        i4=i4,
        i5=h.h_g + h.h_h - h.h_c,
        i6=h.h_i + h.h_j - h.h_f,
        i7=h.h_k + h.h_l - h.h_f,
    )


def _region_g_arrays(
    ch: ChannelParams,
    alpha: float,
    beta: float,
    lam1: np.ndarray,
    lam2: np.ndarray,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Pentagon bounds for a batch of (lambda1, lambda2) at fixed (alpha, beta).

    Works on the unit-variance-W parameterization internally, which keeps
    the zero-power limits (p1 == 0, or a stream with zero power and zero
    lambda) exact: the degenerate variable is dropped instead of pushing a
    singular determinant through a log.  Interior points agree with the
    entropy-term route to floating-point accuracy.

    Returns ``(r1_max, r2_max, sum_max, feasible)`` arrays; infeasible
    entries (constraint violations or divergent bin coefficients) carry
    zero bounds.
    """
    p1, p2, c12, c21 = ch.p1, ch.p2, ch.c12, ch.c21
    lam1 = np.asarray(lam1, dtype=float)
    lam2 = np.asarray(lam2, dtype=float)
    s_u = alpha * beta * p2
    s_v = alpha * (1.0 - beta) * p2
    eta1, eta2 = eta_coefficients(ch, alpha)
    rp1 = math.sqrt(p1)
    l1 = lam1 * rp1
    l2 = lam2 * rp1

    divergent = np.zeros(np.broadcast(lam1, lam2).shape, dtype=bool)
    if s_u == 0.0:
        divergent |= lam1 > 0.0
        l1 = np.zeros_like(l1)
    if s_v == 0.0:
        divergent |= lam2 > 0.0
        l2 = np.zeros_like(l2)

    # Unit-W covariance entries. var(W) = 1 throughout.
    uu = s_u + l1 * l1
    vv = s_v + l2 * l2
    uv = l1 * l2
    rc21 = math.sqrt(c21)
    uy1 = rc21 * s_u + l1 * eta1
    uy2 = s_u + l1 * eta2
    vy2 = s_v + l2 * eta2
    y1y1 = eta1 * eta1 + c21 * (s_u + s_v) + 1.0
    y2y2 = s_u + s_v + eta2 * eta2 + 1.0
    det_wy1 = y1y1 - eta1 * eta1  # var(Y1 | W)

    active_u = s_u > 0.0
    active_v = s_v > 0.0

    if active_u:
        det_uy1 = uu * y1y1 - uy1 * uy1
        # (W, U, Y1) with unit W in the first slot.
        det_wuy1 = (
            uu * y1y1
            - uy1 * uy1
            - l1 * (l1 * y1y1 - uy1 * eta1)
            + eta1 * (l1 * uy1 - uu * eta1)
        )
        i1 = _gamma(det_uy1 / det_wuy1)
        i5 = _gamma(s_u * y1y1 / det_wuy1)
        i3 = _gamma(1.0 + l1 * l1 / s_u)
    else:
        i1 = np.full_like(l1, float(_gamma(y1y1 / det_wy1)))
        i5 = i1.copy()
        i3 = np.zeros_like(l1)

    if active_v:
        i4 = _gamma(1.0 + l2 * l2 / s_v)
    else:
        i4 = np.zeros_like(l2)

    if active_u and active_v:
        det_uv = uu * vv - uv * uv
        det_uy2 = uu * y2y2 - uy2 * uy2
        det_vy2 = vv * y2y2 - vy2 * vy2
        det_uvy2 = (
            uu * (vv * y2y2 - vy2 * vy2)
            - uv * (uv * y2y2 - vy2 * uy2)
            + uy2 * (uv * vy2 - vv * uy2)
        )
        i2 = _gamma(det_uv * y2y2 / det_uvy2)
        i6 = _gamma(vv * det_uy2 / det_uvy2)
        i7 = _gamma(uu * det_vy2 / det_uvy2)
    elif active_u:
        det_uy2 = uu * y2y2 - uy2 * uy2
        i2 = _gamma(uu * y2y2 / det_uy2)
        i6 = np.zeros_like(l1)
        i7 = i2.copy()
    elif active_v:
        det_vy2 = vv * y2y2 - vy2 * vy2
        i2 = _gamma(vv * y2y2 / det_vy2)
        i6 = i2.copy()
        i7 = np.zeros_like(l2)
    else:
        i2 = np.zeros_like(l1 + l2)
        i6 = np.zeros_like(i2)
        i7 = np.zeros_like(i2)

    r2 = i2 - i3 - i4
    feasible = (
        ~divergent
        & (i5 - i3 >= -FEAS_TOL)
        & (i7 - i3 >= -FEAS_TOL)
        & (i6 - i4 >= -FEAS_TOL)
        & (r2 >= -FEAS_TOL)
    )
    r1_max = np.where(feasible, np.maximum(i1, 0.0), 0.0)
    r2_max = np.where(feasible, np.maximum(r2, 0.0), 0.0)
    sum_max = np.where(feasible, np.maximum(i5 + i6 - i3 - i4, 0.0), 0.0)
    return r1_max, r2_max, sum_max, feasible


def region_g(ch: ChannelParams, cp: GaussianCoding) -> PentagonRegion:
    """Pentagon achieved by one coding choice of the binned-pair family.

    Feasibility requires the four non-negativity constraints on the bin
    rates; violating tuples (and divergent ones, see
    :class:`DegenerateError`) come back as ``feasible=False`` with zero
    bounds.  Zero-power limits are evaluated exactly.
    """
    r1, r2, rsum, ok = _region_g_arrays(
        ch, cp.alpha, cp.beta, np.array([cp.lambda1]), np.array([cp.lambda2])
    )
    if not bool(ok[0]):
        return PentagonRegion(0.0, 0.0, 0.0, feasible=False)
    return PentagonRegion(float(r1[0]), float(r2[0]), float(rsum[0]), feasible=True)


def _region_g_suc_values(ch: ChannelParams, alpha, beta):
    """(r1_max, r2_max) of the successive-decoding region, vectorized."""
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    p1, p2, c12, c21 = ch.p1, ch.p2, ch.c12, ch.c21
    abar = 1.0 - alpha
    bbar = 1.0 - beta
    eta1 = math.sqrt(p1) + np.sqrt(c21 * abar * p2)
    eta2 = np.sqrt(abar * p2) + math.sqrt(c12 * p1)
    r1 = _gamma(1.0 + eta1 ** 2 / (c21 * alpha * bbar * p2 + 1.0))
    base = _gamma(1.0 + alpha * bbar * p2)
    term_y1 = _gamma(
        1.0 + c21 * alpha * beta * p2 / (eta1 ** 2 + c21 * alpha * bbar * p2 + 1.0)
    )
    term_y2 = _gamma(
        1.0 + alpha * beta * p2 / (alpha * bbar * p2 + eta2 ** 2 + 1.0)
    )
    r2 = base + np.minimum(term_y1, term_y2)
    return r1, r2


def region_g_suc(ch: ChannelParams, alpha: float, beta: float) -> PentagonRegion:
    """Successive-decoding region for one (alpha, beta) power split.

    Receiver 1 and receiver 2 both decode the ``U`` stream first, so its
    rate is capped by the weaker of the two links (the min term);
    the ``V`` stream is bin-coded at the dirty-paper optimum, which makes
    its rate interference-free.  There is no separate sum constraint:
    ``sum_max = r1_max + r2_max``.
    """
    if not 0.0 <= alpha <= 1.0 or not 0.0 <= beta <= 1.0:
        raise ValueError("alpha and beta must lie in [0, 1]")
    r1, r2 = _region_g_suc_values(ch, alpha, beta)
    r1 = float(r1)
    r2 = float(r2)
    return PentagonRegion(r1, r2, r1 + r2, feasible=True)


def region_g_sp1(ch: ChannelParams, alpha: float) -> PentagonRegion:
    """beta = 0 special case: all private power in the bin-coded stream."""
    return region_g_suc(ch, alpha, 0.0)


def region_g_sp2(ch: ChannelParams, alpha: float) -> PentagonRegion:
    """beta = 1 special case: all private power in the openly decoded stream."""
    return region_g_suc(ch, alpha, 1.0)


def dpc_lambda_star(
    ch: ChannelParams, alpha: float, beta: float
) -> tuple[float, float]:
    """Optimal bin coefficient for the V stream and its rate gain.

    With stream power ``s = alpha * (1-beta) * p2``, known interference
    amplitude ``eta2`` (unit-variance ``W``) and unit noise, the optimum is
    ``lambda* = s * eta2 / (s + 1)`` and the achieved rate is
    ``log2(1 + s) / 2``, as if the interference were absent.  Zero stream
    power gives ``(0, 0)``.
    """
    if not 0.0 <= alpha <= 1.0 or not 0.0 <= beta <= 1.0:
        raise ValueError("alpha and beta must lie in [0, 1]")
    s = alpha * (1.0 - beta) * ch.p2
    if s == 0.0:
        return 0.0, 0.0
    _, eta2 = eta_coefficients(ch, alpha)
    lam = s * eta2 / (s + 1.0)
    gain = 0.5 * math.log2(1.0 + s)
    return lam, gain


def dpc_gain_objective(ch: ChannelParams, alpha: float, beta: float):
    """The bin-coefficient objective I(V; Y2 | U) - I(V; W) as a callable.

    Written out term by term (two entropies, a joint entropy, and the bin
    cost) so that it provides an evaluation route independent of the
    closed-form optimum in :func:`dpc_lambda_star`.  Accepts scalars or
    arrays of the coefficient ``lam`` (unit-variance-W scale).
    """
    s = alpha * (1.0 - beta) * ch.p2
    if s <= 0.0:
        raise ValueError("zero stream power: the objective is identically 0")
    _, eta2 = eta_coefficients(ch, alpha)
    a = s + eta2 * eta2 + 1.0

    def objective(lam):
        lam = np.asarray(lam, dtype=float)
        b = s + lam * lam
        c = s + lam * eta2
        det = a * b - c * c
        return _gamma(a) + _gamma(b) - _gamma(det) - _gamma(1.0 + lam * lam / s)

    return objective
