"""Secrecy capacity and key-need classification for the two BSC/BEC
wiretap configurations, plus index-set partitions for finite blocks.

Configuration A ("bsc-bec"): Bob sees a BSC(alpha), Eve a BEC(beta); the
optimal preprocessing is a symmetric flip BSC(gamma) in front of both.
Configuration B ("bec-bsc"): Bob sees a BEC(beta), Eve a BSC(alpha); the
optimal preprocessing is asymmetric and comes with a biased input.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .alignment import check_nonalignment
from .channels import (
    ChannelError,
    Dmc,
    Preprocessor,
    PriorDmc,
    binary_convolve,
    binary_entropy,
    compose,
    make_bec,
    make_bsc,
    scalars,
)
from .polarize import index_label, synthesize_prior, _log2_exact
from .channels import generalized_bhatt

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


class WiretapRegime(Enum):
    LESS_NOISY_EVE = "less-noisy-eve"      # zero secrecy capacity
    LESS_NOISY = "less-noisy"
    MORE_CAPABLE = "more-capable"
    GENERAL = "general"


class KeyNeed(Enum):
    ZERO_CAPACITY = "zero-capacity"
    NO_KEY_NEEDED = "no-key-needed"
    NO_KEY_LESS_NOISY = "no-key-less-noisy"
    NO_KEY_MORE_CAPABLE = "no-key-more-capable"
    KEY_NEEDED = "key-needed"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class WiretapSolution:
    cs: float
    gamma_star: float | None
    r_star: float | None
    regime: WiretapRegime


@dataclass(frozen=True)
class WiretapSets:
    m_set: frozenset
    a_set: frozenset
    f_set: frozenset
    k_set: frozenset
    undecided: frozenset
    n: int
    epsilon: float


def maximize_scalar(f: Callable[[float], float], lo: float, hi: float,
                    coarse: float = 1e-3, tol: float = 1e-10):
    """Coarse grid scan followed by golden-section refinement.

    Unimodality is not assumed globally; the grid stage locates the basin
    and golden-section only refines within one grid cell on each side.
    Ties break toward the smaller argument. Returns (x_star, f(x_star)).
    """
    if hi < lo:
        raise ChannelError(f"empty interval [{lo}, {hi}]")
    n = max(int(round((hi - lo) / coarse)), 1)
    xs = lo + (hi - lo) * np.arange(n + 1) / n
    vals = np.array([f(float(x)) for x in xs])
    i = int(np.argmax(vals))  # first max = smallest argument
    a = float(xs[max(i - 1, 0)])
    b = float(xs[min(i + 1, n)])
    # deterministic golden-section loop
    x1 = b - GOLDEN * (b - a)
    x2 = a + GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = f(x2)
    x = x1 if f1 >= f2 else x2
    fx = f1 if f1 >= f2 else f2
    best_x, best_f = float(xs[i]), float(vals[i])
    if fx > best_f:
        return float(x), float(fx)
    return best_x, best_f


def _check_params(alpha: float, beta: float) -> None:
    if not 0.0 <= alpha <= 0.5:
        raise ChannelError(f"alpha out of range [0, 1/2]: {alpha}")
    if not 0.0 <= beta <= 1.0:
        raise ChannelError(f"beta out of range [0, 1]: {beta}")


def bsc_bec_pair(alpha: float, beta: float, gamma: float) -> tuple[Dmc, Dmc]:
    """Preprocessed pair for configuration A: (Bob's channel, Eve's channel)."""
    pre = Preprocessor.symmetric(gamma)
    return compose(make_bsc(alpha), pre), compose(make_bec(beta), pre)


def _leakage_gap_bsc_bec(alpha: float, beta: float, gamma: float) -> float:
    wbar, vbar = bsc_bec_pair(alpha, beta, gamma)
    return scalars(wbar).i - scalars(vbar).i


def cs_bsc_bec(alpha: float, beta: float) -> WiretapSolution:
    """Secrecy capacity of configuration A.

    Zero when Eve's erasure channel is less noisy than Bob's BSC
    (beta <= 4 alpha (1 - alpha)); otherwise the symmetric-preprocessing
    gap I(U;Y) - I(U;Z) maximized over gamma in [0, 1/2].
    """
    _check_params(alpha, beta)
    if beta <= 4.0 * alpha * (1.0 - alpha):
        return WiretapSolution(0.0, None, None, WiretapRegime.LESS_NOISY_EVE)
    gamma, cs = maximize_scalar(
        lambda g: _leakage_gap_bsc_bec(alpha, beta, g), 0.0, 0.5)
    return WiretapSolution(max(cs, 0.0), gamma, None, WiretapRegime.GENERAL)


def _f_gap_bec_bsc(alpha: float, beta: float, p: float) -> float:
    """I(X;Y) - I(X;Z) at input bias Pr[X=1]=p for Bob=BEC(beta),
    Eve=BSC(alpha); closed form."""
    return ((1.0 - beta) * binary_entropy(p)
            - binary_entropy(binary_convolve(p, alpha)) + binary_entropy(alpha))


def _ulu_objective(alpha: float, beta: float, r: float, gamma: float) -> float:
    f = lambda p: _f_gap_bec_bsc(alpha, beta, p)
    return f((1.0 - r) * gamma) - r * f(0.0) - (1.0 - r) * f(gamma)


def cs_bec_bsc(alpha: float, beta: float) -> WiretapSolution:
    """Secrecy capacity of configuration B.

    For beta <= H_b(alpha) Bob's channel is more capable and a plain input
    bias suffices (1-D maximization). Above that threshold a binary
    auxiliary with weights (r, 1-r) selecting biases {0, gamma} is optimal;
    the 2-D objective is maximized over (r, gamma) in [0,1]^2.
    """
    _check_params(alpha, beta)
    hb = binary_entropy(alpha)
    if beta <= hb:
        regime = (WiretapRegime.LESS_NOISY if beta <= 4.0 * alpha * (1.0 - alpha)
                  else WiretapRegime.MORE_CAPABLE)
        _, cs = maximize_scalar(lambda p: _f_gap_bec_bsc(alpha, beta, p), 0.0, 1.0)
        return WiretapSolution(max(cs, 0.0), None, None, regime)
    # coarse 2-D grid, then alternating per-coordinate golden refinement
    grid = np.linspace(0.0, 1.0, 201)
    best = (0.0, 0.0, _ulu_objective(alpha, beta, 0.0, 0.0))
    for r in grid:
        for g in grid:
            v = _ulu_objective(alpha, beta, float(r), float(g))
            if v > best[2] + 1e-15:
                best = (float(r), float(g), v)
    r, g, _ = best
    for _ in range(8):
        g, _ = maximize_scalar(lambda x: _ulu_objective(alpha, beta, r, x),
                               max(g - 0.01, 0.0), min(g + 0.01, 1.0),
                               coarse=1e-3)
        r, _ = maximize_scalar(lambda x: _ulu_objective(alpha, beta, x, g),
                               max(r - 0.01, 0.0), min(r + 0.01, 1.0),
                               coarse=1e-3)
    cs = _ulu_objective(alpha, beta, r, g)
    return WiretapSolution(max(cs, 0.0), g, r, WiretapRegime.GENERAL)


def key_need_bsc_bec(alpha: float, beta: float) -> KeyNeed:
    """Level-0 alignment certificate for configuration A at the optimal
    preprocessing: no preshared key is needed when
    Z(BSC(alpha * gamma)) + (1 - beta)(1 - 2 gamma) <= 1."""
    _check_params(alpha, beta)
    sol = cs_bsc_bec(alpha, beta)
    if sol.regime is WiretapRegime.LESS_NOISY_EVE:
        return KeyNeed.ZERO_CAPACITY
    g = sol.gamma_star
    ag = binary_convolve(alpha, g)
    z_w = 2.0 * np.sqrt(ag * (1.0 - ag))
    f_vc = (1.0 - beta) * (1.0 - 2.0 * g)
    if z_w + f_vc <= 1.0 + 1e-12:
        return KeyNeed.NO_KEY_NEEDED
    return KeyNeed.INCONCLUSIVE


def bec_bsc_preprocessed(alpha: float, beta: float, r: float,
                         gamma: float) -> tuple[PriorDmc, PriorDmc]:
    """Preprocessed pair for configuration B at auxiliary weights (r, gamma):
    returns (Bob's channel, Eve's channel) with the auxiliary-input prior.

    The auxiliary U=0 pins X to one value and U=1 applies bias gamma; the
    equivalent reverse conditionals are Pr[U=0|X=1]=0 and
    Pr[U=0|X=0] = r / (1 - (1-r) gamma).
    """
    p_x0 = 1.0 - (1.0 - r) * gamma  # Pr[X = 0]
    u0_given_x0 = r / p_x0 if p_x0 > 0.0 else 1.0
    pre = Preprocessor.from_reverse_conditionals(u0_given_x0, 0.0, r)
    bob = PriorDmc(r, compose(make_bec(beta), pre))
    eve = PriorDmc(r, compose(make_bsc(alpha), pre))
    return bob, eve


def key_need_bec_bsc(alpha: float, beta: float, level: int = 3) -> KeyNeed:
    """Regime split plus a depth-``level`` nonalignment certificate for
    configuration B: a firing branch where Eve's synthesized channel is at
    least as informative as Bob's certifies that a linear number of key
    bits is required."""
    _check_params(alpha, beta)
    hb = binary_entropy(alpha)
    if beta <= 4.0 * alpha * (1.0 - alpha):
        return KeyNeed.NO_KEY_LESS_NOISY
    if beta <= hb:
        return KeyNeed.NO_KEY_MORE_CAPABLE
    sol = cs_bec_bsc(alpha, beta)
    bob, eve = bec_bsc_preprocessed(alpha, beta, sol.r_star, sol.gamma_star)
    # Branch informations are taken at a uniform auxiliary input: with the
    # optimizing biased prior the gap max_b I(eve_b) - I(bob_b) stays below
    # zero for every beta (it equals -cs at depth 0 and only approaches 0
    # from below as the branches polarize), so that variant can never fire.
    fired, _ = check_nonalignment(bob.channel, eve.channel, level)
    return KeyNeed.KEY_NEEDED if fired else KeyNeed.INCONCLUSIVE


def wiretap_sets(wbar: PriorDmc, vbar: PriorDmc, n: int,
                 epsilon: float) -> WiretapSets:
    """Index partition for a finite block: wbar is the intended decoder's
    channel, vbar the eavesdropper's.

    With good = branch value <= epsilon and secret = branch value >= 1 - epsilon:
    m (message bits) = good for the decoder and secret from the eavesdropper;
    a (random bits) = good for the decoder, not secret; f (frozen) = not good,
    secret; k (preshared key) = not good, not secret. The four sets use plain
    complements, so they partition [n] exactly and undecided stays empty.
    """
    if not 0.0 < epsilon < 1.0:
        raise ChannelError(f"epsilon must be in (0,1): {epsilon}")
    _log2_exact(n)
    m, a, f, k = set(), set(), set(), set()
    for i in range(1, n + 1):
        b = index_label(i, n)
        zw = generalized_bhatt(synthesize_prior(wbar, b))
        zv = generalized_bhatt(synthesize_prior(vbar, b))
        good_w = zw <= epsilon
        secret_v = zv >= 1.0 - epsilon
        if good_w:
            (m if secret_v else a).add(i)
        else:
            (f if secret_v else k).add(i)
    return WiretapSets(frozenset(m), frozenset(a), frozenset(f), frozenset(k),
                       frozenset(), n, epsilon)
