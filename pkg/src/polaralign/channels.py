"""Binary-input discrete memoryless channels and their scalar functionals.

A channel is stored as two weight vectors ``w0`` and ``w1`` over a shared
finite output alphabet: ``w0[y] = P(y | input 0)`` and ``w1[y] = P(y | input 1)``.
Canonicalization drops zero-mass symbols and merges symbols with equal
likelihood ratio, which keeps alphabets of repeatedly transformed channels
tractable without changing any of the scalar quantities computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._kernels import merge_sorted

# tolerance below which two log-likelihood-ratio values count as equal
LR_MERGE_TOL = 1e-10
MASS_TOL = 1e-12
ALPHABET_CAP = 1 << 20


class ChannelError(ValueError):
    """Invalid channel construction or parameters."""


class AlphabetOverflowError(ChannelError):
    """Output alphabet grew past the configured cap."""


def binary_entropy(p: float) -> float:
    """H_b(p) in bits, with 0 log 0 = 0."""
    if p < 0.0 or p > 1.0:
        raise ChannelError(f"probability out of range: {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return float(-(p * np.log2(p) + (1.0 - p) * np.log2(1.0 - p)))


def binary_convolve(a: float, b: float) -> float:
    """Crossover probability of two cascaded symmetric binary flips."""
    return a * (1.0 - b) + b * (1.0 - a)


def _entropy_bits(weights: np.ndarray) -> float:
    w = weights[weights > 0.0]
    return float(-np.dot(w, np.log2(w)))


@dataclass(frozen=True, eq=False)
class Dmc:
    """Binary-input DMC over a finite output alphabet.

    Parameters
    ----------
    w0, w1 : array_like
        Per-symbol conditional probabilities given input 0 / input 1.
        Each must be nonnegative and sum to one.
    """

    w0: np.ndarray
    w1: np.ndarray

    def __post_init__(self):
        w0 = np.asarray(self.w0, dtype=np.float64).ravel()
        w1 = np.asarray(self.w1, dtype=np.float64).ravel()
        if w0.shape != w1.shape:
            raise ChannelError("w0 and w1 must have the same length")
        if w0.size == 0:
            raise ChannelError("channel needs at least one output symbol")
        if np.any(w0 < 0.0) or np.any(w1 < 0.0):
            raise ChannelError("negative symbol weight")
        for name, w in (("w0", w0), ("w1", w1)):
            s = float(np.sum(w))
            if abs(s - 1.0) > max(MASS_TOL, w.size * 1e-16):
                raise ChannelError(f"{name} sums to {s!r}, expected 1")
        w0.setflags(write=False)
        w1.setflags(write=False)
        object.__setattr__(self, "w0", w0)
        object.__setattr__(self, "w1", w1)

    @property
    def n_symbols(self) -> int:
        return self.w0.size

    def outputs(self) -> list[tuple[float, float]]:
        """Ordered (w0, w1) pairs, one per output symbol."""
        return list(zip(self.w0.tolist(), self.w1.tolist()))


@dataclass(frozen=True)
class PriorDmc:
    """A channel together with an input prior Pr[input = 0] = p."""

    p: float
    channel: Dmc

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ChannelError(f"prior out of range: {self.p}")


@dataclass(frozen=True, eq=False)
class Preprocessor:
    """2x2 stochastic map P(x|u); row u gives the distribution of x."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.float64)
        if m.shape != (2, 2):
            raise ChannelError("preprocessor matrix must be 2x2")
        if np.any(m < 0.0) or np.any(np.abs(m.sum(axis=1) - 1.0) > MASS_TOL):
            raise ChannelError("preprocessor rows must be probability vectors")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @staticmethod
    def identity() -> "Preprocessor":
        return Preprocessor(np.eye(2))

    @staticmethod
    def symmetric(gamma: float) -> "Preprocessor":
        """Symmetric binary preprocessing with crossover gamma."""
        if not 0.0 <= gamma <= 1.0:
            raise ChannelError(f"gamma out of range: {gamma}")
        return Preprocessor(np.array([[1.0 - gamma, gamma], [gamma, 1.0 - gamma]]))

    @staticmethod
    def from_reverse_conditionals(u0_given_x0: float, u0_given_x1: float,
                                  r: float) -> "Preprocessor":
        """Invert reverse conditionals Pr[U=0|X] and a marginal Pr[U=0]=r
        into forward rows P(x|u) via Bayes.

        The input marginal of X is pinned by consistency; degenerate
        denominators (r in {0,1}, or U independent of X) fall back to
        deterministic / marginal rows.
        """
        a, b = float(u0_given_x0), float(u0_given_x1)
        for v in (a, b, r):
            if not 0.0 <= v <= 1.0:
                raise ChannelError(f"probability out of range: {v}")
        if abs(a - b) <= 1e-15:
            # U carries no information about X; any X marginal is consistent
            p0 = 0.5
            if abs(a - r) > 1e-9:
                raise ChannelError("reverse conditionals inconsistent with marginal")
        else:
            p0 = (r - b) / (a - b)
            if p0 < -1e-9 or p0 > 1.0 + 1e-9:
                raise ChannelError("reverse conditionals admit no input distribution")
            p0 = min(max(p0, 0.0), 1.0)
        p1 = 1.0 - p0
        joint0 = np.array([a * p0, b * p1])
        joint1 = np.array([(1.0 - a) * p0, (1.0 - b) * p1])
        # degenerate marginals: the unused row defaults to the other row
        row0 = joint0 / joint0.sum() if joint0.sum() > 0.0 else None
        row1 = joint1 / joint1.sum() if joint1.sum() > 0.0 else None
        if row0 is None and row1 is None:
            raise ChannelError("reverse conditionals carry no mass")
        if row0 is None:
            row0 = row1
        if row1 is None:
            row1 = row0
        return Preprocessor(np.vstack([row0, row1]))


class Ordering(Enum):
    DEGRADED = "degraded"
    LESS_NOISY = "less-noisy"
    MORE_CAPABLE = "more-capable"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ChannelScalars:
    z: float
    i: float
    delta: float
    h_x_given_y: float


def make_bsc(alpha: float) -> Dmc:
    """Symmetric binary channel with crossover probability alpha."""
    if not 0.0 <= alpha <= 0.5:
        raise ChannelError(f"alpha out of range [0, 1/2]: {alpha}")
    return Dmc(np.array([1.0 - alpha, alpha]), np.array([alpha, 1.0 - alpha]))


def make_bec(beta: float) -> Dmc:
    """Erasure channel with erasure probability beta."""
    if not 0.0 <= beta <= 1.0:
        raise ChannelError(f"beta out of range [0, 1]: {beta}")
    return Dmc(np.array([1.0 - beta, 0.0, beta]), np.array([0.0, 1.0 - beta, beta]))


def make_channel(kind: str, param: float) -> Dmc:
    """Constructor dispatch: kind is 'bsc' (crossover) or 'bec' (erasure)."""
    kind = kind.lower()
    if kind == "bsc":
        return make_bsc(param)
    if kind == "bec":
        return make_bec(param)
    raise ChannelError(f"unknown channel kind: {kind!r}")


def canonicalize(w: Dmc) -> Dmc:
    """Drop zero-mass symbols, merge equal-likelihood-ratio symbols, sort.

    Symbols merge when their log-likelihood ratios differ by at most
    ``LR_MERGE_TOL``; symbols with w1 = 0 (resp. w0 = 0) form dedicated
    infinite-ratio classes. The result is sorted by likelihood ratio
    ascending, so equal channels canonicalize to identical symbol lists.
    """
    w0 = w.w0
    w1 = w.w1
    keep = (w0 + w1) > 0.0
    w0 = w0[keep]
    w1 = w1[keep]

    zero0 = w0 == 0.0
    zero1 = w1 == 0.0
    finite = ~(zero0 | zero1)

    f0 = w0[finite]
    f1 = w1[finite]
    keys = np.log(f0) - np.log(f1)
    order = np.argsort(keys, kind="stable")
    m0, m1 = merge_sorted(keys[order], f0[order], f1[order], LR_MERGE_TOL)

    parts0 = []
    parts1 = []
    if np.any(zero0):
        parts0.append(np.array([0.0]))
        parts1.append(np.array([float(np.sum(w1[zero0]))]))
    parts0.append(m0)
    parts1.append(m1)
    if np.any(zero1):
        parts0.append(np.array([float(np.sum(w0[zero1]))]))
        parts1.append(np.array([0.0]))

    c0 = np.concatenate(parts0)
    c1 = np.concatenate(parts1)
    if c0.size > ALPHABET_CAP:
        raise AlphabetOverflowError(
            f"canonical alphabet has {c0.size} symbols (cap {ALPHABET_CAP})")
    return Dmc(c0, c1)


def compose(w: Dmc, t: Preprocessor) -> Dmc:
    """Serial concatenation: input u goes through t, its output through w."""
    m = t.matrix
    v0 = m[0, 0] * w.w0 + m[0, 1] * w.w1
    v1 = m[1, 0] * w.w0 + m[1, 1] * w.w1
    return canonicalize(Dmc(v0, v1))


def scalars(w: Dmc, prior: float = 0.5) -> ChannelScalars:
    """Bhattacharyya parameter, mutual information at the given input prior,
    total-variation distance between the rows, and H(X|Y)."""
    if not 0.0 <= prior <= 1.0:
        raise ChannelError(f"prior out of range: {prior}")
    z = float(np.sum(np.sqrt(w.w0 * w.w1)))
    delta = 0.5 * float(np.sum(np.abs(w.w0 - w.w1)))
    py = prior * w.w0 + (1.0 - prior) * w.w1
    h_y = _entropy_bits(py)
    h_y_given_x = prior * _entropy_bits(w.w0) + (1.0 - prior) * _entropy_bits(w.w1)
    i = max(h_y - h_y_given_x, 0.0)
    h_x_given_y = max(binary_entropy(prior) - i, 0.0)
    return ChannelScalars(z=z, i=i, delta=delta, h_x_given_y=h_x_given_y)


def generalized_bhatt(pc: PriorDmc) -> float:
    """Prior-weighted Bhattacharyya value 2 sqrt(p(1-p)) * sum sqrt(w0 w1)."""
    base = float(np.sum(np.sqrt(pc.channel.w0 * pc.channel.w1)))
    return 2.0 * float(np.sqrt(pc.p * (1.0 - pc.p))) * base


def bsc_bec_ordering(alpha: float, beta: float) -> Ordering:
    """Closed-form comparison of a BSC(alpha) against a BEC(beta)."""
    if not 0.0 <= alpha <= 0.5:
        raise ChannelError(f"alpha out of range [0, 1/2]: {alpha}")
    if not 0.0 <= beta <= 1.0:
        raise ChannelError(f"beta out of range [0, 1]: {beta}")
    if beta <= 2.0 * alpha:
        return Ordering.DEGRADED
    if beta <= 4.0 * alpha * (1.0 - alpha):
        return Ordering.LESS_NOISY
    if beta <= binary_entropy(alpha):
        return Ordering.MORE_CAPABLE
    return Ordering.INCOMPARABLE
