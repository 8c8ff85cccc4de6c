"""Channel splitting, branch synthesis, and polarized index sets.

A branch label is a bit string; bit 0 selects the "minus" transform (the
first-decoded, degraded channel) and bit 1 the "plus" transform (the
second-decoded channel that sees the first input as side information).
The label's first character is the first, top-level transform. Index i of
a length-n block maps to the label given by the MSB-first binary expansion
of i - 1 with log2(n) digits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import (
    AlphabetOverflowError,
    ChannelError,
    Dmc,
    PriorDmc,
    canonicalize,
    generalized_bhatt,
    scalars,
)

DEPTH_CAP = 24
# raw pre-canonicalization product-size guard (memory safety)
_RAW_CAP = 1 << 24


def check_label(bits: str) -> str:
    if not isinstance(bits, str) or any(c not in "01" for c in bits):
        raise ChannelError(f"branch label must be a 0/1 string, got {bits!r}")
    if len(bits) > DEPTH_CAP:
        raise ChannelError(f"branch label longer than depth cap {DEPTH_CAP}")
    return bits


def complement_label(bits: str) -> str:
    """Bitwise complement of a branch label."""
    check_label(bits)
    return "".join("1" if c == "0" else "0" for c in bits)


def index_label(i: int, n: int) -> str:
    """Branch label of block index i in [1, n]: MSB-first binary of i - 1."""
    k = _log2_exact(n)
    if not 1 <= i <= n:
        raise ChannelError(f"index {i} out of range [1, {n}]")
    return format(i - 1, f"0{k}b") if k else ""


def _log2_exact(n: int) -> int:
    if n < 1 or n & (n - 1):
        raise ChannelError(f"n must be a power of two, got {n}")
    return n.bit_length() - 1


def split(w: Dmc, bit: int) -> Dmc:
    """One polarization step. bit=0: minus channel over (y1, y2);
    bit=1: plus channel over (u1, y1, y2)."""
    if bit not in (0, 1):
        raise ChannelError(f"bit must be 0 or 1, got {bit}")
    m = w.n_symbols
    if 2 * m * m > _RAW_CAP:
        raise AlphabetOverflowError(f"split of {m}-symbol channel exceeds raw cap")
    w0, w1 = w.w0, w.w1
    if bit == 0:
        v0 = 0.5 * (np.outer(w0, w0) + np.outer(w1, w1))
        v1 = 0.5 * (np.outer(w0, w1) + np.outer(w1, w0))
        return canonicalize(Dmc(v0.ravel(), v1.ravel()))
    v0 = 0.5 * np.concatenate([np.outer(w0, w0).ravel(), np.outer(w1, w0).ravel()])
    v1 = 0.5 * np.concatenate([np.outer(w1, w1).ravel(), np.outer(w0, w1).ravel()])
    return canonicalize(Dmc(v0, v1))


def synthesize(w: Dmc, bits: str) -> Dmc:
    """Left-fold of split along the branch label."""
    check_label(bits)
    out = canonicalize(w)
    for c in bits:
        out = split(out, int(c))
    return out


def split_prior(pc: PriorDmc, bit: int) -> PriorDmc:
    """Polarization step for a non-uniform input prior.

    Two i.i.d. inputs X1, X2 with Pr[X=0]=p are transformed to
    U1 = X1 xor X2, U2 = X2. bit=0 returns the channel seen when decoding
    U1 alone; bit=1 the channel decoding U2 with U1 revealed (U1 joins the
    output, weighted by P(u1|u2)).
    """
    if bit not in (0, 1):
        raise ChannelError(f"bit must be 0 or 1, got {bit}")
    p = pc.p
    w0, w1 = pc.channel.w0, pc.channel.w1
    if bit == 0:
        q0 = p * p + (1.0 - p) * (1.0 - p)  # Pr[U1 = 0]
        v0 = (p * p * np.outer(w0, w0) + (1.0 - p) ** 2 * np.outer(w1, w1)) / q0
        v1 = 0.5 * (np.outer(w0, w1) + np.outer(w1, w0))
        return PriorDmc(q0, canonicalize(Dmc(v0.ravel(), v1.ravel())))
    # output blocks ordered (u1=0, u1=1); P(u1|u2) = Pr[X1 = u1 xor u2]
    v0 = np.concatenate([p * np.outer(w0, w0).ravel(),
                         (1.0 - p) * np.outer(w1, w0).ravel()])
    v1 = np.concatenate([(1.0 - p) * np.outer(w1, w1).ravel(),
                         p * np.outer(w0, w1).ravel()])
    return PriorDmc(p, canonicalize(Dmc(v0, v1)))


def synthesize_prior(pc: PriorDmc, bits: str) -> PriorDmc:
    check_label(bits)
    out = PriorDmc(pc.p, canonicalize(pc.channel))
    for c in bits:
        out = split_prior(out, int(c))
    return out


@dataclass(frozen=True)
class ZInterval:
    lo: float
    hi: float

    def __post_init__(self):
        if not 0.0 <= self.lo <= self.hi <= 1.0 + 1e-12:
            raise ChannelError(f"bad interval [{self.lo}, {self.hi}]")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


def z_bounds(z_root: float, bits: str, bec_exact: bool = False) -> ZInterval:
    """Interval guaranteed to contain the branch Bhattacharyya value.

    The plus step squares exactly; the minus step is bracketed by
    [z, 2z - z^2], collapsing to the upper edge for erasure-like channels
    (bec_exact).
    """
    check_label(bits)
    if not 0.0 <= z_root <= 1.0:
        raise ChannelError(f"z out of range: {z_root}")
    lo = hi = float(z_root)
    for c in bits:
        if c == "1":
            lo, hi = lo * lo, hi * hi
        elif bec_exact:
            lo = hi = 2.0 * lo - lo * lo
        else:
            lo, hi = lo, 2.0 * hi - hi * hi
    return ZInterval(lo, min(hi, 1.0))


@dataclass(frozen=True)
class PolarizedSets:
    d_set: frozenset
    r_set: frozenset
    undecided: frozenset
    n: int
    epsilon: float


def is_erasure_like(w: Dmc) -> bool:
    """True when every symbol has w0 = w1 or carries only one input's mass;
    such channels obey the exact minus-step recursion z -> 2z - z^2."""
    return bool(np.all((w.w0 == w.w1) | (w.w0 * w.w1 == 0.0)))


def _leaf_z_exact(w: Dmc, k: int) -> list[float]:
    if k == 0:
        return [scalars(w).z]
    return _leaf_z_exact(split(w, 0), k - 1) + _leaf_z_exact(split(w, 1), k - 1)


def polarized_sets(w: Dmc, n: int, epsilon: float,
                   method: str = "exact") -> PolarizedSets:
    """Partition indices 1..n into good (Z <= eps), bad (Z >= 1-eps) and
    undecided. method='bounds' uses interval propagation instead of exact
    synthesis and may leave extra indices undecided."""
    k = _log2_exact(n)
    if not 0.0 < epsilon < 1.0:
        raise ChannelError(f"epsilon must be in (0,1): {epsilon}")
    method = method.lower()
    w = canonicalize(w)
    if method == "exact":
        zs = _leaf_z_exact(w, k)
        intervals = [ZInterval(z, z) for z in np.clip(zs, 0.0, 1.0)]
    elif method == "bounds":
        z0 = scalars(w).z
        bec = is_erasure_like(w)
        intervals = [z_bounds(z0, format(j, f"0{k}b") if k else "", bec)
                     for j in range(n)]
    else:
        raise ChannelError(f"unknown method: {method!r}")
    d, r, u = set(), set(), set()
    for j, iv in enumerate(intervals):
        i = j + 1
        if iv.hi <= epsilon:
            d.add(i)
        elif iv.lo >= 1.0 - epsilon:
            r.add(i)
        else:
            u.add(i)
    return PolarizedSets(frozenset(d), frozenset(r), frozenset(u), n, epsilon)
