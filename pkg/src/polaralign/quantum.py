"""Pauli qubit channels: induced amplitude/phase channels, coherent
information, and entanglement-assistance certificates.

A Pauli channel applies I, X, Z, Y with probabilities p00, p10, p01, p11
(first index = bit-flip component, second = phase-flip component). Its
amplitude channel is a plain symmetric flip with crossover p10 + p11.
The phase channel's output states are simultaneously diagonal in the Bell
basis, so it reduces to a classical 4-output channel x -> (u, v xor x)
with probability p_{u,v}; everything downstream is classical.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .channels import ChannelError, Dmc, canonicalize, scalars
from .polarize import check_label, complement_label, index_label, split, _log2_exact

LB_MARGIN = 1e-9
UB_TOL = 1e-12


@dataclass(frozen=True)
class PauliChannel:
    p00: float
    p10: float
    p01: float
    p11: float

    def __post_init__(self):
        ps = (self.p00, self.p10, self.p01, self.p11)
        if any(p < 0.0 for p in ps):
            raise ChannelError("negative Pauli probability")
        if abs(sum(ps) - 1.0) > 1e-12:
            raise ChannelError(f"Pauli probabilities sum to {sum(ps)!r}")

    @staticmethod
    def depolarizing(p: float) -> "PauliChannel":
        if not 0.0 <= p <= 1.0:
            raise ChannelError(f"p out of range: {p}")
        return PauliChannel(1.0 - p, p / 3.0, p / 3.0, p / 3.0)

    @staticmethod
    def bb84(qx: float, qz: float) -> "PauliChannel":
        """Independent bit flip with probability qx and phase flip qz."""
        for q in (qx, qz):
            if not 0.0 <= q <= 1.0:
                raise ChannelError(f"q out of range: {q}")
        return PauliChannel((1.0 - qx) * (1.0 - qz), qx * (1.0 - qz),
                            (1.0 - qx) * qz, qx * qz)

    @staticmethod
    def two_pauli(qx: float, qz: float) -> "PauliChannel":
        """X with probability qx, Z with probability qz, never Y."""
        if qx < 0.0 or qz < 0.0 or qx + qz > 1.0:
            raise ChannelError(f"(qx, qz) out of range: ({qx}, {qz})")
        return PauliChannel(1.0 - qx - qz, qx, qz, 0.0)


@dataclass(frozen=True)
class EntanglementSets:
    q_set: frozenset
    a_set: frozenset
    p_set: frozenset
    e_set: frozenset
    undecided: frozenset
    n: int
    epsilon: float


def induced_channels(pc: PauliChannel) -> tuple[Dmc, Dmc]:
    """(amplitude, phase) as classical channels.

    Amplitude: flip probability p10 + p11 (phase errors act trivially on a
    basis state). Phase: the Bell-diagonal reduction x -> (u, v xor x)
    with weight p_{u,v}; its Bhattacharyya parameter is
    2 sqrt(p00 p01) + 2 sqrt(p10 p11).
    """
    a = pc.p10 + pc.p11
    amplitude = canonicalize(Dmc(np.array([1.0 - a, a]), np.array([a, 1.0 - a])))
    w0 = np.array([pc.p00, pc.p01, pc.p10, pc.p11])
    w1 = np.array([pc.p01, pc.p00, pc.p11, pc.p10])
    phase = canonicalize(Dmc(w0, w1))
    return amplitude, phase


def _xlogx(p: float) -> float:
    return p * float(np.log2(p)) if p > 0.0 else 0.0


def coherent_info(pc: PauliChannel, family: str) -> float:
    """One-shot coherent information via the family's closed form.

    Raises when the channel's probabilities do not match the family
    pattern (within 1e-12).
    """
    family = family.lower().replace("_", "-")
    if family == "depolarizing":
        p = pc.p10 + pc.p01 + pc.p11
        if max(abs(pc.p10 - p / 3.0), abs(pc.p01 - p / 3.0),
               abs(pc.p11 - p / 3.0)) > 1e-12:
            raise ChannelError("channel is not depolarizing")
        return 1.0 + _xlogx(1.0 - p) + (p * float(np.log2(p / 3.0)) if p > 0.0 else 0.0)
    if family == "bb84":
        qx = pc.p10 + pc.p11
        qz = pc.p01 + pc.p11
        if abs(pc.p11 - qx * qz) > 1e-12:
            raise ChannelError("channel is not an independent-flip (bb84) channel")
        from .channels import binary_entropy
        return 1.0 - binary_entropy(qx) - binary_entropy(qz)
    if family == "two-pauli":
        if abs(pc.p11) > 1e-12:
            raise ChannelError("channel is not a two-Pauli channel")
        qx, qz = pc.p10, pc.p01
        return (1.0 + _xlogx(1.0 - qx - qz) + _xlogx(qx) + _xlogx(qz))
    raise ChannelError(f"unknown family: {family!r}")


def _branch_values(w: Dmc, k: int, value) -> dict[str, float]:
    level = {"": canonicalize(w)}
    for _ in range(k):
        nxt = {}
        for label, c in level.items():
            nxt[label + "0"] = split(c, 0)
            nxt[label + "1"] = split(c, 1)
        level = nxt
    return {label: value(c) for label, c in sorted(level.items())}


def _frames(pc: PauliChannel):
    """The 6 Pauli-frame relabelings: permutations of the X/Z/Y weights."""
    seen = set()
    out = []
    for perm in permutations((pc.p10, pc.p01, pc.p11)):
        if perm in seen:
            continue
        seen.add(perm)
        out.append(PauliChannel(pc.p00, *perm))
    return out


def ent_zero(pc: PauliChannel, k: int) -> bool:
    """Depth-k certificate that no input needs preshared entanglement:
    Z(amplitude_b) + Z(phase_bbar) <= 1 for every branch b."""
    check_label("0" * k)
    amp, phase = induced_channels(pc)
    za = _branch_values(amp, k, lambda c: scalars(c).z)
    zp = _branch_values(phase, k, lambda c: scalars(c).z)
    return all(za[b] + zp[complement_label(b)] <= 1.0 + UB_TOL for b in za)


def ent_needed(pc: PauliChannel, k: int) -> bool:
    """Depth-k certificate that a linear number of inputs needs preshared
    entanglement: for every Pauli-frame relabeling, some branch b has
    I(amplitude_b) + I(phase_bbar) <= 1 - margin.

    Only the 6 discrete frame relabelings are checked, not the continuum
    of amplitude bases; results carry this caveat.
    """
    check_label("0" * k)
    for frame in _frames(pc):
        amp, phase = induced_channels(frame)
        ia = _branch_values(amp, k, lambda c: scalars(c).i)
        ip = _branch_values(phase, k, lambda c: scalars(c).i)
        if not any(ia[b] + ip[complement_label(b)] <= 1.0 - LB_MARGIN for b in ia):
            return False
    return True


def entanglement_sets(pc: PauliChannel, n: int, epsilon: float) -> EntanglementSets:
    """Partition of indices 1..n by goodness in the two bases: q = good in
    both, a = bad amplitude / good phase, p = good amplitude / bad phase,
    e = bad in both (needs entanglement); middling values are undecided.
    The phase channel is indexed by the complemented branch label."""
    k = _log2_exact(n)
    if not 0.0 < epsilon < 1.0:
        raise ChannelError(f"epsilon must be in (0,1): {epsilon}")
    amp, phase = induced_channels(pc)
    za = _branch_values(amp, k, lambda c: scalars(c).z)
    zp = _branch_values(phase, k, lambda c: scalars(c).z)
    q, a, p, e, und = set(), set(), set(), set(), set()
    for i in range(1, n + 1):
        b = index_label(i, n)
        fa = za[b]
        fp = zp[complement_label(b)]
        ga, ba = fa <= epsilon, fa >= 1.0 - epsilon
        gp, bp = fp <= epsilon, fp >= 1.0 - epsilon
        if ga and gp:
            q.add(i)
        elif ba and gp:
            a.add(i)
        elif ga and bp:
            p.add(i)
        elif ba and bp:
            e.add(i)
        else:
            und.add(i)
    return EntanglementSets(frozenset(q), frozenset(a), frozenset(p),
                            frozenset(e), frozenset(und), n, epsilon)
