"""Classical-quantum channels as flagged mixtures of labeled pure states.

A state is a list of components (weight, flag, pure). Flags are classical
tags: components with different flags live in orthogonal sectors. A pure
label is a tuple of indices into a shared real overlap table; the inner
product of two labels is the product of the per-factor table entries.
The ambient Hilbert space is never materialized — every computation runs
in the span of the participating components via Gram matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import ChannelError, Dmc, canonicalize

COMPONENT_CAP = 1 << 16
GRAM_EIG_TOL = -1e-9


class ComponentOverflowError(ChannelError):
    """Component count grew past the configured cap."""


class OverlapTableError(ChannelError):
    """Overlap table admits no valid state (Gram not PSD)."""


Flag = tuple
Pure = tuple


@dataclass(frozen=True, eq=False)
class CqState:
    """Mixture sum_i weights[i] * |flag_i>< flag_i| (x) |pure_i><pure_i|."""

    weights: np.ndarray
    flags: tuple[Flag, ...]
    pures: tuple[Pure, ...]

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64).ravel()
        if not (len(self.flags) == len(self.pures) == w.size):
            raise ChannelError("component lists must have equal length")
        if w.size == 0:
            raise ChannelError("state needs at least one component")
        if np.any(w < 0.0):
            raise ChannelError("negative component weight")
        total = float(np.sum(w))
        if abs(total - 1.0) > max(1e-12, w.size * 1e-16):
            raise ChannelError(f"component weights sum to {total!r}, expected 1")
        lengths = {len(p) for p in self.pures}
        if len(lengths) > 1:
            raise ChannelError("all pure labels in a state must have equal length")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def n_components(self) -> int:
        return self.weights.size


def cq_state(components: dict[tuple[Flag, Pure], float]) -> CqState:
    """Build a state from a (flag, pure) -> weight map: merges duplicates,
    drops zero-weight entries, sorts deterministically."""
    items = sorted((k, v) for k, v in components.items() if v > 0.0)
    if not items:
        raise ChannelError("state needs at least one component")
    if len(items) > COMPONENT_CAP:
        raise ComponentOverflowError(
            f"state has {len(items)} components (cap {COMPONENT_CAP})")
    flags = tuple(k[0] for k, _ in items)
    pures = tuple(k[1] for k, _ in items)
    weights = np.array([v for _, v in items])
    return CqState(weights, flags, pures)


@dataclass(frozen=True, eq=False)
class CqChannel:
    """Binary-input channel x -> rho_x with a shared base overlap table."""

    rho0: CqState
    rho1: CqState
    overlaps: np.ndarray

    def __post_init__(self):
        ov = np.asarray(self.overlaps, dtype=np.float64)
        if ov.ndim != 2 or ov.shape[0] != ov.shape[1]:
            raise ChannelError("overlap table must be square")
        if ov.size and (np.any(np.abs(np.diag(ov) - 1.0) > 1e-12)
                        or np.any(np.abs(ov - ov.T) > 1e-12)):
            raise ChannelError("overlap table must be symmetric with unit diagonal")
        ov.setflags(write=False)
        object.__setattr__(self, "overlaps", ov)
        for rho in (self.rho0, self.rho1):
            for pure in rho.pures:
                if any(not 0 <= t < max(ov.shape[0], 1) for t in pure):
                    raise ChannelError(f"pure label {pure} outside overlap table")


def _pure_overlaps(pures_a, pures_b, overlaps: np.ndarray) -> np.ndarray:
    """Matrix of <a_i|b_j> = product of base overlaps over tensor factors."""
    na, nb = len(pures_a), len(pures_b)
    if na == 0 or nb == 0:
        return np.zeros((na, nb))
    length = len(pures_a[0])
    if length == 0:
        return np.ones((na, nb))
    ia = np.array(pures_a, dtype=np.intp).reshape(na, length)
    ib = np.array(pures_b, dtype=np.intp).reshape(nb, length)
    g = np.ones((na, nb))
    for l in range(length):
        g *= overlaps[np.ix_(ia[:, l], ib[:, l])]
    return g


def _group_by_flag(state: CqState):
    groups: dict[Flag, list[int]] = {}
    for idx, f in enumerate(state.flags):
        groups.setdefault(f, []).append(idx)
    return groups


def fidelity(a: CqState, b: CqState, overlaps: np.ndarray,
             validate: bool = True) -> float:
    """Uhlmann fidelity ||sqrt(rho_a) sqrt(rho_b)||_Tr.

    Components with different flags are orthogonal, so the value decomposes
    as a sum over shared flags. Within a flag sector the trace norm of
    sqrt(rho_a) sqrt(rho_b) equals the nuclear norm of the weighted cross
    overlap matrix sqrt(w_i w'_j) <psi_i|psi'_j>, evaluated directly in the
    component span. ``validate`` additionally checks positive
    semidefiniteness of each sector's joint Gram matrix and raises
    OverlapTableError below the -1e-9 eigenvalue tolerance.
    """
    ga = _group_by_flag(a)
    gb = _group_by_flag(b)
    shared = sorted(set(ga) & set(gb))
    # bucket sectors by shape: the index gathers, the Gram products and the
    # SVDs then batch into a few large numpy/LAPACK calls instead of one
    # small call per flag sector
    buckets: dict[tuple[int, int], list] = {}
    for f in shared:
        ia = np.array([a.pures[i] for i in ga[f]], dtype=np.intp)
        ib = np.array([b.pures[i] for i in gb[f]], dtype=np.intp)
        wa = np.sqrt(a.weights[ga[f]])
        wb = np.sqrt(b.weights[gb[f]])
        buckets.setdefault((len(ia), len(ib)), []).append((ia, ib, wa, wb))
    total = 0.0
    for (na, nb), sectors in sorted(buckets.items()):
        ia = np.stack([s[0].reshape(na, -1) for s in sectors])  # (S, na, L)
        ib = np.stack([s[1].reshape(nb, -1) for s in sectors])
        wa = np.stack([s[2] for s in sectors])
        wb = np.stack([s[3] for s in sectors])
        cross = wa[:, :, None] * wb[:, None, :]
        for l in range(ia.shape[2]):
            cross = cross * overlaps[ia[:, :, l][:, :, None],
                                     ib[:, :, l][:, None, :]]
        sv = np.linalg.svd(cross, compute_uv=False)
        total += float(np.sum(sv))
        if validate:
            ij = np.concatenate([ia, ib], axis=1)  # (S, na+nb, L)
            joint = np.ones((len(sectors), na + nb, na + nb))
            for l in range(ij.shape[2]):
                joint = joint * overlaps[ij[:, :, l][:, :, None],
                                         ij[:, :, l][:, None, :]]
            ev = np.linalg.eigvalsh(joint)
            worst = float(ev[:, 0].min())
            if worst < GRAM_EIG_TOL:
                raise OverlapTableError(
                    f"Gram matrix has eigenvalue {worst:.3e} < {GRAM_EIG_TOL}")
    return total


def fidelity_gram(a: CqState, b: CqState, overlaps: np.ndarray) -> float:
    """Reference implementation via one joint Gram eigendecomposition.

    Builds the full Gram matrix of all components of both states (zero
    across flags), orthonormalizes the span, embeds both density matrices
    there, and returns the nuclear norm of sqrt(rho_a) sqrt(rho_b).
    Quadratic-size intermediate — intended for validation and small states.
    """
    flags = list(a.flags) + list(b.flags)
    pures = list(a.pures) + list(b.pures)
    n = len(pures)
    g = _pure_overlaps(pures, pures, overlaps)
    same_flag = np.array([[flags[i] == flags[j] for j in range(n)]
                          for i in range(n)])
    g = g * same_flag
    ev, vec = np.linalg.eigh(g)
    if ev[0] < GRAM_EIG_TOL:
        raise OverlapTableError(
            f"Gram matrix has eigenvalue {ev[0]:.3e} < {GRAM_EIG_TOL}")
    ev = np.clip(ev, 0.0, None)
    # columns of coords are the component vectors in an orthonormal basis
    coords = np.sqrt(ev)[:, None] * vec.T
    na = a.n_components

    def density(idx, weights):
        x = coords[:, idx] * np.sqrt(weights)
        return x @ x.T

    rho_a = density(np.arange(na), a.weights)
    rho_b = density(np.arange(na, n), b.weights)

    def sqrtm_psd(rho):
        lam, u = np.linalg.eigh(rho)
        lam = np.clip(lam, 0.0, None)
        return (u * np.sqrt(lam)) @ u.T

    prod = sqrtm_psd(rho_a) @ sqrtm_psd(rho_b)
    return float(np.sum(np.linalg.svd(prod, compute_uv=False)))


def channel_fidelity(ch: CqChannel, validate: bool = True) -> float:
    """F(W) = ||sqrt(rho_0) sqrt(rho_1)||_Tr of the channel's two outputs."""
    return fidelity(ch.rho0, ch.rho1, ch.overlaps, validate=validate)


def embed_classical(w: Dmc) -> CqChannel:
    """Represent a classical channel as a cq channel: one component per
    output symbol, the symbol index as flag, trivial pure factor."""
    w = canonicalize(w)
    empty: Pure = ()
    rho0 = cq_state({((y,), empty): float(p) for y, p in enumerate(w.w0) if p > 0.0})
    rho1 = cq_state({((y,), empty): float(p) for y, p in enumerate(w.w1) if p > 0.0})
    return CqChannel(rho0, rho1, np.zeros((0, 0)))


def _components(state: CqState):
    return list(zip(state.weights.tolist(), state.flags, state.pures))


def cq_split(ch: CqChannel, bit: int) -> CqChannel:
    """Polarization step for cq channels, mirroring the classical transform.

    bit=0: output u1's channel; the unrevealed u2 is summed into the
    mixture. bit=1: output u2's channel; u1 is revealed and joins the
    orthogonal classical flag.
    """
    if bit not in (0, 1):
        raise ChannelError(f"bit must be 0 or 1, got {bit}")
    rhos = (_components(ch.rho0), _components(ch.rho1))
    out = ({}, {})
    for u1 in (0, 1):
        for u2 in (0, 1):
            first = rhos[u1 ^ u2]
            second = rhos[u2]
            if bit == 0:
                acc = out[u1]
                for w, f, l in first:
                    for w2, f2, l2 in second:
                        key = (f + f2, l + l2)
                        acc[key] = acc.get(key, 0.0) + 0.5 * w * w2
            else:
                acc = out[u2]
                for w, f, l in first:
                    for w2, f2, l2 in second:
                        key = ((u1,) + f + f2, l + l2)
                        acc[key] = acc.get(key, 0.0) + 0.5 * w * w2
    return CqChannel(cq_state(out[0]), cq_state(out[1]), ch.overlaps)


def cq_synthesize(ch: CqChannel, bits: str) -> CqChannel:
    from .polarize import check_label

    check_label(bits)
    out = ch
    for c in bits:
        out = cq_split(out, int(c))
    return out
