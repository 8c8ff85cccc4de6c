"""Quantum counterpart of a classical binary-input channel.

The counterpart of W maps input x to a flagged mixture: for each output
symbol y with average mass q_y = (w0(y) + w1(y))/2 > 0 it emits, with
weight q_y and classical flag y, a pure state psi_{x,y} whose cross
overlap is <psi_{0,y}|psi_{1,y}> = (w0(y) - w1(y)) / (w0(y) + w1(y)).
Its fidelity therefore equals the total-variation distance between W's
rows — the complementary quantity to W's own Bhattacharyya parameter.
"""

from __future__ import annotations

import numpy as np

from .channels import ChannelError, Dmc, canonicalize, make_bec
from .cq import CqChannel, cq_state, embed_classical


def counterpart(w: Dmc) -> CqChannel:
    """Generic construction from the canonicalized channel."""
    w = canonicalize(w)
    m = w.n_symbols
    q = 0.5 * (w.w0 + w.w1)
    # two base vectors per symbol; only the intra-symbol overlap is nonzero
    table = np.eye(2 * m)
    comps0 = {}
    comps1 = {}
    for y in range(m):
        c = (w.w0[y] - w.w1[y]) / (w.w0[y] + w.w1[y])
        table[2 * y, 2 * y + 1] = table[2 * y + 1, 2 * y] = c
        comps0[((y,), (2 * y,))] = float(q[y])
        comps1[((y,), (2 * y + 1,))] = float(q[y])
    return CqChannel(cq_state(comps0), cq_state(comps1), table)


def counterpart_closed_form(kind: str, *, alpha: float | None = None,
                            beta: float | None = None) -> CqChannel:
    """Explicit small-component counterparts for the three special families.

    kind='bec': classical erasure channel with the complementary erasure
    probability. kind='bsc': a single pure pair with overlap 1 - 2 alpha.
    kind='bec_bsc': the cascade erasure-then-flip channel; an erased slot
    keeps only the pure pair with overlap 1 - 2 alpha, an unerased slot
    additionally carries an orthogonal data factor.
    """
    kind = kind.lower()
    if kind == "bec":
        if beta is None or not 0.0 <= beta <= 1.0:
            raise ChannelError(f"beta out of range: {beta}")
        return embed_classical(make_bec(1.0 - beta))
    if alpha is None or not 0.0 <= alpha <= 0.5:
        raise ChannelError(f"alpha out of range: {alpha}")
    c = 1.0 - 2.0 * alpha
    if kind == "bsc":
        table = np.array([[1.0, c], [c, 1.0]])
        rho0 = cq_state({((), (0,)): 1.0})
        rho1 = cq_state({((), (1,)): 1.0})
        return CqChannel(rho0, rho1, table)
    if kind == "bec_bsc":
        if beta is None or not 0.0 <= beta <= 1.0:
            raise ChannelError(f"beta out of range: {beta}")
        # ids: 0,1 = theta_x pair (overlap c); 2,3 = orthogonal data pair;
        # 4 = unit filler so every pure label has two factors
        table = np.eye(5)
        table[0, 1] = table[1, 0] = c
        comps0 = {(("e",), (0, 4)): 1.0 - beta, (("d",), (0, 2)): beta}
        comps1 = {(("e",), (1, 4)): 1.0 - beta, (("d",), (1, 3)): beta}
        if beta == 0.0:
            comps0 = {(("e",), (0, 4)): 1.0}
            comps1 = {(("e",), (1, 4)): 1.0}
        elif beta == 1.0:
            comps0 = {(("d",), (0, 2)): 1.0}
            comps1 = {(("d",), (1, 3)): 1.0}
        return CqChannel(cq_state(comps0), cq_state(comps1), table)
    raise ChannelError(f"unknown counterpart kind: {kind!r}")
