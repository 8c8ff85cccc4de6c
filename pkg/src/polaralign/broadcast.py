"""Two-receiver broadcast setup with superposition coding.

Receiver 1 sees a BSC(alpha), receiver 2 a BEC(beta); the auxiliary
variable U reaches the input X through a symmetric flip BSC(gamma). The
achievable corner rates and the alignment classification of the two
effective channels U -> Y1 and U -> Y2 are computed here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alignment import Outcome, Verdict, classify
from .channels import (
    ChannelError,
    Dmc,
    Preprocessor,
    compose,
    make_bec,
    make_bsc,
    scalars,
)


@dataclass(frozen=True)
class RatePair:
    r1: float
    r2: float

    def __post_init__(self):
        if self.r1 < 0.0 or self.r2 < 0.0:
            raise ChannelError(f"negative rate: ({self.r1}, {self.r2})")


def bc_channels(alpha: float, beta: float, gamma: float) -> tuple[Dmc, Dmc]:
    """Effective channels from the auxiliary input: (U -> Y1, U -> Y2)."""
    pre = Preprocessor.symmetric(gamma)
    return compose(make_bsc(alpha), pre), compose(make_bec(beta), pre)


def superposition_rates(alpha: float, beta: float, gamma: float) -> RatePair:
    """Corner rates with uniform U: r1 = I(X;Y1) - I(U;Y1) (receiver 1's
    private layer) and r2 = I(U;Y2) (the cloud layer for receiver 2)."""
    wbar, vbar = bc_channels(alpha, beta, gamma)
    r1 = scalars(make_bsc(alpha)).i - scalars(wbar).i
    r2 = scalars(vbar).i
    return RatePair(max(r1, 0.0), max(r2, 0.0))


def bc_alignment(alpha: float, beta: float, gamma: float,
                 k_ub: int = 2, k_lb: int = 4) -> Verdict:
    """Alignment verdict for the two effective channels.

    When beta <= 4 alpha (1 - alpha) the erasure side is less noisy than
    the flip side for every preprocessing, which gives essential alignment
    up to o(n) exceptions; that case is tagged separately because it is a
    weaker guarantee than the branchwise certificate.
    """
    wbar, vbar = bc_channels(alpha, beta, gamma)
    if beta <= 4.0 * alpha * (1.0 - alpha):
        return Verdict(outcome=Outcome.ALIGNED_LESS_NOISY, lb_fired=False,
                       lb_level=None, lb_witness=None, ub_holds=False,
                       ub_level=k_ub, ub_margins={})
    return classify(wbar, vbar, k_lb=k_lb, k_ub=k_ub)
