import pytest

from polaralign import (
    ChannelError,
    Outcome,
    RatePair,
    bc_alignment,
    bc_channels,
    scalars,
    superposition_rates,
)


def test_bc_channels_are_degraded_versions():
    wbar, vbar = bc_channels(0.1, 0.3, 0.2)
    # preprocessing can only hurt
    from polaralign import make_bec, make_bsc
    assert scalars(wbar).i <= scalars(make_bsc(0.1)).i + 1e-12
    assert scalars(vbar).i <= scalars(make_bec(0.3)).i + 1e-12


def test_gamma_zero_recovers_base_channels():
    from polaralign import make_bec, make_bsc
    wbar, vbar = bc_channels(0.1, 0.3, 0.0)
    assert scalars(wbar).i == pytest.approx(scalars(make_bsc(0.1)).i, abs=1e-12)
    assert scalars(vbar).i == pytest.approx(scalars(make_bec(0.3)).i, abs=1e-12)


def test_superposition_rates_split_capacity():
    alpha, beta, gamma = 0.1, 0.3, 0.15
    from polaralign import make_bsc
    rp = superposition_rates(alpha, beta, gamma)
    assert rp.r1 >= 0.0 and rp.r2 >= 0.0
    # private rate + cloud rate through receiver 1 never beats capacity
    wbar, _ = bc_channels(alpha, beta, gamma)
    assert rp.r1 + scalars(wbar).i <= scalars(make_bsc(alpha)).i + 1e-12


def test_rate_pair_rejects_negative():
    with pytest.raises(ChannelError):
        RatePair(-0.1, 0.2)


def test_alignment_verdicts_at_figure_points():
    assert bc_alignment(0.1, 0.70, 0.1).outcome is Outcome.ALIGNED
    assert bc_alignment(0.1, 0.40, 0.1).outcome is Outcome.NOT_ALIGNED


def test_less_noisy_shortcut():
    v = bc_alignment(0.2, 0.5, 0.1)  # beta <= 4a(1-a) = 0.64
    assert v.outcome is Outcome.ALIGNED_LESS_NOISY
    assert v.ub_margins == {}
