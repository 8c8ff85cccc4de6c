import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_channel
from polaralign import (
    ChannelError,
    Dmc,
    Ordering,
    Preprocessor,
    PriorDmc,
    binary_convolve,
    binary_entropy,
    bsc_bec_ordering,
    canonicalize,
    compose,
    generalized_bhatt,
    make_bec,
    make_bsc,
    make_channel,
    scalars,
)

probs = st.floats(0.0, 1.0, allow_nan=False)


def test_dmc_validation():
    with pytest.raises(ChannelError):
        Dmc(np.array([0.6, 0.3]), np.array([0.5, 0.5]))  # w0 sums to 0.9
    with pytest.raises(ChannelError):
        Dmc(np.array([1.1, -0.1]), np.array([0.5, 0.5]))
    with pytest.raises(ChannelError):
        Dmc(np.array([1.0]), np.array([0.5, 0.5]))
    with pytest.raises(ChannelError):
        Dmc(np.array([]), np.array([]))


def test_dmc_rows_are_read_only():
    w = make_bsc(0.1)
    with pytest.raises(ValueError):
        w.w0[0] = 0.3


def test_bec_scalars_closed_form():
    s = scalars(make_bec(0.3))
    assert s.z == pytest.approx(0.3, abs=1e-15)
    assert s.i == pytest.approx(0.7, abs=1e-12)
    assert s.delta == pytest.approx(0.7, abs=1e-15)
    assert s.h_x_given_y == pytest.approx(0.3, abs=1e-12)


def test_bsc_scalars_closed_form():
    a = 0.11
    s = scalars(make_bsc(a))
    assert s.z == pytest.approx(2.0 * np.sqrt(a * (1 - a)), abs=1e-14)
    assert s.i == pytest.approx(1.0 - binary_entropy(a), abs=1e-12)
    assert s.delta == pytest.approx(1.0 - 2.0 * a, abs=1e-14)


def test_make_channel_dispatch():
    assert make_channel("bsc", 0.2).n_symbols == 2
    assert make_channel("BEC", 0.2).n_symbols == 3
    with pytest.raises(ChannelError):
        make_channel("awgn", 0.2)


def test_canonicalize_merges_equal_ratios():
    # two symbols with identical likelihood ratio collapse into one
    w = Dmc(np.array([0.2, 0.2, 0.6]), np.array([0.1, 0.1, 0.8]))
    c = canonicalize(w)
    assert c.n_symbols == 2
    assert scalars(c).z == pytest.approx(scalars(w).z, abs=1e-14)


def test_canonicalize_drops_zero_mass_and_sorts():
    w = Dmc(np.array([0.0, 0.5, 0.5, 0.0]), np.array([0.0, 0.2, 0.3, 0.5]))
    c = canonicalize(w)
    # zero-mass symbol gone; the w0=0 class sorts first (ratio -> 0)
    assert c.n_symbols == 3
    assert c.w0[0] == 0.0 and c.w1[0] == 0.5
    ratios = c.w0[1:] / c.w1[1:]
    assert np.all(np.diff(ratios) > 0)


def test_canonicalize_idempotent():
    rng = np.random.default_rng(7)
    for _ in range(20):
        c = random_channel(rng)
        c2 = canonicalize(c)
        assert c.n_symbols == c2.n_symbols
        np.testing.assert_allclose(c.w0, c2.w0, atol=1e-15)
        np.testing.assert_allclose(c.w1, c2.w1, atol=1e-15)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 24), st.integers(0, 2**31 - 1))
def test_scalar_ranges_and_bounds(m, seed):
    rng = np.random.default_rng(seed)
    w = canonicalize(Dmc(rng.dirichlet(np.ones(m)), rng.dirichlet(np.ones(m))))
    s = scalars(w)
    assert 0.0 <= s.z <= 1.0 + 1e-12
    assert 0.0 <= s.i <= 1.0 + 1e-12
    assert 0.0 <= s.delta <= 1.0 + 1e-12
    # canonicalization preserves every scalar
    s2 = scalars(canonicalize(w))
    assert s2.z == pytest.approx(s.z, abs=1e-12)
    assert s2.i == pytest.approx(s.i, abs=1e-12)
    assert s2.delta == pytest.approx(s.delta, abs=1e-12)


def test_compose_symmetric_flip():
    # BSC(a) behind a symmetric flip(g) is BSC(a*g)
    a, g = 0.12, 0.3
    c = compose(make_bsc(a), Preprocessor.symmetric(g))
    expect = binary_convolve(a, g)
    assert scalars(c).delta == pytest.approx(abs(1 - 2 * expect), abs=1e-14)


def test_compose_identity():
    w = make_bec(0.4)
    c = compose(w, Preprocessor.identity())
    np.testing.assert_allclose(np.sort(c.w0), np.sort(w.w0), atol=1e-15)


def test_preprocessor_reverse_conditionals_roundtrip():
    # forward rows + marginal reproduce the reverse conditionals via Bayes
    pre = Preprocessor.from_reverse_conditionals(0.8, 0.1, 0.5)
    m = pre.matrix
    r = 0.5
    px0 = r * m[0, 0] + (1 - r) * m[1, 0]
    u0_given_x0 = r * m[0, 0] / px0
    assert u0_given_x0 == pytest.approx(0.8, abs=1e-12)


def test_preprocessor_reverse_conditionals_invalid():
    with pytest.raises(ChannelError):
        # U independent of X but marginal inconsistent
        Preprocessor.from_reverse_conditionals(0.3, 0.3, 0.9)
    with pytest.raises(ChannelError):
        Preprocessor.from_reverse_conditionals(1.2, 0.0, 0.5)


def test_generalized_bhatt_uniform_matches_z():
    w = make_bsc(0.2)
    assert generalized_bhatt(PriorDmc(0.5, w)) == pytest.approx(
        scalars(w).z, abs=1e-14)
    # degenerate prior kills the value
    assert generalized_bhatt(PriorDmc(0.0, w)) == 0.0


@given(st.floats(0.001, 0.499), st.floats(0.001, 0.999))
@settings(max_examples=80, deadline=None)
def test_bsc_bec_ordering_thresholds(alpha, beta):
    o = bsc_bec_ordering(alpha, beta)
    if beta <= 2 * alpha:
        assert o is Ordering.DEGRADED
    elif beta <= 4 * alpha * (1 - alpha):
        assert o is Ordering.LESS_NOISY
    elif beta <= binary_entropy(alpha):
        assert o is Ordering.MORE_CAPABLE
    else:
        assert o is Ordering.INCOMPARABLE


def test_binary_entropy_edges():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.5) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(ChannelError):
        binary_entropy(1.5)
