import numpy as np
import pytest

from conftest import random_channel
from polaralign import (
    ChannelError,
    CqChannel,
    OverlapTableError,
    channel_fidelity,
    cq_split,
    cq_state,
    cq_synthesize,
    embed_classical,
    fidelity,
    fidelity_gram,
    make_bsc,
    scalars,
    split,
    synthesize,
)


def random_overlap_table(rng, n_vecs, dim):
    """Gram table of random unit vectors in R^dim (PSD by construction)."""
    v = rng.normal(size=(dim, n_vecs))
    v /= np.linalg.norm(v, axis=0)
    g = v.T @ v
    np.fill_diagonal(g, 1.0)
    return v, g


def random_state(rng, n_vecs, flags=("a", "b"), max_comp=5, factors=1):
    n = int(rng.integers(1, max_comp + 1))
    comps = {}
    for _ in range(n):
        f = (str(rng.choice(flags)),)
        pure = tuple(int(rng.integers(0, n_vecs)) for _ in range(factors))
        comps[(f, pure)] = comps.get((f, pure), 0.0) + float(rng.random())
    total = sum(comps.values())
    return cq_state({k: v / total for k, v in comps.items()})


def test_cq_state_validation():
    with pytest.raises(ChannelError):
        cq_state({})
    with pytest.raises(ChannelError):
        cq_state({(("a",), (0,)): 0.5, (("b",), (0, 1)): 0.5})  # ragged pures
    # zero-weight entries are dropped
    s = cq_state({(("a",), (0,)): 1.0, (("b",), (1,)): 0.0})
    assert s.n_components == 1


def test_channel_validation():
    bad = np.array([[1.0, 0.5], [0.4, 1.0]])  # not symmetric
    with pytest.raises(ChannelError):
        CqChannel(cq_state({((), (0,)): 1.0}), cq_state({((), (1,)): 1.0}), bad)
    with pytest.raises(ChannelError):
        CqChannel(cq_state({((), (7,)): 1.0}), cq_state({((), (0,)): 1.0}),
                  np.eye(2))


def test_fidelity_self_is_one():
    rng = np.random.default_rng(0)
    for _ in range(10):
        _, g = random_overlap_table(rng, 6, 4)
        a = random_state(rng, 6)
        assert fidelity(a, a, g) == pytest.approx(1.0, abs=1e-10)


def test_fidelity_orthogonal_flags_is_zero():
    g = np.eye(2)
    a = cq_state({(("x",), (0,)): 1.0})
    b = cq_state({(("y",), (0,)): 1.0})
    assert fidelity(a, b, g) == 0.0


def test_fidelity_matches_gram_reference():
    rng = np.random.default_rng(42)
    for _ in range(50):
        _, g = random_overlap_table(rng, 8, int(rng.integers(2, 6)))
        a = random_state(rng, 8, factors=2)
        b = random_state(rng, 8, factors=2)
        f_fast = fidelity(a, b, g)
        f_ref = fidelity_gram(a, b, g)
        # the reference loses digits on rank-deficient sectors (square
        # roots of clipped noise eigenvalues), hence the loose tolerance;
        # test_fidelity_dense_oracle pins the fast path at 1e-9
        assert f_fast == pytest.approx(f_ref, abs=2e-8)


def test_fidelity_dense_oracle():
    # explicit ambient-space density matrices as an independent check
    rng = np.random.default_rng(11)
    for _ in range(30):
        dim = int(rng.integers(2, 6))
        v, g = random_overlap_table(rng, 6, dim)
        flags = ("a", "b")
        a = random_state(rng, 6, flags=flags)
        b = random_state(rng, 6, flags=flags)

        def dense(state):
            # flag sectors embedded as orthogonal blocks
            d = dim * len(flags)
            rho = np.zeros((d, d))
            for w, f, p in zip(state.weights, state.flags, state.pures):
                k = flags.index(f[0])
                vec = np.zeros(d)
                vec[k * dim:(k + 1) * dim] = v[:, p[0]]
                rho += w * np.outer(vec, vec)
            return rho

        def sqrtm(rho):
            # eigenvalues below 1e-12 are rank-deficiency noise; clipping
            # them at zero instead would inject sqrt(1e-16) ~ 1e-8 errors
            lam, u = np.linalg.eigh(rho)
            lam = np.where(lam < 1e-12, 0.0, lam)
            return (u * np.sqrt(lam)) @ u.T

        prod = sqrtm(dense(a)) @ sqrtm(dense(b))
        oracle = np.sum(np.linalg.svd(prod, compute_uv=False))
        assert fidelity(a, b, g) == pytest.approx(oracle, abs=1e-9)


def test_bad_gram_raises():
    g = np.array([[1.0, 0.9, 0.9], [0.9, 1.0, -0.9], [0.9, -0.9, 1.0]])
    a = cq_state({(("f",), (0,)): 0.5, (("f",), (1,)): 0.5})
    b = cq_state({(("f",), (2,)): 1.0})
    with pytest.raises(OverlapTableError):
        fidelity(a, b, g)
    with pytest.raises(OverlapTableError):
        fidelity_gram(a, b, g)


def test_embed_classical_fidelity_is_bhattacharyya():
    rng = np.random.default_rng(5)
    for _ in range(20):
        w = random_channel(rng, max_symbols=10)
        assert channel_fidelity(embed_classical(w)) == pytest.approx(
            scalars(w).z, abs=1e-12)


def test_cq_split_matches_classical_split():
    rng = np.random.default_rng(9)
    for _ in range(10):
        w = random_channel(rng, max_symbols=5)
        ch = embed_classical(w)
        for bits in ("0", "1", "01", "10"):
            f = channel_fidelity(cq_synthesize(ch, bits))
            z = scalars(synthesize(w, bits)).z
            assert f == pytest.approx(z, abs=1e-11)


def test_cq_split_plus_squares_fidelity():
    ch = embed_classical(make_bsc(0.2))
    f = channel_fidelity(ch)
    assert channel_fidelity(cq_split(ch, 1)) == pytest.approx(f * f, abs=1e-12)


def test_cq_split_bad_bit():
    ch = embed_classical(make_bsc(0.2))
    with pytest.raises(ChannelError):
        cq_split(ch, 2)
